// Acceptance gate: one pass/fail line per criterion, exit 0 only when every
// criterion holds inside its pinned wall-clock budget (a zero budget means the
// criterion is judged on correctness alone).

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "cordial/construct.hpp"
#include "cordial/sweep.hpp"
#include "test_oracle_support.hpp"

using cordial::ConstructStatus;
using cordial::GraphKind;
using cordial::GraphLabeling;
using cordial::GroupElement;
using cordial::GroupSpec;
using cordial::SearchVerdict;

namespace {

struct Criterion {
    std::string name;
    double budget_seconds;
    std::function<bool(std::string&)> body;
};

bool golden_table(std::string& detail) {
    const auto& table = cordial::builtin_labelings();
    if (table.size() != 16) {
        detail = "expected 16 builtin labelings, found " + std::to_string(table.size());
        return false;
    }
    for (const auto& [name, lab] : table) {
        if (!cordial::check_cordial(lab).cordial) {
            detail = "builtin labeling " + name + " failed verification";
            return false;
        }
    }
    if (cordial::puff_cycle(cordial::hardcoded_labeling("seed-c3"), 3) !=
        cordial::hardcoded_labeling("puffed-c9")) {
        detail = "puffing the three-cycle did not reproduce the nine-cycle entry";
        return false;
    }
    return true;
}

bool exhaustive_impossibility(std::string& detail) {
    struct Case {
        std::vector<int> factors;
        std::size_t m;
    };
    for (const Case& c :
         {Case{{2, 2}, 4}, Case{{2, 2}, 5}, Case{{2, 2, 2}, 8}, Case{{2, 2, 2}, 9}}) {
        const auto out = cordial::search_path(GroupSpec(c.factors), c.m);
        if (out.verdict != SearchVerdict::exhausted) {
            detail = "search over " + GroupSpec(c.factors).to_string() + " at length " +
                     std::to_string(c.m) + " ended " +
                     std::string(cordial::to_string(out.verdict)) + " after " +
                     std::to_string(out.nodes) + " nodes";
            return false;
        }
    }
    return true;
}

bool xor_telescoping(std::string& detail) {
    const auto exact = cordial::verify_exp2_argument(2);
    if (!exact.exhaustive || exact.permutations_checked != 24 || !exact.all_hold()) {
        detail = "rank-2 exhaustive pass failed";
        return false;
    }
    for (unsigned m : {4u, 5u}) {
        const auto rep = cordial::verify_exp2_argument(m, 100000);
        if (rep.permutations_checked < 100000 || !rep.all_hold()) {
            detail = "rank-" + std::to_string(m) + " sampled pass failed (" +
                     std::to_string(rep.edge_sum_mismatches) + " edge-sum mismatches, " +
                     std::to_string(rep.perfect_edge_covers) + " perfect covers)";
            return false;
        }
    }
    return true;
}

bool odd_order_pipeline(std::string& detail) {
    for (const std::vector<int>& factors :
         {std::vector<int>{3}, {5}, {7}, {9}, {3, 3}, {11}, {13}, {15}, {3, 5}, {17}, {19},
          {21}, {3, 7}, {23}, {25}, {5, 5}, {27}, {3, 9}, {3, 3, 3}}) {
        const GroupSpec g(factors);
        const std::size_t n = static_cast<std::size_t>(g.order());
        if (!cordial::check_cordial(cordial::odd_cycle(g)).cordial) {
            detail = "odd cycle over " + g.to_string() + " is not cordial";
            return false;
        }
        for (std::size_t m = 1; m <= 3 * n; ++m) {
            const auto res = cordial::path_for_length(g, m);
            if (res.status != ConstructStatus::found ||
                !cordial::check_cordial(*res.labeling).cordial ||
                res.labeling->length() != m) {
                detail = "path of length " + std::to_string(m) + " over " + g.to_string() +
                         " did not come out cordial";
                return false;
            }
        }
    }
    return true;
}

bool doubled_paths(std::string& detail) {
    if (!(cordial::double_path(4) == cordial::hardcoded_labeling("doubled-p16"))) {
        detail = "doubled path for k=4 differs from its table entry";
        return false;
    }
    for (int k : {4, 6, 8, 10, 12}) {
        const GraphLabeling d = cordial::double_path(k);
        if (!cordial::check_cordial(d).cordial) {
            detail = "doubled path for k=" + std::to_string(k) + " is not cordial";
            return false;
        }
        const auto ec = cordial::count_partition(d.group, cordial::induced_edge_labels(d));
        for (const GroupElement& a : d.group.enumerate()) {
            const std::uint32_t want =
                a.residues[0] == 0 && a.residues[1] == k - 1 ? 1 : 2;
            if (ec.counts[static_cast<std::size_t>(d.group.index_of(a))] != want) {
                detail = "doubled path for k=" + std::to_string(k) +
                         " has the wrong multiplicity on edge label " +
                         cordial::format_element(d.group, a);
                return false;
            }
        }
    }
    return true;
}

bool order_sweep(std::string& detail) {
    const auto rep = cordial::sweep_conjecture();
    for (const auto& row : rep.rows) {
        const std::string want = row.classification == "generic" ? "PASS"
                                 : row.order <= 8                ? "EXHAUSTED"
                                                                 : "SKIP";
        if (row.verdict != want) {
            detail = "group " + row.group.to_string() + " reported " + row.verdict +
                     " instead of " + want + " (" + row.note + ")";
            return false;
        }
    }
    if (!rep.all_expected) {
        detail = "sweep flagged at least one unexpected row";
        return false;
    }
    detail = std::to_string(rep.rows.size()) + " groups";
    return true;
}

bool length_schedule(std::string& detail) {
    for (std::size_t m = 1; m <= 100; ++m) {
        const auto res = cordial::m_weak_path(m);
        if (m == 8 || m == 9) {
            if (res.status != ConstructStatus::impossible) {
                detail = "length " + std::to_string(m) + " should be impossible, got " +
                         std::string(cordial::to_string(res.status));
                return false;
            }
            continue;
        }
        if (res.status != ConstructStatus::found || res.labeling->length() != m ||
            !cordial::check_cordial(*res.labeling).cordial) {
            detail = "length " + std::to_string(m) + " did not produce a cordial path";
            return false;
        }
    }
    return true;
}

bool oracle_properties(std::string& detail) {
    if (cordial::count_labelings(GroupSpec({2}), GraphKind::path, 3) != 4) {
        detail = "count of cordial paths on 3 vertices over Z_2 is not 4";
        return false;
    }

    for (const std::vector<int>& factors : {std::vector<int>{2}, {3}, {4}, {2, 2}}) {
        const GroupSpec g(factors);
        for (std::size_t m = 1; m <= 6; ++m) {
            for (const bool cycle : {false, true}) {
                if (cycle && m < 3) continue;
                const auto out = cycle ? cordial::search_cycle(g, m) : cordial::search_path(g, m);
                const bool expect = oracle::brute_exists(factors, m, cycle);
                if ((out.verdict == SearchVerdict::found) != expect) {
                    detail = "search and reference disagree over " + g.to_string() +
                             (cycle ? " cycle " : " path ") + std::to_string(m);
                    return false;
                }
            }
        }
    }

    std::mt19937 rng(424242);
    for (const std::vector<int>& factors :
         {std::vector<int>{2}, {3}, {4}, {2, 2}, {5}, {6}, {2, 3}, {7}, {8}, {2, 4}, {2, 2, 2}}) {
        const GroupSpec g(factors);
        const auto elems = g.enumerate();
        std::uniform_int_distribution<std::size_t> pick_elem(0, elems.size() - 1);
        std::uniform_int_distribution<std::size_t> pick_len(1, 12);
        for (int trial = 0; trial < 1000; ++trial) {
            const std::size_t len = pick_len(rng);
            const GraphKind kind =
                len >= 3 && rng() % 2 == 0 ? GraphKind::cycle : GraphKind::path;
            std::vector<GroupElement> labels;
            for (std::size_t i = 0; i < len; ++i) labels.push_back(elems[pick_elem(rng)]);
            const GraphLabeling lab(g, kind, labels);
            const bool verdict = cordial::check_cordial(lab).cordial;
            if (cordial::check_cordial(cordial::shift(lab, elems[pick_elem(rng)])).cordial !=
                    verdict ||
                cordial::check_cordial(cordial::reverse(lab)).cordial != verdict) {
                detail = "shift or reverse changed a verdict over " + g.to_string();
                return false;
            }
        }
    }

    for (const std::vector<int>& factors :
         {std::vector<int>{2}, {3}, {4}, {5}, {2, 3}, {7}, {2, 4}, {3, 3}}) {
        const GroupSpec g(factors);
        GraphLabeling cur(g, GraphKind::path, {g.identity()});
        const std::size_t goal = 2 * static_cast<std::size_t>(g.order());
        while (cur.length() < goal) {
            try {
                cur = cordial::extend_by_one(cur);
            } catch (const cordial::ExtensionError&) {
                break;
            }
            if (!cordial::check_cordial(cur).cordial) {
                detail = "an extension over " + g.to_string() + " came out non-cordial";
                return false;
            }
        }
    }

    for (const std::vector<int>& factors :
         {std::vector<int>{3}, {5}, {7}, {9}, {3, 3}, {2, 4}, {2, 6}, {2, 8}, {4, 4}, {3, 6},
          {2, 10}}) {
        const GroupSpec g(factors);
        const auto base = cordial::base_path(g);
        if (base.status != ConstructStatus::found) {
            detail = "no base path over " + g.to_string();
            return false;
        }
        const std::size_t n = static_cast<std::size_t>(g.order());
        for (std::size_t m : {n + 1, 2 * n, 2 * n + 3, 3 * n}) {
            const GraphLabeling out = cordial::path_from_base(*base.labeling, m);
            if (!cordial::check_cordial(out).cordial || out.length() != m) {
                detail = "gluing to length " + std::to_string(m) + " over " + g.to_string() +
                         " failed";
                return false;
            }
        }
    }
    return true;
}

}  // namespace

int main() {
    const std::vector<Criterion> criteria = {
        {"golden labeling table verifies exactly", 1.0, golden_table},
        {"exhaustive impossibility at the four settled lengths", 300.0,
         exhaustive_impossibility},
        {"xor-telescoping argument, exhaustive and sampled", 0.0, xor_telescoping},
        {"odd-order pipeline covers every length up to 3n", 30.0, odd_order_pipeline},
        {"doubled paths carry one light edge label", 1.0, doubled_paths},
        {"order sweep to 23 lands every expected verdict", 600.0, order_sweep},
        {"length schedule over Z_2^3 settles 1 through 100", 5.0, length_schedule},
        {"oracle counts and invariance properties hold", 120.0, oracle_properties},
    };

    int failures = 0;
    for (const Criterion& c : criteria) {
        std::string detail;
        const auto t0 = std::chrono::steady_clock::now();
        bool ok = false;
        try {
            ok = c.body(detail);
        } catch (const std::exception& e) {
            detail = std::string("exception: ") + e.what();
        }
        const double secs =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        std::ostringstream line;
        if (ok && c.budget_seconds > 0.0 && secs > c.budget_seconds) {
            ok = false;
            detail = "over budget";
        }
        line << (ok ? "[PASS] " : "[FAIL] ") << c.name << " (" << std::fixed;
        line.precision(2);
        line << secs << "s";
        if (c.budget_seconds > 0.0) line << ", budget " << c.budget_seconds << "s";
        line << ")";
        if (!detail.empty()) line << " " << (ok ? "" : "-- ") << detail;
        std::printf("%s\n", line.str().c_str());
        std::fflush(stdout);
        if (!ok) ++failures;
    }
    return failures == 0 ? 0 : 1;
}
