// Command line front end: check, construct, search, count, sweep.
//
// Exit codes: 0 found/cordial/all-expected, 1 proven negative, 2 bad input,
// 3 inconclusive (search budget ran out), 4 internal error.

#include <cstdint>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "cordial/construct.hpp"
#include "cordial/sweep.hpp"

using nlohmann::json;

namespace {

struct GlobalOpts {
    bool json = false;
    unsigned threads = 1;
    std::uint64_t node_budget = 0;
    std::uint64_t oracle_bound = 100000000;
    std::uint64_t seed = 12345;
};

cordial::GraphKind parse_kind(const std::string& s) {
    if (s == "path") return cordial::GraphKind::path;
    if (s == "cycle") return cordial::GraphKind::cycle;
    throw std::invalid_argument("kind must be 'path' or 'cycle', got '" + s + "'");
}

cordial::SearchOptions search_options(const GlobalOpts& g) {
    cordial::SearchOptions opts;
    opts.node_budget = g.node_budget;
    opts.thread_hint = g.threads;
    return opts;
}

json counts_json(const cordial::GroupSpec& g, const std::vector<std::uint32_t>& counts) {
    json obj = json::object();
    const auto elems = g.enumerate();
    for (std::size_t i = 0; i < elems.size(); ++i)
        obj[cordial::format_element(g, elems[i])] = counts[i];
    return obj;
}

std::string partition_text(const std::vector<std::uint32_t>& partition) {
    std::string out = "[";
    for (std::size_t i = 0; i < partition.size(); ++i) {
        if (i) out += ' ';
        out += std::to_string(partition[i]);
    }
    out += ']';
    return out;
}

int run_check(const GlobalOpts& g, const std::string& file, const std::string& group_text,
              const std::string& labels_text, const std::string& kind_text) {
    std::optional<cordial::GraphLabeling> lab;
    if (!file.empty()) {
        std::ifstream in(file);
        if (!in) {
            std::cerr << "input error: cannot read file '" << file << "'\n";
            return 2;
        }
        std::stringstream buf;
        buf << in.rdbuf();
        lab = cordial::parse_labeling(buf.str());
    } else {
        if (group_text.empty() || labels_text.empty()) {
            std::cerr << "input error: check needs --file, or --group together with --labels\n";
            return 2;
        }
        const cordial::GroupSpec grp = cordial::GroupSpec::parse(group_text);
        lab = cordial::GraphLabeling(grp, parse_kind(kind_text),
                                     cordial::parse_labels(grp, labels_text));
    }

    const cordial::CordialityReport r = cordial::check_cordial(*lab);
    if (g.json) {
        json j{{"group", lab->group.to_string()},
               {"kind", std::string(cordial::to_string(lab->kind))},
               {"length", lab->length()},
               {"labels", cordial::format_labels(lab->group, lab->labels)},
               {"vertex_counts", counts_json(lab->group, r.vertex_partition.counts)},
               {"edge_counts", counts_json(lab->group, r.edge_partition.counts)},
               {"vertex_partition", r.vertex_partition.partition},
               {"edge_partition", r.edge_partition.partition},
               {"vertex_ok", r.vertex_ok},
               {"edge_ok", r.edge_ok},
               {"cordial", r.cordial}};
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << cordial::to_text(*lab);
        std::cout << "vertex partition: " << partition_text(r.vertex_partition.partition)
                  << (r.vertex_ok ? " ok" : " uneven") << "\n";
        std::cout << "edge partition: " << partition_text(r.edge_partition.partition)
                  << (r.edge_ok ? " ok" : " uneven") << "\n";
        std::cout << "cordial: " << (r.cordial ? "yes" : "no") << "\n";
    }
    return r.cordial ? 0 : 1;
}

int run_construct(const GlobalOpts& g, const std::string& group_text, std::size_t length,
                  const std::string& kind_text) {
    const cordial::GroupSpec grp = cordial::GroupSpec::parse(group_text);
    const cordial::GraphKind kind = parse_kind(kind_text);
    const cordial::SearchOptions sopts = search_options(g);

    cordial::PathResult res;
    if (kind == cordial::GraphKind::path) {
        if (grp == cordial::GroupSpec({2, 2, 2})) {
            res = cordial::m_weak_path(length, sopts);
        } else {
            res = cordial::path_for_length(grp, length, sopts);
            if (res.status == cordial::ConstructStatus::base_exhausted) {
                // No full-length base to build from; search the requested
                // length directly instead.
                const cordial::SearchOutcome s = cordial::search_path(grp, length, sopts);
                res.search_nodes += s.nodes;
                res.search_seconds += s.seconds;
                res.trace.push_back("search");
                if (s.verdict == cordial::SearchVerdict::found) {
                    res.status = cordial::ConstructStatus::found;
                    res.labeling = s.witness;
                } else if (s.verdict == cordial::SearchVerdict::exhausted) {
                    res.status = cordial::ConstructStatus::impossible;
                } else {
                    res.status = cordial::ConstructStatus::inconclusive;
                }
            }
        }
    } else {
        if (grp.order() % 2 == 1 && length == grp.order()) {
            res.status = cordial::ConstructStatus::found;
            res.labeling = cordial::odd_cycle(grp);
            res.trace = {"odd-cycle"};
        } else {
            const cordial::SearchOutcome s = cordial::search_cycle(grp, length, sopts);
            res.search_nodes = s.nodes;
            res.search_seconds = s.seconds;
            res.trace = {"search"};
            if (s.verdict == cordial::SearchVerdict::found) {
                res.status = cordial::ConstructStatus::found;
                res.labeling = s.witness;
            } else if (s.verdict == cordial::SearchVerdict::exhausted) {
                res.status = cordial::ConstructStatus::impossible;
            } else {
                res.status = cordial::ConstructStatus::inconclusive;
            }
        }
    }

    if (g.json) {
        json j{{"group", grp.to_string()},
               {"kind", std::string(cordial::to_string(kind))},
               {"length", length},
               {"status", std::string(cordial::to_string(res.status))},
               {"labels", res.labeling
                              ? json(cordial::format_labels(grp, res.labeling->labels))
                              : json(nullptr)},
               {"trace", res.trace},
               {"search_nodes", res.search_nodes},
               {"search_seconds", res.search_seconds}};
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "status: " << cordial::to_string(res.status) << "\n";
        std::cout << "steps:";
        for (const std::string& t : res.trace) std::cout << ' ' << t;
        std::cout << "\n";
        if (res.search_nodes > 0)
            std::cout << "search nodes: " << res.search_nodes << "\n";
        if (res.labeling) std::cout << cordial::to_text(*res.labeling);
    }

    switch (res.status) {
        case cordial::ConstructStatus::found: return 0;
        case cordial::ConstructStatus::impossible: return 1;
        default: return 3;
    }
}

int run_search(const GlobalOpts& g, const std::string& group_text, std::size_t length,
               const std::string& kind_text, bool canonical, bool no_symmetry) {
    const cordial::GroupSpec grp = cordial::GroupSpec::parse(group_text);
    const cordial::GraphKind kind = parse_kind(kind_text);
    cordial::SearchOptions opts = search_options(g);
    opts.canonical_witness = canonical;
    opts.symmetry_reduction = !no_symmetry;

    const cordial::SearchOutcome s = kind == cordial::GraphKind::path
                                         ? cordial::search_path(grp, length, opts)
                                         : cordial::search_cycle(grp, length, opts);

    if (g.json) {
        json j{{"group", grp.to_string()},
               {"kind", std::string(cordial::to_string(kind))},
               {"length", length},
               {"verdict", std::string(cordial::to_string(s.verdict))},
               {"nodes", s.nodes},
               {"seconds", s.seconds},
               {"symmetry", s.symmetry},
               {"labels", s.witness
                              ? json(cordial::format_labels(grp, s.witness->labels))
                              : json(nullptr)}};
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "verdict: " << cordial::to_string(s.verdict) << "\n";
        std::cout << "symmetry: " << s.symmetry << "\n";
        std::cout << "nodes: " << s.nodes << "\n";
        std::cout << "seconds: " << s.seconds << "\n";
        if (s.witness) std::cout << cordial::to_text(*s.witness);
    }

    switch (s.verdict) {
        case cordial::SearchVerdict::found: return 0;
        case cordial::SearchVerdict::exhausted: return 1;
        default: return 3;
    }
}

int run_count(const GlobalOpts& g, const std::string& group_text, std::size_t length,
              const std::string& kind_text) {
    const cordial::GroupSpec grp = cordial::GroupSpec::parse(group_text);
    const cordial::GraphKind kind = parse_kind(kind_text);
    const std::uint64_t count =
        cordial::count_labelings(grp, kind, length, g.oracle_bound);
    if (g.json) {
        json j{{"group", grp.to_string()},
               {"kind", std::string(cordial::to_string(kind))},
               {"length", length},
               {"count", count}};
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "count: " << count << "\n";
    }
    return 0;
}

int run_sweep(const GlobalOpts& g, std::uint64_t max_order, std::size_t max_multiple,
              std::uint64_t exp2_trials) {
    cordial::SweepOptions opts;
    opts.max_order = max_order;
    opts.max_multiple = max_multiple;
    opts.search = search_options(g);
    opts.exp2_trials = exp2_trials;
    opts.exp2_seed = g.seed;

    const cordial::SweepReport rep = cordial::sweep_conjecture(opts);

    if (g.json) {
        json rows = json::array();
        for (const cordial::SweepRow& r : rep.rows)
            rows.push_back(json{{"group", r.group.to_string()},
                                {"order", r.order},
                                {"classification", r.classification},
                                {"verdict", r.verdict},
                                {"max_path_verified", r.max_path_verified},
                                {"nodes", r.nodes},
                                {"seconds", r.seconds},
                                {"note", r.note}});
        json j{{"max_order", max_order},
               {"max_multiple", max_multiple},
               {"all_expected", rep.all_expected},
               {"seconds", rep.seconds},
               {"rows", rows}};
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << std::left << std::setw(12) << "group" << std::setw(7) << "order"
                  << std::setw(10) << "class" << std::setw(12) << "verdict"
                  << std::setw(10) << "max-path" << std::setw(12) << "nodes"
                  << std::setw(10) << "seconds" << "note" << "\n";
        for (const cordial::SweepRow& r : rep.rows) {
            std::ostringstream secs;
            secs << std::fixed << std::setprecision(2) << r.seconds;
            std::cout << std::left << std::setw(12) << r.group.to_string() << std::setw(7)
                      << r.order << std::setw(10) << r.classification << std::setw(12)
                      << r.verdict << std::setw(10) << r.max_path_verified << std::setw(12)
                      << r.nodes << std::setw(10) << secs.str() << r.note << "\n";
        }
        std::cout << "all rows as expected: " << (rep.all_expected ? "yes" : "no")
                  << "\n";
    }
    return rep.all_expected ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"cordial labelings of paths and cycles over finite abelian groups"};
    app.require_subcommand(1);

    GlobalOpts g;
    app.add_flag("--json", g.json, "machine-readable JSON output")->envname("CORDIAL_JSON");
    app.add_option("--threads", g.threads, "worker threads for the search fan-out")
        ->envname("CORDIAL_THREADS");
    app.add_option("--node-budget", g.node_budget,
                   "abort searches after this many nodes (0 = unlimited)")
        ->envname("CORDIAL_NODE_BUDGET");
    app.add_option("--oracle-bound", g.oracle_bound,
                   "largest n^m enumeration the count command accepts")
        ->envname("CORDIAL_ORACLE_BOUND");
    app.add_option("--seed", g.seed, "seed for randomized checks")->envname("CORDIAL_SEED");

    auto* check = app.add_subcommand("check", "verify a labeling for cordiality");
    std::string check_file, check_group, check_labels, check_kind = "path";
    check->add_option("--file", check_file, "labeling file (header line, labels line)");
    check->add_option("--group", check_group, "group spec such as 2x4");
    check->add_option("--labels", check_labels, "label sequence such as 00-12-10");
    check->add_option("--kind", check_kind, "path or cycle")
        ->check(CLI::IsMember({"path", "cycle"}));
    check->fallthrough();

    auto* construct = app.add_subcommand("construct", "build a cordial labeling");
    std::string con_group, con_kind = "path";
    std::size_t con_length = 0;
    construct->add_option("--group", con_group, "group spec such as 3x3")->required();
    construct->add_option("--length", con_length, "number of vertices")->required();
    construct->add_option("--kind", con_kind, "path or cycle")
        ->check(CLI::IsMember({"path", "cycle"}));
    construct->fallthrough();

    auto* search = app.add_subcommand("search", "backtracking search for a labeling");
    std::string sea_group, sea_kind = "path";
    std::size_t sea_length = 0;
    bool sea_canonical = false, sea_no_symmetry = false;
    search->add_option("--group", sea_group, "group spec")->required();
    search->add_option("--length", sea_length, "number of vertices")->required();
    search->add_option("--kind", sea_kind, "path or cycle")
        ->check(CLI::IsMember({"path", "cycle"}));
    search->add_flag("--canonical", sea_canonical,
                     "return the lexicographically least witness (single-threaded)");
    search->add_flag("--no-symmetry", sea_no_symmetry, "disable symmetry reduction");
    search->fallthrough();

    auto* count = app.add_subcommand("count", "count all cordial labelings exhaustively");
    std::string cnt_group, cnt_kind = "path";
    std::size_t cnt_length = 0;
    count->add_option("--group", cnt_group, "group spec")->required();
    count->add_option("--length", cnt_length, "number of vertices")->required();
    count->add_option("--kind", cnt_kind, "path or cycle")
        ->check(CLI::IsMember({"path", "cycle"}));
    count->fallthrough();

    auto* sweep = app.add_subcommand("sweep", "survey all groups up to an order bound");
    std::uint64_t sw_max_order = 23, sw_exp2_trials = 100000;
    std::size_t sw_max_multiple = 3;
    sweep->add_option("--max-order", sw_max_order, "largest group order to cover");
    sweep->add_option("--max-multiple", sw_max_multiple,
                      "verify path lengths up to this multiple of the order");
    sweep->add_option("--exp2-trials", sw_exp2_trials,
                      "permutations for the randomized xor check");
    sweep->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (check->parsed())
            return run_check(g, check_file, check_group, check_labels, check_kind);
        if (construct->parsed()) return run_construct(g, con_group, con_length, con_kind);
        if (search->parsed())
            return run_search(g, sea_group, sea_length, sea_kind, sea_canonical,
                              sea_no_symmetry);
        if (count->parsed()) return run_count(g, cnt_group, cnt_length, cnt_kind);
        if (sweep->parsed())
            return run_sweep(g, sw_max_order, sw_max_multiple, sw_exp2_trials);
        std::cerr << "input error: no subcommand given\n";
        return 2;
    } catch (const cordial::ParseError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const cordial::ConstructionError& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 4;
    } catch (const std::invalid_argument& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const std::out_of_range& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 4;
    }
}
