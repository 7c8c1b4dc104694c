#pragma once

// Backtracking search and exhaustive counting for cordial labelings, plus a
// randomized check of the xor-telescoping argument that rules out cordial
// full-length paths on elementary 2-groups of rank at least two.

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdint>
#include <mutex>
#include <numeric>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <string_view>
#include <thread>
#include <vector>

#include "cordial/labeling.hpp"

namespace cordial {

struct SearchOptions {
    // Pin vertex 0 to the identity (label shifts preserve cordiality) and
    // quotient by the path-reversal / cycle-reflection symmetry. Off means
    // plain enumeration over all label sequences.
    bool symmetry_reduction = true;
    // Single-threaded, values tried in increasing index order, stop at the
    // first witness. The witness is then the lexicographically least cordial
    // labeling that has vertex 0 at the identity.
    bool canonical_witness = false;
    // 0 means unlimited. A search that runs out of budget reports
    // inconclusive, never exhausted.
    std::uint64_t node_budget = 0;
    // Fan the first free position out over this many threads. Ignored when
    // canonical_witness is set.
    unsigned thread_hint = 1;
    // Test hook: drop the count-based pruning so every leaf is generated and
    // judged by the full verifier alone.
    bool disable_count_pruning = false;
};

enum class SearchVerdict { found, exhausted, inconclusive };

inline std::string_view to_string(SearchVerdict v) {
    switch (v) {
        case SearchVerdict::found: return "found";
        case SearchVerdict::exhausted: return "exhausted";
        default: return "inconclusive";
    }
}

struct SearchOutcome {
    SearchVerdict verdict = SearchVerdict::inconclusive;
    std::optional<GraphLabeling> witness;
    std::uint64_t nodes = 0;
    double seconds = 0.0;
    // Human-readable note of the reductions that were in force.
    std::string symmetry;
};

namespace detail {

class Searcher {
public:
    // Index tables take order^2 entries, so keep searches to groups where
    // that stays cheap. Larger groups are out of reach for backtracking
    // anyway.
    static constexpr std::size_t kMaxSearchOrder = 4096;

    Searcher(const GroupSpec& g, GraphKind kind, std::size_t m, const SearchOptions& opts)
        : g_(g), kind_(kind), m_(m), opts_(opts),
          n_(static_cast<std::size_t>(g.order())) {
        if (kind_ == GraphKind::path && m_ < 1)
            throw std::invalid_argument("path search needs at least one vertex");
        if (kind_ == GraphKind::cycle && m_ < 3)
            throw std::invalid_argument("cycle search needs at least three vertices");
        if (n_ > kMaxSearchOrder)
            throw std::invalid_argument("search supports groups of order up to " +
                                        std::to_string(kMaxSearchOrder) + ", got " +
                                        std::to_string(n_));
        elems_ = g_.enumerate();
        add_.resize(n_ * n_);
        neg_.resize(n_);
        for (std::size_t a = 0; a < n_; ++a) {
            neg_[a] = static_cast<std::uint32_t>(g_.index_of(g_.negate(elems_[a])));
            for (std::size_t b = 0; b < n_; ++b)
                add_[a * n_ + b] =
                    static_cast<std::uint32_t>(g_.index_of(g_.add(elems_[a], elems_[b])));
        }
        edges_ = kind_ == GraphKind::cycle ? m_ : m_ - 1;
        vfloor_ = static_cast<std::uint32_t>(m_ / n_);
        vceil_ = static_cast<std::uint32_t>((m_ + n_ - 1) / n_);
        efloor_ = static_cast<std::uint32_t>(edges_ / n_);
        eceil_ = static_cast<std::uint32_t>((edges_ + n_ - 1) / n_);
        fix_first_ = opts_.symmetry_reduction || opts_.canonical_witness;
    }

    SearchOutcome run() {
        const auto t0 = std::chrono::steady_clock::now();
        WorkerState root;
        init_state(root);
        if (fix_first_) place(root, 0, 0);

        const std::size_t fan = fix_first_ ? 1 : 0;
        if (m_ == fan) {
            // Only the pinned vertex exists; judge it directly.
            leaf(root);
        } else {
            unsigned threads =
                opts_.canonical_witness ? 1 : std::max(1u, opts_.thread_hint);
            threads = static_cast<unsigned>(
                std::min<std::size_t>(threads, n_));
            if (threads <= 1) {
                explore_fan(root, fan, 0, 1);
            } else {
                std::vector<std::thread> pool;
                pool.reserve(threads);
                for (unsigned t = 0; t < threads; ++t)
                    pool.emplace_back([this, &root, fan, t, threads] {
                        WorkerState ws = root;
                        explore_fan(ws, fan, t, threads);
                    });
                for (std::thread& th : pool) th.join();
            }
        }

        SearchOutcome out;
        out.nodes = nodes_.load(std::memory_order_relaxed);
        out.seconds =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        {
            std::lock_guard<std::mutex> lock(witness_mutex_);
            if (witness_) {
                out.verdict = SearchVerdict::found;
                out.witness = witness_;
            }
        }
        if (!out.witness)
            out.verdict = budget_hit_.load(std::memory_order_relaxed)
                              ? SearchVerdict::inconclusive
                              : SearchVerdict::exhausted;
        out.symmetry = describe_symmetry();
        return out;
    }

private:
    struct WorkerState {
        std::vector<std::uint32_t> labels;
        std::vector<std::uint32_t> vcount;
        std::vector<std::uint32_t> ecount;
        // Number of still-unmet floor demands; a placement can never be
        // completed once these exceed what the remaining slots can supply.
        std::uint32_t vdef = 0;
        std::uint32_t edef = 0;
    };

    void init_state(WorkerState& ws) const {
        ws.labels.assign(m_, 0);
        ws.vcount.assign(n_, 0);
        ws.ecount.assign(n_, 0);
        ws.vdef = static_cast<std::uint32_t>(n_) * vfloor_;
        ws.edef = static_cast<std::uint32_t>(n_) * efloor_;
    }

    // Tries value x at position i. Returns false and leaves the state intact
    // when the placement is pruned; otherwise commits it.
    bool place(WorkerState& ws, std::size_t i, std::uint32_t x) const {
        std::uint32_t e = 0;
        const bool has_edge = i > 0;
        if (has_edge) e = add_[ws.labels[i - 1] * n_ + x];
        if (!opts_.disable_count_pruning) {
            if (ws.vcount[x] >= vceil_) return false;
            if (has_edge && ws.ecount[e] >= eceil_) return false;
            const std::uint32_t vdef = ws.vdef - (ws.vcount[x] < vfloor_ ? 1 : 0);
            if (vdef > m_ - i - 1) return false;
            const std::uint32_t edef =
                ws.edef - ((has_edge && ws.ecount[e] < efloor_) ? 1 : 0);
            if (edef > edges_ - i) return false;
        }
        if (ws.vcount[x]++ < vfloor_) --ws.vdef;
        if (has_edge && ws.ecount[e]++ < efloor_) --ws.edef;
        ws.labels[i] = x;
        return true;
    }

    void unplace(WorkerState& ws, std::size_t i) const {
        const std::uint32_t x = ws.labels[i];
        if (--ws.vcount[x] < vfloor_) ++ws.vdef;
        if (i > 0) {
            const std::uint32_t e = add_[ws.labels[i - 1] * n_ + x];
            if (--ws.ecount[e] < efloor_) ++ws.edef;
        }
    }

    bool should_stop() const { return stop_.load(std::memory_order_relaxed); }

    bool count_node() {
        const std::uint64_t seen = nodes_.fetch_add(1, std::memory_order_relaxed) + 1;
        if (opts_.node_budget != 0 && seen > opts_.node_budget) {
            budget_hit_.store(true, std::memory_order_relaxed);
            stop_.store(true, std::memory_order_relaxed);
            return false;
        }
        return true;
    }

    // Iterates position i over the value residues x = start, start+stride, ...
    // The top level uses a stride per worker thread; recursion always uses
    // stride 1 via dfs().
    void explore_fan(WorkerState& ws, std::size_t i, std::uint32_t start,
                     std::uint32_t stride) {
        for (std::uint32_t x = start; x < n_; x += stride) {
            if (should_stop()) return;
            if (!count_node()) return;
            if (!place(ws, i, x)) continue;
            if (i + 1 == m_) leaf(ws);
            else dfs(ws, i + 1);
            unplace(ws, i);
        }
    }

    void dfs(WorkerState& ws, std::size_t i) {
        std::uint32_t first = 0;
        // Reflection about the pinned vertex maps the last free vertex onto
        // the second one, so only the half with labels[last] >= labels[1]
        // needs visiting.
        if (kind_ == GraphKind::cycle && opts_.symmetry_reduction && i + 1 == m_)
            first = ws.labels[1];
        for (std::uint32_t x = first; x < n_; ++x) {
            if (should_stop()) return;
            if (!count_node()) return;
            if (!place(ws, i, x)) continue;
            if (i + 1 == m_) leaf(ws);
            else dfs(ws, i + 1);
            unplace(ws, i);
        }
    }

    // With vertex 0 pinned to the identity, reversing a path and shifting it
    // back onto the identity is an involution on the leaves; keeping only
    // the lexicographically smaller mate of each pair halves the leaf work
    // without losing the least witness.
    bool reverse_canonical(const WorkerState& ws) const {
        const std::uint32_t shift = neg_[ws.labels[m_ - 1]];
        for (std::size_t i = 0; i < m_; ++i) {
            const std::uint32_t r = add_[ws.labels[m_ - 1 - i] * n_ + shift];
            if (ws.labels[i] != r) return ws.labels[i] < r;
        }
        return true;
    }

    void leaf(WorkerState& ws) {
        if (kind_ == GraphKind::path && opts_.symmetry_reduction && !reverse_canonical(ws))
            return;
        // The count pruning is only a filter; the leaf is always judged by
        // the full verifier.
        std::vector<GroupElement> labels;
        labels.reserve(m_);
        for (std::uint32_t idx : ws.labels) labels.push_back(elems_[idx]);
        GraphLabeling cand(g_, kind_, std::move(labels));
        if (!check_cordial(cand).cordial) return;
        std::lock_guard<std::mutex> lock(witness_mutex_);
        if (!witness_) witness_.emplace(std::move(cand));
        stop_.store(true, std::memory_order_relaxed);
    }

    std::string describe_symmetry() const {
        if (!fix_first_) return "none";
        std::string s = "v0=identity";
        if (opts_.symmetry_reduction)
            s += kind_ == GraphKind::path ? "+reverse-canonical" : "+reflection";
        if (opts_.canonical_witness) s += "+lex-first";
        return s;
    }

    GroupSpec g_;
    GraphKind kind_;
    std::size_t m_;
    SearchOptions opts_;
    std::size_t n_;
    std::vector<GroupElement> elems_;
    std::vector<std::uint32_t> add_;
    std::vector<std::uint32_t> neg_;
    std::size_t edges_ = 0;
    std::uint32_t vfloor_ = 0, vceil_ = 0, efloor_ = 0, eceil_ = 0;
    bool fix_first_ = false;

    std::atomic<std::uint64_t> nodes_{0};
    std::atomic<bool> stop_{false};
    std::atomic<bool> budget_hit_{false};
    std::mutex witness_mutex_;
    std::optional<GraphLabeling> witness_;
};

}  // namespace detail

inline SearchOutcome search_path(const GroupSpec& g, std::size_t m,
                                 const SearchOptions& opts = {}) {
    return detail::Searcher(g, GraphKind::path, m, opts).run();
}

inline SearchOutcome search_cycle(const GroupSpec& g, std::size_t m,
                                  const SearchOptions& opts = {}) {
    return detail::Searcher(g, GraphKind::cycle, m, opts).run();
}

namespace detail {

// Plain enumeration of every label sequence, no symmetry reduction and no
// pruning, so the result is a trustworthy reference count. The leaf test is
// O(1): a count vector over n elements summing to s is almost rectangular
// exactly when the histogram of counts is concentrated on floor(s/n) and
// ceil(s/n) with the forced multiplicities.
class CountEnumerator {
public:
    CountEnumerator(const GroupSpec& g, GraphKind kind, std::size_t m)
        : kind_(kind), m_(m), n_(static_cast<std::size_t>(g.order())) {
        const auto elems = g.enumerate();
        add_.resize(n_ * n_);
        for (std::size_t a = 0; a < n_; ++a)
            for (std::size_t b = 0; b < n_; ++b)
                add_[a * n_ + b] =
                    static_cast<std::uint32_t>(g.index_of(g.add(elems[a], elems[b])));
        edges_ = kind_ == GraphKind::cycle ? m_ : m_ - 1;
        labels_.assign(m_, 0);
        vcount_.assign(n_, 0);
        ecount_.assign(n_, 0);
        vhist_.assign(m_ + 2, 0);
        ehist_.assign(edges_ + 2, 0);
        vhist_[0] = static_cast<std::uint32_t>(n_);
        ehist_[0] = static_cast<std::uint32_t>(n_);
        vq_ = m_ / n_;
        vr_ = m_ % n_;
        eq_ = edges_ / n_;
        er_ = edges_ % n_;
    }

    std::uint64_t run() {
        rec(0);
        return total_;
    }

private:
    bool vertex_ok() const {
        return vr_ == 0 ? vhist_[vq_] == n_
                        : vhist_[vq_] == n_ - vr_ && vhist_[vq_ + 1] == vr_;
    }
    bool edge_ok() const {
        return er_ == 0 ? ehist_[eq_] == n_
                        : ehist_[eq_] == n_ - er_ && ehist_[eq_ + 1] == er_;
    }

    void bump(std::vector<std::uint32_t>& count, std::vector<std::uint32_t>& hist,
              std::uint32_t x) {
        --hist[count[x]];
        ++hist[++count[x]];
    }
    void drop(std::vector<std::uint32_t>& count, std::vector<std::uint32_t>& hist,
              std::uint32_t x) {
        --hist[count[x]];
        ++hist[--count[x]];
    }

    void rec(std::size_t i) {
        if (i == m_) {
            bool ok;
            if (kind_ == GraphKind::cycle) {
                const std::uint32_t e = add_[labels_[m_ - 1] * n_ + labels_[0]];
                bump(ecount_, ehist_, e);
                ok = vertex_ok() && edge_ok();
                drop(ecount_, ehist_, e);
            } else {
                ok = vertex_ok() && edge_ok();
            }
            total_ += ok ? 1 : 0;
            return;
        }
        for (std::uint32_t x = 0; x < n_; ++x) {
            labels_[i] = x;
            bump(vcount_, vhist_, x);
            std::uint32_t e = 0;
            if (i > 0) {
                e = add_[labels_[i - 1] * n_ + x];
                bump(ecount_, ehist_, e);
            }
            rec(i + 1);
            if (i > 0) drop(ecount_, ehist_, e);
            drop(vcount_, vhist_, x);
        }
    }

    GraphKind kind_;
    std::size_t m_;
    std::size_t n_;
    std::vector<std::uint32_t> add_;
    std::size_t edges_ = 0;
    std::vector<std::uint32_t> labels_, vcount_, ecount_, vhist_, ehist_;
    std::size_t vq_ = 0, vr_ = 0, eq_ = 0, er_ = 0;
    std::uint64_t total_ = 0;
};

}  // namespace detail

// Exact number of cordial labelings of the path or cycle on m vertices over
// g, counted by full enumeration. Refuses jobs whose n^m search space would
// exceed oracle_bound, since the run time is proportional to it.
inline std::uint64_t count_labelings(const GroupSpec& g, GraphKind kind, std::size_t m,
                                     std::uint64_t oracle_bound = 100000000) {
    if (kind == GraphKind::path && m < 1)
        throw std::invalid_argument("path count needs at least one vertex");
    if (kind == GraphKind::cycle && m < 3)
        throw std::invalid_argument("cycle count needs at least three vertices");
    const std::uint64_t n = g.order();
    std::uint64_t leaves = 1;
    for (std::size_t i = 0; i < m; ++i) {
        if (leaves > oracle_bound / n) {
            leaves = oracle_bound + 1;
            break;
        }
        leaves *= n;
    }
    if (leaves > oracle_bound)
        throw std::invalid_argument("count space " + g.to_string() + "^" +
                                    std::to_string(m) + " exceeds the oracle bound of " +
                                    std::to_string(oracle_bound));
    return detail::CountEnumerator(g, kind, m).run();
}

// ---------------------------------------------------------------------------
// xor-telescoping check for elementary 2-groups.
//
// Over (Z_2)^m the edge labels of a path telescope: their xor collapses to
// first-vertex xor last-vertex. A full-length path with every vertex label
// used once and every nonzero edge label used once would therefore need the
// xor of all nonzero elements, which is 0 for m >= 2, to equal the xor of two
// distinct vertices, which never is. This routine exercises that argument on
// concrete permutations: exhaustively for m = 2, on seeded random shuffles
// otherwise.
// ---------------------------------------------------------------------------

struct Exp2Report {
    unsigned m = 0;
    std::uint64_t permutations_checked = 0;
    bool exhaustive = false;
    bool nonidentity_sum_is_identity = false;
    std::uint64_t edge_sum_mismatches = 0;
    std::uint64_t perfect_edge_covers = 0;

    bool all_hold() const {
        return nonidentity_sum_is_identity && edge_sum_mismatches == 0 &&
               perfect_edge_covers == 0;
    }
};

inline Exp2Report verify_exp2_argument(unsigned m, std::uint64_t trials = 100000,
                                       std::uint64_t seed = 12345) {
    if (m < 2 || m > 20)
        throw std::invalid_argument("the xor argument applies to rank 2 through 20, got rank " +
                                    std::to_string(m));
    const std::uint32_t size = 1u << m;
    Exp2Report rep;
    rep.m = m;

    std::uint32_t acc = 0;
    for (std::uint32_t x = 1; x < size; ++x) acc ^= x;
    rep.nonidentity_sum_is_identity = acc == 0;

    std::vector<std::uint32_t> perm(size);
    std::iota(perm.begin(), perm.end(), 0u);
    std::vector<char> seen(size, 0);

    auto check = [&] {
        std::uint32_t esum = 0;
        bool perfect = true;
        std::fill(seen.begin(), seen.end(), 0);
        for (std::uint32_t i = 0; i + 1 < size; ++i) {
            const std::uint32_t e = perm[i] ^ perm[i + 1];
            esum ^= e;
            if (e == 0 || seen[e]) perfect = false;
            seen[e] = 1;
        }
        if (esum != (perm.front() ^ perm.back())) ++rep.edge_sum_mismatches;
        if (perfect) ++rep.perfect_edge_covers;
        ++rep.permutations_checked;
    };

    if (m == 2) {
        std::sort(perm.begin(), perm.end());
        do check();
        while (std::next_permutation(perm.begin(), perm.end()));
        rep.exhaustive = true;
    } else {
        if (trials == 0)
            throw std::invalid_argument("randomized xor check needs at least one trial");
        std::mt19937_64 rng(seed);
        for (std::uint64_t t = 0; t < trials; ++t) {
            std::shuffle(perm.begin(), perm.end(), rng);
            check();
        }
    }
    return rep;
}

}  // namespace cordial
