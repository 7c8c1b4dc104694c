#pragma once

// Brute-force reference implementations for the tests. Everything here is
// deliberately naive and uses its own modular arithmetic on residue vectors,
// so it cannot share a bug with the library's group layer.

#include <cstdint>
#include <map>
#include <vector>

namespace oracle {

using Elem = std::vector<int>;

inline std::vector<Elem> all_elements(const std::vector<int>& factors) {
    std::vector<Elem> out;
    Elem cur(factors.size(), 0);
    while (true) {
        out.push_back(cur);
        // odometer increment, last position fastest
        std::size_t i = factors.size();
        while (i > 0) {
            --i;
            if (++cur[i] < factors[i]) break;
            cur[i] = 0;
            if (i == 0) return out;
        }
    }
}

inline Elem mod_add(const std::vector<int>& factors, const Elem& a, const Elem& b) {
    Elem out(factors.size(), 0);
    for (std::size_t i = 0; i < factors.size(); ++i)
        out[i] = (a[i] + b[i]) % factors[i];
    return out;
}

inline Elem mod_neg(const std::vector<int>& factors, const Elem& a) {
    Elem out(factors.size(), 0);
    for (std::size_t i = 0; i < factors.size(); ++i)
        out[i] = (factors[i] - a[i]) % factors[i];
    return out;
}

// All n per-element counts, zeros included, pairwise within one of each
// other.
inline bool almost_rect(const std::vector<int>& factors,
                        const std::vector<Elem>& seq) {
    std::map<Elem, int> counts;
    for (const Elem& a : all_elements(factors)) counts[a] = 0;
    for (const Elem& a : seq) ++counts.at(a);
    int lo = -1, hi = -1;
    for (const auto& [a, c] : counts) {
        if (lo < 0 || c < lo) lo = c;
        if (c > hi) hi = c;
    }
    return hi - lo <= 1;
}

inline std::vector<Elem> edge_seq(const std::vector<int>& factors,
                                  const std::vector<Elem>& labels, bool cycle) {
    std::vector<Elem> edges;
    for (std::size_t i = 0; i + 1 < labels.size(); ++i)
        edges.push_back(mod_add(factors, labels[i], labels[i + 1]));
    if (cycle) edges.push_back(mod_add(factors, labels.back(), labels.front()));
    return edges;
}

inline bool brute_cordial_check(const std::vector<int>& factors,
                                const std::vector<Elem>& labels, bool cycle) {
    return almost_rect(factors, labels) &&
           almost_rect(factors, edge_seq(factors, labels, cycle));
}

// Enumerates every label sequence of length m with an odometer and recounts
// from scratch at each leaf. Exponential; keep n^m tiny.
inline std::uint64_t brute_count(const std::vector<int>& factors, std::size_t m,
                                 bool cycle) {
    const std::vector<Elem> elems = all_elements(factors);
    std::vector<std::size_t> pick(m, 0);
    std::uint64_t total = 0;
    while (true) {
        std::vector<Elem> labels;
        labels.reserve(m);
        for (std::size_t p : pick) labels.push_back(elems[p]);
        if (brute_cordial_check(factors, labels, cycle)) ++total;
        std::size_t i = m;
        bool done = true;
        while (i > 0) {
            --i;
            if (++pick[i] < elems.size()) {
                done = false;
                break;
            }
            pick[i] = 0;
        }
        if (done) return total;
    }
}

inline bool brute_exists(const std::vector<int>& factors, std::size_t m, bool cycle) {
    const std::vector<Elem> elems = all_elements(factors);
    std::vector<std::size_t> pick(m, 0);
    while (true) {
        std::vector<Elem> labels;
        labels.reserve(m);
        for (std::size_t p : pick) labels.push_back(elems[p]);
        if (brute_cordial_check(factors, labels, cycle)) return true;
        std::size_t i = m;
        bool done = true;
        while (i > 0) {
            --i;
            if (++pick[i] < elems.size()) {
                done = false;
                break;
            }
            pick[i] = 0;
        }
        if (done) return false;
    }
}

}  // namespace oracle
