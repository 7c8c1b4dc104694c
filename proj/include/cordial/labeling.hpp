#pragma once

// Vertex labelings of paths and cycles over a finite abelian group, the
// induced edge labels (sum of the two endpoint labels), and the
// almost-rectangular count test that defines cordiality.
//
// A count vector is almost rectangular when all |A| per-element counts,
// zeros included, pairwise differ by at most one. A labeling is cordial when
// both the vertex counts and the induced edge counts are almost rectangular.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "cordial/group.hpp"

namespace cordial {

enum class GraphKind { path, cycle };

inline std::string_view to_string(GraphKind kind) {
    return kind == GraphKind::path ? "path" : "cycle";
}

struct GraphLabeling {
    GraphLabeling(GroupSpec group_, GraphKind kind_, std::vector<GroupElement> labels_)
        : group(std::move(group_)), kind(kind_), labels(std::move(labels_)) {
        if (kind == GraphKind::path && labels.empty())
            throw std::invalid_argument("path labeling needs at least one vertex");
        if (kind == GraphKind::cycle && labels.size() < 3)
            throw std::invalid_argument("cycle labeling needs at least three vertices");
        for (const GroupElement& a : labels)
            if (!group.contains(a))
                throw std::invalid_argument("label is not an element of group " +
                                            group.to_string());
    }

    std::size_t length() const noexcept { return labels.size(); }

    friend bool operator==(const GraphLabeling& a, const GraphLabeling& b) {
        return a.group == b.group && a.kind == b.kind && a.labels == b.labels;
    }

    GroupSpec group;
    GraphKind kind;
    std::vector<GroupElement> labels;
};

// Edge labels in path order: m-1 sums for a path, m sums (with the wrap-around
// edge last) for a cycle.
inline std::vector<GroupElement> induced_edge_labels(const GraphLabeling& L) {
    std::vector<GroupElement> edges;
    const std::size_t m = L.length();
    edges.reserve(L.kind == GraphKind::cycle ? m : m - 1);
    for (std::size_t i = 0; i + 1 < m; ++i)
        edges.push_back(L.group.add(L.labels[i], L.labels[i + 1]));
    if (L.kind == GraphKind::cycle)
        edges.push_back(L.group.add(L.labels[m - 1], L.labels[0]));
    return edges;
}

struct CountPartition {
    // counts[index_of(a)] = multiplicity of a in the label sequence; always
    // |A| entries, zeros included.
    std::vector<std::uint32_t> counts;
    // counts sorted descending, also |A| entries.
    std::vector<std::uint32_t> partition;
};

inline CountPartition count_partition(const GroupSpec& g,
                                      const std::vector<GroupElement>& seq) {
    CountPartition out;
    out.counts.assign(static_cast<std::size_t>(g.order()), 0);
    for (const GroupElement& a : seq)
        ++out.counts[static_cast<std::size_t>(g.index_of(a))];
    out.partition = out.counts;
    std::sort(out.partition.begin(), out.partition.end(), std::greater<>());
    return out;
}

// Strict almost-rectangularity: max and min count (zeros included) differ by
// at most one. This is the predicate every cordiality verdict uses.
inline bool is_almost_rectangular(const CountPartition& p) {
    return p.partition.empty() || p.partition.front() - p.partition.back() <= 1;
}

// Looser literal reading (every count is either the maximum, one below it, or
// zero). Exposed for experiments; no verdict in this library uses it.
inline bool is_almost_rectangular_loose(const CountPartition& p) {
    if (p.partition.empty()) return true;
    const std::uint32_t top = p.partition.front();
    for (std::uint32_t c : p.partition)
        if (c != top && c + 1 != top && c != 0) return false;
    return true;
}

struct CordialityReport {
    CountPartition vertex_partition;
    CountPartition edge_partition;
    bool vertex_ok = false;
    bool edge_ok = false;
    bool cordial = false;
};

inline CordialityReport check_cordial(const GraphLabeling& L) {
    CordialityReport r;
    r.vertex_partition = count_partition(L.group, L.labels);
    r.edge_partition = count_partition(L.group, induced_edge_labels(L));
    r.vertex_ok = is_almost_rectangular(r.vertex_partition);
    r.edge_ok = is_almost_rectangular(r.edge_partition);
    r.cordial = r.vertex_ok && r.edge_ok;
    return r;
}

// Adds a to every vertex label. Every edge label moves by 2a, a bijection of
// the group, so both count partitions (and the verdict) are unchanged.
inline GraphLabeling shift(const GraphLabeling& L, const GroupElement& a) {
    std::vector<GroupElement> labels;
    labels.reserve(L.length());
    for (const GroupElement& v : L.labels) labels.push_back(L.group.add(v, a));
    return GraphLabeling(L.group, L.kind, std::move(labels));
}

// Reverses the vertex order. For cycles this is the same cycle traversed
// backwards; rotations composed with reversal are likewise count-preserving.
inline GraphLabeling reverse(const GraphLabeling& L) {
    std::vector<GroupElement> labels(L.labels.rbegin(), L.labels.rend());
    return GraphLabeling(L.group, L.kind, std::move(labels));
}

// Keeps the first t labels of a path. Deleting vertices from the end of a
// cordial P_n with n = |A| keeps both count vectors within {0,1}, so every
// prefix of such a labeling is cordial; for other lengths no such guarantee
// exists and callers must re-check.
inline GraphLabeling truncate(const GraphLabeling& L, std::size_t t) {
    if (L.kind != GraphKind::path)
        throw std::invalid_argument("truncate is defined for paths only");
    if (t < 1 || t > L.length())
        throw std::invalid_argument("truncate length " + std::to_string(t) +
                                    " out of range [1, " + std::to_string(L.length()) + "]");
    std::vector<GroupElement> labels(L.labels.begin(),
                                     L.labels.begin() + static_cast<std::ptrdiff_t>(t));
    return GraphLabeling(L.group, GraphKind::path, std::move(labels));
}

// ---------------------------------------------------------------------------
// Text format.
//
//   group=2x4;kind=path
//   00-12-10-01-02-03-11-13
//
// Labels are residue tuples joined by '-'. The compact digit form (one digit
// per factor) is legal exactly when every factor is at most 10; otherwise the
// parenthesized form (0,11) is required. Emission uses the compact form
// whenever it is legal.
// ---------------------------------------------------------------------------

inline bool compact_form_legal(const GroupSpec& g) {
    for (int d : g.factors())
        if (d > 10) return false;
    return true;
}

inline std::string format_element(const GroupSpec& g, const GroupElement& a) {
    if (!g.contains(a))
        throw std::invalid_argument("element does not belong to group " + g.to_string());
    std::string out;
    if (compact_form_legal(g)) {
        for (int r : a.residues) out += static_cast<char>('0' + r);
    } else {
        out += '(';
        for (std::size_t i = 0; i < a.residues.size(); ++i) {
            if (i) out += ',';
            out += std::to_string(a.residues[i]);
        }
        out += ')';
    }
    return out;
}

inline std::string format_labels(const GroupSpec& g,
                                 const std::vector<GroupElement>& labels) {
    std::string out;
    for (std::size_t i = 0; i < labels.size(); ++i) {
        if (i) out += '-';
        out += format_element(g, labels[i]);
    }
    return out;
}

inline std::string to_text(const GraphLabeling& L) {
    std::string out = "group=" + L.group.to_string() + ";kind=";
    out += to_string(L.kind);
    out += '\n';
    out += format_labels(L.group, L.labels);
    out += '\n';
    return out;
}

namespace detail {

// Parses one label token; 'at' is the byte offset of the token inside the
// enclosing text, used for error positions.
inline GroupElement parse_element_token(const GroupSpec& g, std::string_view tok,
                                        std::size_t at) {
    if (tok.empty()) throw ParseError(at, "empty label");
    GroupElement out{std::vector<int>(g.rank(), 0)};
    if (tok.front() == '(') {
        std::size_t pos = 1;
        for (std::size_t i = 0; i < g.rank(); ++i) {
            std::size_t start = pos;
            int value = 0;
            while (pos < tok.size() && tok[pos] >= '0' && tok[pos] <= '9') {
                value = value * 10 + (tok[pos] - '0');
                if (static_cast<std::uint64_t>(value) >= GroupSpec::kMaxOrder)
                    throw ParseError(at + start, "residue too large");
                ++pos;
            }
            if (pos == start) throw ParseError(at + pos, "expected residue digit");
            if (value >= g.factors()[i])
                throw ParseError(at + start,
                                 "residue " + std::to_string(value) +
                                     " out of range for factor " +
                                     std::to_string(g.factors()[i]));
            out.residues[i] = value;
            const char want = i + 1 < g.rank() ? ',' : ')';
            if (pos >= tok.size() || tok[pos] != want)
                throw ParseError(at + pos, std::string("expected '") + want + "' in label");
            ++pos;
        }
        if (pos != tok.size())
            throw ParseError(at + pos, "trailing characters after label");
        return out;
    }
    if (!compact_form_legal(g))
        throw ParseError(at, "compact labels need every factor <= 10; use (r1,r2,...) for group " +
                                 g.to_string());
    if (tok.size() != g.rank())
        throw ParseError(at, "compact label needs exactly " + std::to_string(g.rank()) +
                                 " digits, got " + std::to_string(tok.size()));
    for (std::size_t i = 0; i < g.rank(); ++i) {
        const char c = tok[i];
        if (c < '0' || c > '9')
            throw ParseError(at + i, std::string("unexpected character '") + c + "' in label");
        const int value = c - '0';
        if (value >= g.factors()[i])
            throw ParseError(at + i, "residue " + std::to_string(value) +
                                         " out of range for factor " +
                                         std::to_string(g.factors()[i]));
        out.residues[i] = value;
    }
    return out;
}

}  // namespace detail

// Parses a '-'-joined label sequence. 'base' offsets error positions when the
// sequence is embedded in a larger text.
inline std::vector<GroupElement> parse_labels(const GroupSpec& g, std::string_view text,
                                              std::size_t base = 0) {
    std::vector<GroupElement> out;
    std::size_t pos = 0;
    while (true) {
        std::size_t end = pos;
        // '-' only separates labels; inside a tuple it cannot occur (residues
        // are unsigned), so a plain scan is enough.
        while (end < text.size() && text[end] != '-') ++end;
        out.push_back(detail::parse_element_token(g, text.substr(pos, end - pos), base + pos));
        if (end == text.size()) break;
        pos = end + 1;
        if (pos == text.size()) throw ParseError(base + pos, "trailing '-' after labels");
    }
    return out;
}

// Parses the two-line text form (header, labels). Blank lines and lines
// starting with '#' are ignored.
inline GraphLabeling parse_labeling(std::string_view text) {
    std::size_t pos = 0;
    auto next_line = [&](std::size_t& line_start) -> std::string_view {
        while (pos < text.size()) {
            line_start = pos;
            std::size_t end = text.find('\n', pos);
            if (end == std::string_view::npos) end = text.size();
            std::string_view line = text.substr(pos, end - pos);
            pos = end < text.size() ? end + 1 : end;
            if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
            if (line.empty() || line.front() == '#') continue;
            return line;
        }
        line_start = text.size();
        return {};
    };

    std::size_t header_at = 0;
    std::string_view header = next_line(header_at);
    if (header.empty()) throw ParseError(header_at, "missing header line 'group=...;kind=...'");

    constexpr std::string_view kGroupKey = "group=";
    if (!header.starts_with(kGroupKey))
        throw ParseError(header_at, "header must start with 'group='");
    std::size_t semi = header.find(';');
    if (semi == std::string_view::npos)
        throw ParseError(header_at + header.size(), "header is missing ';kind=...'");
    GroupSpec group = [&] {
        try {
            return GroupSpec::parse(header.substr(kGroupKey.size(), semi - kGroupKey.size()));
        } catch (const ParseError& e) {
            throw ParseError(header_at + kGroupKey.size() + e.position(), e.what());
        }
    }();

    std::string_view kind_part = header.substr(semi + 1);
    constexpr std::string_view kKindKey = "kind=";
    if (!kind_part.starts_with(kKindKey))
        throw ParseError(header_at + semi + 1, "expected 'kind=' after ';'");
    std::string_view kind_text = kind_part.substr(kKindKey.size());
    GraphKind kind;
    if (kind_text == "path") kind = GraphKind::path;
    else if (kind_text == "cycle") kind = GraphKind::cycle;
    else
        throw ParseError(header_at + semi + 1 + kKindKey.size(),
                         "kind must be 'path' or 'cycle'");

    std::size_t labels_at = 0;
    std::string_view labels_line = next_line(labels_at);
    if (labels_line.empty()) throw ParseError(labels_at, "missing labels line");

    std::size_t extra_at = 0;
    if (!next_line(extra_at).empty())
        throw ParseError(extra_at, "unexpected extra line after labels");

    std::vector<GroupElement> labels = parse_labels(group, labels_line, labels_at);
    return GraphLabeling(std::move(group), kind, std::move(labels));
}

}  // namespace cordial
