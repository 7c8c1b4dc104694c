#pragma once

// Built-in table of hand-checked cordial labelings. These are the seeds the
// constructions start from for even-order groups with an element of order
// greater than two, plus the anchors of the order-8 elementary 2-group path
// schedule and two small reference cycles.
//
// The table text is embedded so the library stays header-only; the same bytes
// are committed at data/builtin_labelings.txt and a test compares the two.

#include <map>
#include <stdexcept>
#include <string>
#include <string_view>

#include "cordial/labeling.hpp"

namespace cordial {

inline std::string_view builtin_labelings_text() {
    // Keep byte-identical with data/builtin_labelings.txt.
    static constexpr std::string_view kText =
        R"(# Hand-checked cordial labelings used as construction seeds and test anchors.
# Format: [name], then the two-line labeling text (header, labels).

[small-a]
group=2x4;kind=path
00-12-10-01-02-03-11-13

[small-b]
group=2x6;kind=path
03-00-15-13-11-05-02-12-14-04-01-10

[small-c]
group=2x8;kind=path
00-14-16-07-04-15-12-13-11-02-10-06-03-05-01-17

[small-d]
group=4x4;kind=path
00-20-23-03-12-11-33-01-13-32-21-10-22-30-31-02

[small-e]
group=3x6;kind=path
00-25-21-01-02-22-12-15-04-11-24-20-10-13-05-03-23-14

[small-f]
group=2x10;kind=path
00-11-07-05-12-15-14-06-18-16-09-01-04-19-17-02-10-13-03-08

[m-p6]
group=2x2x2;kind=path
100-000-001-010-111-101

[m-p7]
group=2x2x2;kind=path
100-000-001-010-111-101-011

[m-p10]
group=2x2x2;kind=path
000-111-001-010-110-011-011-100-101-111

[m-p14]
group=2x2x2;kind=path
000-111-001-010-110-011-011-100-101-111-001-010-110-100

[m-p15]
group=2x2x2;kind=path
000-111-001-010-110-011-011-100-101-111-001-010-110-100-101

[m-p16]
group=2x2x2;kind=path
000-000-111-001-010-110-011-011-100-101-111-001-010-110-100-101

[m-p24]
group=2x2x2;kind=path
000-001-101-000-111-001-010-110-011-011-100-101-111-001-010-110-100-100-011-010-111-101-110-000

[seed-c3]
group=3;kind=cycle
0-1-2

[puffed-c9]
group=3x3;kind=cycle
00-12-01-10-22-11-20-02-21

[doubled-p16]
group=2x4;kind=path
10-00-01-11-12-12-03-03-10-00-01-11-02-02-13-13
)";
    return kText;
}

// Name -> labeling, parsed from the embedded text and fully re-verified on
// first access. A verification failure means the table itself was edited
// badly, so it throws rather than returning a partial map.
inline const std::map<std::string, GraphLabeling, std::less<>>& builtin_labelings() {
    static const std::map<std::string, GraphLabeling, std::less<>> table = [] {
        std::map<std::string, GraphLabeling, std::less<>> out;
        std::string_view text = builtin_labelings_text();
        std::string name;
        std::string body;
        auto flush = [&] {
            if (name.empty()) return;
            GraphLabeling lab = parse_labeling(body);
            if (!check_cordial(lab).cordial)
                throw std::runtime_error("builtin labeling table corrupted: '" + name +
                                         "' is not cordial");
            if (!out.emplace(name, std::move(lab)).second)
                throw std::runtime_error("builtin labeling table corrupted: duplicate name '" +
                                         name + "'");
            name.clear();
            body.clear();
        };
        std::size_t pos = 0;
        while (pos <= text.size()) {
            std::size_t end = text.find('\n', pos);
            if (end == std::string_view::npos) end = text.size();
            std::string_view line = text.substr(pos, end - pos);
            pos = end + 1;
            if (!line.empty() && line.front() == '[') {
                flush();
                if (line.back() != ']')
                    throw std::runtime_error("builtin labeling table corrupted: bad name line " +
                                             std::string(line));
                name = std::string(line.substr(1, line.size() - 2));
            } else if (!line.empty() && line.front() != '#') {
                body += line;
                body += '\n';
            }
            if (end == text.size()) break;
        }
        flush();
        return out;
    }();
    return table;
}

inline const GraphLabeling& hardcoded_labeling(std::string_view name) {
    const auto& table = builtin_labelings();
    auto it = table.find(name);
    if (it == table.end()) {
        std::string names;
        for (const auto& [n, lab] : table) {
            if (!names.empty()) names += ", ";
            names += n;
        }
        throw std::out_of_range("no builtin labeling named '" + std::string(name) +
                                "' (have: " + names + ")");
    }
    return it->second;
}

}  // namespace cordial
