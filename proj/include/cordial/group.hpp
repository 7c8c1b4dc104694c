#pragma once

// Finite abelian groups presented as explicit products of cyclic factors.
// The presentation is part of the identity: Z2 x Z4 and Z4 x Z2 are distinct
// GroupSpecs even though they are isomorphic, because every labeling,
// construction and text format in this library is written against a concrete
// factor list.

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace cordial {

// Error for malformed textual input (group specs, labelings). Carries the
// byte offset of the offending character so CLI users get a position.
class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t position, const std::string& message)
        : std::runtime_error("parse error at position " +
                             std::to_string(position) + ": " + message),
          position_(position) {}

    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

// One group element: a residue vector, residues[i] in Z_{factors[i]}.
struct GroupElement {
    std::vector<int> residues;

    friend bool operator==(const GroupElement&, const GroupElement&) = default;
    friend auto operator<=>(const GroupElement&, const GroupElement&) = default;
};

class GroupSpec {
public:
    // Dense count arrays and the search addition table assume desk scale.
    static constexpr std::uint64_t kMaxOrder = std::uint64_t{1} << 20;

    explicit GroupSpec(std::vector<int> factors) : factors_(std::move(factors)) {
        if (factors_.empty())
            throw std::invalid_argument("group spec needs at least one cyclic factor");
        order_ = 1;
        for (int d : factors_) {
            if (d < 2)
                throw std::invalid_argument("cyclic factor must be at least 2, got " +
                                            std::to_string(d));
            order_ *= static_cast<std::uint64_t>(d);
            if (order_ > kMaxOrder)
                throw std::invalid_argument("group order exceeds dense-indexing cap (2^20)");
        }
        // Mixed-radix weights: the last factor varies fastest, so
        // weights_[i] = product of factors_[i+1..].
        weights_.assign(factors_.size(), 1);
        for (std::size_t i = factors_.size(); i-- > 1;)
            weights_[i - 1] = weights_[i] * static_cast<std::uint64_t>(factors_[i]);
    }

    // Parses "2x4" style specs: factors >= 2 joined by 'x', no whitespace.
    static GroupSpec parse(std::string_view text) {
        if (text.empty()) throw ParseError(0, "empty group spec");
        std::vector<int> factors;
        std::size_t pos = 0;
        while (true) {
            std::size_t start = pos;
            std::uint64_t value = 0;
            while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9') {
                value = value * 10 + static_cast<std::uint64_t>(text[pos] - '0');
                if (value > kMaxOrder) throw ParseError(start, "factor too large");
                ++pos;
            }
            if (pos == start) {
                std::string what = pos < text.size()
                    ? std::string("unexpected character '") + text[pos] + "' in group spec"
                    : std::string("missing factor after 'x'");
                throw ParseError(pos, what);
            }
            if (value < 2) throw ParseError(start, "cyclic factor must be at least 2");
            factors.push_back(static_cast<int>(value));
            if (pos == text.size()) break;
            if (text[pos] != 'x')
                throw ParseError(pos, std::string("unexpected character '") + text[pos] +
                                          "' in group spec (factors are joined by 'x')");
            ++pos;
        }
        return GroupSpec(std::move(factors));
    }

    const std::vector<int>& factors() const noexcept { return factors_; }
    std::size_t rank() const noexcept { return factors_.size(); }
    std::uint64_t order() const noexcept { return order_; }

    std::string to_string() const {
        std::string out;
        for (std::size_t i = 0; i < factors_.size(); ++i) {
            if (i) out += 'x';
            out += std::to_string(factors_[i]);
        }
        return out;
    }

    friend bool operator==(const GroupSpec& a, const GroupSpec& b) {
        return a.factors_ == b.factors_;
    }

    GroupElement identity() const { return GroupElement{std::vector<int>(rank(), 0)}; }

    bool contains(const GroupElement& a) const {
        if (a.residues.size() != rank()) return false;
        for (std::size_t i = 0; i < rank(); ++i)
            if (a.residues[i] < 0 || a.residues[i] >= factors_[i]) return false;
        return true;
    }

    GroupElement add(const GroupElement& a, const GroupElement& b) const {
        require_element(a);
        require_element(b);
        GroupElement out{std::vector<int>(rank())};
        for (std::size_t i = 0; i < rank(); ++i)
            out.residues[i] = (a.residues[i] + b.residues[i]) % factors_[i];
        return out;
    }

    GroupElement negate(const GroupElement& a) const {
        require_element(a);
        GroupElement out{std::vector<int>(rank())};
        for (std::size_t i = 0; i < rank(); ++i)
            out.residues[i] = a.residues[i] == 0 ? 0 : factors_[i] - a.residues[i];
        return out;
    }

    GroupElement subtract(const GroupElement& a, const GroupElement& b) const {
        return add(a, negate(b));
    }

    // Order of a in the group: lcm over factors of d_i / gcd(d_i, r_i).
    std::uint64_t element_order(const GroupElement& a) const {
        require_element(a);
        std::uint64_t ord = 1;
        for (std::size_t i = 0; i < rank(); ++i) {
            std::uint64_t d = static_cast<std::uint64_t>(factors_[i]);
            std::uint64_t r = static_cast<std::uint64_t>(a.residues[i]);
            ord = std::lcm(ord, d / std::gcd(d, r));
        }
        return ord;
    }

    // True iff some element has order > 2, i.e. some factor exceeds 2. The
    // order-2 cyclic group reports false; callers that only care about
    // path-cordiality treat it as cordial anyway via the cyclic-group result.
    bool has_element_of_order_gt2() const {
        for (int d : factors_)
            if (d > 2) return true;
        return false;
    }

    // Dense index in lexicographic residue order, last factor fastest.
    // identity() is index 0.
    std::uint64_t index_of(const GroupElement& a) const {
        require_element(a);
        std::uint64_t idx = 0;
        for (std::size_t i = 0; i < rank(); ++i)
            idx += static_cast<std::uint64_t>(a.residues[i]) * weights_[i];
        return idx;
    }

    GroupElement element_at(std::uint64_t index) const {
        if (index >= order_)
            throw std::out_of_range("element index " + std::to_string(index) +
                                    " out of range for group of order " +
                                    std::to_string(order_));
        GroupElement out{std::vector<int>(rank())};
        for (std::size_t i = 0; i < rank(); ++i) {
            out.residues[i] = static_cast<int>(index / weights_[i]);
            index %= weights_[i];
        }
        return out;
    }

    // All elements in index order.
    std::vector<GroupElement> enumerate() const {
        std::vector<GroupElement> out;
        out.reserve(static_cast<std::size_t>(order_));
        for (std::uint64_t i = 0; i < order_; ++i) out.push_back(element_at(i));
        return out;
    }

private:
    void require_element(const GroupElement& a) const {
        if (!contains(a))
            throw std::invalid_argument("element does not belong to group " + to_string());
    }

    std::vector<int> factors_;
    std::uint64_t order_ = 1;
    std::vector<std::uint64_t> weights_;
};

}  // namespace cordial
