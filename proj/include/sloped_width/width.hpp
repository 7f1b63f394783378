#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "sloped_width/detail/parse.hpp"
#include "sloped_width/rational.hpp"

namespace sloped_width {

/**
 * Width of a decomposition: the multiset of thick-surface complexities.
 *
 * Entries are stored in non-increasing order and widths are compared
 * lexicographically on that order; when one sequence is a proper prefix
 * of the other, the shorter width is the smaller. The empty width exists
 * only as an algebraic identity element and never describes a realized
 * decomposition.
 */
class Width {
public:
    Width() = default;
    Width(std::initializer_list<long long> entries) : entries_(entries) { canonicalize(); }
    explicit Width(std::vector<long long> entries) : entries_(std::move(entries)) {
        canonicalize();
    }

    const std::vector<long long>& entries() const { return entries_; }
    std::size_t size() const { return entries_.size(); }
    bool empty() const { return entries_.empty(); }

    bool contains(long long value) const {
        return std::find(entries_.begin(), entries_.end(), value) != entries_.end();
    }

    std::string to_string() const {
        std::string out;
        for (std::size_t i = 0; i < entries_.size(); ++i) {
            if (i) out += ',';
            out += std::to_string(entries_[i]);
        }
        return out;
    }

    friend bool operator==(const Width&, const Width&) = default;
    friend std::strong_ordering operator<=>(const Width& a, const Width& b) {
        return std::lexicographical_compare_three_way(a.entries_.begin(), a.entries_.end(),
                                                      b.entries_.begin(), b.entries_.end());
    }

private:
    void canonicalize() {
        for (long long e : entries_)
            if (e < 0) throw std::invalid_argument("Width: entries must be non-negative");
        std::sort(entries_.begin(), entries_.end(), std::greater<>());
    }

    std::vector<long long> entries_;
};

inline std::strong_ordering compare(const Width& a, const Width& b) { return a <=> b; }

/// Entrywise sum of two widths of equal length, taken positionally on
/// the canonical representations.
inline Width add_pointwise(const Width& a, const Width& b) {
    if (a.size() != b.size())
        throw std::invalid_argument("add_pointwise: widths must have equal length");
    std::vector<long long> out = a.entries();
    for (std::size_t i = 0; i < out.size(); ++i) out[i] += b.entries()[i];
    return Width(std::move(out));
}

/// Adds m to the entry at `position` (1-based, counting from the largest
/// entry) and re-canonicalizes.
inline Width add_at(const Width& a, std::size_t position, long long m) {
    if (position < 1 || position > a.size())
        throw std::invalid_argument("add_at: position out of range");
    std::vector<long long> out = a.entries();
    out[position - 1] += m;
    if (out[position - 1] < 0)
        throw std::domain_error("add_at: entry would become negative");
    return Width(std::move(out));
}

// Rational multiples of a width exist only transiently between scale()
// and ceil(); they are never a persisted width.
using ScaledWidth = std::vector<Rational>;

inline ScaledWidth scale(const Rational& factor, const Width& w) {
    if (factor < Rational(0)) throw std::domain_error("scale: factor must be non-negative");
    ScaledWidth out;
    out.reserve(w.size());
    for (long long e : w.entries()) out.push_back(factor * Rational(e));
    return out;
}

inline Width ceil(const ScaledWidth& m) {
    std::vector<long long> out;
    out.reserve(m.size());
    for (const Rational& r : m) out.push_back(r.ceil());
    return Width(std::move(out));
}

/// Parses `4,4` or `{4,4}`; canonicalizes on the way in.
inline Width parse_width(std::string_view text) {
    if (text.size() >= 2 && text.front() == '{' && text.back() == '}')
        text = text.substr(1, text.size() - 2);
    if (text.empty()) throw std::invalid_argument("malformed width: empty");
    std::vector<long long> entries;
    std::size_t start = 0;
    while (true) {
        std::size_t comma = text.find(',', start);
        std::string_view piece =
            comma == std::string_view::npos ? text.substr(start) : text.substr(start, comma - start);
        entries.push_back(detail::parse_integer(piece, "width entry"));
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
    return Width(std::move(entries));
}

}  // namespace sloped_width
