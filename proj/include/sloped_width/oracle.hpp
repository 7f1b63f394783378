#pragma once

#include <stdexcept>
#include <vector>

#include "sloped_width/decomposition.hpp"
#include "sloped_width/surface.hpp"
#include "sloped_width/width.hpp"

namespace sloped_width {

// Bounds for the brute-force enumerators backing the property suites.
// Small by design: the defaults keep every sweep under a few seconds.
struct EnumerationBudget {
    int max_genus = 5;
    int max_boundary = 8;
    long long max_entry = 6;
    int max_length = 3;
    int max_thick = 3;
};

/// All (genus, boundary) pairs within the bounds, in ascending
/// lexicographic order.
inline std::vector<SurfaceComponent> enumerate_components(int max_genus, int max_boundary) {
    if (max_genus < 0 || max_boundary < 0)
        throw std::invalid_argument("enumerate_components: bounds must be non-negative");
    std::vector<SurfaceComponent> out;
    out.reserve(static_cast<std::size_t>(max_genus + 1) * (max_boundary + 1));
    for (int g = 0; g <= max_genus; ++g)
        for (int b = 0; b <= max_boundary; ++b) out.emplace_back(g, b);
    return out;
}

/// All canonical widths with entries in [0, max_entry] and length in
/// [1, max_length], ordered by length and then lexicographically.
inline std::vector<Width> enumerate_widths(long long max_entry, int max_length) {
    if (max_entry < 1 || max_length < 1)
        throw std::invalid_argument("enumerate_widths: bounds must be at least 1");
    std::vector<Width> out;
    for (int len = 1; len <= max_length; ++len) {
        std::vector<long long> stack;
        auto rec = [&](auto&& self, long long cap) -> void {
            if (static_cast<int>(stack.size()) == len) {
                out.push_back(Width(stack));
                return;
            }
            for (long long e = 0; e <= cap; ++e) {
                stack.push_back(e);
                self(self, e);
                stack.pop_back();
            }
        };
        rec(rec, max_entry);
    }
    return out;
}

/**
 * All valid decompositions at the given slope with at most max_thick
 * thick levels, every surface a single component within the genus and
 * boundary bounds and of complexity at most max_entry. Surfaces are
 * chosen independently and the result filtered through validate(), with
 * the adjacency rules used to prune partial assemblies. Deterministic
 * order: by number of thick levels, then lexicographically in the
 * interleaved surface sequence.
 */
inline std::vector<Decomposition> enumerate_decompositions(const EnumerationBudget& budget,
                                                           const Slope& slope) {
    if (budget.max_genus < 0 || budget.max_boundary < 0 || budget.max_entry < 0 ||
        budget.max_thick < 1)
        throw std::invalid_argument("enumerate_decompositions: invalid budget");

    std::vector<SurfaceComponent> pool;
    for (const auto& c : enumerate_components(budget.max_genus, budget.max_boundary)) {
        if (c.complexity() > budget.max_entry) continue;
        if (slope.is_closed() && c.boundary() > 0) continue;
        pool.push_back(c);
    }

    auto dominates = [](const SurfaceComponent& s, const SurfaceComponent& f) {
        return f.complexity() <= s.complexity() && f.boundary() <= s.boundary() &&
               f.genus() <= s.genus() && f.capped_complexity() <= s.capped_complexity();
    };

    std::vector<Decomposition> out;
    std::vector<SurfaceComponent> seq;  // interleaved S_1, F_1, S_2, ...
    auto emit = [&]() {
        Decomposition d;
        d.slope = slope;
        for (std::size_t i = 0; i < seq.size(); ++i)
            (i % 2 == 0 ? d.thick : d.thin).push_back(Surface{seq[i]});
        if (validate(d).ok()) out.push_back(std::move(d));
    };
    auto rec = [&](auto&& self, int k) -> void {
        if (static_cast<int>(seq.size()) == 2 * k - 1) {
            emit();
            return;
        }
        const bool is_thin = seq.size() % 2 == 1;
        for (const auto& c : pool) {
            if (is_thin && !dominates(seq.back(), c)) continue;        // F_i under S_i
            if (!is_thin && !seq.empty() && !dominates(c, seq.back())) continue;  // F_i under S_{i+1}
            seq.push_back(c);
            self(self, k);
            seq.pop_back();
        }
    };
    for (int k = 1; k <= budget.max_thick; ++k) {
        seq.clear();
        rec(rec, k);
    }
    return out;
}

}  // namespace sloped_width
