#pragma once

#include <algorithm>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "sloped_width/slope.hpp"
#include "sloped_width/surface.hpp"
#include "sloped_width/width.hpp"

namespace sloped_width {

/**
 * An alpha-sloped generalized Heegaard splitting, reduced to its
 * combinatorial shadow: the slope, the alternating thick surfaces
 * S_1..S_k and thin surfaces F_1..F_{k-1} (F_i sits between S_i and
 * S_{i+1}), and a provenance bit recording that the decomposition was
 * produced by alpha-stabilization (a "dishonest" decomposition).
 *
 * A closed slope means every surface is closed; any other slope requires
 * at least one surface with boundary.
 */
struct Decomposition {
    Slope slope = Slope::closed();
    std::vector<Surface> thick;
    std::vector<Surface> thin;
    bool stabilized = false;

    friend bool operator==(const Decomposition&, const Decomposition&) = default;
};

struct Violation {
    std::string rule;
    std::string where;
    std::string message;
};

struct ValidationReport {
    std::vector<Violation> violations;         // break the data model
    std::vector<Violation> strict_violations;  // break thin-position necessary conditions
    std::vector<Violation> warnings;           // not verifiable combinatorially

    bool ok() const { return violations.empty(); }
    bool strict_ok() const { return violations.empty() && strict_violations.empty(); }
};

namespace detail {

inline std::string thick_label(std::size_t i) { return "thick[" + std::to_string(i + 1) + "]"; }
inline std::string thin_label(std::size_t i) { return "thin[" + std::to_string(i + 1) + "]"; }

// In the interleaved order S_1, F_1, S_2, ..., S_k, returns the surface
// at 0-based position `pos`.
inline const Surface& interleaved(const Decomposition& d, std::size_t pos) {
    return pos % 2 == 0 ? d.thick[pos / 2] : d.thin[pos / 2];
}

}  // namespace detail

/**
 * Checks the structural invariants of a decomposition.
 *
 * Hard rules:
 *  - k >= 1 thick surfaces with exactly k-1 thin surfaces between them;
 *  - slope consistency: a closed decomposition has only closed surfaces,
 *    a sloped one has at least one surface with boundary;
 *  - the surfaces with boundary occupy a contiguous block of the
 *    interleaved order (a closed thin surface cannot have boundary on
 *    both sides);
 *  - each thin surface is dominated by both adjacent thick surfaces in
 *    complexity, boundary count, total genus, and capped complexity
 *    (the last two so that Dehn filling again yields a decomposition).
 *
 * With `strict`, thin-position necessary conditions are also reported:
 * thin complexity must drop strictly below both neighbours, and sphere
 * thin components are flagged (they would have to be essential, which
 * the combinatorial shadow cannot certify).
 */
inline ValidationReport validate(const Decomposition& d, bool strict = false) {
    ValidationReport report;
    const std::size_t k = d.thick.size();
    if (k < 1) {
        report.violations.push_back(
            {"structure", "decomposition", "a decomposition needs at least one thick surface"});
        return report;
    }
    if (d.thin.size() != k - 1) {
        report.violations.push_back(
            {"structure", "decomposition",
             "expected " + std::to_string(k - 1) + " thin surfaces, found " +
                 std::to_string(d.thin.size())});
        return report;
    }

    const std::size_t positions = 2 * k - 1;

    if (d.slope.is_closed()) {
        for (std::size_t pos = 0; pos < positions; ++pos) {
            const Surface& s = detail::interleaved(d, pos);
            if (s.total_boundary() > 0) {
                std::string where =
                    pos % 2 == 0 ? detail::thick_label(pos / 2) : detail::thin_label(pos / 2);
                report.violations.push_back(
                    {"slope-consistency", where,
                     "closed decomposition contains a surface with boundary"});
            }
        }
    } else {
        bool any_boundary = false;
        for (std::size_t pos = 0; pos < positions; ++pos)
            if (detail::interleaved(d, pos).total_boundary() > 0) any_boundary = true;
        if (!any_boundary)
            report.violations.push_back(
                {"slope-consistency", "decomposition",
                 "a sloped decomposition needs at least one surface with boundary"});
    }

    // Contiguity of the boundary-carrying block.
    std::size_t first = positions, last = 0, count = 0;
    for (std::size_t pos = 0; pos < positions; ++pos) {
        if (detail::interleaved(d, pos).total_boundary() > 0) {
            first = std::min(first, pos);
            last = std::max(last, pos);
            ++count;
        }
    }
    if (count > 0 && last - first + 1 != count)
        report.violations.push_back(
            {"interval-condition", "decomposition",
             "surfaces with boundary do not form a contiguous block"});

    for (std::size_t i = 0; i + 1 < k; ++i) {
        const Surface& f = d.thin[i];
        const Surface* sides[2] = {&d.thick[i], &d.thick[i + 1]};
        for (int side = 0; side < 2; ++side) {
            const Surface& s = *sides[side];
            std::string where =
                detail::thin_label(i) + "/" + detail::thick_label(side == 0 ? i : i + 1);
            if (f.complexity() > s.complexity())
                report.violations.push_back(
                    {"adjacency-complexity", where,
                     "thin complexity " + std::to_string(f.complexity()) + " exceeds " +
                         std::to_string(s.complexity())});
            if (f.total_boundary() > s.total_boundary())
                report.violations.push_back(
                    {"adjacency-boundary", where,
                     "thin boundary count " + std::to_string(f.total_boundary()) + " exceeds " +
                         std::to_string(s.total_boundary())});
            if (f.total_genus() > s.total_genus())
                report.violations.push_back(
                    {"adjacency-genus", where,
                     "thin genus " + std::to_string(f.total_genus()) + " exceeds " +
                         std::to_string(s.total_genus())});
            if (f.capped_complexity() > s.capped_complexity())
                report.violations.push_back(
                    {"adjacency-capped-complexity", where,
                     "capped thin complexity " + std::to_string(f.capped_complexity()) +
                         " exceeds " + std::to_string(s.capped_complexity())});
            if (strict && f.complexity() == s.complexity())
                report.strict_violations.push_back(
                    {"strict-thin-complexity", where,
                     "thin complexity must drop strictly below both thick neighbours"});
        }
        if (strict && f.has_sphere())
            report.warnings.push_back(
                {"sphere-thin-component", detail::thin_label(i),
                 "a sphere thin component must be essential, which cannot be verified here"});
    }

    return report;
}

/// Multiset of thick-surface complexities. The decomposition must be
/// valid.
inline Width width_of(const Decomposition& d) {
    auto report = validate(d);
    if (!report.ok())
        throw std::invalid_argument("width_of: invalid decomposition (" +
                                    report.violations.front().rule + ")");
    std::vector<long long> entries;
    entries.reserve(d.thick.size());
    for (const Surface& s : d.thick) entries.push_back(s.complexity());
    return Width(std::move(entries));
}

/**
 * Alpha-stabilization: attaches a sloped bead and a tunnel to one thick
 * surface, which gains two boundary circles on the chosen component and
 * complexity exactly 2.
 *
 * On a closed decomposition the target must be an end (index 1 or k);
 * the order of levels is reversed if needed so the stabilized surface
 * ends up at index 1, next to the boundary torus. On a sloped
 * decomposition alpha must equal the existing slope and the target may
 * be any thick surface that keeps the boundary block contiguous.
 *
 * The chosen component must not be a sphere: a compression body with
 * sphere boundary cannot contain the boundary torus, and the complexity
 * increment would degenerate to 1.
 */
inline Decomposition alpha_stabilize(const Decomposition& d, const Slope& alpha,
                                     std::size_t thick_index, std::size_t component_index = 0) {
    if (alpha.is_closed())
        throw std::domain_error("alpha_stabilize: slope must be rational or the meridian");
    if (!validate(d).ok())
        throw std::invalid_argument("alpha_stabilize: decomposition is not valid");
    const std::size_t k = d.thick.size();
    if (thick_index < 1 || thick_index > k)
        throw std::invalid_argument("alpha_stabilize: thick index out of range");

    Decomposition out = d;
    if (d.slope.is_closed()) {
        if (thick_index != 1 && thick_index != k)
            throw std::domain_error(
                "alpha_stabilize: a closed decomposition is stabilized at an end, next to the "
                "boundary torus");
        if (thick_index == k && k > 1) {
            std::reverse(out.thick.begin(), out.thick.end());
            std::reverse(out.thin.begin(), out.thin.end());
            thick_index = 1;
        }
    } else if (!(alpha == d.slope)) {
        throw std::domain_error("alpha_stabilize: slope must match the decomposition slope");
    }

    std::vector<SurfaceComponent> comps = out.thick[thick_index - 1].components();
    if (component_index >= comps.size())
        throw std::invalid_argument("alpha_stabilize: component index out of range");
    const SurfaceComponent& target = comps[component_index];
    if (target.is_sphere())
        throw std::domain_error("alpha_stabilize: cannot stabilize a sphere component");
    comps[component_index] = SurfaceComponent(target.genus(), target.boundary() + 2);
    out.thick[thick_index - 1] = Surface(std::move(comps));
    out.slope = alpha;
    out.stabilized = true;

    auto post = validate(out);
    if (!post.ok())
        throw std::domain_error("alpha_stabilize: result violates " +
                                post.violations.front().rule);
    return out;
}

/**
 * Closes every surface by tubing pairs of boundary circles along the
 * boundary torus, component by component: (g, b) becomes (g + b/2, 0).
 * Every component needs an even boundary count; circles are never paired
 * across components (merge components first with tube_merge). Each thick
 * complexity moves from 3g + b - 1 to 3g + (3/2)b - 1.
 */
inline Decomposition tube_to_closed(const Decomposition& d) {
    if (!validate(d).ok())
        throw std::invalid_argument("tube_to_closed: decomposition is not valid");
    if (d.slope.is_closed())
        throw std::domain_error("tube_to_closed: decomposition is already closed");

    auto close_surface = [](const Surface& s) {
        std::vector<SurfaceComponent> out;
        out.reserve(s.size());
        for (const auto& c : s.components()) {
            if (c.boundary() % 2 != 0)
                throw std::domain_error(
                    "tube_to_closed: component has an odd boundary count; merge components first");
            out.emplace_back(c.genus() + c.boundary() / 2, 0);
        }
        return Surface(std::move(out));
    };

    Decomposition out = d;
    for (Surface& s : out.thick) s = close_surface(s);
    for (Surface& s : out.thin) s = close_surface(s);
    out.slope = Slope::closed();
    return out;
}

/// Dehn filling along the decomposition's slope: caps every boundary
/// circle of every surface with a disk, giving the induced splitting of
/// the filled manifold. The identity on closed decompositions.
inline Decomposition fill(const Decomposition& d) {
    if (d.slope.is_closed()) return d;
    Decomposition out = d;
    for (Surface& s : out.thick) s = cap_off(s);
    for (Surface& s : out.thin) s = cap_off(s);
    out.slope = Slope::closed();
    return out;
}

/// True when the decomposition is a single Heegaard surface all of whose
/// components are planar.
inline bool is_planar_heegaard(const Decomposition& d) {
    return d.thick.size() == 1 && d.thin.empty() && d.thick.front().all_planar();
}

}  // namespace sloped_width
