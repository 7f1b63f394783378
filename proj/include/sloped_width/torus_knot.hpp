#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include "sloped_width/decomposition.hpp"
#include "sloped_width/slope.hpp"
#include "sloped_width/width.hpp"

namespace sloped_width {

enum class SurgeryClass { Lens, Reducible, SeifertFibered, Meridian, Closed };

inline std::string_view surgery_class_name(SurgeryClass c) {
    switch (c) {
        case SurgeryClass::Lens: return "Lens";
        case SurgeryClass::Reducible: return "Reducible";
        case SurgeryClass::SeifertFibered: return "SeifertFibered";
        case SurgeryClass::Meridian: return "Meridian";
        case SurgeryClass::Closed: return "Closed";
    }
    return "?";
}

/**
 * Result of classifying one surgery slope on a torus-knot exterior:
 * the class of the filled manifold, the slope invariant delta (for
 * rational slopes), the exterior's width at that slope, a description of
 * the filled manifold with its width, and a decomposition realizing the
 * width.
 */
struct SurgeryClassification {
    SurgeryClass surgery_class = SurgeryClass::Closed;
    std::optional<long long> delta;
    Width width;
    std::optional<std::string> filled_manifold;
    std::optional<Width> filled_width;
    Decomposition witness;
};

/**
 * Complete width classification of the (p,q) torus-knot exterior at one
 * slope.
 *
 * Rational r/s with delta = |pqr+s|:
 *   delta = 1: width {4}, the filling is the lens space L(|q|, p s^2);
 *   delta = 0: width {4,4}, the filling is L(r,s) # L(s,r), split along
 *              the capped-off cabling annulus;
 *   otherwise: width {7}, the filling is a Seifert fibered space over
 *              the sphere with three exceptional fibers, of filled
 *              width {5} via the capped genus-2 surface. The witness is
 *              the once-stabilized genus-2 splitting, so it carries the
 *              stabilized flag.
 * The meridian has width {4} and fills back to S^3; the closed width is
 * {5} via the genus-2 Heegaard surface (torus knots are tunnel number
 * one).
 */
inline SurgeryClassification classify(long long p, long long q, const Slope& slope) {
    if (!is_torus_knot_pair(p, q))
        throw std::invalid_argument("classify: (p,q) is not a nontrivial torus-knot pair");

    SurgeryClassification out;
    switch (slope.kind()) {
        case Slope::Kind::Closed:
            out.surgery_class = SurgeryClass::Closed;
            out.width = Width{5};
            out.witness = {Slope::closed(), {Surface{{2, 0}}}, {}, false};
            return out;
        case Slope::Kind::Meridian:
            out.surgery_class = SurgeryClass::Meridian;
            out.width = Width{4};
            out.filled_manifold = "S³";
            out.witness = {Slope::meridian(), {Surface{{1, 2}}}, {}, false};
            return out;
        case Slope::Kind::Rational: break;
    }

    const long long r = slope.numerator();
    const long long s = slope.denominator();
    const long long delta = torus_knot_delta(p, q, slope);
    out.delta = delta;
    if (delta == 1) {
        out.surgery_class = SurgeryClass::Lens;
        out.width = Width{4};
        out.filled_manifold =
            "L(" + std::to_string(q < 0 ? -q : q) + ", " + std::to_string(p * s * s) + ")";
        out.filled_width = Width{2};
        out.witness = {slope, {Surface{{1, 2}}}, {}, false};
    } else if (delta == 0) {
        out.surgery_class = SurgeryClass::Reducible;
        out.width = Width{4, 4};
        out.filled_manifold = "L(" + std::to_string(r) + "," + std::to_string(s) + ") # L(" +
                              std::to_string(s) + "," + std::to_string(r) + ")";
        out.filled_width = Width{2, 2};
        out.witness = {slope, {Surface{{1, 2}}, Surface{{1, 2}}}, {Surface{{0, 2}}}, false};
    } else {
        out.surgery_class = SurgeryClass::SeifertFibered;
        out.width = Width{7};
        out.filled_manifold = "SFS(S²; 3 exceptional fibers)";
        // The filled splitting is the capped-off genus-2 Heegaard
        // surface, of complexity 3*2 - 1 = 5. No closed width can
        // contain a 4.
        out.filled_width = Width{5};
        out.witness = {slope, {Surface{{2, 2}}}, {}, true};
    }
    return out;
}

struct SharpnessWitness {
    Slope slope;
    Width width;
};

/// Slopes realizing both ends of the closed-width bounds
/// ceil(2/3 x {5}) = {4} and {5} +_1 2 = {7}.
struct SharpnessReport {
    SharpnessWitness lower;
    SharpnessWitness upper;
    bool lower_tight = false;
    bool upper_tight = false;
};

/**
 * Searches slopes with |r|, s bounded by |pq|+1 for one of width {4}
 * (delta = 1) and one of width {7} (delta not 0 or 1), and confirms that
 * those widths are exactly the two bounds computed from the closed width
 * {5}. Witnesses always exist: delta(0/1) = 1, and delta(1/1) = |pq|+1
 * is at least 7.
 */
inline SharpnessReport verify_bounds_sharpness(long long p, long long q) {
    if (!is_torus_knot_pair(p, q))
        throw std::invalid_argument("verify_bounds_sharpness: invalid torus-knot pair");

    const long long pq = p * q < 0 ? -(p * q) : p * q;
    const long long bound = pq + 1;
    std::optional<Slope> lower, upper;
    for (long long s = 1; s <= bound && (!lower || !upper); ++s) {
        for (long long step = 0; step <= 2 * bound && (!lower || !upper); ++step) {
            // r runs 0, 1, -1, 2, -2, ...
            long long r = (step + 1) / 2 * (step % 2 == 1 ? 1 : -1);
            if (std::gcd(r < 0 ? -r : r, s) != 1) continue;
            long long delta = torus_knot_delta(p, q, Slope::rational(r, s));
            if (delta == 1 && !lower) lower = Slope::rational(r, s);
            if (delta != 0 && delta != 1 && !upper) upper = Slope::rational(r, s);
        }
    }

    SharpnessReport report;
    const Width closed_width = classify(p, q, Slope::closed()).width;
    report.lower = {*lower, classify(p, q, *lower).width};
    report.upper = {*upper, classify(p, q, *upper).width};
    report.lower_tight = report.lower.width == ceil(scale(Rational(2, 3), closed_width));
    report.upper_tight = report.upper.width == add_at(closed_width, 1, 2);
    return report;
}

}  // namespace sloped_width
