#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "sloped_width/slope.hpp"
#include "sloped_width/width.hpp"

namespace sloped_width {

enum class ConclusionTag {
    Unknot,
    TwoBridge,
    SlopeMustBeMeridian,
    EssentialTorusInExterior,
    EssentialAnnulusAndFilledConnectSumOfLensSpaces,
    ClosedEssentialSurface,
    FilledHaken,
    FilledConnectSumTwoLensSpaces,
    InconsistentForKnotExterior,
};

inline std::string_view conclusion_tag_name(ConclusionTag tag) {
    switch (tag) {
        case ConclusionTag::Unknot: return "Unknot";
        case ConclusionTag::TwoBridge: return "TwoBridge";
        case ConclusionTag::SlopeMustBeMeridian: return "SlopeMustBeMeridian";
        case ConclusionTag::EssentialTorusInExterior: return "EssentialTorusInExterior";
        case ConclusionTag::EssentialAnnulusAndFilledConnectSumOfLensSpaces:
            return "EssentialAnnulusAndFilledConnectSumOfLensSpaces";
        case ConclusionTag::ClosedEssentialSurface: return "ClosedEssentialSurface";
        case ConclusionTag::FilledHaken: return "FilledHaken";
        case ConclusionTag::FilledConnectSumTwoLensSpaces:
            return "FilledConnectSumTwoLensSpaces";
        case ConclusionTag::InconsistentForKnotExterior:
            return "InconsistentForKnotExterior";
    }
    return "?";
}

/// One deduction: the rule that fired and the alternatives it leaves
/// open. A single-tag group is a definite conclusion; the alternatives
/// of a multi-tag group are never flattened into separate facts.
struct ConclusionGroup {
    std::string rule;
    std::vector<ConclusionTag> disjunction;

    friend bool operator==(const ConclusionGroup&, const ConclusionGroup&) = default;
};

/**
 * Width-restriction rules for a knot exterior in S^3, applied in order:
 *
 *  R1  width contains 1: the knot is the unknot (suppresses the rest;
 *      every other rule presupposes a nontrivial knot).
 *  R2  width contains 0: inconsistent, a thin level would be an
 *      essential sphere (suppresses the rest).
 *  R3  width = {3}: two-bridge knot; if the slope is not the meridian
 *      the slope conflicts and is reported.
 *  R4  width contains a 3 without being {3}, or is below {3}: either the
 *      exterior contains an essential torus, or it contains an essential
 *      annulus and the filled manifold is a connected sum of two lens
 *      spaces.
 *  R5  a single planar Heegaard surface forces the meridian.
 *  R6  two or more thick levels at a rational slope: a closed essential
 *      surface in the exterior, a Haken filling, or a filling that is a
 *      connected sum of two lens spaces.
 */
inline std::vector<ConclusionGroup> deduce(const Width& width, const Slope& slope,
                                           bool single_planar) {
    std::vector<ConclusionGroup> out;
    if (width.contains(1)) {
        out.push_back({"contains-one-unknot", {ConclusionTag::Unknot}});
        return out;
    }
    if (width.contains(0)) {
        out.push_back(
            {"contains-zero-essential-sphere", {ConclusionTag::InconsistentForKnotExterior}});
        return out;
    }
    const Width three{3};
    if (width == three) {
        out.push_back({"width-three-two-bridge", {ConclusionTag::TwoBridge}});
        if (!slope.is_meridian())
            out.push_back(
                {"width-three-forces-meridian", {ConclusionTag::SlopeMustBeMeridian}});
    }
    if ((width.contains(3) && width != three) || width < three)
        out.push_back({"low-complexity-thin-levels",
                       {ConclusionTag::EssentialTorusInExterior,
                        ConclusionTag::EssentialAnnulusAndFilledConnectSumOfLensSpaces}});
    if (single_planar && !slope.is_meridian())
        out.push_back(
            {"planar-heegaard-forces-meridian", {ConclusionTag::SlopeMustBeMeridian}});
    if (width.size() >= 2 && slope.is_rational())
        out.push_back({"multiple-thick-levels-trichotomy",
                       {ConclusionTag::ClosedEssentialSurface, ConclusionTag::FilledHaken,
                        ConclusionTag::FilledConnectSumTwoLensSpaces}});
    return out;
}

struct Theorem2Bounds {
    bool lower_ok;
    bool upper_ok;
};

/// Checks ceil(2/3 x closed) <= sloped <= closed +_1 2 in the width
/// order.
inline Theorem2Bounds check_theorem2_bounds(const Width& closed_width,
                                            const Width& sloped_width) {
    if (closed_width.empty() || sloped_width.empty())
        throw std::invalid_argument("check_theorem2_bounds: widths must be non-empty");
    Width lower = ceil(scale(Rational(2, 3), closed_width));
    Width upper = add_at(closed_width, 1, 2);
    return {lower <= sloped_width, sloped_width <= upper};
}

/// Upper width bound {3g+1} from a genus-g Heegaard splitting,
/// stabilized once along the boundary.
inline Width genus_width_bound(long long genus) {
    if (genus < 0) throw std::invalid_argument("genus_width_bound: genus must be non-negative");
    return Width{3 * genus + 1};
}

enum class Honesty { Honest, Unknown };

/// A drop in Heegaard genus under filling certifies an honest slope; the
/// meridian of a knot in S^3 is always honest. The criterion is
/// one-directional, so everything else is Unknown.
inline Honesty honest_by_genus_drop(long long genus_before, long long genus_filled,
                                    const Slope& slope) {
    if (genus_before < 0 || genus_filled < 0)
        throw std::invalid_argument("honest_by_genus_drop: genera must be non-negative");
    if (slope.is_closed())
        throw std::domain_error("honest_by_genus_drop: honesty concerns sloped decompositions");
    if (slope.is_meridian()) return Honesty::Honest;
    if (genus_filled < genus_before) return Honesty::Honest;
    return Honesty::Unknown;
}

}  // namespace sloped_width
