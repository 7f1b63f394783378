#include <catch2/catch_amalgamated.hpp>

#include <algorithm>

#include "sloped_width/decomposition.hpp"
#include "sloped_width/oracle.hpp"

using namespace sloped_width;

namespace {

Decomposition sloped(std::vector<Surface> thick, std::vector<Surface> thin,
                     Slope slope = Slope::rational(1, 6)) {
    return Decomposition{slope, std::move(thick), std::move(thin), false};
}

Decomposition closed(std::vector<Surface> thick, std::vector<Surface> thin = {}) {
    return Decomposition{Slope::closed(), std::move(thick), std::move(thin), false};
}

bool has_rule(const std::vector<Violation>& list, const std::string& rule) {
    return std::any_of(list.begin(), list.end(),
                       [&](const Violation& v) { return v.rule == rule; });
}

}  // namespace

TEST_CASE("validate accepts the basic shapes") {
    CHECK(validate(sloped({Surface{{1, 2}}}, {}, Slope::rational(3, 5))).ok());
    // Two twice-punctured tori with the cabling annulus between them.
    CHECK(validate(sloped({Surface{{1, 2}}, Surface{{1, 2}}}, {Surface{{0, 2}}})).ok());
    CHECK(validate(closed({Surface{{2, 0}}})).ok());
}

TEST_CASE("validate reports adjacency violations") {
    auto report = validate(sloped({Surface{{1, 2}}, Surface{{1, 2}}}, {Surface{{2, 2}}}));
    REQUIRE_FALSE(report.ok());
    CHECK(has_rule(report.violations, "adjacency-complexity"));  // 7 > 4
    CHECK(has_rule(report.violations, "adjacency-genus"));
}

TEST_CASE("validate reports boundary-count violations") {
    auto report = validate(sloped({Surface{{1, 2}}, Surface{{1, 2}}}, {Surface{{0, 4}}}));
    REQUIRE_FALSE(report.ok());
    CHECK(has_rule(report.violations, "adjacency-boundary"));
    CHECK_FALSE(has_rule(report.violations, "adjacency-complexity"));  // 3 <= 4
}

TEST_CASE("validate reports structure violations") {
    CHECK(has_rule(validate(Decomposition{}).violations, "structure"));
    CHECK(has_rule(validate(sloped({Surface{{1, 2}}}, {Surface{{0, 2}}})).violations,
                   "structure"));
}

TEST_CASE("validate enforces slope consistency") {
    // A sloped decomposition needs boundary somewhere.
    CHECK(has_rule(validate(sloped({Surface{{1, 0}}}, {})).violations, "slope-consistency"));
    // A closed decomposition cannot carry boundary anywhere.
    CHECK(has_rule(validate(closed({Surface{{1, 2}}})).violations, "slope-consistency"));
}

TEST_CASE("validate enforces the contiguous boundary block") {
    // Boundary on both thick surfaces with a closed thin between them.
    auto report = validate(sloped({Surface{{1, 2}}, Surface{{1, 2}}}, {Surface{{1, 0}}}));
    CHECK(has_rule(report.violations, "interval-condition"));

    // Boundary confined to the middle level is fine.
    auto mid = sloped({Surface{{2, 0}}, Surface{{1, 4}}, Surface{{2, 0}}},
                      {Surface{{1, 0}}, Surface{{1, 0}}});
    CHECK(validate(mid).ok());
}

TEST_CASE("validate catches filled-shadow violations") {
    // Genus-two closed thin against a genus-one sloped thick: fine for
    // raw complexity (5 <= 6) but capping would invert the order.
    auto d = sloped({Surface{{2, 0}}, Surface{{1, 4}}}, {Surface{{2, 0}}});
    auto report = validate(d);
    REQUIRE_FALSE(report.ok());
    CHECK(has_rule(report.violations, "adjacency-genus"));
    CHECK(has_rule(report.violations, "adjacency-capped-complexity"));
}

TEST_CASE("strict mode adds thin-position conditions") {
    auto d = sloped({Surface{{1, 2}}, Surface{{1, 2}}}, {Surface{{1, 2}}});
    CHECK(validate(d).ok());
    auto strict = validate(d, true);
    CHECK(strict.ok());
    CHECK_FALSE(strict.strict_ok());
    CHECK(has_rule(strict.strict_violations, "strict-thin-complexity"));

    auto spheres = closed({Surface{{1, 0}}, Surface{{1, 0}}}, {Surface{{0, 0}}});
    auto sphere_report = validate(spheres, true);
    CHECK(sphere_report.strict_ok());
    CHECK(has_rule(sphere_report.warnings, "sphere-thin-component"));
}

TEST_CASE("width_of") {
    CHECK(width_of(closed({Surface{{2, 0}}})) == Width{5});
    CHECK(width_of(sloped({Surface{{1, 2}}, Surface{{1, 2}}}, {Surface{{0, 2}}})) ==
          Width{4, 4});
    CHECK(width_of(closed({Surface{{0, 0}}})) == Width{0});
    CHECK_THROWS_AS(width_of(closed({Surface{{1, 2}}})), std::invalid_argument);
}

TEST_CASE("alpha_stabilize on closed decompositions") {
    auto genus2 = closed({Surface{{2, 0}}});
    auto stabilized = alpha_stabilize(genus2, Slope::rational(1, 2), 1);
    CHECK(stabilized.slope == Slope::rational(1, 2));
    CHECK(stabilized.stabilized);
    CHECK(width_of(stabilized) == Width{7});
    CHECK(stabilized.thick.front() == Surface{{2, 2}});

    CHECK(width_of(alpha_stabilize(closed({Surface{{1, 0}}}), Slope::rational(1, 2), 1)) ==
          Width{4});

    auto two_levels = closed({Surface{{1, 0}}, Surface{{1, 0}}}, {Surface{{0, 0}}});
    CHECK(width_of(alpha_stabilize(two_levels, Slope::meridian(), 1)) == Width{4, 2});
}

TEST_CASE("alpha_stabilize reverses indices to put the target first") {
    auto d = closed({Surface{{1, 0}}, Surface{{2, 0}}}, {Surface{{1, 0}}});
    auto out = alpha_stabilize(d, Slope::rational(1, 2), 2);
    CHECK(out.thick.front() == Surface{{2, 2}});
    CHECK(out.thick.back() == Surface{{1, 0}});
    CHECK(width_of(out) == Width{7, 2});  // width {5,2} bumped at its leading entry

    // An interior thick surface of a closed decomposition is not a
    // legal target.
    auto three = closed({Surface{{1, 0}}, Surface{{1, 0}}, Surface{{1, 0}}},
                        {Surface{{0, 0}}, Surface{{0, 0}}});
    CHECK_THROWS_AS(alpha_stabilize(three, Slope::rational(1, 2), 2), std::domain_error);
}

TEST_CASE("alpha_stabilize on sloped decompositions") {
    auto d = sloped({Surface{{1, 2}}, Surface{{1, 2}}}, {Surface{{0, 2}}});
    auto out = alpha_stabilize(d, d.slope, 2);
    CHECK(width_of(out) == Width{6, 4});
    CHECK(out.stabilized);

    // The stabilization slope must match the decomposition's.
    CHECK_THROWS_AS(alpha_stabilize(d, Slope::rational(2, 7), 1), std::domain_error);
}

TEST_CASE("alpha_stabilize rejections") {
    auto d = closed({Surface{{2, 0}}});
    CHECK_THROWS_AS(alpha_stabilize(d, Slope::closed(), 1), std::domain_error);
    CHECK_THROWS_AS(alpha_stabilize(d, Slope::rational(1, 2), 0), std::invalid_argument);
    CHECK_THROWS_AS(alpha_stabilize(d, Slope::rational(1, 2), 2), std::invalid_argument);
    CHECK_THROWS_AS(alpha_stabilize(closed({Surface{{0, 0}}}), Slope::rational(1, 2), 1),
                    std::domain_error);
    CHECK_THROWS_AS(alpha_stabilize(closed({Surface{{1, 2}}}), Slope::rational(1, 2), 1),
                    std::invalid_argument);  // invalid input decomposition

    // Stabilizing beyond the boundary block would tear it apart.
    auto blocked = sloped({Surface{{1, 2}}, Surface{{1, 0}}, Surface{{1, 0}}},
                          {Surface{{0, 0}}, Surface{{0, 0}}});
    REQUIRE(validate(blocked).ok());
    CHECK_THROWS_AS(alpha_stabilize(blocked, blocked.slope, 3), std::domain_error);
}

TEST_CASE("tube_to_closed") {
    CHECK(tube_to_closed(sloped({Surface{{1, 2}}}, {})) == closed({Surface{{2, 0}}}));

    // Per component: 3g + (3/2)b - 1, so each twice-punctured torus
    // closes up to complexity 5.
    auto d = sloped({Surface{{1, 2}}, Surface{{1, 2}}}, {Surface{{0, 2}}});
    auto tubed = tube_to_closed(d);
    CHECK(width_of(tubed) == Width{5, 5});
    CHECK(tubed.thin.front() == Surface{{1, 0}});
    CHECK(validate(tubed).ok());

    CHECK(tube_to_closed(sloped({Surface{{2, 2}}}, {})) == closed({Surface{{3, 0}}}));

    CHECK_THROWS_AS(tube_to_closed(sloped({Surface{{0, 3}}}, {})), std::domain_error);
    CHECK_THROWS_AS(tube_to_closed(closed({Surface{{2, 0}}})), std::domain_error);
}

TEST_CASE("fill caps everything and preserves the flag") {
    CHECK(fill(sloped({Surface{{1, 2}}}, {})) == closed({Surface{{1, 0}}}));

    auto d = sloped({Surface{{1, 2}}, Surface{{1, 2}}}, {Surface{{0, 2}}});
    auto filled = fill(d);
    CHECK(width_of(filled) == Width{2, 2});
    CHECK(filled.thin.front() == Surface{{0, 0}});

    CHECK(fill(sloped({Surface{{2, 2}}}, {})) == closed({Surface{{2, 0}}}));

    Decomposition stab = sloped({Surface{{2, 2}}}, {});
    stab.stabilized = true;
    CHECK(fill(stab).stabilized);

    auto already = closed({Surface{{2, 0}}});
    CHECK(fill(already) == already);
    CHECK(fill(fill(d)) == fill(d));
}

TEST_CASE("fill preserves validity and never raises a thick complexity") {
    EnumerationBudget budget{2, 4, 8, 3, 2};
    for (const auto& d : enumerate_decompositions(budget, Slope::rational(1, 6))) {
        auto filled = fill(d);
        CHECK(validate(filled).ok());
        for (std::size_t i = 0; i < d.thick.size(); ++i)
            CHECK(filled.thick[i].complexity() <= d.thick[i].complexity());
    }
}

TEST_CASE("is_planar_heegaard") {
    CHECK(is_planar_heegaard(sloped({Surface{{0, 4}}}, {}, Slope::meridian())));
    CHECK_FALSE(is_planar_heegaard(sloped({Surface{{1, 2}}}, {})));
    CHECK(is_planar_heegaard(sloped({Surface{{0, 2}, {0, 2}}}, {})));
    CHECK_FALSE(
        is_planar_heegaard(sloped({Surface{{0, 2}}, Surface{{0, 2}}}, {Surface{{0, 2}}})));
}
