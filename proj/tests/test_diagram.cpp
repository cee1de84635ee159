#include <cmath>
#include <memory>

#include "doctest.h"
#include "skewfork/diagram.hpp"
#include "skewfork/errors.hpp"

using namespace skewfork;

namespace {

Driver const_driver(double a3, double a2, double a1) {
    Driver d;
    d.kind = DriverKind::Autonomous;
    d.coefficients["a3"] = std::make_shared<ConstantFn>(a3);
    d.coefficients["a2"] = std::make_shared<ConstantFn>(a2);
    d.coefficients["a1"] = std::make_shared<ConstantFn>(a1);
    return d;
}

Family cubic(double lambda, double mu = 0.0) {
    Family f;
    f.lambda = lambda;
    f.mu = mu;
    return f;
}

ScanConfig fast_cfg() {
    ScanConfig c;
    c.grid_points = 21;
    return c;
}

}  // namespace

TEST_CASE("count_minimal_sets") {
    const ScanConfig cfg;
    const Driver d = const_driver(1.0, 0.0, 0.0);
    const FiberGrid g = FiberGrid::uniform(d);

    const MinimalSetCensus three = count_minimal_sets(cubic(1.0), d, g, cfg);
    REQUIRE(three.count == 3);
    CHECK(three.label == CensusLabel::ThreeSplit);
    CHECK(three.sets[0].value_at_fiber0 == doctest::Approx(-1.0).epsilon(1e-4));
    CHECK(three.sets[2].value_at_fiber0 == doctest::Approx(1.0).epsilon(1e-4));
    CHECK(three.sets[0].exponent.value == doctest::Approx(-2.0).epsilon(1e-3));
    CHECK(three.sets[1].exponent.value == doctest::Approx(1.0).epsilon(1e-6));
    CHECK(three.sets[2].exponent.value == doctest::Approx(-2.0).epsilon(1e-3));

    const MinimalSetCensus one = count_minimal_sets(cubic(-1.0), d, g, cfg);
    CHECK(one.count == 1);
    CHECK(one.label == CensusLabel::One);
    CHECK(one.sets[0].exponent.classification == Hyperbolicity::Attractive);

    const Driver d2 = const_driver(1.0, 2.0, 0.0);
    const FiberGrid g2 = FiberGrid::uniform(d2);
    const MinimalSetCensus upper = count_minimal_sets(cubic(-0.5), d2, g2, cfg);
    REQUIRE(upper.count == 3);
    CHECK(upper.label == CensusLabel::ThreeUpper);
    REQUIRE(upper.kappa0.has_value());
    CHECK(*upper.kappa0 == doctest::Approx(1.0 - std::sqrt(2.0) / 2.0).epsilon(1e-3));
    CHECK(upper.sets[1].exponent.classification == Hyperbolicity::Repulsive);
}

TEST_CASE("three-copy censuses order positions and exponents (-,+,-)") {
    const ScanConfig cfg;
    const Driver d = const_driver(1.0, 0.7, 0.1);
    const FiberGrid g = FiberGrid::uniform(d);
    for (double lam : {0.3, 0.8, 1.5}) {
        const MinimalSetCensus c = count_minimal_sets(cubic(lam), d, g, cfg);
        if (c.count != 3) continue;
        CHECK(c.sets[0].exponent.value < 0);
        CHECK(c.sets[1].exponent.value > 0);
        CHECK(c.sets[2].exponent.value < 0);
        CHECK(c.sets[0].value_at_fiber0 <= c.sets[1].value_at_fiber0);
        CHECK(c.sets[1].value_at_fiber0 <= c.sets[2].value_at_fiber0);
    }
}

TEST_CASE("scan_lambda: classical pitchfork of -x^3 + lambda x") {
    const Driver d = const_driver(1.0, 0.0, 0.0);
    const DiagramReport rep = scan_lambda(cubic(0.0), d, -1.0, 1.0, fast_cfg());
    CHECK(rep.pattern == Pattern::ClassicalPitchfork);
    CHECK(rep.side == CollisionSide::Both);
    REQUIRE(rep.points.size() == 1);
    CHECK(rep.points[0].kind == BifKind::Pitchfork);
    CHECK(std::fabs(rep.points[0].value) <= 2.5e-3);
}

TEST_CASE("scan_lambda: saddle-node + transcritical of -x^3 + 2x^2 + lambda x") {
    const Driver d = const_driver(1.0, 2.0, 0.0);
    const DiagramReport rep = scan_lambda(cubic(0.0), d, -2.0, 1.0, fast_cfg());
    CHECK(rep.pattern == Pattern::SaddleNodeTranscritical);
    CHECK(rep.side == CollisionSide::LowerCollides);
    REQUIRE(rep.points.size() == 3);
    CHECK(rep.points[0].kind == BifKind::SaddleNode);
    CHECK(rep.points[0].value == doctest::Approx(-1.0).epsilon(5e-3));
    CHECK(std::fabs(rep.points[2].value) <= 5e-3);
}

TEST_CASE("scan_lambda: count-3 persistence above the upper bifurcation") {
    const Driver d = const_driver(1.0, 0.0, 0.0);
    const DiagramReport rep = scan_lambda(cubic(0.0), d, -1.0, 1.0, fast_cfg());
    bool seen_three = false;
    for (const auto& [x, c] : rep.grid) {
        if (c.label == CensusLabel::Inconclusive) continue;
        if (seen_three) CHECK(c.count == 3);
        if (c.count == 3 && c.sets[0].exponent.classification == Hyperbolicity::Attractive &&
            c.sets[2].exponent.classification == Hyperbolicity::Attractive)
            seen_three = true;
    }
}

TEST_CASE("scan_mu: no bifurcation when sp(a1) is positive") {
    const Driver d = const_driver(1.0, 0.0, 1.0);
    const DiagramReport rep = scan_mu(cubic(0.0), d, -3.0, 3.0, fast_cfg());
    CHECK(rep.pattern == Pattern::NoBifurcation);
    REQUIRE(rep.expected_pattern.has_value());
    CHECK(*rep.expected_pattern == Pattern::NoBifurcation);
    for (const auto& [x, c] : rep.grid)
        if (c.label != CensusLabel::Inconclusive) CHECK(c.count == 3);
}

TEST_CASE("scan_mu: two saddle-nodes when sp(a1) is negative") {
    const Driver d = const_driver(1.0, 0.0, -1.0);
    const DiagramReport rep = scan_mu(cubic(0.0), d, -3.0, 3.0, fast_cfg());
    CHECK(rep.pattern == Pattern::TwoSaddleNodes);
    REQUIRE(rep.expected_pattern.has_value());
    CHECK(*rep.expected_pattern == Pattern::TwoSaddleNodes);
    REQUIRE(rep.points.size() == 2);
    CHECK(rep.points[0].value == doctest::Approx(-2.0).epsilon(5e-3));
    CHECK(rep.points[1].value == doctest::Approx(2.0).epsilon(5e-3));
}

TEST_CASE("scan_mu: weak generalized transcritical when 0 is in sp(a1)") {
    const Driver d = const_driver(1.0, 0.0, 0.0);
    const DiagramReport rep = scan_mu(cubic(0.0), d, -3.0, 3.0, fast_cfg());
    CHECK(rep.pattern == Pattern::WeakGeneralizedTranscritical);
    REQUIRE(rep.expected_pattern.has_value());
    CHECK(*rep.expected_pattern == Pattern::WeakGeneralizedTranscritical);
    REQUIRE(rep.points.size() == 2);
    // mu_1 = mu_2 = 0 up to the width of the nonhyperbolic zone midpoint.
    CHECK(std::fabs(rep.points[0].value) < 0.05);
    CHECK(std::fabs(rep.points[1].value) < 0.05);
}
