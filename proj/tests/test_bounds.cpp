#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "sweepcover/bounds.hpp"
#include "sweepcover/generate.hpp"
#include "sweepcover/region.hpp"

using namespace sweep;

namespace {

BoundInputs inputs_of(const Region& r, int64_t k, int64_t d) {
    BoundInputs in;
    in.s0 = r.area();
    in.c0 = r.perimeter_length();
    in.boundary_card = r.boundary_size();
    in.w = r.depth();
    in.k = k;
    in.d = d;
    return in;
}

constexpr double kEuler = 0.5772156649015329;

}  // namespace

TEST_CASE("digamma reference values") {
    CHECK(std::abs(digamma(1.0) + kEuler) < 1e-12);
    CHECK(std::abs(digamma(0.5) + 2.0 * std::log(2.0) + kEuler) < 1e-12);
    CHECK(std::abs(digamma(5.0) - digamma(2.0) - 13.0 / 12.0) < 1e-12);
    CHECK(std::abs(digamma(10.0) - 2.2517525890667211) < 1e-12);
}

TEST_CASE("digamma recurrence residual") {
    for (double x = 0.5; x <= 100.0; x += 0.0625)
        CHECK(std::abs(digamma(x + 1.0) - digamma(x) - 1.0 / x) < 1e-12);
}

TEST_CASE("digamma against harmonic sums") {
    double harmonic = 0.0;
    for (int n = 1; n <= 50; ++n) {
        CHECK(std::abs(digamma(double(n)) - (harmonic - kEuler)) < 1e-10);
        harmonic += 1.0 / n;
    }
}

TEST_CASE("static bound closed form") {
    BoundInputs sq3{9, 8, 8, 1, 1, 0};
    CHECK(static_bound(sq3) == doctest::Approx(114.0));
    BoundInputs line5{5, 8, 5, 0, 2, 0};
    CHECK(static_bound(line5) == doctest::Approx(36.0));
    // More agents eventually cost more in the insertion term.
    BoundInputs many = sq3;
    many.k = 100;
    CHECK(static_bound(many) > 2 * 100);
}

TEST_CASE("area lower bound step") {
    CHECK(area_lower_bound_step(9, 1, 1) == 15);
    CHECK(area_lower_bound_step(3, 1, 2) == 3);
    CHECK(area_lower_bound_step(5, 2, 1) == 7);
    CHECK(!area_lower_bound_step(5, 2, 3).has_value());
    CHECK(!area_lower_bound_step(1, 1, 1).has_value());
}

TEST_CASE("gamma parameters for the 3x3 square") {
    Region sq = generate_region(0, 9, ShapeClass::Square);
    GammaParams g = gamma_params(inputs_of(sq, 2, 6));
    CHECK(g.gamma2 == doctest::Approx(6.0));
    CHECK(g.a1 == doctest::Approx(1.0));
    CHECK(g.a2 == doctest::Approx(4.0));
    CHECK(g.gamma1 == doctest::Approx(13.0 / 12.0));
    CHECK(g.a3 == doctest::Approx(8.0 * 6.0 / (6.0 * 2.0)));
}

TEST_CASE("gamma parameters reject impossible geometry") {
    // (c0+2)^2 < 8 s0 - 8 cannot come from a real region; the radicand
    // guard must fire.
    BoundInputs bad{9, 4, 6, 1, 1, 1};
    CHECK_THROWS_AS(gamma_params(bad), BoundsError);
    BoundInputs singleton{1, 1, 1, 0, 1, 1};
    CHECK_THROWS_AS(gamma_params(singleton), BoundsError);
}

TEST_CASE("dynamic bound consistency") {
    Region sq = generate_region(0, 9, ShapeClass::Square);
    for (int64_t d : {2, 6, 20, 60}) {
        for (int64_t k : {1, 2, 6, 12}) {
            DynamicBound db = dynamic_bound(inputs_of(sq, k, d));
            if (db.applicable) {
                CHECK(db.value > 0);
                CHECK(db.discriminant >= 0);
                CHECK(db.value == doctest::Approx(double(d) * std::min(
                                      db.root_lo > 0 ? db.root_lo : db.root_hi,
                                      db.root_hi)));
            }
        }
    }
}

TEST_CASE("feasibility classification order") {
    // k below sqrt(S0)/d: exact impossibility.
    BoundInputs hopeless{100, 36, 36, 4, 9, 1};
    FeasibilityReport r1 = feasibility(hopeless, 40);
    CHECK(r1.classification == Feasibility::ImpossibleArea);

    // Enough agents for the area test but d^2 k below the bounding
    // rectangle perimeter: the distance heuristic.
    Region sq20 = generate_region(0, 400, ShapeClass::Square);
    BoundInputs slow = inputs_of(sq20, 8, 3);
    FeasibilityReport r2 = feasibility(slow, sq20.bounding_rect_perimeter());
    CHECK(r2.classification == Feasibility::LikelyImpossibleDistance);
    CHECK(r2.distance_heuristic_fired);

    // Large d, few agents: nothing can be concluded either way.
    Region sq3 = generate_region(0, 9, ShapeClass::Square);
    FeasibilityReport r3 = feasibility(inputs_of(sq3, 2, 6), 12);
    CHECK(r3.classification == Feasibility::Unknown);
    CHECK(!r3.distance_heuristic_fired);
}

TEST_CASE("quarter sphere tile count") {
    CHECK(quarter_sphere_count(0) == 1);
    CHECK(quarter_sphere_count(1) == 3);
    CHECK(quarter_sphere_count(2) == 6);
    CHECK(quarter_sphere_count(10) == 66);
}
