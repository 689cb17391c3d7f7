#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

namespace sweep {

class BoundsError : public std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Digamma psi(x), x > 0. Upward recurrence into the asymptotic series;
/// absolute error below 1e-12 over the ranges the bounds use.
double digamma(double x);

struct BoundInputs {
    int64_t s0 = 0;             // initial area
    int64_t c0 = 0;             // perimeter walk length
    int64_t boundary_card = 0;  // |boundary|
    int64_t w = 0;              // depth
    int64_t k = 0;              // agents
    int64_t d = 0;              // spread period
};

struct GammaParams {
    double gamma2, gamma1, gamma;
    double a1, a2, a3, a4;
};

/// Cover-time bound for a non-expanding region:
/// 8(|bd|-1)(W+k)/k + 2k.
double static_bound(const BoundInputs& in);

/// One step of the universal area recursion:
/// S - dk + floor(2*sqrt(2(S-dk)-1)). nullopt when S - dk < 1, i.e. the
/// agents can outpace the spread and the lower bound says nothing.
std::optional<int64_t> area_lower_bound_step(int64_t s, int64_t d, int64_t k);

/// gamma2 = sqrt((c0+2)^2 - 8 s0 + 8), A1 = (c0+2-gamma2)/4,
/// A2 = (c0+2+gamma2)/4, A3 = 8 gamma2/(dk),
/// gamma = 8(k+W)/k - (d-2k)/(|bd|-1), A4 = gamma1 - gamma2*gamma/d,
/// gamma1 = psi(1+A2) - psi(1+A1).
/// Throws BoundsError on a negative radicand or |bd| < 2.
GammaParams gamma_params(const BoundInputs& in);

struct DynamicBound {
    bool applicable = false;
    double value = 0;  // ticks, = d * min positive root; valid iff applicable
    double discriminant = 0;
    double root_lo = 0, root_hi = 0;  // valid iff discriminant >= 0
    GammaParams params{};
};

/// Expanding-region cover-time bound: d times the minimal positive root of
/// the quadratic in the A-parameters. Inapplicable when the discriminant is
/// negative or no root is positive.
DynamicBound dynamic_bound(const BoundInputs& in);

enum class Feasibility {
    ImpossibleArea,           // k < sqrt(S0)/d, exact impossibility
    LikelyImpossibleDistance, // d^2 k < R, heuristic with unit constant
    SweepGuaranteed,          // dynamic bound is a positive real
    Unknown,
};

struct FeasibilityReport {
    Feasibility classification = Feasibility::Unknown;
    /// The distance test with unit constant is reported even when a later
    /// classification wins; it is asymptotic and never a hard guarantee.
    bool distance_heuristic_fired = false;
    DynamicBound dynamic{};
};

/// Classification order: ImpossibleArea, LikelyImpossibleDistance,
/// SweepGuaranteed, Unknown; first match wins. `rect_perimeter` is R, the
/// bounding-rectangle perimeter.
FeasibilityReport feasibility(const BoundInputs& in, int64_t rect_perimeter);

const char* to_string(Feasibility f);

/// Tiles in a quarter of a digital sphere of radius L: L^2/2 + 3L/2 + 1.
int64_t quarter_sphere_count(int64_t l);

}  // namespace sweep
