#include "sweepcover/bounds.hpp"

#include <cmath>

namespace sweep {

double digamma(double x) {
    if (!(x > 0)) throw BoundsError("digamma requires x > 0");
    double result = 0;
    // Shift into the asymptotic regime, then expand in 1/x^2.
    while (x < 10.0) {
        result -= 1.0 / x;
        x += 1.0;
    }
    const double inv = 1.0 / x;
    const double inv2 = inv * inv;
    // Bernoulli-number coefficients of the asymptotic series.
    static const double coeff[] = {
        1.0 / 12.0,   -1.0 / 120.0,     1.0 / 252.0,  -1.0 / 240.0,
        1.0 / 132.0,  -691.0 / 32760.0, 1.0 / 12.0,
    };
    double term = inv2;
    double series = 0;
    for (double c : coeff) {
        series += c * term;
        term *= inv2;
    }
    result += std::log(x) - 0.5 * inv - series;
    return result;
}

double static_bound(const BoundInputs& in) {
    if (in.boundary_card < 1) throw BoundsError("boundary cardinality must be >= 1");
    if (in.k < 1) throw BoundsError("agent count must be >= 1");
    return 8.0 * double(in.boundary_card - 1) * double(in.w + in.k) / double(in.k) +
           2.0 * double(in.k);
}

std::optional<int64_t> area_lower_bound_step(int64_t s, int64_t d, int64_t k) {
    const int64_t base = s - d * k;
    if (base < 1) return std::nullopt;  // agents can outpace the spread
    const int64_t radicand = 2 * base - 1;
    const auto root = static_cast<int64_t>(std::floor(2.0 * std::sqrt(double(radicand))));
    return base + root;
}

GammaParams gamma_params(const BoundInputs& in) {
    if (in.boundary_card < 2) throw BoundsError("degenerate region: |boundary| < 2");
    if (in.k < 1 || in.d < 1) throw BoundsError("k and d must be >= 1");
    const double c0 = double(in.c0);
    const double radicand = (c0 + 2) * (c0 + 2) - 8.0 * double(in.s0) + 8.0;
    if (radicand < 0) throw BoundsError("gamma2 imaginary: (c0+2)^2 <= 8 S0 - 8");
    GammaParams g;
    g.gamma2 = std::sqrt(radicand);
    g.a1 = (c0 + 2 - g.gamma2) / 4.0;
    g.a2 = (c0 + 2 + g.gamma2) / 4.0;
    g.a3 = 8.0 * g.gamma2 / (double(in.d) * double(in.k));
    g.gamma = 8.0 * double(in.k + in.w) / double(in.k) -
              double(in.d - 2 * in.k) / double(in.boundary_card - 1);
    g.gamma1 = digamma(1 + g.a2) - digamma(1 + g.a1);
    g.a4 = g.gamma1 - g.gamma2 * g.gamma / double(in.d);
    return g;
}

DynamicBound dynamic_bound(const BoundInputs& in) {
    DynamicBound out;
    out.params = gamma_params(in);
    const GammaParams& g = out.params;
    const double b = g.a4 - g.a1 * g.a3;
    out.discriminant =
        (g.a1 * g.a3 - g.a4) * (g.a1 * g.a3 - g.a4) -
        4.0 * g.a3 * (g.a2 - g.a1 - g.a1 * g.a4);
    if (out.discriminant < 0) return out;
    const double sq = std::sqrt(out.discriminant);
    out.root_lo = (b - sq) / (2.0 * g.a3);
    out.root_hi = (b + sq) / (2.0 * g.a3);
    double best = 0;
    if (out.root_lo > 0) best = out.root_lo;
    else if (out.root_hi > 0) best = out.root_hi;
    else return out;  // both candidates nonpositive
    out.applicable = true;
    out.value = double(in.d) * best;
    return out;
}

FeasibilityReport feasibility(const BoundInputs& in, int64_t rect_perimeter) {
    FeasibilityReport rep;
    rep.distance_heuristic_fired =
        double(in.d) * double(in.d) * double(in.k) < double(rect_perimeter);
    if (double(in.k) < std::sqrt(double(in.s0)) / double(in.d)) {
        rep.classification = Feasibility::ImpossibleArea;
        return rep;
    }
    if (rep.distance_heuristic_fired) {
        rep.classification = Feasibility::LikelyImpossibleDistance;
        return rep;
    }
    try {
        rep.dynamic = dynamic_bound(in);
    } catch (const BoundsError&) {
    }
    rep.classification = rep.dynamic.applicable && rep.dynamic.value > 0
                             ? Feasibility::SweepGuaranteed
                             : Feasibility::Unknown;
    return rep;
}

const char* to_string(Feasibility f) {
    switch (f) {
        case Feasibility::ImpossibleArea: return "IMPOSSIBLE_AREA";
        case Feasibility::LikelyImpossibleDistance: return "LIKELY_IMPOSSIBLE_DISTANCE";
        case Feasibility::SweepGuaranteed: return "SWEEP_GUARANTEED";
        case Feasibility::Unknown: return "UNKNOWN";
    }
    return "?";
}

int64_t quarter_sphere_count(int64_t l) {
    if (l < 0) throw BoundsError("quarter sphere radius must be >= 0");
    return (l * l + 3 * l + 2) / 2;
}

}  // namespace sweep
