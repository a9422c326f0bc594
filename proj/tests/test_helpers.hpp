#ifndef PWC_TEST_HELPERS_HPP
#define PWC_TEST_HELPERS_HPP

#include <functional>
#include <random>

#include "pwc/core.hpp"
#include "pwc/model.hpp"

namespace pwc::testing {

/// Five-point (fourth-order) central difference; accurate enough to check
/// analytic derivatives at the 1e-9 level on desk-scale boxes.
inline double deriv5(const std::function<double(double)>& f, double x, double h = 1e-3) {
    return (-f(x + 2 * h) + 8 * f(x + h) - 8 * f(x - h) + f(x - 2 * h)) / (12 * h);
}

inline Vec2 fd_gradient(const ZoneField& zone, Vec2 p, double h = 1e-3) {
    return {deriv5([&](double x) { return first_integral(zone, {x, p.y}); }, p.x, h),
            deriv5([&](double y) { return first_integral(zone, {p.x, y}); }, p.y, h)};
}

inline double fd_divergence(const ZoneField& zone, Vec2 p, double h = 1e-3) {
    const double dxx = deriv5([&](double x) { return field_at(zone, {x, p.y}).x; }, p.x, h);
    const double dyy = deriv5([&](double y) { return field_at(zone, {p.x, y}).y; }, p.y, h);
    return dxx + dyy;
}

/// Hyperbolic saddle draws for property tests (fixed-seed RNG supplied by the caller).
inline SaddleSpec random_saddle(std::mt19937& rng, bool nonzero_delta = true) {
    std::uniform_real_distribution<double> unit(-2.0, 2.0);
    for (;;) {
        SaddleSpec s;
        s.alpha = unit(rng);
        s.beta = unit(rng);
        s.delta = unit(rng);
        s.gamma = unit(rng);
        s.mu = unit(rng);
        if (s.disc() >= -1e-3) continue;
        if (nonzero_delta && std::abs(s.delta) < 0.1) continue;
        return s;
    }
}

}  // namespace pwc::testing

#endif
