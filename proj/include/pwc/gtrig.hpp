#ifndef PWC_GTRIG_HPP
#define PWC_GTRIG_HPP

#include <memory>
#include <utility>
#include <vector>

#include "pwc/core.hpp"
#include "pwc/integrate.hpp"

namespace pwc {

/// Generalized cosine/sine pair (Cs, Sn) for exponent n: the solution of
/// (x', y') = (-y, x^(2n-1)) with (x, y)(0) = (1, 0). They satisfy
/// Cs^(2n) + n Sn^2 = 1 and are periodic with the period returned by
/// gtrig_period(n). n = 1 gives the circular functions.
///
/// Realized by a tightly-toleranced integration over one period, cached as
/// per-step dense-output polynomials; queries reduce the angle mod T and
/// evaluate the cached interpolant.
class GTrigContext {
public:
    explicit GTrigContext(int n);

    int n() const { return n_; }
    double period() const { return period_; }

    std::pair<double, double> cs_sn(double theta) const;

    /// Smallest positive zero of Cs (the quarter period), found by bisection
    /// on the cached table.
    double first_cs_zero() const;

private:
    int n_;
    double period_;
    struct Segment;
    std::vector<Segment> segments_;
    std::vector<double> seg_starts_;
};

/// Fundamental period: 2 sqrt(pi/n) * Gamma(1/(2n)) / Gamma((n+1)/(2n)).
double gtrig_period(int n);

/// Integral of Sn^p Cs^q over one period: zero when p or q is odd; otherwise
/// 2/sqrt(n^(p+1)) * Gamma((p+1)/2) Gamma((q+1)/(2n)) / Gamma((p+1)/2 + (q+1)/(2n)).
double gtrig_moment(int n, int p, int q);

enum class PolarIntegralKind { I1Polar, I2Polar };

/// Evaluates the closed-form polar first integral along a trajectory and
/// returns the maximum absolute drift from its initial value. Conservation
/// check for the sector systems. Throws DomainError on singular points
/// (I1Polar: radius 1 or 0; I2Polar: radius 0).
double polar_integral_residual(PolarIntegralKind kind, const Trajectory& trajectory);

/// The conserved polar quantities themselves (log form).
double polar_integral_value(PolarIntegralKind kind, Vec2 p);

}  // namespace pwc

#endif
