#include "pwc/gtrig.hpp"

#include <algorithm>
#include <cmath>

namespace pwc {

namespace {

constexpr double kPi = 3.14159265358979323846;

}  // namespace

double gtrig_period(int n) {
    if (n < 1) throw DomainError("gtrig_period: n must be >= 1");
    const double nn = static_cast<double>(n);
    return 2.0 * std::sqrt(kPi / nn) * std::tgamma(1.0 / (2 * nn)) /
           std::tgamma((nn + 1.0) / (2 * nn));
}

double gtrig_moment(int n, int p, int q) {
    if (n < 1 || p < 0 || q < 0) throw DomainError("gtrig_moment: bad arguments");
    if (p % 2 == 1 || q % 2 == 1) return 0.0;
    const double nn = static_cast<double>(n);
    const double hp = (p + 1.0) / 2.0;
    const double hq = (q + 1.0) / (2.0 * nn);
    return 2.0 / std::sqrt(std::pow(nn, p + 1.0)) * std::tgamma(hp) * std::tgamma(hq) /
           std::tgamma(hp + hq);
}

struct GTrigContext::Segment {
    double t0, h;
    // quartic continuous extension per component, nested-form coefficients
    Vec2 r1, r2, r3, r4, r5;

    Vec2 eval(double theta) const {
        const double th1 = 1.0 - theta;
        Vec2 v = r4 + th1 * r5;
        v = r3 + theta * v;
        v = r2 + th1 * v;
        return r1 + theta * v;
    }
};

GTrigContext::GTrigContext(int n) : n_(n), period_(gtrig_period(n)) {
    // One period of the defining oscillator, cached segment by segment. The
    // integrator's own dense steps are rebuilt here from fixed substeps so the
    // table has uniform, predictable resolution.
    FrozenRadialSpec osc{n};
    ZoneField zone{osc};
    IntegratorConfig cfg;
    cfg.rel_tol = 1e-13;
    cfg.abs_tol = 1e-14;

    const int kSegments = 2048;
    const double h = period_ / kSegments;
    Vec2 y{1.0, 0.0};
    segments_.reserve(kSegments);
    seg_starts_.reserve(kSegments + 1);
    for (int i = 0; i < kSegments; ++i) {
        const double t0 = i * h;
        seg_starts_.push_back(t0);
        Vec2 f0 = field_at(zone, y);
        Trajectory leg = flow_for_time(zone, y, h, cfg);
        Vec2 y1 = leg.samples.back().p;
        Vec2 f1 = field_at(zone, y1);
        // cubic Hermite in nested quartic form (r5 = 0)
        Segment s;
        s.t0 = t0;
        s.h = h;
        s.r1 = y;
        s.r2 = y1 - y;
        s.r3 = h * f0 - s.r2;
        s.r4 = s.r2 - h * f1 - s.r3;
        s.r5 = {0.0, 0.0};
        segments_.push_back(s);
        y = y1;
    }
    seg_starts_.push_back(period_);
}

std::pair<double, double> GTrigContext::cs_sn(double theta) const {
    double t = std::fmod(theta, period_);
    if (t < 0) t += period_;
    auto it = std::upper_bound(seg_starts_.begin(), seg_starts_.end(), t);
    size_t idx = static_cast<size_t>(std::distance(seg_starts_.begin(), it));
    idx = (idx == 0) ? 0 : idx - 1;
    if (idx >= segments_.size()) idx = segments_.size() - 1;
    const Segment& s = segments_[idx];
    const Vec2 p = s.eval((t - s.t0) / s.h);
    return {p.x, p.y};
}

double GTrigContext::first_cs_zero() const {
    double lo = 0.0, hi = period_ / 2;
    // bracket: Cs(0) = 1 > 0; walk until negative
    double step = period_ / 64;
    hi = step;
    while (cs_sn(hi).first > 0.0 && hi < period_) hi += step;
    lo = hi - step;
    for (int i = 0; i < 200 && hi - lo > 1e-15; ++i) {
        const double mid = 0.5 * (lo + hi);
        if (cs_sn(mid).first > 0.0)
            lo = mid;
        else
            hi = mid;
    }
    return 0.5 * (lo + hi);
}

double polar_integral_value(PolarIntegralKind kind, Vec2 p) {
    const double r2 = p.x * p.x + p.y * p.y;
    if (r2 == 0.0) throw DomainError("polar integral undefined at the origin");
    const double c2 = p.x * p.x / r2;  // cos^2 theta
    switch (kind) {
        case PolarIntegralKind::I1Polar: {
            if (std::abs(r2 - 1.0) < 1e-14)
                throw DomainError("polar integral singular on the unit circle");
            // ln|r^2-1| - ln r^2 - (1/2) ln(2c^4 - 2c^2 + 1) - atan(2c^2 - 1)
            const double ang = 2 * c2 * c2 - 2 * c2 + 1;
            return std::log(std::abs(r2 - 1.0)) - std::log(r2) - 0.5 * std::log(ang) -
                   std::atan(2 * c2 - 1);
        }
        case PolarIntegralKind::I2Polar:
            // (1/2) ln r^2 - cos^2 theta
            return 0.5 * std::log(r2) - c2;
    }
    return 0.0;
}

double polar_integral_residual(PolarIntegralKind kind, const Trajectory& trajectory) {
    if (trajectory.samples.empty()) return 0.0;
    const double v0 = polar_integral_value(kind, trajectory.samples.front().p);
    double worst = 0.0;
    for (const auto& s : trajectory.samples)
        worst = std::max(worst, std::abs(polar_integral_value(kind, s.p) - v0));
    return worst;
}

}  // namespace pwc
