#include "pwc/verify.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace pwc {

namespace {

// One arc through `side` from the section point at ordinate y_in: entering
// points run forward, exiting points backward, so the result is always the
// other endpoint of the in-zone arc through (section_in, y_in).
HalfMapSample transit_once(const PiecewiseSystem& sys, int side, Section section_in,
                           Section section_out, double y_in, const IntegratorConfig& cfg) {
    HalfMapSample out;
    out.y_in = y_in;

    const Vec2 p = sys.section_point(section_in, y_in);
    const ZoneField& zone = sys.zones[static_cast<size_t>(side)];
    const Vec2 f = field_at(zone, p);
    const Vec2 n = sys.section_normal(section_in);
    const double fspeed = norm(f);
    const double gdot = dot(n, f);
    if (fspeed < cfg.equilibrium_speed_floor || std::abs(gdot) < 1e-9 * std::max(1.0, fspeed)) {
        out.status = TrajectoryStatus::TangentHit;
        return out;
    }

    // Side of the section occupied by `side`; probe with a small normal offset.
    const double probe = 1e-7;
    int interior_sign = 0;
    if (sys.zone_of(p + probe * n) == side)
        interior_sign = +1;
    else if (sys.zone_of(p + (-probe) * n) == side)
        interior_sign = -1;
    else {
        out.status = TrajectoryStatus::LeftDomain;
        return out;
    }

    const bool entering = (gdot > 0) == (interior_sign > 0);
    const Vec2 start = p + (10.0 * cfg.event_tol * interior_sign) * n;
    if (sys.zone_of(start) != side) {
        out.status = TrajectoryStatus::LeftDomain;
        return out;
    }

    Trajectory traj = integrate_until_section(
        sys, start, section_out, entering ? Direction::Forward : Direction::Backward, cfg);
    out.status = traj.status;
    if (traj.status == TrajectoryStatus::Completed) {
        const Vec2 hit = traj.events.back().p;
        out.y_out = sys.section_ordinate(section_out, hit);
    }
    return out;
}

template <typename Fn>
void run_grid(size_t count, ExecutionMode mode, Fn&& body) {
#ifdef _OPENMP
    if (mode == ExecutionMode::Parallel) {
#pragma omp parallel for schedule(dynamic)
        for (long long i = 0; i < static_cast<long long>(count); ++i)
            body(static_cast<size_t>(i));
        return;
    }
#else
    (void)mode;
#endif
    for (size_t i = 0; i < count; ++i) body(i);
}

Monotonicity classify_monotonicity(const std::vector<HalfMapSample>& samples) {
    bool inc = true, dec = true;
    const HalfMapSample* prev = nullptr;
    for (const auto& s : samples) {
        if (!s.y_out) continue;
        if (prev) {
            if (*s.y_out <= *prev->y_out) inc = false;
            if (*s.y_out >= *prev->y_out) dec = false;
        }
        prev = &s;
    }
    if (inc && !dec) return Monotonicity::Increasing;
    if (dec && !inc) return Monotonicity::Decreasing;
    return Monotonicity::Unknown;
}

}  // namespace

std::optional<double> HalfMap::evaluate(double y_in) const {
    HalfMapSample s = transit_once(*system, side, section_in, section_out, y_in, config);
    return s.y_out;
}

HalfMap half_map_between(const PiecewiseSystem& system, int side, Section section_in,
                         Section section_out, const std::vector<double>& y_grid,
                         const IntegratorConfig& cfg, ExecutionMode mode) {
    HalfMap map;
    map.system = &system;
    map.side = side;
    map.section_in = section_in;
    map.section_out = section_out;
    map.config = cfg;
    map.samples.resize(y_grid.size());

    run_grid(y_grid.size(), mode, [&](size_t i) {
        map.samples[i] = transit_once(system, side, section_in, section_out, y_grid[i], cfg);
    });

    bool any = false;
    for (const auto& s : map.samples) any = any || s.y_out.has_value();
    if (!y_grid.empty() && !any) throw EmptyDomain("no grid ordinate produced a completed arc");
    map.monotonicity = classify_monotonicity(map.samples);
    return map;
}

HalfMap half_map(const PiecewiseSystem& system, int side, const std::vector<double>& y_grid,
                 const IntegratorConfig& cfg, ExecutionMode mode) {
    const auto sections = system.zone_sections(side);
    const Section sec = sections.front();
    return half_map_between(system, side, sec, sec, y_grid, cfg, mode);
}

FixedPointScan scan_fixed_points(const HalfMap& first, const HalfMap& second, double lo,
                                 double hi, double resolution, ExecutionMode mode) {
    if (!(hi > lo) || !(resolution > 0)) throw EmptyDomain("empty scan interval");
    const size_t n = static_cast<size_t>(std::ceil((hi - lo) / resolution)) + 1;

    FixedPointScan scan;
    scan.grid.resize(n);
    scan.gap_values.assign(n, std::numeric_limits<double>::quiet_NaN());
    for (size_t i = 0; i < n; ++i)
        scan.grid[i] = lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(n - 1);

    auto composed = [&](double y) -> std::optional<double> {
        auto mid = first.evaluate(y);
        if (!mid) return std::nullopt;
        auto back = second.evaluate(*mid);
        if (!back) return std::nullopt;
        return *back - y;
    };

    run_grid(n, mode, [&](size_t i) {
        auto g = composed(scan.grid[i]);
        if (g) scan.gap_values[i] = *g;
    });

    // gaps
    std::optional<double> gap_start;
    for (size_t i = 0; i < n; ++i) {
        const bool bad = std::isnan(scan.gap_values[i]);
        if (bad && !gap_start) gap_start = scan.grid[i];
        if (!bad && gap_start) {
            scan.gaps.emplace_back(*gap_start, scan.grid[i]);
            gap_start.reset();
        }
    }
    if (gap_start) scan.gaps.emplace_back(*gap_start, hi);

    // continuum detection: longest run of usable points with tiny gap values
    size_t best_run = 0, run = 0, usable = 0;
    for (size_t i = 0; i < n; ++i) {
        if (!std::isnan(scan.gap_values[i])) {
            ++usable;
            if (std::abs(scan.gap_values[i]) <= 1e-6) {
                ++run;
                best_run = std::max(best_run, run);
            } else {
                run = 0;
            }
        } else {
            run = 0;
        }
    }
    if (usable > 0 && best_run >= std::max<size_t>(2, (usable * 95) / 100)) {
        scan.continuum = true;
        return scan;  // a continuum is reported as such, not as discrete zeros
    }

    // bracket sign changes and refine
    for (size_t i = 0; i + 1 < n; ++i) {
        const double ga = scan.gap_values[i], gb = scan.gap_values[i + 1];
        if (std::isnan(ga) || std::isnan(gb)) continue;
        if (ga == 0.0) {
            scan.zeros.push_back({scan.grid[i], scan.grid[i], scan.grid[i], 0.0});
            continue;
        }
        if ((ga < 0) == (gb < 0)) continue;
        double a = scan.grid[i], b = scan.grid[i + 1];
        double fa = ga;
        double root = 0.5 * (a + b);
        for (int it = 0; it < 100 && b - a > 1e-10; ++it) {
            root = 0.5 * (a + b);
            auto fm = composed(root);
            if (!fm) break;  // domain pinch inside the bracket
            if ((*fm < 0) == (fa < 0)) {
                a = root;
                fa = *fm;
            } else {
                b = root;
            }
        }
        auto res = composed(root);
        FixedPointHit hit;
        hit.y = root;
        hit.bracket_lo = scan.grid[i];
        hit.bracket_hi = scan.grid[i + 1];
        hit.residual = res ? std::abs(*res) : std::numeric_limits<double>::infinity();
        scan.zeros.push_back(hit);
    }
    return scan;
}

VerificationVerdict verify_candidate(const PiecewiseSystem& system,
                                     const CrossingCandidate& candidate,
                                     const IntegratorConfig& cfg) {
    VerificationVerdict verdict;
    if (candidate.points.empty() || candidate.points.size() != candidate.zone_sequence.size()) {
        verdict.cause = "malformed candidate";
        return verdict;
    }
    for (double r : candidate.residuals) {
        if (!(r <= 1e-10)) {
            verdict.cause = "candidate residuals exceed 1e-10";
            return verdict;
        }
    }

    const size_t n = candidate.points.size();
    double current = candidate.points[0].ordinate;
    for (size_t i = 0; i < n; ++i) {
        const auto& from = candidate.points[i];
        const auto& to = candidate.points[(i + 1) % n];
        const int zone = candidate.zone_sequence[i];
        HalfMapSample leg =
            transit_once(system, zone, from.section, to.section, current, cfg);
        LegResult lr;
        lr.predicted = to.ordinate;
        lr.status = leg.status;
        if (!leg.y_out) {
            lr.integrated = std::numeric_limits<double>::quiet_NaN();
            verdict.legs.push_back(lr);
            verdict.cause = std::string("leg ") + std::to_string(i) +
                            " did not complete: " + to_string(leg.status);
            verdict.closure_error = std::numeric_limits<double>::infinity();
            return verdict;
        }
        lr.integrated = *leg.y_out;
        verdict.legs.push_back(lr);
        verdict.max_leg_gap = std::max(verdict.max_leg_gap, std::abs(*leg.y_out - to.ordinate));
        current = *leg.y_out;
    }
    verdict.closure_error = std::abs(current - candidate.points[0].ordinate);
    verdict.confirmed = verdict.closure_error <= 1e-6;
    if (!verdict.confirmed) verdict.cause = "closure error above 1e-6";
    return verdict;
}

double annulus_closure_error(const PiecewiseSystem& system, double y,
                             const IntegratorConfig& cfg) {
    // Two-zone systems: through zone 0 and back through zone 1 on the shared
    // section; ray systems: inner then outer between the rays.
    if (system.geometry.variant == SwitchingGeometry::Variant::RayPair) {
        HalfMapSample inner =
            transit_once(system, 0, Section::RayMinus, Section::RayPlus, y, cfg);
        if (!inner.y_out) return std::numeric_limits<double>::infinity();
        HalfMapSample outer =
            transit_once(system, 1, Section::RayPlus, Section::RayMinus, *inner.y_out, cfg);
        if (!outer.y_out) return std::numeric_limits<double>::infinity();
        return std::abs(*outer.y_out - y);
    }
    const Section sec = system.zone_sections(0).front();
    HalfMapSample a = transit_once(system, 0, sec, sec, y, cfg);
    if (!a.y_out) return std::numeric_limits<double>::infinity();
    HalfMapSample b = transit_once(system, 1, sec, sec, *a.y_out, cfg);
    if (!b.y_out) return std::numeric_limits<double>::infinity();
    return std::abs(*b.y_out - y);
}

}  // namespace pwc
