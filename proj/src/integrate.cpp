#include "pwc/integrate.hpp"

#include <algorithm>
#include <cmath>

namespace pwc {

const char* to_string(TrajectoryStatus s) {
    switch (s) {
        case TrajectoryStatus::Completed: return "completed";
        case TrajectoryStatus::LeftDomain: return "left_domain";
        case TrajectoryStatus::MaxStepsExceeded: return "max_steps_exceeded";
        case TrajectoryStatus::HitEquilibrium: return "hit_equilibrium";
        case TrajectoryStatus::TangentHit: return "tangent_hit";
    }
    return "?";
}

namespace {

// Dormand-Prince 5(4) coefficients (FSAL, 7 stages) with the standard
// quartic dense-output polynomial.
constexpr double a21 = 1.0 / 5;
constexpr double a31 = 3.0 / 40, a32 = 9.0 / 40;
constexpr double a41 = 44.0 / 45, a42 = -56.0 / 15, a43 = 32.0 / 9;
constexpr double a51 = 19372.0 / 6561, a52 = -25360.0 / 2187, a53 = 64448.0 / 6561,
                 a54 = -212.0 / 729;
constexpr double a61 = 9017.0 / 3168, a62 = -355.0 / 33, a63 = 46732.0 / 5247,
                 a64 = 49.0 / 176, a65 = -5103.0 / 18656;
constexpr double b1 = 35.0 / 384, b3 = 500.0 / 1113, b4 = 125.0 / 192,
                 b5 = -2187.0 / 6784, b6 = 11.0 / 84;
constexpr double e1 = 71.0 / 57600, e3 = -71.0 / 16695, e4 = 71.0 / 1920,
                 e5 = -17253.0 / 339200, e6 = 22.0 / 525, e7 = -1.0 / 40;
constexpr double d1 = -12715105075.0 / 11282082432.0;
constexpr double d3 = 87487479700.0 / 32700410799.0;
constexpr double d4 = -10690763975.0 / 1880347072.0;
constexpr double d5 = 701980252875.0 / 199316789632.0;
constexpr double d6 = -1453857185.0 / 822651844.0;
constexpr double d7 = 69997945.0 / 29380423.0;

using FieldFn = std::function<Vec2(Vec2)>;

struct DenseStep {
    double h = 0.0;
    Vec2 r1, r2, r3, r4, r5;  // continuous-extension coefficients

    Vec2 eval(double theta) const {
        const double th1 = 1.0 - theta;
        Vec2 v = r4 + th1 * r5;
        v = r3 + theta * v;
        v = r2 + th1 * v;
        return r1 + theta * v;
    }
};

struct StepResult {
    Vec2 y1;
    Vec2 f1;  // derivative at the step end (FSAL)
    double err = 0.0;
    DenseStep dense;
};

StepResult rk_step(const FieldFn& f, Vec2 y0, Vec2 f0, double h) {
    const Vec2 k1 = f0;
    const Vec2 k2 = f(y0 + h * (a21 * k1));
    const Vec2 k3 = f(y0 + h * (a31 * k1 + a32 * k2));
    const Vec2 k4 = f(y0 + h * (a41 * k1 + a42 * k2 + a43 * k3));
    const Vec2 k5 = f(y0 + h * (a51 * k1 + a52 * k2 + a53 * k3 + a54 * k4));
    const Vec2 k6 = f(y0 + h * (a61 * k1 + a62 * k2 + a63 * k3 + a64 * k4 + a65 * k5));
    const Vec2 y1 = y0 + h * (b1 * k1 + b3 * k3 + b4 * k4 + b5 * k5 + b6 * k6);
    const Vec2 k7 = f(y1);

    StepResult r;
    r.y1 = y1;
    r.f1 = k7;
    r.err = 0.0;  // filled by caller with tolerance scaling
    const Vec2 ev = h * (e1 * k1 + e3 * k3 + e4 * k4 + e5 * k5 + e6 * k6 + e7 * k7);

    r.dense.h = h;
    const Vec2 dy = y1 - y0;
    r.dense.r1 = y0;
    r.dense.r2 = dy;
    r.dense.r3 = h * k1 - dy;
    r.dense.r4 = dy - h * k7 - r.dense.r3;
    r.dense.r5 = h * (d1 * k1 + d3 * k3 + d4 * k4 + d5 * k5 + d6 * k6 + d7 * k7);

    // stash the raw error vector in f-agnostic form via err; caller rescales
    r.err = std::max(std::abs(ev.x), std::abs(ev.y));
    return r;
}

struct EventHit {
    double theta;
    Vec2 p;
    Section section;
    int transversality;  // 0 = tangential
};

class EventLocator {
public:
    EventLocator(const PiecewiseSystem& sys, const FieldFn& field, double event_tol)
        : sys_(sys), field_(field), tol_(event_tol) {}

    // Earliest section hit inside the dense step, if any. g0 values are the
    // section coordinates at theta = 0.
    std::optional<EventHit> find(const DenseStep& ds, const std::vector<Section>& sections) const {
        std::optional<EventHit> best;
        for (Section s : sections) {
            auto hit = find_one(ds, s);
            if (hit && (!best || hit->theta < best->theta)) best = hit;
        }
        return best;
    }

private:
    std::optional<EventHit> find_one(const DenseStep& ds, Section sec) const {
        constexpr int kProbes = 24;
        double g_prev = g(ds, sec, 0.0);
        double th_prev = 0.0;
        // Track a dip toward zero for grazing (tangential) contacts.
        for (int i = 1; i <= kProbes; ++i) {
            const double th = static_cast<double>(i) / kProbes;
            const double gv = g(ds, sec, th);
            if ((g_prev < 0.0 && gv > 0.0) || (g_prev > 0.0 && gv < 0.0) || gv == 0.0) {
                auto hit = refine_crossing(ds, sec, th_prev, th, g_prev, gv);
                if (hit) return hit;
            } else if (i >= 2) {
                // local |g| minimum bracketed by three probes
                const double th_mid = static_cast<double>(i - 1) / kProbes;
                const double g_mid = g(ds, sec, th_mid);
                const double g_before = g(ds, sec, static_cast<double>(i - 2) / kProbes);
                if (std::abs(g_mid) < std::abs(g_before) && std::abs(g_mid) < std::abs(gv) &&
                    std::abs(g_mid) < 1e3 * tol_ * scale(sec)) {
                    auto hit = refine_graze(ds, sec, static_cast<double>(i - 2) / kProbes, th);
                    if (hit) return hit;
                }
            }
            g_prev = gv;
            th_prev = th;
        }
        return std::nullopt;
    }

    double g(const DenseStep& ds, Section sec, double th) const {
        return sys_.section_coordinate(sec, ds.eval(th));
    }

    double scale(Section) const { return 1.0; }

    std::optional<EventHit> make_hit(const DenseStep& ds, Section sec, double th) const {
        const Vec2 p = ds.eval(th);
        if (!sys_.on_section_side(sec, p)) return std::nullopt;
        const Vec2 n = sys_.section_normal(sec);
        const double gdot = dot(n, field_(p));
        EventHit hit;
        hit.theta = th;
        hit.p = p;
        hit.section = sec;
        const double speed = norm(field_(p));
        hit.transversality = std::abs(gdot) <= 1e-7 * std::max(1.0, speed)
                                 ? 0
                                 : (gdot > 0 ? 1 : -1);
        return hit;
    }

    std::optional<EventHit> refine_crossing(const DenseStep& ds, Section sec, double lo,
                                            double hi, double glo, double ghi) const {
        for (int it = 0; it < 200; ++it) {
            const double mid = 0.5 * (lo + hi);
            const double gm = g(ds, sec, mid);
            if (std::abs(gm) <= tol_) return make_hit(ds, sec, mid);
            if ((glo < 0.0) == (gm < 0.0)) {
                lo = mid;
                glo = gm;
            } else {
                hi = mid;
                ghi = gm;
            }
            if (hi - lo < 1e-17) break;
        }
        // interval collapsed; a genuine sign change is still an event
        const double th = std::abs(glo) < std::abs(ghi) ? lo : hi;
        return make_hit(ds, sec, th);
    }

    // Ternary search for a grazing minimum of |g|.
    std::optional<EventHit> refine_graze(const DenseStep& ds, Section sec, double lo,
                                         double hi) const {
        for (int it = 0; it < 200 && hi - lo > 1e-16; ++it) {
            const double m1 = lo + (hi - lo) / 3.0;
            const double m2 = hi - (hi - lo) / 3.0;
            if (std::abs(g(ds, sec, m1)) < std::abs(g(ds, sec, m2)))
                hi = m2;
            else
                lo = m1;
        }
        const double th = 0.5 * (lo + hi);
        if (std::abs(g(ds, sec, th)) <= tol_) return make_hit(ds, sec, th);
        return std::nullopt;
    }

    const PiecewiseSystem& sys_;
    const FieldFn& field_;
    double tol_;
};

double error_norm(const StepResult& r, Vec2 y0, const IntegratorConfig& cfg) {
    const double sk = cfg.abs_tol +
                      cfg.rel_tol * std::max({std::abs(y0.x), std::abs(y0.y),
                                              std::abs(r.y1.x), std::abs(r.y1.y)});
    return r.err / sk;
}

double initial_step(const FieldFn& f, Vec2 y0, const IntegratorConfig& cfg) {
    const double fnorm = norm(f(y0));
    const double ynorm = std::max(1.0, norm(y0));
    if (fnorm < 1e-12) return 1e-6;
    double h = 0.01 * ynorm / fnorm;
    return std::min(h, 0.1);
}

// Core loop shared by section-seeking and fixed-time integration. The zone
// field is reevaluated after each switching event.
Trajectory run(const PiecewiseSystem* sys, const ZoneField* single_zone, Vec2 p0,
               std::optional<Section> target, Direction direction, double t_end,
               const IntegratorConfig& cfg) {
    Trajectory traj;
    traj.direction = direction;
    const double dir = (direction == Direction::Forward) ? 1.0 : -1.0;

    int zone = 0;
    if (sys) {
        zone = sys->zone_of(p0);
        if (zone == kBoundaryZone)
            throw DomainError("integration start point lies on the switching set");
    }

    auto make_field = [&](int z) -> FieldFn {
        if (sys) {
            const ZoneField* zf = &sys->zones[static_cast<size_t>(z)];
            return [zf, dir](Vec2 p) { return dir * field_at(*zf, p); };
        }
        return [single_zone, dir](Vec2 p) { return dir * field_at(*single_zone, p); };
    };

    FieldFn field = make_field(zone);
    Vec2 y = p0;
    double t = 0.0;
    Vec2 fy = field(y);
    double h = initial_step(field, y, cfg);
    if (t_end > 0.0) h = std::min(h, t_end);

    traj.samples.push_back({t, y, zone});

    bool rejected = false;
    for (long step = 0; step < cfg.max_steps; ++step) {
        if (norm(fy) < cfg.equilibrium_speed_floor) {
            traj.status = TrajectoryStatus::HitEquilibrium;
            return traj;
        }
        if (norm(y) > cfg.escape_radius) {
            traj.status = TrajectoryStatus::LeftDomain;
            return traj;
        }
        bool clipped = false;
        if (t_end > 0.0 && t + h >= t_end) {
            h = t_end - t;
            clipped = true;
            if (h <= 1e-16 * std::max(1.0, t)) {
                traj.status = TrajectoryStatus::Completed;
                return traj;
            }
        }

        StepResult r = rk_step(field, y, fy, h);
        const double err = error_norm(r, y, cfg);
        if (!std::isfinite(err) || err > 1.0) {
            // reject
            const double fac = std::isfinite(err)
                                   ? std::max(0.2, 0.9 * std::pow(err, -0.2))
                                   : 0.2;
            h *= fac;
            rejected = true;
            if (h < 1e-15 * std::max(1.0, std::abs(t))) {
                traj.status = TrajectoryStatus::HitEquilibrium;
                return traj;
            }
            continue;
        }

        // accepted: scan for section events inside the step
        if (sys) {
            EventLocator locator(*sys, field, cfg.event_tol);
            auto hit = locator.find(r.dense, sys->zone_sections(zone));
            if (hit) {
                const double t_ev = t + hit->theta * h;
                SwitchEvent ev;
                ev.t = t_ev;
                ev.p = hit->p;
                ev.section = hit->section;
                ev.from_zone = zone;
                ev.to_zone = sys->neighbor_across(zone, hit->section);
                ev.transversality = hit->transversality;
                traj.events.push_back(ev);
                if (hit->transversality == 0) {
                    traj.samples.push_back({t_ev, hit->p, kBoundaryZone});
                    traj.status = TrajectoryStatus::TangentHit;
                    return traj;
                }
                if (target && hit->section == *target) {
                    traj.samples.push_back({t_ev, hit->p, kBoundaryZone});
                    traj.status = TrajectoryStatus::Completed;
                    return traj;
                }
                // hand off into the neighboring zone, nudged off the section
                zone = ev.to_zone;
                field = make_field(zone);
                Vec2 fn = field(hit->p);
                const double fn_norm = norm(fn);
                if (fn_norm < cfg.equilibrium_speed_floor) {
                    traj.status = TrajectoryStatus::HitEquilibrium;
                    return traj;
                }
                Vec2 restart = hit->p + (10.0 * cfg.event_tol / fn_norm) * fn;
                for (int k = 0; k < 6 && sys->zone_of(restart) != zone; ++k)
                    restart = restart + (10.0 * cfg.event_tol / fn_norm) * fn;
                if (sys->zone_of(restart) != zone) {
                    traj.samples.push_back({t_ev, hit->p, kBoundaryZone});
                    traj.status = TrajectoryStatus::TangentHit;
                    return traj;
                }
                t = t_ev;
                y = restart;
                fy = field(y);
                h = initial_step(field, y, cfg);
                traj.samples.push_back({t, y, zone});
                rejected = false;
                continue;
            }
        }

        t += h;
        y = r.y1;
        fy = r.f1;
        traj.samples.push_back({t, y, zone});
        if (clipped && t_end > 0.0 && t >= t_end * (1.0 - 1e-15)) {
            traj.status = TrajectoryStatus::Completed;
            return traj;
        }

        const double fac = 0.9 * std::pow(std::max(err, 1e-10), -0.2);
        const double facmax = rejected ? 1.0 : 5.0;
        h *= std::clamp(fac, 0.2, facmax);
        rejected = false;
    }
    traj.status = TrajectoryStatus::MaxStepsExceeded;
    return traj;
}

}  // namespace

Trajectory integrate_until_section(const PiecewiseSystem& system, Vec2 p0, Section target,
                                   Direction direction, const IntegratorConfig& cfg) {
    return run(&system, nullptr, p0, target, direction, 0.0, cfg);
}

Trajectory flow_for_time(const ZoneField& zone, Vec2 p0, double t, const IntegratorConfig& cfg) {
    const Direction dir = t >= 0.0 ? Direction::Forward : Direction::Backward;
    if (t == 0.0) {
        Trajectory traj;
        traj.samples.push_back({0.0, p0, 0});
        traj.status = TrajectoryStatus::Completed;
        return traj;
    }
    return run(nullptr, &zone, p0, std::nullopt, dir, std::abs(t), cfg);
}

Trajectory flow_system_for_time(const PiecewiseSystem& system, Vec2 p0, double t,
                                const IntegratorConfig& cfg) {
    const Direction dir = t >= 0.0 ? Direction::Forward : Direction::Backward;
    if (t == 0.0) {
        Trajectory traj;
        traj.samples.push_back({0.0, p0, system.zone_of(p0)});
        traj.status = TrajectoryStatus::Completed;
        return traj;
    }
    return run(&system, nullptr, p0, std::nullopt, dir, std::abs(t), cfg);
}

Vec2 flow_linear_saddle_exact(const SaddleSpec& s, Vec2 p0, double t) {
    const double disc = s.disc();
    if (disc >= 0.0) throw DegenerateError("exact saddle flow needs a negative discriminant");
    const double w = std::sqrt(-disc);
    const double x0 = -(s.beta * s.mu + s.delta * s.gamma) / disc;
    const double y0 = (s.alpha * s.mu + s.beta * s.gamma) / disc;
    const Vec2 q{p0.x - x0, p0.y - y0};
    const Vec2 Mq{-s.beta * q.x - s.delta * q.y, s.alpha * q.x + s.beta * q.y};
    const double ch = std::cosh(w * t), sh = std::sinh(w * t) / w;
    return {x0 + ch * q.x + sh * Mq.x, y0 + ch * q.y + sh * Mq.y};
}

}  // namespace pwc
