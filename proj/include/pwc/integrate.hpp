#ifndef PWC_INTEGRATE_HPP
#define PWC_INTEGRATE_HPP

#include <functional>
#include <optional>
#include <vector>

#include "pwc/core.hpp"
#include "pwc/model.hpp"

namespace pwc {

struct IntegratorConfig {
    double rel_tol = 1e-10;
    double abs_tol = 1e-12;
    long max_steps = 1000000;
    double event_tol = 1e-12;
    double equilibrium_speed_floor = 1e-13;
    double escape_radius = 1e8;  // trajectories beyond this radius stop with LeftDomain
};

enum class TrajectoryStatus {
    Completed,         // terminated at the requested section, transversally
    LeftDomain,        // escaped the working radius
    MaxStepsExceeded,
    HitEquilibrium,    // local speed fell below the floor
    TangentHit,        // reached a switching set tangentially; not continued
};

const char* to_string(TrajectoryStatus s);

enum class Direction { Forward, Backward };

struct TrajectorySample {
    double t;   // traversal time, strictly increasing regardless of direction
    Vec2 p;
    int zone;
};

struct SwitchEvent {
    double t;
    Vec2 p;
    Section section;
    int from_zone;
    int to_zone;
    // Sign of the section-coordinate rate along the traversal: +1, -1, or 0
    // when the hit is tangential within tolerance.
    int transversality;
};

struct Trajectory {
    std::vector<TrajectorySample> samples;
    std::vector<SwitchEvent> events;
    TrajectoryStatus status = TrajectoryStatus::MaxStepsExceeded;
    Direction direction = Direction::Forward;
};

/// Integrates the piecewise field from p0 until the first transversal hit of
/// `target`. Crossings of other switching sections are stitched: the event is
/// recorded and the state restarts 10*event_tol inside the next zone along
/// that zone's field. p0 must lie strictly inside a zone with nonzero field.
///
/// Embedded Dormand-Prince 5(4) steps with per-step polynomial dense output;
/// events are located by bisection on the dense interpolant until the section
/// coordinate of the reported point is below event_tol.
Trajectory integrate_until_section(const PiecewiseSystem& system, Vec2 p0, Section target,
                                   Direction direction, const IntegratorConfig& cfg = {});

/// Fixed-duration integration of a single zone field (no section handling).
/// Used by conservation and oracle tests.
Trajectory flow_for_time(const ZoneField& zone, Vec2 p0, double t,
                         const IntegratorConfig& cfg = {});

/// Fixed-duration integration of the piecewise system with zone stitching but
/// no terminating section. Portrait orbits use this.
Trajectory flow_system_for_time(const PiecewiseSystem& system, Vec2 p0, double t,
                                const IntegratorConfig& cfg = {});

/// Closed-form affine saddle flow. With M the linear part and q the
/// equilibrium, returns q + exp(M t)(p0 - q); exp(M t) reduces to
/// cosh(w t) I + sinh(w t)/w M because M^2 = w^2 I, w = sqrt(-disc).
/// Throws DegenerateError when disc >= 0.
Vec2 flow_linear_saddle_exact(const SaddleSpec& s, Vec2 p0, double t);

}  // namespace pwc

#endif
