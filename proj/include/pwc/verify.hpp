#ifndef PWC_VERIFY_HPP
#define PWC_VERIFY_HPP

#include <optional>
#include <string>
#include <vector>

#include "pwc/closing.hpp"
#include "pwc/core.hpp"
#include "pwc/integrate.hpp"
#include "pwc/model.hpp"

namespace pwc {

enum class Monotonicity { Increasing, Decreasing, Unknown };

/// Sampled Poincare half-map of a single zone: entry ordinate on the zone's
/// section to the return ordinate after traversing the zone once. Ordinates
/// where no Completed trajectory exists are domain gaps.
struct HalfMapSample {
    double y_in;
    std::optional<double> y_out;  // empty = gap
    TrajectoryStatus status = TrajectoryStatus::Completed;
};

struct HalfMap {
    const PiecewiseSystem* system = nullptr;
    int side = 0;
    Section section_in = Section::X0;
    Section section_out = Section::X0;
    std::vector<HalfMapSample> samples;
    Monotonicity monotonicity = Monotonicity::Unknown;
    IntegratorConfig config;

    /// Fresh evaluation (one integration); nullopt on gaps.
    std::optional<double> evaluate(double y_in) const;
};

/// Whether grid evaluations run through the OpenMP kernel or the serial
/// reference loop. Both produce bitwise-identical tables.
enum class ExecutionMode { Serial, Parallel };

/// Samples the half-map of `side` on the given entry ordinates. The arc
/// through (section, y) is taken inside `side` regardless of the field's
/// crossing direction there: entering points integrate forward, exiting
/// points backward, so the sample always reports the arc's other endpoint.
/// Throws EmptyDomain when every grid point fails.
HalfMap half_map(const PiecewiseSystem& system, int side, const std::vector<double>& y_grid,
                 const IntegratorConfig& cfg = {}, ExecutionMode mode = ExecutionMode::Parallel);

/// Same-section transit map variant for ray systems (entry and exit rays differ).
HalfMap half_map_between(const PiecewiseSystem& system, int side, Section section_in,
                         Section section_out, const std::vector<double>& y_grid,
                         const IntegratorConfig& cfg = {},
                         ExecutionMode mode = ExecutionMode::Parallel);

struct FixedPointHit {
    double y = 0.0;  // refined fixed point of the composed map
    double bracket_lo = 0.0;
    double bracket_hi = 0.0;
    double residual = 0.0;  // |composed(y) - y| after refinement
};

struct FixedPointScan {
    std::vector<FixedPointHit> zeros;
    bool continuum = false;  // >= 95% of a connected subdomain closes to <= 1e-6
    std::vector<std::pair<double, double>> gaps;  // unreachable ordinate intervals
    std::vector<double> grid;
    std::vector<double> gap_values;  // composed(y) - y per grid point (NaN on gaps)
};

/// Brute-force fixed points of the composed map second(first(y)) - y on a
/// uniform grid over [lo, hi] with spacing <= resolution; sign-change brackets
/// are refined by bisection to 1e-10. Grid evaluations are independent and run
/// under the selected execution mode.
FixedPointScan scan_fixed_points(const HalfMap& first, const HalfMap& second, double lo,
                                 double hi, double resolution,
                                 ExecutionMode mode = ExecutionMode::Parallel);

struct LegResult {
    double predicted = 0.0;
    double integrated = 0.0;
    TrajectoryStatus status = TrajectoryStatus::Completed;
};

struct VerificationVerdict {
    bool confirmed = false;
    double closure_error = 0.0;  // |final return ordinate - starting ordinate|
    double max_leg_gap = 0.0;    // worst |integrated - predicted| over the legs
    std::vector<LegResult> legs;
    std::string cause;  // set when unconfirmed
};

/// Integrates the candidate's full predicted cycle leg by leg (continuing from
/// each integrated arrival, not re-anchoring) and confirms iff the final
/// return lands within 1e-6 of the start.
VerificationVerdict verify_candidate(const PiecewiseSystem& system,
                                     const CrossingCandidate& candidate,
                                     const IntegratorConfig& cfg = {});

/// Closure error |composed(y) - y| of the symmetric annulus orbit through the
/// given ordinate; infinity when either arc fails.
double annulus_closure_error(const PiecewiseSystem& system, double y,
                             const IntegratorConfig& cfg = {});

}  // namespace pwc

#endif
