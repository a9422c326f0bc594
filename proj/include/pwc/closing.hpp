#ifndef PWC_CLOSING_HPP
#define PWC_CLOSING_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "pwc/core.hpp"
#include "pwc/model.hpp"

namespace pwc {

enum class Classification {
    PeriodAnnulus,
    NoRealCandidate,
    Candidates,
    DegenerateDoubleRoot,
    SeparatrixCycleOnly,
};

const char* to_string(Classification c);

struct CandidatePoint {
    Section section;
    double ordinate;
};

/// One algebraic solution of the closing equations: the section crossing
/// points in traversal order, with the zone carrying each leg
/// (points[i] -> points[i+1 mod n] runs through zone_sequence[i]).
/// Admissibility filters (crossing-direction compatibility at every point,
/// integral-domain restrictions, nonzero ordinates) never delete a solution;
/// they mark it and record the reason, and the numeric verifier adjudicates.
struct CrossingCandidate {
    std::vector<CandidatePoint> points;
    std::vector<int> zone_sequence;
    bool degenerate = false;
    std::vector<double> residuals;  // matching equations re-evaluated from first integrals
    bool admissible = true;
    std::vector<std::string> rejections;
};

/// Ordinate interval on the report's primary section carrying a continuum of
/// closed orbits (open interval; empty when hi <= lo).
struct AnnulusInfo {
    double lo = 0.0;
    double hi = 0.0;
    std::string note;
};

struct SeparatrixCycleInfo {
    double upper = 0.0;  // section ordinates (radii for ray systems)
    double lower = 0.0;
};

struct ClosingReport {
    Classification classification = Classification::NoRealCandidate;
    std::string regime;  // which analysis branch fired
    std::map<std::string, double> parameters;
    std::vector<CrossingCandidate> candidates;
    int root_count = 0;  // raw real roots before unordered-pair deduplication
    std::optional<AnnulusInfo> annulus;
    std::optional<SeparatrixCycleInfo> separatrix_cycle;
    std::vector<std::string> notes;
};

/// Quartic center (F1..F5) against a Hamiltonian saddle across x = 0.
/// With k the center's quartic coefficient and trace H(0,y) = -delta y^2/2 + mu y:
///   mu = 0            -> period annulus (bounded by the section fold when k < 0)
///   mu != 0, k >= 0   -> no real candidate
///   mu != 0, k < 0    -> the pair y = mu/delta +- sqrt(D), D = -mu^2/delta^2 - 1/k;
///                        D < 0 none, D = 0 coincident pair at mu/delta, D > 0 one
///                        unordered pair (two roots).
/// Throws DegenerateConfig when delta = 0 with mu != 0.
ClosingReport close_two_zone_nilpotent(const CenterSpec& center, const SaddleSpec& saddle);

/// Degenerate integrable center (I1/I2) against a Hamiltonian saddle across
/// x = 0. Requires x0 > 0 (HypothesisViolation otherwise). mu = 0 yields a
/// period annulus plus a separatrix-cycle marker when the axis intercepts are
/// symmetric; mu != 0 yields no candidates.
ClosingReport close_two_zone_degenerate(const CenterSpec& center, const SaddleSpec& saddle);

/// Quartic center (x < -1) with two Hamiltonian saddles. Solves the symmetric
/// center branch y2 = -y1; the reduced equation in y1 is an even quadratic, so
/// the branch carries at most one distinct cycle (the +-root pair describes
/// the same four crossing points with the x = 1 ordinates swapped).
ClosingReport close_three_zone_nilpotent(const CenterSpec& center, const SaddleSpec& s1,
                                         const SaddleSpec& s2);

/// Degenerate center (x < -1) with two Hamiltonian saddles; same reduction
/// with the center branch forced to y1 = -y2 by the injectivity of the
/// integral traces in y^2.
ClosingReport close_three_zone_degenerate(const CenterSpec& center, const SaddleSpec& s1,
                                          const SaddleSpec& s2);

enum class RaySystemKind { FrozenRadial, I1Sector, I2Sector };

const char* to_string(RaySystemKind k);

/// Sector saddle against an outer integrable zone across the rays theta=+-phi.
/// FrozenRadial and I2Sector always carry exactly one cycle through the
/// separatrix/ray intersections; I1Sector carries one iff |alpha+beta| <= 1
/// and |alpha-beta| <= 1 (the intersection points must lie inside the closed
/// invariant unit circle of the outer zone).
ClosingReport close_ray_system(RaySystemKind kind, const RaySaddleSpec& saddle, double phi);

}  // namespace pwc

#endif
