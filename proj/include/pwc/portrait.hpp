#ifndef PWC_PORTRAIT_HPP
#define PWC_PORTRAIT_HPP

#include <string>
#include <vector>

#include "pwc/closing.hpp"
#include "pwc/integrate.hpp"
#include "pwc/model.hpp"

namespace pwc {

struct PortraitOptions {
    double x0 = -3, y0 = -3, x1 = 3, y1 = 3;  // drawing box
    int orbits = 8;                            // seed orbits per direction
    double time_span = 25.0;                   // integration budget per orbit
    bool csv = false;
};

struct PortraitData {
    std::vector<Trajectory> orbits;
    std::vector<std::pair<Vec2, Vec2>> separatrix_segments;
    std::vector<Vec2> equilibria;
    std::vector<std::vector<Vec2>> cycles;  // detected cycle polylines
};

/// Integrates geometrically spaced seed orbits from the switching sections and
/// collects separatrices, equilibria, and the cycles named by the closing
/// report (when given).
PortraitData build_portrait(const PiecewiseSystem& system, const ClosingReport* closing,
                            const PortraitOptions& opts, const IntegratorConfig& cfg = {});

/// Deterministic SVG 1.1 document, y-axis up, viewBox matching the box.
std::string render_svg(const PortraitData& data, const PiecewiseSystem& system,
                       const PortraitOptions& opts);

/// One row per trajectory sample: t,x,y,zone (header included); orbits are
/// concatenated in seed order, each restarting at t = 0.
std::string render_csv(const PortraitData& data);

}  // namespace pwc

#endif
