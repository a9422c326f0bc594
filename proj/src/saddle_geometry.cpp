#include "pwc/saddle_geometry.hpp"

#include <cmath>
#include <limits>

namespace pwc {

SaddleGeometry analyze_saddle(const SaddleSpec& s) {
    const double disc = s.disc();
    const double scale = std::max({1.0, std::abs(s.alpha * s.delta), s.beta * s.beta});
    if (disc >= 0.0 || near_zero(disc, scale))
        throw DegenerateError("analyze_saddle: alpha*delta - beta^2 must be negative");

    const double u = s.beta * s.mu + s.delta * s.gamma;
    const double v = s.alpha * s.mu + s.beta * s.gamma;
    const double omega = std::sqrt(-disc);

    SaddleGeometry g;
    g.x0 = -u / disc;
    g.y0 = v / disc;
    if (s.delta != 0.0) {
        g.has_axis_points = true;
        g.A = g.y0 + (s.beta + omega) / s.delta * g.x0;
        g.B = g.y0 + (s.beta - omega) / s.delta * g.x0;
        g.slope_a = -(s.beta + omega) / s.delta;
        g.slope_b = -(s.beta - omega) / s.delta;
    } else {
        // Eigen-directions of [[-b,0],[a,b]]: x = x0 (vertical) and slope -a/(2b).
        g.vertical_separatrix = true;
        g.slope_a = std::numeric_limits<double>::quiet_NaN();
        g.slope_b = -s.alpha / (2 * s.beta);
    }
    return g;
}

bool separatrices_cross_axis_opposite(const SaddleSpec& s) {
    SaddleGeometry g = analyze_saddle(s);
    if (!g.has_axis_points)
        throw DegenerateError("separatrix axis intercepts undefined for delta = 0");
    return g.A * g.B < 0.0;
}

Vec2 separatrix_ray_intersection(const RaySaddleSpec& s, int line_sign, RaySign ray,
                                 double phi) {
    // Line: y - beta = line_sign (x - alpha); ray: t (cos psi, sin psi), t > 0.
    const double c = std::cos(phi);
    const double sn = (ray == RaySign::Plus) ? std::sin(phi) : -std::sin(phi);
    const double denom = sn - line_sign * c;
    const double numer = s.beta - line_sign * s.alpha;
    if (near_zero(denom))
        throw NoIntersection("separatrix parallel to ray");
    const double t = numer / denom;
    if (!(t > 0.0))
        throw NoIntersection("separatrix meets the ray line outside the sector");
    return {t * c, t * sn};
}

std::pair<Vec2, Vec2> separatrix_ray_intersections(const RaySaddleSpec& s, double phi) {
    Vec2 upper = separatrix_ray_intersection(s, -1, RaySign::Plus, phi);
    Vec2 lower = separatrix_ray_intersection(s, +1, RaySign::Minus, phi);
    return {upper, lower};
}

}  // namespace pwc
