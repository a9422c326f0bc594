#ifndef PWC_SADDLE_GEOMETRY_HPP
#define PWC_SADDLE_GEOMETRY_HPP

#include <utility>

#include "pwc/core.hpp"
#include "pwc/model.hpp"

namespace pwc {

/// Equilibrium and separatrix data of a hyperbolic SaddleSpec.
///
/// With u = beta*mu + delta*gamma, v = alpha*mu + beta*gamma and
/// D = alpha*delta - beta^2 < 0:
///   (x0, y0) = (-u/D, v/D)
///   A = y0 + (beta + sqrt(-D))/delta * x0     (y-axis intercepts, delta != 0)
///   B = y0 + (beta - sqrt(-D))/delta * x0
/// The separatrix through (0, A) has dy/dx slope -(beta + sqrt(-D))/delta,
/// the one through (0, B) slope -(beta - sqrt(-D))/delta; when delta = 0 one
/// separatrix is the vertical line x = x0 and A, B are undefined.
struct SaddleGeometry {
    double x0 = 0.0;
    double y0 = 0.0;
    bool has_axis_points = false;  // false when delta == 0
    double A = 0.0;
    double B = 0.0;
    bool vertical_separatrix = false;
    double slope_a = 0.0;  // slope of the separatrix hitting (0, A); NaN if vertical
    double slope_b = 0.0;
};

/// Throws DegenerateError when the discriminant is nonnegative. A delta = 0
/// input yields a partial result (equilibrium + slopes, no axis points).
SaddleGeometry analyze_saddle(const SaddleSpec& s);

/// True iff the two separatrices meet the y-axis strictly on opposite sides
/// of the origin (A*B < 0). Requires delta != 0.
bool separatrices_cross_axis_opposite(const SaddleSpec& s);

enum class RaySign { Plus, Minus };

/// Intersection of one separatrix line y - beta = line_sign*(x - alpha) of a
/// sector saddle with the ray theta = +-phi. Throws NoIntersection when the
/// line is parallel to the ray or meets it at nonpositive radius.
Vec2 separatrix_ray_intersection(const RaySaddleSpec& s, int line_sign, RaySign ray, double phi);

/// The two cycle-relevant intersections: the descending separatrix
/// (line_sign = -1) with the upper ray, and the ascending one (+1) with the
/// lower ray. For beta = 0 the two points are mirror images across the x-axis.
std::pair<Vec2, Vec2> separatrix_ray_intersections(const RaySaddleSpec& s, double phi);

}  // namespace pwc

#endif
