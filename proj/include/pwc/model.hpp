#ifndef PWC_MODEL_HPP
#define PWC_MODEL_HPP

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "pwc/core.hpp"

namespace pwc {

/// Affine Hamiltonian saddle-family field:
///   x' = -beta*x - delta*y + mu
///   y' =  alpha*x + beta*y + gamma
/// with stream function
///   H = -alpha*x^2/2 - delta*y^2/2 - beta*x*y - gamma*x + mu*y.
/// Hyperbolic (a genuine saddle) iff disc() < 0.
struct SaddleSpec {
    double alpha = 0.0;
    double beta = 0.0;
    double delta = 0.0;
    double gamma = 0.0;
    double mu = 0.0;

    double disc() const { return alpha * delta - beta * beta; }
};

enum class CenterKind { F1, F2, F3, F4, F5, I1, I2 };

/// One of the planar center families. `a` is used by F3/F4/F5, `b` by F5.
/// F1..F5 are quartic Hamiltonian centers; I1/I2 are integrable degenerate
/// centers with non-polynomial first integrals.
struct CenterSpec {
    CenterKind kind = CenterKind::F1;
    double a = 0.0;
    double b = 0.0;

    /// Coefficient k of y^4/4 in the section trace F(0, y) = y^2/2 + k y^4/4.
    /// Defined for the quartic families only.
    double quartic_k() const;
    bool is_quartic() const { return kind != CenterKind::I1 && kind != CenterKind::I2; }
};

const char* to_string(CenterKind k);
std::optional<CenterKind> center_kind_from_string(const std::string& s);

/// Non-Hamiltonian saddle used in the sector (ray-separated) systems:
///   x' = a (x - alpha) - (y - beta)
///   y' = -(x - alpha) + a (y - beta),  -1 < a < 0.
/// Its first integral is ln|v^2 - u^2| - a ln|(v-u)/(v+u)| with
/// u = x - alpha, v = y - beta.
struct RaySaddleSpec {
    double a = -0.5;
    double alpha = 1.0;
    double beta = 0.0;
};

/// (x', y') = (-y, x^(2n-1)); level sets x^(2n) + n y^2 = const.
struct FrozenRadialSpec {
    int n = 1;
};

/// A verbatim affine field (x', y') = (a11 x + a12 y + b1, a21 x + a22 y + b2).
/// Used for catalog entries whose printed right parts are not divergence-free;
/// such zones have no first integral and are excluded from the closing solvers.
struct AffineSpec {
    double a11 = 0, a12 = 0, b1 = 0;
    double a21 = 0, a22 = 0, b2 = 0;

    double divergence() const { return a11 + a22; }
    /// Reinterpret as a SaddleSpec when divergence vanishes.
    std::optional<SaddleSpec> as_saddle() const;
};

using ZoneField = std::variant<CenterSpec, SaddleSpec, RaySaddleSpec, FrozenRadialSpec, AffineSpec>;

struct SwitchingGeometry {
    enum class Variant { OneLine, TwoLines, RayPair };
    Variant variant = Variant::OneLine;
    double phi = 1.5707963267948966;  // ray half-angle, RayPair only
};

// Switching sections. Lines are fixed at x = 0 and x = +-1; rays pass through
// the origin at angles +-phi.
enum class Section { X0, Xm1, Xp1, RayPlus, RayMinus };

const char* to_string(Section s);

constexpr int kBoundaryZone = -1;

/// Zones plus switching geometry. Zone order is fixed:
///   OneLine : {x<0, x>0}
///   TwoLines: {x<-1, -1<x<1, x>1}
///   RayPair : {|theta|<phi (inner), |theta|>phi (outer)}
struct PiecewiseSystem {
    SwitchingGeometry geometry;
    std::vector<ZoneField> zones;

    int zone_count() const { return static_cast<int>(zones.size()); }
    /// Zone containing p, or kBoundaryZone if p lies on the switching set
    /// (exact comparison on the defining coordinate).
    int zone_of(Vec2 p) const;
    /// Sections bounding the given zone.
    std::vector<Section> zone_sections(int zone) const;
    /// Zone reached from `zone` when crossing `s`.
    int neighbor_across(int zone, Section s) const;

    /// Signed section coordinate; zero on the section.
    double section_coordinate(Section s, Vec2 p) const;
    /// For rays only: true when p projects onto the positive ray, not its
    /// opposite extension. Lines are always valid.
    bool on_section_side(Section s, Vec2 p) const;
    /// Point of the section at the given ordinate (y for lines, radius for rays).
    Vec2 section_point(Section s, double ordinate) const;
    double section_ordinate(Section s, Vec2 p) const;
    /// Unit normal of the section (gradient of section_coordinate).
    Vec2 section_normal(Section s) const;

    static PiecewiseSystem one_line(ZoneField left, ZoneField right);
    static PiecewiseSystem two_lines(ZoneField left, ZoneField middle, ZoneField right);
    static PiecewiseSystem ray_pair(ZoneField inner, ZoneField outer, double phi);
};

/// Vector field of a single zone at p. Total on finite inputs.
Vec2 field_at(const ZoneField& zone, Vec2 p);

/// First integral of the zone at p. Throws DomainError outside the integral's
/// domain (I1 needs x^2+y^2 > 1 and y != 0; I2 needs p != 0; the ray saddle
/// integral is singular on its separatrices). AffineSpec zones with nonzero
/// divergence have no first integral.
double first_integral(const ZoneField& zone, Vec2 p);

/// Analytic gradient of first_integral. Same domain restrictions.
Vec2 gradient(const ZoneField& zone, Vec2 p);

/// True if the zone carries a first integral evaluable by first_integral.
bool has_first_integral(const ZoneField& zone);

/// Validates the normalization constraints of the center/saddle families
/// (opt-in; the catalog itself contains parameter sets outside them).
/// Returns a diagnostic per violated constraint.
std::vector<std::string> canonical_violations(const CenterSpec& c);
std::vector<std::string> canonical_violations(const SaddleSpec& s);

}  // namespace pwc

#endif
