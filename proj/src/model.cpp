#include "pwc/model.hpp"

#include <cmath>

namespace pwc {

namespace {

double sq(double v) { return v * v; }

}  // namespace

double CenterSpec::quartic_k() const {
    switch (kind) {
        case CenterKind::F1: return 0.0;
        case CenterKind::F2: return 1.0;
        case CenterKind::F3: return a;
        case CenterKind::F4: return a;
        case CenterKind::F5: return b;
        default: throw DomainError("quartic_k: not a quartic center family");
    }
}

const char* to_string(CenterKind k) {
    switch (k) {
        case CenterKind::F1: return "F1";
        case CenterKind::F2: return "F2";
        case CenterKind::F3: return "F3";
        case CenterKind::F4: return "F4";
        case CenterKind::F5: return "F5";
        case CenterKind::I1: return "I1";
        case CenterKind::I2: return "I2";
    }
    return "?";
}

std::optional<CenterKind> center_kind_from_string(const std::string& s) {
    if (s == "F1" || s == "f1") return CenterKind::F1;
    if (s == "F2" || s == "f2") return CenterKind::F2;
    if (s == "F3" || s == "f3") return CenterKind::F3;
    if (s == "F4" || s == "f4") return CenterKind::F4;
    if (s == "F5" || s == "f5") return CenterKind::F5;
    if (s == "I1" || s == "i1") return CenterKind::I1;
    if (s == "I2" || s == "i2") return CenterKind::I2;
    return std::nullopt;
}

const char* to_string(Section s) {
    switch (s) {
        case Section::X0: return "x=0";
        case Section::Xm1: return "x=-1";
        case Section::Xp1: return "x=+1";
        case Section::RayPlus: return "ray+";
        case Section::RayMinus: return "ray-";
    }
    return "?";
}

std::optional<SaddleSpec> AffineSpec::as_saddle() const {
    if (std::abs(divergence()) > kZeroTol * std::max({1.0, std::abs(a11), std::abs(a22)}))
        return std::nullopt;
    // x' = -beta x - delta y + mu ; y' = alpha x + beta y + gamma
    SaddleSpec s;
    s.beta = -a11;
    s.delta = -a12;
    s.mu = b1;
    s.alpha = a21;
    s.gamma = b2;
    return s;
}

// ---------------------------------------------------------------------------
// fields

namespace {

Vec2 center_field(const CenterSpec& c, Vec2 p) {
    const double x = p.x, y = p.y;
    switch (c.kind) {
        case CenterKind::F1:
            return {y, -x * x * x};
        case CenterKind::F2:
            return {y + y * y * y, -x * x * x};
        case CenterKind::F3:
            return {y + x * x * y + c.a * y * y * y, -x * x * x - x * y * y};
        case CenterKind::F4:
            return {y - x * x * y + c.a * y * y * y, -x * x * x + x * y * y};
        case CenterKind::F5:
            return {y + 2 * x * y + c.a * x * x * y + c.b * y * y * y,
                    -x * x * x - y * y - c.a * x * y * y};
        case CenterKind::I1:
            return {y * (x * x - y * y) - 2 * x * x * x * x * y,
                    x * (x * x + y * y) - 2 * x * x * x * y * y};
        case CenterKind::I2:
            return {-y * (3 * x * x + y * y), x * (x * x - y * y)};
    }
    return {};
}

double center_integral(const CenterSpec& c, Vec2 p) {
    const double x = p.x, y = p.y;
    const double x2 = x * x, y2 = y * y;
    switch (c.kind) {
        case CenterKind::F1:
            return y2 / 2 + x2 * x2 / 4;
        case CenterKind::F2:
            return y2 / 2 + y2 * y2 / 4 + x2 * x2 / 4;
        case CenterKind::F3:
            return x2 * x2 / 4 + x2 * y2 / 2 + y2 / 2 + c.a * y2 * y2 / 4;
        case CenterKind::F4:
            return x2 * x2 / 4 - x2 * y2 / 2 + y2 / 2 + c.a * y2 * y2 / 4;
        case CenterKind::F5:
            return x2 * x2 / 4 + c.a * x2 * y2 / 2 + x * y2 + y2 / 2 + c.b * y2 * y2 / 4;
        case CenterKind::I1: {
            const double r2 = x2 + y2;
            if (!(r2 > 1.0) || y == 0.0)
                throw DomainError("I1 integral needs x^2+y^2 > 1 and y != 0");
            return std::log(r2 - 1) - 0.5 * std::log(x2 * x2 + y2 * y2) -
                   std::atan(x2 / y2);
        }
        case CenterKind::I2: {
            const double r2 = x2 + y2;
            if (r2 == 0.0) throw DomainError("I2 integral undefined at the origin");
            return 0.5 * std::log(r2) - x2 / r2;
        }
    }
    return 0.0;
}

Vec2 center_gradient(const CenterSpec& c, Vec2 p) {
    const double x = p.x, y = p.y;
    const double x2 = x * x, y2 = y * y;
    switch (c.kind) {
        case CenterKind::F1:
            return {x * x2, y};
        case CenterKind::F2:
            return {x * x2, y + y * y2};
        case CenterKind::F3:
            return {x * x2 + x * y2, x2 * y + y + c.a * y * y2};
        case CenterKind::F4:
            return {x * x2 - x * y2, -x2 * y + y + c.a * y * y2};
        case CenterKind::F5:
            return {x * x2 + c.a * x * y2 + y2, c.a * x2 * y + 2 * x * y + y + c.b * y * y2};
        case CenterKind::I1: {
            const double r2 = x2 + y2;
            if (!(r2 > 1.0) || y == 0.0)
                throw DomainError("I1 gradient needs x^2+y^2 > 1 and y != 0");
            const double q = x2 * x2 + y2 * y2;
            // d/dx atan(x^2/y^2) = 2xy^2/q, d/dy = -2x^2 y/q
            return {2 * x / (r2 - 1) - 2 * x * x2 / q - 2 * x * y2 / q,
                    2 * y / (r2 - 1) - 2 * y * y2 / q + 2 * x2 * y / q};
        }
        case CenterKind::I2: {
            const double r2 = x2 + y2;
            if (r2 == 0.0) throw DomainError("I2 gradient undefined at the origin");
            return {x / r2 - 2 * x * y2 / (r2 * r2), y / r2 + 2 * x2 * y / (r2 * r2)};
        }
    }
    return {};
}

double ray_saddle_integral(const RaySaddleSpec& s, Vec2 p) {
    const double u = p.x - s.alpha, v = p.y - s.beta;
    const double d = v * v - u * u;
    const double ratio = (v - u) / (v + u);
    if (d == 0.0 || v + u == 0.0 || ratio == 0.0 || !std::isfinite(ratio))
        throw DomainError("sector saddle integral singular on its separatrices");
    return std::log(std::abs(d)) - s.a * std::log(std::abs(ratio));
}

Vec2 ray_saddle_gradient(const RaySaddleSpec& s, Vec2 p) {
    const double u = p.x - s.alpha, v = p.y - s.beta;
    const double d = v * v - u * u;
    if (d == 0.0) throw DomainError("sector saddle gradient singular on its separatrices");
    // d/du of ln|v^2-u^2| is -2u/d; of -a ln|(v-u)/(v+u)| is a(1/(v-u) + 1/(v+u)).
    const double gu = -2 * u / d + s.a * (1.0 / (v - u) + 1.0 / (v + u));
    const double gv = 2 * v / d - s.a * (1.0 / (v - u) - 1.0 / (v + u));
    return {gu, gv};
}

}  // namespace

Vec2 field_at(const ZoneField& zone, Vec2 p) {
    return std::visit(
        [&](const auto& z) -> Vec2 {
            using T = std::decay_t<decltype(z)>;
            if constexpr (std::is_same_v<T, CenterSpec>) {
                return center_field(z, p);
            } else if constexpr (std::is_same_v<T, SaddleSpec>) {
                return {-z.beta * p.x - z.delta * p.y + z.mu,
                        z.alpha * p.x + z.beta * p.y + z.gamma};
            } else if constexpr (std::is_same_v<T, RaySaddleSpec>) {
                const double u = p.x - z.alpha, v = p.y - z.beta;
                return {z.a * u - v, -u + z.a * v};
            } else if constexpr (std::is_same_v<T, FrozenRadialSpec>) {
                double xp = 1.0;
                for (int i = 0; i < 2 * z.n - 1; ++i) xp *= p.x;
                return {-p.y, xp};
            } else {
                return {z.a11 * p.x + z.a12 * p.y + z.b1,
                        z.a21 * p.x + z.a22 * p.y + z.b2};
            }
        },
        zone);
}

double first_integral(const ZoneField& zone, Vec2 p) {
    return std::visit(
        [&](const auto& z) -> double {
            using T = std::decay_t<decltype(z)>;
            if constexpr (std::is_same_v<T, CenterSpec>) {
                return center_integral(z, p);
            } else if constexpr (std::is_same_v<T, SaddleSpec>) {
                return -0.5 * z.alpha * p.x * p.x - 0.5 * z.delta * p.y * p.y -
                       z.beta * p.x * p.y - z.gamma * p.x + z.mu * p.y;
            } else if constexpr (std::is_same_v<T, RaySaddleSpec>) {
                return ray_saddle_integral(z, p);
            } else if constexpr (std::is_same_v<T, FrozenRadialSpec>) {
                double xp = 1.0;
                for (int i = 0; i < 2 * z.n; ++i) xp *= p.x;
                return xp / (2 * z.n) + p.y * p.y / 2;
            } else {
                auto s = z.as_saddle();
                if (!s) throw DomainError("affine zone with nonzero divergence has no first integral");
                return first_integral(ZoneField{*s}, p);
            }
        },
        zone);
}

Vec2 gradient(const ZoneField& zone, Vec2 p) {
    return std::visit(
        [&](const auto& z) -> Vec2 {
            using T = std::decay_t<decltype(z)>;
            if constexpr (std::is_same_v<T, CenterSpec>) {
                return center_gradient(z, p);
            } else if constexpr (std::is_same_v<T, SaddleSpec>) {
                return {-z.alpha * p.x - z.beta * p.y - z.gamma,
                        -z.delta * p.y - z.beta * p.x + z.mu};
            } else if constexpr (std::is_same_v<T, RaySaddleSpec>) {
                return ray_saddle_gradient(z, p);
            } else if constexpr (std::is_same_v<T, FrozenRadialSpec>) {
                double xp = 1.0;
                for (int i = 0; i < 2 * z.n - 1; ++i) xp *= p.x;
                return {xp, p.y};
            } else {
                auto s = z.as_saddle();
                if (!s) throw DomainError("affine zone with nonzero divergence has no first integral");
                return gradient(ZoneField{*s}, p);
            }
        },
        zone);
}

bool has_first_integral(const ZoneField& zone) {
    if (const auto* a = std::get_if<AffineSpec>(&zone)) return a->as_saddle().has_value();
    return true;
}

// ---------------------------------------------------------------------------
// switching geometry

int PiecewiseSystem::zone_of(Vec2 p) const {
    switch (geometry.variant) {
        case SwitchingGeometry::Variant::OneLine:
            if (p.x == 0.0) return kBoundaryZone;
            return p.x < 0.0 ? 0 : 1;
        case SwitchingGeometry::Variant::TwoLines:
            if (p.x == -1.0 || p.x == 1.0) return kBoundaryZone;
            if (p.x < -1.0) return 0;
            return p.x < 1.0 ? 1 : 2;
        case SwitchingGeometry::Variant::RayPair: {
            if (p.x == 0.0 && p.y == 0.0) return kBoundaryZone;
            const double theta = std::atan2(p.y, p.x);
            const double at = std::abs(theta);
            if (at == geometry.phi) return kBoundaryZone;
            return at < geometry.phi ? 0 : 1;
        }
    }
    return kBoundaryZone;
}

std::vector<Section> PiecewiseSystem::zone_sections(int zone) const {
    switch (geometry.variant) {
        case SwitchingGeometry::Variant::OneLine:
            return {Section::X0};
        case SwitchingGeometry::Variant::TwoLines:
            if (zone == 0) return {Section::Xm1};
            if (zone == 1) return {Section::Xm1, Section::Xp1};
            return {Section::Xp1};
        case SwitchingGeometry::Variant::RayPair:
            return {Section::RayPlus, Section::RayMinus};
    }
    return {};
}

int PiecewiseSystem::neighbor_across(int zone, Section s) const {
    switch (geometry.variant) {
        case SwitchingGeometry::Variant::OneLine:
            return zone == 0 ? 1 : 0;
        case SwitchingGeometry::Variant::TwoLines:
            if (s == Section::Xm1) return zone == 0 ? 1 : 0;
            return zone == 1 ? 2 : 1;
        case SwitchingGeometry::Variant::RayPair:
            return zone == 0 ? 1 : 0;
    }
    return kBoundaryZone;
}

double PiecewiseSystem::section_coordinate(Section s, Vec2 p) const {
    const double c = std::cos(geometry.phi), sn = std::sin(geometry.phi);
    switch (s) {
        case Section::X0: return p.x;
        case Section::Xm1: return p.x + 1.0;
        case Section::Xp1: return p.x - 1.0;
        case Section::RayPlus: return c * p.y - sn * p.x;
        case Section::RayMinus: return c * p.y + sn * p.x;
    }
    return 0.0;
}

bool PiecewiseSystem::on_section_side(Section s, Vec2 p) const {
    const double c = std::cos(geometry.phi), sn = std::sin(geometry.phi);
    switch (s) {
        case Section::RayPlus: return c * p.x + sn * p.y > 0.0;
        case Section::RayMinus: return c * p.x - sn * p.y > 0.0;
        default: return true;
    }
}

Vec2 PiecewiseSystem::section_point(Section s, double ordinate) const {
    const double c = std::cos(geometry.phi), sn = std::sin(geometry.phi);
    switch (s) {
        case Section::X0: return {0.0, ordinate};
        case Section::Xm1: return {-1.0, ordinate};
        case Section::Xp1: return {1.0, ordinate};
        case Section::RayPlus: return {ordinate * c, ordinate * sn};
        case Section::RayMinus: return {ordinate * c, -ordinate * sn};
    }
    return {};
}

double PiecewiseSystem::section_ordinate(Section s, Vec2 p) const {
    const double c = std::cos(geometry.phi), sn = std::sin(geometry.phi);
    switch (s) {
        case Section::X0:
        case Section::Xm1:
        case Section::Xp1:
            return p.y;
        case Section::RayPlus: return c * p.x + sn * p.y;
        case Section::RayMinus: return c * p.x - sn * p.y;
    }
    return 0.0;
}

Vec2 PiecewiseSystem::section_normal(Section s) const {
    const double c = std::cos(geometry.phi), sn = std::sin(geometry.phi);
    switch (s) {
        case Section::X0:
        case Section::Xm1:
        case Section::Xp1:
            return {1.0, 0.0};
        case Section::RayPlus: return {-sn, c};
        case Section::RayMinus: return {sn, c};
    }
    return {};
}

PiecewiseSystem PiecewiseSystem::one_line(ZoneField left, ZoneField right) {
    PiecewiseSystem s;
    s.geometry.variant = SwitchingGeometry::Variant::OneLine;
    s.zones = {std::move(left), std::move(right)};
    return s;
}

PiecewiseSystem PiecewiseSystem::two_lines(ZoneField left, ZoneField middle, ZoneField right) {
    PiecewiseSystem s;
    s.geometry.variant = SwitchingGeometry::Variant::TwoLines;
    s.zones = {std::move(left), std::move(middle), std::move(right)};
    return s;
}

PiecewiseSystem PiecewiseSystem::ray_pair(ZoneField inner, ZoneField outer, double phi) {
    if (!(phi > 0.0 && phi <= std::asin(1.0) * 2.0))
        throw DomainError("ray half-angle must lie in (0, pi/2]");
    PiecewiseSystem s;
    s.geometry.variant = SwitchingGeometry::Variant::RayPair;
    s.geometry.phi = phi;
    s.zones = {std::move(inner), std::move(outer)};
    return s;
}

// ---------------------------------------------------------------------------
// canonical-form checks (opt-in)

std::vector<std::string> canonical_violations(const CenterSpec& c) {
    std::vector<std::string> v;
    switch (c.kind) {
        case CenterKind::F3:
            if (!(c.a >= 0)) v.push_back("F3 requires a >= 0");
            break;
        case CenterKind::F4:
            if (!(c.a >= 1)) v.push_back("F4 requires a >= 1");
            break;
        case CenterKind::F5: {
            if (!(c.b > 0)) v.push_back("F5 requires b > 0");
            const double a = c.a, b = c.b;
            const bool cubic_ok =
                4 * sq(a - 1) * (a * a * a - a * a - a * b - 8 * a) - 27 * b * b > 0;
            if (!(a >= 1) && !cubic_ok)
                v.push_back("F5 requires a >= 1 or the a<1 positivity condition");
            break;
        }
        default:
            break;
    }
    return v;
}

std::vector<std::string> canonical_violations(const SaddleSpec& s) {
    std::vector<std::string> v;
    if (!(s.disc() < 0)) v.push_back("requires alpha*delta - beta^2 < 0");
    if (s.alpha != 0.0 && s.alpha != 1.0) v.push_back("alpha must be 0 or 1");
    if (s.alpha == 0.0) {
        if (s.gamma != 0.0) v.push_back("alpha = 0 requires gamma = 0");
        if (s.beta == 0.0) v.push_back("alpha = 0 requires beta != 0");
    }
    if (s.alpha == 1.0 && !(s.delta < s.beta * s.beta))
        v.push_back("alpha = 1 requires delta < beta^2");
    return v;
}

}  // namespace pwc
