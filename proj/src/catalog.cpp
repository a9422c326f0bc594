#include "pwc/catalog.hpp"

#include <cmath>

namespace pwc {

namespace {

// printed affine right parts
const AffineSpec kSharedAnnulusRight{1, 1, 0, -1, -1, -1};   // (x+y, -x-y-1)
const AffineSpec kContractingRight{2, 2, -1, -1, -1, -1};    // (2x+2y-1, -x-y-1)
const AffineSpec kThresholdRight{1, 2, -1, 1, -1, -3};       // (x+2y-1, x-y-3)
const AffineSpec kDegenerateRight{-1, -2, 0, -1, 1, 3};      // (-x-2y, -x+y+3)

CenterSpec center(CenterKind kind, double a = 0, double b = 0) {
    CenterSpec c;
    c.kind = kind;
    c.a = a;
    c.b = b;
    return c;
}

CatalogEntry make_two_zone(std::string label, CenterSpec c, const AffineSpec& right,
                           std::string left_text, std::string right_text) {
    CatalogEntry e;
    e.label = std::move(label);
    e.left_text = std::move(left_text);
    e.right_text = std::move(right_text);
    e.canonical_center = canonical_violations(c).empty();
    auto saddle = right.as_saddle();
    e.hamiltonian_right = saddle.has_value();
    e.canonical_saddle = saddle ? canonical_violations(*saddle).empty() : false;
    e.system = PiecewiseSystem::one_line(ZoneField{c}, ZoneField{right});
    e.description = std::string(to_string(c.kind)) + " center vs affine part, one line";
    return e;
}

CatalogEntry make_ray(std::string label, RaySystemKind kind, ZoneField outer,
                      std::string outer_text) {
    RaySaddleSpec s;  // defaults a=-1/2, alpha=1, beta=0
    CatalogEntry e;
    e.label = std::move(label);
    e.ray_kind = kind;
    e.left_text = "(a(x-1) - y, -(x-1) + a y), a = -1/2";
    e.right_text = std::move(outer_text);
    e.hamiltonian_right = false;  // the sector saddle has divergence 2a
    e.system = PiecewiseSystem::ray_pair(ZoneField{s}, std::move(outer), 1.5707963267948966);
    e.description = std::string("sector saddle vs ") + to_string(kind) + " outer zone";
    return e;
}

std::vector<CatalogEntry> build() {
    std::vector<CatalogEntry> v;

    v.push_back(make_two_zone("2.18", center(CenterKind::F1), kSharedAnnulusRight,
                              "(y, -x^3)", "(x+y, -x-y-1)"));
    v.push_back(make_two_zone("2.19", center(CenterKind::F2), kSharedAnnulusRight,
                              "(y+y^3, -x^3)", "(x+y, -x-y-1)"));
    v.push_back(make_two_zone("2.20", center(CenterKind::F3, 1), kSharedAnnulusRight,
                              "(y+x^2 y+y^3, -x^3-x y^2)", "(x+y, -x-y-1)"));
    v.push_back(make_two_zone("2.21", center(CenterKind::F4, 1), kSharedAnnulusRight,
                              "(y-x^2 y+y^3, -x^3+x y^2)", "(x+y, -x-y-1)"));
    v.push_back(make_two_zone("2.22", center(CenterKind::F5, 1, 1), kSharedAnnulusRight,
                              "(y+2xy+x^2 y+y^3, -x^3-y^2-x y^2)", "(x+y, -x-y-1)"));

    v.push_back(make_two_zone("2.23", center(CenterKind::F3, -2), kContractingRight,
                              "(y+x^2 y-2y^3, -x^3-x y^2)", "(2x+2y-1, -x-y-1)"));
    v.push_back(make_two_zone("2.24", center(CenterKind::F4, -2), kContractingRight,
                              "(y-x^2 y-2y^3, -x^3+x y^2)", "(2x+2y-1, -x-y-1)"));
    v.push_back(make_two_zone("2.25", center(CenterKind::F5, -2, -3), kContractingRight,
                              "(y+2xy-2x^2 y-3y^3, -x^3-y^2+2x y^2)", "(2x+2y-1, -x-y-1)"));

    v.push_back(make_two_zone("2.26", center(CenterKind::F3, -4), kThresholdRight,
                              "(y+x^2 y-4y^3, -x^3-x y^2)", "(x+2y-1, x-y-3)"));
    v.push_back(make_two_zone("2.27", center(CenterKind::F4, -4), kThresholdRight,
                              "(y-x^2 y-4y^3, -x^3+x y^2)", "(x+2y-1, x-y-3)"));
    v.push_back(make_two_zone("2.28", center(CenterKind::F5, -4, -4), kThresholdRight,
                              "(y+2xy-4x^2 y-4y^3, -x^3-y^2+4x y^2)", "(x+2y-1, x-y-3)"));

    v.push_back(make_two_zone("2.29", center(CenterKind::F3, -5), kThresholdRight,
                              "(y+x^2 y-5y^3, -x^3-x y^2)", "(x+2y-1, x-y-3)"));
    v.push_back(make_two_zone("2.30", center(CenterKind::F4, -5), kThresholdRight,
                              "(y-x^2 y-5y^3, -x^3+x y^2)", "(x+2y-1, x-y-3)"));
    v.push_back(make_two_zone("2.31", center(CenterKind::F5, -5, -5), kThresholdRight,
                              "(y+2xy-5x^2 y-5y^3, -x^3-y^2+5x y^2)", "(x+2y-1, x-y-3)"));

    v.push_back(make_two_zone("3.58", center(CenterKind::I1), kDegenerateRight,
                              "(y(x^2-y^2)-2x^4 y, x(x^2+y^2)-2x^3 y^2)", "(-x-2y, -x+y+3)"));
    v.push_back(make_two_zone("3.60", center(CenterKind::I2), kDegenerateRight,
                              "(-y(3x^2+y^2), x(x^2-y^2))", "(-x-2y, -x+y+3)"));

    v.push_back(make_ray("4.10", RaySystemKind::FrozenRadial, ZoneField{FrozenRadialSpec{1}},
                         "(-y, x)"));
    v.push_back(make_ray("4.14", RaySystemKind::I1Sector, ZoneField{center(CenterKind::I1)},
                         "(y(x^2-y^2)-2x^4 y, x(x^2+y^2)-2x^3 y^2)"));
    v.push_back(make_ray("4.15", RaySystemKind::I2Sector, ZoneField{center(CenterKind::I2)},
                         "(-y(3x^2+y^2), x(x^2-y^2))"));
    return v;
}

}  // namespace

const std::vector<CatalogEntry>& catalog() {
    static const std::vector<CatalogEntry> entries = build();
    return entries;
}

std::optional<CatalogEntry> catalog_find(const std::string& label) {
    for (const auto& e : catalog())
        if (e.label == label) return e;
    return std::nullopt;
}

}  // namespace pwc
