#include <doctest.h>

#include <cmath>
#include <random>

#include "pwc/model.hpp"
#include "test_helpers.hpp"

using namespace pwc;
using pwc::testing::fd_divergence;
using pwc::testing::fd_gradient;

namespace {

CenterSpec center(CenterKind k, double a = 0, double b = 0) { return {k, a, b}; }

const std::vector<ZoneField> all_center_zones = {
    ZoneField{center(CenterKind::F1)},
    ZoneField{center(CenterKind::F2)},
    ZoneField{center(CenterKind::F3, 0.7)},
    ZoneField{center(CenterKind::F3, -2.0)},
    ZoneField{center(CenterKind::F4, 1.5)},
    ZoneField{center(CenterKind::F5, 1.0, 1.0)},
    ZoneField{center(CenterKind::F5, -2.0, -3.0)},
};

}  // namespace

TEST_SUITE_BEGIN("model");

TEST_CASE("field examples") {
    CHECK(field_at(ZoneField{center(CenterKind::F1)}, {0, 1}).x == 1.0);
    CHECK(field_at(ZoneField{center(CenterKind::F1)}, {0, 1}).y == 0.0);

    SaddleSpec s{-1, 1, 2, 3, 0};
    const Vec2 f = field_at(ZoneField{s}, {0, 0});
    CHECK(f.x == 0.0);
    CHECK(f.y == 3.0);

    const Vec2 g = field_at(ZoneField{center(CenterKind::I1)}, {1, 1});
    CHECK(g.x == doctest::Approx(-2.0).epsilon(1e-15));
    CHECK(g.y == doctest::Approx(0.0).epsilon(1e-15));
}

TEST_CASE("first integral examples") {
    CHECK(first_integral(ZoneField{center(CenterKind::F1)}, {0, 0.75}) ==
          doctest::Approx(0.75 * 0.75 / 2).epsilon(1e-15));
    CHECK(first_integral(ZoneField{center(CenterKind::I2)}, {0, 2}) ==
          doctest::Approx(std::log(2.0)).epsilon(1e-15));
    SaddleSpec s{-1, 1, 2, 3, 0};
    CHECK(first_integral(ZoneField{s}, {0, 1.5}) == doctest::Approx(-2.25).epsilon(1e-15));
}

TEST_CASE("integral domain errors") {
    CHECK_THROWS_AS(first_integral(ZoneField{center(CenterKind::I1)}, {0.1, 0.1}), DomainError);
    CHECK_THROWS_AS(first_integral(ZoneField{center(CenterKind::I1)}, {2.0, 0.0}), DomainError);
    CHECK_THROWS_AS(first_integral(ZoneField{center(CenterKind::I2)}, {0.0, 0.0}), DomainError);
}

TEST_CASE("gradient examples") {
    const Vec2 g1 = gradient(ZoneField{center(CenterKind::F1)}, {1, 1});
    CHECK(g1.x == 1.0);
    CHECK(g1.y == 1.0);

    const Vec2 g5 = gradient(ZoneField{center(CenterKind::F5, 1, 1)}, {0, 1});
    CHECK(g5.x == 1.0);
    CHECK(g5.y == 2.0);

    const Vec2 gi = gradient(ZoneField{center(CenterKind::I2)}, {0, 2});
    CHECK(gi.x == 0.0);
    CHECK(gi.y == doctest::Approx(0.5).epsilon(1e-15));
}

TEST_CASE("gradient agrees with finite differences") {
    std::mt19937 rng(42);
    std::uniform_real_distribution<double> box(-3.0, 3.0);

    auto check_zone = [&](const ZoneField& z, Vec2 p) {
        const Vec2 ga = gradient(z, p);
        const Vec2 gf = fd_gradient(z, p, 1e-3);
        const double scale = std::max(1.0, norm(ga));
        CHECK(std::abs(ga.x - gf.x) / scale < 1e-6);
        CHECK(std::abs(ga.y - gf.y) / scale < 1e-6);
    };

    for (const auto& z : all_center_zones)
        for (int i = 0; i < 50; ++i) check_zone(z, {box(rng), box(rng)});

    SaddleSpec s{1, -1, -2, -3, -1};
    for (int i = 0; i < 50; ++i) check_zone(ZoneField{s}, {box(rng), box(rng)});

    // I1/I2 sampled inside their domains (step kept inside too)
    std::uniform_real_distribution<double> r1(1.3, 3.0), ang(0.3, 1.2);
    for (int i = 0; i < 50; ++i) {
        const double r = r1(rng), th = ang(rng);
        check_zone(ZoneField{center(CenterKind::I1)}, {r * std::cos(th), r * std::sin(th)});
        check_zone(ZoneField{center(CenterKind::I2)}, {r * std::cos(th), r * std::sin(th)});
    }
}

TEST_CASE("hamiltonian structure: field is the symplectic gradient") {
    std::mt19937 rng(7);
    std::uniform_real_distribution<double> box(-3.0, 3.0);
    std::vector<ZoneField> zones = all_center_zones;
    zones.push_back(ZoneField{SaddleSpec{-1, 1, 2, 3, 0}});
    zones.push_back(ZoneField{SaddleSpec{1, -1, -2, -3, -1}});
    for (const auto& z : zones) {
        for (int i = 0; i < 100; ++i) {
            const Vec2 p{box(rng), box(rng)};
            const Vec2 f = field_at(z, p);
            const Vec2 g = gradient(z, p);
            const double scale = std::max(1.0, norm(f));
            CHECK(std::abs(f.x - g.y) / scale < 1e-12);
            CHECK(std::abs(f.y + g.x) / scale < 1e-12);
        }
    }
}

TEST_CASE("divergence vanishes for hamiltonian zones") {
    std::mt19937 rng(11);
    std::uniform_real_distribution<double> box(-3.0, 3.0);
    std::vector<ZoneField> zones = all_center_zones;
    zones.push_back(ZoneField{SaddleSpec{-1, 1, 2, 3, 0}});
    for (const auto& z : zones)
        for (int i = 0; i < 1000; ++i)
            CHECK(std::abs(fd_divergence(z, {box(rng), box(rng)})) < 1e-9);
}

TEST_CASE("first-integral property for the degenerate centers") {
    std::mt19937 rng(13);
    std::uniform_real_distribution<double> rad1(1.2, 3.0), rad2(0.2, 3.0), ang(0.2, 1.3);
    for (int i = 0; i < 1000; ++i) {
        const double th = ang(rng);
        {
            const double r = rad1(rng);
            const Vec2 p{r * std::cos(th), r * std::sin(th)};
            const ZoneField z{center(CenterKind::I1)};
            const Vec2 g = gradient(z, p);
            const Vec2 f = field_at(z, p);
            CHECK(std::abs(dot(g, f)) <= 1e-9 * std::max(1.0, norm(g) * norm(f)));
        }
        {
            const double r = rad2(rng);
            const Vec2 p{r * std::cos(th), r * std::sin(th)};
            const ZoneField z{center(CenterKind::I2)};
            const Vec2 g = gradient(z, p);
            const Vec2 f = field_at(z, p);
            CHECK(std::abs(dot(g, f)) <= 1e-9 * std::max(1.0, norm(g) * norm(f)));
        }
    }
}

TEST_CASE("quartic coefficient of the section trace") {
    const std::vector<std::pair<CenterSpec, double>> cases = {
        {center(CenterKind::F1), 0.0},        {center(CenterKind::F2), 1.0},
        {center(CenterKind::F3, -4), -4.0},   {center(CenterKind::F4, 2.5), 2.5},
        {center(CenterKind::F5, -4, -4), -4.0}};
    for (const auto& [c, k] : cases) {
        CHECK(c.quartic_k() == k);
        for (double y : {0.5, 1.0, 2.0}) {
            const double trace = first_integral(ZoneField{c}, {0, y});
            CHECK(std::abs(trace - (y * y / 2 + k * y * y * y * y / 4)) <= 1e-12);
        }
    }
}

TEST_CASE("zone membership") {
    PiecewiseSystem one = PiecewiseSystem::one_line(ZoneField{center(CenterKind::F1)},
                                                    ZoneField{SaddleSpec{-1, 1, 2, 3, 0}});
    CHECK(one.zone_of({-1, 0}) == 0);
    CHECK(one.zone_of({2, 5}) == 1);
    CHECK(one.zone_of({0, 1}) == kBoundaryZone);

    PiecewiseSystem two = PiecewiseSystem::two_lines(ZoneField{center(CenterKind::F1)},
                                                     ZoneField{SaddleSpec{-1, 1, 2, 3, 0}},
                                                     ZoneField{SaddleSpec{-1, 1, 2, 3, 0}});
    CHECK(two.zone_of({0, 5}) == 1);
    CHECK(two.zone_of({-3, 0}) == 0);
    CHECK(two.zone_of({1, 2}) == kBoundaryZone);

    PiecewiseSystem rays = PiecewiseSystem::ray_pair(
        ZoneField{RaySaddleSpec{}}, ZoneField{center(CenterKind::I2)}, 1.5707963267948966);
    CHECK(rays.zone_of({-1, 0}) == 1);
    CHECK(rays.zone_of({1, 0}) == 0);
    CHECK(rays.zone_of({0, 1}) == kBoundaryZone);
}

TEST_CASE("canonical constraint checks are opt-in diagnostics") {
    CHECK(canonical_violations(center(CenterKind::F3, -4)).size() == 1);
    CHECK(canonical_violations(center(CenterKind::F3, 0.5)).empty());
    CHECK(canonical_violations(center(CenterKind::F4, 0.5)).size() == 1);
    CHECK(canonical_violations(center(CenterKind::F5, 2, 1)).empty());
    CHECK(!canonical_violations(center(CenterKind::F5, -4, -4)).empty());

    CHECK(canonical_violations(SaddleSpec{-1, 1, 2, 3, 0}).size() == 1);  // alpha not 0/1
    CHECK(canonical_violations(SaddleSpec{0, 1, -1, 0, 0}).empty());
    CHECK(!canonical_violations(SaddleSpec{1, 0, 2, 0, 0}).empty());  // disc > 0
}

TEST_CASE("affine parts convert to saddles only when divergence-free") {
    AffineSpec shared{1, 1, 0, -1, -1, -1};
    auto s = shared.as_saddle();
    REQUIRE(s.has_value());
    CHECK(s->beta == -1.0);
    CHECK(s->delta == -1.0);
    CHECK(s->mu == 0.0);
    CHECK(s->alpha == -1.0);
    CHECK(s->gamma == -1.0);

    AffineSpec contracting{2, 2, -1, -1, -1, -1};
    CHECK(contracting.divergence() == 1.0);
    CHECK(!contracting.as_saddle().has_value());
}

TEST_SUITE_END();
