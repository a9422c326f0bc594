#include <doctest.h>

#include <cmath>
#include <random>

#include "pwc/saddle_geometry.hpp"
#include "test_helpers.hpp"

using namespace pwc;

TEST_SUITE_BEGIN("saddle_geometry");

TEST_CASE("axis intercepts, worked cases") {
    const double rt3 = std::sqrt(3.0);

    SaddleGeometry g = analyze_saddle({-1, 1, 2, 3, 0});
    CHECK(g.x0 == doctest::Approx(2.0).epsilon(1e-15));
    CHECK(g.y0 == doctest::Approx(-1.0).epsilon(1e-15));
    REQUIRE(g.has_axis_points);
    CHECK(std::abs(g.A - rt3) <= 1e-12);
    CHECK(std::abs(g.B + rt3) <= 1e-12);

    SaddleGeometry h = analyze_saddle({0, 1, -1, 0, 0});
    CHECK(h.x0 == 0.0);
    CHECK(h.y0 == 0.0);
    CHECK(h.A == 0.0);
    CHECK(h.B == 0.0);

    SaddleGeometry t = analyze_saddle({1, -1, -2, -3, -1});
    CHECK(t.x0 == doctest::Approx(7.0 / 3).epsilon(1e-15));
    CHECK(t.y0 == doctest::Approx(-2.0 / 3).epsilon(1e-15));
    CHECK(t.A == doctest::Approx((3 - 7 * rt3) / 6).epsilon(1e-14));
    CHECK(t.B == doctest::Approx((3 + 7 * rt3) / 6).epsilon(1e-14));
}

TEST_CASE("degenerate and partial inputs") {
    CHECK_THROWS_AS(analyze_saddle({1, 0, 2, 0, 0}), DegenerateError);   // disc > 0
    CHECK_THROWS_AS(analyze_saddle({-1, -1, -1, 0, 0}), DegenerateError);  // disc = 0

    SaddleGeometry g = analyze_saddle({1, 2, 0, 0.5, 1});  // delta = 0
    CHECK(!g.has_axis_points);
    CHECK(g.vertical_separatrix);
    CHECK(std::isnan(g.slope_a));
    CHECK(g.slope_b == doctest::Approx(-1.0 / 4).epsilon(1e-15));
    CHECK_THROWS_AS(separatrices_cross_axis_opposite({1, 2, 0, 0.5, 1}), DegenerateError);
}

TEST_CASE("opposite-side intercepts") {
    CHECK(separatrices_cross_axis_opposite({-1, 1, 2, 3, 0}));
    CHECK(!separatrices_cross_axis_opposite({0, 1, -1, 0, 0}));  // A = B = 0
    CHECK(separatrices_cross_axis_opposite({1, -1, -2, -3, -1}));
}

TEST_CASE("equilibrium residual and critical level, randomized") {
    std::mt19937 rng(2024);
    for (int i = 0; i < 1000; ++i) {
        const SaddleSpec s = testing::random_saddle(rng);
        const SaddleGeometry g = analyze_saddle(s);
        const Vec2 f = field_at(ZoneField{s}, {g.x0, g.y0});
        CHECK(norm(f) <= 1e-12 * std::max(1.0, std::abs(g.x0) + std::abs(g.y0)));

        // (0, A), (0, B) lie on the critical level of the stream function
        const double hc = first_integral(ZoneField{s}, {g.x0, g.y0});
        const double scale = std::max(1.0, std::abs(hc));
        CHECK(std::abs(first_integral(ZoneField{s}, {0, g.A}) - hc) <= 1e-10 * scale);
        CHECK(std::abs(first_integral(ZoneField{s}, {0, g.B}) - hc) <= 1e-10 * scale);
    }
}

TEST_CASE("separatrix lines pass through the axis intercepts") {
    std::mt19937 rng(5);
    for (int i = 0; i < 200; ++i) {
        const SaddleSpec s = testing::random_saddle(rng);
        const SaddleGeometry g = analyze_saddle(s);
        CHECK(std::abs(g.y0 + g.slope_a * (0 - g.x0) - g.A) <=
              1e-10 * std::max(1.0, std::abs(g.A)));
        CHECK(std::abs(g.y0 + g.slope_b * (0 - g.x0) - g.B) <=
              1e-10 * std::max(1.0, std::abs(g.B)));
    }
}

TEST_CASE("separatrix-ray intersections") {
    const double half_pi = 1.5707963267948966;
    const double quarter_pi = half_pi / 2;

    auto [up1, lo1] = separatrix_ray_intersections({-0.5, 1, 0}, half_pi);
    CHECK(up1.x == doctest::Approx(0.0).epsilon(1e-15));
    CHECK(up1.y == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(lo1.y == doctest::Approx(-1.0).epsilon(1e-12));

    auto [up2, lo2] = separatrix_ray_intersections({-0.5, 2, 0}, quarter_pi);
    CHECK(up2.x == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(up2.y == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(lo2.x == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(lo2.y == doctest::Approx(-1.0).epsilon(1e-12));

    // the ascending separatrix of an alpha = 1 saddle is parallel to the
    // pi/4 upper ray
    CHECK_THROWS_AS(separatrix_ray_intersection({-0.5, 1, 0}, +1, RaySign::Plus, quarter_pi),
                    NoIntersection);
    // intersections behind the origin are outside the sector
    CHECK_THROWS_AS(separatrix_ray_intersection({-0.5, -2, 0}, -1, RaySign::Plus, quarter_pi),
                    NoIntersection);
}

TEST_CASE("ray intersections are mirror images when beta = 0") {
    std::mt19937 rng(17);
    std::uniform_real_distribution<double> alpha(0.3, 3.0), phi(0.3, 1.5707963267948966);
    for (int i = 0; i < 200; ++i) {
        RaySaddleSpec s{-0.5, alpha(rng), 0.0};
        const double ph = phi(rng);
        try {
            auto [up, lo] = separatrix_ray_intersections(s, ph);
            CHECK(std::abs(up.x - lo.x) <= 1e-12 * std::max(1.0, std::abs(up.x)));
            CHECK(std::abs(up.y + lo.y) <= 1e-12 * std::max(1.0, std::abs(up.y)));
        } catch (const NoIntersection&) {
            // parallel or exterior configurations are legitimate draws
        }
    }
}

TEST_SUITE_END();
