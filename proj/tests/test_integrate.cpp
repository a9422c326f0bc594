#include <doctest.h>

#include <cmath>
#include <random>

#include "pwc/catalog.hpp"
#include "pwc/integrate.hpp"
#include "test_helpers.hpp"

using namespace pwc;

namespace {

PiecewiseSystem system_3_58() { return catalog_find("3.58")->system; }

}  // namespace

TEST_SUITE_BEGIN("integrate");

TEST_CASE("exact saddle flow basics") {
    const SaddleSpec s{-1, 1, 2, 3, 0};
    const Vec2 p0{0.3, -0.4};
    const Vec2 same = flow_linear_saddle_exact(s, p0, 0.0);
    CHECK(same.x == p0.x);
    CHECK(same.y == p0.y);

    const Vec2 eq = flow_linear_saddle_exact(s, {2.0, -1.0}, 3.7);
    CHECK(std::abs(eq.x - 2.0) <= 1e-10);
    CHECK(std::abs(eq.y + 1.0) <= 1e-10);

    // reference computed by eigendecomposition: contraction along (1, 0)
    const Vec2 v = flow_linear_saddle_exact({0, 1, -1, 0, 0}, {1.0, 0.0}, std::log(2.0));
    CHECK(v.x == doctest::Approx(0.5).epsilon(1e-14));
    CHECK(v.y == doctest::Approx(0.0).epsilon(1e-14));

    CHECK_THROWS_AS(flow_linear_saddle_exact({1, 0, 2, 0, 0}, {1, 1}, 1.0), DegenerateError);
}

TEST_CASE("integrator matches the exact affine flow on random arcs") {
    std::mt19937 rng(31);
    std::uniform_real_distribution<double> box(-2.0, 2.0), tdist(-2.0, 2.0);
    for (int i = 0; i < 1000; ++i) {
        const SaddleSpec s = testing::random_saddle(rng, false);
        const Vec2 p0{box(rng), box(rng)};
        const double t = tdist(rng);
        const Vec2 want = flow_linear_saddle_exact(s, p0, t);
        if (norm(want) > 50.0) continue;  // keep arcs at desk scale
        Trajectory traj = flow_for_time(ZoneField{s}, p0, t);
        REQUIRE(traj.status == TrajectoryStatus::Completed);
        const Vec2 got = traj.samples.back().p;
        CHECK(norm(got - want) <= 1e-8 * std::max(1.0, norm(want)));
    }
}

TEST_CASE("section hit on the symmetric quartic center") {
    // Arc through (0, -1) inside x < 0 exits at (0, +1): trace symmetry y <-> -y.
    PiecewiseSystem sys = PiecewiseSystem::one_line(ZoneField{CenterSpec{CenterKind::F1}},
                                                    ZoneField{SaddleSpec{-1, 1, 2, 3, 0}});
    Vec2 p0{-1e-9, -1.0};
    Trajectory traj = integrate_until_section(sys, p0, Section::X0, Direction::Forward);
    REQUIRE(traj.status == TrajectoryStatus::Completed);
    REQUIRE(!traj.events.empty());
    const SwitchEvent ev = traj.events.back();
    CHECK(std::abs(ev.p.x) <= 1e-12);
    CHECK(ev.p.y == doctest::Approx(1.0).epsilon(1e-8));
}

TEST_CASE("saddle zone exit matches the trace level") {
    // H(0, y) = -y^2 for the 3.58 right part: entry at (0, -1) exits at (0, 1).
    PiecewiseSystem sys = system_3_58();
    Vec2 p0{1e-9, -1.0};
    Trajectory traj = integrate_until_section(sys, p0, Section::X0, Direction::Forward);
    REQUIRE(traj.status == TrajectoryStatus::Completed);
    CHECK(traj.events.back().p.y == doctest::Approx(1.0).epsilon(1e-8));
}

TEST_CASE("equilibrium stall is reported") {
    PiecewiseSystem sys = system_3_58();
    Vec2 p0{2.0 + 1e-16, -1.0};
    Trajectory traj = integrate_until_section(sys, p0, Section::X0, Direction::Forward);
    CHECK(traj.status == TrajectoryStatus::HitEquilibrium);
}

TEST_CASE("first-integral drift stays within budget along one-zone arcs") {
    std::mt19937 rng(99);
    std::uniform_real_distribution<double> box(-2.0, 2.0), tdist(0.5, 4.0);
    const ZoneField zones[] = {ZoneField{CenterSpec{CenterKind::F2}},
                               ZoneField{SaddleSpec{-1, 1, 2, 3, 0}}};
    for (const auto& z : zones) {
        for (int i = 0; i < 50; ++i) {
            const Vec2 p0{box(rng), box(rng)};
            Trajectory traj = flow_for_time(z, p0, tdist(rng));
            if (traj.status != TrajectoryStatus::Completed) continue;
            const double i0 = first_integral(z, p0);
            double worst = 0;
            for (const auto& s : traj.samples)
                worst = std::max(worst, std::abs(first_integral(z, s.p) - i0));
            CHECK(worst <= 1e-8 * std::max(1.0, std::abs(i0)));
        }
    }
}

TEST_CASE("events land on the section to 1e-12") {
    PiecewiseSystem sys = system_3_58();
    std::mt19937 rng(3);
    std::uniform_real_distribution<double> ys(1.05, 1.6);
    for (int i = 0; i < 25; ++i) {
        Vec2 p0{-1e-9, -ys(rng)};
        Trajectory traj = integrate_until_section(sys, p0, Section::X0, Direction::Forward);
        if (traj.status != TrajectoryStatus::Completed) continue;
        for (const auto& ev : traj.events) CHECK(std::abs(ev.p.x) <= 1e-12);
    }
}

TEST_CASE("forward then backward returns to the start") {
    const ZoneField z{SaddleSpec{-1, 1, 2, 3, 0}};
    std::mt19937 rng(8);
    std::uniform_real_distribution<double> box(-1.5, 1.5), tdist(0.2, 2.0);
    for (int i = 0; i < 100; ++i) {
        const Vec2 p0{box(rng), box(rng)};
        const double t = tdist(rng);
        Trajectory fwd = flow_for_time(z, p0, t);
        if (fwd.status != TrajectoryStatus::Completed) continue;
        Trajectory bwd = flow_for_time(z, fwd.samples.back().p, -t);
        REQUIRE(bwd.status == TrajectoryStatus::Completed);
        CHECK(norm(bwd.samples.back().p - p0) <= 1e-7 * std::max(1.0, norm(p0)));
    }
}

TEST_CASE("trajectory bookkeeping invariants") {
    PiecewiseSystem sys = system_3_58();
    Vec2 p0{-1e-9, -1.2};
    Trajectory traj = integrate_until_section(sys, p0, Section::X0, Direction::Forward);
    REQUIRE(traj.status == TrajectoryStatus::Completed);
    for (size_t i = 1; i < traj.samples.size(); ++i)
        CHECK(traj.samples[i].t > traj.samples[i - 1].t);
    // zone ids only change across recorded events
    int zone = traj.samples.front().zone;
    for (const auto& s : traj.samples) {
        if (s.zone == kBoundaryZone) continue;
        CHECK(s.zone == zone);
    }
}

TEST_CASE("zone stitching crosses the switching line and keeps integrating") {
    // full revolution around the piecewise annulus orbit of 3.58
    PiecewiseSystem sys = system_3_58();
    Vec2 p0{-1e-9, -1.2};
    Trajectory traj = flow_system_for_time(sys, p0, 8.0);
    bool saw_left = false, saw_right = false;
    for (const auto& s : traj.samples) {
        if (s.zone == 0) saw_left = true;
        if (s.zone == 1) saw_right = true;
    }
    CHECK(saw_left);
    CHECK(saw_right);
    CHECK(traj.events.size() >= 2);
    for (const auto& ev : traj.events) CHECK(ev.transversality != 0);
}

TEST_SUITE_END();
