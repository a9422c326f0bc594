#include "pwc/closing.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "pwc/saddle_geometry.hpp"

namespace pwc {

const char* to_string(Classification c) {
    switch (c) {
        case Classification::PeriodAnnulus: return "period_annulus";
        case Classification::NoRealCandidate: return "no_real_candidate";
        case Classification::Candidates: return "candidates";
        case Classification::DegenerateDoubleRoot: return "degenerate_double_root";
        case Classification::SeparatrixCycleOnly: return "separatrix_cycle_only";
    }
    return "?";
}

const char* to_string(RaySystemKind k) {
    switch (k) {
        case RaySystemKind::FrozenRadial: return "frozen_radial";
        case RaySystemKind::I1Sector: return "i1_sector";
        case RaySystemKind::I2Sector: return "i2_sector";
    }
    return "?";
}

namespace {

// Trace slopes of H on the vertical lines:
//   H(-1, y) = const + gamma - delta y^2/2 + (beta + mu) y
//   H(+1, y) = const - gamma - delta y^2/2 + (mu - beta) y
double left_slope(const SaddleSpec& s) { return s.beta + s.mu; }
double right_slope(const SaddleSpec& s) { return s.mu - s.beta; }

double param_scale(const SaddleSpec& s) {
    return std::max({1.0, std::abs(s.alpha), std::abs(s.beta), std::abs(s.delta),
                     std::abs(s.gamma), std::abs(s.mu)});
}

int sign_of(double v, double tol) {
    if (std::abs(v) <= tol) return 0;
    return v > 0 ? 1 : -1;
}

/// Crossing-direction compatibility at a section point: the normal velocity
/// must be nonzero and equally signed in both adjacent zone fields.
void check_crossing(CrossingCandidate& cand, const ZoneField& za, const ZoneField& zb,
                    Vec2 normal, Vec2 p, const char* where) {
    const Vec2 fa = field_at(za, p);
    const Vec2 fb = field_at(zb, p);
    const double tol_a = 1e-9 * std::max(1.0, norm(fa));
    const double tol_b = 1e-9 * std::max(1.0, norm(fb));
    const int sa = sign_of(dot(normal, fa), tol_a);
    const int sb = sign_of(dot(normal, fb), tol_b);
    if (sa == 0 || sb == 0) {
        cand.admissible = false;
        cand.rejections.push_back(std::string("tangential switching contact at ") + where);
    } else if (sa != sb) {
        cand.admissible = false;
        cand.rejections.push_back(std::string("incompatible crossing directions at ") + where);
    }
}

void echo_saddle(std::map<std::string, double>& m, const SaddleSpec& s,
                 const std::string& prefix) {
    m[prefix + "alpha"] = s.alpha;
    m[prefix + "beta"] = s.beta;
    m[prefix + "delta"] = s.delta;
    m[prefix + "gamma"] = s.gamma;
    m[prefix + "mu"] = s.mu;
    m[prefix + "disc"] = s.disc();
}

// Annulus ordinate bounds coming from the saddle side: symmetric orbits
// (0, -y) -> (0, y) return only inside the separatrix strip.
std::optional<double> saddle_strip_bound(const SaddleSpec& s) {
    try {
        SaddleGeometry g = analyze_saddle(s);
        if (!g.has_axis_points) return std::nullopt;
        if (g.A * g.B >= 0.0) return 0.0;  // no symmetric pair inside the strip
        const double pos = std::max(g.A, g.B);
        const double neg = std::min(g.A, g.B);
        return std::min(pos, -neg);
    } catch (const DegenerateError&) {
        return std::nullopt;  // right part returns everywhere or never; unbounded here
    }
}

}  // namespace

// ---------------------------------------------------------------------------
// two zones, quartic center

ClosingReport close_two_zone_nilpotent(const CenterSpec& center, const SaddleSpec& saddle) {
    if (!center.is_quartic())
        throw DomainError("close_two_zone_nilpotent needs a quartic center family");

    const double k = center.quartic_k();
    const double delta = saddle.delta;
    const double mu = saddle.mu;
    const double scale = param_scale(saddle);

    ClosingReport rep;
    rep.parameters["k"] = k;
    echo_saddle(rep.parameters, saddle, "");

    const ZoneField left{center};
    const ZoneField right{saddle};

    if (near_zero(mu, scale)) {
        rep.classification = Classification::PeriodAnnulus;
        rep.regime = "mu = 0: every symmetric pair (0, +-y) matches both traces";
        AnnulusInfo ann;
        ann.lo = 0.0;
        ann.hi = std::numeric_limits<double>::infinity();
        if (k < 0.0) {
            ann.hi = 1.0 / std::sqrt(-k);
            ann.note = "bounded by the fold of the center trace at x = 0";
            rep.notes.push_back(
                "annulus persists for k < 0 up to the section fold; classification kept");
        }
        if (auto strip = saddle_strip_bound(saddle)) {
            if (*strip < ann.hi) {
                ann.hi = *strip;
                ann.note = "bounded by the saddle separatrix strip";
            }
        }
        rep.annulus = ann;
        try {
            SaddleGeometry g = analyze_saddle(saddle);
            if (g.has_axis_points && near_zero(g.A + g.B, std::abs(g.A) + std::abs(g.B)) &&
                g.A * g.B < 0.0) {
                rep.separatrix_cycle = SeparatrixCycleInfo{std::max(g.A, g.B), std::min(g.A, g.B)};
            }
        } catch (const DegenerateError&) {
            rep.notes.push_back("right part is not hyperbolic; no separatrix boundary");
        }
        return rep;
    }

    if (near_zero(delta, scale))
        throw DegenerateConfig("delta = 0 with mu != 0: trace matching forces 0 = 2 mu");

    if (k >= 0.0) {
        rep.classification = Classification::NoRealCandidate;
        rep.regime = "mu != 0, k >= 0: the quartic branch k(y1^2+y2^2) = -2 is unsatisfiable";
        return rep;
    }

    const double md = mu / delta;
    const double D = -md * md - 1.0 / k;
    rep.parameters["D"] = D;
    const double dscale = std::max(md * md, 1.0 / std::abs(k));

    if (near_zero(D, dscale)) {
        rep.classification = Classification::DegenerateDoubleRoot;
        rep.regime = "mu != 0, k < 0, zero discriminant: coincident pair at mu/delta";
        CrossingCandidate cand;
        cand.points = {{Section::X0, md}, {Section::X0, md}};
        cand.zone_sequence = {1, 0};
        cand.degenerate = true;
        cand.residuals = {0.0, 0.0};
        check_crossing(cand, left, right, {1, 0}, {0.0, md}, "the coincident ordinate");
        rep.candidates.push_back(std::move(cand));
        rep.root_count = 1;
        return rep;
    }
    if (D < 0.0) {
        rep.classification = Classification::NoRealCandidate;
        rep.regime = "mu != 0, k < 0, negative discriminant";
        return rep;
    }

    const double r = std::sqrt(D);
    const double y_hi = md + r, y_lo = md - r;
    rep.classification = Classification::Candidates;
    rep.regime = "mu != 0, k < 0, positive discriminant: one unordered pair (two roots)";
    rep.root_count = 2;
    rep.notes.push_back("the two quadratic roots pair into a single candidate crossing cycle");

    CrossingCandidate cand;
    // Travel through the right zone from whichever ordinate the fields push
    // rightward; default to the upper point if the directions disagree.
    const double fx_hi = field_at(left, {0.0, y_hi}).x;
    const bool upper_goes_right = fx_hi > 0.0;
    if (upper_goes_right) {
        cand.points = {{Section::X0, y_hi}, {Section::X0, y_lo}};
        cand.zone_sequence = {1, 0};  // hi -> lo through the right zone, back through the left
    } else {
        cand.points = {{Section::X0, y_hi}, {Section::X0, y_lo}};
        cand.zone_sequence = {0, 1};
    }
    cand.residuals = {std::abs(first_integral(left, {0.0, y_hi}) - first_integral(left, {0.0, y_lo})),
                      std::abs(first_integral(right, {0.0, y_hi}) - first_integral(right, {0.0, y_lo}))};
    check_crossing(cand, left, right, {1, 0}, {0.0, y_hi}, "the upper ordinate");
    check_crossing(cand, left, right, {1, 0}, {0.0, y_lo}, "the lower ordinate");
    if (y_hi * y_lo > 0.0)
        cand.rejections.push_back("pair does not straddle the origin (lens-type geometry)");
    rep.candidates.push_back(std::move(cand));
    return rep;
}

// ---------------------------------------------------------------------------
// two zones, degenerate integrable center

ClosingReport close_two_zone_degenerate(const CenterSpec& center, const SaddleSpec& saddle) {
    if (center.kind != CenterKind::I1 && center.kind != CenterKind::I2)
        throw DomainError("close_two_zone_degenerate needs an I1 or I2 center");

    const double disc = saddle.disc();
    const double scale = param_scale(saddle);
    if (disc >= 0.0 || near_zero(disc, scale))
        throw DegenerateError("right part is not a hyperbolic saddle");
    const double x0 = -(saddle.beta * saddle.mu + saddle.delta * saddle.gamma) / disc;
    if (!(x0 > 0.0))
        throw HypothesisViolation("saddle equilibrium must satisfy x0 > 0");

    ClosingReport rep;
    echo_saddle(rep.parameters, saddle, "");
    rep.parameters["x0"] = x0;

    if (!near_zero(saddle.mu, scale)) {
        rep.classification = Classification::NoRealCandidate;
        rep.regime =
            "mu != 0: center trace forces y1 = -y2 while the saddle trace forces "
            "y1 + y2 = 2 mu / delta";
        return rep;
    }

    rep.classification = Classification::PeriodAnnulus;
    rep.regime = "mu = 0: symmetric pairs (0, +-y) match both traces";

    SaddleGeometry g = analyze_saddle(saddle);
    AnnulusInfo ann;
    ann.lo = (center.kind == CenterKind::I1) ? 1.0 : 0.0;
    ann.hi = 0.0;
    if (g.has_axis_points && g.A * g.B < 0.0) {
        const double pos = std::max(g.A, g.B);
        const double neg = std::min(g.A, g.B);
        ann.hi = std::min(pos, -neg);
        rep.parameters["A"] = g.A;
        rep.parameters["B"] = g.B;
        if (near_zero(g.A + g.B, std::abs(g.A) + std::abs(g.B)))
            rep.separatrix_cycle = SeparatrixCycleInfo{pos, neg};
    } else {
        ann.note = "separatrix intercepts do not straddle the origin; no symmetric returns";
    }
    if (center.kind == CenterKind::I1) {
        if (ann.hi <= 1.0)
            ann.note = "integral domain at x = 0 requires |y| > 1; interval empty";
        ann.note += ann.note.empty() ? "" : "";
    }
    rep.annulus = ann;
    return rep;
}

// ---------------------------------------------------------------------------
// three zones, quartic center

namespace {

// Alternate center-side branch marker: F(-1, y) = c0 + c1 t + c2 t^2, t = y^2;
// distinct |y1| != |y2| solutions need c1 + c2 (t1 + t2) = 0.
void note_center_branch(ClosingReport& rep, const CenterSpec& c) {
    double c1 = 0.0, c2 = 0.0;
    switch (c.kind) {
        case CenterKind::F1: c1 = 0.5; c2 = 0.0; break;
        case CenterKind::F2: c1 = 0.5; c2 = 0.25; break;
        case CenterKind::F3: c1 = 1.0; c2 = c.a / 4; break;
        case CenterKind::F4: c1 = 0.0; c2 = c.a / 4; break;
        case CenterKind::F5: c1 = (c.a - 1) / 2; c2 = c.b / 4; break;
        default: return;
    }
    if (c2 == 0.0 && c1 == 0.0) {
        rep.notes.push_back("center trace constant at x = -1; center condition vacuous");
        return;
    }
    if (c2 != 0.0 && -c1 / c2 > 0.0)
        rep.notes.push_back(
            "asymmetric center branch y1^2 + y2^2 = " + std::to_string(-c1 / c2) +
            " admits solutions; only the symmetric branch is solved here");
}

struct ThreeZoneResult {
    ClosingReport rep;
};

// Shared three-zone reduction once the center branch has forced y2 = -y1.
// p1 = beta1 + mu1 and q_i = mu_i - beta_i are the line-trace slopes:
//   H1(-1, y) = c + gamma1 - delta1 y^2/2 + p1 y
//   H1(+1, y) = c - gamma1 - delta1 y^2/2 + q1 y
//   H2(+1, y) = c' - gamma2 - delta2 y^2/2 + q2 y
ClosingReport close_three_zone_symmetric(const ZoneField& center_zone, const SaddleSpec& s1,
                                         const SaddleSpec& s2, bool i1_center) {
    const double d1 = s1.delta, d2 = s2.delta, g1 = s1.gamma;
    const double p1 = left_slope(s1), q1 = right_slope(s1), q2 = right_slope(s2);
    const double sc1 = param_scale(s1), sc2 = param_scale(s2);

    ClosingReport rep;
    echo_saddle(rep.parameters, s1, "s1.");
    echo_saddle(rep.parameters, s2, "s2.");
    rep.parameters["p1"] = p1;
    rep.parameters["q1"] = q1;
    rep.parameters["q2"] = q2;

    const ZoneField mid{s1};
    const ZoneField rightz{s2};

    auto push_candidate = [&](double y1, double y3, double y4) {
        CrossingCandidate cand;
        const double y2 = -y1;
        cand.points = {{Section::Xm1, y2}, {Section::Xp1, y3}, {Section::Xp1, y4},
                       {Section::Xm1, y1}};
        cand.zone_sequence = {1, 2, 1, 0};
        cand.residuals = {
            std::abs(first_integral(center_zone, {-1.0, y1}) -
                     first_integral(center_zone, {-1.0, y2})),
            std::abs(first_integral(mid, {-1.0, y2}) - first_integral(mid, {1.0, y3})),
            std::abs(first_integral(mid, {-1.0, y1}) - first_integral(mid, {1.0, y4})),
            std::abs(first_integral(rightz, {1.0, y3}) - first_integral(rightz, {1.0, y4}))};
        check_crossing(cand, center_zone, mid, {1, 0}, {-1.0, y1}, "(-1, y1)");
        check_crossing(cand, center_zone, mid, {1, 0}, {-1.0, y2}, "(-1, y2)");
        check_crossing(cand, mid, rightz, {1, 0}, {1.0, y3}, "(+1, y3)");
        check_crossing(cand, mid, rightz, {1, 0}, {1.0, y4}, "(+1, y4)");
        if (i1_center && (y1 == 0.0))
            cand.rejections.push_back("zero ordinate outside the integral domain");
        rep.candidates.push_back(std::move(cand));
    };

    const bool d1_zero = near_zero(d1, sc1);
    const bool d2_zero = near_zero(d2, sc2);

    if (d1_zero) {
        if (near_zero(q1, sc1)) {
            // Both middle traces degenerate to constants in y.
            if (near_zero(p1, sc1) && near_zero(g1, sc1)) {
                rep.classification = Classification::PeriodAnnulus;
                rep.regime = "delta1 = 0, middle traces constant: unconstrained families";
                rep.annulus = AnnulusInfo{0.0, std::numeric_limits<double>::infinity(),
                                          "middle zone imposes no matching constraint"};
            } else {
                rep.classification = Classification::NoRealCandidate;
                rep.regime = "delta1 = 0, q1 = 0: matching pins y1 inconsistently";
            }
            return rep;
        }
        // y3, y4 linear in y1: q1 y3 = 2 gamma1 - p1 y1, q1 y4 = 2 gamma1 + p1 y1.
        const double sum34 = 4 * g1 / q1;
        bool consistent;
        if (d2_zero) {
            consistent = near_zero(q2, sc2);
            rep.regime = "delta1 = delta2 = 0";
        } else {
            consistent = near_zero(2 * g1 * d2 - q1 * q2, std::max(sc1 * sc2, 1.0));
            rep.regime = "delta1 = 0, delta2 != 0";
            rep.parameters["sum_y3_y4"] = sum34;
        }
        if (!consistent) {
            rep.classification = Classification::NoRealCandidate;
            rep.notes.push_back("outer trace constraint on y3 + y4 is not met by the family");
            return rep;
        }
        if (near_zero(p1, sc1)) {
            rep.classification = Classification::NoRealCandidate;
            rep.notes.push_back("p1 = 0 collapses y3 = y4; no four-point cycles");
            return rep;
        }
        rep.classification = Classification::PeriodAnnulus;
        rep.annulus = AnnulusInfo{0.0, std::numeric_limits<double>::infinity(),
                                  "one-parameter family: y3, y4 linear in the center ordinate"};
        return rep;
    }

    if (d2_zero) {
        if (!near_zero(q2, sc2)) {
            rep.classification = Classification::NoRealCandidate;
            rep.regime = "delta2 = 0 with q2 != 0: outer matching forces y3 = y4";
            return rep;
        }
        rep.classification = Classification::PeriodAnnulus;
        rep.regime = "delta2 = 0, q2 = 0: outer trace constant";
        rep.annulus = AnnulusInfo{0.0, std::numeric_limits<double>::infinity(),
                                  "family parameterized by the center ordinate"};
        rep.notes.push_back("bounded by saddle separatrices where the middle roots turn complex");
        return rep;
    }

    // delta1 delta2 != 0
    const double chain = d1 * q2 - d2 * q1;
    rep.parameters["chain_det"] = chain;
    if (near_zero(chain, std::max({sc1 * sc2, std::abs(d1 * q2), std::abs(d2 * q1)})))
        throw DegenerateConfig("chain determinant delta1 q2 - delta2 q1 vanishes");

    if (near_zero(p1, sc1)) {
        rep.classification = Classification::NoRealCandidate;
        rep.regime = "delta1 delta2 != 0, p1 = 0: y3 = y4 collapses every tuple";
        return rep;
    }

    const double s = d2 * p1 / chain;   // y3 = s y1 + c
    const double c = q2 / d2;           // and y4 = 2c - y3
    const double P2 = 0.5 * d1 * (s * s - 1.0);
    const double R0 = 0.5 * d1 * c * c - q1 * c + 2 * g1;
    rep.parameters["quad_P"] = P2;
    rep.parameters["quad_R"] = R0;
    rep.regime = "delta1 delta2 != 0: even reduced quadratic in the center ordinate";

    const double qscale = std::max({1.0, std::abs(0.5 * d1 * (s * s + 1.0))});
    if (near_zero(P2, qscale)) {
        if (near_zero(R0, std::max(1.0, std::abs(q1 * c) + std::abs(2 * g1)))) {
            rep.classification = Classification::PeriodAnnulus;
            rep.annulus = AnnulusInfo{0.0, std::numeric_limits<double>::infinity(),
                                      "reduced equation vanishes identically"};
            rep.notes.push_back("degenerate reduced quadratic: every center ordinate matches");
        } else {
            rep.classification = Classification::NoRealCandidate;
            rep.notes.push_back("degenerate reduced quadratic with nonzero remainder");
        }
        return rep;
    }

    const double rsq = -R0 / P2;
    rep.parameters["y1_squared"] = rsq;
    if (rsq <= 0.0 || near_zero(rsq)) {
        rep.classification = Classification::NoRealCandidate;
        rep.regime += rsq < 0.0 ? "; negative square" : "; root collapses to a zero ordinate";
        return rep;
    }

    const double r = std::sqrt(rsq);
    const double y1 = (s > 0.0) ? r : -r;  // orient so y3 >= y4
    const double y3 = s * y1 + c;
    const double y4 = 2 * c - y3;
    rep.classification = Classification::Candidates;
    rep.root_count = 2;
    rep.notes.push_back(
        "the +-root pair describes the same four crossing points; deduplicated to one");
    push_candidate(y1, y3, y4);
    return rep;
}

}  // namespace

ClosingReport close_three_zone_nilpotent(const CenterSpec& center, const SaddleSpec& s1,
                                         const SaddleSpec& s2) {
    if (!center.is_quartic())
        throw DomainError("close_three_zone_nilpotent needs a quartic center family");
    ClosingReport rep = close_three_zone_symmetric(ZoneField{center}, s1, s2, false);
    rep.parameters["k"] = center.quartic_k();
    note_center_branch(rep, center);
    return rep;
}

ClosingReport close_three_zone_degenerate(const CenterSpec& center, const SaddleSpec& s1,
                                          const SaddleSpec& s2) {
    if (center.kind != CenterKind::I1 && center.kind != CenterKind::I2)
        throw DomainError("close_three_zone_degenerate needs an I1 or I2 center");

    // The l1 = (mu1+beta1)/delta1 pivot of the canonical reduction; the spec's
    // branch table divides by it, so a vanishing value is reported as such.
    const double sc1 = param_scale(s1);
    if (!near_zero(s1.delta, sc1) && !near_zero(s2.delta, param_scale(s2)) &&
        near_zero(left_slope(s1), sc1))
        throw DegenerateConfig("l1 = (mu1 + beta1)/delta1 vanishes");

    ClosingReport rep = close_three_zone_symmetric(ZoneField{center}, s1, s2,
                                                   center.kind == CenterKind::I1);
    if (!near_zero(s1.delta, sc1)) {
        rep.parameters["l1"] = left_slope(s1) / s1.delta;
        rep.parameters["nu1"] = right_slope(s1) / s1.delta;
        rep.parameters["k1"] = s1.gamma / s1.delta;
    }
    if (!near_zero(s2.delta, param_scale(s2)))
        rep.parameters["nu2"] = right_slope(s2) / s2.delta;
    return rep;
}

// ---------------------------------------------------------------------------
// ray-separated systems

ClosingReport close_ray_system(RaySystemKind kind, const RaySaddleSpec& saddle, double phi) {
    if (!(saddle.a > -1.0 && saddle.a < 0.0))
        throw DomainError("sector saddle needs a in (-1, 0)");
    if (!(phi > 0.0 && phi <= 1.5707963267948967))
        throw DomainError("ray half-angle must lie in (0, pi/2]");

    ClosingReport rep;
    rep.parameters["a"] = saddle.a;
    rep.parameters["alpha"] = saddle.alpha;
    rep.parameters["beta"] = saddle.beta;
    rep.parameters["phi"] = phi;

    auto [upper, lower] = separatrix_ray_intersections(saddle, phi);
    const double r_up = norm(upper);
    const double r_lo = norm(lower);
    rep.parameters["upper_x"] = upper.x;
    rep.parameters["upper_y"] = upper.y;
    rep.parameters["lower_x"] = lower.x;
    rep.parameters["lower_y"] = lower.y;

    switch (kind) {
        case RaySystemKind::FrozenRadial:
            rep.classification = Classification::SeparatrixCycleOnly;
            rep.regime =
                "separatrix wedge closed by the outer frozen-radius arc through the ray "
                "intersections";
            rep.separatrix_cycle = SeparatrixCycleInfo{r_up, r_lo};
            break;
        case RaySystemKind::I1Sector: {
            const double b1 = std::abs(saddle.alpha + saddle.beta);
            const double b2 = std::abs(saddle.alpha - saddle.beta);
            rep.parameters["abs_alpha_plus_beta"] = b1;
            rep.parameters["abs_alpha_minus_beta"] = b2;
            if (b1 <= 1.0 + kZeroTol && b2 <= 1.0 + kZeroTol) {
                rep.classification = Classification::SeparatrixCycleOnly;
                rep.regime =
                    "intersections inside the closed invariant unit circle of the outer zone";
                rep.separatrix_cycle = SeparatrixCycleInfo{r_up, r_lo};
            } else {
                rep.classification = Classification::NoRealCandidate;
                rep.regime = "a separatrix endpoint leaves the invariant unit disk";
                if (b1 > 1.0) rep.notes.push_back("|alpha + beta| > 1");
                if (b2 > 1.0) rep.notes.push_back("|alpha - beta| > 1");
            }
            break;
        }
        case RaySystemKind::I2Sector:
            rep.classification = Classification::SeparatrixCycleOnly;
            rep.regime = "outer zone orbits close at every radius; the separatrix wedge is the cycle";
            rep.separatrix_cycle = SeparatrixCycleInfo{r_up, r_lo};
            break;
    }
    return rep;
}

}  // namespace pwc
