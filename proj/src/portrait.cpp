#include "pwc/portrait.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

#include "pwc/saddle_geometry.hpp"
#include "pwc/verify.hpp"

namespace pwc {

namespace {

std::string num(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.6g", v);
    return buf;
}

void append_polyline(std::ostringstream& out, const std::vector<Vec2>& pts,
                     const char* stroke, double width, const char* dash = nullptr) {
    if (pts.size() < 2) return;
    out << "<polyline fill=\"none\" stroke=\"" << stroke << "\" stroke-width=\"" << num(width)
        << "\"";
    if (dash) out << " stroke-dasharray=\"" << dash << "\"";
    out << " points=\"";
    for (size_t i = 0; i < pts.size(); ++i) {
        if (i) out << ' ';
        out << num(pts[i].x) << ',' << num(-pts[i].y);
    }
    out << "\"/>\n";
}

std::vector<double> seed_ordinates(int n, double span) {
    // geometric spacing from 5% of the span outward
    std::vector<double> seeds;
    if (n <= 0) return seeds;
    const double lo = 0.05 * span, hi = 0.9 * span;
    if (n == 1) {
        seeds.push_back(hi);
        return seeds;
    }
    const double ratio = std::pow(hi / lo, 1.0 / (n - 1));
    double v = lo;
    for (int i = 0; i < n; ++i) {
        seeds.push_back(v);
        v *= ratio;
    }
    return seeds;
}

}  // namespace

PortraitData build_portrait(const PiecewiseSystem& system, const ClosingReport* closing,
                            const PortraitOptions& opts, const IntegratorConfig& cfg) {
    PortraitData data;
    IntegratorConfig pcfg = cfg;
    pcfg.rel_tol = std::max(pcfg.rel_tol, 1e-9);
    pcfg.escape_radius = 4.0 * std::max({std::abs(opts.x0), std::abs(opts.x1),
                                         std::abs(opts.y0), std::abs(opts.y1), 1.0});

    const double span = 0.5 * (opts.y1 - opts.y0);
    const Section seed_section = system.zone_sections(0).front();
    for (double s : seed_ordinates(opts.orbits, span)) {
        for (double sign : {1.0, -1.0}) {
            Vec2 p = system.section_point(seed_section, sign * s);
            p.x += 1e-9;  // off the switching set
            if (system.zone_of(p) == kBoundaryZone) continue;
            data.orbits.push_back(flow_system_for_time(system, p, opts.time_span, pcfg));
        }
    }

    // separatrices and equilibria of saddle zones
    const double reach = std::max({std::abs(opts.x0), std::abs(opts.x1), std::abs(opts.y0),
                                   std::abs(opts.y1)});
    for (const auto& zone : system.zones) {
        const SaddleSpec* sp = std::get_if<SaddleSpec>(&zone);
        SaddleSpec tmp;
        if (!sp) {
            if (const auto* af = std::get_if<AffineSpec>(&zone)) {
                auto conv = af->as_saddle();
                if (conv) {
                    tmp = *conv;
                    sp = &tmp;
                }
            }
        }
        if (sp) {
            try {
                SaddleGeometry g = analyze_saddle(*sp);
                data.equilibria.push_back({g.x0, g.y0});
                if (!g.vertical_separatrix) {
                    for (double m : {g.slope_a, g.slope_b}) {
                        Vec2 a{g.x0 - reach, g.y0 - m * reach};
                        Vec2 b{g.x0 + reach, g.y0 + m * reach};
                        data.separatrix_segments.push_back({a, b});
                    }
                }
            } catch (const DegenerateError&) {
            }
        }
        if (const auto* rs = std::get_if<RaySaddleSpec>(&zone)) {
            data.equilibria.push_back({rs->alpha, rs->beta});
            for (double m : {1.0, -1.0}) {
                Vec2 a{rs->alpha - reach, rs->beta - m * reach};
                Vec2 b{rs->alpha + reach, rs->beta + m * reach};
                data.separatrix_segments.push_back({a, b});
            }
        }
    }

    // detected cycles
    if (closing) {
        if (closing->separatrix_cycle) {
            // trace the boundary orbit just inside the separatrix level
            const double r = closing->separatrix_cycle->upper;
            const Section sec = system.zone_sections(0).front();
            Vec2 p = system.section_point(sec, (r > 0 ? r : -r) * (1.0 - 1e-3));
            p.x += 1e-9;
            if (system.zone_of(p) != kBoundaryZone) {
                Trajectory t = flow_system_for_time(system, p, opts.time_span, pcfg);
                std::vector<Vec2> poly;
                for (const auto& smp : t.samples) poly.push_back(smp.p);
                data.cycles.push_back(std::move(poly));
            }
        }
        for (const auto& cand : closing->candidates) {
            if (cand.points.empty() || cand.degenerate) continue;
            Vec2 start = system.section_point(cand.points[0].section, cand.points[0].ordinate);
            start.x += 1e-9;
            if (system.zone_of(start) == kBoundaryZone) continue;
            Trajectory t = flow_system_for_time(system, start, opts.time_span, pcfg);
            std::vector<Vec2> poly;
            for (const auto& smp : t.samples) poly.push_back(smp.p);
            data.cycles.push_back(std::move(poly));
        }
    }
    return data;
}

std::string render_svg(const PortraitData& data, const PiecewiseSystem& system,
                       const PortraitOptions& opts) {
    std::ostringstream out;
    const double w = opts.x1 - opts.x0, h = opts.y1 - opts.y0;
    out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" viewBox=\""
        << num(opts.x0) << ' ' << num(-opts.y1) << ' ' << num(w) << ' ' << num(h) << "\">\n";
    out << "<rect x=\"" << num(opts.x0) << "\" y=\"" << num(-opts.y1) << "\" width=\"" << num(w)
        << "\" height=\"" << num(h) << "\" fill=\"white\"/>\n";

    // switching set
    const double big = std::max(std::abs(opts.y0), std::abs(opts.y1)) * 2;
    switch (system.geometry.variant) {
        case SwitchingGeometry::Variant::OneLine:
            append_polyline(out, {{0, -big}, {0, big}}, "#888888", 0.01, "0.1,0.06");
            break;
        case SwitchingGeometry::Variant::TwoLines:
            append_polyline(out, {{-1, -big}, {-1, big}}, "#888888", 0.01, "0.1,0.06");
            append_polyline(out, {{1, -big}, {1, big}}, "#888888", 0.01, "0.1,0.06");
            break;
        case SwitchingGeometry::Variant::RayPair: {
            const double c = std::cos(system.geometry.phi), sn = std::sin(system.geometry.phi);
            append_polyline(out, {{0, 0}, {big * c, big * sn}}, "#888888", 0.01, "0.1,0.06");
            append_polyline(out, {{0, 0}, {big * c, -big * sn}}, "#888888", 0.01, "0.1,0.06");
            break;
        }
    }

    for (const auto& t : data.orbits) {
        std::vector<Vec2> pts;
        pts.reserve(t.samples.size());
        for (const auto& s : t.samples) pts.push_back(s.p);
        append_polyline(out, pts, "#3060c0", 0.008);
    }
    for (const auto& seg : data.separatrix_segments)
        append_polyline(out, {seg.first, seg.second}, "#c08030", 0.01, "0.05,0.05");
    for (const auto& cyc : data.cycles) append_polyline(out, cyc, "#c03030", 0.016);
    for (const auto& e : data.equilibria)
        out << "<circle cx=\"" << num(e.x) << "\" cy=\"" << num(-e.y)
            << "\" r=\"0.03\" fill=\"black\"/>\n";
    out << "</svg>\n";
    return out.str();
}

std::string render_csv(const PortraitData& data) {
    std::ostringstream out;
    out << "t,x,y,zone\n";
    char buf[160];
    for (const auto& t : data.orbits) {
        for (const auto& s : t.samples) {
            std::snprintf(buf, sizeof(buf), "%.12g,%.12g,%.12g,%d\n", s.t, s.p.x, s.p.y, s.zone);
            out << buf;
        }
    }
    return out.str();
}

}  // namespace pwc
