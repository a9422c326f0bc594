#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "pwc/catalog.hpp"
#include "pwc/closing.hpp"
#include "pwc/portrait.hpp"
#include "pwc/report.hpp"
#include "pwc/saddle_geometry.hpp"
#include "pwc/systemfile.hpp"
#include "pwc/verify.hpp"

namespace {

using namespace pwc;

constexpr int kExitOk = 0;
constexpr int kExitParse = 2;
constexpr int kExitDegenerate = 3;
constexpr int kExitOutput = 4;

struct ResolvedInput {
    LoadedSystem sys;
    std::string label;
};

LoadedSystem from_catalog_entry(const CatalogEntry& e) {
    LoadedSystem out;
    out.system = e.system;
    if (e.ray_kind) {
        out.ray_kind = e.ray_kind;
        out.ray_saddle = std::get<RaySaddleSpec>(e.system.zones[0]);
        if (const auto* c = std::get_if<CenterSpec>(&e.system.zones[1])) out.center = *c;
        return out;
    }
    out.center = std::get<CenterSpec>(e.system.zones[0]);
    const auto& right = e.system.zones.back();
    if (const auto* af = std::get_if<AffineSpec>(&right)) {
        if (auto s = af->as_saddle()) out.saddle = *s;
    } else if (const auto* s = std::get_if<SaddleSpec>(&right)) {
        out.saddle = *s;
    }
    if (e.system.zones.size() == 3) {
        if (const auto* s = std::get_if<SaddleSpec>(&e.system.zones[1])) out.saddle = *s;
        const auto& r2 = e.system.zones[2];
        if (const auto* af = std::get_if<AffineSpec>(&r2)) {
            if (auto s = af->as_saddle()) out.saddle2 = *s;
        } else if (const auto* s = std::get_if<SaddleSpec>(&r2)) {
            out.saddle2 = *s;
        }
    }
    return out;
}

void apply_env_overrides(LoadedSystem& sys) {
    if (const char* env = std::getenv("PWCYCLE_MAX_STEPS")) {
        try {
            sys.config.max_steps = std::stol(env);
        } catch (...) {
            throw ParseError("PWCYCLE_MAX_STEPS is not an integer");
        }
    }
}

ResolvedInput resolve_input(const std::string& input) {
    std::string name = input;
    bool force_catalog = false;
    if (name.rfind("catalog:", 0) == 0) {
        name = name.substr(8);
        force_catalog = true;
    }
    ResolvedInput out;
    if (!force_catalog && std::filesystem::exists(name)) {
        SystemFile f = load_system_file(name);
        out = {build_system(f), name};
    } else if (auto e = catalog_find(name)) {
        out = {from_catalog_entry(*e), e->label};
    } else {
        throw ParseError("input is neither a readable file nor a catalog label: " + input);
    }
    apply_env_overrides(out.sys);
    return out;
}

ClosingReport run_closing(const LoadedSystem& in) {
    if (in.ray_kind) return close_ray_system(*in.ray_kind, *in.ray_saddle,
                                             in.system.geometry.phi);
    const bool degenerate_center =
        in.center.kind == CenterKind::I1 || in.center.kind == CenterKind::I2;
    if (in.system.geometry.variant == SwitchingGeometry::Variant::TwoLines) {
        if (!in.saddle || !in.saddle2)
            throw DegenerateConfig("three-zone closing needs divergence-free saddle parts");
        return degenerate_center ? close_three_zone_degenerate(in.center, *in.saddle, *in.saddle2)
                                 : close_three_zone_nilpotent(in.center, *in.saddle, *in.saddle2);
    }
    if (!in.saddle)
        throw DegenerateConfig(
            "right part has nonzero divergence; analyzable only via portrait/verify");
    return degenerate_center ? close_two_zone_degenerate(in.center, *in.saddle)
                             : close_two_zone_nilpotent(in.center, *in.saddle);
}

VerificationBundle run_verification(const LoadedSystem& in, const ClosingReport& closing) {
    VerificationBundle bundle;
    const IntegratorConfig& cfg = in.config;

    for (const auto& cand : closing.candidates)
        bundle.candidate_verdicts.push_back(verify_candidate(in.system, cand, cfg));

    if (closing.annulus) {
        double lo = closing.annulus->lo, hi = closing.annulus->hi;
        if (!std::isfinite(hi)) hi = lo + 2.0;
        if (hi > lo) {
            for (int i = 1; i <= 20; ++i) {
                const double y = lo + (hi - lo) * i / 21.0;
                bundle.annulus_samples.push_back(y);
                bundle.annulus_closure_errors.push_back(
                    annulus_closure_error(in.system, y, cfg));
            }
        }
    }

    // brute-force fixed-point scan over a default window
    try {
        double lo = 0.05, hi = 3.0;
        if (closing.annulus && std::isfinite(closing.annulus->hi))
            hi = std::max(hi, 1.2 * closing.annulus->hi);
        for (const auto& cand : closing.candidates)
            for (const auto& p : cand.points) hi = std::max(hi, 1.5 * std::abs(p.ordinate));
        std::vector<double> grid;
        for (double y = lo; y <= hi; y += (hi - lo) / 64.0) grid.push_back(y);
        FixedPointScan scan;
        if (in.system.geometry.variant == SwitchingGeometry::Variant::RayPair) {
            HalfMap outer = half_map_between(in.system, 1, Section::RayPlus, Section::RayMinus,
                                             grid, cfg);
            HalfMap inner = half_map_between(in.system, 0, Section::RayMinus, Section::RayPlus,
                                             grid, cfg);
            scan = scan_fixed_points(outer, inner, lo, hi, (hi - lo) / 256.0);
        } else {
            const Section sec = in.system.zone_sections(0).front();
            HalfMap left = half_map_between(in.system, 0, sec, sec, grid, cfg);
            HalfMap right = half_map_between(in.system, in.system.zone_count() - 1, sec, sec,
                                             grid, cfg);
            scan = scan_fixed_points(left, right, lo, hi, (hi - lo) / 256.0);
        }
        bundle.empirical_cycle_count =
            scan.continuum ? -1 : static_cast<int>(scan.zeros.size());
        bundle.scan = std::move(scan);
    } catch (const EmptyDomain&) {
        bundle.empirical_cycle_count = 0;
    }
    return bundle;
}

int cmd_analyze(const std::string& input, bool with_verify) {
    ResolvedInput in = resolve_input(input);
    Report rep;
    rep.label = in.label;
    rep.closing = run_closing(in.sys);
    if (with_verify) rep.verification = run_verification(in.sys, rep.closing);
    std::cout << serialize_report(rep);
    return kExitOk;
}

int cmd_portrait(const std::string& input, const std::string& out_path,
                 const std::string& format, std::vector<double> box, int orbits) {
    ResolvedInput in = resolve_input(input);
    PortraitOptions opts;
    if (box.size() == 4) {
        opts.x0 = box[0];
        opts.y0 = box[1];
        opts.x1 = box[2];
        opts.y1 = box[3];
    }
    opts.orbits = orbits;
    opts.csv = (format == "csv");

    std::optional<ClosingReport> closing;
    try {
        closing = run_closing(in.sys);
    } catch (const Error&) {
        // portraits are still drawable for systems the solver refuses
    }

    PortraitData data = build_portrait(in.sys.system, closing ? &*closing : nullptr, opts,
                                       in.sys.config);
    const std::string payload =
        opts.csv ? render_csv(data) : render_svg(data, in.sys.system, opts);
    std::ofstream out(out_path, std::ios::binary);
    if (!out) {
        std::cerr << "pwcycle: cannot open output file: " << out_path << "\n";
        return kExitOutput;
    }
    out << payload;
    if (!out.good()) {
        std::cerr << "pwcycle: short write to " << out_path << "\n";
        return kExitOutput;
    }
    return kExitOk;
}

int cmd_sweep(const std::string& input, const std::string& param, double from, double to,
              long steps) {
    if (steps <= 0) {
        std::cerr << "pwcycle: sweep needs a positive number of steps\n";
        return kExitParse;
    }
    const auto dotpos = param.find('.');
    if (dotpos == std::string::npos) {
        std::cerr << "pwcycle: sweep parameter must be section.key\n";
        return kExitParse;
    }
    const std::string section = param.substr(0, dotpos);
    const std::string key = param.substr(dotpos + 1);

    SystemFile base;
    if (std::filesystem::exists(input)) {
        base = load_system_file(input);
    } else if (auto e = catalog_find(input)) {
        base = to_system_file(from_catalog_entry(*e));
    } else {
        std::cerr << "pwcycle: unknown input " << input << "\n";
        return kExitParse;
    }
    {
        // the swept key must resolve to an existing numeric parameter
        SystemFile probe = base;
        probe.set(section, key, "0");
        try {
            build_system(probe);
        } catch (const ParseError& e) {
            std::cerr << "pwcycle: unknown sweep parameter " << param << ": " << e.what() << "\n";
            return kExitParse;
        }
    }

    std::string prev_class;
    std::vector<std::pair<double, double>> boundaries;
    double prev_value = from;
    char buf[40];
    for (long i = 0; i <= steps; ++i) {
        const double v = from + (to - from) * static_cast<double>(i) / static_cast<double>(steps);
        SystemFile f = base;
        std::snprintf(buf, sizeof(buf), "%.17g", v);
        f.set(section, key, buf);
        nlohmann::json line;
        line["value"] = v;
        line["param"] = param;
        try {
            LoadedSystem sys = build_system(f);
            ClosingReport rep = run_closing(sys);
            line["classification"] = to_string(rep.classification);
            if (rep.parameters.count("D")) line["D"] = rep.parameters.at("D");
            const std::string cls = to_string(rep.classification);
            if (!prev_class.empty() && cls != prev_class)
                boundaries.emplace_back(prev_value, v);
            prev_class = cls;
        } catch (const Error& e) {
            line["error"] = e.what();
            if (!prev_class.empty() && prev_class != "error")
                boundaries.emplace_back(prev_value, v);
            prev_class = "error";
        }
        prev_value = v;
        std::cout << line.dump() << "\n";
    }
    nlohmann::json summary;
    summary["regime_boundaries"] = nlohmann::json::array();
    for (auto& b : boundaries) summary["regime_boundaries"].push_back({b.first, b.second});
    std::cout << summary.dump() << "\n";
    return kExitOk;
}

int cmd_catalog() {
    for (const auto& e : catalog()) {
        nlohmann::json j;
        j["label"] = e.label;
        j["description"] = e.description;
        j["left"] = e.left_text;
        j["right"] = e.right_text;
        j["hamiltonian_right"] = e.hamiltonian_right;
        j["canonical_center"] = e.canonical_center;
        j["canonical_saddle"] = e.canonical_saddle;
        j["analyze"] = e.hamiltonian_right || e.ray_kind.has_value();
        if (!e.hamiltonian_right && !e.ray_kind) {
            const auto* af = std::get_if<AffineSpec>(&e.system.zones.back());
            if (af) j["right_divergence"] = af->divergence();
        }
        std::cout << j.dump() << "\n";
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"piecewise-smooth planar systems: closing analysis and numeric verification"};
    app.require_subcommand(1);

    std::string input, out_path = "portrait.svg", format = "svg", param;
    std::vector<double> box;
    int orbits = 8;
    double from = 0, to = 1;
    long steps = 10;
    bool with_verify = false;

    auto* analyze = app.add_subcommand("analyze", "solve the closing equations and classify");
    analyze->add_option("input", input, "system file or catalog label")->required();
    analyze->add_flag("--verify", with_verify, "also run the numeric verifier");

    auto* verify = app.add_subcommand("verify", "analyze plus numeric verification");
    verify->add_option("input", input, "system file or catalog label")->required();

    auto* portrait = app.add_subcommand("portrait", "render a phase portrait");
    portrait->add_option("input", input)->required();
    portrait->add_option("-o,--out", out_path, "output file");
    portrait->add_option("--format", format)->check(CLI::IsMember({"svg", "csv"}));
    portrait->add_option("--box", box, "x0 y0 x1 y1")->expected(4);
    portrait->add_option("--orbits", orbits, "seed orbits per sign");

    auto* sweep = app.add_subcommand("sweep", "analyze across a parameter grid");
    sweep->add_option("input", input)->required();
    sweep->add_option("--param", param, "section.key")->required();
    sweep->add_option("--from", from)->required();
    sweep->add_option("--to", to)->required();
    sweep->add_option("--steps", steps)->required();

    app.add_subcommand("catalog", "list built-in systems");

    CLI11_PARSE(app, argc, argv);

    try {
        if (app.got_subcommand("catalog")) return cmd_catalog();
        if (app.got_subcommand("analyze")) return cmd_analyze(input, with_verify);
        if (app.got_subcommand("verify")) return cmd_analyze(input, true);
        if (app.got_subcommand("portrait"))
            return cmd_portrait(input, out_path, format, box, orbits);
        if (app.got_subcommand("sweep")) return cmd_sweep(input, param, from, to, steps);
    } catch (const ParseError& e) {
        std::cerr << "pwcycle: " << e.what() << "\n";
        return kExitParse;
    } catch (const DegenerateConfig& e) {
        std::cerr << "pwcycle: degenerate configuration: " << e.what() << "\n";
        return kExitDegenerate;
    } catch (const DegenerateError& e) {
        std::cerr << "pwcycle: " << e.what() << "\n";
        return kExitDegenerate;
    } catch (const HypothesisViolation& e) {
        std::cerr << "pwcycle: hypothesis violation: " << e.what() << "\n";
        return kExitDegenerate;
    } catch (const Error& e) {
        std::cerr << "pwcycle: " << e.what() << "\n";
        return kExitDegenerate;
    }
    return kExitOk;
}
