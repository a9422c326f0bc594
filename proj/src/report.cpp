#include "pwc/report.hpp"

#include <cmath>
#include <limits>

namespace pwc {

using nlohmann::json;

namespace {

json section_name(Section s) { return to_string(s); }

Section section_from(const std::string& s) {
    if (s == "x=0") return Section::X0;
    if (s == "x=-1") return Section::Xm1;
    if (s == "x=+1") return Section::Xp1;
    if (s == "ray+") return Section::RayPlus;
    if (s == "ray-") return Section::RayMinus;
    throw ParseError("unknown section name: " + s);
}

Classification classification_from(const std::string& s) {
    if (s == "period_annulus") return Classification::PeriodAnnulus;
    if (s == "no_real_candidate") return Classification::NoRealCandidate;
    if (s == "candidates") return Classification::Candidates;
    if (s == "degenerate_double_root") return Classification::DegenerateDoubleRoot;
    if (s == "separatrix_cycle_only") return Classification::SeparatrixCycleOnly;
    throw ParseError("unknown classification: " + s);
}

json to_json(const CrossingCandidate& c) {
    json points = json::array();
    for (const auto& p : c.points)
        points.push_back({{"section", section_name(p.section)}, {"ordinate", p.ordinate}});
    return {{"points", points},
            {"zones", c.zone_sequence},
            {"degenerate", c.degenerate},
            {"residuals", c.residuals},
            {"admissible", c.admissible},
            {"rejections", c.rejections}};
}

CrossingCandidate candidate_from(const json& j) {
    CrossingCandidate c;
    for (const auto& p : j.at("points"))
        c.points.push_back({section_from(p.at("section").get<std::string>()),
                            p.at("ordinate").get<double>()});
    c.zone_sequence = j.at("zones").get<std::vector<int>>();
    c.degenerate = j.at("degenerate").get<bool>();
    c.residuals = j.at("residuals").get<std::vector<double>>();
    c.admissible = j.at("admissible").get<bool>();
    c.rejections = j.at("rejections").get<std::vector<std::string>>();
    return c;
}

}  // namespace

json to_json(const ClosingReport& rep) {
    json j;
    j["classification"] = to_string(rep.classification);
    j["regime"] = rep.regime;
    j["parameters"] = rep.parameters;
    json cands = json::array();
    for (const auto& c : rep.candidates) cands.push_back(to_json(c));
    j["candidates"] = cands;
    j["root_count"] = rep.root_count;
    if (rep.annulus) {
        json ja = {{"lo", rep.annulus->lo}, {"note", rep.annulus->note}};
        if (std::isfinite(rep.annulus->hi)) ja["hi"] = rep.annulus->hi;  // absent = unbounded
        j["annulus"] = ja;
    }
    if (rep.separatrix_cycle)
        j["separatrix_cycle"] = {{"upper", rep.separatrix_cycle->upper},
                                 {"lower", rep.separatrix_cycle->lower}};
    j["notes"] = rep.notes;
    return j;
}

ClosingReport closing_from_json(const json& j) {
    ClosingReport rep;
    rep.classification = classification_from(j.at("classification").get<std::string>());
    rep.regime = j.at("regime").get<std::string>();
    rep.parameters = j.at("parameters").get<std::map<std::string, double>>();
    for (const auto& c : j.at("candidates")) rep.candidates.push_back(candidate_from(c));
    rep.root_count = j.at("root_count").get<int>();
    if (j.contains("annulus")) {
        AnnulusInfo a;
        a.lo = j["annulus"].at("lo").get<double>();
        a.hi = j["annulus"].value("hi", std::numeric_limits<double>::infinity());
        a.note = j["annulus"].at("note").get<std::string>();
        rep.annulus = a;
    }
    if (j.contains("separatrix_cycle"))
        rep.separatrix_cycle = SeparatrixCycleInfo{
            j["separatrix_cycle"].at("upper").get<double>(),
            j["separatrix_cycle"].at("lower").get<double>()};
    rep.notes = j.at("notes").get<std::vector<std::string>>();
    return rep;
}

json to_json(const VerificationBundle& v) {
    json j;
    // JSON has no NaN/inf literals; non-finite diagnostics are omitted and
    // read back as their defaults.
    json verdicts = json::array();
    for (const auto& ver : v.candidate_verdicts) {
        json legs = json::array();
        for (const auto& leg : ver.legs) {
            json jl = {{"predicted", leg.predicted}, {"status", to_string(leg.status)}};
            if (std::isfinite(leg.integrated)) jl["integrated"] = leg.integrated;
            legs.push_back(jl);
        }
        json jv = {{"confirmed", ver.confirmed},
                   {"max_leg_gap", ver.max_leg_gap},
                   {"legs", legs},
                   {"cause", ver.cause}};
        if (std::isfinite(ver.closure_error)) jv["closure_error"] = ver.closure_error;
        verdicts.push_back(jv);
    }
    j["candidate_verdicts"] = verdicts;
    j["annulus_samples"] = v.annulus_samples;
    std::vector<double> errs = v.annulus_closure_errors;
    for (double& e : errs)
        if (!std::isfinite(e)) e = 1e300;  // sentinel for arcs that never closed
    j["annulus_closure_errors"] = errs;
    j["empirical_cycle_count"] = v.empirical_cycle_count;
    if (v.scan) {
        json zeros = json::array();
        for (const auto& z : v.scan->zeros)
            zeros.push_back({{"y", z.y},
                             {"bracket_lo", z.bracket_lo},
                             {"bracket_hi", z.bracket_hi},
                             {"residual", z.residual}});
        json gaps = json::array();
        for (const auto& g : v.scan->gaps) gaps.push_back({g.first, g.second});
        j["scan"] = {{"zeros", zeros}, {"continuum", v.scan->continuum}, {"gaps", gaps}};
    }
    return j;
}

json to_json(const Report& rep) {
    json j;
    j["schema_version"] = rep.schema_version;
    j["label"] = rep.label;
    j["closing"] = to_json(rep.closing);
    if (rep.verification) j["verification"] = to_json(*rep.verification);
    return j;
}

Report report_from_json(const json& j) {
    Report rep;
    rep.schema_version = j.at("schema_version").get<int>();
    rep.label = j.at("label").get<std::string>();
    rep.closing = closing_from_json(j.at("closing"));
    if (j.contains("verification")) {
        VerificationBundle v;
        const auto& jv = j["verification"];
        for (const auto& jver : jv.at("candidate_verdicts")) {
            VerificationVerdict ver;
            ver.confirmed = jver.at("confirmed").get<bool>();
            ver.closure_error =
                jver.value("closure_error", std::numeric_limits<double>::infinity());
            ver.max_leg_gap = jver.at("max_leg_gap").get<double>();
            ver.cause = jver.at("cause").get<std::string>();
            for (const auto& jl : jver.at("legs")) {
                LegResult leg;
                leg.predicted = jl.at("predicted").get<double>();
                leg.integrated = jl.value("integrated", std::numeric_limits<double>::quiet_NaN());
                ver.legs.push_back(leg);
            }
            v.candidate_verdicts.push_back(std::move(ver));
        }
        v.annulus_samples = jv.at("annulus_samples").get<std::vector<double>>();
        v.annulus_closure_errors = jv.at("annulus_closure_errors").get<std::vector<double>>();
        v.empirical_cycle_count = jv.at("empirical_cycle_count").get<int>();
        rep.verification = std::move(v);
    }
    return rep;
}

std::string serialize_report(const Report& rep) { return to_json(rep).dump(2) + "\n"; }

}  // namespace pwc
