#include "pwc/systemfile.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <set>
#include <sstream>

namespace pwc {

namespace {

std::string trim(const std::string& s) {
    const auto a = s.find_first_not_of(" \t\r");
    if (a == std::string::npos) return "";
    const auto b = s.find_last_not_of(" \t\r");
    return s.substr(a, b - a + 1);
}

double parse_number(const std::string& raw, const std::string& what, int line) {
    try {
        size_t used = 0;
        const double v = std::stod(raw, &used);
        if (used != raw.size()) throw std::invalid_argument("");
        return v;
    } catch (...) {
        throw ParseError("line " + std::to_string(line) + ": " + what + " is not a number: '" +
                         raw + "'");
    }
}

long parse_integer(const std::string& raw, const std::string& what, int line) {
    try {
        size_t used = 0;
        const long v = std::stol(raw, &used);
        if (used != raw.size()) throw std::invalid_argument("");
        return v;
    } catch (...) {
        throw ParseError("line " + std::to_string(line) + ": " + what +
                         " is not an integer: '" + raw + "'");
    }
}

std::string format_number(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

const std::set<std::string> kSections = {"center", "saddle", "saddle2", "switching", "options"};

const std::map<std::string, std::set<std::string>> kKeys = {
    {"center", {"kind", "a", "b", "n"}},
    {"saddle", {"alpha", "beta", "delta", "gamma", "mu", "a"}},
    {"saddle2", {"alpha", "beta", "delta", "gamma", "mu"}},
    {"switching", {"variant", "phi"}},
    {"options", {"rel_tol", "abs_tol", "max_steps", "event_tol", "escape_radius"}},
};

}  // namespace

std::optional<std::string> SystemFile::get(const std::string& section,
                                           const std::string& key) const {
    auto s = sections.find(section);
    if (s == sections.end()) return std::nullopt;
    auto k = s->second.find(key);
    if (k == s->second.end()) return std::nullopt;
    return k->second.value;
}

void SystemFile::set(const std::string& section, const std::string& key,
                     const std::string& value) {
    sections[section][key] = Entry{value, 0};
}

SystemFile parse_system_file_text(const std::string& text) {
    SystemFile file;
    std::istringstream in(text);
    std::string raw;
    std::string current;
    int line_no = 0;
    while (std::getline(in, raw)) {
        ++line_no;
        std::string line = raw;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        line = trim(line);
        if (line.empty()) continue;
        if (line.front() == '[') {
            if (line.back() != ']')
                throw ParseError("line " + std::to_string(line_no) + ": unterminated section header");
            current = trim(line.substr(1, line.size() - 2));
            if (!kSections.count(current))
                throw ParseError("line " + std::to_string(line_no) + ": unknown section [" +
                                 current + "]");
            file.sections[current];
            continue;
        }
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw ParseError("line " + std::to_string(line_no) + ": expected key = value");
        if (current.empty())
            throw ParseError("line " + std::to_string(line_no) + ": key outside any section");
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        if (!kKeys.at(current).count(key))
            throw ParseError("line " + std::to_string(line_no) + ": unknown key '" + key +
                             "' in section [" + current + "]");
        if (file.sections[current].count(key))
            throw ParseError("line " + std::to_string(line_no) + ": duplicate key '" + key + "'");
        file.sections[current][key] = SystemFile::Entry{value, line_no};
    }
    return file;
}

SystemFile load_system_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open system file: " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_system_file_text(ss.str());
}

std::string emit_system_file(const SystemFile& file) {
    std::ostringstream out;
    // fixed section order for byte-stable output
    const char* order[] = {"switching", "center", "saddle", "saddle2", "options"};
    for (const char* name : order) {
        auto it = file.sections.find(name);
        if (it == file.sections.end()) continue;
        out << '[' << name << "]\n";
        for (const auto& [key, entry] : it->second) out << key << " = " << entry.value << "\n";
        out << "\n";
    }
    return out.str();
}

namespace {

int line_of(const SystemFile& f, const std::string& section, const std::string& key) {
    auto s = f.sections.find(section);
    if (s == f.sections.end()) return 0;
    auto k = s->second.find(key);
    return k == s->second.end() ? 0 : k->second.line;
}

double need_number(const SystemFile& f, const std::string& section, const std::string& key,
                   std::optional<double> fallback = std::nullopt) {
    auto v = f.get(section, key);
    if (!v) {
        if (fallback) return *fallback;
        throw ParseError("missing key '" + key + "' in section [" + section + "]");
    }
    return parse_number(*v, section + "." + key, line_of(f, section, key));
}

SaddleSpec read_saddle(const SystemFile& f, const std::string& section) {
    if (!f.sections.count(section))
        throw ParseError("missing section [" + section + "]");
    SaddleSpec s;
    s.alpha = need_number(f, section, "alpha");
    s.beta = need_number(f, section, "beta");
    s.delta = need_number(f, section, "delta");
    s.gamma = need_number(f, section, "gamma");
    s.mu = need_number(f, section, "mu");
    if (f.get(section, "a"))
        throw ParseError("line " + std::to_string(line_of(f, section, "a")) +
                         ": key 'a' is only valid for ray_pair saddles");
    return s;
}

}  // namespace

LoadedSystem build_system(const SystemFile& file) {
    LoadedSystem out;

    if (!file.sections.count("switching")) throw ParseError("missing section [switching]");
    const std::string variant = file.get("switching", "variant").value_or("one_line");

    if (!file.sections.count("center")) throw ParseError("missing section [center]");
    const std::string kind_text = file.get("center", "kind").value_or("");
    if (kind_text.empty()) throw ParseError("missing key 'kind' in section [center]");

    if (file.sections.count("options")) {
        out.config.rel_tol = need_number(file, "options", "rel_tol", out.config.rel_tol);
        out.config.abs_tol = need_number(file, "options", "abs_tol", out.config.abs_tol);
        out.config.event_tol = need_number(file, "options", "event_tol", out.config.event_tol);
        out.config.escape_radius =
            need_number(file, "options", "escape_radius", out.config.escape_radius);
        if (auto v = file.get("options", "max_steps"))
            out.config.max_steps =
                parse_integer(*v, "options.max_steps", line_of(file, "options", "max_steps"));
    }

    if (variant == "ray_pair") {
        const double phi = need_number(file, "switching", "phi");
        if (!file.sections.count("saddle")) throw ParseError("missing section [saddle]");
        RaySaddleSpec rs;
        rs.a = need_number(file, "saddle", "a");
        rs.alpha = need_number(file, "saddle", "alpha");
        rs.beta = need_number(file, "saddle", "beta");
        for (const char* k : {"delta", "gamma", "mu"})
            if (file.get("saddle", k))
                throw ParseError("line " + std::to_string(line_of(file, "saddle", k)) +
                                 ": key '" + k + "' is not valid for ray_pair saddles");
        out.ray_saddle = rs;

        ZoneField outer;
        if (kind_text == "FR" || kind_text == "fr") {
            FrozenRadialSpec fr;
            fr.n = static_cast<int>(need_number(file, "center", "n", 1.0));
            if (fr.n < 1) throw ParseError("center.n must be a positive integer");
            outer = fr;
            out.ray_kind = RaySystemKind::FrozenRadial;
            out.center.kind = CenterKind::F1;  // unused placeholder
        } else {
            auto kind = center_kind_from_string(kind_text);
            if (!kind || (*kind != CenterKind::I1 && *kind != CenterKind::I2))
                throw ParseError("line " + std::to_string(line_of(file, "center", "kind")) +
                                 ": ray_pair outer kind must be I1, I2 or FR");
            out.center.kind = *kind;
            outer = out.center;
            out.ray_kind = (*kind == CenterKind::I1) ? RaySystemKind::I1Sector
                                                     : RaySystemKind::I2Sector;
        }
        out.system = PiecewiseSystem::ray_pair(ZoneField{rs}, std::move(outer), phi);
        return out;
    }

    auto kind = center_kind_from_string(kind_text);
    if (!kind)
        throw ParseError("line " + std::to_string(line_of(file, "center", "kind")) +
                         ": unknown center kind '" + kind_text + "'");
    out.center.kind = *kind;
    out.center.a = need_number(file, "center", "a", 0.0);
    out.center.b = need_number(file, "center", "b", 0.0);

    if (variant == "one_line") {
        out.saddle = read_saddle(file, "saddle");
        if (file.sections.count("saddle2"))
            throw ParseError("section [saddle2] is only valid for two_lines systems");
        out.system = PiecewiseSystem::one_line(ZoneField{out.center}, ZoneField{*out.saddle});
    } else if (variant == "two_lines") {
        out.saddle = read_saddle(file, "saddle");
        out.saddle2 = read_saddle(file, "saddle2");
        out.system = PiecewiseSystem::two_lines(ZoneField{out.center}, ZoneField{*out.saddle},
                                                ZoneField{*out.saddle2});
    } else {
        throw ParseError("line " + std::to_string(line_of(file, "switching", "variant")) +
                         ": unknown switching variant '" + variant + "'");
    }
    return out;
}

SystemFile to_system_file(const LoadedSystem& sys) {
    SystemFile f;
    const auto variant = sys.system.geometry.variant;
    if (variant == SwitchingGeometry::Variant::RayPair) {
        f.set("switching", "variant", "ray_pair");
        f.set("switching", "phi", format_number(sys.system.geometry.phi));
        const RaySaddleSpec& rs = *sys.ray_saddle;
        f.set("saddle", "a", format_number(rs.a));
        f.set("saddle", "alpha", format_number(rs.alpha));
        f.set("saddle", "beta", format_number(rs.beta));
        if (sys.ray_kind == RaySystemKind::FrozenRadial) {
            f.set("center", "kind", "FR");
            const auto& fr = std::get<FrozenRadialSpec>(sys.system.zones[1]);
            f.set("center", "n", std::to_string(fr.n));
        } else {
            f.set("center", "kind", to_string(sys.center.kind));
        }
    } else {
        f.set("switching", "variant",
              variant == SwitchingGeometry::Variant::OneLine ? "one_line" : "two_lines");
        f.set("center", "kind", to_string(sys.center.kind));
        f.set("center", "a", format_number(sys.center.a));
        f.set("center", "b", format_number(sys.center.b));
        auto put = [&](const std::string& sec, const SaddleSpec& s) {
            f.set(sec, "alpha", format_number(s.alpha));
            f.set(sec, "beta", format_number(s.beta));
            f.set(sec, "delta", format_number(s.delta));
            f.set(sec, "gamma", format_number(s.gamma));
            f.set(sec, "mu", format_number(s.mu));
        };
        put("saddle", *sys.saddle);
        if (sys.saddle2) put("saddle2", *sys.saddle2);
    }
    f.set("options", "rel_tol", format_number(sys.config.rel_tol));
    f.set("options", "abs_tol", format_number(sys.config.abs_tol));
    f.set("options", "event_tol", format_number(sys.config.event_tol));
    f.set("options", "escape_radius", format_number(sys.config.escape_radius));
    f.set("options", "max_steps", std::to_string(sys.config.max_steps));
    return f;
}

}  // namespace pwc
