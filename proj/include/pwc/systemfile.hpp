#ifndef PWC_SYSTEMFILE_HPP
#define PWC_SYSTEMFILE_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "pwc/closing.hpp"
#include "pwc/integrate.hpp"
#include "pwc/model.hpp"

namespace pwc {

/// Sectioned key = value text format with '#' comments. Sections and keys per
/// switching variant:
///   [switching]  variant = one_line | two_lines | ray_pair ; phi (ray_pair)
///   [center]     kind = F1..F5 | I1 | I2 | FR ; a, b (quartic) ; n (FR)
///   [saddle]     alpha, beta, delta, gamma, mu   (line variants)
///                a, alpha, beta                  (ray_pair variant)
///   [saddle2]    like [saddle], two_lines only
///   [options]    rel_tol, abs_tol, max_steps, event_tol, escape_radius
/// Unknown sections or keys are rejected with their line number.
struct SystemFile {
    struct Entry {
        std::string value;
        int line = 0;
    };
    using SectionMap = std::map<std::string, Entry>;
    std::map<std::string, SectionMap> sections;

    std::optional<std::string> get(const std::string& section, const std::string& key) const;
    void set(const std::string& section, const std::string& key, const std::string& value);
};

SystemFile parse_system_file_text(const std::string& text);
SystemFile load_system_file(const std::string& path);
std::string emit_system_file(const SystemFile& file);

/// A validated system plus everything the CLI needs to drive it.
struct LoadedSystem {
    PiecewiseSystem system;
    CenterSpec center;                    // meaning depends on the variant
    std::optional<SaddleSpec> saddle;     // line variants
    std::optional<SaddleSpec> saddle2;    // two_lines
    std::optional<RaySaddleSpec> ray_saddle;
    std::optional<RaySystemKind> ray_kind;
    IntegratorConfig config;
};

/// Validates and builds; throws ParseError with a line-numbered message on
/// unknown keys, missing sections, or malformed numbers.
LoadedSystem build_system(const SystemFile& file);

/// Inverse of build for round-trip checks: a SystemFile whose build yields an
/// identical model.
SystemFile to_system_file(const LoadedSystem& sys);

}  // namespace pwc

#endif
