#ifndef PWC_CATALOG_HPP
#define PWC_CATALOG_HPP

#include <optional>
#include <string>
#include <vector>

#include "pwc/closing.hpp"
#include "pwc/model.hpp"

namespace pwc {

/// A named built-in system. Right-hand parts are stored verbatim as printed
/// (as affine coefficient sets), including the entries whose divergence is
/// nonzero; those are flagged and only runnable through portrait/verify.
struct CatalogEntry {
    std::string label;
    std::string description;
    PiecewiseSystem system;
    bool hamiltonian_right = true;   // every non-center zone divergence-free
    bool canonical_center = true;    // center parameters inside the normal-form range
    bool canonical_saddle = true;    // saddle parameters inside the normal-form range
    std::string left_text;           // printed left part
    std::string right_text;          // printed right part(s)
    std::optional<RaySystemKind> ray_kind;
};

const std::vector<CatalogEntry>& catalog();

std::optional<CatalogEntry> catalog_find(const std::string& label);

}  // namespace pwc

#endif
