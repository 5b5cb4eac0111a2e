#pragma once

// Text format for presentations:
//
//   algebra { char = 0
//     vertices = [1, 2]
//     arrows = [ a: 1 -> 2, b: 2 -> 1 ]
//     relations = [ a*b*a, b*a*b - 2*b*a*b ]
//   }
//
// `#` starts a comment. Paths read left to right. Fields may come in any
// order, each at most once, optionally followed by `;`.

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "json.hpp"
#include "ssb/algebra.hpp"
#include "ssb/quiver.hpp"

namespace ssb {

/// Throws ParseError (with line and column) on syntax errors and on a
/// characteristic that is not 0 or a prime, ValidationError on unknown
/// names, non-composable or non-parallel terms, terms of length < 2, and
/// disconnected quivers.
Presentation parse_presentation(std::string_view text);

/// Inverse of parse_presentation up to whitespace.
std::string emit_presentation(const Presentation& pres);

/// Structural equality, ignoring the recorded family.
bool same_presentation(const Presentation& a, const Presentation& b);

/// A family spec string, a path to a document, or a document given inline.
/// `ch` overrides the characteristic of a document and defaults to 0 for a
/// family.
Presentation load_source(const std::string& src, std::optional<std::uint32_t> ch = std::nullopt);

struct ReportOptions {
  int hh_max_degree = 1;  // -1 skips Hochschild cohomology
  bool kulshammer = true;  // only in positive characteristic
};

/// Keys spec, char, dimension, cartan, cartan_invariants, cartan_det,
/// centre_dim, hh, kulshammer. A key is missing when the value was not
/// computed (hh degrees beyond the available resolution, kulshammer in
/// characteristic 0 or for a non-symmetric algebra).
nlohmann::json invariants_report(const FiniteAlgebra& A, const ReportOptions& opts = {});

std::string to_dot(const Presentation& pres);

}  // namespace ssb
