#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "ssb/family_spec.hpp"

namespace ssb {

/// Sequence of arrow indices, read left to right.
using Word = std::u16string;

struct Arrow {
  std::string name;
  std::uint32_t origin = 0;
  std::uint32_t terminus = 0;
};

struct Quiver {
  std::vector<std::string> vertices;
  std::vector<Arrow> arrows;

  std::size_t num_vertices() const { return vertices.size(); }
  std::size_t num_arrows() const { return arrows.size(); }
  std::optional<std::uint32_t> find_vertex(const std::string& name) const;
  std::optional<std::uint32_t> find_arrow(const std::string& name) const;
  bool connected() const;
};

/// A path: trivial (empty word) at `origin` == `terminus`, or a composable
/// arrow sequence.
struct Path {
  std::uint32_t origin = 0;
  std::uint32_t terminus = 0;
  Word arrows;

  std::size_t length() const { return arrows.size(); }
  bool trivial() const { return arrows.empty(); }

  static Path vertex(std::uint32_t v) { return Path{v, v, {}}; }
  friend bool operator==(const Path&, const Path&) = default;
};

/// Builds the path for a word of arrows; nullopt when not composable.
std::optional<Path> make_path(const Quiver& q, const Word& w);
std::string path_name(const Quiver& q, const Path& p);

/// Degree-lexicographic order: length, then arrow index sequence; trivial
/// paths ordered by vertex.
bool deglex_less(const Path& a, const Path& b);
bool deglex_less(const Word& a, const Word& b);

struct Term {
  mpq_class coeff;
  Path path;
};

using Relation = std::vector<Term>;

struct Presentation {
  Quiver quiver;
  std::vector<Relation> relations;
  std::uint32_t characteristic = 0;
  std::optional<FamilySpec> family;

  std::string relation_string(const Relation& rel) const;
};

}  // namespace ssb
