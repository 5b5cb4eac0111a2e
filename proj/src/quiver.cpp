#include "ssb/quiver.hpp"

#include <sstream>

namespace ssb {

std::optional<std::uint32_t> Quiver::find_vertex(const std::string& name) const {
  for (std::uint32_t i = 0; i < vertices.size(); ++i) {
    if (vertices[i] == name) return i;
  }
  return std::nullopt;
}

std::optional<std::uint32_t> Quiver::find_arrow(const std::string& name) const {
  for (std::uint32_t i = 0; i < arrows.size(); ++i) {
    if (arrows[i].name == name) return i;
  }
  return std::nullopt;
}

bool Quiver::connected() const {
  if (vertices.empty()) return false;
  // union-find over the underlying undirected graph
  std::vector<std::uint32_t> parent(vertices.size());
  for (std::uint32_t i = 0; i < parent.size(); ++i) parent[i] = i;
  auto find = [&](std::uint32_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  std::size_t components = vertices.size();
  for (const auto& a : arrows) {
    auto x = find(a.origin), y = find(a.terminus);
    if (x != y) {
      parent[x] = y;
      --components;
    }
  }
  return components == 1;
}

std::optional<Path> make_path(const Quiver& q, const Word& w) {
  if (w.empty()) return std::nullopt;
  for (std::size_t i = 0; i + 1 < w.size(); ++i) {
    if (q.arrows[w[i]].terminus != q.arrows[w[i + 1]].origin) return std::nullopt;
  }
  return Path{q.arrows[w.front()].origin, q.arrows[w.back()].terminus, w};
}

std::string path_name(const Quiver& q, const Path& p) {
  if (p.trivial()) return "e" + q.vertices[p.origin];
  std::string out;
  for (std::size_t i = 0; i < p.arrows.size(); ++i) {
    if (i) out += '*';
    out += q.arrows[p.arrows[i]].name;
  }
  return out;
}

bool deglex_less(const Word& a, const Word& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a < b;
}

bool deglex_less(const Path& a, const Path& b) {
  if (a.trivial() && b.trivial()) return a.origin < b.origin;
  return deglex_less(a.arrows, b.arrows);
}

std::string Presentation::relation_string(const Relation& rel) const {
  std::ostringstream os;
  bool first = true;
  for (const auto& term : rel) {
    mpq_class c = term.coeff;
    if (!first) {
      os << (sgn(c) < 0 ? " - " : " + ");
      if (sgn(c) < 0) c = -c;
    } else if (sgn(c) < 0) {
      os << '-';
      c = -c;
    }
    if (c != 1) os << c.get_str() << '*';
    os << path_name(quiver, term.path);
    first = false;
  }
  return os.str();
}

}  // namespace ssb
