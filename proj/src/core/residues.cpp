#include "gem/residues.hpp"

#include <algorithm>

namespace gem {

SurfaceType SurfaceType::from_euler(int chi, bool orientable) {
  if (orientable) {
    if (chi > 2 || (2 - chi) % 2 != 0)
      throw InvalidArgument("no orientable surface has Euler characteristic " + std::to_string(chi));
    return {true, (2 - chi) / 2};
  }
  if (chi > 1) throw InvalidArgument("no non-orientable surface has Euler characteristic " + std::to_string(chi));
  return {false, 2 - chi};
}

std::string to_string(const SurfaceType& s) {
  if (s.orientable) {
    if (s.genus == 0) return "sphere";
    if (s.genus == 1) return "torus";
    return "orientable genus " + std::to_string(s.genus);
  }
  if (s.genus == 1) return "projective plane";
  if (s.genus == 2) return "Klein bottle";
  return "non-orientable genus " + std::to_string(s.genus);
}

bool BoundaryProfile::toric() const noexcept {
  return !components.empty() &&
         std::all_of(components.begin(), components.end(), [](const SurfaceType& s) { return s.is_torus(); });
}

std::string to_string(const BoundaryProfile& b) {
  if (b.closed()) return "closed";
  std::string out;
  for (std::size_t i = 0; i < b.components.size(); ++i) {
    if (i) out += ", ";
    out += to_string(b.components[i]);
  }
  return out;
}

std::vector<int> residue_ids(const ColoredGraph& g, ColorSet colors, int& count) {
  if (colors.empty()) throw InvalidArgument("residues: empty color set");
  const auto cs = colors.colors();
  const int n = g.order();
  std::vector<int> id(static_cast<std::size_t>(n), -1);
  std::vector<Vertex> stack;
  count = 0;
  for (Vertex s = 0; s < n; ++s) {
    if (id[static_cast<std::size_t>(s)] != -1) continue;
    id[static_cast<std::size_t>(s)] = count;
    stack.assign(1, s);
    while (!stack.empty()) {
      const Vertex v = stack.back();
      stack.pop_back();
      for (int c : cs) {
        const Vertex w = g.neighbor(v, c);
        if (id[static_cast<std::size_t>(w)] == -1) {
          id[static_cast<std::size_t>(w)] = count;
          stack.push_back(w);
        }
      }
    }
    ++count;
  }
  return id;
}

std::vector<Residue> residues(const ColoredGraph& g, ColorSet colors) {
  int count = 0;
  const auto id = residue_ids(g, colors, count);
  std::vector<Residue> out(static_cast<std::size_t>(count), Residue{colors, {}});
  for (Vertex v = 0; v < g.order(); ++v) out[static_cast<std::size_t>(id[static_cast<std::size_t>(v)])].vertices.push_back(v);
  return out;
}

namespace {

// Two-coloring restricted to `colors`; false on an odd cycle.
bool two_colorable(const ColoredGraph& g, ColorSet colors, std::span<const Vertex> vertices) {
  const auto cs = colors.colors();
  std::vector<signed char> side(static_cast<std::size_t>(g.order()), -1);
  std::vector<Vertex> stack;
  for (Vertex s : vertices) {
    if (side[static_cast<std::size_t>(s)] != -1) continue;
    side[static_cast<std::size_t>(s)] = 0;
    stack.assign(1, s);
    while (!stack.empty()) {
      const Vertex v = stack.back();
      stack.pop_back();
      for (int c : cs) {
        const Vertex w = g.neighbor(v, c);
        auto& sw = side[static_cast<std::size_t>(w)];
        if (sw == -1) {
          sw = static_cast<signed char>(1 - side[static_cast<std::size_t>(v)]);
          stack.push_back(w);
        } else if (sw == side[static_cast<std::size_t>(v)]) {
          return false;
        }
      }
    }
  }
  return true;
}

// Number of {a,b}-cycles meeting `vertices`.
int count_cycles(const ColoredGraph& g, int a, int b, std::span<const Vertex> vertices, std::vector<char>& seen) {
  int cycles = 0;
  for (Vertex s : vertices) {
    if (seen[static_cast<std::size_t>(s)]) continue;
    ++cycles;
    Vertex v = s;
    do {
      seen[static_cast<std::size_t>(v)] = 1;
      const Vertex w = g.neighbor(v, a);
      seen[static_cast<std::size_t>(w)] = 1;
      v = g.neighbor(w, b);
    } while (v != s);
  }
  for (Vertex s : vertices) seen[static_cast<std::size_t>(s)] = 0;
  return cycles;
}

SurfaceType surface_of(const ColoredGraph& g, ColorSet colors, std::span<const Vertex> vertices, std::vector<char>& seen) {
  const auto cs = colors.colors();
  const int v = static_cast<int>(vertices.size());
  const int e = 3 * v / 2;
  const int f = count_cycles(g, cs[0], cs[1], vertices, seen) + count_cycles(g, cs[0], cs[2], vertices, seen) +
                count_cycles(g, cs[1], cs[2], vertices, seen);
  return SurfaceType::from_euler(v - e + f, two_colorable(g, colors, vertices));
}

}  // namespace

SurfaceType surface_type(const ColoredGraph& g, const Residue& r) {
  if (r.colors.size() != 3)
    throw InvalidArgument("surface_type needs a 3-residue, got " + std::to_string(r.colors.size()) + " colors");
  if (r.vertices.empty()) throw InvalidArgument("surface_type: empty residue");
  std::vector<char> seen(static_cast<std::size_t>(g.order()), 0);
  return surface_of(g, r.colors, r.vertices, seen);
}

bool is_bipartite(const ColoredGraph& g) {
  std::vector<Vertex> all(static_cast<std::size_t>(g.order()));
  for (Vertex v = 0; v < g.order(); ++v) all[static_cast<std::size_t>(v)] = v;
  return two_colorable(g, ColorSet::all(), all);
}

GVector g_vector(const ColoredGraph& g) {
  GVector out{};
  for (int c = 0; c < kColors; ++c) residue_ids(g, ColorSet::hat(c), out[static_cast<std::size_t>(c)]);
  return out;
}

std::vector<ResidueSurface> three_residue_surfaces(const ColoredGraph& g) {
  std::vector<ResidueSurface> out;
  std::vector<char> seen(static_cast<std::size_t>(g.order()), 0);
  for (int c = 0; c < kColors; ++c) {
    for (auto& r : residues(g, ColorSet::hat(c))) {
      const SurfaceType s = surface_of(g, r.colors, r.vertices, seen);
      out.push_back({c, std::move(r), s});
    }
  }
  return out;
}

BoundaryProfile boundary_profile(const ColoredGraph& g) {
  BoundaryProfile b;
  for (const auto& rs : three_residue_surfaces(g))
    if (!rs.surface.is_sphere()) b.components.push_back(rs.surface);
  std::sort(b.components.begin(), b.components.end());
  return b;
}

bool is_contracted(const ColoredGraph& g) {
  const auto all = three_residue_surfaces(g);
  for (int c = 0; c < kColors; ++c) {
    int count = 0;
    bool all_singular = true;
    for (const auto& rs : all) {
      if (rs.missing_color != c) continue;
      ++count;
      all_singular = all_singular && !rs.surface.is_sphere();
    }
    if (count != 1 && !all_singular) return false;
  }
  return true;
}

}  // namespace gem
