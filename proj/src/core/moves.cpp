#include "gem/moves.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>

#include "gem/residues.hpp"

namespace gem {

std::string to_string(Rho3Case c) {
  switch (c) {
    case Rho3Case::split_connected_sum: return "split-connected-sum";
    case Rho3Case::connected_s2xs1_sum: return "connected-S2xS1-sum";
    case Rho3Case::split_boundary_or_connected_sum: return "split-boundary-or-connected-sum";
    case Rho3Case::connected_same_boundary: return "connected-same-boundary";
    case Rho3Case::connected_fewer_boundary: return "connected-fewer-boundary";
    case Rho3Case::connected_more_boundary: return "connected-more-boundary";
  }
  return "unknown";
}

namespace {

// Residue ids for every color subset, computed on demand.
class ResidueCache {
public:
  explicit ResidueCache(const ColoredGraph& g) : g_(g) {}
  const std::vector<int>& ids(ColorSet s) {
    auto& slot = cache_[s.mask()];
    if (slot.empty()) {
      int count = 0;
      slot = residue_ids(g_, s, count);
    }
    return slot;
  }

private:
  const ColoredGraph& g_;
  std::array<std::vector<int>, 16> cache_;
};

bool separated(ResidueCache& cache, Vertex u, Vertex v, ColorSet colors) {
  const ColorSet rest = colors.complement();
  if (rest.empty()) return false;
  const auto& id = cache.ids(rest);
  return id[static_cast<std::size_t>(u)] != id[static_cast<std::size_t>(v)];
}

SurfaceType residue_surface(const ColoredGraph& g, ColorSet colors, Vertex v) {
  int count = 0;
  const auto id = residue_ids(g, colors, count);
  Residue r{colors, {}};
  for (Vertex w = 0; w < g.order(); ++w)
    if (id[static_cast<std::size_t>(w)] == id[static_cast<std::size_t>(v)]) r.vertices.push_back(w);
  return surface_type(g, r);
}

std::vector<signed char> sides(const ColoredGraph& g) {
  std::vector<signed char> side(static_cast<std::size_t>(g.order()), -1);
  std::vector<Vertex> stack{0};
  side[0] = 0;
  while (!stack.empty()) {
    const Vertex v = stack.back();
    stack.pop_back();
    for (int c = 0; c < kColors; ++c) {
      const Vertex w = g.neighbor(v, c);
      if (side[static_cast<std::size_t>(w)] == -1) {
        side[static_cast<std::size_t>(w)] = static_cast<signed char>(1 - side[static_cast<std::size_t>(v)]);
        stack.push_back(w);
      } else if (side[static_cast<std::size_t>(w)] == side[static_cast<std::size_t>(v)]) {
        throw InvalidArgument("graph is not bipartite");
      }
    }
  }
  return side;
}

// {c,j}-cycle id of every vertex.
std::vector<int> cycle_ids(const ColoredGraph& g, int c, int j) {
  int count = 0;
  return residue_ids(g, ColorSet{c, j}, count);
}

ColorSet shared_cycles(const ColoredGraph& g, int c, Vertex e, Vertex f) {
  ColorSet s;
  for (int j = 0; j < kColors; ++j) {
    if (j == c) continue;
    const auto id = cycle_ids(g, c, j);
    if (id[static_cast<std::size_t>(e)] == id[static_cast<std::size_t>(f)]) s.insert(j);
  }
  return s;
}

void check_pair(const ColoredGraph& g, const RhoPair& p, int shared) {
  if (p.shared() != shared)
    throw InvalidArgument("expected a pair sharing " + std::to_string(shared) + " bicolored cycles");
  if (p.color < 0 || p.color >= kColors || p.e < 0 || p.f < 0 || p.e >= g.order() || p.f >= g.order())
    throw InvalidArgument("rho-pair out of range");
  if (!(p.e < g.neighbor(p.e, p.color)) || !(p.f < g.neighbor(p.f, p.color)) || p.e >= p.f)
    throw InvalidArgument("rho-pair edges must be named by their smaller endpoints, e < f");
  if (p.f == g.neighbor(p.e, p.color)) throw InvalidArgument("rho-pair edges coincide");
  if (shared_cycles(g, p.color, p.e, p.f) != p.shared_with) throw InvalidArgument("stale rho-pair");
}

}  // namespace

bool is_dipole(const ColoredGraph& g, const Dipole& d) {
  if (d.u < 0 || d.v < 0 || d.u >= g.order() || d.v >= g.order() || d.u == d.v) return false;
  if (d.colors.empty() || g.colors_between(d.u, d.v) != d.colors) return false;
  ResidueCache cache(g);
  return separated(cache, d.u, d.v, d.colors);
}

std::vector<Dipole> find_dipoles(const ColoredGraph& g) {
  if (g.order() <= 2) throw InvalidArgument("dipoles need order > 2");
  ResidueCache cache(g);
  std::vector<Dipole> out;
  for (Vertex u = 0; u < g.order(); ++u) {
    unsigned done = 0;
    for (int c = 0; c < kColors; ++c) {
      const Vertex v = g.neighbor(u, c);
      if (v < u || ((done >> c) & 1u)) continue;
      const ColorSet colors = g.colors_between(u, v);
      done |= colors.mask();
      if (separated(cache, u, v, colors)) out.push_back({u, v, colors});
    }
  }
  std::sort(out.begin(), out.end(), [](const Dipole& a, const Dipole& b) {
    return std::pair(a.u, a.v) < std::pair(b.u, b.v);
  });
  return out;
}

bool is_proper(const ColoredGraph& g, const Dipole& d) {
  if (!is_dipole(g, d)) throw InvalidArgument("not a dipole of this graph");
  if (d.h() > 1) return true;
  const ColorSet hat = d.colors.complement();
  return residue_surface(g, hat, d.u).is_sphere() || residue_surface(g, hat, d.v).is_sphere();
}

ColoredGraph cancel_dipole(const ColoredGraph& g, const Dipole& d) {
  if (g.order() <= 2) throw InvalidArgument("dipoles need order > 2");
  if (!is_dipole(g, d)) throw InvalidArgument("not a dipole of this graph");
  auto m = g.matchings();
  for (int c = 0; c < kColors; ++c) {
    if (d.colors.contains(c)) continue;
    const Vertex a = m[c][static_cast<std::size_t>(d.u)];
    const Vertex b = m[c][static_cast<std::size_t>(d.v)];
    m[c][static_cast<std::size_t>(a)] = b;
    m[c][static_cast<std::size_t>(b)] = a;
  }
  std::vector<Vertex> index(static_cast<std::size_t>(g.order()), -1);
  Vertex next = 0;
  for (Vertex v = 0; v < g.order(); ++v)
    if (v != d.u && v != d.v) index[static_cast<std::size_t>(v)] = next++;
  std::array<ColoredGraph::Matching, kColors> out;
  for (int c = 0; c < kColors; ++c) {
    out[c].resize(static_cast<std::size_t>(next));
    for (Vertex v = 0; v < g.order(); ++v)
      if (index[static_cast<std::size_t>(v)] >= 0)
        out[c][static_cast<std::size_t>(index[static_cast<std::size_t>(v)])] =
            index[static_cast<std::size_t>(m[c][static_cast<std::size_t>(v)])];
  }
  auto parts = ColoredGraph::components_of(out);
  if (parts.size() != 1) throw std::logic_error("dipole cancellation disconnected the graph");
  return std::move(parts.front());
}

ColoredGraph insert_dipole(const ColoredGraph& g, Vertex at, ColorSet colors) {
  if (colors.empty() || colors.size() > 3) throw InvalidArgument("a dipole has 1 to 3 colors");
  if (at < 0 || at >= g.order()) throw InvalidArgument("vertex out of range");
  const Vertex u = g.order(), v = g.order() + 1;
  auto m = g.matchings();
  for (auto& x : m) x.resize(static_cast<std::size_t>(v) + 1);
  for (int c = 0; c < kColors; ++c) {
    if (colors.contains(c)) {
      m[c][static_cast<std::size_t>(u)] = v;
      m[c][static_cast<std::size_t>(v)] = u;
      continue;
    }
    const Vertex y = m[c][static_cast<std::size_t>(at)];
    m[c][static_cast<std::size_t>(at)] = u;
    m[c][static_cast<std::size_t>(u)] = at;
    m[c][static_cast<std::size_t>(v)] = y;
    m[c][static_cast<std::size_t>(y)] = v;
  }
  return ColoredGraph(std::move(m));
}

ColoredGraph join_by_dipole(const ColoredGraph& g1, Vertex x1, const ColoredGraph& g2, Vertex x2, int c) {
  if (x1 < 0 || x1 >= g1.order() || x2 < 0 || x2 >= g2.order()) throw InvalidArgument("vertex out of range");
  if (c < 0 || c >= kColors) throw InvalidArgument("color out of range");
  const Vertex shift = g1.order();
  std::array<ColoredGraph::Matching, kColors> m;
  for (int k = 0; k < kColors; ++k) {
    m[k] = g1.matching(k);
    for (Vertex v = 0; v < g2.order(); ++v) m[k].push_back(g2.neighbor(v, k) + shift);
  }
  const Vertex a = x1, b = x2 + shift;
  const Vertex ya = m[c][static_cast<std::size_t>(a)], yb = m[c][static_cast<std::size_t>(b)];
  m[c][static_cast<std::size_t>(a)] = b;
  m[c][static_cast<std::size_t>(b)] = a;
  m[c][static_cast<std::size_t>(ya)] = yb;
  m[c][static_cast<std::size_t>(yb)] = ya;
  return ColoredGraph(std::move(m));
}

std::vector<RhoPair> find_rho_pairs(const ColoredGraph& g, int shared) {
  if (shared != 2 && shared != 3) throw InvalidArgument("rho-pairs share 2 or 3 bicolored cycles");
  if (!is_bipartite(g)) throw InvalidArgument("rho-pairs are defined for bipartite graphs only");
  std::vector<RhoPair> out;
  for (int c = 0; c < kColors; ++c) {
    std::array<std::vector<int>, kColors> ids;
    for (int j = 0; j < kColors; ++j)
      if (j != c) ids[j] = cycle_ids(g, c, j);
    std::vector<Vertex> edges;
    for (Vertex v = 0; v < g.order(); ++v)
      if (v < g.neighbor(v, c)) edges.push_back(v);
    for (std::size_t a = 0; a < edges.size(); ++a)
      for (std::size_t b = a + 1; b < edges.size(); ++b) {
        ColorSet s;
        for (int j = 0; j < kColors; ++j)
          if (j != c && ids[j][static_cast<std::size_t>(edges[a])] == ids[j][static_cast<std::size_t>(edges[b])]) s.insert(j);
        if (s.size() == shared) out.push_back({c, edges[a], edges[b], s});
      }
  }
  return out;
}

namespace {

struct Switched {
  std::array<ColoredGraph::Matching, kColors> matchings;
  Vertex e_black = 0;  // endpoint of e' = (e_black, f_white)
  Vertex f_black = 0;  // endpoint of f' = (f_black, e_white)
};

Switched switched(const ColoredGraph& g, const RhoPair& p) {
  const auto side = sides(g);
  const int c = p.color;
  auto black_white = [&](Vertex x) {
    const Vertex y = g.neighbor(x, c);
    return side[static_cast<std::size_t>(x)] == 0 ? std::pair{x, y} : std::pair{y, x};
  };
  const auto [eb, ew] = black_white(p.e);
  const auto [fb, fw] = black_white(p.f);
  Switched out{g.matchings(), eb, fb};
  auto& m = out.matchings[c];
  m[static_cast<std::size_t>(eb)] = fw;
  m[static_cast<std::size_t>(fw)] = eb;
  m[static_cast<std::size_t>(fb)] = ew;
  m[static_cast<std::size_t>(ew)] = fb;
  return out;
}

}  // namespace

std::vector<ColoredGraph> switch_pair(const ColoredGraph& g, const RhoPair& p) {
  if (!is_bipartite(g)) throw InvalidArgument("switching needs a bipartite graph");
  check_pair(g, p, p.shared());
  return ColoredGraph::components_of(switched(g, p).matchings);
}

bool is_good_rho2(const ColoredGraph& g, const RhoPair& p) {
  if (!is_bipartite(g)) throw InvalidArgument("switching needs a bipartite graph");
  check_pair(g, p, 2);
  const auto sw = switched(g, p);
  auto parts = ColoredGraph::components_of(sw.matchings);
  if (parts.size() != 1) throw std::logic_error("rho2 switching disconnected the graph");
  // A single component keeps the original vertex indices.
  const ColoredGraph& h = parts.front();
  ColorSet colors = p.shared_with;
  colors.insert(p.color);
  int count = 0;
  const auto id = residue_ids(h, colors, count);
  if (id[static_cast<std::size_t>(sw.e_black)] == id[static_cast<std::size_t>(sw.f_black)]) return false;
  return residue_surface(h, colors, sw.e_black).is_sphere() || residue_surface(h, colors, sw.f_black).is_sphere();
}

int rho3_index(const ColoredGraph& g, const RhoPair& p) {
  check_pair(g, p, 3);
  int r = 0;
  for (int i = 0; i < kColors; ++i) {
    if (i == p.color) continue;
    if (residue_surface(g, ColorSet::hat(i), p.e).is_sphere()) ++r;
  }
  return r;
}

bool is_good_rho3(const ColoredGraph& g, const RhoPair& p) { return rho3_index(g, p) >= 2; }

Rho3Classification classify_rho3_switch(const ColoredGraph& g, const RhoPair& p) {
  Rho3Classification out;
  out.index = rho3_index(g, p);
  if (out.index < 2) throw InvalidArgument("rho3-pair of index " + std::to_string(out.index) + " is not good");
  const auto parts = switch_pair(g, p);
  out.components_after = static_cast<int>(parts.size());
  out.boundary_before = boundary_profile(g).size();
  for (const auto& part : parts) out.boundary_after += boundary_profile(part).size();
  if (out.index == 3) {
    out.kind = parts.size() == 2 ? Rho3Case::split_connected_sum : Rho3Case::connected_s2xs1_sum;
  } else if (parts.size() == 2) {
    out.kind = Rho3Case::split_boundary_or_connected_sum;
  } else if (out.boundary_after == out.boundary_before) {
    out.kind = Rho3Case::connected_same_boundary;
  } else if (out.boundary_after < out.boundary_before) {
    out.kind = Rho3Case::connected_fewer_boundary;
  } else {
    out.kind = Rho3Case::connected_more_boundary;
  }
  return out;
}

bool is_rigid(const ColoredGraph& g) {
  if (!is_bipartite(g)) throw InvalidArgument("rigidity is defined for bipartite graphs only");
  for (const auto& p : find_rho_pairs(g, 2))
    if (is_good_rho2(g, p)) return false;
  for (const auto& p : find_rho_pairs(g, 3))
    if (rho3_index(g, p) >= 2) return false;
  return true;
}

}  // namespace gem
