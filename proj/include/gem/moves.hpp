#pragma once

#include <string>
#include <vector>

#include "gem/colored_graph.hpp"

namespace gem {

// h-dipole: u < v adjacent through exactly `colors`, lying in different
// (Delta - colors)-residues.
struct Dipole {
  Vertex u = 0;
  Vertex v = 0;
  ColorSet colors;

  int h() const noexcept { return colors.size(); }
  friend bool operator==(const Dipole&, const Dipole&) = default;
};

// Two distinct c-edges, each named by its smaller endpoint, sharing exactly
// `shared` bicolored cycles. `e < f`.
struct RhoPair {
  int color = 0;
  Vertex e = 0;
  Vertex f = 0;
  ColorSet shared_with;  // the other color of each shared 2-residue
  int shared() const noexcept { return shared_with.size(); }

  friend bool operator==(const RhoPair&, const RhoPair&) = default;
};

enum class Rho3Case {
  split_connected_sum,              // r = 3, result disconnected
  connected_s2xs1_sum,              // r = 3, result connected
  split_boundary_or_connected_sum,  // r = 2, result disconnected
  connected_same_boundary,          // r = 2, connected, same number of boundary components
  connected_fewer_boundary,         // r = 2, connected, fewer boundary components
  connected_more_boundary,          // r = 2, connected, more boundary components
};

std::string to_string(Rho3Case c);

struct Rho3Classification {
  Rho3Case kind{};
  int index = 0;
  int components_after = 1;
  int boundary_before = 0;
  int boundary_after = 0;
};

// All dipoles, ordered by (u, v). Requires order > 2.
std::vector<Dipole> find_dipoles(const ColoredGraph& g);

bool is_dipole(const ColoredGraph& g, const Dipole& d);

bool is_proper(const ColoredGraph& g, const Dipole& d);

ColoredGraph cancel_dipole(const ColoredGraph& g, const Dipole& d);

// Adds an h-dipole with the given colors next to vertex `at`: every edge of
// `at` whose color is not in `colors` is rerouted through the new pair. The new
// vertices get indices order and order+1, and Dipole{order, order+1, colors}
// cancels back to g.
ColoredGraph insert_dipole(const ColoredGraph& g, Vertex at, ColorSet colors);

// Joins g1 and g2 by a 1-dipole of color c placed at vertex x1 of g1 and x2
// of g2. Vertices of g1 keep their indices, those of g2 are shifted by
// g1.order(); the dipole is {x1, g1.order() + x2}.
ColoredGraph join_by_dipole(const ColoredGraph& g1, Vertex x1, const ColoredGraph& g2, Vertex x2, int c);

// Pairs sharing exactly `shared` (2 or 3) bicolored cycles, ordered by
// (color, e, f). Requires a bipartite graph.
std::vector<RhoPair> find_rho_pairs(const ColoredGraph& g, int shared);

// Replaces the two edges by the two same-colored edges that keep the
// bipartition. Components are returned in order of their smallest original
// vertex.
std::vector<ColoredGraph> switch_pair(const ColoredGraph& g, const RhoPair& p);

bool is_good_rho2(const ColoredGraph& g, const RhoPair& p);

// Number of ordinary residues among the three 3-residues containing both edges.
int rho3_index(const ColoredGraph& g, const RhoPair& p);

bool is_good_rho3(const ColoredGraph& g, const RhoPair& p);

Rho3Classification classify_rho3_switch(const ColoredGraph& g, const RhoPair& p);

bool is_rigid(const ColoredGraph& g);

}  // namespace gem
