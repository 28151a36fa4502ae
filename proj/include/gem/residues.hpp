#pragma once

#include <array>
#include <compare>
#include <string>
#include <vector>

#include "gem/colored_graph.hpp"

namespace gem {

// Connected component of the subgraph spanned by the edges colored in `colors`.
struct Residue {
  ColorSet colors;
  std::vector<Vertex> vertices;  // sorted

  friend bool operator==(const Residue&, const Residue&) = default;
};

// Closed connected surface. `genus` is the orientable genus when orientable,
// the non-orientable genus (number of cross-caps) otherwise.
struct SurfaceType {
  bool orientable = true;
  int genus = 0;

  int euler_characteristic() const noexcept { return orientable ? 2 - 2 * genus : 2 - genus; }
  bool is_sphere() const noexcept { return orientable && genus == 0; }
  bool is_torus() const noexcept { return orientable && genus == 1; }

  static SurfaceType from_euler(int chi, bool orientable);

  friend bool operator==(const SurfaceType&, const SurfaceType&) = default;
  // Orientable surfaces first, then by genus.
  friend std::strong_ordering operator<=>(const SurfaceType& a, const SurfaceType& b) {
    if (a.orientable != b.orientable) return a.orientable ? std::strong_ordering::less : std::strong_ordering::greater;
    return a.genus <=> b.genus;
  }
};

std::string to_string(const SurfaceType& s);

// One surface per singular 3-residue, kept sorted so that equal multisets
// compare equal.
struct BoundaryProfile {
  std::vector<SurfaceType> components;

  bool closed() const noexcept { return components.empty(); }
  bool toric() const noexcept;
  int size() const noexcept { return static_cast<int>(components.size()); }

  friend bool operator==(const BoundaryProfile&, const BoundaryProfile&) = default;
};

std::string to_string(const BoundaryProfile& b);

using GVector = std::array<int, kColors>;

// Per-vertex residue index for the given color set; residues are numbered in
// order of their smallest vertex. Returns the number of residues in `count`.
std::vector<int> residue_ids(const ColoredGraph& g, ColorSet colors, int& count);

std::vector<Residue> residues(const ColoredGraph& g, ColorSet colors);

SurfaceType surface_type(const ColoredGraph& g, const Residue& r);

bool is_bipartite(const ColoredGraph& g);

// g_c = number of (Delta - {c})-residues.
GVector g_vector(const ColoredGraph& g);

BoundaryProfile boundary_profile(const ColoredGraph& g);

bool is_contracted(const ColoredGraph& g);

struct ResidueSurface {
  int missing_color = 0;  // the residue spans Delta - {missing_color}
  Residue residue;
  SurfaceType surface;
};

// Every 3-residue with its capped surface, grouped by missing color.
std::vector<ResidueSurface> three_residue_surfaces(const ColoredGraph& g);

}  // namespace gem
