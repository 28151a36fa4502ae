#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "gem/colored_graph.hpp"

namespace gem {

using BigInt = boost::multiprecision::cpp_int;

// Z^rank + Z/d_1 + ... + Z/d_k with d_1 | d_2 | ... and every d_i >= 2.
struct AbelianGroup {
  int rank = 0;
  std::vector<std::int64_t> torsion;

  bool trivial() const noexcept { return rank == 0 && torsion.empty(); }
  friend bool operator==(const AbelianGroup&, const AbelianGroup&) = default;
};

// "0", "Z", "Z^3", "Z + Z/2", ...
std::string to_string(const AbelianGroup& g);

// Direct sum, renormalized to invariant-factor form.
AbelianGroup direct_sum(const AbelianGroup& a, const AbelianGroup& b);

// Invariant-factor form of Z^rank + sum Z/d over arbitrary positive d; entries
// equal to 1 are dropped.
AbelianGroup normalize_group(int rank, std::vector<std::int64_t> orders);

using IntMatrix = std::vector<std::vector<BigInt>>;

// Nonzero diagonal entries d_1 | d_2 | ... of the Smith normal form, all
// positive. Their count is the rank of the matrix.
std::vector<BigInt> smith_invariants(IntMatrix m);

// Boundary map of the 2-complex obtained by capping every bicolored cycle with
// a disk: one row per 2-cell, one column per edge. Edge (v, c) with
// v < neighbor(v, c) is oriented from v to its neighbor; columns are ordered by
// (smaller endpoint, color).
IntMatrix cell_boundary_matrix(const ColoredGraph& g);

AbelianGroup first_homology(const ColoredGraph& g);

}  // namespace gem
