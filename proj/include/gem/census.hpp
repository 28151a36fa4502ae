#pragma once

#include <array>
#include <atomic>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

#include "gem/record.hpp"

namespace gem {

enum class Orientability { any, bipartite, non_bipartite };
enum class BoundaryClass { any, toric, toric_connected };

std::string to_string(Orientability o);
std::string to_string(BoundaryClass b);

struct CensusFilter {
  Orientability orientability = Orientability::bipartite;
  bool require_boundary = true;  // at least one singular 3-residue
  BoundaryClass boundary_class = BoundaryClass::any;
  bool rigid_only = false;
  bool contracted_only = true;
  bool no_2_dipoles = true;

  // Throws InvalidArgument for rigid_only without bipartite orientability, or a
  // toric class without require_boundary.
  void validate() const;

  bool accepts(const CatalogRecord& r, bool has_2_dipole) const;
};

// Disjoint union of {0,1}-colored cycles. Cycle i occupies consecutive
// vertices starting at an even offset; color 0 joins 2j and 2j+1 inside it,
// color 1 joins 2j+1 to the next even vertex of the same cycle. Lengths are
// non-increasing.
struct CyclePartition {
  std::vector<int> cycle_lengths;
  std::array<std::vector<Vertex>, 2> matchings;
};

std::vector<CyclePartition> generate_two_colored(int order);

// A possibly disconnected 3-colored graph (colors 0, 1, 2).
struct SurfaceGraph {
  std::array<std::vector<Vertex>, 3> matchings;
  std::vector<SurfaceType> components;  // in order of smallest vertex

  int order() const noexcept { return static_cast<int>(matchings[0].size()); }
};

struct SurfaceGraphSet {
  int order = 0;
  std::vector<SurfaceGraph> members;
};

// Every 3-colored graph on `order` vertices whose components are all surfaces
// of positive genus, one per isomorphism class (vertex relabeling together with
// any permutation of the three colors).
SurfaceGraphSet build_surface_set(int order);

class Cancelled : public std::runtime_error {
public:
  Cancelled() : std::runtime_error("census cancelled") {}
};

struct CensusOptions {
  // 0 means GEM_THREADS if set, otherwise the hardware concurrency.
  unsigned threads = 0;
  const std::atomic<bool>* cancel = nullptr;
};

struct CensusStats {
  std::uint64_t base_graphs = 0;  // 3-colored graphs extended
  std::uint64_t leaves = 0;       // complete 4th matchings examined
  std::uint64_t survivors = 0;    // leaves passing the filter, before dedup
  std::uint64_t unique = 0;       // isomorphism classes passing the filter
};

struct CensusResult {
  std::vector<CatalogRecord> records;  // sorted by code text
  CensusStats stats;
};

inline constexpr int kMaxCensusOrder = 24;

// One record per isomorphism class of graphs of the given order passing the
// filter. Throws Cancelled if the cancel flag is raised during the run.
CensusResult enumerate(int order, const CensusFilter& filter, const CensusOptions& options = {});

// Worker count used for a given request.
unsigned resolve_threads(unsigned requested);

}  // namespace gem
