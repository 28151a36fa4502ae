#pragma once

#include "gem/code.hpp"
#include "gem/homology.hpp"
#include "gem/residues.hpp"

namespace gem {

// One census entry. Every field is a function of `code`.
struct CatalogRecord {
  GemCode code;
  int order = 0;
  bool bipartite = false;
  bool contracted = false;
  bool rigid = false;  // always false for non-bipartite graphs
  GVector g{};
  BoundaryProfile boundary;
  AbelianGroup h1;

  friend bool operator==(const CatalogRecord&, const CatalogRecord&) = default;
};

CatalogRecord make_record(const ColoredGraph& g);

// Recomputes the record from its code; empty string if it matches, otherwise a
// description of the first mismatching field.
std::string check_record(const CatalogRecord& r);

}  // namespace gem
