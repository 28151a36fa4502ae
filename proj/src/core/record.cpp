#include "gem/record.hpp"

#include "gem/moves.hpp"

namespace gem {

CatalogRecord make_record(const ColoredGraph& g) {
  CatalogRecord r;
  r.code = canonical_code(g);
  r.order = g.order();
  r.bipartite = is_bipartite(g);
  r.contracted = is_contracted(g);
  r.rigid = r.bipartite && is_rigid(g);
  r.g = g_vector(g);
  r.boundary = boundary_profile(g);
  r.h1 = first_homology(g);
  return r;
}

std::string check_record(const CatalogRecord& r) {
  CatalogRecord fresh;
  try {
    fresh = make_record(decode(r.code.text));
  } catch (const std::exception& e) {
    return std::string("code does not decode: ") + e.what();
  }
  if (fresh.code != r.code) return "code is not canonical (expected " + fresh.code.text + ")";
  if (fresh.order != r.order) return "order";
  if (fresh.bipartite != r.bipartite) return "bipartite";
  if (fresh.contracted != r.contracted) return "contracted";
  if (fresh.rigid != r.rigid) return "rigid";
  if (fresh.g != r.g) return "g";
  if (fresh.boundary != r.boundary) return "boundary";
  if (fresh.h1 != r.h1) return "h1";
  return {};
}

}  // namespace gem
