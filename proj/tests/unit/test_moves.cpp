#include <doctest.h>

#include "gem/census.hpp"
#include "gem/homology.hpp"
#include "gem/moves.hpp"
#include "gem/residues.hpp"
#include "oracles.hpp"
#include "support.hpp"

using namespace gem;

namespace {

// Disjoint union of g1 and g2 with the c-edges at x1 and x2 exchanged, so
// that the two new c-edges form a rho3-pair whose switch splits the graph.
ColoredGraph graph_sum(const ColoredGraph& g1, Vertex x1, const ColoredGraph& g2, Vertex x2, int c) {
  const int n1 = g1.order(), n = n1 + g2.order();
  std::array<ColoredGraph::Matching, kColors> m;
  for (int k = 0; k < kColors; ++k) {
    m[k].resize(n);
    for (int v = 0; v < n1; ++v) m[k][v] = g1.neighbor(v, k);
    for (int v = 0; v < g2.order(); ++v) m[k][n1 + v] = n1 + g2.neighbor(v, k);
  }
  const Vertex y1 = g1.neighbor(x1, c), y2 = n1 + g2.neighbor(x2, c);
  m[c][x1] = y2;
  m[c][y2] = x1;
  m[c][n1 + x2] = y1;
  m[c][y1] = n1 + x2;
  return ColoredGraph(m);
}

// Two-coloring of a bipartite graph by breadth-first search.
std::vector<int> sides(const ColoredGraph& g) {
  std::vector<int> side(g.order(), -1);
  std::vector<Vertex> queue{0};
  side[0] = 0;
  for (std::size_t i = 0; i < queue.size(); ++i)
    for (int c = 0; c < kColors; ++c) {
      const Vertex w = g.neighbor(queue[i], c);
      if (side[w] < 0) side[w] = side[queue[i]] ^ 1, queue.push_back(w);
    }
  return side;
}

// Replaces the c-edges at a and b by the two c-edges that keep `side` a
// proper two-coloring.
ColoredGraph switched(const ColoredGraph& g, const std::vector<int>& side, int c, Vertex a, Vertex b) {
  auto m = g.matchings();
  Vertex a2 = g.neighbor(a, c), b2 = g.neighbor(b, c);
  if (side[a] != 0) std::swap(a, a2);
  if (side[b] != 0) std::swap(b, b2);
  m[c][a] = b2, m[c][b2] = a;
  m[c][b] = a2, m[c][a2] = b;
  return ColoredGraph(m);
}

std::vector<CatalogRecord> loose_census(int order) {
  CensusFilter f;
  f.require_boundary = false;
  f.contracted_only = false;
  f.no_2_dipoles = false;
  return enumerate(order, f, {1, nullptr}).records;
}

}  // namespace

TEST_CASE("dipole search needs order above two") {
  CHECK_THROWS_AS(find_dipoles(ColoredGraph::order_two()), InvalidArgument);
}

TEST_CASE("published graphs have no 2- or 3-dipoles") {
  for (const auto& code : testing::published_codes())
    for (const auto& d : find_dipoles(decode(code))) {
      CHECK(d.h() == 1);
      CHECK_FALSE(is_proper(decode(code), d));
    }
}

TEST_CASE("inserted dipoles are found, proper, and cancel back") {
  const auto g = decode(testing::kSolidTorus);
  const auto code = canonical_code(g);
  for (Vertex at = 0; at < g.order(); ++at)
    for (ColorSet colors : {ColorSet{0, 1}, ColorSet{2, 3}, ColorSet{1, 2, 3}, ColorSet{0, 2}}) {
      const auto h = insert_dipole(g, at, colors);
      const Dipole d{g.order(), g.order() + 1, colors};
      CHECK(is_dipole(h, d));
      const auto all = find_dipoles(h);
      CHECK(std::find(all.begin(), all.end(), d) != all.end());
      CHECK(is_proper(h, d));
      CHECK(canonical_code(cancel_dipole(h, d)) == code);
      CHECK(boundary_profile(h) == boundary_profile(g));
    }
  CHECK_THROWS_AS(insert_dipole(g, 0, ColorSet{}), InvalidArgument);
  CHECK_THROWS_AS(insert_dipole(g, 0, ColorSet::all()), InvalidArgument);
  CHECK_THROWS_AS(insert_dipole(g, 6, ColorSet{1}), InvalidArgument);
}

TEST_CASE("stale dipoles are rejected") {
  const auto g = decode(testing::kSolidTorus);
  const Dipole bogus{0, 3, ColorSet{0}};
  CHECK_FALSE(is_dipole(g, bogus));
  CHECK_THROWS_AS(is_proper(g, bogus), InvalidArgument);
  CHECK_THROWS_AS(cancel_dipole(g, bogus), InvalidArgument);
}

TEST_CASE("1-dipoles between singular residues are not proper") {
  const auto t = decode(testing::kSolidTorus);
  // The torus of the solid torus graph spans colors 0, 1, 3.
  const auto joined = join_by_dipole(t, 0, t, 0, 2);
  const Dipole d{0, t.order(), ColorSet{2}};
  REQUIRE(is_dipole(joined, d));
  CHECK_FALSE(is_proper(joined, d));
  const auto cancelled = cancel_dipole(joined, d);
  CHECK(boundary_profile(cancelled) != boundary_profile(joined));
  CHECK(boundary_profile(joined).size() == 2);
  CHECK(boundary_profile(cancelled).size() == 1);
  CHECK(boundary_profile(cancelled).components[0] == SurfaceType{true, 2});
}

TEST_CASE("1-dipoles next to an ordinary residue are proper") {
  const auto t = decode(testing::kSolidTorus);
  const auto joined = join_by_dipole(t, 1, ColoredGraph::order_two(), 0, 2);
  const Dipole d{1, t.order(), ColorSet{2}};
  REQUIRE(is_dipole(joined, d));
  CHECK(is_proper(joined, d));
  const auto cancelled = cancel_dipole(joined, d);
  CHECK(boundary_profile(cancelled) == boundary_profile(joined));
  CHECK(first_homology(cancelled) == first_homology(joined));
  CHECK(canonical_code(cancelled) == canonical_code(t));
}

TEST_CASE("two order-2 graphs joined by a proper 1-dipole are not contracted") {
  const auto g = join_by_dipole(ColoredGraph::order_two(), 0, ColoredGraph::order_two(), 0, 1);
  CHECK(g.order() == 4);
  CHECK_FALSE(is_contracted(g));
  CHECK(g_vector(g)[1] == 2);
}

TEST_CASE("contracted census graphs have no 3-dipoles") {
  CensusFilter f;
  f.orientability = Orientability::any;
  f.no_2_dipoles = false;
  for (const auto& r : enumerate(8, f, {1, nullptr}).records)
    for (const auto& d : find_dipoles(decode(r.code.text))) CHECK(d.h() != 3);
}

TEST_CASE("rho-pairs need a bipartite graph") {
  using M = ColoredGraph::Matching;
  const ColoredGraph k4({M{1, 0, 3, 2}, M{2, 3, 0, 1}, M{3, 2, 1, 0}, M{1, 0, 3, 2}});
  CHECK_THROWS_AS(find_rho_pairs(k4, 2), InvalidArgument);
  CHECK_THROWS_AS(is_rigid(k4), InvalidArgument);
  CHECK_THROWS_AS(find_rho_pairs(decode(testing::kSolidTorus), 1), InvalidArgument);
}

TEST_CASE("rigidity of the published graphs") {
  const auto g = decode(testing::kSolidTorus);
  bool good = false;
  for (const auto& p : find_rho_pairs(g, 3)) good = good || is_good_rho3(g, p);
  CHECK(good);
  CHECK_FALSE(is_rigid(g));
  for (const char* code : {testing::kTrefoilA, testing::kTrefoilB}) {
    const auto t = decode(code);
    CHECK(is_rigid(t));
    for (const auto& p : find_rho_pairs(t, 2)) CHECK_FALSE(is_good_rho2(t, p));
    for (const auto& p : find_rho_pairs(t, 3)) CHECK_FALSE(is_good_rho3(t, p));
  }
  for (const auto& row : table3_fixture()) CHECK_MESSAGE(is_rigid(decode(row.code)) == row.rigid, row.name);
}

TEST_CASE("rho-pairs are ordered and lie in common residues") {
  for (const auto& code : testing::published_codes()) {
    const auto g = decode(code);
    for (int shared : {2, 3}) {
      const auto pairs = find_rho_pairs(g, shared);
      for (std::size_t i = 1; i < pairs.size(); ++i) {
        const auto& a = pairs[i - 1];
        const auto& b = pairs[i];
        CHECK(std::tie(a.color, a.e, a.f) < std::tie(b.color, b.e, b.f));
      }
      for (const auto& p : pairs) {
        CHECK(p.e < p.f);
        CHECK(p.shared() == shared);
        CHECK_FALSE(p.shared_with.contains(p.color));
        if (shared != 3) continue;
        for (int missing = 0; missing < 4; ++missing) {
          if (missing == p.color) continue;
          int count = 0;
          const auto ids = residue_ids(g, ColorSet::hat(missing), count);
          CHECK(ids[p.e] == ids[p.f]);
        }
      }
    }
  }
}

TEST_CASE("rho2 switching is connected and undone by switching back") {
  int seen = 0;
  for (const auto& r : loose_census(8)) {
    const auto g = decode(r.code.text);
    if (!r.bipartite) continue;
    for (const auto& p : find_rho_pairs(g, 2)) {
      const auto parts = switch_pair(g, p);
      REQUIRE(parts.size() == 1);
      const auto& h = parts[0];
      ++seen;
      CHECK(h != g);
      // Only the two c-edges changed, and switching the new pair by the same
      // rule restores g.
      const auto side = sides(g);
      const int c = p.color;
      for (Vertex v = 0; v < g.order(); ++v)
        for (int k = 0; k < kColors; ++k)
          if (k != c) CHECK(h.neighbor(v, k) == g.neighbor(v, k));
      CHECK(switched(g, side, c, p.e, p.f) == h);
      // The old partner of e now sits on the other new edge.
      CHECK(switched(h, side, c, p.e, g.neighbor(p.e, c)) == g);
    }
  }
  CHECK(seen > 0);
}

TEST_CASE("rho3 switch splits a graph-level sum") {
  const auto t = decode(testing::kSolidTorus);
  const auto o = ColoredGraph::order_two();
  const auto g = graph_sum(t, 0, o, 0, 2);
  const Vertex a = std::min<Vertex>(0, g.neighbor(0, 2)), b = std::min<Vertex>(t.order(), g.neighbor(t.order(), 2));
  RhoPair pair;
  bool found = false;
  for (const auto& p : find_rho_pairs(g, 3))
    if (p.color == 2 && p.e == std::min(a, b) && p.f == std::max(a, b)) pair = p, found = true;
  REQUIRE(found);
  CHECK(rho3_index(g, pair) == 3);
  const auto parts = switch_pair(g, pair);
  REQUIRE(parts.size() == 2);
  CHECK(canonical_code(parts[0]) == canonical_code(t));
  CHECK(canonical_code(parts[1]) == canonical_code(o));
  const auto cls = classify_rho3_switch(g, pair);
  CHECK(cls.kind == Rho3Case::split_connected_sum);
  CHECK(cls.components_after == 2);
  CHECK(first_homology(g) == direct_sum(first_homology(parts[0]), first_homology(parts[1])));
}

TEST_CASE("rho3 classification is consistent with homology") {
  int split = 0, s2xs1 = 0;
  for (int order : {6, 8}) {
    for (const auto& r : loose_census(order)) {
      if (!r.bipartite) continue;
      const auto g = decode(r.code.text);
      for (const auto& p : find_rho_pairs(g, 3)) {
        const int idx = rho3_index(g, p);
        CHECK(idx >= 0);
        CHECK(idx <= 3);
        if (idx < 2) {
          CHECK_THROWS_AS(classify_rho3_switch(g, p), InvalidArgument);
          continue;
        }
        CHECK(is_good_rho3(g, p));
        const auto cls = classify_rho3_switch(g, p);
        CHECK(cls.index == idx);
        const auto parts = switch_pair(g, p);
        CHECK(static_cast<int>(parts.size()) == cls.components_after);
        if (r.boundary.closed()) CHECK(idx == 3);
        if (r.boundary.size() == 1) CHECK(idx >= 2);
        if (cls.kind == Rho3Case::split_connected_sum) {
          ++split;
          CHECK(first_homology(g) == direct_sum(first_homology(parts[0]), first_homology(parts[1])));
        } else if (cls.kind == Rho3Case::connected_s2xs1_sum) {
          ++s2xs1;
          CHECK(first_homology(g).rank == first_homology(parts[0]).rank + 1);
        }
        switch (cls.kind) {
          case Rho3Case::split_connected_sum:
          case Rho3Case::connected_s2xs1_sum: CHECK(idx == 3); break;
          default: CHECK(idx == 2);
        }
        if (cls.kind == Rho3Case::connected_more_boundary) CHECK(cls.boundary_after > cls.boundary_before);
        if (cls.kind == Rho3Case::connected_fewer_boundary) CHECK(cls.boundary_after < cls.boundary_before);
        if (cls.kind == Rho3Case::connected_same_boundary) CHECK(cls.boundary_after == cls.boundary_before);
      }
    }
  }
  CHECK(split > 0);
  CHECK(s2xs1 > 0);
}

TEST_CASE("rigid graphs have no 2-dipoles") {
  for (const auto& r : loose_census(8)) {
    if (!r.bipartite || !r.rigid) continue;
    const auto g = decode(r.code.text);
    for (const auto& d : find_dipoles(g)) CHECK(d.h() != 2);
  }
}

TEST_CASE("case names") {
  CHECK(to_string(Rho3Case::split_connected_sum) == "split-connected-sum");
  CHECK(to_string(Rho3Case::connected_s2xs1_sum) == "connected-S2xS1-sum");
  CHECK(to_string(Rho3Case::connected_more_boundary) == "connected-more-boundary");
}
