#include <doctest.h>

#include <random>

#include "gem/residues.hpp"
#include "oracles.hpp"
#include "support.hpp"

using namespace gem;

TEST_CASE("colored graph rejects broken matchings") {
  using M = ColoredGraph::Matching;
  CHECK_THROWS_AS(ColoredGraph({M{0, 1}, M{1, 0}, M{1, 0}, M{1, 0}}), InvalidArgument);  // loop at 0
  CHECK_THROWS_AS(ColoredGraph({M{1, 0, 3, 2}, M{2, 3, 1, 0}, M{1, 0, 3, 2}, M{1, 0, 3, 2}}), InvalidArgument);
  CHECK_THROWS_AS(ColoredGraph({M{1, 0}, M{1, 0}, M{1, 0}, M{1, 0, 3, 2}}), InvalidArgument);
  CHECK_THROWS_AS(ColoredGraph({M{}, M{}, M{}, M{}}), InvalidArgument);
  // Two disjoint order-2 graphs.
  const M d{1, 0, 3, 2};
  CHECK_THROWS_AS(ColoredGraph({d, d, d, d}), InvalidArgument);
  // Parallel edges are fine.
  CHECK_NOTHROW(ColoredGraph({M{1, 0}, M{1, 0}, M{1, 0}, M{1, 0}}));
}

TEST_CASE("color sets") {
  CHECK(ColorSet::hat(2) == ColorSet({0, 1, 3}));
  CHECK(ColorSet::hat(2).complement() == ColorSet({2}));
  CHECK(ColorSet::all().size() == 4);
  CHECK_THROWS_AS(ColorSet({4}), InvalidArgument);
  CHECK_THROWS_AS(Color(-1), InvalidArgument);
}

TEST_CASE("relabeling validates its arguments") {
  const auto g = decode(testing::kSolidTorus);
  std::vector<Vertex> bad{0, 0, 1, 2, 3, 4};
  CHECK_THROWS_AS(g.relabeled(bad, {0, 1, 2, 3}), InvalidArgument);
  std::vector<Vertex> id{0, 1, 2, 3, 4, 5};
  CHECK_THROWS_AS(g.relabeled(id, {0, 1, 1, 3}), InvalidArgument);
  CHECK(g.relabeled(id, {0, 1, 2, 3}) == g);
}

TEST_CASE("residues of the order-2 graph") {
  const auto g = ColoredGraph::order_two();
  const auto r = residues(g, {0, 1});
  REQUIRE(r.size() == 1);
  CHECK(r[0].vertices == std::vector<Vertex>{0, 1});
  CHECK_THROWS_AS(residues(g, ColorSet{}), InvalidArgument);
  for (int c = 0; c < 4; ++c) {
    const auto three = residues(g, ColorSet::hat(c));
    REQUIRE(three.size() == 1);
    CHECK(surface_type(g, three[0]).is_sphere());
  }
  CHECK(boundary_profile(g).closed());
  CHECK(is_bipartite(g));
  CHECK(g_vector(g) == GVector{1, 1, 1, 1});
}

TEST_CASE("residues of the solid torus graph") {
  const auto g = decode(testing::kSolidTorus);
  CHECK(residues(g, {0, 1}).size() == 1);
  CHECK(residues(g, {0, 1})[0].vertices.size() == 6);
  CHECK(residues(g, {0, 2}).size() == 2);

  const auto r013 = residues(g, {0, 1, 3});
  REQUIRE(r013.size() == 1);
  CHECK(surface_type(g, r013[0]) == SurfaceType{true, 1});
  const auto r123 = residues(g, {1, 2, 3});
  REQUIRE(r123.size() == 1);
  CHECK(surface_type(g, r123[0]).is_sphere());
  CHECK_THROWS_AS(surface_type(g, residues(g, {0, 1})[0]), InvalidArgument);

  const auto b = boundary_profile(g);
  REQUIRE(b.size() == 1);
  CHECK(b.components[0].is_torus());
  CHECK(g_vector(g) == GVector{1, 1, 1, 1});
  CHECK(is_contracted(g));
  CHECK(boundary_profile(decode(testing::kHopf)).size() == 2);
  CHECK(boundary_profile(decode(testing::kHopf)).toric());
}

TEST_CASE("a graph with a triangle is not bipartite") {
  // K4 plus a parallel edge; it has triangles.
  using M = ColoredGraph::Matching;
  const ColoredGraph g({M{1, 0, 3, 2}, M{2, 3, 0, 1}, M{3, 2, 1, 0}, M{1, 0, 3, 2}});
  CHECK_FALSE(is_bipartite(g));
}

TEST_CASE("surface types") {
  CHECK(SurfaceType::from_euler(2, true).is_sphere());
  CHECK(SurfaceType::from_euler(0, false) == SurfaceType{false, 2});  // Klein bottle
  CHECK(SurfaceType::from_euler(1, false) == SurfaceType{false, 1});
  CHECK_THROWS_AS(SurfaceType::from_euler(1, true), InvalidArgument);
  CHECK_THROWS_AS(SurfaceType::from_euler(2, false), InvalidArgument);
  CHECK(SurfaceType{true, 3} < SurfaceType{false, 1});
  CHECK(to_string(SurfaceType{false, 1}) == "projective plane");
}

namespace {

void compare_with_oracle(const ColoredGraph& g) {
  // Partition property of 2-residues.
  for (int a = 0; a < 4; ++a)
    for (int b = a + 1; b < 4; ++b) {
      std::size_t total = 0;
      for (const auto& r : residues(g, {a, b})) {
        CHECK(r.vertices.size() % 2 == 0);
        total += r.vertices.size();
      }
      CHECK(total == static_cast<std::size_t>(g.order()));
    }
  std::vector<SurfaceType> expected;
  for (int c = 0; c < 4; ++c) {
    const auto surfaces = oracle::residue_surfaces(g, c);
    const auto got = residues(g, ColorSet::hat(c));
    REQUIRE(got.size() == surfaces.size());
    CHECK(g_vector(g)[c] == static_cast<int>(surfaces.size()));
    std::vector<SurfaceType> a, b;
    for (const auto& r : got) a.push_back(surface_type(g, r));
    for (const auto& s : surfaces) {
      CHECK(s.chi <= 2);
      if (s.orientable) CHECK(s.chi % 2 == 0);
      b.push_back(SurfaceType::from_euler(s.chi, s.orientable));
      if (!s.sphere()) expected.push_back(b.back());
    }
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    CHECK(a == b);
  }
  std::sort(expected.begin(), expected.end());
  CHECK(boundary_profile(g).components == expected);
}

}  // namespace

TEST_CASE("residue surfaces agree with the edge-list oracle") {
  for (const auto& code : testing::published_codes()) compare_with_oracle(decode(code));
  std::mt19937 rng(7);
  for (const auto& code : testing::published_codes()) compare_with_oracle(oracle::scramble(decode(code), rng));
  // Every connected graph on 4 vertices with color 0 fixed, bipartite or not.
  const auto ms = oracle::all_matchings(4);
  for (const auto& a : ms)
    for (const auto& b : ms)
      for (const auto& c : ms) {
        const std::array<ColoredGraph::Matching, 4> m{ms[0], a, b, c};
        if (oracle::connected(m)) compare_with_oracle(ColoredGraph(m));
      }
}

TEST_CASE("invariants survive relabeling and color permutation") {
  std::mt19937 rng(11);
  for (const auto& code : testing::published_codes()) {
    const auto g = decode(code);
    auto gv = g_vector(g);
    std::sort(gv.begin(), gv.end());
    for (int i = 0; i < 10; ++i) {
      const auto h = oracle::scramble(g, rng);
      auto hv = g_vector(h);
      std::sort(hv.begin(), hv.end());
      CHECK(hv == gv);
      CHECK(boundary_profile(h) == boundary_profile(g));
      CHECK(is_bipartite(h) == is_bipartite(g));
      CHECK(is_contracted(h) == is_contracted(g));
    }
  }
}

TEST_CASE("every published graph is bipartite and contracted") {
  for (const auto& row : table3_fixture()) {
    const auto g = decode(row.code);
    CHECK_MESSAGE(is_bipartite(g), row.name);
    CHECK_MESSAGE(is_contracted(g), row.name);
    CHECK_MESSAGE(boundary_profile(g).size() == row.tori, row.name);
    CHECK_MESSAGE(boundary_profile(g).toric(), row.name);
  }
}
