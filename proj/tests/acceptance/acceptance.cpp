// One PASS/FAIL line per acceptance criterion. Counts are compared with the
// published numbers; per-graph facts are rechecked with the test oracles.
//
//   acceptance [--extended]
//
// --extended (or GEM_ACCEPTANCE_EXTENDED=1) adds the order 14 and 16 rows of
// the toric table and the order-12 non-bipartite census.

#include <CLI11.hpp>

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>

#include "gem/catalog.hpp"
#include "gem/census.hpp"
#include "gem/homology.hpp"
#include "gem/moves.hpp"
#include "oracles.hpp"
#include "properties.hpp"

using namespace gem;

namespace {

struct Check {
  bool ok = true;
  std::ostringstream detail;
  std::vector<std::string> problems;

  void expect(bool cond, const std::string& what) {
    if (!cond) {
      ok = false;
      problems.push_back(what);
    }
  }
  std::string text() const {
    std::string out = detail.str();
    for (const auto& p : problems) out += " | " + p;
    return out;
  }
};

template <class T>
std::string join(const std::vector<T>& xs) {
  std::ostringstream out;
  for (std::size_t i = 0; i < xs.size(); ++i) out << (i ? "," : "") << xs[i];
  return out.str();
}

CensusFilter toric(BoundaryClass cls, bool rigid) {
  CensusFilter f;
  f.boundary_class = cls;
  f.rigid_only = rigid;
  return f;
}

// Recomputes the filter decision of every record with the oracle and checks
// that no two records are isomorphic.
void audit(Check& c, const std::vector<CatalogRecord>& records, const CensusFilter& f, const std::string& label) {
  std::set<std::vector<int>> keys;
  for (const auto& r : records) {
    const auto g = decode(r.code.text);
    if (!oracle::accepts(oracle::facts(g), f)) {
      c.expect(false, label + ": oracle rejects " + r.code.text);
      return;
    }
    if (!keys.insert(oracle::invariant_key(g)).second) {
      c.expect(false, label + ": duplicate class " + r.code.text);
      return;
    }
  }
}

std::size_t counted(Check& c, int order, const CensusFilter& f, const std::string& label, bool check_records) {
  const auto records = enumerate(order, f).records;
  if (check_records) audit(c, records, f, label);
  return records.size();
}

Check criterion1() {
  Check c;
  std::vector<std::size_t> got;
  for (int n = 2; n <= 12; n += 2) got.push_back(build_surface_set(n).members.size());
  c.expect(got == std::vector<std::size_t>{0, 1, 3, 14, 71, 553}, "got " + join(got));
  c.detail << "|S| = " << join(got);
  return c;
}

Check criterion2() {
  Check c;
  std::vector<std::size_t> got;
  for (int n = 2; n <= 12; n += 2) got.push_back(counted(c, n, CensusFilter{}, "C" + std::to_string(n), true));
  c.expect(got == std::vector<std::size_t>{0, 0, 2, 4, 57, 902}, "count mismatch");
  c.detail << "C = " << join(got) << ", every record rechecked by the oracle";
  return c;
}

Check criterion3(bool extended) {
  Check c;
  CensusFilter f;
  f.orientability = Orientability::non_bipartite;
  std::vector<std::size_t> got;
  for (int n = 2; n <= 10; n += 2) got.push_back(counted(c, n, f, "C~" + std::to_string(n), n <= 8));
  c.expect(got == std::vector<std::size_t>{0, 1, 6, 90, 3967}, "count mismatch");
  c.detail << "C~ = " << join(got);
  if (extended) {
    const auto n12 = enumerate(12, f).records.size();
    c.expect(n12 == 395877, "C~12 = " + std::to_string(n12) + ", expected 395877");
    c.detail << ", C~12 = " << n12;
  } else {
    c.detail << " (C~12 needs --extended)";
  }
  return c;
}

Check criterion4(bool extended) {
  Check c;
  struct Row {
    const char* name;
    BoundaryClass cls;
    bool rigid;
    std::vector<std::size_t> expected;  // orders 6, 8, 10, 12
  };
  const std::vector<Row> rows{{"C_t", BoundaryClass::toric, false, {2, 4, 20, 174}},
                              {"C_tc", BoundaryClass::toric_connected, false, {1, 0, 0, 26}},
                              {"C_rt", BoundaryClass::toric, true, {1, 4, 8, 93}},
                              {"C_rtc", BoundaryClass::toric_connected, true, {0, 0, 0, 1}}};
  for (const auto& row : rows) {
    std::vector<std::size_t> got;
    for (int n = 6; n <= 12; n += 2) got.push_back(counted(c, n, toric(row.cls, row.rigid), row.name, true));
    c.expect(got == row.expected, std::string(row.name) + " = " + join(got));
    c.detail << row.name << " = " << join(got) << "; ";
  }
  if (!extended) {
    c.detail << "(orders 14 and 16 need --extended)";
    return c;
  }
  struct Ext {
    const char* name;
    int order;
    BoundaryClass cls;
    bool rigid;
    std::size_t expected;
  };
  const std::vector<Ext> ext{{"C_t", 14, BoundaryClass::toric, false, 1979},
                             {"C_tc", 14, BoundaryClass::toric_connected, false, 13},
                             {"C_rt", 14, BoundaryClass::toric, true, 1391},
                             {"C_rtc", 14, BoundaryClass::toric_connected, true, 0},
                             {"C_tc", 16, BoundaryClass::toric_connected, false, 84},
                             {"C_rtc", 16, BoundaryClass::toric_connected, true, 2}};
  for (const auto& e : ext) {
    const auto got = enumerate(e.order, toric(e.cls, e.rigid)).records.size();
    const std::string item = std::string(e.name) + "^" + std::to_string(e.order);
    c.expect(got == e.expected, item + " = " + std::to_string(got) + ", expected " + std::to_string(e.expected));
    c.detail << item << " = " << got << "; ";
  }
  return c;
}

Check criterion5() {
  Check c;
  int rows = 0;
  for (const auto& row : table3_fixture()) {
    if (row.name.rfind("16", 0) == 0) continue;  // the trefoil graphs belong to criterion 6
    ++rows;
    ColoredGraph g = ColoredGraph::order_two();
    try {
      g = decode(row.code);
    } catch (const std::exception& e) {
      c.expect(false, row.name + " does not parse: " + e.what());
      continue;
    }
    const auto x = oracle::facts(g);
    int tori = 0;
    for (int col = 0; col < 4; ++col)
      for (const auto& s : oracle::residue_surfaces(g, col)) tori += s.orientable && s.chi == 0;
    c.expect(tori == row.tori && x.toric && x.singular == row.tori, row.name + " boundary");
    c.expect(x.bipartite, row.name + " not bipartite");
    c.expect(x.contracted, row.name + " not contracted");
    c.expect(is_rigid(g) == (row.name != "6^1_1"), row.name + " rigidity");
    const auto h = first_homology(g);
    const auto shape = oracle::homology_shape(g);
    if (row.name == "12^1_1") {
      c.expect(to_string(h) == "Z + Z/2" && shape.rank == 1 && shape.p_torsion == std::map<int, int>{{2, 1}},
               "12^1_1 H1 = " + to_string(h));
    } else if (row.name != "12^2_1") {
      c.expect(h == normalize_group(row.tori, {}) && shape.rank == row.tori && shape.p_torsion.empty(),
               row.name + " H1 = " + to_string(h));
    } else {
      c.detail << "12^2_1 (no link) has H1 = " << to_string(h) << "; ";
    }
  }
  c.expect(rows == 24, "expected 24 rows, found " + std::to_string(rows));
  c.detail << rows << " rows checked";
  return c;
}

Check criterion6() {
  Check c;
  CensusFilter f = toric(BoundaryClass::toric_connected, true);
  const auto records = enumerate(16, f).records;
  c.expect(records.size() == 2, "found " + std::to_string(records.size()) + " graphs");
  const ColoredGraph a = decode("DABCHEFGHGFEDCBAGCEABHDF"), b = decode("DABCHEFGHGFEDCBAGHEACBDF");
  int matched_a = 0, matched_b = 0;
  for (const auto& r : records) {
    const auto g = decode(r.code.text);
    matched_a += oracle::isomorphic(g, a);
    matched_b += oracle::isomorphic(g, b);
    const auto shape = oracle::homology_shape(g);
    c.expect(to_string(first_homology(g)) == "Z" && shape.rank == 1 && shape.p_torsion.empty(),
             r.code.text + " H1 is not Z");
  }
  c.expect(matched_a == 1 && matched_b == 1, "classes do not match the published graphs");
    for (const auto& r : records) c.detail << r.code.text << " ";
  c.detail << "match the two published 16-vertex graphs, H1 = Z";
  return c;
}

Check criterion7() {
  Check c;
  const auto seeds = props::seed_graphs(10);
  const auto a = props::proper_dipoles(seeds, 1000, 101);
  const auto r2 = props::rho2_switching(seeds, 1000, 202);
  c.expect(a.ok(1000), "(a) dipoles: " + a.summary());
  c.expect(r2.good.ok(1000), "(a) good rho2: " + r2.good.summary());
  c.expect(r2.not_good.ok(1), "(b) rho2 not good: " + r2.not_good.summary());

  std::vector<ColoredGraph> graphs;
  for (const auto& row : table3_fixture()) graphs.push_back(decode(row.code));
  CensusFilter mixed;
  mixed.orientability = Orientability::non_bipartite;
  const auto extra = enumerate(8, mixed).records;
  for (std::size_t i = 0; i < extra.size(); i += 9) graphs.push_back(decode(extra[i].code.text));
  const auto inv = props::canonical_invariance(graphs, 1000, 303);
  c.expect(inv.ok(1000L * static_cast<long>(graphs.size())), "(c) " + inv.summary());

  long exhaustive = 0;
  for (int n = 2; n <= 8; n += 2) {
    const auto d = props::exhaustive_isomorphism(n);
    c.expect(d.ok(1), "(d) order " + std::to_string(n) + ": " + d.summary());
    exhaustive += d.instances;
  }
  c.detail << "(a) " << a.instances << " dipole and " << r2.good.instances
           << " good rho2 instances, (b) " << r2.not_good.instances << " not-good rho2 instances, (c) "
           << inv.instances << " relabelings of " << graphs.size() << " graphs, (d) " << exhaustive
           << " labeled graphs of order <= 8";
  return c;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"acceptance checks"};
  bool extended = false;
  app.add_flag("--extended", extended, "include the order 14/16 and order-12 non-bipartite runs");
  CLI11_PARSE(app, argc, argv);
  if (const char* env = std::getenv("GEM_ACCEPTANCE_EXTENDED"); env && std::string(env) == "1") extended = true;

  int failures = 0;
  bool ok5 = false, ok6 = false;
  auto run = [&](int id, const std::function<Check()>& fn) {
    const auto start = std::chrono::steady_clock::now();
    Check c;
    try {
      c = fn();
    } catch (const std::exception& e) {
      c.expect(false, std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (!c.ok) ++failures;
    if (id == 5) ok5 = c.ok;
    if (id == 6) ok6 = c.ok;
    std::printf("%s criterion %d: %s [%.1f s]\n", c.ok ? "PASS" : "FAIL", id, c.text().c_str(), secs);
    std::fflush(stdout);
  };
  run(1, criterion1);
  run(2, criterion2);
  run(3, [&] { return criterion3(extended); });
  run(4, [&] { return criterion4(extended); });
  run(5, criterion5);
  run(6, criterion6);
  run(7, criterion7);
  run(8, [&] {
    Check c;
    c.expect(ok5 && ok6, "criteria 5 or 6 failed");
    c.detail << "manifold identifications are outside the artifact; covered through criteria 5 and 6";
    return c;
  });
  return failures == 0 ? 0 : 1;
}
