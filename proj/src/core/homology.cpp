#include "gem/homology.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <utility>

namespace gem {

std::string to_string(const AbelianGroup& g) {
  if (g.trivial()) return "0";
  std::string out;
  if (g.rank == 1) out = "Z";
  else if (g.rank > 1) out = "Z^" + std::to_string(g.rank);
  for (auto d : g.torsion) {
    if (!out.empty()) out += " + ";
    out += "Z/" + std::to_string(d);
  }
  return out;
}

AbelianGroup normalize_group(int rank, std::vector<std::int64_t> orders) {
  if (rank < 0) throw InvalidArgument("negative rank");
  // Split into prime powers, then rebuild the divisibility chain.
  std::map<std::int64_t, std::vector<std::int64_t>> powers;
  for (auto d : orders) {
    if (d <= 0) throw InvalidArgument("torsion orders must be positive");
    for (std::int64_t q = 2; q * q <= d; ++q) {
      if (d % q) continue;
      std::int64_t pk = 1;
      while (d % q == 0) {
        d /= q;
        pk *= q;
      }
      powers[q].push_back(pk);
    }
    if (d > 1) powers[d].push_back(d);
  }
  std::size_t len = 0;
  for (auto& [q, v] : powers) {
    std::sort(v.begin(), v.end(), std::greater<>());
    len = std::max(len, v.size());
  }
  std::vector<std::int64_t> chain(len, 1);
  for (auto& [q, v] : powers)
    for (std::size_t i = 0; i < v.size(); ++i) chain[len - 1 - i] *= v[i];
  return {rank, chain};
}

AbelianGroup direct_sum(const AbelianGroup& a, const AbelianGroup& b) {
  auto t = a.torsion;
  t.insert(t.end(), b.torsion.begin(), b.torsion.end());
  return normalize_group(a.rank + b.rank, std::move(t));
}

std::vector<BigInt> smith_invariants(IntMatrix m) {
  using boost::multiprecision::abs;
  const std::size_t rows = m.size();
  const std::size_t cols = rows ? m[0].size() : 0;
  std::vector<BigInt> diag;

  for (std::size_t t = 0; t < std::min(rows, cols); ++t) {
    for (;;) {
      // Pivot: smallest nonzero absolute value in the trailing block.
      std::size_t pr = rows, pc = cols;
      for (std::size_t i = t; i < rows; ++i)
        for (std::size_t j = t; j < cols; ++j)
          if (m[i][j] != 0 && (pr == rows || abs(m[i][j]) < abs(m[pr][pc]))) {
            pr = i;
            pc = j;
          }
      if (pr == rows) {
        std::sort(diag.begin(), diag.end());
        return diag;
      }
      std::swap(m[t], m[pr]);
      for (auto& row : m) std::swap(row[t], row[pc]);

      bool clean = true;
      const BigInt& p = m[t][t];
      for (std::size_t i = t + 1; i < rows; ++i) {
        if (m[i][t] == 0) continue;
        const BigInt q = m[i][t] / p;
        for (std::size_t j = t; j < cols; ++j) m[i][j] -= q * m[t][j];
        if (m[i][t] != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        if (m[t][j] == 0) continue;
        const BigInt q = m[t][j] / p;
        for (std::size_t i = t; i < rows; ++i) m[i][j] -= q * m[i][t];
        if (m[t][j] != 0) clean = false;
      }
      if (!clean) continue;

      // Divisibility: fold an offending row into the pivot row and retry.
      std::size_t bad = rows;
      for (std::size_t i = t + 1; i < rows && bad == rows; ++i)
        for (std::size_t j = t + 1; j < cols; ++j)
          if (m[i][j] % m[t][t] != 0) {
            bad = i;
            break;
          }
      if (bad != rows) {
        for (std::size_t j = t; j < cols; ++j) m[t][j] += m[bad][j];
        continue;
      }
      diag.push_back(abs(m[t][t]));
      break;
    }
  }
  std::sort(diag.begin(), diag.end());
  return diag;
}

IntMatrix cell_boundary_matrix(const ColoredGraph& g) {
  const int n = g.order();
  // Column index of edge (v, c), v the smaller endpoint.
  std::vector<int> column(static_cast<std::size_t>(n) * kColors, -1);
  int edges = 0;
  for (Vertex v = 0; v < n; ++v)
    for (int c = 0; c < kColors; ++c)
      if (v < g.neighbor(v, c)) column[static_cast<std::size_t>(v) * kColors + c] = edges++;

  auto edge_of = [&](Vertex v, int c) {
    const Vertex w = g.neighbor(v, c);
    const Vertex lo = std::min(v, w);
    return column[static_cast<std::size_t>(lo) * kColors + c];
  };

  IntMatrix rows;
  std::vector<char> seen(static_cast<std::size_t>(n));
  for (int a = 0; a < kColors; ++a) {
    for (int b = a + 1; b < kColors; ++b) {
      std::fill(seen.begin(), seen.end(), 0);
      for (Vertex s = 0; s < n; ++s) {
        if (seen[static_cast<std::size_t>(s)]) continue;
        std::vector<BigInt> row(static_cast<std::size_t>(edges));
        Vertex v = s;
        int color = a;
        do {
          seen[static_cast<std::size_t>(v)] = 1;
          const Vertex w = g.neighbor(v, color);
          row[static_cast<std::size_t>(edge_of(v, color))] += (v < w) ? 1 : -1;
          v = w;
          color = (color == a) ? b : a;
        } while (!(v == s && color == a));
        rows.push_back(std::move(row));
      }
    }
  }
  return rows;
}

AbelianGroup first_homology(const ColoredGraph& g) {
  const auto inv = smith_invariants(cell_boundary_matrix(g));
  const int vertices = g.order();
  const int edges = 2 * vertices;
  AbelianGroup h;
  h.rank = edges - vertices + 1 - static_cast<int>(inv.size());
  for (const auto& d : inv) {
    if (d == 1) continue;
    if (d > std::numeric_limits<std::int64_t>::max()) throw std::overflow_error("torsion coefficient exceeds 64 bits");
    h.torsion.push_back(static_cast<std::int64_t>(d));
  }
  return h;
}

}  // namespace gem
