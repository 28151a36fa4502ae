#include "gem/census.hpp"

#include <algorithm>
#include <cstdlib>
#include <mutex>
#include <thread>
#include <unordered_set>

#include "gem/moves.hpp"

namespace gem {

std::string to_string(Orientability o) {
  switch (o) {
    case Orientability::any: return "any";
    case Orientability::bipartite: return "bipartite";
    case Orientability::non_bipartite: return "non-bipartite";
  }
  return "?";
}

std::string to_string(BoundaryClass b) {
  switch (b) {
    case BoundaryClass::any: return "any";
    case BoundaryClass::toric: return "toric";
    case BoundaryClass::toric_connected: return "toric-connected";
  }
  return "?";
}

void CensusFilter::validate() const {
  if (rigid_only && orientability != Orientability::bipartite)
    throw InvalidArgument("rigid filter requires bipartite graphs");
  if (boundary_class != BoundaryClass::any && !require_boundary)
    throw InvalidArgument("toric boundary classes require a nonempty boundary");
}

bool CensusFilter::accepts(const CatalogRecord& r, bool has_2_dipole) const {
  if (orientability == Orientability::bipartite && !r.bipartite) return false;
  if (orientability == Orientability::non_bipartite && r.bipartite) return false;
  if (require_boundary && r.boundary.closed()) return false;
  if (boundary_class == BoundaryClass::toric && !r.boundary.toric()) return false;
  if (boundary_class == BoundaryClass::toric_connected && !(r.boundary.toric() && r.boundary.size() == 1))
    return false;
  if (contracted_only && !r.contracted) return false;
  if (no_2_dipoles && has_2_dipole) return false;
  if (rigid_only && !r.rigid) return false;
  return true;
}

std::vector<CyclePartition> generate_two_colored(int order) {
  if (order < 2 || order % 2) throw InvalidArgument("order must be even and positive");
  const int p = order / 2;
  std::vector<CyclePartition> out;
  std::vector<int> parts;
  // Partitions of p into non-increasing parts; part k becomes a 2k-cycle.
  auto rec = [&](auto&& self, int left, int max_part) -> void {
    if (left == 0) {
      CyclePartition cp;
      cp.matchings[0].resize(static_cast<std::size_t>(order));
      cp.matchings[1].resize(static_cast<std::size_t>(order));
      int off = 0;
      for (int k : parts) {
        const int len = 2 * k;
        cp.cycle_lengths.push_back(len);
        for (int j = 0; j < k; ++j) {
          const Vertex a = off + 2 * j, b = a + 1, c = off + (2 * j + 2) % len;
          cp.matchings[0][a] = b;
          cp.matchings[0][b] = a;
          cp.matchings[1][b] = c;
          cp.matchings[1][c] = b;
        }
        off += len;
      }
      out.push_back(std::move(cp));
      return;
    }
    for (int k = std::min(left, max_part); k >= 1; --k) {
      parts.push_back(k);
      self(self, left - k, k);
      parts.pop_back();
    }
  };
  rec(rec, p, p);
  return out;
}

namespace {

constexpr int kMax = kMaxCensusOrder;
constexpr std::uint8_t kNone = 0xFF;
using Row = std::array<std::uint8_t, kMax>;

// Cycles of the union of two matchings. Returns the count; reps[k] is a vertex
// of cycle k.
int cycles_of(int n, const Row& a, const Row& b, Row& id, Row& reps) {
  std::fill(id.begin(), id.begin() + n, kNone);
  int k = 0;
  for (int v = 0; v < n; ++v) {
    if (id[v] != kNone) continue;
    reps[k] = static_cast<std::uint8_t>(v);
    int x = v;
    do {
      id[x] = static_cast<std::uint8_t>(k);
      const int y = a[x];
      id[y] = static_cast<std::uint8_t>(k);
      x = b[y];
    } while (x != v);
    ++k;
  }
  return k;
}

// Three-colored graph on n vertices, possibly disconnected.
struct Tri {
  int n = 0;
  std::array<Row, 3> m{};
};

struct TriInfo {
  int comps = 0;
  Row comp{};
  Row side{};
  bool bipartite = true;
  std::vector<SurfaceType> surfaces;  // per component
  int singular = 0;
};

TriInfo analyze(const Tri& t) {
  TriInfo info;
  const int n = t.n;
  std::fill(info.comp.begin(), info.comp.begin() + n, kNone);
  std::array<int, kMax> vcount{};
  std::array<bool, kMax> orient{};
  std::array<std::uint8_t, kMax> queue{};
  for (int s = 0; s < n; ++s) {
    if (info.comp[s] != kNone) continue;
    const int k = info.comps++;
    orient[k] = true;
    int head = 0, tail = 0;
    queue[tail++] = static_cast<std::uint8_t>(s);
    info.comp[s] = static_cast<std::uint8_t>(k);
    info.side[s] = 0;
    while (head < tail) {
      const int v = queue[head++];
      ++vcount[k];
      for (int c = 0; c < 3; ++c) {
        const int w = t.m[c][v];
        if (info.comp[w] == kNone) {
          info.comp[w] = static_cast<std::uint8_t>(k);
          info.side[w] = info.side[v] ^ 1;
          queue[tail++] = static_cast<std::uint8_t>(w);
        } else if (info.side[w] == info.side[v]) {
          orient[k] = false;
        }
      }
    }
  }
  std::array<int, kMax> f{};
  Row id{}, reps{};
  for (int a = 0; a < 3; ++a)
    for (int b = a + 1; b < 3; ++b) {
      const int cnt = cycles_of(n, t.m[a], t.m[b], id, reps);
      for (int k = 0; k < cnt; ++k) ++f[info.comp[reps[k]]];
    }
  for (int k = 0; k < info.comps; ++k) {
    const SurfaceType s = SurfaceType::from_euler(f[k] - vcount[k] / 2, orient[k]);
    info.surfaces.push_back(s);
    info.bipartite = info.bipartite && orient[k];
    if (!s.is_sphere()) ++info.singular;
  }
  return info;
}

constexpr int kPerms3[6][3] = {{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};

// Isomorphism key of a three-colored graph: per color order, the sorted list of
// per-component maximal breadth-first codes; the key is the maximum over the
// color orders.
std::string tri_key(const Tri& t, const TriInfo& info) {
  const int n = t.n;
  std::string best;
  std::vector<std::string> parts(static_cast<std::size_t>(info.comps));
  std::array<int, kMax> label{};
  std::array<std::uint8_t, kMax> order{};
  std::string cand;
  for (const auto& s : kPerms3) {
    for (auto& p : parts) p.clear();
    for (int r = 0; r < n; ++r) {
      std::fill(label.begin(), label.begin() + n, -1);
      int next = 0;
      label[r] = next;
      order[next++] = static_cast<std::uint8_t>(r);
      for (int i = 0; i < next; ++i)
        for (int k = 0; k < 3; ++k) {
          const int w = t.m[s[k]][order[i]];
          if (label[w] < 0) {
            label[w] = next;
            order[next++] = static_cast<std::uint8_t>(w);
          }
        }
      cand.clear();
      for (int i = 0; i < next; ++i)
        for (int k = 0; k < 3; ++k) cand.push_back(static_cast<char>('0' + label[t.m[s[k]][order[i]]]));
      auto& slot = parts[info.comp[r]];
      if (cand > slot) slot = cand;
    }
    std::vector<std::string> sorted = parts;
    std::sort(sorted.begin(), sorted.end());
    std::string key;
    for (const auto& p : sorted) {
      key += p;
      key.push_back('|');
    }
    if (key > best) best = std::move(key);
  }
  return best;
}

// Calls leaf() for every perfect matching m on 0..n-1 with ok(u, w) true for
// every pair. Vertices are paired in increasing order of the smaller one. If
// side is given, only pairs with different sides are tried. Returns false if
// leaf() asked to stop.
template <class Ok, class Leaf>
bool for_each_matching(int n, Row& m, const Row* side, Ok&& ok, Leaf&& leaf) {
  auto rec = [&](auto&& self, int from) -> bool {
    while (from < n && m[from] != kNone) ++from;
    if (from == n) return leaf();
    const int u = from;
    for (int w = u + 1; w < n; ++w) {
      if (m[w] != kNone) continue;
      if (side && (*side)[u] == (*side)[w]) continue;
      if (!ok(u, w)) continue;
      m[u] = static_cast<std::uint8_t>(w);
      m[w] = static_cast<std::uint8_t>(u);
      const bool go = self(self, u + 1);
      m[u] = m[w] = kNone;
      if (!go) return false;
    }
    return true;
  };
  std::fill(m.begin(), m.begin() + n, kNone);
  return rec(rec, 0);
}

// Runs body(side) once per relative orientation of the components, the first
// component kept fixed. Stops early if body returns false.
template <class Body>
bool for_each_flip(int n, int comps, const Row& comp, const Row& side, Body&& body) {
  Row eff{};
  const std::uint32_t patterns = 1u << (comps - 1);
  for (std::uint32_t f = 0; f < patterns; ++f) {
    for (int v = 0; v < n; ++v) {
      const int k = comp[v];
      const std::uint8_t flip = k == 0 ? 0 : static_cast<std::uint8_t>((f >> (k - 1)) & 1u);
      eff[v] = side[v] ^ flip;
    }
    if (!body(eff)) return false;
  }
  return true;
}

struct BaseSelector {
  bool bipartite_only = false;
  bool need_boundary = true;
  bool contracted = true;
  BoundaryClass boundary = BoundaryClass::any;

  bool operator()(const TriInfo& info) const {
    if (bipartite_only && !info.bipartite) return false;
    if (info.singular == 0) return !need_boundary && (!contracted || info.comps == 1);
    if (boundary == BoundaryClass::toric) {
      for (const auto& s : info.surfaces)
        if (!s.is_sphere() && !s.is_torus()) return false;
    } else if (boundary == BoundaryClass::toric_connected) {
      if (info.singular != 1) return false;
      for (const auto& s : info.surfaces)
        if (!s.is_sphere() && !s.is_torus()) return false;
    }
    if (contracted && info.singular != info.comps) return false;
    return true;
  }
};

struct Base {
  Tri tri;
  TriInfo info;
};

void check_cancel(const std::atomic<bool>* cancel) {
  if (cancel && cancel->load(std::memory_order_relaxed)) throw Cancelled();
}

// Adds color 2 to every two-colored cycle partition, keeps the graphs chosen
// by `select`, one per isomorphism class.
std::vector<Base> build_bases(int n, const BaseSelector& select, const std::atomic<bool>* cancel) {
  std::unordered_set<std::string> seen;
  std::vector<std::pair<std::string, Base>> found;
  for (const auto& cp : generate_two_colored(n)) {
    Tri t;
    t.n = n;
    Row comp{}, side{};
    int k = 0, off = 0;
    for (int len : cp.cycle_lengths) {
      for (int i = 0; i < len; ++i) {
        comp[off + i] = static_cast<std::uint8_t>(k);
        side[off + i] = static_cast<std::uint8_t>(i & 1);
      }
      off += len;
      ++k;
    }
    for (int v = 0; v < n; ++v) {
      t.m[0][v] = static_cast<std::uint8_t>(cp.matchings[0][v]);
      t.m[1][v] = static_cast<std::uint8_t>(cp.matchings[1][v]);
    }
    std::uint64_t ticks = 0;
    auto leaf = [&]() {
      if ((++ticks & 0xFFFF) == 0) check_cancel(cancel);
      TriInfo info = analyze(t);
      if (!select(info)) return true;
      std::string key = tri_key(t, info);
      if (seen.insert(key).second) found.push_back({std::move(key), Base{t, std::move(info)}});
      return true;
    };
    auto any = [](int, int) { return true; };
    if (select.bipartite_only)
      for_each_flip(n, k, comp, side, [&](const Row& eff) { return for_each_matching(n, t.m[2], &eff, any, leaf); });
    else
      for_each_matching(n, t.m[2], nullptr, any, leaf);
  }
  std::sort(found.begin(), found.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  std::vector<Base> out;
  out.reserve(found.size());
  for (auto& f : found) out.push_back(std::move(f.second));
  return out;
}

std::array<ColoredGraph::Matching, kColors> to_matchings(int n, const std::array<Row, 3>& m, const Row& m3) {
  std::array<ColoredGraph::Matching, kColors> out;
  for (int c = 0; c < kColors; ++c) {
    out[c].resize(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) out[c][v] = c < 3 ? m[c][v] : m3[v];
  }
  return out;
}

// Extends one base by every admissible color-3 matching and collects the
// canonical codes of the survivors.
class Extender {
public:
  Extender(const Base& b, const CensusFilter& f, const std::atomic<bool>* cancel)
      : b_(b), f_(f), n_(b.tri.n), m_(b.tri.m), cancel_(cancel) {
    for (int c = 0; c < 3; ++c) {
      const int a = (c + 1) % 3, d = (c + 2) % 3;
      ncyc_other_[c] = cycles_of(n_, m_[std::min(a, d)], m_[std::max(a, d)], cyc_other_[c], rep_other_[c]);
    }
    for (int u = 0; u < n_; ++u)
      for (int c = 0; c < 3; ++c) {
        const int a = (c + 1) % 3, d = (c + 2) % 3;
        const int w = m_[a][u];
        if (u < w && m_[d][u] == w && m_[c][u] != w) double_pairs_.push_back({u, w, c});
      }
  }

  void run(std::unordered_set<std::string>& codes, CensusStats& stats) {
    codes_ = &codes;
    stats_ = &stats;
    auto ok = [this](int u, int w) { return admissible(u, w); };
    auto leaf = [this]() {
      if ((++stats_->leaves & 0xFFFF) == 0) check_cancel(cancel_);
      examine();
      return true;
    };
    if (f_.orientability == Orientability::bipartite)
      for_each_flip(n_, b_.info.comps, b_.info.comp, b_.info.side,
                    [&](const Row& eff) { return for_each_matching(n_, m3_, &eff, ok, leaf); });
    else
      for_each_matching(n_, m3_, nullptr, ok, leaf);
  }

private:
  bool admissible(int u, int w) const {
    int shared = 0, last = -1;
    for (int c = 0; c < 3; ++c)
      if (m_[c][u] == w) {
        ++shared;
        last = c;
      }
    if (shared == 3) return n_ == 2;
    // A 3-dipole leaves an ordinary residue next to another one.
    if (shared == 2) return !f_.contracted_only;
    // {last,3} double edge is a 2-dipole when its ends lie on different cycles
    // of the two remaining colors.
    if (shared == 1 && f_.no_2_dipoles) return cyc_other_[last][u] == cyc_other_[last][w];
    return true;
  }

  void examine() {
    const int n = n_;
    if (b_.info.comps > 1 && !connected()) return;

    std::array<Row, 3> c3{}, c3rep{};
    std::array<int, 3> nc3{};
    for (int a = 0; a < 3; ++a) nc3[a] = cycles_of(n, m_[a], m3_, c3[a], c3rep[a]);

    if (f_.no_2_dipoles)
      for (const auto& d : double_pairs_)
        if (m3_[d.u] != d.w && c3[d.c][d.u] != c3[d.c][d.w]) return;

    int boundary = 0, tori = 0;
    bool all_tori = true;
    for (int c = 0; c < 3; ++c) {
      const int a = (c + 1) % 3, d = (c + 2) % 3;
      Row rid{}, par{};
      std::array<int, kMax> vc{}, fc{};
      std::array<bool, kMax> orient{};
      std::array<std::uint8_t, kMax> queue{};
      std::fill(rid.begin(), rid.begin() + n, kNone);
      int nres = 0;
      for (int s = 0; s < n; ++s) {
        if (rid[s] != kNone) continue;
        const int k = nres++;
        orient[k] = true;
        int head = 0, tail = 0;
        queue[tail++] = static_cast<std::uint8_t>(s);
        rid[s] = static_cast<std::uint8_t>(k);
        par[s] = 0;
        while (head < tail) {
          const int v = queue[head++];
          ++vc[k];
          const int nb[3] = {m_[a][v], m_[d][v], m3_[v]};
          for (int w : nb) {
            if (rid[w] == kNone) {
              rid[w] = static_cast<std::uint8_t>(k);
              par[w] = par[v] ^ 1;
              queue[tail++] = static_cast<std::uint8_t>(w);
            } else if (par[w] == par[v]) {
              orient[k] = false;
            }
          }
        }
      }
      for (int i = 0; i < ncyc_other_[c]; ++i) ++fc[rid[rep_other_[c][i]]];
      for (int i = 0; i < nc3[a]; ++i) ++fc[rid[c3rep[a][i]]];
      for (int i = 0; i < nc3[d]; ++i) ++fc[rid[c3rep[d][i]]];
      int singular = 0;
      for (int k = 0; k < nres; ++k) {
        const int chi = fc[k] - vc[k] / 2;
        if (chi == 2) continue;
        ++singular;
        if (!(orient[k] && chi == 0)) all_tori = false;
        else ++tori;
      }
      if (f_.contracted_only && nres > 1 && singular != nres) return;
      boundary += singular;
    }
    for (const auto& s : b_.info.surfaces) {
      if (s.is_sphere()) continue;
      ++boundary;
      if (s.is_torus()) ++tori;
      else all_tori = false;
    }
    if (f_.contracted_only && b_.info.comps > 1 && b_.info.singular != b_.info.comps) return;

    if (f_.require_boundary && boundary == 0) return;
    if (f_.boundary_class == BoundaryClass::toric && !all_tori) return;
    if (f_.boundary_class == BoundaryClass::toric_connected && !(all_tori && boundary == 1)) return;
    if (f_.orientability == Orientability::non_bipartite && bipartite()) return;

    ++stats_->survivors;
    codes_->insert(canonical_code(ColoredGraph(to_matchings(n, m_, m3_))).text);
  }

  bool connected() const {
    std::array<int, kMax> parent{};
    for (int k = 0; k < b_.info.comps; ++k) parent[k] = k;
    auto find = [&](int x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    int groups = b_.info.comps;
    for (int v = 0; v < n_ && groups > 1; ++v) {
      const int x = find(b_.info.comp[v]), y = find(b_.info.comp[m3_[v]]);
      if (x != y) {
        parent[x] = y;
        --groups;
      }
    }
    return groups == 1;
  }

  bool bipartite() const {
    if (!b_.info.bipartite) return false;
    Row side{};
    std::fill(side.begin(), side.begin() + n_, kNone);
    std::array<std::uint8_t, kMax> queue{};
    int head = 0, tail = 0;
    side[0] = 0;
    queue[tail++] = 0;
    while (head < tail) {
      const int v = queue[head++];
      const int nb[4] = {m_[0][v], m_[1][v], m_[2][v], m3_[v]};
      for (int w : nb) {
        if (side[w] == kNone) {
          side[w] = side[v] ^ 1;
          queue[tail++] = static_cast<std::uint8_t>(w);
        } else if (side[w] == side[v]) {
          return false;
        }
      }
    }
    return true;
  }

  struct DoublePair {
    int u, w, c;
  };

  const Base& b_;
  const CensusFilter& f_;
  int n_;
  const std::array<Row, 3>& m_;
  const std::atomic<bool>* cancel_;
  Row m3_{};
  std::array<Row, 3> cyc_other_{}, rep_other_{};
  std::array<int, 3> ncyc_other_{};
  std::vector<DoublePair> double_pairs_;
  std::unordered_set<std::string>* codes_ = nullptr;
  CensusStats* stats_ = nullptr;
};

bool has_2_dipole(const ColoredGraph& g) {
  if (g.order() <= 2) return false;
  for (const auto& d : find_dipoles(g))
    if (d.h() == 2) return true;
  return false;
}

template <class Fn>
void parallel_for(std::size_t count, unsigned threads, Fn&& fn) {
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  auto worker = [&](unsigned id) {
    try {
      for (std::size_t i; (i = next.fetch_add(1)) < count;) fn(id, i);
    } catch (...) {
      std::lock_guard lock(error_mutex);
      if (!error) error = std::current_exception();
      next.store(count);
    }
  };
  if (threads <= 1) {
    worker(0);
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker, t);
    for (auto& t : pool) t.join();
  }
  if (error) std::rethrow_exception(error);
}

void check_order(int order) {
  if (order < 2 || order % 2) throw InvalidArgument("order must be even and positive");
  if (order > kMaxCensusOrder) throw InvalidArgument("order exceeds " + std::to_string(kMaxCensusOrder));
}

}  // namespace

unsigned resolve_threads(unsigned requested) {
  if (requested) return requested;
  if (const char* env = std::getenv("GEM_THREADS")) {
    const int v = std::atoi(env);
    if (v > 0) return static_cast<unsigned>(v);
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

SurfaceGraphSet build_surface_set(int order) {
  check_order(order);
  SurfaceGraphSet set;
  set.order = order;
  for (auto& b : build_bases(order, BaseSelector{}, nullptr)) {
    SurfaceGraph g;
    for (int c = 0; c < 3; ++c)
      for (int v = 0; v < order; ++v) g.matchings[c].push_back(b.tri.m[c][v]);
    g.components = b.info.surfaces;
    set.members.push_back(std::move(g));
  }
  return set;
}

CensusResult enumerate(int order, const CensusFilter& filter, const CensusOptions& options) {
  check_order(order);
  filter.validate();
  const unsigned threads = resolve_threads(options.threads);

  BaseSelector select;
  select.bipartite_only = filter.orientability == Orientability::bipartite;
  select.need_boundary = filter.require_boundary;
  select.contracted = filter.contracted_only;
  select.boundary = filter.boundary_class;
  const std::vector<Base> bases = build_bases(order, select, options.cancel);

  std::vector<std::unordered_set<std::string>> codes(threads);
  std::vector<CensusStats> stats(threads);
  parallel_for(bases.size(), threads, [&](unsigned id, std::size_t i) {
    Extender(bases[i], filter, options.cancel).run(codes[id], stats[id]);
  });

  CensusResult result;
  result.stats.base_graphs = bases.size();
  std::vector<std::string> merged;
  for (unsigned t = 0; t < threads; ++t) {
    result.stats.leaves += stats[t].leaves;
    result.stats.survivors += stats[t].survivors;
    merged.insert(merged.end(), codes[t].begin(), codes[t].end());
    codes[t] = {};
  }
  std::sort(merged.begin(), merged.end());
  merged.erase(std::unique(merged.begin(), merged.end()), merged.end());

  // Every field is recomputed by the core; a disagreement with the fast checks
  // above is a bug, not a filter decision.
  std::vector<CatalogRecord> records(merged.size());
  std::vector<char> keep(merged.size(), 0);
  parallel_for(merged.size(), threads, [&](unsigned, std::size_t i) {
    if ((i & 0x3FF) == 0) check_cancel(options.cancel);
    const ColoredGraph g = decode(merged[i]);
    CatalogRecord r = make_record(g);
    if (r.code.text != merged[i]) throw std::logic_error("canonical code is not idempotent: " + merged[i]);
    CensusFilter structural = filter;
    structural.rigid_only = false;
    if (!structural.accepts(r, filter.no_2_dipoles && has_2_dipole(g)))
      throw std::logic_error("census fast path accepted " + merged[i]);
    keep[i] = !filter.rigid_only || r.rigid;
    records[i] = std::move(r);
  });
  for (std::size_t i = 0; i < records.size(); ++i)
    if (keep[i]) result.records.push_back(std::move(records[i]));
  result.stats.unique = result.records.size();
  return result;
}

}  // namespace gem
