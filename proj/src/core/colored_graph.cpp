#include "gem/colored_graph.hpp"

#include <numeric>

namespace gem {

void check_involution(std::span<const Vertex> m, int color) {
  const auto n = static_cast<Vertex>(m.size());
  for (Vertex v = 0; v < n; ++v) {
    const Vertex w = m[static_cast<std::size_t>(v)];
    if (w < 0 || w >= n)
      throw InvalidArgument("matching " + std::to_string(color) + ": vertex " + std::to_string(v) +
                            " maps out of range");
    if (w == v)
      throw InvalidArgument("matching " + std::to_string(color) + ": loop at vertex " + std::to_string(v));
    if (m[static_cast<std::size_t>(w)] != v)
      throw InvalidArgument("matching " + std::to_string(color) + " is not an involution at vertex " +
                            std::to_string(v));
  }
}

std::vector<int> component_ids(std::span<const std::vector<Vertex>> matchings, int& count) {
  const std::size_t n = matchings.empty() ? 0 : matchings.front().size();
  std::vector<int> comp(n, -1);
  std::vector<Vertex> stack;
  count = 0;
  for (std::size_t s = 0; s < n; ++s) {
    if (comp[s] != -1) continue;
    comp[s] = count;
    stack.assign(1, static_cast<Vertex>(s));
    while (!stack.empty()) {
      const Vertex v = stack.back();
      stack.pop_back();
      for (const auto& m : matchings) {
        const Vertex w = m[static_cast<std::size_t>(v)];
        if (comp[static_cast<std::size_t>(w)] == -1) {
          comp[static_cast<std::size_t>(w)] = count;
          stack.push_back(w);
        }
      }
    }
    ++count;
  }
  return comp;
}

namespace {

void check_shape(const std::array<ColoredGraph::Matching, kColors>& matchings) {
  const std::size_t n = matchings[0].size();
  if (n == 0 || n % 2 != 0)
    throw InvalidArgument("order must be even and positive, got " + std::to_string(n));
  for (int c = 0; c < kColors; ++c) {
    if (matchings[c].size() != n) throw InvalidArgument("matchings have different sizes");
    check_involution(matchings[c], c);
  }
}

std::vector<Vertex> interleave(const std::array<ColoredGraph::Matching, kColors>& matchings) {
  const std::size_t n = matchings[0].size();
  std::vector<Vertex> adj(n * kColors);
  for (std::size_t v = 0; v < n; ++v)
    for (int c = 0; c < kColors; ++c) adj[v * kColors + c] = matchings[c][v];
  return adj;
}

}  // namespace

ColoredGraph::ColoredGraph(std::array<Matching, kColors> matchings) {
  check_shape(matchings);
  int count = 0;
  component_ids(matchings, count);
  if (count != 1) throw InvalidArgument("graph is disconnected (" + std::to_string(count) + " components)");
  adj_ = interleave(matchings);
}

ColoredGraph ColoredGraph::order_two() {
  return ColoredGraph(Unchecked{}, {1, 1, 1, 1, 0, 0, 0, 0});
}

std::vector<ColoredGraph> ColoredGraph::components_of(const std::array<Matching, kColors>& matchings) {
  check_shape(matchings);
  int count = 0;
  const auto comp = component_ids(matchings, count);
  const std::size_t n = comp.size();
  std::vector<Vertex> local(n);
  std::vector<int> sizes(static_cast<std::size_t>(count), 0);
  for (std::size_t v = 0; v < n; ++v) local[v] = sizes[static_cast<std::size_t>(comp[v])]++;

  std::vector<std::vector<Vertex>> adj(static_cast<std::size_t>(count));
  for (int k = 0; k < count; ++k) adj[static_cast<std::size_t>(k)].resize(static_cast<std::size_t>(sizes[k]) * kColors);
  for (std::size_t v = 0; v < n; ++v) {
    auto& a = adj[static_cast<std::size_t>(comp[v])];
    for (int c = 0; c < kColors; ++c)
      a[static_cast<std::size_t>(local[v]) * kColors + c] = local[static_cast<std::size_t>(matchings[c][v])];
  }
  std::vector<ColoredGraph> out;
  out.reserve(adj.size());
  for (auto& a : adj) out.push_back(ColoredGraph(Unchecked{}, std::move(a)));
  return out;
}

ColoredGraph::Matching ColoredGraph::matching(int c) const {
  Matching m(static_cast<std::size_t>(order()));
  for (Vertex v = 0; v < order(); ++v) m[static_cast<std::size_t>(v)] = neighbor(v, c);
  return m;
}

std::array<ColoredGraph::Matching, kColors> ColoredGraph::matchings() const {
  return {matching(0), matching(1), matching(2), matching(3)};
}

ColorSet ColoredGraph::colors_between(Vertex u, Vertex v) const noexcept {
  unsigned mask = 0;
  for (int c = 0; c < kColors; ++c)
    if (neighbor(u, c) == v) mask |= 1u << c;
  return ColorSet::from_mask(mask);
}

ColoredGraph ColoredGraph::relabeled(std::span<const Vertex> perm, const std::array<int, kColors>& sigma) const {
  const auto n = static_cast<std::size_t>(order());
  if (perm.size() != n) throw InvalidArgument("relabeling has wrong size");
  std::vector<char> seen(n, 0);
  for (Vertex p : perm) {
    if (p < 0 || static_cast<std::size_t>(p) >= n || seen[static_cast<std::size_t>(p)])
      throw InvalidArgument("relabeling is not a permutation");
    seen[static_cast<std::size_t>(p)] = 1;
  }
  unsigned used = 0;
  for (int s : sigma) {
    if (s < 0 || s >= kColors || (used >> s) & 1u) throw InvalidArgument("color map is not a permutation");
    used |= 1u << s;
  }
  std::vector<Vertex> adj(n * kColors);
  for (std::size_t v = 0; v < n; ++v)
    for (int c = 0; c < kColors; ++c)
      adj[static_cast<std::size_t>(perm[v]) * kColors + sigma[c]] = perm[static_cast<std::size_t>(neighbor(static_cast<Vertex>(v), c))];
  return ColoredGraph(Unchecked{}, std::move(adj));
}

}  // namespace gem
