#include "gem/code.hpp"

#include <algorithm>
#include <array>
#include <cstring>
#include <numeric>

#include "gem/residues.hpp"

namespace gem {

char letter(int index) {
  if (index >= 1 && index <= 26) return static_cast<char>('A' + index - 1);
  if (index >= 27 && index <= kMaxLetter) return static_cast<char>('a' + index - 27);
  throw InvalidArgument("no code letter for index " + std::to_string(index));
}

int letter_index(char ch) noexcept {
  if (ch >= 'A' && ch <= 'Z') return ch - 'A' + 1;
  if (ch >= 'a' && ch <= 'z') return ch - 'a' + 27;
  return 0;
}

namespace {

using Perm = std::array<int, kColors>;

const std::array<Perm, 24>& color_orders() {
  static const std::array<Perm, 24> table = [] {
    std::array<Perm, 24> t{};
    Perm p{0, 1, 2, 3};
    std::size_t i = 0;
    do t[i++] = p;
    while (std::next_permutation(p.begin(), p.end()));
    return t;
  }();
  return table;
}

bool is_permutation_row(std::string_view row, int p) {
  std::vector<char> seen(static_cast<std::size_t>(p) + 1, 0);
  for (char ch : row) {
    const int k = letter_index(ch);
    if (k < 1 || k > p || seen[static_cast<std::size_t>(k)]) return false;
    seen[static_cast<std::size_t>(k)] = 1;
  }
  return true;
}

bool is_involution_row(std::string_view row) {
  const int n = static_cast<int>(row.size());
  for (int i = 0; i < n; ++i) {
    const int k = letter_index(row[static_cast<std::size_t>(i)]);
    if (k < 1 || k > n || k == i + 1) return false;
    if (letter_index(row[static_cast<std::size_t>(k - 1)]) != i + 1) return false;
  }
  return true;
}

ColoredGraph decode_bipartite(std::string_view text, int p) {
  std::array<ColoredGraph::Matching, kColors> m;
  for (auto& x : m) x.assign(static_cast<std::size_t>(2 * p), 0);
  for (int i = 0; i < p; ++i) {
    m[0][static_cast<std::size_t>(i)] = p + i;
    m[0][static_cast<std::size_t>(p + i)] = i;
  }
  for (int c = 1; c < kColors; ++c) {
    const auto row = text.substr(static_cast<std::size_t>((c - 1) * p), static_cast<std::size_t>(p));
    for (int i = 0; i < p; ++i) {
      const int w = p + letter_index(row[static_cast<std::size_t>(i)]) - 1;
      m[c][static_cast<std::size_t>(i)] = w;
      m[c][static_cast<std::size_t>(w)] = i;
    }
  }
  return ColoredGraph(std::move(m));
}

ColoredGraph decode_general(std::string_view text, int n) {
  std::array<ColoredGraph::Matching, kColors> m;
  for (int c = 0; c < kColors; ++c) {
    m[c].resize(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i)
      m[c][static_cast<std::size_t>(i)] = letter_index(text[static_cast<std::size_t>(c * n + i)]) - 1;
  }
  return ColoredGraph(std::move(m));
}

}  // namespace

ColoredGraph decode(std::string_view text) {
  if (text.empty()) throw ParseError("empty code", 0);
  for (std::size_t i = 0; i < text.size(); ++i)
    if (letter_index(text[i]) == 0)
      throw ParseError("invalid character '" + std::string(1, text[i]) + "' at offset " + std::to_string(i), i);

  const auto len = static_cast<int>(text.size());
  if (len % 3 == 0) {
    const int p = len / 3;
    bool ok = true;
    for (int r = 0; r < 3 && ok; ++r) ok = is_permutation_row(text.substr(static_cast<std::size_t>(r * p), static_cast<std::size_t>(p)), p);
    if (ok) return decode_bipartite(text, p);
  }
  if (len % 8 == 0) {
    const int n = len / 4;
    bool ok = true;
    for (int r = 0; r < 4 && ok; ++r) ok = is_involution_row(text.substr(static_cast<std::size_t>(r * n), static_cast<std::size_t>(n)));
    if (ok) return decode_general(text, n);
  }
  // Report the first bad row of the layout the length suggests.
  if (len % 3 == 0) {
    const int p = len / 3;
    for (int r = 0; r < 3; ++r)
      if (!is_permutation_row(text.substr(static_cast<std::size_t>(r * p), static_cast<std::size_t>(p)), p))
        throw ParseError("row " + std::to_string(r) + " is not a permutation of A.." + std::string(1, letter(p)) +
                             " (offset " + std::to_string(r * p) + ")",
                         static_cast<std::size_t>(r));
  }
  if (len % 8 == 0) {
    const int n = len / 4;
    for (int r = 0; r < 4; ++r)
      if (!is_involution_row(text.substr(static_cast<std::size_t>(r * n), static_cast<std::size_t>(n))))
        throw ParseError("row " + std::to_string(r) + " is not a fixed-point-free involution (offset " +
                             std::to_string(r * n) + ")",
                         static_cast<std::size_t>(r));
  }
  throw ParseError("code length " + std::to_string(len) + " is neither 3p nor 8p", 0);
}

GemCode encode(const ColoredGraph& g) {
  const int n = g.order();
  const int p = n / 2;
  if (n > kMaxLetter * 2) throw InvalidArgument("graph too large to encode");

  bool standard = true;
  for (int i = 0; i < p && standard; ++i) {
    if (g.neighbor(i, 0) != p + i) standard = false;
    for (int c = 1; c < kColors && standard; ++c)
      if (g.neighbor(i, c) < p) standard = false;
  }
  GemCode code{{}, n};
  if (standard) {
    code.text.reserve(static_cast<std::size_t>(3 * p));
    for (int c = 1; c < kColors; ++c)
      for (int i = 0; i < p; ++i) code.text.push_back(letter(g.neighbor(i, c) - p + 1));
    return code;
  }
  if (n > kMaxLetter) throw InvalidArgument("graph too large for the four-row layout");
  code.text.reserve(static_cast<std::size_t>(4 * n));
  for (int c = 0; c < kColors; ++c)
    for (int i = 0; i < n; ++i) code.text.push_back(letter(g.neighbor(i, c) + 1));
  return code;
}

namespace {

// Bipartite traversal. The {s0,s1}-cycle through the root is labeled first:
// b_1 = root, w_k = s0-neighbor of b_k, b_{k+1} = s1-neighbor of w_k. Then the
// labeled black vertices are scanned in order, colors s2 and s3 in turn; an
// unlabeled white neighbor x opens its cycle at b = s1-neighbor of x, so that x
// receives the last white label of that cycle.
class BipartiteLabeler {
public:
  explicit BipartiteLabeler(const ColoredGraph& g) : g_(g), p_(g.half_order()) {
    label_.resize(static_cast<std::size_t>(g.order()));
    blacks_.resize(static_cast<std::size_t>(p_));
  }

  void run(Vertex root, const Perm& s, char* out) {
    std::fill(label_.begin(), label_.end(), -1);
    next_ = 0;
    open_cycle(root, s);
    for (int i = 0; i < next_; ++i) {
      for (int k = 2; k < 4; ++k) {
        const Vertex w = g_.neighbor(blacks_[static_cast<std::size_t>(i)], s[k]);
        if (label_[static_cast<std::size_t>(w)] == -1) open_cycle(g_.neighbor(w, s[1]), s);
      }
    }
    for (int k = 1; k < 4; ++k)
      for (int i = 0; i < p_; ++i)
        *out++ = letter(label_[static_cast<std::size_t>(g_.neighbor(blacks_[static_cast<std::size_t>(i)], s[k]))] + 1);
  }

  const std::vector<Vertex>& blacks() const { return blacks_; }
  const std::vector<int>& labels() const { return label_; }

private:
  void open_cycle(Vertex b, const Perm& s) {
    while (label_[static_cast<std::size_t>(b)] == -1) {
      const Vertex w = g_.neighbor(b, s[0]);
      label_[static_cast<std::size_t>(b)] = next_;
      label_[static_cast<std::size_t>(w)] = next_;
      blacks_[static_cast<std::size_t>(next_)] = b;
      ++next_;
      b = g_.neighbor(w, s[1]);
    }
  }

  const ColoredGraph& g_;
  int p_;
  int next_ = 0;
  std::vector<int> label_;
  std::vector<Vertex> blacks_;
};

// General traversal: breadth-first from the root, neighbors visited in color
// order s0..s3, labels in discovery order.
class GeneralLabeler {
public:
  explicit GeneralLabeler(const ColoredGraph& g) : g_(g) {
    label_.resize(static_cast<std::size_t>(g.order()));
    order_.resize(static_cast<std::size_t>(g.order()));
  }

  void run(Vertex root, const Perm& s, char* out) {
    const int n = g_.order();
    std::fill(label_.begin(), label_.end(), -1);
    int next = 0;
    label_[static_cast<std::size_t>(root)] = next;
    order_[static_cast<std::size_t>(next++)] = root;
    for (int i = 0; i < next; ++i)
      for (int k = 0; k < kColors; ++k) {
        const Vertex w = g_.neighbor(order_[static_cast<std::size_t>(i)], s[k]);
        if (label_[static_cast<std::size_t>(w)] == -1) {
          label_[static_cast<std::size_t>(w)] = next;
          order_[static_cast<std::size_t>(next++)] = w;
        }
      }
    for (int k = 0; k < kColors; ++k)
      for (int i = 0; i < n; ++i)
        *out++ = letter(label_[static_cast<std::size_t>(g_.neighbor(order_[static_cast<std::size_t>(i)], s[k]))] + 1);
  }

private:
  const ColoredGraph& g_;
  std::vector<int> label_;
  std::vector<Vertex> order_;
};

// Length of the {a,b}-cycle through each vertex.
std::vector<int> cycle_lengths(const ColoredGraph& g, int a, int b) {
  std::vector<int> len(static_cast<std::size_t>(g.order()), 0);
  std::vector<Vertex> members;
  for (Vertex s = 0; s < g.order(); ++s) {
    if (len[static_cast<std::size_t>(s)]) continue;
    members.clear();
    Vertex v = s;
    do {
      const Vertex w = g.neighbor(v, a);
      members.push_back(v);
      members.push_back(w);
      v = g.neighbor(w, b);
    } while (v != s);
    for (Vertex u : members) len[static_cast<std::size_t>(u)] = static_cast<int>(members.size());
  }
  return len;
}

GemCode canonical_bipartite(const ColoredGraph& g) {
  const int n = g.order();
  const int p = n / 2;
  if (p > kMaxLetter) throw InvalidArgument("graph too large to encode");

  // The first letter is half the length of the root's {s0,s1}-cycle, so only
  // roots on a longest bicolored cycle can reach the maximum.
  std::array<std::array<std::vector<int>, kColors>, kColors> lengths;
  int longest = 0;
  for (int a = 0; a < kColors; ++a)
    for (int b = a + 1; b < kColors; ++b) {
      lengths[a][b] = cycle_lengths(g, a, b);
      longest = std::max(longest, *std::max_element(lengths[a][b].begin(), lengths[a][b].end()));
    }

  BipartiteLabeler labeler(g);
  std::string best(static_cast<std::size_t>(3 * p), '\0');
  std::string cand(best.size(), '\0');
  bool have = false;
  for (const Perm& s : color_orders()) {
    const auto& len = lengths[std::min(s[0], s[1])][std::max(s[0], s[1])];
    for (Vertex r = 0; r < n; ++r) {
      if (len[static_cast<std::size_t>(r)] != longest) continue;
      labeler.run(r, s, cand.data());
      if (!have || cand > best) {
        best.swap(cand);
        have = true;
      }
    }
  }
  return {best, n};
}

GemCode canonical_general(const ColoredGraph& g) {
  const int n = g.order();
  if (n > kMaxLetter) throw InvalidArgument("graph too large to encode");
  GeneralLabeler labeler(g);
  std::string best(static_cast<std::size_t>(4 * n), '\0');
  std::string cand(best.size(), '\0');
  bool have = false;
  for (const Perm& s : color_orders())
    for (Vertex r = 0; r < n; ++r) {
      labeler.run(r, s, cand.data());
      if (!have || cand > best) {
        best.swap(cand);
        have = true;
      }
    }
  return {best, n};
}

}  // namespace

GemCode canonical_code(const ColoredGraph& g) {
  return is_bipartite(g) ? canonical_bipartite(g) : canonical_general(g);
}

ColoredGraph canonical_form(const ColoredGraph& g) { return decode(canonical_code(g).text); }

}  // namespace gem
