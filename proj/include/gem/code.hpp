#pragma once

#include <string>
#include <string_view>

#include "gem/colored_graph.hpp"

namespace gem {

// Code text of a 4-colored graph.
//
// Bipartite graphs use three rows of p letters. Vertices are b_1..b_p and
// w_1..w_p, color 0 joins b_i to w_i, and row k (k = 1..3) lists, for
// i = 1..p, the index of the white vertex joined to b_i by color k. Letters
// are A = 1, ..., Z = 26, a = 27, ..., z = 52.
//
// Other graphs use four rows of 2p letters: row c lists, for each vertex
// i = 1..2p, its c-neighbor. A text is never valid in both layouts, since a
// bipartite text needs letters beyond 2q whenever 3p = 8q.
struct GemCode {
  std::string text;
  int order = 0;

  friend bool operator==(const GemCode&, const GemCode&) = default;
  friend auto operator<=>(const GemCode& a, const GemCode& b) { return a.text <=> b.text; }
};

inline constexpr int kMaxLetter = 52;

char letter(int index);               // 1-based
int letter_index(char ch) noexcept;   // 1-based, 0 if not a letter

// Throws ParseError (position = 0-based row index) for a malformed text and
// InvalidArgument when the rows are well formed but describe a disconnected
// graph.
ColoredGraph decode(std::string_view text);

// Labeled encoding. Graphs whose labeling follows the bipartite convention of
// `decode` (vertex i = b_{i+1} for i < p, vertex p+i = w_{i+1}, color 0 joining
// them, every edge black-white) get the three-row form; all others the
// four-row form. decode(encode(g)) == g.
GemCode encode(const ColoredGraph& g);

// Complete invariant of the graph up to vertex relabeling and color
// permutation: the lexicographically largest text over every (root vertex,
// color order) of a deterministic relabeling traversal.
GemCode canonical_code(const ColoredGraph& g);

// Relabeled copy of g whose labeled encoding is the canonical code.
ColoredGraph canonical_form(const ColoredGraph& g);

}  // namespace gem
