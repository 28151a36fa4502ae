#pragma once

#include <array>
#include <bit>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace gem {

using Vertex = std::int32_t;

inline constexpr int kColors = 4;

class InvalidArgument : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

// Raised by the code and file readers. `position` is a character offset or a
// row/line index depending on the reader; the message says which.
class ParseError : public std::runtime_error {
public:
  ParseError(const std::string& what, std::size_t position)
      : std::runtime_error(what), position_(position) {}
  std::size_t position() const noexcept { return position_; }

private:
  std::size_t position_;
};

// A color of Delta = {0,1,2,3}.
class Color {
public:
  constexpr explicit Color(int value) : value_(static_cast<std::uint8_t>(value)) {
    if (value < 0 || value >= kColors)
      throw InvalidArgument("color out of range: " + std::to_string(value));
  }
  constexpr int value() const noexcept { return value_; }
  constexpr operator int() const noexcept { return value_; }
  friend constexpr bool operator==(Color, Color) = default;

private:
  std::uint8_t value_;
};

// Subset of Delta stored as a 4-bit mask.
class ColorSet {
public:
  constexpr ColorSet() = default;
  constexpr ColorSet(std::initializer_list<int> colors) {
    for (int c : colors) insert(c);
  }
  static constexpr ColorSet from_mask(unsigned mask) {
    ColorSet s;
    s.mask_ = static_cast<std::uint8_t>(mask & 0xFu);
    return s;
  }
  static constexpr ColorSet all() { return from_mask(0xFu); }
  // Delta minus {c}.
  static constexpr ColorSet hat(int c) { return from_mask(0xFu & ~(1u << c)); }

  constexpr void insert(int c) {
    if (c < 0 || c >= kColors)
      throw InvalidArgument("color out of range: " + std::to_string(c));
    mask_ = static_cast<std::uint8_t>(mask_ | (1u << c));
  }
  constexpr bool contains(int c) const noexcept { return (mask_ >> c) & 1u; }
  constexpr int size() const noexcept { return std::popcount(static_cast<unsigned>(mask_)); }
  constexpr bool empty() const noexcept { return mask_ == 0; }
  constexpr unsigned mask() const noexcept { return mask_; }
  constexpr ColorSet complement() const noexcept { return from_mask(~mask_); }

  std::vector<int> colors() const {
    std::vector<int> out;
    for (int c = 0; c < kColors; ++c)
      if (contains(c)) out.push_back(c);
    return out;
  }

  friend constexpr bool operator==(ColorSet, ColorSet) = default;
  friend constexpr auto operator<=>(ColorSet a, ColorSet b) { return a.mask_ <=> b.mask_; }

private:
  std::uint8_t mask_ = 0;
};

// Connected 4-regular multigraph with a proper 4-edge-coloring, stored as four
// fixed-point-free involutions on 0..order-1. Immutable after construction.
class ColoredGraph {
public:
  using Matching = std::vector<Vertex>;

  // Validates every invariant; throws InvalidArgument otherwise.
  explicit ColoredGraph(std::array<Matching, kColors> matchings);

  // The graph on two vertices joined by four parallel edges (a gem of S^3).
  static ColoredGraph order_two();

  // Same as the constructor but skips the connectivity requirement; used for
  // intermediate results that get split into components right after.
  static std::vector<ColoredGraph> components_of(const std::array<Matching, kColors>& matchings);

  int order() const noexcept { return static_cast<int>(adj_.size() / kColors); }
  int half_order() const noexcept { return order() / 2; }

  Vertex neighbor(Vertex v, int c) const noexcept { return adj_[static_cast<std::size_t>(v) * kColors + c]; }

  Matching matching(int c) const;
  std::array<Matching, kColors> matchings() const;

  // Colors of the edges joining u and v (empty if not adjacent).
  ColorSet colors_between(Vertex u, Vertex v) const noexcept;

  // Relabels vertices by `perm` (new index of old vertex v is perm[v]) and
  // colors by `sigma` (old color c becomes sigma[c]).
  ColoredGraph relabeled(std::span<const Vertex> perm, const std::array<int, kColors>& sigma) const;

  friend bool operator==(const ColoredGraph&, const ColoredGraph&) = default;

private:
  struct Unchecked {};
  ColoredGraph(Unchecked, std::vector<Vertex> adj) : adj_(std::move(adj)) {}

  std::vector<Vertex> adj_;  // adj_[v*4 + c]
};

// Throws InvalidArgument unless `m` is a fixed-point-free involution on 0..n-1.
void check_involution(std::span<const Vertex> m, int color);

// Connected components of the union of the given matchings (all of the same
// size). Returns component id per vertex; ids are assigned in order of the
// smallest vertex.
std::vector<int> component_ids(std::span<const std::vector<Vertex>> matchings, int& count);

}  // namespace gem
