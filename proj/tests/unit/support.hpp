#pragma once

#include <string>
#include <vector>

#include "gem/catalog.hpp"
#include "gem/code.hpp"

namespace testing {

inline const char* const kSolidTorus = "CABCBABCA";
inline const char* const kHopf = "CABCABBCA";
inline const char* const kTrefoilA = "DABCHEFGHGFEDCBAGCEABHDF";
inline const char* const kTrefoilB = "DABCHEFGHGFEDCBAGHEACBDF";

inline std::vector<std::string> published_codes() {
  std::vector<std::string> out;
  for (const auto& row : gem::table3_fixture()) out.push_back(row.code);
  return out;
}

// Matchings of a graph as a plain array, for building variants by hand.
inline std::array<gem::ColoredGraph::Matching, gem::kColors> matchings_of(const char* code) {
  return gem::decode(code).matchings();
}

}  // namespace testing
