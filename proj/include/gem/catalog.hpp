#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "gem/record.hpp"

namespace gem {

// Catalog files hold one JSON object per line with the keys code, order,
// bipartite, contracted, rigid, g, boundary, h1 in that order.
std::string to_json_line(const CatalogRecord& r);

// Throws ParseError (position 0) on malformed input.
CatalogRecord record_from_json(std::string_view line);

void write_catalog(std::ostream& out, const std::vector<CatalogRecord>& records);

// Blank lines are skipped. ParseError positions are 1-based line numbers.
std::vector<CatalogRecord> read_catalog(std::istream& in);

// Dual pseudo-triangulation: one tetrahedron per vertex, face c of tetrahedron
// u glued to face c of tetrahedron neighbor(u, c).
std::string export_tri(const ColoredGraph& g);

// Inverse of export_tri. ParseError positions are 1-based line numbers.
ColoredGraph parse_tri(std::string_view text);

// Published graphs bundled with the library.
struct FixtureRow {
  std::string name;  // e.g. "12^4_3"
  std::string code;
  int tori = 0;      // boundary components, the superscript of the name
  bool rigid = true;
  std::optional<AbelianGroup> h1;  // expected first homology, when known
};

std::vector<FixtureRow> parse_fixture(std::string_view text);
const std::vector<FixtureRow>& table3_fixture();

struct VerifyLine {
  std::string item;
  bool ok = true;
  std::string detail;
};

struct VerifyReport {
  std::vector<VerifyLine> lines;
  std::vector<std::string> notes;  // informational, never failures
  int failures() const;
};

// Checks every fixture row and re-runs the small censuses against the published
// counts; `extended` adds the order 14 and 16 runs and the order-12
// non-bipartite census.
VerifyReport verify_tables(bool extended, unsigned threads = 0);

// Human-readable summary of every invariant, dipole and rho-pair of g.
std::string analyze_text(const ColoredGraph& g);

}  // namespace gem
