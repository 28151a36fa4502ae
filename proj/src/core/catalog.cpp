#include "gem/catalog.hpp"

#include <algorithm>
#include <charconv>
#include <istream>
#include <ostream>
#include <sstream>

#include <json.hpp>

#include "gem/census.hpp"
#include "gem/moves.hpp"

namespace gem {

namespace {

using Json = nlohmann::ordered_json;

const char kFixtureText[] =
#include "table3_fixture.inc"
    ;

Json to_json(const CatalogRecord& r) {
  Json j;
  j["code"] = r.code.text;
  j["order"] = r.order;
  j["bipartite"] = r.bipartite;
  j["contracted"] = r.contracted;
  j["rigid"] = r.rigid;
  j["g"] = r.g;
  Json boundary = Json::array();
  for (const auto& s : r.boundary.components) boundary.push_back({{"orientable", s.orientable}, {"genus", s.genus}});
  j["boundary"] = boundary;
  j["h1"] = {{"rank", r.h1.rank}, {"torsion", r.h1.torsion}};
  return j;
}

// "Z^2 + Z/2", "Z", "0".
AbelianGroup parse_group(std::string_view s) {
  std::string t;
  for (char ch : s)
    if (ch != ' ') t.push_back(ch);
  AbelianGroup g;
  if (t == "0") return g;
  std::vector<std::int64_t> orders;
  std::size_t pos = 0;
  while (pos <= t.size()) {
    const std::size_t end = std::min(t.find('+', pos), t.size());
    const std::string term = t.substr(pos, end - pos);
    auto number = [&](std::string_view digits) {
      std::int64_t v = 0;
      auto [p, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), v);
      if (ec != std::errc() || p != digits.data() + digits.size() || v < 1)
        throw ParseError("bad group term: " + term, 0);
      return v;
    };
    if (term == "Z") ++g.rank;
    else if (term.rfind("Z^", 0) == 0) g.rank += static_cast<int>(number(std::string_view(term).substr(2)));
    else if (term.rfind("Z/", 0) == 0) orders.push_back(number(std::string_view(term).substr(2)));
    else throw ParseError("bad group term: " + term, 0);
    pos = end + 1;
  }
  return normalize_group(g.rank, std::move(orders));
}

}  // namespace

std::string to_json_line(const CatalogRecord& r) { return to_json(r).dump(); }

CatalogRecord record_from_json(std::string_view line) {
  Json j;
  try {
    j = Json::parse(line);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("malformed record: ") + e.what(), 0);
  }
  static const char* const keys[] = {"code", "order", "bipartite", "contracted", "rigid", "g", "boundary", "h1"};
  if (!j.is_object() || j.size() != std::size(keys)) throw ParseError("record must have exactly the catalog keys", 0);
  try {
    CatalogRecord r;
    for (const char* k : keys)
      if (!j.contains(k)) throw ParseError(std::string("missing key: ") + k, 0);
    r.code.text = j["code"].get<std::string>();
    r.order = j["order"].get<int>();
    r.code.order = r.order;
    r.bipartite = j["bipartite"].get<bool>();
    r.contracted = j["contracted"].get<bool>();
    r.rigid = j["rigid"].get<bool>();
    r.g = j["g"].get<GVector>();
    for (const auto& s : j["boundary"])
      r.boundary.components.push_back({s.at("orientable").get<bool>(), s.at("genus").get<int>()});
    r.h1.rank = j["h1"].at("rank").get<int>();
    r.h1.torsion = j["h1"].at("torsion").get<std::vector<std::int64_t>>();
    // The code has to describe a graph of the stated order; the other fields
    // are only compared by check_record.
    try {
      if (decode(r.code.text).order() != r.order) throw ParseError("order does not match the code", 0);
    } catch (const InvalidArgument& e) {
      throw ParseError(std::string("bad code: ") + e.what(), 0);
    }
    return r;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("bad field type: ") + e.what(), 0);
  }
}

void write_catalog(std::ostream& out, const std::vector<CatalogRecord>& records) {
  for (const auto& r : records) out << to_json_line(r) << '\n';
}

std::vector<CatalogRecord> read_catalog(std::istream& in) {
  std::vector<CatalogRecord> out;
  std::string line;
  std::size_t number = 0;
  while (std::getline(in, line)) {
    ++number;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    try {
      out.push_back(record_from_json(line));
    } catch (const ParseError& e) {
      throw ParseError("line " + std::to_string(number) + ": " + e.what(), number);
    }
  }
  return out;
}

std::string export_tri(const ColoredGraph& g) {
  std::ostringstream out;
  out << "GEM-TRI 1\n"
      << "n " << g.order() << '\n';
  for (Vertex v = 0; v < g.order(); ++v) {
    out << v << ':';
    for (int c = 0; c < kColors; ++c) out << ' ' << g.neighbor(v, c);
    out << '\n';
  }
  return out.str();
}

ColoredGraph parse_tri(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t number = 0;
  auto next_line = [&]() {
    ++number;
    if (!std::getline(in, line)) throw ParseError("unexpected end of file at line " + std::to_string(number), number);
  };
  auto fail = [&](const std::string& what) -> ParseError {
    return ParseError("line " + std::to_string(number) + ": " + what, number);
  };

  next_line();
  if (line != "GEM-TRI 1") throw fail("expected header 'GEM-TRI 1'");
  next_line();
  int n = 0;
  {
    std::istringstream ls(line);
    std::string tag, extra;
    if (!(ls >> tag >> n) || tag != "n" || (ls >> extra)) throw fail("expected 'n <count>'");
    if (n < 2 || n % 2) throw fail("tetrahedron count must be even and positive");
  }
  std::array<ColoredGraph::Matching, kColors> m;
  for (auto& row : m) row.resize(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    next_line();
    std::istringstream ls(line);
    int index = -1;
    char colon = 0;
    std::string extra;
    if (!(ls >> index >> colon) || colon != ':' || index != i) throw fail("expected '" + std::to_string(i) + ":'");
    for (int c = 0; c < kColors; ++c) {
      long long v = -1;
      if (!(ls >> v) || v < 0 || v >= n) throw fail("bad gluing index");
      m[c][static_cast<std::size_t>(i)] = static_cast<Vertex>(v);
    }
    if (ls >> extra) throw fail("trailing data");
  }
  while (std::getline(in, line)) {
    ++number;
    if (line.find_first_not_of(" \t\r") != std::string::npos) throw fail("trailing data");
  }
  try {
    return ColoredGraph(std::move(m));
  } catch (const InvalidArgument& e) {
    throw ParseError(std::string("gluings do not form a colored graph: ") + e.what(), 0);
  }
}

std::vector<FixtureRow> parse_fixture(std::string_view text) {
  std::vector<FixtureRow> rows;
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t number = 0;
  while (std::getline(in, line)) {
    ++number;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    FixtureRow row;
    int rigid = 0;
    std::string h1, rest;
    if (!(ls >> row.name)) continue;
    if (!(ls >> row.code >> rigid) || (rigid != 0 && rigid != 1))
      throw ParseError("fixture line " + std::to_string(number) + ": expected name code rigid h1", number);
    std::getline(ls, rest);
    const auto b = rest.find_first_not_of(' ');
    h1 = b == std::string::npos ? "" : rest.substr(b);
    row.rigid = rigid == 1;
    if (h1.empty()) throw ParseError("fixture line " + std::to_string(number) + ": missing h1", number);
    if (h1 != "-") row.h1 = parse_group(h1);
    // Name is <order>^<tori>_<index>.
    const auto caret = row.name.find('^'), under = row.name.find('_');
    if (caret == std::string::npos || under == std::string::npos || under < caret)
      throw ParseError("fixture line " + std::to_string(number) + ": bad name", number);
    row.tori = std::stoi(row.name.substr(caret + 1, under - caret - 1));
    rows.push_back(std::move(row));
  }
  return rows;
}

const std::vector<FixtureRow>& table3_fixture() {
  static const std::vector<FixtureRow> rows = parse_fixture(kFixtureText);
  return rows;
}

int VerifyReport::failures() const {
  return static_cast<int>(std::count_if(lines.begin(), lines.end(), [](const VerifyLine& l) { return !l.ok; }));
}

namespace {

void verify_row(const FixtureRow& row, VerifyReport& report) {
  VerifyLine line{"fixture " + row.name, true, {}};
  auto mismatch = [&](const std::string& what) {
    line.ok = false;
    if (!line.detail.empty()) line.detail += "; ";
    line.detail += what;
  };
  try {
    const ColoredGraph g = decode(row.code);
    const CatalogRecord r = make_record(g);
    int tori = 0;
    for (const auto& s : r.boundary.components)
      if (s.is_torus()) ++tori;
    if (!r.bipartite) mismatch("not bipartite");
    if (!r.contracted) mismatch("not contracted");
    if (!r.boundary.toric() || tori != row.tori)
      mismatch("boundary " + to_string(r.boundary) + ", expected " + std::to_string(row.tori) + " tori");
    if (r.rigid != row.rigid) mismatch(std::string("rigid = ") + (r.rigid ? "true" : "false"));
    if (row.h1 && r.h1 != *row.h1) mismatch("H1 = " + to_string(r.h1) + ", expected " + to_string(*row.h1));
    if (line.ok) line.detail = to_string(r.boundary) + ", H1 = " + to_string(r.h1) + (r.rigid ? ", rigid" : ", not rigid");
    report.notes.push_back(row.name + ": canonical code " + r.code.text +
                           (r.code.text == row.code ? " (equals published string)" : " (differs from published string)"));
  } catch (const std::exception& e) {
    mismatch(std::string("does not decode: ") + e.what());
  }
  report.lines.push_back(std::move(line));
}

struct CountCheck {
  std::string name;
  int order;
  CensusFilter filter;
  std::size_t expected;
};

CensusFilter make_filter(Orientability o, BoundaryClass b, bool rigid) {
  CensusFilter f;
  f.orientability = o;
  f.boundary_class = b;
  f.rigid_only = rigid;
  return f;
}

}  // namespace

VerifyReport verify_tables(bool extended, unsigned threads) {
  VerifyReport report;
  for (const auto& row : table3_fixture()) verify_row(row, report);

  const auto& fx = table3_fixture();
  if (fx.size() >= 2) {
    const auto a = canonical_code(decode(fx[fx.size() - 2].code)), b = canonical_code(decode(fx.back().code));
    report.lines.push_back({"16-vertex graphs are distinct", a != b, a.text + " / " + b.text});
  }

  const std::size_t surface_counts[] = {0, 1, 3, 14, 71, 553};
  for (int p = 1; p <= 6; ++p) {
    const std::size_t got = build_surface_set(2 * p).members.size();
    report.lines.push_back({"|S^(" + std::to_string(2 * p) + ")|", got == surface_counts[p - 1],
                            std::to_string(got) + " (expected " + std::to_string(surface_counts[p - 1]) + ")"});
  }

  using O = Orientability;
  using B = BoundaryClass;
  std::vector<CountCheck> checks;
  const std::size_t c[] = {0, 0, 2, 4, 57, 902};
  const std::size_t ct[] = {0, 1, 6, 90, 3967};
  for (int p = 1; p <= 6; ++p) checks.push_back({"C", 2 * p, make_filter(O::bipartite, B::any, false), c[p - 1]});
  for (int p = 1; p <= 5; ++p) checks.push_back({"C~", 2 * p, make_filter(O::non_bipartite, B::any, false), ct[p - 1]});
  const std::size_t t[] = {2, 4, 20, 174}, tc[] = {1, 0, 0, 26}, rt[] = {1, 4, 8, 93}, rtc[] = {0, 0, 0, 1};
  for (int i = 0; i < 4; ++i) {
    const int n = 6 + 2 * i;
    checks.push_back({"C_t", n, make_filter(O::bipartite, B::toric, false), t[i]});
    checks.push_back({"C_tc", n, make_filter(O::bipartite, B::toric_connected, false), tc[i]});
    checks.push_back({"C_rt", n, make_filter(O::bipartite, B::toric, true), rt[i]});
    checks.push_back({"C_rtc", n, make_filter(O::bipartite, B::toric_connected, true), rtc[i]});
  }
  if (extended) {
    checks.push_back({"C_t", 14, make_filter(O::bipartite, B::toric, false), 1979});
    checks.push_back({"C_tc", 14, make_filter(O::bipartite, B::toric_connected, false), 13});
    checks.push_back({"C_rt", 14, make_filter(O::bipartite, B::toric, true), 1391});
    checks.push_back({"C_rtc", 14, make_filter(O::bipartite, B::toric_connected, true), 0});
    checks.push_back({"C_tc", 16, make_filter(O::bipartite, B::toric_connected, false), 84});
    checks.push_back({"C_rtc", 16, make_filter(O::bipartite, B::toric_connected, true), 2});
    checks.push_back({"C~", 12, make_filter(O::non_bipartite, B::any, false), 395877});
  }
  for (const auto& ch : checks) {
    const std::size_t got = enumerate(ch.order, ch.filter, {threads, nullptr}).records.size();
    report.lines.push_back({ch.name + "^(" + std::to_string(ch.order) + ")", got == ch.expected,
                            std::to_string(got) + " (expected " + std::to_string(ch.expected) + ")"});
  }
  return report;
}

std::string analyze_text(const ColoredGraph& g) {
  std::ostringstream out;
  const CatalogRecord r = make_record(g);
  out << "code: " << encode(g).text << '\n';
  out << "canonical: " << r.code.text << '\n';
  out << "order: " << r.order << '\n';
  out << "bipartite: " << (r.bipartite ? "true" : "false") << '\n';
  out << "g: (" << r.g[0] << ", " << r.g[1] << ", " << r.g[2] << ", " << r.g[3] << ")\n";
  out << "residues:\n";
  for (const auto& rs : three_residue_surfaces(g)) {
    out << "  missing " << rs.missing_color << ", " << rs.residue.vertices.size() << " vertices: "
        << to_string(rs.surface) << (rs.surface.is_sphere() ? " (ordinary)" : " (singular)") << '\n';
  }
  out << "boundary: " << to_string(r.boundary) << '\n';
  out << "contracted: " << (r.contracted ? "true" : "false") << '\n';
  out << "rigid: " << (r.bipartite ? (r.rigid ? "true" : "false") : "n/a (non-bipartite)") << '\n';
  out << "H1: " << to_string(r.h1) << '\n';

  if (g.order() > 2) {
    const auto dipoles = find_dipoles(g);
    out << "dipoles: " << dipoles.size() << '\n';
    for (const auto& d : dipoles) {
      out << "  " << d.u << ' ' << d.v << " colors";
      for (int c : d.colors.colors()) out << ' ' << c;
      out << (is_proper(g, d) ? " proper" : " not proper") << '\n';
    }
  }
  if (r.bipartite) {
    for (int shared : {2, 3}) {
      const auto pairs = find_rho_pairs(g, shared);
      out << "rho" << shared << " pairs: " << pairs.size() << '\n';
      for (const auto& p : pairs) {
        out << "  color " << p.color << " edges " << p.e << ' ' << p.f;
        if (shared == 2) {
          out << (is_good_rho2(g, p) ? " good" : " not good");
        } else {
          const int idx = rho3_index(g, p);
          out << " index " << idx;
          if (idx >= 2) out << " good, " << to_string(classify_rho3_switch(g, p).kind);
        }
        out << '\n';
      }
    }
  }
  return out.str();
}

}  // namespace gem
