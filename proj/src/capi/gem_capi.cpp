#include "gem/gem.h"

#include <atomic>
#include <cstdlib>
#include <cstring>
#include <fstream>
#include <sstream>

#include "gem/catalog.hpp"
#include "gem/census.hpp"
#include "gem/moves.hpp"

struct gem_graph {
  gem::ColoredGraph g;
};

struct gem_census {
  std::vector<gem::CatalogRecord> records;
};

struct gem_cancel {
  std::atomic<bool> flag{false};
};

namespace {

thread_local std::string last_error;

gem_status fail(gem_status s, const std::string& what) {
  last_error = what;
  return s;
}

// Maps the exception in flight to a status.
gem_status translate() {
  try {
    throw;
  } catch (const gem::ParseError& e) {
    return fail(GEM_ERR_PARSE, e.what());
  } catch (const gem::InvalidArgument& e) {
    return fail(GEM_ERR_INVALID_ARGUMENT, e.what());
  } catch (const gem::Cancelled& e) {
    return fail(GEM_ERR_CANCELLED, e.what());
  } catch (const std::bad_alloc&) {
    return fail(GEM_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(GEM_ERR_INTERNAL, e.what());
  } catch (...) {
    return fail(GEM_ERR_INTERNAL, "unknown error");
  }
}

template <class Fn>
gem_status guarded(Fn&& fn) {
  try {
    last_error.clear();
    return fn();
  } catch (...) {
    return translate();
  }
}

char* dup(const std::string& s) {
  char* p = static_cast<char*>(std::malloc(s.size() + 1));
  if (!p) throw std::bad_alloc();
  std::memcpy(p, s.c_str(), s.size() + 1);
  return p;
}

gem_status put_string(char** out, const std::string& s) {
  *out = dup(s);
  return GEM_OK;
}

gem_status put_graph(gem_graph** out, gem::ColoredGraph g) {
  *out = new gem_graph{std::move(g)};
  return GEM_OK;
}

gem::RhoPair pair_handle(const gem::ColoredGraph& g, int c, int e, int f) {
  if (c < 0 || c >= gem::kColors) throw gem::InvalidArgument("color out of range");
  const int lo = std::min(e, f), hi = std::max(e, f);
  for (int shared : {2, 3})
    for (const auto& p : gem::find_rho_pairs(g, shared))
      if (p.color == c && p.e == lo && p.f == hi) return p;
  throw gem::InvalidArgument("no rho-pair of color " + std::to_string(c) + " at edges " + std::to_string(e) + " " +
                             std::to_string(f));
}

#define GEM_REQUIRE(cond)                                          \
  do {                                                             \
    if (!(cond)) return fail(GEM_ERR_NULL, "null argument: " #cond); \
  } while (0)

}  // namespace

extern "C" {

const char* gem_last_error(void) { return last_error.c_str(); }

const char* gem_status_name(gem_status status) {
  switch (status) {
    case GEM_OK: return "ok";
    case GEM_ERR_INVALID_ARGUMENT: return "invalid argument";
    case GEM_ERR_PARSE: return "parse error";
    case GEM_ERR_IO: return "i/o error";
    case GEM_ERR_CANCELLED: return "cancelled";
    case GEM_ERR_INTERNAL: return "internal error";
    case GEM_ERR_NULL: return "null argument";
  }
  return "unknown status";
}

void gem_free_string(char* s) { std::free(s); }

gem_status gem_graph_from_code(const char* code, gem_graph** out) {
  GEM_REQUIRE(code && out);
  return guarded([&] { return put_graph(out, gem::decode(code)); });
}

gem_status gem_graph_from_tri(const char* text, gem_graph** out) {
  GEM_REQUIRE(text && out);
  return guarded([&] { return put_graph(out, gem::parse_tri(text)); });
}

void gem_graph_free(gem_graph* g) { delete g; }

int gem_graph_order(const gem_graph* g) { return g ? g->g.order() : 0; }

gem_status gem_graph_code(const gem_graph* g, char** out) {
  GEM_REQUIRE(g && out);
  return guarded([&] { return put_string(out, gem::encode(g->g).text); });
}

gem_status gem_graph_canonical_code(const gem_graph* g, char** out) {
  GEM_REQUIRE(g && out);
  return guarded([&] { return put_string(out, gem::canonical_code(g->g).text); });
}

gem_status gem_graph_analyze(const gem_graph* g, char** out) {
  GEM_REQUIRE(g && out);
  return guarded([&] { return put_string(out, gem::analyze_text(g->g)); });
}

gem_status gem_graph_record(const gem_graph* g, char** out) {
  GEM_REQUIRE(g && out);
  return guarded([&] { return put_string(out, gem::to_json_line(gem::make_record(g->g))); });
}

gem_status gem_graph_export_tri(const gem_graph* g, char** out) {
  GEM_REQUIRE(g && out);
  return guarded([&] { return put_string(out, gem::export_tri(g->g)); });
}

gem_status gem_graph_cancel_dipole(const gem_graph* g, int u, int v, gem_graph** out) {
  GEM_REQUIRE(g && out);
  return guarded([&] {
    if (g->g.order() <= 2) throw gem::InvalidArgument("order-2 graph has no dipoles");
    if (u < 0 || v < 0 || u >= g->g.order() || v >= g->g.order() || u == v)
      throw gem::InvalidArgument("vertex out of range");
    const gem::Dipole d{std::min(u, v), std::max(u, v), g->g.colors_between(u, v)};
    if (d.colors.empty() || !gem::is_dipole(g->g, d))
      throw gem::InvalidArgument("no dipole at " + std::to_string(u) + " " + std::to_string(v));
    return put_graph(out, gem::cancel_dipole(g->g, d));
  });
}

gem_status gem_graph_insert_dipole(const gem_graph* g, int at, unsigned colors, gem_graph** out) {
  GEM_REQUIRE(g && out);
  return guarded([&] {
    if (colors > 0xFu) throw gem::InvalidArgument("color mask out of range");
    if (at < 0 || at >= g->g.order()) throw gem::InvalidArgument("vertex out of range");
    return put_graph(out, gem::insert_dipole(g->g, at, gem::ColorSet::from_mask(colors)));
  });
}

gem_status gem_graph_switch_pair(const gem_graph* g, int c, int e, int f, gem_graph** parts, size_t* count) {
  GEM_REQUIRE(g && parts && count);
  return guarded([&] {
    auto comps = gem::switch_pair(g->g, pair_handle(g->g, c, e, f));
    *count = comps.size();
    for (std::size_t i = 0; i < comps.size(); ++i) parts[i] = new gem_graph{std::move(comps[i])};
    return GEM_OK;
  });
}

gem_status gem_graph_classify_rho3(const gem_graph* g, int c, int e, int f, char** out) {
  GEM_REQUIRE(g && out);
  return guarded([&] {
    const auto p = pair_handle(g->g, c, e, f);
    if (p.shared() != 3) throw gem::InvalidArgument("not a rho3-pair");
    const auto cls = gem::classify_rho3_switch(g->g, p);
    return put_string(out, gem::to_string(cls.kind) + " index " + std::to_string(cls.index) + " components " +
                               std::to_string(cls.components_after) + " boundary " +
                               std::to_string(cls.boundary_before) + "->" + std::to_string(cls.boundary_after));
  });
}

gem_cancel* gem_cancel_new(void) { return new (std::nothrow) gem_cancel; }
void gem_cancel_request(gem_cancel* token) {
  if (token) token->flag.store(true);
}
void gem_cancel_free(gem_cancel* token) { delete token; }

void gem_census_options_init(gem_census_options* o) {
  if (!o) return;
  *o = gem_census_options{};
  o->order = 2;
  o->orientability = GEM_BIPARTITE;
  o->require_boundary = 1;
  o->boundary_class = GEM_BOUNDARY_ANY;
  o->rigid_only = 0;
  o->contracted_only = 1;
  o->no_2_dipoles = 1;
  o->threads = 0;
}

gem_status gem_census_run(const gem_census_options* o, const gem_cancel* cancel, gem_census** out) {
  GEM_REQUIRE(o && out);
  return guarded([&] {
    gem::CensusFilter f;
    switch (o->orientability) {
      case GEM_ANY: f.orientability = gem::Orientability::any; break;
      case GEM_BIPARTITE: f.orientability = gem::Orientability::bipartite; break;
      case GEM_NON_BIPARTITE: f.orientability = gem::Orientability::non_bipartite; break;
      default: throw gem::InvalidArgument("bad orientability");
    }
    switch (o->boundary_class) {
      case GEM_BOUNDARY_ANY: f.boundary_class = gem::BoundaryClass::any; break;
      case GEM_BOUNDARY_TORIC: f.boundary_class = gem::BoundaryClass::toric; break;
      case GEM_BOUNDARY_TORIC_CONNECTED: f.boundary_class = gem::BoundaryClass::toric_connected; break;
      default: throw gem::InvalidArgument("bad boundary class");
    }
    f.require_boundary = o->require_boundary != 0;
    f.rigid_only = o->rigid_only != 0;
    f.contracted_only = o->contracted_only != 0;
    f.no_2_dipoles = o->no_2_dipoles != 0;
    auto result = gem::enumerate(o->order, f, {o->threads, cancel ? &cancel->flag : nullptr});
    *out = new gem_census{std::move(result.records)};
    return GEM_OK;
  });
}

void gem_census_free(gem_census* census) { delete census; }

size_t gem_census_count(const gem_census* census) { return census ? census->records.size() : 0; }

const char* gem_census_code(const gem_census* census, size_t index) {
  if (!census || index >= census->records.size()) return nullptr;
  return census->records[index].code.text.c_str();
}

gem_status gem_census_record(const gem_census* census, size_t index, char** out) {
  GEM_REQUIRE(census && out);
  if (index >= census->records.size()) return fail(GEM_ERR_INVALID_ARGUMENT, "record index out of range");
  return guarded([&] { return put_string(out, gem::to_json_line(census->records[index])); });
}

gem_status gem_census_write(const gem_census* census, const char* path) {
  GEM_REQUIRE(census && path);
  return guarded([&] {
    std::ofstream file(path);
    if (!file) return fail(GEM_ERR_IO, std::string("cannot open ") + path + " for writing");
    gem::write_catalog(file, census->records);
    file.flush();
    if (!file) return fail(GEM_ERR_IO, std::string("write failed: ") + path);
    return GEM_OK;
  });
}

gem_status gem_catalog_read(const char* path, size_t* records) {
  GEM_REQUIRE(path && records);
  return guarded([&] {
    std::ifstream file(path);
    if (!file) return fail(GEM_ERR_IO, std::string("cannot open ") + path);
    *records = gem::read_catalog(file).size();
    return GEM_OK;
  });
}

gem_status gem_catalog_check(const char* path, size_t* records, size_t* mismatches, char** report) {
  GEM_REQUIRE(path && records && mismatches && report);
  return guarded([&] {
    std::ifstream file(path);
    if (!file) return fail(GEM_ERR_IO, std::string("cannot open ") + path);
    const auto recs = gem::read_catalog(file);
    std::ostringstream out;
    std::size_t bad = 0;
    for (std::size_t i = 0; i < recs.size(); ++i) {
      const std::string diff = gem::check_record(recs[i]);
      if (diff.empty()) continue;
      ++bad;
      out << "record " << i + 1 << " (" << recs[i].code.text << "): " << diff << '\n';
    }
    *records = recs.size();
    *mismatches = bad;
    return put_string(report, out.str());
  });
}

gem_status gem_verify_tables(int extended, unsigned threads, int* failures, char** report) {
  GEM_REQUIRE(failures && report);
  return guarded([&] {
    const auto r = gem::verify_tables(extended != 0, threads);
    std::ostringstream out;
    for (const auto& l : r.lines) out << (l.ok ? "PASS " : "FAIL ") << l.item << ": " << l.detail << '\n';
    for (const auto& n : r.notes) out << "note: " << n << '\n';
    *failures = r.failures();
    return put_string(report, out.str());
  });
}

}  // extern "C"
