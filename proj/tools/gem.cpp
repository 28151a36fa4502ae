// gem: census, analysis and verification front end over the C interface.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "gem/gem.h"

namespace {

constexpr int kExitMismatch = 1;
constexpr int kExitUsage = 2;

struct CString {
  char* p = nullptr;
  ~CString() { gem_free_string(p); }
  std::string str() const { return p ? p : ""; }
};

using Graph = std::unique_ptr<gem_graph, decltype(&gem_graph_free)>;

int report(gem_status s) {
  std::cerr << "gem: " << gem_status_name(s) << ": " << gem_last_error() << '\n';
  return kExitUsage;
}

Graph load(const std::string& code, gem_status& s) {
  gem_graph* g = nullptr;
  s = gem_graph_from_code(code.c_str(), &g);
  return Graph(g, gem_graph_free);
}

std::string canonical(const gem_graph* g) {
  CString out;
  if (gem_graph_canonical_code(g, &out.p) != GEM_OK) return "?";
  return out.str();
}

int cmd_enumerate(int vertices, bool bipartite, bool non_bipartite, const std::string& boundary, bool rigid,
                  bool allow_closed, bool allow_uncontracted, bool allow_2_dipoles, const std::string& output,
                  unsigned threads) {
  gem_census_options o;
  gem_census_options_init(&o);
  o.order = vertices;
  o.orientability = bipartite ? GEM_BIPARTITE : non_bipartite ? GEM_NON_BIPARTITE : GEM_ANY;
  o.boundary_class = boundary == "toric"             ? GEM_BOUNDARY_TORIC
                     : boundary == "toric-connected" ? GEM_BOUNDARY_TORIC_CONNECTED
                                                     : GEM_BOUNDARY_ANY;
  o.rigid_only = rigid;
  o.require_boundary = !allow_closed;
  o.contracted_only = !allow_uncontracted;
  o.no_2_dipoles = !allow_2_dipoles;
  o.threads = threads;

  gem_census* raw = nullptr;
  if (gem_status s = gem_census_run(&o, nullptr, &raw); s != GEM_OK) return report(s);
  std::unique_ptr<gem_census, decltype(&gem_census_free)> census(raw, gem_census_free);

  const std::size_t n = gem_census_count(census.get());
  if (!output.empty()) {
    if (gem_status s = gem_census_write(census.get(), output.c_str()); s != GEM_OK) return report(s);
  } else {
    for (std::size_t i = 0; i < n; ++i) std::cout << gem_census_code(census.get(), i) << '\n';
  }
  std::cout << "total " << n << '\n';
  return 0;
}

int cmd_analyze(const std::string& code) {
  gem_status s;
  Graph g = load(code, s);
  if (s != GEM_OK) return report(s);
  CString out;
  if ((s = gem_graph_analyze(g.get(), &out.p)) != GEM_OK) return report(s);
  std::cout << out.str();
  return 0;
}

int cmd_verify(bool extended, unsigned threads) {
  int failures = 0;
  CString out;
  if (gem_status s = gem_verify_tables(extended, threads, &failures, &out.p); s != GEM_OK) return report(s);
  std::cout << out.str();
  std::cout << (failures ? "FAILED " + std::to_string(failures) + " item(s)\n" : std::string("all checks passed\n"));
  return failures ? kExitMismatch : 0;
}

int cmd_move(const std::string& code, const std::string& kind, const std::vector<std::string>& args) {
  gem_status s;
  Graph g = load(code, s);
  if (s != GEM_OK) return report(s);
  std::vector<int> v;
  try {
    for (const auto& a : args) v.push_back(std::stoi(a));
  } catch (const std::exception&) {
    std::cerr << "gem: move arguments must be integers\n";
    return kExitUsage;
  }
  auto need = [&](std::size_t k) {
    if (v.size() == k) return true;
    std::cerr << "gem: move " << kind << " takes " << k << " arguments\n";
    return false;
  };

  if (kind == "cancel" || kind == "insert") {
    gem_graph* out = nullptr;
    if (kind == "cancel") {
      if (!need(2)) return kExitUsage;
      s = gem_graph_cancel_dipole(g.get(), v[0], v[1], &out);
    } else {
      // insert AT COLOR...; colors listed individually.
      if (v.size() < 2 || v.size() > 4) {
        std::cerr << "gem: move insert takes a vertex and one to three colors\n";
        return kExitUsage;
      }
      unsigned mask = 0;
      for (std::size_t i = 1; i < v.size(); ++i) {
        if (v[i] < 0 || v[i] > 3) {
          std::cerr << "gem: color out of range\n";
          return kExitUsage;
        }
        mask |= 1u << v[i];
      }
      s = gem_graph_insert_dipole(g.get(), v[0], mask, &out);
    }
    if (s != GEM_OK) return report(s);
    Graph result(out, gem_graph_free);
    CString labeled;
    gem_graph_code(result.get(), &labeled.p);
    std::cout << "code: " << labeled.str() << '\n' << "canonical: " << canonical(result.get()) << '\n';
    return 0;
  }
  if (kind == "switch") {
    if (!need(3)) return kExitUsage;
    gem_graph* parts[2] = {nullptr, nullptr};
    std::size_t count = 0;
    if ((s = gem_graph_switch_pair(g.get(), v[0], v[1], v[2], parts, &count)) != GEM_OK) return report(s);
    for (std::size_t i = 0; i < count; ++i) {
      Graph part(parts[i], gem_graph_free);
      std::cout << "component " << i + 1 << ": " << canonical(part.get()) << '\n';
    }
    CString cls;
    if (gem_graph_classify_rho3(g.get(), v[0], v[1], v[2], &cls.p) == GEM_OK) std::cout << "rho3: " << cls.str() << '\n';
    return 0;
  }
  std::cerr << "gem: unknown move '" << kind << "' (cancel, insert, switch)\n";
  return kExitUsage;
}

int cmd_export(const std::string& code, const std::string& output) {
  gem_status s;
  Graph g = load(code, s);
  if (s != GEM_OK) return report(s);
  CString text;
  if ((s = gem_graph_export_tri(g.get(), &text.p)) != GEM_OK) return report(s);
  if (output.empty()) {
    std::cout << text.str();
    return 0;
  }
  std::ofstream file(output);
  file << text.str();
  file.flush();
  if (!file) {
    std::cerr << "gem: cannot write " << output << '\n';
    return kExitUsage;
  }
  return 0;
}

int cmd_catalog(const std::string& path, bool check) {
  std::size_t records = 0, mismatches = 0;
  if (!check) {
    if (gem_status s = gem_catalog_read(path.c_str(), &records); s != GEM_OK) return report(s);
    std::cout << "records " << records << '\n';
    return 0;
  }
  CString out;
  if (gem_status s = gem_catalog_check(path.c_str(), &records, &mismatches, &out.p); s != GEM_OK) return report(s);
  std::cout << "records " << records << '\n' << out.str() << "mismatches " << mismatches << '\n';
  return mismatches ? kExitMismatch : 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Census and analysis of 4-colored graphs of 3-manifolds with boundary"};
  app.require_subcommand(1);
  unsigned threads = 0;
  app.add_option("--threads", threads, "Worker threads (default: GEM_THREADS or all cores)");

  auto* en = app.add_subcommand("enumerate", "Run a census and write a catalog");
  int vertices = 0;
  bool bipartite = false, non_bipartite = false, rigid = false;
  bool allow_closed = false, allow_uncontracted = false, allow_2_dipoles = false;
  std::string boundary = "any", output;
  en->add_option("--vertices", vertices, "Order 2p")->required()->check(CLI::Range(2, 24));
  auto* bip = en->add_flag("--bipartite", bipartite, "Bipartite graphs only (orientable manifolds)");
  en->add_flag("--non-bipartite", non_bipartite, "Non-bipartite graphs only")->excludes(bip);
  en->add_option("--boundary", boundary, "Boundary class")->check(CLI::IsMember({"any", "toric", "toric-connected"}));
  en->add_flag("--rigid", rigid, "Rigid graphs only (requires --bipartite)")->needs(bip);
  en->add_flag("--allow-closed", allow_closed, "Also keep graphs with empty boundary");
  en->add_flag("--allow-uncontracted", allow_uncontracted, "Also keep graphs that are not contracted");
  en->add_flag("--allow-2-dipoles", allow_2_dipoles, "Also keep graphs with 2-dipoles");
  en->add_option("--output,-o", output, "Catalog file (codes go to stdout otherwise)");

  auto* an = app.add_subcommand("analyze", "Report every invariant of one graph");
  std::string code;
  an->add_option("code", code, "Graph code")->required();

  auto* ve = app.add_subcommand("verify-tables", "Check the bundled fixture and census counts");
  bool extended = false;
  ve->add_flag("--extended", extended, "Include the order 14 and 16 runs (slow)");

  auto* mv = app.add_subcommand("move", "Apply a move: cancel U V | insert AT C... | switch C E F");
  std::string move_kind;
  std::vector<std::string> move_args;
  mv->add_option("code", code, "Graph code")->required();
  mv->add_option("kind", move_kind, "cancel, insert or switch")->required();
  mv->add_option("args", move_args, "Move handle");

  auto* ex = app.add_subcommand("export-tri", "Write the dual pseudo-triangulation");
  ex->add_option("code", code, "Graph code")->required();
  ex->add_option("--output,-o", output, "Output file (stdout otherwise)");

  auto* ca = app.add_subcommand("catalog", "Read a catalog file");
  std::string path;
  bool check = false;
  ca->add_option("path", path, "Catalog file")->required();
  ca->add_flag("--check", check, "Recompute every record from its code");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  if (en->parsed())
    return cmd_enumerate(vertices, bipartite, non_bipartite, boundary, rigid, allow_closed, allow_uncontracted,
                         allow_2_dipoles, output, threads);
  if (an->parsed()) return cmd_analyze(code);
  if (ve->parsed()) return cmd_verify(extended, threads);
  if (mv->parsed()) return cmd_move(code, move_kind, move_args);
  if (ex->parsed()) return cmd_export(code, output);
  if (ca->parsed()) return cmd_catalog(path, check);
  return kExitUsage;
}
