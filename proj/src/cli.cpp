#include "pgi/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "pgi/driver.hpp"

namespace pgi {

namespace {

int max_order_guard() {
  const char* env = std::getenv("PGI_MAX_ORDER");
  if (!env) return 256;
  char* end = nullptr;
  long v = std::strtol(env, &end, 10);
  if (end == env || *end != '\0' || v < 1) return 256;
  return static_cast<int>(v);
}

GroupTable read_group_guarded(const std::string& path) {
  GroupTable g = read_group_file(path);
  int guard = max_order_guard();
  if (g.order() > guard)
    throw Error(ErrKind::BadInput, "group order " + std::to_string(g.order()) +
                                       " exceeds PGI_MAX_ORDER=" + std::to_string(guard));
  return g;
}

std::optional<Route> parse_route(const std::string& route) {
  if (route.empty()) return std::nullopt;
  if (route == "series") return Route::Series;
  if (route == "gen") return Route::GenEnum;
  throw Error(ErrKind::BadParameters, "unknown route '" + route + "'");
}

Family parse_family(const std::string& name) {
  if (name == "cyclic") return Family::Cyclic;
  if (name == "elementary-abelian") return Family::ElementaryAbelian;
  if (name == "dihedral") return Family::Dihedral;
  if (name == "quaternion") return Family::Quaternion;
  if (name == "heisenberg") return Family::Heisenberg;
  if (name == "direct-product") return Family::DirectProduct;
  throw Error(ErrKind::BadParameters, "unknown family '" + name + "'");
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream f(path);
  if (!f) throw Error(ErrKind::BadInput, "cannot write " + path);
  f << text;
}

void log_route(std::ostream& err, const RouteDecision& d) {
  err << "route: " << (d.chosen == Route::Series ? "series" : "gen") << " (n=" << d.n
      << ", p=" << d.p << ", alpha=" << d.alpha << (d.forced ? ", forced" : "") << ")\n";
}

CompositionSeries series_at(const std::vector<CompositionSeries>& all, int index) {
  if (index < 1 || index > static_cast<int>(all.size()))
    throw Error(ErrKind::BadInput,
                "series index " + std::to_string(index) + " out of range 1.." +
                    std::to_string(all.size()));
  return all[index - 1];
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"finite group isomorphism and canonical forms from multiplication tables"};
  app.name("pgi");
  app.require_subcommand(1);

  std::string file_a, file_b, out_path, route_name, family_name, factors_csv, graph_file;
  bool witness = false, want_count = false, want_list = false;
  int series_index = 1;
  int param_p = 0, param_k = 0;
  std::uint64_t seed = 0;

  CLI::App* c_validate = app.add_subcommand("validate", "check the group axioms on a table");
  c_validate->add_option("file", file_a)->required();

  CLI::App* c_profile = app.add_subcommand("profile", "order, smallest prime, p-group data");
  c_profile->add_option("file", file_a)->required();

  CLI::App* c_iso = app.add_subcommand("iso", "decide isomorphism of two groups");
  c_iso->add_option("fileA", file_a)->required();
  c_iso->add_option("fileB", file_b)->required();
  c_iso->add_option("--route", route_name, "series|gen");
  c_iso->add_flag("--witness", witness, "print the isomorphism as 'i -> j' lines");

  CLI::App* c_canon = app.add_subcommand("canon", "canonical multiplication table");
  c_canon->add_option("file", file_a)->required();
  c_canon->add_option("--route", route_name, "series|gen");

  CLI::App* c_series = app.add_subcommand("series", "composition series of a group");
  c_series->add_option("file", file_a)->required();
  c_series->add_flag("--count", want_count);
  c_series->add_flag("--list", want_list);

  CLI::App* c_export = app.add_subcommand("export-graph", "write X(S) for one series");
  c_export->add_option("file", file_a)->required();
  c_export->add_option("--series", series_index, "1-based series index")->required();
  c_export->add_option("--out", out_path)->required();

  CLI::App* c_cgraph = app.add_subcommand("canon-graph", "canonical encoding of a colored graph");
  c_cgraph->add_option("graphfile", graph_file)->required();

  CLI::App* c_cseries = app.add_subcommand("canon-series", "canonical form of one series");
  c_cseries->add_option("file", file_a)->required();
  c_cseries->add_option("--series", series_index, "1-based series index")->required();

  CLI::App* c_gen = app.add_subcommand("gen", "generate a family group table");
  c_gen->add_option("--family", family_name,
                    "cyclic|elementary-abelian|dihedral|quaternion|heisenberg|direct-product")
      ->required();
  c_gen->add_option("--p", param_p);
  c_gen->add_option("--k", param_k);
  c_gen->add_option("--factors", factors_csv, "comma-separated cyclic orders");
  c_gen->add_option("--out", out_path)->required();

  CLI::App* c_relabel = app.add_subcommand("relabel", "apply a seeded random relabeling");
  c_relabel->add_option("file", file_a)->required();
  c_relabel->add_option("--seed", seed)->required();
  c_relabel->add_option("--out", out_path)->required();

  std::vector<std::string> argv_storage = args;
  std::vector<char*> argv;
  std::string prog = "pgi";
  argv.push_back(prog.data());
  for (std::string& a : argv_storage) argv.push_back(a.data());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << e.what() << '\n';
    return 2;
  }

  try {
    if (*c_validate) {
      GroupTable g = read_group_guarded(file_a);
      out << "valid group of order " << g.order() << ", identity " << g.identity() << '\n';
      return 0;
    }
    if (*c_profile) {
      GroupProfile p = profile(read_group_guarded(file_a));
      out << "order " << p.order << '\n';
      out << "smallest_prime " << p.smallest_prime << '\n';
      out << "is_p_group " << (p.is_p_group ? "true" : "false") << '\n';
      if (p.is_p_group) out << "prime_power_exponent " << p.prime_power_exponent << '\n';
      return 0;
    }
    if (*c_iso) {
      GroupTable g = read_group_guarded(file_a);
      GroupTable h = read_group_guarded(file_b);
      std::optional<Route> force = parse_route(route_name);
      if (g.order() >= 2) log_route(err, decide_route(profile(g), force));
      std::optional<IsoMap> phi = iso(g, h, force);
      if (!phi) {
        out << "not isomorphic\n";
        return 1;
      }
      out << "isomorphic\n";
      if (witness)
        for (int x = 1; x <= g.order(); ++x) out << x << " -> " << phi->forward[x] << '\n';
      return 0;
    }
    if (*c_canon) {
      GroupTable g = read_group_guarded(file_a);
      std::optional<Route> force = parse_route(route_name);
      if (g.order() >= 2) log_route(err, decide_route(profile(g), force));
      write_group_file(out, canon(g, force));
      return 0;
    }
    if (*c_series) {
      if (want_count == want_list)
        throw Error(ErrKind::BadParameters, "pass exactly one of --count / --list");
      GroupTable g = read_group_guarded(file_a);
      std::vector<CompositionSeries> all = enumerate_composition_series(g);
      if (want_count)
        out << all.size() << '\n';
      else
        for (const CompositionSeries& s : all) out << series_to_string(s) << '\n';
      return 0;
    }
    if (*c_export) {
      GroupTable g = read_group_guarded(file_a);
      std::vector<CompositionSeries> all = enumerate_composition_series(g);
      CompositionSeries s = series_at(all, series_index);
      write_file(out_path, colored_graph_text(build_X(s)));
      return 0;
    }
    if (*c_cgraph) {
      std::ifstream in(graph_file);
      if (!in) throw Error(ErrKind::BadInput, "cannot open " + graph_file);
      ColoredGraph g = read_colored_graph(in);
      long long guard = max_order_guard();
      if (g.vertex_count > 7 * guard * guard)
        throw Error(ErrKind::BadInput, "graph too large for PGI_MAX_ORDER");
      out << canonical_form(g).hex() << '\n';
      return 0;
    }
    if (*c_cseries) {
      GroupTable g = read_group_guarded(file_a);
      std::vector<CompositionSeries> all = enumerate_composition_series(g);
      CompositionSeries s = series_at(all, series_index);
      out << canon_series(s).to_text();
      return 0;
    }
    if (*c_gen) {
      FamilySpec spec{parse_family(family_name), param_p, param_k, {}};
      if (!factors_csv.empty()) {
        std::istringstream is(factors_csv);
        std::string tok;
        while (std::getline(is, tok, ',')) spec.factors.push_back(std::stoi(tok));
      }
      GroupTable g = generate_family(spec);
      int guard = max_order_guard();
      if (g.order() > guard)
        throw Error(ErrKind::BadParameters, "generated order exceeds PGI_MAX_ORDER");
      write_file(out_path, group_file_text(g));
      out << "wrote order-" << g.order() << " table to " << out_path << '\n';
      return 0;
    }
    if (*c_relabel) {
      GroupTable g = read_group_guarded(file_a);
      GroupTable g2 = relabel(g, random_permutation(g.order(), seed));
      write_file(out_path, group_file_text(g2));
      out << "wrote relabeled table to " << out_path << '\n';
      return 0;
    }
  } catch (const Error& e) {
    err << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }
  return 2;
}

}  // namespace pgi
