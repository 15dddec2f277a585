#pragma once

#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "bturan/bturan.hpp"
#include "bturan/report.hpp"

// Command-line front end. Exit codes: 0 success, 1 domain error, 2 usage
// error. Graph input is graph6, one graph per line, from FILE or stdin.
namespace bturan::cli {

inline constexpr int kOk = 0;
inline constexpr int kDomainError = 1;
inline constexpr int kUsageError = 2;

struct Streams {
  std::istream& in;
  std::ostream& out;
  std::ostream& err;
};

namespace detail {

inline std::vector<Graph> read_input(const std::string& file, std::istream& in) {
  if (file.empty() || file == "-") return read_graph6_stream(in);
  std::ifstream f(file);
  if (!f) throw InvalidParameter("cannot open input file '" + file + "'");
  return read_graph6_stream(f);
}

struct ConstructArgs {
  std::string family;
  std::optional<int> n, k, ell, s;
  std::string output;
};

inline int construct(const ConstructArgs& a, Streams io) {
  auto need = [&](const std::optional<int>& v, const char* flag) {
    if (!v) throw InvalidParameter(std::string("--family ") + a.family + " requires " + flag);
    return *v;
  };
  FamilyId id{};
  if (a.family == "H") {
    id = {FamilyTag::H, need(a.n, "--n"), need(a.k, "--k")};
  } else if (a.family == "Hstar") {
    id = {FamilyTag::Hstar, need(a.n, "--n"), need(a.k, "--k")};
  } else if (a.family == "F") {
    id = {FamilyTag::F, need(a.n, "--n")};
  } else if (a.family == "star") {
    id = {FamilyTag::Star, need(a.n, "--n")};
  } else if (a.family == "path") {
    id = {FamilyTag::Path, need(a.n, "--n")};
  } else {
    const BroomSpec spec(need(a.ell, "--ell"), need(a.s, "--s"));
    if (a.n && *a.n != spec.order()) {
      throw InvalidParameter("B(" + std::to_string(spec.ell()) + "," + std::to_string(spec.s()) + ") has " +
                             std::to_string(spec.order()) + " vertices, not --n " + std::to_string(*a.n));
    }
    id = {FamilyTag::Broom, spec.order(), 0, spec.ell(), spec.s()};
  }
  const std::string line = graph6_encode(make_family(id)) + "\n";
  if (a.output.empty()) {
    io.out << line;
  } else {
    std::ofstream f(a.output);
    if (!f) throw InvalidParameter("cannot open output file '" + a.output + "'");
    f << line;
  }
  return kOk;
}

}  // namespace detail

inline int run(int argc, const char* const* argv, Streams io) {
  CLI::App app{"Generalized Turan numbers for forbidden brooms: constructions, detection, exhaustive search",
               "bturan"};
  app.require_subcommand(1);

  detail::ConstructArgs con;
  auto* construct = app.add_subcommand("construct", "Emit an extremal-family graph as graph6");
  construct->add_option("--family", con.family, "Graph family")
      ->required()
      ->check(CLI::IsMember({"H", "Hstar", "F", "star", "path", "broom"}));
  construct->add_option("--n", con.n, "Vertex count");
  construct->add_option("--k", con.k, "Clique size for H/Hstar");
  construct->add_option("--ell", con.ell, "Broom path length");
  construct->add_option("--s", con.s, "Broom extra leaves");
  construct->add_option("-o,--output", con.output, "Write to FILE instead of stdout");

  std::string what;
  int r = 2;
  std::string file;
  auto* count = app.add_subcommand("count", "Evaluate e_r or the r-star count on each input graph");
  count->add_option("--what", what, "Objective")->required()->check(CLI::IsMember({"er", "stars"}));
  count->add_option("--r", r, "Exponent / star size")->required();
  count->add_option("file", file, "graph6 input (default stdin)");

  int ell = 0, s = 0;
  bool witness = false;
  auto* detect = app.add_subcommand("detect", "Decide B(ell,s) containment for each input graph");
  detect->add_option("--ell", ell, "Broom path length")->required();
  detect->add_option("--s", s, "Broom extra leaves")->required();
  detect->add_flag("--witness", witness, "JSON output with an embedding when one exists");
  detect->add_option("file", file, "graph6 input (default stdin)");

  int n = 0;
  std::optional<int> filter_ell, filter_s;
  bool connected = false, count_only = false;
  int threads = 1;
  auto* enumerate = app.add_subcommand("enumerate", "List n-vertex graphs up to isomorphism as graph6");
  enumerate->add_option("--n", n, "Vertex count")->required();
  auto* fell = enumerate->add_option("--ell", filter_ell, "Only B(ell,s)-free graphs");
  auto* fs = enumerate->add_option("--s", filter_s, "Broom extra leaves for the filter");
  fell->needs(fs);
  fs->needs(fell);
  enumerate->add_flag("--connected", connected, "Connected graphs only");
  enumerate->add_flag("--count-only", count_only, "Print only the number of graphs");
  enumerate->add_option("--threads", threads, "Worker threads")->check(CLI::PositiveNumber);

  std::string objective, format = "json";
  auto* search = app.add_subcommand("search", "Exhaustive extremal search for one n");
  search->add_option("--ell", ell, "Broom path length")->required();
  search->add_option("--s", s, "Broom extra leaves")->required();
  search->add_option("--n", n, "Vertex count")->required();
  search->add_option("--r", r, "Exponent / star size")->required();
  search->add_option("--objective", objective, "Objective")->required()->check(CLI::IsMember({"er", "stars"}));
  search->add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "text"}));
  search->add_option("--threads", threads, "Worker threads")->check(CLI::PositiveNumber);

  int n_min = 0, n_max = 0;
  auto* verify = app.add_subcommand("verify", "Sweep n and compare both objectives with the predicted families");
  verify->add_option("--ell", ell, "Broom path length")->required();
  verify->add_option("--s", s, "Broom extra leaves")->required();
  verify->add_option("--r", r, "Exponent / star size")->required();
  verify->add_option("--nmin", n_min, "First n")->required();
  verify->add_option("--nmax", n_max, "Last n")->required();
  verify->add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "csv", "text"}));
  verify->add_option("--threads", threads, "Worker threads")->check(CLI::PositiveNumber);

  auto* nbrhood = app.add_subcommand("nbrhood", "Common-neighbourhood hypergraph class sizes per input graph");
  nbrhood->add_option("--r", r, "Uniformity")->required();
  nbrhood->add_option("--ell", ell, "Broom path length")->required();
  nbrhood->add_option("--s", s, "Broom extra leaves")->required();
  nbrhood->add_option("file", file, "graph6 input (default stdin)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, io.out, io.err);
    return code == 0 ? kOk : kUsageError;
  }

  try {
    if (*construct) return detail::construct(con, io);

    if (*count) {
      const Objective obj = parse_objective(what);
      check_objective_power(obj, r);
      for (const Graph& g : detail::read_input(file, io.in)) io.out << evaluate(obj, g, r) << "\n";
      return kOk;
    }

    if (*detect) {
      const BroomSpec spec(ell, s);
      for (const Graph& g : detail::read_input(file, io.in)) {
        if (witness) {
          io.out << report::detect_json(graph6_encode(g), find_broom(g, spec)).dump() << "\n";
        } else {
          io.out << (contains_broom(g, spec) ? "contains" : "free") << "\n";
        }
      }
      return kOk;
    }

    if (*enumerate) {
      EnumerationOptions opt;
      if (filter_ell) opt.filter = BroomSpec(*filter_ell, *filter_s);
      opt.connected_only = connected;
      opt.threads = threads;
      if (count_only) {
        io.out << enumerate_count(n, opt) << "\n";
      } else {
        enumerate_graphs(n, opt, [&](const Graph& g) { io.out << graph6_encode(g) << "\n"; });
      }
      return kOk;
    }

    if (*search) {
      SearchOptions opt;
      opt.threads = threads;
      const auto rep = extremal_search(BroomSpec(ell, s), n, r, parse_objective(objective), opt);
      if (format == "json") {
        io.out << report::to_json(rep).dump(2) << "\n";
      } else {
        report::write_text(io.out, rep);
      }
      return kOk;
    }

    if (*verify) {
      SearchOptions opt;
      opt.threads = threads;
      const auto verdict = verify_theorem(BroomSpec(ell, s), r, n_min, n_max, opt);
      if (format == "json") {
        io.out << report::to_json(verdict, n_min, n_max).dump(2) << "\n";
      } else if (format == "csv") {
        report::write_csv(io.out, verdict);
      } else {
        report::write_text(io.out, verdict);
      }
      return kOk;
    }

    if (*nbrhood) {
      const BroomSpec spec(ell, s);
      for (const Graph& g : detail::read_input(file, io.in)) {
        const auto cls = classify_rsets(g, r, spec);
        io.out << report::to_json(cls, has_berge_path(cls.h2, spec.k() + 1)).dump() << "\n";
      }
      return kOk;
    }
  } catch (const Error& e) {
    io.err << "error: " << e.what() << "\n";
    return kDomainError;
  }
  return kUsageError;
}

}  // namespace bturan::cli
