// pstnet: design and verify perfect state transfer on distance-regular spin
// networks. Subcommands: catalog, solve, verify, sweep, ingest.
//
// Exit codes: 0 success/certified, 1 usage error, 2 infeasible,
// 3 numerical inconsistency.

#include "pstnet/pstnet.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace {

using namespace pstnet;

struct Resolved {
  CatalogEntry entry;  // name "array" for ad-hoc arrays
  Pipeline pl;
};

Resolved resolve(const std::string& name, const std::string& array_text) {
  CatalogEntry entry;
  if (!name.empty() && !array_text.empty())
    throw SchemeError("give either --name or --array, not both");
  if (!name.empty()) {
    auto found = catalog_lookup(name);
    if (!found) throw Error("UnknownName: no catalog entry \"" + name + "\"");
    entry = *found;
  } else if (!array_text.empty()) {
    entry.name = "array";
    entry.array = parse_intersection_array(array_text);
  } else {
    throw SchemeError("one of --name or --array is required");
  }
  Resolved r;
  r.pl = make_pipeline(entry.array);
  r.entry = std::move(entry);
  return r;
}

std::vector<double> parse_couplings(const std::string& text) {
  std::vector<double> J;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    std::size_t pos = 0;
    const double v = std::stod(tok, &pos);
    while (pos < tok.size() && (tok[pos] == ' ' || tok[pos] == '\t')) ++pos;
    if (pos != tok.size()) throw SchemeError("bad coupling value \"" + tok + "\"");
    J.push_back(v);
  }
  if (J.empty()) throw SchemeError("empty coupling list");
  return J;
}

void write_out(const std::string& out_path, const std::string& text) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path);
  if (!out) throw Error("cannot open output file " + out_path);
  out << text;
}

std::string infeasibility_text(const Infeasibility& inf, const SpectralData& spec) {
  std::string s = inf.to_string() + "\n";
  if (inf.kind == Infeasibility::ModulusMismatch) {
    s += "modulus table |P_d(x_k)|:\n";
    for (std::size_t k = 0; k < inf.moduli.size(); ++k)
      s += "  x = " + fmt15(spec.x[k]) + "  |P_d| = " + fmt15(inf.moduli[k]) + "\n";
  }
  return s;
}

int cmd_catalog_list() {
  std::string s;
  for (const auto& e : catalog()) s += e.name + " " + format_intersection_array(e.array) + "\n";
  s += "cycle:<m> {2,1,..,1;1,..,1,2} even cycle C_{2m}, m >= 2\n";
  s += "cube:<d> {d,..,1;1,..,d} hypercube H(d,2), d >= 1\n";
  std::cout << s;
  return 0;
}

int cmd_catalog_show(const std::string& name, bool pi_mode) {
  auto found = catalog_lookup(name);
  if (!found) throw Error("UnknownName: no catalog entry \"" + name + "\"");
  const CatalogEntry& e = *found;
  const Pipeline pl = make_pipeline(e.array);
  std::string s;
  s += "name = " + e.name + "\n";
  s += "array = " + format_intersection_array(e.array) + "\n";
  s += "d = " + std::to_string(pl.params.d()) + "\n";
  s += "v = " + std::to_string(pl.params.v) + "\n";
  s += "kappa = " + format_int_list(pl.params.kappa) + "\n";
  s += "alpha = " + format_int_list(pl.params.alpha) + "\n";
  s += "omega = " + format_int_list(pl.params.omega) + "\n";
  s += std::string("antipodal = ") + (pl.params.antipodal ? "true" : "false") + "\n";
  s += spectral_record(pl.spec);

  if (!e.printed_mu.empty()) {
    // Compare by eigenvalue: the published tables order their own way.
    double worst = 0.0;
    for (const auto& [px, pm] : e.printed_mu) {
      double best = 1e300;
      for (std::size_t k = 0; k < pl.spec.x.size(); ++k)
        if (std::abs(pl.spec.x[k] - px) < 1e-6)
          best = std::min(best, std::abs(pl.spec.m[k] - pm));
      worst = std::max(worst, best);
    }
    s += "printed spectrum max deviation = " + fmt15(worst) + "\n";
    if (worst >= 1e-9) s += "ERRATUM: printed spectral distribution deviates from computed\n";
  }
  if (!e.printed_J.empty()) {
    const auto fs = feasibility(pl.spec, pl.params);
    if (const auto* sign = std::get_if<std::vector<int>>(&fs)) {
      std::vector<double> printed;
      for (const auto& [c0, c1] : e.printed_J) printed.push_back(c0);  // theta = 0
      if (printed.size() == pl.spec.x.size()) {
        const double res = check_solution(pl.spec, *sign, printed, 0.0, 1.0).max_delta;
        s += "printed J residual (theta=0, t0=1) = " + fmt15(res) + "\n";
        if (res >= 1e-9) s += "ERRATUM: printed J values violate the phase equations\n";
      } else {
        s += "printed J list has " + std::to_string(printed.size()) + " of " +
             std::to_string(pl.spec.x.size()) + " couplings\n";
      }
      s += "printed J (theta=0) = " + format_angle_list(printed, pi_mode) + "\n";
    }
  }
  for (const auto& err : e.errata) s += "ERRATUM: " + err.note + "\n";
  std::cout << s;
  return 0;
}

int cmd_solve(const std::string& name, const std::string& array_text, double theta, double t0,
              int depth, const std::string& out_path, bool pi_mode, int max_print) {
  Resolved r = resolve(name, array_text);
  const auto fs = feasibility(r.pl.spec, r.pl.params);
  if (const auto* inf = std::get_if<Infeasibility>(&fs)) {
    std::cout << infeasibility_text(*inf, r.pl.spec);
    return 2;
  }
  const auto& sign = std::get<std::vector<int>>(fs);
  const auto sols = search_branches(r.pl.spec, sign, theta, t0, depth);
  std::string s;
  const int shown = std::min<int>(max_print, static_cast<int>(sols.size()));
  s += "ranked solutions (" + std::to_string(shown) + " of " + std::to_string(sols.size()) +
       ", branch depth " + std::to_string(depth) + ")\n";
  for (int i = 0; i < shown; ++i)
    s += solution_record(r.entry.name, r.pl.params.d(), r.pl.params.v, sols[static_cast<std::size_t>(i)], pi_mode);
  write_out(out_path, s);
  return 0;
}

int cmd_verify(const std::string& name, const std::string& array_text, double theta, double t0,
               const std::string& j_text, bool pi_mode) {
  Resolved r = resolve(name, array_text);
  const int d = r.pl.params.d();
  const auto fs = feasibility(r.pl.spec, r.pl.params);
  std::vector<double> J;
  std::vector<int> sign;
  if (const auto* sp = std::get_if<std::vector<int>>(&fs)) sign = *sp;
  if (!j_text.empty()) {
    J = parse_couplings(j_text);
    if (static_cast<int>(J.size()) != d + 1)
      throw SchemeError("--J needs exactly d+1 = " + std::to_string(d + 1) + " values");
  } else {
    if (const auto* inf = std::get_if<Infeasibility>(&fs)) {
      std::cout << infeasibility_text(*inf, r.pl.spec);
      return 2;
    }
    J = search_branches(r.pl.spec, sign, theta, t0, 1).front().J;
  }

  std::optional<LabeledGraph> graph = catalog_graph(r.entry);
  const FidelityReport rep =
      fidelity_report(r.pl.params, r.pl.polys, r.pl.spec, graph, J, theta, t0);

  std::string s = "verify {\n";
  s += "  name = " + r.entry.name + "\n";
  s += "  theta = " + fmt15(theta) + "\n";
  s += "  t0 = " + fmt15(t0) + "\n";
  s += "  J = " + format_angle_list(J, pi_mode) + "\n";
  s += "  c = " + fmt15(rep.c) + "\n";
  for (std::size_t i = 0; i < rep.engines.size(); ++i)
    s += "  engine " + rep.engines[i] + ": |f_d(t0)| = " + fmt15(rep.abs_fd[i]) +
         "  arg f_d(t0) = " + fmt15(rep.arg_fd[i]) + "\n";
  s += "  max pairwise engine deviation = " + fmt15(rep.max_pairwise) + "\n";
  const double theta_eq = std::remainder(rep.arg_fd[0] + rep.c * t0, 2.0 * std::numbers::pi);
  s += "  transfer phase + c t0 (mod 2pi) = " + fmt15(theta_eq) + "\n";
  if (!sign.empty() && !r.entry.printed_J.empty()) {
    std::vector<double> printed;
    for (const auto& [c0, c1] : r.entry.printed_J) printed.push_back(c0 + c1 * theta);
    if (static_cast<int>(printed.size()) == d + 1) {
      const double res = check_solution(r.pl.spec, sign, printed, theta, 1.0).max_delta;
      s += "  printed J residual (t0=1) = " + fmt15(res) + "\n";
      if (res >= 1e-9) s += "  ERRATUM: printed J values violate the phase equations\n";
    } else {
      s += "  printed J list is incomplete (" + std::to_string(printed.size()) + " of " +
           std::to_string(d + 1) + ")\n";
    }
  }
  for (const auto& err : r.entry.errata) s += "  ERRATUM: " + err.note + "\n";
  s += std::string("  certified = ") + (rep.certified ? "true" : "false") + "\n";
  s += "}\n";
  std::cout << s;
  return rep.certified ? 0 : 2;
}

int cmd_sweep(const std::string& name, const std::string& array_text, double theta, double t0,
              const std::string& j_text, double t_max, int samples, const std::string& out_path) {
  Resolved r = resolve(name, array_text);
  std::vector<double> J;
  if (!j_text.empty()) {
    J = parse_couplings(j_text);
    if (static_cast<int>(J.size()) != r.pl.params.d() + 1)
      throw SchemeError("--J needs exactly d+1 values");
  } else {
    const auto fs = feasibility(r.pl.spec, r.pl.params);
    if (const auto* inf = std::get_if<Infeasibility>(&fs)) {
      std::cout << infeasibility_text(*inf, r.pl.spec);
      return 2;
    }
    J = search_branches(r.pl.spec, std::get<std::vector<int>>(fs), theta, t0, 1).front().J;
  }
  const auto rows = sweep(r.pl.params, r.pl.polys, J, t_max, samples);
  std::string s = std::string(kSweepCsvHeader) + "\n";
  for (const auto& row : rows)
    s += fmt15(row.t) + "," + fmt15(row.abs_fd) + "," + fmt15(row.arg_fd) + "," +
         fmt15(row.abs_f0) + "\n";
  write_out(out_path, s);
  return 0;
}

int cmd_ingest(const std::string& edges_path) {
  std::ifstream in(edges_path);
  if (!in) throw SchemeError("cannot open edge list " + edges_path);
  std::vector<std::string> warnings;
  const LabeledGraph g = ingest_edge_list(in, &warnings);
  for (const auto& w : warnings) std::cout << "warning: " << w << "\n";
  std::cout << "vertices = " << g.n << "\n";

  const auto dr = check_distance_regular(g);
  if (const auto* wit = std::get_if<DRWitness>(&dr)) {
    std::cout << wit->to_string() << "\n";
    return 2;
  }
  const auto& arr = std::get<IntersectionArray>(dr);
  std::cout << "intersection array = " << format_intersection_array(arr) << "\n";
  const Pipeline pl = make_pipeline(arr);
  std::cout << "kappa = " << format_int_list(pl.params.kappa) << "\n";
  std::cout << "antipodal = " << (pl.params.antipodal ? "true" : "false") << "\n";
  if (!pl.params.antipodal) {
    std::cout << "kappa_d = " << pl.params.kappa.back()
              << " > 1: PST pipeline declined (transfer target is not a single vertex)\n";
    return 2;
  }
  const auto fs = feasibility(pl.spec, pl.params);
  if (const auto* inf = std::get_if<Infeasibility>(&fs)) {
    std::cout << infeasibility_text(*inf, pl.spec);
    return 2;
  }
  std::cout << "feasible: |P_d(x_k)| = 1 for all k; sign pattern s = "
            << format_int_list(std::get<std::vector<int>>(fs)) << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"design and verify perfect state transfer on distance-regular spin networks"};
  app.require_subcommand(1);

  std::string name, array_text, j_text, out_path, show_name, edges_path;
  double theta = 0.0, t0 = 1.0, t_max = 2.0;
  int depth = 1, samples = 201, max_print = 32;
  bool pi_mode = false;

  auto* cat = app.add_subcommand("catalog", "list or inspect the named catalog");
  cat->require_subcommand(1);
  cat->add_subcommand("list", "list entries and generators");
  auto* show = cat->add_subcommand("show", "print array, parameters, spectrum, and published-data comparison");
  show->add_option("name", show_name, "entry name")->required();
  show->add_flag("--pi", pi_mode, "render angles as exact multiples of pi when possible");

  auto* solve = app.add_subcommand("solve", "solve the phase equations and rank branch solutions");
  solve->add_option("--name", name, "catalog entry or generator");
  solve->add_option("--array", array_text, "intersection array \"b0,b1,..;c1,c2,..\"");
  solve->add_option("--theta", theta, "free transfer phase, radians");
  solve->add_option("--t0", t0, "transfer time")->check(CLI::PositiveNumber);
  solve->add_option("--branch-depth", depth, "branch integers range [-L, L]");
  solve->add_option("--out", out_path, "write the report to a file");
  solve->add_option("--max-print", max_print, "solutions to print");
  solve->add_flag("--pi", pi_mode, "render angles as exact multiples of pi when possible");

  auto* verify = app.add_subcommand("verify", "certify |f_d(t0)| = 1 by all applicable engines");
  verify->add_option("--name", name, "catalog entry or generator");
  verify->add_option("--array", array_text, "intersection array text");
  verify->add_option("--theta", theta, "free transfer phase, radians");
  verify->add_option("--t0", t0, "transfer time")->check(CLI::PositiveNumber);
  verify->add_option("--J", j_text, "couplings J_0..J_d (comma separated); solved when absent");
  verify->add_flag("--pi", pi_mode, "render angles as exact multiples of pi when possible");

  auto* sweep_cmd = app.add_subcommand("sweep", "emit t,abs_f_d,arg_f_d,abs_f_0 CSV samples");
  sweep_cmd->add_option("--name", name, "catalog entry or generator");
  sweep_cmd->add_option("--array", array_text, "intersection array text");
  sweep_cmd->add_option("--theta", theta, "free transfer phase, radians");
  sweep_cmd->add_option("--t0", t0, "transfer time")->check(CLI::PositiveNumber);
  sweep_cmd->add_option("--J", j_text, "couplings; solved when absent");
  sweep_cmd->add_option("--t-max", t_max, "sweep end time");
  sweep_cmd->add_option("--samples", samples, "uniform sample count")->check(CLI::PositiveNumber);
  sweep_cmd->add_option("--out", out_path, "write CSV to a file");

  auto* ingest = app.add_subcommand("ingest", "read an edge list, detect distance-regularity, report feasibility");
  ingest->add_option("--edges", edges_path, "edge list file, lines \"u v\"")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    if (cat->parsed()) {
      if (cat->get_subcommand("list")->parsed()) return cmd_catalog_list();
      return cmd_catalog_show(show_name, pi_mode);
    }
    if (solve->parsed())
      return cmd_solve(name, array_text, theta, t0, depth, out_path, pi_mode, max_print);
    if (verify->parsed()) return cmd_verify(name, array_text, theta, t0, j_text, pi_mode);
    if (sweep_cmd->parsed())
      return cmd_sweep(name, array_text, theta, t0, j_text, t_max, samples, out_path);
    if (ingest->parsed()) return cmd_ingest(edges_path);
  } catch (const SpectraError& e) {
    std::cerr << "numerical inconsistency: " << e.what() << "\n";
    return 3;
  } catch (const DynamicsError& e) {
    std::cerr << "numerical inconsistency: " << e.what() << "\n";
    return 3;
  } catch (const GraphError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}
