// Command-line front end: compute spectral quantities, build the named
// graph families, apply spectral-monotone transforms, and run exhaustive
// minimum-spectral-radius searches with Hong-property verification.
//
// Exit codes: 0 success, 1 usage error, 2 infeasible parameters,
// 3 budget exceeded, 4 verification failure (a claimed property fails).

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "spectramin/canonical.hpp"
#include "spectramin/charpoly.hpp"
#include "spectramin/constructions.hpp"
#include "spectramin/enumerate.hpp"
#include "spectramin/formulas.hpp"
#include "spectramin/minimize.hpp"
#include "spectramin/spectral.hpp"
#include "spectramin/transforms.hpp"

namespace {

using namespace spectramin;

constexpr int kExitUsage = 1;
constexpr int kExitInfeasible = 2;
constexpr int kExitBudget = 3;
constexpr int kExitVerification = 4;

Graph read_graph_arg(const std::string& arg) {
  if (!arg.empty() && arg[0] == '@') return read_graph6_file(arg.substr(1));
  return from_graph6(arg);
}

double env_budget_secs() {
  const char* v = std::getenv("SPECTRAMIN_BUDGET_SECS");
  return v ? std::atof(v) : 0.0;
}

std::string fmt(double v) {
  std::ostringstream os;
  os.precision(12);
  os << v;
  return os.str();
}

int cmd_rho(const std::string& graph_arg, double tol, const std::string& format) {
  Graph g = read_graph_arg(graph_arg);
  SpectralResult sr = g.is_connected() ? spectral_radius(g, tol) : spectral_radius_any(g, tol);
  double cr = g.is_connected() ? char_rho(g) : 0;
  double lb = rho_lower_bound(g);
  if (format == "json") {
    nlohmann::json j;
    j["graph6"] = to_graph6(g);
    j["n"] = g.order();
    j["e"] = g.edge_count();
    j["rho"] = sr.rho;
    j["residual"] = sr.residual;
    j["iterations"] = sr.iterations;
    j["eigenvector"] = sr.eigenvector;
    j["char_rho"] = g.is_connected() ? nlohmann::json(cr) : nlohmann::json(nullptr);
    j["lower_bound_2e_over_n"] = lb;
    j["irregularity"] = g.irregularity();
    std::cout << j.dump() << "\n";
  } else if (format == "csv") {
    std::cout << "graph6,n,e,rho,char_rho,lower_bound_2e_over_n,irregularity\n";
    std::cout << to_graph6(g) << "," << g.order() << "," << g.edge_count() << "," << fmt(sr.rho)
              << "," << (g.is_connected() ? fmt(cr) : "") << "," << fmt(lb) << ","
              << g.irregularity() << "\n";
  } else {
    std::cout << "graph6        " << to_graph6(g) << "\n";
    std::cout << "n, e          " << g.order() << ", " << g.edge_count() << "\n";
    std::cout << "rho           " << fmt(sr.rho) << "  (residual " << sr.residual << ", "
              << sr.iterations << " iterations)\n";
    if (g.is_connected()) std::cout << "char_rho      " << fmt(cr) << "\n";
    std::cout << "2e/n bound    " << fmt(lb) << "\n";
    std::cout << "irregularity  " << g.irregularity() << "\n";
    std::cout << "eigenvector  ";
    for (double x : sr.eigenvector) std::cout << " " << fmt(x);
    std::cout << "\n";
  }
  return 0;
}

int cmd_construct(const std::string& spec_text) {
  Graph g = construct(FamilySpec::parse(spec_text));
  std::cout << to_graph6(g) << "\n";
  return 0;
}

int cmd_transform(const std::string& graph_arg, const std::string& spec_text,
                  const std::string& format) {
  Graph g = read_graph_arg(graph_arg);
  auto colon = spec_text.find(':');
  if (colon == std::string::npos) throw std::invalid_argument("transform: expected tag:params");
  std::string tag = spec_text.substr(0, colon);
  std::map<std::string, int> kv;
  {
    std::string rest = spec_text.substr(colon + 1);
    std::size_t pos = 0;
    while (pos < rest.size()) {
      auto comma = rest.find(',', pos);
      std::string item = rest.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
      auto eq = item.find('=');
      if (eq == std::string::npos) throw std::invalid_argument("transform: bad parameter " + item);
      kv[item.substr(0, eq)] = std::stoi(item.substr(eq + 1));
      if (comma == std::string::npos) break;
      pos = comma + 1;
    }
  }
  auto need = [&](const std::string& k) {
    auto it = kv.find(k);
    if (it == kv.end()) throw std::invalid_argument("transform: missing parameter " + k);
    return it->second;
  };
  Graph out = g;
  bool hypothesis = false, has_hypothesis = false;
  if (tag == "rotate") {
    RotationSpec rs{need("r"), need("s"), need("t")};
    out = rotate_edge(g, rs);
    hypothesis = hypothesis_rotation(g, rs);
    has_hypothesis = true;
  } else if (tag == "switch") {
    SwitchSpec ss{need("s"), need("t"), need("u"), need("v")};
    out = local_switch(g, ss);
    hypothesis = hypothesis_switch(g, ss);
    has_hypothesis = true;
  } else if (tag == "kelmans") {
    out = kelmans(g, need("u"), need("v"));
  } else if (tag == "subdivide") {
    out = subdivide_internal(g, need("v"), need("w"));
  } else {
    throw std::invalid_argument("transform: unknown tag " + tag);
  }
  double rho_before = spectral_radius_any(g).rho;
  double rho_after = spectral_radius_any(out).rho;
  if (format == "json") {
    nlohmann::json j;
    j["before"] = {{"graph6", to_graph6(g)}, {"rho", rho_before}};
    j["after"] = {{"graph6", to_graph6(out)}, {"rho", rho_after}};
    j["connected_after"] = out.is_connected();
    if (has_hypothesis) j["hypothesis"] = hypothesis;
    std::cout << j.dump() << "\n";
  } else {
    std::cout << to_graph6(out) << "\n";
    std::cout << "rho " << fmt(rho_before) << " -> " << fmt(rho_after)
              << (out.is_connected() ? "" : "  (disconnected)") << "\n";
    if (has_hypothesis) std::cout << "hypothesis " << (hypothesis ? "holds" : "fails") << "\n";
  }
  return 0;
}

int cmd_minimize(int n, long e, int workers) {
  MinimizerReport rep = minimizers(n, e, workers);
  std::cout << to_json_line(rep) << "\n";
  std::cerr << "# " << rep.graphs_enumerated << " graphs in " << rep.wall_time_secs << "s\n";
  return 0;
}

void print_csv_summary(std::ostream& os, const std::vector<MinimizerReport>& reports) {
  os << "n,e,rho_min,n_minimizers,max_irregularity,formula_regime,formula_match\n";
  for (const auto& r : reports) {
    int max_ir = 0;
    for (int s : r.degree_spread) max_ir = std::max(max_ir, s);
    os << r.n << "," << r.e << "," << fmt(r.rho_min) << "," << r.minimizers.size() << "," << max_ir
       << "," << (r.formula ? r.formula->regime : "") << ","
       << (r.formula ? (r.formula->match ? "true" : "false") : "") << "\n";
  }
}

int cmd_table(int nmax, long emin, long emax, int workers, const std::string& checkpoint,
              const std::string& format) {
  TableOptions opts;
  opts.n_max = nmax;
  opts.workers = workers;
  if (emin >= 0 || emax >= 0)
    opts.e_range = {emin >= 0 ? emin : 0, emax >= 0 ? emax : (static_cast<long>(nmax) * nmax)};
  opts.checkpoint_path = checkpoint;
  opts.budget_secs = env_budget_secs();
  TableResult res = rho_min_table(opts);
  if (format == "csv") {
    print_csv_summary(std::cout, res.reports);
  } else {
    for (const auto& r : res.reports) std::cout << to_json_line(r) << "\n";
  }
  if (res.budget_exceeded) {
    std::cerr << "# budget exceeded, table incomplete\n";
    return kExitBudget;
  }
  return 0;
}

int cmd_verify(int nmax, int workers) {
  TableOptions opts;
  opts.n_max = nmax;
  opts.workers = workers;
  opts.budget_secs = env_budget_secs();
  TableResult res = rho_min_table(opts);
  bool hong_ok = true, formula_ok = true;
  for (const auto& r : res.reports) {
    int max_ir = 0;
    for (int s : r.degree_spread) max_ir = std::max(max_ir, s);
    bool hong = max_ir <= 1;
    hong_ok = hong_ok && hong;
    std::cout << "n=" << r.n << " e=" << r.e << " rho_min=" << fmt(r.rho_min)
              << " minimizers=" << r.minimizers.size() << " hong=" << (hong ? "ok" : "VIOLATED");
    if (r.formula) {
      formula_ok = formula_ok && r.formula->match;
      std::cout << " formula=" << r.formula->regime << (r.formula->match ? " ok" : " MISMATCH");
    }
    std::cout << "\n";
    if (!hong)
      for (std::size_t i = 0; i < r.minimizers.size(); ++i)
        if (r.degree_spread[i] > 1)
          std::cout << "  witness " << r.minimizers[i] << " spread " << r.degree_spread[i] << "\n";
  }
  if (res.budget_exceeded) {
    std::cerr << "# budget exceeded, verification incomplete\n";
    return kExitBudget;
  }
  if (!hong_ok || !formula_ok) return kExitVerification;
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"minimum spectral radius toolkit"};
  app.require_subcommand(1);

  std::string graph_arg, spec_text, format = "text", checkpoint;
  double tol = 1e-12;
  int n = 0, workers = 1, nmax = 7;
  long e = 0, emin = -1, emax = -1;

  auto* rho = app.add_subcommand("rho", "spectral radius, principal eigenvector, char_rho");
  rho->add_option("graph", graph_arg, "graph6 string or @file")->required();
  rho->add_option("--tol", tol, "enclosure tolerance");
  rho->add_option("--format", format, "json | csv | text");

  auto* cons = app.add_subcommand("construct", "build a named family, print graph6");
  cons->add_option("spec", spec_text, "family spec, e.g. g2g3even:n=8,p=1")->required();

  auto* trans = app.add_subcommand("transform", "apply rotate/switch/kelmans/subdivide");
  trans->add_option("graph", graph_arg, "graph6 string or @file")->required();
  trans->add_option("spec", spec_text, "e.g. rotate:r=1,s=0,t=3")->required();
  trans->add_option("--format", format, "json | text");

  auto* mini = app.add_subcommand("minimize", "exhaustive minimizers for one (n, e)");
  mini->add_option("--n", n, "vertex count")->required();
  mini->add_option("--e", e, "edge count")->required();
  mini->add_option("--workers", workers, "worker threads");

  auto* table = app.add_subcommand("table", "rho_min reports for all feasible (n, e)");
  table->add_option("--nmax", nmax, "maximum order")->required();
  table->add_option("--emin", emin, "edge filter lower bound");
  table->add_option("--emax", emax, "edge filter upper bound");
  table->add_option("--workers", workers, "worker threads");
  table->add_option("--checkpoint", checkpoint, "JSON-lines checkpoint path");
  table->add_option("--format", format, "json | csv");

  auto* verify = app.add_subcommand("verify", "Hong property + formula cross-checks up to nmax");
  verify->add_option("--nmax", nmax, "maximum order")->required();
  verify->add_option("--workers", workers, "worker threads");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& err) {
    int code = app.exit(err);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (rho->parsed()) return cmd_rho(graph_arg, tol, format);
    if (cons->parsed()) return cmd_construct(spec_text);
    if (trans->parsed()) return cmd_transform(graph_arg, spec_text, format);
    if (mini->parsed()) return cmd_minimize(n, e, workers);
    if (table->parsed())
      return cmd_table(nmax, emin, emax, workers, checkpoint, format == "text" ? "json" : format);
    if (verify->parsed()) return cmd_verify(nmax, workers);
  } catch (const FindingError& ex) {
    std::cerr << "verification failure: " << ex.what() << "\n";
    return kExitVerification;
  } catch (const std::invalid_argument& ex) {
    std::cerr << "infeasible: " << ex.what() << "\n";
    return kExitInfeasible;
  } catch (const std::exception& ex) {
    std::cerr << "error: " << ex.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
