#include "spectramin/minimize.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <fstream>
#include <limits>
#include <map>
#include <thread>

#include <json.hpp>

#include "spectramin/canonical.hpp"
#include "spectramin/charpoly.hpp"
#include "spectramin/enumerate.hpp"
#include "spectramin/formulas.hpp"
#include "spectramin/spectral.hpp"

namespace spectramin {

namespace {

constexpr double kTieBand = 1e-9;
constexpr double kEnclosureTol = 1e-12;

struct Candidate {
  Graph g;
  double lo, hi;
};

struct Accumulator {
  double best_hi = std::numeric_limits<double>::infinity();
  std::vector<Candidate> cands;
  long long count = 0;

  void shrink() {
    std::erase_if(cands, [&](const Candidate& c) { return c.lo > best_hi + kTieBand; });
  }

  void consider(const Graph& g, double shared_hi) {
    ++count;
    double bail = std::min(best_hi, shared_hi) + kTieBand;
    auto [lo, hi] = rho_enclosure(g, kEnclosureTol, bail);
    if (lo > bail) return;
    cands.push_back({g, lo, hi});
    best_hi = std::min(best_hi, hi);
    if (cands.size() > 512) shrink();
  }
};

}  // namespace

MinimizerReport minimizers(int n, long e, int workers) {
  auto t0 = std::chrono::steady_clock::now();
  EnumPlan plan = plan_enumeration(n, e);
  int nseeds = static_cast<int>(plan.seeds.size());

  std::vector<Accumulator> accs;
  if (workers <= 1 || nseeds <= 1) {
    Accumulator acc;
    for (int i = 0; i < nseeds; ++i)
      run_seed(plan, i, [&](const Graph& g) { acc.consider(g, acc.best_hi); });
    accs.push_back(std::move(acc));
  } else {
    std::atomic<int> next{0};
    // shared upper bound improves pruning; correctness never depends on it
    std::atomic<double> shared_hi{std::numeric_limits<double>::infinity()};
    std::vector<Accumulator> locals(workers);
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w)
      pool.emplace_back([&, w] {
        Accumulator& acc = locals[w];
        for (;;) {
          int i = next.fetch_add(1);
          if (i >= nseeds) break;
          run_seed(plan, i, [&](const Graph& g) {
            acc.consider(g, shared_hi.load(std::memory_order_relaxed));
            double cur = shared_hi.load(std::memory_order_relaxed);
            while (acc.best_hi < cur &&
                   !shared_hi.compare_exchange_weak(cur, acc.best_hi, std::memory_order_relaxed)) {
            }
          });
        }
      });
    for (auto& t : pool) t.join();
    accs = std::move(locals);
  }

  MinimizerReport rep;
  rep.n = n;
  rep.e = e;
  double min_hi = std::numeric_limits<double>::infinity();
  for (const auto& a : accs) {
    rep.graphs_enumerated += a.count;
    min_hi = std::min(min_hi, a.best_hi);
  }
  std::vector<Candidate> survivors;
  for (auto& a : accs)
    for (auto& c : a.cands)
      if (c.lo <= min_hi + kTieBand) survivors.push_back(std::move(c));
  if (survivors.empty()) throw std::logic_error("minimizers: empty candidate set");

  // Exact phase: the certified minimum and all ties, by characteristic
  // polynomial comparison. Independent of float noise and worker count.
  std::vector<CharPoly> polys;
  polys.reserve(survivors.size());
  for (const auto& c : survivors) polys.push_back(char_poly(c.g));
  std::vector<std::size_t> min_set{0};
  for (std::size_t i = 1; i < survivors.size(); ++i) {
    RootOrder ord = compare_largest_roots(polys[i].coeffs, polys[min_set[0]].coeffs);
    if (ord == RootOrder::Less)
      min_set = {i};
    else if (ord == RootOrder::Equal)
      min_set.push_back(i);
  }

  std::vector<std::pair<std::string, int>> labelled;
  for (std::size_t i : min_set) {
    const Graph& g = survivors[i].g;
    labelled.emplace_back(canonical_graph6(g), g.irregularity());
  }
  std::sort(labelled.begin(), labelled.end());
  for (auto& [g6, spread] : labelled) {
    rep.minimizers.push_back(g6);
    rep.degree_spread.push_back(spread);
  }

  // deterministic value: re-enclose the canonically first minimizer
  SpectralResult sr = spectral_radius(from_graph6(rep.minimizers.front()), kEnclosureTol);
  rep.rho_min = sr.rho;
  rep.rho_error_bound = 0.5 * (sr.upper - sr.lower) + 1e-15;

  auto preds = predict(n, e);
  if (!preds.empty()) {
    FormulaCheck fc;
    fc.regime = preds.front().regime;
    fc.predicted = preds.front().rho_min;
    bool all_match = std::fabs(fc.predicted - rep.rho_min) <= 1e-8;
    for (const auto& pr : preds)
      for (const auto& fam : pr.families) fc.families.push_back(fam.to_string());
    for (const auto& g6 : rep.minimizers) {
      Graph g = from_graph6(g6);
      bool any = false;
      for (const auto& pr : preds) any = any || is_predicted_minimizer(g, pr);
      all_match = all_match && any;
    }
    fc.match = all_match;
    rep.formula = fc;
  }

  rep.wall_time_secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return rep;
}

HongResult verify_hong(int n, long e, int workers) {
  HongResult res;
  res.report = minimizers(n, e, workers);
  res.holds = true;
  for (std::size_t i = 0; i < res.report.minimizers.size(); ++i)
    if (res.report.degree_spread[i] > 1) {
      res.holds = false;
      res.witnesses.push_back(res.report.minimizers[i]);
    }
  return res;
}

std::string to_json_line(const MinimizerReport& rep) {
  nlohmann::json j;
  j["n"] = rep.n;
  j["e"] = rep.e;
  j["rho_min"] = rep.rho_min;
  j["rho_error_bound"] = rep.rho_error_bound;
  j["minimizers"] = rep.minimizers;
  j["degree_spread"] = rep.degree_spread;
  if (rep.formula) {
    j["formula"] = {{"regime", rep.formula->regime},
                    {"predicted", rep.formula->predicted},
                    {"families", rep.formula->families},
                    {"match", rep.formula->match}};
  } else {
    j["formula"] = nullptr;
  }
  j["graphs_enumerated"] = rep.graphs_enumerated;
  return j.dump();
}

MinimizerReport report_from_json_line(const std::string& line) {
  nlohmann::json j = nlohmann::json::parse(line);
  MinimizerReport rep;
  rep.n = j.at("n").get<int>();
  rep.e = j.at("e").get<long>();
  rep.rho_min = j.at("rho_min").get<double>();
  rep.rho_error_bound = j.at("rho_error_bound").get<double>();
  rep.minimizers = j.at("minimizers").get<std::vector<std::string>>();
  rep.degree_spread = j.at("degree_spread").get<std::vector<int>>();
  if (!j.at("formula").is_null()) {
    FormulaCheck fc;
    fc.regime = j["formula"].at("regime").get<std::string>();
    fc.predicted = j["formula"].at("predicted").get<double>();
    fc.families = j["formula"].at("families").get<std::vector<std::string>>();
    fc.match = j["formula"].at("match").get<bool>();
    rep.formula = fc;
  }
  rep.graphs_enumerated = j.at("graphs_enumerated").get<long long>();
  return rep;
}

TableResult rho_min_table(const TableOptions& opts) {
  auto t0 = std::chrono::steady_clock::now();
  if (opts.n_max > 9 && opts.budget_secs <= 0)
    throw std::invalid_argument(
        "rho_min_table: sweeps beyond order 9 need an explicit budget "
        "(set SPECTRAMIN_BUDGET_SECS)");
  TableResult result;

  std::map<std::pair<int, long>, std::string> done;
  if (!opts.checkpoint_path.empty()) {
    std::ifstream in(opts.checkpoint_path);
    std::string line;
    while (in && std::getline(in, line)) {
      if (line.empty()) continue;
      MinimizerReport rep = report_from_json_line(line);
      done[{rep.n, rep.e}] = line;
    }
  }

  std::ofstream append;
  if (!opts.checkpoint_path.empty())
    append.open(opts.checkpoint_path, std::ios::app);

  for (int n = 2; n <= opts.n_max; ++n) {
    long emax = static_cast<long>(n) * (n - 1) / 2;
    for (long e = n - 1; e <= emax; ++e) {
      if (opts.e_range && (e < opts.e_range->first || e > opts.e_range->second)) continue;
      auto key = std::make_pair(n, e);
      if (auto it = done.find(key); it != done.end()) {
        result.reports.push_back(report_from_json_line(it->second));
        continue;
      }
      if (opts.budget_secs > 0) {
        double elapsed =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        if (elapsed > opts.budget_secs) {
          result.budget_exceeded = true;
          return result;
        }
      }
      MinimizerReport rep = minimizers(n, e, opts.workers);
      if (append.is_open()) {
        append << to_json_line(rep) << "\n";
        append.flush();
      }
      result.reports.push_back(std::move(rep));
    }
  }
  return result;
}

}  // namespace spectramin
