#pragma once

#include <optional>
#include <string>
#include <vector>

#include "spectramin/graph.hpp"

namespace spectramin {

struct FormulaCheck {
  std::string regime;
  double predicted = 0;
  std::vector<std::string> families;  // canonical family-spec texts
  bool match = false;
};

/// Result of an exhaustive minimum-spectral-radius search over one (n, e).
struct MinimizerReport {
  int n = 0;
  long e = 0;
  double rho_min = 0;
  double rho_error_bound = 0;
  std::vector<std::string> minimizers;  // canonical graph6, sorted; pairwise non-isomorphic
  std::vector<int> degree_spread;       // Delta - delta, parallel to minimizers
  std::optional<FormulaCheck> formula;
  long long graphs_enumerated = 0;
  double wall_time_secs = 0;  // informational; excluded from serialization
};

/// Exhaustively certifies rho_min(n, e) and every graph attaining it.
/// Numeric enclosures prune the stream; exact characteristic-polynomial
/// comparison settles ties, so the minimizer set is exact regardless of
/// the worker count.
MinimizerReport minimizers(int n, long e, int workers = 1);

struct HongResult {
  bool holds = false;
  std::vector<std::string> witnesses;  // canonical graph6 of violators
  MinimizerReport report;
};

/// Hong's almost-regularity property: Delta - delta <= 1 for every
/// minimizer of (n, e).
HongResult verify_hong(int n, long e, int workers = 1);

struct TableOptions {
  int n_max = 7;
  int workers = 1;
  std::optional<std::pair<long, long>> e_range;  // inclusive filter
  std::string checkpoint_path;                   // empty: no checkpoint
  double budget_secs = 0;                        // <= 0: unlimited
};

struct TableResult {
  std::vector<MinimizerReport> reports;
  bool budget_exceeded = false;
};

/// One report per feasible (n, e) with 2 <= n <= n_max, deterministic
/// order; resumable through the JSON-lines checkpoint file.
TableResult rho_min_table(const TableOptions& opts);

/// JSON-lines serialization (schema in docs/report-schema.md). Reports
/// round-trip exactly; wall_time_secs is intentionally not serialized.
std::string to_json_line(const MinimizerReport& report);
MinimizerReport report_from_json_line(const std::string& line);

}  // namespace spectramin
