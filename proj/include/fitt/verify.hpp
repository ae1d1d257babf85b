#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "fitt/rees.hpp"

namespace fitt {

/// Which Fitting index of Ω¹ of the Rees ring gets compared with the target
/// ideal. `paper` is n+s+l-1, `corrected` is n+l-s+1 (they agree at s = 1),
/// `explicit_index` uses a fixed integer. Charts use the global index - 1.
struct FittingIndexPolicy {
  enum class Formula { paper, corrected, explicit_index };

  Formula formula = Formula::corrected;
  long index = 0;

  static FittingIndexPolicy paper() { return {Formula::paper, 0}; }
  static FittingIndexPolicy corrected() { return {Formula::corrected, 0}; }
  static FittingIndexPolicy explicit_at(long i) { return {Formula::explicit_index, i}; }

  long global_index(const ReesParams& params) const;
  /// "paper", "corrected" or "explicit".
  std::string name() const;
};

/// "paper", "corrected", or an integer (explicit index).
FittingIndexPolicy parse_policy(const std::string& text);

enum class Status { pass, fail, skipped };
std::string to_string(Status status);

struct ChartComparison {
  int r = 0;
  bool equal = false;
  std::int64_t ms = 0;
};

struct VerificationReport {
  ReesParams params;
  FittingIndexPolicy policy;
  long index_used = 0;
  std::vector<ChartComparison> charts;
  bool micali_ok = false;
  /// Unset when the corresponding check was not run.
  std::optional<bool> corollary_ok;
  std::optional<bool> image_ok;
  Status status = Status::skipped;
  std::string reason;

  /// pass iff every chart is equal and every check that ran succeeded.
  void finalize();
};

/// Per chart r in s..n: does Fitt_index(Ω¹) agree with the target ideal
/// after inverting T_r? Also checks the Micali kernel against J. Leaves the
/// exceptional-chart and image checks unset.
VerificationReport check_fitting_charts(const ReesParams& params, const FittingIndexPolicy& policy);

struct ExceptionalChart {
  int r = 0;
  Ideal fitting;
  Ideal expected;
  bool ok = false;
};

/// Chart-level Fitting ideals at index_used - 1 against the unit ideal
/// (r <= l) or (x_r, U_s..U_l) + chart relations (r > l).
std::vector<ExceptionalChart> exceptional_charts(const ReesParams& params, const FittingIndexPolicy& policy);
bool check_exceptional_charts(const ReesParams& params, const FittingIndexPolicy& policy);

/// Contracts the chart Fitting ideals (r > l) to F_p[x1..xn], intersects
/// them and compares with the center a.
bool check_image_equals_center(const ReesParams& params, const FittingIndexPolicy& policy);

/// Chart comparison, Micali check, exceptional charts and image in one report.
VerificationReport verify_tuple(const ReesParams& params, const FittingIndexPolicy& policy);

/// Outcome of the non-normality probe on the chart x3^p T of the blow-up of
/// A^4 along (x3^p, x4^(p^2)).
struct NonNormalProbe {
  bool chart_matches = false;  ///< chart relations = (U4*x3^p - x4^(p^2))
  bool integral = false;       ///< x4^(p^2) - U4*x3^p lies in the relations
  bool outside = false;        ///< x4^p not in (x3) + relations
  bool sanity = false;         ///< x4^(p^2) in (x3^p) + relations

  bool ok() const { return chart_matches && integral && outside && sanity; }
};

/// With `free_variables` false, x1 and x2 are left out of the ambient ring.
NonNormalProbe probe_nonnormal(std::uint64_t p, bool free_variables = true);
bool check_nonnormal(std::uint64_t p);

/// Reports in input order; invalid tuples come back skipped with a reason.
/// Tuples are spread over `workers` OpenMP threads (0 = all available).
std::vector<VerificationReport> run_grid(const std::vector<ReesParams>& grid, const FittingIndexPolicy& policy,
                                         int workers = 0);
/// Single-threaded reference for run_grid().
std::vector<VerificationReport> run_grid_serial(const std::vector<ReesParams>& grid,
                                                const FittingIndexPolicy& policy);

/// One parameter tuple per line in flag syntax; '#' starts a comment.
/// Syntax errors carry the line number in the message.
std::vector<ReesParams> parse_grid(std::istream& in);

/// Compact JSON object following the report schema.
std::string report_json(const VerificationReport& report, int indent = -1);
std::string reports_json(const std::vector<VerificationReport>& reports, int indent = -1);
/// Fixed-width text table, one row per report, no timings.
std::string summary_table(const std::vector<VerificationReport>& reports);

/// Randomized invariant suites shared by the tests and `verify props`.
struct PropertyOptions {
  std::uint64_t seed = 0x5eed2024;
  std::size_t min_spoly_checks = 200;
  std::size_t fitting_instances = 100;
  std::size_t derivative_pairs = 200;
};

struct PropertyCounts {
  std::size_t spoly_checks = 0;
  std::size_t fitting_instances = 0;
  std::size_t chain_checks = 0;
  std::size_t shift_checks = 0;
  std::size_t independence_checks = 0;
  std::size_t base_change_checks = 0;
  std::size_t leibniz_checks = 0;
  std::size_t frobenius_checks = 0;
  std::vector<std::string> failures;
};

PropertyCounts run_property_suites(const PropertyOptions& options);

}  // namespace fitt
