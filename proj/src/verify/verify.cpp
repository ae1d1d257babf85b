#include <chrono>

#include "fitt/errors.hpp"
#include "fitt/kaehler.hpp"
#include "fitt/verify.hpp"

namespace fitt {

namespace {

struct ChartFitting {
  ChartAlgebra chart;
  Ideal fitting;
};

std::vector<ChartFitting> chart_fittings(const ReesParams& params, long chart_index) {
  PowerIdeal a = params.power_ideal();
  std::vector<ChartFitting> out;
  for (int r = a.s; r <= a.n; ++r) {
    ChartAlgebra chart = chart_presentation(a, r);
    Ideal fitting = kaehler_fitting(chart.algebra, chart_index);
    out.push_back(ChartFitting{std::move(chart), std::move(fitting)});
  }
  return out;
}

std::vector<ExceptionalChart> compare_charts(const ReesParams& params, const std::vector<ChartFitting>& fittings) {
  std::vector<ExceptionalChart> out;
  for (const auto& [chart, fitting] : fittings) {
    const RingPtr& ring = chart.algebra.ring;
    Ideal expected = Ideal::unit(ring);
    if (chart.r > params.l) {
      auto gens = chart.algebra.relations.generators();
      gens.push_back(Polynomial::variable(ring, x_name(chart.r)));
      for (int i = params.s; i <= params.l; ++i) gens.push_back(Polynomial::variable(ring, u_name(i)));
      expected = Ideal(ring, std::move(gens));
    }
    bool ok = ideal_equal(fitting, expected);
    out.push_back(ExceptionalChart{chart.r, fitting, std::move(expected), ok});
  }
  return out;
}

bool image_from(const ReesParams& params, const std::vector<ChartFitting>& fittings) {
  PowerIdeal a = params.power_ideal();
  Ideal center = center_ideal(a);
  std::optional<Ideal> image;
  for (const auto& [chart, fitting] : fittings) {
    if (chart.r <= params.l) continue;
    std::vector<std::string> u_block;
    for (int i = a.s; i <= a.n; ++i) {
      if (i != chart.r) u_block.push_back(u_name(i));
    }
    Ideal contraction = map_ideal(eliminate(fitting, u_block), center.ring());
    image = image ? ideal_intersect(*image, contraction) : contraction;
  }
  // l < n guarantees at least one chart with r > l.
  return image && ideal_equal(*image, center);
}

}  // namespace

long FittingIndexPolicy::global_index(const ReesParams& params) const {
  switch (formula) {
    case Formula::paper:
      return params.n + params.s + params.l - 1;
    case Formula::corrected:
      return params.n + params.l - params.s + 1;
    case Formula::explicit_index:
      return index;
  }
  return index;
}

std::string FittingIndexPolicy::name() const {
  switch (formula) {
    case Formula::paper:
      return "paper";
    case Formula::corrected:
      return "corrected";
    case Formula::explicit_index:
      return "explicit";
  }
  return "explicit";
}

FittingIndexPolicy parse_policy(const std::string& text) {
  if (text == "paper") return FittingIndexPolicy::paper();
  if (text == "corrected") return FittingIndexPolicy::corrected();
  try {
    std::size_t used = 0;
    long value = std::stol(text, &used);
    if (used == text.size()) return FittingIndexPolicy::explicit_at(value);
  } catch (const std::exception&) {
  }
  throw ValidationError("policy must be 'paper', 'corrected' or an integer (got '" + text + "')");
}

std::string to_string(Status status) {
  switch (status) {
    case Status::pass:
      return "pass";
    case Status::fail:
      return "fail";
    case Status::skipped:
      return "skipped";
  }
  return "skipped";
}

void VerificationReport::finalize() {
  if (status == Status::skipped && !reason.empty()) return;
  bool ok = micali_ok && corollary_ok.value_or(true) && image_ok.value_or(true);
  for (const auto& c : charts) ok = ok && c.equal;
  status = ok ? Status::pass : Status::fail;
}

VerificationReport check_fitting_charts(const ReesParams& params, const FittingIndexPolicy& policy) {
  params.validate();
  VerificationReport report;
  report.params = params;
  report.policy = policy;
  report.index_used = policy.global_index(params);

  PowerIdeal a = params.power_ideal();
  PresentedAlgebra rees = rees_presentation(a);
  Ideal fitting = kaehler_fitting(rees, report.index_used);
  Ideal target = target_ideal(params);
  for (int r = a.s; r <= a.n; ++r) {
    auto start = std::chrono::steady_clock::now();
    bool equal = localized_equal(fitting, target, Polynomial::variable(rees.ring, t_name(r)));
    auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start);
    report.charts.push_back(ChartComparison{r, equal, ms.count()});
  }
  report.micali_ok = ideal_equal(micali_kernel(a), rees.relations);
  report.finalize();
  return report;
}

std::vector<ExceptionalChart> exceptional_charts(const ReesParams& params, const FittingIndexPolicy& policy) {
  params.validate();
  return compare_charts(params, chart_fittings(params, policy.global_index(params) - 1));
}

bool check_exceptional_charts(const ReesParams& params, const FittingIndexPolicy& policy) {
  for (const auto& chart : exceptional_charts(params, policy)) {
    if (!chart.ok) return false;
  }
  return true;
}

bool check_image_equals_center(const ReesParams& params, const FittingIndexPolicy& policy) {
  params.validate();
  return image_from(params, chart_fittings(params, policy.global_index(params) - 1));
}

VerificationReport verify_tuple(const ReesParams& params, const FittingIndexPolicy& policy) {
  VerificationReport report = check_fitting_charts(params, policy);
  auto fittings = chart_fittings(params, report.index_used - 1);
  bool corollary = true;
  for (const auto& chart : compare_charts(params, fittings)) corollary = corollary && chart.ok;
  report.corollary_ok = corollary;
  report.image_ok = image_from(params, fittings);
  report.finalize();
  return report;
}

}  // namespace fitt
