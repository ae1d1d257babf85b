#include <exception>
#include <istream>

#include <omp.h>

#include "fitt/errors.hpp"
#include "fitt/verify.hpp"

namespace fitt {

namespace {

VerificationReport run_one(const ReesParams& params, const FittingIndexPolicy& policy) {
  try {
    return verify_tuple(params, policy);
  } catch (const std::exception& e) {
    VerificationReport report;
    report.params = params;
    report.policy = policy;
    report.index_used = policy.global_index(params);
    report.status = Status::skipped;
    report.reason = e.what();
    return report;
  }
}

}  // namespace

std::vector<VerificationReport> run_grid_serial(const std::vector<ReesParams>& grid,
                                                const FittingIndexPolicy& policy) {
  std::vector<VerificationReport> reports;
  reports.reserve(grid.size());
  for (const auto& params : grid) reports.push_back(run_one(params, policy));
  return reports;
}

std::vector<VerificationReport> run_grid(const std::vector<ReesParams>& grid, const FittingIndexPolicy& policy,
                                         int workers) {
  std::vector<VerificationReport> reports(grid.size());
  int threads = workers > 0 ? workers : omp_get_max_threads();
#pragma omp parallel for schedule(dynamic, 1) num_threads(threads)
  for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(grid.size()); ++i) {
    reports[i] = run_one(grid[i], policy);
  }
  return reports;
}

std::vector<ReesParams> parse_grid(std::istream& in) {
  std::vector<ReesParams> grid;
  std::string line;
  std::size_t number = 0;
  while (std::getline(in, line)) {
    ++number;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    try {
      grid.push_back(parse_rees_params(line));
    } catch (const ParseError& e) {
      throw ParseError("grid line " + std::to_string(number) + ": " + e.message(), e.position());
    }
  }
  return grid;
}

}  // namespace fitt
