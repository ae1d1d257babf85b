// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails.

#include <array>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <regex>
#include <sstream>

#include <sys/wait.h>
#include <unistd.h>

#include "fitt/kaehler.hpp"
#include "fitt/parse.hpp"
#include "fitt/verify.hpp"

namespace fs = std::filesystem;
using namespace fitt;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;

  void require(bool cond, const std::string& what) {
    if (!cond) {
      ok = false;
      if (!detail.empty()) detail += "; ";
      detail += what;
    }
  }
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

std::vector<ReesParams> default_grid() {
  std::vector<ReesParams> out;
  for (std::uint32_t p : {2u, 3u}) {
    out.push_back({p, 2, 1, 1, {p, 1}});
    out.push_back({p, 3, 1, 1, {p, 1, 1}});
    out.push_back({p, 3, 1, 2, {p, p, 1}});
    out.push_back({p, 3, 1, 2, {p, p * p, 1}});
    out.push_back({p, 4, 1, 2, {p, p, 1, 1}});
    out.push_back({p, 4, 1, 3, {p, p, p, 1}});
    out.push_back({p, 3, 2, 2, {p, 1}});
    out.push_back({p, 4, 2, 3, {p, p, 1}});
  }
  return out;
}

Outcome theorem_grid() {
  Outcome out;
  for (const auto& t : default_grid()) {
    auto start = Clock::now();
    auto report = check_fitting_charts(t, FittingIndexPolicy::corrected());
    double elapsed = seconds_since(start);
    bool charts_equal = !report.charts.empty() && std::all_of(report.charts.begin(), report.charts.end(),
                                                              [](const ChartComparison& c) { return c.equal; });
    out.require(report.charts.size() == static_cast<std::size_t>(t.n - t.s + 1), t.to_string() + ": chart count");
    out.require(charts_equal, t.to_string() + ": unequal chart");
    out.require(report.micali_ok, t.to_string() + ": Micali kernel differs");
    out.require(elapsed < 30.0, t.to_string() + ": over 30 s");
  }
  return out;
}

Outcome index_discrepancy() {
  Outcome out;
  ReesParams t{2, 3, 2, 2, {2, 1}};
  auto paper = check_fitting_charts(t, FittingIndexPolicy::paper());
  out.require(paper.index_used == 6, "paper index is not 6");
  out.require(paper.status == Status::fail, "paper policy did not fail");
  auto corrected = check_fitting_charts(t, FittingIndexPolicy::corrected());
  out.require(corrected.index_used == 4, "corrected index is not 4");
  out.require(corrected.status == Status::pass, "corrected policy did not pass");

  auto rees = rees_presentation(t);
  Ideal fitt = kaehler_fitting(rees, 4);
  Ideal expected(rees.ring, parse_polynomial_list("T2, x3, x2^2, x2^2*T3 - x3*T2", rees.ring));
  out.require(ideal_equal(fitt, expected), "Fitt_4 differs from (T2, x3, x2^2) + J");
  out.require(ideal_equal(fitt, target_ideal(t)), "Fitt_4 differs from the target ideal");
  return out;
}

Outcome negative_control() {
  Outcome out;
  ReesParams t{2, 3, 1, 2, {2, 2, 1}};
  for (long index : {4L, 6L}) {
    auto report = check_fitting_charts(t, FittingIndexPolicy::explicit_at(index));
    bool unequal = std::any_of(report.charts.begin(), report.charts.end(),
                               [](const ChartComparison& c) { return !c.equal; });
    out.require(unequal, "index " + std::to_string(index) + " has no unequal chart");
  }
  out.require(check_fitting_charts(t, FittingIndexPolicy::explicit_at(5)).status == Status::pass, "index 5 did not pass");
  return out;
}

Outcome corollary() {
  Outcome out;
  for (const auto& t : default_grid()) {
    auto start = Clock::now();
    auto charts = exceptional_charts(t, FittingIndexPolicy::corrected());
    for (const auto& c : charts) {
      const std::string tag = t.to_string() + " r=" + std::to_string(c.r);
      if (c.r <= t.l) {
        out.require(is_unit_ideal(c.fitting), tag + ": not the unit ideal");
        continue;
      }
      // Rebuild (x_r, U_s..U_l) + chart relations from scratch.
      ChartAlgebra chart = chart_presentation(t.power_ideal(), c.r);
      const RingPtr& ring = chart.algebra.ring;
      std::vector<Polynomial> gens = chart.algebra.relations.generators();
      gens.push_back(Polynomial::variable(ring, x_name(c.r)));
      for (int i = t.s; i <= t.l; ++i) gens.push_back(Polynomial::variable(ring, u_name(i)));
      out.require(ideal_equal(c.fitting, Ideal(ring, gens)), tag + ": Fitting ideal differs");
    }
    out.require(check_image_equals_center(t, FittingIndexPolicy::corrected()), t.to_string() + ": image differs");
    out.require(seconds_since(start) < 60.0, t.to_string() + ": over 60 s");
  }
  return out;
}

Outcome nonnormal() {
  Outcome out;
  auto start = Clock::now();
  for (std::uint64_t p : {2, 3}) {
    NonNormalProbe probe = probe_nonnormal(p);
    out.require(check_nonnormal(p), "p=" + std::to_string(p) + ": not detected");
    out.require(probe.sanity, "p=" + std::to_string(p) + ": sanity membership failed");
  }
  out.require(seconds_since(start) < 5.0, "over 5 s");
  return out;
}

Outcome properties() {
  Outcome out;
  auto start = Clock::now();
  PropertyCounts counts = run_property_suites(PropertyOptions{});
  out.require(counts.spoly_checks >= 200, "fewer than 200 S-polynomial checks");
  out.require(counts.fitting_instances >= 100, "fewer than 100 Fitting instances");
  out.require(counts.chain_checks > 0 && counts.shift_checks > 0 && counts.independence_checks > 0 &&
                  counts.base_change_checks > 0,
              "a Fitting law went unchecked");
  out.require(counts.leibniz_checks >= 200 && counts.frobenius_checks >= 200, "fewer than 200 derivative checks");
  out.require(counts.failures.empty(), std::to_string(counts.failures.size()) + " failures");
  out.require(seconds_since(start) < 120.0, "over 2 min");
  return out;
}

// --- golden CLI transcripts ---------------------------------------------------

std::string read_file(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::stringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

/// Same transcript format as run_golden.cmake.
std::string run_cli(const std::string& args) {
  fs::path err_file = fs::temp_directory_path() / ("fitt_acceptance_" + std::to_string(::getpid()) + ".err");
  std::string command = std::string(FITT_CLI) + " " + args + " 2>" + err_file.string();
  std::string out;
  FILE* pipe = ::popen(command.c_str(), "r");
  if (!pipe) return "popen failed";
  std::array<char, 4096> buffer{};
  std::size_t n = 0;
  while ((n = std::fread(buffer.data(), 1, buffer.size(), pipe)) > 0) out.append(buffer.data(), n);
  int status = ::pclose(pipe);
  int rc = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  std::string err = read_file(err_file);
  fs::remove(err_file);
  out = std::regex_replace(out, std::regex("\"ms\": [0-9]+"), "\"ms\": 0");
  out += "exit: " + std::to_string(rc) + "\n";
  if (!err.empty()) out += "--- stderr ---\n" + err;
  return out;
}

Outcome determinism() {
  Outcome out;
  std::vector<fs::path> cases;
  for (const auto& entry : fs::directory_iterator(GOLDEN_DIR)) {
    if (entry.path().extension() == ".cmd") cases.push_back(entry.path());
  }
  std::sort(cases.begin(), cases.end());
  out.require(!cases.empty(), "no golden files found");
  for (const auto& path : cases) {
    std::string args = read_file(path);
    while (!args.empty() && (args.back() == '\n' || args.back() == ' ')) args.pop_back();
    args = std::regex_replace(args, std::regex("@DATA@"), DATA_DIR);
    std::string first = run_cli(args);
    std::string second = run_cli(args);
    std::string name = path.stem().string();
    out.require(first == second, name + ": runs differ");
    out.require(first == read_file(fs::path(path).replace_extension(".out")), name + ": differs from golden");
  }
  if (out.ok) out.detail = std::to_string(cases.size()) + " transcripts";
  return out;
}

}  // namespace

int main() {
  struct Criterion {
    const char* name;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria = {
      {"1 fitting-ideal grid (corrected index)", theorem_grid},
      {"2 index discrepancy at s=2", index_discrepancy},
      {"3 negative control indices 4/6 fail, 5 passes", negative_control},
      {"4 exceptional charts and image equals center", corollary},
      {"5 non-normal blow-up chart, p=2 and p=3", nonnormal},
      {"6 randomized property suites", properties},
      {"7 CLI golden transcripts deterministic", determinism},
  };
  bool all = true;
  for (const auto& c : criteria) {
    auto start = Clock::now();
    Outcome outcome;
    try {
      outcome = c.run();
    } catch (const std::exception& e) {
      outcome.ok = false;
      outcome.detail = std::string("exception: ") + e.what();
    }
    all = all && outcome.ok;
    std::printf("%s  %-48s %7.2fs%s%s\n", outcome.ok ? "PASS" : "FAIL", c.name, seconds_since(start),
                outcome.detail.empty() ? "" : "  ", outcome.detail.c_str());
  }
  return all ? 0 : 1;
}
