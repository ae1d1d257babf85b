// fitt: command-line front end for the ideal toolkit, Rees-ring
// constructions and the verification harness.
//
// Exit codes: 0 success or pass, 1 verification failure, 2 usage or
// validation error.

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "fitt/errors.hpp"
#include "fitt/kaehler.hpp"
#include "fitt/parse.hpp"
#include "fitt/verify.hpp"

namespace {

using fitt::Ideal;
using fitt::Polynomial;
using fitt::RingPtr;
using Json = nlohmann::ordered_json;

constexpr int kOk = 0;
constexpr int kFailed = 1;
constexpr int kUsage = 2;

struct AlgebraArgs {
  std::string field = "rationals";
  std::string vars;
  std::string gens;
  std::string order = "grevlex";
  std::string format = "text";
};

struct ParamArgs {
  std::string params;
  long long p = -1;
  int n = -1;
  int s = -1;
  int l = -1;
  std::string v;
  std::string policy = "corrected";
};

struct Args {
  AlgebraArgs algebra;
  ParamArgs rees;
  std::string poly;
  std::string by;
  std::string other;
  std::string block;
  std::string matrix;
  long index = 0;
  bool index_given = false;
  int chart = 0;
  std::string grid_path;
  int workers = 0;
  std::uint64_t seed = fitt::PropertyOptions{}.seed;
};

RingPtr make_ring(const AlgebraArgs& a) { return fitt::make_ring(fitt::parse_field(a.field), fitt::split_names(a.vars)); }

fitt::MonomialOrder parse_order(const std::string& text) {
  if (text == "grevlex") return fitt::MonomialOrder::grevlex();
  if (text == "lex") return fitt::MonomialOrder::lex();
  throw fitt::ValidationError("order must be 'grevlex' or 'lex' (got '" + text + "')");
}

bool json_out(const AlgebraArgs& a) {
  if (a.format != "text" && a.format != "json") throw fitt::ValidationError("format must be 'text' or 'json'");
  return a.format == "json";
}

std::vector<std::string> printed(const std::vector<Polynomial>& polys,
                                 const fitt::MonomialOrder& order = fitt::MonomialOrder::grevlex()) {
  std::vector<std::string> out;
  for (const auto& f : polys) out.push_back(f.to_string(order));
  return out;
}

void print_lines(const std::vector<std::string>& lines, const std::string& indent = "") {
  for (const auto& line : lines) std::cout << indent << line << "\n";
}

Json ring_json(const RingPtr& ring) {
  Json j;
  j["field"] = ring->field().describe();
  j["vars"] = ring->variables();
  return j;
}

std::string join(const std::vector<std::string>& names, const std::string& sep = ",") {
  std::string out;
  for (std::size_t i = 0; i < names.size(); ++i) out += (i ? sep : "") + names[i];
  return out;
}

// --- ideal utilities -------------------------------------------------------

int run_gb(const Args& args) {
  RingPtr ring = make_ring(args.algebra);
  auto order = parse_order(args.algebra.order);
  Ideal ideal(ring, fitt::parse_polynomial_list(args.algebra.gens, ring));
  auto basis = printed(ideal.groebner_basis(order), order);
  if (json_out(args.algebra)) {
    Json j = ring_json(ring);
    j["order"] = order.describe();
    j["basis"] = basis;
    std::cout << j.dump(2) << "\n";
  } else {
    print_lines(basis);
  }
  return kOk;
}

int run_member(const Args& args) {
  RingPtr ring = make_ring(args.algebra);
  Ideal ideal(ring, fitt::parse_polynomial_list(args.algebra.gens, ring));
  bool member = fitt::ideal_member(fitt::parse_polynomial(args.poly, ring), ideal);
  if (json_out(args.algebra)) {
    Json j = ring_json(ring);
    j["member"] = member;
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "member: " << (member ? "true" : "false") << "\n";
  }
  return kOk;
}

int emit_ideal(const Args& args, const Ideal& ideal) {
  auto basis = printed(ideal.groebner_basis());
  if (json_out(args.algebra)) {
    Json j = ring_json(ideal.ring());
    j["basis"] = basis;
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "ring: " << join(ideal.ring()->variables()) << "\n";
    print_lines(basis);
  }
  return kOk;
}

int run_saturate(const Args& args) {
  RingPtr ring = make_ring(args.algebra);
  Ideal ideal(ring, fitt::parse_polynomial_list(args.algebra.gens, ring));
  return emit_ideal(args, fitt::saturate(ideal, fitt::parse_polynomial(args.by, ring)));
}

int run_intersect(const Args& args) {
  RingPtr ring = make_ring(args.algebra);
  Ideal a(ring, fitt::parse_polynomial_list(args.algebra.gens, ring));
  Ideal b(ring, fitt::parse_polynomial_list(args.other, ring));
  return emit_ideal(args, fitt::ideal_intersect(a, b));
}

int run_eliminate(const Args& args) {
  RingPtr ring = make_ring(args.algebra);
  Ideal ideal(ring, fitt::parse_polynomial_list(args.algebra.gens, ring));
  return emit_ideal(args, fitt::eliminate(ideal, fitt::split_names(args.block)));
}

// --- modules ---------------------------------------------------------------

fitt::PolyMatrix parse_matrix(const std::string& text, const RingPtr& ring) {
  std::vector<std::vector<Polynomial>> rows;
  std::stringstream stream(text);
  std::string row;
  while (std::getline(stream, row, ';')) {
    if (row.find_first_not_of(" \t") == std::string::npos) continue;
    rows.push_back(fitt::parse_polynomial_list(row, ring));
  }
  return fitt::PolyMatrix::from_rows(ring, rows);
}

void print_matrix(const fitt::PresentedModule& module) {
  std::size_t width = 0;
  for (const auto& label : module.row_labels) width = std::max(width, label.size());
  for (std::size_t r = 0; r < module.matrix.rows(); ++r) {
    std::string label = module.row_labels[r];
    std::cout << "  " << label << std::string(width - label.size(), ' ') << " |";
    for (std::size_t c = 0; c < module.matrix.cols(); ++c) std::cout << " " << module.matrix.at(r, c).to_string() << " |";
    std::cout << "\n";
  }
}

Json matrix_json(const fitt::PresentedModule& module) {
  Json rows = Json::array();
  for (std::size_t r = 0; r < module.matrix.rows(); ++r) {
    Json row = Json::array();
    for (std::size_t c = 0; c < module.matrix.cols(); ++c) row.push_back(module.matrix.at(r, c).to_string());
    rows.push_back(std::move(row));
  }
  return rows;
}

int emit_fitting(const Args& args, const fitt::PresentedModule& module) {
  bool json = json_out(args.algebra);
  Json j = ring_json(module.algebra.ring);
  j["relations"] = printed(module.algebra.relations.generators());
  j["row_labels"] = module.row_labels;
  j["matrix"] = matrix_json(module);
  if (!json) {
    std::cout << "ring: " << join(module.algebra.ring->variables()) << "\n";
    std::cout << "relations: " << module.algebra.relations.to_string() << "\n";
    std::cout << "presentation (" << module.matrix.rows() << " x " << module.matrix.cols() << "):\n";
    print_matrix(module);
  }
  if (args.index_given) {
    Ideal fitting = fitt::fitting_ideal(module, args.index);
    auto basis = printed(fitting.groebner_basis());
    if (json) {
      j["index"] = args.index;
      j["fitting"] = printed(fitting.generators());
      j["basis"] = basis;
    } else {
      std::cout << "Fitt_" << args.index << " = " << fitting.to_string() << "\n";
      std::cout << "groebner basis:\n";
      print_lines(basis, "  ");
    }
  }
  if (json) std::cout << j.dump(2) << "\n";
  return kOk;
}

int run_fitting(const Args& args) {
  RingPtr ring = make_ring(args.algebra);
  Ideal relations(ring, fitt::parse_polynomial_list(args.algebra.gens, ring));
  fitt::PresentedModule module(fitt::PresentedAlgebra(relations), parse_matrix(args.matrix, ring));
  return emit_fitting(args, module);
}

int run_kaehler(const Args& args) {
  RingPtr ring = make_ring(args.algebra);
  fitt::PresentedAlgebra algebra(Ideal(ring, fitt::parse_polynomial_list(args.algebra.gens, ring)));
  return emit_fitting(args, fitt::kaehler_presentation(algebra));
}

// --- Rees rings ------------------------------------------------------------

/// Builds the parameter tuple from --params or the individual flags. With
/// `need_l` false, l may be omitted (general monomial complete
/// intersections).
fitt::ReesParams rees_params(const ParamArgs& a, bool need_l) {
  if (!a.params.empty()) return fitt::parse_rees_params(a.params);
  if (a.p < 0 || a.n < 0 || a.s < 0 || a.v.empty() || (need_l && a.l < 0)) {
    throw fitt::ValidationError(std::string("parameters required: --p --n --s ") + (need_l ? "--l " : "") +
                                "--v (or --params)");
  }
  std::string text = "p=" + std::to_string(a.p) + " n=" + std::to_string(a.n) + " s=" + std::to_string(a.s) +
                     " l=" + std::to_string(a.l < 0 ? 0 : a.l) + " v=" + a.v;
  fitt::ReesParams params = fitt::parse_rees_params(text);
  if (a.l < 0) params.l = -1;
  return params;
}

bool has_l(const fitt::ReesParams& params) { return params.l >= 0; }

int run_rees_print(const Args& args) {
  fitt::ReesParams params = rees_params(args.rees, false);
  fitt::PowerIdeal a = params.power_ideal();
  fitt::PresentedAlgebra rees = has_l(params) ? fitt::rees_presentation(params) : fitt::rees_presentation(a);
  Ideal exceptional = fitt::exceptional_ideal(a);
  auto relations = printed(rees.relations.generators());
  if (json_out(args.algebra)) {
    Json j = ring_json(rees.ring);
    j["relations"] = relations;
    j["exceptional"] = printed(exceptional.generators());
    if (has_l(params)) j["target"] = printed(fitt::target_ideal(params).generators());
    std::cout << j.dump(2) << "\n";
    return kOk;
  }
  std::cout << "ring: " << join(rees.ring->variables()) << " over " << rees.ring->field().describe() << "\n";
  std::cout << "relations:\n";
  print_lines(relations, "  ");
  std::cout << "exceptional: " << exceptional.to_string() << "\n";
  if (has_l(params)) std::cout << "target: " << fitt::target_ideal(params).to_string() << "\n";
  return kOk;
}

int run_rees_chart(const Args& args) {
  fitt::ReesParams params = rees_params(args.rees, false);
  if (has_l(params)) params.validate();
  fitt::ChartAlgebra chart = fitt::chart_presentation(params.power_ideal(), args.chart);
  auto relations = printed(chart.algebra.relations.generators());
  if (json_out(args.algebra)) {
    Json j = ring_json(chart.algebra.ring);
    j["r"] = chart.r;
    j["relations"] = relations;
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "chart r=" << chart.r << " ring: " << join(chart.algebra.ring->variables()) << "\n";
    std::cout << "relations:\n";
    print_lines(relations, "  ");
  }
  return kOk;
}

int run_rees_micali(const Args& args) {
  fitt::ReesParams params = rees_params(args.rees, false);
  if (has_l(params)) params.validate();
  fitt::PowerIdeal a = params.power_ideal();
  Ideal kernel = fitt::micali_kernel(a);
  bool equal = fitt::ideal_equal(kernel, fitt::rees_presentation(a).relations);
  auto basis = printed(kernel.groebner_basis());
  if (json_out(args.algebra)) {
    Json j = ring_json(kernel.ring());
    j["kernel"] = basis;
    j["equal"] = equal;
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "kernel:\n";
    print_lines(basis, "  ");
    std::cout << "equal to binomial relations: " << (equal ? "true" : "false") << "\n";
  }
  return equal ? kOk : kFailed;
}

// --- verification ----------------------------------------------------------

int run_verify_thm41(const Args& args) {
  fitt::ReesParams params = rees_params(args.rees, true);
  auto policy = fitt::parse_policy(args.rees.policy);
  bool json = json_out(args.algebra);
  params.validate();
  auto report = fitt::verify_tuple(params, policy);
  if (json) {
    std::cout << fitt::report_json(report, 2) << "\n";
  } else {
    std::cout << fitt::summary_table({report});
  }
  return report.status == fitt::Status::pass ? kOk : kFailed;
}

int run_verify_cor42(const Args& args) {
  fitt::ReesParams params = rees_params(args.rees, true);
  auto policy = fitt::parse_policy(args.rees.policy);
  bool json = json_out(args.algebra);
  auto charts = fitt::exceptional_charts(params, policy);
  bool ok = true;
  Json list = Json::array();
  for (const auto& chart : charts) {
    ok = ok && chart.ok;
    auto basis = printed(chart.fitting.groebner_basis());
    if (json) {
      Json c;
      c["r"] = chart.r;
      c["ok"] = chart.ok;
      c["fitting"] = basis;
      list.push_back(std::move(c));
    } else {
      std::cout << "chart r=" << chart.r << ": " << (chart.ok ? "ok" : "MISMATCH") << "\n";
      print_lines(basis, "  ");
    }
  }
  if (json) {
    Json j;
    j["params"] = params.to_string();
    j["index_used"] = policy.global_index(params);
    j["chart_index"] = policy.global_index(params) - 1;
    j["charts"] = std::move(list);
    j["corollary_ok"] = ok;
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "exceptional charts: " << (ok ? "true" : "false") << "\n";
  }
  return ok ? kOk : kFailed;
}

int run_verify_image(const Args& args) {
  fitt::ReesParams params = rees_params(args.rees, true);
  auto policy = fitt::parse_policy(args.rees.policy);
  bool json = json_out(args.algebra);
  bool ok = fitt::check_image_equals_center(params, policy);
  if (json) {
    Json j;
    j["params"] = params.to_string();
    j["image_ok"] = ok;
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "image equals center: " << (ok ? "true" : "false") << "\n";
  }
  return ok ? kOk : kFailed;
}

int run_verify_nonnormal(const Args& args) {
  if (args.rees.p < 0) throw fitt::ValidationError("--p is required");
  auto p = static_cast<std::uint64_t>(args.rees.p);
  fitt::Field::prime(p);
  bool json = json_out(args.algebra);
  fitt::NonNormalProbe probe = fitt::probe_nonnormal(p);
  auto yes = [](bool b) { return b ? "true" : "false"; };
  if (json) {
    Json j;
    j["p"] = p;
    j["chart_matches"] = probe.chart_matches;
    j["integral"] = probe.integral;
    j["outside"] = probe.outside;
    j["sanity"] = probe.sanity;
    j["non_normal"] = probe.ok();
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "chart relations = (U4*x3^p - x4^(p^2)): " << yes(probe.chart_matches) << "\n";
    std::cout << "x4^p/x3 integral (Z^p = U4): " << yes(probe.integral) << "\n";
    std::cout << "x4^p outside x3*A: " << yes(probe.outside) << "\n";
    std::cout << "x4^(p^2) in x3^p*A: " << yes(probe.sanity) << "\n";
    std::cout << "non-normal: " << yes(probe.ok()) << "\n";
  }
  return probe.ok() ? kOk : kFailed;
}

int run_verify_grid(const Args& args) {
  std::ifstream in(args.grid_path);
  if (!in) throw fitt::ValidationError("cannot open grid file '" + args.grid_path + "'");
  auto grid = fitt::parse_grid(in);
  auto policy = fitt::parse_policy(args.rees.policy);
  bool json = json_out(args.algebra);
  auto reports = fitt::run_grid(grid, policy, args.workers);
  if (json) {
    std::cout << fitt::reports_json(reports, 2) << "\n";
  } else {
    std::cout << fitt::summary_table(reports);
  }
  bool failed = std::any_of(reports.begin(), reports.end(),
                            [](const fitt::VerificationReport& r) { return r.status == fitt::Status::fail; });
  return failed ? kFailed : kOk;
}

int run_verify_props(const Args& args) {
  fitt::PropertyOptions options;
  options.seed = args.seed;
  bool json = json_out(args.algebra);
  auto counts = fitt::run_property_suites(options);
  if (json) {
    Json j;
    j["seed"] = options.seed;
    j["spoly_checks"] = counts.spoly_checks;
    j["fitting_instances"] = counts.fitting_instances;
    j["chain_checks"] = counts.chain_checks;
    j["shift_checks"] = counts.shift_checks;
    j["independence_checks"] = counts.independence_checks;
    j["base_change_checks"] = counts.base_change_checks;
    j["leibniz_checks"] = counts.leibniz_checks;
    j["frobenius_checks"] = counts.frobenius_checks;
    j["failures"] = counts.failures;
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "seed " << options.seed << "\n";
    std::cout << "S-polynomial reductions: " << counts.spoly_checks << "\n";
    std::cout << "Fitting instances:       " << counts.fitting_instances << " (chain " << counts.chain_checks
              << ", shift " << counts.shift_checks << ", independence " << counts.independence_checks
              << ", base change " << counts.base_change_checks << ")\n";
    std::cout << "Leibniz checks:          " << counts.leibniz_checks << "\n";
    std::cout << "Frobenius checks:        " << counts.frobenius_checks << "\n";
    std::cout << "failures:                " << counts.failures.size() << "\n";
    print_lines(counts.failures, "  ");
  }
  return counts.failures.empty() ? kOk : kFailed;
}

// --- wiring ----------------------------------------------------------------

void add_algebra_flags(CLI::App* cmd, Args& args, bool with_gens = true) {
  cmd->add_option("--field", args.algebra.field, "p=<prime> or rationals")->capture_default_str();
  cmd->add_option("--vars", args.algebra.vars, "comma-separated variable names")->required();
  if (with_gens) cmd->add_option("--gens", args.algebra.gens, "comma-separated generators");
  cmd->add_option("--format", args.algebra.format, "text or json")->capture_default_str();
}

void add_param_flags(CLI::App* cmd, Args& args, bool with_policy) {
  cmd->add_option("--params", args.rees.params, "tuple in flag syntax, e.g. \"p=2 n=3 s=1 l=2 v=2,2,1\"");
  cmd->add_option("--p", args.rees.p, "characteristic");
  cmd->add_option("--n", args.rees.n, "number of x variables");
  cmd->add_option("--s", args.rees.s, "first index of the center");
  cmd->add_option("--l", args.rees.l, "last index with p | v_i");
  cmd->add_option("--v", args.rees.v, "exponents v_s..v_n, comma-separated");
  if (with_policy) {
    cmd->add_option("--policy", args.rees.policy, "paper, corrected, or an explicit index")->capture_default_str();
  }
  cmd->add_option("--format", args.algebra.format, "text or json")->capture_default_str();
}

const CLI::App* deepest(const CLI::App* app) {
  for (const CLI::App* sub : app->get_subcommands()) return deepest(sub);
  return app;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Groebner-basis toolkit for Rees rings and Fitting ideals of Kaehler differentials", "fitt"};
  app.require_subcommand(1);
  Args args;
  std::function<int(const Args&)> handler;
  auto bind = [&handler](CLI::App* cmd, int (*fn)(const Args&)) {
    cmd->callback([&handler, fn] { handler = fn; });
  };

  auto* gb = app.add_subcommand("gb", "reduced Groebner basis of an ideal");
  add_algebra_flags(gb, args);
  gb->add_option("--order", args.algebra.order, "grevlex or lex")->capture_default_str();
  bind(gb, run_gb);

  auto* member = app.add_subcommand("member", "ideal membership test");
  add_algebra_flags(member, args);
  member->add_option("--poly", args.poly, "candidate polynomial")->required();
  bind(member, run_member);

  auto* saturate = app.add_subcommand("saturate", "saturation (I : g^inf)");
  add_algebra_flags(saturate, args);
  saturate->add_option("--by", args.by, "the element g")->required();
  bind(saturate, run_saturate);

  auto* intersect = app.add_subcommand("intersect", "intersection of two ideals");
  add_algebra_flags(intersect, args);
  intersect->add_option("--with", args.other, "generators of the second ideal")->required();
  bind(intersect, run_intersect);

  auto* eliminate = app.add_subcommand("eliminate", "elimination ideal");
  add_algebra_flags(eliminate, args);
  eliminate->add_option("--block", args.block, "variables to eliminate")->required();
  bind(eliminate, run_eliminate);

  auto* fitting = app.add_subcommand("fitting", "Fitting ideal of a presented module");
  add_algebra_flags(fitting, args, false);
  fitting->add_option("--relations", args.algebra.gens, "relations of the base algebra");
  fitting->add_option("--matrix", args.matrix, "rows separated by ';', entries by ','")->required();
  fitting->add_option("--index", args.index, "Fitting index i")->required();
  bind(fitting, run_fitting);

  auto* kaehler = app.add_subcommand("kaehler", "Jacobian presentation of Omega^1 and its Fitting ideals");
  add_algebra_flags(kaehler, args);
  auto* kaehler_index = kaehler->add_option("--index", args.index, "Fitting index i");
  bind(kaehler, run_kaehler);

  auto* rees = app.add_subcommand("rees", "Rees-ring constructions");
  rees->require_subcommand(1);
  auto* rees_print = rees->add_subcommand("print", "presentation, exceptional and target ideals");
  add_param_flags(rees_print, args, false);
  bind(rees_print, run_rees_print);
  auto* rees_chart = rees->add_subcommand("chart", "degree-zero chart at x_r^{v_r} T");
  add_param_flags(rees_chart, args, false);
  rees_chart->add_option("--r", args.chart, "chart index")->required();
  bind(rees_chart, run_rees_chart);
  auto* rees_micali = rees->add_subcommand("micali", "kernel of Sym(a) -> R[aT] by elimination");
  add_param_flags(rees_micali, args, false);
  bind(rees_micali, run_rees_micali);

  auto* verify = app.add_subcommand("verify", "verification harness");
  verify->require_subcommand(1);
  auto* thm41 = verify->add_subcommand("thm41", "chart-wise Fitting ideal vs target ideal");
  add_param_flags(thm41, args, true);
  bind(thm41, run_verify_thm41);
  auto* cor42 = verify->add_subcommand("cor42", "chart Fitting ideals vs exceptional linear subscheme");
  add_param_flags(cor42, args, true);
  bind(cor42, run_verify_cor42);
  auto* image = verify->add_subcommand("image", "schematic image of the Fitting locus vs the center");
  add_param_flags(image, args, true);
  bind(image, run_verify_image);
  auto* nonnormal = verify->add_subcommand("nonnormal", "non-normality of the (x3^p, x4^(p^2)) blow-up chart");
  nonnormal->add_option("--p", args.rees.p, "characteristic")->required();
  nonnormal->add_option("--format", args.algebra.format, "text or json")->capture_default_str();
  bind(nonnormal, run_verify_nonnormal);
  auto* grid = verify->add_subcommand("grid", "run every tuple of a grid file");
  grid->add_option("--grid", args.grid_path, "grid file, one tuple per line")->required();
  grid->add_option("--policy", args.rees.policy, "paper, corrected, or an explicit index")->capture_default_str();
  grid->add_option("--workers", args.workers, "worker threads (0 = all)")->capture_default_str();
  grid->add_option("--format", args.algebra.format, "text or json")->capture_default_str();
  bind(grid, run_verify_grid);
  auto* props = verify->add_subcommand("props", "randomized invariant suites");
  props->add_option("--seed", args.seed, "generator seed")->capture_default_str();
  props->add_option("--format", args.algebra.format, "text or json")->capture_default_str();
  bind(props, run_verify_props);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    std::cout << deepest(&app)->help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n\n" << deepest(&app)->help();
    return kUsage;
  }
  args.index_given = args.index_given || kaehler_index->count() > 0 || fitting->parsed();

  try {
    return handler(args);
  } catch (const fitt::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
}
