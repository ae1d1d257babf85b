#include <cstdio>

#include <json.hpp>

#include "fitt/verify.hpp"

namespace fitt {

namespace {

nlohmann::ordered_json to_json(const VerificationReport& report) {
  nlohmann::ordered_json params;
  params["p"] = report.params.p;
  params["n"] = report.params.n;
  params["s"] = report.params.s;
  params["l"] = report.params.l;
  params["v"] = report.params.v;

  nlohmann::ordered_json charts = nlohmann::ordered_json::array();
  for (const auto& c : report.charts) {
    nlohmann::ordered_json chart;
    chart["r"] = c.r;
    chart["equal"] = c.equal;
    chart["ms"] = c.ms;
    charts.push_back(std::move(chart));
  }

  nlohmann::ordered_json out;
  out["params"] = std::move(params);
  out["index_used"] = report.index_used;
  out["policy"] = report.policy.name();
  out["charts"] = std::move(charts);
  out["micali_ok"] = report.micali_ok;
  out["corollary_ok"] = report.corollary_ok ? nlohmann::ordered_json(*report.corollary_ok) : nullptr;
  out["image_ok"] = report.image_ok ? nlohmann::ordered_json(*report.image_ok) : nullptr;
  out["status"] = to_string(report.status);
  if (!report.reason.empty()) out["reason"] = report.reason;
  return out;
}

}  // namespace

std::string report_json(const VerificationReport& report, int indent) { return to_json(report).dump(indent); }

std::string reports_json(const std::vector<VerificationReport>& reports, int indent) {
  nlohmann::ordered_json out = nlohmann::ordered_json::array();
  for (const auto& r : reports) out.push_back(to_json(r));
  return out.dump(indent);
}

std::string summary_table(const std::vector<VerificationReport>& reports) {
  auto flag = [](const std::optional<bool>& b) { return b ? (*b ? "yes" : "NO") : "-"; };
  std::string out;
  char line[256];
  std::snprintf(line, sizeof line, "%-34s %-9s %5s %-12s %-6s %-9s %-6s %s\n", "params", "policy", "index", "charts",
                "micali", "corollary", "image", "status");
  out += line;
  for (const auto& r : reports) {
    std::string charts;
    for (const auto& c : r.charts) charts += c.equal ? '=' : 'x';
    if (charts.empty()) charts = "-";
    std::snprintf(line, sizeof line, "%-34s %-9s %5ld %-12s %-6s %-9s %-6s %s\n", r.params.to_string().c_str(),
                  r.policy.name().c_str(), r.index_used, charts.c_str(),
                  r.status == Status::skipped ? "-" : (r.micali_ok ? "yes" : "NO"), flag(r.corollary_ok),
                  flag(r.image_ok), to_string(r.status).c_str());
    out += line;
    if (!r.reason.empty()) out += "  reason: " + r.reason + "\n";
  }
  return out;
}

}  // namespace fitt
