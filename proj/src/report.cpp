#include "bcfib/report.hpp"

namespace bcfib {

using nlohmann::json;

json to_json(const BicomplexZ& v) {
  return {{"re", to_decimal(v.re())},
          {"i", to_decimal(v.i())},
          {"j", to_decimal(v.j())},
          {"k", to_decimal(v.k())}};
}

namespace {

json bindings_json(const Bindings& b) {
  json out = json::object();
  for (const auto& [name, v] : b) out[name] = std::to_string(v);
  return out;
}

json grid_json(const ParamGrid& g) {
  json out = json::object();
  for (const auto& r : g.ranges()) out[r.name] = {std::to_string(r.lo), std::to_string(r.hi)};
  return out;
}

}  // namespace

json to_json(const ReportEntry& e) {
  json out{{"claim_id", e.claim_id},
           {"citation", e.citation},
           {"grid", grid_json(e.grid)},
           {"points_checked", std::to_string(e.points_checked)},
           {"verdict", verdict_name(e.verdict)}};
  if (e.first_counterexample) {
    const auto& ce = *e.first_counterexample;
    json cex{{"bindings", bindings_json(ce.bindings)},
             {"lhs", to_json(ce.lhs)},
             {"rhs", to_json(ce.rhs)},
             {"residual", to_json(ce.residual)}};
    if (ce.form_residuals.size() > 1) {
      json forms = json::array();
      for (const auto& r : ce.form_residuals) forms.push_back(to_json(r));
      cex["form_residuals"] = std::move(forms);
    }
    out["first_counterexample"] = std::move(cex);
  } else {
    out["first_counterexample"] = nullptr;
  }
  if (e.form_matches.size() > 1) {
    json forms = json::array();
    for (const auto& m : e.form_matches) forms.push_back(std::to_string(m));
    out["form_matches"] = std::move(forms);
  }
  return out;
}

json to_json(const VerificationReport& report) {
  json claims = json::array();
  std::uint64_t passed = 0;
  for (const auto& e : report.entries) {
    claims.push_back(to_json(e));
    if (e.verdict == Verdict::Pass) ++passed;
  }
  return {{"claims", std::move(claims)},
          {"summary",
           {{"total", std::to_string(report.entries.size())},
            {"pass", std::to_string(passed)},
            {"fail", std::to_string(report.entries.size() - passed)}}}};
}

std::string format_bindings(const Bindings& b) {
  std::string s;
  for (const auto& [name, v] : b) {
    if (!s.empty()) s += ", ";
    s += name + "=" + std::to_string(v);
  }
  return s;
}

void write_text(std::ostream& os, const ReportEntry& e) {
  os << e.claim_id << "  " << verdict_name(e.verdict) << "  (" << e.points_checked
     << " points;";
  for (const auto& r : e.grid.ranges()) os << ' ' << r.name << '=' << r.lo << ".." << r.hi;
  os << ")  " << e.citation << '\n';
  if (e.form_matches.size() > 1) {
    os << "    matches per stated form:";
    for (const auto& m : e.form_matches) os << ' ' << m;
    os << '\n';
  }
  if (e.first_counterexample) {
    const auto& ce = *e.first_counterexample;
    os << "    first counterexample " << format_bindings(ce.bindings) << '\n'
       << "      lhs      = " << to_string(ce.lhs) << '\n'
       << "      rhs      = " << to_string(ce.rhs) << '\n'
       << "      residual = " << to_string(ce.residual) << '\n';
  }
}

void write_text(std::ostream& os, const VerificationReport& report) {
  std::size_t passed = 0;
  for (const auto& e : report.entries) {
    write_text(os, e);
    if (e.verdict == Verdict::Pass) ++passed;
  }
  os << passed << " of " << report.entries.size() << " claims PASS\n";
}

}  // namespace bcfib
