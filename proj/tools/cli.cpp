#include "cli.hpp"

#include <chrono>
#include <fstream>
#include <iomanip>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "bcfib/bifib.hpp"
#include "bcfib/error.hpp"
#include "bcfib/idlang.hpp"
#include "bcfib/identity_engine.hpp"
#include "bcfib/report.hpp"
#include "bcfib/sequences.hpp"

namespace bcfib::cli {
namespace {

constexpr Index kIterativeThreshold = 100000;

enum class Format { Text, Csv, Json };

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

Index parse_index(const std::string& s) {
  std::size_t used = 0;
  long long v = 0;
  try {
    v = std::stoll(s, &used, 10);
  } catch (const std::exception&) {
    throw UsageError("not an integer: '" + s + "'");
  }
  if (used != s.size()) throw UsageError("not an integer: '" + s + "'");
  return static_cast<Index>(v);
}

/// "a..b" or a single value "a".
ParamRange parse_range(const std::string& name, const std::string& text) {
  const auto dots = text.find("..");
  if (dots == std::string::npos) {
    const Index v = parse_index(text);
    return {name, v, v};
  }
  ParamRange r{name, parse_index(text.substr(0, dots)), parse_index(text.substr(dots + 2))};
  if (r.lo > r.hi) throw UsageError("empty range for --" + name + ": " + text);
  return r;
}

Format parse_format(const std::string& s) {
  if (s == "text") return Format::Text;
  if (s == "csv") return Format::Csv;
  if (s == "json") return Format::Json;
  throw UsageError("unknown format: " + s);
}

std::string csv_row(const std::vector<std::string>& cells) {
  std::string s;
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (i) s += ',';
    s += cells[i];
  }
  return s;
}

// ---------------------------------------------------------------------------

int cmd_table(Index from, Index to, Format format, std::ostream& out) {
  if (from > to) throw UsageError("--from must not exceed --to");
  nlohmann::json rows = nlohmann::json::array();
  if (format == Format::Csv) out << "n,F,L,BF_re,BF_i,BF_j,BF_k,BL_re,BL_i,BL_j,BL_k,radicand\n";
  for (Index n = from;; ++n) {
    const BicomplexZ f = bf(n);
    const BicomplexZ l = bl(n);
    const Integer radicand = bf_real_radicand(n);
    switch (format) {
      case Format::Csv:
        out << csv_row({std::to_string(n), to_decimal(f.re()), to_decimal(l.re()),
                        to_decimal(f.re()), to_decimal(f.i()), to_decimal(f.j()), to_decimal(f.k()),
                        to_decimal(l.re()), to_decimal(l.i()), to_decimal(l.j()), to_decimal(l.k()),
                        to_decimal(radicand)})
            << '\n';
        break;
      case Format::Json:
        rows.push_back({{"n", std::to_string(n)},
                        {"F", to_decimal(f.re())},
                        {"L", to_decimal(l.re())},
                        {"BF", to_json(f)},
                        {"BL", to_json(l)},
                        {"radicand", to_decimal(radicand)}});
        break;
      case Format::Text:
        out << "n=" << n << "  F=" << f.re() << "  L=" << l.re() << "  BF=" << to_string(f)
            << "  BL=" << to_string(l) << "  |BF|^2=" << radicand
            << "  |BF|≈" << approx_sqrt(radicand) << '\n';
        break;
    }
    if (n == to) break;
  }
  if (format == Format::Json) out << nlohmann::json{{"rows", rows}}.dump(2) << '\n';
  return 0;
}

void emit_report(const VerificationReport& report, Format format, std::ostream& out) {
  switch (format) {
    case Format::Json:
      out << to_json(report).dump(2) << '\n';
      break;
    case Format::Csv:
      out << "claim_id,verdict,points_checked,first_counterexample\n";
      for (const auto& e : report.entries) {
        std::string cex;
        if (e.first_counterexample) {
          for (const auto& [k, v] : e.first_counterexample->bindings) {
            if (!cex.empty()) cex += ' ';
            cex += k + "=" + std::to_string(v);
          }
        }
        out << csv_row({e.claim_id, verdict_name(e.verdict), std::to_string(e.points_checked), cex})
            << '\n';
      }
      break;
    case Format::Text:
      write_text(out, report);
      break;
  }
}

struct VerifyArgs {
  std::vector<std::string> claims;
  bool all = false;
  std::optional<std::string> eq;
  std::vector<ParamRange> ranges;
  Format format = Format::Text;
  std::optional<std::string> output;
  unsigned jobs = 1;
};

int cmd_verify(const VerifyArgs& a, std::ostream& out) {
  VerificationReport report;
  if (a.eq) {
    if (a.all || !a.claims.empty()) throw UsageError("--eq cannot be combined with --claim/--all");
    try {
      report.entries.push_back(idlang::check_equation(*a.eq, ParamGrid(a.ranges)));
    } catch (const BindingOutOfDomain& e) {
      throw UsageError(e.what());
    }
  } else {
    if (!a.all && a.claims.empty()) throw UsageError("select claims with --claim ID or --all");
    std::vector<std::string> ids = a.claims;
    if (a.all) {
      ids.clear();
      for (const auto& c : catalog()) ids.push_back(c.id);
    }
    try {
      report = run_claims(ids, RunOptions{a.ranges, a.jobs});
    } catch (const UnknownClaim& e) {
      throw UsageError(e.what());
    } catch (const BindingOutOfDomain& e) {
      throw UsageError(e.what());
    }
  }
  emit_report(report, a.format, out);
  if (a.output) {
    std::ofstream file(*a.output);
    if (!file) throw UsageError("cannot write " + *a.output);
    emit_report(report, a.format, file);
  }
  return report.all_pass() ? 0 : 1;
}

int cmd_eval(const std::string& text, const Bindings& b, Format format, std::ostream& out,
             std::ostream& err) {
  BicomplexZ value;
  try {
    value = idlang::eval_expr(*idlang::parse(text), b);
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n'
        << "  " << text << '\n'
        << "  " << std::string(e.offset(), ' ') << "^\n";
    return 2;
  } catch (const UnboundVariable& e) {
    err << "error: " << e.what() << " (pass it with --" << e.name() << ")\n";
    return 2;
  }
  switch (format) {
    case Format::Json: out << to_json(value).dump() << '\n'; break;
    case Format::Csv:
      out << "re,i,j,k\n"
          << csv_row({to_decimal(value.re()), to_decimal(value.i()), to_decimal(value.j()),
                      to_decimal(value.k())})
          << '\n';
      break;
    case Format::Text: out << to_string(value) << '\n'; break;
  }
  return 0;
}

int cmd_bench(Index n, std::ostream& out) {
  if (n < 0) throw UsageError("--n must be nonnegative");
  using clock = std::chrono::steady_clock;
  const auto t0 = clock::now();
  const Integer fast = fib(n);
  const auto t1 = clock::now();
  const std::string digits = to_decimal(fast);
  out << "n = " << n << '\n' << "digits = " << digits.size() << '\n';
  if (digits.size() <= 40) out << "value = " << digits << '\n';
  out << std::fixed << std::setprecision(6);
  out << "fast_doubling_seconds = " << std::chrono::duration<double>(t1 - t0).count() << '\n';
  if (n <= kIterativeThreshold) {
    const auto t2 = clock::now();
    const Integer slow = fib_pair_oracle(n).first;
    const auto t3 = clock::now();
    out << "iterative_seconds = " << std::chrono::duration<double>(t3 - t2).count() << '\n'
        << "agree = " << (slow == fast ? "yes" : "no") << '\n';
    if (slow != fast) return 1;
  } else {
    out << "iterative_seconds = skipped (n > " << kIterativeThreshold << ")\n";
  }
  return 0;
}

}  // namespace

std::string approx_sqrt(const mpz_class& radicand) {
  if (sgn(radicand) <= 0) return "0";
  const auto bits = static_cast<mp_bitcnt_t>(mpz_sizeinbase(radicand.get_mpz_t(), 2) + 128);
  mpf_class root(radicand, bits);
  root = sqrt(root);
  mp_exp_t exp = 0;
  std::string mant = root.get_str(exp, 10, 15);
  mant.resize(15, '0');
  if (exp >= 1 && exp <= 15) {
    std::string s = mant.substr(0, static_cast<std::size_t>(exp));
    const std::string frac = mant.substr(static_cast<std::size_t>(exp));
    if (!frac.empty()) s += "." + frac;
    return s;
  }
  return mant.substr(0, 1) + "." + mant.substr(1) + "e" + (exp - 1 >= 0 ? "+" : "") +
         std::to_string(exp - 1);
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact bicomplex Fibonacci/Lucas arithmetic and identity verification", "bcfib"};
  app.require_subcommand(1);

  std::string format_text = "text";
  std::string n_text, m_text, r_text;

  auto* table = app.add_subcommand("table", "Tabulate F, L, BF, BL and the real-modulus radicand");
  Index from = 0, to = 10;
  table->add_option("--from", from, "first index")->capture_default_str();
  table->add_option("--to", to, "last index")->capture_default_str();
  table->add_option("--format", format_text, "text, csv or json")->capture_default_str();

  auto* verify = app.add_subcommand("verify", "Verify cataloged identities over parameter grids");
  VerifyArgs va;
  std::string eq_text, output_text;
  verify->add_option("--claim", va.claims, "claim id (repeatable)");
  verify->add_flag("--all", va.all, "verify every cataloged claim");
  verify->add_option("--eq", eq_text, "ad hoc equation \"lhs == rhs\"");
  verify->add_option("--n", n_text, "range a..b or single value for n");
  verify->add_option("--m", m_text, "range a..b or single value for m");
  verify->add_option("--r", r_text, "range a..b or single value for r");
  verify->add_option("--format", format_text, "text, csv or json")->capture_default_str();
  verify->add_option("--output", output_text, "also write the report to this file");
  verify->add_option("--jobs", va.jobs, "worker threads")->capture_default_str();

  auto* eval = app.add_subcommand("eval", "Evaluate an expression exactly");
  std::string expression;
  eval->add_option("expression", expression, "expression, e.g. \"BF[n]*BF[n+1]\"")->required();
  eval->add_option("--n", n_text, "value of n");
  eval->add_option("--m", m_text, "value of m");
  eval->add_option("--r", r_text, "value of r");
  eval->add_option("--format", format_text, "text, csv or json")->capture_default_str();

  auto* bench = app.add_subcommand("bench", "Time fast doubling against plain iteration");
  Index bench_n = 1000;
  bench->add_option("--n", bench_n, "index")->capture_default_str();

  // CLI11 expects argv order reversed.
  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }

  try {
    const Format format = parse_format(format_text);
    std::vector<ParamRange> ranges;
    if (!n_text.empty()) ranges.push_back(parse_range("n", n_text));
    if (!m_text.empty()) ranges.push_back(parse_range("m", m_text));
    if (!r_text.empty()) ranges.push_back(parse_range("r", r_text));

    if (table->parsed()) return cmd_table(from, to, format, out);
    if (verify->parsed()) {
      va.format = format;
      va.ranges = ranges;
      if (!eq_text.empty()) va.eq = eq_text;
      if (!output_text.empty()) va.output = output_text;
      return cmd_verify(va, out);
    }
    if (eval->parsed()) {
      Bindings b;
      for (const auto& r : ranges) {
        if (r.lo != r.hi) throw UsageError("eval takes single values, not ranges, for --" + r.name);
        b[r.name] = r.lo;
      }
      return cmd_eval(expression, b, format, out, err);
    }
    if (bench->parsed()) return cmd_bench(bench_n, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }
  return 2;
}

}  // namespace bcfib::cli
