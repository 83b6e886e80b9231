#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <set>

#include "bcfib/bifib.hpp"
#include "bcfib/error.hpp"
#include "bcfib/identity_engine.hpp"
#include "bcfib/report.hpp"
#include "bcfib/sequences.hpp"
#include "test_support.hpp"

using namespace bcfib;

namespace {

BicomplexZ z(long w, long x, long y, long k) { return {w, x, y, k}; }

ParamGrid grid_n(Index lo, Index hi) { return ParamGrid({{"n", lo, hi}}); }

const std::vector<std::string> kExpectedIds = {
    "C-D2I",  "C-D2J",  "C-D2K",  "C-E12",  "C-E14I", "C-E14J", "C-E14K", "C-MODR",
    "C-T1-1", "C-T1-2", "C-T1-3", "C-T1-4", "C-T1-5", "C-T1-6", "C-T1-7", "C-T1-8",
    "C-T2",   "C-T3F",  "C-T3L",  "C-T4F",  "C-T4L",  "C-T5F",  "C-T5L",  "C-T6"};

}  // namespace

TEST_CASE("catalog contents") {
  std::vector<std::string> ids;
  for (const auto& c : catalog()) ids.push_back(c.id);
  CHECK(ids == kExpectedIds);
  CHECK(std::set<std::string>(ids.begin(), ids.end()).size() == ids.size());
  for (const auto& c : catalog()) {
    CHECK_FALSE(c.citation.empty());
    CHECK(c.rhs.size() == c.dsl_rhs.size());
    CHECK_FALSE(c.dsl_lhs.empty());
  }
  CHECK(find_claim("C-T6").rhs.size() == 2);
}

TEST_CASE("C-T6 domain is n >= r >= 1") {
  const ClaimSpec& c = find_claim("C-T6");
  CHECK(c.in_domain({{"n", 1}, {"r", 1}}));
  CHECK(c.in_domain({{"n", 5}, {"r", 5}}));
  CHECK_FALSE(c.in_domain({{"n", 1}, {"r", 2}}));
  CHECK_FALSE(c.in_domain({{"n", 3}, {"r", 0}}));
  CHECK_FALSE(c.in_domain({{"n", 0}, {"r", 0}}));
  CHECK(c.domain_string() == "n >= 1, r >= 1, n >= r");
}

TEST_CASE("evaluate_claim examples") {
  auto t5f = evaluate_claim("C-T5F", {{"n", 1}});
  CHECK(t5f.lhs == z(0, 0, -6, -3));
  CHECK(t5f.rhs == z(0, 0, -6, -3));
  CHECK(t5f.residual.is_zero());
  CHECK(t5f.pass());

  auto t5l = evaluate_claim("C-T5L", {{"n", 1}});
  CHECK(t5l.lhs == z(0, 0, 30, 15));
  CHECK(t5l.rhs == z(0, 0, 10, 5));
  CHECK(t5l.residual == z(0, 0, 20, 10));
  CHECK_FALSE(t5l.pass());

  auto t18 = evaluate_claim("C-T1-8", {{"n", 0}});
  CHECK(t18.lhs == z(-10, 0, 8, 0));
  CHECK(t18.rhs == z(-10, 0, 0, 0));
  CHECK(t18.residual == z(0, 0, 8, 0));

  // d'Ocagne at m = 1, n = 0: only the j component disagrees.
  auto t2 = evaluate_claim("C-T2", {{"n", 0}, {"m", 1}});
  CHECK(t2.lhs == z(0, 0, 6, 3));
  CHECK(t2.rhs == z(0, 0, 7, 3));
  CHECK(t2.residual == z(0, 0, -1, 0));

  // Catalan at r = 1 contradicts Cassini.
  auto t6 = evaluate_claim("C-T6", {{"n", 2}, {"r", 1}});
  auto cassini = evaluate_claim("C-T5F", {{"n", 2}});
  CHECK(t6.lhs == -cassini.lhs);
  CHECK_FALSE(t6.pass());
  CHECK_FALSE(t6.matched_form);
  CHECK(t6.form_residuals.size() == 2);
}

TEST_CASE("evaluate_claim errors") {
  CHECK_THROWS_AS(evaluate_claim("C-NOPE", {{"n", 0}}), UnknownClaim);
  CHECK_THROWS_AS(evaluate_claim("C-T5F", {{"n", 0}}), BindingOutOfDomain);
  CHECK_THROWS_AS(evaluate_claim("C-T6", {{"n", 1}, {"r", 2}}), BindingOutOfDomain);
  CHECK_THROWS_AS(evaluate_claim("C-T1-7", {{"n", 1}}), BindingOutOfDomain);
  CHECK_THROWS_AS(verify_claim("C-NOPE", ParamGrid()), UnknownClaim);
  CHECK_THROWS_AS(verify_claim("C-T5F", grid_n(-5, 0)), BindingOutOfDomain);
}

TEST_CASE("verify_claim examples") {
  auto t4f = verify_claim("C-T4F", grid_n(0, 50));
  CHECK(t4f.verdict == Verdict::Pass);
  CHECK(t4f.points_checked == 51);
  CHECK_FALSE(t4f.first_counterexample);

  auto modr = verify_claim("C-MODR", grid_n(0, 40));
  CHECK(modr.verdict == Verdict::Fail);
  REQUIRE(modr.first_counterexample);
  CHECK(modr.first_counterexample->bindings == Bindings{{"n", 0}});
  CHECK(modr.first_counterexample->lhs == z(6, 0, 0, 0));
  CHECK(modr.first_counterexample->rhs == z(14, 0, 0, 0));

  auto t3f = verify_claim("C-T3F", grid_n(0, 50));
  CHECK(t3f.verdict == Verdict::Pass);

  auto t5l = verify_claim("C-T5L", grid_n(1, 10));
  REQUIRE(t5l.first_counterexample);
  CHECK(t5l.first_counterexample->bindings == Bindings{{"n", 1}});
  CHECK(t5l.first_counterexample->residual == z(0, 0, 20, 10));
}

TEST_CASE("grids") {
  ParamGrid g({{"n", 0, 2}, {"m", 5, 6}});
  CHECK(g.size() == 6);
  std::vector<std::pair<Index, Index>> seen;
  g.for_each([&](const Bindings& b) {
    seen.emplace_back(b.at("n"), b.at("m"));
    return true;
  });
  const std::vector<std::pair<Index, Index>> lex = {{0, 5}, {0, 6}, {1, 5}, {1, 6}, {2, 5}, {2, 6}};
  CHECK(seen == lex);
  CHECK_THROWS_AS(ParamGrid({{"n", 3, 2}}), std::invalid_argument);
  CHECK_THROWS_AS(ParamGrid({{"n", 0, 2}, {"n", 0, 1}}), std::invalid_argument);

  // Missing parameters fall back to defaults; lower bounds clip.
  const ParamGrid clipped = clip_to_domain(find_claim("C-T6"), ParamGrid({{"n", -4, 7}}));
  CHECK(clipped == ParamGrid({{"n", 1, 7}, {"r", 1, 12}}));
  // Relational constraints skip points rather than clip ranges.
  auto t6 = verify_claim("C-T6", ParamGrid({{"n", 1, 3}, {"r", 1, 3}}));
  CHECK(t6.points_checked == 6);
}

TEST_CASE("default verdict table") {
  const auto report = run_all();
  REQUIRE(report.entries.size() == kExpectedIds.size());
  const std::set<std::string> expected_fail = {"C-E12", "C-T1-8", "C-T2",  "C-T5L", "C-T6",
                                               "C-D2I", "C-D2J",  "C-D2K", "C-MODR"};
  for (std::size_t i = 0; i < report.entries.size(); ++i) {
    const auto& e = report.entries[i];
    CHECK(e.claim_id == kExpectedIds[i]);
    const Verdict want = expected_fail.count(e.claim_id) ? Verdict::Fail : Verdict::Pass;
    CHECK_MESSAGE(e.verdict == want, e.claim_id);
    CHECK(e.first_counterexample.has_value() == (want == Verdict::Fail));
  }
  CHECK_FALSE(report.all_pass());

  // First counterexamples, frozen from an independent scalar oracle.
  auto first = [&](const char* id) { return *report.find(id)->first_counterexample; };
  CHECK(first("C-D2I").lhs.re() == -4);
  CHECK(first("C-D2I").rhs.re() == -12);
  CHECK(first("C-D2J").residual == z(2, 0, 0, 0));
  CHECK(first("C-D2K").lhs.re() == 6);
  CHECK(first("C-D2K").rhs.re() == 14);
  CHECK(first("C-E12").residual == z(8, 0, 0, 0));  // 2 * F_3 * F_3 at n = m = 0
  CHECK(first("C-T2").bindings == Bindings{{"n", 0}, {"m", 0}});
  CHECK(first("C-T2").residual == z(0, 0, -2, 0));
  CHECK(first("C-T6").bindings == Bindings{{"n", 1}, {"r", 1}});
  CHECK(first("C-T6").lhs == z(0, 0, 6, 3));
  CHECK(first("C-T6").form_residuals[0] == z(0, 0, 2, 3));
  CHECK(first("C-T6").form_residuals[1] == z(0, 0, 4, 3));
  CHECK(report.find("C-T6")->form_matches == std::vector<std::uint64_t>{0, 0});
  CHECK(report.find("C-T6")->points_checked == 654);
}

TEST_CASE("conjugate self-product closed forms: only the real parts are wrong") {
  for (const char* id : {"C-D2I", "C-D2J", "C-D2K"}) {
    const ClaimSpec& c = find_claim(id);
    for (Index n = 0; n <= 60; ++n) {
      const auto ev = evaluate(c, {{"n", n}});
      REQUIRE(ev.residual.i() == 0);
      REQUIRE(ev.residual.j() == 0);
      REQUIRE(ev.residual.k() == 0);
      REQUIRE(ev.residual.re() != 0);
    }
  }
}

TEST_CASE("run_all is deterministic across runs and thread counts") {
  const std::string a = to_json(run_all()).dump();
  const std::string b = to_json(run_all()).dump();
  const std::string c = to_json(run_all(RunOptions{{}, 4})).dump();
  CHECK(a == b);
  CHECK(a == c);
}

TEST_CASE("run_claims orders by id, deduplicates and applies overrides") {
  const std::vector<std::string> ids = {"C-T5L", "C-T1-1", "C-T5L"};
  const auto r = run_claims(ids, RunOptions{{{"n", 1, 10}}, 1});
  REQUIRE(r.entries.size() == 2);
  CHECK(r.entries[0].claim_id == "C-T1-1");
  CHECK(r.entries[1].claim_id == "C-T5L");
  CHECK(r.entries[0].points_checked == 10);
  CHECK_THROWS_AS(run_claims(std::vector<std::string>{"bogus"}), UnknownClaim);
}

TEST_CASE("residuals are lhs - rhs at every point") {
  for (const auto& c : catalog()) {
    ParamGrid g = clip_to_domain(c, ParamGrid({{"n", 0, 8}, {"m", 0, 5}, {"r", 1, 4}}));
    g.for_each([&](const Bindings& b) {
      if (!c.in_domain(b)) return true;
      const auto ev = evaluate(c, b);
      REQUIRE(ev.residual == ev.lhs - ev.rhs);
      REQUIRE(ev.pass() == ev.residual.is_zero());
      REQUIRE(ev.lhs == c.lhs(b));
      for (std::size_t f = 0; f < c.rhs.size(); ++f) {
        REQUIRE(ev.form_residuals[f] == ev.lhs - c.rhs[f](b));
      }
      return true;
    });
  }
}

TEST_CASE("subset grids never flip a PASS") {
  std::mt19937_64 rng(0x5b);
  const auto report = run_all();
  for (const auto& e : report.entries) {
    if (e.verdict != Verdict::Pass) continue;
    const ClaimSpec& c = find_claim(e.claim_id);
    for (int t = 0; t < 5; ++t) {
      std::vector<ParamRange> ranges;
      for (const auto& r : e.grid.ranges()) {
        std::uniform_int_distribution<Index> pick(r.lo, r.hi);
        Index a = pick(rng), b = pick(rng);
        if (a > b) std::swap(a, b);
        ranges.push_back({r.name, a, b});
      }
      ReportEntry sub;
      try {
        sub = verify(c, ParamGrid(ranges));
      } catch (const BindingOutOfDomain&) {
        continue;  // subset clipped away every point
      }
      REQUIRE(sub.verdict == Verdict::Pass);
    }
  }
}

TEST_CASE("closed forms on arbitrary values") {
  std::mt19937_64 rng(0xe14);
  for (int t = 0; t < 200; ++t) {
    const BicomplexZ x = testing::random_bicomplex(rng, 128);
    const BicomplexZ y = testing::random_bicomplex(rng, 128);
    for (Axis a : {Axis::I, Axis::J, Axis::K}) {
      REQUIRE(self_product(a, x) == selfproduct_closed_form(a, x));
    }
    // The expanded product differs from the ring product only by 2 d1 d2 in the real part.
    const BicomplexZ diff = x * y - expanded_product(x, y);
    REQUIRE(diff == BicomplexZ::real(Integer(2 * x.k() * y.k())));
  }
}

TEST_CASE("linear_transfer_check examples") {
  auto t = linear_transfer_check({{1, 1, -1}, {}});
  CHECK(t.premise_holds);
  CHECK(t.conclusion_holds);
  t = linear_transfer_check({{1, 0, 1}, {0, -1}});
  CHECK(t.premise_holds);
  CHECK(t.conclusion_holds);
  t = linear_transfer_check({{0}, {0}});
  CHECK(t.premise_holds);
  CHECK(t.conclusion_holds);
  t = linear_transfer_check({{1}, {}});
  CHECK_FALSE(t.premise_holds);
  CHECK_FALSE(t.conclusion_holds);
}

TEST_CASE("transfer principle: premise implies conclusion") {
  std::mt19937_64 rng(0x7f);
  std::uniform_int_distribution<int> coeff(-5, 5);
  std::uniform_int_distribution<int> len(0, 6);
  int premises = 0;
  for (int t = 0; t < 400; ++t) {
    LinearCombination c;
    if (t % 2 == 0) {
      c.alpha.resize(len(rng));
      c.beta.resize(len(rng));
      for (auto& a : c.alpha) a = coeff(rng);
      for (auto& b : c.beta) b = coeff(rng);
    } else {
      // Integer combination of F_k + F_{k+1} - F_{k+2} and L_{k+1} - F_k - F_{k+2}.
      c.alpha.assign(6, 0);
      c.beta.assign(6, 0);
      for (int k = 0; k + 2 < 6; ++k) {
        const int u = coeff(rng), v = coeff(rng);
        c.alpha[k] += u - v;
        c.alpha[k + 1] += u;
        c.alpha[k + 2] += -u - v;
        c.beta[k + 1] += v;
      }
    }
    const auto r = linear_transfer_check(c);
    if (r.premise_holds) ++premises;
    REQUIRE((!r.premise_holds || r.conclusion_holds));
  }
  CHECK(premises >= 200);
}
