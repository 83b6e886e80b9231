#include "bcfib/identity_engine.hpp"

#include <algorithm>
#include <atomic>
#include <limits>
#include <set>
#include <stdexcept>
#include <thread>

#include "bcfib/bifib.hpp"
#include "bcfib/error.hpp"
#include "bcfib/sequences.hpp"

namespace bcfib {

Index lookup(const Bindings& b, const std::string& name) {
  auto it = b.find(name);
  if (it == b.end()) throw UnboundVariable(name);
  return it->second;
}

bool ClaimSpec::in_domain(const Bindings& b) const {
  for (const auto& p : params) {
    auto it = b.find(p.name);
    if (it == b.end() || it->second < p.min) return false;
  }
  for (const auto& c : constraints) {
    if (lookup(b, c.greater) < lookup(b, c.lesser) + c.offset) return false;
  }
  return true;
}

std::string ClaimSpec::domain_string() const {
  std::string s;
  for (const auto& p : params) {
    if (!s.empty()) s += ", ";
    s += p.name + " >= " + std::to_string(p.min);
  }
  for (const auto& c : constraints) {
    s += ", " + c.greater + " >= " + c.lesser;
    if (c.offset > 0) s += " + " + std::to_string(c.offset);
    if (c.offset < 0) s += " - " + std::to_string(-c.offset);
  }
  return s;
}

ParamGrid::ParamGrid(std::vector<ParamRange> ranges) : ranges_(std::move(ranges)) {
  std::set<std::string> seen;
  for (const auto& r : ranges_) {
    if (r.lo > r.hi) {
      throw std::invalid_argument("empty range for " + r.name + ": " + std::to_string(r.lo) +
                                  ".." + std::to_string(r.hi));
    }
    if (!seen.insert(r.name).second) throw std::invalid_argument("duplicate range for " + r.name);
  }
}

const ParamRange* ParamGrid::find(std::string_view name) const {
  for (const auto& r : ranges_) {
    if (r.name == name) return &r;
  }
  return nullptr;
}

std::uint64_t ParamGrid::size() const {
  std::uint64_t total = 1;
  for (const auto& r : ranges_) total *= static_cast<std::uint64_t>(r.hi - r.lo) + 1;
  return total;
}

void ParamGrid::for_each(const std::function<bool(const Bindings&)>& fn) const {
  Bindings b;
  for (const auto& r : ranges_) b[r.name] = r.lo;
  for (;;) {
    if (!fn(b)) return;
    // Odometer with the last range varying fastest.
    std::size_t pos = ranges_.size();
    while (pos > 0) {
      const auto& r = ranges_[pos - 1];
      Index& v = b[r.name];
      if (v < r.hi) {
        ++v;
        break;
      }
      v = r.lo;
      --pos;
    }
    if (pos == 0) return;
  }
}

bool VerificationReport::all_pass() const {
  return std::all_of(entries.begin(), entries.end(),
                     [](const ReportEntry& e) { return e.verdict == Verdict::Pass; });
}

const ReportEntry* VerificationReport::find(std::string_view id) const {
  for (const auto& e : entries) {
    if (e.claim_id == id) return &e;
  }
  return nullptr;
}

const ClaimSpec& find_claim(std::string_view id) {
  for (const auto& c : catalog()) {
    if (c.id == id) return c;
  }
  throw UnknownClaim(std::string(id));
}

ParamGrid default_grid(const ClaimSpec& claim) {
  std::vector<ParamRange> ranges;
  for (const auto& p : claim.params) ranges.push_back({p.name, p.default_lo, p.default_hi});
  return ParamGrid(std::move(ranges));
}

ParamGrid clip_to_domain(const ClaimSpec& claim, const ParamGrid& grid) {
  std::vector<ParamRange> ranges;
  for (const auto& p : claim.params) {
    ParamRange r{p.name, p.default_lo, p.default_hi};
    if (const auto* given = grid.find(p.name)) r = *given;
    r.lo = std::max(r.lo, p.min);
    if (r.lo > r.hi) {
      throw BindingOutOfDomain("claim " + claim.id + ": range for " + p.name +
                               " lies outside the domain " + claim.domain_string());
    }
    ranges.push_back(r);
  }
  return ParamGrid(std::move(ranges));
}

ClaimEvaluation evaluate(const ClaimSpec& claim, const Bindings& b) {
  Bindings own;
  for (const auto& p : claim.params) {
    auto it = b.find(p.name);
    if (it == b.end()) {
      throw BindingOutOfDomain("claim " + claim.id + ": missing binding for " + p.name);
    }
    own[p.name] = it->second;
  }
  if (!claim.in_domain(own)) {
    throw BindingOutOfDomain("claim " + claim.id + ": bindings outside " + claim.domain_string());
  }

  ClaimEvaluation ev;
  ev.claim_id = claim.id;
  ev.bindings = std::move(own);
  ev.lhs = claim.lhs(ev.bindings);
  std::vector<BicomplexZ> values;
  for (std::size_t f = 0; f < claim.rhs.size(); ++f) {
    values.push_back(claim.rhs[f](ev.bindings));
    ev.form_residuals.push_back(ev.lhs - values.back());
    if (!ev.matched_form && ev.form_residuals.back().is_zero()) ev.matched_form = f;
  }
  const std::size_t chosen = ev.matched_form.value_or(0);
  ev.rhs = values[chosen];
  ev.residual = ev.form_residuals[chosen];
  return ev;
}

ClaimEvaluation evaluate_claim(std::string_view id, const Bindings& b) {
  return evaluate(find_claim(id), b);
}

ReportEntry verify(const ClaimSpec& claim, const ParamGrid& grid) {
  ReportEntry entry;
  entry.claim_id = claim.id;
  entry.citation = claim.citation;
  entry.grid = clip_to_domain(claim, grid);
  entry.form_matches.assign(claim.rhs.size(), 0);
  entry.grid.for_each([&](const Bindings& b) {
    if (!claim.in_domain(b)) return true;
    ClaimEvaluation ev = evaluate(claim, b);
    ++entry.points_checked;
    if (ev.matched_form) ++entry.form_matches[*ev.matched_form];
    if (!ev.pass() && !entry.first_counterexample) {
      entry.verdict = Verdict::Fail;
      entry.first_counterexample = std::move(ev);
    }
    return true;
  });
  if (entry.points_checked == 0) {
    throw BindingOutOfDomain("claim " + claim.id + ": no grid point satisfies " +
                             claim.domain_string());
  }
  return entry;
}

ReportEntry verify_claim(std::string_view id, const ParamGrid& grid) {
  return verify(find_claim(id), grid);
}

VerificationReport run_claims(std::span<const std::string> ids, const RunOptions& options) {
  std::vector<const ClaimSpec*> selected;
  for (const auto& id : ids) selected.push_back(&find_claim(id));
  std::sort(selected.begin(), selected.end(),
            [](const ClaimSpec* a, const ClaimSpec* b) { return a->id < b->id; });
  selected.erase(std::unique(selected.begin(), selected.end()), selected.end());

  std::vector<ReportEntry> entries(selected.size());
  std::vector<std::exception_ptr> errors(selected.size());
  auto work = [&](std::size_t idx) {
    try {
      const ClaimSpec& claim = *selected[idx];
      std::vector<ParamRange> ranges;
      for (const auto& o : options.overrides) {
        auto it = std::find_if(claim.params.begin(), claim.params.end(),
                               [&](const ParamDomain& p) { return p.name == o.name; });
        if (it != claim.params.end()) ranges.push_back(o);
      }
      entries[idx] = verify(claim, ParamGrid(std::move(ranges)));
    } catch (...) {
      errors[idx] = std::current_exception();
    }
  };

  const unsigned jobs = std::max(1u, options.jobs);
  if (jobs == 1 || selected.size() < 2) {
    for (std::size_t i = 0; i < selected.size(); ++i) work(i);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < jobs; ++t) {
      pool.emplace_back([&] {
        for (std::size_t i = next++; i < selected.size(); i = next++) work(i);
      });
    }
    for (auto& th : pool) th.join();
  }
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return VerificationReport{std::move(entries)};
}

VerificationReport run_all(const RunOptions& options) {
  std::vector<std::string> ids;
  for (const auto& c : catalog()) ids.push_back(c.id);
  return run_claims(ids, options);
}

BicomplexZ expanded_product(const BicomplexZ& x, const BicomplexZ& y) {
  const Integer& a1 = x.re();
  const Integer& b1 = x.i();
  const Integer& c1 = x.j();
  const Integer& d1 = x.k();
  const Integer& a2 = y.re();
  const Integer& b2 = y.i();
  const Integer& c2 = y.j();
  const Integer& d2 = y.k();
  return {Integer(a1 * a2 - b1 * b2 - c1 * c2 - d1 * d2),
          Integer(a1 * b2 + b1 * a2 - c1 * d2 - d1 * c2),
          Integer(a1 * c2 + c1 * a2 - b1 * d2 - d1 * b2),
          Integer(a1 * d2 + d1 * a2 + b1 * c2 + c1 * b2)};
}

BicomplexZ selfproduct_closed_form(Axis axis, const BicomplexZ& x) {
  const Integer& a = x.re();
  const Integer& b = x.i();
  const Integer& c = x.j();
  const Integer& d = x.k();
  switch (axis) {
    case Axis::I: return {Integer(a * a + b * b - c * c - d * d), 0, Integer(2 * (a * c + b * d)), 0};
    case Axis::J: return {Integer(a * a - b * b + c * c - d * d), Integer(2 * (a * b + c * d)), 0, 0};
    case Axis::K: return {Integer(a * a + b * b + c * c + d * d), 0, 0, Integer(2 * (a * d - b * c))};
  }
  return {};
}

TransferResult linear_transfer_check(const LinearCombination& c) {
  TransferResult result{true, true};
  for (Index shift = 0; shift <= 3; ++shift) {
    Integer sum = 0;
    for (std::size_t m = 0; m < c.alpha.size(); ++m) sum += c.alpha[m] * fib(static_cast<Index>(m) + shift);
    for (std::size_t m = 0; m < c.beta.size(); ++m) sum += c.beta[m] * lucas(static_cast<Index>(m) + shift);
    if (sum != 0) result.premise_holds = false;
  }
  BicomplexZ total;
  for (std::size_t m = 0; m < c.alpha.size(); ++m) total += scale(c.alpha[m], bf(static_cast<Index>(m)));
  for (std::size_t m = 0; m < c.beta.size(); ++m) total += scale(c.beta[m], bl(static_cast<Index>(m)));
  result.conclusion_holds = total.is_zero();
  return result;
}

}  // namespace bcfib
