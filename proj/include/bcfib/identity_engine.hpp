#pragma once

// Catalog of asserted bicomplex Fibonacci/Lucas identities and their exact
// verification over finite parameter grids.

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "bcfib/bicomplex.hpp"
#include "bcfib/bindings.hpp"

namespace bcfib {

using Evaluator = std::function<BicomplexZ(const Bindings&)>;

struct ParamDomain {
  std::string name;
  Index min;  ///< inclusive lower bound
  Index default_lo;
  Index default_hi;
};

/// greater >= lesser + offset
struct OrderConstraint {
  std::string greater;
  std::string lesser;
  Index offset = 0;
};

struct ClaimSpec {
  std::string id;
  std::string citation;
  std::vector<ParamDomain> params;
  std::vector<OrderConstraint> constraints;
  Evaluator lhs;
  /// Stated right-hand sides; a point passes if any of them matches. The
  /// first one is the primary statement.
  std::vector<Evaluator> rhs;
  /// The same identity in the expression language.
  std::string dsl_lhs;
  std::vector<std::string> dsl_rhs;

  bool in_domain(const Bindings& b) const;
  std::string domain_string() const;
};

struct ParamRange {
  std::string name;
  Index lo;
  Index hi;
  friend bool operator==(const ParamRange&, const ParamRange&) = default;
};

/// Inclusive integer box, iterated lexicographically in range order.
class ParamGrid {
 public:
  ParamGrid() = default;
  /// Throws std::invalid_argument if some lo > hi or a name repeats.
  explicit ParamGrid(std::vector<ParamRange> ranges);

  const std::vector<ParamRange>& ranges() const { return ranges_; }
  const ParamRange* find(std::string_view name) const;
  std::uint64_t size() const;

  /// Calls fn(bindings) for every point; stops early if fn returns false.
  void for_each(const std::function<bool(const Bindings&)>& fn) const;

  friend bool operator==(const ParamGrid&, const ParamGrid&) = default;

 private:
  std::vector<ParamRange> ranges_;
};

struct ClaimEvaluation {
  std::string claim_id;
  Bindings bindings;
  BicomplexZ lhs;
  BicomplexZ rhs;       ///< the matching form, or the primary one if none matches
  BicomplexZ residual;  ///< lhs - rhs
  std::vector<BicomplexZ> form_residuals;  ///< lhs - rhs_f for each stated form
  std::optional<std::size_t> matched_form;

  bool pass() const { return residual.is_zero(); }
};

enum class Verdict { Pass, Fail };

inline const char* verdict_name(Verdict v) { return v == Verdict::Pass ? "PASS" : "FAIL"; }

struct ReportEntry {
  std::string claim_id;
  std::string citation;
  ParamGrid grid;
  std::uint64_t points_checked = 0;
  Verdict verdict = Verdict::Pass;
  std::optional<ClaimEvaluation> first_counterexample;
  std::vector<std::uint64_t> form_matches;  ///< points matched by each stated form
};

struct VerificationReport {
  std::vector<ReportEntry> entries;  ///< ordered by claim id
  bool all_pass() const;
  const ReportEntry* find(std::string_view id) const;
};

/// Every cataloged identity, ordered by id.
const std::vector<ClaimSpec>& catalog();
/// Throws UnknownClaim.
const ClaimSpec& find_claim(std::string_view id);

ParamGrid default_grid(const ClaimSpec& claim);
/// Restricts `grid` to the claim's parameter lower bounds; parameters the grid
/// does not mention take their default range. Throws BindingOutOfDomain if
/// the result is empty.
ParamGrid clip_to_domain(const ClaimSpec& claim, const ParamGrid& grid);

/// Throws BindingOutOfDomain when `b` misses a parameter or violates the domain.
ClaimEvaluation evaluate(const ClaimSpec& claim, const Bindings& b);
ClaimEvaluation evaluate_claim(std::string_view id, const Bindings& b);

ReportEntry verify(const ClaimSpec& claim, const ParamGrid& grid);
ReportEntry verify_claim(std::string_view id, const ParamGrid& grid);

struct RunOptions {
  /// Per-parameter range overrides applied to every selected claim.
  std::vector<ParamRange> overrides;
  /// Worker threads; results do not depend on this.
  unsigned jobs = 1;
};

VerificationReport run_claims(std::span<const std::string> ids, const RunOptions& options = {});
VerificationReport run_all(const RunOptions& options = {});

/// Expanded product with the d1 d2 term entering the real part negatively.
BicomplexZ expanded_product(const BicomplexZ& x, const BicomplexZ& y);
/// Closed form of x times its conjugate along `axis`.
BicomplexZ selfproduct_closed_form(Axis axis, const BicomplexZ& x);

struct LinearCombination {
  std::vector<Integer> alpha;  ///< coefficients of F_{m+i} / BF_m
  std::vector<Integer> beta;   ///< coefficients of L_{m+i} / BL_m
};

struct TransferResult {
  bool premise_holds;     ///< scalar relation holds for i = 0..3
  bool conclusion_holds;  ///< sum alpha_m BF_m + beta_m BL_m == 0
};

TransferResult linear_transfer_check(const LinearCombination& c);

}  // namespace bcfib
