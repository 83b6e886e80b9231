#pragma once

// A small language for stating identities over F, L, BF and BL.
//
//   eqn    := expr "==" expr
//   expr   := term (("+"|"-") term)*
//   term   := factor ("*" factor)*
//   factor := atom ("^" intexp)? | "-" factor
//   atom   := INT | "i" | "j" | "k" | seq | "(" expr ")"
//   seq    := ("F"|"L"|"BF"|"BL") "[" intexp "]"
//
// Index expressions are linear forms over n, m and r. After "^" the exponent
// is a single INT, variable, negated exponent or parenthesized linear form.

#include <map>
#include <memory>
#include <set>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "bcfib/bicomplex.hpp"
#include "bcfib/bindings.hpp"
#include "bcfib/identity_engine.hpp"

namespace bcfib::idlang {

/// c0 + sum of c_v * v over v in {n, m, r}.
class IndexExpr {
 public:
  IndexExpr() = default;
  explicit IndexExpr(Index constant) : constant_(constant) {}
  static IndexExpr variable(const std::string& name, Index coeff = 1);

  Index constant() const { return constant_; }
  /// Only nonzero coefficients are stored.
  const std::map<std::string, Index>& coefficients() const { return coeffs_; }
  bool is_constant() const { return coeffs_.empty(); }

  Index eval(const Bindings& b) const;
  std::set<std::string> variables() const;

  IndexExpr& operator+=(const IndexExpr& o);
  IndexExpr& operator*=(Index c);
  friend IndexExpr operator+(IndexExpr a, const IndexExpr& b) { return a += b; }
  friend IndexExpr operator-(IndexExpr a) { return a *= -1; }
  friend IndexExpr operator-(IndexExpr a, IndexExpr b) { return a += -std::move(b); }
  friend bool operator==(const IndexExpr&, const IndexExpr&) = default;

  /// Canonical spelling: variables in n, m, r order then the constant ("2*n-r+3").
  std::string to_string() const;

 private:
  Index constant_ = 0;
  std::map<std::string, Index> coeffs_;
};

enum class SeqKind { F, L, BF, BL };

const char* seq_kind_name(SeqKind k);

struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;

struct IntLit { Integer value; };
struct UnitLit { Axis unit; };
struct SeqTerm { SeqKind kind; IndexExpr index; };
struct Neg { ExprPtr operand; };
struct Add { ExprPtr lhs, rhs; };
struct Sub { ExprPtr lhs, rhs; };
struct Mul { ExprPtr lhs, rhs; };
struct Pow { ExprPtr base; IndexExpr exponent; };
struct Paren { ExprPtr inner; };

struct Expr {
  std::variant<IntLit, UnitLit, SeqTerm, Neg, Add, Sub, Mul, Pow, Paren> node;
};

// Constructors for building trees by hand.
ExprPtr make_int(Integer v);
ExprPtr make_unit(Axis a);
ExprPtr make_seq(SeqKind k, IndexExpr index);
ExprPtr make_neg(ExprPtr e);
ExprPtr make_add(ExprPtr a, ExprPtr b);
ExprPtr make_sub(ExprPtr a, ExprPtr b);
ExprPtr make_mul(ExprPtr a, ExprPtr b);
ExprPtr make_pow(ExprPtr base, IndexExpr exponent);
ExprPtr make_paren(ExprPtr e);

/// Structural equality, Paren nodes included.
bool equal(const Expr& a, const Expr& b);

struct Equation {
  ExprPtr lhs;
  ExprPtr rhs;
};

/// Throws SyntaxError, UnknownSequenceKind or NonLinearIndex.
ExprPtr parse(std::string_view text);
Equation parse_equation(std::string_view text);

/// Prints `e` so that parse(to_string(e)) reproduces it; parentheses are
/// added only where precedence requires them and no Paren node exists.
std::string to_string(const Expr& e);

std::set<std::string> free_variables(const Expr& e);

/// Throws UnboundVariable or NegativePowerOfNonUnit.
BicomplexZ eval_expr(const Expr& e, const Bindings& b);

/// Checks lhs == rhs_f for each alternative rhs_f on every grid point with
/// the same semantics as a cataloged claim. The grid must give a range for
/// every free variable (BindingOutOfDomain otherwise).
ReportEntry check_alternatives(std::string_view id, std::string_view lhs,
                               const std::vector<std::string>& rhs, const ParamGrid& grid);

/// `text` has the form "lhs == rhs".
ReportEntry check_equation(std::string_view text, const ParamGrid& grid);

/// The claim's DSL rendering checked over `grid` (clipped to the claim's domain).
ReportEntry check_claim_dsl(const ClaimSpec& claim, const ParamGrid& grid);

}  // namespace bcfib::idlang
