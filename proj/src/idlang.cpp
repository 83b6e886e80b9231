#include "bcfib/idlang.hpp"

#include <algorithm>
#include <cctype>
#include <limits>
#include <stdexcept>

#include "bcfib/bifib.hpp"
#include "bcfib/error.hpp"
#include "bcfib/sequences.hpp"

namespace bcfib::idlang {
namespace {

Index checked_add(Index a, Index b) {
  Index r;
  if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("index arithmetic overflow");
  return r;
}

Index checked_mul(Index a, Index b) {
  Index r;
  if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("index arithmetic overflow");
  return r;
}

bool is_index_variable(std::string_view s) { return s == "n" || s == "m" || s == "r"; }

int variable_rank(const std::string& v) {
  if (v == "n") return 0;
  if (v == "m") return 1;
  if (v == "r") return 2;
  return 3;
}

}  // namespace

// ---------------------------------------------------------------------------
// IndexExpr

IndexExpr IndexExpr::variable(const std::string& name, Index coeff) {
  IndexExpr e;
  if (coeff != 0) e.coeffs_[name] = coeff;
  return e;
}

Index IndexExpr::eval(const Bindings& b) const {
  Index v = constant_;
  for (const auto& [name, c] : coeffs_) v = checked_add(v, checked_mul(c, lookup(b, name)));
  return v;
}

std::set<std::string> IndexExpr::variables() const {
  std::set<std::string> out;
  for (const auto& [name, c] : coeffs_) out.insert(name);
  return out;
}

IndexExpr& IndexExpr::operator+=(const IndexExpr& o) {
  constant_ = checked_add(constant_, o.constant_);
  for (const auto& [name, c] : o.coeffs_) {
    Index& slot = coeffs_[name];
    slot = checked_add(slot, c);
    if (slot == 0) coeffs_.erase(name);
  }
  return *this;
}

IndexExpr& IndexExpr::operator*=(Index c) {
  constant_ = checked_mul(constant_, c);
  if (c == 0) {
    coeffs_.clear();
    return *this;
  }
  for (auto& [name, v] : coeffs_) v = checked_mul(v, c);
  return *this;
}

std::string IndexExpr::to_string() const {
  std::vector<std::pair<std::string, Index>> terms(coeffs_.begin(), coeffs_.end());
  std::sort(terms.begin(), terms.end(), [](const auto& a, const auto& b) {
    return variable_rank(a.first) < variable_rank(b.first) ||
           (variable_rank(a.first) == variable_rank(b.first) && a.first < b.first);
  });
  std::string s;
  for (const auto& [name, c] : terms) {
    if (c < 0) s += "-";
    else if (!s.empty()) s += "+";
    // Magnitude without negating INT64_MIN.
    const auto mag = c < 0 ? static_cast<std::uint64_t>(-(c + 1)) + 1 : static_cast<std::uint64_t>(c);
    if (mag != 1) s += std::to_string(mag) + "*";
    s += name;
  }
  if (constant_ != 0 || s.empty()) {
    if (constant_ >= 0 && !s.empty()) s += "+";
    s += std::to_string(constant_);
  }
  return s;
}

const char* seq_kind_name(SeqKind k) {
  switch (k) {
    case SeqKind::F: return "F";
    case SeqKind::L: return "L";
    case SeqKind::BF: return "BF";
    case SeqKind::BL: return "BL";
  }
  return "?";
}

// ---------------------------------------------------------------------------
// AST helpers

ExprPtr make_int(Integer v) { return std::make_shared<Expr>(Expr{IntLit{std::move(v)}}); }
ExprPtr make_unit(Axis a) { return std::make_shared<Expr>(Expr{UnitLit{a}}); }
ExprPtr make_seq(SeqKind k, IndexExpr index) {
  return std::make_shared<Expr>(Expr{SeqTerm{k, std::move(index)}});
}
ExprPtr make_neg(ExprPtr e) { return std::make_shared<Expr>(Expr{Neg{std::move(e)}}); }
ExprPtr make_add(ExprPtr a, ExprPtr b) {
  return std::make_shared<Expr>(Expr{Add{std::move(a), std::move(b)}});
}
ExprPtr make_sub(ExprPtr a, ExprPtr b) {
  return std::make_shared<Expr>(Expr{Sub{std::move(a), std::move(b)}});
}
ExprPtr make_mul(ExprPtr a, ExprPtr b) {
  return std::make_shared<Expr>(Expr{Mul{std::move(a), std::move(b)}});
}
ExprPtr make_pow(ExprPtr base, IndexExpr exponent) {
  return std::make_shared<Expr>(Expr{Pow{std::move(base), std::move(exponent)}});
}
ExprPtr make_paren(ExprPtr e) { return std::make_shared<Expr>(Expr{Paren{std::move(e)}}); }

bool equal(const Expr& a, const Expr& b) {
  if (a.node.index() != b.node.index()) return false;
  return std::visit(
      [&b](const auto& x) -> bool {
        using T = std::decay_t<decltype(x)>;
        const T& y = std::get<T>(b.node);
        if constexpr (std::is_same_v<T, IntLit>) return x.value == y.value;
        else if constexpr (std::is_same_v<T, UnitLit>) return x.unit == y.unit;
        else if constexpr (std::is_same_v<T, SeqTerm>) return x.kind == y.kind && x.index == y.index;
        else if constexpr (std::is_same_v<T, Neg>) return equal(*x.operand, *y.operand);
        else if constexpr (std::is_same_v<T, Pow>)
          return x.exponent == y.exponent && equal(*x.base, *y.base);
        else if constexpr (std::is_same_v<T, Paren>) return equal(*x.inner, *y.inner);
        else return equal(*x.lhs, *y.lhs) && equal(*x.rhs, *y.rhs);
      },
      a.node);
}

// ---------------------------------------------------------------------------
// Lexer and parser

namespace {

enum class Tok { Int, Ident, Plus, Minus, Star, Caret, LParen, RParen, LBracket, RBracket, EqEq, End };

struct Token {
  Tok kind;
  std::string text;
  std::size_t offset;
};

std::string describe(const Token& t) {
  if (t.kind == Tok::End) return "end of input";
  return "'" + t.text + "'";
}

std::vector<Token> lex(std::string_view src) {
  std::vector<Token> out;
  std::size_t pos = 0;
  while (pos < src.size()) {
    const char c = src[pos];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++pos;
      continue;
    }
    const std::size_t start = pos;
    if (std::isdigit(static_cast<unsigned char>(c))) {
      while (pos < src.size() && std::isdigit(static_cast<unsigned char>(src[pos]))) ++pos;
      out.push_back({Tok::Int, std::string(src.substr(start, pos - start)), start});
      continue;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      while (pos < src.size() &&
             (std::isalnum(static_cast<unsigned char>(src[pos])) || src[pos] == '_')) {
        ++pos;
      }
      out.push_back({Tok::Ident, std::string(src.substr(start, pos - start)), start});
      continue;
    }
    Tok kind;
    std::size_t len = 1;
    switch (c) {
      case '+': kind = Tok::Plus; break;
      case '-': kind = Tok::Minus; break;
      case '*': kind = Tok::Star; break;
      case '^': kind = Tok::Caret; break;
      case '(': kind = Tok::LParen; break;
      case ')': kind = Tok::RParen; break;
      case '[': kind = Tok::LBracket; break;
      case ']': kind = Tok::RBracket; break;
      case '=':
        if (pos + 1 < src.size() && src[pos + 1] == '=') {
          kind = Tok::EqEq;
          len = 2;
          break;
        }
        throw SyntaxError(start, {"'=='"}, "'='");
      default:
        throw SyntaxError(start, {"an operator, operand or bracket"},
                          "'" + std::string(1, c) + "'");
    }
    out.push_back({kind, std::string(src.substr(start, len)), start});
    pos += len;
  }
  out.push_back({Tok::End, "", src.size()});
  return out;
}

const std::vector<std::string> kAtomStart = {"INT", "i", "j", "k", "F[", "L[", "BF[", "BL[", "(", "-"};
const std::vector<std::string> kIndexStart = {"INT", "n", "m", "r", "(", "-"};

class Parser {
 public:
  explicit Parser(std::string_view src) : tokens_(lex(src)) {}

  ExprPtr expression_only() {
    ExprPtr e = expr();
    if (peek().kind != Tok::End) throw SyntaxError(peek().offset, {"'+'", "'-'", "'*'", "end of input"}, describe(peek()));
    return e;
  }

  Equation equation() {
    ExprPtr lhs = expr();
    if (peek().kind != Tok::EqEq) throw SyntaxError(peek().offset, {"'+'", "'-'", "'*'", "'=='"}, describe(peek()));
    advance();
    ExprPtr rhs = expr();
    if (peek().kind != Tok::End) throw SyntaxError(peek().offset, {"'+'", "'-'", "'*'", "end of input"}, describe(peek()));
    return {std::move(lhs), std::move(rhs)};
  }

 private:
  const Token& peek(std::size_t ahead = 0) const {
    return tokens_[std::min(pos_ + ahead, tokens_.size() - 1)];
  }
  const Token& advance() { return tokens_[pos_++]; }

  void expect(Tok kind, const char* spelled) {
    if (peek().kind != kind) throw SyntaxError(peek().offset, {spelled}, describe(peek()));
    advance();
  }

  ExprPtr expr() {
    ExprPtr e = term();
    while (peek().kind == Tok::Plus || peek().kind == Tok::Minus) {
      const bool plus = advance().kind == Tok::Plus;
      ExprPtr rhs = term();
      e = plus ? make_add(std::move(e), std::move(rhs)) : make_sub(std::move(e), std::move(rhs));
    }
    return e;
  }

  ExprPtr term() {
    ExprPtr e = factor();
    while (peek().kind == Tok::Star) {
      advance();
      e = make_mul(std::move(e), factor());
    }
    return e;
  }

  ExprPtr factor() {
    if (peek().kind == Tok::Minus) {
      advance();
      return make_neg(factor());
    }
    ExprPtr base = atom();
    if (peek().kind == Tok::Caret) {
      advance();
      return make_pow(std::move(base), index_unary());
    }
    return base;
  }

  ExprPtr atom() {
    const Token& t = peek();
    switch (t.kind) {
      case Tok::Int:
        advance();
        return make_int(Integer(t.text, 10));
      case Tok::LParen: {
        advance();
        ExprPtr inner = expr();
        expect(Tok::RParen, "')'");
        return make_paren(std::move(inner));
      }
      case Tok::Ident: {
        if (t.text == "i") return advance(), make_unit(Axis::I);
        if (t.text == "j") return advance(), make_unit(Axis::J);
        if (t.text == "k") return advance(), make_unit(Axis::K);
        SeqKind kind;
        if (t.text == "F") kind = SeqKind::F;
        else if (t.text == "L") kind = SeqKind::L;
        else if (t.text == "BF") kind = SeqKind::BF;
        else if (t.text == "BL") kind = SeqKind::BL;
        else if (peek(1).kind == Tok::LBracket) throw UnknownSequenceKind(t.offset, t.text);
        else throw SyntaxError(t.offset, kAtomStart, describe(t));
        advance();
        expect(Tok::LBracket, "'['");
        IndexExpr index = index_expr();
        expect(Tok::RBracket, "']'");
        return make_seq(kind, std::move(index));
      }
      default:
        throw SyntaxError(t.offset, kAtomStart, describe(t));
    }
  }

  IndexExpr index_expr() {
    IndexExpr e = index_term();
    while (peek().kind == Tok::Plus || peek().kind == Tok::Minus) {
      const bool plus = advance().kind == Tok::Plus;
      IndexExpr rhs = index_term();
      e = plus ? e + rhs : e - rhs;
    }
    return e;
  }

  IndexExpr index_term() {
    IndexExpr e = index_power();
    while (peek().kind == Tok::Star) {
      const std::size_t at = advance().offset;
      IndexExpr rhs = index_power();
      if (!e.is_constant() && !rhs.is_constant()) throw NonLinearIndex(at);
      if (e.is_constant()) {
        rhs *= e.constant();
        e = std::move(rhs);
      } else {
        e *= rhs.constant();
      }
    }
    return e;
  }

  IndexExpr index_power() {
    IndexExpr e = index_unary();
    if (peek().kind == Tok::Caret) {
      if (!e.is_constant()) throw NonLinearIndex(peek().offset);
      throw SyntaxError(peek().offset, {"'*'", "'+'", "'-'", "']'"}, describe(peek()));
    }
    return e;
  }

  IndexExpr index_unary() {
    if (peek().kind == Tok::Minus) {
      advance();
      return -index_unary();
    }
    const Token& t = peek();
    switch (t.kind) {
      case Tok::Int: {
        advance();
        Integer v(t.text, 10);
        if (!v.fits_slong_p()) throw SyntaxError(t.offset, {"an index constant within 64 bits"}, describe(t));
        return IndexExpr(static_cast<Index>(v.get_si()));
      }
      case Tok::Ident:
        if (is_index_variable(t.text)) {
          advance();
          return IndexExpr::variable(t.text);
        }
        throw SyntaxError(t.offset, kIndexStart, describe(t));
      case Tok::LParen: {
        advance();
        IndexExpr inner = index_expr();
        expect(Tok::RParen, "')'");
        return inner;
      }
      default:
        throw SyntaxError(t.offset, kIndexStart, describe(t));
    }
  }

  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
};

}  // namespace

ExprPtr parse(std::string_view text) { return Parser(text).expression_only(); }

Equation parse_equation(std::string_view text) { return Parser(text).equation(); }

// ---------------------------------------------------------------------------
// Printing

namespace {

int precedence(const Expr& e) {
  return std::visit(
      [](const auto& x) -> int {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, Add> || std::is_same_v<T, Sub>) return 1;
        else if constexpr (std::is_same_v<T, Mul>) return 2;
        else if constexpr (std::is_same_v<T, Neg>) return 3;
        else if constexpr (std::is_same_v<T, Pow>) return 4;
        else return 5;
      },
      e.node);
}

std::string print(const Expr& e, int min_prec);

std::string exponent_string(const IndexExpr& x) {
  if (x.is_constant() && x.constant() >= 0) return std::to_string(x.constant());
  if (x.constant() == 0 && x.coefficients().size() == 1 && x.coefficients().begin()->second == 1) {
    return x.coefficients().begin()->first;
  }
  return "(" + x.to_string() + ")";
}

std::string raw(const Expr& e) {
  return std::visit(
      [](const auto& x) -> std::string {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, IntLit>) return to_decimal(x.value);
        else if constexpr (std::is_same_v<T, UnitLit>) return axis_name(x.unit);
        else if constexpr (std::is_same_v<T, SeqTerm>)
          return std::string(seq_kind_name(x.kind)) + "[" + x.index.to_string() + "]";
        else if constexpr (std::is_same_v<T, Neg>) return "-" + print(*x.operand, 3);
        else if constexpr (std::is_same_v<T, Add>) return print(*x.lhs, 1) + " + " + print(*x.rhs, 2);
        else if constexpr (std::is_same_v<T, Sub>) return print(*x.lhs, 1) + " - " + print(*x.rhs, 2);
        else if constexpr (std::is_same_v<T, Mul>) return print(*x.lhs, 2) + "*" + print(*x.rhs, 3);
        else if constexpr (std::is_same_v<T, Pow>) return print(*x.base, 5) + "^" + exponent_string(x.exponent);
        else return "(" + print(*x.inner, 0) + ")";
      },
      e.node);
}

std::string print(const Expr& e, int min_prec) {
  std::string s = raw(e);
  return precedence(e) < min_prec ? "(" + s + ")" : s;
}

void collect_variables(const Expr& e, std::set<std::string>& out) {
  std::visit(
      [&out](const auto& x) {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, SeqTerm>) {
          for (const auto& v : x.index.variables()) out.insert(v);
        } else if constexpr (std::is_same_v<T, Neg>) {
          collect_variables(*x.operand, out);
        } else if constexpr (std::is_same_v<T, Pow>) {
          collect_variables(*x.base, out);
          for (const auto& v : x.exponent.variables()) out.insert(v);
        } else if constexpr (std::is_same_v<T, Paren>) {
          collect_variables(*x.inner, out);
        } else if constexpr (std::is_same_v<T, Add> || std::is_same_v<T, Sub> ||
                             std::is_same_v<T, Mul>) {
          collect_variables(*x.lhs, out);
          collect_variables(*x.rhs, out);
        }
      },
      e.node);
}

}  // namespace

std::string to_string(const Expr& e) { return print(e, 0); }

std::set<std::string> free_variables(const Expr& e) {
  std::set<std::string> out;
  collect_variables(e, out);
  return out;
}

// ---------------------------------------------------------------------------
// Evaluation

BicomplexZ eval_expr(const Expr& e, const Bindings& b) {
  return std::visit(
      [&b](const auto& x) -> BicomplexZ {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, IntLit>) {
          return BicomplexZ::real(x.value);
        } else if constexpr (std::is_same_v<T, UnitLit>) {
          return BicomplexZ::unit(x.unit);
        } else if constexpr (std::is_same_v<T, SeqTerm>) {
          const Index n = x.index.eval(b);
          switch (x.kind) {
            case SeqKind::F: return BicomplexZ::real(fib(n));
            case SeqKind::L: return BicomplexZ::real(lucas(n));
            case SeqKind::BF: return bf(n);
            case SeqKind::BL: return bl(n);
          }
          return {};
        } else if constexpr (std::is_same_v<T, Neg>) {
          return -eval_expr(*x.operand, b);
        } else if constexpr (std::is_same_v<T, Add>) {
          return eval_expr(*x.lhs, b) + eval_expr(*x.rhs, b);
        } else if constexpr (std::is_same_v<T, Sub>) {
          return eval_expr(*x.lhs, b) - eval_expr(*x.rhs, b);
        } else if constexpr (std::is_same_v<T, Mul>) {
          return eval_expr(*x.lhs, b) * eval_expr(*x.rhs, b);
        } else if constexpr (std::is_same_v<T, Pow>) {
          const Index e = x.exponent.eval(b);
          BicomplexZ base = eval_expr(*x.base, b);
          if (e >= 0) return pow(std::move(base), static_cast<std::uint64_t>(e));
          const bool unit_base = base.i() == 0 && base.j() == 0 && base.k() == 0 &&
                                 (base.re() == 1 || base.re() == -1);
          if (!unit_base) throw NegativePowerOfNonUnit();
          // (+-1)^e depends only on the parity of e.
          return (base.re() == 1 || e % 2 == 0) ? BicomplexZ::real(1) : BicomplexZ::real(-1);
        } else {
          return eval_expr(*x.inner, b);
        }
      },
      e.node);
}

// ---------------------------------------------------------------------------
// Equation checking

namespace {

Evaluator evaluator_for(ExprPtr e) {
  return [e = std::move(e)](const Bindings& b) { return eval_expr(*e, b); };
}

ClaimSpec adhoc_claim(std::string id, std::string_view lhs, const std::vector<std::string>& rhs) {
  ClaimSpec c;
  c.id = std::move(id);
  c.citation = "ad hoc";
  ExprPtr l = parse(lhs);
  std::set<std::string> vars = free_variables(*l);
  c.lhs = evaluator_for(l);
  c.dsl_lhs = std::string(lhs);
  for (const auto& text : rhs) {
    ExprPtr r = parse(text);
    for (const auto& v : free_variables(*r)) vars.insert(v);
    c.rhs.push_back(evaluator_for(std::move(r)));
    c.dsl_rhs.push_back(text);
  }
  std::vector<std::string> ordered(vars.begin(), vars.end());
  std::sort(ordered.begin(), ordered.end(), [](const std::string& a, const std::string& b) {
    return variable_rank(a) < variable_rank(b);
  });
  for (const auto& v : ordered) {
    c.params.push_back({v, std::numeric_limits<Index>::min(), 0, 0});
  }
  return c;
}

}  // namespace

ReportEntry check_alternatives(std::string_view id, std::string_view lhs,
                               const std::vector<std::string>& rhs, const ParamGrid& grid) {
  if (rhs.empty()) throw std::invalid_argument("check_alternatives needs at least one rhs");
  ClaimSpec claim = adhoc_claim(std::string(id), lhs, rhs);
  for (const auto& p : claim.params) {
    if (!grid.find(p.name)) {
      throw BindingOutOfDomain("grid gives no range for variable " + p.name);
    }
  }
  return verify(claim, grid);
}

ReportEntry check_equation(std::string_view text, const ParamGrid& grid) {
  // Parse once to validate the whole equation and locate errors by offset.
  parse_equation(text);
  const std::size_t split = text.find("==");
  return check_alternatives("adhoc", text.substr(0, split),
                            {std::string(text.substr(split + 2))}, grid);
}

ReportEntry check_claim_dsl(const ClaimSpec& claim, const ParamGrid& grid) {
  ClaimSpec dsl;
  dsl.id = claim.id;
  dsl.citation = claim.citation;
  dsl.params = claim.params;
  dsl.constraints = claim.constraints;
  dsl.lhs = evaluator_for(parse(claim.dsl_lhs));
  for (const auto& r : claim.dsl_rhs) dsl.rhs.push_back(evaluator_for(parse(r)));
  dsl.dsl_lhs = claim.dsl_lhs;
  dsl.dsl_rhs = claim.dsl_rhs;
  return verify(dsl, grid);
}

}  // namespace bcfib::idlang
