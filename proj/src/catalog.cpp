// The claim catalog. Each claim carries two independent routes: a built-in
// evaluator written against the library API and a rendering in the
// expression language.

#include <algorithm>

#include "bcfib/bifib.hpp"
#include "bcfib/error.hpp"
#include "bcfib/identity_engine.hpp"
#include "bcfib/sequences.hpp"

namespace bcfib {
namespace {

constexpr Index kGridHi = 60;
constexpr Index kRHi = 12;

BicomplexZ real(Integer s) { return BicomplexZ::real(std::move(s)); }
BicomplexZ unit(Axis a) { return BicomplexZ::unit(a); }
BicomplexZ times(long c, const BicomplexZ& v) { return scale(Integer(c), v); }
BicomplexZ times(const Integer& c, const BicomplexZ& v) { return scale(c, v); }
BicomplexZ sq(const BicomplexZ& v) { return v * v; }
Integer sq(const Integer& v) { return v * v; }
Integer sign(Index e) { return parity_sign(e); }

const BicomplexZ& i_plus_j_plus_2k() {
  static const BicomplexZ v{0, 1, 1, 2};
  return v;
}

const BicomplexZ& two_j_plus_k() {
  static const BicomplexZ v{0, 0, 2, 1};
  return v;
}

ParamDomain param_n(Index min = 0) { return {"n", min, min, kGridHi}; }
ParamDomain param_m() { return {"m", 0, 0, kGridHi}; }
ParamDomain param_r() { return {"r", 1, 1, kRHi}; }

Index N(const Bindings& b) { return lookup(b, "n"); }
Index M(const Bindings& b) { return lookup(b, "m"); }
Index R(const Bindings& b) { return lookup(b, "r"); }

ClaimSpec single(std::string id, std::string citation, std::vector<ParamDomain> params,
                 Evaluator lhs, Evaluator rhs, std::string dsl_lhs, std::string dsl_rhs) {
  ClaimSpec c;
  c.id = std::move(id);
  c.citation = std::move(citation);
  c.params = std::move(params);
  c.lhs = std::move(lhs);
  c.rhs.push_back(std::move(rhs));
  c.dsl_lhs = std::move(dsl_lhs);
  c.dsl_rhs.push_back(std::move(dsl_rhs));
  return c;
}

std::vector<ClaimSpec> build() {
  std::vector<ClaimSpec> out;

  // Algebra of C2, instantiated at BF_n (and BF_m).
  out.push_back(single(
      "C-E12", "expanded product formula, compared against the unit table",
      {param_n(), param_m()},
      [](const Bindings& b) { return bf(N(b)) * bf(M(b)); },
      [](const Bindings& b) { return expanded_product(bf(N(b)), bf(M(b))); },
      "BF[n]*BF[m]",
      "(F[n]*F[m] - F[n+1]*F[m+1] - F[n+2]*F[m+2] - F[n+3]*F[m+3])"
      " + (F[n]*F[m+1] + F[n+1]*F[m] - F[n+2]*F[m+3] - F[n+3]*F[m+2])*i"
      " + (F[n]*F[m+2] + F[n+2]*F[m] - F[n+1]*F[m+3] - F[n+3]*F[m+1])*j"
      " + (F[n]*F[m+3] + F[n+3]*F[m] + F[n+1]*F[m+2] + F[n+2]*F[m+1])*k"));

  const struct {
    Axis axis;
    const char* id;
    const char* conj_dsl;
    const char* closed_dsl;
  } e14[] = {
      {Axis::I, "C-E14I", "BF[n]*(F[n] - F[n+1]*i + F[n+2]*j - F[n+3]*k)",
       "(F[n]^2 + F[n+1]^2 - F[n+2]^2 - F[n+3]^2) + 2*(F[n]*F[n+2] + F[n+1]*F[n+3])*j"},
      {Axis::J, "C-E14J", "BF[n]*(F[n] + F[n+1]*i - F[n+2]*j - F[n+3]*k)",
       "(F[n]^2 - F[n+1]^2 + F[n+2]^2 - F[n+3]^2) + 2*(F[n]*F[n+1] + F[n+2]*F[n+3])*i"},
      {Axis::K, "C-E14K", "BF[n]*(F[n] - F[n+1]*i - F[n+2]*j + F[n+3]*k)",
       "(F[n]^2 + F[n+1]^2 + F[n+2]^2 + F[n+3]^2) + 2*(F[n]*F[n+3] - F[n+1]*F[n+2])*k"},
  };
  for (const auto& e : e14) {
    const Axis axis = e.axis;
    out.push_back(single(
        e.id, std::string("x times its ") + axis_name(axis) + "-conjugate, closed form",
        {param_n()},
        [axis](const Bindings& b) { return self_product(axis, bf(N(b))); },
        [axis](const Bindings& b) { return selfproduct_closed_form(axis, bf(N(b))); },
        e.conj_dsl, e.closed_dsl));
  }

  // Conjugate self-products and the real modulus.
  out.push_back(single(
      "C-D2I", "BF_n times its i-conjugate, Fibonacci closed form", {param_n()},
      [](const Bindings& b) { return self_product(Axis::I, bf(N(b))); },
      [](const Bindings& b) {
        const Index n = N(b);
        return BicomplexZ{Integer(fib(2 * n + 1) - fib(2 * n + 7)), 0, Integer(2 * fib(2 * n + 3)), 0};
      },
      "BF[n]*(F[n] - F[n+1]*i + F[n+2]*j - F[n+3]*k)",
      "(F[2*n+1] - F[2*n+7]) + 2*F[2*n+3]*j"));
  out.push_back(single(
      "C-D2J", "BF_n times its j-conjugate, Fibonacci closed form", {param_n()},
      [](const Bindings& b) { return self_product(Axis::J, bf(N(b))); },
      [](const Bindings& b) {
        const Index n = N(b);
        return BicomplexZ{Integer(sq(fib(n)) - sq(fib(n + 1)) + sq(fib(n + 3)) - sq(fib(n + 4))),
                          Integer(2 * (fib(n) * fib(n + 1) + fib(n + 2) * fib(n + 3))), 0, 0};
      },
      "BF[n]*(F[n] + F[n+1]*i - F[n+2]*j - F[n+3]*k)",
      "(F[n]^2 - F[n+1]^2 + F[n+3]^2 - F[n+4]^2) + 2*(F[n]*F[n+1] + F[n+2]*F[n+3])*i"));
  out.push_back(single(
      "C-D2K", "BF_n times its k-conjugate, Fibonacci closed form", {param_n()},
      [](const Bindings& b) { return self_product(Axis::K, bf(N(b))); },
      [](const Bindings& b) {
        const Index n = N(b);
        return BicomplexZ{Integer(fib(2 * n + 1) + fib(2 * n + 7)), 0, 0, Integer(2 * sign(n + 1))};
      },
      "BF[n]*(F[n] - F[n+1]*i - F[n+2]*j + F[n+3]*k)",
      "(F[2*n+1] + F[2*n+7]) + 2*(-1)^(n+1)*k"));
  out.push_back(single(
      "C-MODR", "real modulus of BF_n, compared as radicands", {param_n()},
      [](const Bindings& b) { return real(bf_real_radicand(N(b))); },
      [](const Bindings& b) { return real(Integer(fib(2 * N(b) + 1) + fib(2 * N(b) + 7))); },
      "F[n]^2 + F[n+1]^2 + F[n+2]^2 + F[n+3]^2", "F[2*n+1] + F[2*n+7]"));

  out.push_back(single(
      "C-T1-1", "BF recurrence", {param_n()},
      [](const Bindings& b) { return bf(N(b)) + bf(N(b) + 1); },
      [](const Bindings& b) { return bf(N(b) + 2); }, "BF[n] + BF[n+1]", "BF[n+2]"));
  out.push_back(single(
      "C-T1-2", "BL recurrence", {param_n()},
      [](const Bindings& b) { return bl(N(b)) + bl(N(b) + 1); },
      [](const Bindings& b) { return bl(N(b) + 2); }, "BL[n] + BL[n+1]", "BL[n+2]"));
  out.push_back(single(
      "C-T1-3", "BL_n as BF_{n-1} + BF_{n+1}", {param_n()}, [](const Bindings& b) { return bl(N(b)); },
      [](const Bindings& b) { return bf(N(b) - 1) + bf(N(b) + 1); }, "BL[n]",
      "BF[n-1] + BF[n+1]"));
  out.push_back(single(
      "C-T1-4", "BL_n as BF_{n+2} - BF_{n-2}", {param_n()}, [](const Bindings& b) { return bl(N(b)); },
      [](const Bindings& b) { return bf(N(b) + 2) - bf(N(b) - 2); }, "BL[n]",
      "BF[n+2] - BF[n-2]"));
  out.push_back(single(
      "C-T1-5", "sum of squares BF_n^2 + BF_{n+1}^2", {param_n()},
      [](const Bindings& b) { return sq(bf(N(b))) + sq(bf(N(b) + 1)); },
      [](const Bindings& b) {
        const Index n = N(b);
        return bf(2 * n + 1) + BicomplexZ{Integer(fib(2 * n + 2) + fib(2 * n + 5)),
                                          Integer(-3 * fib(2 * n + 5)), Integer(-fib(2 * n + 6)),
                                          Integer(3 * fib(2 * n + 4))};
      },
      "BF[n]^2 + BF[n+1]^2",
      "BF[2*n+1] + F[2*n+2] + F[2*n+5] - 3*i*F[2*n+5] - j*F[2*n+6] + 3*k*F[2*n+4]"));
  out.push_back(single(
      "C-T1-6", "difference of squares BF_{n+1}^2 - BF_{n-1}^2", {param_n()},
      [](const Bindings& b) { return sq(bf(N(b) + 1)) - sq(bf(N(b) - 1)); },
      [](const Bindings& b) {
        const Index n = N(b);
        return times(2, bf(2 * n)) +
               BicomplexZ{Integer(fib(2 * n + 4) + fib(2 * n - 1)), Integer(-2 * fib(2 * n + 5)),
                          Integer(-2 * fib(2 * n + 4)), Integer(2 * fib(2 * n + 3))};
      },
      "BF[n+1]^2 - BF[n-1]^2",
      "2*BF[2*n] + F[2*n+4] + F[2*n-1] + 2*(-F[2*n+5]*i - F[2*n+4]*j + F[2*n+3]*k)"));
  out.push_back(single(
      "C-T1-7", "addition law BF_n BF_m + BF_{n+1} BF_{m+1}", {param_n(), param_m()},
      [](const Bindings& b) {
        const Index n = N(b), m = M(b);
        return bf(n) * bf(m) + bf(n + 1) * bf(m + 1);
      },
      [](const Bindings& b) {
        const Index s = N(b) + M(b);
        return times(2, bf(s + 1)) +
               BicomplexZ{Integer(2 * fib(s + 4) - fib(s + 1)), Integer(-2 * fib(s + 6)),
                          Integer(-2 * fib(s + 5)), Integer(2 * fib(s + 4))};
      },
      "BF[n]*BF[m] + BF[n+1]*BF[m+1]",
      "2*BF[n+m+1] + 2*F[n+m+4] - F[n+m+1] - 2*F[n+m+6]*i - 2*F[n+m+5]*j + 2*F[n+m+4]*k"));
  out.push_back(single(
      "C-T1-8", "alternating conjugate sum of shifted BF terms", {param_n()},
      [](const Bindings& b) {
        const Index n = N(b);
        return bf(n) - bf(n + 1) * unit(Axis::I) + bf(n + 2) * unit(Axis::J) -
               bf(n + 3) * unit(Axis::K);
      },
      [](const Bindings& b) { return real(Integer(-5 * fib(N(b) + 3))); },
      "BF[n] - BF[n+1]*i + BF[n+2]*j - BF[n+3]*k", "-5*F[n+3]"));

  // d'Ocagne.
  out.push_back(single(
      "C-T2", "d'Ocagne identity for BF_n", {param_n(), param_m()},
      [](const Bindings& b) {
        const Index n = N(b), m = M(b);
        return bf(m) * bf(n + 1) - bf(m + 1) * bf(n);
      },
      [](const Bindings& b) {
        const Index n = N(b), d = M(b) - N(b);
        const BicomplexZ tail{fib(d), fib(d + 1), Integer(-(fib(d - 2) + 2 * fib(d + 2))),
                              Integer(2 * fib(d - 1))};
        return times(sign(n), bf(d)) + times(sign(n + 1), tail);
      },
      "BF[m]*BF[n+1] - BF[m+1]*BF[n]",
      "(-1)^n*BF[m-n] + (-1)^(n+1)*(F[m-n] + F[m-n+1]*i - (F[m-n-2] + 2*F[m-n+2])*j + "
      "2*F[m-n-1]*k)"));

  // Negative indices.
  out.push_back(single(
      "C-T3F", "negabicomplex Fibonacci", {param_n()},
      [](const Bindings& b) { return bf(-N(b)); },
      [](const Bindings& b) {
        const Index n = N(b);
        return times(sign(n + 1), bf(n)) + times(Integer(sign(n) * lucas(n)), i_plus_j_plus_2k());
      },
      "BF[-n]", "(-1)^(n+1)*BF[n] + (-1)^n*L[n]*(i+j+2*k)"));
  out.push_back(single(
      "C-T3L", "negabicomplex Lucas", {param_n()},
      [](const Bindings& b) { return bl(-N(b)); },
      [](const Bindings& b) {
        const Index n = N(b);
        return times(sign(n), bl(n)) + times(Integer(sign(n + 1) * 5 * fib(n)), i_plus_j_plus_2k());
      },
      "BL[-n]", "(-1)^n*BL[n] + (-1)^(n+1)*5*F[n]*(i+j+2*k)"));

  // Binet. The DSL cannot name alpha or beta, so its rendering
  // is the componentwise form the Binet sum reduces to.
  out.push_back(single(
      "C-T4F", "Binet formula for BF_n", {param_n()},
      [](const Bindings& b) { return bf(N(b)); },
      [](const Bindings& b) {
        auto v = as_integer(bf_binet(N(b)));
        if (!v) throw Error("Binet evaluation of BF is not integral");
        return *v;
      },
      "BF[n]", "F[n] + F[n+1]*i + F[n+2]*j + F[n+3]*k"));
  out.push_back(single(
      "C-T4L", "Binet formula for BL_n", {param_n()},
      [](const Bindings& b) { return bl(N(b)); },
      [](const Bindings& b) {
        auto v = as_integer(bl_binet(N(b)));
        if (!v) throw Error("Binet evaluation of BL is not integral");
        return *v;
      },
      "BL[n]", "L[n] + L[n+1]*i + L[n+2]*j + L[n+3]*k"));

  // Cassini.
  out.push_back(single(
      "C-T5F", "Cassini identity for BF_n", {param_n(1)},
      [](const Bindings& b) {
        const Index n = N(b);
        return bf(n + 1) * bf(n - 1) - sq(bf(n));
      },
      [](const Bindings& b) { return times(3 * sign(N(b)), two_j_plus_k()); },
      "BF[n+1]*BF[n-1] - BF[n]^2", "3*(-1)^n*(2*j+k)"));
  out.push_back(single(
      "C-T5L", "Cassini identity for BL_n", {param_n(1)},
      [](const Bindings& b) {
        const Index n = N(b);
        return bl(n + 1) * bl(n - 1) - sq(bl(n));
      },
      [](const Bindings& b) { return times(5 * sign(N(b) - 1), two_j_plus_k()); },
      "BL[n+1]*BL[n-1] - BL[n]^2", "5*(-1)^(n-1)*(2*j+k)"));

  // Catalan, both stated right-hand sides.
  {
    ClaimSpec c;
    c.id = "C-T6";
    c.citation = "Catalan identity for BF_n (two stated forms)";
    c.params = {param_n(1), param_r()};
    c.constraints = {{"n", "r", 0}};
    c.lhs = [](const Bindings& b) {
      const Index n = N(b), r = R(b);
      return sq(bf(n)) - bf(n + r) * bf(n - r);
    };
    c.rhs.push_back([](const Bindings& b) {
      const Index n = N(b), r = R(b);
      const BicomplexZ v{0, 0, Integer(2 * (sq(fib(r - 2)) + sq(fib(r)))),
                         Integer(sq(fib(r + 1)) + sq(fib(r - 2)) - sq(fib(r)) - sq(fib(r - 3)))};
      return times(sign(n - r), v);
    });
    c.rhs.push_back([](const Bindings& b) {
      const Index n = N(b), r = R(b);
      const BicomplexZ tail{
          Integer(-fib(2 * r + 3)), Integer(2 * fib(2 * r + 3)),
          Integer(2 * (fib(r + 2) * fib(r - 1) + fib(2 * r + 1))),
          Integer(-(2 * fib(r) * fib(r + 3) + 2 * fib(r + 1) * fib(r + 2) + sq(fib(r)) +
                    sq(fib(r - 3)) - sq(fib(r + 1)) - sq(fib(r - 2))))};
      return times(sign(n - r), sq(bf(r)) + tail);
    });
    c.dsl_lhs = "BF[n]^2 - BF[n+r]*BF[n-r]";
    c.dsl_rhs = {
        "(-1)^(n-r)*(2*(F[r-2]^2 + F[r]^2)*j + (F[r+1]^2 + F[r-2]^2 - F[r]^2 - F[r-3]^2)*k)",
        "(-1)^(n-r)*(BF[r]^2 - F[2*r+3] + 2*F[2*r+3]*i + 2*(F[r+2]*F[r-1] + F[2*r+1])*j - "
        "(2*F[r]*F[r+3] + 2*F[r+1]*F[r+2] + F[r]^2 + F[r-3]^2 - F[r+1]^2 - F[r-2]^2)*k)"};
    out.push_back(std::move(c));
  }

  std::sort(out.begin(), out.end(),
            [](const ClaimSpec& a, const ClaimSpec& b) { return a.id < b.id; });
  return out;
}

}  // namespace

const std::vector<ClaimSpec>& catalog() {
  static const std::vector<ClaimSpec> claims = build();
  return claims;
}

}  // namespace bcfib
