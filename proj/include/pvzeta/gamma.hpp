#pragma once

#include <string>
#include <variant>
#include <vector>

#include "pvzeta/localfield.hpp"
#include "pvzeta/padicrat.hpp"
#include "pvzeta/rational.hpp"

namespace pvzeta {

// complex Gamma, Lanczos with reflection; flags proximity to a pole
cplx cgamma(cplx z, bool* pole = nullptr);

// Affine exponent a1*s1 + a2*s2 + c used by the symbolic evaluator.
struct AffExp {
  int a1 = 0, a2 = 0;
  Rat c;
  AffExp() = default;
  AffExp(int x, int y, Rat cc) : a1(x), a2(y), c(std::move(cc)) {}
};
inline AffExp aff_s1(const Rat& c = 0) { return {1, 0, c}; }
inline AffExp aff_s2(const Rat& c = 0) { return {0, 1, c}; }
inline AffExp aff_const(const Rat& c) { return {0, 0, c}; }

// ---------------------------------------------------------------------------
// numeric evaluator: every field, complex arithmetic
// ---------------------------------------------------------------------------
class NumEval {
 public:
  using V = cplx;
  using Exp = cplx;

  explicit NumEval(LocalField F) : F_(std::move(F)) {}
  const LocalField& field() const { return F_; }

  V rho(SqClass twist, Exp s) const;  // Tate factor of w~_twist |.|^s  (C: index 0)
  V rho_m(long m, Exp s) const;       // complex-field character of index m
  V alpha(SqClass a) const { return weil_alpha(F_, a); }
  int hs(SqClass a, SqClass b) const { return hilbert(F_, a, b); }
  std::vector<SqClass> classes() const { return square_classes(F_); }
  SqClass minus_one() const { return class_of_minus_one(F_); }

  V zero() const { return 0.0; }
  V one() const { return 1.0; }
  V from_rat(const Rat& r) const { return to_double(r); }
  V from_int(long n) const { return (double)n; }
  V qpow(Exp s) const;      // q^s, p-adic only
  V abs2_pow(Exp s) const;  // |2|_F^s
  V gamma_form(const QuadraticForm& f) const { return quad_invariants(f).gamma; }
  V inv(V x) const { return 1.0 / x; }

  Exp shift(Exp e, const Rat& r) const { return e + to_double(r); }
  Exp add(Exp a, Exp b) const { return a + b; }
  Exp neg(Exp e) const { return -e; }
  Exp scale(int k, Exp e) const { return (double)k * e; }
  Exp const_exp(const Rat& r) const { return to_double(r); }

  bool pole() const { return pole_; }
  void reset_pole() const { pole_ = false; }
  void flag_pole() const { pole_ = true; }

 private:
  LocalField F_;
  mutable bool pole_ = false;
};

// ---------------------------------------------------------------------------
// exact symbolic evaluator for the odd p-adic fields
// ---------------------------------------------------------------------------
class SymEval {
 public:
  using V = PadicRat;
  using Exp = AffExp;

  explicit SymEval(LocalField F) : F_(std::move(F)) {
    if (F_.kind != FieldKind::PadicOdd) throw FieldNotPadic("symbolic evaluator");
  }
  const LocalField& field() const { return F_; }

  V rho(SqClass twist, const Exp& s) const;
  V alpha(SqClass a) const { return PadicRat::from_k(alpha_k(a)); }
  KElem alpha_k(SqClass a) const;
  KElem c0_k() const;
  int hs(SqClass a, SqClass b) const { return hilbert(F_, a, b); }
  std::vector<SqClass> classes() const { return square_classes(F_); }
  SqClass minus_one() const { return class_of_minus_one(F_); }

  V zero() const { return PadicRat::constant(F_.q, 0); }
  V one() const { return PadicRat::constant(F_.q, 1); }
  V from_rat(const Rat& r) const { return PadicRat::constant(F_.q, r); }
  V from_int(long n) const { return PadicRat::constant(F_.q, Rat(n)); }
  V qpow(const Exp& e) const;  // q^{a1 s1 + a2 s2 + c}
  V abs2_pow(const Exp&) const { return one(); }
  V gamma_form(const QuadraticForm& f) const;
  V inv(const V& x) const { return one() / x; }

  Exp shift(Exp e, const Rat& r) const {
    e.c += r;
    return e;
  }
  Exp add(const Exp& a, const Exp& b) const { return {a.a1 + b.a1, a.a2 + b.a2, a.c + b.c}; }
  Exp neg(const Exp& e) const { return {-e.a1, -e.a2, -e.c}; }
  Exp scale(int k, const Exp& e) const { return {k * e.a1, k * e.a2, Rat(k) * e.c}; }
  Exp const_exp(const Rat& r) const { return aff_const(r); }

  bool pole() const { return false; }
  void reset_pole() const {}

 private:
  LocalField F_;
};

// ---------------------------------------------------------------------------
// generic kernels
// ---------------------------------------------------------------------------

template <class E>
typename E::V rho_prime_g(const E& ev, SqClass twist, typename E::Exp s) {
  typename E::V r = ev.rho(twist, s);
  return ev.hs(twist, ev.minus_one()) == 1 ? r : -r;
}

// rho(w,s;x) = (1/n) sum_y (x,y) rho(w w~_y |^s)
template <class E>
typename E::V rho_at_g(const E& ev, SqClass twist, typename E::Exp s, SqClass x) {
  auto cls = ev.classes();
  typename E::V acc = ev.zero();
  for (SqClass y : cls) {
    typename E::V t = ev.rho(class_mul(ev.field(), twist, y), s);
    if (ev.hs(x, y) == -1) t = -t;
    acc = acc + t;
  }
  return acc * ev.from_rat(Rat(1, (long)cls.size()));
}

// h(w |^s) = sum_t alpha(t) rho(w,s;t)
template <class E>
typename E::V h_sum_g(const E& ev, SqClass twist, typename E::Exp s) {
  typename E::V acc = ev.zero();
  for (SqClass t : ev.classes()) acc = acc + ev.alpha(t) * rho_at_g(ev, twist, s, t);
  return acc;
}

// A^a_{pi1,pi2}(u,v,delta) = sum_t (delta,t) alpha(t)^a rho(pi1;tu) rho(pi2;tv)
template <class E>
typename E::V A_sum_g(const E& ev, int a, SqClass tw1, typename E::Exp s1, SqClass tw2,
                      typename E::Exp s2, SqClass u, SqClass v, SqClass delta) {
  const LocalField& F = ev.field();
  typename E::V acc = ev.zero();
  for (SqClass t : ev.classes()) {
    typename E::V term =
        rho_at_g(ev, tw1, s1, class_mul(F, t, u)) * rho_at_g(ev, tw2, s2, class_mul(F, t, v));
    if (a == 1) term = term * ev.alpha(t);
    if (ev.hs(delta, t) == -1) term = -term;
    acc = acc + term;
  }
  return acc;
}

// f(s) = q^{-1/2}(q^s - q^{-s}); f+(s) = q^{-1/2}(q^s + q^{-s})
template <class E>
typename E::V tate_f(const E& ev, typename E::Exp s) {
  return ev.qpow(ev.shift(s, Rat(-1, 2))) - ev.qpow(ev.shift(ev.neg(s), Rat(-1, 2)));
}
template <class E>
typename E::V tate_fplus(const E& ev, typename E::Exp s) {
  return ev.qpow(ev.shift(s, Rat(-1, 2))) + ev.qpow(ev.shift(ev.neg(s), Rat(-1, 2)));
}

// Closed form of A^a over an odd p-adic field, untwisted characters;
// the patterns not listed explicitly come in through the covariance relations.
template <class E>
typename E::V A_closed_g(const E& ev, int a, typename E::Exp s1, typename E::Exp s2, SqClass u,
                         SqClass v, SqClass delta) {
  const LocalField& F = ev.field();
  if (F.kind != FieldKind::PadicOdd) throw CaseNotCovered("A closed form is p-adic");
  SqClass m1 = ev.minus_one();
  auto wpi = [&](SqClass x) { return ev.hs(x, 2); };
  auto unit = [&](SqClass x) { return (x & 2) == 0; };
  typename E::V D = (ev.one() - ev.qpow(ev.scale(-2, s1))) *
                    (ev.one() - ev.qpow(ev.scale(-2, s2))) * ev.from_int(2);
  typename E::V c = ev.from_rat(Rat(F.q - 1, F.q));  // 1 - 1/q
  typename E::V f1h = tate_f(ev, ev.shift(s1, Rat(-1, 2)));
  typename E::V f2h = tate_f(ev, ev.shift(s2, Rat(-1, 2)));
  typename E::V g1 = tate_f(ev, s1), g2 = tate_f(ev, s2);
  typename E::V C0 = ev.alpha(2);

  auto sgn = [&](int s, typename E::V x) { return s == 1 ? x : -x; };

  if (a == 0) {
    // A0(u,v,d) = (u,d) A0(1, uv, d)
    int pre = ev.hs(u, delta);
    SqClass x = class_mul(F, u, v), y = delta;
    typename E::V P = ev.zero();
    if (unit(x) && unit(y))
      P = c * c + sgn(wpi(y), f1h * f2h) + sgn(wpi(class_mul(F, m1, class_mul(F, x, y))), g1 * g2);
    else if (!unit(x) && unit(y))
      P = -(c * (f2h + sgn(wpi(y), f1h)));
    else if (unit(x) && !unit(y))
      P = -(C0 * sgn(wpi(class_mul(F, m1, y)), g1 * f2h + sgn(wpi(x), g2 * f1h)));
    else
      P = C0 * c * (sgn(wpi(x), g2) + sgn(wpi(class_mul(F, m1, y)), g1));
    return sgn(pre, P / D);
  }

  // A1(u,v,d) = alpha(d)^{-1} A1(du, dv, 1)
  SqClass x = class_mul(F, delta, u), y = class_mul(F, delta, v);
  typename E::V P = ev.zero();
  if (unit(x) && unit(y))
    P = c * c - (sgn(wpi(x), g1 * f2h) + sgn(wpi(y), f1h * g2));
  else if (!unit(x) && !unit(y))
    P = f1h * f2h + sgn(wpi(class_mul(F, m1, class_mul(F, x, y))), g1 * g2);
  else if (unit(x) && !unit(y))
    P = c * (sgn(wpi(x), g1) - f2h);
  else
    P = c * (sgn(wpi(y), g2) - f1h);
  return ev.inv(ev.alpha(delta)) * P / D;
}

// tail closed form for A^1_{s1,s2}(x,y,1)
template <class E>
typename E::V A_closed_tail_g(const E& ev, typename E::Exp s1, typename E::Exp s2, SqClass x,
                              SqClass y) {
  const LocalField& F = ev.field();
  SqClass m1 = ev.minus_one();
  auto wpi = [&](SqClass t) { return ev.hs(t, 2); };
  auto unit = [&](SqClass t) { return (t & 2) == 0; };
  auto sgn = [&](int s, typename E::V val) { return s == 1 ? val : -val; };
  typename E::V D = (ev.one() - ev.qpow(ev.scale(-2, s1))) *
                    (ev.one() - ev.qpow(ev.scale(-2, s2))) * ev.from_int(2);
  typename E::V c = ev.from_rat(Rat(F.q - 1, F.q));
  typename E::V qmh = ev.qpow(ev.const_exp(Rat(-1, 2)));  // q^{-1/2}
  typename E::Exp sum_half = ev.shift(ev.add(s1, s2), Rat(-1, 2));
  typename E::Exp diff = ev.add(s2, ev.neg(s1));
  typename E::V P = ev.zero();
  if (unit(x) && unit(y)) {
    if (x == y)
      P = c * c - sgn(wpi(x), qmh * tate_fplus(ev, sum_half) * ev.from_int(2)) +
          sgn(wpi(x), ev.from_rat(Rat(F.q + 1, F.q)) * tate_fplus(ev, diff));
    else
      P = c * c + sgn(wpi(y), c * tate_f(ev, diff));
  } else if (!unit(x) && unit(y)) {
    P = c * (sgn(wpi(y), tate_f(ev, s2)) - tate_f(ev, ev.shift(s1, Rat(-1, 2))));
  } else if (unit(x) && !unit(y)) {
    P = c * (sgn(wpi(x), tate_f(ev, s1)) - tate_f(ev, ev.shift(s2, Rat(-1, 2))));
  } else {
    int w = wpi(class_mul(F, m1, class_mul(F, x, y)));
    typename E::V first = -(qmh * tate_fplus(ev, diff) * ev.from_int(1 + w));
    typename E::V second = (ev.one() + sgn(w, ev.from_rat(Rat(1, F.q)))) * qmh *
                           (sgn(w, ev.qpow(sum_half)) + ev.qpow(ev.neg(sum_half)));
    P = first + second;
  }
  return P / D;
}

// f_1 = 1, f_{n+1}(s) = |2|^{-2ns - n(n+1) - n/2} prod_{j=1..n} rho(|.|^{2s+2j+1})
template <class E>
typename E::V f_n_g(const E& ev, int n, typename E::Exp s) {
  if (n < 1) throw error("f_n needs n >= 1");
  typename E::V acc = ev.one();
  if (n == 1) return acc;
  int m = n - 1;
  for (int j = 1; j <= m; ++j) acc = acc * ev.rho(0, ev.shift(ev.scale(2, s), Rat(2 * j + 1)));
  typename E::Exp e = ev.shift(ev.scale(-2 * m, s), Rat(-m * (m + 1)) - Rat(m, 2));
  return acc * ev.abs2_pow(e);
}

// ---------------------------------------------------------------------------
// value-level API used by the CLI and the tests
// ---------------------------------------------------------------------------
struct PoleTag {
  std::string what;
};
using GammaValue = std::variant<cplx, PadicRat, PoleTag>;

bool is_pole(const GammaValue& v);
cplx gv_num(const GammaValue& v);  // numeric payload (throws on symbolic/pole)

struct Character {
  LocalField F;
  SqClass twist = 0;  // real / p-adic quadratic twist
  long m = 0;         // complex-field index
  cplx s = 0.0;
  std::string str() const;
};

Character parse_character(const LocalField& F, const std::string& spec);

GammaValue rho(const Character& ch);
GammaValue rho_prime(const Character& ch);
GammaValue rho_at(const Character& ch, SqClass x);
GammaValue h_sum(const Character& ch);
GammaValue A_sum_num(const LocalField& F, int a, const Character& p1, const Character& p2,
                     SqClass u, SqClass v, SqClass delta);
GammaValue f_n_num(const LocalField& F, int n, cplx s);

PadicRat rho_sym(const LocalField& F, SqClass twist, const AffExp& s);
PadicRat A_sum_sym(const LocalField& F, int a, SqClass tw1, const AffExp& s1, SqClass tw2,
                   const AffExp& s2, SqClass u, SqClass v, SqClass delta);
PadicRat A_closed_sym(const LocalField& F, int a, const AffExp& s1, const AffExp& s2, SqClass u,
                      SqClass v, SqClass delta);

}  // namespace pvzeta
