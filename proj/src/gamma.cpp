#include "pvzeta/gamma.hpp"

#include <cmath>

namespace pvzeta {

namespace {
constexpr double kPi = 3.14159265358979323846;

const double lanczos_g = 7;
const double lanczos_c[9] = {0.99999999999980993,  676.5203681218851,   -1259.1392167224028,
                             771.32342877765313,   -176.61502916214059, 12.507343278686905,
                             -0.13857109526572012, 9.9843695780195716e-6, 1.5056327351493116e-7};
}  // namespace

cplx cgamma(cplx z, bool* pole) {
  if (std::abs(z.imag()) < 1e-9) {
    double re = z.real();
    if (re < 0.75 && std::abs(re - std::round(re)) < 1e-9 && std::round(re) <= 0.0) {
      if (pole) *pole = true;
      return cplx(1e300, 0);
    }
  }
  if (z.real() < 0.5) {
    // reflection
    cplx s = std::sin(kPi * z);
    return kPi / (s * cgamma(1.0 - z, pole));
  }
  z -= 1.0;
  cplx x = lanczos_c[0];
  for (int i = 1; i < 9; ++i) x += lanczos_c[i] / (z + (double)i);
  cplx t = z + lanczos_g + 0.5;
  return std::sqrt(2 * kPi) * std::pow(t, z + 0.5) * std::exp(-t) * x;
}

// ---------------------------------------------------------------------------
// numeric evaluator
// ---------------------------------------------------------------------------

cplx NumEval::qpow(Exp s) const {
  if (F_.kind != FieldKind::PadicOdd) throw FieldNotPadic("qpow");
  return std::exp(s * std::log((double)F_.q));
}

cplx NumEval::abs2_pow(Exp s) const {
  switch (F_.kind) {
    case FieldKind::Real: return std::exp(s * std::log(2.0));
    case FieldKind::Complex: return std::exp(s * std::log(4.0));
    case FieldKind::PadicOdd: return 1.0;
  }
  return 1.0;
}

cplx NumEval::rho_m(long m, Exp s) const {
  if (F_.kind != FieldKind::Complex) throw error("rho_m is a complex-field factor");
  bool p = false;
  double am = (double)(m < 0 ? -m : m);
  cplx num = cgamma(s + am / 2, &p);
  cplx den = cgamma(1.0 - s + am / 2, nullptr);
  if (p) pole_ = true;
  cplx v = std::pow(2 * kPi, 1.0 - 2.0 * s) * num / den;
  v *= std::pow(cplx(0, 1), cplx(am, 0));
  if (m % 2 != 0) v = -v;  // undo the w(-1) prefactor
  return v;
}

cplx NumEval::rho(SqClass twist, Exp s) const {
  switch (F_.kind) {
    case FieldKind::Complex:
      return rho_m(0, s);
    case FieldKind::Real: {
      bool p = false;
      if (twist == 0) {
        cplx v = std::pow(kPi, 0.5 - s) * cgamma(s / 2.0, &p) / cgamma((1.0 - s) / 2.0, nullptr);
        if (p) pole_ = true;
        return v;
      }
      cplx v = std::pow(kPi, 0.5 - s) * cgamma((1.0 + s) / 2.0, &p) /
               cgamma(1.0 - s / 2.0, nullptr);
      if (p) pole_ = true;
      return -cplx(0, 1) * v;
    }
    case FieldKind::PadicOdd: {
      cplx qs = qpow(s);
      cplx qinv = 1.0 / (double)F_.q;
      switch (twist) {
        case 0: {
          cplx den = 1.0 - 1.0 / qs;
          if (std::abs(den) < 1e-10) pole_ = true;
          return (1.0 - qs * qinv) / den;
        }
        case 1: {
          cplx den = 1.0 + 1.0 / qs;
          if (std::abs(den) < 1e-10) pole_ = true;
          return (1.0 + qs * qinv) / den;
        }
        case 2: return gauss_constant(F_) * qs / std::sqrt((double)F_.q);
        default: return -gauss_constant(F_) * qs / std::sqrt((double)F_.q);
      }
    }
  }
  return 0.0;
}

// ---------------------------------------------------------------------------
// symbolic evaluator
// ---------------------------------------------------------------------------

KElem SymEval::c0_k() const {
  return gauss_constant_is_i(F_) ? k_i(F_.q)
                                 : k_rat(F_.q, gauss_constant(F_).real() > 0 ? 1 : -1);
}

KElem SymEval::alpha_k(SqClass a) const {
  switch (a) {
    case 0:
    case 1: return k_rat(F_.q, 1);
    case 2: return c0_k();
    default: return -c0_k();
  }
}

PadicRat SymEval::qpow(const Exp& e) const {
  LaurentPoly mono;
  mono.q = F_.q;
  mono.add_term(-e.a1, -e.a2, k_qpow(F_.q, e.c));
  return PadicRat(mono, LaurentPoly(k_rat(F_.q, 1)));
}

PadicRat SymEval::rho(SqClass twist, const Exp& s) const {
  switch (twist) {
    case 0: return (one() - qpow(shift(s, -1))) / (one() - qpow(neg(s)));
    case 1: return (one() + qpow(shift(s, -1))) / (one() + qpow(neg(s)));
    case 2: return PadicRat::from_k(c0_k()) * qpow(shift(s, Rat(-1, 2)));
    default: return -(PadicRat::from_k(c0_k()) * qpow(shift(s, Rat(-1, 2))));
  }
}

PadicRat SymEval::gamma_form(const QuadraticForm& f) const {
  SqClass disc = 0;
  int h = 1;
  for (size_t i = 0; i < f.diag.size(); ++i) {
    disc = class_mul(F_, disc, f.diag[i]);
    for (size_t j = i + 1; j < f.diag.size(); ++j) h *= hilbert(F_, f.diag[i], f.diag[j]);
  }
  KElem g = alpha_k(disc);
  if (h == -1) g = -g;
  return PadicRat::from_k(g);
}

// ---------------------------------------------------------------------------
// value-level wrappers
// ---------------------------------------------------------------------------

bool is_pole(const GammaValue& v) { return std::holds_alternative<PoleTag>(v); }

cplx gv_num(const GammaValue& v) {
  if (auto* c = std::get_if<cplx>(&v)) return *c;
  throw error("gamma value is not a finite number");
}

std::string Character::str() const {
  std::string cls = F.kind == FieldKind::Complex ? std::to_string(m) : class_name(F, twist);
  return cls + "|s=" + std::to_string(s.real()) +
         (s.imag() != 0 ? "+" + std::to_string(s.imag()) + "i" : "");
}

Character parse_character(const LocalField& F, const std::string& spec) {
  auto bar = spec.find('|');
  if (bar == std::string::npos) throw error("character spec needs '<class>|s=...'");
  std::string cls = spec.substr(0, bar);
  std::string rest = spec.substr(bar + 1);
  if (rest.rfind("s=", 0) != 0) throw error("character spec needs 's='");
  rest = rest.substr(2);
  double re = 0, im = 0;
  auto plus = rest.find_last_of('+');
  if (!rest.empty() && rest.back() == 'i' && plus != std::string::npos) {
    re = std::stod(rest.substr(0, plus));
    im = std::stod(rest.substr(plus + 1, rest.size() - plus - 2));
  } else {
    re = std::stod(rest);
  }
  Character ch;
  ch.F = F;
  ch.s = cplx(re, im);
  if (F.kind == FieldKind::Complex)
    ch.m = std::stol(cls);
  else
    ch.twist = parse_class(F, cls);
  return ch;
}

namespace {
GammaValue wrap(const NumEval& ev, cplx v) {
  if (ev.pole()) return PoleTag{"pole proximity"};
  if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) return PoleTag{"non-finite"};
  return v;
}
}  // namespace

GammaValue rho(const Character& ch) {
  NumEval ev(ch.F);
  if (ch.F.kind == FieldKind::Complex) return wrap(ev, ev.rho_m(ch.m, ch.s));
  return wrap(ev, ev.rho(ch.twist, ch.s));
}

GammaValue rho_prime(const Character& ch) {
  NumEval ev(ch.F);
  if (ch.F.kind == FieldKind::Complex) {
    cplx v = ev.rho_m(ch.m, ch.s);
    if (ch.m % 2 != 0) v = -v;
    return wrap(ev, v);
  }
  return wrap(ev, rho_prime_g(ev, ch.twist, ch.s));
}

GammaValue rho_at(const Character& ch, SqClass x) {
  NumEval ev(ch.F);
  if (ch.F.kind == FieldKind::Complex) return wrap(ev, ev.rho_m(ch.m, ch.s));
  return wrap(ev, rho_at_g(ev, ch.twist, ch.s, x));
}

GammaValue h_sum(const Character& ch) {
  NumEval ev(ch.F);
  if (ch.F.kind == FieldKind::Complex) return wrap(ev, ev.rho_m(ch.m, ch.s));
  return wrap(ev, h_sum_g(ev, ch.twist, ch.s));
}

GammaValue A_sum_num(const LocalField& F, int a, const Character& p1, const Character& p2,
                     SqClass u, SqClass v, SqClass delta) {
  NumEval ev(F);
  return wrap(ev, A_sum_g(ev, a, p1.twist, p1.s, p2.twist, p2.s, u, v, delta));
}

GammaValue f_n_num(const LocalField& F, int n, cplx s) {
  NumEval ev(F);
  return wrap(ev, f_n_g(ev, n, s));
}

PadicRat rho_sym(const LocalField& F, SqClass twist, const AffExp& s) {
  return SymEval(F).rho(twist, s);
}

PadicRat A_sum_sym(const LocalField& F, int a, SqClass tw1, const AffExp& s1, SqClass tw2,
                   const AffExp& s2, SqClass u, SqClass v, SqClass delta) {
  SymEval ev(F);
  return A_sum_g(ev, a, tw1, s1, tw2, s2, u, v, delta);
}

PadicRat A_closed_sym(const LocalField& F, int a, const AffExp& s1, const AffExp& s2, SqClass u,
                      SqClass v, SqClass delta) {
  SymEval ev(F);
  return A_closed_g(ev, a, s1, s2, u, v, delta);
}

}  // namespace pvzeta
