#include "pvzeta/padicrat.hpp"

#include <cmath>

namespace pvzeta {

namespace {
long isqrt_exact(long q) {  // returns r with r*r == q, or 0
  long r = (long)std::llround(std::sqrt((double)q));
  for (long t = r - 1; t <= r + 1; ++t)
    if (t > 0 && t * t == q) return t;
  return 0;
}
}  // namespace

void KElem::normalize() {
  if (q == 0) return;
  if (long r = isqrt_exact(q)) {
    ar += br * r;
    ai += bi * r;
    br = 0;
    bi = 0;
  }
}

bool KElem::operator==(const KElem& o) const {
  return ar == o.ar && ai == o.ai && br == o.br && bi == o.bi;
}

KElem KElem::operator+(const KElem& o) const {
  return KElem(q ? q : o.q, ar + o.ar, ai + o.ai, br + o.br, bi + o.bi);
}

KElem KElem::operator-(const KElem& o) const {
  return KElem(q ? q : o.q, ar - o.ar, ai - o.ai, br - o.br, bi - o.bi);
}

KElem KElem::operator-() const { return KElem(q, -ar, -ai, -br, -bi); }

KElem KElem::operator*(const KElem& o) const {
  // (A + B sqrt q)(C + D sqrt q) with A,B,C,D in Q(i)
  Rat A_r = ar, A_i = ai, B_r = br, B_i = bi;
  Rat C_r = o.ar, C_i = o.ai, D_r = o.br, D_i = o.bi;
  auto mul_r = [](const Rat& xr, const Rat& xi, const Rat& yr, const Rat& yi) {
    return xr * yr - xi * yi;
  };
  auto mul_i = [](const Rat& xr, const Rat& xi, const Rat& yr, const Rat& yi) {
    return xr * yi + xi * yr;
  };
  long qq = q ? q : o.q;
  Rat e_r = mul_r(A_r, A_i, C_r, C_i) + Rat(qq) * mul_r(B_r, B_i, D_r, D_i);
  Rat e_i = mul_i(A_r, A_i, C_r, C_i) + Rat(qq) * mul_i(B_r, B_i, D_r, D_i);
  Rat f_r = mul_r(A_r, A_i, D_r, D_i) + mul_r(B_r, B_i, C_r, C_i);
  Rat f_i = mul_i(A_r, A_i, D_r, D_i) + mul_i(B_r, B_i, C_r, C_i);
  return KElem(qq, e_r, e_i, f_r, f_i);
}

KElem KElem::inverse() const {
  // 1/(A + B sqrt q) = (A - B sqrt q)/(A^2 - q B^2) with the denominator in Q(i)
  Rat n_r = ar * ar - ai * ai - Rat(q) * (br * br - bi * bi);
  Rat n_i = 2 * ar * ai - Rat(q) * 2 * br * bi;
  Rat nn = n_r * n_r + n_i * n_i;
  if (nn == 0) throw error("division by zero in K");
  // conj over i of (n_r + n_i i), divided by nn
  auto div = [&](const Rat& xr, const Rat& xi) -> std::pair<Rat, Rat> {
    return {(xr * n_r + xi * n_i) / nn, (xi * n_r - xr * n_i) / nn};
  };
  auto [cr, ci] = div(ar, ai);
  auto [dr, di] = div(-br, -bi);
  return KElem(q, cr, ci, dr, di);
}

std::complex<double> KElem::eval() const {
  double rq = std::sqrt((double)q);
  return {to_double(ar) + to_double(br) * rq, to_double(ai) + to_double(bi) * rq};
}

std::string KElem::str() const {
  std::string s = "(" + rat_str(ar);
  if (ai != 0) s += (ai > 0 ? "+" : "") + rat_str(ai) + "i";
  if (br != 0 || bi != 0) {
    s += "+(" + rat_str(br);
    if (bi != 0) s += (bi > 0 ? "+" : "") + rat_str(bi) + "i";
    s += ")rq";
  }
  return s + ")";
}

KElem k_rat(long q, const Rat& a) { return KElem(q, a); }
KElem k_i(long q) { return KElem(q, 0, 1, 0, 0); }
KElem k_sqrtq(long q) { return KElem(q, 0, 0, 1, 0); }

KElem k_qpow(long q, const Rat& e) {
  Rat e2 = 2 * e;
  if (!is_integer(e2)) throw error("q-power needs a half-integer exponent");
  long k = to_long(e2);  // q^{k/2}
  Rat whole = 1;
  long half = 0;
  long kk = k;
  if (kk >= 0) {
    whole = Rat(Int(1));
    for (long t = 0; t < kk / 2; ++t) whole *= q;
    half = kk % 2;
  } else {
    kk = -kk;
    for (long t = 0; t < kk / 2; ++t) whole /= q;
    half = kk % 2;
    if (half) whole /= q;  // q^{-1} * sqrt(q) = q^{-1/2}
  }
  if (!half) return KElem(q, whole);
  return KElem(q, 0, 0, whole, 0);
}

LaurentPoly::LaurentPoly(KElem c) {
  q = c.q;
  if (!c.is_zero()) terms[{0, 0}] = c;
}

bool LaurentPoly::uses_second_slot() const {
  for (auto& [e, c] : terms)
    if (e.second != 0) return true;
  return false;
}

void LaurentPoly::add_term(int e1, int e2, const KElem& c) {
  if (!q) q = c.q;
  auto it = terms.find({e1, e2});
  if (it == terms.end()) {
    if (!c.is_zero()) terms[{e1, e2}] = c;
    return;
  }
  it->second = it->second + c;
  if (it->second.is_zero()) terms.erase(it);
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& o) const {
  LaurentPoly r = *this;
  if (!r.q) r.q = o.q;
  for (auto& [e, c] : o.terms) r.add_term(e.first, e.second, c);
  return r;
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& o) const {
  LaurentPoly r = *this;
  if (!r.q) r.q = o.q;
  for (auto& [e, c] : o.terms) r.add_term(e.first, e.second, -c);
  return r;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly r;
  r.q = q;
  for (auto& [e, c] : terms) r.terms[e] = -c;
  return r;
}

LaurentPoly LaurentPoly::operator*(const LaurentPoly& o) const {
  LaurentPoly r;
  r.q = q ? q : o.q;
  for (auto& [e1, c1] : terms)
    for (auto& [e2, c2] : o.terms)
      r.add_term(e1.first + e2.first, e1.second + e2.second, c1 * c2);
  return r;
}

std::complex<double> LaurentPoly::eval(std::complex<double> s1, std::complex<double> s2) const {
  std::complex<double> out = 0;
  double lq = std::log((double)q);
  for (auto& [e, c] : terms) {
    // t1^{e1} t2^{e2} with t_i = q^{-s_i}
    std::complex<double> expo = -lq * (s1 * (double)e.first + s2 * (double)e.second);
    out += c.eval() * std::exp(expo);
  }
  return out;
}

std::string LaurentPoly::str() const {
  if (terms.empty()) return "0";
  std::string s;
  for (auto& [e, c] : terms) {
    if (!s.empty()) s += " + ";
    s += c.str();
    if (e.first) s += "*t1^" + std::to_string(e.first);
    if (e.second) s += "*t2^" + std::to_string(e.second);
  }
  return s;
}

namespace {

// univariate helpers on slot 1 (assumes no slot-2 usage); poly indexed by degree
using Uni = std::map<int, KElem>;

Uni to_uni(const LaurentPoly& p) {
  Uni u;
  for (auto& [e, c] : p.terms) u[e.first] = c;
  return u;
}

LaurentPoly from_uni(long q, const Uni& u) {
  LaurentPoly p;
  p.q = q;
  for (auto& [d, c] : u)
    if (!c.is_zero()) p.terms[{d, 0}] = c;
  return p;
}

int deg(const Uni& u) { return u.empty() ? -1000000 : u.rbegin()->first; }

Uni uni_scale(const Uni& a, const KElem& c, int shift) {
  Uni r;
  for (auto& [d, x] : a) {
    KElem v = x * c;
    if (!v.is_zero()) r[d + shift] = v;
  }
  return r;
}

Uni uni_sub(const Uni& a, const Uni& b) {
  Uni r = a;
  for (auto& [d, x] : b) {
    auto it = r.find(d);
    if (it == r.end())
      r[d] = -x;
    else {
      it->second = it->second - x;
      if (it->second.is_zero()) r.erase(it);
    }
  }
  return r;
}

Uni uni_mod(Uni a, const Uni& b) {
  while (!a.empty() && deg(a) >= deg(b)) {
    KElem f = a.rbegin()->second * b.rbegin()->second.inverse();
    a = uni_sub(a, uni_scale(b, f, deg(a) - deg(b)));
  }
  return a;
}

Uni uni_gcd(Uni a, Uni b) {
  while (!b.empty()) {
    Uni r = uni_mod(a, b);
    a = b;
    b = r;
  }
  if (!a.empty()) a = uni_scale(a, a.rbegin()->second.inverse(), 0);
  return a;
}

Uni uni_div_exact(Uni a, const Uni& b) {
  Uni qout;
  while (!a.empty()) {
    int d = deg(a) - deg(b);
    KElem f = a.rbegin()->second * b.rbegin()->second.inverse();
    qout[d] = f;
    a = uni_sub(a, uni_scale(b, f, d));
  }
  return qout;
}

}  // namespace

PadicRat::PadicRat(LaurentPoly n, LaurentPoly d) : num(std::move(n)), den(std::move(d)) {
  if (den.is_zero()) throw error("zero denominator");
  if (!num.q) num.q = den.q;
  reduce();
}

PadicRat PadicRat::constant(long q, const Rat& c) {
  return PadicRat(LaurentPoly(k_rat(q, c)), LaurentPoly(k_rat(q, 1)));
}

PadicRat PadicRat::from_k(const KElem& c) {
  return PadicRat(LaurentPoly(c), LaurentPoly(k_rat(c.q, 1)));
}

void PadicRat::reduce() {
  if (num.is_zero()) {
    den = LaurentPoly(k_rat(den.q, 1));
    return;
  }
  // clear the monomial content so both parts become honest polynomials
  int m1 = 1 << 30, m2 = 1 << 30;
  for (auto& [e, c] : num.terms) {
    m1 = std::min(m1, e.first);
    m2 = std::min(m2, e.second);
  }
  for (auto& [e, c] : den.terms) {
    m1 = std::min(m1, e.first);
    m2 = std::min(m2, e.second);
  }
  if (m1 != 0 || m2 != 0) {
    LaurentPoly n2, d2;
    n2.q = num.q;
    d2.q = den.q;
    for (auto& [e, c] : num.terms) n2.terms[{e.first - m1, e.second - m2}] = c;
    for (auto& [e, c] : den.terms) d2.terms[{e.first - m1, e.second - m2}] = c;
    num = n2;
    den = d2;
  }
  if (!num.uses_second_slot() && !den.uses_second_slot()) {
    Uni a = to_uni(num), b = to_uni(den);
    Uni g = uni_gcd(a, b);
    if (deg(g) > 0) {
      a = uni_div_exact(a, g);
      b = uni_div_exact(b, g);
    }
    num = from_uni(num.q, a);
    den = from_uni(den.q, b);
  }
  // unit-normalize the denominator's trailing coefficient
  KElem lead = den.terms.begin()->second;
  if (!(lead == k_rat(den.q, 1))) {
    KElem inv = lead.inverse();
    num = num * LaurentPoly(inv);
    den = den * LaurentPoly(inv);
  }
}

PadicRat PadicRat::operator+(const PadicRat& o) const {
  return PadicRat(num * o.den + o.num * den, den * o.den);
}

PadicRat PadicRat::operator-(const PadicRat& o) const {
  return PadicRat(num * o.den - o.num * den, den * o.den);
}

PadicRat PadicRat::operator*(const PadicRat& o) const {
  return PadicRat(num * o.num, den * o.den);
}

PadicRat PadicRat::operator/(const PadicRat& o) const {
  if (o.num.is_zero()) throw error("division by zero rational function");
  return PadicRat(num * o.den, den * o.num);
}

PadicRat PadicRat::operator-() const {
  PadicRat r = *this;
  r.num = -r.num;
  return r;
}

bool PadicRat::operator==(const PadicRat& o) const {
  return (num * o.den) == (o.num * den);
}

std::complex<double> PadicRat::eval(std::complex<double> s1, std::complex<double> s2) const {
  return num.eval(s1, s2) / den.eval(s1, s2);
}

std::string PadicRat::str() const { return "[" + num.str() + "] / [" + den.str() + "]"; }

}  // namespace pvzeta
