#pragma once

#include <complex>
#include <map>
#include <string>
#include <utility>

#include "pvzeta/rational.hpp"

namespace pvzeta {

// Element of Q(i)[sqrt(q)]: (ar + ai*i) + (br + bi*i)*sqrt(q).
// When q is a perfect square the radical part is folded away, so the
// representation stays canonical.
struct KElem {
  long q = 0;
  Rat ar, ai, br, bi;

  KElem() = default;
  KElem(long q_, Rat a) : q(q_), ar(std::move(a)) { normalize(); }
  KElem(long q_, Rat a_r, Rat a_i, Rat b_r, Rat b_i)
      : q(q_), ar(std::move(a_r)), ai(std::move(a_i)), br(std::move(b_r)), bi(std::move(b_i)) {
    normalize();
  }

  void normalize();
  bool is_zero() const { return ar == 0 && ai == 0 && br == 0 && bi == 0; }
  bool operator==(const KElem& o) const;

  KElem operator+(const KElem& o) const;
  KElem operator-(const KElem& o) const;
  KElem operator-() const;
  KElem operator*(const KElem& o) const;
  KElem inverse() const;

  std::complex<double> eval() const;
  std::string str() const;
};

KElem k_rat(long q, const Rat& a);
KElem k_i(long q);        // i
KElem k_sqrtq(long q);    // sqrt(q)
// q^e for a half-integer e
KElem k_qpow(long q, const Rat& e);

// Sparse Laurent polynomial in one or two exponent slots; slot i carries the
// power of t_i = q^{-s_i}.
struct LaurentPoly {
  long q = 0;
  std::map<std::pair<int, int>, KElem> terms;

  LaurentPoly() = default;
  explicit LaurentPoly(KElem c);

  bool is_zero() const { return terms.empty(); }
  bool uses_second_slot() const;
  void add_term(int e1, int e2, const KElem& c);

  LaurentPoly operator+(const LaurentPoly& o) const;
  LaurentPoly operator-(const LaurentPoly& o) const;
  LaurentPoly operator*(const LaurentPoly& o) const;
  LaurentPoly operator-() const;
  bool operator==(const LaurentPoly& o) const { return q == o.q && terms == o.terms; }

  std::complex<double> eval(std::complex<double> s1, std::complex<double> s2) const;
  std::string str() const;
};

// Rational function num/den in the t variables.  Equality is exact via cross
// multiplication; canonical reduction (monomial content, gcd, unit leading
// denominator coefficient) is applied when the function is univariate.
struct PadicRat {
  LaurentPoly num, den;

  PadicRat() = default;
  PadicRat(LaurentPoly n, LaurentPoly d);
  static PadicRat constant(long q, const Rat& c);
  static PadicRat from_k(const KElem& c);

  long q() const { return num.q; }
  bool is_zero() const { return num.is_zero(); }

  PadicRat operator+(const PadicRat& o) const;
  PadicRat operator-(const PadicRat& o) const;
  PadicRat operator*(const PadicRat& o) const;
  PadicRat operator/(const PadicRat& o) const;
  PadicRat operator-() const;
  bool operator==(const PadicRat& o) const;

  std::complex<double> eval(std::complex<double> s1, std::complex<double> s2 = 0.0) const;
  std::string str() const;

 private:
  void reduce();
};

}  // namespace pvzeta
