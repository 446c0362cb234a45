#include <doctest.h>

#include <cmath>
#include <complex>

#include "pvzeta/localfield.hpp"

using namespace pvzeta;

namespace {

constexpr double kPi = 3.14159265358979323846;

long smallest_nonresidue(long q) {
  for (long u = 2; u < q; ++u) {
    bool sq = false;
    for (long x = 1; x < q; ++x)
      if ((x * x) % q == u) sq = true;
    if (!sq) return u;
  }
  return 0;
}

// lift of a square class to an integer representative
long lift(const LocalField& F, SqClass a) {
  long eps = smallest_nonresidue(F.q);
  switch (a) {
    case 0: return 1;
    case 1: return eps;
    case 2: return F.q;
    default: return eps * F.q;
  }
}

// Solvability of z^2 = a x^2 + b y^2 over the q-adics, by searching primitive
// solutions modulo q^3 (odd q, coefficient valuations at most 1).
int hilbert_bruteforce(const LocalField& F, SqClass ca, SqClass cb) {
  long q = F.q;
  long M = q * q * q;
  long a = lift(F, ca) % M, b = lift(F, cb) % M;
  for (long x = 0; x < M; ++x)
    for (long y = 0; y < M; ++y) {
      long v = (a % M) * ((x * x) % M) % M;
      v = (v + (b % M) * ((y * y) % M)) % M;
      // need z with z^2 = v (mod M), primitive triple
      for (long z = 0; z * z <= (M - 1) * (M - 1); ++z) {
        if (z >= M) break;
        if ((z * z - v) % M == 0) {
          if (x % q || y % q || z % q) return 1;
        }
      }
    }
  return -1;
}

}  // namespace

TEST_CASE("square class groups") {
  CHECK(square_classes(real_field()).size() == 2);
  CHECK(square_classes(complex_field()).size() == 1);
  CHECK(square_classes(padic_field(3)).size() == 4);
  CHECK_THROWS_AS(padic_field(4), FieldNotPadic);
  CHECK_THROWS_AS(padic_field(15), FieldNotPadic);
  CHECK(padic_field(9).q == 9);
  for (auto F : {real_field(), complex_field(), padic_field(5)}) {
    for (SqClass a : square_classes(F)) {
      CHECK(class_mul(F, a, a) == 0);
      CHECK(class_mul(F, a, 0) == a);
    }
  }
  CHECK(class_of_minus_one(padic_field(5)) == 0);
  CHECK(class_of_minus_one(padic_field(3)) == 1);
  CHECK(class_of_minus_one(padic_field(7)) == 1);
  CHECK(class_of_minus_one(padic_field(9)) == 0);  // -1 is a square in F_9
}

TEST_CASE("hilbert symbol properties and brute-force oracle") {
  CHECK(hilbert(real_field(), 1, 1) == -1);
  CHECK(hilbert(real_field(), 0, 1) == 1);

  for (auto F : {real_field(), complex_field(), padic_field(3), padic_field(5), padic_field(7),
                 padic_field(9), padic_field(27)}) {
    auto cls = square_classes(F);
    SqClass m1 = class_of_minus_one(F);
    for (SqClass a : cls) {
      CHECK(hilbert(F, a, 0) == 1);
      CHECK(hilbert(F, a, class_mul(F, m1, a)) == 1);  // (a,-a) = 1
      for (SqClass b : cls) {
        CHECK(hilbert(F, a, b) == hilbert(F, b, a));
        for (SqClass c : cls)
          CHECK(hilbert(F, a, class_mul(F, b, c)) == hilbert(F, a, b) * hilbert(F, a, c));
      }
    }
  }

  // units pair trivially; (eps,pi) = -1; (pi,pi) tracks -1 mod squares
  for (long q : {3L, 5L, 7L}) {
    auto F = padic_field(q);
    CHECK(hilbert(F, 1, 1) == 1);
    CHECK(hilbert(F, 1, 2) == -1);
    CHECK(hilbert(F, 2, 2) == (q % 4 == 1 ? 1 : -1));
  }
  CHECK(hilbert(padic_field(3), 2, 2) == -1);  // q = 3 mod 4: (pi,pi) = -1

  for (long q : {3L, 5L}) {
    auto F = padic_field(q);
    for (SqClass a : square_classes(F))
      for (SqClass b : square_classes(F)) {
        INFO("q=", q, " a=", a, " b=", b);
        CHECK(hilbert(F, a, b) == hilbert_bruteforce(F, a, b));
      }
  }
}

TEST_CASE("gauss sums") {
  for (long q : {3L, 5L, 7L, 11L, 13L, 17L, 19L}) {
    cplx s = 0;
    for (long x = 0; x < q; ++x) s += std::polar(1.0, 2 * kPi * ((x * x) % q) / (double)q);
    cplx c0 = s / std::sqrt((double)q);
    cplx got = gauss_constant(padic_field(q));
    CHECK(std::abs(c0 - got) < 1e-9);
  }
  CHECK(gauss_constant(padic_field(5)) == cplx(1, 0));
  CHECK(gauss_constant(padic_field(3)) == cplx(0, 1));
  for (long q : {3L, 5L, 7L, 9L, 27L, 25L}) {
    auto F = padic_field(q);
    cplx c0 = gauss_constant(F);
    CHECK(std::abs(std::pow(c0, 4) - cplx(1, 0)) < 1e-12);
    // C0^2 = (pi,-1)
    cplx c2 = c0 * c0;
    CHECK(std::abs(c2 - cplx((double)hilbert(F, 2, class_of_minus_one(F)), 0)) < 1e-12);
  }
}

TEST_CASE("weil alpha") {
  auto R = real_field();
  CHECK(std::abs(weil_alpha(R, 0) - std::polar(1.0, kPi / 4)) < 1e-15);
  CHECK(std::abs(weil_alpha(padic_field(7), 1) - cplx(1, 0)) < 1e-15);

  for (auto F : {real_field(), complex_field(), padic_field(3), padic_field(5), padic_field(7)}) {
    for (SqClass x : square_classes(F))
      for (SqClass y : square_classes(F)) {
        cplx lhs = weil_alpha(F, 0) * weil_alpha(F, class_mul(F, x, y));
        cplx rhs = weil_alpha(F, x) * weil_alpha(F, y) * (double)hilbert(F, x, y);
        CHECK(std::abs(lhs - rhs) < 1e-12);
      }
    // alpha_t = (1/n) sum_b alpha(b) (t,b)
    auto cls = square_classes(F);
    if (F.kind == FieldKind::PadicOdd) {
      cplx c0 = gauss_constant(F);
      double h = (double)hilbert(F, 2, class_of_minus_one(F));
      for (SqClass t : cls) {
        cplx s = 0;
        for (SqClass b : cls) s += weil_alpha(F, b) * (double)hilbert(F, t, b);
        s /= (double)cls.size();
        cplx expect = (t == 0 || t == 1) ? cplx(0.5, 0)
                                         : (t == 2 ? c0 * h * 0.5 : -c0 * h * 0.5);
        CHECK(std::abs(s - expect) < 1e-12);
      }
    }
  }
}

TEST_CASE("quadratic form invariants") {
  // real: two gamma formulas agree for all sign patterns m <= 6
  auto R = real_field();
  for (int m = 1; m <= 6; ++m)
    for (int mask = 0; mask < (1 << m); ++mask) {
      QuadraticForm f{R, {}};
      for (int i = 0; i < m; ++i) f.diag.push_back((mask >> i) & 1);
      auto inv = quad_invariants(f);
      auto [p, q] = *inv.signature;
      cplx sig_gamma = std::polar(1.0, kPi * (p - q) / 4);
      CHECK(std::abs(inv.gamma - sig_gamma) < 1e-12);
      CHECK(std::abs(std::abs(inv.gamma) - 1.0) < 1e-12);
    }

  {
    QuadraticForm f{R, {0, 0, 1}};
    auto inv = quad_invariants(f);
    CHECK(*inv.signature == std::pair<int, int>{2, 1});
    CHECK(std::abs(inv.gamma - std::polar(1.0, kPi / 4)) < 1e-14);
  }

  {
    auto F = padic_field(5);
    SqClass m1 = class_of_minus_one(F);
    QuadraticForm f{F, {0, m1}};  // hyperbolic plane
    auto inv = quad_invariants(f);
    CHECK(inv.disc == m1);
    CHECK(inv.hasse == 1);
    CHECK(std::abs(inv.gamma - weil_alpha(F, 0) * weil_alpha(F, m1)) < 1e-12);
    CHECK(isotropic(f));
  }

  {
    auto F = padic_field(3);
    QuadraticForm f{F, {0, 1, 2}};  // diag(1, eps, pi)
    auto inv = quad_invariants(f);
    CHECK(inv.hasse == hilbert(F, 0, 1) * hilbert(F, 0, 2) * hilbert(F, 1, 2));
    CHECK(inv.hasse == -1);
  }

  for (auto F : {padic_field(3), padic_field(5)}) {
    // every form of rank >= 4 represents everything; rank-5 always isotropic
    auto cls = square_classes(F);
    for (SqClass a : cls)
      for (SqClass b : cls)
        for (SqClass c : cls)
          for (SqClass d : cls) {
            QuadraticForm f{F, {a, b, c, d}};
            CHECK(represented_classes(f).size() == 4);
            QuadraticForm g{F, {a, b, c, d, 0}};
            CHECK(isotropic(g));
          }
    // anisotropic ternary forms miss exactly one class
    for (SqClass a : cls)
      for (SqClass b : cls)
        for (SqClass c : cls) {
          QuadraticForm f{F, {a, b, c}};
          auto rep = represented_classes(f);
          CHECK(rep.size() == (isotropic(f) ? 4 : 3));
        }
  }
  // gamma is unitary over every field
  for (auto F : {real_field(), complex_field(), padic_field(7)}) {
    auto cls = square_classes(F);
    for (SqClass a : cls)
      for (SqClass b : cls) {
        QuadraticForm f{F, {a, b, class_mul(F, a, b)}};
        CHECK(std::abs(std::abs(quad_invariants(f).gamma) - 1.0) < 1e-12);
      }
  }
}
