#include "pvzeta/localfield.hpp"

#include <cmath>

namespace pvzeta {

namespace {
constexpr double kPi = 3.14159265358979323846;

// factor q as p^f for odd prime p, or return 0
long odd_prime_base(long q, int* f_out = nullptr) {
  if (q < 3 || q % 2 == 0) return 0;
  long p = 0;
  long m = q;
  for (long d = 3; d * d <= m; d += 2) {
    if (m % d == 0) {
      p = d;
      break;
    }
  }
  if (p == 0) p = m;  // q itself prime
  int f = 0;
  while (m % p == 0) {
    m /= p;
    ++f;
  }
  if (m != 1) return 0;
  if (f_out) *f_out = f;
  return p;
}
}  // namespace

std::string LocalField::str() const {
  switch (kind) {
    case FieldKind::Real: return "real";
    case FieldKind::Complex: return "complex";
    case FieldKind::PadicOdd: return "padic:" + std::to_string(q);
  }
  return "?";
}

LocalField real_field() { return {FieldKind::Real, 0}; }
LocalField complex_field() { return {FieldKind::Complex, 0}; }

LocalField padic_field(long q) {
  if (!odd_prime_base(q))
    throw FieldNotPadic("residue cardinality must be an odd prime power >= 3, got " +
                        std::to_string(q));
  return {FieldKind::PadicOdd, q};
}

LocalField parse_field(const std::string& s) {
  if (s == "real") return real_field();
  if (s == "complex") return complex_field();
  if (s.rfind("padic:", 0) == 0) return padic_field(std::stol(s.substr(6)));
  throw error("bad field spec '" + s + "' (want real|complex|padic:<q>)");
}

std::vector<SqClass> square_classes(const LocalField& F) {
  switch (F.kind) {
    case FieldKind::Real: return {0, 1};
    case FieldKind::Complex: return {0};
    case FieldKind::PadicOdd: return {0, 1, 2, 3};
  }
  return {};
}

SqClass class_mul(const LocalField& F, SqClass a, SqClass b) {
  (void)F;
  return a ^ b;
}

SqClass class_of_minus_one(const LocalField& F) {
  switch (F.kind) {
    case FieldKind::Real: return 1;
    case FieldKind::Complex: return 0;
    case FieldKind::PadicOdd: return F.q % 4 == 1 ? 0 : 1;
  }
  return 0;
}

std::string class_name(const LocalField& F, SqClass a) {
  if (F.kind == FieldKind::Real) return a == 0 ? "1" : "-1";
  if (F.kind == FieldKind::Complex) return "1";
  static const char* names[4] = {"1", "eps", "pi", "eps*pi"};
  return names[a & 3];
}

SqClass parse_class(const LocalField& F, const std::string& s) {
  for (SqClass c : square_classes(F))
    if (class_name(F, c) == s) return c;
  throw ClassNotInField("'" + s + "' over " + F.str());
}

int legendre_unit(const LocalField& F, SqClass unit_class) {
  if (F.kind != FieldKind::PadicOdd) throw FieldNotPadic("legendre symbol");
  return (unit_class & 1) ? -1 : 1;
}

int hilbert(const LocalField& F, SqClass a, SqClass b) {
  auto cls = square_classes(F);
  if (a < 0 || a >= (int)cls.size() || b < 0 || b >= (int)cls.size())
    throw ClassNotInField("hilbert argument");
  switch (F.kind) {
    case FieldKind::Complex: return 1;
    case FieldKind::Real: return (a == 1 && b == 1) ? -1 : 1;
    case FieldKind::PadicOdd: {
      // (eps^ea pi^pa, eps^eb pi^pb) = (pi,pi)^{pa pb} (eps,pi)^{ea pb + eb pa}
      int ea = a & 1, pa = (a >> 1) & 1;
      int eb = b & 1, pb = (b >> 1) & 1;
      int sign = 1;
      if (pa && pb && F.q % 4 == 3) sign = -sign;
      if ((ea * pb + eb * pa) % 2) sign = -sign;
      return sign;
    }
  }
  return 1;
}

bool gauss_constant_is_i(const LocalField& F) {
  int f = 1;
  long p = odd_prime_base(F.q, &f);
  if (!p) throw FieldNotPadic("gauss constant");
  // C0(p)^f with C0(p) = i exactly when p = 3 mod 4; i^f alternates, and for
  // even f the product is +-1 which still squares to (pi,-1)=1.
  if (p % 4 == 1) return false;
  return f % 2 == 1;
}

cplx gauss_constant(const LocalField& F) {
  int f = 1;
  long p = odd_prime_base(F.q, &f);
  if (!p) throw FieldNotPadic("gauss constant");
  cplx c0 = (p % 4 == 1) ? cplx(1, 0) : cplx(0, 1);
  cplx out(1, 0);
  for (int t = 0; t < f; ++t) out *= c0;
  return out;
}

cplx weil_alpha(const LocalField& F, SqClass a) {
  switch (F.kind) {
    case FieldKind::Complex: return 1.0;
    case FieldKind::Real:
      return a == 0 ? std::polar(1.0, kPi / 4) : std::polar(1.0, -kPi / 4);
    case FieldKind::PadicOdd: {
      if (a == 0 || a == 1) return 1.0;
      cplx c0 = gauss_constant(F);
      return a == 2 ? c0 : -c0;
    }
  }
  return 1.0;
}

QuadInvariants quad_invariants(const QuadraticForm& f) {
  const LocalField& F = f.field;
  QuadInvariants out;
  out.N_half = Rat(f.m(), 2);
  SqClass disc = 0;
  for (SqClass d : f.diag) disc = class_mul(F, disc, d);
  out.disc = disc;
  int h = 1;
  for (size_t i = 0; i < f.diag.size(); ++i)
    for (size_t j = i + 1; j < f.diag.size(); ++j) h *= hilbert(F, f.diag[i], f.diag[j]);
  out.hasse = h;
  SqClass m1 = class_of_minus_one(F);
  SqClass pw = (f.m() / 2) % 2 ? m1 : 0;
  out.delta = class_mul(F, pw, disc);
  cplx a1 = weil_alpha(F, 0);
  out.gamma = std::pow(a1, f.m() - 1) * weil_alpha(F, disc) * (double)h;
  if (F.kind == FieldKind::Real) {
    int p = 0, q = 0;
    for (SqClass d : f.diag) (d == 0 ? p : q)++;
    out.signature = {p, q};
  }
  return out;
}

QuadraticForm scale_form(const QuadraticForm& f, SqClass t) {
  QuadraticForm g = f;
  for (auto& d : g.diag) d = class_mul(f.field, d, t);
  return g;
}

bool isotropic(const QuadraticForm& f) {
  const LocalField& F = f.field;
  int m = f.m();
  if (m <= 1) return false;
  if (F.kind == FieldKind::Complex) return m >= 2;
  if (F.kind == FieldKind::Real) {
    int p = 0, q = 0;
    for (SqClass d : f.diag) (d == 0 ? p : q)++;
    return p > 0 && q > 0;
  }
  auto inv = quad_invariants(f);
  SqClass m1 = class_of_minus_one(F);
  if (m == 2) return inv.disc == m1;
  if (m == 3) {
    SqClass md = class_mul(F, m1, inv.disc);
    return inv.hasse == hilbert(F, m1, md);
  }
  if (m == 4) {
    if (inv.disc != 0) return true;
    return inv.hasse == hilbert(F, m1, m1);
  }
  return true;
}

bool represents(const QuadraticForm& f, SqClass c) {
  for (SqClass d : f.diag)
    if (d == c) return true;
  QuadraticForm g = f;
  g.diag.push_back(class_mul(f.field, class_of_minus_one(f.field), c));
  return isotropic(g);
}

std::vector<SqClass> represented_classes(const QuadraticForm& f) {
  std::vector<SqClass> out;
  for (SqClass c : square_classes(f.field))
    if (represents(f, c)) out.push_back(c);
  return out;
}

}  // namespace pvzeta
