#pragma once

#include <complex>
#include <optional>
#include <string>
#include <vector>

#include "pvzeta/rational.hpp"

namespace pvzeta {

enum class FieldKind { Real, Complex, PadicOdd };

struct LocalField {
  FieldKind kind = FieldKind::Real;
  long q = 0;  // residue cardinality, odd prime power >= 3

  bool operator==(const LocalField&) const = default;
  std::string str() const;
};

LocalField real_field();
LocalField complex_field();
LocalField padic_field(long q);                 // rejects even or non-prime-power q
LocalField parse_field(const std::string& s);   // "real" | "complex" | "padic:<q>"

// Square classes as small tags.  Real: 0 = Pos, 1 = Neg.  Complex: 0.
// PadicOdd: bit 0 is the unit non-square eps, bit 1 is the uniformizer pi,
// so 0 = 1, 1 = eps, 2 = pi, 3 = eps*pi; multiplication is xor.
using SqClass = int;

std::vector<SqClass> square_classes(const LocalField& F);
SqClass class_mul(const LocalField& F, SqClass a, SqClass b);
SqClass class_of_minus_one(const LocalField& F);
std::string class_name(const LocalField& F, SqClass a);
SqClass parse_class(const LocalField& F, const std::string& s);

int hilbert(const LocalField& F, SqClass a, SqClass b);  // +-1

// Legendre symbol of the unit part; (u/q) extended multiplicatively to prime powers.
int legendre_unit(const LocalField& F, SqClass unit_class);

// C0 with C0^2 = (pi,-1); exactly 1 or i for odd residue characteristic.
cplx gauss_constant(const LocalField& F);
bool gauss_constant_is_i(const LocalField& F);

cplx weil_alpha(const LocalField& F, SqClass a);

struct QuadraticForm {
  LocalField field;
  std::vector<SqClass> diag;
  int m() const { return (int)diag.size(); }
};

struct QuadInvariants {
  SqClass disc = 0;
  SqClass delta = 0;  // class of (-1)^{floor(m/2)} * disc
  int hasse = 1;
  cplx gamma;         // Weil constant of the quadratic character
  std::optional<std::pair<int, int>> signature;
  Rat N_half;         // m/2
};

QuadInvariants quad_invariants(const QuadraticForm& f);

QuadraticForm scale_form(const QuadraticForm& f, SqClass t);

bool isotropic(const QuadraticForm& f);
bool represents(const QuadraticForm& f, SqClass c);
std::vector<SqClass> represented_classes(const QuadraticForm& f);

}  // namespace pvzeta
