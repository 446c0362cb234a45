#pragma once

#include <optional>
#include <string>
#include <vector>

#include "pvzeta/rational.hpp"
#include "pvzeta/rootsys.hpp"

namespace pvzeta {

// One affine-linear factor a.s + c with integer coefficient vector a.
struct LinearFactor {
  std::vector<long> a;
  Rat c;
  bool operator==(const LinearFactor&) const = default;
  bool operator<(const LinearFactor& o) const;
};

struct FactoredPoly {
  int p = 1;                  // variable count
  Rat scalar = 1;
  bool up_to_scalar = false;  // set when only proportionality is known
  std::vector<LinearFactor> factors;

  void canonicalize();        // primitive vectors, positive leading entry, sorted
  bool same_factors(const FactoredPoly& o) const;
  int degree() const { return (int)factors.size(); }
  std::string str() const;
};

FactoredPoly fp_one(int p);
// multiply g (in k variables) into f after the variable substitution
// s_i -> sum_j subst[i][j] s_j + shift[i]; used to embed sub-polynomials.
FactoredPoly fp_mul(const FactoredPoly& f, const FactoredPoly& g);

cplx evaluate(const FactoredPoly& f, const std::vector<cplx>& s);
Rat evaluate_exact(const FactoredPoly& f, const std::vector<Rat>& s);

FactoredPoly usual_bernstein(const FactoredPoly& f);

// ---------------------------------------------------------------------------
// family descriptors
// ---------------------------------------------------------------------------
struct BernsteinFamily {
  enum class Kind {
    Dim1,         // b(s) = s
    Quadratic,    // b(s) = s (s + N - 1)
    Commutative,  // dbar, d1, chain length n, optional grouping
    ClassicalI,   // delta (1 for odd ambient, 0 for even), n, k
    Symplectic,   // n, p
    DIII,         // n, p
    E7a6,
    DimG2One,     // d in {1,2,4,8}
    E7a2,
    E8a1,
    CnP0prime,    // n, k; proportional form only
  };
  Kind kind = Kind::Dim1;
  Rat N;                      // Quadratic
  int dbar = 0, d1 = 0, n = 0, k = 0, p = 0, delta = 0, d = 0;
  std::vector<int> groups;    // Commutative grouping (sizes); empty = singletons

  int parts() const;          // number of parabolic parts
  std::string label() const;
};

BernsteinFamily bf_quadratic(const Rat& N);
BernsteinFamily bf_commutative(int dbar, int d1, int n, std::vector<int> groups = {});
BernsteinFamily bf_classical(int delta, int n, int k);
BernsteinFamily bf_symplectic(int n, int p);
BernsteinFamily bf_diii(int n, int p);
BernsteinFamily bf_e7a6();
BernsteinFamily bf_dimg2one(int d);
BernsteinFamily bf_e7a2();
BernsteinFamily bf_e8a1();
BernsteinFamily bf_cnp0prime(int n, int k);
BernsteinFamily parse_bernstein_family(const std::string& s);

// family of a structural parabolic
BernsteinFamily family_from_parabolic(const VerySpecialParabolic& par);

// split model of the family, when one exists (used for the root-counted r_k)
std::optional<VerySpecialParabolic> realize_split(const BernsteinFamily& fam);

// the paper's product formulas, per index (index = parts() gives the full b)
FactoredPoly bernstein_closed(const BernsteinFamily& fam, int index);
inline FactoredPoly bernstein_closed(const BernsteinFamily& fam) {
  return bernstein_closed(fam, fam.parts());
}

// descent recursion along the cut k (default 1), with the shift exponent taken
// from the eigenspace tables of the split model whenever one exists
FactoredPoly bernstein_descent(const BernsteinFamily& fam, int cut = 1);

// b_k as the prefix polynomial sitting in the last k variables
FactoredPoly b_k_lower(const BernsteinFamily& fam, int k);

// grouping helper for parabolics of the non-split overlays
VerySpecialParabolic group_parabolic(const VerySpecialParabolic& par,
                                     const std::vector<int>& groups,
                                     const std::vector<int>& degrees);

// shift exponent r_k used by the descent at the given cut
Rat descent_shift(const BernsteinFamily& fam, int cut);

}  // namespace pvzeta
