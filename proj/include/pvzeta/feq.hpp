#pragma once

#include <functional>
#include <string>
#include <vector>

#include "pvzeta/bernstein.hpp"
#include "pvzeta/gamma.hpp"
#include "pvzeta/localfield.hpp"

namespace pvzeta {

// Row/column labels: class tuples, or the Omega_{i,j} labels of the rank-4
// real family.
struct OrbitLabel {
  std::vector<SqClass> classes;
  int oi = -1, oj = -1;  // Omega labels when >= 0

  static OrbitLabel tuple(std::vector<SqClass> c) { return {std::move(c), -1, -1}; }
  static OrbitLabel omega(int i, int j) { return {{}, i, j}; }
  bool operator==(const OrbitLabel&) const = default;
  std::string str(const LocalField& F) const;
};

template <class V>
struct CoeffMatrixT {
  LocalField F;
  std::vector<OrbitLabel> rows, cols;
  std::vector<std::vector<V>> entries;
  std::vector<std::pair<std::string, V>> prefactors;

  V prefactor_product(const V& unit) const {
    V acc = unit;
    for (auto& [n, v] : prefactors) acc = acc * v;
    return acc;
  }
};

using CoeffMatrix = CoeffMatrixT<cplx>;
using CoeffMatrixSym = CoeffMatrixT<PadicRat>;

// ---------------------------------------------------------------------------
// generic character vectors
// ---------------------------------------------------------------------------
template <class E>
struct CharG {
  SqClass twist = 0;
  typename E::Exp s;
};

// product of the factor-wise rho' values of a factored polynomial, shifted by 1
template <class E>
typename E::V rho_b_g(const E& ev, const FactoredPoly& b, const std::vector<CharG<E>>& pi) {
  if ((int)pi.size() != b.p) throw error("character count != variable count");
  typename E::V acc = ev.one();
  for (const auto& f : b.factors) {
    SqClass tw = 0;
    typename E::Exp e = ev.const_exp(f.c + 1);
    for (int i = 0; i < b.p; ++i) {
      long a = f.a[(size_t)i];
      if (!a) continue;
      if (a % 2 != 0) tw = class_mul(ev.field(), tw, pi[(size_t)i].twist);
      e = ev.add(e, ev.scale((int)a, pi[(size_t)i].s));
    }
    acc = acc * rho_prime_g(ev, tw, e);
  }
  return acc;
}

// entry (v,u) = w(-1) rho(w, s+1; -uv)
template <class E>
std::vector<std::vector<typename E::V>> tate_matrix_g(const E& ev, SqClass twist,
                                                      typename E::Exp s) {
  const LocalField& F = ev.field();
  auto cls = ev.classes();
  SqClass m1 = ev.minus_one();
  int wm1 = ev.hs(twist, m1);
  std::vector<std::vector<typename E::V>> M;
  for (SqClass v : cls) {
    std::vector<typename E::V> row;
    for (SqClass u : cls) {
      typename E::V e = rho_at_g(ev, twist, ev.shift(s, 1), class_mul(F, m1, class_mul(F, u, v)));
      row.push_back(wm1 == 1 ? e : -e);
    }
    M.push_back(std::move(row));
  }
  return M;
}

// a^{(F)}_{v,u}(w,s) = sum_t gamma(tF) rho(w,s+1;tv) rho(w,s+N;tu), on the
// classes represented by the form
template <class E>
std::vector<std::vector<typename E::V>> quadratic_matrix_g(const E& ev, const QuadraticForm& form,
                                                           SqClass twist, typename E::Exp s,
                                                           const std::vector<SqClass>& labels) {
  const LocalField& F = ev.field();
  Rat N = Rat(form.m(), 2);
  std::vector<std::vector<typename E::V>> M;
  for (SqClass v : labels) {
    std::vector<typename E::V> row;
    for (SqClass u : labels) {
      typename E::V acc = ev.zero();
      for (SqClass t : ev.classes()) {
        typename E::V term = ev.gamma_form(scale_form(form, t)) *
                             rho_at_g(ev, twist, ev.shift(s, 1), class_mul(F, t, v)) *
                             rho_at_g(ev, twist, ev.shift(s, N), class_mul(F, t, u));
        acc = acc + term;
      }
      row.push_back(acc);
    }
    M.push_back(std::move(row));
  }
  return M;
}

// the second route of the same coefficient: alpha(-1)^{a_N} gamma(F) A^{a_N}(v,u,delta)
template <class E>
std::vector<std::vector<typename E::V>> quadratic_matrix_route2_g(
    const E& ev, const QuadraticForm& form, SqClass twist, typename E::Exp s,
    const std::vector<SqClass>& labels) {
  const LocalField& F = ev.field();
  Rat N = Rat(form.m(), 2);
  int aN = form.m() % 2;
  SqClass m1 = ev.minus_one();
  SqClass disc = 0;
  for (SqClass d : form.diag) disc = class_mul(F, disc, d);
  SqClass delta = class_mul(F, (form.m() / 2) % 2 ? m1 : 0, disc);
  typename E::V pre = ev.gamma_form(form);
  if (aN) pre = pre * ev.alpha(m1);
  std::vector<std::vector<typename E::V>> M;
  for (SqClass v : labels) {
    std::vector<typename E::V> row;
    for (SqClass u : labels) {
      typename E::V a =
          A_sum_g(ev, aN, twist, ev.shift(s, 1), twist, ev.shift(s, N), v, u, delta);
      row.push_back(pre * a);
    }
    M.push_back(std::move(row));
  }
  return M;
}

// ---------------------------------------------------------------------------
// public numeric surface
// ---------------------------------------------------------------------------

std::vector<CharG<NumEval>> chars_to_generic(const std::vector<Character>& pi);

GammaValue rho_b(const FactoredPoly& b, const std::vector<Character>& pi);

CoeffMatrix tate_matrix(const Character& omega);

struct QuadCoeffResult {
  CoeffMatrix matrix;           // entries without the |C| prefactor
  CoeffMatrix route2;           // the A-sum form, same labels
  cplx AN_scalar = 0;           // definite real case, 0 otherwise
  bool definite = false;
};
QuadCoeffResult quadratic_matrix(const QuadraticForm& form, const Character& omega,
                                 cplx C_scale = -1.0);
cplx quadratic_AN(const Rat& N, cplx s, double absC);

CoeffMatrixSym quadratic_matrix_sym(const QuadraticForm& form, SqClass twist, const AffExp& s);

// ---- commutative families (tableau-1 arithmetic) ----
struct CommArith {
  LocalField F;
  int dbar = 1, d1 = 1, n = 1;
  int type = 1;           // 1, 2, 3
  int e = 0;
  QuadraticForm f;        // the block form when its class is needed
  cplx gamma_f = 1.0;     // gamma(f); defaults per the stated closed values
  SqClass delta = 0;      // (-1)^{[d/2]} disc(f)
  SqClass delta1 = 0;     // symplectic-commutative variant parameter
};

GammaValue commutative_transitive(const CommArith& fam, const std::vector<Character>& pi);
CoeffMatrix commutative_matrix(const CommArith& fam, const std::vector<Character>& pi);
GammaValue commutative_aggregate_even_d(const CommArith& fam, const std::vector<Character>& pi);
// symplectic-commutative p-adic forms
GammaValue symplectic_comm_scalar(const CommArith& fam, const Character& omega_a, cplx s,
                                  SqClass u);
CoeffMatrix symplectic_comm_matrix(const CommArith& fam, cplx s);

// ---- classical families ----
GammaValue symplectic_coeff(int n, int p, bool split, const std::vector<Character>& pi);

struct OrthArith {
  LocalField F;
  int n = 0, k = 0, delta = 0;  // delta = 1 for odd ambient dimension
  QuadraticForm Qa;             // anisotropic kernel (possibly empty diag)
  int p0 = 0, q0 = 0;           // real signature of the block form
};

CoeffMatrix orthogonal_coeff(const OrthArith& fam, const std::vector<Character>& pi);
bool orthogonal_orbit_nonempty(const OrthArith& fam, const std::vector<SqClass>& u);
// real phase form of the same entries, in the tilde parametrization
cplx orthogonal_real_entry(const OrthArith& fam, const std::vector<SqClass>& v,
                           const std::vector<SqClass>& u, const std::vector<cplx>& s_tilde);
cplx orthogonal_real_prefactor(const OrthArith& fam, const std::vector<cplx>& s_tilde);
// p-adic aggregate of Prop-7.3.12 shape: the summed route
GammaValue orthogonal_btilde_sum(const OrthArith& fam, SqClass a, cplx s,
                                 const std::vector<SqClass>& u);
GammaValue orthogonal_btilde_closed(const OrthArith& fam, SqClass a, cplx s,
                                    const std::vector<SqClass>& u);

// ---- DIII ----
GammaValue diii_real_scalar(int n, int p, const std::vector<cplx>& s);
CoeffMatrix diii_padic_matrix(const LocalField& F, int n, int p, const std::vector<cplx>& s);

// ---- exceptional families ----
GammaValue e7a6_scalar(const LocalField& F, const Character& pi1, const Character& pi2);

struct DimG2Arith {
  LocalField F;
  int d = 1;
  SqClass cf = 0;  // class of c(f); the paper's -1 default is class_of_minus_one
};

CoeffMatrix dimg2_matrix(const DimG2Arith& fam, const Character& w1, const Character& w2);
CoeffMatrix dimg2_single_matrix(const DimG2Arith& fam, cplx s);          // one variable
CoeffMatrixSym dimg2_single_matrix_sym(const DimG2Arith& fam, const AffExp& s);
CoeffMatrix dimg2_aggregate_matrix(const DimG2Arith& fam, const Character& w1,
                                   const Character& w2);                 // d even, B(w,s)
GammaValue lemma_8_2_10_aggregate(const LocalField& F, cplx s, SqClass v, SqClass u);
PadicRat lemma_8_2_10_aggregate_sym(const LocalField& F, const AffExp& s, SqClass v, SqClass u);
CoeffMatrix dimg2_rank4_matrix(int d, const std::vector<cplx>& s);       // Omega labels

CoeffMatrix e7a2_matrix(const LocalField& F, const std::vector<cplx>& s);
CoeffMatrixSym e7a2_matrix_sym(const LocalField& F, const AffExp& s1, const AffExp& s2);
CoeffMatrix e7a2_D_matrix(const LocalField& F, const std::vector<cplx>& s);
GammaValue e7a2_single(const LocalField& F, SqClass b, cplx s);
PadicRat e7a2_single_sym(const LocalField& F, SqClass b, const AffExp& s);

CoeffMatrix e8a1_matrix(const LocalField& F, const Character& w1, const Character& w2);
CoeffMatrixSym e8a1_matrix_sym(const LocalField& F, const AffExp& s1, const AffExp& s2);
CoeffMatrix e8a1_single_matrix(const LocalField& F, cplx s);
PadicRat e8a1_single_entry_sym(const LocalField& F, const AffExp& s, SqClass v, SqClass u);
GammaValue e8a1_eix_scalar(const std::vector<cplx>& s);
GammaValue eiii_evii_scalar(int d, const std::vector<cplx>& s);

}  // namespace pvzeta
