#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "pvzeta/rational.hpp"

namespace pvzeta {

enum class RSKind { A, B, C, D, E6, E7, E8, F4, G2 };

RSKind rs_kind_from_string(const std::string& s);
std::string rs_kind_name(RSKind k);

// Coordinates follow the standard Euclidean models: epsilon coordinates for the
// classical types, the 8-dimensional model for the E series, 4 coordinates for
// F4 and the sum-zero plane in R^3 for G2.  Everything is exact rational.
using Vec = std::vector<Rat>;

Rat dot(const Vec& a, const Vec& b);
Vec vadd(const Vec& a, const Vec& b);
Vec vsub(const Vec& a, const Vec& b);
Vec vscale(const Rat& c, const Vec& a);
bool vzero(const Vec& a);

struct RootSystem {
  RSKind kind;
  int rank = 0;
  int dim = 0;                       // ambient dimension
  std::vector<Vec> roots;           // deduplicated, positive roots first
  int n_positive = 0;
  std::vector<int> simple;          // indices into roots, Bourbaki numbering
  std::vector<std::vector<Rat>> simple_coords;  // per root: coefficients on the simple basis
  Rat long_sq, short_sq;            // squared lengths present in the system

  int index_of(const Vec& v) const;
  bool is_root(const Vec& v) const { return index_of(v) >= 0; }
  const Vec& root(int i) const { return roots[(size_t)i]; }
  bool is_long(int i) const { return dot(root(i), root(i)) == long_sq; }
  bool positive(int i) const { return i < n_positive; }
  int height(int i) const;
  int highest_root() const;

 private:
  friend RootSystem build_root_system(RSKind, int);
  std::map<Vec, int> index_;
};

RootSystem build_root_system(RSKind kind, int rank);

// 2(a,b)/(b,b); integer-valued on pairs of roots.
int cartan_integer(const RootSystem& rs, int a, int b);

// Coweights are vectors c pairing against roots through the ambient inner
// product.  The coroot of a root l is 2l/(l,l).
Vec coroot(const RootSystem& rs, int root_index);

struct FamilyInfo {
  std::string label;    // commA | commC | commCsplit | commD | commE7a7 | quadric |
                        // BI | DI | CI | DIII-split-model | E7a6 | E7a2 | E8a1 | dimg2one
  int deg_F = 0;
  int p_parts = 0;      // length of the standard very special parabolic
  int d = 0;            // common dimension of the E^{i,j}_{1,1} blocks where meaningful
};

struct GradedPV {
  RootSystem rs;
  int marked = -1;                       // position in rs.simple
  std::map<int, std::vector<int>> delta; // level -> root indices (levels -2..2)
  Vec H0;
  int deg_F = 0;
  Rat N;
  Rat kill_H0H0;                         // B(H0,H0) where B(x,y) = sum over roots of l(x)l(y)
  Rat c_norm;                            // B~ = c_norm * B, forcing B~(H0,H0) = -deg_F/2
  FamilyInfo family;

  int dim_g(int i) const;
  Rat level_of(int root_index) const { return dot(rs.root(root_index), H0); }
  Rat killing(const Vec& x, const Vec& y) const;      // restriction to the split Cartan
  Rat killing_norm(const Vec& x, const Vec& y) const { return c_norm * killing(x, y); }
};

GradedPV grade(const RootSystem& rs, int marked_simple);

// Successive orthogonalization inside Delta_1, long roots only; each step must
// produce exactly one candidate among the simple roots of the residual
// subsystem or the construction refuses with NoChain.
std::vector<int> canonical_orthogonal_sequence(const GradedPV& pv);

enum class ParabolicVariant { P0, P0prime };

struct VerySpecialParabolic {
  GradedPV pv;
  std::vector<Vec> H;        // H_1..H_p as coweights
  std::vector<int> d;        // degrees d_1..d_p
  bool m_exception = false;  // true for the m_k = 1/2 cases
  bool p0prime = false;      // built from the P0' variant
  std::vector<int> groups;   // commutative grouping sizes, empty otherwise

  int p() const { return (int)H.size(); }
  Vec h_prefix(int k) const;  // H_1 + ... + H_k
};

VerySpecialParabolic very_special_parabolic(const GradedPV& pv,
                                            ParabolicVariant variant = ParabolicVariant::P0,
                                            const std::vector<int>& comm_groups = {});

struct EigenDims {
  int k = 0;
  std::map<std::pair<int, int>, int> table;  // (i,j) -> root count, all of Delta
  int p1 = 0;  // dim E_1(h_k) ∩ g_1
  int p2 = 0;  // dim E_2(h_k) ∩ g_2
  int d_k = 0, dprime_k = 0;
  Rat r_k;
  Rat N;
  Rat m_k, mprime_k;

  int at(int i, int j) const;
};

EigenDims eigenspace_dims(const VerySpecialParabolic& par, int k);

struct SingularExponents {
  Rat r;
  Rat l_prime;
  Rat l;
};

// Exponents attached to the prefix element h = H_1 + ... + H_k.
SingularExponents singular_exponents(const VerySpecialParabolic& par, int k);

}  // namespace pvzeta
