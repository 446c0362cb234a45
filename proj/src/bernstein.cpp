#include "pvzeta/bernstein.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace pvzeta {

bool LinearFactor::operator<(const LinearFactor& o) const {
  if (a != o.a) return a < o.a;
  return c < o.c;
}

void FactoredPoly::canonicalize() {
  for (auto& f : factors) {
    long g = 0;
    for (long x : f.a) g = std::gcd(g, std::abs(x));
    if (g == 0) throw error("constant factor in a factored polynomial");
    int lead = 0;
    while (f.a[(size_t)lead] == 0) ++lead;
    long sign = f.a[(size_t)lead] > 0 ? 1 : -1;
    long div = g * sign;
    if (div != 1) {
      for (auto& x : f.a) x /= div;
      f.c /= div;
      scalar *= Rat(div);
    }
  }
  std::sort(factors.begin(), factors.end());
}

bool FactoredPoly::same_factors(const FactoredPoly& o) const {
  if (p != o.p) return false;
  FactoredPoly a = *this, b = o;
  a.canonicalize();
  b.canonicalize();
  if (a.factors != b.factors) return false;
  if (a.up_to_scalar || b.up_to_scalar) return true;
  return a.scalar == b.scalar;
}

std::string FactoredPoly::str() const {
  std::ostringstream os;
  if (up_to_scalar)
    os << "c";
  else if (scalar != 1)
    os << rat_str(scalar);
  for (const auto& f : factors) {
    os << "(";
    bool first = true;
    for (int i = 0; i < p; ++i) {
      long ai = f.a[(size_t)i];
      if (!ai) continue;
      if (!first) os << (ai > 0 ? "+" : "");
      os << (ai == 1 ? "" : ai == -1 ? "-" : std::to_string(ai)) << "s" << (i + 1);
      first = false;
    }
    if (f.c != 0) os << (f.c > 0 ? "+" : "") << rat_str(f.c);
    os << ")";
  }
  return os.str();
}

FactoredPoly fp_one(int p) {
  FactoredPoly f;
  f.p = p;
  return f;
}

FactoredPoly fp_mul(const FactoredPoly& f, const FactoredPoly& g) {
  if (f.p != g.p) throw error("factored polynomials over different variable counts");
  FactoredPoly r = f;
  r.scalar *= g.scalar;
  r.up_to_scalar = f.up_to_scalar || g.up_to_scalar;
  r.factors.insert(r.factors.end(), g.factors.begin(), g.factors.end());
  return r;
}

namespace {

// substitute variables: g's variable j maps to sum_i var_map[j][i] s_i + shift[j]
FactoredPoly fp_substitute(const FactoredPoly& g, int p_new,
                           const std::vector<std::vector<long>>& var_map,
                           const std::vector<Rat>& shift) {
  FactoredPoly r;
  r.p = p_new;
  r.scalar = g.scalar;
  r.up_to_scalar = g.up_to_scalar;
  for (const auto& f : g.factors) {
    LinearFactor nf;
    nf.a.assign((size_t)p_new, 0);
    nf.c = f.c;
    for (int j = 0; j < g.p; ++j) {
      if (!f.a[(size_t)j]) continue;
      for (int i = 0; i < p_new; ++i) nf.a[(size_t)i] += f.a[(size_t)j] * var_map[(size_t)j][(size_t)i];
      nf.c += f.a[(size_t)j] * shift[(size_t)j];
    }
    r.factors.push_back(nf);
  }
  return r;
}

// identity embedding of a k-variable polynomial into the last k of p variables
FactoredPoly fp_embed_suffix(const FactoredPoly& g, int p_new) {
  std::vector<std::vector<long>> vm((size_t)g.p, std::vector<long>((size_t)p_new, 0));
  std::vector<Rat> sh((size_t)g.p, Rat(0));
  for (int j = 0; j < g.p; ++j) vm[(size_t)j][(size_t)(p_new - g.p + j)] = 1;
  return fp_substitute(g, p_new, vm, sh);
}

LinearFactor suffix_window(int p, int from /*1-based*/, const Rat& c) {
  LinearFactor f;
  f.a.assign((size_t)p, 0);
  for (int i = from; i <= p; ++i) f.a[(size_t)(i - 1)] = 1;
  f.c = c;
  return f;
}

FactoredPoly one_var_from_roots(const std::vector<Rat>& roots) {
  FactoredPoly f;
  f.p = 1;
  for (const Rat& r : roots) f.factors.push_back({{1}, r});
  return f;
}

std::vector<Rat> comm_base_roots(int dbar, int d1) {
  std::vector<Rat> roots;
  for (int j = 0; j < d1; ++j) roots.push_back(Rat(dbar * j, 2));
  return roots;
}

// base roots of the single-variable families; the data the recursion bottoms
// out on
std::vector<Rat> base_registry(const BernsteinFamily& fam) {
  using K = BernsteinFamily::Kind;
  switch (fam.kind) {
    case K::Dim1: return {Rat(0)};
    case K::Quadratic: return {Rat(0), fam.N - 1};
    case K::Commutative: {
      if (fam.parts() != 1) break;
      // one block: roots (dbar/2) j, j < d1
      int l = fam.groups.empty() ? fam.n : fam.groups[0];
      std::vector<Rat> roots;
      for (int k = 0; k < l; ++k)
        for (int j = 0; j < fam.d1; ++j) roots.push_back(Rat(fam.dbar, 2) * (j + fam.d1 * k));
      return roots;
    }
    case K::ClassicalI:
      if (fam.k == 1) return {Rat(0), Rat(2 * fam.n - 3 + fam.delta - 1, 2)};
      break;
    case K::Symplectic:
      if (fam.p == 1) return {Rat(0), Rat(2 * (fam.n - 3) + 1)};
      break;
    case K::DIII:
      if (fam.p == 1)
        return {Rat(0), Rat(1, 2), Rat(fam.n) - Rat(7, 2), Rat(fam.n - 3)};
      break;
    case K::DimG2One:
      // usual polynomial of the whole family, used as a descent base
      return {Rat(0), Rat(fam.d + 1, 2), Rat(fam.d) + Rat(1, 2), Rat(3 * fam.d, 2) + 1};
    default: break;
  }
  throw MissingBaseCase(fam.label());
}

Rat chain_step(const BernsteinFamily& fam) {
  using K = BernsteinFamily::Kind;
  switch (fam.kind) {
    case K::Commutative: return Rat(fam.dbar * fam.d1, 2);
    case K::ClassicalI: return Rat(1, 2);
    case K::Symplectic: return Rat(2);
    case K::DIII: return Rat(1);
    default: throw error("no chain step for " + fam.label());
  }
}

std::vector<Rat> chain_base_roots(const BernsteinFamily& fam) {
  using K = BernsteinFamily::Kind;
  switch (fam.kind) {
    case K::Commutative: return comm_base_roots(fam.dbar, fam.d1);
    case K::ClassicalI: return {Rat(0), Rat(2 * fam.n - 3 * fam.k + fam.delta - 1, 2)};
    case K::Symplectic: return {Rat(0), Rat(2 * (fam.n - 3 * fam.p) + 1)};
    case K::DIII: return {Rat(0), Rat(1, 2), Rat(fam.n - 3 * fam.p) - Rat(1, 2), Rat(fam.n - 3 * fam.p)};
    default: throw error("not a chain family");
  }
}

bool is_chain_kind(BernsteinFamily::Kind k) {
  using K = BernsteinFamily::Kind;
  return k == K::Commutative || k == K::ClassicalI || k == K::Symplectic || k == K::DIII;
}

// prefix family carrying the first `j` parts
BernsteinFamily fam_prefix(const BernsteinFamily& fam, int j) {
  using K = BernsteinFamily::Kind;
  BernsteinFamily r = fam;
  switch (fam.kind) {
    case K::Commutative: {
      std::vector<int> g = fam.groups;
      if (g.empty()) g.assign((size_t)fam.n, 1);
      g.resize((size_t)j);
      r.n = std::accumulate(g.begin(), g.end(), 0);
      r.groups = g;
      return r;
    }
    case K::ClassicalI: {
      int steps = fam.k - j;
      int nn = fam.n, dd = fam.delta;
      for (int t = 0; t < steps; ++t) {
        nn = nn - 2 + dd;
        dd = 1 - dd;
      }
      return bf_classical(dd, nn, j);
    }
    case K::Symplectic: return bf_symplectic(fam.n - 3 * (fam.p - j), j);
    case K::DIII: return bf_diii(fam.n - 3 * (fam.p - j), j);
    default: throw error("prefix undefined for " + fam.label());
  }
}

// family of the parts after the first `j`
BernsteinFamily fam_peel(const BernsteinFamily& fam, int j) {
  using K = BernsteinFamily::Kind;
  BernsteinFamily r = fam;
  switch (fam.kind) {
    case K::Commutative: {
      std::vector<int> g = fam.groups;
      if (g.empty()) g.assign((size_t)fam.n, 1);
      g.erase(g.begin(), g.begin() + j);
      r.n = std::accumulate(g.begin(), g.end(), 0);
      r.groups = g;
      return r;
    }
    case K::ClassicalI: {
      int nn = fam.n, dd = fam.delta;
      for (int t = 0; t < j; ++t) {
        nn = nn - 2 + dd;
        dd = 1 - dd;
      }
      return bf_classical(dd, nn, fam.k - j);
    }
    case K::Symplectic: return bf_symplectic(fam.n - 3 * j, fam.p - j);
    case K::DIII: return bf_diii(fam.n - 3 * j, fam.p - j);
    default: throw error("peel undefined for " + fam.label());
  }
}

int prefix_chain_size(const BernsteinFamily& fam, int j) {
  if (fam.kind != BernsteinFamily::Kind::Commutative) return j;
  std::vector<int> g = fam.groups;
  if (g.empty()) g.assign((size_t)fam.n, 1);
  return std::accumulate(g.begin(), g.begin() + j, 0);
}

}  // namespace

int BernsteinFamily::parts() const {
  using K = BernsteinFamily::Kind;
  switch (kind) {
    case K::Dim1:
    case K::Quadratic: return 1;
    case K::Commutative: return groups.empty() ? n : (int)groups.size();
    case K::ClassicalI: return k;
    case K::Symplectic:
    case K::DIII: return p;
    default: return 2;
  }
}

std::string BernsteinFamily::label() const {
  using K = BernsteinFamily::Kind;
  std::ostringstream os;
  switch (kind) {
    case K::Dim1: return "dim1";
    case K::Quadratic: return "quadratic(N=" + rat_str(N) + ")";
    case K::Commutative:
      os << "comm:" << dbar << "," << d1 << "," << n;
      if (!groups.empty()) {
        os << ":";
        for (size_t i = 0; i < groups.size(); ++i) os << (i ? "+" : "") << groups[i];
      }
      return os.str();
    case K::ClassicalI: return (delta ? std::string("BI:") : std::string("DI:")) +
                               std::to_string(n) + "," + std::to_string(k);
    case K::Symplectic: return "CI:" + std::to_string(n) + "," + std::to_string(p);
    case K::DIII: return "DIII:" + std::to_string(n) + "," + std::to_string(p);
    case K::E7a6: return "E7a6";
    case K::DimG2One: return "dimg2:" + std::to_string(d);
    case K::E7a2: return "E7a2";
    case K::E8a1: return "E8a1";
    case K::CnP0prime: return "CnP0p:" + std::to_string(n) + "," + std::to_string(k);
  }
  return "?";
}

BernsteinFamily bf_quadratic(const Rat& N) {
  BernsteinFamily f;
  f.kind = BernsteinFamily::Kind::Quadratic;
  f.N = N;
  return f;
}
BernsteinFamily bf_commutative(int dbar, int d1, int n, std::vector<int> groups) {
  BernsteinFamily f;
  f.kind = BernsteinFamily::Kind::Commutative;
  f.dbar = dbar;
  f.d1 = d1;
  f.n = n;
  f.groups = std::move(groups);
  if (!f.groups.empty() &&
      std::accumulate(f.groups.begin(), f.groups.end(), 0) != n)
    throw error("grouping does not partition the chain");
  return f;
}
BernsteinFamily bf_classical(int delta, int n, int k) {
  BernsteinFamily f;
  f.kind = BernsteinFamily::Kind::ClassicalI;
  f.delta = delta;
  f.n = n;
  f.k = k;
  return f;
}
BernsteinFamily bf_symplectic(int n, int p) {
  BernsteinFamily f;
  f.kind = BernsteinFamily::Kind::Symplectic;
  f.n = n;
  f.p = p;
  return f;
}
BernsteinFamily bf_diii(int n, int p) {
  BernsteinFamily f;
  f.kind = BernsteinFamily::Kind::DIII;
  f.n = n;
  f.p = p;
  return f;
}
BernsteinFamily bf_e7a6() {
  BernsteinFamily f;
  f.kind = BernsteinFamily::Kind::E7a6;
  return f;
}
BernsteinFamily bf_dimg2one(int d) {
  BernsteinFamily f;
  f.kind = BernsteinFamily::Kind::DimG2One;
  f.d = d;
  return f;
}
BernsteinFamily bf_e7a2() {
  BernsteinFamily f;
  f.kind = BernsteinFamily::Kind::E7a2;
  return f;
}
BernsteinFamily bf_e8a1() {
  BernsteinFamily f;
  f.kind = BernsteinFamily::Kind::E8a1;
  return f;
}
BernsteinFamily bf_cnp0prime(int n, int k) {
  BernsteinFamily f;
  f.kind = BernsteinFamily::Kind::CnP0prime;
  f.n = n;
  f.k = k;
  return f;
}

BernsteinFamily parse_bernstein_family(const std::string& s) {
  auto nums = [&](size_t pos) {
    std::vector<int> out;
    std::string t = s.substr(pos);
    size_t i = 0;
    while (i < t.size()) {
      size_t j = t.find(',', i);
      if (j == std::string::npos) j = t.size();
      out.push_back(std::stoi(t.substr(i, j - i)));
      i = j + 1;
    }
    return out;
  };
  if (s == "E7a6" || s == "EVI" || s == "EVII-e7a6") return bf_e7a6();
  if (s == "E7a2") return bf_e7a2();
  if (s == "E8a1" || s == "EIX") return bf_e8a1();
  if (s == "F4a1") return bf_dimg2one(1);
  if (s == "E6a2" || s == "EIII") return bf_dimg2one(2);
  if (s == "E7a1" || s == "EVII") return bf_dimg2one(4);
  if (s == "E8a8") return bf_dimg2one(8);
  if (s.rfind("dimg2:", 0) == 0) return bf_dimg2one(std::stoi(s.substr(6)));
  if (s.rfind("comm:", 0) == 0) {
    auto v = nums(5);
    if (v.size() != 3) throw UnknownFamily(s);
    return bf_commutative(v[0], v[1], v[2]);
  }
  if (s.rfind("BI:", 0) == 0) {
    auto v = nums(3);
    return bf_classical(1, v[0], v[1]);
  }
  if (s.rfind("DI:", 0) == 0) {
    auto v = nums(3);
    return bf_classical(0, v[0], v[1]);
  }
  if (s.rfind("CI:", 0) == 0 || s.rfind("CII", 0) == 0) {
    auto v = nums(s.find(':') + 1);
    return bf_symplectic(v[0], v[1]);
  }
  if (s.rfind("DIII:", 0) == 0) {
    auto v = nums(5);
    return bf_diii(v[0], v[1]);
  }
  if (s.rfind("CnP0p:", 0) == 0) {
    auto v = nums(6);
    return bf_cnp0prime(v[0], v[1]);
  }
  throw UnknownFamily(s);
}

BernsteinFamily family_from_parabolic(const VerySpecialParabolic& par) {
  const GradedPV& pv = par.pv;
  const std::string& lbl = pv.family.label;
  int k = pv.marked + 1;
  int n = pv.rs.rank;
  if (par.p0prime) return bf_cnp0prime(n, k);
  if (lbl == "quadric") return bf_quadratic(pv.N);
  if (lbl == "commA") return bf_commutative(2, 1, k, par.groups);
  if (lbl == "commCsplit") return bf_commutative(1, 1, n, par.groups);
  if (lbl == "commD") return bf_commutative(4, 1, n / 2, par.groups);
  if (lbl == "commE7a7") return bf_commutative(8, 1, 3, par.groups);
  if (lbl == "BI") return bf_classical(1, n, k);
  if (lbl == "DI") return bf_classical(0, n, k);
  if (lbl == "CI") return bf_symplectic(n, k / 2);
  if (lbl == "E7a6") return bf_e7a6();
  if (lbl == "E7a2") return bf_e7a2();
  if (lbl == "E8a1") return bf_e8a1();
  if (lbl == "dimg2one") return bf_dimg2one(pv.family.d);
  throw UnknownFamily(lbl);
}

VerySpecialParabolic group_parabolic(const VerySpecialParabolic& par,
                                     const std::vector<int>& groups,
                                     const std::vector<int>& degrees) {
  if (std::accumulate(groups.begin(), groups.end(), 0) != par.p())
    throw error("grouping does not partition the parabolic");
  VerySpecialParabolic out;
  out.pv = par.pv;
  out.m_exception = par.m_exception;
  int pos = 0;
  for (int g : groups) {
    Vec h((size_t)par.pv.rs.dim, Rat(0));
    for (int t = 0; t < g; ++t) h = vadd(h, par.H[(size_t)pos++]);
    out.H.push_back(h);
  }
  out.d = degrees;
  return out;
}

std::optional<VerySpecialParabolic> realize_split(const BernsteinFamily& fam) {
  using K = BernsteinFamily::Kind;
  try {
    switch (fam.kind) {
      case K::Quadratic: {
        // odd-dimensional model when 2N is odd, even otherwise
        Rat twoN = 2 * fam.N;
        if (!is_integer(twoN)) return std::nullopt;
        long m = to_long(twoN);  // dim of the quadratic space
        if (m % 2 == 1) {
          long nn = (m + 1) / 2;
          if (nn < 2) return std::nullopt;
          auto rs = build_root_system(RSKind::B, (int)nn);
          return very_special_parabolic(grade(rs, 0));
        }
        long nn = m / 2 + 1;
        if (nn < 4) return std::nullopt;
        auto rs = build_root_system(RSKind::D, (int)nn);
        return very_special_parabolic(grade(rs, 0));
      }
      case K::Commutative: {
        std::vector<int> super = fam.groups;
        if (super.empty()) super.assign((size_t)fam.n, 1);
        std::vector<int> split_groups;
        for (int g : super) split_groups.push_back(g * fam.d1);
        RSKind kind;
        int rank, marked;
        if (fam.dbar == 1 && fam.d1 == 1) {
          kind = RSKind::C;
          rank = fam.n;
          marked = fam.n - 1;
        } else if (fam.dbar == 2) {
          kind = RSKind::A;
          rank = 2 * fam.n * fam.d1 - 1;
          marked = fam.n * fam.d1 - 1;
        } else if (fam.dbar == 4 && fam.d1 == 1) {
          kind = RSKind::D;
          rank = 2 * fam.n;
          marked = 2 * fam.n - 1;
        } else if (fam.dbar == 8 && fam.d1 == 1 && fam.n == 3) {
          kind = RSKind::E7;
          rank = 7;
          marked = 6;
        } else if (fam.dbar == 1 && fam.d1 == 2) {
          kind = RSKind::C;
          rank = 2 * fam.n;
          marked = 2 * fam.n - 1;
        } else {
          return std::nullopt;
        }
        auto rs = build_root_system(kind, rank);
        auto pv = grade(rs, marked);
        return very_special_parabolic(pv, ParabolicVariant::P0, split_groups);
      }
      case K::ClassicalI: {
        if (fam.k < 2) return std::nullopt;
        auto rs = build_root_system(fam.delta ? RSKind::B : RSKind::D, fam.n);
        return very_special_parabolic(grade(rs, fam.k - 1));
      }
      case K::Symplectic: {
        auto rs = build_root_system(RSKind::C, fam.n);
        return very_special_parabolic(grade(rs, 2 * fam.p - 1));
      }
      case K::DIII: {
        auto rs = build_root_system(RSKind::D, fam.n);
        auto par = very_special_parabolic(grade(rs, 2 * fam.p - 1));
        std::vector<int> groups((size_t)fam.p, 2);
        std::vector<int> degrees;
        for (int i = 1; i <= fam.p; ++i) degrees.push_back(4 * i);
        return group_parabolic(par, groups, degrees);
      }
      case K::E7a6: return very_special_parabolic(grade(build_root_system(RSKind::E7, 7), 5));
      case K::E7a2: return very_special_parabolic(grade(build_root_system(RSKind::E7, 7), 1));
      case K::E8a1: return very_special_parabolic(grade(build_root_system(RSKind::E8, 8), 0));
      case K::DimG2One: {
        switch (fam.d) {
          case 1: return very_special_parabolic(grade(build_root_system(RSKind::F4, 4), 0));
          case 2: return very_special_parabolic(grade(build_root_system(RSKind::E6, 6), 1));
          case 4: return very_special_parabolic(grade(build_root_system(RSKind::E7, 7), 0));
          case 8: return very_special_parabolic(grade(build_root_system(RSKind::E8, 8), 7));
          default: return std::nullopt;
        }
      }
      case K::CnP0prime: {
        auto rs = build_root_system(RSKind::C, fam.n);
        return very_special_parabolic(grade(rs, fam.k - 1), ParabolicVariant::P0prime);
      }
      default: return std::nullopt;
    }
  } catch (const error&) {
    return std::nullopt;
  }
}

FactoredPoly bernstein_closed(const BernsteinFamily& fam, int index) {
  using K = BernsteinFamily::Kind;
  int p = fam.parts();
  if (index < 1 || index > p) throw error("bernstein index out of range");

  if (fam.kind == K::Dim1 || fam.kind == K::Quadratic)
    return one_var_from_roots(base_registry(fam));

  if (is_chain_kind(fam.kind)) {
    // the prefix family in `index` parts, embedded into the last variables
    BernsteinFamily pre = fam_prefix(fam, index);
    int pp = index;
    FactoredPoly b;
    b.p = pp;
    if (fam.kind == K::Commutative) {
      // window starting at variable i merges the single-part windows whose
      // lengths fall in group p-i+1 of the chain
      std::vector<int> g = pre.groups;
      if (g.empty()) g.assign((size_t)pre.n, 1);
      std::vector<int> l((size_t)g.size() + 1, 0);
      for (size_t i = 0; i < g.size(); ++i) l[i + 1] = l[i] + g[i];
      Rat half_dbar = Rat(fam.dbar, 2);
      for (int i = 1; i <= pp; ++i) {
        int gi = pp - i + 1;
        for (int L = l[(size_t)gi - 1] + 1; L <= l[(size_t)gi]; ++L)
          for (int j = 0; j < fam.d1; ++j)
            b.factors.push_back(
                suffix_window(pp, i, half_dbar * (j + fam.d1 * (L - 1))));
      }
    } else {
      auto roots = chain_base_roots(pre);
      Rat step = chain_step(pre);
      for (int l = 0; l < pp; ++l)
        for (const Rat& r0 : roots) b.factors.push_back(suffix_window(pp, pp - l, r0 + step * l));
    }
    return fp_embed_suffix(b, p);
  }

  // two-part exceptional families
  auto pure_s2 = [&](const std::vector<Rat>& roots) {
    FactoredPoly b;
    b.p = 2;
    for (const Rat& r : roots) b.factors.push_back({{0, 1}, r});
    return b;
  };
  auto mixed = [&](const std::vector<Rat>& roots, long c1, const Rat& shift) {
    FactoredPoly b;
    b.p = 2;
    for (const Rat& r : roots) b.factors.push_back({{c1, 1}, r + shift});
    return b;
  };
  switch (fam.kind) {
    case K::E7a6: {
      FactoredPoly b1 = pure_s2({Rat(0), Rat(3)});
      if (index == 1) return b1;
      return fp_mul(b1, mixed({Rat(0), Rat(3)}, 2, Rat(4)));
    }
    case K::DimG2One: {
      FactoredPoly b1 = pure_s2({Rat(0), Rat(fam.d + 1, 2)});
      if (index == 1) return b1;
      return fp_mul(b1, mixed({Rat(0), Rat(fam.d + 1, 2)}, 1, Rat(fam.d) + Rat(1, 2)));
    }
    case K::E7a2: {
      FactoredPoly b1 = pure_s2({Rat(0), Rat(1), Rat(2)});
      if (index == 1) return b1;
      return fp_mul(b1, mixed({Rat(0), Rat(1), Rat(3, 2), Rat(5, 2)}, 1, Rat(3, 2)));
    }
    case K::E8a1: {
      std::vector<Rat> B = {Rat(0), Rat(3, 2), Rat(5, 2), Rat(4)};
      FactoredPoly b1 = pure_s2(B);
      if (index == 1) return b1;
      return fp_mul(b1, mixed(B, 1, Rat(3)));
    }
    case K::CnP0prime: {
      if (fam.k % 2) throw CaseNotCovered("split form needs even k");
      FactoredPoly b;
      b.p = 2;
      b.up_to_scalar = true;
      if (index == 1) throw CaseNotCovered("only the full polynomial is stated");
      for (int j = 0; j < fam.k / 2; ++j) {
        b.factors.push_back({{0, 1}, Rat(2 * j)});
        b.factors.push_back({{2, 1}, Rat(2 * fam.n - 2 * fam.k - 1 - 2 * j)});
      }
      return b;
    }
    default: throw UnknownFamily(fam.label());
  }
}

Rat descent_shift(const BernsteinFamily& fam, int cut) {
  using K = BernsteinFamily::Kind;
  switch (fam.kind) {
    case K::E7a6: return Rat(2);
    case K::DimG2One: return Rat(fam.d) + Rat(1, 2);
    case K::E7a2: return Rat(3, 2);
    case K::E8a1: return Rat(3);
    case K::CnP0prime: throw CaseNotCovered("no shift for the proportional family");
    default: return chain_step(fam) * prefix_chain_size(fam, cut);
  }
}

FactoredPoly bernstein_descent(const BernsteinFamily& fam, int cut) {
  using K = BernsteinFamily::Kind;
  int p = fam.parts();
  if (p == 1) return one_var_from_roots(base_registry(fam));
  if (cut < 1 || cut >= p) throw error("descent cut out of range");

  if (fam.kind == K::CnP0prime) return bernstein_closed(fam, 2);

  // shift exponent: root-counted on the split model when available
  Rat r_k = descent_shift(fam, cut);
  if (auto par = realize_split(fam)) {
    auto ed = eigenspace_dims(*par, cut);
    if (ed.r_k != r_k)
      throw NormalizationDrift("shift mismatch for " + fam.label() + " cut " +
                               std::to_string(cut) + ": " + rat_str(ed.r_k) + " vs " +
                               rat_str(r_k));
    // scaling constants collapse to 1 under the chosen normalization; the
    // centralizer invariants have degree d_k m_k and d'_k m'_k
    const GradedPV& pv = par->pv;
    Vec h = par->h_prefix(cut);
    Vec hp = vsub(vscale(2, pv.H0), h);
    if (pv.killing_norm(h, h) != Rat(-2) * ed.d_k * ed.m_k ||
        pv.killing_norm(hp, hp) != Rat(-2) * ed.dprime_k * ed.mprime_k)
      throw NormalizationDrift("Killing ratio differs from 1 for " + fam.label());
  }

  if (!is_chain_kind(fam.kind)) {
    // p = 2 exceptional assembly
    std::vector<Rat> U, Uprime;
    long mix_coeff = 1;
    switch (fam.kind) {
      case K::E7a6:
        U = base_registry(bf_quadratic(Rat(4)));
        Uprime = U;
        mix_coeff = 2;
        break;
      case K::DimG2One:
        U = base_registry(bf_quadratic(Rat(fam.d + 3, 2)));
        Uprime = U;
        break;
      case K::E7a2:
        U = base_registry(bf_commutative(2, 1, 3, {3}));
        Uprime = base_registry(bf_dimg2one(1));
        break;
      case K::E8a1:
        U = base_registry(bf_dimg2one(2));
        Uprime = U;
        break;
      default: throw UnknownFamily(fam.label());
    }
    FactoredPoly b;
    b.p = 2;
    for (const Rat& r : U) b.factors.push_back({{0, 1}, r});
    for (const Rat& r : Uprime)
      b.factors.push_back({{mix_coeff, 1}, r + Rat(mix_coeff) * r_k});
    return b;
  }

  // chain assembly: prefix block in the last `cut` variables, peeled block in
  // the leading variables with the merged window shifted by r_k
  BernsteinFamily pre = fam_prefix(fam, cut);
  BernsteinFamily post = fam_peel(fam, cut);
  FactoredPoly bu = bernstein_descent(pre, std::max(1, pre.parts() - 1));
  FactoredPoly bu2 = bernstein_descent(post, std::max(1, post.parts() - 1));
  int pu = pre.parts(), pv2 = post.parts();
  FactoredPoly left = fp_embed_suffix(bu, p);
  // substitution for the peeled part: first pv2-1 variables map to s_1..,
  // the last maps onto s_{p-cut} + ... + s_p + r_k
  std::vector<std::vector<long>> vm((size_t)pv2, std::vector<long>((size_t)p, 0));
  std::vector<Rat> sh((size_t)pv2, Rat(0));
  for (int j = 0; j + 1 < pv2; ++j) vm[(size_t)j][(size_t)j] = 1;
  for (int i = p - cut; i <= p; ++i) vm[(size_t)pv2 - 1][(size_t)(i - 1)] = 1;
  sh[(size_t)pv2 - 1] = r_k;
  FactoredPoly right = fp_substitute(bu2, p, vm, sh);
  (void)pu;
  return fp_mul(left, right);
}

FactoredPoly b_k_lower(const BernsteinFamily& fam, int k) { return bernstein_closed(fam, k); }

cplx evaluate(const FactoredPoly& f, const std::vector<cplx>& s) {
  if ((int)s.size() != f.p) throw error("wrong point dimension");
  cplx out = to_double(f.scalar);
  for (const auto& fac : f.factors) {
    cplx v = to_double(fac.c);
    for (int i = 0; i < f.p; ++i) v += (double)fac.a[(size_t)i] * s[(size_t)i];
    out *= v;
  }
  return out;
}

Rat evaluate_exact(const FactoredPoly& f, const std::vector<Rat>& s) {
  if ((int)s.size() != f.p) throw error("wrong point dimension");
  Rat out = f.scalar;
  for (const auto& fac : f.factors) {
    Rat v = fac.c;
    for (int i = 0; i < f.p; ++i) v += fac.a[(size_t)i] * s[(size_t)i];
    out *= v;
  }
  return out;
}

FactoredPoly usual_bernstein(const FactoredPoly& f) {
  FactoredPoly r;
  r.p = 1;
  r.scalar = f.scalar;
  r.up_to_scalar = f.up_to_scalar;
  for (const auto& fac : f.factors) {
    long ap = fac.a.back();
    if (ap == 0) {
      r.scalar *= fac.c;
      continue;
    }
    r.factors.push_back({{ap}, fac.c});
  }
  r.canonicalize();
  return r;
}

}  // namespace pvzeta
