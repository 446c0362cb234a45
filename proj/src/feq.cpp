#include "pvzeta/feq.hpp"

#include <algorithm>
#include <cmath>

namespace pvzeta {

namespace {
constexpr double kPi = 3.14159265358979323846;

std::vector<std::vector<SqClass>> tuples(const std::vector<SqClass>& cls, int k) {
  std::vector<std::vector<SqClass>> out = {{}};
  for (int i = 0; i < k; ++i) {
    std::vector<std::vector<SqClass>> next;
    for (auto& t : out)
      for (SqClass c : cls) {
        auto t2 = t;
        t2.push_back(c);
        next.push_back(std::move(t2));
      }
    out = std::move(next);
  }
  return out;
}

GammaValue wrap_num(const NumEval& ev, cplx v) {
  if (ev.pole()) return PoleTag{"pole proximity"};
  if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) return PoleTag{"non-finite"};
  return v;
}
}  // namespace

std::string OrbitLabel::str(const LocalField& F) const {
  if (oi >= 0) return "O" + std::to_string(oi) + std::to_string(oj);
  std::string s = "(";
  for (size_t i = 0; i < classes.size(); ++i)
    s += (i ? "," : "") + class_name(F, classes[i]);
  return s + ")";
}

std::vector<CharG<NumEval>> chars_to_generic(const std::vector<Character>& pi) {
  std::vector<CharG<NumEval>> out;
  for (auto& c : pi) out.push_back({c.twist, c.s});
  return out;
}

GammaValue rho_b(const FactoredPoly& b, const std::vector<Character>& pi) {
  if (pi.empty()) throw error("empty character vector");
  const LocalField& F = pi[0].F;
  if (F.kind == FieldKind::Complex) {
    NumEval ev(F);
    cplx out = 1.0;
    for (const auto& f : b.factors) {
      long m = 0;
      cplx s = to_double(f.c) + 1.0;
      for (int i = 0; i < b.p; ++i) {
        m += f.a[(size_t)i] * pi[(size_t)i].m;
        s += (double)f.a[(size_t)i] * pi[(size_t)i].s;
      }
      cplx r = ev.rho_m(m, s);
      if (m % 2 != 0) r = -r;  // rho'
      out *= r;
    }
    return wrap_num(ev, out);
  }
  NumEval ev(F);
  return wrap_num(ev, rho_b_g(ev, b, chars_to_generic(pi)));
}

CoeffMatrix tate_matrix(const Character& omega) {
  NumEval ev(omega.F);
  CoeffMatrix M;
  M.F = omega.F;
  auto cls = ev.classes();
  for (SqClass c : cls) {
    M.rows.push_back(OrbitLabel::tuple({c}));
    M.cols.push_back(OrbitLabel::tuple({c}));
  }
  if (omega.F.kind == FieldKind::Complex) {
    cplx r = ev.rho_m(omega.m, omega.s + 1.0);
    if (omega.m % 2 != 0) r = -r;
    M.entries = {{r}};
    return M;
  }
  auto rows = tate_matrix_g(ev, omega.twist, omega.s);
  for (auto& r : rows) {
    std::vector<cplx> row(r.begin(), r.end());
    M.entries.push_back(row);
  }
  return M;
}

cplx quadratic_AN(const Rat& N, cplx s, double absC) {
  double n = to_double(N);
  return -2.0 * std::pow(absC, -2.0 * s - n) * std::pow(2 * kPi, -2.0 * s - n - 1.0) *
         cgamma(s + 1.0, nullptr) * cgamma(s + n, nullptr) * std::sin(kPi * s);
}

QuadCoeffResult quadratic_matrix(const QuadraticForm& form, const Character& omega, cplx C_scale) {
  NumEval ev(omega.F);
  QuadCoeffResult out;
  auto labels = represented_classes(form);
  CoeffMatrix M;
  M.F = omega.F;
  for (SqClass c : labels) {
    M.rows.push_back(OrbitLabel::tuple({c}));
    M.cols.push_back(OrbitLabel::tuple({c}));
  }
  auto e1 = quadratic_matrix_g(ev, form, omega.twist, omega.s, labels);
  auto e2 = quadratic_matrix_route2_g(ev, form, omega.twist, omega.s, labels);
  M.entries = e1;
  Rat N = Rat(form.m(), 2);
  cplx pref = std::pow(C_scale, -2.0 * omega.s - to_double(N));
  // the (omega(C))^{-2} part is 1 for real scalars C
  M.prefactors.push_back({"C-power", pref});
  out.matrix = M;
  CoeffMatrix M2 = M;
  M2.entries = e2;
  out.route2 = M2;
  if (omega.F.kind == FieldKind::Real) {
    auto inv = quad_invariants(form);
    auto [p, q] = *inv.signature;
    if (p == 0 || q == 0) {
      out.definite = true;
      out.AN_scalar = quadratic_AN(N, omega.s, std::abs(C_scale));
    }
  }
  return out;
}

CoeffMatrixSym quadratic_matrix_sym(const QuadraticForm& form, SqClass twist, const AffExp& s) {
  SymEval ev(form.field);
  CoeffMatrixSym M;
  M.F = form.field;
  auto labels = represented_classes(form);
  for (SqClass c : labels) {
    M.rows.push_back(OrbitLabel::tuple({c}));
    M.cols.push_back(OrbitLabel::tuple({c}));
  }
  M.entries = quadratic_matrix_g(ev, form, twist, s, labels);
  return M;
}

// ---------------------------------------------------------------------------
// commutative families
// ---------------------------------------------------------------------------

namespace {

// a^{(1)} factors of the transitive cases
cplx comm_rank_one(const CommArith& fam, const NumEval& ev, SqClass tw, cplx s) {
  if (fam.type == 3 && fam.F.kind == FieldKind::Real) {
    if (tw != 0) throw CaseNotCovered("twisted rank-one factor of the real non-split case");
    int d = fam.dbar * fam.d1 * fam.d1;
    double d8 = d / 8.0;
    return -2.0 * std::pow(2 * kPi, -2.0 * s - d8 - 2.0) * cgamma(s + 1.0, nullptr) *
           cgamma(s + d8 + 1.0, nullptr) * std::sin(kPi * s);
  }
  if (fam.type == 3) {
    // p-adic division-algebra factor
    cplx acc = 1.0;
    for (int j = 0; j <= fam.d1 - 1; ++j) acc *= rho_prime_g(ev, tw, s + (double)j);
    if (fam.d1 % 2 == 0) acc = -acc;
    return acc;
  }
  return rho_prime_g(ev, tw, s);
}

}  // namespace

GammaValue commutative_transitive(const CommArith& fam, const std::vector<Character>& pi) {
  NumEval ev(fam.F);
  if ((int)pi.size() != fam.n) throw error("character count");
  cplx acc = std::pow(fam.gamma_f, fam.n * (fam.n - 1) / 2.0);
  for (int j = 1; j <= fam.n; ++j) {
    SqClass tw = 0;
    cplx s = 0;
    for (int i = j; i <= fam.n; ++i) {
      tw = class_mul(fam.F, tw, pi[(size_t)i - 1].twist);
      s += pi[(size_t)i - 1].s;
    }
    s += (double)(fam.dbar * fam.d1) / 2.0 * (fam.n - j) + 1.0;
    acc *= comm_rank_one(fam, ev, tw, s);
  }
  return wrap_num(ev, acc);
}

CoeffMatrix commutative_matrix(const CommArith& fam, const std::vector<Character>& pi) {
  NumEval ev(fam.F);
  if ((int)pi.size() != fam.n) throw error("character count");
  std::vector<SqClass> labels1 =
      fam.type == 3 ? square_classes(fam.F) : represented_classes(fam.f);
  auto labels = tuples(labels1, fam.n);
  CoeffMatrix M;
  M.F = fam.F;
  for (auto& t : labels) {
    M.rows.push_back(OrbitLabel::tuple(t));
    M.cols.push_back(OrbitLabel::tuple(t));
  }
  // composed characters pi_{n-i+1} ... pi_n |^{(dbar d1 /2)(i-1)+1}
  std::vector<SqClass> tws((size_t)fam.n);
  std::vector<cplx> exps((size_t)fam.n);
  for (int i = 1; i <= fam.n; ++i) {
    SqClass tw = 0;
    cplx s = 0;
    for (int t = fam.n - i + 1; t <= fam.n; ++t) {
      tw = class_mul(fam.F, tw, pi[(size_t)t - 1].twist);
      s += pi[(size_t)t - 1].s;
    }
    tws[(size_t)i - 1] = tw;
    exps[(size_t)i - 1] = s + (double)(fam.dbar * fam.d1) / 2.0 * (i - 1) + 1.0;
  }
  for (size_t r = 0; r < labels.size(); ++r) {
    std::vector<cplx> row;
    for (size_t c = 0; c < labels.size(); ++c) {
      const auto& v = labels[r];
      const auto& u = labels[c];
      cplx lambda = 1.0;
      if (fam.type == 3) {
        lambda = std::pow(fam.gamma_f, fam.n);
        if ((fam.n * (fam.n - 1) / 2) % 2) lambda = -lambda;
        for (int i = 0; i < fam.n; ++i)
          for (int j = i + 1; j < fam.n; ++j) {
            SqClass uv = class_mul(fam.F, u[(size_t)i], v[(size_t)j]);
            lambda *= (double)(ev.hs(fam.delta1, uv) * ev.hs(u[(size_t)i], v[(size_t)j]));
          }
      } else {
        for (int i = 0; i < fam.n; ++i)
          for (int j = i + 1; j < fam.n; ++j)
            lambda *= ev.gamma_form(
                scale_form(fam.f, class_mul(fam.F, u[(size_t)i], v[(size_t)j])));
      }
      cplx prod = 1.0;
      for (int i = 1; i <= fam.n; ++i) {
        SqClass vi = v[(size_t)i - 1], ui = u[(size_t)i - 1];
        if (fam.type == 3) {
          prod *= A_sum_g(ev, 1, tws[(size_t)i - 1], exps[(size_t)i - 1], tws[(size_t)i - 1],
                          exps[(size_t)i - 1] + 0.5, vi, ui, fam.delta1);
        } else {
          SqClass m1 = ev.minus_one();
          cplx t = rho_at_g(ev, tws[(size_t)i - 1], exps[(size_t)i - 1],
                            class_mul(fam.F, m1, class_mul(fam.F, ui, vi)));
          if (ev.hs(tws[(size_t)i - 1], m1) == -1) t = -t;
          prod *= t;
        }
      }
      row.push_back(lambda * prod);
    }
    M.entries.push_back(std::move(row));
  }
  return M;
}

GammaValue commutative_aggregate_even_d(const CommArith& fam, const std::vector<Character>& pi) {
  NumEval ev(fam.F);
  int d = fam.dbar;  // d1 = 1 in the even-d aggregate cases
  if (d % 2) throw CaseNotCovered("aggregate needs even d");
  cplx acc = std::pow(fam.gamma_f, fam.n * (fam.n - 1) / 2.0);
  for (int j = 1; j <= fam.n; ++j) {
    SqClass tw = 0;
    cplx s = 0;
    for (int t = fam.n - j + 1; t <= fam.n; ++t) {
      tw = class_mul(fam.F, tw, pi[(size_t)t - 1].twist);
      s += pi[(size_t)t - 1].s;
    }
    if ((j - 1) % 2) tw = class_mul(fam.F, tw, fam.delta);
    acc *= rho_prime_g(ev, tw, s + (double)d / 2.0 * (j - 1) + 1.0);
  }
  return wrap_num(ev, acc);
}

GammaValue symplectic_comm_scalar(const CommArith& fam, const Character& omega_a, cplx s,
                                  SqClass u) {
  NumEval ev(fam.F);
  if (fam.F.kind != FieldKind::PadicOdd) throw CaseNotCovered("p-adic only");
  int n = fam.n * (fam.delta1 >= 0 && fam.type == 3 ? 2 : 1);
  // n here is the ambient chain length: split keeps fam.n, the non-split
  // variant doubles it; the caller passes the ambient n via fam.n already
  n = fam.n;
  if (n % 2) throw CaseNotCovered("even-rank scalar only");
  int half = n / 2;
  cplx K = 1.0;
  if (fam.type == 3) {
    K = std::pow(fam.gamma_f, half);
    if ((n * (n - 2) / 8) % 2) K = -K;
  }
  SqClass d1 = fam.delta1;
  SqClass tw = omega_a.twist;
  cplx f = gv_num(f_n_num(fam.F, half, s));
  cplx rho1 = ev.rho(tw, s + 1.0);
  int sgn = 1;
  if (half % 2 && ev.hs(u, d1) == -1) sgn = -sgn;
  SqClass harg = class_mul(fam.F, tw, class_mul(fam.F, half % 2 ? d1 : 0, u));
  cplx h = h_sum_g(ev, harg, s + (double)(n + 1) / 2.0);
  return wrap_num(ev, f * K * rho1 * (double)sgn * ev.alpha(u) * h);
}

CoeffMatrix symplectic_comm_matrix(const CommArith& fam, cplx s) {
  NumEval ev(fam.F);
  int n = fam.n;
  if (n % 2) throw CaseNotCovered("even rank only");
  int half = n / 2;
  CoeffMatrix M;
  M.F = fam.F;
  cplx K = 1.0;
  if (fam.type == 3) {
    K = std::pow(fam.gamma_f, half);
    if ((n * (n - 2) / 8) % 2) K = -K;
  }
  M.prefactors.push_back({"K_n", K});
  M.prefactors.push_back({"f_{n/2}", gv_num(f_n_num(fam.F, half, s))});
  SqClass delta = half % 2 ? fam.delta1 : 0;
  for (SqClass c : ev.classes()) {
    M.rows.push_back(OrbitLabel::tuple({c}));
    M.cols.push_back(OrbitLabel::tuple({c}));
  }
  for (SqClass v : ev.classes()) {
    std::vector<cplx> row;
    for (SqClass u : ev.classes())
      row.push_back(A_sum_g(ev, 1, 0, s + 1.0, 0, s + (double)(n + 1) / 2.0, v, u, delta));
    M.entries.push_back(std::move(row));
  }
  return M;
}

// ---------------------------------------------------------------------------
// classical families
// ---------------------------------------------------------------------------

GammaValue symplectic_coeff(int n, int p, bool split, const std::vector<Character>& pi) {
  auto b = bernstein_closed(bf_symplectic(n, p));
  GammaValue v = rho_b(b, pi);
  if (!split && (n * p) % 2 != 0) {
    if (auto* c = std::get_if<cplx>(&v)) return -*c;
  }
  return v;
}

bool orthogonal_orbit_nonempty(const OrthArith& fam, const std::vector<SqClass>& u) {
  if (fam.F.kind != FieldKind::Real) return true;  // in scope: 2n-3k+delta >= 3
  int sum = 0;
  for (SqClass c : u) sum += c == 0 ? 1 : -1;
  int k = fam.k;
  return std::max(-k, k - 2 * fam.q0) <= sum && sum <= std::min(k, 2 * fam.p0 - k);
}

CoeffMatrix orthogonal_coeff(const OrthArith& fam, const std::vector<Character>& pi) {
  NumEval ev(fam.F);
  int k = fam.k;
  if ((int)pi.size() != k) throw error("character count");
  int r = 2 * fam.n - 3 * k + fam.delta;
  auto labels = tuples(ev.classes(), k);
  CoeffMatrix M;
  M.F = fam.F;
  for (auto& t : labels) {
    M.rows.push_back(OrbitLabel::tuple(t));
    M.cols.push_back(OrbitLabel::tuple(t));
  }
  // composed characters pi_{k-l+1} .. pi_k |^{(l-1)/2}
  std::vector<SqClass> tws((size_t)k);
  std::vector<cplx> exps((size_t)k);
  for (int l = 1; l <= k; ++l) {
    SqClass tw = 0;
    cplx s = 0;
    for (int i = k - l + 1; i <= k; ++i) {
      tw = class_mul(fam.F, tw, pi[(size_t)i - 1].twist);
      s += pi[(size_t)i - 1].s;
    }
    tws[(size_t)l - 1] = tw;
    exps[(size_t)l - 1] = s + (l - 1) / 2.0;
  }
  SqClass m1 = ev.minus_one();
  for (size_t ri = 0; ri < labels.size(); ++ri) {
    const auto& v = labels[ri];
    std::vector<cplx> row;
    bool v_empty = !orthogonal_orbit_nonempty(fam, v);
    for (size_t ci = 0; ci < labels.size(); ++ci) {
      const auto& u = labels[ci];
      if (v_empty || !orthogonal_orbit_nonempty(fam, u)) {
        row.push_back(0.0);
        continue;
      }
      cplx prod = 1.0;
      for (int l = 1; l <= k && std::abs(prod) > 0; ++l) {
        cplx acc = 0;
        for (SqClass t : ev.classes()) {
          cplx f = ev.gamma_form(scale_form(fam.Qa, t));
          for (int i = 1; i <= l - 1; ++i)
            f *= ev.alpha(class_mul(fam.F, m1, class_mul(fam.F, t, u[(size_t)i - 1])));
          for (int j = l + 1; j <= k; ++j)
            f *= ev.alpha(class_mul(fam.F, m1, class_mul(fam.F, t, v[(size_t)j - 1])));
          acc += f *
                 rho_at_g(ev, tws[(size_t)l - 1], exps[(size_t)l - 1] + 1.0,
                          class_mul(fam.F, t, v[(size_t)l - 1])) *
                 rho_at_g(ev, tws[(size_t)l - 1], exps[(size_t)l - 1] + (r + 1) / 2.0,
                          class_mul(fam.F, t, u[(size_t)l - 1]));
        }
        prod *= acc;
      }
      row.push_back(prod);
    }
    M.entries.push_back(std::move(row));
  }
  return M;
}

cplx orthogonal_real_prefactor(const OrthArith& fam, const std::vector<cplx>& s) {
  int k = fam.k;
  int pq = fam.p0 + fam.q0;
  cplx sum = 0;
  for (auto x : s) sum += x;
  cplx C = std::pow(2.0, k) * std::pow(2 * kPi, -k * (pq + 2) / 2.0) *
           std::pow(2 * kPi, -2.0 * sum);
  for (int l = 1; l <= k; ++l)
    C *= cgamma(s[(size_t)l - 1] + (l + 1) / 2.0, nullptr) *
         cgamma(s[(size_t)(k - l + 1) - 1] + (pq - l + 1) / 2.0, nullptr);
  return C;
}

cplx orthogonal_real_entry(const OrthArith& fam, const std::vector<SqClass>& v,
                           const std::vector<SqClass>& u, const std::vector<cplx>& s) {
  int k = fam.k;
  auto sgn = [](SqClass c) { return c == 0 ? 1 : -1; };
  cplx prod = 1.0;
  for (int l = 1; l <= k; ++l) {
    cplx phi = 2.0 * (double)(sgn(u[(size_t)l - 1]) + sgn(v[(size_t)l - 1])) *
               (s[(size_t)l - 1] + l / 2.0);
    phi += (double)(sgn(u[(size_t)l - 1]) * (fam.p0 + fam.q0 - k) + (fam.q0 - fam.p0));
    for (int j = l; j <= k; ++j) phi += (double)sgn(v[(size_t)j - 1]);
    for (int i = 1; i <= l - 1; ++i) phi += (double)sgn(u[(size_t)i - 1]);
    prod *= std::cos(kPi / 4.0 * phi);
  }
  return prod;
}

GammaValue orthogonal_btilde_sum(const OrthArith& fam, SqClass a, cplx s,
                                 const std::vector<SqClass>& u) {
  NumEval ev(fam.F);
  int k = fam.k;
  // characters for the tilde parametrization at s_1 = ... = s_k = s:
  // pi_k = |^s, other pi_l = id
  std::vector<Character> pi((size_t)k);
  for (auto& c : pi) c = Character{fam.F, 0, 0, 0.0};
  pi.back().s = s;
  auto M = orthogonal_coeff(fam, pi);
  auto cls = ev.classes();
  auto labels = tuples(cls, k);
  auto prod_of = [&](const std::vector<SqClass>& t) {
    SqClass p = 0;
    for (SqClass c : t) p = class_mul(fam.F, p, c);
    return p;
  };
  size_t col = 0;
  while (col < labels.size() && labels[col] != u) ++col;
  cplx acc = 0;
  for (size_t r = 0; r < labels.size(); ++r) {
    cplx e = M.entries[r][col];
    acc += (double)ev.hs(a, prod_of(labels[r])) * e;
  }
  acc *= (double)ev.hs(a, prod_of(u));
  return wrap_num(ev, acc);
}

GammaValue orthogonal_btilde_closed(const OrthArith& fam, SqClass a, cplx s,
                                    const std::vector<SqClass>& u) {
  NumEval ev(fam.F);
  const LocalField& F = fam.F;
  int k = fam.k;
  int r = 2 * fam.n - 3 * k + fam.delta;
  int a0 = (r % 2 == 0) ? 1 : 0;
  SqClass m1 = ev.minus_one();
  auto inv = quad_invariants(fam.Qa);
  SqClass delta0 = inv.disc;  // split models: n = m
  cplx gQ = std::pow(ev.gamma_form(fam.Qa), (double)k);
  auto prod_of = [&](const std::vector<SqClass>& t) {
    SqClass p = 0;
    for (SqClass c : t) p = class_mul(F, p, c);
    return p;
  };
  auto h_of = [&](const std::vector<SqClass>& t) {
    int h = 1;
    for (size_t i = 0; i < t.size(); ++i)
      for (size_t j = i + 1; j < t.size(); ++j) h *= ev.hs(t[i], t[j]);
    return h;
  };
  SqClass pu = prod_of(u);
  cplx f1 = gv_num(f_n_num(F, (k + 1) / 2 + ((k + 1) % 2 ? 0 : 0), s));
  f1 = gv_num(f_n_num(F, (k + 1) / 2, s));
  cplx f2arg = s + r / 2.0 - 1.0 / (1 + a0);
  cplx f2 = gv_num(f_n_num(F, (k + fam.delta + 1) / 2, f2arg));
  cplx head = f1 * f2 * ev.rho(a, s + 1.0) * gQ;

  cplx Bu = 0;
  SqClass powm1k2 = (k / 2) % 2 ? m1 : 0;
  if (a0 == 0 && k % 2 == 0) {
    Bu = (double)(h_of(u) * ev.hs(pu, m1)) * ev.alpha(pu) *
         h_sum_g(ev, class_mul(F, a, class_mul(F, powm1k2, pu)), s + (k + 1) / 2.0);
  } else if (a0 == 0 && k % 2 == 1) {
    Bu = (double)ev.hs(pu, delta0) *
         ev.rho(class_mul(F, a, delta0), s + (r + k) / 2.0);
  } else if (a0 == 1 && k % 2 == 0) {
    SqClass ad0 = class_mul(F, a, delta0);
    cplx acc = 0;
    for (SqClass x : ev.classes()) {
      acc += ev.alpha(x) * (double)ev.hs(x, ad0) *
             h_sum_g(ev, class_mul(F, a, x), s + (k + 1) / 2.0) *
             A_sum_g(ev, 1, 0, s + (r + 1) / 2.0, 0, s + (double)(r + k) / 2.0, x,
                     class_mul(F, powm1k2, pu), 0);
    }
    Bu = (double)(ev.hs(powm1k2, ad0) * ev.hs(a, pu)) * acc;
  } else {
    SqClass powm1 = ((k - 1) / 2) % 2 ? m1 : 0;
    Bu = (double)h_of(u) * ev.alpha(pu) *
         h_sum_g(ev, class_mul(F, a, class_mul(F, powm1, pu)), s + (r + 1) / 2.0);
  }
  return wrap_num(ev, head * Bu);
}

// ---------------------------------------------------------------------------
// DIII
// ---------------------------------------------------------------------------

GammaValue diii_real_scalar(int n, int p, const std::vector<cplx>& s) {
  if (n - 3 * p < 4) throw CaseNotCovered("real case needs n - 3p >= 4");
  NumEval ev(real_field());
  int m = n - 3 * p + 3;
  cplx acc = 1.0;
  for (int l = 1; l <= p; ++l) {
    cplx sig = (double)(l - 1);
    for (int i = p - l + 1; i <= p; ++i) sig += s[(size_t)i - 1];
    acc *= quadratic_AN(Rat(3, 2), sig, 1.0) * quadratic_AN(Rat(3, 2), sig + (double)m - 3.5, 1.0);
  }
  return wrap_num(ev, acc);
}

CoeffMatrix diii_padic_matrix(const LocalField& F, int n, int p, const std::vector<cplx>& s) {
  if (F.kind == FieldKind::Real) throw CaseNotCovered("use the real scalar form");
  if (F.kind == FieldKind::PadicOdd && (n - 3 * p < 2 || (n - p) % 2 == 0))
    throw CaseNotCovered("needs n-3p >= 2 and n-p odd");
  NumEval ev(F);
  int m = n - 3 * p + 3;
  std::vector<SqClass> nontrivial;
  for (SqClass c : ev.classes())
    if (c != 0 || F.kind == FieldKind::Complex) nontrivial.push_back(c);
  auto labels = tuples(nontrivial, p);
  CoeffMatrix M;
  M.F = F;
  for (auto& t : labels) {
    M.rows.push_back(OrbitLabel::tuple(t));
    M.cols.push_back(OrbitLabel::tuple(t));
  }
  auto base = [&](SqClass v, SqClass u, cplx sig) {
    cplx acc = 0;
    for (SqClass w : nontrivial)
      acc += A_sum_g(ev, 1, 0, sig + 1.0, 0, sig + 1.5, v, w, 0) *
             A_sum_g(ev, 1, 0, sig + (double)m - 2.5, 0, sig + (double)m - 2.0, w, u, 0);
    return acc;
  };
  for (auto& v : labels) {
    std::vector<cplx> row;
    for (auto& u : labels) {
      cplx prod = 1.0;
      for (int l = 1; l <= p; ++l) {
        cplx sig = (double)(l - 1);
        for (int i = p - l + 1; i <= p; ++i) sig += s[(size_t)i - 1];
        prod *= base(v[(size_t)l - 1], u[(size_t)l - 1], sig);
      }
      row.push_back(prod);
    }
    M.entries.push_back(std::move(row));
  }
  return M;
}

// ---------------------------------------------------------------------------
// exceptional families
// ---------------------------------------------------------------------------

GammaValue e7a6_scalar(const LocalField& F, const Character& pi1, const Character& pi2) {
  return rho_b(bernstein_closed(bf_e7a6()), {pi1, pi2});
}

namespace {

// generic entry of the two-index matrices of the dim-g2-one family
template <class E>
typename E::V dimg2_entry_g(const E& ev, int d, SqClass cf, SqClass w1, SqClass w2,
                            typename E::Exp s1, typename E::Exp s2,
                            const std::vector<SqClass>& v, const std::vector<SqClass>& u) {
  const LocalField& F = ev.field();
  SqClass m1 = ev.minus_one();
  typename E::Exp sum = ev.add(s1, s2);
  SqClass w12 = class_mul(F, w1, w2);
  if (d % 2 == 0) {
    typename E::V t1 = A_sum_g(ev, 1, w2, ev.shift(s2, 1), w2, ev.shift(s2, Rat(d + 3, 2)),
                               class_mul(F, v[0], v[1]), class_mul(F, u[0], v[1]), cf);
    typename E::V t2 = A_sum_g(ev, 1, w12, ev.shift(sum, Rat(2 * d + 3, 2)), w12,
                               ev.shift(sum, Rat(3 * d + 4, 2)), class_mul(F, u[0], v[1]),
                               class_mul(F, u[0], u[1]), cf);
    typename E::V out = t1 * t2;
    int sign = ev.hs(m1, cf) * ev.hs(class_mul(F, u[0], v[1]), class_mul(F, m1, cf));
    return sign == 1 ? out : -out;
  }
  // d = 1
  typename E::V t1 = A_sum_g(ev, 0, w2, ev.shift(s2, 1), w2, ev.shift(s2, 2), v[0], u[0],
                             class_mul(F, m1, v[1]));
  typename E::V t2 = A_sum_g(ev, 0, w12, ev.shift(sum, Rat(5, 2)), w12, ev.shift(sum, Rat(7, 2)),
                             v[1], u[1], class_mul(F, m1, u[0]));
  return ev.alpha(m1) * ev.alpha(class_mul(F, u[0], v[1])) * t1 * t2;
}

template <class E>
typename E::V dimg2_single_entry_g(const E& ev, int d, SqClass cf, typename E::Exp s, SqClass v,
                                   SqClass u) {
  const LocalField& F = ev.field();
  SqClass m1 = ev.minus_one();
  if (d == 1) {
    // |2|^{-2s-7/2} rho(|^{2s+4}) A^1_{s+1,s+7/2}(v,u,-1), alpha(-1)^2 in front
    typename E::V pre = ev.abs2_pow(ev.shift(ev.scale(-2, s), Rat(-7, 2))) *
                        ev.rho(0, ev.shift(ev.scale(2, s), 4)) * ev.alpha(m1) * ev.alpha(m1);
    return pre * A_sum_g(ev, 1, 0, ev.shift(s, 1), 0, ev.shift(s, Rat(7, 2)), v, u, m1);
  }
  if (d % 2) throw CaseNotCovered("single-variable form needs d even or 1");
  typename E::V acc = ev.zero();
  for (SqClass w : ev.classes()) {
    typename E::V t = A_sum_g(ev, 1, 0, ev.shift(s, 1), 0, ev.shift(s, Rat(d + 3, 2)),
                              class_mul(F, cf, v), w, 0) *
                      A_sum_g(ev, 1, 0, ev.shift(s, Rat(2 * d + 3, 2)), 0,
                              ev.shift(s, Rat(3 * d + 4, 2)), w, class_mul(F, cf, u), 0);
    if (ev.hs(w, class_mul(F, m1, cf)) == -1) t = -t;
    acc = acc + t;
  }
  return acc;
}

template <class E>
typename E::V lemma_8_2_10_closed_g(const E& ev, typename E::Exp s, SqClass v, SqClass u) {
  SqClass m1 = ev.minus_one();
  return ev.alpha(m1) * ev.alpha(m1) * ev.abs2_pow(ev.shift(ev.scale(-2, s), Rat(-7, 2))) *
         ev.rho(0, ev.shift(ev.scale(2, s), 4)) *
         A_sum_g(ev, 1, 0, ev.shift(s, 1), 0, ev.shift(s, Rat(7, 2)), v, u, m1);
}

// B_{v,u,w}(omega, s) building block
template <class E>
typename E::V e8a1_B_g(const E& ev, SqClass tw, typename E::Exp s, SqClass v, SqClass u,
                       SqClass w) {
  const LocalField& F = ev.field();
  SqClass m1 = ev.minus_one();
  typename E::V acc = ev.zero();
  for (SqClass t : ev.classes()) {
    typename E::V term = A_sum_g(ev, 1, tw, ev.shift(s, 1), tw, ev.shift(s, Rat(5, 2)),
                                 class_mul(F, w, v), t, 0) *
                         A_sum_g(ev, 1, tw, ev.shift(s, Rat(7, 2)), tw, ev.shift(s, 5), t,
                                 class_mul(F, w, u), 0);
    if (ev.hs(t, class_mul(F, m1, w)) == -1) term = -term;
    acc = acc + term;
  }
  return acc;
}

template <class E>
typename E::V e7a2_entry_g(const E& ev, typename E::Exp s1, typename E::Exp s2,
                           const std::vector<SqClass>& v, const std::vector<SqClass>& u) {
  const LocalField& F = ev.field();
  SqClass m1 = ev.minus_one();
  typename E::Exp sum = ev.add(s1, s2);
  typename E::V first = A_sum_g(ev, 1, 0, ev.shift(sum, Rat(5, 2)), 0, ev.shift(sum, 5), 0,
                                class_mul(F, v[1], u[1]), class_mul(F, m1, v[1]));
  typename E::V acc = ev.zero();
  SqClass mv2 = class_mul(F, m1, v[1]);
  for (SqClass a : ev.classes()) {
    typename E::V prod = ev.one();
    for (int l = 1; l <= 3; ++l) {
      SqClass tw = a;
      if ((l - 1) % 2) tw = class_mul(F, tw, mv2);
      prod = prod * ev.rho(tw, ev.shift(s2, l));
    }
    if (ev.hs(a, class_mul(F, m1, class_mul(F, u[0], v[0]))) == -1) prod = -prod;
    acc = acc + prod;
  }
  acc = acc * ev.from_rat(Rat(1, (long)ev.classes().size()));
  return first * acc;
}

}  // namespace

CoeffMatrix dimg2_matrix(const DimG2Arith& fam, const Character& w1, const Character& w2) {
  NumEval ev(fam.F);
  auto labels = tuples(ev.classes(), 2);
  CoeffMatrix M;
  M.F = fam.F;
  for (auto& t : labels) {
    M.rows.push_back(OrbitLabel::tuple(t));
    M.cols.push_back(OrbitLabel::tuple(t));
  }
  for (auto& v : labels) {
    std::vector<cplx> row;
    for (auto& u : labels)
      row.push_back(dimg2_entry_g(ev, fam.d, fam.cf, w1.twist, w2.twist, w1.s, w2.s, v, u));
    M.entries.push_back(std::move(row));
  }
  return M;
}

CoeffMatrix dimg2_single_matrix(const DimG2Arith& fam, cplx s) {
  NumEval ev(fam.F);
  CoeffMatrix M;
  M.F = fam.F;
  for (SqClass c : ev.classes()) {
    M.rows.push_back(OrbitLabel::tuple({c}));
    M.cols.push_back(OrbitLabel::tuple({c}));
  }
  for (SqClass v : ev.classes()) {
    std::vector<cplx> row;
    for (SqClass u : ev.classes())
      row.push_back(dimg2_single_entry_g(ev, fam.d, fam.cf, s, v, u));
    M.entries.push_back(std::move(row));
  }
  return M;
}

CoeffMatrixSym dimg2_single_matrix_sym(const DimG2Arith& fam, const AffExp& s) {
  SymEval ev(fam.F);
  CoeffMatrixSym M;
  M.F = fam.F;
  for (SqClass c : ev.classes()) {
    M.rows.push_back(OrbitLabel::tuple({c}));
    M.cols.push_back(OrbitLabel::tuple({c}));
  }
  for (SqClass v : ev.classes()) {
    std::vector<PadicRat> row;
    for (SqClass u : ev.classes())
      row.push_back(dimg2_single_entry_g(ev, fam.d, fam.cf, s, v, u));
    M.entries.push_back(std::move(row));
  }
  return M;
}

CoeffMatrix dimg2_aggregate_matrix(const DimG2Arith& fam, const Character& w1,
                                   const Character& w2) {
  if (fam.d % 2) throw CaseNotCovered("aggregate needs d even");
  NumEval ev(fam.F);
  const LocalField& F = fam.F;
  SqClass m1 = ev.minus_one();
  CoeffMatrix M;
  M.F = F;
  auto cls = ev.classes();
  for (SqClass c : cls) {
    M.rows.push_back(OrbitLabel::tuple({c}));
    M.cols.push_back(OrbitLabel::tuple({c}));
  }
  cplx sum = w1.s + w2.s;
  SqClass w12 = class_mul(F, w1.twist, w2.twist);
  for (SqClass v : cls) {
    std::vector<cplx> row;
    for (SqClass u : cls) {
      cplx acc = 0;
      for (SqClass w : cls) {
        cplx t = A_sum_g(ev, 1, w2.twist, w2.s + 1.0, w2.twist, w2.s + (fam.d + 3) / 2.0, v, w,
                         fam.cf) *
                 A_sum_g(ev, 1, w12, sum + (double)fam.d + 1.5, w12, sum + 1.5 * fam.d + 2.0, w, u,
                         fam.cf);
        acc += (double)ev.hs(w, class_mul(F, m1, fam.cf)) * t;
      }
      row.push_back((double)ev.hs(m1, fam.cf) * acc);
    }
    M.entries.push_back(std::move(row));
  }
  return M;
}

GammaValue lemma_8_2_10_aggregate(const LocalField& F, cplx s, SqClass v, SqClass u) {
  NumEval ev(F);
  return wrap_num(ev, lemma_8_2_10_closed_g(ev, s, v, u));
}

PadicRat lemma_8_2_10_aggregate_sym(const LocalField& F, const AffExp& s, SqClass v, SqClass u) {
  SymEval ev(F);
  return lemma_8_2_10_closed_g(ev, s, v, u);
}

CoeffMatrix dimg2_rank4_matrix(int d, const std::vector<cplx>& s) {
  CoeffMatrix M;
  M.F = real_field();
  cplx s1 = s[0], s2 = s[1];
  std::vector<OrbitLabel> labels = {OrbitLabel::omega(0, 0), OrbitLabel::omega(0, 1),
                                    OrbitLabel::omega(0, 2), OrbitLabel::omega(1, 0),
                                    OrbitLabel::omega(1, 1)};
  M.rows = labels;
  M.cols = labels;
  double sd = d % 2 ? -1.0 : 1.0;  // (-1)^d
  auto sinp = [&](cplx x) { return std::sin(kPi * x); };
  auto cosp = [&](cplx x) { return std::cos(kPi * x); };
  auto entry = [&](const OrbitLabel& rr, const OrbitLabel& cc) -> cplx {
    int j = rr.oi, kk = rr.oj;  // row: Omega*_{j,k}
    int q = cc.oi, l = cc.oj;   // col: Omega_{q,l}
    if (q == 1 && l == 1) return (j == 1 && kk == 1) ? sd * sinp(s2) * cosp(s1 + s2) : 0.0;
    if (j == 1 && kk == 1) {
      if (q == 0 && l == 1) return std::cos(kPi * d / 2.0) * sinp(s1 + s2);
      if (q == 1 && l == 0) return std::cos(kPi * d / 2.0) * sinp(s2);
      return 0.0;
    }
    auto col_index = [&](int a, int b) {
      if (a == 0 && b == 0) return 0;
      if (a == 0 && b == 2) return 1;
      if (a == 0 && b == 1) return 2;
      return 3;  // (1,0)
    };
    static thread_local cplx T[4][4];
    T[0][0] = sd / 2.0 * sinp(s1 + 2.0 * s2);
    T[0][1] = -0.5 * sinp(s1);
    T[0][2] = (1.0 - sd) / 2.0 * sinp(s1 + s2);
    T[0][3] = (sd - 1.0) / 2.0 * sinp(s2);
    T[1][0] = -0.5 * sinp(s1);
    T[1][1] = sd / 2.0 * sinp(s1 + 2.0 * s2);
    T[1][2] = (1.0 - sd) / 2.0 * sinp(s1 + s2);
    T[1][3] = (sd - 1.0) / 2.0 * sinp(s2);
    T[2][0] = sd / 2.0 * sinp(s2 + d / 2.0);
    T[2][1] = sd / 2.0 * sinp(s2 + d / 2.0);
    T[2][2] = (1.0 - sd) / 2.0;
    T[2][3] = -sd * cosp(s2 + d / 2.0) * sinp(s1 + s2);
    T[3][0] = sd / 2.0 * sinp(s1 + s2 + d / 2.0);
    T[3][1] = sd / 2.0 * sinp(s1 + s2 + d / 2.0);
    T[3][2] = -sd * cosp(s2) * sinp(s1 + s2 + d / 2.0);
    T[3][3] = 0.0;
    // rows of the table are Omega_{q,l}, columns Omega*_{j,k}
    return T[col_index(q, l)][col_index(j, kk)];
  };
  cplx Cd = 4.0 * std::pow(2 * kPi, -(2.0 * s1 + 4.0 * s2 + 3.0 * d + 6.0)) *
            cgamma(s2 + 1.0, nullptr) * cgamma(s2 + (d + 3) / 2.0, nullptr) *
            cgamma(s1 + s2 + (double)d + 1.5, nullptr) * cgamma(s1 + s2 + 1.5 * d + 2.0, nullptr);
  M.prefactors.push_back({"C_d", Cd});
  for (auto& rr : labels) {
    std::vector<cplx> row;
    for (auto& cc : labels) row.push_back(entry(rr, cc));
    M.entries.push_back(std::move(row));
  }
  return M;
}

CoeffMatrix e7a2_matrix(const LocalField& F, const std::vector<cplx>& s) {
  NumEval ev(F);
  auto labels = tuples(ev.classes(), 2);
  CoeffMatrix M;
  M.F = F;
  for (auto& t : labels) {
    M.rows.push_back(OrbitLabel::tuple(t));
    M.cols.push_back(OrbitLabel::tuple(t));
  }
  cplx sum = s[0] + s[1];
  M.prefactors.push_back(
      {"two-power", ev.abs2_pow(-2.0 * sum - 6.5) * ev.rho(0, 2.0 * sum + 7.0)});
  for (auto& v : labels) {
    std::vector<cplx> row;
    for (auto& u : labels) row.push_back(e7a2_entry_g(ev, s[0], s[1], v, u));
    M.entries.push_back(std::move(row));
  }
  return M;
}

CoeffMatrixSym e7a2_matrix_sym(const LocalField& F, const AffExp& s1, const AffExp& s2) {
  SymEval ev(F);
  auto labels = tuples(ev.classes(), 2);
  CoeffMatrixSym M;
  M.F = F;
  for (auto& t : labels) {
    M.rows.push_back(OrbitLabel::tuple(t));
    M.cols.push_back(OrbitLabel::tuple(t));
  }
  AffExp sum = ev.add(s1, s2);
  M.prefactors.push_back({"two-power", ev.rho(0, ev.shift(ev.scale(2, sum), 7))});
  for (auto& v : labels) {
    std::vector<PadicRat> row;
    for (auto& u : labels) row.push_back(e7a2_entry_g(ev, s1, s2, v, u));
    M.entries.push_back(std::move(row));
  }
  return M;
}

CoeffMatrix e7a2_D_matrix(const LocalField& F, const std::vector<cplx>& s) {
  NumEval ev(F);
  const LocalField& Fc = F;
  SqClass m1 = ev.minus_one();
  CoeffMatrix M;
  M.F = F;
  auto cls = ev.classes();
  for (SqClass c : cls) {
    M.rows.push_back(OrbitLabel::tuple({c}));
    M.cols.push_back(OrbitLabel::tuple({c}));
  }
  cplx sum = s[0] + s[1];
  M.prefactors.push_back({"K", ev.abs2_pow(-2.0 * sum - 6.5) * ev.rho(0, 2.0 * sum + 7.0) *
                                   ev.rho(0, s[1] + 1.0) * ev.rho(0, s[1] + 3.0)});
  for (SqClass v : cls) {
    std::vector<cplx> row;
    for (SqClass u : cls) {
      cplx e = A_sum_g(ev, 1, 0, sum + 2.5, 0, sum + 5.0, 0, class_mul(Fc, v, u),
                       class_mul(Fc, m1, v)) *
               ev.rho(class_mul(Fc, m1, v), s[1] + 2.0);
      row.push_back(e);
    }
    M.entries.push_back(std::move(row));
  }
  return M;
}

GammaValue e7a2_single(const LocalField& F, SqClass b, cplx s) {
  NumEval ev(F);
  cplx C = ev.abs2_pow(-4.0 * s - 10.0) * ev.rho(0, 2.0 * s + 4.0) * ev.rho(0, 2.0 * s + 7.0);
  cplx B = rho_prime_g(ev, b, s + 1.0) * rho_prime_g(ev, b, s + 3.0) *
           rho_prime_g(ev, b, s + 5.0);
  return wrap_num(ev, C * B);
}

PadicRat e7a2_single_sym(const LocalField& F, SqClass b, const AffExp& s) {
  SymEval ev(F);
  PadicRat C = ev.rho(0, ev.shift(ev.scale(2, s), 4)) * ev.rho(0, ev.shift(ev.scale(2, s), 7));
  PadicRat B = rho_prime_g(ev, b, ev.shift(s, 1)) * rho_prime_g(ev, b, ev.shift(s, 3)) *
               rho_prime_g(ev, b, ev.shift(s, 5));
  return C * B;
}

CoeffMatrix e8a1_matrix(const LocalField& F, const Character& w1, const Character& w2) {
  NumEval ev(F);
  auto labels = tuples(ev.classes(), 2);
  CoeffMatrix M;
  M.F = F;
  for (auto& t : labels) {
    M.rows.push_back(OrbitLabel::tuple(t));
    M.cols.push_back(OrbitLabel::tuple(t));
  }
  SqClass w12 = class_mul(F, w1.twist, w2.twist);
  for (auto& v : labels) {
    std::vector<cplx> row;
    for (auto& u : labels) {
      cplx e = e8a1_B_g(ev, w2.twist, w2.s, v[0], u[0], v[1]) *
               e8a1_B_g(ev, w12, w1.s + w2.s + 3.0, v[1], u[1], u[0]);
      row.push_back(e);
    }
    M.entries.push_back(std::move(row));
  }
  return M;
}

CoeffMatrixSym e8a1_matrix_sym(const LocalField& F, const AffExp& s1, const AffExp& s2) {
  SymEval ev(F);
  auto labels = tuples(ev.classes(), 2);
  CoeffMatrixSym M;
  M.F = F;
  for (auto& t : labels) {
    M.rows.push_back(OrbitLabel::tuple(t));
    M.cols.push_back(OrbitLabel::tuple(t));
  }
  AffExp sum = ev.shift(ev.add(s1, s2), 3);
  for (auto& v : labels) {
    std::vector<PadicRat> row;
    for (auto& u : labels) {
      PadicRat e = e8a1_B_g(ev, 0, s2, v[0], u[0], v[1]) * e8a1_B_g(ev, 0, sum, v[1], u[1], u[0]);
      row.push_back(e);
    }
    M.entries.push_back(std::move(row));
  }
  return M;
}

CoeffMatrix e8a1_single_matrix(const LocalField& F, cplx s) {
  NumEval ev(F);
  auto cls = ev.classes();
  CoeffMatrix M;
  M.F = F;
  for (SqClass c : cls) {
    M.rows.push_back(OrbitLabel::tuple({c}));
    M.cols.push_back(OrbitLabel::tuple({c}));
  }
  cplx f = ev.abs2_pow(-4.0 * s - 16.0) * ev.rho(0, 2.0 * s + 7.0) * ev.rho(0, 2.0 * s + 10.0);
  M.prefactors.push_back({"f", f});
  auto Ap = [&](cplx sig, SqClass v, SqClass u) {
    return A_sum_g(ev, 1, 0, sig + 1.0, 0, sig + 2.5, v, u, 0);
  };
  for (SqClass v : cls) {
    std::vector<cplx> row;
    for (SqClass u : cls) {
      cplx acc = 0;
      for (SqClass t : cls) acc += Ap(s, v, t) * Ap(s + 5.5, t, u);
      row.push_back(acc);
    }
    M.entries.push_back(std::move(row));
  }
  return M;
}

PadicRat e8a1_single_entry_sym(const LocalField& F, const AffExp& s, SqClass v, SqClass u) {
  SymEval ev(F);
  auto Ap = [&](const AffExp& sig, SqClass a, SqClass b) {
    return A_sum_g(ev, 1, 0, ev.shift(sig, 1), 0, ev.shift(sig, Rat(5, 2)), a, b, 0);
  };
  PadicRat acc = ev.zero();
  for (SqClass t : ev.classes()) acc = acc + Ap(s, v, t) * Ap(ev.shift(s, Rat(11, 2)), t, u);
  PadicRat f = ev.rho(0, ev.shift(ev.scale(2, s), 7)) * ev.rho(0, ev.shift(ev.scale(2, s), 10));
  return f * acc;
}

GammaValue e8a1_eix_scalar(const std::vector<cplx>& s) {
  NumEval ev(real_field());
  cplx s1 = s[0], s2 = s[1];
  cplx C = 4.0 * std::pow(2 * kPi, -(4.0 * s1 + 8.0 * s2 + 36.0)) * cgamma(s2 + 1.0, nullptr) *
           cgamma(s2 + 2.5, nullptr) * cgamma(s2 + 3.5, nullptr) * cgamma(s2 + 5.0, nullptr) *
           cgamma(s1 + s2 + 4.0, nullptr) * cgamma(s1 + s2 + 5.5, nullptr) *
           cgamma(s1 + s2 + 6.5, nullptr) * cgamma(s1 + s2 + 8.0, nullptr);
  return wrap_num(ev, C * std::sin(2 * kPi * s2) * std::sin(2 * kPi * (s1 + s2)));
}

GammaValue eiii_evii_scalar(int d, const std::vector<cplx>& s) {
  NumEval ev(real_field());
  cplx s1 = s[0], s2 = s[1];
  cplx C = 4.0 * std::pow(2 * kPi, -(2.0 * s1 + 4.0 * s2 + 3.0 * d + 6.0)) *
           cgamma(s2 + 1.0, nullptr) * cgamma(s2 + (d + 3) / 2.0, nullptr) *
           cgamma(s1 + s2 + (2.0 * d + 3) / 2.0, nullptr) *
           cgamma(s1 + s2 + 1.5 * d + 2.0, nullptr);
  return wrap_num(ev, C * std::sin(kPi * s2) * std::cos(kPi * (s1 + s2)));
}

}  // namespace pvzeta
