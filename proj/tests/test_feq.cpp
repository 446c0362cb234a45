#include <doctest.h>

#include <cmath>

#include "pvzeta/feq.hpp"

using namespace pvzeta;

namespace {
constexpr double kPi = 3.14159265358979323846;

double rel(cplx a, cplx b) {
  double s = std::max({std::abs(a), std::abs(b), 1e-30});
  return std::abs(a - b) / s;
}

cplx full(const CoeffMatrix& M, size_t i, size_t j) {
  cplx p = 1.0;
  for (auto& [n, v] : M.prefactors) p *= v;
  return p * M.entries[i][j];
}

std::vector<Character> untwisted(const LocalField& F, std::vector<cplx> s) {
  std::vector<Character> out;
  for (auto x : s) out.push_back({F, 0, 0, x});
  return out;
}

// max |M1(pi) M2(pi-reflected) - scale * P| over entries, P a permutation
double compose_residual(const CoeffMatrix& A, const CoeffMatrix& B,
                        const std::vector<size_t>& perm, cplx scale) {
  size_t n = A.rows.size();
  double worst = 0;
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) {
      cplx acc = 0;
      for (size_t k = 0; k < n; ++k) acc += A.entries[i][k] * B.entries[k][j];
      cplx want = perm[i] == j ? scale : 0.0;
      worst = std::max(worst, std::abs(acc - want));
    }
  return worst;
}

}  // namespace

TEST_CASE("rho_b ties the complex coefficient to the factored polynomial") {
  auto C = complex_field();
  NumEval ev(C);
  // the exceptional four-factor family: A = rho(pi2|)rho(pi2|^4)rho(pi1^2pi2|^5)rho(pi1^2pi2|^8)
  for (auto [s1, s2] : std::vector<std::pair<cplx, cplx>>{{cplx(0.31, 0.2), cplx(0.77, -0.1)},
                                                          {cplx(1.21, 0), cplx(0.4, 0.55)}}) {
    Character p1{C, 0, 2, s1}, p2{C, 0, -1, s2};  // indices m1 = 2, m2 = -1
    cplx direct = ev.rho_m(p2.m, s2 + 1.0) * ev.rho_m(p2.m, s2 + 4.0) *
                  ev.rho_m(2 * p1.m + p2.m, 2.0 * s1 + s2 + 5.0) *
                  ev.rho_m(2 * p1.m + p2.m, 2.0 * s1 + s2 + 8.0);
    cplx viab = gv_num(e7a6_scalar(C, p1, p2));
    CHECK(rel(direct, viab) < 1e-12);
  }
}

TEST_CASE("tate matrix composition") {
  for (auto F : {real_field(), padic_field(3), padic_field(5)}) {
    NumEval ev(F);
    SqClass m1 = ev.minus_one();
    auto cls = ev.classes();
    for (SqClass a : cls) {
      cplx s(0.37, 0.21);
      Character w{F, a, 0, s};
      Character wref{F, a, 0, -s - 1.0};
      auto M1 = tate_matrix(w);
      auto M2 = tate_matrix(wref);
      // row v of the composition matches column -v, scaled by w(-1)
      std::vector<size_t> perm;
      for (SqClass v : cls) {
        SqClass target = class_mul(F, m1, v);
        perm.push_back((size_t)(std::find(cls.begin(), cls.end(), target) - cls.begin()));
      }
      cplx scale = (double)ev.hs(a, m1);
      CHECK(compose_residual(M1, M2, perm, scale) < 1e-9);
    }
  }
  Character wc{complex_field(), 0, 0, cplx(0.4, 0.0)};
  CHECK(tate_matrix(wc).rows.size() == 1);
}

TEST_CASE("quadratic matrices: two routes, inverse identity, definite scalar") {
  // the two displayed expressions agree for all real sign patterns m <= 6
  auto R = real_field();
  for (int m = 1; m <= 6; ++m)
    for (int mask = 0; mask < (1 << m); ++mask) {
      QuadraticForm f{R, {}};
      for (int i = 0; i < m; ++i) f.diag.push_back((mask >> i) & 1);
      Character w{R, mask % 2 ? 1 : 0, 0, cplx(0.29, 0.4)};
      auto res = quadratic_matrix(f, w);
      for (size_t i = 0; i < res.matrix.rows.size(); ++i)
        for (size_t j = 0; j < res.matrix.rows.size(); ++j)
          CHECK(rel(res.matrix.entries[i][j], res.route2.entries[i][j]) < 1e-9);
    }
  // p-adic two-route + exact symbolic agreement
  for (long q : {3L, 5L}) {
    auto F = padic_field(q);
    QuadraticForm f{F, {0, 1, 2, 3, 0}};
    Character w{F, 1, 0, cplx(0.41, 0.3)};
    auto res = quadratic_matrix(f, w);
    for (size_t i = 0; i < res.matrix.rows.size(); ++i)
      for (size_t j = 0; j < res.matrix.rows.size(); ++j)
        CHECK(rel(res.matrix.entries[i][j], res.route2.entries[i][j]) < 1e-9);
    auto sym = quadratic_matrix_sym(f, 1, aff_s1());
    for (size_t i = 0; i < sym.rows.size(); ++i)
      for (size_t j = 0; j < sym.rows.size(); ++j)
        CHECK(rel(sym.entries[i][j].eval(w.s), res.matrix.entries[i][j]) < 1e-9);
  }
  // inverse identity over R and p-adic
  for (auto F : {real_field(), padic_field(3), padic_field(5)}) {
    std::vector<QuadraticForm> forms;
    if (F.kind == FieldKind::Real)
      forms = {{F, {0, 0, 1}}, {F, {0, 1, 0, 1}}, {F, {0, 0, 0, 1, 1}}};
    else
      forms = {{F, {0, 1, 2}}, {F, {0, 1, 2, 3}}, {F, {0, 0, 1, 2, 3}}};
    for (auto& f : forms) {
      Rat N = Rat(f.m(), 2);
      cplx s(0.37, 0.0);
      Character w{F, 0, 0, s};
      Character wref{F, 0, 0, -s - to_double(N)};
      auto A = quadratic_matrix(f, w).matrix;
      auto B = quadratic_matrix(f, wref).matrix;
      std::vector<size_t> id;
      for (size_t i = 0; i < A.rows.size(); ++i) id.push_back(i);
      CHECK(compose_residual(A, B, id, 1.0) < 1e-8);
    }
  }
  // definite real forms reproduce the anisotropic scalar
  for (int m = 2; m <= 5; ++m) {
    QuadraticForm f{R, std::vector<SqClass>((size_t)m, 0)};
    Character w{R, 0, 0, cplx(0.4, 0.0)};
    auto res = quadratic_matrix(f, w);
    REQUIRE(res.definite);
    REQUIRE(res.matrix.rows.size() == 1);
    CHECK(rel(res.matrix.entries[0][0], res.AN_scalar) < 1e-9);
  }
}

TEST_CASE("exact inverse identity for the symbolic quadratic matrices") {
  for (long q : {3L, 5L}) {
    auto F = padic_field(q);
    QuadraticForm f{F, {0, 1, 2, 3, 0}};  // m = 5
    auto A = quadratic_matrix_sym(f, 0, aff_s1());
    // reflected argument: -s - N with N = 5/2
    auto B = quadratic_matrix_sym(f, 0, {-1, 0, Rat(-5, 2)});
    SymEval ev(F);
    size_t n = A.rows.size();
    for (size_t i = 0; i < n; ++i)
      for (size_t j = 0; j < n; ++j) {
        PadicRat acc = ev.zero();
        for (size_t k = 0; k < n; ++k) acc = acc + A.entries[i][k] * B.entries[k][j];
        CHECK(acc == (i == j ? ev.one() : ev.zero()));
      }
  }
}

TEST_CASE("commutative coefficients") {
  // transitive split case ties to the factored polynomial
  for (auto F : {real_field(), complex_field(), padic_field(5)}) {
    CommArith fam{F, 2, 1, 3, 2, 0, {F, {}}, 1.0, 0, 0};
    std::vector<Character> pi = untwisted(F, {cplx(0.3, 0.1), cplx(0.7, -0.2), cplx(1.1, 0.05)});
    if (F.kind == FieldKind::Complex) {
      auto lhs = gv_num(commutative_transitive(fam, pi));
      auto rhs = gv_num(rho_b(bernstein_closed(bf_commutative(2, 1, 3)), pi));
      CHECK(rel(lhs, rhs) < 1e-10);
    } else {
      auto lhs = gv_num(commutative_transitive(fam, pi));
      auto rhs = gv_num(rho_b(bernstein_closed(bf_commutative(2, 1, 3)), pi));
      CHECK(rel(lhs, rhs) < 1e-10);
    }
  }
  // matrix case i over q=3: aggregate over v against the even-d closed form
  {
    auto F = padic_field(3);
    NumEval ev(F);
    QuadraticForm f2{F, {0, 1}};  // d = 2 block form
    auto inv = quad_invariants(f2);
    CommArith fam{F, 2, 1, 2, 1, 2, f2, quad_invariants(f2).gamma, inv.delta, 0};
    std::vector<Character> pi = untwisted(F, {cplx(0.45, 0.0), cplx(0.9, 0.0)});
    auto M = commutative_matrix(fam, pi);
    auto agg = gv_num(commutative_aggregate_even_d(fam, pi));
    auto labels = M.rows;
    for (size_t c = 0; c < M.cols.size(); ++c) {
      cplx acc = 0;
      for (size_t r = 0; r < M.rows.size(); ++r) acc += M.entries[r][c];
      SqClass pu = 0;
      for (SqClass x : M.cols[c].classes) pu = class_mul(F, pu, x);
      cplx want = agg * (double)((fam.n - 1) % 2 ? ev.hs(fam.delta, pu) : 1);
      CHECK(rel(acc, want) < 1e-9);
    }
  }
  // symplectic-commutative split: matrix vs scalar aggregation
  for (long q : {3L, 5L}) {
    auto F = padic_field(q);
    NumEval ev(F);
    CommArith fam{F, 1, 1, 4, 1, 1, {F, {0}}, 1.0, 0, class_of_minus_one(F)};
    cplx s(0.53, 0.0);
    auto M = symplectic_comm_matrix(fam, s);
    cplx fpre = 1.0;
    for (auto& [n, v] : M.prefactors) fpre *= v;
    for (SqClass v : ev.classes())
      for (SqClass u : ev.classes()) {
        cplx acc = 0;
        for (SqClass b : ev.classes()) {
          Character wb{F, b, 0, s};
          cplx Bu = gv_num(symplectic_comm_scalar(fam, wb, s, u));
          acc += (double)ev.hs(b, class_mul(F, u, v)) * Bu;
        }
        acc /= (double)ev.classes().size();
        CHECK(rel(acc, fpre * M.entries[(size_t)v][(size_t)u]) < 1e-9);
      }
  }
}

TEST_CASE("symplectic coefficient") {
  auto F = padic_field(3);
  std::vector<Character> pi = untwisted(F, {cplx(0.3, 0.0), cplx(0.8, 0.0)});
  auto split = gv_num(symplectic_coeff(7, 2, true, pi));
  auto cii = gv_num(symplectic_coeff(7, 2, false, pi));
  CHECK(rel(split, gv_num(rho_b(bernstein_closed(bf_symplectic(7, 2)), pi))) < 1e-12);
  CHECK(rel(cii, -split) < 1e-12);  // np = 14 even -> +, so use odd case too
  auto split2 = gv_num(symplectic_coeff(8, 1, true, pi = untwisted(F, {cplx(0.4, 0)})));
  auto cii2 = gv_num(symplectic_coeff(8, 1, false, pi));
  CHECK(rel(cii2, split2) < 1e-12);  // np = 8 even
}

TEST_CASE("orthogonal real family: phase form and vanishing") {
  // split models: q0 = m - k with m = n, p0 = 2n - m - k + delta
  for (auto [n, k, delta] : std::vector<std::array<int, 3>>{{5, 3, 1}, {6, 3, 0}, {7, 4, 1}}) {
    OrthArith fam;
    fam.F = real_field();
    fam.n = n;
    fam.k = k;
    fam.delta = delta;
    fam.p0 = n - k + delta;
    fam.q0 = n - k;
    fam.Qa = QuadraticForm{real_field(), {}};
    if (delta) fam.Qa.diag = {0};  // one positive square
    std::vector<cplx> st = {cplx(0.23, 0), cplx(0.61, 0), cplx(1.07, 0), cplx(1.49, 0)};
    st.resize((size_t)k);
    // characters of the tilde parametrization
    std::vector<Character> pi;
    for (int l = 0; l < k; ++l) {
      cplx prev = l + 1 < k ? st[(size_t)(k - l - 2)] : 0.0;
      pi.push_back({real_field(), 0, 0, st[(size_t)(k - l - 1)] - prev});
    }
    auto M = orthogonal_coeff(fam, pi);
    cplx C = orthogonal_real_prefactor(fam, st);
    auto labels = M.rows;
    for (size_t r = 0; r < labels.size(); ++r)
      for (size_t c = 0; c < labels.size(); ++c) {
        const auto& v = labels[r].classes;
        const auto& u = labels[c].classes;
        if (!orthogonal_orbit_nonempty(fam, v) || !orthogonal_orbit_nonempty(fam, u)) {
          CHECK(std::abs(M.entries[r][c]) == 0.0);
          continue;
        }
        cplx closed = C * orthogonal_real_entry(fam, v, u, st);
        CHECK(rel(M.entries[r][c], closed) < 1e-8);
        // vanishing when the positive counts differ by 2 or more
        int pv = 0, pu = 0;
        for (SqClass x : v) pv += x == 0;
        for (SqClass x : u) pu += x == 0;
        if (std::abs(pv - pu) >= 2) CHECK(std::abs(M.entries[r][c]) < 1e-9);
      }
  }
}

TEST_CASE("orthogonal p-adic aggregates") {
  for (long q : {3L, 5L}) {
    for (auto [n, k, delta] : std::vector<std::array<int, 3>>{{5, 3, 1}, {6, 3, 0}}) {
      OrthArith fam;
      fam.F = padic_field(q);
      fam.n = n;
      fam.k = k;
      fam.delta = delta;
      fam.Qa = QuadraticForm{fam.F, {}};
      if (delta) fam.Qa.diag = {0};
      cplx s(0.21, 0.0);
      for (auto u : std::vector<std::vector<SqClass>>{{0, 0, 0}, {1, 2, 0}, {3, 1, 2}}) {
        for (SqClass a : {0, 1, 2, 3}) {
          auto lhs = gv_num(orthogonal_btilde_sum(fam, a, s, u));
          auto rhs = gv_num(orthogonal_btilde_closed(fam, a, s, u));
          CHECK(rel(lhs, rhs) < 1e-8);
        }
      }
    }
  }
}

TEST_CASE("DIII coefficients") {
  // real scalar: frozen expansion of the base factor
  {
    int n = 8, p = 1;
    cplx s1(0.37, 0), s2(0.81, 0);
    auto a = gv_num(diii_real_scalar(n, p, {s2}));
    // the p = 1 coefficient at (s1, s2) reduced to its own variable
    cplx direct = 4.0 * std::pow(2 * kPi, -6.0 * s2 - 2.0 * (double)n + 2.0) *
                  cgamma(s2 + 1.0, nullptr) * cgamma(s2 + 1.5, nullptr) *
                  cgamma(s2 + (double)n - 2.0, nullptr) * cgamma(s2 + (double)n - 2.5, nullptr) *
                  (n % 2 ? -1.0 : 1.0) * std::sin(kPi * s2) * std::cos(kPi * s2);
    // a_{-1,-1}(s1,s2) with s1 = 0: exponent -2s1-4s2-2n+2 at s1=0
    CHECK(rel(a, direct) < 1e-9);
    // p = 2 is the product of two p = 1 blocks at shifted arguments
    auto a2 = gv_num(diii_real_scalar(11, 2, {s1, s2}));
    auto b1 = gv_num(diii_real_scalar(8, 1, {s2}));
    auto b2 = gv_num(diii_real_scalar(8, 1, {s1 + s2 + 1.0}));
    CHECK(rel(a2, b1 * b2) < 1e-9);
  }
  // p-adic block matrix at p = 2 is the Kronecker-style product of bases
  {
    auto F = padic_field(3);
    int n = 11, p = 2;
    cplx s1(0.33, 0), s2(0.72, 0);
    auto M = diii_padic_matrix(F, n, p, {s1, s2});
    auto B1 = diii_padic_matrix(F, 8, 1, {s2});
    auto B2 = diii_padic_matrix(F, 8, 1, {s1 + s2 + 1.0});
    // entry ((v1,v2),(u1,u2)) = B1[v2,u2-block] ... first block uses sigma = s2
    for (size_t r = 0; r < M.rows.size(); ++r)
      for (size_t c = 0; c < M.cols.size(); ++c) {
        auto v = M.rows[r].classes, u = M.cols[c].classes;
        size_t i1 = (size_t)(v[0] - 1), j1 = (size_t)(u[0] - 1);
        size_t i2 = (size_t)(v[1] - 1), j2 = (size_t)(u[1] - 1);
        cplx want = B1.entries[i2][j2] * B2.entries[i1][j1];
        CHECK(rel(M.entries[r][c], want) < 1e-10);
      }
    CHECK_THROWS_AS(diii_padic_matrix(F, 10, 2, {s1, s2}), CaseNotCovered);
  }
}

TEST_CASE("dim-g2-one family and its aggregates") {
  for (long q : {3L, 5L}) {
    auto F = padic_field(q);
    NumEval ev(F);
    SqClass m1 = ev.minus_one();
    cplx s(0.47, 0.0);
    // d = 1: summing the two-index matrix reproduces the closed aggregate
    DimG2Arith fam1{F, 1, 0};
    Character id0{F, 0, 0, 0.0}, ids{F, 0, 0, s};
    auto M = dimg2_matrix(fam1, id0, ids);
    for (SqClass v : ev.classes())
      for (SqClass u : ev.classes()) {
        SqClass u1 = 1;  // arbitrary
        cplx acc = 0;
        for (SqClass w : ev.classes()) {
          // row (w, wv), col (u1, u1 u)
          size_t r = (size_t)(w * 4 + class_mul(F, w, v));
          size_t c = (size_t)(u1 * 4 + class_mul(F, u1, u));
          acc += M.entries[r][c];
        }
        auto closed = gv_num(lemma_8_2_10_aggregate(F, s, v, u));
        CHECK(rel(acc, closed) < 1e-9);
        // and the symbolic closed form evaluates to the same thing
        auto sym = lemma_8_2_10_aggregate_sym(F, aff_s1(), v, u);
        CHECK(rel(sym.eval(s), closed) < 1e-10);
      }
    // d even: matrix aggregation equals the B-matrix, and at s1 = 0 the
    // single-variable form
    for (int d : {2, 4, 8}) {
      DimG2Arith fam{F, d, m1};
      cplx s1(0.0, 0.0), s2 = s;
      Character w1{F, 0, 0, s1}, w2{F, 0, 0, s2};
      auto Mfull = dimg2_matrix(fam, w1, w2);
      auto agg = dimg2_aggregate_matrix(fam, w1, w2);
      for (SqClass v : ev.classes())
        for (SqClass u : ev.classes()) {
          SqClass u1 = 2;
          cplx acc = 0;
          for (SqClass w : ev.classes()) {
            size_t r = (size_t)(w * 4 + class_mul(F, w, v));
            size_t c = (size_t)(u1 * 4 + class_mul(F, u1, u));
            acc += Mfull.entries[r][c];
          }
          CHECK(rel(acc, agg.entries[(size_t)v][(size_t)u]) < 1e-9);
        }
      auto single = dimg2_single_matrix(fam, s2);
      for (SqClass v : ev.classes())
        for (SqClass u : ev.classes())
          CHECK(rel(agg.entries[(size_t)v][(size_t)u],
                    single.entries[(size_t)v][(size_t)u]) < 1e-9);
      // exact symbolic single matrix against numeric
      auto symM = dimg2_single_matrix_sym(fam, aff_s1());
      for (SqClass v : ev.classes())
        for (SqClass u : ev.classes())
          CHECK(rel(symM.entries[(size_t)v][(size_t)u].eval(s2),
                    single.entries[(size_t)v][(size_t)u]) < 1e-9);
    }
  }
  // real rank-4 table: inverse composition within the Omega labels
  {
    auto M = dimg2_rank4_matrix(1, {cplx(0.31, 0), cplx(0.57, 0)});
    CHECK(M.rows.size() == 5);
    // spot value: the (1,1)x(1,1) corner
    cplx s1(0.31, 0), s2(0.57, 0);
    CHECK(rel(M.entries[4][4], -std::sin(kPi * s2) * std::cos(kPi * (s1 + s2))) < 1e-12);
  }
}

TEST_CASE("degree-seven family: matrix, aggregation, single-variable form") {
  for (long q : {3L, 5L}) {
    auto F = padic_field(q);
    NumEval ev(F);
    cplx s(0.61, 0.0);
    auto M = e7a2_matrix(F, {0.0, s});
    cplx pref = 1.0;
    for (auto& [n, v] : M.prefactors) pref *= v;
    // aggregate over v with the two-sided b-weights reproduces the
    // single-variable three-factor form
    for (SqClass b : ev.classes()) {
      auto single = gv_num(e7a2_single(F, b, s));
      for (auto u : std::vector<std::vector<SqClass>>{{0, 0}, {1, 2}, {3, 3}, {2, 0}}) {
        cplx acc = 0;
        for (size_t r = 0; r < M.rows.size(); ++r) {
          auto& v = M.rows[r].classes;
          size_t c = (size_t)(u[0] * 4 + u[1]);
          acc += (double)ev.hs(b, class_mul(F, v[0], v[1])) * M.entries[r][c];
        }
        acc *= (double)ev.hs(b, class_mul(F, u[0], u[1])) * pref;
        CHECK(rel(acc, single) < 1e-8);
      }
    }
    // D-matrix of the intermediate aggregation
    auto D = e7a2_D_matrix(F, {0.0, s});
    cplx dpref = 1.0;
    for (auto& [n, v] : D.prefactors) dpref *= v;
    for (SqClass vv : ev.classes())
      for (SqClass uu : ev.classes()) {
        // sum the full matrix over v1 at fixed v1v2 = vv, u = (u1, u1 uu)
        cplx acc = 0;
        SqClass u1 = 0;
        for (SqClass v1 : ev.classes()) {
          size_t r = (size_t)(v1 * 4 + class_mul(F, v1, vv));
          size_t c = (size_t)(u1 * 4 + class_mul(F, u1, uu));
          acc += M.entries[r][c];
        }
        // rows of the D matrix carry v = v1 v2
        cplx want = D.entries[(size_t)vv][(size_t)uu] *
                    (double)1.0;  // same prefactor family
        // K(s1,s2) = pref * rho(|^{s2+1}) rho(|^{s2+3}); here compare shapes
        cplx lhs = acc * pref;
        cplx rhs = want * dpref / (ev.rho(0, s + 1.0) * ev.rho(0, s + 3.0));
        // the v1-sum of the full entries equals D/(rho rho) pieces recombined:
        // D_{v,u}(s1,s2) = rho(|^{s2+1}) rho(|^{s2+3}) sum_{v1} d_{(v1,v1 v),(u1,u1 u)}
        CHECK(rel(lhs * ev.rho(0, s + 1.0) * ev.rho(0, s + 3.0), want * dpref) < 1e-8);
        (void)lhs;
        (void)rhs;
      }
  }
}

TEST_CASE("degree-eight family: matrix and single-variable aggregation") {
  for (long q : {3L, 5L}) {
    auto F = padic_field(q);
    NumEval ev(F);
    cplx s(0.39, 0.0);
    Character w1{F, 0, 0, 0.0}, w2{F, 0, 0, s};
    auto M = e8a1_matrix(F, w1, w2);
    auto S = e8a1_single_matrix(F, s);
    cplx spref = 1.0;
    for (auto& [n, v] : S.prefactors) spref *= v;
    for (SqClass v : ev.classes())
      for (SqClass u : ev.classes()) {
        SqClass u1 = 1;
        cplx acc = 0;
        for (SqClass v1 : ev.classes()) {
          size_t r = (size_t)(v1 * 4 + class_mul(F, v1, v));
          size_t c = (size_t)(u1 * 4 + class_mul(F, u1, u));
          acc += M.entries[r][c];
        }
        CHECK(rel(acc, spref * S.entries[(size_t)v][(size_t)u]) < 1e-8);
      }
  }
}

TEST_CASE("real anisotropic scalars") {
  cplx s1(0.21, 0), s2(0.67, 0);
  auto a = gv_num(eiii_evii_scalar(2, {s1, s2}));
  CHECK(std::abs(a) > 0);
  // reflected composition is the identity
  for (int d : {2, 4}) {
    cplx refl2 = -s1 - s2 - 1.5 * d - 2.0;
    auto x = gv_num(eiii_evii_scalar(d, {s1, s2}));
    auto y = gv_num(eiii_evii_scalar(d, {s1, refl2}));
    CHECK(rel(x * y, 1.0) < 1e-9);
  }
  {
    auto x = gv_num(e8a1_eix_scalar({s1, s2}));
    auto y = gv_num(e8a1_eix_scalar({s1, -s1 - s2 - 8.0}));
    CHECK(rel(x * y, 1.0) < 1e-9);
  }
}
