#include <doctest.h>

#include "pvzeta/rootsys.hpp"

using namespace pvzeta;

TEST_CASE("classical root counts and highest roots") {
  auto e7 = build_root_system(RSKind::E7, 7);
  CHECK(e7.roots.size() == 126);
  CHECK(e7.n_positive == 63);

  auto f4 = build_root_system(RSKind::F4, 4);
  CHECK(f4.roots.size() == 48);
  int longs = 0, shorts = 0;
  for (int i = 0; i < (int)f4.roots.size(); ++i) (f4.is_long(i) ? longs : shorts)++;
  CHECK(longs == 24);
  CHECK(shorts == 24);

  auto d5 = build_root_system(RSKind::D, 5);
  CHECK(d5.roots.size() == 40);
  Vec e1e2(5, Rat(0));
  e1e2[0] = 1;
  e1e2[1] = 1;
  CHECK(d5.root(d5.highest_root()) == e1e2);

  auto e8 = build_root_system(RSKind::E8, 8);
  CHECK(e8.roots.size() == 240);
  auto e6 = build_root_system(RSKind::E6, 6);
  CHECK(e6.roots.size() == 72);
  auto g2 = build_root_system(RSKind::G2, 2);
  CHECK(g2.roots.size() == 12);

  CHECK_THROWS_AS(build_root_system(RSKind::D, 3), InvalidRank);
  CHECK_THROWS_AS(build_root_system(RSKind::E6, 7), InvalidRank);
}

TEST_CASE("cartan integers") {
  auto a3 = build_root_system(RSKind::A, 3);
  for (int s : a3.simple) CHECK(cartan_integer(a3, s, s) == 2);
  CHECK(cartan_integer(a3, a3.simple[0], a3.simple[1]) == -1);

  auto b3 = build_root_system(RSKind::B, 3);
  Vec e1(3, Rat(0)), e12(3, Rat(0));
  e1[0] = 1;
  e12[0] = 1;
  e12[1] = -1;
  int i1 = b3.index_of(e1), i12 = b3.index_of(e12);
  REQUIRE(i1 >= 0);
  REQUIRE(i12 >= 0);
  CHECK(cartan_integer(b3, i1, i12) == 1);
  CHECK(cartan_integer(b3, i12, i1) == 2);

  // integrality across a whole system
  auto e6 = build_root_system(RSKind::E6, 6);
  for (int a = 0; a < 20; ++a)
    for (int b = 0; b < (int)e6.roots.size(); b += 7) {
      Rat v = 2 * dot(e6.root(a), e6.root(b)) / dot(e6.root(b), e6.root(b));
      CHECK(is_integer(v));
    }
}

TEST_CASE("gradings of the exceptional families") {
  auto e7 = build_root_system(RSKind::E7, 7);
  auto pv72 = grade(e7, 1);  // alpha_2
  CHECK(pv72.dim_g(2) == 7);
  CHECK(pv72.deg_F == 7);
  CHECK(pv72.dim_g(1) == 35);

  auto pv76 = grade(e7, 5);  // alpha_6
  CHECK(pv76.dim_g(2) == 10);
  CHECK(pv76.deg_F == 4);
  CHECK(pv76.dim_g(1) == 32);

  auto e8 = build_root_system(RSKind::E8, 8);
  auto pv81 = grade(e8, 0);
  CHECK(pv81.dim_g(2) == 14);
  CHECK(pv81.deg_F == 8);
  CHECK(pv81.dim_g(1) == 64);

  auto d6 = build_root_system(RSKind::D, 6);
  auto pv62 = grade(d6, 1);
  CHECK(pv62.N == 4);  // n - k

  CHECK_THROWS_AS(grade(e8, 3), OutOfScopeGrading);
}

TEST_CASE("normalized Killing form is -deg F / 2 on H0") {
  struct Case {
    RSKind k;
    int rank, marked;
  };
  std::vector<Case> cases = {{RSKind::E7, 7, 1}, {RSKind::E7, 7, 5}, {RSKind::E8, 8, 0},
                             {RSKind::E8, 8, 7}, {RSKind::F4, 4, 0}, {RSKind::E6, 6, 1},
                             {RSKind::B, 5, 2},  {RSKind::D, 6, 1},  {RSKind::C, 5, 4},
                             {RSKind::C, 4, 3},  {RSKind::A, 5, 2},  {RSKind::D, 6, 5},
                             {RSKind::E7, 7, 6}};
  for (auto c : cases) {
    auto rs = build_root_system(c.k, c.rank);
    auto pv = grade(rs, c.marked);
    CHECK(pv.killing_norm(pv.H0, pv.H0) == Rat(-pv.deg_F, 2));
    CHECK(pv.kill_H0H0 == 2 * (Rat(pv.dim_g(1)) + 4 * pv.dim_g(2)));
    CHECK(pv.dim_g(1) == pv.dim_g(-1));
    CHECK(pv.dim_g(2) == pv.dim_g(-2));
  }
}

static void check_chain(const GradedPV& pv, size_t expected_len) {
  auto chain = canonical_orthogonal_sequence(pv);
  CHECK(chain.size() == expected_len);
  // strong orthogonality
  for (size_t i = 0; i < chain.size(); ++i)
    for (size_t j = i + 1; j < chain.size(); ++j) {
      CHECK(dot(pv.rs.root(chain[i]), pv.rs.root(chain[j])) == 0);
      CHECK(!pv.rs.is_root(vadd(pv.rs.root(chain[i]), pv.rs.root(chain[j]))));
      CHECK(!pv.rs.is_root(vsub(pv.rs.root(chain[i]), pv.rs.root(chain[j]))));
    }
  // sum of coroots is 2 H0
  Vec s((size_t)pv.rs.dim, Rat(0));
  for (int i : chain) s = vadd(s, coroot(pv.rs, i));
  CHECK(s == vscale(2, pv.H0));
}

TEST_CASE("canonical orthogonal sequences") {
  auto e7 = build_root_system(RSKind::E7, 7);
  check_chain(grade(e7, 1), 7);  // E7 alpha_2

  auto e8 = build_root_system(RSKind::E8, 8);
  auto pv81 = grade(e8, 0);
  auto chain = canonical_orthogonal_sequence(pv81);
  check_chain(pv81, 8);
  // highest root is half the sum of the last four chain roots
  Vec half((size_t)8, Rat(0));
  for (int t = 4; t < 8; ++t) half = vadd(half, pv81.rs.root(chain[(size_t)t]));
  half = vscale(Rat(1, 2), half);
  CHECK(pv81.rs.index_of(half) == pv81.rs.highest_root());

  auto c4 = build_root_system(RSKind::C, 4);
  auto pvc = grade(c4, 3);
  auto cc = canonical_orthogonal_sequence(pvc);
  CHECK(cc.size() == 4);
  for (int i : cc) {
    // each chain root is 2 eps_j
    int nonzero = 0;
    for (auto& x : c4.root(i))
      if (x != 0) ++nonzero;
    CHECK(nonzero == 1);
    CHECK(dot(c4.root(i), c4.root(i)) == 4);
  }

  for (RSKind k : {RSKind::F4, RSKind::E6}) {
    auto rs = build_root_system(k, k == RSKind::F4 ? 4 : 6);
    auto pv = grade(rs, k == RSKind::F4 ? 0 : 1);
    check_chain(pv, 4);
  }
  check_chain(grade(e7, 0), 4);   // E7 alpha_1
  check_chain(grade(e8, 7), 4);   // E8 alpha_8
  auto a5 = build_root_system(RSKind::A, 5);
  check_chain(grade(a5, 2), 3);
  auto d6 = build_root_system(RSKind::D, 6);
  check_chain(grade(d6, 5), 3);
  auto e7a7 = grade(e7, 6);
  check_chain(e7a7, 3);
}

static void check_parabolic(const VerySpecialParabolic& par) {
  const GradedPV& pv = par.pv;
  Vec sum((size_t)pv.rs.dim, Rat(0));
  for (auto& h : par.H) sum = vadd(sum, h);
  CHECK(sum == vscale(2, pv.H0));
  for (auto& h : par.H) {
    bool two_attained = false;
    for (int i : pv.delta.at(1)) {
      Rat v = dot(pv.rs.root(i), h);
      CHECK((v == 0 || v == 1 || v == 2));
      if (v == 2) two_attained = true;
    }
    CHECK(two_attained);
    if (pv.dim_g(2) > 0)
      for (int i : pv.delta.at(2)) {
        Rat v = dot(pv.rs.root(i), h);
        CHECK((v == 0 || v == 2 || v == 4));
      }
  }
  CHECK(par.d.back() == pv.deg_F);
}

TEST_CASE("very special parabolics") {
  auto e8 = build_root_system(RSKind::E8, 8);
  auto pv81 = grade(e8, 0);
  auto par = very_special_parabolic(pv81);
  check_parabolic(par);
  CHECK(par.d == std::vector<int>{4, 8});
  CHECK(par.H[1] == vscale(2, coroot(e8, e8.highest_root())));

  auto e7 = build_root_system(RSKind::E7, 7);
  check_parabolic(very_special_parabolic(grade(e7, 1)));
  check_parabolic(very_special_parabolic(grade(e7, 5)));
  CHECK(very_special_parabolic(grade(e7, 5)).m_exception);

  auto b5 = build_root_system(RSKind::B, 5);
  check_parabolic(very_special_parabolic(grade(b5, 2)));  // BI(5,3)
  auto d7 = build_root_system(RSKind::D, 7);
  check_parabolic(very_special_parabolic(grade(d7, 3)));  // DI(7,4)
  auto c7 = build_root_system(RSKind::C, 7);
  check_parabolic(very_special_parabolic(grade(c7, 3)));  // CI, k=4

  auto c5 = build_root_system(RSKind::C, 5);
  auto pvc = grade(c5, 4);
  check_parabolic(very_special_parabolic(pvc));                   // singleton groups
  check_parabolic(very_special_parabolic(pvc, ParabolicVariant::P0, {2, 3}));
  check_parabolic(very_special_parabolic(pvc, ParabolicVariant::P0, {1, 2, 2}));

  auto f4 = build_root_system(RSKind::F4, 4);
  check_parabolic(very_special_parabolic(grade(f4, 0)));

  // P0' for type C
  auto c6 = build_root_system(RSKind::C, 6);
  auto pvc62 = grade(c6, 1);
  auto pp = very_special_parabolic(pvc62, ParabolicVariant::P0prime);
  check_parabolic(pp);
  CHECK(pp.m_exception);
}

TEST_CASE("eigenspace dimension tables") {
  auto e7 = build_root_system(RSKind::E7, 7);
  auto par76 = very_special_parabolic(grade(e7, 5));
  auto ed = eigenspace_dims(par76, 1);
  CHECK(ed.at(1, 1) == 0);
  CHECK(ed.at(2, 0) == 16);
  CHECK(ed.at(2, 2) == 8);
  CHECK(ed.at(4, 0) == 1);
  CHECK(ed.at(0, 4) == 1);
  CHECK(ed.m_k == Rat(1, 2));
  CHECK(ed.mprime_k == Rat(1, 2));
  CHECK(ed.r_k == 2);  // N = 4 r_1 for this family

  auto par72 = very_special_parabolic(grade(e7, 1));
  CHECK(eigenspace_dims(par72, 1).r_k == Rat(3, 2));

  auto e8 = build_root_system(RSKind::E8, 8);
  auto par81 = very_special_parabolic(grade(e8, 0));
  CHECK(eigenspace_dims(par81, 1).r_k == 3);

  // symmetry and the degree identity across a sweep of families
  std::vector<VerySpecialParabolic> pars;
  pars.push_back(par76);
  pars.push_back(par72);
  pars.push_back(par81);
  auto b5 = build_root_system(RSKind::B, 5);
  pars.push_back(very_special_parabolic(grade(b5, 2)));
  auto c7 = build_root_system(RSKind::C, 7);
  pars.push_back(very_special_parabolic(grade(c7, 3)));
  auto c5 = build_root_system(RSKind::C, 5);
  pars.push_back(very_special_parabolic(grade(c5, 4)));
  auto d7 = build_root_system(RSKind::D, 7);
  pars.push_back(very_special_parabolic(grade(d7, 2)));
  for (auto& par : pars) {
    for (int k = 1; k < par.p(); ++k) {
      auto e = eigenspace_dims(par, k);
      for (auto& [ij, cnt] : e.table) CHECK(e.at(-ij.first, -ij.second) == cnt);
      CHECK(e.m_k == e.mprime_k);
      CHECK(e.m_k * e.d_k + e.mprime_k * e.dprime_k == par.d.back());
      if (!par.m_exception) CHECK(e.m_k == 1);
    }
  }
}

TEST_CASE("singular exponents") {
  auto e7 = build_root_system(RSKind::E7, 7);
  auto par76 = very_special_parabolic(grade(e7, 5));
  auto se = singular_exponents(par76, 1);
  CHECK(se.l_prime == 0);
  CHECK(se.l == 0);

  // commutative closed forms: l'(h) and l(h) for every prefix cut
  struct C {
    RSKind k;
    int rank, marked, dbar;
  };
  for (auto c : std::vector<C>{{RSKind::C, 5, 4, 1}, {RSKind::A, 7, 3, 2}, {RSKind::D, 8, 7, 4},
                               {RSKind::E7, 7, 6, 8}}) {
    auto rs = build_root_system(c.k, c.rank);
    auto pv = grade(rs, c.marked);
    auto par = very_special_parabolic(pv);
    int n = par.p();
    for (int p = 1; p < n; ++p) {
      auto s = singular_exponents(par, p);
      Rat expected_l = Rat(n - p + 1) * c.dbar / 2 - 1;
      CHECK(s.l == expected_l);
      Rat expected_lp = Rat(2 * p * (n - p), n) * expected_l;
      CHECK(s.l_prime == expected_lp);
    }
  }

  // dim g_2 = 1 families, h = H_1: l = 3d/2 - 1
  struct D {
    RSKind k;
    int rank, marked, d;
  };
  for (auto c : std::vector<D>{{RSKind::F4, 4, 0, 1}, {RSKind::E6, 6, 1, 2},
                               {RSKind::E7, 7, 0, 4}, {RSKind::E8, 8, 7, 8}}) {
    auto rs = build_root_system(c.k, c.rank);
    auto pv = grade(rs, c.marked);
    auto par = very_special_parabolic(pv);
    auto s = singular_exponents(par, 1);
    CHECK(s.l == Rat(3 * c.d, 2) - 1);
    CHECK(pv.killing_norm(par.h_prefix(1), pv.H0) == -2);
  }
}
