#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "fixtures.hpp"
#include "lcw/liealg.hpp"
#include "lcw/vec.hpp"

#include <random>
#include <string>
#include <vector>

using namespace lcw;

namespace {

std::mt19937 rng(40990814u);

Rat q(const std::string& s) { return rat_parse(s); }

RMat mq(const std::vector<std::vector<std::string>>& rows) {
  RMat m;
  for (const auto& r : rows) {
    RVec v;
    for (const auto& s : r) v.push_back(rat_parse(s));
    m.push_back(v);
  }
  return m;
}

// Sparse description of a rank-3 table: (i, j, k) -> value.
struct Entry3 {
  int i, j, k;
  std::string v;
};

TensorTable table3(int dim, const std::vector<Entry3>& entries) {
  TensorTable t(3, dim);
  for (const auto& e : entries) t.at({e.i, e.j, e.k}) = rat_parse(e.v);
  return t;
}

RMat diag_mat(const std::vector<std::string>& d) {
  RMat m = rmat(static_cast<int>(d.size()), static_cast<int>(d.size()));
  for (std::size_t i = 0; i < d.size(); ++i) m[i][i] = rat_parse(d[i]);
  return m;
}

RVec rv(const std::vector<std::string>& parts) {
  RVec v;
  for (const auto& s : parts) v.push_back(rat_parse(s));
  return v;
}

}  // namespace

TEST_CASE("load accepts valid algebras and rejects malformed input") {
  CHECK_NOTHROW(LieAlgebra::load(3, {}));
  CHECK_NOTHROW(LieAlgebra::load(4, {}));
  CHECK_NOTHROW(fixtures::type_b_algebra());
  CHECK_NOTHROW(fixtures::type_c_algebra());

  CHECK_THROWS_AS(LieAlgebra::load(2, {}), std::invalid_argument);
  CHECK_THROWS_AS(LieAlgebra::load(5, {}), std::invalid_argument);
  // pair not in increasing order
  CHECK_THROWS_AS(LieAlgebra::load(3, {{1, 0, rv({"1", "0", "0"})}}),
                  std::invalid_argument);
  CHECK_THROWS_AS(LieAlgebra::load(3, {{0, 0, rv({"1", "0", "0"})}}),
                  std::invalid_argument);
  CHECK_THROWS_AS(LieAlgebra::load(3, {{0, 3, rv({"1", "0", "0"})}}),
                  std::invalid_argument);
  // wrong vector length
  CHECK_THROWS_AS(LieAlgebra::load(3, {{0, 1, rv({"1", "0"})}}),
                  std::invalid_argument);
  // duplicate pair
  CHECK_THROWS_AS(LieAlgebra::load(3, {{0, 1, rv({"1", "0", "0"})},
                                       {0, 1, rv({"0", "1", "0"})}}),
                  std::invalid_argument);
}

TEST_CASE("load reports the offending triple and defect on Jacobi failure") {
  // [e0,e1]=e2, [e0,e2]=e1, [e1,e2]=e1 is not a Lie algebra
  std::vector<Bracket> broken = {{0, 1, rv({"0", "0", "1"})},
                                 {0, 2, rv({"0", "1", "0"})},
                                 {1, 2, rv({"0", "1", "0"})}};
  try {
    LieAlgebra::load(3, broken);
    FAIL("expected Jacobi rejection");
  } catch (const std::invalid_argument& e) {
    std::string msg = e.what();
    CHECK(msg.find("(0, 1, 2)") != std::string::npos);
    CHECK(msg.find("(0, 0, -1)") != std::string::npos);
  }

  try {
    LieAlgebra::load(4, fixtures::jacobi_broken_4d());
    FAIL("expected Jacobi rejection");
  } catch (const std::invalid_argument& e) {
    std::string msg = e.what();
    CHECK(msg.find("(0, 1, 2)") != std::string::npos);
    CHECK(msg.find("(0, -6, -6, 0)") != std::string::npos);
  }

  // the escape hatch loads anyway
  LieAlgebra forced = LieAlgebra::load(4, fixtures::jacobi_broken_4d(), true);
  CHECK(forced.dim() == 4);
  CHECK_FALSE(is_zero(forced.jacobi_defect(0, 1, 2)));
  CHECK(forced.jacobi_defect(0, 1, 2) == rv({"0", "-6", "-6", "0"}));
  CHECK(forced.jacobi_defect(0, 1, 3) == rv({"0", "0", "0", "6"}));

  // flipping one bracket sign does not necessarily break anything:
  // [e0,e1]=e2, [e1,e2]=e0, [e0,e2]=e1 is diagonal with weights (1,-1,1)
  CHECK_NOTHROW(LieAlgebra::load(3, {{0, 1, rv({"0", "0", "1"})},
                                     {1, 2, rv({"1", "0", "0"})},
                                     {0, 2, rv({"0", "1", "0"})}}));
}

TEST_CASE("bracket is the bilinear extension of the structure constants") {
  LieAlgebra L = fixtures::type_b_algebra();
  CHECK(L.bracket_basis(0, 1) == rv({"0", "0", "-1/2", "0"}));
  CHECK(L.bracket_basis(1, 0) == rv({"0", "0", "1/2", "0"}));
  CHECK(L.c(1, 2, 0) == 1);
  CHECK(L.c(2, 1, 0) == -1);

  for (int trial = 0; trial < 20; ++trial) {
    RVec x, y;
    for (int i = 0; i < 4; ++i) {
      x.push_back(fixtures::rand_rat(rng));
      y.push_back(fixtures::rand_rat(rng));
    }
    CHECK(L.bracket(x, y) == scale(Rat(-1), L.bracket(y, x)));
    RVec two_x = scale(Rat(2), x);
    CHECK(L.bracket(two_x, y) == scale(Rat(2), L.bracket(x, y)));
  }
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j)
      for (int k = j + 1; k < 4; ++k) CHECK(is_zero(L.jacobi_defect(i, j, k)));
}

TEST_CASE("connection of the abelian algebra vanishes") {
  CHECK(connection(LieAlgebra::load(3, {})).is_zero());
  CHECK(connection(LieAlgebra::load(4, {})).is_zero());
}

TEST_CASE("connection coefficients, type B fixture") {
  TensorTable n = connection(fixtures::type_b_algebra());
  TensorTable expect = table3(
      4, {{0, 1, 2, "-1/4"}, {0, 2, 1, "1/4"},  {1, 0, 2, "1/4"},
          {1, 2, 0, "-1/4"}, {1, 2, 3, "3/4"},  {1, 3, 2, "-3/4"},
          {2, 0, 1, "5/4"},  {2, 1, 0, "-5/4"}, {2, 1, 3, "3/4"},
          {2, 3, 1, "-3/4"}, {3, 1, 2, "-1/4"}, {3, 2, 1, "1/4"}});
  CHECK(n == expect);
  // nabla_{e1} e2 has components -1/4 on e0 and 3/4 on e3
  CHECK(n.at({1, 2, 0}) == q("-1/4"));
  CHECK(n.at({1, 2, 3}) == q("3/4"));
}

TEST_CASE("connection coefficients, type C fixture") {
  TensorTable n = connection(fixtures::type_c_algebra());
  TensorTable expect = table3(
      4, {{0, 1, 2, "-1/2"}, {0, 1, 3, "-1/2"}, {0, 2, 1, "1/2"},
          {0, 2, 3, "3/2"},  {0, 3, 1, "1/2"},  {0, 3, 2, "-3/2"},
          {1, 0, 2, "1/2"},  {1, 0, 3, "1/2"},  {1, 2, 0, "-1/2"},
          {1, 2, 3, "9/2"},  {1, 3, 0, "-1/2"}, {1, 3, 2, "-9/2"},
          {2, 0, 1, "3/2"},  {2, 0, 3, "1/2"},  {2, 1, 0, "-3/2"},
          {2, 1, 3, "3/2"},  {2, 3, 0, "-1/2"}, {2, 3, 1, "-3/2"},
          {3, 0, 1, "3/2"},  {3, 0, 2, "-1/2"}, {3, 1, 0, "-3/2"},
          {3, 1, 2, "-3/2"}, {3, 2, 0, "1/2"},  {3, 2, 1, "3/2"}});
  CHECK(n == expect);
}

TEST_CASE("connection coefficients, diagonal 3D algebra") {
  LieAlgebra L = LieAlgebra::diagonal_3d(Rat(6), Rat(-4), Rat(5));
  TensorTable n = connection(L);
  TensorTable expect = table3(3, {{0, 1, 2, "-5/2"},
                                  {0, 2, 1, "5/2"},
                                  {1, 0, 2, "-15/2"},
                                  {1, 2, 0, "15/2"},
                                  {2, 0, 1, "-3/2"},
                                  {2, 1, 0, "3/2"}});
  CHECK(n == expect);
  // lowest-pair coefficient equals (l3 - l1 + l2)/2 = -5/2
  CHECK(n.at({0, 1, 2}) == q("-5/2"));
}

TEST_CASE("connection invariants: metric compatibility and torsion") {
  for (int trial = 0; trial < 30; ++trial) {
    LieAlgebra L = fixtures::rand_algebra(rng);
    TensorTable n = connection(L);
    CHECK(n.check_tags());
    const int d = L.dim();
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j)
        for (int k = 0; k < d; ++k) {
          CHECK(n.at({i, j, k}) == -n.at({i, k, j}));
          CHECK(n.at({i, j, k}) - n.at({j, i, k}) == L.c(i, j, k));
        }
  }
}

TEST_CASE("curvature tables, type B fixture") {
  LieAlgebra L = fixtures::type_b_algebra();
  TensorTable R = riemann(L);
  CHECK(R.at({0, 1, 0, 1}) == q("-11/16"));
  CHECK(R.at({2, 3, 2, 3}) == q("-15/16"));
  CHECK(R.at({0, 1, 1, 3}) == q("-9/16"));
  CHECK(R.at({1, 3, 0, 1}) == q("-9/16"));

  RMat ric = ricci(L);
  CHECK(ric == mq({{"-5/8", "0", "0", "9/8"},
                   {"0", "-1/4", "0", "0"},
                   {"0", "0", "-1/4", "0"},
                   {"9/8", "0", "0", "-9/8"}}));
  CHECK(scalar_curvature(L) == q("-9/4"));

  CHECK(schouten(L) == mq({{"-1/8", "0", "0", "9/16"},
                           {"0", "1/16", "0", "0"},
                           {"0", "0", "1/16", "0"},
                           {"9/16", "0", "0", "-3/8"}}));

  TensorTable W = weyl(L);
  CHECK(W.at({0, 1, 1, 0}) == q("5/8"));
  CHECK(W.at({0, 3, 3, 0}) == q("-1/2"));
  CHECK(weyl_bivector_operator(L) ==
        diag_mat({"-5/8", "1/8", "1/2", "1/2", "1/8", "-5/8"}));
}

TEST_CASE("curvature tables, type C fixture") {
  LieAlgebra L = fixtures::type_c_algebra();
  RMat ric = ricci(L);
  CHECK(ric == mq({{"-5/2", "3/2", "-15/2", "15/2"},
                   {"3/2", "3/2", "5/2", "-5/2"},
                   {"-15/2", "5/2", "-29/2", "1/2"},
                   {"15/2", "-5/2", "1/2", "-29/2"}}));
  CHECK(scalar_curvature(L) == Rat(-30));
  CHECK(schouten(L) == mq({{"5/4", "3/4", "-15/4", "15/4"},
                           {"3/4", "13/4", "5/4", "-5/4"},
                           {"-15/4", "5/4", "-19/4", "1/4"},
                           {"15/4", "-5/4", "1/4", "-19/4"}}));

  TensorTable W = weyl(L);
  CHECK(W.at({0, 1, 0, 1}) == Rat(-8));
  CHECK(W.at({2, 3, 2, 3}) == Rat(-8));
  CHECK(W.at({0, 2, 0, 2}) == Rat(4));
  CHECK(weyl_bivector_operator(L) ==
        diag_mat({"-8", "4", "4", "4", "4", "-8"}));
}

TEST_CASE("diagonal 3D curvature pipeline and closed forms") {
  LieAlgebra L = LieAlgebra::diagonal_3d(Rat(6), Rat(-4), Rat(5));
  CHECK(ricci(L) == diag_mat({"-45/2", "15/2", "-75/2"}));
  CHECK(scalar_curvature(L) == q("-105/2"));
  CHECK(schouten(L) == diag_mat({"-75/8", "165/8", "-195/8"}));

  DiagonalCurvature3 cf = ricci_closed_form_3d(Rat(6), Rat(-4), Rat(5));
  CHECK(cf.mu[0] == q("-5/2"));
  CHECK(cf.mu[1] == q("15/2"));
  CHECK(cf.mu[2] == q("-3/2"));
  CHECK(cf.ric[0] == q("-45/2"));
  CHECK(cf.ric[1] == q("15/2"));
  CHECK(cf.ric[2] == q("-75/2"));
  CHECK(cf.s == q("-105/2"));

  TensorTable C = cotton(L);
  CHECK(C.at({1, 2, 0}) == q("-315/2"));
  CHECK(cotton_york(L) == diag_mat({"-315/2", "315/2", "0"}));

  // round case: all weights 2 gives principal curvatures (2,2,2)
  LieAlgebra round = LieAlgebra::diagonal_3d(Rat(2), Rat(2), Rat(2));
  CHECK(ricci(round) == diag_mat({"2", "2", "2"}));
  CHECK(scalar_curvature(round) == Rat(6));
  DiagonalCurvature3 cf2 = ricci_closed_form_3d(Rat(2), Rat(2), Rat(2));
  CHECK(cf2.mu[0] == Rat(1));
  CHECK(cf2.s == Rat(6));

  // isotropic case is conformally flat: Cotton vanishes
  LieAlgebra iso = LieAlgebra::diagonal_3d(Rat(1), Rat(1), Rat(1));
  CHECK(cotton(iso).is_zero());
  CHECK(is_zero(cotton_york(iso)));

  LieAlgebra flat = LieAlgebra::load(3, {});
  CHECK(riemann(flat).is_zero());
  CHECK(is_zero(ricci(flat)));
  CHECK(scalar_curvature(flat) == 0);
  CHECK(is_zero(schouten(flat)));
  CHECK(cotton(flat).is_zero());
  CHECK(is_zero(cotton_york(flat)));

  DiagonalCurvature3 z = ricci_closed_form_3d(Rat(0), Rat(0), Rat(0));
  CHECK(z.ric[0] == 0);
  CHECK(z.s == 0);
}

TEST_CASE("closed forms agree with the pipeline over a rational grid") {
  std::vector<Rat> grid = {q("-2"), q("-1/2"), q("0"), q("1"), q("3/2")};
  for (const Rat& l1 : grid)
    for (const Rat& l2 : grid)
      for (const Rat& l3 : grid) {
        LieAlgebra L = LieAlgebra::diagonal_3d(l1, l2, l3);
        RMat ric = ricci(L);
        DiagonalCurvature3 cf = ricci_closed_form_3d(l1, l2, l3);
        for (int i = 0; i < 3; ++i)
          for (int j = 0; j < 3; ++j) {
            if (i == j)
              CHECK(ric[i][j] == cf.ric[i]);
            else
              CHECK(ric[i][j] == 0);
          }
        CHECK(scalar_curvature(L) == cf.s);
      }
}

TEST_CASE("curvature symmetries hold for random valid algebras") {
  for (int trial = 0; trial < 100; ++trial) {
    LieAlgebra L = fixtures::rand_algebra(rng);
    const int d = L.dim();
    CurvaturePack p = curvature_pack(L);
    const TensorTable& R = p.riemann;
    CHECK(R.check_tags());
    bool pair_exchange = true, bianchi = true;
    for (int i = 0; i < d && pair_exchange && bianchi; ++i)
      for (int j = 0; j < d; ++j)
        for (int k = 0; k < d; ++k)
          for (int l = 0; l < d; ++l) {
            if (R.at({i, j, k, l}) != R.at({k, l, i, j})) pair_exchange = false;
            Rat cyc = R.at({i, j, k, l}) + R.at({j, k, i, l}) +
                      R.at({k, i, j, l});
            if (cyc != 0) bianchi = false;
          }
    CHECK(pair_exchange);
    CHECK(bianchi);
    CHECK(is_symmetric(p.ricci));
    CHECK(is_symmetric(p.schouten));

    if (d == 3) {
      const TensorTable& C = p.cotton;
      CHECK(C.check_tags());
      bool cyclic = true, tracefree = true;
      for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
          for (int k = 0; k < 3; ++k) {
            Rat cyc = C.at({i, j, k}) + C.at({j, k, i}) + C.at({k, i, j});
            if (cyc != 0) cyclic = false;
          }
          Rat t1 = 0, t2 = 0;
          for (int m = 0; m < 3; ++m) {
            t1 += C.at({m, i, m});
            t2 += C.at({i, m, m});
          }
          if (t1 != 0 || t2 != 0) tracefree = false;
        }
      CHECK(cyclic);
      CHECK(tracefree);
      CHECK(is_symmetric(p.cotton_york));
      Rat tr = p.cotton_york[0][0] + p.cotton_york[1][1] + p.cotton_york[2][2];
      CHECK(tr == 0);
    } else {
      const TensorTable& W = p.weyl;
      bool traceless = true;
      for (int j = 0; j < 4; ++j)
        for (int k = 0; k < 4; ++k) {
          Rat t = 0;
          for (int i = 0; i < 4; ++i) t += W.at({i, j, i, k});
          if (t != 0) traceless = false;
        }
      CHECK(traceless);
      // recomposition: curvature = weyl + schouten product with the metric
      bool recompose = true;
      for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
          for (int k = 0; k < 4; ++k)
            for (int l = 0; l < 4; ++l) {
              Rat kn = 0;
              if (j == l) kn += p.schouten[i][k];
              if (i == k) kn += p.schouten[j][l];
              if (j == k) kn -= p.schouten[i][l];
              if (i == l) kn -= p.schouten[j][k];
              if (R.at({i, j, k, l}) != W.at({i, j, k, l}) + kn)
                recompose = false;
            }
      CHECK(recompose);
      CHECK(is_symmetric(p.weyl6));
    }
  }
}

TEST_CASE("cotton reduces to the short diagonal-case expression") {
  for (int trial = 0; trial < 20; ++trial) {
    Rat l1 = fixtures::rand_rat(rng), l2 = fixtures::rand_rat(rng),
        l3 = fixtures::rand_rat(rng);
    LieAlgebra L = LieAlgebra::diagonal_3d(l1, l2, l3);
    TensorTable n = connection(L);
    RMat S = schouten(L);
    TensorTable C = cotton(L);
    Rat direct = -n.at({0, 1, 2}) * S[2][2] - n.at({0, 2, 1}) * S[1][1] +
                 n.at({1, 0, 2}) * S[2][2] + n.at({1, 2, 0}) * S[0][0];
    CHECK(C.at({0, 1, 2}) == direct);
  }
}

TEST_CASE("curvature_pack matches the standalone operations") {
  LieAlgebra b = fixtures::type_b_algebra();
  CurvaturePack pb = curvature_pack(b);
  CHECK(pb.n == 4);
  CHECK(pb.connection == connection(b));
  CHECK(pb.riemann == riemann(b));
  CHECK(pb.ricci == ricci(b));
  CHECK(pb.scalar == scalar_curvature(b));
  CHECK(pb.schouten == schouten(b));
  CHECK(pb.weyl == weyl(b));
  CHECK(pb.weyl6 == weyl_bivector_operator(b));
  CHECK(pb.cotton.rank() == 0);

  LieAlgebra d = LieAlgebra::diagonal_3d(Rat(6), Rat(-4), Rat(5));
  CurvaturePack pd = curvature_pack(d);
  CHECK(pd.n == 3);
  CHECK(pd.cotton == cotton(d));
  CHECK(pd.cotton_york == cotton_york(d));
  CHECK(pd.weyl.rank() == 0);
}

TEST_CASE("dimension gates for cotton and weyl") {
  LieAlgebra b = fixtures::type_b_algebra();
  LieAlgebra d = LieAlgebra::diagonal_3d(Rat(1), Rat(2), Rat(3));
  CHECK_THROWS_AS(cotton(b), std::invalid_argument);
  CHECK_THROWS_AS(cotton_york(b), std::invalid_argument);
  CHECK_THROWS_AS(weyl(d), std::invalid_argument);
  CHECK_THROWS_AS(weyl_bivector_operator(d), std::invalid_argument);
}
