#include <doctest.h>

#include <random>

#include "cubestrata/int_matrix.hpp"
#include "cubestrata/linear_system.hpp"
#include "cubestrata/oracles.hpp"

using namespace cubestrata;

namespace {

IntMatrix from_rows(const std::vector<std::vector<long>>& rows) {
  IntMatrix m(static_cast<int>(rows.size()), rows.empty() ? 0 : static_cast<int>(rows[0].size()));
  for (int r = 0; r < m.rows; ++r)
    for (int c = 0; c < m.cols; ++c) m.at(r, c) = rows[r][c];
  return m;
}

IntMatrix random_unimodular(int n, std::mt19937_64& rng) {
  IntMatrix u = IntMatrix::identity(n);
  std::uniform_int_distribution<int> idx(0, n - 1), coef(-2, 2);
  for (int step = 0; step < 6; ++step) {
    int i = idx(rng), j = idx(rng);
    if (i == j) continue;
    Int k = coef(rng);
    for (int c = 0; c < n; ++c) u.at(i, c) += k * u.at(j, c);
  }
  return u;
}

}  // namespace

TEST_CASE("smith normal form on the spec examples") {
  SmithResult id3 = smith_normal_form(IntMatrix::identity(3));
  CHECK(id3.rank == 3);
  CHECK(id3.factors == std::vector<Int>{1, 1, 1});

  SmithResult zero = smith_normal_form(IntMatrix(2, 3));
  CHECK(zero.rank == 0);
  CHECK(zero.factors.empty());

  // hand row-reduction oracle: gcd of entries 2, |det| = 8, factors (2, 8/2)
  IntMatrix m = from_rows({{2, 4}, {6, 8}});
  auto [g, det] = gcd_and_absdet_2x2(2, 4, 6, 8);
  CHECK(g == 2);
  CHECK(det == 8);
  SmithResult s = smith_normal_form(m);
  CHECK(s.rank == 2);
  CHECK(s.factors == std::vector<Int>{g, det / g});
}

TEST_CASE("smith transforms are unimodular and diagonalize") {
  IntMatrix m = from_rows({{2, 4, 4}, {-6, 6, 12}, {10, 4, 16}});
  SmithResult s = smith_normal_form(m);
  IntMatrix d = s.U.mul(m).mul(s.V);
  for (int i = 0; i < d.rows; ++i)
    for (int j = 0; j < d.cols; ++j) {
      if (i == j && i < s.rank)
        CHECK(d.at(i, j) == s.factors[i]);
      else
        CHECK(d.at(i, j) == 0);
    }
  CHECK(abs(Int(smith_normal_form(s.U).factors[0])) == 1);
  for (const Int& f : smith_normal_form(s.U).factors) CHECK(f == 1);
  for (const Int& f : smith_normal_form(s.V).factors) CHECK(f == 1);
}

TEST_CASE("smith factors invariant under unimodular multiplication") {
  std::mt19937_64 rng(7);
  IntMatrix m = from_rows({{2, 4}, {6, 8}, {0, 6}});
  SmithResult base = smith_normal_form(m);
  for (int t = 0; t < 20; ++t) {
    IntMatrix a = random_unimodular(3, rng).mul(m).mul(random_unimodular(2, rng));
    SmithResult s = smith_normal_form(a);
    CHECK(s.factors == base.factors);
  }
}

TEST_CASE("lp feasibility with strict inequalities") {
  LinearSystem sys;
  sys.nvars = 1;
  sys.rows.push_back({{Rat(1)}, Rat(0), LinRow::GT});   // x > 0
  sys.rows.push_back({{Rat(-1)}, Rat(-1), LinRow::GT}); // x < 1
  LpResult r = lp_feasible(sys);
  REQUIRE(r.feasible);
  CHECK(r.witness[0] > 0);
  CHECK(r.witness[0] < 1);

  LinearSystem bad;
  bad.nvars = 1;
  bad.rows.push_back({{Rat(1)}, Rat(0), LinRow::GT});
  bad.rows.push_back({{Rat(-1)}, Rat(0), LinRow::GT});  // x < 0
  LpResult rb = lp_feasible(bad);
  REQUIRE_FALSE(rb.feasible);
  REQUIRE(rb.refutation.has_value());
  CHECK(check_refutation(bad, *rb.refutation));
}

TEST_CASE("lp handles equalities and reports witnesses exactly") {
  // x + y = 1, x - y > 0, y > 1/4  =>  feasible with exact witness
  LinearSystem sys;
  sys.nvars = 2;
  sys.rows.push_back({{Rat(1), Rat(1)}, Rat(1), LinRow::EQ});
  sys.rows.push_back({{Rat(1), Rat(-1)}, Rat(0), LinRow::GT});
  sys.rows.push_back({{Rat(0), Rat(1)}, Rat(1, 4), LinRow::GT});
  LpResult r = lp_feasible(sys);
  REQUIRE(r.feasible);
  CHECK(r.witness[0] + r.witness[1] == 1);
  CHECK(r.witness[0] > r.witness[1]);
  CHECK(r.witness[1] > Rat(1, 4));

  LinearSystem bad = sys;
  bad.rows.push_back({{Rat(0), Rat(-1)}, Rat(-1, 4), LinRow::GE});  // y <= 1/4
  LpResult rb = lp_feasible(bad);
  REQUIRE_FALSE(rb.feasible);
  CHECK(check_refutation(bad, *rb.refutation));
}

TEST_CASE("lp dimension mismatch") {
  LinearSystem sys;
  sys.nvars = 2;
  sys.rows.push_back({{Rat(1)}, Rat(0), LinRow::GE});
  CHECK_THROWS_AS(lp_feasible(sys), DimensionMismatch);
}

TEST_CASE("signature on the three boundary lattices") {
  auto diag = [](std::vector<long> d) {
    IntMatrix m(static_cast<int>(d.size()), static_cast<int>(d.size()));
    for (size_t i = 0; i < d.size(); ++i) m.at(static_cast<int>(i), static_cast<int>(i)) = d[i];
    return m;
  };
  CHECK(signature(diag({1, -1, -1, -1})) == std::tuple<int, int, int>{1, 3, 0});
  CHECK(signature(diag({1, -1, -2, -2})) == std::tuple<int, int, int>{1, 3, 0});

  IntMatrix h(4, 4);
  h.at(0, 1) = h.at(1, 0) = 1;
  h.at(2, 2) = h.at(3, 3) = -2;
  CHECK(signature(h) == std::tuple<int, int, int>{1, 3, 0});
  // eigen-sign oracle for the hyperbolic block [[0,1],[1,0]]: eigenvalues +-1
  IntMatrix h2(2, 2);
  h2.at(0, 1) = h2.at(1, 0) = 1;
  CHECK(signature(h2) == std::tuple<int, int, int>{1, 1, 0});

  CHECK(signature(diag({0, 0})) == std::tuple<int, int, int>{0, 0, 2});
  CHECK_THROWS_AS(signature(from_rows({{0, 1}, {2, 0}})), NotSymmetric);
}

TEST_CASE("signature of -G swaps positives and negatives") {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<int> e(-3, 3);
  for (int t = 0; t < 25; ++t) {
    IntMatrix g(4, 4);
    for (int i = 0; i < 4; ++i)
      for (int j = i; j < 4; ++j) g.at(i, j) = g.at(j, i) = e(rng);
    IntMatrix neg(4, 4);
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) neg.at(i, j) = -g.at(i, j);
    auto [p1, n1, z1] = signature(g);
    auto [p2, n2, z2] = signature(neg);
    CHECK(p1 == n2);
    CHECK(n1 == p2);
    CHECK(z1 == z2);
  }
}
