#include <catch2/catch_amalgamated.hpp>

#include <vector>

#include "ospchar/characters.hpp"
#include "ospchar/laurent.hpp"
#include "ospchar/series.hpp"

using namespace ospchar;

namespace {

mpq_class dim_at_ones(const LaurentPoly& p) {
  std::vector<mpq_class> ones(static_cast<std::size_t>(p.table()->size()), mpq_class(1));
  return eval_rational(p, ones);
}

}  // namespace

TEST_CASE("Schur polynomials") {
  auto tab2 = x_table(2);
  LaurentPoly x1 = LaurentPoly::var(tab2, 0), x2 = LaurentPoly::var(tab2, 1);

  SECTION("small closed forms") {
    CHECK(schur(Partition{}, 3).is_one());
    CHECK(schur(Partition{{1}}, 2) == x1 + x2);
    CHECK(schur(Partition{{1, 1}}, 2) == x1 * x2);
    CHECK(schur(Partition{{2, 1}}, 2) == x1.pow(2) * x2 + x1 * x2.pow(2));
  }
  SECTION("single rows against the monomial sum") {
    for (int k = 1; k <= 4; ++k) {
      LaurentPoly expect = LaurentPoly::zero(tab2);
      for (int i = 0; i <= k; ++i) expect += x1.pow(i) * x2.pow(k - i);
      CHECK(schur(Partition{{k}}, 2) == expect);
    }
  }
  SECTION("partition longer than the variable list") {
    CHECK_THROWS_AS(schur(Partition{{1, 1, 1}}, 2), std::invalid_argument);
  }
}

TEST_CASE("even symplectic characters") {
  SECTION("rank-zero and empty-shape conventions") {
    CHECK(sp_even(Partition{}, 0).is_one());
    CHECK(sp_even(Partition{}, 2).is_one());
    CHECK_THROWS_AS(sp_even(Partition{{1}}, 0), std::invalid_argument);
  }
  SECTION("rank one closed forms") {
    auto tab = x_table(1);
    LaurentPoly x = LaurentPoly::var(tab, 0);
    CHECK(sp_even(Partition{{1}}, 1) == x + x.pow(-1));
    CHECK(sp_even(Partition{{2}}, 1) == x.pow(2) + LaurentPoly::one(tab) + x.pow(-2));
  }
  SECTION("rank two fundamental") {
    auto tab = x_table(2);
    LaurentPoly x1 = LaurentPoly::var(tab, 0), x2 = LaurentPoly::var(tab, 1);
    CHECK(sp_even(Partition{{1}}, 2) == x1 + x1.pow(-1) + x2 + x2.pow(-1));
  }
  SECTION("dimensions of the rank-two irreducibles") {
    CHECK(dim_at_ones(sp_even(Partition{{1}}, 2)) == 4);
    CHECK(dim_at_ones(sp_even(Partition{{1, 1}}, 2)) == 5);
    CHECK(dim_at_ones(sp_even(Partition{{2}}, 2)) == 10);
    CHECK(dim_at_ones(sp_even(Partition{{2, 1}}, 2)) == 16);
    CHECK(dim_at_ones(sp_even(Partition{{2, 2}}, 2)) == 14);
  }
}

TEST_CASE("odd symplectic alternant matrix") {
  SECTION("rank one, empty shape") {
    auto tab = osp_table(1);
    RingMatrix a = matrix_A(Partition{}, 1);
    LaurentPoly x = LaurentPoly::var(tab, 0), z = LaurentPoly::var(tab, 1);
    CHECK(a.at(0, 0) == x.pow(2) - x.pow(-2) - z.pow(-1) * (x - x.pow(-1)));
    CHECK(a.at(0, 1) == x - x.pow(-1));
    CHECK(a.at(1, 0) == z);
    CHECK(a.at(1, 1).is_one());
  }
  SECTION("rank one, one box shifts the first column") {
    auto tab = osp_table(1);
    RingMatrix a = matrix_A(Partition{{1}}, 1);
    CHECK(a.at(1, 0) == LaurentPoly::var(tab, 1, 2));
    CHECK(a.at(1, 1).is_one());
  }
  SECTION("rank zero is the 1x1 power of z") {
    RingMatrix a = matrix_A(Partition{{3}}, 0);
    REQUIRE(a.rows() == 1);
    CHECK(a.at(0, 0) == LaurentPoly::var(osp_table(0), 0, 3));
  }
  SECTION("partition length cap") {
    CHECK_THROWS_AS(matrix_A(Partition{{1, 1, 1}}, 1), std::invalid_argument);
  }
}

TEST_CASE("odd symplectic characters via the alternant ratio") {
  SECTION("empty shape normalizes to 1") {
    for (int n = 1; n <= 3; ++n) CHECK(osp_char(Partition{}, n).is_one());
  }
  SECTION("rank one fundamental") {
    auto tab = osp_table(1);
    LaurentPoly expect = LaurentPoly::var(tab, 0) + LaurentPoly::var(tab, 1) +
                         LaurentPoly::var(tab, 0, -1);
    CHECK(osp_char(Partition{{1}}, 1) == expect);
  }
  SECTION("rank two fundamental has dimension 5 at the identity") {
    CHECK(dim_at_ones(osp_char(Partition{{1}}, 2)) == 5);
  }
  SECTION("agrees with the generating-function expansion at rank one") {
    TruncatedSeries s = cauchy_rhs(1, 3);
    for (const auto& [lam, c] : extract_characters(s, 1)) CHECK(c == osp_char(lam, 1));
  }
}

TEST_CASE("denominator factorizations") {
  for (int n = 1; n <= 2; ++n) {
    CHECK(osp_den_identity(n).pass);
    CHECK(sp_den_identity(n).pass);
    CHECK(proctor_den_identity(n).pass);
  }
}

TEST_CASE("halved-variable determinant") {
  SECTION("rank one entries") {
    auto tab = t_table(1);
    LaurentPoly t = LaurentPoly::var(tab, 0);
    RingMatrix b = matrix_B(Partition{}, 1);
    CHECK(b.at(0, 0) == t.pow(3) + t.pow(-3));
    CHECK(b.at(0, 1) == t + t.pow(-1));
    CHECK(b.at(1, 0).is_one());
    CHECK(b.at(1, 1).is_one());
    CHECK(matrix_B(Partition{{1}}, 1).at(0, 0) == t.pow(5) + t.pow(-5));
  }
  SECTION("character values") {
    auto tab = t_table(1);
    LaurentPoly t = LaurentPoly::var(tab, 0);
    CHECK(osp_proctor(Partition{}, 1).is_one());
    CHECK(osp_proctor(Partition{{1}}, 1) == t.pow(2) + LaurentPoly::one(tab) + t.pow(-2));
  }
  SECTION("matches the alternant ratio at z = 1, x = t^2") {
    for (int n = 1; n <= 2; ++n) {
      VarTablePtr ttab = t_table(n);
      for (const Partition& lam : enumerate_bounded(n + 1, 2)) {
        if (lam.weight() > 2) continue;
        LaurentPoly via_a = detail::to_t_squared(osp_char(lam, n), n, false, ttab);
        CHECK(via_a == osp_proctor(lam, n));
      }
    }
  }
}

TEST_CASE("balanced q-integers") {
  auto tab = VarTable::create({"s"});
  LaurentPoly s = LaurentPoly::var(tab, 0);
  CHECK(q_integer(1).is_one());
  CHECK(q_integer(2) == s + s.pow(-1));
  CHECK(q_integer(3) == s.pow(2) + LaurentPoly::one(tab) + s.pow(-2));
  CHECK_THROWS_AS(q_integer(0), std::invalid_argument);
}

TEST_CASE("root system bookkeeping") {
  SECTION("root count is n(n+1)") {
    for (int n = 0; n <= 3; ++n)
      CHECK(RootDatum(n).positive_roots().size() == static_cast<std::size_t>(n * (n + 1)));
  }
  SECTION("rho pairings at n = 1") {
    RootDatum rd(1);
    std::vector<long> vals;
    for (const auto& r : rd.positive_roots()) vals.push_back(rd.pairing_rho(r));
    std::sort(vals.begin(), vals.end());
    CHECK(vals == std::vector<long>{1, 2});
  }
  SECTION("pairings shift by the partition") {
    RootDatum rd(2);
    Partition lam{{2, 1}};
    for (const auto& r : rd.positive_roots()) {
      long delta = rd.pairing(lam, r) - rd.pairing_rho(r);
      long expect = static_cast<long>(lam.part(r.i)) +
                    (r.sign > 0 ? lam.part(r.j) : -lam.part(r.j));
      CHECK(delta == expect);
    }
  }
}

TEST_CASE("principal q-specialization") {
  auto qtab = VarTable::create({"q"});
  LaurentPoly q = LaurentPoly::var(qtab, 0);

  SECTION("empty shape") {
    for (int n = 0; n <= 2; ++n) CHECK(osp_principal_q(Partition{}, n).is_one());
  }
  SECTION("rank one fundamental is the balanced 3-term sum") {
    CHECK(osp_principal_q(Partition{{1}}, 1) ==
          q + LaurentPoly::one(qtab) + q.pow(-1));
  }
  SECTION("matches substituting powers of q into the alternant ratio") {
    for (const Partition& lam : enumerate_bounded(2, 2)) {
      if (lam.weight() > 2) continue;
      std::vector<LaurentPoly> images{LaurentPoly::var(qtab, 0, 1), LaurentPoly::one(qtab)};
      CHECK(osp_principal_q(lam, 1) == map_vars(osp_char(lam, 1), qtab, images));
    }
  }
  SECTION("q -> 1 recovers dimensions") {
    std::vector<mpq_class> one{mpq_class(1)};
    CHECK(eval_rational(osp_principal_q(Partition{{1}}, 2), one) == 5);
    CHECK(eval_rational(osp_principal_q(Partition{{1}}, 1), one) == 3);
  }
  SECTION("partition length cap") {
    CHECK_THROWS_AS(osp_principal_q(Partition{{1, 1, 1}}, 1), std::invalid_argument);
  }
}
