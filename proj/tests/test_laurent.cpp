#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <vector>

#include "ospchar/json_io.hpp"
#include "ospchar/laurent.hpp"

using namespace ospchar;

namespace {

// Small random Laurent polynomials for property tests; exponents in [-3, 3],
// coefficients in [-5, 5].
LaurentPoly random_poly(const VarTablePtr& tab, std::mt19937_64& gen, int max_terms = 4) {
  std::uniform_int_distribution<int> nterms(0, max_terms), e(-3, 3), c(-5, 5);
  LaurentPoly p = LaurentPoly::zero(tab);
  int k = nterms(gen);
  for (int t = 0; t < k; ++t) {
    std::vector<int> exps(static_cast<std::size_t>(tab->size()));
    for (auto& x : exps) x = e(gen);
    p += LaurentPoly::term(tab, exps, c(gen));
  }
  return p;
}

}  // namespace

TEST_CASE("variable tables") {
  auto tab = VarTable::create({"x1", "x2", "z"});
  CHECK(tab->size() == 3);
  CHECK(tab->index_of("z") == 2);
  CHECK(tab->index_of("w") == -1);
  CHECK_THROWS_AS(VarTable::create({"x", "x"}), std::invalid_argument);
  CHECK_THROWS_AS(VarTable::create({""}), std::invalid_argument);
  CHECK(VarTable::indexed("x", 2, {"z"})->names() == std::vector<std::string>{"x1", "x2", "z"});

  auto other = VarTable::create({"x1", "x2"});
  CHECK_THROWS_AS(LaurentPoly::one(tab) + LaurentPoly::one(other), VarTableMismatchError);
}

TEST_CASE("ring basics") {
  auto tab = VarTable::create({"x"});
  LaurentPoly x = LaurentPoly::var(tab, 0);
  LaurentPoly xi = LaurentPoly::var(tab, 0, -1);

  SECTION("difference of squares across negative exponents") {
    LaurentPoly lhs = (x - xi) * (x + xi);
    LaurentPoly rhs = LaurentPoly::var(tab, 0, 2) - LaurentPoly::var(tab, 0, -2);
    CHECK(lhs == rhs);
  }
  SECTION("zero and one behave") {
    LaurentPoly p = x + xi;
    CHECK(p + LaurentPoly::zero(tab) == p);
    CHECK(p * LaurentPoly::one(tab) == p);
    CHECK((p - p).is_zero());
    CHECK(LaurentPoly::one(tab).is_one());
    CHECK(LaurentPoly::constant(tab, 0).is_zero());
  }
  SECTION("unit monomials") {
    CHECK(x.is_unit_monomial());
    CHECK((-x).is_unit_monomial());
    CHECK_FALSE((x + xi).is_unit_monomial());
    CHECK_FALSE(LaurentPoly::constant(tab, 2).is_unit_monomial());
  }
  SECTION("integer scaling") {
    CHECK(x * mpz_class(3) + x == mpz_class(4) * x);
  }
}

TEST_CASE("ring axioms on random operands") {
  auto tab = VarTable::create({"x1", "x2"});
  std::mt19937_64 gen(98765);
  for (int t = 0; t < 40; ++t) {
    LaurentPoly a = random_poly(tab, gen), b = random_poly(tab, gen), c = random_poly(tab, gen);
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
  }
}

TEST_CASE("powers") {
  auto tab = VarTable::create({"x", "y"});
  LaurentPoly x = LaurentPoly::var(tab, 0), y = LaurentPoly::var(tab, 1);
  LaurentPoly p = x + y;

  LaurentPoly by_mult = LaurentPoly::one(tab);
  for (int k = 0; k <= 5; ++k) {
    CHECK(p.pow(k) == by_mult);
    by_mult *= p;
  }
  CHECK(p.pow(0).is_one());

  SECTION("negative powers invert unit monomials only") {
    LaurentPoly m = -(x * y.pow(2));
    CHECK(m.pow(-1) * m == LaurentPoly::one(tab));
    CHECK(m.pow(-3) * m.pow(3) == LaurentPoly::one(tab));
    CHECK_THROWS_AS(p.pow(-1), NotInvertibleError);
    CHECK_THROWS_AS(LaurentPoly::constant(tab, 2).pow(-1), NotInvertibleError);
  }
}

TEST_CASE("exact division") {
  auto tab = VarTable::create({"x1", "x2"});
  LaurentPoly x1 = LaurentPoly::var(tab, 0), x2 = LaurentPoly::var(tab, 1);

  SECTION("alternant over Vandermonde") {
    LaurentPoly num = LaurentPoly::term(tab, {3, 1}, 1) - LaurentPoly::term(tab, {1, 3}, 1);
    LaurentPoly den = x1 - x2;
    LaurentPoly q = exact_div(num, den);
    LaurentPoly expect = LaurentPoly::term(tab, {2, 1}, 1) + LaurentPoly::term(tab, {1, 2}, 1);
    CHECK(q == expect);
    CHECK(q * den == num);  // re-multiplication closes the loop
  }
  SECTION("identity divisor") {
    LaurentPoly p = x1 * x2 - LaurentPoly::constant(tab, 7);
    CHECK(exact_div(p, LaurentPoly::one(tab)) == p);
  }
  SECTION("non-divisible pairs throw") {
    CHECK_THROWS_AS(exact_div(x1 + x2, x1 - x2), NotDivisibleError);
    CHECK_THROWS_AS(exact_div(LaurentPoly::constant(tab, 3), LaurentPoly::constant(tab, 2)),
                    NotDivisibleError);
    CHECK_THROWS_AS(exact_div(x1, LaurentPoly::zero(tab)), RingError);
  }
  SECTION("zero numerator") {
    CHECK(exact_div(LaurentPoly::zero(tab), x1 - x2).is_zero());
  }
  SECTION("random product round-trips, negative exponents included") {
    std::mt19937_64 gen(4242);
    int done = 0;
    while (done < 30) {
      LaurentPoly a = random_poly(tab, gen), b = random_poly(tab, gen);
      if (b.is_zero()) continue;
      ++done;
      CHECK(exact_div(a * b, b) == a);
    }
  }
}

TEST_CASE("substitution") {
  auto xt = VarTable::create({"x", "t"});
  LaurentPoly x = LaurentPoly::var(xt, 0), t = LaurentPoly::var(xt, 1);

  SECTION("monomial image handles negative exponents") {
    LaurentPoly p = x.pow(2) - x.pow(-2);
    LaurentPoly got = substitute(p, 0, t * t);
    CHECK(got == t.pow(4) - t.pow(-4));
  }
  SECTION("zero image kills positive powers, keeps constants") {
    auto xz = VarTable::create({"x", "z"});
    LaurentPoly xx = LaurentPoly::var(xz, 0), zz = LaurentPoly::var(xz, 1);
    LaurentPoly p = xx * xx + LaurentPoly::one(xz) + xx * zz;
    CHECK(substitute(p, 0, LaurentPoly::zero(xz)) == LaurentPoly::one(xz));
    CHECK_THROWS_AS(substitute(xx + xx.pow(-1), 0, LaurentPoly::zero(xz)),
                    NegativeExponentError);
  }
  SECTION("non-unit image with negative exponent is rejected") {
    CHECK_THROWS_AS(substitute(x.pow(-1), 0, t + LaurentPoly::one(xt)), NegativeExponentError);
  }
  SECTION("composition") {
    LaurentPoly p = x.pow(3) - x;
    LaurentPoly via_t = substitute(substitute(p, 0, t * t), 1, LaurentPoly::constant(xt, 2));
    LaurentPoly direct = substitute(p, 0, LaurentPoly::constant(xt, 4));
    CHECK(via_t == direct);
  }
}

TEST_CASE("map_vars crosses tables") {
  auto xz = VarTable::create({"x", "z"});
  auto tt = VarTable::create({"t"});
  LaurentPoly p = LaurentPoly::var(xz, 0, 1) - LaurentPoly::var(xz, 0, -1) +
                  LaurentPoly::var(xz, 1, 2);
  std::vector<LaurentPoly> images{LaurentPoly::var(tt, 0, 2), LaurentPoly::one(tt)};
  LaurentPoly got = map_vars(p, tt, images);
  CHECK(got == LaurentPoly::var(tt, 0, 2) - LaurentPoly::var(tt, 0, -2) + LaurentPoly::one(tt));
  CHECK_THROWS_AS(map_vars(p, tt, std::vector<LaurentPoly>{LaurentPoly::one(tt)}),
                  std::invalid_argument);
}

TEST_CASE("rational evaluation") {
  auto tab = VarTable::create({"x"});
  LaurentPoly x = LaurentPoly::var(tab, 0);

  SECTION("worked value") {
    std::vector<mpq_class> pt{mpq_class(2)};
    CHECK(eval_rational(x - x.pow(-1), pt) == mpq_class(3, 2));
  }
  SECTION("zero at negative power") {
    std::vector<mpq_class> pt{mpq_class(0)};
    CHECK(eval_rational(x * x, pt) == 0);
    CHECK_THROWS_AS(eval_rational(x.pow(-1), pt), NegativeExponentError);
  }
  SECTION("evaluation is a ring homomorphism") {
    auto tab2 = VarTable::create({"x1", "x2"});
    std::mt19937_64 gen(777);
    std::uniform_int_distribution<int> d(1, 9);
    for (int t = 0; t < 20; ++t) {
      LaurentPoly a = random_poly(tab2, gen), b = random_poly(tab2, gen);
      std::vector<mpq_class> pt{mpq_class(d(gen), d(gen)), mpq_class(d(gen), d(gen))};
      pt[0].canonicalize();
      pt[1].canonicalize();
      CHECK(eval_rational(a + b, pt) == eval_rational(a, pt) + eval_rational(b, pt));
      CHECK(eval_rational(a * b, pt) == eval_rational(a, pt) * eval_rational(b, pt));
    }
  }
}

TEST_CASE("exponent ranges and polynomiality") {
  auto tab = VarTable::create({"x", "z"});
  LaurentPoly p = LaurentPoly::term(tab, {2, -1}, 1) + LaurentPoly::term(tab, {-3, 0}, 5);
  CHECK(p.exponent_range(0) == std::pair<int, int>{-3, 2});
  CHECK(p.exponent_range(1) == std::pair<int, int>{-1, 0});
  std::vector<int> xonly{0}, zonly{1};
  CHECK_FALSE(p.is_polynomial_in(xonly));
  CHECK_FALSE(p.is_polynomial_in(zonly));
  CHECK((LaurentPoly::var(tab, 0, 3) * LaurentPoly::var(tab, 1)).is_polynomial_in(xonly));
  CHECK(LaurentPoly::zero(tab).is_polynomial_in(xonly));
}

TEST_CASE("canonical text rendering") {
  auto tab = VarTable::create({"x1", "x2", "z"});
  CHECK(LaurentPoly::zero(tab).to_string() == "0");
  CHECK(LaurentPoly::one(tab).to_string() == "1");
  LaurentPoly p = LaurentPoly::term(tab, {2, 0, -1}, 1) - mpz_class(3) * LaurentPoly::var(tab, 1);
  CHECK(p.to_string() == "x1^2*z^-1 - 3*x2");
  CHECK((-LaurentPoly::var(tab, 0) + LaurentPoly::constant(tab, 2)).to_string() == "-x1 + 2");
}

TEST_CASE("JSON round-trip") {
  auto tab = VarTable::create({"x1", "z"});
  SECTION("schema fields") {
    LaurentPoly p = LaurentPoly::term(tab, {1, -2}, -12);
    auto j = to_json(p);
    REQUIRE(j.contains("vars"));
    REQUIRE(j.contains("terms"));
    CHECK(j["vars"] == nlohmann::json({"x1", "z"}));
    CHECK(j["terms"][0]["coeff"] == "-12");
    CHECK(j["terms"][0]["exp"] == nlohmann::json({1, -2}));
  }
  SECTION("random polynomials survive") {
    std::mt19937_64 gen(31337);
    for (int t = 0; t < 25; ++t) {
      LaurentPoly p = random_poly(tab, gen, 6);
      CHECK(poly_from_json(to_json(p)) == p);
    }
  }
  SECTION("terms arrive in descending graded-lex order") {
    LaurentPoly p = LaurentPoly::var(tab, 0, 2) + LaurentPoly::var(tab, 0, -1) +
                    LaurentPoly::var(tab, 1);
    auto j = to_json(p);
    CHECK(j["terms"][0]["exp"] == nlohmann::json({2, 0}));
    CHECK(j["terms"][1]["exp"] == nlohmann::json({0, 1}));
    CHECK(j["terms"][2]["exp"] == nlohmann::json({-1, 0}));
  }
}
