#include <catch_amalgamated.hpp>

#include <random>

#include "cpeaks/exact/comb.hpp"
#include "cpeaks/exact/poly.hpp"
#include "cpeaks/exact/series.hpp"

using namespace cpeaks;

namespace {

Poly random_poly(std::mt19937& rng, int max_degree) {
  std::uniform_int_distribution<int> deg(0, max_degree);
  std::uniform_int_distribution<int> num(-9, 9);
  std::uniform_int_distribution<int> den(1, 5);
  std::vector<Rational> c(static_cast<std::size_t>(deg(rng)) + 1);
  for (auto& x : c) x = Rational(num(rng), den(rng));
  return Poly(std::move(c));
}

// Number of Dyck paths with m up and m down steps, by enumerating words.
long dyck_path_count(int m) {
  long count = 0;
  for (unsigned w = 0; w < (1u << (2 * m)); ++w) {
    int h = 0;
    bool ok = true;
    for (int k = 0; k < 2 * m && ok; ++k) {
      h += (w >> k) & 1u ? -1 : 1;
      ok = h >= 0;
    }
    count += ok && h == 0;
  }
  return count;
}

}  // namespace

TEST_CASE("poly evaluation", "[exact]") {
  const Poly p{1, 1};
  CHECK(p(Rational(-1)) == 0);
  CHECK(p(Rational(1, 2)) == Rational(3, 2));
  CHECK(Poly({2, 3, 1})(Rational(-1)) == 0);
  CHECK(Poly{}(Rational(7)) == 0);
}

TEST_CASE("poly shift x -> x - 1", "[exact]") {
  CHECK(Poly{1, 1}.translated(Rational(-1)) == Poly{0, 1});
  CHECK(Poly{1}.translated(Rational(-1)) == Poly{1});
  CHECK(Poly({2, 3, 1}).translated(Rational(-1)) == Poly({0, 1, 1}));
}

TEST_CASE("poly normal form drops trailing zeros", "[exact]") {
  const Poly p{1, 2, 0, 0};
  CHECK(p.degree() == 1);
  CHECK((Poly{1, 1} - Poly{1, 1}).is_zero());
  CHECK(Poly{}.degree() == -1);
}

TEST_CASE("poly division", "[exact]") {
  const Poly a = Poly{-1, 1} * Poly{2, 0, 1};
  CHECK(divide_exact(a, Poly{-1, 1}) == Poly{2, 0, 1});
  auto [q, r] = divmod(Poly{1, 0, 1}, Poly{1, 1});
  CHECK(q * Poly{1, 1} + r == Poly{1, 0, 1});
  CHECK(r == Poly{2});
  CHECK_THROWS_AS(divide_exact(Poly{1, 0, 1}, Poly{1, 1}), ArithmeticError);
  CHECK_THROWS_AS(divmod(Poly{1}, Poly{}), ArithmeticError);
}

TEST_CASE("poly to_string", "[exact]") {
  CHECK(Poly({2, 3, 1}).to_string() == "x^2 + 3x + 2");
  CHECK(Poly({0, -1}).to_string() == "-x");
  CHECK(Poly({Rational(1, 2), 0, -2}).to_string() == "-2x^2 + 1/2");
  CHECK(Poly{}.to_string() == "0");
}

TEST_CASE("evaluation is a ring homomorphism", "[exact][property]") {
  std::mt19937 rng(20240611);
  for (int trial = 0; trial < 60; ++trial) {
    const Poly p = random_poly(rng, 30);
    const Poly q = random_poly(rng, 30);
    const Rational t(static_cast<int>(rng() % 11) - 5, static_cast<int>(rng() % 4) + 1);
    REQUIRE((p * q)(t) == p(t) * q(t));
    REQUIRE((p + q)(t) == p(t) + q(t));
  }
}

TEST_CASE("shift by -1 inverts shift by +1", "[exact][property]") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 40; ++trial) {
    const Poly p = random_poly(rng, 20);
    REQUIRE(p.translated(Rational(1)).translated(Rational(-1)) == p);
  }
}

TEST_CASE("binomial and multinomial", "[exact][comb]") {
  CHECK(comb::binomial(5, 2) == 10);
  CHECK(comb::binomial(5, -1) == 0);
  CHECK(comb::binomial(5, 6) == 0);
  CHECK(comb::binomial(0, 0) == 1);
  CHECK(comb::multinomial({3}) == 1);
  CHECK(comb::multinomial({1, 2}) == 3);
  CHECK(comb::multinomial({0, 3}) == 1);
  CHECK(comb::multinomial({2, 2, 1}) == 30);
  CHECK(comb::central_binomial(4) == 6);
  CHECK(comb::epsilon(3) == 1);
  CHECK(comb::epsilon(4) == 0);
  CHECK(comb::binomial(60, 30) == Integer("118264581564861424"));
}

TEST_CASE("catalan series", "[exact][series]") {
  CHECK(catalan_series(0)[0] == 1);
  const Series c = catalan_series(4);
  const std::vector<Rational> want{1, 1, 2, 5, 14};
  CHECK(c.coeffs() == want);
  CHECK(c[3] == dyck_path_count(3));
  for (int m = 0; m <= 6; ++m) CHECK(Rational(comb::catalan(m)) == dyck_path_count(m));
}

TEST_CASE("catalan convolution", "[exact][series][property]") {
  const Series c = catalan_series(21);
  for (int m = 0; m <= 20; ++m) {
    Rational conv{0};
    for (int j = 0; j <= m; ++j) conv += c[j] * c[m - j];
    REQUIRE(c[m + 1] == conv);
  }
}

TEST_CASE("(1 - 2yC(y))^2 = 1 - 4y", "[exact][series]") {
  const int order = 20;
  const Series y = Series::monomial(order, Rational(1), 1);
  const Series root = Series::constant(order, Rational(1)) - Rational(2) * (y * catalan_series(order));
  const Series want(order, {Rational(1), Rational(-4)});
  CHECK(root * root == want);
}

TEST_CASE("series division and substitution", "[exact][series]") {
  const int order = 8;
  const Series one_minus_y(order, {Rational(1), Rational(-1)});
  const Series inv = Series::constant(order, Rational(1)) / one_minus_y;
  for (int k = 0; k <= order; ++k) CHECK(inv[k] == 1);
  CHECK(inv == inverse_power_of_one_minus(1, order));
  CHECK(inv * inv == inverse_power_of_one_minus(2, order));

  const Series sq = inv.substitute_square();
  for (int k = 0; k <= order; ++k) CHECK(sq[k] == (k % 2 == 0 ? 1 : 0));

  const Series zero_const(order, {Rational(0), Rational(1)});
  CHECK_THROWS_AS(inv / zero_const, ArithmeticError);
}

TEST_CASE("bivariate series with polynomial coefficients", "[exact][series]") {
  const int order = 6;
  // 1 / (x - y) has coefficients x^{-k-1}: not polynomial, so division fails.
  const BiSeries x_minus_y(order, {Poly::x(), Poly{-1}});
  CHECK_THROWS_AS(BiSeries::constant(order, Poly{1}) / x_minus_y, ArithmeticError);

  // x (1 + y) / x = 1 + y
  const BiSeries num(order, {Poly::x(), Poly::x()});
  const BiSeries q = num / BiSeries::constant(order, Poly::x());
  CHECK(q[0] == Poly{1});
  CHECK(q[1] == Poly{1});
  CHECK(coeff(num, 1, 1) == 1);
  CHECK(x_degree(num) == 1);
}
