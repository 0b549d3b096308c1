#include <catch_amalgamated.hpp>

#include <map>

#include "cpeaks/hilbert.hpp"

using namespace cpeaks;

namespace {

// Numerators of Hilb A over (1 - x)^{floor((n+1)/2)}, computed independently
// from multichain counts and frozen here.
const std::map<int, Poly>& known_numerators() {
  static const std::map<int, Poly> table{
      {3, Poly{1}},
      {4, Poly{1, 1}},
      {5, Poly{1, 3}},
      {6, Poly{1, 7, 2}},
      {7, Poly{1, 16, 13}},
      {8, Poly{1, 31, 47, 5}},
      {9, Poly{1, 65, 203, 67}},
      {10, Poly{1, 121, 561, 311, 14}},
      {11, Poly{1, 246, 2046, 2366, 381}},
      {12, Poly{1, 456, 5184, 8102, 2055, 42}},
  };
  return table;
}

}  // namespace

TEST_CASE("Hilbert polynomial of A", "[hilbert]") {
  CHECK(hilbert_polynomial_a(5) == Poly{1, 3, 2});
  for (int n = 3; n <= 9; ++n) CHECK(dim_a(n, 0) == 1);
  CHECK(dim_a(5, 2) == 15);
  CHECK_THROWS_AS(dim_a(5, -1), DomainError);
  // agreement starts at degree 0
  for (int n = 3; n <= 20; ++n) REQUIRE(hilbert_polynomial_a(n)(Rational(0)) == 1);
}

TEST_CASE("dim A^i counts multichains", "[hilbert][oracle]") {
  for (int n = 3; n <= 12; ++n) {
    for (int i = 1; i <= 8; ++i) REQUIRE(dim_a(n, i) == multichain_oracle(n, i));
  }
}

TEST_CASE("graded pieces match standard monomials", "[hilbert][oracle]") {
  CHECK(standard_monomial_oracle(4, Algebra::A, 2) == 5);
  for (int n = 3; n <= 7; ++n) {
    for (int i = 0; i <= 5; ++i) {
      REQUIRE(standard_monomial_oracle(n, Algebra::A, i) == dim_a(n, i));
      REQUIRE(standard_monomial_oracle(n, Algebra::B, i) == dim_b(n, i));
    }
  }
  CHECK_THROWS_AS(standard_monomial_oracle(4, Algebra::A, kMonomialDegreeCap + 1), ResourceLimitError);
}

TEST_CASE("Hilbert series numerators", "[hilbert]") {
  for (const auto& [n, num] : known_numerators()) {
    const RationalSeriesForm form = numerator_a(n);
    REQUIRE(form.numerator == num);
    REQUIRE(form.denominator_exponent == (n + 1) / 2);
    REQUIRE(form.numerator.has_integer_coeffs());
    REQUIRE(form.expand(12) == hilbert_series_a(n, 12));
  }
  for (int n = 3; n <= 16; ++n) REQUIRE(numerator_a_by_recurrence(n) == numerator_a(n).numerator);
}

TEST_CASE("exponent floor(n/2) does not give a polynomial numerator for odd n", "[hilbert]") {
  for (int n = 3; n <= 11; n += 2) {
    const Series h = hilbert_series_a(n, 12);
    const Series one_minus_x(12, {Rational{1}, Rational{-1}});
    Series reduced = h;
    for (int k = 0; k < n / 2; ++k) reduced = reduced * one_minus_x;
    bool tail_vanishes = true;
    for (int k = max_peak_count(n) + 1; k <= 12; ++k) tail_vanishes = tail_vanishes && reduced[k] == 0;
    REQUIRE_FALSE(tail_vanishes);
  }
}

TEST_CASE("derivative relations between consecutive Hilbert series", "[hilbert]") {
  for (int m = 4; m <= 10; m += 2) {
    const Series r = hilbert_even_step_residual(m, 12);
    for (int k = 0; k <= 12; ++k) REQUIRE(r[k] == 0);
  }
  for (int m = 3; m <= 9; m += 2) {
    const Series r = hilbert_odd_step_residual(m, 12);
    for (int k = 0; k <= 12; ++k) REQUIRE(r[k] == 0);
  }
}

TEST_CASE("Hilbert series of B", "[hilbert]") {
  CHECK(hilbert_series_b(4) == Poly{1, 3, 2});
  CHECK(hilbert_series_b(5) == Poly{1, 6, 9, 4});
  for (int n = 3; n <= 12; ++n) {
    const Poly b = hilbert_series_b(n);
    REQUIRE(b == hilbert_series_b_oracle(n));
    REQUIRE(b.degree() == max_peak_count(n) + 1);
    REQUIRE(b.coeff(1) == Rational(count_valid(n)));
  }
}

TEST_CASE("graded dimensions", "[hilbert]") {
  const GradedDimensions g = graded_dimensions(5, Algebra::B, 4);
  CHECK(g.dims == std::vector<Integer>{1, 6, 9, 4, 0});
  CHECK(to_string(Algebra::A) == "A");
}
