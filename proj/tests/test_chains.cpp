#include <catch_amalgamated.hpp>

#include "cpeaks/chains.hpp"

using namespace cpeaks;

TEST_CASE("rank and zeta polynomials", "[chains]") {
  CHECK(rank_polynomial(5) == Poly{1, 3, 2});
  CHECK(rank_polynomial(3) == Poly{1, 1});
  // Z(P_n, 2) counts single faces (multichains of length 1)
  for (int n = 3; n <= 20; ++n) REQUIRE(zeta(n, 2) == count_valid(n));
  CHECK(zeta(5, 3) == 15);
  CHECK_THROWS_AS(zeta(5, 1), DomainError);
  CHECK_THROWS_AS(zeta(5, 0), DomainError);
}

TEST_CASE("zeta values count multichains", "[chains][oracle]") {
  CHECK(multichain_oracle(5, 2) == 15);
  CHECK(multichain_oracle(5, 0) == 1);
  for (int n = 3; n <= 8; ++n) {
    for (int i = 2; i <= 6; ++i) REQUIRE(zeta(n, i) == multichain_oracle(n, i - 1));
  }
}

TEST_CASE("chain counts", "[chains]") {
  CHECK(chain_count_formula(3, 1) == 2);
  CHECK(chain_count_formula(3, 2) == 1);
  CHECK(chain_count_formula(5, 1) == 6);
  CHECK(chain_count_formula(5, 2) == 9);
  CHECK(chain_oracle(5, 2) == 9);
  CHECK_THROWS_AS(chain_count_formula(5, 0), DomainError);
  CHECK_THROWS_AS(chain_count_formula(2, 1), DomainError);
}

TEST_CASE("chain count formula against the chain oracle", "[chains][oracle]") {
  for (int n = 3; n <= 12; ++n) {
    for (int i = 1; i <= 4; ++i) {
      const Rational f = chain_count_formula(n, i);
      REQUIRE(is_integral(f));
      REQUIRE(chain_count(n, i) == chain_oracle(n, i));
    }
    // no chain is longer than the number of ranks
    REQUIRE(chain_count(n, max_peak_count(n) + 2) == 0);
  }
}

TEST_CASE("single faces", "[chains]") {
  for (int n = 3; n <= 20; ++n) REQUIRE(chain_count(n, 1) == count_valid(n));
}

TEST_CASE("zeta recurrence", "[chains]") {
  for (int n = 3; n <= 12; ++n) {
    for (int i = 2; i <= 6; ++i) REQUIRE(zeta_recurrence_residual(n, i) == 0);
  }
}

TEST_CASE("zeta from chain counts", "[chains]") {
  for (int n = 3; n <= 10; ++n) {
    for (int i = 2; i <= 6; ++i) REQUIRE(zeta_from_chains(n, i) == zeta(n, i));
  }
}

TEST_CASE("f-polynomial from chain counts", "[chains]") {
  CHECK(f_polynomial_from_chains(5) == Poly{2, 3, 1});
  for (int n = 3; n <= 12; ++n) REQUIRE(f_polynomial_from_chains(n) == f_polynomial(n));
}
