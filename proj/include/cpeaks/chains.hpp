#pragma once

#include <vector>

#include "cpeaks/complex.hpp"
#include "cpeaks/errors.hpp"
#include "cpeaks/exact/comb.hpp"
#include "cpeaks/exact/poly.hpp"

namespace cpeaks {

/// The rank polynomial sum_j p_{n,j-1} t^j = t^d P_n(1/t), d = floor((n-1)/2).
inline Poly rank_polynomial(int n) { return f_polynomial(n).reversed(max_peak_count(n)); }

/// Z(P_n, i) as a polynomial in i: (i - 1)^d P_n(1/(i - 1)) expanded, so the
/// apparent pole at i = 1 never appears.
inline Poly zeta_polynomial(int n) { return rank_polynomial(n).translated(Rational{-1}); }

/// Z(P_n, i): the number of multichains x_1 <= ... <= x_{i-1} in P_n, i >= 2.
inline Integer zeta(int n, int i) {
  if (i < 2) throw DomainError("zeta polynomial is defined for i >= 2, got " + std::to_string(i));
  return to_integer(zeta_polynomial(n)(Rational(i)), "zeta value");
}

namespace detail {

// Counts sequences f_1 R f_2 R ... R f_length over the face poset, where R is
// <= (multichains) or < (chains), by dynamic programming over the top element.
inline Integer count_sequences(const FacePoset& poset, int length, bool strict) {
  if (length < 0) throw DomainError("chain length must be nonnegative");
  if (length == 0) return Integer{1};
  const std::size_t m = poset.size();
  std::vector<Integer> ending(m, Integer{1});
  for (int step = 1; step < length; ++step) {
    std::vector<Integer> next(m, Integer{0});
    for (std::size_t b = 0; b < m; ++b) {
      for (std::size_t a = 0; a < m; ++a) {
        if (strict ? poset.less(a, b) : poset.leq(a, b)) next[b] += ending[a];
      }
    }
    ending = std::move(next);
  }
  Integer total{0};
  for (const auto& e : ending) total += e;
  return total;
}

// Calls visit(parts) for every (d_1, ..., d_{i+1}) with sum n, d_1 >= 0,
// d_k >= 1 for 2 <= k <= i and d_{i+1} >= n - floor((n-1)/2). The last part
// is chosen first, then the remainder is distributed over d_i, ..., d_1.
template <class Visit>
void for_each_chain_composition(int n, int i, Visit&& visit) {
  std::vector<int> parts(static_cast<std::size_t>(i) + 1, 0);
  const int last_min = n - max_peak_count(n);

  const auto fill = [&](auto&& self, int k, int remaining) -> void {
    // k indexes parts from i - 1 down to 0 (zero-based)
    if (k == 0) {
      parts[0] = remaining;
      visit(parts);
      return;
    }
    // parts[1..k-1] still need at least one each
    for (int v = 1; v <= remaining - (k - 1); ++v) {
      parts[static_cast<std::size_t>(k)] = v;
      self(self, k - 1, remaining - v);
    }
  };

  for (int last = last_min; last <= n; ++last) {
    parts[static_cast<std::size_t>(i)] = last;
    fill(fill, i - 1, n - last);
  }
}

}  // namespace detail

/// Exhaustive count of multichains x_1 <= ... <= x_length in P_n.
inline Integer multichain_oracle(int n, int length) {
  return detail::count_sequences(FacePoset(n), length, false);
}

/// Exhaustive count of chains x_1 < ... < x_i in P_n.
inline Integer chain_oracle(int n, int i) {
  return detail::count_sequences(FacePoset(n), i, true);
}

/// sum over compositions of multinomial(n; d_1..d_{i+1}) (2 d_{i+1} - n)/n,
/// evaluated literally (negative summands included).
inline Rational chain_count_formula(int n, int i) {
  detail::require_ambient(n);
  if (i < 1) throw DomainError("chain count formula needs i >= 1");
  Rational sum{0};
  detail::for_each_chain_composition(n, i, [&](const std::vector<int>& parts) {
    sum += Rational(comb::multinomial(parts)) * Rational(2 * parts.back() - n, n);
  });
  return sum;
}

/// d_{P_n,i}, the number of chains with i elements, from chain_count_formula.
inline Integer chain_count(int n, int i) {
  return to_integer(chain_count_formula(n, i), "chain count");
}

/// sum_{j>=2} d_{P_n,j-1} C(i-2, j-2): the zeta value rebuilt from chain counts.
inline Integer zeta_from_chains(int n, int i) {
  if (i < 2) throw DomainError("zeta polynomial is defined for i >= 2");
  Integer z{0};
  for (int j = 2; j <= max_peak_count(n) + 2; ++j) z += chain_count(n, j - 1) * comb::binomial(i - 2, j - 2);
  return z;
}

/// P_n(x) = sum_{i=2}^{d+2} x^{d+2-i}/(i-2)! prod_{j=1}^{i-2} (1 - jx) d_{P_n,i-1}.
inline Poly f_polynomial_from_chains(int n) {
  detail::require_ambient(n);
  const int d = max_peak_count(n);
  Poly total;
  for (int i = 2; i <= d + 2; ++i) {
    Poly term = Poly::monomial(Rational(chain_count_formula(n, i - 1)) / Rational(comb::factorial(i - 2)), d + 2 - i);
    for (int j = 1; j <= i - 2; ++j) term *= Poly{Rational(1), Rational(-j)};
    total += term;
  }
  return total;
}

/// Z(P_{n+1}, i) - i Z(P_n, i) + eps(n) 2 (i-1)^{(n+1)/2}/(n+1) C(n-1, (n-1)/2);
/// zero whenever the parity recurrence for the zeta polynomial holds.
inline Rational zeta_recurrence_residual(int n, int i) {
  Rational r = Rational(zeta(n + 1, i)) - Rational(i) * Rational(zeta(n, i));
  if (comb::epsilon(n) == 1) {
    r += Rational(2, n + 1) * pow(Rational(i - 1), static_cast<unsigned>((n + 1) / 2)) *
         Rational(comb::binomial(n - 1, (n - 1) / 2));
  }
  return r;
}

}  // namespace cpeaks
