#pragma once

#include <numeric>
#include <span>

#include "cpeaks/errors.hpp"
#include "cpeaks/exact/rational.hpp"

// Combinatorial numbers over arbitrary-precision integers.
namespace cpeaks::comb {

inline Integer factorial(int n) {
  if (n < 0) throw DomainError("factorial of negative number");
  Integer r{1};
  for (int k = 2; k <= n; ++k) r *= k;
  return r;
}

// C(n, k); zero when k < 0 or k > n.
inline Integer binomial(int n, int k) {
  if (n < 0 || k < 0 || k > n) return Integer{0};
  k = std::min(k, n - k);
  Integer r{1};
  for (int j = 1; j <= k; ++j) {
    r *= n - k + j;
    r /= j;  // exact: r is C(n-k+j, j) here
  }
  return r;
}

// (sum parts)! / prod(part!)
inline Integer multinomial(std::span<const int> parts) {
  Integer r{1};
  int total = 0;
  for (int p : parts) {
    if (p < 0) throw DomainError("multinomial part is negative");
    total += p;
    r *= binomial(total, p);
  }
  return r;
}

inline Integer multinomial(std::initializer_list<int> parts) {
  return multinomial(std::span<const int>(parts.begin(), parts.size()));
}

// c_m = C(2m, m) / (m + 1)
inline Integer catalan(int m) {
  if (m < 0) throw DomainError("catalan index is negative");
  return binomial(2 * m, m) / (m + 1);
}

// b_n = C(n, floor(n/2)), the number of left factors of Dyck paths of length n.
inline Integer central_binomial(int n) { return binomial(n, n / 2); }

// 0 for even n, 1 for odd n.
constexpr int epsilon(int n) noexcept { return (n % 2 == 0) ? 0 : 1; }

}  // namespace cpeaks::comb
