#pragma once

#include <string>
#include <vector>

#include "cpeaks/chains.hpp"
#include "cpeaks/complex.hpp"
#include "cpeaks/errors.hpp"
#include "cpeaks/exact/comb.hpp"
#include "cpeaks/exact/poly.hpp"
#include "cpeaks/exact/series.hpp"

// The graded algebras A = K[x_1..x_m]/I and B = K[x_1..x_m]/J attached to P_n,
// with one variable per face (indexed as in all_faces). I is generated by the
// products of incomparable faces; J additionally by all squares. Neither ideal
// is materialised: only the comparability predicate is used.
namespace cpeaks {

enum class Algebra { A, B };

inline std::string to_string(Algebra a) { return a == Algebra::A ? "A" : "B"; }

// Largest degree enumerated by the standard-monomial oracle.
inline constexpr int kMonomialDegreeCap = 6;

struct GradedDimensions {
  int n = 0;
  Algebra algebra = Algebra::A;
  std::vector<Integer> dims;  // dims[i] = dim of the degree-i piece
};

/// numerator / (1 - x)^denominator_exponent.
struct RationalSeriesForm {
  Poly numerator;
  int denominator_exponent = 0;

  Series expand(int order) const {
    return as_series(numerator, order) * inverse_power_of_one_minus(denominator_exponent, order);
  }
};

/// The Hilbert polynomial x^d P_n(1/x) = sum_{k=-1}^{d-1} p_{n,k} x^{k+1}.
/// It agrees with dim A^i for every i >= 0, including i = 0 (value p_{n,-1} = 1).
inline Poly hilbert_polynomial_a(int n) { return rank_polynomial(n); }

/// dim A^i: the number of multichains of i faces.
inline Integer dim_a(int n, int i) {
  detail::require_ambient(n);
  if (i < 0) throw DomainError("degree must be nonnegative");
  if (i == 0) return Integer{1};
  return to_integer(hilbert_polynomial_a(n)(Rational(i)), "dim A^i");
}

/// sum_{i=0}^{order} dim A^i x^i.
inline Series hilbert_series_a(int n, int order) {
  Series s(order);
  for (int i = 0; i <= order; ++i) s[i] = Rational(dim_a(n, i));
  return s;
}

/// floor((n + 1)/2): one more than the degree of the Hilbert polynomial.
inline int hilbert_denominator_exponent(int n) { return max_peak_count(n) + 1; }

/// Hilb A = numerator / (1 - x)^{floor((n+1)/2)}; the numerator has degree at
/// most floor((n-1)/2) and is read off (1 - x)^e Hilb A.
inline RationalSeriesForm numerator_a(int n) {
  const int e = hilbert_denominator_exponent(n);
  const int d = max_peak_count(n);
  Series one_minus_x_pow = Series::constant(d, Rational{1});
  const Series one_minus_x(d, {Rational{1}, Rational{-1}});
  for (int k = 0; k < e; ++k) one_minus_x_pow = one_minus_x_pow * one_minus_x;
  const Series product = hilbert_series_a(n, d) * one_minus_x_pow;
  return {Poly(product.coeffs()), e};
}

/// The numerators from A_3 = 1, A_4 = 1 + x and the derivative recurrences:
///   A_{m+1} = x(1-x)A_m' + ((m/2 - 1)x + 1)A_m                        (m even)
///   (1-x)A_{m+3} = x(1-x)A_{m+2}' + ((m+1)x+2)/2 A_{m+2}
///       + 4m/(m+3) x(1-x)^2 A_{m+1}' + 2m(m+1)/(m+3) x(1-x) A_{m+1}
///       - 4m/(m+3) x(1-x)((m-1)x+2) A_m' - m(m+1)/(m+3) x((m-1)x+4) A_m
///       - 4m/(m+3) x^2(1-x)^2 A_m''                                  (m odd)
/// with denominator exponent floor((n+1)/2). Odd steps divide exactly by 1 - x.
inline Poly numerator_a_by_recurrence(int n) {
  detail::require_ambient(n);
  const Poly x = Poly::x();
  const Poly one_minus_x{1, -1};
  std::vector<Poly> a{Poly{}, Poly{}, Poly{}, Poly{1}, Poly{1, 1}};  // a[3], a[4]
  for (int target = 5; target <= n; ++target) {
    Poly next;
    const int m = target - 1;
    if (m % 2 == 0) {
      const Poly& am = a[static_cast<std::size_t>(m)];
      next = x * one_minus_x * am.derivative() + Poly{Rational{1}, Rational(m / 2 - 1)} * am;
    } else {
      // target = m' + 3 with m' odd
      const int mo = target - 3;
      const Poly& a0 = a[static_cast<std::size_t>(mo)];
      const Poly& a1 = a[static_cast<std::size_t>(mo + 1)];
      const Poly& a2 = a[static_cast<std::size_t>(mo + 2)];
      const Rational k = Rational(4 * mo, mo + 3);
      const Rational kk = Rational(2 * mo * (mo + 1), mo + 3);
      const Rational kh = Rational(mo * (mo + 1), mo + 3);
      const Poly omx2 = one_minus_x * one_minus_x;
      Poly rhs = x * one_minus_x * a2.derivative() + Poly{Rational{1}, Rational(mo + 1, 2)} * a2;
      rhs += k * (x * omx2 * a1.derivative());
      rhs += kk * (x * one_minus_x * a1);
      rhs -= k * (x * one_minus_x * Poly{Rational{2}, Rational(mo - 1)} * a0.derivative());
      rhs -= kh * (x * Poly{Rational{4}, Rational(mo - 1)} * a0);
      rhs -= k * (x * x * omx2 * a0.derivative().derivative());
      next = divide_exact(rhs, one_minus_x);
    }
    a.push_back(std::move(next));
  }
  return a[static_cast<std::size_t>(n)];
}

/// Residual of Hilb A_{m+1} = x Hilb A_m' + Hilb A_m (m even), as a series
/// truncated so that every term is exact.
inline Series hilbert_even_step_residual(int m, int order) {
  const Series h = hilbert_series_a(m, order + 1);
  const Series x = Series::monomial(order, Rational{1}, 1);
  return hilbert_series_a(m + 1, order) - (x * h.derivative() + h.truncated(order));
}

/// Residual of the three-step relation for odd m:
///   Hilb A_{m+3} = x A_{m+2}' + A_{m+2} + 4m/(m+3) x A_{m+1}'
///                  - 8m/(m+3) x A_m' - 4m/(m+3) x^2 A_m''.
inline Series hilbert_odd_step_residual(int m, int order) {
  const Series x = Series::monomial(order, Rational{1}, 1);
  const Series x2 = Series::monomial(order, Rational{1}, 2);
  const Series h0 = hilbert_series_a(m, order + 2);
  const Series h1 = hilbert_series_a(m + 1, order + 1);
  const Series h2 = hilbert_series_a(m + 2, order + 1);
  const Rational k = Rational(4 * m, m + 3);
  const Series rhs = x * h2.derivative() + h2.truncated(order) + k * (x * h1.derivative()) -
                     Rational(2) * k * (x * h0.derivative().truncated(order)) -
                     k * (x2 * h0.derivative().derivative());
  return hilbert_series_a(m + 3, order) - rhs;
}

/// dim B^i: 1 for i = 0, otherwise the number of chains of i faces.
inline Integer dim_b(int n, int i) {
  detail::require_ambient(n);
  if (i < 0) throw DomainError("degree must be nonnegative");
  if (i == 0) return Integer{1};
  return chain_count(n, i);
}

/// Hilb B = 1 + sum_{i=1}^{d+1} d_{P_n,i} x^i (B is finite dimensional).
inline Poly hilbert_series_b(int n) {
  std::vector<Rational> c{Rational{1}};
  for (int i = 1; i <= max_peak_count(n) + 1; ++i) c.push_back(Rational(chain_count(n, i)));
  return Poly(std::move(c));
}

/// Hilb B with every coefficient from the exhaustive chain oracle.
inline Poly hilbert_series_b_oracle(int n) {
  std::vector<Rational> c{Rational{1}};
  for (int i = 1; i <= max_peak_count(n) + 1; ++i) c.push_back(Rational(chain_oracle(n, i)));
  return Poly(std::move(c));
}

inline GradedDimensions graded_dimensions(int n, Algebra algebra, int max_degree) {
  GradedDimensions g{n, algebra, {}};
  for (int i = 0; i <= max_degree; ++i) g.dims.push_back(algebra == Algebra::A ? dim_a(n, i) : dim_b(n, i));
  return g;
}

/// True iff the monomial prod x_{idx} (repeats allowed) lies outside the ideal:
/// every pair of distinct variables is comparable, and for B no repeats.
inline bool is_standard_monomial(const FacePoset& poset, Algebra algebra, const std::vector<std::size_t>& idx) {
  for (std::size_t a = 0; a < idx.size(); ++a) {
    for (std::size_t b = a + 1; b < idx.size(); ++b) {
      if (idx[a] == idx[b]) {
        if (algebra == Algebra::B) return false;
      } else if (!poset.comparable(idx[a], idx[b])) {
        return false;
      }
    }
  }
  return true;
}

/// Counts degree-`degree` monomials in the face variables avoiding the
/// generators of I (algebra A) or J (algebra B), by enumerating index
/// multisets as nondecreasing sequences. A prefix that already contains a
/// generator is not extended, since every extension is divisible by it.
inline Integer standard_monomial_oracle(int n, Algebra algebra, int degree) {
  if (degree < 0) throw DomainError("degree must be nonnegative");
  if (degree > kMonomialDegreeCap) {
    throw ResourceLimitError("monomial enumeration of degree " + std::to_string(degree) +
                             " exceeds the cap " + std::to_string(kMonomialDegreeCap));
  }
  const FacePoset poset(n);
  Integer count{0};
  std::vector<std::size_t> idx;
  const auto extend = [&](auto&& self, std::size_t start) -> void {
    if (static_cast<int>(idx.size()) == degree) {
      ++count;
      return;
    }
    for (std::size_t v = start; v < poset.size(); ++v) {
      idx.push_back(v);
      if (is_standard_monomial(poset, algebra, idx)) self(self, v);
      idx.pop_back();
    }
  };
  extend(extend, 0);
  return count;
}

}  // namespace cpeaks
