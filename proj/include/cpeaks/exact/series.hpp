#pragma once

#include <cstddef>
#include <ostream>
#include <utility>
#include <vector>

#include "cpeaks/errors.hpp"
#include "cpeaks/exact/comb.hpp"
#include "cpeaks/exact/poly.hpp"
#include "cpeaks/exact/rational.hpp"

namespace cpeaks {

namespace detail {

inline bool coeff_is_zero(const Rational& c) { return c == 0; }
inline bool coeff_is_zero(const Poly& c) { return c.is_zero(); }

inline Rational coeff_divide(const Rational& a, const Rational& b) {
  if (b == 0) throw ArithmeticError("series division: constant term is zero");
  return a / b;
}

// Exact polynomial division; a nonzero remainder means the quotient series
// does not have polynomial coefficients.
inline Poly coeff_divide(const Poly& a, const Poly& b) {
  if (b.is_zero()) throw ArithmeticError("series division: constant term is zero");
  return divide_exact(a, b);
}

}  // namespace detail

/// Power series in one variable t truncated after t^order, over a coefficient
/// ring Coeff (Rational for univariate series, Poly for series in y whose
/// coefficients are polynomials in x).
///
/// Every operation returns a series carrying the smaller of the operand orders.
template <class Coeff>
class TruncatedSeries {
 public:
  explicit TruncatedSeries(int order) : coeffs_(static_cast<std::size_t>(checked(order)) + 1) {}

  TruncatedSeries(int order, std::vector<Coeff> coeffs) : TruncatedSeries(order) {
    for (std::size_t k = 0; k < coeffs.size() && k < coeffs_.size(); ++k) coeffs_[k] = std::move(coeffs[k]);
  }

  static TruncatedSeries constant(int order, Coeff c) {
    TruncatedSeries s(order);
    s.coeffs_[0] = std::move(c);
    return s;
  }

  // c * t^k, zero when k exceeds the order.
  static TruncatedSeries monomial(int order, Coeff c, int k) {
    TruncatedSeries s(order);
    if (k <= order) s.coeffs_[static_cast<std::size_t>(k)] = std::move(c);
    return s;
  }

  int order() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }

  const Coeff& operator[](int k) const { return coeffs_.at(static_cast<std::size_t>(k)); }
  Coeff& operator[](int k) { return coeffs_.at(static_cast<std::size_t>(k)); }

  const std::vector<Coeff>& coeffs() const noexcept { return coeffs_; }

  TruncatedSeries truncated(int order) const {
    TruncatedSeries s(std::min(order, this->order()));
    for (int k = 0; k <= s.order(); ++k) s[k] = (*this)[k];
    return s;
  }

  friend TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b) {
    TruncatedSeries s(std::min(a.order(), b.order()));
    for (int k = 0; k <= s.order(); ++k) s[k] = a[k] + b[k];
    return s;
  }

  friend TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b) {
    TruncatedSeries s(std::min(a.order(), b.order()));
    for (int k = 0; k <= s.order(); ++k) s[k] = a[k] - b[k];
    return s;
  }

  friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
    TruncatedSeries s(std::min(a.order(), b.order()));
    for (int i = 0; i <= s.order(); ++i) {
      if (detail::coeff_is_zero(a[i])) continue;
      for (int j = 0; i + j <= s.order(); ++j) {
        if (detail::coeff_is_zero(b[j])) continue;
        s[i + j] += a[i] * b[j];
      }
    }
    return s;
  }

  friend TruncatedSeries operator*(const Coeff& c, const TruncatedSeries& a) {
    TruncatedSeries s(a.order());
    for (int k = 0; k <= s.order(); ++k) s[k] = c * a[k];
    return s;
  }

  // a / b by forward substitution. The constant term of b must be invertible
  // in Coeff (exactly divisible, for polynomial coefficients).
  friend TruncatedSeries operator/(const TruncatedSeries& a, const TruncatedSeries& b) {
    TruncatedSeries q(std::min(a.order(), b.order()));
    for (int k = 0; k <= q.order(); ++k) {
      Coeff acc = a[k];
      for (int j = 1; j <= k; ++j) {
        if (!detail::coeff_is_zero(b[j])) acc -= b[j] * q[k - j];
      }
      q[k] = detail::coeff_divide(acc, b[0]);
    }
    return q;
  }

  // f(t^2), keeping the order.
  TruncatedSeries substitute_square() const {
    TruncatedSeries s(order());
    for (int k = 0; 2 * k <= order(); ++k) s[2 * k] = (*this)[k];
    return s;
  }

  // Formal derivative; the order drops by one (the top term is unknown).
  TruncatedSeries derivative() const {
    TruncatedSeries s(std::max(order() - 1, 0));
    for (int k = 1; k <= order(); ++k) s[k - 1] = Rational(k) * (*this)[k];
    return s;
  }

  friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b) {
    return a.coeffs_ == b.coeffs_;
  }

 private:
  static int checked(int order) {
    if (order < 0) throw DomainError("series order must be nonnegative");
    return order;
  }

  std::vector<Coeff> coeffs_;
};

using Series = TruncatedSeries<Rational>;

/// Series in y with polynomial-in-x coefficients: coefficient (i, j) is the
/// x^i coefficient of the y^j term.
using BiSeries = TruncatedSeries<Poly>;

inline Rational coeff(const BiSeries& s, int x_power, int y_power) {
  return s[y_power].coeff(x_power);
}

// Largest x-degree among the stored y-coefficients (-1 for the zero series).
inline int x_degree(const BiSeries& s) {
  int d = -1;
  for (const auto& c : s.coeffs()) d = std::max(d, c.degree());
  return d;
}

// Lifts a rational series to a BiSeries with constant-in-x coefficients.
inline BiSeries lift(const Series& s) {
  BiSeries b(s.order());
  for (int k = 0; k <= s.order(); ++k) b[k] = Poly::constant(s[k]);
  return b;
}

// Rational series whose coefficients are a polynomial's (truncated at order).
inline Series as_series(const Poly& p, int order) {
  Series s(order);
  for (int k = 0; k <= std::min(order, p.degree()); ++k) s[k] = p.coeff(k);
  return s;
}

// C(y) = sum_m c_m y^m truncated after y^order. Together with
// sqrt(1 - 4y) = 1 - 2y C(y) this is the only form of the radical used.
inline Series catalan_series(int order) {
  Series s(order);
  for (int m = 0; m <= order; ++m) s[m] = Rational(comb::catalan(m));
  return s;
}

// 1 / (1 - t)^e truncated after t^order.
inline Series inverse_power_of_one_minus(int e, int order) {
  if (e < 0) throw DomainError("negative exponent");
  if (e == 0) return Series::constant(order, Rational{1});
  Series s(order);
  for (int k = 0; k <= order; ++k) s[k] = Rational(comb::binomial(k + e - 1, k));
  return s;
}

inline std::ostream& operator<<(std::ostream& os, const Series& s) {
  for (int k = 0; k <= s.order(); ++k) os << (k ? ", " : "[") << s[k];
  return os << "]";
}

}  // namespace cpeaks
