#pragma once

#include <algorithm>
#include <initializer_list>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "cpeaks/errors.hpp"
#include "cpeaks/exact/comb.hpp"
#include "cpeaks/exact/rational.hpp"

namespace cpeaks {

/// Dense univariate polynomial with exact rational coefficients.
///
/// Coefficients are stored low-to-high; the highest stored coefficient is
/// nonzero unless the polynomial is zero, in which case storage is empty.
class Poly {
 public:
  Poly() = default;

  Poly(std::initializer_list<Rational> coeffs) : coeffs_(coeffs) { trim(); }

  explicit Poly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
    trim();
  }

  static Poly constant(const Rational& c) { return Poly(std::vector<Rational>{c}); }

  // c * x^k
  static Poly monomial(const Rational& c, int k) {
    std::vector<Rational> v(static_cast<std::size_t>(k) + 1);
    v.back() = c;
    return Poly(std::move(v));
  }

  static Poly x() { return monomial(Rational{1}, 1); }

  bool is_zero() const noexcept { return coeffs_.empty(); }

  // Degree; -1 for the zero polynomial.
  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }

  // Coefficient of x^k, zero outside the stored range.
  Rational coeff(int k) const {
    if (k < 0 || k > degree()) return Rational{0};
    return coeffs_[static_cast<std::size_t>(k)];
  }

  const std::vector<Rational>& coeffs() const noexcept { return coeffs_; }

  Rational leading() const { return is_zero() ? Rational{0} : coeffs_.back(); }

  bool has_integer_coeffs() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(),
                       [](const Rational& c) { return is_integral(c); });
  }

  // Horner evaluation.
  Rational operator()(const Rational& t) const {
    Rational acc{0};
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * t + *it;
    return acc;
  }

  Poly& operator+=(const Poly& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] += o.coeffs_[k];
    trim();
    return *this;
  }

  Poly& operator-=(const Poly& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] -= o.coeffs_[k];
    trim();
    return *this;
  }

  Poly& operator*=(const Rational& c) {
    for (auto& a : coeffs_) a *= c;
    trim();
    return *this;
  }

  Poly& operator/=(const Rational& c) {
    if (c == 0) throw ArithmeticError("polynomial division by zero scalar");
    for (auto& a : coeffs_) a /= c;
    return *this;
  }

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator-(Poly a) {
    for (auto& c : a.coeffs_) c = -c;
    return a;
  }
  friend Poly operator*(Poly a, const Rational& c) { return a *= c; }
  friend Poly operator*(const Rational& c, Poly a) { return a *= c; }
  friend Poly operator/(Poly a, const Rational& c) { return a /= c; }

  friend Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Rational> r(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
      if (a.coeffs_[i] == 0) continue;
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j) r[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return Poly(std::move(r));
  }
  Poly& operator*=(const Poly& o) { return *this = *this * o; }

  friend bool operator==(const Poly& a, const Poly& b) { return a.coeffs_ == b.coeffs_; }

  // Multiplies by x^k (k >= 0).
  Poly shifted_up(int k) const {
    if (is_zero()) return {};
    std::vector<Rational> v(static_cast<std::size_t>(k), Rational{0});
    v.insert(v.end(), coeffs_.begin(), coeffs_.end());
    return Poly(std::move(v));
  }

  Poly derivative() const {
    std::vector<Rational> v;
    for (std::size_t k = 1; k < coeffs_.size(); ++k) v.push_back(coeffs_[k] * static_cast<long>(k));
    return Poly(std::move(v));
  }

  // p(x + c), expanded binomially.
  Poly translated(const Rational& c) const {
    std::vector<Rational> r(coeffs_.size());
    for (std::size_t k = 0; k < coeffs_.size(); ++k) {
      if (coeffs_[k] == 0) continue;
      for (std::size_t j = 0; j <= k; ++j) {
        const int kk = static_cast<int>(k);
        const int jj = static_cast<int>(j);
        r[j] += coeffs_[k] * Rational(comb::binomial(kk, jj)) * pow(c, static_cast<unsigned>(kk - jj));
      }
    }
    return Poly(std::move(r));
  }

  // x^deg * p(1/x) for the given deg >= degree(): coefficient order reversed.
  Poly reversed(int deg) const {
    if (deg < degree()) throw DomainError("reversal degree below polynomial degree");
    std::vector<Rational> r(static_cast<std::size_t>(deg) + 1);
    for (int k = 0; k <= degree(); ++k) r[static_cast<std::size_t>(deg - k)] = coeffs_[static_cast<std::size_t>(k)];
    return Poly(std::move(r));
  }

  // Truncation to degree < k.
  Poly truncated(int k) const {
    if (k >= static_cast<int>(coeffs_.size())) return *this;
    return Poly(std::vector<Rational>(coeffs_.begin(), coeffs_.begin() + std::max(k, 0)));
  }

  std::string to_string(char var = 'x') const;

 private:
  void trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
  }

  std::vector<Rational> coeffs_;
};

// Long division: returns (quotient, remainder) with deg remainder < deg divisor.
inline std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) {
  if (b.is_zero()) throw ArithmeticError("polynomial division by zero");
  std::vector<Rational> rem = a.coeffs();
  const int db = b.degree();
  const int da = a.degree();
  if (da < db) return {Poly{}, a};
  std::vector<Rational> quot(static_cast<std::size_t>(da - db) + 1);
  const Rational lead = b.leading();
  for (int k = da - db; k >= 0; --k) {
    const Rational q = rem[static_cast<std::size_t>(k + db)] / lead;
    quot[static_cast<std::size_t>(k)] = q;
    if (q == 0) continue;
    for (int j = 0; j <= db; ++j) rem[static_cast<std::size_t>(k + j)] -= q * b.coeff(j);
  }
  rem.resize(static_cast<std::size_t>(db));
  return {Poly(std::move(quot)), Poly(std::move(rem))};
}

// a / b, throwing ArithmeticError unless b divides a exactly.
inline Poly divide_exact(const Poly& a, const Poly& b) {
  auto [q, r] = divmod(a, b);
  if (!r.is_zero()) {
    throw ArithmeticError("(" + a.to_string() + ") is not divisible by (" + b.to_string() + ")");
  }
  return q;
}

inline Poly pow(const Poly& base, unsigned exponent) {
  Poly r = Poly::constant(Rational{1});
  for (unsigned k = 0; k < exponent; ++k) r *= base;
  return r;
}

inline std::string Poly::to_string(char var) const {
  if (is_zero()) return "0";
  std::string out;
  for (int k = degree(); k >= 0; --k) {
    const Rational& c = coeffs_[static_cast<std::size_t>(k)];
    if (c == 0) continue;
    const bool neg = c < 0;
    const Rational mag = neg ? Rational(-c) : c;
    if (out.empty()) {
      if (neg) out += "-";
    } else {
      out += neg ? " - " : " + ";
    }
    if (k == 0 || mag != 1) {
      const bool wrap = !is_integral(mag) && k != 0;
      out += wrap ? "(" + mag.str() + ")" : mag.str();
    }
    if (k >= 1) out += var;
    if (k >= 2) out += "^" + std::to_string(k);
  }
  return out;
}

inline std::ostream& operator<<(std::ostream& os, const Poly& p) { return os << p.to_string(); }

}  // namespace cpeaks
