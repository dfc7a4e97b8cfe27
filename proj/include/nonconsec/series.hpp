#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <vector>

#include "nonconsec/counting.hpp"

namespace nonconsec {

using Rational = boost::multiprecision::cpp_rational;

/// Truncated formal power series with exact rational coefficients. A series
/// of order N stores the coefficients of x^0 .. x^N. Binary operations
/// truncate to the smaller operand order.
class PowerSeries {
 public:
  /// The zero series of the given truncation order.
  explicit PowerSeries(int order);
  /// order = coeffs.size() - 1; coeffs must be nonempty.
  explicit PowerSeries(std::vector<Rational> coeffs);

  static PowerSeries constant(const Rational& c, int order);
  /// c * x^k, truncated at `order`.
  static PowerSeries monomial(const Rational& c, int k, int order);

  int order() const { return static_cast<int>(c_.size()) - 1; }
  const Rational& operator[](int i) const { return c_[static_cast<size_t>(i)]; }
  Rational& operator[](int i) { return c_[static_cast<size_t>(i)]; }

  PowerSeries truncated(int new_order) const;

  /// Exact division by x^k: drops the k lowest coefficients after verifying
  /// they vanish; throws internal_error otherwise. The order drops by k.
  PowerSeries shifted_down(int k) const;

  bool is_integral() const;

  /// Coefficients as exact integers; throws internal_error if any
  /// denominator is not 1 after reduction.
  std::vector<BigCount> integer_coefficients() const;

  PowerSeries scaled(const Rational& c) const;

  friend PowerSeries operator+(const PowerSeries& a, const PowerSeries& b);
  friend PowerSeries operator-(const PowerSeries& a, const PowerSeries& b);
  /// Cauchy product, truncated at the smaller operand order.
  friend PowerSeries operator*(const PowerSeries& a, const PowerSeries& b);

  friend bool operator==(const PowerSeries&, const PowerSeries&) = default;

 private:
  std::vector<Rational> c_;  // c_[i] is the coefficient of x^i
};

/// num / den up to the common truncation order. den must have a nonzero
/// constant term; otherwise invalid_input.
PowerSeries series_div(const PowerSeries& num, const PowerSeries& den);

/// The unique square root with constant term 1, by the direct coefficient
/// recurrence. s must have constant term 1; otherwise invalid_input.
PowerSeries series_sqrt(const PowerSeries& s);

/// outer(inner(x)), Horner-evaluated over the series ring. inner must have a
/// zero constant term; otherwise invalid_input.
PowerSeries series_compose(const PowerSeries& outer, const PowerSeries& inner);

/// Catalan generating function C(x) = sum_{m>=0} C_m x^m. Seeded from
/// catalan(), not from a square root, so the identity
/// (1 - sqrt(1-4x)) / (2x) = C(x) stays available as an independent check.
PowerSeries catalan_series(int order);

/// C*(x) = C(x) - 1, the Catalan series with C_0 omitted.
PowerSeries catalan_star_series(int order);

/// Coefficients of D(x) = C*(x) / (1 + x^2 - x C*(x)), indexed by n up to
/// n_terms; index 0 holds 0.
std::vector<BigCount> gf_d_coefficients(int n_terms);

/// Coefficients of the 321 generating function
///   C*(x) / (1 - x/(1+x^2) * C*(x)),
/// indexed by n up to n_terms; index 0 holds 0. Integrality is asserted.
std::vector<BigCount> gf_321_coefficients(int n_terms);

enum class Gf132Method { composition, closed_form };

/// Coefficients e_0..e_N of the 132 generating function, either by composing
/// C(x + x^3) or by the closed form (1 - sqrt(1 - 4x - 4x^3)) / (2(x + x^3)),
/// whose numerator vanishes at order 0 and is divided out exactly. The two
/// methods return identical coefficients.
std::vector<BigCount> gf_132_coefficients(int n_terms, Gf132Method method);

}  // namespace nonconsec
