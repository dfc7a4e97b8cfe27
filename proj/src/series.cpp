#include "nonconsec/series.hpp"

#include <algorithm>

#include "nonconsec/perm.hpp"

namespace nonconsec {

PowerSeries::PowerSeries(int order) {
  if (order < 0) throw invalid_input("series order must be nonnegative");
  c_.assign(static_cast<size_t>(order) + 1, Rational(0));
}

PowerSeries::PowerSeries(std::vector<Rational> coeffs) : c_(std::move(coeffs)) {
  if (c_.empty()) throw invalid_input("series needs at least the constant coefficient");
}

PowerSeries PowerSeries::constant(const Rational& c, int order) {
  PowerSeries s(order);
  s.c_[0] = c;
  return s;
}

PowerSeries PowerSeries::monomial(const Rational& c, int k, int order) {
  if (k < 0) throw invalid_input("monomial degree must be nonnegative");
  PowerSeries s(order);
  if (k <= order) s.c_[static_cast<size_t>(k)] = c;
  return s;
}

PowerSeries PowerSeries::truncated(int new_order) const {
  if (new_order < 0 || new_order > order())
    throw invalid_input("truncation order out of range");
  return PowerSeries(std::vector<Rational>(c_.begin(), c_.begin() + new_order + 1));
}

PowerSeries PowerSeries::shifted_down(int k) const {
  if (k < 0 || k > order()) throw invalid_input("shift amount out of range");
  for (int i = 0; i < k; ++i)
    if (c_[static_cast<size_t>(i)] != 0)
      throw internal_error("coefficient of x^" + std::to_string(i) +
                           " does not vanish; cannot divide by x^" + std::to_string(k));
  return PowerSeries(std::vector<Rational>(c_.begin() + k, c_.end()));
}

bool PowerSeries::is_integral() const {
  return std::all_of(c_.begin(), c_.end(),
                     [](const Rational& r) { return denominator(r) == 1; });
}

std::vector<BigCount> PowerSeries::integer_coefficients() const {
  std::vector<BigCount> out;
  out.reserve(c_.size());
  for (size_t i = 0; i < c_.size(); ++i) {
    if (denominator(c_[i]) != 1)
      throw internal_error("coefficient of x^" + std::to_string(i) +
                           " is not an integer: " + c_[i].str());
    out.push_back(numerator(c_[i]));
  }
  return out;
}

PowerSeries PowerSeries::scaled(const Rational& c) const {
  PowerSeries s = *this;
  for (auto& v : s.c_) v *= c;
  return s;
}

PowerSeries operator+(const PowerSeries& a, const PowerSeries& b) {
  const int n = std::min(a.order(), b.order());
  PowerSeries s(n);
  for (int i = 0; i <= n; ++i) s[i] = a[i] + b[i];
  return s;
}

PowerSeries operator-(const PowerSeries& a, const PowerSeries& b) {
  const int n = std::min(a.order(), b.order());
  PowerSeries s(n);
  for (int i = 0; i <= n; ++i) s[i] = a[i] - b[i];
  return s;
}

PowerSeries operator*(const PowerSeries& a, const PowerSeries& b) {
  const int n = std::min(a.order(), b.order());
  PowerSeries s(n);
  for (int i = 0; i <= n; ++i)
    for (int j = 0; i + j <= n; ++j) s[i + j] += a[i] * b[j];
  return s;
}

PowerSeries series_div(const PowerSeries& num, const PowerSeries& den) {
  const int n = std::min(num.order(), den.order());
  if (den[0] == 0) throw invalid_input("series division needs a nonzero constant term");
  PowerSeries q(n);
  for (int i = 0; i <= n; ++i) {
    Rational acc = num[i];
    for (int j = 1; j <= i; ++j) acc -= den[j] * q[i - j];
    q[i] = acc / den[0];
  }
  return q;
}

PowerSeries series_sqrt(const PowerSeries& s) {
  if (s[0] != 1) throw invalid_input("series sqrt needs constant term 1");
  const int n = s.order();
  PowerSeries r(n);
  r[0] = 1;
  for (int i = 1; i <= n; ++i) {
    Rational acc = s[i];
    for (int j = 1; j <= i - 1; ++j) acc -= r[j] * r[i - j];
    r[i] = acc / 2;
  }
  return r;
}

PowerSeries series_compose(const PowerSeries& outer, const PowerSeries& inner) {
  if (inner[0] != 0) throw invalid_input("series composition needs inner constant term 0");
  const int n = std::min(outer.order(), inner.order());
  PowerSeries acc = PowerSeries::constant(outer[outer.order()], n);
  for (int i = outer.order() - 1; i >= 0; --i) {
    acc = acc * inner;
    acc[0] += outer[i];
  }
  return acc;
}

PowerSeries catalan_series(int order) {
  PowerSeries s(order);
  for (int i = 0; i <= order; ++i) s[i] = Rational(catalan(i));
  return s;
}

PowerSeries catalan_star_series(int order) {
  PowerSeries s = catalan_series(order);
  s[0] = 0;
  return s;
}

std::vector<BigCount> gf_d_coefficients(int n_terms) {
  if (n_terms < 1) throw invalid_input("gf_d_coefficients needs n_terms >= 1");
  const PowerSeries cs = catalan_star_series(n_terms);
  const PowerSeries x = PowerSeries::monomial(1, 1, n_terms);
  PowerSeries den = PowerSeries::constant(1, n_terms) +
                    PowerSeries::monomial(1, 2, n_terms) - x * cs;
  return series_div(cs, den).integer_coefficients();
}

std::vector<BigCount> gf_321_coefficients(int n_terms) {
  if (n_terms < 1) throw invalid_input("gf_321_coefficients needs n_terms >= 1");
  const PowerSeries cs = catalan_star_series(n_terms);
  const PowerSeries x = PowerSeries::monomial(1, 1, n_terms);
  const PowerSeries one_plus_x2 =
      PowerSeries::constant(1, n_terms) + PowerSeries::monomial(1, 2, n_terms);
  const PowerSeries ratio = series_div(x, one_plus_x2);
  const PowerSeries den = PowerSeries::constant(1, n_terms) - ratio * cs;
  return series_div(cs, den).integer_coefficients();
}

std::vector<BigCount> gf_132_coefficients(int n_terms, Gf132Method method) {
  if (n_terms < 0) throw invalid_input("gf_132_coefficients needs n_terms >= 0");
  if (method == Gf132Method::composition) {
    const PowerSeries c = catalan_series(n_terms);
    const PowerSeries inner =
        PowerSeries::monomial(1, 1, n_terms) + PowerSeries::monomial(1, 3, n_terms);
    return series_compose(c, inner).integer_coefficients();
  }
  // Closed form: the numerator 1 - sqrt(1 - 4x - 4x^3) vanishes at order 0,
  // so one power of x cancels against the denominator 2(x + x^3). Work one
  // order higher so the shift still leaves n_terms coefficients.
  const int work = n_terms + 1;
  const PowerSeries under = PowerSeries::constant(1, work) -
                            PowerSeries::monomial(4, 1, work) -
                            PowerSeries::monomial(4, 3, work);
  const PowerSeries num = PowerSeries::constant(1, work) - series_sqrt(under);
  const PowerSeries shifted = num.shifted_down(1);
  const PowerSeries den =
      PowerSeries::constant(2, n_terms) + PowerSeries::monomial(2, 2, n_terms);
  return series_div(shifted, den).integer_coefficients();
}

}  // namespace nonconsec
