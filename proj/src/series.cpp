#include "rbell/series.hpp"

#include <algorithm>

namespace rbell {

Series::Series(int order) : coeffs_(static_cast<std::size_t>(std::max(order, 0)) + 1) {
  if (order < 0) throw std::invalid_argument("series order must be >= 0");
}

Series::Series(std::vector<Poly> coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) throw std::invalid_argument("series needs at least one coefficient");
}

Series Series::one(int order) {
  Series s(order);
  s.coeffs_[0] = Poly(1L);
  return s;
}

Series Series::t(int order) {
  Series s(order);
  if (order >= 1) s.coeffs_[1] = Poly(1L);
  return s;
}

Poly Series::egf_coefficient(int n) const {
  if (n < 0 || n > order()) return Poly{};
  return (*this)[n] * Rational(factorial(static_cast<unsigned>(n)));
}

Series Series::truncated(int order) const {
  Series s(order);
  for (int n = 0; n <= std::min(order, this->order()); ++n) s.coeffs_[n] = coeffs_[n];
  return s;
}

Series& Series::operator+=(const Series& other) {
  coeffs_.resize(static_cast<std::size_t>(std::min(order(), other.order())) + 1);
  for (int n = 0; n <= order(); ++n) coeffs_[n] += other.coeffs_[n];
  return *this;
}

Series& Series::operator-=(const Series& other) {
  coeffs_.resize(static_cast<std::size_t>(std::min(order(), other.order())) + 1);
  for (int n = 0; n <= order(); ++n) coeffs_[n] -= other.coeffs_[n];
  return *this;
}

Series& Series::operator*=(const Rational& c) {
  for (auto& p : coeffs_) p *= c;
  return *this;
}

Series operator*(const Series& x, const Series& y) {
  const int order = std::min(x.order(), y.order());
  Series out(order);
  for (int i = 0; i <= order; ++i) {
    if (x.coeffs_[i].is_zero()) continue;
    for (int j = 0; i + j <= order; ++j) {
      if (y.coeffs_[j].is_zero()) continue;
      out.coeffs_[i + j] += x.coeffs_[i] * y.coeffs_[j];
    }
  }
  return out;
}

Series pow(const Series& f, unsigned k) {
  Series result = Series::one(f.order());
  Series square = f;
  while (k > 0) {
    if (k & 1U) result = result * square;
    k >>= 1U;
    if (k > 0) square = square * square;
  }
  return result;
}

// h = exp(g) satisfies h' = g' h, i.e. n h_n = sum_{j=1}^{n} j g_j h_{n-j}.
Series exp(const Series& g) {
  if (!g[0].is_zero()) throw NonzeroConstantTerm();
  Series h(g.order());
  h[0] = Poly(1L);
  for (int n = 1; n <= g.order(); ++n) {
    Poly acc;
    for (int j = 1; j <= n; ++j) {
      if (g[j].is_zero()) continue;
      acc += g[j] * h[n - j] * Rational(j);
    }
    h[n] = acc / Rational(n);
  }
  return h;
}

Series derivative(const Series& f) {
  if (f.order() == 0) return Series(0);
  Series d(f.order() - 1);
  for (int n = 1; n <= f.order(); ++n) d[n - 1] = f[n] * Rational(n);
  return d;
}

Series compose_taylor(const std::vector<Poly>& outer, const Series& g) {
  if (!g[0].is_zero()) throw NonzeroConstantTerm();
  Series out(g.order());
  Series g_power = Series::one(g.order());
  for (std::size_t k = 0; k < outer.size() && static_cast<int>(k) <= g.order(); ++k) {
    if (k > 0) g_power = g_power * g;
    if (outer[k].is_zero()) continue;
    const Poly scale = outer[k] / Rational(factorial(static_cast<unsigned>(k)));
    for (int n = 0; n <= g.order(); ++n) {
      if (!g_power[n].is_zero()) out[n] += scale * g_power[n];
    }
  }
  return out;
}

}  // namespace rbell
