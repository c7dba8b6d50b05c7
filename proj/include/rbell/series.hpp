#pragma once

#include <stdexcept>
#include <vector>

#include "rbell/poly.hpp"

namespace rbell {

class NonzeroConstantTerm : public std::domain_error {
 public:
  NonzeroConstantTerm() : std::domain_error("series has a nonzero constant term") {}
};

/// Power series in t truncated after t^order. Coefficients are the plain
/// coefficients of t^n; exponential normalisation is left to callers.
class Series {
 public:
  explicit Series(int order);
  explicit Series(std::vector<Poly> coeffs);

  static Series one(int order);
  /// t truncated at `order`.
  static Series t(int order);
  /// Series whose n-th coefficient is rule(n)/n!.
  template <typename Rule>
  static Series exponential(int order, Rule&& rule) {
    Series s(order);
    for (int n = 0; n <= order; ++n) {
      s.coeffs_[n] = Poly(rule(n)) / Rational(factorial(static_cast<unsigned>(n)));
    }
    return s;
  }

  int order() const { return static_cast<int>(coeffs_.size()) - 1; }
  const Poly& operator[](int n) const { return coeffs_.at(static_cast<std::size_t>(n)); }
  Poly& operator[](int n) { return coeffs_.at(static_cast<std::size_t>(n)); }
  const std::vector<Poly>& coeffs() const { return coeffs_; }

  /// n! * [t^n], the exponential coefficient.
  Poly egf_coefficient(int n) const;

  Series truncated(int order) const;

  Series& operator+=(const Series& other);
  Series& operator-=(const Series& other);
  Series& operator*=(const Rational& c);
  friend Series operator+(Series x, const Series& y) { return x += y; }
  friend Series operator-(Series x, const Series& y) { return x -= y; }
  friend Series operator*(Series x, const Rational& c) { return x *= c; }
  /// Truncates at min(x.order(), y.order()).
  friend Series operator*(const Series& x, const Series& y);
  friend bool operator==(const Series&, const Series&) = default;

 private:
  std::vector<Poly> coeffs_;
};

/// f^k truncated at f.order(); k = 0 gives the unit series.
Series pow(const Series& f, unsigned k);

/// exp(g) for g with zero constant term; throws NonzeroConstantTerm otherwise.
Series exp(const Series& g);

/// Termwise d/dt; the result has order f.order() - 1.
Series derivative(const Series& f);

/// F(g) = sum_k outer[k]/k! * g^k for g with zero constant term, where
/// outer holds the Taylor data F(0), F'(0), ...; terms beyond outer.size()
/// are treated as zero.
Series compose_taylor(const std::vector<Poly>& outer, const Series& g);

}  // namespace rbell
