#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <json.hpp>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "rbell/rational.hpp"

namespace rbell {

enum class VarKind : std::uint8_t { A, B };

/// Indeterminate a_l or b_l, l >= 1. Ordered a_1 < b_1 < a_2 < b_2 < ...
struct VarId {
  VarKind kind = VarKind::A;
  std::uint32_t index = 1;

  constexpr std::uint64_t rank() const {
    return 2 * static_cast<std::uint64_t>(index) + (kind == VarKind::B ? 1 : 0);
  }
  friend constexpr bool operator==(VarId x, VarId y) { return x.rank() == y.rank(); }
  friend constexpr auto operator<=>(VarId x, VarId y) { return x.rank() <=> y.rank(); }
};

constexpr VarId var_a(std::uint32_t l) { return {VarKind::A, l}; }
constexpr VarId var_b(std::uint32_t l) { return {VarKind::B, l}; }

std::string to_string(VarId v);

class MissingVariable : public std::runtime_error {
 public:
  explicit MissingVariable(VarId v);
  VarId variable() const { return var_; }

 private:
  VarId var_;
};

/// Power product of indeterminates. Factors are sorted by variable and carry
/// exponents >= 1; the empty product is the unit monomial.
class Monomial {
 public:
  using Factor = std::pair<VarId, std::uint32_t>;

  Monomial() = default;
  explicit Monomial(VarId v, std::uint32_t exponent = 1);
  static Monomial from_factors(std::vector<Factor> factors);

  const std::vector<Factor>& factors() const { return factors_; }
  std::uint32_t exponent(VarId v) const;
  std::uint64_t degree() const;
  bool is_unit() const { return factors_.empty(); }

  friend Monomial operator*(const Monomial& x, const Monomial& y);
  friend bool operator==(const Monomial&, const Monomial&) = default;
  /// Graded: total degree first, then the factor lists lexicographically.
  friend std::strong_ordering operator<=>(const Monomial& x, const Monomial& y);

 private:
  std::vector<Factor> factors_;
};

/// Sparse multivariate polynomial over the rationals.
class Poly {
 public:
  using Terms = std::map<Monomial, Rational>;

  Poly() = default;
  Poly(const Rational& constant);  // NOLINT(google-explicit-constructor)
  Poly(long constant) : Poly(Rational(constant)) {}  // NOLINT(google-explicit-constructor)
  static Poly variable(VarId v);
  static Poly term(const Rational& coef, Monomial m);

  const Terms& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  /// Coefficient of the unit monomial.
  Rational constant_term() const;
  Rational coefficient(const Monomial& m) const;
  std::uint64_t degree() const;

  Poly& operator+=(const Poly& other);
  Poly& operator-=(const Poly& other);
  Poly& operator*=(const Poly& other);
  Poly& operator*=(const Rational& c);
  Poly& operator/=(const Rational& c);
  void add_term(const Rational& coef, const Monomial& m);

  friend Poly operator+(Poly x, const Poly& y) { return x += y; }
  friend Poly operator-(Poly x, const Poly& y) { return x -= y; }
  friend Poly operator-(Poly x) { return x *= Rational(-1); }
  friend Poly operator*(const Poly& x, const Poly& y);
  friend Poly operator*(Poly x, const Rational& c) { return x *= c; }
  friend Poly operator*(const Rational& c, Poly x) { return x *= c; }
  friend Poly operator/(Poly x, const Rational& c) { return x /= c; }
  friend bool operator==(const Poly&, const Poly&) = default;

 private:
  Terms terms_;
};

Poly pow(const Poly& base, unsigned exponent);

/// Formal partial derivative with respect to `v`.
Poly partial_derivative(const Poly& p, VarId v);

using Environment = std::map<VarId, Rational>;
/// Exact evaluation; throws MissingVariable when `env` lacks a variable of `p`.
Rational substitute(const Poly& p, const Environment& env);
/// Replaces only the variables bound in `env`; the others stay symbolic.
Poly substitute_partial(const Poly& p, const Environment& env);
/// Replaces each variable by a polynomial.
Poly substitute_poly(const Poly& p, const std::map<VarId, Poly>& env);

/// Human-readable form, e.g. "a2*b1 + 2*a1*b2".
std::string to_string(const Poly& p);

/// Canonical JSON: {"terms":[{"coef":{"num":..,"den":..},"vars":[["a",2,1],..]}]}.
nlohmann::json to_json(const Poly& p);
Poly poly_from_json(const nlohmann::json& j);

}  // namespace rbell
