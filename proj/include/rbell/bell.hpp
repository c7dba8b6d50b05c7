#pragma once

#include <functional>
#include <string>
#include <vector>

#include "rbell/poly.hpp"

namespace rbell {

/// Weight sequence l -> x_l for l >= 1. Entries are polynomials so symbolic
/// and numeric evaluation share one code path.
class VarSeq {
 public:
  using Rule = std::function<Poly(unsigned)>;

  VarSeq() = default;
  explicit VarSeq(Rule rule) : rule_(std::move(rule)) {}

  /// The indeterminates a_l or b_l.
  static VarSeq symbolic(VarKind kind);
  /// Concrete values x_1, x_2, ...; indexing past the end throws MissingVariable.
  static VarSeq values(std::vector<Rational> values, VarKind kind = VarKind::A);
  static VarSeq rational_rule(std::function<Rational(unsigned)> rule);
  static VarSeq constant(const Rational& c);

  Poly operator()(unsigned l) const { return rule_(l); }

  /// l -> f(l) * x_l.
  VarSeq scaled(std::function<Rational(unsigned)> factor) const;
  /// l -> c * x_l.
  VarSeq times(const Poly& c) const;
  /// Same sequence with the entry at index `l` replaced by zero.
  VarSeq with_zero_at(unsigned l) const;

 private:
  Rule rule_;
};

/// B_{n,k}(x) summed over pi(n,k): n!/(k_1!...k_n!) prod (x_i/i!)^{k_i}.
/// Zero when k > n; B_{0,0} = 1.
Poly bell_explicit(unsigned n, unsigned k, const VarSeq& x);

/// n! [t^n] (1/k!) (sum_{m>=1} x_m t^m/m!)^k.
Poly bell_egf(unsigned n, unsigned k, const VarSeq& x);

enum class ClassicFamily { Stirling1Unsigned, Stirling2, Lah, Idempotent };

/// The four classical specialisations of B_{n,k}; throws NonIntegerResult on
/// a non-integral value.
Integer classic_number(ClassicFamily family, unsigned n, unsigned k);

}  // namespace rbell
