#include "rbell/bell.hpp"

#include "rbell/enumerate.hpp"
#include "rbell/series.hpp"

namespace rbell {

VarSeq VarSeq::symbolic(VarKind kind) {
  return VarSeq([kind](unsigned l) { return Poly::variable(VarId{kind, l}); });
}

VarSeq VarSeq::values(std::vector<Rational> values, VarKind kind) {
  return VarSeq([vals = std::move(values), kind](unsigned l) -> Poly {
    if (l == 0 || l > vals.size()) throw MissingVariable(VarId{kind, l});
    return Poly(vals[l - 1]);
  });
}

VarSeq VarSeq::rational_rule(std::function<Rational(unsigned)> rule) {
  return VarSeq([rule = std::move(rule)](unsigned l) { return Poly(rule(l)); });
}

VarSeq VarSeq::constant(const Rational& c) {
  return VarSeq([c](unsigned) { return Poly(c); });
}

VarSeq VarSeq::scaled(std::function<Rational(unsigned)> factor) const {
  return VarSeq([base = rule_, factor = std::move(factor)](unsigned l) {
    const Rational f = factor(l);
    return f == 0 ? Poly{} : base(l) * f;
  });
}

VarSeq VarSeq::times(const Poly& c) const {
  return VarSeq([base = rule_, c](unsigned l) { return c * base(l); });
}

VarSeq VarSeq::with_zero_at(unsigned index) const {
  return VarSeq([base = rule_, index](unsigned l) { return l == index ? Poly{} : base(l); });
}

Poly bell_explicit(unsigned n, unsigned k, const VarSeq& x) {
  if (k > n) return Poly{};
  std::vector<Poly> scaled;  // x_i / i!
  scaled.reserve(n);
  for (unsigned i = 1; i <= n && i <= n - k + 1; ++i) {
    scaled.push_back(x(i) / Rational(factorial(i)));
  }
  Poly out;
  for_each_pi(n, k, [&](const PiIndex& idx) {
    Integer weight = factorial(n);
    for (unsigned c : idx.k) weight /= factorial(c);
    Poly term{Rational(weight)};
    for (unsigned i = 0; i < idx.k.size(); ++i) {
      if (idx.k[i] > 0) term *= pow(scaled[i], idx.k[i]);
    }
    out += term;
  });
  return out;
}

Poly bell_egf(unsigned n, unsigned k, const VarSeq& x) {
  if (k > n) return Poly{};
  if (k == 0) return n == 0 ? Poly(1L) : Poly{};
  Series inner(static_cast<int>(n));
  for (unsigned m = 1; m <= n; ++m) {
    // Sizes above n-k+1 cannot occur in a k-block partition of n.
    if (m <= n - k + 1) inner[static_cast<int>(m)] = x(m) / Rational(factorial(m));
  }
  const Series power = pow(inner, k);
  return power.egf_coefficient(static_cast<int>(n)) / Rational(factorial(k));
}

Integer classic_number(ClassicFamily family, unsigned n, unsigned k) {
  VarSeq x;
  switch (family) {
    case ClassicFamily::Stirling1Unsigned:
      x = VarSeq::rational_rule([](unsigned l) { return Rational(factorial(l - 1)); });
      break;
    case ClassicFamily::Stirling2:
      x = VarSeq::constant(1);
      break;
    case ClassicFamily::Lah:
      x = VarSeq::rational_rule([](unsigned l) { return Rational(factorial(l)); });
      break;
    case ClassicFamily::Idempotent:
      x = VarSeq::rational_rule([](unsigned l) { return Rational(l); });
      break;
  }
  return to_integer(bell_egf(n, k, x).constant_term(), "classic_number");
}

}  // namespace rbell
