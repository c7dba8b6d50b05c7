#include "rbell/calculus.hpp"

#include "rbell/families.hpp"
#include "rbell/rbell.hpp"
#include "rbell/series.hpp"

namespace rbell {

namespace {

std::vector<Poly> to_polys(const std::vector<Rational>& v) { return {v.begin(), v.end()}; }

VarSeq from_index(const std::vector<Poly>& v) {
  return VarSeq([&v](unsigned l) { return v.at(l); });
}

Poly unit_e() { return Poly::variable(var_a(kAuxIndex)); }
Poly unit_u() { return Poly::variable(var_b(kAuxIndex)); }

}  // namespace

JetSpec JetSpec::from_rationals(const std::vector<Rational>& f, const std::vector<Rational>& g,
                                const std::vector<Rational>& h) {
  return {to_polys(f), to_polys(g), to_polys(h)};
}

void JetSpec::validate(unsigned n, unsigned r) const {
  if (!g.empty() && g[0] != Poly{}) throw InvalidJet("g_0 must be 0: G has no constant term at the point");
  auto need = [n](const std::vector<Poly>& v, std::size_t size, const char* name) {
    if (v.size() < size) {
      throw OrderTooLow("derivative of order " + std::to_string(n) + " needs " + std::to_string(size) + " entries of " +
                        name + ", got " + std::to_string(v.size()));
    }
  };
  need(f, n + 1, "f");
  need(g, n + 1, "g");
  if (r > 0) need(h, n + 2, "h");
}

Poly derivative_via_rbell(unsigned n, unsigned r, const JetSpec& jet) {
  jet.validate(n, r);
  const VarSeq g = from_index(jet.g);
  const VarSeq h = from_index(jet.h);
  Poly sum;
  for (unsigned k = 0; k <= n; ++k) {
    if (jet.f[k] == Poly{}) continue;
    sum += jet.f[k] * rbell_egf(RBellQuery{n, k, r, g, h});
  }
  return sum;
}

Poly derivative_via_series(unsigned n, unsigned r, const JetSpec& jet) {
  jet.validate(n, r);
  const int order = static_cast<int>(n);
  Series g(order);
  for (int j = 1; j <= order; ++j) g[j] = jet.g[j] / Rational(factorial(j));
  Series dh = Series::one(order);
  if (r > 0) {
    Series h(order + 1);
    for (int j = 1; j <= order + 1; ++j) h[j] = jet.h[j] / Rational(factorial(j));
    dh = pow(derivative(h), r);
  }
  const std::vector<Poly> outer(jet.f.begin(), jet.f.begin() + order + 1);
  return (dh * compose_taylor(outer, g)).egf_coefficient(order);
}

JetSpec whitney_exp_jet(unsigned m, unsigned n) {
  JetSpec jet;
  jet.f.assign(n + 1, Poly(1));
  jet.g.assign(n + 1, Poly{});
  for (unsigned j = 1; j <= n; ++j) jet.g[j] = unit_e() * power(Rational(m), j - 1);
  jet.h.assign(n + 2, unit_u());
  jet.h[0] = Poly{};
  return jet;
}

IdentityReport whitney_exp_identity(unsigned m, unsigned r, unsigned n, const Rational& a0) {
  const NumberTable w = table_via_egf(SeqSpec{Family::RWhitney2, r, m}, n);
  Poly rhs;
  for (unsigned k = 0; k <= n; ++k) rhs += Poly(Rational(w.at(n, k))) * pow(unit_e(), k);
  rhs *= pow(unit_u(), r);

  const JetSpec jet = whitney_exp_jet(m, n);
  const Poly via_rbell = derivative_via_rbell(n, r, jet);
  const Poly via_series = derivative_via_series(n, r, jet);

  IdentityReport report;
  const std::string name = "exp-Whitney m=" + std::to_string(m) + " r=" + std::to_string(r) + " n=" + std::to_string(n);
  report.add(name + ": r-Bell route = U^r sum_k W(n,k) E^k", via_rbell == rhs,
             via_rbell == rhs ? to_string(rhs) : to_string(via_rbell - rhs));
  report.add(name + ": series route = U^r sum_k W(n,k) E^k", via_series == rhs,
             via_series == rhs ? to_string(rhs) : to_string(via_series - rhs));
  if (a0 == 0) {
    const std::map<VarId, Rational> units{{var_a(kAuxIndex), Rational(1)}, {var_b(kAuxIndex), Rational(1)}};
    const Rational left = substitute(via_rbell, units);
    Rational right = 0;
    for (unsigned k = 0; k <= n; ++k) right += Rational(w.at(n, k));
    report.add(name + ": value at a0 = 0", left == right, to_string(left) + " vs " + to_string(right));
  }
  return report;
}

}  // namespace rbell
