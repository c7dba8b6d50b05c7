#pragma once

#include <stdexcept>
#include <vector>

#include "rbell/poly.hpp"
#include "rbell/report.hpp"

namespace rbell {

class OrderTooLow : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class InvalidJet : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Taylor data at a point, every array indexed from 0:
///   f[k] = F^{(k)}(G(a)),  g[j] = G^{(j)}(a) with g[0] = 0,  h[j] = H^{(j)}(a).
/// Entries are polynomials so that a jet may carry formal units.
struct JetSpec {
  std::vector<Poly> f;
  std::vector<Poly> g;
  std::vector<Poly> h;  // h[0] is never read

  static JetSpec from_rationals(const std::vector<Rational>& f, const std::vector<Rational>& g,
                                const std::vector<Rational>& h);

  /// Throws InvalidJet if g[0] != 0, OrderTooLow if the arrays are too short
  /// for the n-th derivative (f, g need n+1 entries; h needs n+2 when r > 0).
  void validate(unsigned n, unsigned r) const;
};

/// d^n/dx^n [ H'(x)^r F(G(x)) ] at a, as sum_k f_k B^{(r)}_{n+r,k+r}(g; h).
Poly derivative_via_rbell(unsigned n, unsigned r, const JetSpec& jet);

/// Same derivative from truncated series: n! [t^n] of (H')^r times F o G.
Poly derivative_via_series(unsigned n, unsigned r, const JetSpec& jet);

/// d^n/da^n exp(e^{ma}/m + ra) = exp(e^{ma}/m + ra) sum_k W_{m,r}(n,k) e^{mak}, checked as a
/// polynomial identity in the formal units E = e^{m a0} and U = e^{a0}. At a0 = 0 the
/// units are also set to 1 and the plain sums compared.
IdentityReport whitney_exp_identity(unsigned m, unsigned r, unsigned n, const Rational& a0);

/// Jet of the previous identity: f_k = 1, g_j = m^{j-1} E, h_j = U, with E and U
/// the indeterminates a_{kAuxIndex} and b_{kAuxIndex}.
JetSpec whitney_exp_jet(unsigned m, unsigned n);

}  // namespace rbell
