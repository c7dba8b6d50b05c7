#pragma once

#include <cstdint>
#include <functional>
#include <json.hpp>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "rbell/rational.hpp"
#include "rbell/report.hpp"

namespace rbell {

class InvalidDistribution : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

using MomentRule = std::function<Rational(unsigned)>;

/// Moment sequences mu_j = E(X^j) and nu_j = E(Y^j).
struct MomentSpec {
  MomentRule mu;
  MomentRule nu;

  /// Moments listed from index 0; asking for an index past the end throws
  /// InvalidDistribution.
  static MomentSpec from_lists(std::vector<Rational> mu, std::vector<Rational> nu);
  /// Throws InvalidDistribution unless mu_0 = nu_0 = 1.
  void validate() const;
};

/// Finitely supported laws: p[j] = P(X = j), q[j] = P(Y = j).
struct PmfSpec {
  std::vector<Rational> p;
  std::vector<Rational> q;

  /// Non-negative entries summing to one, for both laws.
  void validate() const;
};

/// E(S^n) for S = X_1 + ... + X_p + Y_1 + ... + Y_q, all independent:
/// C(n+p, p)^{-1} B^{(q)}_{n+p+q, p+q}(l mu_{l-1}; nu_{l-1}).
Rational moment_of_sum(unsigned p, unsigned q, unsigned n, const MomentSpec& spec);

/// P(S = n): p!/(n+p)! B^{(q)}_{n+p+q, p+q}(l! p_{l-1}; (l-1)! q_{l-1}).
Rational pmf_of_sum(unsigned p, unsigned q, unsigned n, const PmfSpec& spec);

/// Largest value S can take.
unsigned support_max(unsigned p, unsigned q, const PmfSpec& spec);

// Independent oracles.

/// Multinomial expansion of (X_1 + ... + Y_q)^n with E(prod X_i^{e_i}) = prod mu_{e_i}.
Rational moment_oracle(unsigned p, unsigned q, unsigned n, const MomentSpec& spec);

/// p-fold and q-fold discrete convolution of the two laws, read at n.
Rational pmf_oracle(unsigned p, unsigned q, unsigned n, const PmfSpec& spec);

/// {n+p+r, p+r}_r against C(n+p, p) E((U_1 + ... + U_p + r)^n) with U uniform on (0,1).
IdentityReport rstirling_uniform_identity(unsigned p, unsigned r, unsigned n);

/// A law with exact moments and a sampler, for the Monte Carlo harness.
struct Distribution {
  std::string name;
  MomentRule moment;
  std::function<double(std::mt19937_64&)> sample;

  static Distribution uniform01();
  static Distribution constant(const Rational& c);
  static Distribution bernoulli(const Rational& success);
  /// P(X = j) = pmf[j].
  static Distribution discrete(std::vector<Rational> pmf);
};

struct MonteCarloResult {
  unsigned p = 0, q = 0, n = 0;
  std::uint64_t trials = 0;
  std::uint64_t seed = 0;
  Rational exact;
  double mean = 0.0;
  double standard_error = 0.0;
  /// |mean - exact| / standard_error, or 0 when both the error and the deviation vanish.
  double z = 0.0;
  bool passed = false;

  nlohmann::json to_json() const;
};

inline constexpr double kMonteCarloSigmas = 4.0;
inline constexpr std::uint64_t kMinTrials = 10000;

/// Sample mean of S^n against moment_of_sum. Deterministic for a given seed.
/// Throws std::invalid_argument for fewer than kMinTrials trials.
MonteCarloResult monte_carlo_check(unsigned p, unsigned q, unsigned n, const Distribution& x, const Distribution& y,
                                   std::uint64_t trials, std::uint64_t seed);

}  // namespace rbell
