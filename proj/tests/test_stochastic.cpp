#include <doctest.h>

#include <map>

#include "rbell/stochastic.hpp"
#include "support.hpp"

using namespace rbell;

namespace {

// Law of X_1 + ... + X_p + Y_1 + ... + Y_q by walking every outcome tuple.
std::map<unsigned, Rational> outcome_law(unsigned p, unsigned q, const PmfSpec& spec) {
  std::map<unsigned, Rational> law;
  std::vector<unsigned> pick(p + q, 0);
  auto size_of = [&](unsigned i) { return static_cast<unsigned>(i < p ? spec.p.size() : spec.q.size()); };
  while (true) {
    Rational prob = 1;
    unsigned sum = 0;
    for (unsigned i = 0; i < p + q; ++i) {
      prob *= i < p ? spec.p[pick[i]] : spec.q[pick[i]];
      sum += pick[i];
    }
    law[sum] += prob;
    unsigned i = 0;
    while (i < p + q && pick[i] + 1 == size_of(i)) pick[i++] = 0;
    if (i == p + q) break;
    ++pick[i];
  }
  return law;
}

Rational law_moment(const std::map<unsigned, Rational>& law, unsigned n) {
  Rational m = 0;
  for (const auto& [v, prob] : law) m += prob * power(Rational(v), n);
  return m;
}

std::vector<Rational> random_law(std::mt19937_64& rng, unsigned horizon) {
  std::vector<long> w(horizon + 1);
  long total = 0;
  for (auto& x : w) total += (x = static_cast<long>(rng() % 4));
  if (total == 0) w[horizon] = total = 1;
  std::vector<Rational> law;
  for (long x : w) {
    Rational v(x, total);
    v.canonicalize();
    law.push_back(v);
  }
  return law;
}

std::vector<Rational> moments_of(const std::vector<Rational>& law, unsigned n) {
  std::vector<Rational> mu;
  for (unsigned e = 0; e <= n; ++e) {
    Rational m = 0;
    for (unsigned j = 0; j < law.size(); ++j) m += law[j] * power(Rational(j), e);
    mu.push_back(m);
  }
  return mu;
}

}  // namespace

TEST_CASE("moment examples") {
  const std::vector<Rational> uniform{1, Rational(1, 2), Rational(1, 3), Rational(1, 4)};
  const MomentSpec one_x = MomentSpec::from_lists(uniform, {1});
  CHECK(moment_of_sum(1, 0, 3, one_x) == Rational(1, 4));

  // E((U1 + U2 + 1)^2) = 2/3 + 1/2 + 2 + 1 expanded by hand.
  const MomentSpec m = MomentSpec::from_lists(uniform, {1, 1, 1});
  CHECK(moment_of_sum(2, 1, 2, m) == Rational(2, 3) + Rational(1, 2) + 2 + 1);
  CHECK(moment_oracle(2, 1, 2, m) == Rational(25, 6));

  // Degenerate X = c: first moment is p c + q nu_1.
  const Rational c(3, 2);
  const MomentSpec d{[c](unsigned j) { return power(c, j); }, [](unsigned j) { return Rational(j == 0 ? 1 : 5); }};
  CHECK(moment_of_sum(4, 2, 1, d) == 4 * c + 2 * 5);

  CHECK_THROWS_AS(moment_of_sum(1, 0, 2, MomentSpec::from_lists({2, 1, 1}, {1})), InvalidDistribution);
  CHECK_THROWS_AS(moment_of_sum(1, 0, 5, one_x), InvalidDistribution);
  CHECK_THROWS(moment_of_sum(0, 1, 1, one_x));
}

TEST_CASE("pmf examples") {
  const PmfSpec coins{{Rational(1, 2), Rational(1, 2)}, {1}};
  CHECK(pmf_of_sum(2, 0, 1, coins) == Rational(1, 2));
  CHECK(pmf_of_sum(1, 0, 1, coins) == Rational(1, 2));
  const PmfSpec mixed{{Rational(1, 2), Rational(1, 2)}, {Rational(1, 3), Rational(1, 3), Rational(1, 3)}};
  CHECK(pmf_of_sum(1, 1, 2, mixed) == Rational(1, 3));
  CHECK(pmf_of_sum(1, 1, 9, mixed) == 0);
  CHECK_THROWS_AS(pmf_of_sum(1, 0, 0, PmfSpec{{Rational(1, 2)}, {1}}), InvalidDistribution);
  CHECK_THROWS_AS(pmf_of_sum(1, 0, 0, PmfSpec{{Rational(3, 2), Rational(-1, 2)}, {1}}), InvalidDistribution);
}

TEST_CASE("pmf and moments against outcome enumeration") {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 6; ++trial) {
    for (unsigned p = 1; p <= 4; ++p) {
      for (unsigned q = 0; p + q <= 4; ++q) {
        const PmfSpec spec{random_law(rng, static_cast<unsigned>(rng() % 5)),
                           random_law(rng, static_cast<unsigned>(rng() % 5))};
        const auto law = outcome_law(p, q, spec);
        Rational total = 0;
        for (unsigned n = 0; n <= support_max(p, q, spec) + 1; ++n) {
          const Rational v = pmf_of_sum(p, q, n, spec);
          total += v;
          const auto it = law.find(n);
          CHECK(v == (it == law.end() ? Rational(0) : it->second));
          CHECK(v == pmf_oracle(p, q, n, spec));
        }
        CHECK(total == 1);

        const MomentSpec moments = MomentSpec::from_lists(moments_of(spec.p, 6), moments_of(spec.q, 6));
        for (unsigned n = 0; n <= 6; ++n) {
          CHECK(moment_of_sum(p, q, n, moments) == law_moment(law, n));
          CHECK(moment_oracle(p, q, n, moments) == law_moment(law, n));
        }
      }
    }
  }
}

TEST_CASE("moments with arbitrary rational sequences match the multinomial oracle") {
  std::mt19937_64 rng(22);
  for (unsigned p = 1; p <= 4; ++p) {
    for (unsigned q = 0; p + q <= 4; ++q) {
      std::vector<Rational> mu{1}, nu{1};
      for (int j = 0; j < 6; ++j) {
        mu.push_back(testing::random_rational(rng));
        nu.push_back(testing::random_rational(rng));
      }
      const MomentSpec spec = MomentSpec::from_lists(mu, nu);
      for (unsigned n = 0; n <= 6; ++n) CHECK(moment_of_sum(p, q, n, spec) == moment_oracle(p, q, n, spec));
    }
  }
}

TEST_CASE("uniform-law identity for r-Stirling numbers") {
  CHECK(rstirling_uniform_identity(1, 0, 2).passed());
  CHECK(rstirling_uniform_identity(2, 1, 2).passed());
  for (unsigned p = 1; p <= 5; ++p) {
    for (unsigned r = 0; p + r <= 5; ++r) {
      for (unsigned n = 0; n <= 6; ++n) CHECK(rstirling_uniform_identity(p, r, n).passed());
    }
  }
}

TEST_CASE("Monte Carlo harness") {
  const Distribution one = Distribution::constant(1);
  const MonteCarloResult exact = monte_carlo_check(3, 1, 4, one, one, 10000, 1);
  CHECK(exact.passed);
  CHECK(exact.standard_error == 0.0);
  CHECK(exact.exact == 256);

  const Distribution coin = Distribution::bernoulli(Rational(1, 2));
  const MonteCarloResult b = monte_carlo_check(2, 0, 3, coin, one, 100000, 5);
  CHECK(b.exact == Rational(5, 2));
  CHECK(b.passed);

  const Distribution u = Distribution::uniform01();
  const MonteCarloResult uni = monte_carlo_check(3, 0, 2, u, one, 100000, 6);
  CHECK(uni.exact == Rational(5, 2));
  CHECK(uni.passed);

  const Distribution die = Distribution::discrete({Rational(1, 4), Rational(1, 4), Rational(1, 2)});
  CHECK(monte_carlo_check(2, 1, 2, die, u, 100000, 8).passed);

  // Same seed, same numbers.
  const MonteCarloResult again = monte_carlo_check(3, 0, 2, u, one, 100000, 6);
  CHECK(again.mean == uni.mean);
  CHECK(again.to_json().dump() == uni.to_json().dump());

  CHECK_THROWS(monte_carlo_check(1, 0, 1, u, one, 9999, 1));
  CHECK_THROWS_AS(Distribution::bernoulli(Rational(3, 2)), InvalidDistribution);
}
