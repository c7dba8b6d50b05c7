#include "rbell/stochastic.hpp"

#include <cmath>

#include "rbell/rbell.hpp"

namespace rbell {

namespace {

MomentRule list_rule(std::vector<Rational> values, const char* name) {
  return [values = std::move(values), name](unsigned j) -> Rational {
    if (j >= values.size()) {
      throw InvalidDistribution(std::string(name) + "_" + std::to_string(j) + " is needed but only " +
                                std::to_string(values.size()) + " moments were given");
    }
    return values[j];
  };
}

void check_law(const std::vector<Rational>& law, const char* name) {
  if (law.empty()) throw InvalidDistribution(std::string(name) + " is empty");
  Rational total = 0;
  for (const Rational& v : law) {
    if (v < 0) throw InvalidDistribution(std::string(name) + " has a negative probability");
    total += v;
  }
  if (total != 1) throw InvalidDistribution(std::string(name) + " sums to " + to_string(total) + ", not 1");
}

Rational at_or_zero(const std::vector<Rational>& v, unsigned j) { return j < v.size() ? v[j] : Rational(0); }

std::vector<Rational> convolve(const std::vector<Rational>& x, const std::vector<Rational>& y) {
  std::vector<Rational> out(x.size() + y.size() - 1, Rational(0));
  for (std::size_t i = 0; i < x.size(); ++i) {
    for (std::size_t j = 0; j < y.size(); ++j) out[i + j] += x[i] * y[j];
  }
  return out;
}

// Sum over exponent vectors e of length `slots` with |e| = remaining of
// multinomial weight times prod moment(e_i).
struct MultinomialSum {
  unsigned p;
  unsigned slots;
  const MomentSpec* spec;

  Rational run(unsigned slot, unsigned remaining) const {
    if (slot == slots) return remaining == 0 ? Rational(1) : Rational(0);
    const MomentRule& moment = slot < p ? spec->mu : spec->nu;
    Rational sum = 0;
    for (unsigned e = 0; e <= remaining; ++e) {
      const Rational rest = run(slot + 1, remaining - e);
      if (rest == 0) continue;
      sum += Rational(binomial(remaining, e)) * moment(e) * rest;
    }
    return sum;
  }
};

// 53 random bits in [0, 1).
double unit(std::mt19937_64& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

}  // namespace

MomentSpec MomentSpec::from_lists(std::vector<Rational> mu, std::vector<Rational> nu) {
  return {list_rule(std::move(mu), "mu"), list_rule(std::move(nu), "nu")};
}

void MomentSpec::validate() const {
  if (mu(0) != 1) throw InvalidDistribution("mu_0 must be 1");
  if (nu(0) != 1) throw InvalidDistribution("nu_0 must be 1");
}

void PmfSpec::validate() const {
  check_law(p, "p");
  check_law(q, "q");
}

Rational moment_of_sum(unsigned p, unsigned q, unsigned n, const MomentSpec& spec) {
  if (p == 0) throw std::invalid_argument("moment_of_sum needs p >= 1");
  spec.validate();
  RBellQuery query{n + p, p, q, VarSeq::rational_rule([&](unsigned l) -> Rational { return Rational(l) * spec.mu(l - 1); }),
                   VarSeq::rational_rule([&](unsigned l) { return spec.nu(l - 1); })};
  return rbell_egf(query).constant_term() / Rational(binomial(n + p, p));
}

Rational pmf_of_sum(unsigned p, unsigned q, unsigned n, const PmfSpec& spec) {
  if (p == 0) throw std::invalid_argument("pmf_of_sum needs p >= 1");
  spec.validate();
  RBellQuery query{
      n + p, p, q,
      VarSeq::rational_rule([&](unsigned l) -> Rational { return Rational(factorial(l)) * at_or_zero(spec.p, l - 1); }),
      VarSeq::rational_rule([&](unsigned l) -> Rational { return Rational(factorial(l - 1)) * at_or_zero(spec.q, l - 1); })};
  return rbell_egf(query).constant_term() * Rational(factorial(p)) / Rational(factorial(n + p));
}

unsigned support_max(unsigned p, unsigned q, const PmfSpec& spec) {
  return p * static_cast<unsigned>(spec.p.size() - 1) + q * static_cast<unsigned>(spec.q.size() - 1);
}

Rational moment_oracle(unsigned p, unsigned q, unsigned n, const MomentSpec& spec) {
  return MultinomialSum{p, p + q, &spec}.run(0, n);
}

Rational pmf_oracle(unsigned p, unsigned q, unsigned n, const PmfSpec& spec) {
  std::vector<Rational> law{Rational(1)};
  for (unsigned i = 0; i < p; ++i) law = convolve(law, spec.p);
  for (unsigned i = 0; i < q; ++i) law = convolve(law, spec.q);
  return at_or_zero(law, n);
}

IdentityReport rstirling_uniform_identity(unsigned p, unsigned r, unsigned n) {
  const Rational lhs = rbell_egf(RBellQuery{n + p, p, r, VarSeq::constant(1), VarSeq::constant(1)}).constant_term();
  const MomentSpec uniform_plus_one{[](unsigned j) { return Rational(1, j + 1); }, [](unsigned) { return Rational(1); }};
  const Rational rhs = Rational(binomial(n + p, p)) * moment_oracle(p, r, n, uniform_plus_one);
  IdentityReport report;
  const std::string name = "uniform r-Stirling p=" + std::to_string(p) + " r=" + std::to_string(r) +
                           " n=" + std::to_string(n);
  report.add(name, lhs == rhs, to_string(lhs) + " vs " + to_string(rhs));
  return report;
}

Distribution Distribution::uniform01() {
  return {"uniform(0,1)", [](unsigned j) { return Rational(1, j + 1); }, unit};
}

Distribution Distribution::constant(const Rational& c) {
  const double value = c.get_d();
  return {"constant(" + to_string(c) + ")", [c](unsigned j) { return power(c, j); },
          [value](std::mt19937_64&) { return value; }};
}

Distribution Distribution::bernoulli(const Rational& success) {
  if (success < 0 || success > 1) throw InvalidDistribution("Bernoulli parameter must lie in [0, 1]");
  const double s = success.get_d();
  return {"bernoulli(" + to_string(success) + ")",
          [success](unsigned j) { return j == 0 ? Rational(1) : success; },
          [s](std::mt19937_64& rng) { return unit(rng) < s ? 1.0 : 0.0; }};
}

Distribution Distribution::discrete(std::vector<Rational> pmf) {
  check_law(pmf, "pmf");
  std::vector<double> cumulative;
  Rational running = 0;
  for (const Rational& v : pmf) {
    running += v;
    cumulative.push_back(running.get_d());
  }
  std::string name = "discrete(";
  for (std::size_t j = 0; j < pmf.size(); ++j) name += (j ? "," : "") + to_string(pmf[j]);
  name += ")";
  auto moment = [pmf](unsigned e) {
    Rational sum = 0;
    for (unsigned j = 0; j < pmf.size(); ++j) sum += pmf[j] * power(Rational(j), e);
    return sum;
  };
  auto sample = [cumulative](std::mt19937_64& rng) {
    const double u = unit(rng);
    for (std::size_t j = 0; j < cumulative.size(); ++j) {
      if (u < cumulative[j]) return static_cast<double>(j);
    }
    return static_cast<double>(cumulative.size() - 1);
  };
  return {name, moment, sample};
}

nlohmann::json MonteCarloResult::to_json() const {
  return {{"p", p},       {"q", q},
          {"n", n},       {"trials", trials},
          {"seed", seed}, {"exact", to_string(exact)},
          {"mean", mean}, {"standard_error", standard_error},
          {"z", z},       {"passed", passed}};
}

MonteCarloResult monte_carlo_check(unsigned p, unsigned q, unsigned n, const Distribution& x, const Distribution& y,
                                   std::uint64_t trials, std::uint64_t seed) {
  if (trials < kMinTrials) {
    throw std::invalid_argument("Monte Carlo needs at least " + std::to_string(kMinTrials) + " trials");
  }
  MonteCarloResult out;
  out.p = p;
  out.q = q;
  out.n = n;
  out.trials = trials;
  out.seed = seed;
  out.exact = moment_of_sum(p, q, n, MomentSpec{x.moment, y.moment});

  std::mt19937_64 rng(seed);
  // Welford's running mean and variance.
  double mean = 0.0, m2 = 0.0;
  for (std::uint64_t t = 1; t <= trials; ++t) {
    double s = 0.0;
    for (unsigned i = 0; i < p; ++i) s += x.sample(rng);
    for (unsigned i = 0; i < q; ++i) s += y.sample(rng);
    const double v = std::pow(s, static_cast<double>(n));
    const double delta = v - mean;
    mean += delta / static_cast<double>(t);
    m2 += delta * (v - mean);
  }
  const double variance = m2 / static_cast<double>(trials - 1);
  out.mean = mean;
  out.standard_error = std::sqrt(variance / static_cast<double>(trials));
  const double exact = out.exact.get_d();
  const double deviation = std::abs(mean - exact);
  const double slack = 1e-12 * std::max(1.0, std::abs(exact));  // rounding in the zero-variance case
  if (out.standard_error > 0.0) {
    out.z = deviation / out.standard_error;
    out.passed = deviation <= kMonteCarloSigmas * out.standard_error + slack;
  } else {
    out.passed = deviation <= slack;
    out.z = 0.0;
  }
  return out;
}

}  // namespace rbell
