#include "verify.hpp"

#include <random>
#include <stdexcept>

#include "rbell/calculus.hpp"
#include "rbell/families.hpp"
#include "rbell/oracle.hpp"
#include "rbell/rbell.hpp"
#include "rbell/stochastic.hpp"

namespace rbell::cli {

namespace {

std::string triple(unsigned n, unsigned k, unsigned r) {
  return "(n=" + std::to_string(n) + ",k=" + std::to_string(k) + ",r=" + std::to_string(r) + ")";
}

// Uniform integer in [lo, hi] without going through std distributions, whose
// output differs between standard libraries.
long pick(std::mt19937_64& rng, long lo, long hi) {
  return lo + static_cast<long>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
}

Rational random_rational(std::mt19937_64& rng) {
  Rational q(pick(rng, -9, 9), pick(rng, 1, 6));
  q.canonicalize();
  return q;
}

std::vector<Rational> random_law(std::mt19937_64& rng, unsigned horizon) {
  std::vector<long> weights(horizon + 1);
  long total = 0;
  for (auto& w : weights) total += (w = pick(rng, 0, 5));
  if (total == 0) {
    weights[0] = 1;
    total = 1;
  }
  std::vector<Rational> law;
  for (long w : weights) {
    Rational q(w, total);
    q.canonicalize();
    law.push_back(q);
  }
  return law;
}

IdentityReport suite_paths(const VerifyBounds& b) {
  IdentityReport report;
  for (unsigned r = 0; r <= b.r_max; ++r) {
    for (unsigned n = 0; n <= b.n_max; ++n) {
      for (unsigned k = 0; k <= n; ++k) report.append(check_paths(n, k, r));
    }
  }
  return report;
}

IdentityReport suite_oracle(const VerifyBounds& b) {
  IdentityReport report;
  const VarSeq a = VarSeq::symbolic(VarKind::A);
  const VarSeq bs = VarSeq::symbolic(VarKind::B);
  for (unsigned r = 0; r <= b.r_max; ++r) {
    for (unsigned n = 0; n + r <= b.n_max; ++n) {
      for (unsigned k = 0; k <= n; ++k) {
        const Poly lhs = rbell_egf(RBellQuery{n, k, r});
        const Poly rhs = oracle_sum(n, k, r, StructureKind::Blocks, a, bs);
        report.add("egf = partition enumeration " + triple(n, k, r), lhs == rhs,
                   lhs == rhs ? std::string{} : to_string(lhs - rhs));
      }
    }
  }
  return report;
}

IdentityReport suite_identities(const VerifyBounds& b) {
  IdentityReport report;
  for (unsigned r = 0; r <= b.r_max; ++r) {
    for (unsigned n = 0; n <= b.n_max; ++n) {
      for (unsigned k = 0; k <= n; ++k) {
        report.append(check_singleton_decomposition(n, k, r));
        report.append(check_homogeneity(n, k, r));
        report.append(check_p0_relations(n, k, r));
        report.append(check_derivative_relations(n, k, r));
      }
    }
  }
  for (unsigned n = 0; n <= b.n_max; ++n) {
    for (unsigned r = 0; r <= n; ++r) {
      for (unsigned k = 0; k + r <= n; ++k) report.append(check_symmetry(n, k, r));
    }
  }
  return report;
}

SuiteResult suite_families(const VerifyBounds& b) {
  SuiteResult out{"families", {}, {}};
  const std::vector<std::pair<Mode, unsigned>> modes{{Mode::Plain, 1},     {Mode::Associated, 2}, {Mode::Associated, 3},
                                                     {Mode::Truncated, 2}, {Mode::Even, 1},       {Mode::Odd, 1}};
  for (Family f : {Family::RStirling2, Family::RStirling1, Family::RLah}) {
    for (auto [mode, threshold] : modes) {
      for (unsigned r = 0; r <= b.r_max; ++r) {
        out.report.append(crosscheck_family(SeqSpec{f, r, 1, mode, threshold}, b.n_max + r).report);
      }
    }
  }
  for (Family f : {Family::RWhitney2, Family::RWhitneyLah, Family::RWhitney1}) {
    for (unsigned m = 1; m <= 3; ++m) {
      for (unsigned r = 0; r <= b.r_max; ++r) {
        const FamilyCrosscheck c = crosscheck_family(SeqSpec{f, r, m}, b.n_max);
        out.report.append(c.report);
        if (c.known_discrepancy()) out.known_discrepancies.push_back(c.to_json());
      }
    }
  }
  return out;
}

IdentityReport suite_stochastic(const VerifyBounds& b) {
  IdentityReport report;
  std::mt19937_64 rng(b.seed);
  for (unsigned p = 1; p <= 4; ++p) {
    for (unsigned q = 0; p + q <= 4; ++q) {
      const unsigned horizon = static_cast<unsigned>(pick(rng, 0, 4));
      PmfSpec laws{random_law(rng, horizon), random_law(rng, static_cast<unsigned>(pick(rng, 0, 4)))};
      Rational total = 0;
      bool agree = true;
      const unsigned top = support_max(p, q, laws);
      for (unsigned n = 0; n <= top + 1; ++n) {
        const Rational v = pmf_of_sum(p, q, n, laws);
        total += v;
        agree = agree && v == pmf_oracle(p, q, n, laws);
      }
      const std::string tag = " p=" + std::to_string(p) + " q=" + std::to_string(q);
      report.add("pmf = convolution" + tag, agree);
      report.add("pmf sums to 1" + tag, total == 1, to_string(total));

      std::vector<Rational> mu{Rational(1)}, nu{Rational(1)};
      for (unsigned j = 1; j <= b.n_max; ++j) {
        mu.push_back(random_rational(rng));
        nu.push_back(random_rational(rng));
      }
      const MomentSpec moments = MomentSpec::from_lists(mu, nu);
      for (unsigned n = 0; n <= b.n_max; ++n) {
        const Rational x = moment_of_sum(p, q, n, moments);
        const Rational y = moment_oracle(p, q, n, moments);
        report.add("moment = multinomial expansion" + tag + " n=" + std::to_string(n), x == y,
                   to_string(x) + " vs " + to_string(y));
      }
    }
  }
  for (unsigned p = 1; p <= 5; ++p) {
    for (unsigned r = 0; p + r <= 5; ++r) {
      for (unsigned n = 0; n <= b.n_max; ++n) report.append(rstirling_uniform_identity(p, r, n));
    }
  }
  struct Case {
    unsigned p, q, n;
    Distribution x, y;
  };
  const std::vector<Case> cases{
      {3, 0, 2, Distribution::uniform01(), Distribution::constant(0)},
      {2, 0, 3, Distribution::bernoulli(Rational(1, 2)), Distribution::constant(0)},
      {2, 1, 3, Distribution::uniform01(), Distribution::constant(1)},
      {1, 2, 2, Distribution::discrete({Rational(1, 6), Rational(1, 3), Rational(1, 2)}),
       Distribution::bernoulli(Rational(1, 3))},
      {2, 2, 4, Distribution::constant(1), Distribution::constant(1)},
  };
  std::uint64_t seed = b.seed;
  for (const Case& c : cases) {
    const MonteCarloResult mc = monte_carlo_check(c.p, c.q, c.n, c.x, c.y, b.trials, seed++);
    report.add("Monte Carlo " + c.x.name + " x" + std::to_string(c.p) + ", " + c.y.name + " x" + std::to_string(c.q) +
                   ", n=" + std::to_string(c.n),
               mc.passed, mc.to_json().dump());
  }
  return report;
}

IdentityReport suite_calculus(const VerifyBounds& b) {
  IdentityReport report;
  std::mt19937_64 rng(b.seed);
  for (int trial = 0; trial < 200; ++trial) {
    const unsigned n = static_cast<unsigned>(pick(rng, 0, b.n_max));
    const unsigned r = static_cast<unsigned>(pick(rng, 0, b.r_max));
    std::vector<Rational> f, g{Rational(0)}, h{Rational(0)};
    for (unsigned j = 0; j <= n; ++j) f.push_back(random_rational(rng));
    for (unsigned j = 1; j <= n; ++j) g.push_back(random_rational(rng));
    for (unsigned j = 1; j <= n + 1; ++j) h.push_back(random_rational(rng));
    const JetSpec jet = JetSpec::from_rationals(f, g, h);
    const Poly x = derivative_via_rbell(n, r, jet);
    const Poly y = derivative_via_series(n, r, jet);
    report.add("jet " + std::to_string(trial) + " n=" + std::to_string(n) + " r=" + std::to_string(r) +
                   ": r-Bell = series",
               x == y, to_string(x) + " vs " + to_string(y));
  }
  for (unsigned m = 1; m <= 3; ++m) {
    for (unsigned r = 0; r <= 2; ++r) {
      for (unsigned n = 0; n <= b.n_max; ++n) report.append(whitney_exp_identity(m, r, n, Rational(0)));
    }
  }
  return report;
}

}  // namespace

SuiteResult run_suite(const std::string& name, const VerifyBounds& bounds) {
  if (name == "paths") return {name, suite_paths(bounds), {}};
  if (name == "oracle") return {name, suite_oracle(bounds), {}};
  if (name == "identities") return {name, suite_identities(bounds), {}};
  if (name == "families") return suite_families(bounds);
  if (name == "stochastic") return {name, suite_stochastic(bounds), {}};
  if (name == "calculus") return {name, suite_calculus(bounds), {}};
  throw std::invalid_argument("unknown suite '" + name + "'");
}

}  // namespace rbell::cli
