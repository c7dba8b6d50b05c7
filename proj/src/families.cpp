#include "rbell/families.hpp"

#include <algorithm>

#include "rbell/series.hpp"

namespace rbell {

namespace {

int as_int(unsigned v) { return static_cast<int>(v); }

void fill(NumberTable& table, const SeqSpec& spec, unsigned n_max,
          const std::function<Rational(unsigned n, unsigned k)>& reduced_value) {
  const unsigned shift = spec.total_indexing() ? spec.r : 0;
  for (unsigned n = 0; n + shift <= n_max; ++n) {
    for (unsigned k = 0; k <= n; ++k) {
      table.rows[n + shift][k + shift] = to_integer(reduced_value(n, k), to_string(spec.family));
    }
  }
}

// e^{ct}
Series exp_series(const Rational& c, int order) {
  return exp(Series::t(order) * c);
}

// ln(1 + ct)
Series log1p_series(const Rational& c, int order) {
  Series s(order);
  for (int j = 1; j <= order; ++j) {
    Rational coef = power(c, static_cast<unsigned>(j)) / Rational(j);
    s[j] = Poly(j % 2 == 1 ? coef : Rational(-coef));
  }
  return s;
}

// (1 + ct)^alpha via the generalised binomial coefficients
Series binomial_series(const Rational& alpha, const Rational& c, int order) {
  Series s(order);
  Rational coef = 1;  // C(alpha, j)
  for (int j = 0; j <= order; ++j) {
    if (j > 0) coef = coef * (alpha - (j - 1)) / j;
    s[j] = Poly(Rational(coef * power(c, static_cast<unsigned>(j))));
  }
  return s;
}

bool admitted(const SeqSpec& spec, unsigned size) {
  switch (spec.mode) {
    case Mode::Plain: return true;
    case Mode::Associated: return size >= spec.threshold;
    case Mode::Truncated: return size <= spec.threshold;
    case Mode::Even: return size % 2 == 0;
    case Mode::Odd: return size % 2 == 1;
  }
  return true;
}

// Keeps the t^j term iff a block of size j + offset is admitted.
Series restrict(const Series& s, const SeqSpec& spec, unsigned offset) {
  Series out = s;
  for (int j = 0; j <= s.order(); ++j) {
    if (!admitted(spec, static_cast<unsigned>(j) + offset)) out[j] = Poly{};
  }
  return out;
}

struct EgfPair {
  Series ordinary;     // sum_{j>=1} a_j t^j/j!
  Series distinguished_power;  // (sum_{j>=0} b_{j+1} t^j/j!)^r
};

EgfPair family_egf(const SeqSpec& spec, int order) {
  const Rational m(spec.m);
  const Rational r(spec.r);
  const Series one = Series::one(order);
  switch (spec.family) {
    case Family::RWhitney2:
      return {(exp_series(m, order) - one) * Rational(1 / m), exp_series(r, order)};
    case Family::RWhitneyLah:
      return {Series::t(order) * binomial_series(-1, -m, order), binomial_series(-2 * r / m, -m, order)};
    case Family::RWhitney1:
      return {log1p_series(m, order), binomial_series(-r / m, m, order)};
    case Family::RStirling2:
      return {restrict(exp_series(1, order) - one, spec, 0), pow(restrict(exp_series(1, order), spec, 1), spec.r)};
    case Family::RStirling1:
      return {restrict(log1p_series(-1, order) * Rational(-1), spec, 0),
              pow(restrict(binomial_series(-1, -1, order), spec, 1), spec.r)};
    case Family::RLah:
      return {restrict(Series::t(order) * binomial_series(-1, -1, order), spec, 0),
              pow(restrict(binomial_series(-2, -1, order), spec, 1), spec.r)};
  }
  return {one, one};
}

}  // namespace

NumberTable table_via_weights(const SeqSpec& spec, const VarSeq& a, const VarSeq& b, unsigned n_max) {
  spec.validate();
  NumberTable table = make_table(spec, n_max);
  fill(table, spec, n_max, [&](unsigned n, unsigned k) {
    return rbell_egf(RBellQuery{n, k, spec.r, a, b}).constant_term();
  });
  return table;
}

NumberTable table_via_rbell(const SeqSpec& spec, unsigned n_max) {
  auto [a, b] = weights_of(spec);
  return table_via_weights(spec, a, b, n_max);
}

NumberTable table_via_egf(const SeqSpec& spec, unsigned n_max) {
  spec.validate();
  NumberTable table = make_table(spec, n_max);
  const int order = as_int(n_max);
  const EgfPair egf = family_egf(spec, order);
  // powers[k] = A^k / k! * (distinguished series)
  Series current = egf.distinguished_power;
  std::vector<Series> columns;
  for (unsigned k = 0; k <= n_max; ++k) {
    if (k > 0) current = current * egf.ordinary * Rational(1, k);
    columns.push_back(current);
  }
  fill(table, spec, n_max, [&](unsigned n, unsigned k) {
    Rational value = columns[k].egf_coefficient(as_int(n)).constant_term();
    if (spec.first_kind()) {
      // The signed w_{m,r} EGF must carry the sign (-1)^{n-k}.
      const bool negative = (n - k) % 2 == 1 && spec.family == Family::RWhitney1;
      if (value != 0 && (value < 0) != negative) {
        throw NonIntegerResult("unexpected sign in first-kind EGF entry");
      }
      value = abs(value);
    }
    return value;
  });
  return table;
}

Integer signed_entry(const NumberTable& table, unsigned n, unsigned k, SignConvention convention) {
  const Integer& v = table.at(n, k);
  if (!table.spec.first_kind()) return v;
  unsigned exponent = n - std::min(n, k);
  if (convention == SignConvention::Printed) exponent += table.spec.r;
  return exponent % 2 == 0 ? v : Integer(-v);
}

std::pair<VarSeq, VarSeq> whitney1_egf_weights(unsigned m) {
  const VarSeq a = VarSeq::rational_rule([m](unsigned l) -> Rational {
    return Rational(factorial(l - 1)) * power(Rational(m), l);
  });
  const VarSeq b = VarSeq::rational_rule([m](unsigned l) -> Rational {
    Integer p = 1;
    for (unsigned i = 0; i + 2 <= l; ++i) p *= Integer(i * m + 1);
    return Rational(p);
  });
  return {a, b};
}

nlohmann::json FamilyCrosscheck::to_json() const {
  nlohmann::json j{{"family", to_string(spec.family)},
                   {"m", spec.m},
                   {"r", spec.r},
                   {"mode", mode_label(spec)},
                   {"n_max", n_max},
                   {"oracle_n_max", oracle_n_max},
                   {"passed", passed()},
                   {"report", report.to_json()}};
  if (!discrepancies.empty()) {
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& d : discrepancies) {
      rows.push_back({{"n", d.n}, {"k", d.k}, {"egf", d.egf.get_str()}, {"specialization", d.rbell.get_str()},
                      {"ratio", d.ratio}});
    }
    j["known_discrepancy"] = {
        {"description",
         "printed w_{m,r} specialization differs from the EGF; ratio = egf/specialization per entry"},
        {"entries", std::move(rows)}};
  }
  return j;
}

namespace {

std::string spec_label(const SeqSpec& spec) {
  std::string s(to_string(spec.family));
  if (spec.is_whitney()) s += " m=" + std::to_string(spec.m);
  s += " r=" + std::to_string(spec.r);
  if (!spec.is_whitney()) s += " mode=" + mode_label(spec);
  return s;
}

std::string first_mismatch(const NumberTable& x, const NumberTable& y, unsigned n_max) {
  for (unsigned n = 0; n <= n_max; ++n) {
    for (unsigned k = 0; k <= n; ++k) {
      if (x.at(n, k) != y.at(n, k)) {
        return "first mismatch at (n=" + std::to_string(n) + ",k=" + std::to_string(k) + "): " +
               x.at(n, k).get_str() + " vs " + y.at(n, k).get_str();
      }
    }
  }
  return {};
}

bool tables_equal(const NumberTable& x, const NumberTable& y, unsigned n_max) {
  return first_mismatch(x, y, n_max).empty();
}

}  // namespace

FamilyCrosscheck crosscheck_family(const SeqSpec& spec, unsigned n_max) {
  FamilyCrosscheck out;
  out.spec = spec;
  out.n_max = n_max;
  out.egf = table_via_egf(spec, n_max);
  out.rbell = table_via_rbell(spec, n_max);

  const unsigned guard = enumeration_guard();
  const unsigned extra = spec.total_indexing() ? 0 : spec.r;
  out.oracle_n_max = guard >= extra ? std::min(n_max, guard - extra) : 0;
  out.oracle = oracle_count_table(spec, out.oracle_n_max);

  const std::string name = spec_label(spec);
  if (spec.family == Family::RWhitney1) {
    auto [a, b] = whitney1_egf_weights(spec.m);
    const NumberTable derived = table_via_weights(spec, a, b, n_max);
    out.report.add(name + ": egf = specialization (l-1)! m^l; prod_{i<l-1}(im+1)", tables_equal(out.egf, derived, n_max),
                   first_mismatch(out.egf, derived, n_max));
    const bool printed_ok = tables_equal(out.egf, out.rbell, n_max);
    out.report.diagnose(name + ": egf = printed specialization", printed_ok, first_mismatch(out.egf, out.rbell, n_max));
    for (unsigned n = 0; n <= n_max; ++n) {
      for (unsigned k = 0; k <= n; ++k) {
        const Integer& e = out.egf.at(n, k);
        const Integer& s = out.rbell.at(n, k);
        if (e == s) continue;
        std::string ratio = "undefined";
        if (s != 0) {
          Rational q(e, s);
          q.canonicalize();
          ratio = to_string(q);
        }
        out.discrepancies.push_back({n, k, e, s, ratio});
      }
    }
  } else {
    out.report.add(name + ": egf = r-Bell specialization", tables_equal(out.egf, out.rbell, n_max),
                   first_mismatch(out.egf, out.rbell, n_max));
  }
  out.report.add(name + ": r-Bell specialization = oracle (n<=" + std::to_string(out.oracle_n_max) + ")",
                 tables_equal(out.rbell, out.oracle, out.oracle_n_max),
                 first_mismatch(out.rbell, out.oracle, out.oracle_n_max));
  return out;
}

}  // namespace rbell
