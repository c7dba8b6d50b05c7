#include "rbell/rbell.hpp"

#include <map>
#include <stdexcept>
#include <string>

#include "rbell/enumerate.hpp"
#include "rbell/series.hpp"

namespace rbell {

std::string_view to_string(RBellMethod method) {
  switch (method) {
    case RBellMethod::Egf: return "egf";
    case RBellMethod::Composition: return "composition";
    case RBellMethod::Lambda: return "lambda";
    case RBellMethod::Convolution: return "convolution";
    case RBellMethod::Recurrence: return "recurrence";
  }
  return "egf";
}

RBellMethod parse_method(std::string_view name) {
  for (auto m : {RBellMethod::Egf, RBellMethod::Composition, RBellMethod::Lambda,
                 RBellMethod::Convolution, RBellMethod::Recurrence}) {
    if (to_string(m) == name) return m;
  }
  throw std::invalid_argument("unknown method '" + std::string(name) + "'");
}

namespace {

Rational fact(unsigned n) { return Rational(factorial(n)); }

// a_{m+1}/(m+1)! for m = 0..len-1
std::vector<Poly> ordinary_weights(const VarSeq& a, unsigned len) {
  std::vector<Poly> w;
  w.reserve(len);
  for (unsigned m = 0; m < len; ++m) w.push_back(a(m + 1) / fact(m + 1));
  return w;
}

// b_{m+1}/m! for m = 0..len-1
std::vector<Poly> distinguished_weights(const VarSeq& b, unsigned len) {
  std::vector<Poly> w;
  w.reserve(len);
  for (unsigned m = 0; m < len; ++m) w.push_back(b(m + 1) / fact(m));
  return w;
}

std::string difference_detail(const Poly& lhs, const Poly& rhs) {
  std::string s = to_string(lhs - rhs);
  if (s.size() > 400) s = s.substr(0, 400) + "...";
  return "lhs - rhs = " + s;
}

std::string label(std::string_view what, unsigned n, unsigned k, unsigned r) {
  return std::string(what) + " (n=" + std::to_string(n) + ",k=" + std::to_string(k) +
         ",r=" + std::to_string(r) + ")";
}

void compare(IdentityReport& rep, bool normative, std::string name, const Poly& lhs, const Poly& rhs) {
  const bool ok = lhs == rhs;
  std::string detail = ok ? std::string{} : difference_detail(lhs, rhs);
  if (normative) {
    rep.add(std::move(name), ok, std::move(detail));
  } else {
    rep.diagnose(std::move(name), ok, std::move(detail));
  }
}

}  // namespace

Poly rbell_egf(const RBellQuery& q) {
  if (q.k > q.n) return Poly{};
  // With A(t) = t * A1(t), the value is n!/k! [t^(n-k)] A1^k Bs^r.
  const unsigned span = q.n - q.k;
  const int order = static_cast<int>(span);
  Series result = Series::one(order);
  if (q.k > 0) {
    Series a1(order);
    const auto w = ordinary_weights(q.a, span + 1);
    for (unsigned m = 0; m <= span; ++m) a1[static_cast<int>(m)] = w[m];
    result = result * pow(a1, q.k);
  }
  if (q.r > 0) {
    Series bs(order);
    const auto w = distinguished_weights(q.b, span + 1);
    for (unsigned m = 0; m <= span; ++m) bs[static_cast<int>(m)] = w[m];
    result = result * pow(bs, q.r);
  }
  return result[order] * (fact(q.n) / fact(q.k));
}

Poly rbell_composition(const RBellQuery& q) {
  if (q.k > q.n) return Poly{};
  const unsigned span = q.n - q.k;
  const auto aw = q.k > 0 ? ordinary_weights(q.a, span + 1) : std::vector<Poly>{};
  const auto bw = q.r > 0 ? distinguished_weights(q.b, span + 1) : std::vector<Poly>{};
  Poly sum;
  // Slots 0..r-1 are the distinguished blocks, slots r..r+k-1 the ordinary ones;
  // a slot holding m receives m further elements (ordinary blocks: m+1 in total).
  for_each_composition(span, q.r + q.k, [&](const CompositionIndex& c) {
    Poly term(1L);
    for (unsigned i = 0; i < q.r; ++i) term *= bw[c.parts[i]];
    for (unsigned j = q.r; j < q.r + q.k; ++j) term *= aw[c.parts[j]];
    sum += term;
  });
  return sum * (fact(q.n) / fact(q.k));
}

Poly rbell_lambda(const RBellQuery& q) {
  if (q.k > q.n) return Poly{};
  const unsigned span = q.n - q.k;
  // (a_i/i!) for i = 1..span+1 and (b_{i+1}/i!) for i = 0..span
  std::vector<Poly> aw;
  if (q.k > 0) {
    for (unsigned i = 1; i <= span + 1; ++i) aw.push_back(q.a(i) / fact(i));
  }
  const auto bw = q.r > 0 ? distinguished_weights(q.b, span + 1) : std::vector<Poly>{};
  Poly sum;
  for_each_lambda(q.n, q.k, q.r, [&](const LambdaIndex& idx) {
    Integer coef = factorial(q.n) * factorial(q.r);
    Poly term(1L);
    for (unsigned i = 0; i < idx.k.size(); ++i) {
      if (idx.k[i] == 0) continue;
      coef /= factorial(idx.k[i]);
      term *= pow(aw.at(i), idx.k[i]);
    }
    for (unsigned i = 0; i < idx.r.size(); ++i) {
      if (idx.r[i] == 0) continue;
      coef /= factorial(idx.r[i]);
      term *= pow(bw.at(i), idx.r[i]);
    }
    sum += term * Rational(coef);
  });
  return sum;
}

Poly rbell_convolution(const RBellQuery& q) {
  if (q.k > q.n) return Poly{};
  const VarSeq lb = q.b.scaled([](unsigned l) { return Rational(l); });
  Poly sum;
  for (unsigned j = q.k; j <= q.n; ++j) {
    const Poly left = bell_explicit(j, q.k, q.a);
    if (left.is_zero()) continue;
    const Poly right = bell_explicit(q.n + q.r - j, q.r, lb);
    sum += left * right * Rational(binomial(q.n + q.r, j));
  }
  return sum / Rational(binomial(q.n + q.r, q.r));
}

Poly rbell_recurrence(const RBellQuery& q) {
  if (q.k > q.n) return Poly{};
  // table[(m, j)] = B(m, j, r) for the sub-queries the recursion touches
  std::map<std::pair<unsigned, unsigned>, Poly> memo;
  std::vector<Poly> a_cache;
  auto a_at = [&](unsigned j) -> const Poly& {
    while (a_cache.size() < j) a_cache.push_back(q.a(static_cast<unsigned>(a_cache.size()) + 1));
    return a_cache[j - 1];
  };
  std::function<Poly(unsigned, unsigned)> rec = [&](unsigned m, unsigned j) -> Poly {
    if (j > m) return Poly{};
    if (auto it = memo.find({m, j}); it != memo.end()) return it->second;
    Poly value;
    if (j == 0) {
      value = rbell_egf(RBellQuery{m, 0, q.r, q.a, q.b});
    } else {
      for (unsigned i = 1; i + (j - 1) <= m; ++i) {
        const Poly sub = rec(m - i, j - 1);
        if (sub.is_zero()) continue;
        value += a_at(i) * sub * Rational(binomial(m, i));
      }
      value /= Rational(j);
    }
    memo.emplace(std::make_pair(m, j), value);
    return value;
  };
  return rec(q.n, q.k);
}

Poly compute_rbell(const RBellQuery& q, RBellMethod method) {
  switch (method) {
    case RBellMethod::Egf: return rbell_egf(q);
    case RBellMethod::Composition: return rbell_composition(q);
    case RBellMethod::Lambda: return rbell_lambda(q);
    case RBellMethod::Convolution: return rbell_convolution(q);
    case RBellMethod::Recurrence: return rbell_recurrence(q);
  }
  return rbell_egf(q);
}

Poly rbell_value(long n, long k, long r, const VarSeq& a, const VarSeq& b) {
  if (n < 0 || k < 0 || r < 0 || k > n) return Poly{};
  return rbell_egf(RBellQuery{static_cast<unsigned>(n), static_cast<unsigned>(k),
                              static_cast<unsigned>(r), a, b});
}

// ---------------------------------------------------------------------------
// Identity checks

namespace {

const VarSeq& generic_a() {
  static const VarSeq a = VarSeq::symbolic(VarKind::A);
  return a;
}
const VarSeq& generic_b() {
  static const VarSeq b = VarSeq::symbolic(VarKind::B);
  return b;
}

Poly B(long n, long k, long r) { return rbell_value(n, k, r, generic_a(), generic_b()); }

}  // namespace

IdentityReport check_singleton_decomposition(unsigned n, unsigned k, unsigned r) {
  const VarSeq a0 = generic_a().with_zero_at(1);
  const VarSeq b0 = generic_b().with_zero_at(1);
  const Poly a1 = Poly::variable(var_a(1));
  const Poly b1 = Poly::variable(var_b(1));
  Poly rhs;
  for (unsigned i = 0; i <= r; ++i) {
    for (unsigned j = 0; j <= k && j <= n; ++j) {
      const Poly rest = rbell_value(static_cast<long>(n - j), static_cast<long>(k - j),
                                    static_cast<long>(r - i), a0, b0);
      if (rest.is_zero()) continue;
      rhs += rest * pow(b1, i) * pow(a1, j) * Rational(binomial(r, i) * binomial(n, j));
    }
  }
  IdentityReport rep;
  compare(rep, true, label("singleton decomposition", n, k, r), B(n, k, r), rhs);
  return rep;
}

IdentityReport check_homogeneity(unsigned n, unsigned k, unsigned r) {
  const Poly x = Poly::variable(var_a(kAuxIndex));
  const Poly y = Poly::variable(var_b(kAuxIndex));
  const Poly base = B(n, k, r);
  const RBellQuery plain{n, k, r};
  IdentityReport rep;

  RBellQuery q = plain;
  q.a = generic_a().times(x);
  q.b = generic_b().times(y);
  compare(rep, true, label("homogeneity x^k y^r", n, k, r), rbell_egf(q),
          base * pow(x, k) * pow(y, r));

  q.a = VarSeq([x](unsigned l) { return pow(x, l) * Poly::variable(var_a(l)); });
  q.b = VarSeq([x](unsigned l) { return pow(x, l) * Poly::variable(var_b(l)); });
  compare(rep, true, label("homogeneity x^(n+r)", n, k, r), rbell_egf(q), base * pow(x, n + r));

  q.a = VarSeq([x](unsigned l) { return pow(x, l - 1) * Poly::variable(var_a(l)); });
  q.b = VarSeq([x](unsigned l) { return pow(x, l - 1) * Poly::variable(var_b(l)); });
  compare(rep, true, label("homogeneity x^(n-k)", n, k, r), rbell_egf(q), base * pow(x, n - k));
  return rep;
}

IdentityReport check_p0_relations(unsigned n, unsigned k, unsigned r) {
  const long N = n, K = k, R = r;
  const Poly base = B(N, K, R);
  auto a = [](long j) { return Poly::variable(var_a(static_cast<std::uint32_t>(j))); };
  auto b = [](long j) { return Poly::variable(var_b(static_cast<std::uint32_t>(j))); };

  // sum_j C(n,j) a_j B(n-j, k-1, r), j = 1..n
  Poly a_sum, a_sum_weighted;
  for (long j = 1; j <= N; ++j) {
    const Poly t = a(j) * B(N - j, K - 1, R) * Rational(binomial(N, j));
    a_sum += t;
    a_sum_weighted += t * Rational(j);
  }
  // sum_{j=1}^{n+1} C(n,j-1) b_j B(n-j+1, k, r-1)
  Poly b_sum, b_sum_weighted;
  // printed variant: sum_{j=1}^{n} C(n,j-1) b_j B(n-j, k, r-1)
  Poly b_sum_printed, b_sum_printed_weighted;
  if (r >= 1) {
    for (long j = 1; j <= N + 1; ++j) {
      const Poly t = b(j) * B(N - j + 1, K, R - 1) * Rational(binomial(N, j - 1));
      b_sum += t;
      b_sum_weighted += t * Rational(j);
      if (j <= N) {
        const Poly p = b(j) * B(N - j, K, R - 1) * Rational(binomial(N, j - 1));
        b_sum_printed += p;
        b_sum_printed_weighted += p * Rational(j);
      }
    }
  }

  IdentityReport rep;
  compare(rep, true, label("k-relation", n, k, r), a_sum, base * Rational(K));
  if (r >= 1) {
    compare(rep, true, label("r-relation", n, k, r), b_sum, base);
    compare(rep, false, label("r-relation as printed (index n-j+r-1, factor r)", n, k, r),
            b_sum_printed, base * Rational(R));
  }
  compare(rep, true, label("(n+r)-relation", n, k, r), a_sum_weighted + b_sum_weighted * Rational(R),
          base * Rational(N + R));
  if (r >= 1) {
    compare(rep, false, label("(n+r)-relation as printed (index n-j+r-1)", n, k, r),
            a_sum_weighted + b_sum_printed_weighted * Rational(R), base * Rational(N + R));
  }
  return rep;
}

IdentityReport check_derivative_relations(unsigned n, unsigned k, unsigned r) {
  const long N = n, K = k, R = r;
  const Poly base = B(N, K, R);
  IdentityReport rep;
  bool printed_ok = true;
  std::string printed_detail;
  for (long j = 1; j <= N + 2; ++j) {
    const auto jj = static_cast<std::uint32_t>(j);
    compare(rep, true, label("d/da_" + std::to_string(j), n, k, r), partial_derivative(base, var_a(jj)),
            B(N - j, K - 1, R) * Rational(binomial(N, j)));
    const Poly db = partial_derivative(base, var_b(jj));
    compare(rep, true, label("d/db_" + std::to_string(j), n, k, r), db,
            B(N - j + 1, K, R - 1) * Rational(R * binomial(N, j - 1)));
    const Poly printed = B(N - j, K, R - 1) * Rational(binomial(N, j - 1));
    if (db != printed && printed_ok) {
      printed_ok = false;
      printed_detail = "first failure at j=" + std::to_string(j) + ": " + difference_detail(db, printed);
    }
  }
  rep.diagnose(label("d/db_j as printed: C(n,j-1) B^(r-1)_{n-j+r-1,k+r-1}", n, k, r), printed_ok,
               printed_detail);
  return rep;
}

IdentityReport check_symmetry(unsigned n, unsigned k, unsigned r) {
  const VarSeq la = generic_a().scaled([](unsigned l) { return Rational(l); });
  const VarSeq lb = generic_b().scaled([](unsigned l) { return Rational(l); });
  const long N = n, K = k, R = r;
  IdentityReport rep;
  // Reduced indices: B^{(r)}_{n,k+r} is (n-r, k, r); B^{(k)}_{n,k+r} is (n-k, r, k).
  const Poly lhs = rbell_value(N - R, K, R, la, generic_b()) * Rational(binomial(N, R));
  const Poly rhs = rbell_value(N - K, R, K, lb, generic_a()) * Rational(binomial(N, K));
  compare(rep, true, label("symmetry", n, k, r), lhs, rhs);

  // First indices n+k-r and n-k+r.
  const Poly lhs_printed = rbell_value(N + K - 2 * R, K, R, la, generic_b()) * Rational(binomial(N, R));
  const Poly rhs_printed = rbell_value(N - 2 * K + R, R, K, lb, generic_a()) * Rational(binomial(N, K));
  compare(rep, false, label("symmetry as printed (first indices n+k-r, n-k+r)", n, k, r), lhs_printed,
          rhs_printed);
  return rep;
}

IdentityReport check_paths(unsigned n, unsigned k, unsigned r) {
  const RBellQuery q{n, k, r};
  const Poly reference = rbell_egf(q);
  IdentityReport rep;
  for (auto m : {RBellMethod::Composition, RBellMethod::Lambda, RBellMethod::Convolution,
                 RBellMethod::Recurrence}) {
    compare(rep, true, label(std::string("egf = ") + std::string(to_string(m)), n, k, r), reference,
            compute_rbell(q, m));
  }
  return rep;
}

}  // namespace rbell
