#include "rbell/poly.hpp"

#include <algorithm>
#include <sstream>

namespace rbell {

std::string to_string(VarId v) {
  return (v.kind == VarKind::A ? "a" : "b") + std::to_string(v.index);
}

MissingVariable::MissingVariable(VarId v)
    : std::runtime_error("no binding for variable " + to_string(v)), var_(v) {}

// ---------------------------------------------------------------------------
// Monomial

Monomial::Monomial(VarId v, std::uint32_t exponent) {
  if (exponent > 0) factors_.emplace_back(v, exponent);
}

Monomial Monomial::from_factors(std::vector<Factor> factors) {
  std::sort(factors.begin(), factors.end(),
            [](const Factor& x, const Factor& y) { return x.first < y.first; });
  Monomial m;
  for (const auto& [v, e] : factors) {
    if (e == 0) continue;
    if (!m.factors_.empty() && m.factors_.back().first == v) {
      m.factors_.back().second += e;
    } else {
      m.factors_.emplace_back(v, e);
    }
  }
  return m;
}

std::uint32_t Monomial::exponent(VarId v) const {
  auto it = std::lower_bound(factors_.begin(), factors_.end(), v,
                             [](const Factor& f, VarId key) { return f.first < key; });
  return (it != factors_.end() && it->first == v) ? it->second : 0;
}

std::uint64_t Monomial::degree() const {
  std::uint64_t d = 0;
  for (const auto& f : factors_) d += f.second;
  return d;
}

Monomial operator*(const Monomial& x, const Monomial& y) {
  Monomial out;
  out.factors_.reserve(x.factors_.size() + y.factors_.size());
  auto i = x.factors_.begin();
  auto j = y.factors_.begin();
  while (i != x.factors_.end() && j != y.factors_.end()) {
    if (i->first < j->first) {
      out.factors_.push_back(*i++);
    } else if (j->first < i->first) {
      out.factors_.push_back(*j++);
    } else {
      out.factors_.emplace_back(i->first, i->second + j->second);
      ++i;
      ++j;
    }
  }
  out.factors_.insert(out.factors_.end(), i, x.factors_.end());
  out.factors_.insert(out.factors_.end(), j, y.factors_.end());
  return out;
}

std::strong_ordering operator<=>(const Monomial& x, const Monomial& y) {
  if (auto c = x.degree() <=> y.degree(); c != 0) return c;
  const std::size_t n = std::min(x.factors_.size(), y.factors_.size());
  for (std::size_t i = 0; i < n; ++i) {
    if (auto c = x.factors_[i].first <=> y.factors_[i].first; c != 0) return c;
    if (auto c = x.factors_[i].second <=> y.factors_[i].second; c != 0) return c;
  }
  return x.factors_.size() <=> y.factors_.size();
}

// ---------------------------------------------------------------------------
// Poly

Poly::Poly(const Rational& constant) {
  if (constant != 0) terms_.emplace(Monomial{}, constant);
}

Poly Poly::variable(VarId v) { return term(Rational(1), Monomial(v)); }

Poly Poly::term(const Rational& coef, Monomial m) {
  Poly p;
  if (coef != 0) p.terms_.emplace(std::move(m), coef);
  return p;
}

bool Poly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_unit());
}

Rational Poly::constant_term() const { return coefficient(Monomial{}); }

Rational Poly::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

std::uint64_t Poly::degree() const {
  return terms_.empty() ? 0 : terms_.rbegin()->first.degree();
}

void Poly::add_term(const Rational& coef, const Monomial& m) {
  if (coef == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, coef);
  if (!inserted) {
    it->second += coef;
    if (it->second == 0) terms_.erase(it);
  }
}

Poly& Poly::operator+=(const Poly& other) {
  for (const auto& [m, c] : other.terms_) add_term(c, m);
  return *this;
}

Poly& Poly::operator-=(const Poly& other) {
  for (const auto& [m, c] : other.terms_) add_term(Rational(-c), m);
  return *this;
}

Poly& Poly::operator*=(const Poly& other) { return *this = *this * other; }

Poly& Poly::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
  } else {
    for (auto& [m, coef] : terms_) coef *= c;
  }
  return *this;
}

Poly& Poly::operator/=(const Rational& c) {
  if (c == 0) throw std::domain_error("polynomial division by zero");
  for (auto& [m, coef] : terms_) coef /= c;
  return *this;
}

Poly operator*(const Poly& x, const Poly& y) {
  Poly out;
  for (const auto& [mx, cx] : x.terms_) {
    for (const auto& [my, cy] : y.terms_) {
      out.add_term(Rational(cx * cy), mx * my);
    }
  }
  return out;
}

Poly pow(const Poly& base, unsigned exponent) {
  Poly result(1L);
  Poly square = base;
  while (exponent > 0) {
    if (exponent & 1U) result *= square;
    exponent >>= 1U;
    if (exponent > 0) square = square * square;
  }
  return result;
}

Poly partial_derivative(const Poly& p, VarId v) {
  Poly out;
  for (const auto& [m, c] : p.terms()) {
    const std::uint32_t e = m.exponent(v);
    if (e == 0) continue;
    std::vector<Monomial::Factor> factors = m.factors();
    for (auto& f : factors) {
      if (f.first == v) f.second -= 1;
    }
    out.add_term(Rational(c * e), Monomial::from_factors(std::move(factors)));
  }
  return out;
}

Rational substitute(const Poly& p, const Environment& env) {
  Rational total = 0;
  for (const auto& [m, c] : p.terms()) {
    Rational value = c;
    for (const auto& [v, e] : m.factors()) {
      auto it = env.find(v);
      if (it == env.end()) throw MissingVariable(v);
      value *= power(it->second, e);
    }
    total += value;
  }
  return total;
}

Poly substitute_partial(const Poly& p, const Environment& env) {
  Poly out;
  for (const auto& [m, c] : p.terms()) {
    Rational coef = c;
    std::vector<Monomial::Factor> rest;
    for (const auto& [v, e] : m.factors()) {
      auto it = env.find(v);
      if (it == env.end()) {
        rest.emplace_back(v, e);
      } else {
        coef *= power(it->second, e);
      }
    }
    out.add_term(coef, Monomial::from_factors(std::move(rest)));
  }
  return out;
}

Poly substitute_poly(const Poly& p, const std::map<VarId, Poly>& env) {
  Poly out;
  for (const auto& [m, c] : p.terms()) {
    Poly value(c);
    for (const auto& [v, e] : m.factors()) {
      auto it = env.find(v);
      value *= it == env.end() ? Poly::term(Rational(1), Monomial(v, e)) : pow(it->second, e);
    }
    out += value;
  }
  return out;
}

std::string to_string(const Poly& p) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : p.terms()) {
    Rational magnitude = abs(c);
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    const bool unit_coef = magnitude == 1;
    if (!unit_coef || m.is_unit()) os << to_string(magnitude);
    bool need_star = !unit_coef;
    for (const auto& [v, e] : m.factors()) {
      if (need_star) os << "*";
      os << to_string(v);
      if (e > 1) os << "^" << e;
      need_star = true;
    }
  }
  return os.str();
}

nlohmann::json to_json(const Poly& p) {
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& [m, c] : p.terms()) {
    nlohmann::json vars = nlohmann::json::array();
    for (const auto& [v, e] : m.factors()) {
      vars.push_back({v.kind == VarKind::A ? "a" : "b", v.index, e});
    }
    terms.push_back({{"coef", {{"num", c.get_num().get_str()}, {"den", c.get_den().get_str()}}},
                     {"vars", std::move(vars)}});
  }
  return {{"terms", std::move(terms)}};
}

Poly poly_from_json(const nlohmann::json& j) {
  Poly out;
  for (const auto& t : j.at("terms")) {
    const Integer num(t.at("coef").at("num").get<std::string>(), 10);
    const Integer den(t.at("coef").at("den").get<std::string>(), 10);
    if (den == 0) throw ParseError("zero denominator in polynomial JSON");
    Rational coef(num, den);
    coef.canonicalize();
    std::vector<Monomial::Factor> factors;
    for (const auto& v : t.at("vars")) {
      const auto name = v.at(0).get<std::string>();
      if (name != "a" && name != "b") throw ParseError("unknown variable kind '" + name + "'");
      const auto index = v.at(1).get<std::uint32_t>();
      if (index == 0) throw ParseError("variable index must be >= 1");
      factors.emplace_back(VarId{name == "a" ? VarKind::A : VarKind::B, index},
                           v.at(2).get<std::uint32_t>());
    }
    out.add_term(coef, Monomial::from_factors(std::move(factors)));
  }
  return out;
}

}  // namespace rbell
