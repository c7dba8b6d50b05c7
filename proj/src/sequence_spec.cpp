#include "rbell/sequence_spec.hpp"

namespace rbell {

void SeqSpec::validate() const {
  if (is_whitney()) {
    if (mode != Mode::Plain) {
      throw InvalidMode(std::string("mode '") + std::string(to_string(mode)) + "' is not defined for " +
                        std::string(to_string(family)));
    }
    if (m == 0) throw InvalidMode("Whitney families need m >= 1");
  }
  if ((mode == Mode::Associated || mode == Mode::Truncated) && threshold == 0) {
    throw InvalidMode("restriction threshold must be >= 1");
  }
}

bool SeqSpec::is_whitney() const {
  return family == Family::RWhitney2 || family == Family::RWhitney1 || family == Family::RWhitneyLah;
}

std::string_view to_string(Family f) {
  switch (f) {
    case Family::RStirling2: return "r-stirling2";
    case Family::RStirling1: return "r-stirling1";
    case Family::RLah: return "r-lah";
    case Family::RWhitney2: return "r-whitney2";
    case Family::RWhitney1: return "r-whitney1";
    case Family::RWhitneyLah: return "r-whitney-lah";
  }
  return "r-stirling2";
}

std::string_view to_string(Mode m) {
  switch (m) {
    case Mode::Plain: return "plain";
    case Mode::Associated: return "associated";
    case Mode::Truncated: return "truncated";
    case Mode::Even: return "even";
    case Mode::Odd: return "odd";
  }
  return "plain";
}

std::string mode_label(const SeqSpec& spec) {
  std::string s(to_string(spec.mode));
  if (spec.mode == Mode::Associated || spec.mode == Mode::Truncated) {
    s += ":" + std::to_string(spec.threshold);
  }
  return s;
}

Family parse_family(std::string_view name) {
  for (auto f : {Family::RStirling2, Family::RStirling1, Family::RLah, Family::RWhitney2, Family::RWhitney1,
                 Family::RWhitneyLah}) {
    if (to_string(f) == name) return f;
  }
  throw InvalidMode("unknown family '" + std::string(name) + "'");
}

Mode parse_mode(std::string_view name) {
  for (auto m : {Mode::Plain, Mode::Associated, Mode::Truncated, Mode::Even, Mode::Odd}) {
    if (to_string(m) == name) return m;
  }
  throw InvalidMode("unknown mode '" + std::string(name) + "'");
}

StructureKind structure_of(Family family) {
  switch (family) {
    case Family::RStirling1: return StructureKind::Cycles;
    case Family::RLah: return StructureKind::OrderedBlocks;
    default: return StructureKind::Blocks;
  }
}

Integer structure_factor(StructureKind kind, unsigned s) {
  switch (kind) {
    case StructureKind::Blocks: return 1;
    case StructureKind::Cycles: return s == 0 ? Integer(0) : factorial(s - 1);
    case StructureKind::OrderedBlocks: return factorial(s);
  }
  return 1;
}

namespace {

bool admitted(const SeqSpec& spec, unsigned l) {
  switch (spec.mode) {
    case Mode::Plain: return true;
    case Mode::Associated: return l >= spec.threshold;
    case Mode::Truncated: return l <= spec.threshold;
    case Mode::Even: return l % 2 == 0;
    case Mode::Odd: return l % 2 == 1;
  }
  return true;
}

// prod_{i=from}^{to} (i*m + c), empty product 1
Rational rising_product(long from, long to, unsigned m, unsigned c) {
  Integer p = 1;
  for (long i = from; i <= to; ++i) p *= Integer(i * static_cast<long>(m) + c);
  return Rational(p);
}

Rational m_power(unsigned m, unsigned e) { return power(Rational(m), e); }

}  // namespace

std::pair<VarSeq, VarSeq> color_weights(const SeqSpec& spec) {
  spec.validate();
  const unsigned m = spec.m;
  switch (spec.family) {
    case Family::RWhitney2:
      return {VarSeq::rational_rule([m](unsigned l) { return m_power(m, l - 1); }), VarSeq::constant(1)};
    case Family::RWhitney1:
      // (l-1)! m^{l-1} and (m+1)(2m+1)...((l-1)m+1)
      return {VarSeq::rational_rule([m](unsigned l) -> Rational { return Rational(factorial(l - 1)) * m_power(m, l - 1); }),
              VarSeq::rational_rule([m](unsigned l) { return rising_product(1, static_cast<long>(l) - 1, m, 1); })};
    case Family::RWhitneyLah:
      // l! m^{l-1} and 2(m+2)...((l-2)m+2)
      return {VarSeq::rational_rule([m](unsigned l) -> Rational { return Rational(factorial(l)) * m_power(m, l - 1); }),
              VarSeq::rational_rule([m](unsigned l) { return rising_product(0, static_cast<long>(l) - 2, m, 2); })};
    default: {
      const VarSeq indicator = VarSeq::rational_rule([spec](unsigned l) { return Rational(admitted(spec, l) ? 1 : 0); });
      return {indicator, indicator};
    }
  }
}

std::pair<VarSeq, VarSeq> weights_of(const SeqSpec& spec) {
  auto [a, b] = color_weights(spec);
  const StructureKind kind = structure_of(spec.family);
  if (kind == StructureKind::Blocks) return {a, b};
  auto factor = [kind](unsigned l) { return Rational(structure_factor(kind, l)); };
  return {a.scaled(factor), b.scaled(factor)};
}

NumberTable make_table(const SeqSpec& spec, unsigned n_max) {
  NumberTable t{spec, n_max, {}};
  t.rows.reserve(n_max + 1);
  for (unsigned n = 0; n <= n_max; ++n) t.rows.emplace_back(n + 1, Integer(0));
  return t;
}

}  // namespace rbell
