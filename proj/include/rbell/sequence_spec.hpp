#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "rbell/bell.hpp"

namespace rbell {

enum class Family { RStirling2, RStirling1, RLah, RWhitney2, RWhitney1, RWhitneyLah };
enum class Mode { Plain, Associated, Truncated, Even, Odd };

/// How a block of size s contributes beyond its colour weight: plain blocks,
/// cycles ((s-1)! arrangements) or linearly ordered blocks (s! arrangements).
enum class StructureKind { Blocks, Cycles, OrderedBlocks };

class InvalidMode : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Names a number family: r-Stirling (both kinds) and r-Lah with an optional
/// size restriction, or one of the three r-Whitney families with parameter m.
struct SeqSpec {
  Family family = Family::RStirling2;
  unsigned r = 0;
  unsigned m = 1;          // Whitney parameter
  Mode mode = Mode::Plain;
  unsigned threshold = 1;  // for Associated (size >= threshold) and Truncated (size <= threshold)

  /// Throws InvalidMode for restrictions on Whitney families, m = 0 or threshold = 0.
  void validate() const;
  bool is_whitney() const;
  /// r-Stirling/r-Lah tables use total indices (n+r, k+r); Whitney tables reduced ones.
  bool total_indexing() const { return !is_whitney(); }
  bool first_kind() const { return family == Family::RStirling1 || family == Family::RWhitney1; }

  friend bool operator==(const SeqSpec&, const SeqSpec&) = default;
};

std::string_view to_string(Family f);
std::string_view to_string(Mode m);
/// "plain", "associated:3", "truncated:2", "even", "odd".
std::string mode_label(const SeqSpec& spec);
Family parse_family(std::string_view name);
Mode parse_mode(std::string_view name);

StructureKind structure_of(Family family);
/// Arrangements of one block of size s under `kind`.
Integer structure_factor(StructureKind kind, unsigned s);

/// Colour counts per block size before the structure factor: the 0/1
/// restriction indicators for r-Stirling/r-Lah, the literal weights for the
/// Whitney families.
std::pair<VarSeq, VarSeq> color_weights(const SeqSpec& spec);

/// The weight sequences (a, b) whose partial r-Bell polynomial gives the
/// family: colour weights times the structure factor.
std::pair<VarSeq, VarSeq> weights_of(const SeqSpec& spec);

/// Integer triangle, rows n = 0..n_max, columns k = 0..n. First-kind
/// families store absolute values.
struct NumberTable {
  SeqSpec spec;
  unsigned n_max = 0;
  std::vector<std::vector<Integer>> rows;

  const Integer& at(unsigned n, unsigned k) const { return rows.at(n).at(k); }
  friend bool operator==(const NumberTable&, const NumberTable&) = default;
};

NumberTable make_table(const SeqSpec& spec, unsigned n_max);

}  // namespace rbell
