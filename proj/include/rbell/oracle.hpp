#pragma once

#include <map>
#include <stdexcept>
#include <vector>

#include "rbell/sequence_spec.hpp"

namespace rbell {

class TooLarge : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Largest ground set the enumerator accepts: 12, or RBELL_GUARD when set.
unsigned enumeration_guard();

/// Block sizes of one set partition, split into blocks that hold one of the
/// first r elements and blocks that do not. Both lists are sorted.
struct PartitionShape {
  std::vector<unsigned> ordinary;
  std::vector<unsigned> distinguished;
  friend auto operator<=>(const PartitionShape&, const PartitionShape&) = default;
};

/// Number of set partitions of {1..n+r} into k+r blocks, elements 1..r in
/// distinct blocks, grouped by shape. Enumerates restricted growth strings.
std::map<PartitionShape, Integer> partition_shapes(unsigned n, unsigned k, unsigned r);

/// Weighted count over the partitions above: each ordinary block of size s
/// contributes structure_factor(kind, s) * a_s, each distinguished block
/// structure_factor(kind, s) * b_s. Throws TooLarge beyond the guard.
Poly oracle_sum(unsigned n, unsigned k, unsigned r, StructureKind kind, const VarSeq& a, const VarSeq& b);

/// Family table by brute force: colour weights of `spec` with the family's
/// structure kind, indexed like the family's other tables.
NumberTable oracle_count_table(const SeqSpec& spec, unsigned n_max);

}  // namespace rbell
