#pragma once

#include <functional>
#include <vector>

namespace rbell {

/// Block-size multiplicities (k_1, ..., k_n) with sum k_i = k and
/// sum i*k_i = n. Entry i-1 holds k_i.
struct PiIndex {
  std::vector<unsigned> k;
  friend bool operator==(const PiIndex&, const PiIndex&) = default;
};

/// Ordinary blocks k_1..k_n and distinguished blocks r_0..r_n, where r_i
/// counts distinguished blocks carrying i further elements. `k[i-1]` holds
/// k_i, `r[i]` holds r_i.
struct LambdaIndex {
  std::vector<unsigned> k;
  std::vector<unsigned> r;
  friend bool operator==(const LambdaIndex&, const LambdaIndex&) = default;
};

/// Weak composition: parts >= 0 with a fixed sum.
struct CompositionIndex {
  std::vector<unsigned> parts;
  friend bool operator==(const CompositionIndex&, const CompositionIndex&) = default;
};

// Visitors yield in colexicographic order of the stored vectors; the
// vector-returning forms collect the same sequence.

void for_each_pi(unsigned n, unsigned k, const std::function<void(const PiIndex&)>& visit);
std::vector<PiIndex> iter_pi(unsigned n, unsigned k);

void for_each_lambda(unsigned n, unsigned k, unsigned r,
                     const std::function<void(const LambdaIndex&)>& visit);
std::vector<LambdaIndex> iter_lambda(unsigned n, unsigned k, unsigned r);

void for_each_composition(unsigned total, unsigned slots,
                          const std::function<void(const CompositionIndex&)>& visit);
std::vector<CompositionIndex> iter_compositions(unsigned total, unsigned slots);

}  // namespace rbell
