#include "rbell/oracle.hpp"

#include <algorithm>
#include <cstdlib>
#include <string>

namespace rbell {

unsigned enumeration_guard() {
  if (const char* env = std::getenv("RBELL_GUARD"); env != nullptr && *env != '\0') {
    try {
      return static_cast<unsigned>(std::stoul(env));
    } catch (const std::exception&) {
      throw std::invalid_argument(std::string("RBELL_GUARD is not a number: ") + env);
    }
  }
  return 12;
}

namespace {

struct Enumerator {
  unsigned total;   // n + r
  unsigned r;
  unsigned target;  // k + r
  std::vector<unsigned> sizes;
  std::map<PartitionShape, Integer>* out;

  void run(unsigned element) {
    const auto blocks = static_cast<unsigned>(sizes.size());
    if (element == total) {
      if (blocks == target) record();
      return;
    }
    if (total - element < target - blocks) return;  // not enough elements left to open blocks
    for (unsigned b = 0; b < blocks; ++b) {
      ++sizes[b];
      run(element + 1);
      --sizes[b];
    }
    if (blocks < target) {
      sizes.push_back(1);
      run(element + 1);
      sizes.pop_back();
    }
  }

  void record() {
    PartitionShape shape;
    shape.distinguished.assign(sizes.begin(), sizes.begin() + r);
    shape.ordinary.assign(sizes.begin() + r, sizes.end());
    std::sort(shape.distinguished.begin(), shape.distinguished.end());
    std::sort(shape.ordinary.begin(), shape.ordinary.end());
    auto [it, inserted] = out->try_emplace(std::move(shape), 1);
    if (!inserted) ++it->second;
  }
};

}  // namespace

std::map<PartitionShape, Integer> partition_shapes(unsigned n, unsigned k, unsigned r) {
  if (n + r > enumeration_guard()) {
    throw TooLarge("oracle enumeration over " + std::to_string(n + r) + " elements exceeds the guard of " +
                   std::to_string(enumeration_guard()) + " (set RBELL_GUARD to override)");
  }
  std::map<PartitionShape, Integer> out;
  if (k > n) return out;
  // Elements 1..r open blocks 1..r in order.
  Enumerator e{n + r, r, k + r, std::vector<unsigned>(r, 1), &out};
  e.run(r);
  return out;
}

Poly oracle_sum(unsigned n, unsigned k, unsigned r, StructureKind kind, const VarSeq& a, const VarSeq& b) {
  const auto shapes = partition_shapes(n, k, r);
  std::map<unsigned, Poly> a_cache, b_cache;
  auto weight = [kind](std::map<unsigned, Poly>& cache, const VarSeq& seq, unsigned s) -> const Poly& {
    auto it = cache.find(s);
    if (it == cache.end()) it = cache.emplace(s, seq(s) * Rational(structure_factor(kind, s))).first;
    return it->second;
  };
  Poly sum;
  for (const auto& [shape, count] : shapes) {
    Poly term{Rational(count)};
    for (unsigned s : shape.distinguished) term *= weight(b_cache, b, s);
    for (unsigned s : shape.ordinary) term *= weight(a_cache, a, s);
    sum += term;
  }
  return sum;
}

NumberTable oracle_count_table(const SeqSpec& spec, unsigned n_max) {
  auto [a, b] = color_weights(spec);
  const StructureKind kind = structure_of(spec.family);
  NumberTable table = make_table(spec, n_max);
  for (unsigned n = 0; n <= n_max; ++n) {
    for (unsigned k = 0; k <= n; ++k) {
      Poly value;
      if (spec.total_indexing()) {
        if (n < spec.r || k < spec.r) continue;
        value = oracle_sum(n - spec.r, k - spec.r, spec.r, kind, a, b);
      } else {
        value = oracle_sum(n, k, spec.r, kind, a, b);
      }
      table.rows[n][k] = to_integer(value.constant_term(), "oracle_count_table");
    }
  }
  return table;
}

}  // namespace rbell
