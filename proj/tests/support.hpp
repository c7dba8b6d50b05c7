// Brute-force oracles and generators shared by the unit tests. Nothing here
// calls into the library's own enumerators.
#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <random>
#include <vector>

#include "rbell/poly.hpp"

namespace testing {

using rbell::Integer;
using rbell::Poly;
using rbell::Rational;

/// Every set partition of {0..n-1}, blocks as sorted element lists. Built by
/// choosing the block of the smallest remaining element as a subset mask.
inline void set_partitions(unsigned n, const std::function<void(const std::vector<std::vector<unsigned>>&)>& visit) {
  std::vector<std::vector<unsigned>> blocks;
  std::function<void(std::uint32_t)> rec = [&](std::uint32_t remaining) {
    if (remaining == 0) {
      visit(blocks);
      return;
    }
    const unsigned first = static_cast<unsigned>(__builtin_ctz(remaining));
    const std::uint32_t rest = remaining & ~(1u << first);
    // all subsets of `rest`, joined with `first`
    for (std::uint32_t sub = rest;; sub = (sub - 1) & rest) {
      std::vector<unsigned> block{first};
      for (unsigned e = 0; e < 32; ++e) {
        if (sub & (1u << e)) block.push_back(e);
      }
      blocks.push_back(block);
      rec(rest & ~sub);
      blocks.pop_back();
      if (sub == 0) break;
    }
  };
  rec(n == 0 ? 0u : (n >= 32 ? ~0u : (1u << n) - 1));
}

/// Weighted count of partitions of {0..total-1} into `blocks` blocks with
/// elements 0..r-1 in distinct blocks. Block of size s gets dist(s) if it
/// holds one of those elements, ord(s) otherwise.
inline Poly partition_sum(unsigned total, unsigned blocks, unsigned r, const std::function<Poly(unsigned)>& ord,
                          const std::function<Poly(unsigned)>& dist) {
  Poly sum;
  set_partitions(total, [&](const std::vector<std::vector<unsigned>>& p) {
    if (p.size() != blocks) return;
    std::vector<int> owner(r, -1);
    Poly term(1);
    for (std::size_t b = 0; b < p.size(); ++b) {
      unsigned marked = 0;
      for (unsigned e : p[b]) {
        if (e < r) ++marked;
      }
      if (marked > 1) return;
      const auto s = static_cast<unsigned>(p[b].size());
      term *= marked ? dist(s) : ord(s);
    }
    sum += term;
  });
  return sum;
}

/// Permutations of {0..n-1} with k cycles and 0..r-1 in distinct cycles.
inline Integer permutation_count(unsigned n, unsigned k, unsigned r) {
  std::vector<unsigned> perm(n);
  std::iota(perm.begin(), perm.end(), 0u);
  Integer count = 0;
  do {
    std::vector<int> cycle_of(n, -1);
    unsigned cycles = 0;
    for (unsigned s = 0; s < n; ++s) {
      if (cycle_of[s] >= 0) continue;
      for (unsigned e = s; cycle_of[e] < 0; e = perm[e]) cycle_of[e] = static_cast<int>(cycles);
      ++cycles;
    }
    bool separated = true;
    for (unsigned i = 0; i < r && separated; ++i) {
      for (unsigned j = i + 1; j < r; ++j) separated = separated && cycle_of[i] != cycle_of[j];
    }
    if (cycles == k && separated) ++count;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return count;
}

inline Integer fact(unsigned n) {
  Integer f = 1;
  for (unsigned i = 2; i <= n; ++i) f *= i;
  return f;
}

/// Random polynomial in a_1..a_3, b_1..b_3 with small rational coefficients.
inline Poly random_poly(std::mt19937_64& rng, unsigned terms = 4) {
  Poly p;
  for (unsigned t = 0; t < terms; ++t) {
    Rational c(static_cast<long>(rng() % 11) - 5, static_cast<long>(rng() % 4) + 1);
    c.canonicalize();
    Poly m(c);
    const unsigned factors = static_cast<unsigned>(rng() % 3);
    for (unsigned f = 0; f < factors; ++f) {
      const auto index = static_cast<std::uint32_t>(rng() % 3 + 1);
      m *= Poly::variable(rng() % 2 ? rbell::var_a(index) : rbell::var_b(index));
    }
    p += m;
  }
  return p;
}

inline Rational random_rational(std::mt19937_64& rng) {
  Rational c(static_cast<long>(rng() % 19) - 9, static_cast<long>(rng() % 6) + 1);
  c.canonicalize();
  return c;
}

}  // namespace testing
