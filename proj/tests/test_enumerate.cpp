#include <doctest.h>

#include <set>

#include "rbell/enumerate.hpp"
#include "rbell/rational.hpp"

using namespace rbell;

namespace {

// Partitions of n into exactly k parts: p(n,k) = p(n-1,k-1) + p(n-k,k).
long partitions_into(long n, long k) {
  if (n == 0 && k == 0) return 1;
  if (n <= 0 || k <= 0) return 0;
  return partitions_into(n - 1, k - 1) + partitions_into(n - k, k);
}

// All vectors v of length len with entries <= bound, brute force.
void all_vectors(unsigned len, unsigned bound, const std::function<void(const std::vector<unsigned>&)>& visit) {
  std::vector<unsigned> v(len, 0);
  while (true) {
    visit(v);
    unsigned i = 0;
    while (i < len && v[i] == bound) v[i++] = 0;
    if (i == len) return;
    ++v[i];
  }
}

}  // namespace

TEST_CASE("pi(n,k) indexes partitions of n into k parts") {
  for (unsigned n = 0; n <= 10; ++n) {
    for (unsigned k = 0; k <= n + 1; ++k) {
      const auto all = iter_pi(n, k);
      CHECK(static_cast<long>(all.size()) == partitions_into(n, k));
      std::set<std::vector<unsigned>> distinct;
      for (const auto& idx : all) {
        unsigned count = 0, mass = 0;
        for (std::size_t i = 0; i < idx.k.size(); ++i) {
          count += idx.k[i];
          mass += static_cast<unsigned>(i + 1) * idx.k[i];
        }
        CHECK(count == k);
        CHECK(mass == n);
        distinct.insert(idx.k);
      }
      CHECK(distinct.size() == all.size());
    }
  }
}

TEST_CASE("weak compositions: count and colex order") {
  for (unsigned total = 0; total <= 6; ++total) {
    for (unsigned slots = 1; slots <= 4; ++slots) {
      CHECK(Integer(iter_compositions(total, slots).size()) == binomial(total + slots - 1, slots - 1));
    }
  }
  const auto c = iter_compositions(2, 2);
  REQUIRE(c.size() == 3);
  CHECK(c[0].parts == std::vector<unsigned>{2, 0});
  CHECK(c[1].parts == std::vector<unsigned>{1, 1});
  CHECK(c[2].parts == std::vector<unsigned>{0, 2});
  CHECK(iter_compositions(0, 0).size() == 1);
  CHECK(iter_compositions(3, 0).empty());
}

TEST_CASE("lambda index set matches a brute-force filter") {
  for (unsigned n = 0; n <= 5; ++n) {
    for (unsigned k = 0; k <= n; ++k) {
      for (unsigned r = 0; r <= 3; ++r) {
        std::set<std::pair<std::vector<unsigned>, std::vector<unsigned>>> expected;
        const unsigned bound = std::max(k, r);
        all_vectors(n, bound, [&](const std::vector<unsigned>& kv) {
          unsigned count = 0, mass = 0;
          for (unsigned i = 0; i < n; ++i) {
            count += kv[i];
            mass += (i + 1) * kv[i];
          }
          if (count != k || mass > n) return;
          all_vectors(n + 1, r, [&](const std::vector<unsigned>& rv) {
            unsigned rcount = 0, rmass = 0;
            for (unsigned i = 0; i <= n; ++i) {
              rcount += rv[i];
              rmass += i * rv[i];
            }
            if (rcount == r && mass + rmass == n) expected.insert({kv, rv});
          });
        });
        std::set<std::pair<std::vector<unsigned>, std::vector<unsigned>>> got;
        for (const auto& idx : iter_lambda(n, k, r)) got.insert({idx.k, idx.r});
        CHECK(got == expected);
        CHECK(iter_lambda(n, k, r).size() == expected.size());
      }
    }
  }
}
