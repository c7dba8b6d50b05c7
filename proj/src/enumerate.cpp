#include "rbell/enumerate.hpp"

namespace rbell {

namespace {

// Positions are filled from the last to the first, each ascending, which
// produces colexicographic order.

void pi_rec(unsigned pos, unsigned count_left, unsigned weight_left, PiIndex& idx,
            const std::function<void(const PiIndex&)>& visit) {
  if (pos == 0) {
    if (count_left == 0 && weight_left == 0) visit(idx);
    return;
  }
  const unsigned size = pos;  // idx.k[pos-1] counts blocks of this size
  if (size == 1) {
    if (count_left == weight_left) {
      idx.k[0] = count_left;
      visit(idx);
      idx.k[0] = 0;
    }
    return;
  }
  for (unsigned c = 0; c <= count_left && c * size <= weight_left; ++c) {
    idx.k[pos - 1] = c;
    pi_rec(pos - 1, count_left - c, weight_left - c * size, idx, visit);
  }
  idx.k[pos - 1] = 0;
}

struct LambdaState {
  unsigned n;
  LambdaIndex idx;
  const std::function<void(const LambdaIndex&)>* visit;
};

void composition_rec(unsigned pos, unsigned left, CompositionIndex& idx,
                     const std::function<void(const CompositionIndex&)>& visit) {
  if (pos == 1) {
    idx.parts[0] = left;
    visit(idx);
    idx.parts[0] = 0;
    return;
  }
  for (unsigned c = 0; c <= left; ++c) {
    idx.parts[pos - 1] = c;
    composition_rec(pos - 1, left - c, idx, visit);
  }
  idx.parts[pos - 1] = 0;
}

}  // namespace

void for_each_pi(unsigned n, unsigned k, const std::function<void(const PiIndex&)>& visit) {
  PiIndex idx{std::vector<unsigned>(n, 0)};
  if (n == 0) {
    if (k == 0) visit(idx);
    return;
  }
  pi_rec(n, k, n, idx, visit);
}

std::vector<PiIndex> iter_pi(unsigned n, unsigned k) {
  std::vector<PiIndex> out;
  for_each_pi(n, k, [&](const PiIndex& idx) { out.push_back(idx); });
  return out;
}

void for_each_lambda(unsigned n, unsigned k, unsigned r,
                     const std::function<void(const LambdaIndex&)>& visit) {
  LambdaState st{n, LambdaIndex{std::vector<unsigned>(n, 0), std::vector<unsigned>(n + 1, 0)}, &visit};
  // Combined vector (k_1..k_n, r_0..r_n): slot s < n is k_{s+1}, slot n + i is r_i.
  struct Rec {
    LambdaState& st;
    void operator()(int slot, unsigned k_left, unsigned r_left, unsigned w_left) const {
      if (slot < 0) {
        if (k_left == 0 && r_left == 0 && w_left == 0) (*st.visit)(st.idx);
        return;
      }
      const auto s = static_cast<unsigned>(slot);
      if (s == st.n) {  // r_0: forced
        st.idx.r[0] = r_left;
        (*this)(slot - 1, k_left, 0, w_left);
        st.idx.r[0] = 0;
        return;
      }
      if (s > st.n) {
        const unsigned i = s - st.n;
        for (unsigned c = 0; c <= r_left && c * i <= w_left; ++c) {
          st.idx.r[i] = c;
          (*this)(slot - 1, k_left, r_left - c, w_left - c * i);
        }
        st.idx.r[i] = 0;
        return;
      }
      const unsigned size = s + 1;
      for (unsigned c = 0; c <= k_left && c * size <= w_left; ++c) {
        st.idx.k[s] = c;
        (*this)(slot - 1, k_left - c, r_left, w_left - c * size);
      }
      st.idx.k[s] = 0;
    }
  };
  Rec{st}(static_cast<int>(2 * n), k, r, n);
}

std::vector<LambdaIndex> iter_lambda(unsigned n, unsigned k, unsigned r) {
  std::vector<LambdaIndex> out;
  for_each_lambda(n, k, r, [&](const LambdaIndex& idx) { out.push_back(idx); });
  return out;
}

void for_each_composition(unsigned total, unsigned slots,
                          const std::function<void(const CompositionIndex&)>& visit) {
  CompositionIndex idx{std::vector<unsigned>(slots, 0)};
  if (slots == 0) {
    if (total == 0) visit(idx);
    return;
  }
  composition_rec(slots, total, idx, visit);
}

std::vector<CompositionIndex> iter_compositions(unsigned total, unsigned slots) {
  std::vector<CompositionIndex> out;
  for_each_composition(total, slots, [&](const CompositionIndex& idx) { out.push_back(idx); });
  return out;
}

}  // namespace rbell
