#pragma once

#include <string_view>

#include "rbell/bell.hpp"
#include "rbell/report.hpp"

namespace rbell {

/// Query for the partial r-Bell polynomial B^{(r)}_{n+r,k+r}(a; b).
///
/// Every API in this library takes the reduced indices (n, k, r): the value
/// counts partitions of an (n+r)-set into k+r blocks with the first r
/// elements in distinct blocks. Blocks holding one of those r elements are
/// weighted by b_{size}, the others by a_{size}. B^{(r)}_{r,r} = b_1^r, and
/// any query with k > n is the zero polynomial.
struct RBellQuery {
  unsigned n = 0;
  unsigned k = 0;
  unsigned r = 0;
  VarSeq a = VarSeq::symbolic(VarKind::A);
  VarSeq b = VarSeq::symbolic(VarKind::B);
};

enum class RBellMethod { Egf, Composition, Lambda, Convolution, Recurrence };

std::string_view to_string(RBellMethod method);
RBellMethod parse_method(std::string_view name);

/// n!/k! [t^n] (sum_{j>=1} a_j t^j/j!)^k (sum_{j>=0} b_{j+1} t^j/j!)^r.
Poly rbell_egf(const RBellQuery& q);

/// Sum over weak compositions of n-k into r distinguished slots (weight
/// b_{m+1}/m!) and k ordinary slots (weight a_{m+1}/(m+1)!), times n!/k!.
Poly rbell_composition(const RBellQuery& q);

/// Sum over the (k_i; r_i) index set of block multiplicities.
Poly rbell_lambda(const RBellQuery& q);

/// C(n+r, r)^{-1} sum_j C(n+r, j) B_{j,k}(a) B_{n+r-j,r}(l b_l).
Poly rbell_convolution(const RBellQuery& q);

/// k B(n,k,r) = sum_j C(n,j) a_j B(n-j,k-1,r), seeded with the k = 0 EGF value.
Poly rbell_recurrence(const RBellQuery& q);

Poly compute_rbell(const RBellQuery& q, RBellMethod method = RBellMethod::Egf);

/// Convenience for signed reduced indices; negative n, k or r give zero.
Poly rbell_value(long n, long k, long r, const VarSeq& a, const VarSeq& b);

// Identity checks. All are symbolic in generic a_l, b_l.

/// Splitting off the singleton blocks, weighted b_1 and a_1.
IdentityReport check_singleton_decomposition(unsigned n, unsigned k, unsigned r);

/// Scaling a_l -> x a_l, b_l -> y b_l and the two x^l-gradings.
IdentityReport check_homogeneity(unsigned n, unsigned k, unsigned r);

/// The three linear relations obtained from the gradings (k-, r- and
/// (n+r)-weighted sums). The forms that hold are checks; the textbook forms
/// with the shifted b-index are diagnostics.
IdentityReport check_p0_relations(unsigned n, unsigned k, unsigned r);

/// d/da_j and d/db_j of B^{(r)}_{n+r,k+r}.
IdentityReport check_derivative_relations(unsigned n, unsigned k, unsigned r);

/// C(n,r) B^{(r)}_{n,k+r}(l a_l; b_l) = C(n,k) B^{(k)}_{n,k+r}(l b_l; a_l), n total.
/// The variant with first indices n+k-r / n-k+r is reported as a diagnostic.
IdentityReport check_symmetry(unsigned n, unsigned k, unsigned r);

/// Checks that all five methods agree.
IdentityReport check_paths(unsigned n, unsigned k, unsigned r);

/// Fresh indeterminates used as scaling symbols; their indices are far above
/// anything a query of reasonable size touches.
inline constexpr std::uint32_t kAuxIndex = 1000;

}  // namespace rbell
