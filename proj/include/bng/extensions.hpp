#pragma once

// Numerical shadow of a destabilizing quotient of an extension
// 0 -> O^k -> E -> F -> 0 with 0 < d < n. A non-stable E has a stable
// quotient H of rank s and degree d'; H and F share a quotient H_1 of rank m,
// and G_1 = ker(F -> H_1) has rank l, so l + m = n - k.
//
// The four conditions on such data are
//   (a) s d - n d' >= 0                                 mu(H) <= mu(E)
//   (b) (l + m) d' - m d > 0                            stability of F
//   (c) d' - s + m g >= 0                               stability of H
//   (d) m(n - s - l) - d'(l + s) + s(d + l g - n + s) > 0
// and (a), (b), (c) together imply (d).

#include <optional>
#include <utility>
#include <vector>

#include "bng/core.hpp"

namespace bng {

struct ExtensionTuple {
  BNPoint base;
  std::int64_t s = 0;
  std::int64_t d_prime = 0;
  std::int64_t m = 0;
  std::int64_t l = 0;

  /// Rank i = n - k of the quotient F.
  std::int64_t quotient_rank() const { return base.n - base.k; }

  friend bool operator==(const ExtensionTuple&, const ExtensionTuple&) = default;
};

/// Throws Error(InvalidTuple) unless 1 <= m <= s-1, l >= 1, l + m = n - k,
/// s <= n - l, s <= n - 1 and (when require_nonnegative_degree) d' >= 0.
void check_tuple(const ExtensionTuple& t, bool require_nonnegative_degree = true);

struct InequalityStatus {
  bool a = false;
  bool b = false;
  bool c = false;
  bool d = false;
  /// (n - d) s >= n(n - d - l g)
  bool lemma62 = false;
  Integer lhs_d;
};

InequalityStatus inequality_status(const ExtensionTuple& t);

/// Left-hand side of (d) at an arbitrary rational (m, d').
Rational lhs_d(std::int64_t g, std::int64_t n, std::int64_t d, std::int64_t s, std::int64_t l,
               const Rational& m, const Rational& d_prime);

/// Intersection of the lines s d - n d' = 0 and d' - s + m g = 0 in the
/// (m, d') plane: (s(n-d)/(ng), s d/n). Requires g >= 2, 0 < d < n and
/// 0 <= s <= n - 1.
struct PointC {
  Rational m;
  Rational d_prime;
};
PointC point_C(std::int64_t g, std::int64_t n, std::int64_t d, std::int64_t s);

/// Factored value of (d) at point C:
/// s(g-1)/(ng) * [s(n-d) - n(n-d-lg) + l(n-d)].
Rational lhs_d_at_C(std::int64_t g, std::int64_t n, std::int64_t d, std::int64_t s,
                    std::int64_t l);

/// Every tuple satisfying the rank constraints and (a), (b), (c), in
/// lexicographic (s, m, d') order. Throws OutOfStrip unless 0 < d < n and
/// InvalidK unless 1 <= k < n.
std::vector<ExtensionTuple> admissible_tuples(const BNPoint& p);

struct CriterionResult {
  bool holds = true;
  std::optional<ExtensionTuple> witness;
};

/// The non-emptiness criterion: (d) holds strictly at every admissible tuple.
CriterionResult prop51_criterion(const BNPoint& p);

/// (s - m)(d - d' + l g - n + s), a lower bound for the codimension of the
/// extensions admitting the quotient.
Integer codim_bound(const ExtensionTuple& t);

/// dim M(n-k, d) + l d' - m(d - d') - l m (g - 1), the parameter count of the
/// extensions 0 -> G_1 -> F -> H_1 -> 0.
Integer param_count(const ExtensionTuple& t);

}  // namespace bng
