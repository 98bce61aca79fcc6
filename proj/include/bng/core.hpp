#pragma once

// Closed-form quantities attached to Brill-Noether loci of bundles of rank n
// and degree d with at least k sections on a curve of genus g. All results are
// exact.

#include <cstdint>
#include <string>

#include "bng/error.hpp"
#include "bng/rational.hpp"

namespace bng {

/// A Brill-Noether locus W^{k-1}_{n,d} on a genus-g curve.
struct BNPoint {
  std::int64_t g = 2;
  std::int64_t n = 1;
  std::int64_t d = 0;
  std::int64_t k = 1;

  friend bool operator==(const BNPoint&, const BNPoint&) = default;
  friend auto operator<=>(const BNPoint&, const BNPoint&) = default;
};

/// Throws Error(InvalidArgument) unless g >= 2, n >= 1 and k >= 1.
void check_point(const BNPoint& p);

/// Label such as "W^1_{2,1}"; the superscript is braced when it has more
/// than one character.
std::string locus_label(std::int64_t superscript, std::int64_t n, std::int64_t d);

/// Map coordinates lambda = k/n, mu = d/n.
struct SlopeCoords {
  Rational lambda;
  Rational mu;

  friend bool operator==(const SlopeCoords&, const SlopeCoords&) = default;
};

SlopeCoords slope_coords(const BNPoint& p);

/// rho = n^2(g-1) + 1 - k(k - d + n(g-1)). May be negative.
Integer brill_noether_number(const BNPoint& p);

/// (g-1) - lambda(lambda - mu + (g-1)); equals (rho - 1)/n^2 at lattice points.
Rational rho_tilde(std::int64_t g, const SlopeCoords& c);

/// n + d/2, valid for semistable bundles with 0 <= d/n <= 2g-2.
/// Throws Error(SlopeOutOfRange) outside that slope range.
Rational clifford_bound(std::int64_t g, std::int64_t n, std::int64_t d);

/// h^1(F^*) = d + (n-k)(g-1) for the quotient F = E/O^k.
/// Throws Error(InvalidQuotientRank) when k >= n.
Integer h1_dual(const BNPoint& p);

/// Dimension of the moduli space of stable bundles of rank n: n^2(g-1)+1,
/// g for n = 1 and 0 for n = 0 (the single class of O^k).
Integer moduli_dim(std::int64_t n, std::int64_t g);

/// Dimension k(d + (n-k)g - n) of the Grassmannian classifying extensions
/// 0 -> O^k -> E -> F -> 0 without trivial summands.
/// Throws InvalidQuotientRank when k >= n and ThresholdViolated when
/// n > d + (n-k)g.
Integer grass_dim(const BNPoint& p);

/// n^2(g-1): bound on the parameters of a bounded family of non-stable bundles.
Integer nonstable_param_bound(std::int64_t n, std::int64_t g);

/// The right-hand side (n-k)^2(g-1) + 1 + k(d + (n-k)g - n) of the dimension
/// count for extensions; equal to rho.
Integer extension_dimension_count(const BNPoint& p);

/// n > d + (n-k)g, the emptiness threshold.
bool below_threshold(const BNPoint& p);

}  // namespace bng
