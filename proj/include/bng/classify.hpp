#pragma once

// Non-emptiness, dimension, irreducibility and singular locus of the stable
// locus W^{k-1}_{n,d} and the semistable locus (S-equivalence classes) in the
// strip 0 <= d <= n.

#include <optional>
#include <vector>

#include "bng/core.hpp"

namespace bng {

enum class LocusStatus { NonEmpty, Empty };

/// Structural model of a semistable locus when it is not governed by rho.
enum class LocusModel {
  None,
  SemistableTrivialFactor,  // [O^k + F] with F semistable of rank n-k, degree 0
  SymmetricPower,           // S^n X, the classes of O(x_1) + ... + O(x_n)
};

/// Which result decides the verdict.
enum class Governing { ThmB, ThmBTilde, Thm7_1, Thm7_2, Thm8_2, Thm8_3, RegionFact };

const char* to_string(LocusStatus s);
const char* to_string(LocusModel m);
const char* to_string(Governing g);

struct Classification {
  LocusStatus status = LocusStatus::Empty;
  std::optional<Integer> dimension;
  std::optional<bool> irreducible;
  /// The locus W^k_{n,d} (one more section) forming the singular set.
  std::optional<BNPoint> singular_locus;
  LocusModel model = LocusModel::None;
  Governing governing = Governing::ThmB;

  bool non_empty() const { return status == LocusStatus::NonEmpty; }

  friend bool operator==(const Classification&, const Classification&) = default;
};

/// Throws OutOfStrip when d < 0 or d > n, RankOne when n = 1 and
/// InvalidArgument for g < 2 or k < 1.
Classification classify_stable(const BNPoint& p);
Classification classify_semistable(const BNPoint& p);

/// Classification of Sing W^{k-1}_{n,d} = W^k_{n,d}.
/// Throws EmptyLocus when W^{k-1}_{n,d} itself is empty.
Classification singular_locus(const BNPoint& p);

struct StripRow {
  BNPoint point;
  Classification stable;
  Classification semistable;
  Integer rho;
};

/// All (d, k) with 0 <= d <= n and 1 <= k <= n, ordered by (d, k).
std::vector<StripRow> scan_strip(std::int64_t g, std::int64_t n);

}  // namespace bng
