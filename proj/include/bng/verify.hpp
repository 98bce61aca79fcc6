#pragma once

// Exhaustive verification campaigns over bounded parameter grids.

#include <chrono>
#include <cstdint>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "bng/rational.hpp"

namespace bng {

enum class Campaign { Prop61, Identities, ThmBConsistency };

const char* to_string(Campaign c);

struct SweepBounds {
  std::int64_t g_min = 2;
  std::int64_t g_max = 4;
  std::int64_t n_max = 12;
  /// (m, d') range over (1/D)Z; 1 is the integer lattice.
  std::int64_t rational_denominator = 1;
  /// m is capped at m_cap_factor * n.
  std::int64_t m_cap_factor = 4;
  std::int64_t jobs = 1;
};

/// Scaled sweep arithmetic stays inside 64 bits under these limits.
inline constexpr std::int64_t kMaxSweepN = 1000;
inline constexpr std::int64_t kMaxSweepG = 1000;
inline constexpr std::int64_t kMaxDenominator = 64;
inline constexpr std::int64_t kMaxCapFactor = 64;

/// Throws Error(InvalidArgument) for out-of-range bounds. g_max < g_min is a
/// valid, empty grid.
void check_bounds(const SweepBounds& b);

/// A fully instantiated parameter record that violates a checked statement.
struct Counterexample {
  std::string kind;
  std::vector<std::pair<std::string, Rational>> fields;

  friend bool operator==(const Counterexample&, const Counterexample&) = default;
};

/// Orders by kind, then by field values lexicographically.
bool counterexample_less(const Counterexample& a, const Counterexample& b);

struct VerificationReport {
  Campaign campaign = Campaign::Prop61;
  SweepBounds bounds;
  std::uint64_t tuples_checked = 0;
  /// Total number of violations found.
  std::uint64_t counterexample_count = 0;
  /// The smallest violations in counterexample_less order, at most
  /// kMaxRecordedCounterexamples of them.
  std::vector<Counterexample> counterexamples;
  std::chrono::milliseconds elapsed{0};

  bool verified() const { return counterexample_count == 0; }
};

inline constexpr std::size_t kMaxRecordedCounterexamples = 1000;

using ProgressFn = std::function<void(Campaign, std::uint64_t tuples_so_far)>;

struct VerifyOptions {
  /// Called roughly every million checked tuples, from worker threads but
  /// never concurrently.
  ProgressFn progress;
  /// Test hook: replaces the conclusion (d) of the Prop61 campaign with its
  /// negation so every hypothesis-satisfying tuple is reported.
  bool negate_conclusion = false;
};

/// Every (g, n, d, s, l, m, d') on the grid with 0 < d < n, 0 < s <= n - l,
/// l > 0 and (a), (b), (c) true is checked for (d).
VerificationReport verify_prop61(const SweepBounds& b, const VerifyOptions& opts = {});

/// The closed-form identities: dimension count, rho-tilde relation, threshold
/// equivalence, tangent touching, and the factored value at point C.
VerificationReport verify_identities(const SweepBounds& b, const VerifyOptions& opts = {});

/// Wherever n <= d + (n-k)g with 0 < d < n and 1 <= k < n, the
/// non-emptiness criterion must hold.
VerificationReport verify_thmb_consistency(const SweepBounds& b, const VerifyOptions& opts = {});

VerificationReport run_campaign(Campaign c, const SweepBounds& b, const VerifyOptions& opts = {});

}  // namespace bng
