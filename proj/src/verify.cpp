#include "bng/verify.hpp"

#include <algorithm>
#include <atomic>
#include <mutex>
#include <thread>

#include "bng/classify.hpp"
#include "bng/error.hpp"
#include "bng/extensions.hpp"
#include "bng/map.hpp"

namespace bng {

const char* to_string(Campaign c) {
  switch (c) {
    case Campaign::Prop61: return "Prop61";
    case Campaign::Identities: return "Identities";
    case Campaign::ThmBConsistency: return "ThmBConsistency";
  }
  return "Prop61";
}

void check_bounds(const SweepBounds& b) {
  const auto fail = [](const std::string& what) { throw Error(ErrorCode::InvalidArgument, what); };
  if (b.g_min < 2) fail("g-min must be ≥ 2");
  if (b.g_max > kMaxSweepG) fail("g-max must be ≤ " + std::to_string(kMaxSweepG));
  if (b.n_max < 2) fail("n-max must be ≥ 2");
  if (b.n_max > kMaxSweepN) fail("n-max must be ≤ " + std::to_string(kMaxSweepN));
  if (b.rational_denominator < 1 || b.rational_denominator > kMaxDenominator) {
    fail("denominator must be in [1, " + std::to_string(kMaxDenominator) + "]");
  }
  if (b.m_cap_factor < 1 || b.m_cap_factor > kMaxCapFactor) {
    fail("m-cap-factor must be in [1, " + std::to_string(kMaxCapFactor) + "]");
  }
  if (b.jobs < 1) fail("jobs must be ≥ 1");
}

bool counterexample_less(const Counterexample& a, const Counterexample& b) {
  if (a.kind != b.kind) return a.kind < b.kind;
  const std::size_t n = std::min(a.fields.size(), b.fields.size());
  for (std::size_t i = 0; i < n; ++i) {
    if (a.fields[i].second != b.fields[i].second) return a.fields[i].second < b.fields[i].second;
  }
  return a.fields.size() < b.fields.size();
}

namespace {

constexpr std::uint64_t kProgressEvery = 1'000'000;
constexpr std::uint64_t kFlushEvery = 1 << 16;

class ProgressMeter {
 public:
  ProgressMeter(Campaign c, const ProgressFn& fn) : campaign_(c), fn_(fn) {}

  void add(std::uint64_t delta) {
    if (!fn_ || delta == 0) return;
    const std::uint64_t before = total_.fetch_add(delta);
    const std::uint64_t after = before + delta;
    if (after / kProgressEvery != before / kProgressEvery) {
      std::lock_guard lock(mu_);
      fn_(campaign_, after);
    }
  }

 private:
  Campaign campaign_;
  const ProgressFn& fn_;
  std::atomic<std::uint64_t> total_{0};
  std::mutex mu_;
};

// Result of one shard: a pure function of the shard descriptor.
struct ShardResult {
  std::uint64_t checked = 0;
  std::uint64_t violations = 0;
  std::vector<Counterexample> found;

  void record(Counterexample ce) {
    ++violations;
    found.push_back(std::move(ce));
  }

  // Counts since the last flush to the progress meter.
  std::uint64_t unflushed = 0;
  void tick(ProgressMeter& meter) {
    ++checked;
    if (++unflushed == kFlushEvery) {
      meter.add(unflushed);
      unflushed = 0;
    }
  }
};

void keep_smallest(std::vector<Counterexample>& v) {
  std::sort(v.begin(), v.end(), counterexample_less);
  if (v.size() > kMaxRecordedCounterexamples) v.resize(kMaxRecordedCounterexamples);
}

// Runs fn over every shard with `jobs` workers and merges the results in shard
// order, so the report does not depend on scheduling.
template <class Shard, class Fn>
VerificationReport run_sharded(Campaign campaign, const SweepBounds& bounds,
                               const VerifyOptions& opts, const std::vector<Shard>& shards, Fn fn) {
  const auto start = std::chrono::steady_clock::now();
  ProgressMeter meter(campaign, opts.progress);
  std::vector<ShardResult> results(shards.size());
  std::atomic<std::size_t> next{0};

  const auto worker = [&] {
    for (std::size_t i = next++; i < shards.size(); i = next++) {
      ShardResult r;
      fn(shards[i], r, meter);
      meter.add(r.unflushed);
      keep_smallest(r.found);
      results[i] = std::move(r);
    }
  };

  const auto workers = static_cast<std::size_t>(
      std::min<std::int64_t>(bounds.jobs, static_cast<std::int64_t>(std::max<std::size_t>(shards.size(), 1))));
  if (workers <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(worker);
  }

  VerificationReport report;
  report.campaign = campaign;
  report.bounds = bounds;
  for (ShardResult& r : results) {
    report.tuples_checked += r.checked;
    report.counterexample_count += r.violations;
    report.counterexamples.insert(report.counterexamples.end(),
                                  std::make_move_iterator(r.found.begin()),
                                  std::make_move_iterator(r.found.end()));
  }
  keep_smallest(report.counterexamples);
  report.elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
      std::chrono::steady_clock::now() - start);
  return report;
}

struct GenusRank {
  std::int64_t g;
  std::int64_t n;
};

struct GenusRankRank {
  std::int64_t g;
  std::int64_t n;
  std::int64_t s;
};

std::vector<GenusRank> genus_rank_shards(const SweepBounds& b) {
  std::vector<GenusRank> out;
  for (std::int64_t g = b.g_min; g <= b.g_max; ++g) {
    for (std::int64_t n = 2; n <= b.n_max; ++n) out.push_back({g, n});
  }
  return out;
}

// The (a)-(d) sweep over (m, d') = (M/D, P/D). Each condition is multiplied through
// by a positive power of D so the comparisons stay in integers:
//   (a) s d D - n P >= 0
//   (b) (l D + M) P - M d D > 0
//   (c) P - s D + M g >= 0
//   (d) M (n - s - l) - P (l + s) + s D (d + l g - n + s) > 0
// check_bounds keeps every product well inside 64 bits.
void prop61_shard(const GenusRankRank& sh, std::int64_t D, std::int64_t cap_factor, bool negate,
                  ShardResult& r, ProgressMeter& meter) {
  const std::int64_t g = sh.g;
  const std::int64_t n = sh.n;
  const std::int64_t s = sh.s;
  const std::int64_t m_max = cap_factor * n * D;
  for (std::int64_t d = 1; d < n; ++d) {
    const std::int64_t p_max = (s * d * D) / n;  // (a)
    for (std::int64_t l = 1; l <= n - s; ++l) {
      const std::int64_t tail = s * D * (d + l * g - n + s);
      for (std::int64_t M = 1; M <= m_max; ++M) {
        for (std::int64_t P = 1; P <= p_max; ++P) {
          if ((l * D + M) * P - M * d * D <= 0) continue;  // (b)
          if (P - s * D + M * g < 0) continue;             // (c)
          r.tick(meter);
          const std::int64_t lhs = M * (n - s - l) - P * (l + s) + tail;
          const bool holds = lhs > 0;
          if (holds == negate) {
            r.record({"prop61",
                      {{"g", Rational(g)},
                       {"n", Rational(n)},
                       {"d", Rational(d)},
                       {"s", Rational(s)},
                       {"l", Rational(l)},
                       {"m", Rational::of(M, D)},
                       {"d_prime", Rational::of(P, D)},
                       {"lhs_d", Rational::of(lhs, D)}}});
          }
        }
      }
    }
  }
}

Counterexample point_record(const char* kind, const BNPoint& p) {
  return {kind, {{"g", Rational(p.g)}, {"n", Rational(p.n)}, {"d", Rational(p.d)}, {"k", Rational(p.k)}}};
}

void identities_shard(const GenusRank& sh, ShardResult& r, ProgressMeter& meter) {
  const std::int64_t g = sh.g;
  const std::int64_t n = sh.n;
  const Rational gm1(g - 1);
  const LineCoeffs tangent = tangent_line(g);

  for (std::int64_t d = 0; d <= n; ++d) {
    for (std::int64_t k = 1; k <= n; ++k) {
      const BNPoint p{g, n, d, k};
      const Integer rho = brill_noether_number(p);

      r.tick(meter);
      if (rho != extension_dimension_count(p)) r.record(point_record("identity_dimension", p));

      r.tick(meter);
      const Rational nn(n * n);
      if (nn * rho_tilde(g, slope_coords(p)) != Rational(Integer(rho - 1))) {
        r.record(point_record("identity_rho_tilde", p));
      }

      r.tick(meter);
      const Integer sections_bound =
          k < n ? h1_dual(p) : Integer(to_integer(d) + to_integer(n - k) * to_integer(g - 1));
      if (below_threshold(p) != (to_integer(k) > sections_bound)) {
        r.record(point_record("identity_threshold", p));
      }

      r.tick(meter);
      const Rational lambda = Rational::of(k, n);
      const SlopeCoords on_line{lambda, tangent.mu_at(lambda)};
      const Rational dist = lambda - 1;
      if (!tangent.contains(on_line) || rho_tilde(g, on_line) != gm1 * dist * dist) {
        r.record({"identity_tangent", {{"g", Rational(g)}, {"lambda", lambda}}});
      }
    }
  }

  for (std::int64_t d = 1; d < n; ++d) {
    for (std::int64_t s = 1; s <= n - 1; ++s) {
      const PointC c = point_C(g, n, d, s);
      for (std::int64_t l = 1; l <= n; ++l) {
        r.tick(meter);
        if (lhs_d(g, n, d, s, l, c.m, c.d_prime) != lhs_d_at_C(g, n, d, s, l)) {
          r.record({"identity_point_c",
                    {{"g", Rational(g)},
                     {"n", Rational(n)},
                     {"d", Rational(d)},
                     {"s", Rational(s)},
                     {"l", Rational(l)}}});
        }
      }
    }
  }
}

void thmb_shard(const GenusRank& sh, ShardResult& r, ProgressMeter& meter) {
  for (std::int64_t d = 1; d < sh.n; ++d) {
    for (std::int64_t k = 1; k < sh.n; ++k) {
      const BNPoint p{sh.g, sh.n, d, k};
      // The criterion only proves non-emptiness; points below the threshold
      // are empty for other reasons.
      if (below_threshold(p)) continue;
      r.tick(meter);
      const CriterionResult cr = prop51_criterion(p);
      if (!cr.holds) {
        Counterexample ce = point_record("thmb", p);
        const ExtensionTuple& w = *cr.witness;
        ce.fields.emplace_back("s", Rational(w.s));
        ce.fields.emplace_back("d_prime", Rational(w.d_prime));
        ce.fields.emplace_back("m", Rational(w.m));
        ce.fields.emplace_back("l", Rational(w.l));
        r.record(std::move(ce));
      }
    }
  }
}

}  // namespace

VerificationReport verify_prop61(const SweepBounds& b, const VerifyOptions& opts) {
  check_bounds(b);
  std::vector<GenusRankRank> shards;
  for (std::int64_t g = b.g_min; g <= b.g_max; ++g) {
    for (std::int64_t n = 2; n <= b.n_max; ++n) {
      for (std::int64_t s = 1; s <= n - 1; ++s) shards.push_back({g, n, s});
    }
  }
  const std::int64_t D = b.rational_denominator;
  const std::int64_t cap = b.m_cap_factor;
  const bool negate = opts.negate_conclusion;
  return run_sharded(Campaign::Prop61, b, opts, shards,
                     [&](const GenusRankRank& sh, ShardResult& r, ProgressMeter& meter) {
                       prop61_shard(sh, D, cap, negate, r, meter);
                     });
}

VerificationReport verify_identities(const SweepBounds& b, const VerifyOptions& opts) {
  check_bounds(b);
  return run_sharded(Campaign::Identities, b, opts, genus_rank_shards(b), identities_shard);
}

VerificationReport verify_thmb_consistency(const SweepBounds& b, const VerifyOptions& opts) {
  check_bounds(b);
  return run_sharded(Campaign::ThmBConsistency, b, opts, genus_rank_shards(b), thmb_shard);
}

VerificationReport run_campaign(Campaign c, const SweepBounds& b, const VerifyOptions& opts) {
  switch (c) {
    case Campaign::Prop61: return verify_prop61(b, opts);
    case Campaign::Identities: return verify_identities(b, opts);
    case Campaign::ThmBConsistency: return verify_thmb_consistency(b, opts);
  }
  throw Error(ErrorCode::InvalidArgument, "unknown campaign");
}

}  // namespace bng
