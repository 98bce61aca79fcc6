#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "bng/serialize.hpp"
#include "bng/verify.hpp"
#include "oracles.hpp"

using bng::Campaign;
using bng::ErrorCode;
using bng::SweepBounds;
using bng::VerificationReport;

namespace {

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const bng::Error& e) {
    return e.code();
  }
  FAIL("expected bng::Error");
  return ErrorCode::Io;
}

SweepBounds bounds(std::int64_t g_min, std::int64_t g_max, std::int64_t n_max, std::int64_t D = 1,
                   std::int64_t cap = 4, std::int64_t jobs = 1) {
  SweepBounds b;
  b.g_min = g_min;
  b.g_max = g_max;
  b.n_max = n_max;
  b.rational_denominator = D;
  b.m_cap_factor = cap;
  b.jobs = jobs;
  return b;
}

// Naive count of hypothesis-satisfying tuples on the 1/D grid.
std::uint64_t naive_prop61_count(const SweepBounds& b) {
  std::uint64_t count = 0;
  const std::int64_t D = b.rational_denominator;
  for (std::int64_t g = b.g_min; g <= b.g_max; ++g) {
    for (std::int64_t n = 2; n <= b.n_max; ++n) {
      for (std::int64_t d = 1; d < n; ++d) {
        for (std::int64_t s = 1; s < n; ++s) {
          for (std::int64_t l = 1; l + s <= n; ++l) {
            for (std::int64_t M = 1; M <= b.m_cap_factor * n * D; ++M) {
              for (std::int64_t P = 1; P <= n * D; ++P) {
                const oracle::Frac m(M, D), dp(P, D);
                const bool a = oracle::Frac(s * d) - oracle::Frac(n) * dp >= oracle::Frac(0);
                const bool bb = oracle::Frac(l) * dp + m * dp - m * oracle::Frac(d) > oracle::Frac(0);
                const bool c = dp - oracle::Frac(s) + m * oracle::Frac(g) >= oracle::Frac(0);
                if (a && bb && c) ++count;
              }
            }
          }
        }
      }
    }
  }
  return count;
}

std::string strip_meta(const VerificationReport& r) { return bng::io::to_json(r, false).dump(); }

}  // namespace

TEST_CASE("bounds validation") {
  CHECK(code_of([] { bng::check_bounds(bounds(1, 4, 12)); }) == ErrorCode::InvalidArgument);
  CHECK(code_of([] { bng::check_bounds(bounds(2, 4, 1)); }) == ErrorCode::InvalidArgument);
  CHECK(code_of([] { bng::check_bounds(bounds(2, 4, 12, 0)); }) == ErrorCode::InvalidArgument);
  CHECK(code_of([] { bng::check_bounds(bounds(2, 4, 12, 1, 0)); }) == ErrorCode::InvalidArgument);
  CHECK(code_of([] { bng::check_bounds(bounds(2, 4, 12, 1, 4, 0)); }) == ErrorCode::InvalidArgument);
  CHECK(code_of([] { bng::check_bounds(bounds(2, 4, bng::kMaxSweepN + 1)); }) == ErrorCode::InvalidArgument);
  CHECK_NOTHROW(bng::check_bounds(bounds(5, 4, 12)));
}

TEST_CASE("default campaigns verify") {
  for (const Campaign c : {Campaign::Prop61, Campaign::Identities, Campaign::ThmBConsistency}) {
    const VerificationReport r = bng::run_campaign(c, SweepBounds{});
    CHECK(r.verified());
    CHECK(r.counterexamples.empty());
    CHECK(r.tuples_checked > 0);
    CHECK(r.campaign == c);
  }
}

TEST_CASE("smallest grid") {
  // n = 2 forces d = s = l = 1; (b) needs d' > m/(1+m) and (a) needs d' <= 1/2.
  const VerificationReport r = bng::verify_prop61(bounds(2, 2, 2));
  CHECK(r.verified());
  CHECK(r.tuples_checked == 0);
  const VerificationReport half = bng::verify_prop61(bounds(2, 2, 2, 2));
  CHECK(half.tuples_checked == naive_prop61_count(bounds(2, 2, 2, 2)));
}

TEST_CASE("tuple counts agree with naive enumeration") {
  for (const auto& b : {bounds(2, 3, 7), bounds(2, 2, 6, 2), bounds(3, 3, 5, 3, 2)}) {
    CHECK(bng::verify_prop61(b).tuples_checked == naive_prop61_count(b));
  }
}

TEST_CASE("negated conclusion reports every tuple") {
  bng::VerifyOptions opts;
  opts.negate_conclusion = true;
  const SweepBounds b = bounds(2, 3, 6);
  const VerificationReport r = bng::verify_prop61(b, opts);
  CHECK_FALSE(r.verified());
  CHECK(r.counterexample_count == r.tuples_checked);
  CHECK(r.counterexamples.size() == std::min<std::uint64_t>(r.tuples_checked, bng::kMaxRecordedCounterexamples));
  for (std::size_t i = 1; i < r.counterexamples.size(); ++i) {
    CHECK_FALSE(bng::counterexample_less(r.counterexamples[i], r.counterexamples[i - 1]));
  }
  REQUIRE_FALSE(r.counterexamples.empty());
  const auto& ce = r.counterexamples.front();
  CHECK(ce.kind == "prop61");
  REQUIRE(ce.fields.size() == 8);
  CHECK(ce.fields[0].first == "g");
  CHECK(ce.fields[7].first == "lhs_d");
  CHECK(ce.fields[7].second.sign() > 0);
}

TEST_CASE("recorded counterexamples are capped") {
  bng::VerifyOptions opts;
  opts.negate_conclusion = true;
  const VerificationReport r = bng::verify_prop61(bounds(2, 4, 12), opts);
  CHECK(r.counterexample_count == r.tuples_checked);
  CHECK(r.counterexample_count > bng::kMaxRecordedCounterexamples);
  CHECK(r.counterexamples.size() == bng::kMaxRecordedCounterexamples);
}

TEST_CASE("reports do not depend on the number of jobs") {
  for (const Campaign c : {Campaign::Prop61, Campaign::Identities, Campaign::ThmBConsistency}) {
    const std::string one = strip_meta(bng::run_campaign(c, bounds(2, 4, 10, 2, 4, 1)));
    const std::string four = strip_meta(bng::run_campaign(c, bounds(2, 4, 10, 2, 4, 4)));
    CHECK(one == four);
  }
  bng::VerifyOptions opts;
  opts.negate_conclusion = true;
  CHECK(strip_meta(bng::verify_prop61(bounds(2, 3, 9, 1, 4, 1), opts)) ==
        strip_meta(bng::verify_prop61(bounds(2, 3, 9, 1, 4, 3), opts)));
}

TEST_CASE("coverage grows with the grid") {
  const auto base = bng::verify_prop61(bounds(2, 3, 8)).tuples_checked;
  CHECK(bng::verify_prop61(bounds(2, 3, 9)).tuples_checked > base);
  CHECK(bng::verify_prop61(bounds(2, 4, 8)).tuples_checked > base);
  CHECK(bng::verify_prop61(bounds(2, 3, 8, 2)).tuples_checked > base);
  CHECK(bng::verify_prop61(bounds(2, 3, 8, 1, 5)).tuples_checked >= base);
}

TEST_CASE("empty genus range") {
  const VerificationReport r = bng::verify_identities(bounds(5, 4, 12));
  CHECK(r.verified());
  CHECK(r.tuples_checked == 0);
}

TEST_CASE("progress callback") {
  std::uint64_t calls = 0, last = 0;
  bng::VerifyOptions opts;
  opts.progress = [&](Campaign c, std::uint64_t so_far) {
    CHECK(c == Campaign::Prop61);
    CHECK(so_far > last);
    last = so_far;
    ++calls;
  };
  const VerificationReport r = bng::verify_prop61(bounds(2, 4, 14, 1, 4, 2), opts);
  CHECK(calls == r.tuples_checked / 1'000'000);
}

TEST_CASE("report JSON shape") {
  const VerificationReport r = bng::verify_thmb_consistency(bounds(2, 2, 4));
  const auto j = bng::io::to_json(r);
  CHECK(j["campaign"] == "ThmBConsistency");
  CHECK(j["verified"] == true);
  CHECK(j["counterexample_count"] == 0);
  CHECK(j["bounds"]["g_min"] == 2);
  CHECK(j["bounds"]["n_max"] == 4);
  CHECK(j.contains("meta"));
  CHECK_FALSE(bng::io::to_json(r, false).contains("meta"));
  CHECK(nlohmann::ordered_json::parse(j.dump()) == j);
}
