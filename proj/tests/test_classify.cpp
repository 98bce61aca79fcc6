#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "bng/classify.hpp"
#include "oracles.hpp"

using bng::BNPoint;
using bng::Classification;
using bng::ErrorCode;
using bng::Governing;
using bng::Integer;
using bng::LocusModel;
using bng::LocusStatus;

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

Integer big(std::int64_t v) { return bng::to_integer(v); }

}  // namespace

TEST_CASE("stable classification examples") {
  const Classification c = bng::classify_stable({2, 2, 1, 1});
  CHECK(c.status == LocusStatus::NonEmpty);
  CHECK(c.dimension == big(3));
  CHECK(c.irreducible == true);
  REQUIRE(c.singular_locus.has_value());
  CHECK(*c.singular_locus == BNPoint{2, 2, 1, 2});
  CHECK(c.governing == Governing::ThmB);

  const Classification nnn = bng::classify_stable({5, 4, 4, 4});
  CHECK(nnn.status == LocusStatus::Empty);
  CHECK(nnn.governing == Governing::Thm8_2);
  CHECK_FALSE(nnn.dimension.has_value());
  CHECK_FALSE(nnn.singular_locus.has_value());

  CHECK(bng::classify_stable({2, 5, 1, 4}).status == LocusStatus::Empty);

  const Classification deg0 = bng::classify_stable({3, 2, 0, 1});
  CHECK(deg0.status == LocusStatus::Empty);
  CHECK(deg0.governing == Governing::Thm7_1);
}

TEST_CASE("semistable classification examples") {
  const Classification trivial = bng::classify_semistable({2, 3, 0, 2});
  CHECK(trivial.status == LocusStatus::NonEmpty);
  CHECK(trivial.dimension == big(2));
  CHECK(trivial.model == LocusModel::SemistableTrivialFactor);
  CHECK(trivial.governing == Governing::Thm7_2);

  const Classification sym = bng::classify_semistable({2, 2, 2, 2});
  CHECK(sym.status == LocusStatus::NonEmpty);
  CHECK(sym.dimension == big(2));
  CHECK(sym.model == LocusModel::SymmetricPower);
  CHECK(sym.governing == Governing::Thm8_3);

  CHECK(bng::classify_semistable({2, 2, 1, 2}).status == LocusStatus::Empty);

  const Classification on = bng::classify_semistable({4, 5, 0, 5});
  CHECK(on.status == LocusStatus::NonEmpty);
  CHECK(on.dimension == big(0));
}

TEST_CASE("classification errors") {
  CHECK(code_of([] { bng::classify_stable({2, 3, 4, 1}); }) == ErrorCode::OutOfStrip);
  CHECK(code_of([] { bng::classify_stable({2, 3, -1, 1}); }) == ErrorCode::OutOfStrip);
  CHECK(code_of([] { bng::classify_semistable({2, 1, 1, 1}); }) == ErrorCode::RankOne);
  CHECK(code_of([] { bng::classify_stable({1, 2, 1, 1}); }) == ErrorCode::InvalidArgument);
  CHECK(code_of([] { bng::classify_stable({2, 2, 1, 0}); }) == ErrorCode::InvalidArgument);
}

TEST_CASE("singular locus") {
  const Classification sing = bng::singular_locus({2, 4, 2, 1});
  CHECK(sing.status == LocusStatus::NonEmpty);
  // rho(g=2, n=4, d=2, k=2) = 17 - 2 * 4.
  CHECK(sing.dimension == big(9));

  CHECK(bng::singular_locus({2, 2, 1, 1}).status == LocusStatus::Empty);
  CHECK(code_of([] { bng::singular_locus({2, 5, 1, 4}); }) == ErrorCode::EmptyLocus);
}

TEST_CASE("strip scan") {
  const auto rows = bng::scan_strip(2, 2);
  REQUIRE(rows.size() == 6);
  for (std::size_t i = 1; i < rows.size(); ++i) {
    CHECK(std::pair(rows[i - 1].point.d, rows[i - 1].point.k) <
          std::pair(rows[i].point.d, rows[i].point.k));
  }
  // (d, k) = (0, 1), (0, 2), (1, 1), (1, 2), (2, 1), (2, 2)
  CHECK(rows[2].stable.status == LocusStatus::NonEmpty);
  CHECK(rows[2].stable.dimension == big(3));
  CHECK(rows[1].stable.status == LocusStatus::Empty);
  CHECK(rows[1].semistable.status == LocusStatus::NonEmpty);
  CHECK(rows[1].semistable.dimension == big(0));
  CHECK(rows[5].stable.status == LocusStatus::Empty);
  CHECK(rows[5].semistable.dimension == big(2));
  CHECK(rows[5].semistable.model == LocusModel::SymmetricPower);

  for (std::int64_t g = 2; g <= 4; ++g) {
    for (std::int64_t n = 2; n <= 9; ++n) {
      const auto scan = bng::scan_strip(g, n);
      CHECK(scan.size() == static_cast<std::size_t>((n + 1) * n));
      for (const auto& r : scan) {
        CHECK(r.stable == bng::classify_stable(r.point));
        CHECK(r.semistable == bng::classify_semistable(r.point));
        CHECK(r.rho == bng::brill_noether_number(r.point));
      }
    }
  }
}

TEST_CASE("verdicts match the literal non-emptiness predicates") {
  for (std::int64_t g = 2; g <= 6; ++g) {
    for (std::int64_t n = 2; n <= 14; ++n) {
      for (std::int64_t d = 0; d <= n; ++d) {
        for (std::int64_t k = 1; k <= n + 2; ++k) {
          const BNPoint p{g, n, d, k};
          CHECK(bng::classify_stable(p).non_empty() == oracle::stable_nonempty(g, n, d, k));
          CHECK(bng::classify_semistable(p).non_empty() == oracle::semistable_nonempty(g, n, d, k));
        }
      }
    }
  }
}

TEST_CASE("structural properties over the strip") {
  for (std::int64_t g = 2; g <= 5; ++g) {
    for (std::int64_t n = 2; n <= 12; ++n) {
      for (std::int64_t d = 0; d <= n; ++d) {
        for (std::int64_t k = 1; k <= n; ++k) {
          const BNPoint p{g, n, d, k};
          const Classification st = bng::classify_stable(p);
          const Classification ss = bng::classify_semistable(p);
          if (st.dimension) CHECK(st.non_empty());
          if (st.singular_locus) CHECK(st.non_empty());
          // Downward closure in k.
          for (std::int64_t k2 = 1; k2 < k; ++k2) {
            if (st.non_empty()) CHECK(bng::classify_stable({g, n, d, k2}).non_empty());
            if (ss.non_empty()) CHECK(bng::classify_semistable({g, n, d, k2}).non_empty());
          }
          if (st.non_empty()) {
            CHECK(ss.non_empty());
            CHECK(bng::brill_noether_number(p) >= 1);
          }
          if (ss.non_empty()) {
            CHECK(bng::Rational(k) <= bng::clifford_bound(g, n, d));
            CHECK(ss.irreducible == true);
          }
          if (d == 0 && k < n) {
            const bool smaller = bng::moduli_dim(n - k, g) < bng::brill_noether_number(p);
            CHECK(smaller == (n < (n - k) * g));
          }
        }
      }
    }
  }
}
