#include "bng/classify.hpp"

namespace bng {

const char* to_string(LocusStatus s) {
  return s == LocusStatus::NonEmpty ? "NonEmpty" : "Empty";
}

const char* to_string(LocusModel m) {
  switch (m) {
    case LocusModel::None: return "None";
    case LocusModel::SemistableTrivialFactor: return "SemistableTrivialFactor";
    case LocusModel::SymmetricPower: return "SymmetricPower";
  }
  return "None";
}

const char* to_string(Governing g) {
  switch (g) {
    case Governing::ThmB: return "ThmB";
    case Governing::ThmBTilde: return "ThmBTilde";
    case Governing::Thm7_1: return "Thm7_1";
    case Governing::Thm7_2: return "Thm7_2";
    case Governing::Thm8_2: return "Thm8_2";
    case Governing::Thm8_3: return "Thm8_3";
    case Governing::RegionFact: return "RegionFact";
  }
  return "RegionFact";
}

namespace {

void check_strip(const BNPoint& p) {
  check_point(p);
  if (p.d < 0 || p.d > p.n) throw Error(ErrorCode::OutOfStrip, "d must satisfy 0 ≤ d ≤ n");
  if (p.n == 1) throw Error(ErrorCode::RankOne, "n must be ≥ 2");
}

Classification empty(Governing why) {
  Classification c;
  c.governing = why;
  return c;
}

Classification non_empty(Integer dim, Governing why, LocusModel model = LocusModel::None) {
  Classification c;
  c.status = LocusStatus::NonEmpty;
  c.dimension = std::move(dim);
  c.irreducible = true;
  c.model = model;
  c.governing = why;
  return c;
}

}  // namespace

Classification classify_stable(const BNPoint& p) {
  check_strip(p);
  // More sections than the rank forces O^k inside a bundle of rank n < k.
  if (p.k > p.n) return empty(Governing::RegionFact);
  // A section of a stable bundle of degree 0 destabilizes it.
  if (p.d == 0) return empty(Governing::Thm7_1);

  Governing why = p.d == p.n ? Governing::Thm8_2 : Governing::ThmB;
  if (p.d == p.n && p.k == p.n) return empty(why);
  if (below_threshold(p)) return empty(why);

  Classification c = non_empty(brill_noether_number(p), why);
  c.singular_locus = BNPoint{p.g, p.n, p.d, p.k + 1};
  return c;
}

Classification classify_semistable(const BNPoint& p) {
  check_strip(p);
  if (p.k > p.n) return empty(Governing::RegionFact);
  if (p.d == 0) {
    return non_empty(moduli_dim(p.n - p.k, p.g), Governing::Thm7_2,
                     LocusModel::SemistableTrivialFactor);
  }
  if (p.d == p.n && p.k == p.n) {
    return non_empty(to_integer(p.n), Governing::Thm8_3, LocusModel::SymmetricPower);
  }
  if (below_threshold(p)) return empty(Governing::ThmBTilde);
  return non_empty(brill_noether_number(p), Governing::ThmBTilde);
}

Classification singular_locus(const BNPoint& p) {
  if (!classify_stable(p).non_empty()) {
    throw Error(ErrorCode::EmptyLocus, locus_label(p.k - 1, p.n, p.d) + " is empty");
  }
  return classify_stable(BNPoint{p.g, p.n, p.d, p.k + 1});
}

std::vector<StripRow> scan_strip(std::int64_t g, std::int64_t n) {
  check_strip(BNPoint{g, n, 0, 1});
  std::vector<StripRow> rows;
  rows.reserve(static_cast<std::size_t>((n + 1) * n));
  for (std::int64_t d = 0; d <= n; ++d) {
    for (std::int64_t k = 1; k <= n; ++k) {
      const BNPoint p{g, n, d, k};
      rows.push_back({p, classify_stable(p), classify_semistable(p), brill_noether_number(p)});
    }
  }
  return rows;
}

}  // namespace bng
