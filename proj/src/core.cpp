#include "bng/core.hpp"

namespace bng {

namespace {

void require_genus(std::int64_t g) {
  if (g < 2) throw Error(ErrorCode::InvalidArgument, "g must be ≥ 2");
}

}  // namespace

void check_point(const BNPoint& p) {
  require_genus(p.g);
  if (p.n < 1) throw Error(ErrorCode::InvalidArgument, "n must be ≥ 1");
  if (p.k < 1) throw Error(ErrorCode::InvalidArgument, "k must be ≥ 1");
}

std::string locus_label(std::int64_t superscript, std::int64_t n, std::int64_t d) {
  std::string sup = std::to_string(superscript);
  if (sup.size() > 1) sup = "{" + sup + "}";
  return "W^" + sup + "_{" + std::to_string(n) + "," + std::to_string(d) + "}";
}

SlopeCoords slope_coords(const BNPoint& p) {
  check_point(p);
  return {Rational::of(p.k, p.n), Rational::of(p.d, p.n)};
}

Integer brill_noether_number(const BNPoint& p) {
  check_point(p);
  const Integer g = to_integer(p.g);
  const Integer n = to_integer(p.n);
  const Integer d = to_integer(p.d);
  const Integer k = to_integer(p.k);
  return Integer(n * n * (g - 1) + 1 - k * (k - d + n * (g - 1)));
}

Rational rho_tilde(std::int64_t g, const SlopeCoords& c) {
  require_genus(g);
  const Rational gm1(g - 1);
  return gm1 - c.lambda * (c.lambda - c.mu + gm1);
}

Rational clifford_bound(std::int64_t g, std::int64_t n, std::int64_t d) {
  require_genus(g);
  if (n < 1) throw Error(ErrorCode::InvalidArgument, "n must be ≥ 1");
  if (d < 0 || d > (2 * g - 2) * n) {
    throw Error(ErrorCode::SlopeOutOfRange, "Clifford bound needs 0 ≤ d/n ≤ 2g-2");
  }
  return Rational(n) + Rational::of(d, 2);
}

Integer h1_dual(const BNPoint& p) {
  check_point(p);
  if (p.k >= p.n) throw Error(ErrorCode::InvalidQuotientRank, "quotient rank n-k must be positive");
  return to_integer(p.d) + to_integer(p.n - p.k) * to_integer(p.g - 1);
}

Integer moduli_dim(std::int64_t n, std::int64_t g) {
  require_genus(g);
  if (n < 0) throw Error(ErrorCode::InvalidArgument, "rank must be ≥ 0");
  if (n == 0) return 0;
  if (n == 1) return to_integer(g);
  const Integer nn = to_integer(n);
  return Integer(nn * nn * (to_integer(g) - 1) + 1);
}

Integer grass_dim(const BNPoint& p) {
  check_point(p);
  if (p.k >= p.n) throw Error(ErrorCode::InvalidQuotientRank, "quotient rank n-k must be positive");
  if (below_threshold(p)) {
    throw Error(ErrorCode::ThresholdViolated, "n > d + (n-k)g: every extension has a trivial summand");
  }
  const Integer k = to_integer(p.k);
  return Integer(k * (to_integer(p.d) + to_integer(p.n - p.k) * to_integer(p.g) - to_integer(p.n)));
}

Integer nonstable_param_bound(std::int64_t n, std::int64_t g) {
  require_genus(g);
  if (n < 1) throw Error(ErrorCode::InvalidArgument, "n must be ≥ 1");
  const Integer nn = to_integer(n);
  return Integer(nn * nn * (to_integer(g) - 1));
}

Integer extension_dimension_count(const BNPoint& p) {
  check_point(p);
  const Integer g = to_integer(p.g);
  const Integer i = to_integer(p.n - p.k);
  const Integer k = to_integer(p.k);
  return Integer(i * i * (g - 1) + 1 + k * (to_integer(p.d) + i * g - to_integer(p.n)));
}

bool below_threshold(const BNPoint& p) {
  return to_integer(p.n) > to_integer(p.d) + to_integer(p.n - p.k) * to_integer(p.g);
}

}  // namespace bng
