#include "bng/extensions.hpp"

namespace bng {

namespace {

void check_open_strip(const BNPoint& p) {
  check_point(p);
  if (p.d <= 0 || p.d >= p.n) throw Error(ErrorCode::OutOfStrip, "d must satisfy 0 < d < n");
}

void check_point_c_args(std::int64_t g, std::int64_t n, std::int64_t d, std::int64_t s) {
  if (g < 2) throw Error(ErrorCode::InvalidArgument, "g must be ≥ 2");
  if (d <= 0 || d >= n) throw Error(ErrorCode::OutOfStrip, "d must satisfy 0 < d < n");
  if (s < 0 || s > n - 1) throw Error(ErrorCode::InvalidArgument, "s must satisfy 0 ≤ s ≤ n-1");
}

}  // namespace

void check_tuple(const ExtensionTuple& t, bool require_nonnegative_degree) {
  check_point(t.base);
  const auto fail = [](const char* what) { throw Error(ErrorCode::InvalidTuple, what); };
  if (t.m < 1) fail("m must be ≥ 1");
  if (t.l < 1) fail("l must be ≥ 1");
  if (t.l + t.m != t.quotient_rank()) fail("l + m must equal n - k");
  if (t.m > t.s - 1) fail("m must be ≤ s - 1");
  if (t.s > t.base.n - t.l) fail("s must be ≤ n - l");
  if (t.s > t.base.n - 1) fail("s must be ≤ n - 1");
  if (require_nonnegative_degree && t.d_prime < 0) fail("d' must be ≥ 0");
}

InequalityStatus inequality_status(const ExtensionTuple& t) {
  check_tuple(t, false);
  const Integer g = to_integer(t.base.g);
  const Integer n = to_integer(t.base.n);
  const Integer d = to_integer(t.base.d);
  const Integer s = to_integer(t.s);
  const Integer dp = to_integer(t.d_prime);
  const Integer m = to_integer(t.m);
  const Integer l = to_integer(t.l);

  InequalityStatus st;
  st.a = s * d - n * dp >= 0;
  st.b = (l + m) * dp - m * d > 0;
  st.c = dp - s + m * g >= 0;
  st.lhs_d = m * (n - s - l) - dp * (l + s) + s * (d + l * g - n + s);
  st.d = st.lhs_d > 0;
  st.lemma62 = (n - d) * s >= n * (n - d - l * g);
  return st;
}

Rational lhs_d(std::int64_t g, std::int64_t n, std::int64_t d, std::int64_t s, std::int64_t l,
               const Rational& m, const Rational& d_prime) {
  return m * Rational(n - s - l) - d_prime * Rational(l + s) +
         Rational(s) * Rational(d + l * g - n + s);
}

PointC point_C(std::int64_t g, std::int64_t n, std::int64_t d, std::int64_t s) {
  check_point_c_args(g, n, d, s);
  return {Rational::of(s * (n - d), n * g), Rational::of(s * d, n)};
}

Rational lhs_d_at_C(std::int64_t g, std::int64_t n, std::int64_t d, std::int64_t s,
                    std::int64_t l) {
  check_point_c_args(g, n, d, s);
  if (l < 1) throw Error(ErrorCode::InvalidArgument, "l must be ≥ 1");
  const Integer bracket = to_integer(s) * to_integer(n - d) -
                          to_integer(n) * (to_integer(n - d) - to_integer(l) * to_integer(g)) +
                          to_integer(l) * to_integer(n - d);
  return Rational(to_integer(s) * to_integer(g - 1), to_integer(n) * to_integer(g)) *
         Rational(bracket);
}

std::vector<ExtensionTuple> admissible_tuples(const BNPoint& p) {
  check_open_strip(p);
  if (p.k < 1 || p.k >= p.n) throw Error(ErrorCode::InvalidK, "k must satisfy 1 ≤ k < n");

  const std::int64_t i = p.n - p.k;
  std::vector<ExtensionTuple> out;
  for (std::int64_t s = 2; s <= p.n - 1; ++s) {
    for (std::int64_t m = 1; m <= std::min(s - 1, i - 1); ++m) {
      const std::int64_t l = i - m;
      if (s > p.n - l) continue;
      // (a) bounds d' above by s d / n.
      const std::int64_t dp_max = (s * p.d) / p.n;
      for (std::int64_t dp = 0; dp <= dp_max; ++dp) {
        const ExtensionTuple t{p, s, dp, m, l};
        const InequalityStatus st = inequality_status(t);
        if (st.a && st.b && st.c) out.push_back(t);
      }
    }
  }
  return out;
}

CriterionResult prop51_criterion(const BNPoint& p) {
  for (const ExtensionTuple& t : admissible_tuples(p)) {
    if (!inequality_status(t).d) return {false, t};
  }
  return {};
}

Integer codim_bound(const ExtensionTuple& t) {
  check_tuple(t);
  const Integer sm = to_integer(t.s - t.m);
  return Integer(sm * (to_integer(t.base.d) - t.d_prime + to_integer(t.l) * t.base.g -
                       t.base.n + t.s));
}

Integer param_count(const ExtensionTuple& t) {
  check_tuple(t);
  const Integer l = to_integer(t.l);
  const Integer m = to_integer(t.m);
  const Integer dp = to_integer(t.d_prime);
  const Integer d = to_integer(t.base.d);
  return Integer(moduli_dim(t.quotient_rank(), t.base.g) + l * dp - m * (d - dp) -
                 l * m * (to_integer(t.base.g) - 1));
}

}  // namespace bng
