#include "bng/bng.h"

#include <iostream>
#include <memory>
#include <new>
#include <string>

#include "bng/classify.hpp"
#include "bng/map.hpp"
#include "bng/serialize.hpp"
#include "bng/verify.hpp"

struct bng_text {
  std::string value;
};

struct bng_report {
  bng::VerificationReport value;
};

namespace {

thread_local std::string g_last_error;

bng_status status_of(bng::ErrorCode code) {
  using bng::ErrorCode;
  switch (code) {
    case ErrorCode::InvalidArgument: return BNG_ERR_INVALID_ARGUMENT;
    case ErrorCode::SlopeOutOfRange: return BNG_ERR_SLOPE_OUT_OF_RANGE;
    case ErrorCode::InvalidQuotientRank: return BNG_ERR_INVALID_QUOTIENT_RANK;
    case ErrorCode::ThresholdViolated: return BNG_ERR_THRESHOLD_VIOLATED;
    case ErrorCode::OutOfStrip: return BNG_ERR_OUT_OF_STRIP;
    case ErrorCode::RankOne: return BNG_ERR_RANK_ONE;
    case ErrorCode::EmptyLocus: return BNG_ERR_EMPTY_LOCUS;
    case ErrorCode::InvalidK: return BNG_ERR_INVALID_K;
    case ErrorCode::InvalidTuple: return BNG_ERR_INVALID_TUPLE;
    case ErrorCode::Parse: return BNG_ERR_PARSE;
    case ErrorCode::Io: return BNG_ERR_IO;
  }
  return BNG_ERR_INTERNAL;
}

// Runs fn, translating exceptions into status codes.
template <class Fn>
bng_status guarded(Fn&& fn) {
  try {
    g_last_error.clear();
    return fn();
  } catch (const bng::Error& e) {
    g_last_error = e.what();
    return status_of(e.code());
  } catch (const std::bad_alloc&) {
    g_last_error = "out of memory";
    return BNG_ERR_INTERNAL;
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return BNG_ERR_INTERNAL;
  }
}

bng_status fail(bng_status status, const char* message) {
  g_last_error = message;
  return status;
}

bng::io::Format format_of(bng_format f) {
  switch (f) {
    case BNG_FORMAT_JSON: return bng::io::Format::Json;
    case BNG_FORMAT_CSV: return bng::io::Format::Csv;
    case BNG_FORMAT_HUMAN: break;
  }
  return bng::io::Format::Human;
}

bng_status emit(std::string s, bng_text** out) {
  *out = new bng_text{std::move(s)};
  return BNG_OK;
}

bng_status store(const bng::Integer& v, int64_t* out) {
  const auto small = bng::to_int64(v);
  if (!small) return fail(BNG_ERR_OVERFLOW, "result does not fit in 64 bits");
  *out = *small;
  return BNG_OK;
}

}  // namespace

extern "C" {

const char* bng_status_name(bng_status status) {
  switch (status) {
    case BNG_OK: return "BNG_OK";
    case BNG_ERR_INVALID_ARGUMENT: return "BNG_ERR_INVALID_ARGUMENT";
    case BNG_ERR_SLOPE_OUT_OF_RANGE: return "BNG_ERR_SLOPE_OUT_OF_RANGE";
    case BNG_ERR_INVALID_QUOTIENT_RANK: return "BNG_ERR_INVALID_QUOTIENT_RANK";
    case BNG_ERR_THRESHOLD_VIOLATED: return "BNG_ERR_THRESHOLD_VIOLATED";
    case BNG_ERR_OUT_OF_STRIP: return "BNG_ERR_OUT_OF_STRIP";
    case BNG_ERR_RANK_ONE: return "BNG_ERR_RANK_ONE";
    case BNG_ERR_EMPTY_LOCUS: return "BNG_ERR_EMPTY_LOCUS";
    case BNG_ERR_INVALID_K: return "BNG_ERR_INVALID_K";
    case BNG_ERR_INVALID_TUPLE: return "BNG_ERR_INVALID_TUPLE";
    case BNG_ERR_PARSE: return "BNG_ERR_PARSE";
    case BNG_ERR_IO: return "BNG_ERR_IO";
    case BNG_ERR_OVERFLOW: return "BNG_ERR_OVERFLOW";
    case BNG_ERR_INTERNAL: return "BNG_ERR_INTERNAL";
  }
  return "BNG_ERR_UNKNOWN";
}

const char* bng_last_error(void) { return g_last_error.c_str(); }

const char* bng_version(void) { return "1.0.0"; }

const char* bng_text_data(const bng_text* text) { return text ? text->value.c_str() : ""; }

size_t bng_text_size(const bng_text* text) { return text ? text->value.size() : 0; }

void bng_text_free(bng_text* text) { delete text; }

bng_status bng_brill_noether_number(int64_t g, int64_t n, int64_t d, int64_t k, int64_t* out) {
  if (!out) return fail(BNG_ERR_INVALID_ARGUMENT, "null output pointer");
  return guarded([&] { return store(bng::brill_noether_number({g, n, d, k}), out); });
}

bng_status bng_moduli_dim(int64_t n, int64_t g, int64_t* out) {
  if (!out) return fail(BNG_ERR_INVALID_ARGUMENT, "null output pointer");
  return guarded([&] { return store(bng::moduli_dim(n, g), out); });
}

bng_status bng_h1_dual(int64_t g, int64_t n, int64_t d, int64_t k, int64_t* out) {
  if (!out) return fail(BNG_ERR_INVALID_ARGUMENT, "null output pointer");
  return guarded([&] { return store(bng::h1_dual({g, n, d, k}), out); });
}

bng_status bng_grass_dim(int64_t g, int64_t n, int64_t d, int64_t k, int64_t* out) {
  if (!out) return fail(BNG_ERR_INVALID_ARGUMENT, "null output pointer");
  return guarded([&] { return store(bng::grass_dim({g, n, d, k}), out); });
}

bng_status bng_clifford_bound(int64_t g, int64_t n, int64_t d, int64_t* num, int64_t* den) {
  if (!num || !den) return fail(BNG_ERR_INVALID_ARGUMENT, "null output pointer");
  return guarded([&] {
    const bng::Rational r = bng::clifford_bound(g, n, d);
    if (const bng_status s = store(r.num(), num); s != BNG_OK) return s;
    return store(r.den(), den);
  });
}

bng_status bng_query_rho(int64_t g, int64_t n, int64_t d, int64_t k, bng_format format,
                         bng_text** out) {
  if (!out) return fail(BNG_ERR_INVALID_ARGUMENT, "null output pointer");
  return guarded([&] { return emit(bng::io::rho_text({g, n, d, k}, format_of(format)), out); });
}

bng_status bng_query_classify(int64_t g, int64_t n, int64_t d, int64_t k, int semistable,
                              bng_format format, bng_text** out) {
  if (!out) return fail(BNG_ERR_INVALID_ARGUMENT, "null output pointer");
  return guarded([&] {
    return emit(bng::io::classification_text({g, n, d, k}, semistable != 0, format_of(format)),
                out);
  });
}

bng_status bng_is_nonempty(int64_t g, int64_t n, int64_t d, int64_t k, int semistable, int* out) {
  if (!out) return fail(BNG_ERR_INVALID_ARGUMENT, "null output pointer");
  return guarded([&] {
    const bng::BNPoint p{g, n, d, k};
    *out = (semistable ? bng::classify_semistable(p) : bng::classify_stable(p)).non_empty();
    return BNG_OK;
  });
}

bng_status bng_query_scan(int64_t g, int64_t n, bng_format format, bng_text** out) {
  if (!out) return fail(BNG_ERR_INVALID_ARGUMENT, "null output pointer");
  return guarded(
      [&] { return emit(bng::io::scan_text(bng::scan_strip(g, n), format_of(format)), out); });
}

bng_status bng_query_extensions(int64_t g, int64_t n, int64_t d, int64_t k, int list,
                                bng_format format, bng_text** out, int* holds) {
  if (!out) return fail(BNG_ERR_INVALID_ARGUMENT, "null output pointer");
  return guarded([&] {
    const bng::BNPoint p{g, n, d, k};
    std::string text = bng::io::extensions_text(p, list != 0, format_of(format));
    if (holds) *holds = bng::prop51_criterion(p).holds;
    return emit(std::move(text), out);
  });
}

bng_sweep_bounds bng_sweep_bounds_default(void) {
  const bng::SweepBounds b;
  return {b.g_min, b.g_max, b.n_max, b.rational_denominator, b.m_cap_factor, b.jobs, 0};
}

bng_status bng_verify(bng_campaign campaign, const bng_sweep_bounds* bounds, bng_report** out) {
  if (!bounds || !out) return fail(BNG_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    bng::Campaign c;
    switch (campaign) {
      case BNG_CAMPAIGN_PROP61: c = bng::Campaign::Prop61; break;
      case BNG_CAMPAIGN_IDENTITIES: c = bng::Campaign::Identities; break;
      case BNG_CAMPAIGN_THMB: c = bng::Campaign::ThmBConsistency; break;
      default: return fail(BNG_ERR_INVALID_ARGUMENT, "unknown campaign");
    }
    const bng::SweepBounds b{bounds->g_min,       bounds->g_max,        bounds->n_max,
                             bounds->denominator, bounds->m_cap_factor, bounds->jobs};
    bng::VerifyOptions opts;
    if (bounds->progress) {
      opts.progress = [](bng::Campaign which, std::uint64_t count) {
        std::cerr << "[" << bng::to_string(which) << "] " << count << " tuples checked\n";
      };
    }
    auto report = std::make_unique<bng_report>();
    report->value = bng::run_campaign(c, b, opts);
    *out = report.release();
    return BNG_OK;
  });
}

int bng_report_verified(const bng_report* report) {
  return report && report->value.verified() ? 1 : 0;
}

uint64_t bng_report_tuples_checked(const bng_report* report) {
  return report ? report->value.tuples_checked : 0;
}

uint64_t bng_report_counterexample_count(const bng_report* report) {
  return report ? report->value.counterexample_count : 0;
}

int64_t bng_report_elapsed_ms(const bng_report* report) {
  return report ? static_cast<int64_t>(report->value.elapsed.count()) : 0;
}

bng_status bng_report_render(const bng_report* report, bng_format format, int include_meta,
                             bng_text** out) {
  if (!report || !out) return fail(BNG_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    if (format == BNG_FORMAT_HUMAN) {
      return emit(bng::io::report_text(report->value, bng::io::Format::Human), out);
    }
    return emit(bng::io::to_json(report->value, include_meta != 0).dump() + "\n", out);
  });
}

void bng_report_free(bng_report* report) { delete report; }

bng_map_options bng_map_options_default(void) { return {0, 0, nullptr, 100}; }

bng_status bng_render_map_svg(int64_t g, const bng_map_options* options, bng_text** out) {
  if (!out) return fail(BNG_ERR_INVALID_ARGUMENT, "null output pointer");
  return guarded([&] {
    const bng_map_options o = options ? *options : bng_map_options_default();
    bng::MapOptions mo;
    mo.strip_only = o.strip_only != 0;
    if (o.overlay_n < 0) return fail(BNG_ERR_INVALID_ARGUMENT, "overlay n must be ≥ 0");
    if (o.overlay_n > 0) mo.overlay_n = o.overlay_n;
    if (o.teixidor_json) mo.parallelograms = bng::parse_parallelograms(o.teixidor_json);
    if (o.hyperbola_step_den < 0) return fail(BNG_ERR_INVALID_ARGUMENT, "step denominator must be > 0");
    mo.hyperbola_step = bng::Rational::of(1, o.hyperbola_step_den == 0 ? 100 : o.hyperbola_step_den);
    return emit(bng::to_svg(bng::render_map(g, mo)), out);
  });
}

bng_status bng_validate_teixidor(int64_t g, int64_t lambda0, int64_t mu0, int64_t vertical_extent,
                                 int64_t diagonal_extent, int* valid, int* all_above,
                                 int* lower_right_on_curve) {
  return guarded([&] {
    const bng::TeixidorCheck c =
        bng::validate_teixidor(g, {lambda0, mu0, vertical_extent, diagonal_extent});
    if (valid) *valid = c.valid;
    if (all_above) *all_above = c.all_above;
    if (lower_right_on_curve) *lower_right_on_curve = c.lower_right_on_curve;
    return BNG_OK;
  });
}

}  // extern "C"
