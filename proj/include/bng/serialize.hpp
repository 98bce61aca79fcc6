#pragma once

// Text encodings shared by the C API and the command-line tool. JSON objects
// keep a fixed key order so emitted documents are byte-stable.

#include <string>
#include <vector>

#include <json.hpp>

#include "bng/classify.hpp"
#include "bng/extensions.hpp"
#include "bng/verify.hpp"

namespace bng::io {

using Json = nlohmann::ordered_json;

enum class Format { Human, Json, Csv };

/// Integers that fit in 64 bits become JSON numbers, larger ones strings.
Json to_json(const Integer& v);
/// Integral rationals become numbers, the rest "p/q" strings.
Json to_json(const Rational& v);

std::string rho_text(const BNPoint& p, Format f);

/// Stable: {status, dim, irreducible, sing, rho}.
/// Semistable: {status, dim, irreducible, model, rho}.
std::string classification_text(const BNPoint& p, bool semistable, Format f);

inline constexpr const char* kStripCsvHeader =
    "g,n,d,k,rho,stable_status,stable_dim,semistable_status,semistable_dim,model";

Json to_json(const StripRow& row);
std::string to_csv(const StripRow& row);
/// CSV with header, or one JSON object per line.
std::string scan_text(const std::vector<StripRow>& rows, Format f);

/// {g,n,d,k,s,d_prime,m,l,a,b,c,d_flag,lhs_d}
Json to_json(const ExtensionTuple& t);
/// The criterion verdict, or with `list` every admissible tuple as JSON lines.
std::string extensions_text(const BNPoint& p, bool list, Format f);

Json to_json(const Counterexample& ce);
/// {campaign, bounds, tuples_checked, counterexample_count, counterexamples,
///  verified, meta: {elapsed_ms, jobs}}; meta is dropped when include_meta is
/// false.
Json to_json(const VerificationReport& r, bool include_meta = true);
std::string report_text(const VerificationReport& r, Format f);

}  // namespace bng::io
