#include "bng/serialize.hpp"

#include <sstream>

namespace bng::io {

Json to_json(const Integer& v) {
  if (auto small = to_int64(v)) return *small;
  return v.get_str();
}

Json to_json(const Rational& v) {
  if (v.is_integer()) return to_json(v.num());
  return v.str();
}

namespace {

Json optional_dim(const Classification& c) {
  return c.dimension ? to_json(*c.dimension) : Json(nullptr);
}

std::string dim_cell(const Classification& c) { return c.dimension ? c.dimension->get_str() : ""; }

Json classification_json(const BNPoint& p, const Classification& c, bool semistable) {
  Json j;
  j["status"] = to_string(c.status);
  j["dim"] = optional_dim(c);
  j["irreducible"] = c.irreducible ? Json(*c.irreducible) : Json(nullptr);
  if (semistable) {
    j["model"] = to_string(c.model);
  } else {
    j["sing"] = c.singular_locus
                    ? Json(locus_label(c.singular_locus->k - 1, c.singular_locus->n, c.singular_locus->d))
                    : Json(nullptr);
  }
  j["rho"] = to_json(brill_noether_number(p));
  return j;
}

}  // namespace

std::string rho_text(const BNPoint& p, Format f) {
  const Integer rho = brill_noether_number(p);
  const Rational rt = rho_tilde(p.g, slope_coords(p));
  switch (f) {
    case Format::Json: {
      Json j;
      j["g"] = p.g;
      j["n"] = p.n;
      j["d"] = p.d;
      j["k"] = p.k;
      j["rho"] = to_json(rho);
      j["rho_tilde"] = to_json(rt);
      return j.dump() + "\n";
    }
    case Format::Csv:
      return "g,n,d,k,rho,rho_tilde\n" + std::to_string(p.g) + "," + std::to_string(p.n) + "," +
             std::to_string(p.d) + "," + std::to_string(p.k) + "," + rho.get_str() + "," +
             rt.str() + "\n";
    case Format::Human:
      break;
  }
  return "rho(" + locus_label(p.k - 1, p.n, p.d) + ", g=" + std::to_string(p.g) +
         ") = " + rho.get_str() + "\nrho_tilde = " + rt.str() + "\n";
}

std::string classification_text(const BNPoint& p, bool semistable, Format f) {
  const Classification c = semistable ? classify_semistable(p) : classify_stable(p);
  switch (f) {
    case Format::Json:
      return classification_json(p, c, semistable).dump() + "\n";
    case Format::Csv: {
      const StripRow row{p, classify_stable(p), classify_semistable(p), brill_noether_number(p)};
      return std::string(kStripCsvHeader) + "\n" + to_csv(row) + "\n";
    }
    case Format::Human:
      break;
  }
  std::ostringstream os;
  os << (semistable ? "semistable " : "stable ") << locus_label(p.k - 1, p.n, p.d)
     << " (g=" << p.g << "): " << to_string(c.status) << "\n";
  if (c.dimension) os << "  dimension: " << c.dimension->get_str() << "\n";
  if (c.irreducible) os << "  irreducible: " << (*c.irreducible ? "yes" : "no") << "\n";
  if (c.singular_locus) {
    os << "  singular locus: "
       << locus_label(c.singular_locus->k - 1, c.singular_locus->n, c.singular_locus->d) << "\n";
  }
  if (c.model != LocusModel::None) os << "  model: " << to_string(c.model) << "\n";
  os << "  governed by: " << to_string(c.governing) << "\n";
  os << "  rho: " << brill_noether_number(p).get_str() << "\n";
  return os.str();
}

Json to_json(const StripRow& row) {
  Json j;
  j["g"] = row.point.g;
  j["n"] = row.point.n;
  j["d"] = row.point.d;
  j["k"] = row.point.k;
  j["rho"] = to_json(row.rho);
  j["stable_status"] = to_string(row.stable.status);
  j["stable_dim"] = optional_dim(row.stable);
  j["semistable_status"] = to_string(row.semistable.status);
  j["semistable_dim"] = optional_dim(row.semistable);
  j["model"] = to_string(row.semistable.model);
  return j;
}

std::string to_csv(const StripRow& row) {
  std::ostringstream os;
  os << row.point.g << ',' << row.point.n << ',' << row.point.d << ',' << row.point.k << ','
     << row.rho.get_str() << ',' << to_string(row.stable.status) << ',' << dim_cell(row.stable)
     << ',' << to_string(row.semistable.status) << ',' << dim_cell(row.semistable) << ','
     << to_string(row.semistable.model);
  return os.str();
}

std::string scan_text(const std::vector<StripRow>& rows, Format f) {
  std::string out;
  if (f == Format::Json) {
    for (const StripRow& r : rows) out += to_json(r).dump() + "\n";
    return out;
  }
  out = std::string(kStripCsvHeader) + "\n";
  for (const StripRow& r : rows) out += to_csv(r) + "\n";
  return out;
}

Json to_json(const ExtensionTuple& t) {
  const InequalityStatus st = inequality_status(t);
  Json j;
  j["g"] = t.base.g;
  j["n"] = t.base.n;
  j["d"] = t.base.d;
  j["k"] = t.base.k;
  j["s"] = t.s;
  j["d_prime"] = t.d_prime;
  j["m"] = t.m;
  j["l"] = t.l;
  j["a"] = st.a;
  j["b"] = st.b;
  j["c"] = st.c;
  j["d_flag"] = st.d;
  j["lhs_d"] = to_json(st.lhs_d);
  return j;
}

std::string extensions_text(const BNPoint& p, bool list, Format f) {
  const std::vector<ExtensionTuple> tuples = admissible_tuples(p);
  if (list) {
    std::string out;
    if (f == Format::Human) {
      std::ostringstream os;
      os << tuples.size() << " admissible tuple(s) for " << locus_label(p.k - 1, p.n, p.d)
         << ", g=" << p.g << "\n";
      for (const ExtensionTuple& t : tuples) {
        const InequalityStatus st = inequality_status(t);
        os << "  s=" << t.s << " d'=" << t.d_prime << " m=" << t.m << " l=" << t.l
           << "  lhs(d)=" << st.lhs_d.get_str() << " codim>=" << codim_bound(t).get_str()
           << " params<=" << param_count(t).get_str() << "\n";
      }
      return os.str();
    }
    for (const ExtensionTuple& t : tuples) out += to_json(t).dump() + "\n";
    return out;
  }

  const CriterionResult cr = prop51_criterion(p);
  if (f == Format::Human) {
    std::ostringstream os;
    os << "criterion for " << locus_label(p.k - 1, p.n, p.d) << ", g=" << p.g << ": "
       << (cr.holds ? "holds" : "fails") << " over " << tuples.size() << " admissible tuple(s)\n";
    if (cr.witness) {
      os << "  witness: s=" << cr.witness->s << " d'=" << cr.witness->d_prime
         << " m=" << cr.witness->m << " l=" << cr.witness->l << "\n";
    }
    return os.str();
  }
  Json j;
  j["g"] = p.g;
  j["n"] = p.n;
  j["d"] = p.d;
  j["k"] = p.k;
  j["holds"] = cr.holds;
  j["admissible"] = tuples.size();
  j["witness"] = cr.witness ? to_json(*cr.witness) : Json(nullptr);
  return j.dump() + "\n";
}

Json to_json(const Counterexample& ce) {
  Json j;
  j["kind"] = ce.kind;
  for (const auto& [key, value] : ce.fields) j[key] = to_json(value);
  return j;
}

Json to_json(const VerificationReport& r, bool include_meta) {
  Json j;
  j["campaign"] = to_string(r.campaign);
  Json b;
  b["g_min"] = r.bounds.g_min;
  b["g_max"] = r.bounds.g_max;
  b["n_max"] = r.bounds.n_max;
  b["denominator"] = r.bounds.rational_denominator;
  b["m_cap_factor"] = r.bounds.m_cap_factor;
  j["bounds"] = b;
  j["tuples_checked"] = r.tuples_checked;
  j["counterexample_count"] = r.counterexample_count;
  Json ces = Json::array();
  for (const Counterexample& ce : r.counterexamples) ces.push_back(to_json(ce));
  j["counterexamples"] = ces;
  j["verified"] = r.verified();
  if (include_meta) {
    Json meta;
    meta["elapsed_ms"] = r.elapsed.count();
    meta["jobs"] = r.bounds.jobs;
    j["meta"] = meta;
  }
  return j;
}

std::string report_text(const VerificationReport& r, Format f) {
  if (f != Format::Human) return to_json(r).dump() + "\n";
  std::ostringstream os;
  os << "campaign " << to_string(r.campaign) << ": g in [" << r.bounds.g_min << ", "
     << r.bounds.g_max << "], n <= " << r.bounds.n_max
     << ", denominator " << r.bounds.rational_denominator << ", m cap " << r.bounds.m_cap_factor
     << "n\n";
  os << "  tuples checked: " << r.tuples_checked << "\n";
  os << "  counterexamples: " << r.counterexample_count << "\n";
  for (const Counterexample& ce : r.counterexamples) os << "    " << to_json(ce).dump() << "\n";
  os << "  elapsed: " << r.elapsed.count() << " ms with " << r.bounds.jobs << " job(s)\n";
  os << (r.verified() ? "VERIFIED" : "COUNTEREXAMPLE FOUND") << "\n";
  return os.str();
}

}  // namespace bng::io
