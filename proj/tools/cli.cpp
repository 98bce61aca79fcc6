#include "cli.hpp"

#include <charconv>
#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <thread>

#include <CLI11.hpp>

#include "bng/bng.h"

namespace bng::cli {

namespace {

// A diagnosed usage error; the message names the offending flag.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::int64_t parse_decimal(const std::string& flag, const std::string& text) {
  std::int64_t value = 0;
  const char* first = text.data();
  const char* last = first + text.size();
  if (!text.empty() && *first == '+') ++first;
  const auto [ptr, ec] = std::from_chars(first, last, value, 10);
  if (text.empty() || ec != std::errc() || ptr != last) {
    throw UsageError(flag + ": expected a decimal integer, got '" + text + "'");
  }
  return value;
}

void require_at_least(const std::string& flag, const char* name, std::int64_t value,
                      std::int64_t low) {
  if (value < low) {
    throw UsageError(flag + ": " + name + " must be ≥ " + std::to_string(low));
  }
}

// RAII owner for C API text handles.
struct Text {
  bng_text* handle = nullptr;
  ~Text() { bng_text_free(handle); }
  std::string str() const { return {bng_text_data(handle), bng_text_size(handle)}; }
};

struct Report {
  bng_report* handle = nullptr;
  ~Report() { bng_report_free(handle); }
};

// Status from the library: domain errors are input errors.
void check(bng_status status) {
  if (status != BNG_OK) throw UsageError(bng_last_error());
}

bng_format parse_format(const std::string& text, bool allow_csv) {
  if (text == "human") return BNG_FORMAT_HUMAN;
  if (text == "json" || text == "jsonl") return BNG_FORMAT_JSON;
  if (allow_csv && text == "csv") return BNG_FORMAT_CSV;
  throw UsageError("--format: unsupported format '" + text + "'");
}

struct PointFlags {
  std::string g, n, d, k;

  void add_to(CLI::App* cmd, bool with_d_k = true) {
    cmd->add_option("--g", g, "genus (≥ 2)")->required();
    cmd->add_option("--n", n, "rank")->required();
    if (with_d_k) {
      cmd->add_option("--d", d, "degree")->required();
      cmd->add_option("--k", k, "number of independent sections")->required();
    }
  }

  struct Values {
    std::int64_t g, n, d, k;
  };

  Values parse(bool with_d_k = true) const {
    Values v{parse_decimal("--g", g), parse_decimal("--n", n), 0, 1};
    require_at_least("--g", "g", v.g, 2);
    require_at_least("--n", "n", v.n, 1);
    if (with_d_k) {
      v.d = parse_decimal("--d", d);
      v.k = parse_decimal("--k", k);
      require_at_least("--k", "k", v.k, 1);
    }
    return v;
  }
};

std::int64_t default_jobs(std::ostream&) {
  if (const char* env = std::getenv("BNG_JOBS"); env && *env) {
    const std::int64_t jobs = parse_decimal("BNG_JOBS", env);
    require_at_least("BNG_JOBS", "jobs", jobs, 1);
    return jobs;
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<std::int64_t>(hw);
}

std::string read_file(const std::string& flag, const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError(flag + ": cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Brill-Noether geography for bundles of small slope"};
  app.name("bng");
  app.require_subcommand(1, 1);

  PointFlags point;
  std::string format;
  bool json_flag = false;
  bool semistable = false;
  bool list = false;

  CLI::App* classify = app.add_subcommand("classify", "classify a Brill-Noether locus");
  point.add_to(classify);
  classify->add_flag("--semistable", semistable, "classify the semistable locus");
  classify->add_option("--format", format, "human, json or csv");
  classify->add_flag("--json", json_flag, "same as --format json");

  CLI::App* rho = app.add_subcommand("rho", "Brill-Noether number and rho-tilde");
  PointFlags rho_point;
  rho_point.add_to(rho);
  rho->add_option("--format", format, "human, json or csv");
  rho->add_flag("--json", json_flag, "same as --format json");

  CLI::App* scan = app.add_subcommand("scan", "classify every (d, k) with 0 ≤ d ≤ n, 1 ≤ k ≤ n");
  PointFlags scan_point;
  scan_point.add_to(scan, false);
  scan->add_option("--format", format, "csv or jsonl")->default_str("csv");

  CLI::App* extensions = app.add_subcommand("extensions", "destabilizing data and the non-emptiness criterion");
  PointFlags ext_point;
  ext_point.add_to(extensions);
  extensions->add_flag("--list", list, "list admissible tuples as JSON lines");
  extensions->add_option("--format", format, "human or json");
  extensions->add_flag("--json", json_flag, "same as --format json");

  CLI::App* verify = app.add_subcommand("verify", "exhaustive verification campaign");
  std::string campaign;
  std::string g_min = "2", g_max = "4", n_max = "12", denominator = "1", cap_factor = "4", jobs;
  bool quiet = false;
  verify->add_option("campaign", campaign, "prop61, identities or thmb")->required();
  verify->add_option("--g-min", g_min, "smallest genus")->default_str("2");
  verify->add_option("--g-max", g_max, "largest genus")->default_str("4");
  verify->add_option("--n-max", n_max, "largest rank")->default_str("12");
  verify->add_option("--denominator", denominator, "grid step 1/D for (m, d')")->default_str("1");
  verify->add_option("--m-cap-factor", cap_factor, "cap m at F*n")->default_str("4");
  verify->add_option("--jobs", jobs, "worker threads (default: BNG_JOBS or all cores)");
  verify->add_option("--format", format, "json or human");
  verify->add_flag("--quiet", quiet, "no progress on standard error");

  CLI::App* map = app.add_subcommand("map", "render the Brill-Noether map as SVG");
  std::string map_g, out_path, overlay_n, teixidor, step_den = "100";
  bool strip = false;
  map->add_option("--g", map_g, "genus (≥ 2)")->required();
  map->add_option("--out", out_path, "output path, - for standard output")->required();
  map->add_flag("--strip", strip, "restrict to 0 ≤ μ ≤ 1");
  map->add_option("--overlay-n", overlay_n, "classify and plot the strip points of rank N");
  map->add_option("--teixidor", teixidor, "JSON file of parallelograms");
  map->add_option("--step-den", step_den, "curve sampling step 1/N")->default_str("100");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  try {
    if (json_flag) {
      if (!format.empty() && format != "json") throw UsageError("--json conflicts with --format " + format);
      format = "json";
    }

    if (*classify) {
      const auto p = point.parse();
      const bng_format f = parse_format(format.empty() ? "human" : format, true);
      Text t;
      check(bng_query_classify(p.g, p.n, p.d, p.k, semistable ? 1 : 0, f, &t.handle));
      out << t.str();
      return kExitOk;
    }

    if (*rho) {
      const auto p = rho_point.parse();
      const bng_format f = parse_format(format.empty() ? "human" : format, true);
      Text t;
      check(bng_query_rho(p.g, p.n, p.d, p.k, f, &t.handle));
      out << t.str();
      return kExitOk;
    }

    if (*scan) {
      const auto p = scan_point.parse(false);
      require_at_least("--n", "n", p.n, 2);
      const std::string fmt = format.empty() ? "csv" : format;
      if (fmt != "csv" && fmt != "jsonl") throw UsageError("--format: expected csv or jsonl");
      Text t;
      check(bng_query_scan(p.g, p.n, fmt == "csv" ? BNG_FORMAT_CSV : BNG_FORMAT_JSON, &t.handle));
      out << t.str();
      return kExitOk;
    }

    if (*extensions) {
      const auto p = ext_point.parse();
      const bng_format f = parse_format(format.empty() ? (list ? "json" : "human") : format, false);
      Text t;
      check(bng_query_extensions(p.g, p.n, p.d, p.k, list ? 1 : 0, f, &t.handle, nullptr));
      out << t.str();
      return kExitOk;
    }

    if (*verify) {
      static const std::map<std::string, bng_campaign> kCampaigns{
          {"prop61", BNG_CAMPAIGN_PROP61},
          {"identities", BNG_CAMPAIGN_IDENTITIES},
          {"thmb", BNG_CAMPAIGN_THMB}};
      const auto it = kCampaigns.find(campaign);
      if (it == kCampaigns.end()) {
        throw UsageError("campaign: expected prop61, identities or thmb, got '" + campaign + "'");
      }
      bng_sweep_bounds b = bng_sweep_bounds_default();
      b.g_min = parse_decimal("--g-min", g_min);
      b.g_max = parse_decimal("--g-max", g_max);
      b.n_max = parse_decimal("--n-max", n_max);
      b.denominator = parse_decimal("--denominator", denominator);
      b.m_cap_factor = parse_decimal("--m-cap-factor", cap_factor);
      require_at_least("--g-min", "g-min", b.g_min, 2);
      require_at_least("--n-max", "n-max", b.n_max, 2);
      require_at_least("--denominator", "denominator", b.denominator, 1);
      require_at_least("--m-cap-factor", "m-cap-factor", b.m_cap_factor, 1);
      if (jobs.empty()) {
        b.jobs = default_jobs(err);
      } else {
        b.jobs = parse_decimal("--jobs", jobs);
        require_at_least("--jobs", "jobs", b.jobs, 1);
      }
      b.progress = quiet ? 0 : 1;
      const std::string fmt = format.empty() ? "json" : format;
      if (fmt != "json" && fmt != "human") throw UsageError("--format: expected json or human");

      Report r;
      check(bng_verify(it->second, &b, &r.handle));
      Text t;
      check(bng_report_render(r.handle, fmt == "json" ? BNG_FORMAT_JSON : BNG_FORMAT_HUMAN, 1,
                              &t.handle));
      out << t.str();
      return bng_report_verified(r.handle) ? kExitOk : kExitCounterexample;
    }

    if (*map) {
      const std::int64_t g = parse_decimal("--g", map_g);
      require_at_least("--g", "g", g, 2);
      bng_map_options o = bng_map_options_default();
      o.strip_only = strip ? 1 : 0;
      if (!overlay_n.empty()) {
        o.overlay_n = parse_decimal("--overlay-n", overlay_n);
        require_at_least("--overlay-n", "overlay n", o.overlay_n, 2);
      }
      o.hyperbola_step_den = parse_decimal("--step-den", step_den);
      require_at_least("--step-den", "step denominator", o.hyperbola_step_den, 1);
      std::string teixidor_text;
      if (!teixidor.empty()) {
        teixidor_text = read_file("--teixidor", teixidor);
        o.teixidor_json = teixidor_text.c_str();
      }
      Text t;
      check(bng_render_map_svg(g, &o, &t.handle));
      if (out_path == "-") {
        out << t.str();
      } else {
        std::ofstream file(out_path, std::ios::binary | std::ios::trunc);
        if (!file) throw UsageError("--out: cannot write '" + out_path + "'");
        file << t.str();
        if (!file.flush()) throw UsageError("--out: write to '" + out_path + "' failed");
      }
      return kExitOk;
    }
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace bng::cli
