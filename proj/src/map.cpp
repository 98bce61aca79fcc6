#include "bng/map.hpp"

#include <sstream>

#include <json.hpp>

#include "bng/classify.hpp"

namespace bng {

namespace {

void require_genus(std::int64_t g) {
  if (g < 2) throw Error(ErrorCode::InvalidArgument, "g must be ≥ 2");
}

// The line mu = slope * lambda + intercept clipped to the viewport, or nothing
// when it misses.
std::optional<std::pair<MapPoint, MapPoint>> clip_line(const Viewport& vp, const Rational& slope,
                                                       const Rational& intercept) {
  Rational lo = vp.lambda_min;
  Rational hi = vp.lambda_max;
  if (slope.is_zero()) {
    if (intercept < vp.mu_min || intercept > vp.mu_max) return std::nullopt;
  } else {
    Rational a = (vp.mu_min - intercept) / slope;
    Rational b = (vp.mu_max - intercept) / slope;
    if (b < a) std::swap(a, b);
    lo = std::max(lo, a);
    hi = std::min(hi, b);
    if (hi < lo) return std::nullopt;
  }
  return std::pair{MapPoint{lo, slope * lo + intercept}, MapPoint{hi, slope * hi + intercept}};
}

void add_line(MapDocument& doc, const std::string& id, const std::string& label,
              const std::string& css, const Rational& slope, const Rational& intercept) {
  if (auto seg = clip_line(doc.viewport, slope, intercept)) {
    doc.layers.push_back(
        {PrimitiveKind::Boundary, id, label, {seg->first, seg->second}, css});
  }
}

void add_label(MapDocument& doc, const std::string& id, const std::string& text, MapPoint at) {
  doc.layers.push_back({PrimitiveKind::RegionLabel, id, text, {std::move(at)}, "region-label"});
}

bool in_viewport(const Viewport& vp, const MapPoint& p) {
  return p.lambda >= vp.lambda_min && p.lambda <= vp.lambda_max && p.mu >= vp.mu_min &&
         p.mu <= vp.mu_max;
}

// Plot area inside the 800x600 canvas with a 10% margin.
const Rational kCanvasW(800);
const Rational kCanvasH(600);
const Rational kLeft(80);
const Rational kTop(60);
const Rational kPlotW(640);
const Rational kPlotH(480);

struct Projector {
  const Viewport& vp;

  Rational x(const Rational& lambda) const {
    return kLeft + (lambda - vp.lambda_min) / (vp.lambda_max - vp.lambda_min) * kPlotW;
  }
  Rational y(const Rational& mu) const {
    return kTop + kPlotH - (mu - vp.mu_min) / (vp.mu_max - vp.mu_min) * kPlotH;
  }
};

std::string fx(const Rational& v) { return v.to_fixed(6); }

std::string escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

std::string stroke_style(const std::string& css) {
  if (css == "riemann-roch") return R"(stroke="#1f4e9c" stroke-width="2")";
  if (css == "clifford") return R"(stroke="#b22222" stroke-width="2")";
  if (css == "special-limit") return R"(stroke="#555555" stroke-width="1.5")";
  if (css == "bn-curve") return R"(stroke="#2e7d32" stroke-width="2" fill="none")";
  if (css == "tangent") return R"(stroke="#e08000" stroke-width="1.5" stroke-dasharray="6,4")";
  return R"(stroke="#000000")";
}

std::string point_fill(const std::string& css) {
  if (css == "nonempty") return "#2e7d32";
  if (css == "semistable-only") return "#e0a000";
  return "#b22222";
}

}  // namespace

RegionReport region_report(std::int64_t g, const SlopeCoords& c) {
  require_genus(g);
  if (c.lambda.sign() < 0) throw Error(ErrorCode::InvalidArgument, "lambda must be ≥ 0");
  const Rational gg(g);
  const Rational special = Rational(2 * g - 2);
  RegionReport r;
  r.coords = c;
  r.above_riemann_roch = c.mu >= c.lambda + gg - 1;
  r.below_clifford = c.mu < Rational(2) * c.lambda - 2;
  r.clifford_applicable = c.mu.sign() >= 0 && c.mu <= special;
  r.beyond_special = c.mu > special;
  r.rho_tilde = rho_tilde(g, c);
  r.on_or_above_tangent = c.mu + (Rational(1) - c.lambda) * gg >= 1;
  r.in_strip = c.mu.sign() >= 0 && c.mu <= 1;
  return r;
}

Rational LineCoeffs::mu_at(const Rational& lambda) const {
  return (rhs - lambda_coeff * lambda) / mu_coeff;
}

bool LineCoeffs::contains(const SlopeCoords& c) const {
  return lambda_coeff * c.lambda + mu_coeff * c.mu == rhs;
}

LineCoeffs tangent_line(std::int64_t g) {
  require_genus(g);
  return {Rational(-g), Rational(1), Rational(1 - g)};
}

Rational brill_noether_curve_mu(std::int64_t g, const Rational& lambda) {
  require_genus(g);
  if (lambda.sign() <= 0) throw Error(ErrorCode::InvalidArgument, "lambda must be > 0");
  const Rational gm1(g - 1);
  return lambda + gm1 - gm1 / lambda;
}

std::array<SlopeCoords, 4> Parallelogram::vertices() const {
  const std::int64_t a = vertical_extent;
  const std::int64_t b = diagonal_extent;
  return {SlopeCoords{Rational(lambda0), Rational(mu0)},
          SlopeCoords{Rational(lambda0 + b), Rational(mu0 + b)},
          SlopeCoords{Rational(lambda0 + b), Rational(mu0 + a + b)},
          SlopeCoords{Rational(lambda0), Rational(mu0 + a)}};
}

SlopeCoords Parallelogram::lower_right() const {
  return {Rational(lambda0 + diagonal_extent), Rational(mu0 + diagonal_extent)};
}

TeixidorCheck validate_teixidor(std::int64_t g, const Parallelogram& pg) {
  require_genus(g);
  if (pg.vertical_extent < 0 || pg.diagonal_extent < 0) {
    throw Error(ErrorCode::InvalidArgument, "parallelogram extents must be ≥ 0");
  }
  TeixidorCheck out{true, true, false};
  for (const SlopeCoords& v : pg.vertices()) {
    const Rational rt = rho_tilde(g, v);
    if (rt.sign() < 0) out.valid = false;
    if (rt.sign() <= 0) out.all_above = false;
  }
  out.lower_right_on_curve = rho_tilde(g, pg.lower_right()).is_zero();
  return out;
}

std::vector<Parallelogram> parse_parallelograms(const std::string& json_text) {
  using nlohmann::json;
  std::vector<Parallelogram> out;
  try {
    const json doc = json::parse(json_text);
    if (!doc.is_array()) throw Error(ErrorCode::Parse, "parallelogram file must hold a JSON array");
    for (const json& item : doc) {
      const json& base = item.at("base_vertex");
      if (!base.is_array() || base.size() != 2) {
        throw Error(ErrorCode::Parse, "base_vertex must be a pair of integers");
      }
      Parallelogram pg{base.at(0).get<std::int64_t>(), base.at(1).get<std::int64_t>(),
                       item.at("vertical_extent").get<std::int64_t>(),
                       item.at("diagonal_extent").get<std::int64_t>()};
      if (pg.vertical_extent < 0 || pg.diagonal_extent < 0) {
        throw Error(ErrorCode::Parse, "parallelogram extents must be ≥ 0");
      }
      out.push_back(pg);
    }
  } catch (const json::exception& e) {
    throw Error(ErrorCode::Parse, std::string("bad parallelogram JSON: ") + e.what());
  }
  return out;
}

MapDocument render_map(std::int64_t g, const MapOptions& opts) {
  require_genus(g);
  if (opts.hyperbola_step.sign() <= 0) {
    throw Error(ErrorCode::InvalidArgument, "hyperbola step must be positive");
  }
  MapDocument doc;
  doc.genus = g;
  const Rational gg(g);
  if (opts.strip_only) {
    doc.viewport = {Rational(0), Rational::of(3, 2), Rational(0), Rational(1)};
  } else {
    doc.viewport = {Rational(0), Rational(g + 1), Rational(0), Rational(2 * g - 1)};
  }
  const Viewport& vp = doc.viewport;

  doc.layers.push_back({PrimitiveKind::Axis, "lambda-axis", "λ = k/n",
                        {{vp.lambda_min, vp.mu_min}, {vp.lambda_max, vp.mu_min}}, "axis"});
  doc.layers.push_back({PrimitiveKind::Axis, "mu-axis", "μ = d/n",
                        {{vp.lambda_min, vp.mu_min}, {vp.lambda_min, vp.mu_max}}, "axis"});

  add_line(doc, "riemann-roch", "Riemann-Roch line", "riemann-roch", Rational(1), gg - 1);
  add_line(doc, "clifford", "Clifford line", "clifford", Rational(2), Rational(-2));
  add_line(doc, "special-limit", "μ = 2g-2", "special-limit", Rational(0), Rational(2 * g - 2));

  Primitive curve{PrimitiveKind::Boundary, "bn-curve", "ρ̃ = 0", {}, "bn-curve"};
  for (Rational lambda = opts.hyperbola_step; lambda <= vp.lambda_max;
       lambda += opts.hyperbola_step) {
    MapPoint p{lambda, brill_noether_curve_mu(g, lambda)};
    if (in_viewport(vp, p)) curve.points.push_back(std::move(p));
  }
  if (curve.points.size() >= 2) doc.layers.push_back(std::move(curve));

  const LineCoeffs tangent = tangent_line(g);
  add_line(doc, "tangent", "μ + (1-λ)g = 1", "tangent", -tangent.lambda_coeff, tangent.rhs);

  if (!opts.strip_only) {
    add_label(doc, "label-whole-space", "whole space", {Rational::of(1, 2), gg + Rational::of(1, 2)});
    add_label(doc, "label-empty", "empty", {gg, Rational(1)});
    add_label(doc, "label-pentagon", "special pentagon",
              {Rational::of(1, 2), Rational::of(g - 1, 2)});
  }

  int index = 0;
  for (const Parallelogram& pg : opts.parallelograms) {
    Primitive poly{PrimitiveKind::Parallelogram, "teixidor-" + std::to_string(index++), "T", {},
                   validate_teixidor(g, pg).valid ? "teixidor" : "teixidor-invalid"};
    for (const SlopeCoords& v : pg.vertices()) poly.points.push_back({v.lambda, v.mu});
    doc.layers.push_back(std::move(poly));
  }

  if (opts.overlay_n) {
    const std::int64_t n = *opts.overlay_n;
    for (std::int64_t d = 0; d <= n; ++d) {
      for (std::int64_t k = 1; k <= n; ++k) {
        const BNPoint p{g, n, d, k};
        std::string cls = "empty";
        if (classify_stable(p).non_empty()) {
          cls = "nonempty";
        } else if (classify_semistable(p).non_empty()) {
          cls = "semistable-only";
        }
        doc.layers.push_back({PrimitiveKind::OverlayPoint,
                              "pt-d" + std::to_string(d) + "-k" + std::to_string(k),
                              locus_label(k - 1, n, d),
                              {{Rational::of(k, n), Rational::of(d, n)}},
                              cls});
      }
    }
    doc.layers.push_back({PrimitiveKind::Legend, "legend-nonempty", "stable locus non-empty", {}, "nonempty"});
    doc.layers.push_back({PrimitiveKind::Legend, "legend-semistable-only", "semistable locus only", {}, "semistable-only"});
    doc.layers.push_back({PrimitiveKind::Legend, "legend-empty", "empty", {}, "empty"});
  }
  return doc;
}

std::string to_svg(const MapDocument& doc) {
  const Viewport& vp = doc.viewport;
  const Projector pr{vp};
  std::ostringstream os;
  os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"800\" height=\"600\" "
        "viewBox=\"0 0 800 600\">\n";
  os << "<title>Brill-Noether map, g = " << doc.genus << "</title>\n";
  os << "<defs><clipPath id=\"plot-area\"><rect x=\"" << fx(kLeft) << "\" y=\"" << fx(kTop)
     << "\" width=\"" << fx(kPlotW) << "\" height=\"" << fx(kPlotH)
     << "\"/></clipPath></defs>\n";
  os << "<rect x=\"0\" y=\"0\" width=\"" << fx(kCanvasW) << "\" height=\"" << fx(kCanvasH)
     << "\" fill=\"#ffffff\"/>\n";

  // Ticks every unit, or every quarter on narrow viewports.
  const Rational span = std::max(vp.lambda_max - vp.lambda_min, vp.mu_max - vp.mu_min);
  const Rational tick = span > 2 ? Rational(1) : Rational::of(1, 4);

  int legend_row = 0;
  for (const Primitive& p : doc.layers) {
    switch (p.kind) {
      case PrimitiveKind::Axis: {
        const MapPoint& a = p.points.at(0);
        const MapPoint& b = p.points.at(1);
        os << "<g id=\"" << p.id << "\" class=\"axis\">\n";
        os << "<line x1=\"" << fx(pr.x(a.lambda)) << "\" y1=\"" << fx(pr.y(a.mu)) << "\" x2=\""
           << fx(pr.x(b.lambda)) << "\" y2=\"" << fx(pr.y(b.mu))
           << "\" stroke=\"#000000\" stroke-width=\"1\"/>\n";
        const bool horizontal = a.mu == b.mu;
        const Rational& lo = horizontal ? vp.lambda_min : vp.mu_min;
        const Rational& hi = horizontal ? vp.lambda_max : vp.mu_max;
        for (Rational t = lo; t <= hi; t += tick) {
          const Rational x = horizontal ? pr.x(t) : pr.x(a.lambda);
          const Rational y = horizontal ? pr.y(a.mu) : pr.y(t);
          if (horizontal) {
            os << "<line x1=\"" << fx(x) << "\" y1=\"" << fx(y) << "\" x2=\"" << fx(x)
               << "\" y2=\"" << fx(y + 5) << "\" stroke=\"#000000\"/>";
            os << "<text x=\"" << fx(x) << "\" y=\"" << fx(y + 18)
               << "\" font-size=\"11\" text-anchor=\"middle\">" << t.str() << "</text>\n";
          } else {
            os << "<line x1=\"" << fx(x - 5) << "\" y1=\"" << fx(y) << "\" x2=\"" << fx(x)
               << "\" y2=\"" << fx(y) << "\" stroke=\"#000000\"/>";
            os << "<text x=\"" << fx(x - 8) << "\" y=\"" << fx(y + 4)
               << "\" font-size=\"11\" text-anchor=\"end\">" << t.str() << "</text>\n";
          }
        }
        const Rational lx = horizontal ? pr.x(b.lambda) : pr.x(b.lambda) - 10;
        const Rational ly = horizontal ? pr.y(b.mu) + 34 : pr.y(b.mu) - 12;
        os << "<text x=\"" << fx(lx) << "\" y=\"" << fx(ly)
           << "\" font-size=\"13\" text-anchor=\"end\">" << escape(p.label) << "</text>\n";
        os << "</g>\n";
        break;
      }
      case PrimitiveKind::Boundary: {
        os << "<g id=\"" << p.id << "\" class=\"boundary\" clip-path=\"url(#plot-area)\">";
        if (p.points.size() == 2) {
          os << "<line x1=\"" << fx(pr.x(p.points[0].lambda)) << "\" y1=\""
             << fx(pr.y(p.points[0].mu)) << "\" x2=\"" << fx(pr.x(p.points[1].lambda))
             << "\" y2=\"" << fx(pr.y(p.points[1].mu)) << "\" " << stroke_style(p.css_class)
             << "/>";
        } else {
          os << "<polyline points=\"";
          for (std::size_t i = 0; i < p.points.size(); ++i) {
            if (i) os << ' ';
            os << fx(pr.x(p.points[i].lambda)) << ',' << fx(pr.y(p.points[i].mu));
          }
          os << "\" " << stroke_style(p.css_class) << "/>";
        }
        const MapPoint& end = p.points.back();
        os << "<text x=\"" << fx(pr.x(end.lambda) - 4) << "\" y=\"" << fx(pr.y(end.mu) + 14)
           << "\" font-size=\"11\" text-anchor=\"end\">" << escape(p.label) << "</text>";
        os << "</g>\n";
        break;
      }
      case PrimitiveKind::RegionLabel: {
        const MapPoint& at = p.points.at(0);
        os << "<text id=\"" << p.id << "\" x=\"" << fx(pr.x(at.lambda)) << "\" y=\""
           << fx(pr.y(at.mu)) << "\" font-size=\"14\" font-style=\"italic\">" << escape(p.label)
           << "</text>\n";
        break;
      }
      case PrimitiveKind::Parallelogram: {
        os << "<g id=\"" << p.id << "\" class=\"" << p.css_class
           << "\" clip-path=\"url(#plot-area)\"><polygon points=\"";
        Rational cx(0);
        Rational cy(0);
        for (std::size_t i = 0; i < p.points.size(); ++i) {
          if (i) os << ' ';
          os << fx(pr.x(p.points[i].lambda)) << ',' << fx(pr.y(p.points[i].mu));
          cx += pr.x(p.points[i].lambda);
          cy += pr.y(p.points[i].mu);
        }
        const Rational count(static_cast<std::int64_t>(p.points.size()));
        os << "\" fill=\"#7aa6d6\" fill-opacity=\"0.25\" stroke=\"#1f4e9c\"/>";
        os << "<text x=\"" << fx(cx / count) << "\" y=\"" << fx(cy / count)
           << "\" font-size=\"14\" text-anchor=\"middle\">" << escape(p.label) << "</text></g>\n";
        break;
      }
      case PrimitiveKind::OverlayPoint: {
        const MapPoint& at = p.points.at(0);
        os << "<circle id=\"" << p.id << "\" class=\"" << p.css_class << "\" cx=\""
           << fx(pr.x(at.lambda)) << "\" cy=\"" << fx(pr.y(at.mu)) << "\" r=\"4\" fill=\""
           << point_fill(p.css_class) << "\"><title>" << escape(p.label) << "</title></circle>\n";
        break;
      }
      case PrimitiveKind::Legend: {
        const Rational y = kTop + 16 * legend_row++;
        os << "<g id=\"" << p.id << "\" class=\"legend\"><circle cx=\"" << fx(kLeft + kPlotW - 150)
           << "\" cy=\"" << fx(y - 4) << "\" r=\"4\" fill=\"" << point_fill(p.css_class)
           << "\"/><text x=\"" << fx(kLeft + kPlotW - 140) << "\" y=\"" << fx(y)
           << "\" font-size=\"11\">" << escape(p.label) << "</text></g>\n";
        break;
      }
    }
  }
  os << "</svg>\n";
  return os.str();
}

}  // namespace bng
