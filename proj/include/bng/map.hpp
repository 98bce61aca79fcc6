#pragma once

// Geography of the (lambda, mu) = (k/n, d/n) plane: region facts for rational
// points, the boundary lines and Brill-Noether curve, Teixidor parallelograms,
// and a deterministic SVG rendering of the map.

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "bng/core.hpp"

namespace bng {

struct RegionReport {
  SlopeCoords coords;
  /// mu >= lambda + g - 1: the locus is the whole moduli space.
  bool above_riemann_roch = false;
  /// mu < 2 lambda - 2: empty by Clifford, meaningful when clifford_applicable.
  bool below_clifford = false;
  /// 0 <= mu <= 2g - 2.
  bool clifford_applicable = false;
  /// mu > 2g - 2.
  bool beyond_special = false;
  Rational rho_tilde;
  /// mu + (1 - lambda) g >= 1, i.e. n <= d + (n-k)g.
  bool on_or_above_tangent = false;
  /// 0 <= mu <= 1.
  bool in_strip = false;
};

/// Requires g >= 2 and lambda >= 0.
RegionReport region_report(std::int64_t g, const SlopeCoords& c);

/// lambda_coeff * lambda + mu_coeff * mu = rhs.
struct LineCoeffs {
  Rational lambda_coeff;
  Rational mu_coeff;
  Rational rhs;

  /// Requires mu_coeff != 0.
  Rational mu_at(const Rational& lambda) const;
  bool contains(const SlopeCoords& c) const;
};

/// Tangent to rho-tilde = 0 at (1, 1): mu + (1 - lambda) g = 1.
LineCoeffs tangent_line(std::int64_t g);

/// Brill-Noether curve solved for mu: lambda + (g-1) - (g-1)/lambda.
/// Requires lambda > 0.
Rational brill_noether_curve_mu(std::int64_t g, const Rational& lambda);

/// Integer-vertex parallelogram with sides parallel to lambda = 0 and
/// mu = lambda. Vertices: v, v + (0, a), v + (b, b), v + (b, a + b).
struct Parallelogram {
  std::int64_t lambda0 = 0;
  std::int64_t mu0 = 0;
  std::int64_t vertical_extent = 0;  // a
  std::int64_t diagonal_extent = 0;  // b

  /// Counter-clockwise from the base vertex.
  std::array<SlopeCoords, 4> vertices() const;
  /// Largest lambda, then smallest mu.
  SlopeCoords lower_right() const;
};

struct TeixidorCheck {
  bool valid = false;
  bool all_above = false;
  bool lower_right_on_curve = false;
};

TeixidorCheck validate_teixidor(std::int64_t g, const Parallelogram& pg);

/// Parses a JSON array of {"base_vertex":[l,m],"vertical_extent":a,
/// "diagonal_extent":b}. Throws Error(Parse) on malformed input.
std::vector<Parallelogram> parse_parallelograms(const std::string& json_text);

struct MapPoint {
  Rational lambda;
  Rational mu;
};

enum class PrimitiveKind { Axis, Boundary, RegionLabel, Parallelogram, OverlayPoint, Legend };

struct Primitive {
  PrimitiveKind kind = PrimitiveKind::Boundary;
  std::string id;
  std::string label;
  /// Two points for lines, many for polylines and polygons, one for labels
  /// and overlay points.
  std::vector<MapPoint> points;
  std::string css_class;
};

struct Viewport {
  Rational lambda_min;
  Rational lambda_max;
  Rational mu_min;
  Rational mu_max;
};

struct MapDocument {
  std::int64_t genus = 2;
  Viewport viewport;
  std::vector<Primitive> layers;
};

struct MapOptions {
  /// Restrict to 0 <= mu <= 1.
  bool strip_only = false;
  std::vector<Parallelogram> parallelograms;
  /// Rank whose strip points are classified and drawn.
  std::optional<std::int64_t> overlay_n;
  Rational hyperbola_step = Rational::of(1, 100);
};

MapDocument render_map(std::int64_t g, const MapOptions& opts = {});

/// 800x600 SVG 1.1, 10% margin, y axis pointing up, coordinates rounded to
/// six decimals.
std::string to_svg(const MapDocument& doc);

}  // namespace bng
