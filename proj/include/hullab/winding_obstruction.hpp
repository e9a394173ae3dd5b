#pragma once

// Winding numbers of sampled closed curves, zero counts by the argument
// principle and curves confined to metric tubes around K1.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <span>
#include <vector>

#include "hullab/hull_examples.hpp"

namespace hullab {

/// Closed polyline in C^2 (first vertex repeated at the end).
struct DiscreteCurve {
  std::vector<Point2> vertices;
  int refinement = 0;

  std::vector<Complex> z_projection() const;
  /// Largest distance between consecutive vertices.
  double max_gap() const;
};

inline constexpr double kMaxCurveGap = 0.05;

/// Sum of principal argument increments of (v - z0) over the closed polyline
/// (a closing segment is added when the last vertex differs from the first),
/// divided by 2 pi. Throws TooCloseToPoint unless every vertex is farther
/// than 10 x the longest segment from z0.
int winding_number(std::span<const Complex> curve, Complex z0);

/// Winding of f(zeta) - z0 along the unit circle sampled at grid points, the
/// grid being doubled (up to 2^20) until the separation rule holds. Throws
/// ZeroOnBoundary when |f - z0| < 10 / grid somewhere on the circle.
int zero_count_via_boundary(const std::function<Complex(Complex)>& f, Complex z0, std::size_t grid = 4096);

struct TubeSpec {
  ExampleSet base;
  double delta;

  /// Throws InvalidArgument unless delta > 0.
  TubeSpec(ExampleSet base_set, double radius);
};

/// set_distance(base, p) < delta.
bool tube_membership(const TubeSpec& spec, const Point2& p);

/// Every vertex inside the tube.
bool curve_in_tube(const TubeSpec& spec, const DiscreteCurve& curve);

/// The K1 parameterization (e^{2 pi i t}, t e^{i phi}).
Point2 k1_point(double t, double phi);

struct ObstructionConfig {
  std::size_t trials = 500;
  double delta = 0.2;  // 0 confines curves to K1 itself
  Complex z0 = 0.0;
  std::uint64_t seed = 42;
  std::size_t coarse_vertices = 256;
  int max_regenerations = 100;
};

struct ObstructionReport {
  std::size_t trials = 0;
  double delta = 0.0;
  Complex z0 = 0.0;
  std::uint64_t seed = 0;
  std::map<int, std::size_t> histogram;  // winding -> count
  std::size_t rejections = 0;
  int max_refinement = 0;
};

/// One random closed curve near K1 for the given trial: a bridged random walk
/// in (t, phi), t folded into [0, 1], phi closing up to a multiple of 2 pi,
/// plus a jitter of modulus <= delta/2 in each coordinate. Parameters and
/// jitter are interpolated linearly between coarse vertices, 2^refinement
/// pieces per segment, until gaps are below kMaxCurveGap and the z-projection
/// satisfies the separation rule around z0.
DiscreteCurve random_k1_tube_curve(const ObstructionConfig& config, std::size_t trial, int attempt);

/// Windings around z0 of the z-projections of config.trials tube curves. A
/// curve with a vertex outside the tube is regenerated; CurveEscapedTube
/// after max_regenerations attempts for one trial. Each trial draws from its
/// own generator seeded by (seed, trial, attempt), so the report does not
/// depend on evaluation order.
ObstructionReport obstruction_demo(const ObstructionConfig& config);

}  // namespace hullab
