#include "hullab/winding_obstruction.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <string>

#include "hullab/errors.hpp"

namespace hullab {

namespace {

constexpr int kMaxRefinement = 12;
constexpr double kK1Tolerance = 1e-9;

double fold_unit(double t) {
  const double r = t - 2.0 * std::floor(t / 2.0);
  return r > 1.0 ? 2.0 - r : r;
}

/// Longest segment and closest vertex to z0 of a closed planar polyline.
std::pair<double, double> segment_and_separation(std::span<const Complex> curve, Complex z0) {
  double longest = 0.0;
  double closest = INFINITY;
  for (std::size_t i = 0; i < curve.size(); ++i) {
    const Complex next = curve[(i + 1) % curve.size()];
    longest = std::max(longest, std::abs(next - curve[i]));
    closest = std::min(closest, std::abs(curve[i] - z0));
  }
  return {longest, closest};
}

}  // namespace

std::vector<Complex> DiscreteCurve::z_projection() const {
  std::vector<Complex> z(vertices.size());
  std::transform(vertices.begin(), vertices.end(), z.begin(), [](const Point2& p) { return p.z; });
  return z;
}

double DiscreteCurve::max_gap() const {
  double gap = 0.0;
  for (std::size_t i = 0; i + 1 < vertices.size(); ++i) gap = std::max(gap, distance(vertices[i], vertices[i + 1]));
  return gap;
}

int winding_number(std::span<const Complex> curve, Complex z0) {
  if (curve.size() < 2) throw Error(ErrorCode::InvalidArgument, "a closed curve needs at least two vertices");
  const auto [longest, closest] = segment_and_separation(curve, z0);
  if (!(closest > 10.0 * longest)) {
    throw Error(ErrorCode::TooCloseToPoint, "closest vertex at " + std::to_string(closest) +
                                                " but longest segment " + std::to_string(longest));
  }
  double total = 0.0;
  for (std::size_t i = 0; i < curve.size(); ++i) {
    const Complex next = curve[(i + 1) % curve.size()];
    total += std::arg((next - z0) / (curve[i] - z0));
  }
  return static_cast<int>(std::lround(total / kTwoPi));
}

int zero_count_via_boundary(const std::function<Complex(Complex)>& f, Complex z0, std::size_t grid) {
  if (grid < 8) throw Error(ErrorCode::InvalidArgument, "boundary grid too small");
  for (; grid <= (std::size_t{1} << 20); grid *= 2) {
    std::vector<Complex> values(grid);
    const auto angles = uniform_angles(grid);
    for (std::size_t j = 0; j < grid; ++j) values[j] = f(std::polar(1.0, angles[j]));
    const auto [longest, closest] = segment_and_separation(values, z0);
    if (closest < 10.0 / static_cast<double>(grid)) {
      throw Error(ErrorCode::ZeroOnBoundary,
                  "|f - z0| = " + std::to_string(closest) + " on a grid of " + std::to_string(grid));
    }
    if (closest > 10.0 * longest) return winding_number(values, z0);
  }
  throw Error(ErrorCode::TooCloseToPoint, "boundary values too oscillatory for the winding rule");
}

TubeSpec::TubeSpec(ExampleSet base_set, double radius) : base(std::move(base_set)), delta(radius) {
  if (!(radius > 0.0)) throw Error(ErrorCode::InvalidArgument, "tube radius must be positive");
}

bool tube_membership(const TubeSpec& spec, const Point2& p) { return set_distance(spec.base, p) < spec.delta; }

bool curve_in_tube(const TubeSpec& spec, const DiscreteCurve& curve) {
  return std::all_of(curve.vertices.begin(), curve.vertices.end(),
                     [&](const Point2& p) { return tube_membership(spec, p); });
}

Point2 k1_point(double t, double phi) { return {std::polar(1.0, kTwoPi * t), std::polar(t, phi)}; }

DiscreteCurve random_k1_tube_curve(const ObstructionConfig& config, std::size_t trial, int attempt) {
  const std::size_t n = config.coarse_vertices;
  if (n < 8) throw Error(ErrorCode::InvalidArgument, "need at least 8 coarse vertices");
  std::seed_seq seq{static_cast<std::uint32_t>(config.seed), static_cast<std::uint32_t>(config.seed >> 32),
                    static_cast<std::uint32_t>(trial), static_cast<std::uint32_t>(attempt)};
  std::mt19937_64 rng(seq);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::normal_distribution<double> step_t(0.0, 0.01);
  std::normal_distribution<double> step_phi(0.0, 0.15);

  // Bridged walks on n + 1 nodes; node n coincides with node 0.
  std::vector<double> t(n + 1);
  std::vector<double> phi(n + 1);
  t[0] = unit(rng);
  phi[0] = kTwoPi * unit(rng);
  for (std::size_t j = 1; j <= n; ++j) {
    t[j] = t[j - 1] + step_t(rng);
    phi[j] = phi[j - 1] + step_phi(rng);
  }
  const double phi_turns = kTwoPi * static_cast<double>(static_cast<int>(std::floor(3.0 * unit(rng))) - 1);
  const double drift_t = t[n] - t[0];
  const double drift_phi = phi[n] - phi[0] - phi_turns;
  for (std::size_t j = 0; j <= n; ++j) {
    const double s = static_cast<double>(j) / static_cast<double>(n);
    t[j] -= s * drift_t;
    phi[j] -= s * drift_phi;
  }

  std::vector<Point2> jitter(n + 1);
  for (std::size_t j = 0; j < n; ++j) {
    const double rz = 0.5 * config.delta * unit(rng);
    const double az = kTwoPi * unit(rng);
    const double rw = 0.5 * config.delta * unit(rng);
    const double aw = kTwoPi * unit(rng);
    jitter[j] = {std::polar(rz, az), std::polar(rw, aw)};
  }
  jitter[n] = jitter[0];

  for (int level = 0; level <= kMaxRefinement; ++level) {
    const std::size_t pieces = std::size_t{1} << level;
    DiscreteCurve curve;
    curve.refinement = level;
    curve.vertices.reserve(n * pieces + 1);
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t q = 0; q < pieces; ++q) {
        const double s = static_cast<double>(q) / static_cast<double>(pieces);
        const Point2 base = k1_point(fold_unit((1.0 - s) * t[j] + s * t[j + 1]), (1.0 - s) * phi[j] + s * phi[j + 1]);
        curve.vertices.push_back({base.z + (1.0 - s) * jitter[j].z + s * jitter[j + 1].z,
                                  base.w + (1.0 - s) * jitter[j].w + s * jitter[j + 1].w});
      }
    }
    curve.vertices.push_back(curve.vertices.front());
    const auto z = curve.z_projection();
    const auto [longest, closest] = segment_and_separation(z, config.z0);
    if (curve.max_gap() < kMaxCurveGap && closest > 10.0 * longest) return curve;
  }
  throw Error(ErrorCode::TooCloseToPoint, "curve passes too close to z0 for the winding rule");
}

ObstructionReport obstruction_demo(const ObstructionConfig& config) {
  if (!(config.delta >= 0.0 && config.delta <= 0.3)) {
    throw Error(ErrorCode::InvalidArgument, "tube radius must lie in [0, 0.3]");
  }
  if (!(std::abs(config.z0) <= 0.7)) throw Error(ErrorCode::InvalidArgument, "need |z0| <= 0.7");
  if (config.max_regenerations < 1) throw Error(ErrorCode::InvalidArgument, "need at least one attempt");

  const auto k1 = ExampleSet::k1();
  auto inside = [&](const DiscreteCurve& curve) {
    if (config.delta > 0.0) return curve_in_tube(TubeSpec(k1, config.delta), curve);
    return std::all_of(curve.vertices.begin(), curve.vertices.end(),
                       [&](const Point2& p) { return set_distance(k1, p) <= kK1Tolerance; });
  };

  ObstructionReport report;
  report.trials = config.trials;
  report.delta = config.delta;
  report.z0 = config.z0;
  report.seed = config.seed;
  for (std::size_t trial = 0; trial < config.trials; ++trial) {
    int attempt = 0;
    for (;; ++attempt) {
      if (attempt == config.max_regenerations) {
        throw Error(ErrorCode::CurveEscapedTube, "trial " + std::to_string(trial) + " left the tube " +
                                                     std::to_string(attempt) + " times");
      }
      const auto curve = random_k1_tube_curve(config, trial, attempt);
      if (!inside(curve)) {
        ++report.rejections;
        continue;
      }
      report.max_refinement = std::max(report.max_refinement, curve.refinement);
      ++report.histogram[winding_number(curve.z_projection(), config.z0)];
      break;
    }
  }
  return report;
}

}  // namespace hullab
