#include "hullab/circle_averaging.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <utility>

#include "fft.hpp"
#include "hullab/errors.hpp"

namespace hullab {

namespace {

double sinc(double x) { return std::abs(x) < 1e-8 ? 1.0 - x * x / 6.0 : std::sin(x) / x; }

Complex integer_power_signed(Complex z, int k) {
  Complex result = 1.0;
  Complex base = k < 0 ? 1.0 / z : z;
  for (unsigned e = static_cast<unsigned>(std::abs(k)); e != 0; e >>= 1) {
    if (e & 1U) result *= base;
    base *= base;
  }
  return result;
}

}  // namespace

CircleMeasure CircleMeasure::uniform(double mass) {
  if (!(mass >= 0.0)) throw Error(ErrorCode::InvalidArgument, "mass must be nonnegative");
  CircleMeasure mu;
  mu.exact_ = [mass](int n) { return n == 0 ? Complex(mass, 0.0) : Complex(0.0, 0.0); };
  mu.density_ = [mass](double) { return mass; };
  return mu;
}

CircleMeasure CircleMeasure::trigonometric(const FourierSeries& density) {
  for (int n = 0; n <= density.order(); ++n) {
    if (std::abs(density[-n] - std::conj(density[n])) > 1e-12 * (1.0 + std::abs(density[n]))) {
      throw Error(ErrorCode::InvalidArgument, "density coefficients are not those of a real function");
    }
  }
  auto series = std::make_shared<const FourierSeries>(density);
  CircleMeasure mu;
  mu.exact_ = [series](int n) { return (*series)[n]; };
  mu.density_ = [series](double theta) { return series->evaluate(theta).real(); };
  return mu;
}

CircleMeasure CircleMeasure::harmonic(Complex z0) {
  if (!(std::abs(z0) < 1.0)) throw Error(ErrorCode::InvalidArgument, "harmonic measure needs |z0| < 1");
  CircleMeasure mu;
  mu.exact_ = [z0](int n) { return n >= 0 ? integer_power_signed(std::conj(z0), n) : integer_power_signed(z0, -n); };
  mu.density_ = [z0](double theta) { return (1.0 - std::norm(z0)) / std::norm(std::polar(1.0, theta) - z0); };
  return mu;
}

CircleMeasure CircleMeasure::from_samples(std::vector<double> samples) {
  if (samples.size() < 4) throw Error(ErrorCode::InvalidArgument, "need at least 4 density samples");
  const int order = static_cast<int>(samples.size() / 4);
  CircleMeasure mu;
  mu.order_ = order;
  mu.cache_ = std::make_shared<const FourierSeries>(circle_moments(samples, order));
  auto shared = std::make_shared<const std::vector<double>>(std::move(samples));
  mu.density_ = [shared](double theta) {
    const auto& s = *shared;
    const double x = normalize_angle(theta) / kTwoPi * static_cast<double>(s.size());
    const auto i = static_cast<std::size_t>(x) % s.size();
    const double t = x - std::floor(x);
    return (1.0 - t) * s[i] + t * s[(i + 1) % s.size()];
  };
  return mu;
}

CircleMeasure CircleMeasure::from_density(const std::function<double(double)>& density, std::size_t samples) {
  const auto angles = uniform_angles(samples);
  std::vector<double> values(samples);
  std::transform(angles.begin(), angles.end(), values.begin(), density);
  return from_samples(std::move(values));
}

CircleMeasure CircleMeasure::from_bins(std::vector<double> masses) {
  if (masses.empty()) throw Error(ErrorCode::InvalidArgument, "no bins");
  const std::size_t bins = masses.size();
  const auto half = detail::real_forward_dft(masses);
  auto spectrum = std::make_shared<std::vector<Complex>>(bins);
  for (std::size_t j = 0; j < half.size(); ++j) {
    (*spectrum)[j] = half[j];
    if (j != 0) (*spectrum)[bins - j] = std::conj(half[j]);
  }
  const double width = kTwoPi / static_cast<double>(bins);
  CircleMeasure mu;
  mu.exact_ = [spectrum, bins, width](int n) {
    const auto m = static_cast<long long>(bins);
    const auto j = static_cast<std::size_t>(((static_cast<long long>(n) % m) + m) % m);
    const double x = 0.5 * width * static_cast<double>(n);
    return (*spectrum)[j] * std::polar(sinc(x), -x);
  };
  auto shared = std::make_shared<const std::vector<double>>(std::move(masses));
  mu.density_ = [shared, width](double theta) {
    const auto k = static_cast<std::size_t>(normalize_angle(theta) / width) % shared->size();
    return (*shared)[k] * static_cast<double>(shared->size());
  };
  return mu;
}

Complex CircleMeasure::coefficient(int n) const {
  if (exact_) return exact_(n);
  if (std::abs(n) > order_) {
    throw Error(ErrorCode::TruncationExceeded,
                "coefficient " + std::to_string(n) + " beyond cached order " + std::to_string(order_));
  }
  return (*cache_)[n];
}

double CircleMeasure::density(double theta) const { return density_(theta); }

std::vector<Complex> pushforward_power_moments(const CircleMeasure& mu, int nu, int max_k) {
  if (nu < 1 || max_k < 0) throw Error(ErrorCode::InvalidArgument, "need nu >= 1 and K >= 0");
  if (!mu.exact() && static_cast<long long>(max_k) * nu > mu.order()) {
    throw Error(ErrorCode::TruncationExceeded, "K nu = " + std::to_string(static_cast<long long>(max_k) * nu) +
                                                   " exceeds cached order " + std::to_string(mu.order()));
  }
  std::vector<Complex> moments(static_cast<std::size_t>(2 * max_k + 1));
  for (int k = -max_k; k <= max_k; ++k) moments[static_cast<std::size_t>(k + max_k)] = mu.coefficient(-k * nu);
  return moments;
}

double weak_gap(const CircleMeasure& mu, int nu, int max_k) {
  const auto moments = pushforward_power_moments(mu, nu, max_k);
  double gap = 0.0;
  for (int k = -max_k; k <= max_k; ++k) {
    if (k != 0) gap = std::max(gap, std::abs(moments[static_cast<std::size_t>(k + max_k)]));
  }
  return gap;
}

std::vector<Complex> measure_moments(const CircleMeasure& mu, int max_k) {
  return pushforward_power_moments(mu, 1, max_k);
}

std::vector<Complex> boundary_pushforward_moments(const std::function<Complex(Complex)>& h, int max_k,
                                                  std::size_t nodes) {
  if (max_k < 0 || nodes == 0) throw Error(ErrorCode::InvalidArgument, "need K >= 0 and nodes > 0");
  std::vector<Complex> moments(static_cast<std::size_t>(2 * max_k + 1), 0.0);
  for (double t : uniform_angles(nodes)) {
    const Complex v = h(std::polar(1.0, t));
    for (int k = -max_k; k <= max_k; ++k) moments[static_cast<std::size_t>(k + max_k)] += integer_power_signed(v, k);
  }
  for (auto& m : moments) m /= static_cast<double>(nodes);
  return moments;
}

CircleMeasure g_pushforward_measure(const OuterFunction& g, Complex z0, ArcUnion::Arc arc, std::size_t bins) {
  if (bins < 2) throw Error(ErrorCode::InvalidArgument, "need at least two bins");
  if (!(std::abs(z0) < 1.0)) throw Error(ErrorCode::InvalidArgument, "center must lie in the open disc");
  if (!(arc.end > arc.start)) throw Error(ErrorCode::InvalidArgument, "empty arc");

  const std::size_t cells = 64 * bins;
  const double step = arc.length() / static_cast<double>(cells);
  const auto& arcs = g.arcs();
  std::vector<double> theta(cells + 1);
  std::vector<Complex> value(cells + 1);
  for (std::size_t i = 0; i <= cells; ++i) {
    theta[i] = i == cells ? arc.end : arc.start + step * static_cast<double>(i);
    if (!arcs.contains(theta[i]) || arcs.endpoint_distance(theta[i]) < g.exclusion_radius() * (1.0 - 1e-12)) {
      throw Error(ErrorCode::InvalidArgument, "arc leaves I or enters the exclusion zone around E");
    }
    value[i] = g(std::polar(1.0, theta[i]));
    if (std::abs(std::abs(value[i]) - 1.0) > 1e-2) {
      throw Error(ErrorCode::NonUnimodularBoundary,
                  "|g| = " + std::to_string(std::abs(value[i])) + " at theta = " + std::to_string(theta[i]));
    }
  }

  // Unwrapped phase along the arc.
  std::vector<double> phase(cells + 1);
  phase[0] = std::arg(value[0]);
  bool increasing = true;
  bool decreasing = true;
  for (std::size_t i = 1; i <= cells; ++i) {
    const double d = std::arg(value[i] / value[i - 1]);
    phase[i] = phase[i - 1] + d;
    increasing = increasing && d > 0.0;
    decreasing = decreasing && d < 0.0;
  }

  const double width = kTwoPi / static_cast<double>(bins);
  std::vector<double> masses(bins, 0.0);
  auto bin_of = [&](double psi) { return static_cast<std::size_t>(normalize_angle(psi) / width) % bins; };
  auto phase_at = [&](std::size_t i, double t) { return phase[i] + std::arg(g(std::polar(1.0, t)) / value[i]); };

  for (std::size_t i = 0; i < cells; ++i) {
    if (!increasing && !decreasing) {
      const double mid = 0.5 * (theta[i] + theta[i + 1]);
      masses[bin_of(phase_at(i, mid))] += harmonic_measure_of_arc(z0, theta[i], theta[i + 1]);
      continue;
    }
    // Split the cell at every bin boundary its phase range crosses.
    const double lo = std::min(phase[i], phase[i + 1]);
    const double hi = std::max(phase[i], phase[i + 1]);
    double left = theta[i];
    double left_phase = phase[i];
    auto first = static_cast<long long>(std::floor(lo / width)) + 1;
    auto last = static_cast<long long>(std::ceil(hi / width)) - 1;
    std::vector<double> cuts;
    for (long long c = first; c <= last; ++c) cuts.push_back(width * static_cast<double>(c));
    if (decreasing) std::reverse(cuts.begin(), cuts.end());
    for (double beta : cuts) {
      double a = left;
      double b = theta[i + 1];
      for (int it = 0; it < 60 && b - a > 1e-15; ++it) {
        const double m = 0.5 * (a + b);
        const bool before = increasing ? phase_at(i, m) < beta : phase_at(i, m) > beta;
        (before ? a : b) = m;
      }
      const double cut = 0.5 * (a + b);
      masses[bin_of(0.5 * (left_phase + beta))] += harmonic_measure_of_arc(z0, left, cut);
      left = cut;
      left_phase = beta;
    }
    masses[bin_of(0.5 * (left_phase + phase[i + 1]))] += harmonic_measure_of_arc(z0, left, theta[i + 1]);
  }
  return CircleMeasure::from_bins(std::move(masses));
}

}  // namespace hullab
