#pragma once

// Absolutely continuous measures on the circle, their pushforwards under
// zeta -> zeta^nu and under the boundary values of g, through Fourier moments.
//
// For a measure mu the coefficients are a_n = integral of zeta^{-n} dmu, so the
// moment integral of zeta^k dmu is a_{-k} and the mass is a_0.

#include <cstddef>
#include <functional>
#include <memory>
#include <vector>

#include "hullab/disc_toolkit.hpp"

namespace hullab {

class CircleMeasure {
 public:
  static constexpr std::size_t kDefaultSamples = 16384;

  /// mass * sigma.
  static CircleMeasure uniform(double mass = 1.0);
  /// Density sum a_n e^{i n theta}; needs a_{-n} = conj(a_n).
  static CircleMeasure trigonometric(const FourierSeries& density);
  /// omega_D(z0, .), with a_n = conj(z0)^n and a_{-n} = z0^n for n >= 0.
  static CircleMeasure harmonic(Complex z0);
  /// Density samples on uniform_angles(samples.size()); coefficients up to
  /// samples.size() / 4 from a real DFT.
  static CircleMeasure from_samples(std::vector<double> samples);
  /// Same, sampling density at kDefaultSamples nodes.
  static CircleMeasure from_density(const std::function<double(double)>& density,
                                    std::size_t samples = kDefaultSamples);
  /// Piecewise-constant density carrying masses[k] on the bin
  /// [2 pi k / B, 2 pi (k + 1) / B); coefficients are exact at every order.
  static CircleMeasure from_bins(std::vector<double> masses);

  /// a_n. Throws TruncationExceeded above order().
  Complex coefficient(int n) const;
  /// Largest |n| available; -1 means unbounded.
  int order() const { return order_; }
  bool exact() const { return order_ < 0; }
  double mass() const { return coefficient(0).real(); }
  /// Density with respect to sigma.
  double density(double theta) const;

 private:
  CircleMeasure() = default;

  int order_ = -1;
  std::function<Complex(int)> exact_;
  std::function<double(double)> density_;
  std::shared_ptr<const FourierSeries> cache_;
};

/// moment_k = integral of zeta^k d((p_nu)_* mu) = a_{-k nu}, for k = -K..K
/// (index k + K). Throws TruncationExceeded when K nu exceeds mu.order().
std::vector<Complex> pushforward_power_moments(const CircleMeasure& mu, int nu, int max_k);

/// max over 1 <= |k| <= K of |a_{-k nu}|.
double weak_gap(const CircleMeasure& mu, int nu, int max_k);

/// integral of zeta^k dmu for k = -K..K (index k + K).
std::vector<Complex> measure_moments(const CircleMeasure& mu, int max_k);

/// integral of h(zeta)^k dsigma for k = -K..K (index k + K): the moments of
/// the pushforward of sigma under a map h of the circle to itself.
std::vector<Complex> boundary_pushforward_moments(const std::function<Complex(Complex)>& h, int max_k,
                                                  std::size_t nodes = 8192);

inline constexpr std::size_t kPushforwardBins = 4096;

/// g_*(omega_D(z0, .) restricted to the arc [a, b]), as exact masses on
/// uniform bins. The phase of g along the arc is inverted when it is
/// monotone; otherwise fine cells are binned by the phase at their midpoint.
/// Each cell carries its exact harmonic measure, so mass is conserved.
/// Requires the arc inside I at distance >= the exclusion radius from E;
/// throws NonUnimodularBoundary when ||g| - 1| > 1e-2 on it.
CircleMeasure g_pushforward_measure(const OuterFunction& g, Complex z0, ArcUnion::Arc arc,
                                    std::size_t bins = kPushforwardBins);

}  // namespace hullab
