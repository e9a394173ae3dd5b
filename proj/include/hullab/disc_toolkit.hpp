#pragma once

// One-variable complex analysis on the unit disc: Moebius automorphisms,
// Green's function, harmonic measure, Poisson integrals, conjugate
// functions, the outer function g and Fourier analysis on the circle.
//
// Angles are radians. The circle measure sigma is normalized, sigma(T) = 1,
// so an arc (a, b) has sigma-measure (b - a) / 2pi.

#include <complex>
#include <cstddef>
#include <memory>
#include <numbers>
#include <span>
#include <vector>

namespace hullab {

using Complex = std::complex<double>;

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

/// Maps any angle into [0, 2pi).
double normalize_angle(double theta);

/// Shortest angular distance between two angles, in [0, pi].
double angular_distance(double a, double b);

/// theta_j = 2 pi j / count.
std::vector<double> uniform_angles(std::size_t count);

struct CirclePoint {
  double theta = 0.0;

  CirclePoint() = default;
  explicit CirclePoint(double angle) : theta(normalize_angle(angle)) {}

  Complex value() const { return std::polar(1.0, theta); }
};

/// Finite union of pairwise disjoint open arcs of the unit circle.
class ArcUnion {
 public:
  struct Arc {
    double start;  // in [0, 2pi)
    double end;    // start < end < start + 2pi
    double length() const { return end - start; }
  };

  /// Arcs are given as (start, end) pairs traversed counterclockwise; an end
  /// smaller than its start wraps through angle 0. Throws InvalidArcUnion
  /// on empty, overlapping or full-measure input.
  explicit ArcUnion(std::vector<Arc> arcs);

  /// I_+ = {Im zeta > 0} = (0, pi).
  static ArcUnion upper_half();

  std::span<const Arc> arcs() const { return arcs_; }

  /// sigma(closure of I); the endpoint set E is finite so this is also sigma(I).
  double measure() const;

  /// Relative boundary E of I in the circle, as angles.
  const std::vector<double>& endpoints() const { return endpoints_; }

  /// Closed arcs whose union is T \ I (zero-length gaps become points).
  std::vector<Arc> complement() const;

  bool contains(double theta) const;
  bool closure_contains(double theta, double tol = 0.0) const;

  /// Angular distance from theta to E.
  double endpoint_distance(double theta) const;
  /// Euclidean distance from z to the points of E.
  double endpoint_distance(Complex z) const;

  /// Euclidean distance from z to closure(I) and to T \ I.
  double distance_to_closure(Complex z) const;
  double distance_to_complement(Complex z) const;

 private:
  std::vector<Arc> arcs_;
  std::vector<double> endpoints_;
};

/// Euclidean distance from z to the closed arc [start, end] of the circle.
double distance_to_arc(Complex z, const ArcUnion::Arc& arc);

/// Coefficients a_n, |n| <= order, of sum a_n e^{i n theta}.
class FourierSeries {
 public:
  explicit FourierSeries(int order = 0);
  FourierSeries(int order, std::vector<Complex> coefficients);

  int order() const { return order_; }
  /// Zero outside the stored range.
  Complex operator[](int n) const;
  Complex& at(int n);

  Complex evaluate(double theta) const;
  /// Poisson extension sum a_n r^|n| e^{i n phi} at z = r e^{i phi}, |z| <= 1.
  Complex harmonic_extension(Complex z) const;

  std::span<const Complex> coefficients() const { return coefficients_; }

 private:
  int order_;
  std::vector<Complex> coefficients_;
};

/// Exact Fourier coefficients of the indicator of closure(I), truncated at order.
FourierSeries arc_indicator_series(const ArcUnion& arcs, int order);

/// phi_{z0}(zeta) = (z0 - zeta) / (1 - conj(z0) zeta).
Complex mobius(Complex z0, Complex zeta);

/// g_D(z0, zeta) = -log |phi_{z0}(zeta)|.
double green_function(Complex z0, Complex zeta);

/// Density of omega_D(z0, .) with respect to sigma.
double harmonic_measure_density(Complex z0, CirclePoint zeta);

/// omega_D(z0, arc) for the counterclockwise arc from a to b (b >= a).
double harmonic_measure_of_arc(Complex z0, double a, double b);

/// Continuous lift of arg phi_{z0}(e^{i theta}); increasing, gains 2pi per turn.
double mobius_boundary_angle(Complex z0, double theta);

struct PoissonValue {
  double value = 0.0;
  /// Set when the point is within two grid spacings of the circle, where the
  /// kernel is too peaked for the sample grid.
  bool under_resolved = false;
};

/// Trapezoid quadrature of the Poisson kernel against samples taken at
/// uniform_angles(samples.size()).
PoissonValue poisson_integral(std::span<const double> samples, Complex point);

/// Multiplier a_n -> -i sign(n) a_n, normalized so that v(0) = 0.
FourierSeries harmonic_conjugate(const FourierSeries& u);

/// a_n = integral of zeta^{-n} f dsigma for |n| <= max_order, from a real DFT
/// of samples on uniform_angles(samples.size()). Needs at least 4 max_order
/// samples.
FourierSeries circle_moments(std::span<const double> samples, int max_order);

enum class OuterMethod { fourier, closed_form_upper_half };

/// g = exp(u + i v) with u = -P[chi of T \ closure(I)] and v(0) = 0, so that
/// |g| = 1 on I and |g| < 1 on T \ closure(I).
class OuterFunction {
 public:
  static constexpr double kDefaultExclusion = 0.02;
  static constexpr int kDefaultOrder = 4096;

  /// Fourier construction from the exact, truncated indicator coefficients.
  static OuterFunction fourier(const ArcUnion& arcs, int order = kDefaultOrder,
                               double exclusion = kDefaultExclusion);
  /// Closed form for I_+, see g_closed_form_upper_half.
  static OuterFunction closed_form_upper_half(double exclusion = kDefaultExclusion);

  /// g(z) for |z| <= 1. On the circle the Fourier construction refuses points
  /// closer than the exclusion radius to E (TruncationError); the closed form
  /// refuses only the points of E themselves (BranchPole).
  Complex operator()(Complex z) const;

  /// |g(e^{i theta})| with the same refusal rules.
  double boundary_modulus(double theta) const;

  /// g at radius * e^{i theta_j} on uniform_angles(nodes), without the
  /// boundary refusal check. For the Fourier construction the values inside
  /// the exclusion zone carry Gibbs oscillation.
  std::vector<Complex> on_circle(double radius, std::size_t nodes) const;

  /// True when boundary evaluation at theta is refused.
  bool excluded(double theta) const;

  /// False inside the Gibbs zone of the Fourier construction: within the
  /// exclusion radius of E and closer than 8/order to the circle.
  bool reliable(Complex z) const;

  const ArcUnion& arcs() const { return arcs_; }
  OuterMethod method() const { return method_; }
  double exclusion_radius() const { return exclusion_; }
  /// Truncation order for the Fourier construction, 0 for the closed form.
  int order() const { return static_cast<int>(log_coefficients_.size()) - 1; }

 private:
  OuterFunction(ArcUnion arcs, OuterMethod method, double exclusion,
                std::vector<Complex> log_coefficients);

  ArcUnion arcs_;
  OuterMethod method_;
  double exclusion_;
  // h_n with g = exp(sum_{n>=0} h_n z^n); empty for the closed form.
  std::vector<Complex> log_coefficients_;
};

OuterFunction build_outer_function(const ArcUnion& arcs, int order = OuterFunction::kDefaultOrder);

/// g(zeta) = exp((i/pi) Log(i (1 - zeta)/(1 + zeta))) with the principal Log on
/// the upper half-plane. Throws BranchPole at zeta = -1 and zeta = 1.
Complex g_closed_form_upper_half(Complex zeta);

}  // namespace hullab
