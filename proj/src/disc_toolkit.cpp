#include "hullab/disc_toolkit.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "fft.hpp"
#include "hullab/errors.hpp"

namespace hullab {
namespace {

constexpr double kDenominatorFloor = 1e-14;
constexpr double kBoundaryTol = 1e-12;

void require_interior(Complex z0, const char* what) {
  if (!(std::abs(z0) < 1.0)) {
    throw Error(ErrorCode::InvalidArgument,
                std::string(what) + " must lie in the open unit disc");
  }
}

}  // namespace

double normalize_angle(double theta) {
  double t = std::fmod(theta, kTwoPi);
  if (t < 0.0) t += kTwoPi;
  if (t >= kTwoPi) t = 0.0;
  return t;
}

double angular_distance(double a, double b) {
  const double d = normalize_angle(a - b);
  return std::min(d, kTwoPi - d);
}

std::vector<double> uniform_angles(std::size_t count) {
  std::vector<double> out(count);
  for (std::size_t j = 0; j < count; ++j) {
    out[j] = kTwoPi * static_cast<double>(j) / static_cast<double>(count);
  }
  return out;
}

// ---------------------------------------------------------------- ArcUnion

ArcUnion::ArcUnion(std::vector<Arc> arcs) {
  if (arcs.empty()) throw Error(ErrorCode::InvalidArcUnion, "no arcs given");
  for (auto& arc : arcs) {
    double length = arc.end - arc.start;
    if (length <= 0.0) length += kTwoPi;
    if (!(length > 0.0) || !(length < kTwoPi) || !std::isfinite(length)) {
      throw Error(ErrorCode::InvalidArcUnion, "arc length must lie in (0, 2pi)");
    }
    arc.start = normalize_angle(arc.start);
    arc.end = arc.start + length;
  }
  std::sort(arcs.begin(), arcs.end(), [](const Arc& a, const Arc& b) { return a.start < b.start; });
  constexpr double tol = 1e-15;
  for (std::size_t i = 0; i + 1 < arcs.size(); ++i) {
    if (arcs[i].end > arcs[i + 1].start + tol) {
      throw Error(ErrorCode::InvalidArcUnion, "arcs overlap");
    }
  }
  if (arcs.back().end > arcs.front().start + kTwoPi + tol) {
    throw Error(ErrorCode::InvalidArcUnion, "arcs overlap across angle 0");
  }
  arcs_ = std::move(arcs);
  if (!(measure() < 1.0)) {
    throw Error(ErrorCode::InvalidArcUnion, "closure of I must have sigma-measure < 1");
  }
  for (const auto& arc : arcs_) {
    endpoints_.push_back(normalize_angle(arc.start));
    endpoints_.push_back(normalize_angle(arc.end));
  }
  std::sort(endpoints_.begin(), endpoints_.end());
  endpoints_.erase(std::unique(endpoints_.begin(), endpoints_.end(),
                               [](double a, double b) { return angular_distance(a, b) < 1e-15; }),
                   endpoints_.end());
}

ArcUnion ArcUnion::upper_half() { return ArcUnion({{0.0, kPi}}); }

double ArcUnion::measure() const {
  double total = 0.0;
  for (const auto& arc : arcs_) total += arc.length();
  return total / kTwoPi;
}

std::vector<ArcUnion::Arc> ArcUnion::complement() const {
  std::vector<Arc> gaps;
  for (std::size_t i = 0; i < arcs_.size(); ++i) {
    const double from = arcs_[i].end;
    const double to = (i + 1 < arcs_.size()) ? arcs_[i + 1].start : arcs_.front().start + kTwoPi;
    const double start = normalize_angle(from);
    gaps.push_back({start, start + std::max(0.0, to - from)});
  }
  return gaps;
}

bool ArcUnion::contains(double theta) const {
  for (const auto& arc : arcs_) {
    const double t = normalize_angle(theta - arc.start);
    if (t > 0.0 && t < arc.length()) return true;
  }
  return false;
}

bool ArcUnion::closure_contains(double theta, double tol) const {
  for (const auto& arc : arcs_) {
    const double t = normalize_angle(theta - arc.start);
    if (t <= arc.length() + tol || t >= kTwoPi - tol) return true;
  }
  return false;
}

double ArcUnion::endpoint_distance(double theta) const {
  double best = std::numeric_limits<double>::infinity();
  for (double e : endpoints_) best = std::min(best, angular_distance(theta, e));
  return best;
}

double ArcUnion::endpoint_distance(Complex z) const {
  double best = std::numeric_limits<double>::infinity();
  for (double e : endpoints_) best = std::min(best, std::abs(z - std::polar(1.0, e)));
  return best;
}

double distance_to_arc(Complex z, const ArcUnion::Arc& arc) {
  const double radius = std::abs(z);
  if (radius == 0.0) return 1.0;
  const double t = normalize_angle(std::arg(z) - arc.start);
  if (t <= arc.length()) return std::abs(radius - 1.0);
  return std::min(std::abs(z - std::polar(1.0, arc.start)), std::abs(z - std::polar(1.0, arc.end)));
}

double ArcUnion::distance_to_closure(Complex z) const {
  double best = std::numeric_limits<double>::infinity();
  for (const auto& arc : arcs_) best = std::min(best, distance_to_arc(z, arc));
  return best;
}

double ArcUnion::distance_to_complement(Complex z) const {
  double best = std::numeric_limits<double>::infinity();
  for (const auto& gap : complement()) best = std::min(best, distance_to_arc(z, gap));
  return best;
}

// ----------------------------------------------------------- FourierSeries

FourierSeries::FourierSeries(int order)
    : order_(order), coefficients_(static_cast<std::size_t>(2 * order + 1)) {
  if (order < 0) throw Error(ErrorCode::InvalidArgument, "negative Fourier order");
}

FourierSeries::FourierSeries(int order, std::vector<Complex> coefficients)
    : order_(order), coefficients_(std::move(coefficients)) {
  if (order < 0 || coefficients_.size() != static_cast<std::size_t>(2 * order + 1)) {
    throw Error(ErrorCode::InvalidArgument, "coefficient count must be 2*order+1");
  }
}

Complex FourierSeries::operator[](int n) const {
  if (n < -order_ || n > order_) return {0.0, 0.0};
  return coefficients_[static_cast<std::size_t>(n + order_)];
}

Complex& FourierSeries::at(int n) {
  if (n < -order_ || n > order_) throw Error(ErrorCode::InvalidArgument, "Fourier index out of range");
  return coefficients_[static_cast<std::size_t>(n + order_)];
}

Complex FourierSeries::evaluate(double theta) const { return harmonic_extension(std::polar(1.0, theta)); }

Complex FourierSeries::harmonic_extension(Complex z) const {
  // Positive and negative frequencies by Horner in z and conj(z).
  Complex positive = 0.0;
  Complex negative = 0.0;
  const Complex zbar = std::conj(z);
  for (int n = order_; n >= 1; --n) {
    positive = positive * z + (*this)[n];
    negative = negative * zbar + (*this)[-n];
  }
  return (*this)[0] + positive * z + negative * zbar;
}

FourierSeries arc_indicator_series(const ArcUnion& arcs, int order) {
  FourierSeries series(order);
  series.at(0) = arcs.measure();
  for (int n = 1; n <= order; ++n) {
    Complex c = 0.0;
    for (const auto& arc : arcs.arcs()) {
      // (1/2pi) int_a^b e^{-in t} dt
      c += (std::polar(1.0, -n * arc.start) - std::polar(1.0, -n * arc.end)) /
           (Complex(0.0, kTwoPi * n));
    }
    series.at(n) = c;
    series.at(-n) = std::conj(c);
  }
  return series;
}

// ------------------------------------------------------- point evaluators

Complex mobius(Complex z0, Complex zeta) {
  require_interior(z0, "Moebius center");
  const Complex denominator = 1.0 - std::conj(z0) * zeta;
  if (std::abs(denominator) <= kDenominatorFloor) {
    throw Error(ErrorCode::DegenerateDenominator, "1 - conj(z0) zeta vanishes");
  }
  return (z0 - zeta) / denominator;
}

double green_function(Complex z0, Complex zeta) {
  require_interior(z0, "Green pole");
  if (std::abs(zeta) > 1.0 + kBoundaryTol) {
    throw Error(ErrorCode::InvalidArgument, "Green's function evaluated outside the closed disc");
  }
  if (std::abs(zeta - z0) <= kDenominatorFloor) {
    throw Error(ErrorCode::PoleAtSource, "zeta coincides with the pole z0");
  }
  return -std::log(std::abs(mobius(z0, zeta)));
}

double harmonic_measure_density(Complex z0, CirclePoint zeta) {
  require_interior(z0, "harmonic measure pole");
  const double r = std::abs(z0);
  const double phi = std::arg(z0);
  return (1.0 - r * r) / (1.0 - 2.0 * r * std::cos(zeta.theta - phi) + r * r);
}

double mobius_boundary_angle(Complex z0, double theta) {
  require_interior(z0, "Moebius center");
  // phi(e^{it}) = -e^{it} conj(q)/q with q = 1 - conj(z0) e^{it}, Re q > 0.
  const Complex q = 1.0 - std::conj(z0) * std::polar(1.0, theta);
  return theta + kPi - 2.0 * std::arg(q);
}

double harmonic_measure_of_arc(Complex z0, double a, double b) {
  return (mobius_boundary_angle(z0, b) - mobius_boundary_angle(z0, a)) / kTwoPi;
}

PoissonValue poisson_integral(std::span<const double> samples, Complex point) {
  if (samples.empty()) throw Error(ErrorCode::InvalidArgument, "no boundary samples");
  require_interior(point, "Poisson evaluation point");
  const std::size_t m = samples.size();
  const double r = std::abs(point);
  const double phi = std::arg(point);
  const double spacing = kTwoPi / static_cast<double>(m);
  double sum = 0.0;
  for (std::size_t j = 0; j < m; ++j) {
    const double t = spacing * static_cast<double>(j);
    sum += (1.0 - r * r) / (1.0 - 2.0 * r * std::cos(t - phi) + r * r) * samples[j];
  }
  return {sum / static_cast<double>(m), 1.0 - r < 2.0 * spacing};
}

FourierSeries harmonic_conjugate(const FourierSeries& u) {
  FourierSeries v(u.order());
  for (int n = 1; n <= u.order(); ++n) {
    v.at(n) = Complex(0.0, -1.0) * u[n];
    v.at(-n) = Complex(0.0, 1.0) * u[-n];
  }
  return v;
}

FourierSeries circle_moments(std::span<const double> samples, int max_order) {
  if (max_order < 0) throw Error(ErrorCode::InvalidArgument, "negative moment order");
  if (samples.size() < static_cast<std::size_t>(4 * std::max(max_order, 1))) {
    throw Error(ErrorCode::AliasingError, "grid of " + std::to_string(samples.size()) +
                                              " points cannot resolve order " +
                                              std::to_string(max_order));
  }
  const auto spectrum = detail::real_forward_dft(samples);
  const double scale = 1.0 / static_cast<double>(samples.size());
  FourierSeries series(max_order);
  series.at(0) = Complex(spectrum[0].real() * scale, 0.0);
  for (int n = 1; n <= max_order; ++n) {
    const Complex a = spectrum[static_cast<std::size_t>(n)] * scale;
    series.at(n) = a;
    series.at(-n) = std::conj(a);
  }
  return series;
}

// ---------------------------------------------------------- OuterFunction

OuterFunction::OuterFunction(ArcUnion arcs, OuterMethod method, double exclusion,
                             std::vector<Complex> log_coefficients)
    : arcs_(std::move(arcs)),
      method_(method),
      exclusion_(exclusion),
      log_coefficients_(std::move(log_coefficients)) {}

OuterFunction OuterFunction::fourier(const ArcUnion& arcs, int order, double exclusion) {
  if (order < 64) throw Error(ErrorCode::InvalidArgument, "Fourier order must be at least 64");
  if (!(exclusion > 0.0)) throw Error(ErrorCode::InvalidArgument, "exclusion radius must be positive");
  // u = -chi_{T \ closure(I)} = chi_{closure(I)} - 1.
  FourierSeries u = arc_indicator_series(arcs, order);
  u.at(0) -= 1.0;
  const FourierSeries v = harmonic_conjugate(u);
  std::vector<Complex> h(static_cast<std::size_t>(order) + 1);
  for (int n = 0; n <= order; ++n) h[static_cast<std::size_t>(n)] = u[n] + Complex(0.0, 1.0) * v[n];
  return OuterFunction(arcs, OuterMethod::fourier, exclusion, std::move(h));
}

OuterFunction OuterFunction::closed_form_upper_half(double exclusion) {
  return OuterFunction(ArcUnion::upper_half(), OuterMethod::closed_form_upper_half, exclusion, {});
}

OuterFunction build_outer_function(const ArcUnion& arcs, int order) {
  return OuterFunction::fourier(arcs, order);
}

bool OuterFunction::excluded(double theta) const {
  return method_ == OuterMethod::fourier && arcs_.endpoint_distance(theta) < exclusion_;
}

bool OuterFunction::reliable(Complex z) const {
  if (method_ != OuterMethod::fourier) return true;
  return arcs_.endpoint_distance(z) >= exclusion_ || 1.0 - std::abs(z) >= 8.0 / order();
}

Complex OuterFunction::operator()(Complex z) const {
  const double radius = std::abs(z);
  if (radius > 1.0 + kBoundaryTol) {
    throw Error(ErrorCode::InvalidArgument, "outer function evaluated outside the closed disc");
  }
  if (method_ == OuterMethod::closed_form_upper_half) return g_closed_form_upper_half(z);
  if (radius >= 1.0 - kBoundaryTol && excluded(std::arg(z))) {
    throw Error(ErrorCode::TruncationError,
                "boundary point within the exclusion radius of an endpoint of I");
  }
  Complex s = 0.0;
  for (auto it = log_coefficients_.rbegin(); it != log_coefficients_.rend(); ++it) s = s * z + *it;
  return std::exp(s);
}

double OuterFunction::boundary_modulus(double theta) const {
  return std::abs((*this)(std::polar(1.0, theta)));
}

std::vector<Complex> OuterFunction::on_circle(double radius, std::size_t nodes) const {
  std::vector<Complex> values(nodes);
  if (method_ == OuterMethod::closed_form_upper_half) {
    const auto angles = uniform_angles(nodes);
    for (std::size_t j = 0; j < nodes; ++j) {
      const Complex z = std::polar(radius, angles[j]);
      if (std::abs(z - 1.0) <= kDenominatorFloor || std::abs(z + 1.0) <= kDenominatorFloor) {
        values[j] = Complex(std::numeric_limits<double>::quiet_NaN(), 0.0);
      } else {
        values[j] = g_closed_form_upper_half(z);
      }
    }
    return values;
  }
  // Fold h_n radius^n by n mod nodes; the backward DFT then sums the series exactly.
  std::vector<Complex> spectrum(nodes);
  double power = 1.0;
  for (std::size_t n = 0; n < log_coefficients_.size(); ++n) {
    spectrum[n % nodes] += log_coefficients_[n] * power;
    power *= radius;
  }
  const auto exponent = detail::backward_dft(spectrum);
  for (std::size_t j = 0; j < nodes; ++j) values[j] = std::exp(exponent[j]);
  return values;
}

Complex g_closed_form_upper_half(Complex zeta) {
  if (std::abs(zeta) > 1.0 + kBoundaryTol) {
    throw Error(ErrorCode::InvalidArgument, "closed form evaluated outside the closed disc");
  }
  if (std::abs(zeta + 1.0) <= kDenominatorFloor || std::abs(zeta - 1.0) <= kDenominatorFloor) {
    throw Error(ErrorCode::BranchPole, "closed form has no limit at zeta = +-1");
  }
  Complex w = Complex(0.0, 1.0) * (1.0 - zeta) / (1.0 + zeta);
  // w lies in the closed upper half-plane; keep rounding from flipping the branch.
  w = Complex(w.real(), std::max(0.0, w.imag()));
  const Complex log_w(std::log(std::abs(w)), std::arg(w));
  return std::exp(Complex(0.0, 1.0 / kPi) * log_w);
}

}  // namespace hullab
