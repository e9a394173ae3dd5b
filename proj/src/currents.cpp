#include "hullab/currents.hpp"

#include <algorithm>
#include <boost/math/quadrature/gauss.hpp>
#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <cmath>
#include <limits>
#include <utility>

#include "hullab/errors.hpp"

namespace hullab {
namespace {

constexpr double kEndpointTol = 1e-13;

struct RadialNode {
  double rho;
  double weight;  // Gauss weight times the log kernel: w * (-log rho) * rho
};

// Gauss-Legendre panels on [0, end] for the weight -log(rho) rho: dyadic
// panels [2^-k-1, 2^-k] toward 0, then panels halving toward end.
template <unsigned Order>
std::vector<RadialNode> log_radial_nodes(int panels_to_zero, int panels_to_end, double end = 1.0) {
  std::vector<double> breaks{0.0};
  for (int k = std::max(panels_to_zero, 1); k >= 1; --k) breaks.push_back(std::ldexp(1.0, -k));
  for (int k = 1; k < panels_to_end; ++k) breaks.push_back(end - (end - 0.5) * std::ldexp(1.0, -k));
  breaks.push_back(end);

  using rule = boost::math::quadrature::gauss<double, Order>;
  std::vector<RadialNode> nodes;
  for (std::size_t p = 0; p + 1 < breaks.size(); ++p) {
    const double mid = 0.5 * (breaks[p] + breaks[p + 1]);
    const double half = 0.5 * (breaks[p + 1] - breaks[p]);
    const auto& x = rule::abscissa();
    const auto& w = rule::weights();
    for (std::size_t i = 0; i < x.size(); ++i) {
      for (int sign : {-1, 1}) {
        if (x[i] == 0.0 && sign < 0) continue;
        const double rho = mid + sign * half * x[i];
        nodes.push_back({rho, half * w[i] * (-std::log(rho)) * rho});
      }
    }
  }
  return nodes;
}

// Outer trapezoid nodes for omega(z0, .), split between T \ I and I; a node
// on E contributes half to each side.
struct OuterNode {
  double theta;
  double weight;
  double complement_share;  // 1 on T \ closure(I), 0 on I, 1/2 on E
};

std::vector<OuterNode> harmonic_measure_nodes(Complex z0, const ArcUnion& arcs, std::size_t count) {
  if (count == 0) throw Error(ErrorCode::InvalidArgument, "empty quadrature");
  std::vector<OuterNode> nodes;
  nodes.reserve(count);
  for (double theta : uniform_angles(count)) {
    const double weight = harmonic_measure_density(z0, CirclePoint(theta)) / static_cast<double>(count);
    double share = 1.0;
    if (arcs.endpoint_distance(theta) <= kEndpointTol) {
      share = 0.5;
    } else if (arcs.contains(theta)) {
      share = 0.0;
    }
    nodes.push_back({theta, weight, share});
  }
  return nodes;
}

struct JensenParts {
  double complement = 0.0;  // omega|_{T \ I} x delta_0
  double arc = 0.0;         // omega|_I x sigma
};

JensenParts jensen_parts(Complex z0, const ArcUnion& arcs, const TestFunction& u, const LimitQuadrature& quad) {
  if (!(std::abs(z0) < 1.0)) throw Error(ErrorCode::InvalidArgument, "z0 must lie in the open disc");
  if (quad.inner == 0) throw Error(ErrorCode::InvalidArgument, "empty quadrature");
  std::vector<Complex> fibre;
  for (double t : uniform_angles(quad.inner)) fibre.push_back(std::polar(1.0, t));
  JensenParts parts;
  for (const auto& node : harmonic_measure_nodes(z0, arcs, quad.outer)) {
    const Complex zeta = std::polar(1.0, node.theta);
    if (node.complement_share > 0.0) parts.complement += node.complement_share * node.weight * u(zeta, 0.0);
    if (node.complement_share < 1.0) {
      double mean = 0.0;
      for (const Complex eta : fibre) mean += u(zeta, eta);
      mean /= static_cast<double>(quad.inner);
      parts.arc += (1.0 - node.complement_share) * node.weight * mean;
    }
  }
  return parts;
}

double field_or_zero(const ScalarField& f, Complex z, Complex w) { return f ? f(z, w) : 0.0; }

struct BoundaryNode {
  double theta;
  double weight;  // includes the Poisson kernel and 1/2pi
};

std::vector<BoundaryNode> graded_boundary_nodes(const DiscMap& f, const GradedQuadrature& quad) {
  if (f.kind() != DiscKind::composite) throw Error(ErrorCode::InvalidArgument, "graded rule needs a composite disc");
  if (quad.panels_per_octave < 0 || !(quad.max_panel > 0.0)) {
    throw Error(ErrorCode::InvalidArgument, "invalid graded quadrature");
  }
  const int per_octave = quad.panels_per_octave > 0 ? quad.panels_per_octave : std::max(1, (f.nu() + 31) / 32);
  const double ratio = std::exp2(1.0 / per_octave);
  const double finest = std::max(0.125 * (1.0 - f.radius()), 1e-14);

  auto ends = f.outer()->arcs().endpoints();
  std::sort(ends.begin(), ends.end());
  std::vector<double> breaks;
  for (std::size_t e = 0; e < ends.size(); ++e) {
    const double a = ends[e];
    const double b = e + 1 < ends.size() ? ends[e + 1] : ends[0] + kTwoPi;
    const double half = 0.5 * (b - a);
    std::vector<double> offsets{0.0};
    for (double x = std::min(finest, half); x < half; x = std::min(x * ratio, x + quad.max_panel)) offsets.push_back(x);
    for (double x : offsets) breaks.push_back(a + x);
    breaks.push_back(a + half);
    for (auto it = offsets.rbegin(); it != offsets.rend(); ++it) {
      if (*it > 0.0) breaks.push_back(b - *it);
    }
  }
  breaks.push_back(ends[0] + kTwoPi);

  using rule = boost::math::quadrature::gauss<double, 30>;
  const Complex z0 = f.z0();
  const double scale = (1.0 - std::norm(z0)) / kTwoPi;
  std::vector<BoundaryNode> nodes;
  for (std::size_t p = 0; p + 1 < breaks.size(); ++p) {
    const double mid = 0.5 * (breaks[p] + breaks[p + 1]);
    const double half = 0.5 * (breaks[p + 1] - breaks[p]);
    if (!(half > 0.0)) continue;
    for (std::size_t i = 0; i < rule::abscissa().size(); ++i) {
      for (int sign : {-1, 1}) {
        if (rule::abscissa()[i] == 0.0 && sign < 0) continue;
        const double theta = mid + sign * half * rule::abscissa()[i];
        const double poisson = scale / std::norm(std::polar(1.0, theta) - z0);
        nodes.push_back({theta, half * rule::weights()[i] * poisson});
      }
    }
  }
  return nodes;
}

// Values (r eta, g(r eta)^nu) at the graded nodes.
std::vector<Point2> graded_values(const DiscMap& f, const std::vector<BoundaryNode>& nodes) {
  std::vector<Point2> values(nodes.size());
  const double r = f.radius();
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    const Complex xi = std::polar(r, nodes[i].theta);
    values[i] = {xi, integer_power((*f.outer())(xi), f.nu())};
  }
  return values;
}

double graded_mean(const std::vector<BoundaryNode>& nodes, const std::vector<Point2>& values, const TestFunction& u) {
  double mean = 0.0;
  for (std::size_t i = 0; i < nodes.size(); ++i) mean += nodes[i].weight * u(values[i].z, values[i].w);
  return mean;
}

}  // namespace

TestForm ddc_form(const TestFunction& u) {
  if (!u.has_laplacians()) {
    throw Error(ErrorCode::InvalidArgument, "test function " + u.label + " has no analytic Laplacians");
  }
  TestForm form;
  form.a_zz = [lap = u.lap_z](Complex z, Complex w) { return ddc_density(lap(z, w)); };
  form.a_ww = [lap = u.lap_w](Complex z, Complex w) { return ddc_density(lap(z, w)); };
  return form;
}

PairingResult pair_green(Complex z0, const std::function<double(Complex)>& b, const GreenQuadrature& quad) {
  if (!(std::abs(z0) < 1.0)) throw Error(ErrorCode::InvalidArgument, "z0 must lie in the open disc");
  if (quad.angular < 1) throw Error(ErrorCode::InvalidArgument, "empty angular rule");
  const auto radial = log_radial_nodes<16>(quad.panels_to_zero, quad.panels_to_one);
  const auto angles = uniform_angles(static_cast<std::size_t>(quad.angular));
  // zeta = phi_{z0}(eta): g_D(z0, zeta) = -log|eta| and
  // dA(zeta) = (1 - |z0|^2)^2 / |1 - conj(z0) eta|^4 dA(eta).
  const double scale = (1.0 - std::norm(z0)) * (1.0 - std::norm(z0));
  double total = 0.0;
  for (const auto& node : radial) {
    double ring = 0.0;
    for (double t : angles) {
      const Complex eta = std::polar(node.rho, t);
      const double jac = scale / std::pow(std::norm(1.0 - std::conj(z0) * eta), 2);
      ring += b(mobius(z0, eta)) * jac;
    }
    total += node.weight * ring / static_cast<double>(angles.size());
  }
  // (1/pi) * 2 pi * sum
  return {2.0 * total, radial.size(), angles.size(), PairingMethod::slice};
}

PairingResult pair_pushforward_boundary(const DiscMap& f, const TestFunction& u, std::size_t nodes) {
  if (nodes == 0) throw Error(ErrorCode::InvalidArgument, "empty quadrature");
  double mean = 0.0;
  for (const auto& q : f.on_circle(nodes)) mean += u(q.z, q.w);
  mean /= static_cast<double>(nodes);
  const Point2 center = f(0.0);
  return {mean - u(center.z, center.w), 0, nodes, PairingMethod::boundary};
}

PairingResult pair_pushforward_graded(const DiscMap& f, const TestFunction& u, const GradedQuadrature& quad) {
  const auto nodes = graded_boundary_nodes(f, quad);
  const auto values = graded_values(f, nodes);
  const Point2 center = f(0.0);
  return {graded_mean(nodes, values, u) - u(center.z, center.w), 0, nodes.size(), PairingMethod::boundary};
}

PairingResult pair_pushforward_area(const DiscMap& f, const TestFunction& u, double h) {
  if (!(h >= 1e-5 && h <= 1e-3)) throw Error(ErrorCode::InvalidArgument, "h must lie in [1e-5, 1e-3]");
  // Rings up to 1 - h keep the stencil inside the closed disc; the strip
  // [1 - h, 1] takes the Laplacian of the last ring, an O(h^3) error.
  const double end = 1.0 - h;
  const int panels_to_end = static_cast<int>(std::ceil(std::log2((end - 0.5) / (0.25 * h))));
  auto radial = log_radial_nodes<8>(24, panels_to_end, end);
  double strip = 0.0;
  using rule = boost::math::quadrature::gauss<double, 8>;
  for (std::size_t i = 0; i < rule::abscissa().size(); ++i) {
    for (int sign : {-1, 1}) {
      const double rho = 1.0 - 0.5 * h + sign * 0.5 * h * rule::abscissa()[i];
      strip += 0.5 * h * rule::weights()[i] * (-std::log(rho)) * rho;
    }
  }
  radial.push_back({end, strip});

  const auto v = [&](Complex zeta) {
    const Point2 q = f(zeta);
    return u(q.z, q.w);
  };
  constexpr double eps = std::numeric_limits<double>::epsilon();
  constexpr unsigned max_depth = 10;
  using adaptive = boost::math::quadrature::gauss_kronrod<double, 15>;

  double rounding = 0.0;
  const auto integrate = [&](double step) {
    double total = 0.0;
    for (const auto& node : radial) {
      double noise = 0.0;
      const auto laplacian = [&](double t) {
        const Complex zeta = std::polar(node.rho, t);
        const double c = v(zeta);
        const double e = v(zeta + step), w = v(zeta - step);
        const double n = v(zeta + Complex(0.0, step)), s = v(zeta - Complex(0.0, step));
        noise = std::max(noise, 4.0 * eps * (std::abs(e) + std::abs(w) + std::abs(n) + std::abs(s) +
                                             4.0 * std::abs(c)) / (step * step));
        return (e + w + n + s - 4.0 * c) / (step * step);
      };
      // A first Kronrod pass sizes the integral and the rounding noise; the
      // adaptive pass then stops at whichever floor is higher.
      double l1 = 0.0;
      adaptive::integrate(laplacian, 0.0, kTwoPi, 0, 0.0, nullptr, &l1);
      const double floor = 10.0 * kTwoPi * noise;
      const double tol = l1 > 0.0 ? std::max(1e-9, floor / l1) : 1.0;
      const double ring = adaptive::integrate(laplacian, 0.0, kTwoPi, max_depth, tol);
      total += node.weight * ddc_density(ring);
      rounding += node.weight * ddc_density(kTwoPi * noise);
    }
    return total;
  };
  const double coarse = integrate(h);
  const double fine = integrate(0.5 * h);
  const double value = std::abs(fine - coarse) > 1e-5 ? (4.0 * fine - coarse) / 3.0 : fine;
  if (rounding > 1e-6 * std::max(1.0, std::abs(value))) {
    throw Error(ErrorCode::StepTooSmall, "rounding in the difference quotients reaches " + std::to_string(rounding));
  }
  return {value, radial.size(), 0, PairingMethod::area};
}

PairingResult pair_limit_current(Complex z0, const ArcUnion& arcs, const TestFunction& u,
                                 const LimitQuadrature& quad) {
  const auto parts = jensen_parts(z0, arcs, u, quad);
  return {(parts.complement + parts.arc) - u(z0, 0.0), 0, quad.outer, PairingMethod::slice};
}

double jensen_pair(Complex z0, const ArcUnion& arcs, const TestFunction& u, const LimitQuadrature& quad) {
  const auto parts = jensen_parts(z0, arcs, u, quad);
  return parts.complement + parts.arc;
}

PairingResult pair_limit_current_form(Complex z0, const ArcUnion& arcs, const TestForm& alpha,
                                      const FormQuadrature& quad) {
  double value = 0.0;
  if (alpha.a_zz) {
    value += pair_green(z0, [&](Complex z) { return alpha.a_zz(z, 0.0); }, quad.outer_slice).value;
  }
  if (alpha.a_ww) {
    for (const auto& node : harmonic_measure_nodes(z0, arcs, quad.outer)) {
      if (node.complement_share == 1.0) continue;
      const Complex zeta = std::polar(1.0, node.theta);
      const double slice =
          pair_green(0.0, [&](Complex eta) { return field_or_zero(alpha.a_ww, zeta, eta); }, quad.inner_slice)
              .value;
      value += (1.0 - node.complement_share) * node.weight * slice;
    }
  }
  return {value, 0, quad.outer, PairingMethod::slice};
}

std::vector<ConvergenceRow> convergence_experiment(const Point2& p, const ArcUnion& arcs,
                                                   std::shared_ptr<const OuterFunction> g,
                                                   const RadiusSchedule& schedule, const std::vector<int>& nus,
                                                   const std::vector<TestFunction>& battery,
                                                   const GradedQuadrature& graded, const LimitQuadrature& limit) {
  if (std::abs(p.w) != 0.0) throw Error(ErrorCode::InvalidArgument, "p must lie in D x {0}");
  std::vector<double> limits;
  for (const auto& u : battery) limits.push_back(pair_limit_current(p.z, arcs, u, limit).value);
  std::vector<ConvergenceRow> rows;
  for (int nu : nus) {
    const auto disc = build_composite_disc(p.z, g, nu, schedule.radius(nu));
    const auto nodes = graded_boundary_nodes(disc, graded);
    const auto values = graded_values(disc, nodes);
    const Point2 center = disc(0.0);
    for (std::size_t i = 0; i < battery.size(); ++i) {
      const double t_nu = graded_mean(nodes, values, battery[i]) - battery[i](center.z, center.w);
      rows.push_back({nu, battery[i].label, t_nu, limits[i], std::abs(t_nu - limits[i])});
    }
  }
  return rows;
}

std::vector<TestFunction> default_battery() {
  const auto zero = [](Complex, Complex) { return 0.0; };
  const auto four = [](Complex, Complex) { return 4.0; };
  return {
      {"1", [](Complex, Complex) { return 1.0; }, zero, zero},
      {"Re z", [](Complex z, Complex) { return z.real(); }, zero, zero},
      {"Im z", [](Complex z, Complex) { return z.imag(); }, zero, zero},
      {"|z|^2", [](Complex z, Complex) { return std::norm(z); }, four, zero},
      {"Re w", [](Complex, Complex w) { return w.real(); }, zero, zero},
      {"|w|^2", [](Complex, Complex w) { return std::norm(w); }, zero, four},
      {"Re(zw)", [](Complex z, Complex w) { return (z * w).real(); }, zero, zero},
      {"|z|^2|w|^2", [](Complex z, Complex w) { return std::norm(z) * std::norm(w); },
       [](Complex, Complex w) { return 4.0 * std::norm(w); }, [](Complex z, Complex) { return 4.0 * std::norm(z); }},
      {"exp(Re z)|w|^2", [](Complex z, Complex w) { return std::exp(z.real()) * std::norm(w); },
       [](Complex z, Complex w) { return std::exp(z.real()) * std::norm(w); },
       [](Complex z, Complex) { return 4.0 * std::exp(z.real()); }},
  };
}

}  // namespace hullab
