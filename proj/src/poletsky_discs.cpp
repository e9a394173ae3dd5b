#include "hullab/poletsky_discs.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "hullab/errors.hpp"

namespace hullab {

DiscMap DiscMap::vertical(const ArcUnion& arcs, Complex z0, Complex w0) {
  if (!(std::abs(std::abs(z0) - 1.0) <= 1e-12) || arcs.distance_to_closure(z0) > 1e-12) {
    throw Error(ErrorCode::NotInArc, "vertical discs need z0 on closure(I)");
  }
  if (!(std::abs(w0) < 1.0)) throw Error(ErrorCode::InvalidArgument, "w0 must lie in the open disc");
  DiscMap disc(DiscKind::vertical, z0, nullptr, 1, 1.0);
  disc.w0_ = w0;
  return disc;
}

DiscMap DiscMap::general(std::function<Point2(Complex)> map) {
  if (!map) throw Error(ErrorCode::InvalidArgument, "missing disc map");
  DiscMap disc(DiscKind::general, 0.0, nullptr, 1, 1.0);
  disc.map_ = std::move(map);
  disc.z0_ = disc.map_(0.0).z;
  return disc;
}

DiscMap DiscMap::composite(Complex z0, std::shared_ptr<const OuterFunction> g, int nu, double r) {
  if (!(std::abs(z0) < 1.0)) throw Error(ErrorCode::InvalidArgument, "z0 must lie in the open disc");
  if (!g) throw Error(ErrorCode::InvalidArgument, "missing outer function");
  if (nu < 1) throw Error(ErrorCode::InvalidArgument, "nu must be at least 1");
  if (!(r > 0.0 && r < 1.0)) throw Error(ErrorCode::InvalidArgument, "r must lie in (0, 1)");
  return DiscMap(DiscKind::composite, z0, std::move(g), nu, r);
}

DiscMap build_vertical_disc(const ArcUnion& arcs, Complex z0) { return DiscMap::vertical(arcs, z0); }

DiscMap build_composite_disc(Complex z0, std::shared_ptr<const OuterFunction> g, int nu, double r) {
  return DiscMap::composite(z0, std::move(g), nu, r);
}

Complex integer_power(Complex x, int n) {
  Complex result = 1.0;
  while (n > 0) {
    if (n & 1) result *= x;
    x *= x;
    n >>= 1;
  }
  return result;
}

Point2 DiscMap::operator()(Complex zeta) const {
  if (kind_ == DiscKind::vertical) {
    if (w0_ == Complex(0.0)) return {z0_, zeta};
    return {z0_, (zeta + w0_) / (1.0 + std::conj(w0_) * zeta)};
  }
  if (kind_ == DiscKind::general) return map_(zeta);
  const Complex xi = r_ * mobius(z0_, zeta);
  return {xi, integer_power((*g_)(xi), nu_)};
}

std::vector<Point2> DiscMap::on_circle(std::size_t nodes) const {
  const auto angles = uniform_angles(nodes);
  std::vector<Point2> out(nodes);
  // At z0 = 0 the first coordinate is -r zeta, so the second one is a
  // rotated copy of g on the circle of radius r.
  if (kind_ == DiscKind::composite && z0_ == Complex(0.0) && nodes % 2 == 0 &&
      g_->method() == OuterMethod::fourier) {
    const auto values = g_->on_circle(r_, nodes);
    for (std::size_t j = 0; j < nodes; ++j) {
      const Complex xi = r_ * mobius(z0_, std::polar(1.0, angles[j]));
      out[j] = {xi, integer_power(values[(j + nodes / 2) % nodes], nu_)};
    }
    return out;
  }
  for (std::size_t j = 0; j < nodes; ++j) out[j] = (*this)(std::polar(1.0, angles[j]));
  return out;
}

bool DiscMap::reliable(Complex zeta) const {
  if (kind_ != DiscKind::composite) return true;
  return g_->reliable(r_ * mobius(z0_, zeta));
}

// ----------------------------------------------------------------- schedule

const ScheduleEntry& RadiusSchedule::at(int nu) const {
  for (const auto& entry : entries) {
    if (entry.nu == nu) return entry;
  }
  throw Error(ErrorCode::InvalidArgument, "schedule does not cover nu = " + std::to_string(nu));
}

namespace {

double exhaustion_radius(const OuterFunction& g, int nu) {
  const double radius = 1.0 / static_cast<double>(nu);
  if (g.method() == OuterMethod::fourier) return std::max(radius, g.exclusion_radius());
  return radius;
}

double masked_gap(const std::vector<Complex>& inner, const std::vector<Complex>& boundary,
                  const std::vector<char>& mask) {
  double gap = 0.0;
  for (std::size_t j = 0; j < mask.size(); ++j) {
    if (mask[j]) gap = std::max(gap, std::abs(inner[j] - boundary[j]));
  }
  return gap;
}

std::vector<char> exhaustion_mask(const OuterFunction& g, int nu, std::size_t grid) {
  const double radius = exhaustion_radius(g, nu);
  std::vector<char> mask(grid);
  const auto angles = uniform_angles(grid);
  for (std::size_t j = 0; j < grid; ++j) mask[j] = g.arcs().endpoint_distance(angles[j]) >= radius;
  return mask;
}

}  // namespace

double schedule_gap(const OuterFunction& g, int nu, double r, std::size_t grid) {
  if (nu < 1) throw Error(ErrorCode::InvalidArgument, "nu must be at least 1");
  return masked_gap(g.on_circle(r, grid), g.on_circle(1.0, grid), exhaustion_mask(g, nu, grid));
}

RadiusSchedule select_radius_schedule(const OuterFunction& g, const std::vector<int>& nus, double eps,
                                      std::size_t grid) {
  if (nus.empty()) throw Error(ErrorCode::InvalidArgument, "empty nu list");
  if (!(eps > 0.0)) throw Error(ErrorCode::InvalidArgument, "eps must be positive");
  if (!std::is_sorted(nus.begin(), nus.end()) || nus.front() < 1) {
    throw Error(ErrorCode::InvalidArgument, "nu list must be sorted and positive");
  }
  RadiusSchedule schedule;
  schedule.grid = grid;
  const auto boundary = g.on_circle(1.0, grid);
  int floor_exponent = 1;
  for (int nu : nus) {
    ScheduleEntry entry;
    entry.nu = nu;
    entry.exhaustion = exhaustion_radius(g, nu);
    entry.eps = eps / nu;
    entry.delta = entry.eps / nu;
    const auto mask = exhaustion_mask(g, nu, grid);
    int found = 0;
    for (int j = 1; j <= kMaxScheduleExponent; ++j) {
      const double gap = masked_gap(g.on_circle(1.0 - std::ldexp(1.0, -j), grid), boundary, mask);
      if (gap < entry.delta) {
        found = j;
        break;
      }
    }
    if (found == 0) {
      throw Error(ErrorCode::ScheduleExhausted,
                  "no r = 1 - 2^-j with j <= 40 meets the gap bound at nu = " + std::to_string(nu));
    }
    floor_exponent = std::max(floor_exponent, found);
    entry.exponent = floor_exponent;
    entry.r = 1.0 - std::ldexp(1.0, -floor_exponent);
    entry.achieved = masked_gap(g.on_circle(entry.r, grid), boundary, mask);
    schedule.entries.push_back(entry);
  }
  return schedule;
}

RadiusSchedule select_radius_schedule(const OuterFunction& g, int nu_max, double eps, std::size_t grid) {
  if (nu_max < 1) throw Error(ErrorCode::InvalidArgument, "nu_max must be at least 1");
  std::vector<int> nus(static_cast<std::size_t>(nu_max));
  for (int nu = 1; nu <= nu_max; ++nu) nus[static_cast<std::size_t>(nu - 1)] = nu;
  return select_radius_schedule(g, nus, eps, grid);
}

// ------------------------------------------------------------ verification

PoletskyReport verify_poletsky(const DiscMap& disc, const ExampleSet& set, const Point2& p, double rho_u,
                               std::size_t boundary_nodes, std::size_t interior_side) {
  if (!(rho_u > 0.0)) throw Error(ErrorCode::InvalidArgument, "rho_U must be positive");
  if (boundary_nodes == 0 || interior_side == 0) throw Error(ErrorCode::InvalidArgument, "empty grid");
  const bool hull_known = set.variant() != SetVariant::K1;
  PoletskyReport report;
  report.nu = disc.nu();
  report.r = disc.radius();
  report.boundary_nodes = boundary_nodes;
  report.center_gap = distance(disc(0.0), p);

  const auto excess = [&](const Point2& q) {
    if (hull_known) report.hull_excess = std::max(report.hull_excess, hull_distance(set, q));
  };

  std::size_t bad = 0;
  for (double theta : uniform_angles(boundary_nodes)) {
    const Complex zeta = std::polar(1.0, theta);
    if (!disc.reliable(zeta)) {
      ++report.unresolved_nodes;
      ++bad;
      continue;
    }
    const Point2 q = disc(zeta);
    excess(q);
    if (set_distance(set, q) > rho_u) ++bad;
  }
  report.bad_measure = static_cast<double>(bad) / static_cast<double>(boundary_nodes);

  const auto angles = uniform_angles(interior_side);
  for (std::size_t i = 0; i < interior_side; ++i) {
    const double radius = static_cast<double>(i) / static_cast<double>(interior_side);
    for (double theta : angles) {
      const Complex zeta = std::polar(radius, theta);
      if (disc.reliable(zeta)) excess(disc(zeta));
    }
  }
  if (!hull_known) report.hull_excess = std::numeric_limits<double>::quiet_NaN();
  return report;
}

}  // namespace hullab
