#pragma once

// Analytic discs attached to K(I): the vertical discs over closure(I) and the
// composite discs f(zeta) = (r phi_{z0}(zeta), g(r phi_{z0}(zeta))^nu), together
// with the radius schedule r_nu and the Poletsky condition checks.

#include <cstddef>
#include <functional>
#include <memory>
#include <vector>

#include "hullab/disc_toolkit.hpp"
#include "hullab/hull_examples.hpp"

namespace hullab {

enum class DiscKind { vertical, composite, general };

class DiscMap {
 public:
  /// zeta -> (z0, (zeta + w0) / (1 + conj(w0) zeta)), centred at (z0, w0).
  /// Throws NotInArc unless z0 lies on closure(I).
  static DiscMap vertical(const ArcUnion& arcs, Complex z0, Complex w0 = 0.0);
  /// zeta -> (r phi_{z0}(zeta), g(r phi_{z0}(zeta))^nu).
  static DiscMap composite(Complex z0, std::shared_ptr<const OuterFunction> g, int nu, double r);
  /// Any map holomorphic on a neighbourhood of the closed disc.
  static DiscMap general(std::function<Point2(Complex)> map);

  Point2 operator()(Complex zeta) const;
  /// Values at e^{i theta_j} on uniform_angles(nodes).
  std::vector<Point2> on_circle(std::size_t nodes) const;

  /// False when the second coordinate at zeta falls in the Gibbs zone of a
  /// Fourier-built g (see OuterFunction::reliable).
  bool reliable(Complex zeta) const;

  DiscKind kind() const { return kind_; }
  Complex z0() const { return z0_; }
  Complex w0() const { return w0_; }
  int nu() const { return nu_; }
  double radius() const { return r_; }
  const OuterFunction* outer() const { return g_.get(); }

 private:
  DiscMap(DiscKind kind, Complex z0, std::shared_ptr<const OuterFunction> g, int nu, double r)
      : kind_(kind), z0_(z0), g_(std::move(g)), nu_(nu), r_(r) {}

  DiscKind kind_;
  Complex z0_;
  Complex w0_ = 0.0;
  std::function<Point2(Complex)> map_;
  std::shared_ptr<const OuterFunction> g_;
  int nu_;
  double r_;
};

/// zeta -> (z0, zeta).
DiscMap build_vertical_disc(const ArcUnion& arcs, Complex z0);
DiscMap build_composite_disc(Complex z0, std::shared_ptr<const OuterFunction> g, int nu, double r);

/// x^n by repeated squaring.
Complex integer_power(Complex x, int n);

struct ScheduleEntry {
  int nu = 0;
  int exponent = 0;        // r = 1 - 2^-exponent
  double r = 0.0;
  double exhaustion = 0.0; // L_nu = {theta : dist(theta, E) >= exhaustion}
  double eps = 0.0;        // eps / nu
  double delta = 0.0;      // eps_nu / nu
  double achieved = 0.0;   // sup over L_nu of |g(r e^{i theta}) - g(e^{i theta})|
};

struct RadiusSchedule {
  std::vector<ScheduleEntry> entries;  // sorted by nu, r non-decreasing
  std::size_t grid = 0;

  /// Throws InvalidArgument when nu is not covered.
  const ScheduleEntry& at(int nu) const;
  double radius(int nu) const { return at(nu).r; }
};

inline constexpr int kMaxScheduleExponent = 40;
inline constexpr std::size_t kScheduleGrid = 4096;

/// sup over L_nu of |g(r zeta) - g(zeta)| on uniform_angles(grid). For a
/// Fourier-built g, L_nu also drops the exclusion zone around E.
double schedule_gap(const OuterFunction& g, int nu, double r, std::size_t grid = kScheduleGrid);

/// For each nu the smallest r = 1 - 2^-j, j = 1..40, with
/// schedule_gap < (eps / nu) / nu, then a running max over nu. Throws
/// ScheduleExhausted naming the first nu for which j = 40 still fails.
RadiusSchedule select_radius_schedule(const OuterFunction& g, const std::vector<int>& nus, double eps,
                                      std::size_t grid = kScheduleGrid);
/// Same for nu = 1..nu_max.
RadiusSchedule select_radius_schedule(const OuterFunction& g, int nu_max, double eps,
                                      std::size_t grid = kScheduleGrid);

struct PoletskyReport {
  int nu = 0;
  double r = 0.0;
  double center_gap = 0.0;   // |f(0) - p|
  double hull_excess = 0.0;  // max over boundary and interior grids of dist(f, hull)
  double bad_measure = 0.0;  // fraction of boundary nodes with dist(f, K) > rho_U
  std::size_t boundary_nodes = 0;
  std::size_t unresolved_nodes = 0;  // Gibbs-zone nodes, counted as bad
};

inline constexpr std::size_t kPoletskyBoundaryGrid = 8192;
inline constexpr std::size_t kPoletskyInteriorGrid = 64;

/// Evaluates the disc on 8192 boundary nodes and a 64 x 64 polar interior
/// grid. hull_excess is NaN for K1, whose hull is not known. Throws
/// InvalidArgument for rho_U <= 0.
PoletskyReport verify_poletsky(const DiscMap& disc, const ExampleSet& set, const Point2& p, double rho_u,
                               std::size_t boundary_nodes = kPoletskyBoundaryGrid,
                               std::size_t interior_side = kPoletskyInteriorGrid);

}  // namespace hullab
