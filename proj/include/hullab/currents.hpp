#pragma once

// Pairings of Green currents with test functions and forms: the pushforward
// currents T_nu = (f_nu)_* G, the limit current T and its Jensen measure.
//
// Normalizations. dd^c = (i/pi) d dbar, so in one variable dd^c v has density
// lap(v) / 2pi with respect to area. A form coefficient A refers to
// A (i/2) dxi ^ dxibar = A dA. Area pairings are reported divided by pi, so
// that pair_green(0, 1) = 1/2; consequently
//   <G_{z0}, dd^c v> = pair_green(z0, lap v) / 2
//   <T, dd^c u>      = pi * pair_limit_current_form(z0, I, ddc_form(u)).

#include <cstddef>
#include <functional>
#include <string>
#include <vector>

#include "hullab/disc_toolkit.hpp"
#include "hullab/hull_examples.hpp"
#include "hullab/poletsky_discs.hpp"

namespace hullab {

using ScalarField = std::function<double(Complex z, Complex w)>;

struct TestFunction {
  std::string label;
  ScalarField value;
  ScalarField lap_z;  // optional: Laplacian in z
  ScalarField lap_w;  // optional: Laplacian in w

  double operator()(Complex z, Complex w) const { return value(z, w); }
  bool has_laplacians() const { return static_cast<bool>(lap_z) && static_cast<bool>(lap_w); }
};

/// sum_{j,k} A_jk (i/2) dxi_j ^ dxibar_k on C^2; only the diagonal terms
/// meet the slices used by the limit current.
struct TestForm {
  ScalarField a_zz;
  ScalarField a_ww;
  std::function<Complex(Complex, Complex)> a_zw;
  std::function<Complex(Complex, Complex)> a_wz;
};

/// dd^c u as a form: A_zz = lap_z u / 2pi, A_ww = lap_w u / 2pi. Requires
/// analytic Laplacians.
TestForm ddc_form(const TestFunction& u);

/// Density of dd^c v with respect to area, from its Laplacian.
inline double ddc_density(double laplacian) { return laplacian / kTwoPi; }

enum class PairingMethod { boundary, area, slice };

struct PairingResult {
  double value = 0.0;
  std::size_t radial_nodes = 0;
  std::size_t angular_nodes = 0;  // 0 when the angular rule is adaptive
  PairingMethod method = PairingMethod::boundary;
};

/// Polar rule for logarithmic weights: Gauss-Legendre panels on
/// [2^-k-1, 2^-k] toward 0 and [1 - 2^-k, 1 - 2^-k-1] toward 1.
struct GreenQuadrature {
  int panels_to_zero = 40;
  int panels_to_one = 8;
  int angular = 256;
};

/// (1/pi) * integral over the disc of g_D(z0, .) B dA, computed in the
/// variable eta = phi_{z0}(zeta) where the Green function is -log|eta|.
PairingResult pair_green(Complex z0, const std::function<double(Complex)>& b, const GreenQuadrature& quad = {});

inline constexpr std::size_t kBoundaryNodes = 8192;

/// integral of u(f) dsigma - u(f(0)) by the trapezoid rule.
PairingResult pair_pushforward_boundary(const DiscMap& f, const TestFunction& u,
                                        std::size_t nodes = kBoundaryNodes);

/// Gauss-Legendre panels for composite discs, graded geometrically toward
/// each point of E down to (1 - r)/8. panels_per_octave = 0 selects
/// ceil(nu / 32), which bounds the phase change of g^nu per panel.
struct GradedQuadrature {
  int panels_per_octave = 0;
  double max_panel = 0.05;
};

/// Boundary formula for a composite disc, integrated in eta = phi_{z0}(zeta)
/// against omega(z0, .) on the graded panels. Throws InvalidArgument for
/// other disc kinds.
PairingResult pair_pushforward_graded(const DiscMap& f, const TestFunction& u, const GradedQuadrature& quad = {});

inline constexpr double kDefaultStep = 1e-4;

/// integral of -log|zeta| lap(u o f) / 2pi dA, with a five-point Laplacian of
/// step h and a Richardson correction at h/2 when the two estimates differ by
/// more than 1e-5. Rings stop at 1 - h so the stencil stays in the closed
/// disc; angular integrals are adaptive. Throws InvalidArgument for h outside
/// [1e-5, 1e-3] and StepTooSmall when the rounding bound of the difference
/// quotients exceeds 1e-6 relative.
PairingResult pair_pushforward_area(const DiscMap& f, const TestFunction& u, double h = kDefaultStep);

struct LimitQuadrature {
  std::size_t outer = 8192;
  std::size_t inner = 1024;
};

/// integral over T \ I of u(zeta, 0) domega(z0) + integral over I of the
/// sigma-mean of u(zeta, .) domega(z0) - u(z0, 0).
PairingResult pair_limit_current(Complex z0, const ArcUnion& arcs, const TestFunction& u,
                                 const LimitQuadrature& quad = {});

/// integral of u against sigma~ = omega(z0)|_{T \ I} x delta_0 + omega(z0)|_I x sigma,
/// on the nodes of pair_limit_current.
double jensen_pair(Complex z0, const ArcUnion& arcs, const TestFunction& u, const LimitQuadrature& quad = {});

struct FormQuadrature {
  std::size_t outer = 1024;
  GreenQuadrature outer_slice{};
  GreenQuadrature inner_slice{20, 0, 64};
};

/// pair_green(z0, A_zz(., 0)) + integral over I of pair_green(0, A_ww(zeta, .)) domega(z0).
PairingResult pair_limit_current_form(Complex z0, const ArcUnion& arcs, const TestForm& alpha,
                                      const FormQuadrature& quad = {});

struct ConvergenceRow {
  int nu = 0;
  std::string label;
  double t_nu = 0.0;
  double t = 0.0;
  double gap = 0.0;
};

/// Rows (nu, label, <T_nu, dd^c u>, <T, dd^c u>, gap) for composite discs
/// centred at p = (z0, 0) with radii from the schedule; T_nu uses the graded
/// boundary formula.
std::vector<ConvergenceRow> convergence_experiment(const Point2& p, const ArcUnion& arcs,
                                                   std::shared_ptr<const OuterFunction> g,
                                                   const RadiusSchedule& schedule, const std::vector<int>& nus,
                                                   const std::vector<TestFunction>& battery,
                                                   const GradedQuadrature& graded = {},
                                                   const LimitQuadrature& limit = {});

/// 1, Re z, Im z, |z|^2, Re w, |w|^2, Re(zw), |z|^2|w|^2, exp(Re z)|w|^2.
std::vector<TestFunction> default_battery();

}  // namespace hullab
