#include "hullab/hull_examples.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "hullab/errors.hpp"

namespace hullab {
namespace {

constexpr double kHullTol = 1e-12;

// Points start, ..., end on a closed arc (count >= 2), or the single point
// for a degenerate arc.
void append_arc_points(const ArcUnion::Arc& arc, std::size_t count, std::vector<double>& out) {
  if (arc.length() <= 0.0 || count < 2) {
    out.push_back(normalize_angle(arc.start));
    return;
  }
  for (std::size_t i = 0; i < count; ++i) {
    out.push_back(arc.start + arc.length() * static_cast<double>(i) / static_cast<double>(count - 1));
  }
}

// Angles spread over a union of closed arcs proportionally to length.
std::vector<double> sample_arcs(const std::vector<ArcUnion::Arc>& arcs, std::size_t count) {
  double total = 0.0;
  for (const auto& arc : arcs) total += arc.length();
  std::vector<double> out;
  out.reserve(count + 2 * arcs.size());
  for (const auto& arc : arcs) {
    const double share = total > 0.0 ? arc.length() / total : 1.0 / static_cast<double>(arcs.size());
    const auto n = std::max<std::size_t>(2, static_cast<std::size_t>(std::llround(share * count)));
    append_arc_points(arc, n, out);
  }
  return out;
}

std::vector<ArcUnion::Arc> arcs_of(const ArcUnion& arcs) {
  return {arcs.arcs().begin(), arcs.arcs().end()};
}

// min over t in [0, 1] of |z - e^{2 pi i t}|^2 + (rho - t)^2.
double k1_distance(const Point2& p) {
  const double rho = std::abs(p.w);
  const Complex z = p.z;
  const auto f = [&](double t) {
    const double d = rho - t;
    return std::norm(z - std::polar(1.0, kTwoPi * t)) + d * d;
  };
  const auto df = [&](double t) {
    return 2.0 * kTwoPi * (std::conj(z) * std::polar(1.0, kTwoPi * t)).imag() - 2.0 * (rho - t);
  };
  constexpr int kIntervals = 256;
  static const std::vector<Complex> roots = [] {
    std::vector<Complex> r(kIntervals + 1);
    for (int i = 0; i <= kIntervals; ++i) r[static_cast<std::size_t>(i)] = std::polar(1.0, kTwoPi * i / kIntervals);
    return r;
  }();
  const double base = std::norm(z) + 1.0;
  double best = std::min(f(0.0), f(1.0));
  double prev_t = 0.0;
  double prev_d = df(0.0);
  for (int i = 1; i <= kIntervals; ++i) {
    const double t = static_cast<double>(i) / kIntervals;
    const Complex c = std::conj(z) * roots[static_cast<std::size_t>(i)];
    const double d = 2.0 * kTwoPi * c.imag() - 2.0 * (rho - t);
    best = std::min(best, base - 2.0 * c.real() + (rho - t) * (rho - t));
    if (prev_d < 0.0 && d >= 0.0) {
      // Local minimum bracketed; bisect the derivative.
      double lo = prev_t;
      double hi = t;
      while (hi - lo > 1e-12) {
        const double mid = 0.5 * (lo + hi);
        (df(mid) < 0.0 ? lo : hi) = mid;
      }
      best = std::min(best, f(0.5 * (lo + hi)));
    }
    prev_t = t;
    prev_d = d;
  }
  return std::sqrt(std::max(best, 0.0));
}

double k_distance(const ArcUnion& arcs, const Point2& p, bool with_disc_at_minus_one) {
  const double w = std::abs(p.w);
  const double dc = arcs.distance_to_complement(p.z);
  const double di = arcs.distance_to_closure(p.z);
  double best = std::min(std::hypot(dc, w), std::hypot(di, w - 1.0));
  if (with_disc_at_minus_one) {
    best = std::min(best, std::hypot(std::abs(p.z + 1.0), std::max(w - 1.0, 0.0)));
  }
  return best;
}

Complex horner(const std::vector<Complex>& c, Complex z) {
  Complex s = 0.0;
  for (auto it = c.rbegin(); it != c.rend(); ++it) s = s * z + *it;
  return s;
}

double sup_modulus(const std::vector<Complex>& c, const std::vector<Complex>& points) {
  double best = 0.0;
  for (const auto& z : points) best = std::max(best, std::abs(horner(c, z)));
  return best;
}

// Orthonormal polynomial basis on the sample points via Arnoldi on
// multiplication by z, returned with its monomial coefficients.
struct ArnoldiBasis {
  Eigen::MatrixXcd values;     // samples x (degree+1)
  Eigen::MatrixXcd monomials;  // (degree+1) x (degree+1), column k = basis polynomial k
};

ArnoldiBasis arnoldi_basis(const std::vector<Complex>& points, int degree) {
  const auto m = static_cast<Eigen::Index>(points.size());
  const Eigen::Index n = degree + 1;
  ArnoldiBasis basis{Eigen::MatrixXcd::Zero(m, n), Eigen::MatrixXcd::Zero(n, n)};
  Eigen::VectorXcd z(m);
  for (Eigen::Index j = 0; j < m; ++j) z(j) = points[static_cast<std::size_t>(j)];
  const double scale = 1.0 / std::sqrt(static_cast<double>(m));
  basis.values.col(0).setConstant(scale);
  basis.monomials(0, 0) = scale;
  for (Eigen::Index k = 0; k + 1 < n; ++k) {
    Eigen::VectorXcd v = z.cwiseProduct(basis.values.col(k));
    Eigen::VectorXcd mono = Eigen::VectorXcd::Zero(n);
    mono.tail(n - 1) = basis.monomials.col(k).head(n - 1);
    for (int pass = 0; pass < 2; ++pass) {
      for (Eigen::Index j = 0; j <= k; ++j) {
        const Complex h = basis.values.col(j).dot(v);
        v -= h * basis.values.col(j);
        mono -= h * basis.monomials.col(j);
      }
    }
    const double norm = v.norm();
    basis.values.col(k + 1) = v / norm;
    basis.monomials.col(k + 1) = mono / norm;
  }
  return basis;
}

// Lawson reweighting for min max_j |P(z_j)| subject to P(z0) = 1; returns
// monomial coefficients of the best iterate.
std::vector<Complex> lawson_minimax(const std::vector<Complex>& points, Complex z0, int degree) {
  const ArnoldiBasis basis = arnoldi_basis(points, degree);
  const Eigen::Index m = basis.values.rows();
  const Eigen::Index n = basis.values.cols();
  Eigen::RowVectorXcd at_target(n);
  {
    Eigen::VectorXcd z0_powers(n);
    Complex power = 1.0;
    for (Eigen::Index k = 0; k < n; ++k, power *= z0) z0_powers(k) = power;
    at_target = z0_powers.transpose() * basis.monomials;
  }
  Eigen::VectorXd weights = Eigen::VectorXd::Constant(m, 1.0 / static_cast<double>(m));
  Eigen::VectorXcd best_coeffs;
  double best_sup = std::numeric_limits<double>::infinity();
  double checkpoint_sup = best_sup;
  constexpr int kIterations = 400;
  constexpr int kStallWindow = 25;
  Eigen::MatrixXcd weighted(m, n);
  Eigen::MatrixXcd gram(n, n);
  for (int it = 0; it < kIterations; ++it) {
    weighted = weights.cwiseSqrt().asDiagonal() * basis.values;
    gram.setZero();
    gram.selfadjointView<Eigen::Lower>().rankUpdate(weighted.adjoint());
    gram.diagonal().array() += 1e-15 * gram.diagonal().real().sum();
    const Eigen::VectorXcd y = gram.selfadjointView<Eigen::Lower>().ldlt().solve(at_target.adjoint());
    const Eigen::VectorXcd coeffs = y / (at_target * y)(0);
    const Eigen::VectorXd residual = (basis.values * coeffs).cwiseAbs();
    const double sup = residual.maxCoeff();
    if (sup < best_sup) {
      best_sup = sup;
      best_coeffs = coeffs;
    }
    if ((it + 1) % kStallWindow == 0) {
      if (checkpoint_sup - best_sup <= 1e-6 * best_sup) break;
      checkpoint_sup = best_sup;
    }
    weights = weights.cwiseProduct(residual);
    weights /= weights.sum();
  }
  const Eigen::VectorXcd mono = basis.monomials * best_coeffs;
  return {mono.data(), mono.data() + mono.size()};
}

}  // namespace

double distance(const Point2& a, const Point2& b) {
  return std::sqrt(std::norm(a.z - b.z) + std::norm(a.w - b.w));
}

ExampleSet ExampleSet::k1() { return ExampleSet(SetVariant::K1, std::nullopt); }
ExampleSet ExampleSet::k(ArcUnion arcs) { return ExampleSet(SetVariant::K, std::move(arcs)); }
ExampleSet ExampleSet::k2() { return ExampleSet(SetVariant::K2, ArcUnion::upper_half()); }

const ArcUnion& ExampleSet::arcs() const {
  if (!arcs_) throw Error(ErrorCode::InvalidArgument, "K1 carries no arc union");
  return *arcs_;
}

std::vector<Point2> ExampleSet::sample(std::size_t count) const {
  std::vector<Point2> out;
  if (variant_ == SetVariant::K1) {
    const auto side = std::max<std::size_t>(2, static_cast<std::size_t>(std::ceil(std::sqrt(count))));
    for (std::size_t i = 0; i < side; ++i) {
      const double t = static_cast<double>(i) / static_cast<double>(side - 1);
      for (std::size_t k = 0; k < side; ++k) {
        out.push_back({std::polar(1.0, kTwoPi * t), std::polar(t, kTwoPi * k / side)});
      }
    }
    return out;
  }
  const std::size_t pieces = variant_ == SetVariant::K2 ? 3 : 2;
  const std::size_t per_piece = std::max<std::size_t>(4, count / pieces);
  for (double t : sample_arcs(arcs_->complement(), per_piece)) out.push_back({std::polar(1.0, t), 0.0});
  const auto side = std::max<std::size_t>(2, static_cast<std::size_t>(std::ceil(std::sqrt(per_piece))));
  const auto circle = uniform_angles(side);
  for (double t : sample_arcs(arcs_of(*arcs_), side)) {
    for (double s : circle) out.push_back({std::polar(1.0, t), std::polar(1.0, s)});
  }
  if (variant_ == SetVariant::K2) {
    for (std::size_t i = 0; i < side; ++i) {
      const double r = static_cast<double>(i) / static_cast<double>(side - 1);
      for (double s : circle) out.push_back({-1.0, std::polar(r, s)});
    }
  }
  return out;
}

double set_distance(const ExampleSet& set, const Point2& p) {
  switch (set.variant()) {
    case SetVariant::K1:
      return k1_distance(p);
    case SetVariant::K:
      return k_distance(set.arcs(), p, false);
    case SetVariant::K2:
      return k_distance(set.arcs(), p, true);
  }
  return std::numeric_limits<double>::quiet_NaN();
}

double hull_distance(const ExampleSet& set, const Point2& p) {
  if (set.variant() == SetVariant::K1) {
    throw Error(ErrorCode::UnknownHull, "the hull of K1 is only known to contain closed disc x {0}");
  }
  const double w = std::abs(p.w);
  const double to_disc_slice = std::hypot(std::max(std::abs(p.z) - 1.0, 0.0), w);
  const double to_fibres = std::hypot(set.arcs().distance_to_closure(p.z), std::max(w - 1.0, 0.0));
  double best = std::min(to_disc_slice, to_fibres);
  if (set.variant() == SetVariant::K2) {
    best = std::min(best, std::hypot(std::abs(p.z + 1.0), std::max(w - 1.0, 0.0)));
  }
  return best;
}

bool hull_contains(const ExampleSet& set, const Point2& p) { return hull_distance(set, p) <= kHullTol; }

bool k1_hull_subset_check(const Point2& p) {
  if (std::abs(p.z) > 1.0 + kHullTol || std::abs(p.w) > 1.0 + kHullTol) return false;
  if (std::abs(p.w) <= kHullTol) return true;
  throw Error(ErrorCode::UnknownHull, "membership in the hull of K1 is only known on closed disc x {0}");
}

Complex PolyCertificate::evaluate(Complex z) const { return horner(coefficients, z); }

PolyCertificate find_certificate(const ArcUnion& arcs, const Point2& target, int max_degree) {
  if (arcs.distance_to_closure(target.z) <= kHullTol) {
    throw Error(ErrorCode::InvalidArgument, "z0 lies on closure(I); the point is in the hull");
  }
  if (std::abs(target.w) <= kHullTol) {
    throw Error(ErrorCode::InvalidArgument, "w0 = 0; the point is in the hull");
  }
  if (max_degree < 1) throw Error(ErrorCode::InvalidArgument, "degree budget must be at least 1");

  constexpr std::size_t kCoarse = 4096;
  std::vector<Complex> coarse;
  for (double t : sample_arcs(arcs_of(arcs), kCoarse)) coarse.push_back(std::polar(1.0, t));
  std::vector<Complex> fine;
  for (double t : sample_arcs(arcs_of(arcs), 10 * kCoarse)) fine.push_back(std::polar(1.0, t));

  const double w0 = std::abs(target.w);
  PolyCertificate best{{}, target, 0.0};
  for (int degree = 1; degree <= max_degree; degree *= 2) {
    std::vector<Complex> c = lawson_minimax(coarse, target.z, degree);
    const double coarse_sup = sup_modulus(c, coarse);
    for (auto& x : c) x /= coarse_sup;
    const double fine_sup = sup_modulus(c, fine);
    if (fine_sup > 1.0) {
      for (auto& x : c) x /= fine_sup;
    }
    const double margin = std::abs(horner(c, target.z)) * w0;
    if (margin > best.margin) best = {c, target, margin};
    if (margin > 1.0 + kMarginExcess) return best;
  }
  throw Error(ErrorCode::CertificateNotFound,
              "best margin " + std::to_string(best.margin) + " at degree budget " +
                  std::to_string(max_degree) + "; raise the degree");
}

CertificateReport inspect_certificate(const PolyCertificate& cert, const ExampleSet& set,
                                      std::size_t samples) {
  CertificateReport report;
  for (const auto& p : set.sample(samples)) {
    const double value = std::abs(cert.evaluate(p.z) * p.w);
    if (report.samples == 0 || value > report.worst_value) {
      report.worst_value = value;
      report.worst_point = p;
    }
    ++report.samples;
  }
  report.target_value = std::abs(cert.evaluate(cert.target.z) * cert.target.w);
  report.passed = report.worst_value <= 1.0 + kSupNormSlack && report.target_value > 1.0 + kMarginExcess;
  return report;
}

CertificateReport verify_certificate(const PolyCertificate& cert, const ExampleSet& set,
                                     std::size_t samples) {
  auto report = inspect_certificate(cert, set, samples);
  if (!report.passed) {
    throw Error(ErrorCode::VerificationFailed,
                "max |Q| on K = " + std::to_string(report.worst_value) + " at z = (" +
                    std::to_string(report.worst_point.z.real()) + ", " +
                    std::to_string(report.worst_point.z.imag()) + "), |Q(p)| = " +
                    std::to_string(report.target_value));
  }
  return report;
}

}  // namespace hullab
