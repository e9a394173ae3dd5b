#pragma once

// The compact sets K1, K(I) and K2 in C^2, their polynomial hulls and
// polynomial certificates Q(z, w) = P(z) w separating points from K(I).

#include <cstddef>
#include <optional>
#include <vector>

#include "hullab/disc_toolkit.hpp"

namespace hullab {

struct Point2 {
  Complex z;
  Complex w;
};

double distance(const Point2& a, const Point2& b);

enum class SetVariant { K1, K, K2 };

/// K1 = {(e^{2 pi i t}, w) : |w| = t, t in [0, 1]}
/// K(I) = ((T \ I) x {0}) u (closure(I) x T)
/// K2 = K(I_+) u ({-1} x closed disc)
class ExampleSet {
 public:
  static ExampleSet k1();
  static ExampleSet k(ArcUnion arcs);
  static ExampleSet k2();

  SetVariant variant() const { return variant_; }
  /// I for K(I) and K2; InvalidArgument for K1.
  const ArcUnion& arcs() const;

  /// Points spread over every piece of the set through its parameterization.
  std::vector<Point2> sample(std::size_t count) const;

 private:
  ExampleSet(SetVariant variant, std::optional<ArcUnion> arcs)
      : variant_(variant), arcs_(std::move(arcs)) {}

  SetVariant variant_;
  std::optional<ArcUnion> arcs_;
};

/// Euclidean distance in C^2 from p to the set.
double set_distance(const ExampleSet& set, const Point2& p);

/// Distance from p to the hull (closed disc x {0}) u (closure(I) x closed disc).
/// Throws UnknownHull for K1.
double hull_distance(const ExampleSet& set, const Point2& p);

/// Membership in the hull with boundary tolerance 1e-12. Throws UnknownHull for K1.
bool hull_contains(const ExampleSet& set, const Point2& p);

/// The part of the K1 hull that is known: (closed disc) x {0}. Points outside
/// the closed bidisc are rejected, anything else with w != 0 is UnknownHull.
bool k1_hull_subset_check(const Point2& p);

struct PolyCertificate {
  std::vector<Complex> coefficients;  // P(z) = sum c_k z^k
  Point2 target;
  double margin = 0.0;  // |P(z0)| |w0|

  int degree() const { return static_cast<int>(coefficients.size()) - 1; }
  Complex evaluate(Complex z) const;
};

inline constexpr double kSupNormSlack = 1e-9;
inline constexpr double kMarginExcess = 1e-6;

/// Searches degrees 1, 2, 4, ... up to max_degree for P with sup |P| <= 1 on
/// sampled closure(I) and |P(z0)| |w0| > 1 + 1e-6, re-verified on a 10x finer
/// grid. Requires z0 off closure(I) and w0 != 0.
PolyCertificate find_certificate(const ArcUnion& arcs, const Point2& target, int max_degree = 64);

struct CertificateReport {
  bool passed = false;
  std::size_t samples = 0;
  double worst_value = 0.0;  // max |P(z) w| over the samples of K
  Point2 worst_point{};
  double target_value = 0.0;  // |P(z0) w0|
};

/// Evaluates |Q| = |P(z) w| on `samples` points of the set and at the target.
CertificateReport inspect_certificate(const PolyCertificate& cert, const ExampleSet& set,
                                      std::size_t samples);

/// As inspect_certificate but throws VerificationFailed on failure.
CertificateReport verify_certificate(const PolyCertificate& cert, const ExampleSet& set,
                                     std::size_t samples);

}  // namespace hullab
