#include <doctest.h>

#include <cmath>
#include <random>

#include "hullab/errors.hpp"
#include "hullab/hull_examples.hpp"
#include "oracles.hpp"

using namespace hullab;

namespace {

// Parameter sweep over the pieces of K(I) for I = I_+.
double sweep_distance_k_upper(const Point2& p) {
  const double w = std::abs(p.w);
  const auto to_bottom = [&](double t) { return std::norm(p.z - std::polar(1.0, t)) + w * w; };
  const auto to_top = [&](double t) { return std::norm(p.z - std::polar(1.0, t)) + (w - 1.0) * (w - 1.0); };
  return std::sqrt(std::min(oracle::sweep_min(to_bottom, kPi, kTwoPi), oracle::sweep_min(to_top, 0.0, kPi)));
}

double sweep_distance_k1(const Point2& p) {
  const double w = std::abs(p.w);
  return std::sqrt(oracle::sweep_min(
      [&](double t) { return std::norm(p.z - std::polar(1.0, kTwoPi * t)) + (w - t) * (w - t); }, 0.0, 1.0));
}

Point2 random_point(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(-1.3, 1.3);
  return {Complex(u(rng), u(rng)), Complex(u(rng), u(rng))};
}

}  // namespace

TEST_CASE("set_distance against parameter sweeps") {
  const auto k = ExampleSet::k(ArcUnion::upper_half());
  CHECK(set_distance(k, {Complex(0.0, 1.0), 1.0}) < 1e-15);
  CHECK(set_distance(k, {0.0, 0.0}) == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(std::abs(sweep_distance_k_upper({0.0, 0.0}) - 1.0) < 1e-9);
  CHECK(set_distance(ExampleSet::k1(), {1.0, 0.0}) < 1e-15);

  std::mt19937_64 rng(5);
  for (int i = 0; i < 60; ++i) {
    const Point2 p = random_point(rng);
    CHECK(set_distance(k, p) == doctest::Approx(sweep_distance_k_upper(p)).epsilon(1e-7));
    CHECK(set_distance(ExampleSet::k1(), p) == doctest::Approx(sweep_distance_k1(p)).epsilon(1e-7));
  }

  // Zero exactly on sampled points of each set.
  for (const auto& set : {k, ExampleSet::k1(), ExampleSet::k2()}) {
    double worst = 0.0;
    for (const auto& p : set.sample(2000)) worst = std::max(worst, set_distance(set, p));
    CHECK(worst < 1e-9);
  }
  // K2 adds the disc over -1.
  CHECK(set_distance(ExampleSet::k2(), {-1.0, 0.3}) < 1e-15);
  CHECK(set_distance(k, {-1.0, 0.3}) == doctest::Approx(0.3));
}

TEST_CASE("hull membership") {
  const auto k = ExampleSet::k(ArcUnion::upper_half());
  CHECK(hull_contains(k, {0.0, 0.0}));
  CHECK(hull_contains(k, {Complex(0.0, 1.0), 0.5}));
  CHECK_FALSE(hull_contains(k, {Complex(0.0, -1.0), 0.9}));
  CHECK_FALSE(hull_contains(k, {0.5, 0.01}));
  CHECK(hull_contains(ExampleSet::k2(), {-1.0, 0.7}));
  CHECK_THROWS_AS(hull_contains(ExampleSet::k1(), {0.0, 0.0}), Error);

  // K is contained in its hull.
  for (const auto& p : k.sample(5000)) CHECK(hull_contains(k, p));

  // Enlarging I enlarges the hull.
  std::mt19937_64 rng(9);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (int trial = 0; trial < 20; ++trial) {
    const double a = kTwoPi * unit(rng);
    const double len = 0.2 + 2.0 * unit(rng);
    const auto small = ExampleSet::k(ArcUnion({{a + 0.1, a + len}}));
    const auto big = ExampleSet::k(ArcUnion({{a, a + len + 0.5}}));
    for (int i = 0; i < 200; ++i) {
      const double t = a + (len + 0.5) * unit(rng);
      const Point2 p{std::polar(1.0, t), std::polar(unit(rng), kTwoPi * unit(rng))};
      if (hull_contains(small, p)) CHECK(hull_contains(big, p));
    }
  }
}

TEST_CASE("known part of the K1 hull") {
  CHECK(k1_hull_subset_check({0.5, 0.0}));
  CHECK(k1_hull_subset_check({1.0, 0.0}));
  CHECK_FALSE(k1_hull_subset_check({0.5, 1.5}));
  try {
    k1_hull_subset_check({0.5, 0.1});
    FAIL("expected UnknownHull");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::UnknownHull);
  }
}

TEST_CASE("closed-form certificate and verification") {
  const auto k = ExampleSet::k(ArcUnion::upper_half());
  const Complex i(0.0, 1.0);
  PolyCertificate benchmark{{-i / std::sqrt(2.0), 1.0 / std::sqrt(2.0)}, {-i, 0.9}, 0.0};
  benchmark.margin = std::abs(benchmark.evaluate(-i)) * 0.9;
  CHECK(benchmark.margin == doctest::Approx(0.9 * std::sqrt(2.0)).epsilon(1e-14));
  const auto report = verify_certificate(benchmark, k, 10000);
  CHECK(report.passed);
  CHECK(report.worst_value <= 1.0 + 1e-9);

  // |w0| close to 1 still certifies with the same P.
  PolyCertificate near_one = benchmark;
  near_one.target = {-i, 0.9999};
  CHECK(inspect_certificate(near_one, k, 4000).target_value == doctest::Approx(0.9999 * std::sqrt(2.0)));

  const PolyCertificate too_big{{2.0}, {-i, 0.9}, 1.8};
  CHECK_FALSE(inspect_certificate(too_big, k, 4000).passed);
  CHECK_THROWS_AS(verify_certificate(too_big, k, 4000), Error);

  // A hull point is annihilated by w = 0.
  CHECK(std::abs(benchmark.evaluate(0.0) * Complex(0.0)) == 0.0);
}

TEST_CASE("certificate search") {
  const auto upper = ArcUnion::upper_half();
  const auto k = ExampleSet::k(upper);
  const Complex i(0.0, 1.0);
  const auto cert = find_certificate(upper, {-i, 0.9}, 64);
  CHECK(cert.degree() == 1);
  CHECK(cert.margin >= 1.27);
  CHECK(verify_certificate(cert, k, 10000).passed);

  // Small |w0| needs higher degree.
  const auto deep = find_certificate(upper, {Complex(0.2, -0.5), 0.05}, 64);
  CHECK(deep.margin > 1.0);
  CHECK(verify_certificate(deep, k, 10000).passed);

  CHECK_THROWS_AS(find_certificate(upper, {i, 0.5}, 8), Error);
  CHECK_THROWS_AS(find_certificate(upper, {-i, 0.0}, 8), Error);
  try {
    find_certificate(upper, {Complex(0.0, 0.9), 0.01}, 2);
    FAIL("expected CertificateNotFound");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::CertificateNotFound);
  }

  // Soundness: an accepted certificate never targets a hull point.
  std::mt19937_64 rng(21);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  int accepted = 0;
  for (int trial = 0; trial < 50; ++trial) {
    const Point2 p{std::polar(0.3 + 0.6 * unit(rng), kPi + 0.3 + (kPi - 0.6) * unit(rng)),
                   std::polar(0.3 + 0.7 * unit(rng), 1.0)};
    if (hull_contains(k, p)) continue;
    const auto c = find_certificate(upper, p, 64);
    if (inspect_certificate(c, k, 4000).passed) {
      ++accepted;
      CHECK_FALSE(hull_contains(k, p));
    }
  }
  CHECK(accepted > 40);
}
