#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>

#include "hullab/errors.hpp"
#include "hullab/winding_obstruction.hpp"
#include "oracles.hpp"

using namespace hullab;

namespace {

std::vector<Complex> circle(Complex centre, double radius, std::size_t n, int turns = 1) {
  std::vector<Complex> v(n);
  for (std::size_t j = 0; j < n; ++j) {
    v[j] = centre + std::polar(radius, oracle::kTwoPi * turns * static_cast<double>(j) / static_cast<double>(n));
  }
  return v;
}

/// Star-shaped random curve around the origin wound `turns` times.
std::vector<Complex> random_curve(std::mt19937_64& rng, int turns) {
  std::uniform_real_distribution<double> amp(-0.2, 0.2);
  const double a1 = amp(rng), a2 = amp(rng), a3 = amp(rng);
  std::vector<Complex> v(400 * static_cast<std::size_t>(std::abs(turns) + 1));
  for (std::size_t j = 0; j < v.size(); ++j) {
    const double s = oracle::kTwoPi * static_cast<double>(j) / static_cast<double>(v.size());
    const double r = 1.0 + a1 * std::cos(s) + a2 * std::sin(2.0 * s) + a3 * std::cos(3.0 * s);
    v[j] = std::polar(r, turns * s);
  }
  return v;
}

}  // namespace

TEST_CASE("winding numbers of sampled curves") {
  CHECK(winding_number(circle(0.0, 1.0, 256), 0.0) == 1);
  CHECK(winding_number(circle(2.0, 0.1, 256), 0.0) == 0);
  CHECK(winding_number(circle(0.0, 1.0, 512, 2), 0.0) == 2);
  auto closed = circle(0.0, 1.0, 256);
  closed.push_back(closed.front());
  CHECK(winding_number(closed, 0.3) == 1);
  CHECK_THROWS_WITH_AS(winding_number(circle(0.0, 1.0, 16), 0.0), doctest::Contains("TooCloseToPoint"), Error);
  CHECK_THROWS_AS(winding_number(circle(0.0, 1.0, 256), 0.99), Error);

  std::mt19937_64 rng(2024);
  std::uniform_int_distribution<int> turns(-3, 3);
  std::uniform_int_distribution<std::size_t> shift(0, 399);
  for (int c = 0; c < 20; ++c) {
    const int m = turns(rng);
    const auto v = random_curve(rng, m);
    const int w = winding_number(v, 0.0);
    CHECK(w == m);
    std::vector<Complex> refined;
    for (std::size_t j = 0; j < v.size(); ++j) {
      refined.push_back(v[j]);
      refined.push_back(0.5 * (v[j] + v[(j + 1) % v.size()]));
    }
    CHECK(winding_number(refined, 0.0) == w);
    auto rotated = v;
    std::rotate(rotated.begin(), rotated.begin() + static_cast<long>(shift(rng) % v.size()), rotated.end());
    CHECK(winding_number(rotated, 0.0) == w);
    auto reversed = v;
    std::reverse(reversed.begin(), reversed.end());
    CHECK(winding_number(reversed, 0.0) == -w);
  }
}

TEST_CASE("zero counts by the argument principle") {
  CHECK(zero_count_via_boundary([](Complex z) { return z * z; }, 0.0) == 2);
  CHECK(zero_count_via_boundary([](Complex z) { return z - 3.0; }, 0.0) == 0);

  const double r = 0.99;
  const Complex a(0.3, 0.0);
  const Complex target(0.2, 0.0);
  const auto first_coordinate = [&](Complex z) { return r * oracle::moebius(a, z); };
  // the Moebius map is an involution: the only root of r phi(zeta) = target
  const Complex root = oracle::moebius(a, target / r);
  CHECK(std::abs(first_coordinate(root) - target) < 1e-14);
  CHECK(std::abs(root) < 1.0);
  CHECK(zero_count_via_boundary(first_coordinate, target) == 1);

  // multiplicativity over polynomial pairs
  const std::vector<std::vector<Complex>> roots = {
      {0.1, Complex(0.3, -0.4)}, {2.0, Complex(-0.5, 0.5), 0.0}, {Complex(0.0, 1.5)}, {-0.7, 0.6, 1.3, Complex(0.2, 0.2)}};
  auto poly = [](const std::vector<Complex>& rs) {
    return [rs](Complex z) {
      Complex v = 1.0;
      for (Complex q : rs) v *= z - q;
      return v;
    };
  };
  for (const auto& p : roots) {
    const auto expected = std::count_if(p.begin(), p.end(), [](Complex q) { return std::abs(q) < 1.0; });
    CHECK(zero_count_via_boundary(poly(p), 0.0) == expected);
    for (const auto& q : roots) {
      const auto fp = poly(p);
      const auto fq = poly(q);
      CHECK(zero_count_via_boundary([&](Complex z) { return fp(z) * fq(z); }, 0.0) ==
            zero_count_via_boundary(fp, 0.0) + zero_count_via_boundary(fq, 0.0));
    }
  }
  CHECK_THROWS_WITH_AS(zero_count_via_boundary([](Complex z) { return z - 1.0; }, 0.0),
                       doctest::Contains("ZeroOnBoundary"), Error);
}

TEST_CASE("tubes around K1") {
  const TubeSpec tube(ExampleSet::k1(), 0.2);
  CHECK(tube_membership(tube, k1_point(0.37, 1.1)));
  CHECK(tube_membership(TubeSpec(ExampleSet::k1(), 1e-9), k1_point(0.8, -2.0)));
  CHECK_FALSE(tube_membership(TubeSpec(ExampleSet::k1(), 0.5), {0.0, 0.0}));
  const double theta = 2.0;
  const Point2 near{std::polar(1.0, theta) + 0.1 * std::polar(1.0, 0.4),
                    std::polar(theta / oracle::kTwoPi, 0.7)};
  CHECK(tube_membership(tube, near));
  CHECK_THROWS_AS(TubeSpec(ExampleSet::k1(), 0.0), Error);

  // the z-circle at |w| = 1/2 winds once but leaves the tube
  DiscreteCurve naive;
  for (const Complex z : circle(0.0, 1.0, 1024)) naive.vertices.push_back({z, 0.5});
  naive.vertices.push_back(naive.vertices.front());
  CHECK(winding_number(naive.z_projection(), 0.0) == 1);
  CHECK_FALSE(curve_in_tube(tube, naive));
}

TEST_CASE("obstruction demo") {
  ObstructionConfig config;
  config.trials = 500;
  config.delta = 0.2;
  config.z0 = 0.0;
  config.seed = 42;
  const auto report = obstruction_demo(config);
  CHECK(report.trials == 500);
  REQUIRE(report.histogram.size() == 1);
  CHECK(report.histogram.at(0) == 500);

  const auto again = obstruction_demo(config);
  CHECK(again.histogram == report.histogram);
  CHECK(again.rejections == report.rejections);

  const auto curve = random_k1_tube_curve(config, 3, 0);
  CHECK(curve.max_gap() < kMaxCurveGap);
  CHECK(distance(curve.vertices.front(), curve.vertices.back()) == 0.0);
  CHECK(curve_in_tube(TubeSpec(ExampleSet::k1(), 0.2), curve));

  for (double delta : {0.0, 0.3}) {
    for (Complex z0 : {Complex(0.5, 0.4), Complex(-0.7, 0.0)}) {
      ObstructionConfig c;
      c.trials = 60;
      c.delta = delta;
      c.z0 = z0;
      c.seed = 9;
      const auto r = obstruction_demo(c);
      CHECK(r.histogram.size() == 1);
      CHECK(r.histogram.begin()->first == 0);
    }
  }
  config.delta = 0.31;
  CHECK_THROWS_AS(obstruction_demo(config), Error);
}
