#include <doctest.h>

#include <cmath>
#include <memory>

#include "hullab/errors.hpp"
#include "hullab/poletsky_discs.hpp"

using namespace hullab;

namespace {

const Complex kI(0.0, 1.0);

std::shared_ptr<const OuterFunction> closed_g() {
  static const auto g = std::make_shared<const OuterFunction>(OuterFunction::closed_form_upper_half());
  return g;
}

ErrorCode code_of(const auto& call) {
  try {
    call();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an Error");
  return ErrorCode::InvalidArgument;
}

}  // namespace

TEST_CASE("vertical discs") {
  const auto upper = ArcUnion::upper_half();
  const auto k = ExampleSet::k(upper);
  const auto disc = build_vertical_disc(upper, kI);
  const Point2 at_one = disc(1.0);
  CHECK(at_one.z == kI);
  CHECK(at_one.w == Complex(1.0));
  CHECK(set_distance(k, at_one) < 1e-15);
  CHECK(disc(0.0).w == Complex(0.0));

  const auto report = verify_poletsky(disc, k, {kI, 0.0}, 0.01);
  CHECK(report.bad_measure == 0.0);
  CHECK(report.hull_excess == 0.0);
  CHECK(report.center_gap == 0.0);

  // Endpoints of I belong to closure(I).
  CHECK_NOTHROW(build_vertical_disc(upper, -1.0));
  CHECK(code_of([&] { build_vertical_disc(upper, -kI); }) == ErrorCode::NotInArc);
  CHECK(code_of([&] { build_vertical_disc(upper, 0.5 * kI); }) == ErrorCode::NotInArc);
}

TEST_CASE("composite discs") {
  const auto g = closed_g();
  for (int nu : {1, 3, 8}) {
    const auto disc = build_composite_disc(0.0, g, nu, 0.9);
    const Point2 center = disc(0.0);
    CHECK(center.z == Complex(0.0));
    CHECK(std::abs(center.w) == doctest::Approx(std::exp(-0.5 * nu)).epsilon(1e-12));
  }

  // At z0 = 0 the first coordinate is exactly -r zeta.
  const double r = 0.75;
  const auto disc0 = build_composite_disc(0.0, g, 5, r);
  for (double theta : uniform_angles(64)) {
    for (double rho : {0.3, 1.0}) {
      const Complex zeta = std::polar(rho, theta);
      CHECK(disc0(zeta).z == -r * zeta);
    }
  }
  for (const auto& q : disc0.on_circle(64)) CHECK(std::abs(q.z) == doctest::Approx(r).epsilon(1e-15));

  // Image lies in the closed bidisc.
  for (Complex z0 : {Complex(0.0), Complex(0.3, -0.4), Complex(-0.6, 0.1)}) {
    for (int nu : {1, 16}) {
      const auto disc = build_composite_disc(z0, g, nu, 0.999);
      for (std::size_t i = 0; i <= 32; ++i) {
        for (double theta : uniform_angles(32)) {
          const Point2 q = disc(std::polar(static_cast<double>(i) / 32.0, theta));
          CHECK(std::abs(q.z) <= 1.0 + 1e-12);
          CHECK(std::abs(q.w) <= 1.0 + 1e-12);
        }
      }
    }
  }

  // nu = 1 and r -> 1 over I: the second coordinate becomes unimodular.
  const Complex z0(0.2, 0.1);
  const Complex zeta = mobius(z0, std::polar(1.0, 1.2));  // phi_{z0}(zeta) = e^{1.2 i}
  double previous = 1.0;
  for (int j : {4, 8, 16, 24}) {
    const double distance_to_one =
        1.0 - std::abs(build_composite_disc(z0, g, 1, 1.0 - std::ldexp(1.0, -j))(zeta).w);
    CHECK(distance_to_one < previous);
    previous = distance_to_one;
  }
  CHECK(previous < 1e-6);

  CHECK_THROWS_AS(build_composite_disc(1.0, g, 1, 0.5), Error);
  CHECK_THROWS_AS(build_composite_disc(0.0, g, 0, 0.5), Error);
  CHECK_THROWS_AS(build_composite_disc(0.0, g, 1, 1.0), Error);
}

TEST_CASE("Fourier fast path agrees with pointwise evaluation") {
  const auto g = std::make_shared<const OuterFunction>(OuterFunction::fourier(ArcUnion::upper_half(), 512));
  const auto disc = build_composite_disc(0.0, g, 3, 0.95);
  const auto fast = disc.on_circle(256);
  const auto angles = uniform_angles(256);
  for (std::size_t j = 0; j < 256; ++j) {
    const Point2 slow = disc(std::polar(1.0, angles[j]));
    CHECK(std::abs(fast[j].w - slow.w) < 1e-12);
  }
}

TEST_CASE("radius schedule") {
  const auto& g = *closed_g();
  const auto schedule = select_radius_schedule(g, 24, 0.1);
  REQUIRE(schedule.entries.size() == 24);
  CHECK(schedule.entries.front().r >= 0.5);
  for (std::size_t i = 1; i < schedule.entries.size(); ++i) {
    CHECK(schedule.entries[i].r >= schedule.entries[i - 1].r);
  }

  // Re-verify nu = 16 on a twice finer grid with pointwise evaluation and
  // an independent construction of L_nu.
  const auto entry = select_radius_schedule(g, std::vector<int>{16}, 0.1).at(16);
  const double delta = 0.1 / 16.0 / 16.0;
  CHECK(entry.delta == doctest::Approx(delta));
  double sup = 0.0;
  for (double theta : uniform_angles(8192)) {
    const double to_e = std::min({theta, std::abs(theta - kPi), kTwoPi - theta});
    if (to_e < 1.0 / 16.0) continue;
    const Complex zeta = std::polar(1.0, theta);
    sup = std::max(sup, std::abs(g_closed_form_upper_half(entry.r * zeta) - g_closed_form_upper_half(zeta)));
  }
  CHECK(sup < delta);
  // The previous dyadic radius fails, so r is the smallest one tested.
  CHECK(schedule_gap(g, 16, 1.0 - std::ldexp(1.0, -(entry.exponent - 1))) >= delta);

  CHECK(code_of([&] { select_radius_schedule(g, std::vector<int>{1, 2}, 1e-300); }) ==
        ErrorCode::ScheduleExhausted);
  CHECK_THROWS_AS(select_radius_schedule(g, std::vector<int>{}, 0.1), Error);
  CHECK_THROWS_AS(select_radius_schedule(g, std::vector<int>{4, 2}, 0.1), Error);
  CHECK_THROWS_AS(schedule.at(25), Error);
}

TEST_CASE("Poletsky conditions along the schedule") {
  const auto g = closed_g();
  const auto k = ExampleSet::k(ArcUnion::upper_half());
  const std::vector<int> nus{1, 2, 4, 8, 16, 32, 64, 128, 256};
  const auto schedule = select_radius_schedule(*g, nus, 0.1);

  for (Complex z0 : {Complex(0.0), Complex(0.3)}) {
    double previous_gap = 2.0;
    PoletskyReport last;
    for (int nu : nus) {
      const double r = schedule.radius(nu);
      const auto disc = build_composite_disc(z0, g, nu, r);
      last = verify_poletsky(disc, k, {z0, 0.0}, 0.05);
      // |f(0) - (z0, 0)| <= |z0| (1 - r) + |g(r z0)|^nu
      const double bound = std::abs(z0) * (1.0 - r) + std::pow(std::abs(g_closed_form_upper_half(r * z0)), nu);
      CHECK(last.center_gap <= bound * (1.0 + 1e-9) + 1e-16);
      CHECK(last.center_gap < previous_gap);
      previous_gap = last.center_gap;
      CHECK(last.bad_measure >= 0.0);
      CHECK(last.hull_excess >= 0.0);
    }
    CHECK(last.hull_excess < 0.05);
    CHECK(last.bad_measure < 0.05);
    CHECK(last.unresolved_nodes == 0);
  }

  const auto disc64 = build_composite_disc(0.0, g, 64, schedule.radius(64));
  CHECK(verify_poletsky(disc64, k, {0.0, 0.0}, 0.05).center_gap == doctest::Approx(std::exp(-32.0)).epsilon(1e-9));

  // Larger neighbourhoods never increase the bad set.
  const auto disc8 = build_composite_disc(Complex(0.1, -0.2), g, 8, schedule.radius(8));
  double previous = 1.0;
  for (double rho : {0.001, 0.01, 0.05, 0.1, 0.3}) {
    const double bad = verify_poletsky(disc8, k, {0.0, 0.0}, rho, 2048, 8).bad_measure;
    CHECK(bad <= previous);
    previous = bad;
  }

  CHECK_THROWS_AS(verify_poletsky(disc8, k, {0.0, 0.0}, 0.0), Error);
  CHECK(std::isnan(verify_poletsky(disc8, ExampleSet::k1(), {0.0, 0.0}, 0.1, 256, 4).hull_excess));
}
