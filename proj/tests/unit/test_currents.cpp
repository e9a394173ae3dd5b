#include <doctest.h>

#include <cmath>
#include <memory>
#include <random>

#include "hullab/currents.hpp"
#include "hullab/errors.hpp"
#include "oracles.hpp"

using namespace hullab;

namespace {

const Complex kI(0.0, 1.0);

std::shared_ptr<const OuterFunction> closed_g() {
  static const auto g = std::make_shared<const OuterFunction>(OuterFunction::closed_form_upper_half());
  return g;
}

TestFunction find(const std::vector<TestFunction>& battery, const std::string& label) {
  for (const auto& u : battery) {
    if (u.label == label) return u;
  }
  FAIL("missing battery member " << label);
  return {};
}

// zeta -> (phi_{z0}(zeta), 0), whose pushforward of G_0 is G_{z0} on D x {0}.
DiscMap embedding(Complex z0) {
  return DiscMap::general([z0](Complex zeta) { return Point2{oracle::moebius(z0, zeta), 0.0}; });
}

TestFunction combine(const TestFunction& a, const TestFunction& b, double s, double t) {
  return {"mix", [=](Complex z, Complex w) { return s * a(z, w) + t * b(z, w); }, nullptr, nullptr};
}

}  // namespace

TEST_CASE("pair_green") {
  CHECK(pair_green(0.0, [](Complex) { return 1.0; }).value == doctest::Approx(0.5).epsilon(1e-13));
  // 2 int_0^1 -r^3 log r dr = 1/8
  CHECK(pair_green(0.0, [](Complex z) { return std::norm(z); }).value == doctest::Approx(0.125).epsilon(1e-13));
  CHECK(pair_green(0.0, [](Complex z) { return std::abs(z) > 1.0 ? 1.0 : 0.0; }).value == 0.0);

  const auto b = [](Complex z) { return std::exp(z.real()) * (1.0 + z.imag() * z.imag()); };
  const double plain = pair_green(0.0, b).value;
  for (double angle : {0.4, 1.7, 3.0}) {
    const Complex rot = std::polar(1.0, angle);
    CHECK(pair_green(0.0, [&](Complex z) { return b(rot * z); }).value == doctest::Approx(plain).epsilon(1e-10));
  }

  // Green-Riesz with an analytic Laplacian: (1/2) pair_green(z0, lap v) = mean_omega v - v(z0).
  const auto v = [](Complex z) { return std::exp(z.real()) * std::cos(z.imag()) + std::pow(std::norm(z), 2); };
  const auto lap_v = [](Complex z) { return 16.0 * std::norm(z); };
  for (Complex z0 : {Complex(0.0), Complex(0.3), Complex(0.5, 0.2), Complex(-0.2, -0.7)}) {
    const double expected = oracle::harmonic_mean(v, z0) - v(z0);
    CHECK(0.5 * pair_green(z0, lap_v).value == doctest::Approx(expected).epsilon(1e-10));
  }
  CHECK_THROWS_AS(pair_green(1.0, lap_v), Error);
}

TEST_CASE("pushforward pairings on the boundary") {
  const auto battery = default_battery();
  const auto g = closed_g();
  const auto composite = build_composite_disc(Complex(0.2, -0.1), g, 3, 0.99);
  CHECK(std::abs(pair_pushforward_boundary(composite, find(battery, "Re z")).value) < 1e-14);
  CHECK(std::abs(pair_pushforward_boundary(composite, find(battery, "1")).value) == 0.0);
  const auto vertical = build_vertical_disc(ArcUnion::upper_half(), kI);
  CHECK(pair_pushforward_boundary(vertical, find(battery, "|w|^2")).value == doctest::Approx(1.0).epsilon(1e-14));

  // Green-Riesz on five polynomials and five centres.
  const std::vector<std::function<double(Complex)>> polys{
      [](Complex z) { return z.real(); },
      [](Complex z) { return std::norm(z); },
      [](Complex z) { return (z * z * z).imag() + std::norm(z) * z.real(); },
      [](Complex z) { return std::pow(std::norm(z), 3); },
      [](Complex z) { return 1.0 + 2.0 * z.real() * z.imag() - std::pow(z.real(), 4); },
  };
  for (Complex z0 : {Complex(0.0), Complex(0.3), Complex(0.5, 0.2), Complex(-0.6, 0.1), Complex(0.0, -0.8)}) {
    for (const auto& p : polys) {
      const TestFunction u{"p", [&](Complex z, Complex) { return p(z); }, nullptr, nullptr};
      const double expected = oracle::harmonic_mean(p, z0, 8192) - p(z0);
      CHECK(std::abs(pair_pushforward_boundary(embedding(z0), u).value - expected) < 1e-8);
    }
  }
}

TEST_CASE("area pairing against the boundary formula") {
  const auto battery = default_battery();
  const auto identity = DiscMap::general([](Complex zeta) { return Point2{zeta, 0.0}; });
  CHECK(pair_pushforward_area(identity, find(battery, "|z|^2")).value == doctest::Approx(1.0).epsilon(1e-7));
  for (const char* harmonic : {"Re z", "Im z", "Re(zw)", "1"}) {
    CHECK(std::abs(pair_pushforward_area(identity, find(battery, harmonic)).value) < 1e-6);
  }

  const auto g = closed_g();
  const std::vector<int> nus{1, 2, 4, 8};
  const auto schedule = select_radius_schedule(*g, nus, 0.1);
  const auto disc4 = build_composite_disc(0.0, g, 4, schedule.radius(4));
  const auto w2 = find(battery, "|w|^2");
  CHECK(std::abs(pair_pushforward_area(disc4, w2).value - pair_pushforward_boundary(disc4, w2).value) < 1e-4);

  for (int nu : nus) {
    const auto disc = build_composite_disc(Complex(0.1, 0.2), g, nu, schedule.radius(nu));
    for (const auto& u : battery) {
      const double area = pair_pushforward_area(disc, u).value;
      const double boundary = pair_pushforward_boundary(disc, u).value;
      CHECK_MESSAGE(std::abs(area - boundary) < 1e-4, u.label << " at nu = " << nu);
    }
  }

  const TestFunction offset{"offset", [](Complex z, Complex) { return 10.0 + std::norm(z); }, nullptr, nullptr};
  CHECK(pair_pushforward_area(identity, offset, 1e-3).value == doctest::Approx(1.0).epsilon(1e-6));
  try {
    pair_pushforward_area(identity, offset, 1e-5);
    FAIL("expected StepTooSmall");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::StepTooSmall);
  }
  CHECK_THROWS_AS(pair_pushforward_area(identity, offset, 1e-2), Error);
}

TEST_CASE("limit current and Jensen measure") {
  const auto battery = default_battery();
  const auto upper = ArcUnion::upper_half();
  CHECK(pair_limit_current(0.0, upper, find(battery, "|w|^2")).value == doctest::Approx(0.5).epsilon(1e-14));
  CHECK(std::abs(pair_limit_current(Complex(0.3, 0.4), upper, find(battery, "Re z")).value) < 1e-14);
  CHECK(std::abs(pair_limit_current(Complex(0.3, 0.4), upper, find(battery, "1")).value) < 1e-14);

  // Mass of the I-part is omega(z0, I), from the independent boundary-angle
  // formula. The density jumps at E, so the trapezoid rule is second order.
  const Complex z0(0.3, -0.2);
  const double mass = harmonic_measure_of_arc(z0, 0.0, kPi);
  const double err_coarse = pair_limit_current(z0, upper, find(battery, "|w|^2"), {2048, 16}).value - mass;
  const double err_fine = pair_limit_current(z0, upper, find(battery, "|w|^2")).value - mass;
  CHECK(std::abs(err_fine) < 2e-8);
  CHECK(err_coarse / err_fine == doctest::Approx(16.0).epsilon(0.05));
  // I_0(1) / 2 for exp(Re z) |w|^2 at 0.
  CHECK(pair_limit_current(0.0, upper, find(battery, "exp(Re z)|w|^2")).value ==
        doctest::Approx(std::cyl_bessel_i(0.0, 1.0) / 2.0).epsilon(1e-13));

  CHECK(jensen_pair(z0, upper, find(battery, "1")) == doctest::Approx(1.0).epsilon(1e-13));
  CHECK(jensen_pair(z0, upper, find(battery, "Re z")) == doctest::Approx(z0.real()).epsilon(1e-12));
  CHECK(jensen_pair(0.0, upper, find(battery, "|w|^2")) == doctest::Approx(0.5).epsilon(1e-14));

  // dd^c T = sigma~ - delta_p on the shared nodes.
  for (Complex c : {Complex(0.0), Complex(0.3, -0.2), Complex(-0.5, 0.5)}) {
    for (const auto& u : battery) {
      CHECK(pair_limit_current(c, upper, u).value - (jensen_pair(c, upper, u) - u(c, 0.0)) == 0.0);
    }
  }
}

TEST_CASE("limit current on forms") {
  const auto upper = ArcUnion::upper_half();
  const auto one = [](Complex, Complex) { return 1.0; };
  CHECK(pair_limit_current_form(0.0, upper, {one, nullptr, nullptr, nullptr}).value ==
        doctest::Approx(pair_green(0.0, [](Complex) { return 1.0; }).value).epsilon(1e-14));
  CHECK(pair_limit_current_form(0.0, upper, {nullptr, one, nullptr, nullptr}).value ==
        doctest::Approx(0.25).epsilon(1e-12));
  CHECK(pair_limit_current_form(0.0, upper, {}).value == 0.0);

  const auto battery = default_battery();
  for (const char* label : {"|z|^2", "|w|^2", "exp(Re z)|w|^2"}) {
    const auto u = find(battery, label);
    const double form = kPi * pair_limit_current_form(Complex(0.3, 0.1), upper, ddc_form(u)).value;
    CHECK_MESSAGE(std::abs(form - pair_limit_current(Complex(0.3, 0.1), upper, u).value) < 1e-5, label);
  }
  CHECK_THROWS_AS(ddc_form({"bare", one, nullptr, nullptr}), Error);
}

TEST_CASE("pairings are linear") {
  const auto battery = default_battery();
  const auto upper = ArcUnion::upper_half();
  const auto disc = build_composite_disc(Complex(-0.2, 0.3), closed_g(), 5, 0.995);
  std::mt19937_64 rng(17);
  std::uniform_real_distribution<double> coef(-2.0, 2.0);
  std::uniform_int_distribution<std::size_t> pick(0, battery.size() - 1);
  for (int trial = 0; trial < 10; ++trial) {
    const auto& a = battery[pick(rng)];
    const auto& b = battery[pick(rng)];
    const double s = coef(rng), t = coef(rng);
    const auto mix = combine(a, b, s, t);
    const double bd = pair_pushforward_boundary(disc, mix, 1024).value;
    CHECK(std::abs(bd - (s * pair_pushforward_boundary(disc, a, 1024).value +
                         t * pair_pushforward_boundary(disc, b, 1024).value)) < 1e-12);
    const LimitQuadrature quad{1024, 128};
    const double lim = pair_limit_current(0.1, upper, mix, quad).value;
    CHECK(std::abs(lim - (s * pair_limit_current(0.1, upper, a, quad).value +
                          t * pair_limit_current(0.1, upper, b, quad).value)) < 1e-12);
  }
}

TEST_CASE("convergence experiment") {
  const auto g = closed_g();
  const auto upper = ArcUnion::upper_half();
  const std::vector<int> nus{1, 4, 16};
  const auto schedule = select_radius_schedule(*g, nus, 0.1);
  const auto battery = default_battery();
  const auto rows = convergence_experiment({0.0, 0.0}, upper, g, schedule, nus, battery);
  REQUIRE(rows.size() == nus.size() * battery.size());
  double previous_w2_gap = 1.0;
  for (const auto& row : rows) {
    if (row.label == "Re z" || row.label == "1") CHECK(row.gap < 1e-14);
    if (row.label == "|w|^2") {
      CHECK(row.t == doctest::Approx(0.5).epsilon(1e-14));
      CHECK(row.gap < previous_w2_gap);
      previous_w2_gap = row.gap;
    }
  }
  CHECK_THROWS_AS(convergence_experiment({0.0, 0.5}, upper, g, schedule, nus, battery), Error);
  CHECK_THROWS_AS(convergence_experiment({0.0, 0.0}, upper, g, schedule, {2}, battery), Error);
}

TEST_CASE("graded boundary rule for composite discs") {
  const auto g = closed_g();
  const auto battery = default_battery();
  SUBCASE("agrees with a fine trapezoid rule at moderate radius") {
    for (int nu : {1, 4}) {
      const auto disc = DiscMap::composite(Complex(0.3, 0.2), g, nu, 0.99);
      for (const auto& u : battery) {
        const double graded = pair_pushforward_graded(disc, u).value;
        CHECK(std::abs(graded - pair_pushforward_boundary(disc, u, 1 << 16).value) < 1e-10);
      }
    }
  }
  SUBCASE("pluriharmonic members vanish near the rim at large nu") {
    const auto schedule = select_radius_schedule(*g, std::vector<int>{256}, 0.1);
    for (Complex z0 : {Complex(0.0), Complex(0.3, 0.0)}) {
      const auto disc = DiscMap::composite(z0, g, 256, schedule.radius(256));
      for (const char* label : {"1", "Re z", "Im z", "Re w", "Re(zw)"}) {
        CHECK(std::abs(pair_pushforward_graded(disc, find(battery, label)).value) < 1e-12);
      }
      const auto w2 = find(battery, "|w|^2");
      const double coarse = pair_pushforward_graded(disc, w2).value;
      const double fine = pair_pushforward_graded(disc, w2, {16, 0.025}).value;
      CHECK(std::abs(coarse - fine) < 1e-10);
      // a uniform rule cannot resolve g^256 near E
      CHECK(std::abs(pair_pushforward_boundary(disc, find(battery, "Re w")).value) > 1e-6);
    }
  }
  CHECK_THROWS_AS(pair_pushforward_graded(embedding(0.0), battery[0]), Error);
}
