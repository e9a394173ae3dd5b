#include "hullab/harness.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <memory>
#include <set>
#include <sstream>

#include <json.hpp>

#include "hullab/circle_averaging.hpp"
#include "hullab/currents.hpp"
#include "hullab/errors.hpp"
#include "hullab/poletsky_discs.hpp"
#include "hullab/winding_obstruction.hpp"

namespace hullab {

using nlohmann::json;
namespace fs = std::filesystem;

namespace {

[[noreturn]] void config_error(const std::string& what) { throw Error(ErrorCode::ConfigError, what); }

// ------------------------------------------------------------ JSON helpers

Complex complex_from(const json& j, const std::string& key) {
  if (j.is_number()) return {j.get<double>(), 0.0};
  if (j.is_array() && j.size() == 2 && j[0].is_number() && j[1].is_number()) {
    return {j[0].get<double>(), j[1].get<double>()};
  }
  config_error(key + " must be a number or a [re, im] pair");
}

json complex_to(Complex z) { return json::array({z.real(), z.imag()}); }

template <typename T>
T get_as(const json& j, const std::string& key) {
  try {
    return j.get<T>();
  } catch (const json::exception&) {
    config_error("bad value for " + key);
  }
}

void reject_unknown(const json& j, const std::set<std::string>& known, const std::string& where) {
  if (!j.is_object()) config_error(where + " must be an object");
  for (const auto& item : j.items()) {
    if (!known.contains(item.key())) config_error("unknown key '" + item.key() + "' in " + where);
  }
}

std::string variant_name(SetVariant v) {
  switch (v) {
    case SetVariant::K1: return "K1";
    case SetVariant::K: return "K";
    case SetVariant::K2: return "K2";
  }
  return "K";
}

json quadrature_json(const QuadratureSizes& q) {
  return {{"boundary_nodes", q.boundary_nodes},   {"limit_outer", q.limit_outer},
          {"limit_inner", q.limit_inner},         {"schedule_grid", q.schedule_grid},
          {"poletsky_boundary", q.poletsky_boundary}, {"certificate_samples", q.certificate_samples},
          {"pushforward_bins", q.pushforward_bins}, {"outer_order", q.outer_order}};
}

json config_json(const ExperimentConfig& c) {
  json arcs = json::array();
  for (const auto& a : c.arcs) arcs.push_back({a.start, a.end});
  return {{"set", variant_name(c.variant)},
          {"arcs", c.arcs.empty() ? json("upper_half") : arcs},
          {"point", {{"z", complex_to(c.point.z)}, {"w", complex_to(c.point.w)}}},
          {"nus", c.nus},
          {"eps", c.eps},
          {"outer", c.outer},
          {"exclusion", c.exclusion},
          {"quadrature", quadrature_json(c.quadrature)},
          {"battery", c.battery},
          {"rho_u", c.rho_u},
          {"max_degree", c.max_degree},
          {"averaging",
           {{"measure", c.measure}, {"center", complex_to(c.measure_center)}, {"nus", c.averaging_nus}, {"max_k", c.max_k}}},
          {"obstruction", {{"trials", c.trials}, {"delta", c.delta}, {"center", complex_to(c.obstruction_center)}}},
          {"seed", c.seed}};
}

std::vector<int> int_list(const json& j, const std::string& key) {
  auto v = get_as<std::vector<int>>(j, key);
  if (v.empty()) config_error(key + " must not be empty");
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i] < 1) config_error(key + " entries must be positive");
    if (i > 0 && v[i] <= v[i - 1]) config_error(key + " must be strictly increasing");
  }
  return v;
}

std::vector<TestFunction> select_battery(const std::vector<std::string>& labels) {
  auto all = default_battery();
  if (labels.empty()) return all;
  std::vector<TestFunction> chosen;
  for (const auto& label : labels) {
    auto it = std::find_if(all.begin(), all.end(), [&](const TestFunction& u) { return u.label == label; });
    if (it == all.end()) config_error("unknown battery function '" + label + "'");
    chosen.push_back(*it);
  }
  return chosen;
}

// -------------------------------------------------------------- artifacts

class CsvFile {
 public:
  CsvFile(const fs::path& path, const ExperimentConfig& config, const std::string& experiment,
          const std::vector<std::string>& columns)
      : path_(path), stream_(path, std::ios::binary) {
    if (!stream_) throw Error(ErrorCode::ConfigError, "cannot write " + path.string());
    stream_ << "# hullab " << experiment << '\n';
    stream_ << "# config_hash: " << config_hash(config) << '\n';
    stream_ << "# seed: " << config.seed << '\n';
    stream_ << "# quadrature: " << quadrature_json(config.quadrature).dump() << '\n';
    row(columns);
  }

  void row(const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) stream_ << (i ? "," : "") << cells[i];
    stream_ << '\n';
  }

  const fs::path& path() const { return path_; }

 private:
  fs::path path_;
  std::ofstream stream_;
};

fs::path write_json(const fs::path& path, const ExperimentConfig& config, const std::string& experiment,
                    json body) {
  body["experiment"] = experiment;
  body["config_hash"] = config_hash(config);
  body["quadrature"] = quadrature_json(config.quadrature);
  std::ofstream stream(path, std::ios::binary);
  if (!stream) throw Error(ErrorCode::ConfigError, "cannot write " + path.string());
  stream << body.dump(2) << '\n';
  return path;
}

std::string fmt(double v) { return format_number(v); }
std::string fmt(std::size_t v) { return std::to_string(v); }
std::string fmt(int v) { return std::to_string(v); }

bool is_upper_half(const ArcUnion& arcs) {
  return arcs.arcs().size() == 1 && std::abs(arcs.arcs()[0].start) < 1e-12 &&
         std::abs(arcs.arcs()[0].end - kPi) < 1e-12;
}

std::shared_ptr<const OuterFunction> make_outer(const ExperimentConfig& config) {
  const auto arcs = config.arc_union();
  if (config.outer == "closed_form") {
    if (!is_upper_half(arcs)) config_error("the closed-form outer function needs I = I_+");
    return std::make_shared<const OuterFunction>(OuterFunction::closed_form_upper_half(config.exclusion));
  }
  return std::make_shared<const OuterFunction>(
      OuterFunction::fourier(arcs, config.quadrature.outer_order, config.exclusion));
}

ExampleSet example_set(const ExperimentConfig& config) {
  switch (config.variant) {
    case SetVariant::K1: return ExampleSet::k1();
    case SetVariant::K: return ExampleSet::k(config.arc_union());
    case SetVariant::K2: return ExampleSet::k2();
  }
  return ExampleSet::k1();
}

}  // namespace

// ------------------------------------------------------------------ config

void QuadratureSizes::scale(double factor) {
  if (!(factor > 0.0)) config_error("grid scale must be positive");
  auto scaled = [factor](std::size_t n) {
    auto m = static_cast<std::size_t>(std::llround(static_cast<double>(n) * factor));
    m += m % 2;
    return std::max<std::size_t>(m, 8);
  };
  boundary_nodes = scaled(boundary_nodes);
  limit_outer = scaled(limit_outer);
  limit_inner = scaled(limit_inner);
  schedule_grid = scaled(schedule_grid);
  poletsky_boundary = scaled(poletsky_boundary);
  certificate_samples = scaled(certificate_samples);
  pushforward_bins = scaled(pushforward_bins);
  outer_order = std::max(64, static_cast<int>(scaled(static_cast<std::size_t>(outer_order))));
}

ArcUnion ExperimentConfig::arc_union() const { return arcs.empty() ? ArcUnion::upper_half() : ArcUnion(arcs); }

ExperimentConfig parse_config(std::string_view text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    config_error(std::string("invalid JSON: ") + e.what());
  }
  reject_unknown(j,
                 {"set", "arcs", "point", "nus", "eps", "outer", "exclusion", "quadrature", "battery", "rho_u",
                  "max_degree", "averaging", "obstruction", "seed"},
                 "config");
  ExperimentConfig c;
  if (j.contains("set")) {
    const auto name = get_as<std::string>(j["set"], "set");
    if (name == "K1") c.variant = SetVariant::K1;
    else if (name == "K") c.variant = SetVariant::K;
    else if (name == "K2") c.variant = SetVariant::K2;
    else config_error("set must be K, K1 or K2");
  }
  if (j.contains("arcs") && !(j["arcs"].is_string() && j["arcs"] == "upper_half")) {
    for (const auto& a : get_as<std::vector<std::vector<double>>>(j["arcs"], "arcs")) {
      if (a.size() != 2) config_error("each arc is a [start, end] pair");
      c.arcs.push_back({a[0], a[1]});
    }
    if (c.variant == SetVariant::K2) config_error("K2 is built on I_+; arcs cannot be changed");
    try {
      (void)c.arc_union();
    } catch (const Error& e) {
      config_error(std::string("arcs: ") + e.what());
    }
  }
  if (j.contains("point")) {
    reject_unknown(j["point"], {"z", "w"}, "point");
    if (j["point"].contains("z")) c.point.z = complex_from(j["point"]["z"], "point.z");
    if (j["point"].contains("w")) c.point.w = complex_from(j["point"]["w"], "point.w");
  }
  if (j.contains("nus")) c.nus = int_list(j["nus"], "nus");
  if (j.contains("eps")) c.eps = get_as<double>(j["eps"], "eps");
  if (!(c.eps > 0.0)) config_error("eps must be positive");
  if (j.contains("outer")) c.outer = get_as<std::string>(j["outer"], "outer");
  if (c.outer != "closed_form" && c.outer != "fourier") config_error("outer must be closed_form or fourier");
  if (j.contains("exclusion")) c.exclusion = get_as<double>(j["exclusion"], "exclusion");
  if (!(c.exclusion > 0.0 && c.exclusion < 0.5)) config_error("exclusion must lie in (0, 0.5)");
  if (j.contains("quadrature")) {
    const auto& q = j["quadrature"];
    reject_unknown(q,
                   {"boundary_nodes", "limit_outer", "limit_inner", "schedule_grid", "poletsky_boundary",
                    "certificate_samples", "pushforward_bins", "outer_order"},
                   "quadrature");
    auto size = [&](const char* key, std::size_t& field) {
      if (!q.contains(key)) return;
      const auto v = get_as<long long>(q[key], key);
      if (v < 8) config_error(std::string(key) + " must be at least 8");
      field = static_cast<std::size_t>(v);
    };
    size("boundary_nodes", c.quadrature.boundary_nodes);
    size("limit_outer", c.quadrature.limit_outer);
    size("limit_inner", c.quadrature.limit_inner);
    size("schedule_grid", c.quadrature.schedule_grid);
    size("poletsky_boundary", c.quadrature.poletsky_boundary);
    size("certificate_samples", c.quadrature.certificate_samples);
    size("pushforward_bins", c.quadrature.pushforward_bins);
    if (q.contains("outer_order")) c.quadrature.outer_order = get_as<int>(q["outer_order"], "outer_order");
    if (c.quadrature.outer_order < 64) config_error("outer_order must be at least 64");
  }
  if (j.contains("battery")) {
    c.battery = get_as<std::vector<std::string>>(j["battery"], "battery");
    (void)select_battery(c.battery);
  }
  if (j.contains("rho_u")) c.rho_u = get_as<double>(j["rho_u"], "rho_u");
  if (!(c.rho_u > 0.0)) config_error("rho_u must be positive");
  if (j.contains("max_degree")) c.max_degree = get_as<int>(j["max_degree"], "max_degree");
  if (c.max_degree < 1) config_error("max_degree must be at least 1");
  if (j.contains("averaging")) {
    const auto& a = j["averaging"];
    reject_unknown(a, {"measure", "center", "nus", "max_k"}, "averaging");
    if (a.contains("measure")) c.measure = get_as<std::string>(a["measure"], "averaging.measure");
    if (a.contains("center")) c.measure_center = complex_from(a["center"], "averaging.center");
    if (a.contains("nus")) c.averaging_nus = int_list(a["nus"], "averaging.nus");
    if (a.contains("max_k")) c.max_k = get_as<int>(a["max_k"], "averaging.max_k");
  }
  static const std::set<std::string> measures{"uniform", "poisson", "one_plus_cos", "g_pushforward"};
  if (!measures.contains(c.measure)) config_error("unknown averaging measure '" + c.measure + "'");
  if (!(std::abs(c.measure_center) < 1.0)) config_error("averaging.center must lie in the open disc");
  if (c.max_k < 1) config_error("averaging.max_k must be at least 1");
  if (j.contains("obstruction")) {
    const auto& o = j["obstruction"];
    reject_unknown(o, {"trials", "delta", "center"}, "obstruction");
    if (o.contains("trials")) {
      const auto t = get_as<long long>(o["trials"], "obstruction.trials");
      if (t < 1) config_error("obstruction.trials must be positive");
      c.trials = static_cast<std::size_t>(t);
    }
    if (o.contains("delta")) c.delta = get_as<double>(o["delta"], "obstruction.delta");
    if (o.contains("center")) c.obstruction_center = complex_from(o["center"], "obstruction.center");
  }
  if (!(c.delta >= 0.0 && c.delta <= 0.3)) config_error("obstruction.delta must lie in [0, 0.3]");
  if (!(std::abs(c.obstruction_center) <= 0.7)) config_error("obstruction.center must satisfy |z0| <= 0.7");
  if (j.contains("seed")) c.seed = get_as<std::uint64_t>(j["seed"], "seed");
  return c;
}

ExperimentConfig load_config(const fs::path& path) {
  std::ifstream stream(path, std::ios::binary);
  if (!stream) config_error("cannot read " + path.string());
  std::ostringstream text;
  text << stream.rdbuf();
  return parse_config(text.str());
}

std::string canonical_json(const ExperimentConfig& config) { return config_json(config).dump(); }

std::string config_hash(const ExperimentConfig& config) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char ch : canonical_json(config)) {
    h ^= ch;
    h *= 0x100000001b3ULL;
  }
  std::ostringstream out;
  out << std::hex << std::setw(16) << std::setfill('0') << h;
  return out.str();
}

std::string format_number(double value) {
  char buffer[64];
  const auto result = std::to_chars(buffer, buffer + sizeof buffer, value, std::chars_format::general, 17);
  return std::string(buffer, result.ptr);
}

// ------------------------------------------------------------- experiments

RunResult run_converge(const ExperimentConfig& config, const fs::path& out) {
  fs::create_directories(out);
  const auto arcs = config.arc_union();
  const auto battery = select_battery(config.battery);
  const Point2 p = config.point;
  RunResult result;
  CsvFile table(out / "converge.csv", config, "converge", {"nu", "r", "label", "t_nu", "t", "gap"});
  json summary = json::object();

  if (std::abs(std::abs(p.z) - 1.0) < 1e-12) {
    // A point of closure(I) x D: the single vertical disc through p.
    if (!(std::abs(p.w) < 1.0)) config_error("vertical disc needs |w| < 1");
    const auto disc = DiscMap::vertical(arcs, p.z, p.w);
    for (const auto& u : battery) {
      const double boundary = pair_pushforward_boundary(disc, u, config.quadrature.boundary_nodes).value;
      const double area = pair_pushforward_area(disc, u).value;
      for (int nu : config.nus) {
        table.row({fmt(nu), fmt(1.0), u.label, fmt(boundary), fmt(area), fmt(std::abs(boundary - area))});
      }
      summary[u.label] = {{"t_nu", boundary}, {"t", area}, {"final_gap", std::abs(boundary - area)}};
    }
    result.files.push_back(table.path());
    result.files.push_back(write_json(out / "converge_summary.json", config, "converge",
                                      {{"mode", "vertical"}, {"largest_nu", config.nus.back()}, {"functions", summary}}));
    result.summary = "vertical disc through p; boundary and area pairings compared";
    return result;
  }

  if (!(std::abs(p.z) < 1.0) || p.w != Complex(0.0)) {
    config_error("converge needs p = (z0, 0) with |z0| < 1, or p in closure(I) x D");
  }
  if (config.variant == SetVariant::K1) config_error("converge is defined for K(I) and K2");
  const auto g = make_outer(config);
  const auto schedule = select_radius_schedule(*g, config.nus, config.eps, config.quadrature.schedule_grid);
  const auto rows = convergence_experiment(p, arcs, g, schedule, config.nus, battery, {},
                                           {config.quadrature.limit_outer, config.quadrature.limit_inner});
  for (const auto& r : rows) {
    table.row({fmt(r.nu), fmt(schedule.radius(r.nu)), r.label, fmt(r.t_nu), fmt(r.t), fmt(r.gap)});
    auto& s = summary[r.label];
    s["max_gap"] = s.is_object() ? std::max(s["max_gap"].get<double>(), r.gap) : r.gap;
    if (r.nu == config.nus.back()) {
      s["final_gap"] = r.gap;
      s["t_nu"] = r.t_nu;
      s["t"] = r.t;
    }
  }
  result.files.push_back(table.path());

  CsvFile sched(out / "schedule.csv", config, "converge", {"nu", "exponent", "r", "exhaustion", "delta", "achieved"});
  for (const auto& e : schedule.entries) {
    sched.row({fmt(e.nu), fmt(e.exponent), fmt(e.r), fmt(e.exhaustion), fmt(e.delta), fmt(e.achieved)});
  }
  result.files.push_back(sched.path());

  const auto set = example_set(config);
  CsvFile pol(out / "poletsky.csv", config, "converge",
              {"nu", "r", "center_gap", "hull_excess", "bad_measure", "unresolved_nodes"});
  json poletsky = json::object();
  for (int nu : config.nus) {
    const auto disc = DiscMap::composite(p.z, g, nu, schedule.radius(nu));
    const auto rep = verify_poletsky(disc, set, p, config.rho_u, config.quadrature.poletsky_boundary);
    pol.row({fmt(nu), fmt(rep.r), fmt(rep.center_gap), fmt(rep.hull_excess), fmt(rep.bad_measure),
             fmt(rep.unresolved_nodes)});
    if (nu == config.nus.back()) {
      poletsky = {{"center_gap", rep.center_gap}, {"hull_excess", rep.hull_excess}, {"bad_measure", rep.bad_measure}};
    }
  }
  result.files.push_back(pol.path());
  result.files.push_back(write_json(out / "converge_summary.json", config, "converge",
                                    {{"mode", "composite"},
                                     {"largest_nu", config.nus.back()},
                                     {"functions", summary},
                                     {"poletsky", poletsky}}));
  result.summary = "composite discs along the radius schedule";
  return result;
}

RunResult run_hull(const ExperimentConfig& config, const fs::path& out) {
  fs::create_directories(out);
  if (config.variant == SetVariant::K1) config_error("the hull of K1 is not known; certificates need K or K2");
  const auto set = example_set(config);
  const auto arcs = config.variant == SetVariant::K2 ? ArcUnion::upper_half() : config.arc_union();
  if (hull_contains(set, config.point)) config_error("p lies in the hull; no certificate can exist");
  const auto cert = find_certificate(arcs, config.point, config.max_degree);
  const auto report = inspect_certificate(cert, set, config.quadrature.certificate_samples);
  json coefficients = json::array();
  for (Complex c : cert.coefficients) coefficients.push_back(complex_to(c));
  RunResult result;
  result.verified = report.passed;
  result.files.push_back(write_json(
      out / "hull_certificate.json", config, "hull",
      {{"target", {{"z", complex_to(config.point.z)}, {"w", complex_to(config.point.w)}}},
       {"degree", cert.degree()},
       {"coefficients", coefficients},
       {"margin", cert.margin},
       {"verification",
        {{"passed", report.passed},
         {"samples", report.samples},
         {"worst_value", report.worst_value},
         {"worst_point", {{"z", complex_to(report.worst_point.z)}, {"w", complex_to(report.worst_point.w)}}},
         {"target_value", report.target_value}}}}));
  result.summary = "certificate of degree " + std::to_string(cert.degree()) + ", margin " + format_number(cert.margin);
  return result;
}

RunResult run_averaging(const ExperimentConfig& config, const fs::path& out) {
  fs::create_directories(out);
  auto measure = [&]() {
    if (config.measure == "uniform") return CircleMeasure::uniform();
    if (config.measure == "poisson") return CircleMeasure::harmonic(config.measure_center);
    if (config.measure == "one_plus_cos") {
      FourierSeries s(1);
      s.at(0) = 1.0;
      s.at(1) = 0.5;
      s.at(-1) = 0.5;
      return CircleMeasure::trigonometric(s);
    }
    const auto g = make_outer(config);
    const auto first = g->arcs().arcs()[0];
    const double tau = g->exclusion_radius();
    return g_pushforward_measure(*g, config.measure_center, {first.start + tau, first.end - tau},
                                 config.quadrature.pushforward_bins);
  }();
  const int k_max = config.max_k;
  CsvFile moments(out / "averaging_moments.csv", config, "averaging", {"nu", "k", "re", "im", "abs"});
  CsvFile gaps(out / "averaging_gap.csv", config, "averaging", {"nu", "weak_gap", "abs_moment_1", "mass"});
  for (int nu : config.averaging_nus) {
    const auto m = pushforward_power_moments(measure, nu, k_max);
    for (int k = -k_max; k <= k_max; ++k) {
      const Complex v = m[static_cast<std::size_t>(k + k_max)];
      moments.row({fmt(nu), fmt(k), fmt(v.real()), fmt(v.imag()), fmt(std::abs(v))});
    }
    gaps.row({fmt(nu), fmt(weak_gap(measure, nu, k_max)), fmt(std::abs(m[static_cast<std::size_t>(k_max + 1)])),
              fmt(m[static_cast<std::size_t>(k_max)].real())});
  }
  RunResult result;
  result.files = {moments.path(), gaps.path()};
  result.summary = "moments of (p_nu)_* mu for the " + config.measure + " measure";
  return result;
}

RunResult run_obstruction(const ExperimentConfig& config, const fs::path& out) {
  fs::create_directories(out);
  ObstructionConfig oc;
  oc.trials = config.trials;
  oc.delta = config.delta;
  oc.z0 = config.obstruction_center;
  oc.seed = config.seed;
  const auto report = obstruction_demo(oc);
  json histogram = json::object();
  for (const auto& [w, n] : report.histogram) histogram[std::to_string(w)] = n;
  RunResult result;
  result.verified = report.histogram.size() == 1 && report.histogram.begin()->first == 0;
  result.files.push_back(write_json(out / "obstruction.json", config, "obstruction",
                                    {{"trials", report.trials},
                                     {"delta", report.delta},
                                     {"z0", complex_to(report.z0)},
                                     {"seed", report.seed},
                                     {"histogram", histogram},
                                     {"rejections", report.rejections},
                                     {"coarse_vertices", oc.coarse_vertices},
                                     {"max_refinement", report.max_refinement}}));
  result.summary = result.verified ? "all windings zero" : "nonzero winding found";
  return result;
}

RunResult run_selftest(const ExperimentConfig& config, const fs::path& out) {
  fs::create_directories(out);
  CsvFile table(out / "selftest.csv", config, "selftest", {"check", "value", "threshold", "passed"});
  RunResult result;
  std::size_t failures = 0;
  auto check = [&](const std::string& name, double value, double threshold) {
    const bool ok = value <= threshold;
    failures += ok ? 0 : 1;
    table.row({name, fmt(value), fmt(threshold), ok ? "1" : "0"});
  };
  const auto battery = default_battery();
  const auto arcs = ArcUnion::upper_half();

  {
    const Complex z0(0.3, 0.0);
    const auto disc = DiscMap::general([z0](Complex zeta) { return Point2{mobius(z0, zeta), 0.0}; });
    double worst = 0.0;
    for (const auto& u : battery) {
      worst = std::max(worst, std::abs(pair_pushforward_area(disc, u).value -
                                       pair_pushforward_boundary(disc, u, config.quadrature.boundary_nodes).value));
    }
    check("green_riesz_area_vs_boundary", worst, 1e-6);
  }
  {
    const Complex z0(0.5, 0.2);
    const LimitQuadrature quad{config.quadrature.limit_outer, config.quadrature.limit_inner};
    double worst = 0.0;
    for (const auto& u : battery) {
      const double t = pair_limit_current(z0, arcs, u, quad).value;
      worst = std::max(worst, std::abs(t - (jensen_pair(z0, arcs, u, quad) - u(z0, 0.0))));
    }
    check("limit_current_minus_jensen", worst, 0.0);
    TestFunction one{"1", [](Complex, Complex) { return 1.0; }, {}, {}};
    check("jensen_mass", std::abs(jensen_pair(z0, arcs, one, quad) - 1.0), 1e-8);
  }
  {
    FourierSeries s(1);
    s.at(0) = 1.0;
    s.at(1) = 0.5;
    s.at(-1) = 0.5;
    const auto mu = CircleMeasure::trigonometric(s);
    double worst = 0.0;
    for (int nu = 2; nu <= 16; ++nu) worst = std::max(worst, weak_gap(mu, nu, 8));
    check("averaging_one_plus_cos", worst, 0.0);
    const auto m = pushforward_power_moments(CircleMeasure::harmonic(0.4), 8, 1);
    check("averaging_poisson_moment", std::abs(std::abs(m[2]) - std::pow(0.4, 8)), 1e-9);
  }
  {
    double worst = 0.0;
    for (Complex z0 : {Complex(0.3, 0.0), Complex(0.5, 0.2)}) {
      const auto a = boundary_pushforward_moments([z0](Complex zeta) { return mobius(z0, zeta); }, 16,
                                                  config.quadrature.boundary_nodes);
      const auto b = measure_moments(CircleMeasure::harmonic(z0), 16);
      for (std::size_t i = 0; i < a.size(); ++i) worst = std::max(worst, std::abs(a[i] - b[i]));
    }
    check("moebius_pushforward_moments", worst, 1e-10);
  }
  {
    const auto g = OuterFunction::closed_form_upper_half();
    const Complex z0(0.2, 0.3);
    const double a = 0.1;
    const double b = kPi - 0.1;
    const auto mu = g_pushforward_measure(g, z0, {a, b}, config.quadrature.pushforward_bins);
    check("g_pushforward_mass", std::abs(mu.mass() - harmonic_measure_of_arc(z0, a, b)), 1e-9);
    check("closed_form_center_modulus", std::abs(std::abs(g(0.0)) - std::exp(-0.5)), 1e-6);
  }
  {
    const Point2 p{Complex(0.0, -1.0), 0.9};
    const auto cert = find_certificate(arcs, p, config.max_degree);
    const auto rep = inspect_certificate(cert, ExampleSet::k(arcs), config.quadrature.certificate_samples);
    check("certificate_margin_shortfall", std::max(0.0, 1.27 - cert.margin), 0.0);
    check("certificate_verification", rep.passed ? 0.0 : 1.0, 0.0);
  }
  {
    ObstructionConfig oc;
    oc.trials = 50;
    oc.seed = config.seed;
    const auto rep = obstruction_demo(oc);
    check("obstruction_nonzero_windings",
          static_cast<double>(oc.trials - (rep.histogram.contains(0) ? rep.histogram.at(0) : 0)), 0.0);
  }
  {
    const auto g = std::make_shared<const OuterFunction>(OuterFunction::closed_form_upper_half());
    const auto schedule = select_radius_schedule(*g, std::vector<int>{16}, 0.1, config.quadrature.schedule_grid);
    const auto disc = DiscMap::composite(0.0, g, 16, schedule.radius(16));
    const auto rep = verify_poletsky(disc, ExampleSet::k(arcs), {0.0, 0.0}, 0.05, config.quadrature.poletsky_boundary);
    check("poletsky_center_gap_nu16", rep.center_gap, std::exp(-8.0) * (1.0 + 1e-9));
  }
  result.files.push_back(table.path());
  result.verified = failures == 0;
  result.summary = std::to_string(failures) + " failed checks";
  return result;
}

}  // namespace hullab
