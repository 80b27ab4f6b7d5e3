// Copyright (c) 2026 the enclose project authors
// SPDX-License-Identifier: Apache-2.0

#include "enclose/scenario.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace enclose {

using nlohmann::json;

double Scenario::dt() const {
  if (time.dt) return *time.dt;
  return 0.45 * grid.dx / (std::sqrt(3.0) * medium.wave_speed());
}

std::vector<double> Scenario::effective_tau_grid() const {
  if (!tau_grid.empty()) return tau_grid;
  double lo = 2.0 / time.T;
  double hi = std::min(8.0 / (medium.sqrt_mu_eps() * grid.dx * 50.0), 0.4 / dt());
  if (!(hi > lo)) throw ConfigError("tau grid: default range is empty; set tau_grid");
  const int n = 16;
  std::vector<double> taus(n);
  double ratio = std::pow(hi / lo, 1.0 / (n - 1));
  double t = lo;
  for (int i = 0; i < n; ++i, t *= ratio) taus[i] = t;
  taus.back() = hi;
  return taus;
}

std::vector<double> Scenario::default_sweep_grid(int points) const {
  if (t_grid_for_sweep) return *t_grid_for_sweep;
  std::vector<double> ts(points);
  // Open interval ]0, T[ sampled uniformly away from the endpoints.
  for (int i = 0; i < points; ++i)
    ts[i] = time.T * static_cast<double>(i + 1) / (points + 1);
  return ts;
}

DistanceFacts Scenario::distance_facts() const {
  DistanceFacts f;
  f.eta = sources[0].eta;
  f.d_boundary_p = obstacle.distance_to_boundary(sources[0].center);
  f.dist_DB = f.d_boundary_p - f.eta;
  return f;
}

void Scenario::required_box(Vec3 &lo, Vec3 &hi) const {
  double clear = medium.wave_speed() * time.T / 2.0;
  Vec3 p = sources[0].center;
  double eta = sources[0].eta;
  Vec3 olo = obstacle.bounds_lo(), ohi = obstacle.bounds_hi();
  lo = Vec3{std::min(p.x - eta, olo.x), std::min(p.y - eta, olo.y),
            std::min(p.z - eta, olo.z)} -
       Vec3{clear, clear, clear};
  hi = Vec3{std::max(p.x + eta, ohi.x), std::max(p.y + eta, ohi.y),
            std::max(p.z + eta, ohi.z)} +
       Vec3{clear, clear, clear};
}

void Scenario::validate() const {
  if (!(grid.dx > 0.0)) throw ConfigError("scenario: dx must be positive");
  if (!(time.T > 0.0)) throw ConfigError("scenario: T must be positive");
  const auto &s0 = sources[0];
  const auto &s1 = sources[1];
  if (!(s0.eta > 0.0)) throw ConfigError("scenario: source radius eta must be positive");
  if ((s0.center - s1.center).norm() > 1e-12 || std::abs(s0.eta - s1.eta) > 1e-12)
    throw ConfigError("scenario: the two sources must share center and radius");
  if (!s0.direction.is_unit(1e-9) || !s1.direction.is_unit(1e-9))
    throw ConfigError("scenario: source directions must be unit vectors");
  if (s0.direction.cross(s1.direction).norm() <= 1e-8)
    throw ConfigError("scenario: source directions must be linearly independent");

  // Closure of B disjoint from the closure of the obstacle.
  double d = obstacle.distance_to_boundary(s0.center);
  if (obstacle.inside(s0.center) || d <= s0.eta)
    throw ConfigError(
        "scenario: source ball must be disjoint from the obstacle closure "
        "(the closures of B and D must not intersect)");

  double cfl = grid.dx / (std::sqrt(3.0) * medium.wave_speed());
  if (dt() > cfl * (1.0 + 1e-12)) {
    std::ostringstream os;
    os << "scenario: dt " << dt() << " violates the CFL bound dx/(sqrt(3)*c) = "
       << cfl;
    throw ConfigError(os.str());
  }

  if (grid.box_lo && grid.box_hi) {
    Vec3 need_lo, need_hi;
    required_box(need_lo, need_hi);
    const double tol = 1e-9 * grid.dx;
    if (grid.box_lo->x > need_lo.x + tol || grid.box_lo->y > need_lo.y + tol ||
        grid.box_lo->z > need_lo.z + tol || grid.box_hi->x < need_hi.x - tol ||
        grid.box_hi->y < need_hi.y - tol || grid.box_hi->z < need_hi.z - tol) {
      std::ostringstream os;
      os << "scenario: box too small for the clearance rule (outer boundary "
            "must be >= wave_speed*T/2 from the source ball and obstacle); "
            "minimal compliant box: lo=["
         << need_lo.x << "," << need_lo.y << "," << need_lo.z << "] hi=["
         << need_hi.x << "," << need_hi.y << "," << need_hi.z << "]";
      throw ConfigError(os.str());
    }
  } else if (grid.box_lo || grid.box_hi) {
    throw ConfigError("scenario: box needs both lo and hi (or neither)");
  }

  for (double tau : tau_grid)
    if (!(tau > 0.0)) throw ConfigError("scenario: tau grid must be positive");
  for (std::size_t i = 1; i < tau_grid.size(); ++i)
    if (!(tau_grid[i] > tau_grid[i - 1]))
      throw ConfigError("scenario: tau grid must be sorted increasing");
  if (t_grid_for_sweep)
    for (double T : *t_grid_for_sweep)
      if (!(T > 0.0) || T > time.T)
        throw ConfigError("scenario: sweep T grid must lie in ]0, T]");
}

namespace {

Vec3 vec3_from(const json &j) {
  if (!j.is_array() || j.size() != 3) throw ConfigError("scenario: expected [x,y,z]");
  return {j[0].get<double>(), j[1].get<double>(), j[2].get<double>()};
}

json vec3_to(const Vec3 &v) { return json::array({v.x, v.y, v.z}); }

Pulse pulse_from(const json &j) {
  std::string kind = j.at("kind").get<std::string>();
  if (kind == "ramp_exp")
    return Pulse::ramp_exp(j.at("t_c").get<double>(), j.at("amplitude").get<double>());
  if (kind == "table")
    return Pulse::table(j.at("times").get<std::vector<double>>(),
                        j.at("values").get<std::vector<double>>(),
                        j.value("gamma", 1.5));
  throw ConfigError("scenario: pulse kind must be ramp_exp or table");
}

json pulse_to(const Pulse &p) {
  json j;
  if (p.kind() == PulseKind::RampExp) {
    j["kind"] = "ramp_exp";
    j["t_c"] = p.ramp_time();
    j["amplitude"] = p.amplitude();
  } else {
    j["kind"] = "table";
    j["times"] = p.table_times();
    j["values"] = p.table_values();
    j["gamma"] = p.decay_rate_gamma();
  }
  return j;
}

Obstacle obstacle_from(const json &j) {
  const json &sj = j.at("shape");
  std::string type = sj.at("type").get<std::string>();
  Shape shape;
  if (type == "sphere") {
    shape = Sphere{vec3_from(sj.at("center")), sj.at("radius").get<double>()};
  } else if (type == "box") {
    shape = BoxShape{vec3_from(sj.at("lo")), vec3_from(sj.at("hi"))};
  } else if (type == "level_set") {
    LevelSetShape ls;
    ls.origin = vec3_from(sj.at("origin"));
    ls.dx = sj.at("dx").get<double>();
    auto dims = sj.at("dims").get<std::vector<int>>();
    if (dims.size() != 3) throw ConfigError("scenario: level set dims must have 3 entries");
    ls.dims = {dims[0], dims[1], dims[2]};
    ls.phi = sj.at("values").get<std::vector<double>>();
    shape = std::move(ls);
  } else {
    throw ConfigError("scenario: shape type must be sphere, box or level_set");
  }

  const json &lj = j.at("lambda");
  std::string ltype = lj.at("type").get<std::string>();
  LambdaField lam;
  if (ltype == "constant") {
    lam = LambdaConstant{lj.at("value").get<double>()};
  } else if (ltype == "piecewise") {
    LambdaPiecewise pw;
    pw.fallback = lj.value("fallback", 0.0);
    for (const auto &r : lj.at("regions"))
      pw.regions.push_back({vec3_from(r.at("normal")), r.at("offset").get<double>(),
                            r.at("value").get<double>()});
    lam = std::move(pw);
  } else if (ltype == "table") {
    LambdaTable tb;
    for (const auto &p : lj.at("points")) tb.points.push_back(vec3_from(p));
    tb.values = lj.at("values").get<std::vector<double>>();
    lam = std::move(tb);
  } else {
    throw ConfigError("scenario: lambda type must be constant, piecewise or table");
  }
  return Obstacle(std::move(shape), std::move(lam));
}

json obstacle_to(const Obstacle &o) {
  json j;
  if (const auto *s = std::get_if<Sphere>(&o.shape())) {
    j["shape"] = {{"type", "sphere"}, {"center", vec3_to(s->center)}, {"radius", s->radius}};
  } else if (const auto *b = std::get_if<BoxShape>(&o.shape())) {
    j["shape"] = {{"type", "box"}, {"lo", vec3_to(b->lo)}, {"hi", vec3_to(b->hi)}};
  } else {
    const auto &ls = std::get<LevelSetShape>(o.shape());
    j["shape"] = {{"type", "level_set"},
                  {"origin", vec3_to(ls.origin)},
                  {"dx", ls.dx},
                  {"dims", {ls.dims[0], ls.dims[1], ls.dims[2]}},
                  {"values", ls.phi}};
  }
  if (const auto *c = std::get_if<LambdaConstant>(&o.lambda())) {
    j["lambda"] = {{"type", "constant"}, {"value", c->value}};
  } else if (const auto *pw = std::get_if<LambdaPiecewise>(&o.lambda())) {
    json regions = json::array();
    for (const auto &r : pw->regions)
      regions.push_back({{"normal", vec3_to(r.normal)}, {"offset", r.offset}, {"value", r.value}});
    j["lambda"] = {{"type", "piecewise"}, {"regions", regions}, {"fallback", pw->fallback}};
  } else {
    const auto &tb = std::get<LambdaTable>(o.lambda());
    json pts = json::array();
    for (const auto &p : tb.points) pts.push_back(vec3_to(p));
    j["lambda"] = {{"type", "table"}, {"points", pts}, {"values", tb.values}};
  }
  return j;
}

}  // namespace

Scenario scenario_from_json_text(const std::string &text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception &e) {
    throw ConfigError(std::string("scenario: invalid JSON: ") + e.what());
  }
  try {
    Scenario s;
    s.medium = MediumParams(j.at("medium").at("epsilon").get<double>(),
                            j.at("medium").at("mu").get<double>());
    const json &src = j.at("source");
    Vec3 center = vec3_from(src.at("center"));
    double eta = src.at("radius").get<double>();
    Pulse pulse = pulse_from(src.at("pulse"));
    const json &dirs = src.at("directions");
    if (!dirs.is_array() || dirs.size() != 2)
      throw ConfigError("scenario: source.directions must list two unit vectors");
    for (int i = 0; i < 2; ++i)
      s.sources[i] = SourceSpec{center, eta, vec3_from(dirs[i]).normalized(), pulse};
    s.obstacle = obstacle_from(j.at("obstacle"));
    s.grid.dx = j.at("grid").at("dx").get<double>();
    if (j.at("grid").contains("box")) {
      s.grid.box_lo = vec3_from(j.at("grid").at("box").at("lo"));
      s.grid.box_hi = vec3_from(j.at("grid").at("box").at("hi"));
    }
    s.time.T = j.at("time").at("T").get<double>();
    if (j.at("time").contains("dt")) s.time.dt = j.at("time").at("dt").get<double>();
    if (j.contains("tau_grid")) s.tau_grid = j.at("tau_grid").get<std::vector<double>>();
    if (j.contains("t_grid_for_sweep"))
      s.t_grid_for_sweep = j.at("t_grid_for_sweep").get<std::vector<double>>();
    s.validate();
    return s;
  } catch (const json::exception &e) {
    throw ConfigError(std::string("scenario: missing or malformed field: ") + e.what());
  }
}

Scenario load_scenario(const std::string &path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open scenario file: " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return scenario_from_json_text(ss.str());
}

std::string scenario_to_json_text(const Scenario &s) {
  json j;
  j["medium"] = {{"epsilon", s.medium.epsilon}, {"mu", s.medium.mu}};
  j["source"] = {{"center", vec3_to(s.sources[0].center)},
                 {"radius", s.sources[0].eta},
                 {"pulse", pulse_to(s.sources[0].pulse)},
                 {"directions", {vec3_to(s.sources[0].direction), vec3_to(s.sources[1].direction)}}};
  j["obstacle"] = obstacle_to(s.obstacle);
  j["grid"] = {{"dx", s.grid.dx}};
  if (s.grid.box_lo && s.grid.box_hi)
    j["grid"]["box"] = {{"lo", vec3_to(*s.grid.box_lo)}, {"hi", vec3_to(*s.grid.box_hi)}};
  j["time"] = {{"T", s.time.T}};
  if (s.time.dt) j["time"]["dt"] = *s.time.dt;
  if (!s.tau_grid.empty()) j["tau_grid"] = s.tau_grid;
  if (s.t_grid_for_sweep) j["t_grid_for_sweep"] = *s.t_grid_for_sweep;
  return j.dump(2);
}

uint64_t Scenario::hash() const {
  // FNV-1a over a canonical serialization; nlohmann orders keys, so the dump
  // is deterministic.
  std::string text = scenario_to_json_text(*this);
  uint64_t h = 1469598103934665603ull;
  for (unsigned char c : text) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

}  // namespace enclose
