#include "udw/app/scenario.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

namespace udw::app {

namespace {

std::string join(const std::string& prefix, const std::string& key) {
  return prefix.empty() ? key : prefix + "." + key;
}

std::optional<double> number(const Json& obj, const std::string& key, const std::string& prefix) {
  const auto it = obj.find(key);
  if (it == obj.end() || it->is_null()) return std::nullopt;
  if (!it->is_number()) throw ScenarioError(join(prefix, key), "expected a number");
  return it->get<double>();
}

double required(const Json& obj, const std::string& key, const std::string& prefix) {
  const auto v = number(obj, key, prefix);
  if (!v) throw ScenarioError(join(prefix, key), "missing");
  return *v;
}

template <class F>
auto guarded(const std::string& field, F f) {
  try {
    return f();
  } catch (const ScenarioError&) {
    throw;
  } catch (const Error& e) {
    throw ScenarioError(field, e.what());
  }
}

void reject_unknown(const Json& obj, const std::string& prefix,
                    std::initializer_list<const char*> allowed) {
  for (const auto& [key, value] : obj.items()) {
    bool ok = false;
    for (const char* a : allowed) ok = ok || key == a;
    if (!ok) throw ScenarioError(join(prefix, key), "unknown key");
  }
}

motion::Trajectory detector(const Json& obj, const std::string& prefix) {
  if (!obj.is_object()) throw ScenarioError(prefix, "expected an object");
  reject_unknown(obj, prefix, {"motion", "R", "omega", "a", "v", "sense"});
  std::string kind = "circular";
  if (const auto it = obj.find("motion"); it != obj.end()) {
    if (!it->is_string()) throw ScenarioError(join(prefix, "motion"), "expected a string");
    kind = it->get<std::string>();
  }
  if (kind == "uniform") {
    const double a = required(obj, "a", prefix);
    return guarded(join(prefix, "a"), [&] { return motion::Trajectory(motion::UniformTrajectory(a)); });
  }
  if (kind == "static") return motion::CircularTrajectory(0.0, 0.0);
  if (kind != "circular") {
    throw ScenarioError(join(prefix, "motion"),
                        "expected circular, uniform or static, got '" + kind + "'");
  }
  const auto r = number(obj, "R", prefix);
  const auto w = number(obj, "omega", prefix);
  const auto a = number(obj, "a", prefix);
  const auto v = number(obj, "v", prefix);
  const auto sense = number(obj, "sense", prefix);
  const int given = (r ? 1 : 0) + (w ? 1 : 0) + (a ? 1 : 0) + (v ? 1 : 0);
  if (given != 2) {
    throw ScenarioError(prefix, "give exactly two of R, omega, a, v (got " +
                                    std::to_string(given) + ")");
  }
  if (sense && w) throw ScenarioError(join(prefix, "sense"), "omega already carries the sense");
  const double s = sense.value_or(1.0);
  const auto build = [&]() -> motion::CircularTrajectory {
    if (r && w) return motion::CircularTrajectory(*r, *w);
    if (a && v) return motion::CircularTrajectory::from_acceleration_speed(*a, *v, s);
    if (a && r) return motion::CircularTrajectory::from_acceleration_radius(*a, *r, s);
    if (w && v) return motion::CircularTrajectory::from_angular_velocity_speed(*w, *v);
    if (r && v) {
      if (*r == 0.0) return motion::CircularTrajectory(0.0, 0.0);
      return motion::CircularTrajectory(*r, s * *v / *r);
    }
    // omega and a: a = omega^2 R / (1 - omega^2 R^2) solved for R.
    const double ww = *w * *w;
    if (ww == 0.0) {
      if (*a != 0.0) throw InvalidArgument("omega = 0 cannot carry a nonzero acceleration");
      return motion::CircularTrajectory(0.0, 0.0);
    }
    const double radius = 2.0 * *a / (ww + std::sqrt(ww * ww + 4.0 * *a * *a * ww));
    return motion::CircularTrajectory(radius, *w);
  };
  const std::string field = v ? join(prefix, "v") : prefix;
  return guarded(field, build);
}

std::string line_column(const std::string& text, std::size_t byte) {
  std::size_t line = 1;
  std::size_t column = 1;
  for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      column = 1;
    } else {
      ++column;
    }
  }
  return "line " + std::to_string(line) + ", column " + std::to_string(column);
}

}  // namespace

Json parse_json_text(const std::string& text, const std::string& origin) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    // The reported byte is one past the offending character.
    const std::size_t byte = e.byte > 0 ? e.byte - 1 : 0;
    std::string detail = e.what();
    if (const auto pos = detail.find("syntax error"); pos != std::string::npos) {
      detail = detail.substr(pos);
    }
    throw ScenarioError("", origin + ": parse error at " + line_column(text, byte) + ": " + detail);
  }
}

Json read_scenario_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ScenarioError("", "cannot open scenario file '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_json_text(buffer.str(), path);
}

Scenario build_scenario(const Json& tree) {
  if (!tree.is_object()) throw ScenarioError("", "scenario must be a JSON object");
  reject_unknown(tree, "", {"geometry", "detector", "detector_a", "detector_b", "delta_d",
                            "omega_gap", "sigma", "description"});
  Scenario s;
  s.source = tree;
  s.params.omega_gap = number(tree, "omega_gap", "").value_or(0.0);
  s.params.sigma = number(tree, "sigma", "").value_or(1.0);
  guarded("sigma", [&] {
    s.params.validate();
    return 0;
  });

  const bool has_a = tree.contains("detector_a");
  const bool has_single = tree.contains("detector");
  if (has_a == has_single) throw ScenarioError("detector_a", "give exactly one of detector or detector_a");
  const std::string first = has_a ? "detector_a" : "detector";
  s.single = detector(tree.at(first), first);

  const bool pair = tree.contains("detector_b") || tree.contains("geometry");
  if (!pair) {
    if (tree.contains("delta_d")) throw ScenarioError("delta_d", "only meaningful for a pair");
    return s;
  }
  if (!tree.contains("detector_b")) throw ScenarioError("detector_b", "missing");
  const motion::Trajectory b = detector(tree.at("detector_b"), "detector_b");
  const double dd = number(tree, "delta_d", "").value_or(0.0);
  std::string geometry_name;
  const bool uniform = std::holds_alternative<motion::UniformTrajectory>(s.single);
  if (const auto it = tree.find("geometry"); it != tree.end()) {
    if (!it->is_string()) throw ScenarioError("geometry", "expected a string");
    geometry_name = it->get<std::string>();
  } else {
    geometry_name = uniform ? "uniform-pair" : "coaxial";
  }
  const motion::PairGeometry geometry =
      guarded("geometry", [&] { return motion::parse_geometry(geometry_name); });

  s.pair = guarded("geometry", [&]() -> motion::PairScenario {
    if (dd < 0.0) throw ScenarioError("delta_d", "must be non-negative");
    if (geometry == motion::PairGeometry::kUniformPair) {
      const auto* ua = std::get_if<motion::UniformTrajectory>(&s.single);
      const auto* ub = std::get_if<motion::UniformTrajectory>(&b);
      if (!ua || !ub) throw ScenarioError("geometry", "uniform-pair needs two uniform detectors");
      if (ua->acceleration() != ub->acceleration()) {
        throw ScenarioError("detector_b.a", "uniform-pair needs equal accelerations");
      }
      return motion::PairScenario::uniform_pair(ua->acceleration(), dd, s.params);
    }
    const auto* ca = std::get_if<motion::CircularTrajectory>(&s.single);
    const auto* cb = std::get_if<motion::CircularTrajectory>(&b);
    if (!ca || !cb) throw ScenarioError("geometry", geometry_name + " needs two circular detectors");
    if (geometry == motion::PairGeometry::kCoaxial) {
      return motion::PairScenario::coaxial(*ca, *cb, dd, s.params);
    }
    return motion::PairScenario::perpendicular(*ca, *cb, dd, s.params);
  });
  return s;
}

Scenario load_scenario(const std::string& path) { return build_scenario(read_scenario_file(path)); }

}  // namespace udw::app
