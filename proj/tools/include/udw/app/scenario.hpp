#pragma once

#include <optional>
#include <string>

#include "json.hpp"

#include "udw/errors.hpp"
#include "udw/motion/trajectory.hpp"

namespace udw::app {

using Json = nlohmann::ordered_json;

/// Scenario file could not be parsed or failed validation. `field` is the
/// dotted path of the offending key, empty for syntax errors.
class ScenarioError : public Error {
 public:
  ScenarioError(const std::string& field, const std::string& what)
      : Error(field.empty() ? what : field + ": " + what), field_(field) {}
  const std::string& field() const noexcept { return field_; }

 private:
  std::string field_;
};

/// Everything a scenario file can describe. `pair` is set when the file has a
/// second detector or a pair geometry; `single` is detector_a on its own.
struct Scenario {
  Json source;
  motion::DetectorParams params;
  motion::Trajectory single = motion::CircularTrajectory(0.0, 0.0);
  std::optional<motion::PairScenario> pair;
};

/// Parses JSON text. Syntax errors carry line and column.
Json parse_json_text(const std::string& text, const std::string& origin = "<input>");

/// Reads and parses a scenario file.
Json read_scenario_file(const std::string& path);

/// Builds and validates a scenario from a JSON tree.
Scenario build_scenario(const Json& tree);

Scenario load_scenario(const std::string& path);

}  // namespace udw::app
