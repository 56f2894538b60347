#pragma once

#include <string>
#include <vector>

#include "udw/app/sweep.hpp"

namespace udw::app {

/// One curve of a figure: a scenario and the grid it is swept over.
struct FigureCurve {
  std::string label;
  /// Set when the curve's legend value is not stated in the caption or text.
  bool approximate = false;
  Json scenario;
  SweepSpec sweep;
};

struct FigurePreset {
  std::string id;
  std::string description;
  Quantity quantity = Quantity::kTransition;
  std::vector<FigureCurve> curves;
};

std::vector<std::string> figure_ids();

/// Throws InvalidArgument for an unknown id. `points` overrides the grid size
/// when positive.
FigurePreset figure_preset(const std::string& id, int points = 0);

/// Long-format table: curve and approximate columns followed by the sweep
/// columns, one block of rows per curve.
Table run_figure(const FigurePreset& preset, const RunOptions& options);

}  // namespace udw::app
