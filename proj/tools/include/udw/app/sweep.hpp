#pragma once

#include <optional>
#include <string>
#include <vector>

#include "udw/app/scenario.hpp"
#include "udw/app/table.hpp"

namespace udw::app {

enum class Quantity { kTransition, kEdr, kHarvest };

/// Accepts transition, edr, harvest, and x or concurrence (both run a harvest).
Quantity parse_quantity(const std::string& name);
std::string to_string(Quantity quantity);

/// One scenario key set by a sweep, to `factor` times the grid value.
struct SweepTarget {
  std::string path;
  double factor = 1.0;
};

/// Grid over one variable applied to one or more scenario keys.
///
/// Text form: path[*factor][,path[*factor]...]=start:stop[:points[:log]].
struct SweepSpec {
  std::vector<SweepTarget> targets;
  double start = 0.0;
  double stop = 1.0;
  int points = 60;
  bool log = false;
  /// Column header for the grid value.
  std::string label;

  std::vector<double> grid() const;
  void validate() const;
};

SweepSpec parse_sweep(const std::string& text);

/// Copy of `tree` with every sweep target set for grid value `x`. omega_gap,
/// sigma and a pair's delta_d are created when absent; any other missing
/// target throws ScenarioError.
Json apply_sweep(const Json& tree, const SweepSpec& spec, double x);

struct RunOptions {
  /// Overrides every quadrature tolerance when set.
  std::optional<double> tol;
  unsigned workers = 1;
  bool timing = false;
};

/// Evaluates the quantity at every grid point (or once without a sweep).
/// Rows come out in grid order whatever the worker count; failures land in
/// the status and message columns.
Table run_sweep(Quantity quantity, const Json& scenario, const std::optional<SweepSpec>& sweep,
                const RunOptions& options);

/// Worker count from UDW_WORKERS, else 1.
unsigned default_workers();

}  // namespace udw::app
