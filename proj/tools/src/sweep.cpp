#include "udw/app/sweep.hpp"

#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <sstream>
#include <thread>

#include "udw/harvesting/harvest.hpp"
#include "udw/response/edr.hpp"
#include "udw/response/transition.hpp"

namespace udw::app {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> parts;
  std::string cur;
  std::istringstream in(s);
  while (std::getline(in, cur, sep)) parts.push_back(cur);
  if (!s.empty() && s.back() == sep) parts.emplace_back();
  return parts;
}

double parse_number(const std::string& s, const std::string& what) {
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(s, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != s.size()) {
    throw InvalidArgument("sweep: cannot read " + what + " from '" + s + "'");
  }
  return v;
}

std::vector<std::string> quantity_columns(Quantity q) {
  switch (q) {
    case Quantity::kTransition:
      return {"P", "P_error", "static_part", "evaluations"};
    case Quantity::kEdr:
      return {"T_EDR", "F_plus", "F_minus", "F_plus_error", "F_minus_error"};
    case Quantity::kHarvest:
      return {"P_A", "P_B", "X_re", "X_im", "X_abs", "concurrence",
              "P_A_error", "P_B_error", "X_error", "reduction"};
  }
  return {};
}

std::vector<Cell> failed_cells(Quantity q) {
  std::vector<Cell> cells;
  for (const auto& c : quantity_columns(q)) {
    if (c == "reduction") {
      cells.emplace_back(std::string());
    } else if (c == "evaluations") {
      cells.emplace_back(std::int64_t{0});
    } else {
      cells.emplace_back(kNaN);
    }
  }
  return cells;
}

std::vector<Cell> evaluate(Quantity q, const Json& tree, const RunOptions& options) {
  const Scenario s = build_scenario(tree);
  const double tol_p = options.tol.value_or(response::kDefaultTolerance);
  switch (q) {
    case Quantity::kTransition: {
      response::ResponseResult r;
      if (const auto* c = std::get_if<motion::CircularTrajectory>(&s.single)) {
        r = response::transition_probability_circular(*c, s.params, tol_p);
      } else {
        r = response::transition_probability_uniform(std::get<motion::UniformTrajectory>(s.single),
                                                     s.params, tol_p);
      }
      return {r.value, r.abs_error_estimate, r.static_part,
              static_cast<std::int64_t>(r.evaluations)};
    }
    case Quantity::kEdr: {
      response::EdrResult r;
      if (const auto* c = std::get_if<motion::CircularTrajectory>(&s.single)) {
        r = response::edr_circular(*c, s.params, tol_p);
      } else {
        r = response::edr_uniform(std::get<motion::UniformTrajectory>(s.single), s.params, tol_p);
      }
      return {r.temperature, r.plus.value, r.minus.value, r.plus.abs_error_estimate,
              r.minus.abs_error_estimate};
    }
    case Quantity::kHarvest: {
      if (!s.pair) throw ScenarioError("detector_b", "harvest needs a detector pair");
      harvesting::HarvestTolerances tol;
      if (options.tol) {
        tol.probability = *options.tol;
        tol.x_one_dimensional = *options.tol;
        tol.x_two_dimensional = *options.tol;
      }
      const auto r = harvesting::harvest(*s.pair, tol);
      return {r.p_a, r.p_b, r.x.real(), r.x.imag(), std::abs(r.x), r.concurrence,
              r.p_a_error, r.p_b_error, r.x_error, harvesting::to_string(r.reduction)};
    }
  }
  return {};
}

Json* locate(Json& tree, const std::string& path) {
  Json* node = &tree;
  for (const auto& key : split(path, '.')) {
    if (key.empty() || !node->is_object()) return nullptr;
    const auto it = node->find(key);
    if (it == node->end()) return nullptr;
    node = &*it;
  }
  return node;
}

}  // namespace

Quantity parse_quantity(const std::string& name) {
  if (name == "transition") return Quantity::kTransition;
  if (name == "edr") return Quantity::kEdr;
  if (name == "harvest" || name == "x" || name == "concurrence") return Quantity::kHarvest;
  throw InvalidArgument("unknown quantity '" + name + "'");
}

std::string to_string(Quantity quantity) {
  switch (quantity) {
    case Quantity::kTransition:
      return "transition";
    case Quantity::kEdr:
      return "edr";
    case Quantity::kHarvest:
      return "harvest";
  }
  return "unknown";
}

std::vector<double> SweepSpec::grid() const {
  validate();
  std::vector<double> g(static_cast<std::size_t>(points));
  for (int i = 0; i < points; ++i) {
    const double t = static_cast<double>(i) / (points - 1);
    if (i == points - 1) {
      g[i] = stop;
    } else if (log) {
      g[i] = std::exp(std::log(start) + t * (std::log(stop) - std::log(start)));
    } else {
      g[i] = start + t * (stop - start);
    }
  }
  return g;
}

void SweepSpec::validate() const {
  if (targets.empty()) throw InvalidArgument("sweep: no parameter given");
  if (points < 2) throw InvalidArgument("sweep: need at least 2 points");
  if (!(start < stop)) throw InvalidArgument("sweep: need start < stop");
  if (log && !(start > 0.0)) throw InvalidArgument("sweep: a log grid needs start > 0");
  for (const auto& t : targets) {
    if (t.path.empty()) throw InvalidArgument("sweep: empty parameter path");
    if (!std::isfinite(t.factor)) throw InvalidArgument("sweep: factor must be finite");
  }
}

SweepSpec parse_sweep(const std::string& text) {
  const auto eq = text.find('=');
  if (eq == std::string::npos) {
    throw InvalidArgument("sweep: expected path=start:stop:points[:log], got '" + text + "'");
  }
  SweepSpec spec;
  spec.label = text.substr(0, eq);
  for (const auto& item : split(text.substr(0, eq), ',')) {
    SweepTarget t;
    const auto star = item.find('*');
    t.path = item.substr(0, star);
    if (star != std::string::npos) t.factor = parse_number(item.substr(star + 1), "factor");
    spec.targets.push_back(t);
  }
  const auto range = split(text.substr(eq + 1), ':');
  if (range.size() < 2 || range.size() > 4) {
    throw InvalidArgument("sweep: range must be start:stop[:points[:log]]");
  }
  spec.start = parse_number(range[0], "start");
  spec.stop = parse_number(range[1], "stop");
  if (range.size() >= 3) {
    const double n = parse_number(range[2], "points");
    if (n != std::floor(n) || n > 1e7) throw InvalidArgument("sweep: points must be an integer");
    spec.points = static_cast<int>(n);
  }
  if (range.size() == 4) {
    if (range[3] == "log") {
      spec.log = true;
    } else if (range[3] != "lin" && range[3] != "linear") {
      throw InvalidArgument("sweep: scale must be log or linear, got '" + range[3] + "'");
    }
  }
  spec.validate();
  return spec;
}

namespace {

// Top-level keys that take a default when absent from the file.
bool is_defaulted_key(const Json& tree, const std::string& path) {
  if (path == "omega_gap" || path == "sigma") return true;
  return path == "delta_d" && (tree.contains("detector_b") || tree.contains("geometry"));
}

}  // namespace

Json apply_sweep(const Json& tree, const SweepSpec& spec, double x) {
  Json out = tree;
  for (const auto& t : spec.targets) {
    Json* node = locate(out, t.path);
    if (!node && out.is_object() && is_defaulted_key(out, t.path)) node = &(out[t.path] = 0.0);
    if (!node) throw ScenarioError(t.path, "swept parameter is not present in the scenario");
    *node = t.factor * x;
  }
  return out;
}

unsigned default_workers() {
  if (const char* env = std::getenv("UDW_WORKERS")) {
    char* end = nullptr;
    const long n = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && n > 0 && n <= 1024) return static_cast<unsigned>(n);
  }
  return 1;
}

Table run_sweep(Quantity quantity, const Json& scenario, const std::optional<SweepSpec>& sweep,
                const RunOptions& options) {
  Table table;
  std::vector<double> grid;
  if (sweep) {
    grid = sweep->grid();
    table.columns.push_back(sweep->label);
    apply_sweep(scenario, *sweep, sweep->start);
  } else {
    grid.push_back(kNaN);
  }
  for (const auto& c : quantity_columns(quantity)) table.columns.push_back(c);
  table.columns.push_back("status");
  table.columns.push_back("message");
  if (options.timing) table.columns.push_back("wall_time_s");

  table.rows.resize(grid.size());
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i = next++; i < grid.size(); i = next++) {
      const auto t0 = std::chrono::steady_clock::now();
      std::vector<Cell> row;
      if (sweep) row.emplace_back(grid[i]);
      std::string status = "ok";
      std::string message;
      try {
        const Json tree = sweep ? apply_sweep(scenario, *sweep, grid[i]) : scenario;
        for (auto& c : evaluate(quantity, tree, options)) row.push_back(std::move(c));
      } catch (const std::exception& e) {
        row.resize(sweep ? 1 : 0);
        for (auto& c : failed_cells(quantity)) row.push_back(std::move(c));
        status = "error";
        message = e.what();
      }
      row.emplace_back(status);
      row.emplace_back(message);
      if (options.timing) {
        row.emplace_back(
            std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count());
      }
      table.rows[i] = std::move(row);
    }
  };
  const unsigned n = std::max(1u, std::min<unsigned>(options.workers, grid.size()));
  if (n == 1) {
    work();
  } else {
    std::vector<std::thread> threads;
    for (unsigned k = 0; k < n; ++k) threads.emplace_back(work);
    for (auto& th : threads) th.join();
  }
  return table;
}

}  // namespace udw::app
