#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "udw/app/figures.hpp"
#include "udw/app/scenario.hpp"
#include "udw/app/sweep.hpp"
#include "udw/app/table.hpp"

namespace {

struct Common {
  std::string scenario;
  std::string sweep;
  std::string out = "-";
  std::string format = "csv";
  std::optional<double> tol;
  unsigned workers = 0;
  bool timing = false;
};

void add_output_flags(CLI::App* cmd, Common& c) {
  cmd->add_option("--out", c.out, "Output path, - for stdout");
  cmd->add_option("--format", c.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
  cmd->add_option("--tol", c.tol, "Absolute tolerance for every quadrature")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--workers", c.workers, "Concurrent sweep points (default UDW_WORKERS or 1)");
  cmd->add_flag("--timing", c.timing, "Add a wall_time_s column");
}

udw::app::RunOptions run_options(const Common& c) {
  udw::app::RunOptions o;
  o.tol = c.tol;
  o.workers = c.workers > 0 ? c.workers : udw::app::default_workers();
  o.timing = c.timing;
  return o;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Unruh-DeWitt detector responses, EDR temperatures and harvested entanglement"};
  app.require_subcommand(1);

  Common c;
  std::string figure_id;
  int points = 0;
  bool list = false;

  for (const char* name : {"transition", "edr", "harvest"}) {
    auto* cmd = app.add_subcommand(name);
    cmd->add_option("--scenario", c.scenario, "Scenario JSON file")->required();
    cmd->add_option("--sweep", c.sweep, "path[*k][,path...]=start:stop[:points[:log]]");
    add_output_flags(cmd, c);
  }
  app.get_subcommand("transition")->description("Transition probability P / lambda^2");
  app.get_subcommand("edr")->description("EDR temperature from P at +Omega and -Omega");
  app.get_subcommand("harvest")->description("P_A, P_B, X and concurrence for a pair");

  auto* fig = app.add_subcommand("figure", "Run a figure preset");
  fig->add_option("--id", figure_id, "Preset id, e.g. fig5a");
  fig->add_option("--points", points, "Grid points per curve")->check(CLI::Range(2, 100000));
  fig->add_flag("--list", list, "List preset ids");
  add_output_flags(fig, c);

  CLI11_PARSE(app, argc, argv);

  try {
    const auto format = udw::app::parse_format(c.format);
    if (fig->parsed()) {
      if (list) {
        for (const auto& id : udw::app::figure_ids()) {
          std::cout << id << "  " << udw::app::figure_preset(id).description << "\n";
        }
        return 0;
      }
      if (figure_id.empty()) {
        std::cerr << "error: figure needs --id (or --list)\n";
        return 2;
      }
      const auto preset = udw::app::figure_preset(figure_id, points);
      udw::app::emit(udw::app::run_figure(preset, run_options(c)), format, c.out);
      return 0;
    }
    const auto* sub = app.get_subcommands().front();
    const auto quantity = udw::app::parse_quantity(sub->get_name());
    const auto tree = udw::app::read_scenario_file(c.scenario);
    udw::app::build_scenario(tree);
    std::optional<udw::app::SweepSpec> sweep;
    if (!c.sweep.empty()) sweep = udw::app::parse_sweep(c.sweep);
    const auto table = udw::app::run_sweep(quantity, tree, sweep, run_options(c));
    udw::app::emit(table, format, c.out);
    for (const auto& row : table.rows) {
      if (std::get<std::string>(row[row.size() - (c.timing ? 3 : 2)]) != "ok") return 3;
    }
    return 0;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
