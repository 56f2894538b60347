#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include "oracles/oracles.hpp"
#include "udw/app/figures.hpp"
#include "udw/app/scenario.hpp"
#include "udw/app/sweep.hpp"
#include "udw/app/table.hpp"

#ifndef UDW_TEST_DATA_DIR
#error "UDW_TEST_DATA_DIR must be defined"
#endif
#ifndef UDW_SCENARIO_DIR
#error "UDW_SCENARIO_DIR must be defined"
#endif

namespace {

using namespace udw;
using namespace udw::app;

std::string data(const std::string& name) { return std::string(UDW_TEST_DATA_DIR) + "/" + name; }
std::string scenario(const std::string& name) { return std::string(UDW_SCENARIO_DIR) + "/" + name; }

std::size_t column(const Table& t, const std::string& name) {
  for (std::size_t i = 0; i < t.columns.size(); ++i) {
    if (t.columns[i] == name) return i;
  }
  ADD_FAILURE() << "no column " << name;
  return 0;
}

double number(const Table& t, std::size_t row, const std::string& name) {
  const Cell& c = t.rows.at(row).at(column(t, name));
  if (const auto* d = std::get_if<double>(&c)) return *d;
  if (const auto* i = std::get_if<std::int64_t>(&c)) return static_cast<double>(*i);
  ADD_FAILURE() << name << " is not numeric";
  return std::nan("");
}

std::string text(const Table& t, std::size_t row, const std::string& name) {
  return std::get<std::string>(t.rows.at(row).at(column(t, name)));
}

std::string csv(const Table& t) {
  std::ostringstream out;
  write_csv(t, out);
  return out.str();
}

std::vector<std::string> split(const std::string& line) {
  std::vector<std::string> out(1);
  bool quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    const char ch = line[i];
    if (quoted) {
      if (ch == '"' && i + 1 < line.size() && line[i + 1] == '"') {
        out.back() += '"';
        ++i;
      } else if (ch == '"') {
        quoted = false;
      } else {
        out.back() += ch;
      }
    } else if (ch == '"') {
      quoted = true;
    } else if (ch == ',') {
      out.emplace_back();
    } else {
      out.back() += ch;
    }
  }
  return out;
}

TEST(LoadScenario, MinimalStaticPair) {
  const auto s = load_scenario(scenario("static_pair.json"));
  ASSERT_TRUE(s.pair.has_value());
  EXPECT_EQ(s.pair->geometry, motion::PairGeometry::kCoaxial);
  EXPECT_EQ(s.pair->circular_a().radius(), 0.0);
  EXPECT_EQ(s.pair->circular_b().radius(), 0.0);
  EXPECT_EQ(s.pair->delta_d, 0.5);
  EXPECT_EQ(s.params.omega_gap, 0.1);
}

TEST(LoadScenario, EveryShippedScenarioLoads) {
  for (const char* name : {"static_pair.json", "static_detector.json", "circular_detector.json",
                           "uniform_edr.json", "circular_small_speed.json", "corotating_pair.json",
                           "perpendicular_pair.json", "uniform_pair.json"}) {
    EXPECT_NO_THROW(load_scenario(scenario(name))) << name;
  }
}

TEST(LoadScenario, SuperluminalNamesField) {
  try {
    load_scenario(data("superluminal.json"));
    FAIL() << "accepted v = 1.5";
  } catch (const ScenarioError& e) {
    EXPECT_EQ(e.field(), "detector.v");
    EXPECT_NE(std::string(e.what()).find("not below 1"), std::string::npos);
  }
}

TEST(LoadScenario, SyntaxErrorHasPosition) {
  try {
    load_scenario(data("syntax_error.json"));
    FAIL() << "accepted malformed JSON";
  } catch (const ScenarioError& e) {
    EXPECT_TRUE(e.field().empty());
    EXPECT_NE(std::string(e.what()).find("line 2"), std::string::npos) << e.what();
  }
}

TEST(LoadScenario, SchemaErrors) {
  EXPECT_THROW(load_scenario(data("unknown_key.json")), ScenarioError);
  EXPECT_THROW(load_scenario(data("does_not_exist.json")), ScenarioError);
  auto field_of = [](const char* text) {
    try {
      build_scenario(parse_json_text(text));
    } catch (const ScenarioError& e) {
      return e.field();
    }
    return std::string("<accepted>");
  };
  EXPECT_EQ(field_of(R"({"detector": {"motion": "uniform"}})"), "detector.a");
  EXPECT_EQ(field_of(R"({"detector": {"motion": "warp"}})"), "detector.motion");
  EXPECT_EQ(field_of(R"({"detector": {"motion": "static"}, "omega_gap": "big"})"), "omega_gap");
  EXPECT_EQ(field_of(R"({"geometry": "coaxial", "detector_a": {"motion": "static"}})"), "detector_b");
  EXPECT_EQ(field_of(R"({"detector": {"motion": "static"}, "detector_a": {"motion": "static"}})"), "detector_a");
  EXPECT_EQ(field_of(R"({"detector_a": {"motion": "static"}, "detector_b": {"motion": "static"}, "delta_d": -1})"),
            "delta_d");
  EXPECT_EQ(field_of(R"({"geometry": "uniform-pair", "detector_a": {"motion": "static"}, "detector_b": {"motion": "static"}})"),
            "geometry");
  EXPECT_EQ(field_of(R"([1, 2])"), "");
}

TEST(LoadScenario, AlternativeKinematics) {
  const auto a = build_scenario(parse_json_text(R"({"detector": {"R": 0.5625, "a": 1.0}})"));
  const auto& c = std::get<motion::CircularTrajectory>(a.single);
  EXPECT_NEAR(c.speed(), 0.6, 1e-12);
  const auto b = build_scenario(parse_json_text(R"({"detector": {"a": 1.0, "v": 0.6, "sense": -1}})"));
  EXPECT_LT(std::get<motion::CircularTrajectory>(b.single).omega(), 0.0);
}

TEST(Sweep, StaticTwoPoint) {
  const Json tree = parse_json_text(R"({"detector": {"motion": "static"}})");
  const auto t = run_sweep(Quantity::kTransition, tree, parse_sweep("omega_gap=0:1:2"), {});
  ASSERT_EQ(t.rows.size(), 2u);
  EXPECT_EQ(t.columns.front(), "omega_gap");
  EXPECT_NEAR(number(t, 0, "P"), 1.0 / (4.0 * std::numbers::pi), 1e-15);
  EXPECT_NEAR(number(t, 1, "P"), oracle::static_p(1.0), 1e-15);
  EXPECT_EQ(text(t, 0, "status"), "ok");
}

TEST(Sweep, GridShapes) {
  const auto lin = parse_sweep("detector.a=1:3:3").grid();
  EXPECT_EQ(lin, (std::vector<double>{1.0, 2.0, 3.0}));
  const auto lg = parse_sweep("detector.a=0.1:10:3:log").grid();
  ASSERT_EQ(lg.size(), 3u);
  EXPECT_NEAR(lg[1], 1.0, 1e-15);
  EXPECT_EQ(lg.back(), 10.0);
  EXPECT_EQ(parse_sweep("detector.a=1:3").points, 60);
}

TEST(Sweep, ParseErrors) {
  for (const char* bad : {"detector.a", "detector.a=1:3:1", "detector.a=3:1:5", "detector.a=0:1:4:log",
                          "detector.a=a:b:3", "=1:2:3", "detector.a=1:2:3:cubic", "detector.a*x=1:2:3"}) {
    EXPECT_THROW(parse_sweep(bad), InvalidArgument) << bad;
  }
}

TEST(Sweep, FactorsAndMultipleTargets) {
  const Json tree = parse_json_text(
      R"({"detector_a": {"a": 1.0, "R": 0.5}, "detector_b": {"a": 1.0, "R": 0.5}, "delta_d": 0.1})");
  const auto spec = parse_sweep("detector_a.a,detector_b.a*2=1:2:2");
  const Json j = apply_sweep(tree, spec, 1.5);
  EXPECT_EQ(j["detector_a"]["a"].get<double>(), 1.5);
  EXPECT_EQ(j["detector_b"]["a"].get<double>(), 3.0);
  EXPECT_THROW(apply_sweep(tree, parse_sweep("detector_a.v=0:1:2"), 0.5), ScenarioError);
  EXPECT_THROW(apply_sweep(tree, parse_sweep("detector_c.a=0:1:2"), 0.5), ScenarioError);
}

TEST(Sweep, PointFailuresStayInRow) {
  const Json tree = parse_json_text(R"({"detector": {"a": 1.0, "v": 0.5}, "omega_gap": 0.1})");
  const auto t = run_sweep(Quantity::kTransition, tree, parse_sweep("detector.v=0.5:1.5:3"), {});
  ASSERT_EQ(t.rows.size(), 3u);
  EXPECT_EQ(text(t, 0, "status"), "ok");
  EXPECT_EQ(text(t, 2, "status"), "error");
  EXPECT_TRUE(std::isnan(number(t, 2, "P")));
  EXPECT_NE(text(t, 2, "message").find("not below 1"), std::string::npos);
}

TEST(Sweep, DeterministicAcrossWorkers) {
  const Json tree = load_scenario(scenario("corotating_pair.json")).source;
  const auto spec = parse_sweep("delta_d=0.1:2:7");
  RunOptions one;
  RunOptions many;
  many.workers = 4;
  EXPECT_EQ(csv(run_sweep(Quantity::kHarvest, tree, spec, one)),
            csv(run_sweep(Quantity::kHarvest, tree, spec, many)));
}

TEST(Sweep, HarvestColumns) {
  const Json tree = load_scenario(scenario("static_pair.json")).source;
  const auto t = run_sweep(Quantity::kHarvest, tree, std::nullopt, {});
  ASSERT_EQ(t.rows.size(), 1u);
  const auto ref = oracle::static_pair_x(0.5, 0.1);
  EXPECT_NEAR(number(t, 0, "X_re"), ref.real(), 1e-8);
  EXPECT_NEAR(number(t, 0, "X_im"), ref.imag(), 1e-8);
  EXPECT_EQ(text(t, 0, "reduction"), "comoving-equal");
  EXPECT_GT(number(t, 0, "concurrence"), 0.0);
}

TEST(Sweep, EdrColumnsAndTiming) {
  const Json tree = load_scenario(scenario("static_detector.json")).source;
  RunOptions o;
  o.timing = true;
  Json t1 = tree;
  t1["omega_gap"] = 1.0;
  const auto t = run_sweep(Quantity::kEdr, t1, std::nullopt, o);
  EXPECT_EQ(t.columns.back(), "wall_time_s");
  EXPECT_NEAR(number(t, 0, "T_EDR"), -1.0 / std::log(oracle::static_p(1.0) / oracle::static_p(-1.0)), 1e-10);
}

TEST(Quantities, Names) {
  EXPECT_EQ(parse_quantity("x"), Quantity::kHarvest);
  EXPECT_EQ(parse_quantity("concurrence"), Quantity::kHarvest);
  EXPECT_EQ(parse_quantity(to_string(Quantity::kEdr)), Quantity::kEdr);
  EXPECT_THROW(parse_quantity("entropy"), InvalidArgument);
  EXPECT_EQ(parse_format("csv"), Format::kCsv);
  EXPECT_THROW(parse_format("xml"), InvalidArgument);
}

TEST(Emit, EmptyTableIsHeaderOnly) {
  Table t;
  t.columns = {"a", "b"};
  EXPECT_EQ(csv(t), "a,b\n");
  std::ostringstream j;
  write_json(t, j);
  EXPECT_EQ(nlohmann::json::parse(j.str()), nlohmann::json::array());
}

TEST(Emit, CsvRoundTrip) {
  Table t;
  t.columns = {"x", "n", "note"};
  t.rows.push_back({0.1, std::int64_t{3}, std::string("plain")});
  t.rows.push_back({1.0 / 3.0, std::int64_t{-7}, std::string("has, comma and \"quote\"")});
  t.rows.push_back({-2.5e-300, std::int64_t{0}, std::string("")});
  std::istringstream in(csv(t));
  std::string line;
  std::getline(in, line);
  EXPECT_EQ(split(line), t.columns);
  for (const auto& row : t.rows) {
    ASSERT_TRUE(std::getline(in, line));
    const auto f = split(line);
    ASSERT_EQ(f.size(), 3u);
    EXPECT_EQ(std::stod(f[0]), std::get<double>(row[0]));
    EXPECT_EQ(std::stoll(f[1]), std::get<std::int64_t>(row[1]));
    EXPECT_EQ(f[2], std::get<std::string>(row[2]));
  }
}

TEST(Emit, JsonMirrorsCsv) {
  Table t;
  t.columns = {"x", "status"};
  t.rows.push_back({0.1 + 0.2, std::string("ok")});
  t.rows.push_back({std::nan(""), std::string("error")});
  std::ostringstream j;
  write_json(t, j);
  const auto parsed = nlohmann::ordered_json::parse(j.str());
  ASSERT_EQ(parsed.size(), 2u);
  EXPECT_EQ(parsed[0]["x"].get<double>(), 0.1 + 0.2);
  EXPECT_EQ(parsed[0].begin().key(), "x");
  EXPECT_TRUE(parsed[1]["x"].is_null());
  EXPECT_EQ(format_double(0.1), "0.10000000000000001");
}

TEST(Emit, UnwritablePath) {
  Table t;
  t.columns = {"a"};
  EXPECT_THROW(emit(t, Format::kCsv, "/nonexistent-dir/out.csv"), Error);
}

TEST(Figures, CaptionParameters) {
  for (const char* id : {"fig5a", "fig5b"}) {
    const auto f = figure_preset(id);
    EXPECT_EQ(f.quantity, Quantity::kHarvest);
    for (const auto& c : f.curves) {
      EXPECT_EQ(c.scenario["detector_a"]["a"].get<double>(), 1.0) << c.label;
      EXPECT_EQ(c.scenario["omega_gap"].get<double>(), 0.1);
      EXPECT_EQ(c.sweep.targets.at(0).path, "delta_d");
      EXPECT_EQ(c.sweep.points, 60);
    }
  }
  const auto co = figure_preset("fig5a").curves.front();
  EXPECT_EQ(co.scenario["detector_a"]["sense"], co.scenario["detector_b"]["sense"]);
  const auto counter = figure_preset("fig5b").curves.front();
  EXPECT_NE(counter.scenario["detector_a"]["sense"], counter.scenario["detector_b"]["sense"]);
  for (const char* id : {"fig6a", "fig6b", "fig7", "fig11"}) {
    for (const auto& c : figure_preset(id).curves) {
      EXPECT_EQ(c.scenario["delta_d"].get<double>(), 0.1) << id;
      EXPECT_EQ(c.scenario["omega_gap"].get<double>(), 0.1) << id;
    }
  }
  for (const char* id : {"fig1", "fig4"}) {
    for (const auto& c : figure_preset(id).curves) EXPECT_EQ(c.scenario["omega_gap"].get<double>(), 0.1);
  }
}

TEST(Figures, StatedLegendsAreNotApproximate) {
  for (const auto& c : figure_preset("fig5a").curves) {
    EXPECT_EQ(c.approximate, !(c.label == "R=2" || c.label == "uniform")) << c.label;
  }
}

TEST(Figures, EveryPresetBuildsAndValidates) {
  for (const auto& id : figure_ids()) {
    const auto f = figure_preset(id, 3);
    EXPECT_FALSE(f.curves.empty()) << id;
    for (const auto& c : f.curves) {
      EXPECT_EQ(c.sweep.points, 3);
      for (double x : c.sweep.grid()) EXPECT_NO_THROW(build_scenario(apply_sweep(c.scenario, c.sweep, x))) << id;
    }
  }
  EXPECT_THROW(figure_preset("fig14"), InvalidArgument);
}

TEST(Figures, RunProducesLongTable) {
  const auto t = run_figure(figure_preset("fig2", 4), {});
  EXPECT_EQ(t.columns.at(0), "curve");
  EXPECT_EQ(t.columns.at(1), "approximate");
  EXPECT_EQ(t.rows.size(), 4u * figure_preset("fig2").curves.size());
  for (std::size_t i = 0; i < t.rows.size(); ++i) EXPECT_EQ(text(t, i, "status"), "ok");
}

}  // namespace
