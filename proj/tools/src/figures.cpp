#include "udw/app/figures.hpp"

#include <cstdio>

namespace udw::app {

namespace {

constexpr double kGap = 0.1;

std::string num(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%g", x);
  return buf;
}

SweepSpec grid(const std::string& label, std::vector<SweepTarget> targets, double start,
               double stop, int points, bool log = false) {
  SweepSpec s;
  s.label = label;
  s.targets = std::move(targets);
  s.start = start;
  s.stop = stop;
  s.points = points;
  s.log = log;
  s.validate();
  return s;
}

Json circular(double a, double r, double sense = 1.0) {
  return Json{{"motion", "circular"}, {"a", a}, {"R", r}, {"sense", sense}};
}

Json orbit(double r, double omega) {
  return Json{{"motion", "circular"}, {"R", r}, {"omega", omega}};
}

Json uniform(double a) { return Json{{"motion", "uniform"}, {"a", a}}; }

Json single(const Json& detector, double gap) {
  return Json{{"detector", detector}, {"omega_gap", gap}};
}

Json pair(const std::string& geometry, const Json& a, const Json& b, double dd) {
  return Json{{"geometry", geometry},
              {"detector_a", a},
              {"detector_b", b},
              {"delta_d", dd},
              {"omega_gap", kGap}};
}

int pick(int points, int fallback) { return points > 0 ? points : fallback; }

// Equal pairs swept over one shared key; both detectors follow the grid.
std::vector<SweepTarget> both(const std::string& key) {
  return {{"detector_a." + key, 1.0}, {"detector_b." + key, 1.0}};
}

void equal_pair_figure(FigurePreset& f, const std::string& geometry, double sense_b,
                       const std::string& key, const std::string& label, double start,
                       double stop, int n, double a, double dd, bool with_uniform) {
  for (double radius : {0.1, 0.5, 1.0, 2.0}) {
    FigureCurve c;
    c.label = "R=" + num(radius);
    c.approximate = radius != 2.0;
    c.scenario = pair(geometry, circular(a, radius), circular(a, radius, sense_b), dd);
    if (key == "delta_d") {
      c.sweep = grid(label, {{"delta_d", 1.0}}, start, stop, n);
    } else {
      c.sweep = grid(label, both(key), start, stop, n);
    }
    f.curves.push_back(c);
  }
  if (with_uniform) {
    FigureCurve c;
    c.label = "uniform";
    c.scenario = pair("uniform-pair", uniform(a), uniform(a), dd);
    if (key == "delta_d") {
      c.sweep = grid(label, {{"delta_d", 1.0}}, start, stop, n);
    } else {
      c.sweep = grid(label, both(key), start, stop, n);
    }
    f.curves.push_back(c);
  }
}

void radius_figure(FigurePreset& f, const std::string& geometry, bool counter, int n) {
  for (double a : {0.1, 1.0, 10.0}) {
    for (double sense : counter ? std::vector<double>{1.0, -1.0} : std::vector<double>{1.0}) {
      FigureCurve c;
      c.label = "a=" + num(a) + (counter ? (sense > 0 ? ",co" : ",counter") : "");
      c.approximate = true;
      c.scenario = pair(geometry, circular(a, 1.0), circular(a, 1.0, sense), 0.1);
      c.sweep = grid("R", both("R"), 0.05, 3.0, n);
      f.curves.push_back(c);
    }
  }
}

// Concentric pairs at delta_d = 0 with R_A = 0.1 and omega_A = 1.
constexpr double kRadiusA = 0.1;
constexpr double kOmegaA = 1.0;

double acceleration_a() {
  const double v = kRadiusA * kOmegaA;
  return v * v / ((1.0 - v * v) * kRadiusA);
}

void ratio_a_figure(FigurePreset& f, const std::string& geometry, bool counter, int n) {
  const double aa = acceleration_a();
  for (double rb : {0.2, 0.3, 0.5}) {
    for (double sense : counter ? std::vector<double>{1.0, -1.0} : std::vector<double>{1.0}) {
      FigureCurve c;
      c.label = "R_B=" + num(rb) + (counter ? (sense > 0 ? ",co" : ",counter") : "");
      c.approximate = true;
      c.scenario = pair(geometry, orbit(kRadiusA, kOmegaA), circular(aa, rb, sense), 0.0);
      c.sweep = grid("a_B/a_A", {{"detector_b.a", aa}}, 0.0, 4.0, n);
      f.curves.push_back(c);
    }
  }
}

void ratio_omega_figure(FigurePreset& f, const std::string& geometry, double lo, double hi,
                        int n) {
  for (double rb : {0.15, 0.2, 0.3}) {
    FigureCurve c;
    c.label = "R_B=" + num(rb);
    c.approximate = true;
    c.scenario = pair(geometry, orbit(kRadiusA, kOmegaA), orbit(rb, kOmegaA), 0.0);
    c.sweep = grid("omega_B/omega_A", {{"detector_b.omega", kOmegaA}}, lo, hi, n);
    f.curves.push_back(c);
  }
}

}  // namespace

std::vector<std::string> figure_ids() {
  return {"fig1", "fig2",  "fig3",  "fig4",   "fig5a", "fig5b", "fig6a", "fig6b", "fig7",
          "fig8", "fig9",  "fig10", "fig11",  "fig11r", "fig12", "fig13"};
}

FigurePreset figure_preset(const std::string& id, int points) {
  const int n = pick(points, 60);
  FigurePreset f;
  f.id = id;
  if (id == "fig1" || id == "fig4") {
    const bool edr = id == "fig4";
    f.quantity = edr ? Quantity::kEdr : Quantity::kTransition;
    f.description = edr ? "EDR temperature vs acceleration, Omega=0.1"
                        : "transition probability vs acceleration, Omega=0.1";
    for (double r : {0.1, 1.0, 10.0}) {
      FigureCurve c;
      c.label = "R=" + num(r);
      c.approximate = true;
      c.scenario = single(circular(1.0, r), kGap);
      c.sweep = grid("a", {{"detector.a", 1.0}}, 0.1, 10.0, n);
      f.curves.push_back(c);
    }
    FigureCurve u;
    u.label = "uniform";
    u.scenario = single(uniform(1.0), kGap);
    u.sweep = grid("a", {{"detector.a", 1.0}}, 0.1, 10.0, n);
    f.curves.push_back(u);
  } else if (id == "fig2") {
    f.quantity = Quantity::kTransition;
    f.description = "transition probability vs energy gap, a=10";
    for (double r : {0.1, 1.0, 10.0}) {
      FigureCurve c;
      c.label = "R=" + num(r);
      c.approximate = true;
      c.scenario = single(circular(10.0, r), 0.0);
      c.sweep = grid("omega_gap", {{"omega_gap", 1.0}}, -2.0, 2.0, n);
      f.curves.push_back(c);
    }
  } else if (id == "fig3") {
    f.quantity = Quantity::kTransition;
    f.description = "transition probability vs radius, Omega=0.1";
    for (double a : {0.1, 1.0, 10.0}) {
      FigureCurve c;
      c.label = "a=" + num(a);
      c.approximate = true;
      c.scenario = single(circular(a, 1.0), kGap);
      c.sweep = grid("R", {{"detector.R", 1.0}}, 0.05, 5.0, n);
      f.curves.push_back(c);
    }
  } else if (id == "fig5a" || id == "fig5b") {
    f.quantity = Quantity::kHarvest;
    f.description = std::string("concurrence vs separation, coaxial ") +
                    (id == "fig5a" ? "co-rotating" : "counter-rotating") + ", a=1, Omega=0.1";
    equal_pair_figure(f, "coaxial", id == "fig5a" ? 1.0 : -1.0, "delta_d", "delta_d", 0.05, 3.0,
                      n, 1.0, 0.1, true);
  } else if (id == "fig6a" || id == "fig6b") {
    f.quantity = Quantity::kHarvest;
    f.description = std::string("concurrence vs acceleration, coaxial ") +
                    (id == "fig6a" ? "co-rotating" : "counter-rotating") +
                    ", delta_d=0.1, Omega=0.1";
    equal_pair_figure(f, "coaxial", id == "fig6a" ? 1.0 : -1.0, "a", "a", 0.1, 10.0, n, 1.0,
                      0.1, true);
  } else if (id == "fig7") {
    f.quantity = Quantity::kHarvest;
    f.description = "concurrence vs radius, coaxial, delta_d=0.1, Omega=0.1";
    radius_figure(f, "coaxial", true, n);
  } else if (id == "fig8") {
    f.quantity = Quantity::kHarvest;
    f.description = "concurrence vs a_B/a_A, concentric coaxial, R_A=0.1, omega_A=1, Omega=0.1";
    ratio_a_figure(f, "coaxial", true, n);
  } else if (id == "fig9") {
    f.quantity = Quantity::kHarvest;
    f.description =
        "concurrence vs omega_B/omega_A, concentric coaxial, R_A=0.1, omega_A=1, Omega=0.1";
    ratio_omega_figure(f, "coaxial", -1.0, 3.0, pick(points, 61));
  } else if (id == "fig10") {
    f.quantity = Quantity::kHarvest;
    f.description = "concurrence vs separation, perpendicular axes, a=1, Omega=0.1";
    equal_pair_figure(f, "perpendicular", 1.0, "delta_d", "delta_d", 0.05, 3.0, n, 1.0,
                      0.1, true);
  } else if (id == "fig11") {
    f.quantity = Quantity::kHarvest;
    f.description = "concurrence vs acceleration, perpendicular axes, delta_d=0.1, Omega=0.1";
    equal_pair_figure(f, "perpendicular", 1.0, "a", "a", 0.1, 10.0, n, 1.0, 0.1, true);
  } else if (id == "fig11r") {
    f.quantity = Quantity::kHarvest;
    f.description = "concurrence vs radius, perpendicular axes, delta_d=0.1, Omega=0.1";
    radius_figure(f, "perpendicular", false, n);
  } else if (id == "fig12") {
    f.quantity = Quantity::kHarvest;
    f.description = "concurrence vs a_B/a_A, perpendicular axes, R_A=0.1, omega_A=1, Omega=0.1";
    ratio_a_figure(f, "perpendicular", false, n);
  } else if (id == "fig13") {
    f.quantity = Quantity::kHarvest;
    f.description =
        "concurrence vs omega_B/omega_A, perpendicular axes, R_A=0.1, omega_A=1, Omega=0.1";
    ratio_omega_figure(f, "perpendicular", -2.0, 2.0, pick(points, 61));
  } else {
    std::string known;
    for (const auto& k : figure_ids()) known += (known.empty() ? "" : ", ") + k;
    throw InvalidArgument("unknown figure '" + id + "' (known: " + known + ")");
  }
  return f;
}

Table run_figure(const FigurePreset& preset, const RunOptions& options) {
  Table out;
  for (const auto& curve : preset.curves) {
    const Table t = run_sweep(preset.quantity, curve.scenario, curve.sweep, options);
    if (out.columns.empty()) {
      out.columns = {"curve", "approximate"};
      out.columns.insert(out.columns.end(), t.columns.begin(), t.columns.end());
    }
    for (const auto& row : t.rows) {
      std::vector<Cell> r{curve.label, std::int64_t{curve.approximate ? 1 : 0}};
      r.insert(r.end(), row.begin(), row.end());
      out.rows.push_back(std::move(r));
    }
  }
  return out;
}

}  // namespace udw::app
