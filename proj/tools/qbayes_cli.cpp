// Command-line front end: static consistency checks and time scans for the
// spin pair and for neutral meson mixing, with text / CSV / JSON emission.
//
// Exit codes: 0 = success (a detected physics violation is a result, not an
// error), 2 = usage or input error, 3 = internal invariant failure.

#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "qbayes/conditional.hpp"
#include "qbayes/mesons.hpp"
#include "qbayes/qlinalg.hpp"
#include "qbayes/scan.hpp"
#include "qbayes/spinpair.hpp"

namespace {

using nlohmann::ordered_json;

constexpr double k_pi = 3.14159265358979323846;

double deg_to_rad(double deg) { return deg * k_pi / 180.0; }

// full-precision float for machine-readable output
std::string num17(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

// shorter float for human-readable reports
std::string num12(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

void write_output(const std::string& path, const std::string& content) {
  if (path.empty()) {
    std::fwrite(content.data(), 1, content.size(), stdout);
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw qbayes::invalid_parameter("cannot open output file '" + path + "'");
  out << content;
}

std::string interval_summary(const std::vector<std::pair<double, double>>& intervals,
                             const char* what) {
  std::string s = std::string(what) + ": ";
  if (intervals.empty()) return s + "none\n";
  for (std::size_t k = 0; k < intervals.size(); ++k) {
    if (k) s += ", ";
    s += "[" + num12(intervals[k].first) + ", " + num12(intervals[k].second) + "]";
  }
  return s + "\n";
}

// ---- flat key/value reports (spin-static, meson-static) -------------------

struct Report {
  std::vector<std::pair<std::string, std::string>> text_fields;  // already formatted
  std::vector<std::pair<std::string, double>> numbers;           // emitted as numbers
  std::vector<std::pair<std::string, std::string>> strings;      // emitted as strings
};

std::string report_text(const Report& r) {
  std::string s;
  for (const auto& [k, v] : r.strings) s += k + ": " + v + "\n";
  for (const auto& [k, v] : r.numbers) s += k + ": " + num12(v) + "\n";
  return s;
}

std::string report_csv(const Report& r) {
  std::string header, row;
  for (const auto& [k, v] : r.strings) {
    header += (header.empty() ? "" : ",") + k;
    row += (row.empty() ? "" : ",") + v;
  }
  for (const auto& [k, v] : r.numbers) {
    header += (header.empty() ? "" : ",") + k;
    row += (row.empty() ? "" : ",") + num17(v);
  }
  return header + "\n" + row + "\n";
}

std::string report_json(const Report& r) {
  ordered_json j;
  for (const auto& [k, v] : r.strings) j[k] = v;
  for (const auto& [k, v] : r.numbers) j[k] = v;
  return j.dump(2) + "\n";
}

std::string render_report(const Report& r, const std::string& format) {
  if (format == "csv") return report_csv(r);
  if (format == "json") return report_json(r);
  return report_text(r);
}

// ---- meson parameter resolution --------------------------------------------

struct MesonCliOpts {
  std::string scenario;
  std::string params_path;
  double r = 0.0, zeta_deg = 0.0, dgamma_mev = 0.0, dm_mev = 0.0, gamma_mev = 0.0;
  CLI::Option* scenario_opt = nullptr;
  CLI::Option* r_opt = nullptr;
  CLI::Option* zeta_opt = nullptr;
  CLI::Option* dgamma_opt = nullptr;
  CLI::Option* dm_opt = nullptr;
  CLI::Option* gamma_opt = nullptr;
};

void add_meson_options(CLI::App* cmd, MesonCliOpts& o) {
  o.scenario_opt = cmd->add_option("--scenario", o.scenario,
                                   "named parameter set (see scenarios.json / built-ins)");
  cmd->add_option("--params", o.params_path,
                  "JSON scenario file replacing the built-in sets");
  o.r_opt = cmd->add_option("--r", o.r, "|q/p| override");
  o.zeta_opt = cmd->add_option("--zeta", o.zeta_deg, "arg(q/p) override, degrees");
  o.dgamma_opt = cmd->add_option("--dgamma", o.dgamma_mev,
                                 "Gamma_H - Gamma_L override, MeV (opposite of the PDG sign)");
  o.dm_opt = cmd->add_option("--dm", o.dm_mev, "M_H - M_L override, MeV");
  o.gamma_opt = cmd->add_option("--gamma", o.gamma_mev, "mean width override, MeV");
}

qbayes::MesonParams resolve_params(const MesonCliOpts& o) {
  const auto scenario_set = o.params_path.empty() ? qbayes::builtin_scenarios()
                                                  : qbayes::load_scenarios(o.params_path);
  const bool all_overrides = o.r_opt->count() && o.zeta_opt->count() &&
                             o.dgamma_opt->count() && o.dm_opt->count() &&
                             o.gamma_opt->count();

  qbayes::MesonParams params;
  if (o.scenario_opt->count()) {
    const auto it = scenario_set.find(o.scenario);
    if (it == scenario_set.end()) {
      std::string names;
      for (const auto& [name, unused] : scenario_set)
        names += (names.empty() ? "" : ", ") + name;
      throw qbayes::invalid_parameter("unknown scenario '" + o.scenario +
                                      "' (available: " + names + ")");
    }
    params = it->second;
  } else if (all_overrides) {
    params.name = "custom";
    params.gamma_mean = 1.0;  // placeholder, overridden below
  } else {
    throw qbayes::invalid_parameter(
        "give --scenario NAME, or all of --r --zeta --dgamma --dm --gamma");
  }

  if (o.dgamma_opt->count()) params.delta_gamma = o.dgamma_mev / qbayes::k_hbar_mev_s;
  if (o.dm_opt->count()) params.delta_m = o.dm_mev / qbayes::k_hbar_mev_s;
  if (o.gamma_opt->count()) params.gamma_mean = o.gamma_mev / qbayes::k_hbar_mev_s;
  if (o.r_opt->count()) params.r = o.r;
  if (o.zeta_opt->count()) params.zeta = deg_to_rad(o.zeta_deg);
  qbayes::validate(params);
  return params;
}

ordered_json params_echo(const qbayes::MesonParams& p) {
  return ordered_json{{"name", p.name},
                      {"delta_gamma_per_s", p.delta_gamma},
                      {"delta_m_per_s", p.delta_m},
                      {"gamma_mean_per_s", p.gamma_mean},
                      {"r", p.r},
                      {"zeta_rad", p.zeta}};
}

// ---- spin-static ------------------------------------------------------------

void run_spin_static(double theta_a_deg, double theta_b_deg, double theta_c_deg,
                     const std::string& format, const std::string& out_path) {
  using namespace qbayes;
  const Direction a{deg_to_rad(theta_a_deg), 0.0};
  const Direction b{deg_to_rad(theta_b_deg), 0.0};
  const Direction c{deg_to_rad(theta_c_deg), 0.0};

  // preparation event S3 = the singlet itself; S1 pairs axis a on particle (2)
  // with axis b on particle (1); the comparison event S2 swaps a for c
  const StateVector psi = singlet_state(Direction{0.0, 0.0});
  const ComplexOperator rho0 = projector(psi);
  const ComplexOperator p1 = projector(tensor(spin_state(a, Sign::plus),
                                              spin_state(b, Sign::plus)));
  const ComplexOperator p2 = projector(tensor(spin_state(c, Sign::plus),
                                              spin_state(b, Sign::plus)));

  const ConditionalProbability w_s1_s3 = von_neumann_conditional(rho0, rho0, p1);
  const ConditionalProbability w_s2_s3 = von_neumann_conditional(rho0, rho0, p2);
  const WeightedProjector s1_and_s3 = intersection_projector(psi, p1);
  const WeightedProjector s2_and_s3 = intersection_projector(psi, p2);
  const ConditionalProbability w_s2_given_s1s3 =
      von_neumann_conditional(rho0, s1_and_s3.projector, p2);
  const ConditionalProbability w_s1_given_s2s3 =
      von_neumann_conditional(rho0, s2_and_s3.projector, p1);
  const double cross_term = trace_product({p1, p2}).real();

  const BayesResidual res =
      static_bayes_residual(w_s1_s3, w_s2_given_s1s3, w_s2_s3, w_s1_given_s2s3);

  Report rep;
  rep.numbers = {{"theta_a_deg", theta_a_deg},
                 {"theta_b_deg", theta_b_deg},
                 {"theta_c_deg", theta_c_deg},
                 {"w_s1_s3", w_s1_s3.value},
                 {"w_s2_s3", w_s2_s3.value},
                 {"cross_term", cross_term},
                 {"w_s2_given_s1s3", w_s2_given_s1s3.value},
                 {"w_s1_given_s2s3", w_s1_given_s2s3.value},
                 {"lhs", res.lhs},
                 {"rhs", res.rhs},
                 {"residual", res.residual}};
  write_output(out_path, render_report(rep, format));
}

// ---- spin-scan ---------------------------------------------------------------

qbayes::SpinCase parse_case(const std::string& s) {
  if (s == "++" || s == "pp") return {qbayes::Sign::plus, qbayes::Sign::plus};
  if (s == "--" || s == "mm") return {qbayes::Sign::minus, qbayes::Sign::minus};
  if (s == "+-" || s == "pm") return {qbayes::Sign::plus, qbayes::Sign::minus};
  if (s == "-+" || s == "mp") return {qbayes::Sign::minus, qbayes::Sign::plus};
  throw qbayes::invalid_parameter("unknown case '" + s + "' (use ++, --, +-, -+)");
}

void run_spin_scan(const std::string& case_label, double theta_ba_deg, double wt_min_deg,
                   double wt_max_deg, int points, const std::string& format,
                   const std::string& out_path) {
  using namespace qbayes;
  const SpinCase c = parse_case(case_label);
  const double theta_ba = deg_to_rad(theta_ba_deg);

  // the axis is omega*t in degrees; margin < 0 marks a violation
  const auto margin_at = [&](double wt_deg) {
    return spin_inequality_margin(c, theta_ba, PrecessionPhase{deg_to_rad(wt_deg)});
  };
  const ScanResult scan = scan_curve([&](double wt_deg) { return margin_at(wt_deg).margin; },
                                     wt_min_deg, wt_max_deg, points, 0.0, false);

  std::string content;
  if (format == "csv") {
    content = "omega_t_deg,lhs,rhs,margin,violated\n";
    for (std::size_t i = 0; i < scan.axis.size(); ++i) {
      const InequalityMargin m = margin_at(scan.axis[i]);
      content += num17(scan.axis[i]) + "," + num17(m.lhs) + "," + num17(m.rhs) + "," +
                 num17(m.margin) + "," + (m.violated() ? "1" : "0") + "\n";
    }
    // keep the data stream purely tabular; the summary goes to stderr
    std::cerr << interval_summary(scan.violation_intervals,
                                  "violation intervals in omega_t_deg (margin < 0)");
  } else if (format == "json") {
    ordered_json j;
    j["axis"] = scan.axis;
    ordered_json lhs = ordered_json::array(), rhs = ordered_json::array();
    for (const double wt : scan.axis) {
      const InequalityMargin m = margin_at(wt);
      lhs.push_back(m.lhs);
      rhs.push_back(m.rhs);
    }
    j["lhs"] = lhs;
    j["rhs"] = rhs;
    j["values"] = scan.values;
    j["violation_intervals"] = scan.violation_intervals;
    j["params"] = ordered_json{{"case", case_label},
                               {"theta_ba_deg", theta_ba_deg},
                               {"omega_t_min_deg", wt_min_deg},
                               {"omega_t_max_deg", wt_max_deg},
                               {"points", points}};
    content = j.dump(2) + "\n";
  } else {
    content = "case " + case_label + ", theta_ba = " + num12(theta_ba_deg) + " deg\n";
    content += "omega_t_deg  lhs  rhs  margin\n";
    for (std::size_t i = 0; i < scan.axis.size(); ++i) {
      const InequalityMargin m = margin_at(scan.axis[i]);
      content += num12(scan.axis[i]) + "  " + num12(m.lhs) + "  " + num12(m.rhs) + "  " +
                 num12(m.margin) + (m.violated() ? "  VIOLATION" : "") + "\n";
    }
    content += interval_summary(scan.violation_intervals,
                                "violation intervals in omega_t_deg (margin < 0)");
  }
  write_output(out_path, content);
}

// ---- meson-static -------------------------------------------------------------

void run_meson_static(const MesonCliOpts& opts, const std::string& format,
                      const std::string& out_path) {
  using namespace qbayes;
  const MesonParams params = resolve_params(opts);
  const MixingCoefficients mix = mixing_from_params(params);
  const double plus_residual = static_equality_residual(EqualityVariant::plus, mix);
  const double minus_residual = static_equality_residual(EqualityVariant::minus, mix);

  Report rep;
  rep.strings = {{"scenario", params.name}};
  rep.numbers = {{"r", params.r},
                 {"zeta_deg", params.zeta * 180.0 / k_pi},
                 {"plus_value", plus_residual + 2.0},     // |1 + p/q|^2
                 {"plus_residual", plus_residual},
                 {"minus_value", minus_residual + 2.0},   // |1 - p/q|^2
                 {"minus_residual", minus_residual}};
  write_output(out_path, render_report(rep, format));
}

// ---- meson-scan ----------------------------------------------------------------

void run_meson_scan(const MesonCliOpts& opts, int index, double z_max, int points,
                    const std::string& format, const std::string& out_path) {
  using namespace qbayes;
  const MesonParams params = resolve_params(opts);
  const ScanResult scan = violation_scan(index, params, z_max, points);
  // the figures' top axes show flight distance; z lifetimes correspond to
  // c * t = z * c / gamma
  const double ct_per_z = k_speed_of_light_mm_s / params.gamma_mean;

  std::string content;
  if (format == "csv") {
    content = "z,ct_mm,f_value,violated\n";
    for (std::size_t i = 0; i < scan.axis.size(); ++i) {
      content += num17(scan.axis[i]) + "," + num17(scan.axis[i] * ct_per_z) + "," +
                 num17(scan.values[i]) + "," + (scan.values[i] > 1.0 ? "1" : "0") + "\n";
    }
    std::cerr << interval_summary(scan.violation_intervals,
                                  "violation intervals in z (F > 1)");
  } else if (format == "json") {
    ordered_json j;
    j["axis"] = scan.axis;
    ordered_json ct = ordered_json::array();
    for (const double z : scan.axis) ct.push_back(z * ct_per_z);
    j["ct_mm"] = ct;
    j["values"] = scan.values;
    j["violation_intervals"] = scan.violation_intervals;
    ordered_json p = params_echo(params);
    p["f_index"] = index;
    p["z_max"] = z_max;
    p["points"] = points;
    j["params"] = p;
    content = j.dump(2) + "\n";
  } else {
    content = "F" + std::to_string(index) + " for scenario " + params.name +
              " over z in [0, " + num12(z_max) + "]\n";
    content += "z  ct_mm  F\n";
    for (std::size_t i = 0; i < scan.axis.size(); ++i) {
      content += num12(scan.axis[i]) + "  " + num12(scan.axis[i] * ct_per_z) + "  " +
                 num12(scan.values[i]) + (scan.values[i] > 1.0 ? "  VIOLATION" : "") + "\n";
    }
    content += interval_summary(scan.violation_intervals, "violation intervals in z (F > 1)");
  }
  write_output(out_path, content);
}

// ---- meson-table ----------------------------------------------------------------

void run_meson_table(const MesonCliOpts& opts, double z_probe, const std::string& format,
                     const std::string& out_path) {
  using namespace qbayes;
  const MesonParams params = resolve_params(opts);
  const double t_probe = z_probe / params.gamma_mean;

  struct Row {
    const char* particle2;
    const char* particle1;
    int f_index;
    double f_value;
    bool violated;
  };
  std::vector<Row> rows;
  for (const EventFIndex& entry : event_f_table()) {
    const double f = f_function(entry.f_index, t_probe, params);
    rows.push_back({basis_label(entry.event.particle2), basis_label(entry.event.particle1),
                    entry.f_index, f, f > 1.0});
  }

  std::string content;
  if (format == "csv") {
    content = "particle2,particle1,f_index,f_value,violated\n";
    for (const Row& r : rows)
      content += std::string(r.particle2) + "," + r.particle1 + "," +
                 std::to_string(r.f_index) + "," + num17(r.f_value) + "," +
                 (r.violated ? "1" : "0") + "\n";
  } else if (format == "json") {
    ordered_json j;
    j["z_probe"] = z_probe;
    ordered_json arr = ordered_json::array();
    for (const Row& r : rows)
      arr.push_back(ordered_json{{"particle2", r.particle2},
                                 {"particle1", r.particle1},
                                 {"f_index", r.f_index},
                                 {"f_value", r.f_value},
                                 {"violated", r.violated}});
    j["rows"] = arr;
    j["params"] = params_echo(params);
    content = j.dump(2) + "\n";
  } else {
    content = "event sets for scenario " + params.name + " probed at z = " + num12(z_probe) + "\n";
    for (const Row& r : rows) {
      char line[128];
      std::snprintf(line, sizeof line, "{%s(2), %s(1)}  F%d = %s%s\n", r.particle2,
                    r.particle1, r.f_index, num12(r.f_value).c_str(),
                    r.violated ? "  VIOLATES" : "");
      content += line;
    }
  }
  write_output(out_path, content);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Bayes-consistency tests for entangled two-level pairs: "
               "spin precession and neutral meson mixing"};
  app.require_subcommand(1);

  // shared output options, registered per command
  struct OutputOpts {
    std::string format = "text";
    std::string path;
  };
  const auto add_output_options = [](CLI::App* cmd, OutputOpts& o) {
    cmd->add_option("--format", o.format, "output format")
        ->check(CLI::IsMember({"text", "csv", "json"}));
    cmd->add_option("--out", o.path, "write output to this file instead of stdout");
  };

  // spin-static
  auto* spin_static = app.add_subcommand(
      "spin-static", "static consistency equality for the spin singlet");
  double theta_a = 0.0, theta_b = 0.0, theta_c = 0.0;
  OutputOpts spin_static_out;
  spin_static->add_option("--theta-a", theta_a, "axis a polar angle, degrees")->required();
  spin_static->add_option("--theta-b", theta_b, "axis b polar angle, degrees")->required();
  spin_static->add_option("--theta-c", theta_c, "axis c polar angle, degrees")->required();
  add_output_options(spin_static, spin_static_out);
  spin_static->callback([&] {
    run_spin_static(theta_a, theta_b, theta_c, spin_static_out.format, spin_static_out.path);
  });

  // spin-scan
  auto* spin_scan = app.add_subcommand(
      "spin-scan", "time-dependent inequality margin across precession angles");
  std::string case_label;
  double theta_ba = 0.0, wt_min = -45.0, wt_max = 45.0;
  int spin_points = 181;
  OutputOpts spin_scan_out;
  spin_scan->add_option("--case", case_label, "outcome signs: ++, --, +-, -+ (or pp, mm, pm, mp)")
      ->required();
  spin_scan->add_option("--theta-ba", theta_ba, "theta_b - theta_a, degrees")->required();
  spin_scan->add_option("--wt-min", wt_min, "omega*t scan start, degrees");
  spin_scan->add_option("--wt-max", wt_max, "omega*t scan end, degrees");
  spin_scan->add_option("--points", spin_points, "grid points")->check(CLI::Range(2, 10000000));
  add_output_options(spin_scan, spin_scan_out);
  spin_scan->callback([&] {
    run_spin_scan(case_label, theta_ba, wt_min, wt_max, spin_points, spin_scan_out.format,
                  spin_scan_out.path);
  });

  // meson-static
  auto* meson_static = app.add_subcommand(
      "meson-static", "static consistency residuals |1 +- p/q|^2 - 2");
  MesonCliOpts meson_static_opts;
  OutputOpts meson_static_out;
  add_meson_options(meson_static, meson_static_opts);
  add_output_options(meson_static, meson_static_out);
  meson_static->callback([&] {
    run_meson_static(meson_static_opts, meson_static_out.format, meson_static_out.path);
  });

  // meson-scan
  auto* meson_scan = app.add_subcommand(
      "meson-scan", "scan one bound function F_N over z = Gamma*t");
  MesonCliOpts meson_scan_opts;
  OutputOpts meson_scan_out;
  int f_index = 1;
  double z_max = 30.0;
  int meson_points = 601;
  add_meson_options(meson_scan, meson_scan_opts);
  meson_scan->add_option("--index", f_index, "bound function index N in 1..8")
      ->required()
      ->check(CLI::Range(1, 8));
  meson_scan->add_option("--zmax", z_max, "scan end in lifetimes")->check(CLI::PositiveNumber);
  meson_scan->add_option("--points", meson_points, "grid points")->check(CLI::Range(2, 10000000));
  add_output_options(meson_scan, meson_scan_out);
  meson_scan->callback([&] {
    run_meson_scan(meson_scan_opts, f_index, z_max, meson_points, meson_scan_out.format,
                   meson_scan_out.path);
  });

  // meson-table
  auto* meson_table = app.add_subcommand(
      "meson-table", "all twelve event sets with their bound function at one z");
  MesonCliOpts meson_table_opts;
  OutputOpts meson_table_out;
  double z_probe = 0.0;
  add_meson_options(meson_table, meson_table_opts);
  meson_table->add_option("--z-probe", z_probe, "probe time in lifetimes")
      ->required()
      ->check(CLI::NonNegativeNumber);
  add_output_options(meson_table, meson_table_out);
  meson_table->callback([&] {
    run_meson_table(meson_table_opts, z_probe, meson_table_out.format, meson_table_out.path);
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const qbayes::internal_check_failure& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 3;
  } catch (const qbayes::zero_condition& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 3;
  }
  return 0;
}
