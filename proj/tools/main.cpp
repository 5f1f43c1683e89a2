// pmlopt: evaluate and optimize absorbing-layer profiles from the command line.

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "pmlopt/errors.hpp"
#include "pmlopt/nelder_mead.hpp"
#include "pmlopt/objective.hpp"

using json = nlohmann::ordered_json;
using namespace pmlopt;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 2;
constexpr int kExitNumeric = 3;

// Known-good reference averages for the two optimized-coefficient tables,
// indexed by p = 2..12; used by reproduce-tables for the comparison column.
const std::map<int, double> kReferenceAvgTable1 = {
    {2, 0.019},  {3, 0.0131}, {4, 0.009},  {5, 0.0058},  {6, 0.0044}, {7, 0.0039},
    {8, 0.0035}, {9, 0.0034}, {10, 0.0031}, {11, 0.0031}, {12, 0.0031},
};
const std::map<int, double> kReferenceAvgTable2 = {
    {2, 0.0057}, {3, 0.0084}, {4, 0.0053}, {5, 0.0047},  {6, 0.0042}, {7, 0.0038},
    {8, 0.0037}, {9, 0.0037}, {10, 0.0038}, {11, 0.0039}, {12, 0.0041},
};

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

struct RunConfig {
  double lambda0 = 1.0;
  double n0 = 1.0;
  double h = 0.05;
  int m = 5;
  std::string sampling = "midpoint";
  int quad_nodes = 100;
  int max_evals = 2000;

  GridSpec grid() const {
    GridSpec g;
    g.lambda0 = lambda0;
    g.n0 = n0;
    g.h = h;
    g.m = m;
    if (sampling == "midpoint") {
      g.sampling = Sampling::MidpointValue;
    } else if (sampling == "cellavg2pt") {
      g.sampling = Sampling::CellAverage2pt;
    } else {
      throw ParseError("config: sampling must be 'midpoint' or 'cellavg2pt', got '" +
                       sampling + "'");
    }
    return g;
  }

  ObjectiveSpec objective() const { return make_objective_spec(grid(), quad_nodes); }

  void validate() const {
    if (!(lambda0 > 0)) throw ParseError("config: lambda0 must be positive");
    if (!(n0 > 0)) throw ParseError("config: n0 must be positive");
    if (!(h > 0)) throw ParseError("config: h must be positive");
    if (m < 1) throw ParseError("config: m must be >= 1");
    if (quad_nodes < 1) throw ParseError("config: quad-nodes must be >= 1");
    if (max_evals < 2) throw ParseError("config: max-evals must be >= 2");
    grid();  // validates sampling
  }

  json echo() const {
    return json{{"lambda0", lambda0}, {"n0", n0},
                {"h", h},             {"m", m},
                {"sampling", sampling}, {"quad_nodes", quad_nodes},
                {"max_evals", max_evals}};
  }
};

// Per-subcommand config plumbing: defaults, then values from --config JSON,
// then explicitly passed flags on top.
struct ConfigFlags {
  RunConfig values;
  std::string config_path;
  CLI::App* sub = nullptr;

  void attach(CLI::App* s) {
    sub = s;
    // The grid-spacing flag is --h, so the help flag keeps only its long form.
    s->set_help_flag("--help", "Print help and exit");
    s->add_option("--lambda0", values.lambda0, "Vacuum wavelength (um)");
    s->add_option("--n0", values.n0, "Refractive index of the uniform region");
    s->add_option("--h", values.h, "Grid spacing (um)");
    s->add_option("--m", values.m, "Layer thickness in grid cells");
    s->add_option("--sampling", values.sampling,
                  "Stretching-factor sampling: midpoint|cellavg2pt");
    s->add_option("--quad-nodes", values.quad_nodes, "Quadrature node count for the average");
    s->add_option("--max-evals", values.max_evals, "Objective evaluation budget");
    s->add_option("--config", config_path, "JSON config file (flags override its fields)");
  }

  RunConfig resolve() const {
    RunConfig cfg;
    if (!config_path.empty()) {
      std::ifstream in(config_path);
      if (!in) throw ParseError("config: cannot open '" + config_path + "'");
      json j;
      try {
        in >> j;
      } catch (const json::exception& e) {
        throw ParseError("config: invalid JSON in '" + config_path + "': " + e.what());
      }
      for (auto& [key, value] : j.items()) {
        try {
          if (key == "lambda0") cfg.lambda0 = value.get<double>();
          else if (key == "n0") cfg.n0 = value.get<double>();
          else if (key == "h") cfg.h = value.get<double>();
          else if (key == "m") cfg.m = value.get<int>();
          else if (key == "sampling") cfg.sampling = value.get<std::string>();
          else if (key == "quad_nodes") cfg.quad_nodes = value.get<int>();
          else if (key == "max_evals") cfg.max_evals = value.get<int>();
          else throw ParseError("config: unknown field '" + key + "'");
        } catch (const json::exception& e) {
          throw ParseError("config: bad value for '" + key + "': " + e.what());
        }
      }
    }
    if (sub->count("--lambda0")) cfg.lambda0 = values.lambda0;
    if (sub->count("--n0")) cfg.n0 = values.n0;
    if (sub->count("--h")) cfg.h = values.h;
    if (sub->count("--m")) cfg.m = values.m;
    if (sub->count("--sampling")) cfg.sampling = values.sampling;
    if (sub->count("--quad-nodes")) cfg.quad_nodes = values.quad_nodes;
    if (sub->count("--max-evals")) cfg.max_evals = values.max_evals;
    cfg.validate();
    return cfg;
  }
};

void write_text(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ParseError("cannot open output file '" + path + "'");
  out << content;
}

void emit(const std::string& path, const std::string& content) {
  if (path.empty() || path == "-") {
    std::cout << content;
  } else {
    write_text(path, content);
  }
}

std::string csv_quote(const std::string& s) {
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + "\"";
}

std::string sweep_csv(const std::vector<std::string>& specs,
                      const std::vector<std::vector<SweepRow>>& columns) {
  std::string out = "theta_frac";
  for (const auto& s : specs) out += "," + csv_quote(s);
  out += "\n";
  const size_t rows = columns.front().size();
  for (size_t i = 0; i < rows; ++i) {
    out += fmt(columns.front()[i].theta_frac);
    for (const auto& col : columns) out += "," + fmt(col[i].abs_R);
    out += "\n";
  }
  return out;
}

struct OptimizeOutcome {
  ProfileClass profile;
  std::vector<double> coefficients;  // absolute values
  OptResult raw;
};

OptimizeOutcome run_optimize(Family family, int p, const RunConfig& cfg) {
  const ObjectiveSpec spec = cfg.objective();
  int n;
  switch (family) {
    case Family::Power:
    case Family::Legacy:
      n = 1;
      break;
    case Family::RationalPlus:
      n = p - 1;
      break;
    case Family::RationalMinus:
      n = p == 2 ? 1 : 2;
      break;
    default:
      throw ParseError("optimize: unknown family");
  }
  std::vector<double> x0(n, 0.0);
  x0.back() = 50.0;

  auto f = [&](const std::vector<double>& x) {
    try {
      return average_reflectivity(from_vector({x, {family, p}}), spec);
    } catch (const std::exception&) {
      return 1e6;  // penalty keeps the search total over failures
    }
  };
  SimplexConfig nm;
  nm.max_evals = cfg.max_evals;
  OptResult r = nelder_mead(f, x0, nm);

  OptimizeOutcome out;
  out.coefficients.reserve(r.best_point.size());
  for (double c : r.best_point) out.coefficients.push_back(std::abs(c));
  out.profile = from_vector({out.coefficients, {family, p}});
  out.raw = std::move(r);
  return out;
}

Family parse_family(const std::string& name) {
  if (name == "power") return Family::Power;
  if (name == "rplus") return Family::RationalPlus;
  if (name == "rminus") return Family::RationalMinus;
  throw ParseError("optimize: family must be one of power|rplus|rminus, got '" + name + "'");
}

int cmd_evaluate(const std::string& spec_text, const RunConfig& cfg, const std::string& out,
                 int points, double min_frac, double max_frac) {
  const ProfileClass profile = parse_profile(spec_text);
  const double avg = average_reflectivity(profile, cfg.objective());
  json report{{"profile", format_profile(profile)},
              {"avg_reflectivity", avg},
              {"config", cfg.echo()}};
  std::cout << report.dump(2) << "\n";
  if (!out.empty()) {
    const auto rows = theta_sweep(profile, cfg.grid(), points, min_frac, max_frac);
    write_text(out, sweep_csv({format_profile(profile)}, {rows}));
  }
  return kExitOk;
}

int cmd_optimize(const std::string& family_name, int p, const RunConfig& cfg,
                 const std::string& out) {
  if (p < 2) throw ParseError("optimize: --p must be >= 2");
  const Family family = parse_family(family_name);
  const OptimizeOutcome o = run_optimize(family, p, cfg);
  json report{{"family", family_name},
              {"p", p},
              {"coefficients", o.coefficients},
              {"avg_reflectivity", o.raw.best_value},
              {"iterations", o.raw.iterations},
              {"evals", o.raw.evals},
              {"termination",
               o.raw.termination == Termination::Converged ? "Converged" : "MaxEvals"},
              {"config", cfg.echo()}};
  const std::string text = report.dump(2) + "\n";
  std::cout << text;
  if (!out.empty()) write_text(out, text);
  return kExitOk;
}

int cmd_sweep(const std::vector<std::string>& specs, const RunConfig& cfg,
              const std::string& out, int points, double min_frac, double max_frac) {
  std::vector<std::string> names;
  std::vector<std::vector<SweepRow>> columns;
  for (const auto& text : specs) {
    const ProfileClass profile = parse_profile(text);
    names.push_back(format_profile(profile));
    columns.push_back(theta_sweep(profile, cfg.grid(), points, min_frac, max_frac));
  }
  emit(out, sweep_csv(names, columns));
  return kExitOk;
}

int cmd_scan2d(int p, const AxisSpec& a2_axis, const AxisSpec& ap_axis, const RunConfig& cfg,
               const std::string& out, double marker_a2, double marker_ap) {
  const Scan2dResult grid = scan2d(p, a2_axis, ap_axis, cfg.objective(), marker_a2, marker_ap);
  std::string csv = "a2,ap,avg_R\n";
  for (size_t i = 0; i < grid.a2_values.size(); ++i)
    for (size_t j = 0; j < grid.ap_values.size(); ++j)
      csv += fmt(grid.a2_values[i]) + "," + fmt(grid.ap_values[j]) + "," +
             fmt(grid.at(i, j)) + "\n";
  emit(out, csv);
  return kExitOk;
}

int cmd_reproduce_tables(const std::string& which, const std::string& out_dir,
                         const RunConfig& cfg, int p_min, int p_max) {
  if (which != "1" && which != "2" && which != "both")
    throw ParseError("reproduce-tables: --table must be 1, 2, or both");
  if (p_min < 2 || p_max > 12 || p_min > p_max)
    throw ParseError("reproduce-tables: require 2 <= p-min <= p-max <= 12");

  for (int table = 1; table <= 2; ++table) {
    if (which != "both" && which != std::to_string(table)) continue;
    const Family family = table == 1 ? Family::RationalPlus : Family::RationalMinus;
    const auto& ref = table == 1 ? kReferenceAvgTable1 : kReferenceAvgTable2;

    std::string csv = "p";
    if (table == 1) {
      for (int k = 2; k <= 12; ++k) csv += ",a" + std::to_string(k);
    } else {
      csv += ",a2,ap";
    }
    csv += ",iterations,evals,avg_R,ref_avg_R,ratio,status\n";

    for (int p = p_min; p <= p_max; ++p) {
      csv += std::to_string(p);
      const int ncols = table == 1 ? 11 : 2;
      try {
        const OptimizeOutcome o = run_optimize(family, p, cfg);
        size_t idx = 0;
        for (int k = 0; k < ncols; ++k) {
          csv += ",";
          const bool used = table == 1 ? k < p - 1 : (p == 2 ? k < 1 : true);
          if (used && idx < o.coefficients.size()) csv += fmt(o.coefficients[idx++]);
        }
        const double r = ref.at(p);
        csv += "," + std::to_string(o.raw.iterations) + "," + std::to_string(o.raw.evals) +
               "," + fmt(o.raw.best_value) + "," + fmt(r) + "," + fmt(o.raw.best_value / r) +
               ",ok\n";
      } catch (const std::exception& e) {
        // A failed run is recorded in place and the sweep continues.
        for (int k = 0; k < ncols; ++k) csv += ",";
        csv += ",,,,,error: " + std::string(e.what()) + "\n";
      }
    }
    const std::string path = out_dir + "/table" + std::to_string(table) + ".csv";
    write_text(path, csv);
    std::cerr << "wrote " << path << "\n";
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Discrete reflectivity of a finite absorbing layer under a second-order\n"
               "finite-difference Helmholtz discretization, and direct-search selection\n"
               "of optimal absorption profiles."};
  app.require_subcommand(1);

  // evaluate
  auto* evaluate = app.add_subcommand("evaluate", "Average reflectivity of one profile");
  std::string eval_spec;
  evaluate->add_option("profile", eval_spec, "Profile spec, e.g. power:p=3,S=100.4")
      ->required();
  ConfigFlags eval_cfg;
  eval_cfg.attach(evaluate);
  std::string eval_out;
  int eval_points = 500;
  double eval_min_frac = 0.001, eval_max_frac = 1.0;
  evaluate->add_option("--out", eval_out, "Also write a theta-sweep CSV here");
  evaluate->add_option("--points", eval_points, "Sweep point count");
  evaluate->add_option("--min-frac", eval_min_frac, "Sweep lower bound in theta/(pi/2)");
  evaluate->add_option("--max-frac", eval_max_frac, "Sweep upper bound in theta/(pi/2)");

  // optimize
  auto* optimize = app.add_subcommand("optimize", "Minimize average reflectivity over a family");
  std::string opt_family;
  int opt_p = 0;
  optimize->add_option("family", opt_family, "power|rplus|rminus")->required();
  optimize->add_option("--p", opt_p, "Profile order")->required();
  ConfigFlags opt_cfg;
  opt_cfg.attach(optimize);
  std::string opt_out;
  optimize->add_option("--out", opt_out, "Also write the JSON report here");

  // sweep
  auto* sweep = app.add_subcommand("sweep", "Reflectivity vs angle for one or more profiles");
  std::vector<std::string> sweep_specs;
  sweep->add_option("profiles", sweep_specs, "Profile specs")->required()->expected(-1);
  ConfigFlags sweep_cfg;
  sweep_cfg.attach(sweep);
  std::string sweep_out;
  int sweep_points = 500;
  double sweep_min_frac = 0.001, sweep_max_frac = 1.0;
  sweep->add_option("--out", sweep_out, "CSV output path (default stdout)");
  sweep->add_option("--points", sweep_points, "Point count");
  sweep->add_option("--min-frac", sweep_min_frac, "Lower bound in theta/(pi/2)");
  sweep->add_option("--max-frac", sweep_max_frac, "Upper bound in theta/(pi/2)");

  // scan2d
  auto* scan = app.add_subcommand("scan2d", "Average reflectivity over the rminus (a2, ap) plane");
  int scan_p = 8;
  AxisSpec scan_a2{0.0, 50.0, 101};
  AxisSpec scan_ap{0.0, 300.0, 101};
  double marker_a2 = 23.3, marker_ap = 121.3;
  scan->add_option("--p", scan_p, "Profile order");
  scan->add_option("--a2-min", scan_a2.lo, "a2 range start");
  scan->add_option("--a2-max", scan_a2.hi, "a2 range end");
  scan->add_option("--a2-steps", scan_a2.steps, "a2 grid points");
  scan->add_option("--ap-min", scan_ap.lo, "ap range start");
  scan->add_option("--ap-max", scan_ap.hi, "ap range end");
  scan->add_option("--ap-steps", scan_ap.steps, "ap grid points");
  scan->add_option("--marker-a2", marker_a2, "Reference point spliced into the a2 axis");
  scan->add_option("--marker-ap", marker_ap, "Reference point spliced into the ap axis");
  ConfigFlags scan_cfg;
  scan_cfg.attach(scan);
  std::string scan_out;
  scan->add_option("--out", scan_out, "CSV output path (default stdout)");

  // reproduce-tables
  auto* repro = app.add_subcommand(
      "reproduce-tables", "Re-run the optimization sweep behind the reference tables");
  std::string repro_table = "both";
  std::string repro_dir = ".";
  int repro_pmin = 2, repro_pmax = 12;
  repro->add_option("--table", repro_table, "1, 2, or both");
  repro->add_option("--out-dir", repro_dir, "Directory for table1.csv / table2.csv");
  repro->add_option("--p-min", repro_pmin, "Lowest profile order");
  repro->add_option("--p-max", repro_pmax, "Highest profile order");
  ConfigFlags repro_cfg;
  repro_cfg.attach(repro);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*evaluate)
      return cmd_evaluate(eval_spec, eval_cfg.resolve(), eval_out, eval_points, eval_min_frac,
                          eval_max_frac);
    if (*optimize) return cmd_optimize(opt_family, opt_p, opt_cfg.resolve(), opt_out);
    if (*sweep)
      return cmd_sweep(sweep_specs, sweep_cfg.resolve(), sweep_out, sweep_points,
                       sweep_min_frac, sweep_max_frac);
    if (*scan)
      return cmd_scan2d(scan_p, scan_a2, scan_ap, scan_cfg.resolve(), scan_out, marker_a2,
                        marker_ap);
    if (*repro)
      return cmd_reproduce_tables(repro_table, repro_dir, repro_cfg.resolve(), repro_pmin,
                                  repro_pmax);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "numeric failure: " << e.what() << "\n";
    return kExitNumeric;
  }
  return kExitOk;
}
