#pragma once

// Command-line front end: config intake (flags + flat JSON file), dispatch to
// the library, CSV / JSON emission with atomic file replacement.

#include <charconv>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <limits>
#include <map>
#include <numbers>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <system_error>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "josephson/dynamics.hpp"
#include "josephson/equilibrium.hpp"
#include "josephson/errors.hpp"
#include "josephson/fluctuations.hpp"
#include "josephson/lattice.hpp"
#include "josephson/model.hpp"
#include "josephson/version.hpp"

namespace josephson::cli {

enum class Command { phase_diagram, occupations, fluctuations, dynamics, converge };
enum class Format { csv, json };

enum ExitCode : int { kSuccess = 0, kUsage = 1, kDegenerate = 2, kConvergence = 3 };

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Grid {
  double lo;
  double hi;
  int count;

  std::vector<double> values() const {
    if (count == 1) return {lo};
    std::vector<double> v(static_cast<std::size_t>(count));
    for (int i = 0; i < count; ++i)
      v[static_cast<std::size_t>(i)] = lo + (hi - lo) * i / (count - 1);
    return v;
  }
};

struct RunConfig {
  Command command = Command::fluctuations;
  double mass = 1.0;
  double lambda = 1.0;
  double gamma = 0.0;
  double phi = 0.0;
  double rho = 0.0;
  double beta = 0.0;
  std::optional<double> k;
  std::vector<double> l_seq;  // empty: 10, 20, 40 thermal wavelengths
  std::string quantity = "c_rel";
  std::optional<double> t_max;  // default: two periods, 2 pi / gamma
  int t_steps = 512;
  int points = 64;
  std::optional<Grid> rho_grid;
  std::optional<Grid> beta_grid;
  std::optional<std::string> out;
  Format format = Format::csv;
  int workers = 1;

  /// Model parameters; rho is replaced by the first grid point when sweeping rho.
  ModelParams params() const {
    const double r = rho_grid ? rho_grid->lo : rho;
    const double b = beta_grid ? beta_grid->lo : beta;
    return {mass, lambda, gamma, phi, r, b};
  }
};

// ---------------------------------------------------------------------------
// Formatting

/// Shortest decimal string that round-trips to the same double.
inline std::string format_number(double x) {
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  if (std::isnan(x)) return "nan";
  char buf[64];
  const auto r = std::to_chars(buf, buf + sizeof buf, x);
  return {buf, r.ptr};
}

inline std::string command_name(Command c) {
  switch (c) {
    case Command::phase_diagram: return "phase-diagram";
    case Command::occupations: return "occupations";
    case Command::fluctuations: return "fluctuations";
    case Command::dynamics: return "dynamics";
    case Command::converge: return "converge";
  }
  return "";
}

namespace detail {

inline const std::map<std::string, Command>& command_table() {
  static const std::map<std::string, Command> table{{"phase-diagram", Command::phase_diagram},
                                                     {"occupations", Command::occupations},
                                                     {"fluctuations", Command::fluctuations},
                                                     {"dynamics", Command::dynamics},
                                                     {"converge", Command::converge}};
  return table;
}

inline const std::set<std::string>& known_keys() {
  static const std::set<std::string> keys{
      "command", "mass",   "lambda",  "gamma",  "phi",       "rho",       "beta",
      "temp",    "k",      "L-seq",   "t-max",  "t-steps",   "out",       "format",
      "workers", "points", "quantity", "rho-grid", "beta-grid"};
  return keys;
}

inline double parse_real(const std::string& key, const std::string& text) {
  if (text == "inf" || text == "infinity" || text == "+inf") return kInfinity;
  double v = 0.0;
  const char* first = text.data();
  const char* last = text.data() + text.size();
  if (!text.empty() && *first == '+') ++first;
  const auto r = std::from_chars(first, last, v);
  if (r.ec != std::errc{} || r.ptr != last || text.empty())
    throw UsageError("--" + key + ": not a number: '" + text + "'");
  return v;
}

inline int parse_int(const std::string& key, const std::string& text) {
  int v = 0;
  const auto r = std::from_chars(text.data(), text.data() + text.size(), v);
  if (r.ec != std::errc{} || r.ptr != text.data() + text.size() || text.empty())
    throw UsageError("--" + key + ": not an integer: '" + text + "'");
  return v;
}

inline std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> parts;
  std::string cur;
  std::istringstream in(text);
  while (std::getline(in, cur, sep)) parts.push_back(cur);
  return parts;
}

inline Grid parse_grid(const std::string& key, const std::string& text) {
  const auto parts = split(text, ':');
  if (parts.size() != 3) throw UsageError("--" + key + ": expected lo:hi:count");
  Grid g{parse_real(key, parts[0]), parse_real(key, parts[1]), parse_int(key, parts[2])};
  if (g.count < 1 || !std::isfinite(g.lo) || !std::isfinite(g.hi))
    throw UsageError("--" + key + ": range must be finite with count >= 1");
  if (g.count > 1 && !(g.hi > g.lo)) throw UsageError("--" + key + ": need hi > lo");
  return g;
}

/// JSON config values arrive as numbers, strings or (for L-seq) arrays; all
/// are normalized to the flag text form.
inline std::string json_to_text(const std::string& key, const nlohmann::json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_number_integer()) return std::to_string(v.get<long long>());
  if (v.is_number()) return format_number(v.get<double>());
  if (v.is_array()) {
    std::string s;
    for (const auto& e : v) {
      if (!s.empty()) s += ',';
      s += json_to_text(key, e);
    }
    return s;
  }
  throw UsageError("config key '" + key + "' has an unsupported value type");
}

}  // namespace detail

inline const char* kUnitsNote =
    "Units: hbar = k_B = 1. Energies (gamma, lambda*rho, T) share one unit; beta = 1/T; "
    "lengths and momenta are reciprocal; beta may be 'inf' (ground state, same as --temp 0).";

/// Build a RunConfig from command-line arguments (argv[0] excluded) and an
/// optional flat JSON config file named by --config. Flags override file values.
inline RunConfig parse_config(const std::vector<std::string>& args) {
  CLI::App app{"Josephson-coupled Bose condensates: equilibrium, fluctuations, dynamics"};
  app.name("josephson_cli");
  app.footer(kUnitsNote);
  std::map<std::string, std::string> flags;
  std::string command_text;
  std::string config_path;
  app.add_option("command", command_text,
                 "phase-diagram | occupations | fluctuations | dynamics | converge");
  const std::vector<std::pair<std::string, std::string>> options{
      {"mass", "particle mass m (default 1)"},
      {"lambda", "mean-field strength lambda (default 1)"},
      {"gamma", "Josephson coupling gamma > 0 (required)"},
      {"phi", "condensate phase difference in [0, 2 pi) (default 0)"},
      {"rho", "total density"},
      {"beta", "inverse temperature, or 'inf'"},
      {"temp", "temperature T, converted to beta = 1/T"},
      {"k", "momentum magnitude along x (fluctuations, converge) or max |k| (occupations)"},
      {"L-seq", "comma-separated box lengths (default 10,20,40 thermal wavelengths)"},
      {"t-max", "end of the time grid (default 2 pi / gamma)"},
      {"t-steps", "number of time points (default 512)"},
      {"points", "number of momentum points for occupations (default 64)"},
      {"quantity", "converge target: density | c_rel | var_n_rel | var_phi_tot | var_n_tot"},
      {"rho-grid", "phase-diagram sweep lo:hi:count over rho"},
      {"beta-grid", "phase-diagram sweep lo:hi:count over beta"},
      {"out", "output file (default: standard output)"},
      {"format", "csv | json (default csv)"},
      {"workers", "worker threads (default 1)"}};
  for (const auto& [name, help] : options) app.add_option("--" + name, flags[name], help);
  app.add_option("--config", config_path, "flat JSON object with keys named like the flags");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    throw UsageError(app.help());
  } catch (const CLI::ParseError& e) {
    throw UsageError(e.what());
  }

  std::map<std::string, std::string> values;
  if (!config_path.empty()) {
    std::ifstream in(config_path);
    if (!in) throw UsageError("cannot read config file '" + config_path + "'");
    nlohmann::json doc;
    try {
      in >> doc;
    } catch (const nlohmann::json::exception& e) {
      throw UsageError(std::string("config file is not valid JSON: ") + e.what());
    }
    if (!doc.is_object()) throw UsageError("config file must hold a flat JSON object");
    for (const auto& [key, v] : doc.items()) {
      if (!detail::known_keys().contains(key)) throw UsageError("unknown config key '" + key + "'");
      values[key] = detail::json_to_text(key, v);
    }
  }
  for (const auto& [name, help] : options)
    if (app.count("--" + name) > 0) values[name] = flags[name];
  if (!command_text.empty()) values["command"] = command_text;

  // A flag given on the command line overrides the other spelling from the file.
  if (app.count("--beta") > 0 && app.count("--temp") == 0) values.erase("temp");
  if (app.count("--temp") > 0 && app.count("--beta") == 0) values.erase("beta");

  auto has = [&](const char* key) { return values.contains(key); };
  auto real = [&](const char* key) { return detail::parse_real(key, values.at(key)); };

  if (!has("command")) throw UsageError("missing command");
  const auto cmd = detail::command_table().find(values.at("command"));
  if (cmd == detail::command_table().end())
    throw UsageError("unknown command '" + values.at("command") + "'");

  RunConfig cfg;
  cfg.command = cmd->second;
  if (has("mass")) cfg.mass = real("mass");
  if (has("lambda")) cfg.lambda = real("lambda");
  if (has("phi")) cfg.phi = real("phi");
  if (!has("gamma")) throw UsageError("missing required --gamma");
  cfg.gamma = real("gamma");
  if (cfg.gamma == 0.0)
    throw UsageError("--gamma 0 rejected: the Josephson gap 2*gamma must be positive");

  if (has("beta") && has("temp")) throw UsageError("--beta and --temp are mutually exclusive");
  if (has("beta")) {
    cfg.beta = real("beta");
  } else if (has("temp")) {
    const double t = real("temp");
    if (!(t >= 0.0) || !std::isfinite(t)) throw UsageError("--temp must be finite and >= 0");
    cfg.beta = t == 0.0 ? kInfinity : 1.0 / t;
  } else if (!has("beta-grid")) {
    throw UsageError("missing required --beta or --temp");
  }

  if (has("rho-grid")) cfg.rho_grid = detail::parse_grid("rho-grid", values.at("rho-grid"));
  if (has("beta-grid")) cfg.beta_grid = detail::parse_grid("beta-grid", values.at("beta-grid"));
  if (cfg.rho_grid && cfg.beta_grid)
    throw UsageError("--rho-grid and --beta-grid are mutually exclusive");
  if ((cfg.rho_grid || cfg.beta_grid) && cfg.command != Command::phase_diagram)
    throw UsageError("sweep grids apply to phase-diagram only");
  if (cfg.command == Command::phase_diagram && !cfg.rho_grid && !cfg.beta_grid)
    throw UsageError("phase-diagram needs --rho-grid or --beta-grid");
  if (cfg.beta_grid && (has("beta") || has("temp")))
    throw UsageError("--beta-grid conflicts with --beta/--temp");

  if (has("rho")) {
    if (cfg.rho_grid) throw UsageError("--rho conflicts with --rho-grid");
    cfg.rho = real("rho");
  } else if (!cfg.rho_grid) {
    throw UsageError("missing required --rho");
  }

  if (has("k")) cfg.k = real("k");
  if (has("L-seq")) {
    for (const auto& part : detail::split(values.at("L-seq"), ','))
      cfg.l_seq.push_back(detail::parse_real("L-seq", part));
  }
  if (has("quantity")) cfg.quantity = values.at("quantity");
  if (has("t-max")) cfg.t_max = real("t-max");
  if (has("t-steps")) cfg.t_steps = detail::parse_int("t-steps", values.at("t-steps"));
  if (has("points")) cfg.points = detail::parse_int("points", values.at("points"));
  if (has("out")) cfg.out = values.at("out");
  if (has("format")) {
    const auto& f = values.at("format");
    if (f == "csv") cfg.format = Format::csv;
    else if (f == "json") cfg.format = Format::json;
    else throw UsageError("--format must be csv or json");
  }
  if (has("workers")) cfg.workers = detail::parse_int("workers", values.at("workers"));
  if (cfg.workers < 1) throw UsageError("--workers must be positive");
  if (cfg.t_steps < 2) throw UsageError("--t-steps must be at least 2");
  if (cfg.points < 1) throw UsageError("--points must be positive");
  static const std::set<std::string> quantities{"density", "c_rel", "var_n_rel", "var_phi_tot",
                                                "var_n_tot"};
  if (!quantities.contains(cfg.quantity)) throw UsageError("unknown --quantity '" + cfg.quantity + "'");

  try {
    (void)cfg.params();
  } catch (const DomainError& e) {
    throw UsageError(e.what());
  }
  return cfg;
}

/// Resolved configuration as a flat JSON object that parse_config accepts back.
inline nlohmann::json config_fragment(const RunConfig& cfg) {
  nlohmann::json j;
  auto real = [](double x) -> nlohmann::json {
    if (std::isinf(x)) return "inf";
    return x;
  };
  j["command"] = command_name(cfg.command);
  j["mass"] = cfg.mass;
  j["lambda"] = cfg.lambda;
  j["gamma"] = cfg.gamma;
  j["phi"] = cfg.phi;
  auto grid_text = [](const Grid& g) {
    return format_number(g.lo) + ":" + format_number(g.hi) + ":" + std::to_string(g.count);
  };
  if (cfg.rho_grid) j["rho-grid"] = grid_text(*cfg.rho_grid);
  else j["rho"] = cfg.rho;
  if (cfg.beta_grid) j["beta-grid"] = grid_text(*cfg.beta_grid);
  else j["beta"] = real(cfg.beta);
  if (cfg.k) j["k"] = *cfg.k;
  if (!cfg.l_seq.empty()) j["L-seq"] = cfg.l_seq;
  j["quantity"] = cfg.quantity;
  if (cfg.t_max) j["t-max"] = *cfg.t_max;
  j["t-steps"] = cfg.t_steps;
  j["points"] = cfg.points;
  j["format"] = cfg.format == Format::csv ? "csv" : "json";
  return j;
}

// ---------------------------------------------------------------------------
// Tables

struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<double>> rows;
  std::vector<std::string> trailer;  // extra comment lines after the rows (CSV)
  nlohmann::json extra = nlohmann::json::object();
};

namespace detail {

inline std::vector<double> box_lengths(const RunConfig& cfg, const ModelParams& params) {
  if (!cfg.l_seq.empty()) return cfg.l_seq;
  const double factors[] = {10.0, 20.0, 40.0};
  return lattice::thermal_box_sequence(params, factors);
}

inline Table phase_diagram_table(const RunConfig& cfg) {
  const ModelParams base = cfg.params();
  const auto axis = cfg.rho_grid ? SweepAxis::rho : SweepAxis::beta;
  const auto grid = (cfg.rho_grid ? *cfg.rho_grid : *cfg.beta_grid).values();
  const auto points = phase_diagram_sweep(base, axis, grid, cfg.workers);
  Table t{{"rho", "beta", "mu", "delta", "rho0", "rho_c", "condensed"}, {}, {}};
  for (const auto& p : points) {
    const auto& s = p.solution;
    t.rows.push_back({p.params.rho(), p.params.beta(), s.mu, s.delta, s.rho0, s.rho_c,
                      s.condensed ? 1.0 : 0.0});
  }
  return t;
}

inline Table occupations_table(const RunConfig& cfg) {
  const ModelParams params = cfg.params();
  const auto sol = solve_equilibrium(params);
  const double k_max =
      cfg.k ? *cfg.k
            : (params.ground_state() ? 1.0 : 4.0 * std::sqrt(2.0 * params.mass() / params.beta()));
  if (!(k_max > 0.0)) throw DomainError("occupations: --k must be positive");
  Table t{{"k", "f_k", "E_minus", "E_plus", "n_minus", "n_plus"}, {}, {}};
  for (int i = 1; i <= cfg.points; ++i) {
    const double kk = k_max * i / cfg.points;
    const auto bp = branch_point(params, sol.delta, Momentum{kk, 0.0, 0.0});
    t.rows.push_back({kk, bp.f_k, bp.e_minus, bp.e_plus, bp.n_minus, bp.n_plus});
  }
  return t;
}

inline double default_k(const ModelParams& params) {
  if (params.ground_state()) return 1.0;
  return 2.0 * std::numbers::pi / (10.0 * params.thermal_wavelength());
}

inline Table fluctuations_table(const RunConfig& cfg) {
  const ModelParams params = cfg.params();
  const auto sol = solve_equilibrium(params);
  if (!sol.condensed)
    throw DegenerateStateError("relative-phase report needs a condensate (rho < rho_c)");
  const double kk = cfg.k ? *cfg.k : default_k(params);
  const auto total = total_pair_report(params, sol, Momentum{kk, 0.0, 0.0});
  const auto rel = relative_pair_report(params, sol);
  const auto& phase = *rel.phase;
  const double cg_phase = coarse_grain_distance(condensate_current_vs_phase(params, sol));
  const double cg_current = coarse_grain_distance(current_vs_condensate_current(params, sol));
  Table t{{"k", "var_n_tot", "var_phi_tot", "comm_tot", "uncertainty", "c_rel", "duhamel_nn",
           "var_n_rel", "var_j_rel", "var_phi_rel", "link", "j0_var", "cg_j0_phi", "cg_j_j0"},
          {},
          {}};
  t.rows.push_back({kk, total.var_n_tot, total.var_phi_tot, total.commutator_scalar,
                    total.uncertainty_product, rel.c_rel,
                    rel.duhamel_nn ? *rel.duhamel_nn : std::numeric_limits<double>::quiet_NaN(), rel.var_n_rel, rel.var_j_rel,
                    phase.var_phi_rel, phase.link_coefficient, phase.j0_variance, cg_phase,
                    cg_current});
  return t;
}

inline Table dynamics_table(const RunConfig& cfg) {
  const ModelParams params = cfg.params();
  const auto sol = solve_equilibrium(params);
  if (!sol.condensed) throw DegenerateStateError("the relative-pair dynamics needs a condensate (rho < rho_c)");
  const double t_max = cfg.t_max ? *cfg.t_max : 2.0 * std::numbers::pi / params.gamma();
  const auto grid = uniform_time_grid(t_max, cfg.t_steps);
  const auto nn = autocorrelation_n_trace(params, sol, grid);
  const auto jj = phi_current_trace(params, sol, grid);
  Table t{{"t", "corr_nn", "corr_jj_phi"}, {}, {}};
  for (std::size_t i = 0; i < grid.size(); ++i) t.rows.push_back({grid[i], nn.values[i], jj.values[i]});
  return t;
}

inline lattice::Quantity quantity_of(const std::string& name) {
  if (name == "density") return lattice::Quantity::density;
  if (name == "c_rel") return lattice::Quantity::c_rel;
  if (name == "var_n_rel") return lattice::Quantity::rel_number_variance;
  if (name == "var_phi_tot") return lattice::Quantity::total_phase_variance;
  return lattice::Quantity::total_number_variance;
}

inline Table converge_table(const RunConfig& cfg) {
  const ModelParams params = cfg.params();
  if (params.ground_state()) throw DomainError("converge: needs finite beta");
  const auto sol = solve_equilibrium(params);
  const auto q = quantity_of(cfg.quantity);
  const auto lengths = box_lengths(cfg, params);
  if (q != lattice::Quantity::density && !sol.condensed)
    throw DegenerateStateError(cfg.quantity + " oracle needs a condensate");
  Momentum k{};
  if (q == lattice::Quantity::total_phase_variance || q == lattice::Quantity::total_number_variance) {
    const double kk = cfg.k ? *cfg.k : 2.0 * std::numbers::pi / lengths.front();
    k = Momentum{kk, 0.0, 0.0};
  }
  const auto report = lattice::convergence_report(q, params, sol, lengths, k, cfg.workers);
  Table t{{"L", "oracle", "closed_form", "abs_err"}, {}, {}};
  for (const auto& r : report.rows) t.rows.push_back({r.L, r.oracle, r.closed_form, r.abs_err});
  t.trailer.push_back(std::string("verdict=") + (report.verdict ? "pass" : "fail"));
  t.extra["verdict"] = report.verdict ? "pass" : "fail";
  t.extra["quantity"] = report.label;
  return t;
}

}  // namespace detail

inline Table build_table(const RunConfig& cfg) {
  switch (cfg.command) {
    case Command::phase_diagram: return detail::phase_diagram_table(cfg);
    case Command::occupations: return detail::occupations_table(cfg);
    case Command::fluctuations: return detail::fluctuations_table(cfg);
    case Command::dynamics: return detail::dynamics_table(cfg);
    case Command::converge: return detail::converge_table(cfg);
  }
  throw DomainError("unknown command");
}

inline std::string render(const RunConfig& cfg, const Table& table) {
  std::ostringstream out;
  if (cfg.format == Format::csv) {
    const auto frag = config_fragment(cfg);
    out << "# " << kProgramName << ' ' << kVersion << ' ' << command_name(cfg.command) << '\n';
    out << "# config " << frag.dump() << '\n';
    for (std::size_t i = 0; i < table.columns.size(); ++i)
      out << (i ? "," : "") << table.columns[i];
    out << '\n';
    for (const auto& row : table.rows) {
      for (std::size_t i = 0; i < row.size(); ++i) out << (i ? "," : "") << format_number(row[i]);
      out << '\n';
    }
    for (const auto& line : table.trailer) out << "# " << line << '\n';
  } else {
    nlohmann::json doc;
    doc["program"] = kProgramName;
    doc["version"] = kVersion;
    doc["config"] = config_fragment(cfg);
    doc["columns"] = table.columns;
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& row : table.rows) {
      nlohmann::json r = nlohmann::json::array();
      for (double v : row) {
        if (std::isfinite(v)) r.push_back(v);
        else r.push_back(format_number(v));
      }
      rows.push_back(std::move(r));
    }
    doc["rows"] = std::move(rows);
    for (const auto& [key, v] : table.extra.items()) doc[key] = v;
    out << doc.dump(2) << '\n';
  }
  return out.str();
}

/// Write to `path` through a sibling temporary file and rename, so readers
/// never see a partial file.
inline void write_atomically(const std::string& path, const std::string& content) {
  namespace fs = std::filesystem;
  const fs::path target(path);
  fs::path tmp = target;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot open '" + tmp.string() + "' for writing");
    out << content;
    out.flush();
    if (!out) {
      std::error_code ec;
      fs::remove(tmp, ec);
      throw std::runtime_error("write to '" + tmp.string() + "' failed");
    }
  }
  fs::rename(tmp, target);
}

/// Execute a parsed configuration. Returns the process exit status.
inline int run(const RunConfig& cfg, std::ostream& out = std::cout, std::ostream& err = std::cerr) {
  const std::string label = command_name(cfg.command);
  try {
    const auto table = build_table(cfg);
    const auto text = render(cfg, table);
    if (cfg.out) write_atomically(*cfg.out, text);
    else out << text;
    return kSuccess;
  } catch (const DegenerateStateError& e) {
    err << label << ": degenerate regime: " << e.what() << '\n';
    return kDegenerate;
  } catch (const ConvergenceError& e) {
    err << label << ": convergence failure: " << e.what() << '\n';
    return kConvergence;
  } catch (const ConsistencyError& e) {
    err << label << ": numerical consistency failure: " << e.what() << '\n';
    return kConvergence;
  } catch (const DomainError& e) {
    err << label << ": " << e.what() << '\n';
    return kUsage;
  }
}

/// parse_config + run with usage errors mapped to exit status 1.
inline int main_entry(const std::vector<std::string>& args, std::ostream& out = std::cout,
                      std::ostream& err = std::cerr) {
  RunConfig cfg;
  try {
    cfg = parse_config(args);
  } catch (const UsageError& e) {
    err << e.what() << '\n';
    return kUsage;
  }
  return run(cfg, out, err);
}

}  // namespace josephson::cli
