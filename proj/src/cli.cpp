#include "fracvar/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

#include "fracvar/fractional.hpp"
#include "fracvar/scenarios.hpp"
#include "fracvar/sensitivity.hpp"
#include "fracvar/solvers.hpp"
#include "fracvar/special_functions.hpp"

namespace fracvar {

namespace {

using Json = nlohmann::ordered_json;

const std::map<std::string, Command> kCommands = {
    {"frac-deriv", Command::frac_deriv}, {"frac-int", Command::frac_int},
    {"sensitivity", Command::sensitivity}, {"action", Command::action},
    {"el-residual", Command::el_residual}, {"alpha-scan", Command::alpha_scan},
    {"root", Command::root}, {"example", Command::example}, {"sweep", Command::sweep},
};

struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<double>> rows;
};

std::string table_csv(const Table& t) {
  std::string out;
  for (size_t i = 0; i < t.columns.size(); ++i) out += (i ? "," : "") + t.columns[i];
  out += '\n';
  for (const auto& r : t.rows) {
    for (size_t i = 0; i < r.size(); ++i) out += (i ? "," : "") + format_double(r[i]);
    out += '\n';
  }
  return out;
}

Json number(double v) { return std::isfinite(v) ? Json(v) : Json(nullptr); }

Json table_json(const Table& t) {
  Json rows = Json::array();
  for (const auto& r : t.rows) {
    Json row = Json::array();
    for (double v : r) row.push_back(number(v));
    rows.push_back(std::move(row));
  }
  return Json{{"columns", t.columns}, {"rows", std::move(rows)}};
}

Json report_json(const StationarityReport& r) {
  Json j;
  j["action_value"] = number(r.action_value);
  j["el_residual_norm"] = number(r.el_residual_norm);
  j["alpha_condition_value"] = number(r.alpha_condition_value);
  j["alpha_star"] = r.alpha_star ? number(*r.alpha_star) : Json(nullptr);
  j["diagnostics"] = r.diagnostics;
  return j;
}

void write_output(const RunConfig& cfg, const std::string& text) {
  if (cfg.out_path.empty()) {
    std::cout << text;
    std::cout.flush();
    return;
  }
  std::ofstream f(cfg.out_path, std::ios::binary | std::ios::trunc);
  if (!f) throw IOError("cannot open output file " + cfg.out_path);
  f << text;
  if (!f) throw IOError("cannot write output file " + cfg.out_path);
}

void emit(const RunConfig& cfg, const Table& t, Json extra = Json::object()) {
  if (cfg.format == OutputFormat::csv) return write_output(cfg, table_csv(t));
  Json j = table_json(t);
  for (auto& [k, v] : extra.items()) j[k] = v;
  write_output(cfg, j.dump(2) + "\n");
}

double need_alpha(const RunConfig& cfg) {
  if (!cfg.alpha) throw UsageError("--alpha is required for this command");
  return *cfg.alpha;
}

GridFunction need_input(const RunConfig& cfg) {
  if (cfg.in_path.empty()) throw UsageError("--in is required for this command");
  return read_grid_csv(cfg.in_path);
}

Table grid_table(const GridFunction& f, const std::string& column) {
  Table t{{"t", column}, {}};
  const Eigen::VectorXd nodes = f.nodes();
  for (int i = 0; i <= f.n_intervals(); ++i) t.rows.push_back({nodes[i], f[i]});
  return t;
}

LagrangianSpec lagrangian_for(const RunConfig& cfg) {
  const auto id = parse_example_id(cfg.id.empty() ? "ex1" : cfg.id);
  if (!id) throw UsageError("unknown scenario id '" + cfg.id + "'");
  switch (*id) {
    case ExampleId::ex1_inertial: return inertial_lagrangian();
    case ExampleId::ex1_regularized: return regularized_lagrangian(cfg.alpha0.value_or(0.3));
    case ExampleId::ex2_constant_force: return constant_force_lagrangian(cfg.c);
    case ExampleId::ex3_primary_constraint:
    case ExampleId::beta_remark: return primary_constraint_lagrangian(cfg.c);
    case ExampleId::ex4a_quadratic: return quadratic_potential_lagrangian(cfg.c, cfg.d);
    case ExampleId::ex4b_log: return log_potential_lagrangian(cfg.c);
  }
  throw UsageError("unknown scenario id");
}

void run_alpha_scan(const RunConfig& cfg) {
  const auto id = parse_example_id(cfg.id.empty() ? "ex3" : cfg.id);
  PathFamily family;
  LagrangianSpec L;
  std::vector<double> grid = cfg.alpha_grid;
  const int n = cfg.n_intervals;
  const double c = cfg.c;
  if (id == ExampleId::ex3_primary_constraint) {
    L = primary_constraint_lagrangian(c);
    family = [c, n](double a) { return primary_constraint_path(c, a, n); };
    if (grid.empty()) grid = {0.0, 0.1, 0.2, 0.3, 0.4};
    for (double a : grid)
      if (a >= 0.5) throw ValidityRegionError("the action diverges for alpha >= 1/2");
  } else if (id == ExampleId::ex2_constant_force) {
    L = constant_force_lagrangian(c);
    family = [c, n](double a) { return constant_force_path(c, a, n); };
    if (grid.empty()) grid = {0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9};
  } else {
    throw UsageError("alpha-scan supports --id ex2 or ex3");
  }
  const AlphaScanTable t = alpha_scan(family, L, grid);
  Table out{{"alpha", "action", "alpha_condition", "el_residual_norm"}, {}};
  for (const auto& r : t.rows) out.rows.push_back({r.alpha, r.action, r.alpha_condition, r.el_residual_norm});
  emit(cfg, out, Json{{"argmin", t.argmin}, {"argmax", t.argmax},
                      {"strictly_increasing", t.strictly_increasing()}});
}

void run_root(const RunConfig& cfg) {
  const std::string id = cfg.id.empty() ? "ex4b" : cfg.id;
  const double tol = cfg.tol.value_or(1e-12);
  RootResult r;
  if (id == "ex4b" || id == "ex4b_log")
    r = find_alpha_root([](double a) { return digamma(1.0 - a) + 1.0; }, 0.0, 0.9, tol);
  else if (id == "ex4b_shifted")
    r = find_alpha_root([](double a) { return digamma(a - 1.0) - 1.0; }, 0.0, 1.0, tol);
  else if (id == "ex4a" || id == "ex4a_quadratic")
    r = find_alpha_root([](double a) { return quadratic_condition_closed(a); }, 0.0, 0.5, tol);
  else
    throw UsageError("root supports --id ex4b, ex4b_shifted or ex4a");
  emit(cfg, Table{{"alpha_star", "condition_value"}, {{r.alpha_star, r.condition_value}}});
}

void run_example_cmd(const RunConfig& cfg) {
  const auto id = parse_example_id(cfg.id);
  if (!id) throw UsageError("--id must name a scenario (ex1, ex1r, ex2, ex3, ex4a, ex4b, beta)");
  ExampleParameters p;
  p.c = cfg.c;
  p.d = cfg.d;
  p.alpha0 = cfg.alpha0;
  if (cfg.beta) p.beta = {*cfg.beta};
  p.n_intervals = cfg.n_intervals;
  p.alpha_grid = cfg.alpha_grid;
  const ExampleReport rep = run_example(*id, p);
  const Table t{rep.columns, rep.rows};
  if (cfg.format == OutputFormat::csv) return write_output(cfg, table_csv(t));
  Json j;
  j["id"] = to_string(rep.id);
  j["table"] = table_json(t);
  Json claims = Json::array();
  for (const auto& c : rep.claims)
    claims.push_back({{"assertion", c.assertion}, {"measured", c.measured}, {"status", to_string(c.status)}});
  j["claims"] = std::move(claims);
  j["report"] = report_json(rep.report);
  write_output(cfg, j.dump(2) + "\n");
}

void dispatch(const RunConfig& cfg) {
  switch (cfg.command) {
    case Command::frac_deriv: {
      const GridFunction y = need_input(cfg);
      return emit(cfg, grid_table(rl_left(y, need_alpha(cfg)), "d_alpha_y"));
    }
    case Command::frac_int: {
      const GridFunction y = need_input(cfg);
      return emit(cfg, grid_table(rl_integral(y, need_alpha(cfg)), "i_alpha_y"));
    }
    case Command::sensitivity: {
      const GridFunction y = need_input(cfg);
      const SensitivityField g = order_sensitivity(y, need_alpha(cfg));
      return emit(cfg, grid_table(g.field, "g"), Json{{"method", to_string(g.method)}});
    }
    case Command::action: {
      const GridFunction y = need_input(cfg);
      const double a = need_alpha(cfg);
      const LagrangianSpec L = lagrangian_for(cfg);
      if (cfg.beta)
        return emit(cfg, Table{{"alpha", "beta", "beta_action"},
                               {{a, *cfg.beta, beta_action(y, a, *cfg.beta, L)}}});
      return emit(cfg, Table{{"alpha", "action"}, {{a, action(y, a, L)}}});
    }
    case Command::el_residual: {
      const GridFunction y = need_input(cfg);
      const GridFunction r = el_residual_y(y, need_alpha(cfg), lagrangian_for(cfg));
      return emit(cfg, grid_table(r, "el_residual"),
                  Json{{"el_residual_norm", number(interior_sup_norm(r))}});
    }
    case Command::alpha_scan: return run_alpha_scan(cfg);
    case Command::root: return run_root(cfg);
    case Command::example: return run_example_cmd(cfg);
    case Command::sweep: {
      const GridFunction y = need_input(cfg);
      if (cfg.alpha_grid.empty()) throw UsageError("--grid is required for sweep");
      Table t{{"alpha", "t", "d_alpha_y", "g"}, {}};
      const Eigen::VectorXd nodes = y.nodes();
      for (double a : cfg.alpha_grid) {
        const GridFunction d = rl_left(y, a);
        const GridFunction g = order_sensitivity(y, a).field;
        for (int i = 0; i <= y.n_intervals(); ++i) t.rows.push_back({a, nodes[i], d[i], g[i]});
      }
      return emit(cfg, t);
    }
  }
}

}  // namespace

std::string format_double(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::vector<double> parse_grid(const std::string& spec) {
  double start = 0, stop = 0, step = 0;
  char c1 = 0, c2 = 0;
  std::istringstream in(spec);
  if (!(in >> start >> c1 >> stop >> c2 >> step) || c1 != ':' || c2 != ':' || !in.eof())
    throw UsageError("--grid expects start:stop:step, got '" + spec + "'");
  if (!(step > 0.0) || !(stop >= start)) throw UsageError("--grid needs step > 0 and stop >= start");
  const int count = static_cast<int>(std::floor((stop - start) / step + 1e-9)) + 1;
  std::vector<double> g(count);
  for (int i = 0; i < count; ++i) g[i] = start + i * step;
  return g;
}

RunConfig parse_args(const std::vector<std::string>& args) {
  CLI::App app{"fracvar"};
  RunConfig cfg;
  std::string command, grid, format = "csv";
  app.add_option("command", command,
                 "frac-deriv, frac-int, sensitivity, action, el-residual, alpha-scan, root, example, sweep")
      ->required();
  app.add_option("--alpha", cfg.alpha);
  app.add_option("--alpha0", cfg.alpha0);
  app.add_option("--beta", cfg.beta);
  app.add_option("--c", cfg.c);
  app.add_option("--d", cfg.d);
  app.add_option("--n", cfg.n_intervals);
  app.add_option("--grid", grid);
  app.add_option("--tol", cfg.tol);
  app.add_option("--id", cfg.id);
  app.add_option("--in", cfg.in_path);
  app.add_option("--out", cfg.out_path);
  app.add_option("--format", format);
  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    throw UsageError("\n" + app.help());
  } catch (const CLI::ParseError& e) {
    throw UsageError(e.what());
  }
  const auto it = kCommands.find(command);
  if (it == kCommands.end()) throw UsageError("unknown command '" + command + "'");
  cfg.command = it->second;
  if (format == "csv")
    cfg.format = OutputFormat::csv;
  else if (format == "json")
    cfg.format = OutputFormat::json;
  else
    throw UsageError("--format must be csv or json");
  auto in_unit = [](std::optional<double> v, const char* name) {
    if (v && !(*v >= 0.0 && *v <= 1.0)) throw UsageError(std::string(name) + " must lie in [0, 1]");
  };
  in_unit(cfg.alpha, "--alpha");
  in_unit(cfg.alpha0, "--alpha0");
  if (cfg.beta && !(*cfg.beta > 0.0)) throw UsageError("--beta must be positive");
  if (cfg.n_intervals < 16) throw UsageError("--n must be at least 16");
  if (cfg.tol && !(*cfg.tol > 0.0)) throw UsageError("--tol must be positive");
  if (!grid.empty()) {
    cfg.alpha_grid = parse_grid(grid);
    for (double a : cfg.alpha_grid)
      if (!(a >= 0.0 && a <= 1.0 + 1e-12)) throw UsageError("--grid values must lie in [0, 1]");
    for (double& a : cfg.alpha_grid) a = std::min(a, 1.0);
  }
  return cfg;
}

int execute(const RunConfig& cfg, std::ostream& err) {
  try {
    dispatch(cfg);
    return 0;
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return 2;
  } catch (const IOError& e) {
    err << "io error: " << e.what() << '\n';
    return 1;
  } catch (const NumericError& e) {
    err << "numeric failure: " << e.what() << '\n';
    return 1;
  } catch (const Error& e) {
    err << "invalid request: " << e.what() << '\n';
    return 2;
  }
}

int run_cli(const std::vector<std::string>& args, std::ostream& err) {
  RunConfig cfg;
  try {
    cfg = parse_args(args);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return 2;
  }
  return execute(cfg, err);
}

GridFunction read_grid_csv(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw IOError("cannot open input file " + path);
  std::vector<double> t, y;
  std::string line;
  int lineno = 0;
  while (std::getline(f, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    const auto comma = line.find(',');
    if (comma == std::string::npos) throw UsageError(path + ":" + std::to_string(lineno) + ": expected t,y");
    char* end = nullptr;
    const std::string a = line.substr(0, comma), b = line.substr(comma + 1);
    const double tv = std::strtod(a.c_str(), &end);
    if (end == a.c_str()) {
      if (t.empty() && lineno == 1) continue;  // header
      throw UsageError(path + ":" + std::to_string(lineno) + ": not a number");
    }
    const double yv = std::strtod(b.c_str(), &end);
    if (end == b.c_str()) throw UsageError(path + ":" + std::to_string(lineno) + ": not a number");
    t.push_back(tv);
    y.push_back(yv);
  }
  if (t.size() < 17) throw UsageError("input needs at least 17 samples (16 intervals)");
  const int n = static_cast<int>(t.size()) - 1;
  const double b = t.back();
  if (std::abs(t.front()) > 1e-12 * std::abs(b)) throw UsageError("input grid must start at t = 0");
  const double h = b / n;
  for (int i = 1; i <= n; ++i)
    if (std::abs((t[i] - t[i - 1]) - h) > 1e-9 * h)
      throw UsageError("input grid is not uniform near t = " + format_double(t[i]));
  return GridFunction(b, Eigen::Map<const Eigen::VectorXd>(y.data(), y.size()));
}

std::string grid_to_csv(const GridFunction& f, const std::string& column) {
  return table_csv(grid_table(f, column));
}

}  // namespace fracvar
