#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdio>
#include <fstream>
#include <functional>
#include <sstream>

#include "ineq/errors.hpp"
#include "report_json.hpp"

namespace ineq::cli {
namespace {

/// Bad input file or malformed file content: a usage problem, exit 2.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string csv_number(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::vector<std::vector<double>> read_csv(const std::string& path, std::size_t columns) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open input file '" + path + "'");
  std::vector<std::vector<double>> rows;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.find_first_not_of(" \t") == std::string::npos) continue;
    std::vector<double> row;
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, ',')) {
      try {
        std::size_t used = 0;
        row.push_back(std::stod(cell, &used));
        if (cell.find_first_not_of(" \t", used) != std::string::npos) throw std::invalid_argument("");
      } catch (const std::exception&) {
        throw InputError(path + ":" + std::to_string(line_no) + ": invalid number '" + cell + "'");
      }
    }
    if (row.size() != columns) {
      throw InputError(path + ":" + std::to_string(line_no) + ": expected " +
                       std::to_string(columns) + " columns");
    }
    rows.push_back(std::move(row));
  }
  if (rows.empty()) throw InputError("input file '" + path + "' has no rows");
  return rows;
}

std::vector<double> parse_list(const std::string& text) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string cell;
  while (std::getline(ss, cell, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stod(cell, &used));
      if (used != cell.size()) throw std::invalid_argument("");
    } catch (const std::exception&) {
      throw ParameterError("invalid number '" + cell + "' in list '" + text + "'");
    }
  }
  if (out.empty()) throw ParameterError("empty list");
  return out;
}

/// lo:hi:step, inclusive of hi up to rounding; points rounded to 15 digits.
std::vector<double> parse_grid(const std::string& text) {
  const auto parts = [&]() {
    std::vector<std::string> p;
    std::stringstream ss(text);
    std::string s;
    while (std::getline(ss, s, ':')) p.push_back(s);
    return p;
  }();
  if (parts.size() != 3) throw ParameterError("grid must be lo:hi:step, got '" + text + "'");
  const auto v = parse_list(parts[0] + "," + parts[1] + "," + parts[2]);
  const double lo = v[0];
  const double hi = v[1];
  const double step = v[2];
  if (!(step > 0.0) || hi < lo) throw ParameterError("grid needs lo <= hi and step > 0");
  const auto n = static_cast<std::size_t>(std::floor((hi - lo) / step + 1e-9)) + 1;
  std::vector<double> out;
  for (std::size_t i = 0; i < n; ++i) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.15g", lo + static_cast<double>(i) * step);
    out.push_back(std::stod(buf));
  }
  return out;
}

void emit(std::ostream& out, const ordered_json& j) { out << j.dump(2) << '\n'; }

struct Command {
  CLI::App* app;
  std::function<int(std::ostream&)> run;
};

}  // namespace

int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Means, refined Cauchy-Schwarz chains, Young comparisons and elliptic bounds",
               "ineq"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all", "Expand all help");
  std::vector<Command> commands;

  // Option storage shared by required options; every option with a default
  // owns its variable because CLI11 writes defaults at registration.
  std::string spec, spec_b, f_spec, g_spec, input, x_list, y_list;
  double x = 0.0, y = 0.0, p = 0.0, q = 0.5, x0 = 0.0, y0 = 0.0;
  std::string h_grid = "0,0.5,1,2,4", bounds_grid, format = "json", method = "agm";
  std::string integral_kind = "mean", compare_kind = "logderiv", lorentz_mean = "power:2";
  double gap_a = 0.0, gap_b = 0.0, int_a = 0.0, int_b = 1.0;
  double critical_tol = 1e-12, tail_tol = kJacksonTailTol, zero_tol = kDftZeroTol;
  std::size_t samples = 1000, trials = 1000;
  std::uint64_t seed = 1;
  bool conjugate = false;

  // --- means ---
  auto* means = app.add_subcommand("means", "Evaluate means and check their axioms");
  means->require_subcommand(1);
  {
    auto* c = means->add_subcommand("eval", "Evaluate M(x, y)");
    c->add_option("--spec", spec, "Mean spec, e.g. power:2")->required();
    c->add_option("--x", x)->required();
    c->add_option("--y", y)->required();
    c->add_flag("--conjugate", conjugate, "Also report x y / M(x, y)");
    commands.push_back({c, [&](std::ostream& o) {
                          const MeanSpec s = parse_mean_spec(spec);
                          ordered_json j = {{"spec", to_string(s)},
                                            {"x", x},
                                            {"y", y},
                                            {"value", eval_mean(s, x, y)}};
                          if (conjugate) j["conjugate"] = conjugate_eval(s, x, y);
                          emit(o, j);
                          return kOk;
                        }});
  }
  {
    auto* c = means->add_subcommand("axioms", "Sample the mean axioms");
    c->add_option("--spec", spec)->required();
    c->add_option("--samples", samples)->check(CLI::PositiveNumber);
    c->add_option("--seed", seed);
    commands.push_back({c, [&](std::ostream& o) {
                          const MeanSpec s = parse_mean_spec(spec);
                          const AxiomReport r = check_axioms(s, samples, seed);
                          ordered_json j = {{"spec", to_string(s)}};
                          j.update(to_json(r));
                          emit(o, j);
                          return r.core_pass() ? kOk : kVerificationFailure;
                        }});
  }
  {
    auto* c = means->add_subcommand("h-check", "Check the h-function conditions");
    c->add_option("--spec", spec)->required();
    c->add_option("--grid", h_grid, "Comma-separated ascending t >= 0")->capture_default_str();
    commands.push_back({c, [&](std::ostream& o) {
                          const MeanSpec s = parse_mean_spec(spec);
                          const HFunctionCheck r = check_h_conditions(s, parse_list(h_grid));
                          ordered_json j = {{"spec", to_string(s)}};
                          j.update(to_json(r));
                          emit(o, j);
                          return r.ok() ? kOk : kVerificationFailure;
                        }});
  }

  // --- young ---
  auto* young = app.add_subcommand("young", "Young inequality comparisons");
  young->require_subcommand(1);
  {
    auto* c = young->add_subcommand("classify", "Compare both Young bounds");
    c->add_option("--x", x)->required();
    c->add_option("--y", y)->required();
    c->add_option("--p", p)->required();
    commands.push_back({c, [&](std::ostream& o) {
                          emit(o, to_json(young_pair(x, y, p)));
                          return kOk;
                        }});
  }
  {
    auto* c = young->add_subcommand("critical", "Critical y for 0 <= x <= 1, p >= 2");
    c->add_option("--x", x)->required();
    c->add_option("--p", p)->required();
    c->add_option("--tol", critical_tol, "Bisection tolerance")->capture_default_str();
    commands.push_back({c, [&](std::ostream& o) {
                          const double yc = critical_y(x, p, critical_tol);
                          const double qq = p / (p - 1.0);
                          const double residual = std::pow(yc, p) / p - std::pow(yc, qq) / qq -
                                                  (std::pow(x, p) / p - std::pow(x, qq) / qq);
                          emit(o, {{"x", x}, {"p", p}, {"q", qq}, {"y_cr", yc},
                                   {"residual", residual}});
                          return kOk;
                        }});
  }
  {
    auto* c = young->add_subcommand("integral-gap", "int_0^a f + int_0^b f^-1 - a b");
    c->add_option("--f", f_spec)->required();
    c->add_option("--a", gap_a)->required();
    c->add_option("--b", gap_b)->required();
    commands.push_back({c, [&](std::ostream& o) {
                          const FunctionSpec f = parse_function_spec(f_spec);
                          const double gap = young_integral_gap(f, gap_a, gap_b);
                          emit(o, {{"f", to_string(f)}, {"a", gap_a}, {"b", gap_b}, {"gap", gap}});
                          return gap >= -1e-10 ? kOk : kVerificationFailure;
                        }});
  }

  // --- cbs ---
  auto* cbs = app.add_subcommand("cbs", "Refined Cauchy-Schwarz chains");
  cbs->require_subcommand(1);
  auto chain_result = [](std::ostream& o, ordered_json head, const ChainReport& r) {
    head.update(to_json(r));
    emit(o, head);
    return r.ordered ? kOk : kVerificationFailure;
  };
  {
    auto* c = cbs->add_subcommand("discrete", "Mean-based chain over two positive columns");
    c->add_option("--mean", spec)->required();
    c->add_option("--input", input, "CSV with two positive columns")->required();
    commands.push_back({c, [&](std::ostream& o) {
                          const MeanSpec s = parse_mean_spec(spec);
                          std::vector<double> xs, ys;
                          for (const auto& row : read_csv(input, 2)) {
                            xs.push_back(row[0]);
                            ys.push_back(row[1]);
                          }
                          return chain_result(o, {{"mean", to_string(s)}, {"n", xs.size()}},
                                              cbs_chain(xs, ys, s));
                        }});
  }
  {
    auto* c = cbs->add_subcommand("integral", "Integral chain on [a, b]");
    c->add_option("--mean", spec)->required();
    c->add_option("--f", f_spec)->required();
    c->add_option("--g", g_spec)->required();
    c->add_option("--a", int_a, "Left end")->capture_default_str();
    c->add_option("--b", int_b, "Right end")->capture_default_str();
    c->add_option("--kind", integral_kind, "mean or logderiv")->capture_default_str();
    commands.push_back({c, [&](std::ostream& o) {
                          const MeanSpec s = parse_mean_spec(spec);
                          const FunctionSpec f = parse_function_spec(f_spec);
                          const FunctionSpec g = parse_function_spec(g_spec);
                          const ChainKind k = parse_chain_kind(integral_kind);
                          const ChainReport r =
                              k == ChainKind::MeanForm
                                  ? integral_mean_chain(f, g, int_a, int_b, s)
                                  : integral_logderiv_chain(f, g, int_a, int_b, s);
                          return chain_result(o,
                                              {{"mean", to_string(s)},
                                               {"kind", to_string(k)},
                                               {"f", to_string(f)},
                                               {"g", to_string(g)},
                                               {"a", int_a},
                                               {"b", int_b}},
                                              r);
                        }});
  }
  {
    auto* c = cbs->add_subcommand("q", "Jackson q-integral chain on [0, 1]");
    c->add_option("--mean", spec)->required();
    c->add_option("--f", f_spec)->required();
    c->add_option("--g", g_spec)->required();
    c->add_option("--q", q)->required();
    c->add_option("--tol", tail_tol, "Tail tolerance")->capture_default_str();
    commands.push_back({c, [&](std::ostream& o) {
                          const MeanSpec s = parse_mean_spec(spec);
                          const FunctionSpec f = parse_function_spec(f_spec);
                          const FunctionSpec g = parse_function_spec(g_spec);
                          return chain_result(o,
                                              {{"mean", to_string(s)},
                                               {"f", to_string(f)},
                                               {"g", to_string(g)},
                                               {"q", q}},
                                              q_cbs_chain(f, g, q, s, tail_tol));
                        }});
  }

  // --- compare ---
  {
    auto* c = app.add_subcommand("compare", "Sampled order between two generalizations");
    c->add_option("--a", spec)->required();
    c->add_option("--b", spec_b)->required();
    c->add_option("--trials", trials)->check(CLI::PositiveNumber);
    c->add_option("--seed", seed);
    c->add_option("--kind", compare_kind, "mean or logderiv")->capture_default_str();
    commands.push_back({c, [&](std::ostream& o) {
                          const MeanSpec sa = parse_mean_spec(spec);
                          const MeanSpec sb = parse_mean_spec(spec_b);
                          const OrderVerdict v = compare_generalizations(
                              sa, sb, trials, seed, parse_chain_kind(compare_kind));
                          ordered_json j = {{"a", to_string(sa)}, {"b", to_string(sb)}};
                          j.update(to_json(v));
                          emit(o, j);
                          return kOk;
                        }});
  }

  // --- elliptic ---
  auto* elliptic = app.add_subcommand("elliptic", "Complete elliptic integral K (modulus x)");
  elliptic->require_subcommand(1);
  {
    auto* c = elliptic->add_subcommand("bounds", "Elementary bounds of K at 0 < x < 1");
    auto* g_opt = c->add_option("--grid", bounds_grid, "lo:hi:step");
    c->add_option("--x", x)->excludes(g_opt);
    c->add_option("--format", format, "json or csv")
        ->capture_default_str()
        ->check(CLI::IsMember({"json", "csv"}));
    commands.push_back({c, [&, c](std::ostream& o) {
                          std::vector<double> xs;
                          if (!bounds_grid.empty()) {
                            xs = parse_grid(bounds_grid);
                          } else if (c->count("--x") > 0) {
                            xs = {x};
                          } else {
                            throw ParameterError("elliptic bounds needs --grid or --x");
                          }
                          std::vector<BoundsReport> rows;
                          for (double v : xs) rows.push_back(elliptic_bounds(v));
                          const bool all_ok = std::all_of(rows.begin(), rows.end(),
                                                          [](const auto& r) { return r.chain_ok; });
                          if (format == "csv") {
                            o << "x,L0,L1,L2,K,G2,G1,G0,chain_ok\n";
                            for (const auto& r : rows) {
                              o << csv_number(r.x) << ',' << csv_number(r.L0) << ','
                                << csv_number(r.L1) << ',' << csv_number(r.L2) << ','
                                << csv_number(r.K) << ',' << csv_number(r.G2) << ','
                                << csv_number(r.G1) << ',' << csv_number(r.G0) << ','
                                << (r.chain_ok ? "true" : "false") << '\n';
                            }
                          } else {
                            ordered_json arr = ordered_json::array();
                            for (const auto& r : rows) arr.push_back(to_json(r));
                            emit(o, {{"points", arr}, {"all_chain_ok", all_ok}});
                          }
                          return all_ok ? kOk : kVerificationFailure;
                        }});
  }
  {
    auto* c = elliptic->add_subcommand("k", "K(x) by AGM or quadrature");
    c->add_option("--x", x)->required();
    c->add_option("--method", method, "agm or quadrature")
        ->capture_default_str()
        ->check(CLI::IsMember({"agm", "quadrature"}));
    commands.push_back({c, [&](std::ostream& o) {
                          const KMethod m = method == "agm" ? KMethod::Agm : KMethod::Quadrature;
                          emit(o, {{"x", x}, {"method", method}, {"K", elliptic_k(x, m)}});
                          return kOk;
                        }});
  }

  // --- dft ---
  auto* dftc = app.add_subcommand("dft", "Discrete Fourier transform support sizes");
  dftc->require_subcommand(1);
  {
    auto* c = dftc->add_subcommand("uncertainty", "Check A B >= n");
    c->add_option("--input", input, "CSV of re,im rows")->required();
    c->add_option("--zero-tol", zero_tol)->check(CLI::NonNegativeNumber);
    commands.push_back({c, [&](std::ostream& o) {
                          std::vector<std::complex<double>> v;
                          for (const auto& row : read_csv(input, 2)) v.emplace_back(row[0], row[1]);
                          const UncertaintyReport r = dft_uncertainty(v, zero_tol);
                          emit(o, to_json(r));
                          return r.holds ? kOk : kVerificationFailure;
                        }});
  }

  // --- lorentz ---
  auto* lorentz = app.add_subcommand("lorentz", "Reversed chain for time-like vectors");
  lorentz->require_subcommand(1);
  {
    auto* c = lorentz->add_subcommand("chain", "Evaluate the reversed chain");
    c->add_option("--x0", x0)->required();
    c->add_option("--x", x_list, "Comma-separated positive spatial part")->required();
    c->add_option("--y0", y0)->required();
    c->add_option("--y", y_list)->required();
    c->add_option("--mean", lorentz_mean)->capture_default_str();
    commands.push_back({c, [&](std::ostream& o) {
                          const MeanSpec s = parse_mean_spec(lorentz_mean);
                          return chain_result(o, {{"mean", to_string(s)}},
                                              lorentz_chain(x0, parse_list(x_list), y0,
                                                            parse_list(y_list), s));
                        }});
  }

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    return kUsageError;
  }

  for (const auto& cmd : commands) {
    if (!cmd.app->parsed()) continue;
    try {
      return cmd.run(out);
    } catch (const ParameterError& e) {
      err << "error: " << e.what() << '\n';
      return kUsageError;
    } catch (const InputError& e) {
      err << "error: " << e.what() << '\n';
      return kUsageError;
    } catch (const Error& e) {
      err << "error: " << e.what() << '\n';
      return kNumericError;
    }
  }
  err << app.help();
  return kUsageError;
}

}  // namespace ineq::cli
