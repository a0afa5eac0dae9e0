// kummer: evaluate functions, print constants, run the identity suite.
//
// Exit codes: 0 success / all checks pass, 1 some check failed, 2 usage error.

#include <cstdio>
#include <functional>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include <kummer/kummer.hpp>

#include "report_format.hpp"

namespace {

using kummer::EvalOptions;

class usage_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Evaluator {
  std::vector<std::string> params;
  std::function<double(const std::vector<double>&, const EvalOptions&)> fn;
};

int as_int(double v, const std::string& name) {
  if (v != std::floor(v)) throw usage_error("argument '" + name + "' must be an integer");
  return static_cast<int>(v);
}

const std::map<std::string, Evaluator>& evaluators() {
  using V = std::vector<double>;
  using O = EvalOptions;
  static const std::map<std::string, Evaluator> m = {
      {"log_gamma", {{"t"}, [](const V& a, const O&) { return kummer::log_gamma(a[0]); }}},
      {"digamma", {{"t"}, [](const V& a, const O&) { return kummer::digamma(a[0]); }}},
      {"trigamma", {{"t"}, [](const V& a, const O&) { return kummer::trigamma(a[0]); }}},
      {"log_gamma_kummer", {{"t"}, [](const V& a, const O& o) { return kummer::log_gamma_kummer(a[0], o).value; }}},
      {"log_gamma_hasse", {{"t"}, [](const V& a, const O& o) { return kummer::log_gamma_hasse(a[0], o).value; }}},
      {"digamma_hasse", {{"t"}, [](const V& a, const O& o) { return kummer::digamma_hasse(a[0], o).value; }}},
      {"hurwitz_zeta", {{"s", "t"}, [](const V& a, const O&) { return kummer::hurwitz_zeta(a[0], a[1]); }}},
      {"hurwitz_zeta_hasse",
       {{"s", "t"}, [](const V& a, const O& o) { return kummer::hurwitz_zeta_hasse(a[0], a[1], o).value; }}},
      {"hurwitz_zeta_fourier",
       {{"s", "t"}, [](const V& a, const O& o) { return kummer::hurwitz_zeta_fourier(a[0], a[1], o).value; }}},
      {"hurwitz_zeta_sderiv",
       {{"order", "s", "t"},
        [](const V& a, const O&) { return kummer::hurwitz_zeta_sderiv(as_int(a[0], "order"), a[1], a[2]); }}},
      {"alt_hurwitz_zeta", {{"s", "t"}, [](const V& a, const O&) { return kummer::alt_hurwitz_zeta(a[0], a[1]); }}},
      {"alt_hurwitz_zeta_sondow",
       {{"s", "t"}, [](const V& a, const O& o) { return kummer::alt_hurwitz_zeta_sondow(a[0], a[1], o).value; }}},
      {"alt_hurwitz_zeta_fourier",
       {{"s", "t"}, [](const V& a, const O& o) { return kummer::alt_hurwitz_zeta_fourier(a[0], a[1], o).value; }}},
      {"alt_zeta_hardy", {{"s"}, [](const V& a, const O&) { return kummer::alt_zeta_hardy(a[0]); }}},
      {"lerch_phi",
       {{"z", "s", "t"}, [](const V& a, const O& o) { return kummer::lerch_phi(a[0], a[1], a[2], o).value; }}},
      {"bernoulli_number", {{"n"}, [](const V& a, const O&) { return kummer::bernoulli_number(as_int(a[0], "n")); }}},
      {"bernoulli_poly",
       {{"m", "t"}, [](const V& a, const O&) { return kummer::bernoulli_poly(as_int(a[0], "m"), a[1]); }}},
      {"bernoulli_poly_hasse",
       {{"m", "t"}, [](const V& a, const O&) { return kummer::bernoulli_poly_hasse(as_int(a[0], "m"), a[1]); }}},
      {"euler_poly", {{"m", "t"}, [](const V& a, const O&) { return kummer::euler_poly(as_int(a[0], "m"), a[1]); }}},
      {"bernoulli_fourier",
       {{"m", "t"},
        [](const V& a, const O& o) { return kummer::bernoulli_fourier(as_int(a[0], "m"), a[1], o).value; }}},
      {"euler_fourier",
       {{"m", "t"}, [](const V& a, const O& o) { return kummer::euler_fourier(as_int(a[0], "m"), a[1], o).value; }}},
      {"log_barnes_g_product",
       {{"t"}, [](const V& a, const O& o) { return kummer::log_barnes_g_product(a[0], o).value; }}},
      {"log_barnes_g_fourier",
       {{"t"}, [](const V& a, const O& o) { return kummer::log_barnes_g_fourier(a[0], o).value; }}},
      {"log_barnes_g_zeta", {{"t"}, [](const V& a, const O&) { return kummer::log_barnes_g_zeta(a[0]); }}},
      {"alexeiewsky", {{"x"}, [](const V& a, const O&) { return kummer::alexeiewsky(a[0]); }}},
      {"zeta_prime_minus1_fourier",
       {{"t"}, [](const V& a, const O& o) { return kummer::zeta_prime_minus1_fourier(a[0], o).value; }}},
      {"clausen",
       {{"order", "x"},
        [](const V& a, const O& o) { return kummer::clausen(as_int(a[0], "order"), a[1], o).value; }}},
      {"clausen_via_zeta",
       {{"order", "x_frac"},
        [](const V& a, const O&) { return kummer::clausen_via_zeta(as_int(a[0], "order"), a[1]); }}},
      {"log_sine_integral",
       {{"n", "theta"},
        [](const V& a, const O& o) { return kummer::log_sine_integral(as_int(a[0], "n"), a[1], o); }}},
      {"Si", {{"x"}, [](const V& a, const O&) { return kummer::si_ci(a[0]).si_cap; }}},
      {"si", {{"x"}, [](const V& a, const O&) { return kummer::si_ci(a[0]).si_small; }}},
      {"Ci", {{"x"}, [](const V& a, const O&) { return kummer::cos_integral(a[0]); }}},
      {"glaisher_si_sum", {{}, [](const V&, const O& o) { return kummer::glaisher_si_sum(o).value; }}},
      {"norlund_digamma_series",
       {{"x"}, [](const V& a, const O& o) { return kummer::norlund_digamma_series(a[0], o).value; }}},
      {"loggamma_ci_series",
       {{"x"}, [](const V& a, const O& o) { return kummer::loggamma_ci_series(a[0], o).value; }}},
      {"elizalde_series", {{"x"}, [](const V& a, const O& o) { return kummer::elizalde_series(a[0], o).value; }}},
      {"barnes_ci_combination",
       {{"x"}, [](const V& a, const O& o) { return kummer::barnes_ci_combination(a[0], o).value; }}},
      {"digamma_lerch_series",
       {{"x"}, [](const V& a, const O& o) { return kummer::digamma_lerch_series(a[0], o).value; }}},
  };
  return m;
}

std::vector<std::string> split_csv(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ','))
    if (!item.empty()) out.push_back(item);
  return out;
}

double parse_double(const std::string& s) {
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(s, &used);
  } catch (const std::exception&) {
    throw usage_error("not a number: '" + s + "'");
  }
  if (used != s.size()) throw usage_error("not a number: '" + s + "'");
  return v;
}

std::string function_list() {
  std::string out;
  for (const auto& [name, ev] : evaluators()) {
    out += "  " + name + "(";
    for (std::size_t i = 0; i < ev.params.size(); ++i) out += (i ? ", " : "") + ev.params[i];
    out += ")\n";
  }
  return out;
}

int run_eval(const std::string& name, const std::vector<std::string>& args, const EvalOptions& opts,
             const std::string& format) {
  const auto it = evaluators().find(name);
  if (it == evaluators().end()) throw usage_error("unknown function '" + name + "'; available:\n" + function_list());
  const auto& ev = it->second;
  if (args.size() != ev.params.size())
    throw usage_error(name + " takes " + std::to_string(ev.params.size()) + " argument(s)");
  std::vector<double> values;
  for (const auto& a : args) values.push_back(parse_double(a));
  double v = 0.0;
  try {
    v = ev.fn(values, opts);
  } catch (const kummer::domain_error& e) {
    throw usage_error(e.what());
  }
  if (format == "json") {
    std::string out = "{\"function\": " + kummer::cli::json_string(name) + ", \"args\": [";
    for (std::size_t i = 0; i < values.size(); ++i) out += (i ? ", " : "") + kummer::cli::fmt17(values[i]);
    out += "], \"value\": " + kummer::cli::fmt17(v) + "}\n";
    std::fputs(out.c_str(), stdout);
  } else {
    std::printf("%s\n", kummer::cli::fmt17(v).c_str());
  }
  return 0;
}

int run_constants(const std::string& format) {
  const auto& c = kummer::constants();
  const std::vector<std::tuple<std::string, double, std::string>> rows = {
      {"euler_gamma", c.euler_gamma, c.provenance.euler_gamma},
      {"log_two_pi", c.log_two_pi, c.provenance.log_two_pi},
      {"zeta_prime_minus1", c.zeta_prime_minus1, c.provenance.zeta_prime_minus1},
      {"log_glaisher", c.log_glaisher, c.provenance.log_glaisher},
      {"zeta_prime_2", c.zeta_prime_2, c.provenance.zeta_prime_2},
      {"zeta_second_2", c.zeta_second_2, c.provenance.zeta_second_2},
  };
  if (format == "json") {
    std::string out = "{";
    for (std::size_t i = 0; i < rows.size(); ++i) {
      const auto& [name, v, prov] = rows[i];
      out += (i ? ",\n  " : "\n  ") + kummer::cli::json_string(name) + ": {\"value\": " + kummer::cli::fmt17(v) +
             ", \"provenance\": " + kummer::cli::json_string(prov) + "}";
    }
    out += "\n}\n";
    std::fputs(out.c_str(), stdout);
  } else {
    for (const auto& [name, v, prov] : rows)
      std::printf("%-18s %-25s %s\n", name.c_str(), kummer::cli::fmt17(v).c_str(), prov.c_str());
  }
  return 0;
}

int print_reports(const std::vector<kummer::IdentityReport>& reports, const std::string& format) {
  const std::string text =
      format == "json" ? kummer::cli::reports_to_json(reports) : kummer::cli::reports_to_table(reports);
  std::fputs(text.c_str(), stdout);
  for (const auto& r : reports)
    if (!r.pass) return 1;
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Special-function evaluators and identity checks"};
  app.require_subcommand(1);

  EvalOptions opts;
  std::string format = "table";
  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--format", format, "Output format")->check(CLI::IsMember({"table", "json"}));
    sub->add_option("--abs-tol", opts.abs_tol, "Absolute tolerance");
    sub->add_option("--max-terms", opts.max_terms, "Series term cap");
  };

  std::string fn_name;
  std::vector<std::string> fn_args;
  auto* eval = app.add_subcommand("eval", "Evaluate a function");
  eval->add_option("function", fn_name, "Function name")->required();
  eval->add_option("args", fn_args, "Arguments");
  add_common(eval);

  auto* consts = app.add_subcommand("constants", "Print the cached constants");
  add_common(consts);

  std::string ids_csv;
  std::string grid_csv;
  auto* verify = app.add_subcommand("verify", "Run identity checks");
  verify->add_option("--ids", ids_csv, "Comma-separated identity ids (default: all)");
  verify->add_option("--grid", grid_csv, "Comma-separated grid points in (0, 1)");
  add_common(verify);

  std::string integral_id;
  auto* integrals = app.add_subcommand("integrals", "Run one quadrature-based identity");
  integrals->add_option("id", integral_id, "Identity id")->required();
  add_common(integrals);

  auto* list = app.add_subcommand("list", "List identity ids and evaluator names");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << "\n\n" << app.help();
    return 2;
  }

  try {
    opts.validate();
    if (*eval) return run_eval(fn_name, fn_args, opts, format);
    if (*consts) return run_constants(format);
    if (*list) {
      for (const auto& c : kummer::registry()) std::printf("%-16s %s\n", c.id.c_str(), c.description.c_str());
      std::printf("\nevaluators:\n%s", function_list().c_str());
      return 0;
    }
    kummer::GridSpec grid;
    if (!grid_csv.empty()) {
      grid.points.clear();
      for (const auto& p : split_csv(grid_csv)) grid.points.push_back(parse_double(p));
    }
    if (*verify) {
      const auto ids = ids_csv.empty() ? kummer::all_identity_ids() : split_csv(ids_csv);
      return print_reports(kummer::run_suite(ids, grid, opts), format);
    }
    if (*integrals) {
      if (!kummer::find_check(integral_id).integral) throw usage_error(integral_id + " is not an integral identity");
      return print_reports(kummer::run_suite({integral_id}, grid, opts), format);
    }
  } catch (const usage_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const kummer::selection_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const kummer::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
