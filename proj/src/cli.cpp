#include "eulergamma/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <iostream>
#include <optional>
#include <sstream>
#include <stdexcept>

#include "eulergamma/identities.hpp"
#include "eulergamma/oracle.hpp"
#include "eulergamma/series.hpp"

namespace eulergamma::cli {
namespace {

using Json = nlohmann::ordered_json;
using Clock = std::chrono::steady_clock;

long elapsed_ms(Clock::time_point start) {
  return static_cast<long>(
      std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start).count());
}

Json exp10_or_null(const Magnitude& m) {
  if (m.is_zero()) return nullptr;
  return m.ceil_exp10();
}

// Parses x or w and enforces positivity.
BigReal positive_parameter(const std::string& name, const std::string& text, Bits p) {
  BigReal value = parse_parameter(text, p);
  if (!(value.sign() > 0)) {
    throw std::domain_error(name + " = " + text + " violates the hypothesis " + name +
                            " > 0 (the formula requires x > 0 and w > 0)");
  }
  return value;
}

struct ComputeOptions {
  long digits = 50;
  std::string x = "1";
  std::string w = "1";
  std::string formula = "theorem";
  long n = 1000;
  bool json = false;
};

struct ComputeOutcome {
  BigReal value;
  Magnitude error;
  long n1 = 0, n2 = 0, n3 = 0;
};

ComputeOutcome compute_formula(const ComputeOptions& opt) {
  const PrecisionPolicy policy = working_precision(opt.digits);
  const Bits p = policy.working_bits;
  const BigReal rounding = BigReal::from_si_2exp(1, -p + policy.guard_bits / 2, 64);
  ComputeOutcome outcome;

  if (opt.formula == "theorem") {
    SeriesParams params{positive_parameter("x", opt.x, p), positive_parameter("w", opt.w, p), opt.digits};
    GammaResult r = euler_gamma(params);
    outcome.value = std::move(r.value);
    outcome.error = r.error_bound;
    outcome.n1 = r.n1;
    outcome.n2 = r.n2;
    outcome.n3 = r.n3;
  } else if (opt.formula == "c1" || opt.formula == "c2") {
    const bool one = opt.formula == "c1";
    const SeriesParams params = one ? SeriesParams{const_e(p), BigReal(2L, p), opt.digits}
                                    : SeriesParams{BigReal(1L, p), BigReal(1L, p), opt.digits};
    const TruncationPlan plan = plan_truncation(params);
    const FormulaParts parts = one ? corollary_one_parts(opt.digits) : corollary_two_parts(opt.digits);
    outcome.value = parts.total().rounded(p);
    const BigReal w = params.w.rounded(64);
    const BigReal bound = w * plan.tail1.to_big(64) + w * plan.tail2.to_big(64) +
                          plan.tail3.to_big(64) + rounding;
    outcome.error = Magnitude::of(bound);
    outcome.n1 = plan.n1;
    outcome.n2 = plan.n2;
    outcome.n3 = plan.n3;
  } else if (opt.formula == "limit") {
    const IdentityReport report = limiting_formula(positive_parameter("x", opt.x, p), opt.digits);
    outcome.value = report.rhs;
    outcome.error = Magnitude::of(BigReal(2e-4, 64) * pow10(-opt.digits, 64) + rounding);
  } else if (opt.formula == "naive") {
    if (opt.n < 1) throw std::domain_error("--n must be >= 1");
    outcome.value = naive_gamma(opt.n);
    outcome.error = Magnitude::of(BigReal(1.0 / (2.0 * static_cast<double>(opt.n)), 64));
  } else {
    throw std::domain_error("unknown formula '" + opt.formula + "'");
  }
  return outcome;
}

int run_compute(const ComputeOptions& opt, std::ostream& out, std::ostream& err) {
  const auto start = Clock::now();
  ComputeOutcome outcome;
  try {
    outcome = compute_formula(opt);
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  }
  const std::string digits = to_fixed_truncated(outcome.value, opt.digits);
  if (!opt.json) {
    out << digits << '\n';
    return kSuccess;
  }
  Json report;
  report["command"] = "compute";
  report["x"] = opt.x;
  report["w"] = opt.w;
  report["digits"] = opt.digits;
  report["formula"] = opt.formula;
  report["result"] = digits;
  report["error_exp10"] = exp10_or_null(outcome.error);
  report["n1"] = outcome.n1;
  report["n2"] = outcome.n2;
  report["n3"] = outcome.n3;
  report["elapsed_ms"] = elapsed_ms(start);
  report["pass"] = nullptr;
  out << report.dump() << '\n';
  return kSuccess;
}

struct VerifyOptions {
  long digits = 50;
  std::string grid = "default";
  std::string identities = "all";
  bool json = false;
};

const std::vector<std::string>& identity_names() {
  static const std::vector<std::string> names = {"corollary_one", "corollary_two", "limiting_formula",
                                                 "gamma_pi_identity", "mellin_spot_check"};
  return names;
}

std::string canonical_identity(const std::string& name) {
  if (name == "c1") return "corollary_one";
  if (name == "c2") return "corollary_two";
  if (name == "limit") return "limiting_formula";
  if (name == "gamma_pi") return "gamma_pi_identity";
  if (name == "mellin") return "mellin_spot_check";
  return name;
}

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> parts;
  std::string item;
  std::istringstream in(text);
  while (std::getline(in, item, sep)) {
    item.erase(0, item.find_first_not_of(" \t"));
    item.erase(item.find_last_not_of(" \t") + 1);
    if (!item.empty()) parts.push_back(item);
  }
  return parts;
}

std::vector<std::pair<std::string, std::string>> parse_grid(const std::string& grid) {
  if (grid == "default") return {{"1", "1"}, {"e", "2"}, {"2", "1"}, {"0.5", "3"}, {"1", "ln2"}};
  std::vector<std::pair<std::string, std::string>> pairs;
  for (const std::string& entry : split(grid, ';')) {
    const auto fields = split(entry, ',');
    if (fields.size() != 2) throw std::invalid_argument("grid entries must be 'x,w' separated by ';'");
    pairs.emplace_back(fields[0], fields[1]);
  }
  if (pairs.empty()) throw std::invalid_argument("empty grid");
  return pairs;
}

int run_verify(const VerifyOptions& opt, std::ostream& out, std::ostream& err) {
  std::vector<std::string> selected;
  std::vector<std::pair<std::string, std::string>> grid;
  std::vector<SeriesParams> grid_params;
  const Bits p = working_precision(opt.digits).working_bits;
  try {
    if (opt.identities == "all") {
      selected = identity_names();
    } else if (opt.identities != "none") {
      for (const std::string& raw : split(opt.identities, ',')) {
        const std::string name = canonical_identity(raw);
        if (std::find(identity_names().begin(), identity_names().end(), name) == identity_names().end()) {
          throw std::invalid_argument("unknown identity '" + raw + "'");
        }
        selected.push_back(name);
      }
    }
    grid = parse_grid(opt.grid);
    for (const auto& [xs, ws] : grid) {
      grid_params.push_back({positive_parameter("x", xs, p), positive_parameter("w", ws, p), opt.digits});
    }
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  }

  bool all_pass = true;
  Json report;
  report["command"] = "verify";
  report["digits"] = opt.digits;

  // Parameter invariance over the grid.
  std::vector<GammaResult> results;
  Json grid_json = Json::array();
  for (std::size_t i = 0; i < grid_params.size(); ++i) {
    results.push_back(euler_gamma(grid_params[i]));
    grid_json.push_back({{"x", grid[i].first}, {"w", grid[i].second},
                         {"n1", results.back().n1}, {"n2", results.back().n2}, {"n3", results.back().n3}});
  }
  BigReal max_diff(64);
  for (std::size_t i = 0; i < results.size(); ++i) {
    for (std::size_t j = i + 1; j < results.size(); ++j) {
      const BigReal diff = abs(results[i].value - results[j].value);
      if (diff > max_diff) max_diff = diff.rounded(64);
    }
  }
  const bool grid_pass = max_diff <= pow10(-opt.digits + 2, 128);
  all_pass = all_pass && grid_pass;
  const Magnitude grid_diff = Magnitude::of(max_diff);
  report["grid"] = grid_json;
  report["grid_max_diff_exp10"] = exp10_or_null(grid_diff);
  report["grid_pass"] = grid_pass;
  if (!opt.json) {
    out << (grid_pass ? "PASS" : "FAIL") << " grid_invariance pairs=" << grid.size()
        << " max_diff=" << grid_diff.to_string(3) << '\n';
  }

  std::vector<IdentityReport> reports;
  for (const std::string& name : selected) {
    if (name == "corollary_one") {
      reports.push_back(corollary_one(opt.digits));
    } else if (name == "corollary_two") {
      reports.push_back(corollary_two(opt.digits));
    } else if (name == "limiting_formula") {
      for (const char* x : {"0.5", "1", "2"}) {
        IdentityReport r = limiting_formula(parse_parameter(x, p), opt.digits);
        r.name += std::string("(x=") + x + ")";
        reports.push_back(std::move(r));
      }
    } else if (name == "gamma_pi_identity") {
      reports.push_back(gamma_pi_identity(opt.digits));
    } else if (name == "mellin_spot_check") {
      for (const auto& [a, w] : {std::pair{"1", "1"}, std::pair{"1/2", "1"}, std::pair{"1/2", "2"}}) {
        IdentityReport r = mellin_spot_check(parse_parameter(a, 128), parse_parameter(w, 128));
        r.name += std::string("(a=") + a + ",w=" + w + ")";
        reports.push_back(std::move(r));
      }
    }
  }
  Json identities_json = Json::array();
  for (const IdentityReport& r : reports) {
    all_pass = all_pass && r.pass;
    identities_json.push_back({{"name", r.name}, {"digits", r.digits},
                               {"abs_diff_exp10", exp10_or_null(r.abs_diff)}, {"pass", r.pass}});
    if (!opt.json) {
      out << (r.pass ? "PASS" : "FAIL") << ' ' << r.name << " diff=" << r.abs_diff.to_string(3)
          << " tolerance=1e" << (-r.digits + 2) << '\n';
    }
  }
  report["identities"] = identities_json;
  report["pass"] = all_pass;
  if (opt.json) {
    out << report.dump() << '\n';
  } else {
    out << (all_pass ? "all checks passed" : "verification FAILED") << '\n';
  }
  return all_pass ? kSuccess : kVerificationFailed;
}

struct ExponentOptions {
  std::string x = "1";
  std::string w = "1";
  long k = 0;
  bool json = false;
};

int run_exponent(const ExponentOptions& opt, std::ostream& out, std::ostream& err) {
  if (opt.k < 0) {
    err << "error: --k must be >= 0\n";
    return kUsageError;
  }
  Magnitude m;
  try {
    // Enough bits that x e^(wk) keeps about 64 fractional bits after division by ln 10.
    const BigReal w_probe = parse_parameter(opt.w, 64);
    const double scale = std::max(1.0, w_probe.to_double() * static_cast<double>(opt.k) * 1.4426950408889634);
    const Bits p = 128 + static_cast<Bits>(scale);
    const BigReal x = positive_parameter("x", opt.x, p);
    const BigReal w = positive_parameter("w", opt.w, p);
    const BigReal arg = x * exp(w * opt.k, p);
    m = exponent_of_exp_neg(arg);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  }
  char mantissa[32];
  std::snprintf(mantissa, sizeof mantissa, "%.9f", m.mantissa);
  if (opt.json) {
    Json report;
    report["command"] = "exponent";
    report["x"] = opt.x;
    report["w"] = opt.w;
    report["k"] = opt.k;
    report["mantissa"] = mantissa;
    report["exp10"] = m.exp10;
    out << report.dump() << '\n';
  } else {
    out << "mantissa=" << mantissa << " exp10=" << m.exp10 << '\n';
  }
  return kSuccess;
}

struct BenchOptions {
  std::string digits_list = "50,100,200";
  std::string formula = "theorem";
  std::string x = "1";
  std::string w = "1";
  bool json = false;
};

int run_bench(const BenchOptions& opt, std::ostream& out, std::ostream& err) {
  std::vector<long> digit_list;
  try {
    for (const std::string& item : split(opt.digits_list, ',')) {
      std::size_t used = 0;
      const long d = std::stol(item, &used);
      if (used != item.size() || d < 1) throw std::invalid_argument("bad digit count '" + item + "'");
      digit_list.push_back(d);
    }
    if (digit_list.empty()) throw std::invalid_argument("--digits-list must not be empty");
    if (opt.formula != "theorem" && opt.formula != "c1" && opt.formula != "c2") {
      throw std::invalid_argument("bench supports formulas theorem, c1, c2");
    }
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  }

  Json rows = Json::array();
  if (!opt.json) out << "digits      n1      n2      n3  elapsed_ms  gamma_share\n";
  for (const long d : digit_list) {
    const Bits p = working_precision(d).working_bits;
    SeriesParams params;
    try {
      if (opt.formula == "c1") {
        params = {const_e(p), BigReal(2L, p), d};
      } else if (opt.formula == "c2") {
        params = {BigReal(1L, p), BigReal(1L, p), d};
      } else {
        params = {positive_parameter("x", opt.x, p), positive_parameter("w", opt.w, p), d};
      }
    } catch (const std::exception& e) {
      err << "error: " << e.what() << '\n';
      return kUsageError;
    }
    const GammaResult r = euler_gamma(params);
    const double share = r.elapsed_seconds > 0 ? r.gamma_sum_seconds / r.elapsed_seconds : 0.0;
    const long ms = static_cast<long>(std::llround(r.elapsed_seconds * 1000.0));
    if (opt.json) {
      rows.push_back({{"digits", d}, {"n1", r.n1}, {"n2", r.n2}, {"n3", r.n3},
                      {"elapsed_ms", ms}, {"gamma_share", std::round(share * 1000.0) / 1000.0}});
    } else {
      char line[128];
      std::snprintf(line, sizeof line, "%6ld %7ld %7ld %7ld %11ld %12.3f\n", d, r.n1, r.n2, r.n3, ms, share);
      out << line;
    }
  }
  if (opt.json) out << Json{{"command", "bench"}, {"formula", opt.formula}, {"rows", rows}}.dump() << '\n';
  return kSuccess;
}

}  // namespace

BigReal parse_parameter(std::string_view text, Bits precision) {
  if (text == "e") return const_e(precision);
  if (text == "pi") return const_pi(precision);
  if (text == "ln2") return const_ln2(precision);
  if (const auto slash = text.find('/'); slash != std::string_view::npos) {
    const BigReal num = BigReal::parse(text.substr(0, slash), precision + 8);
    const BigReal den = BigReal::parse(text.substr(slash + 1), precision + 8);
    if (den.is_zero()) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
    return (num / den).rounded(precision);
  }
  return BigReal::parse(text, precision);
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"High-precision Euler's constant from the generalized residue formula"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all");

  ComputeOptions compute;
  auto* compute_cmd = app.add_subcommand("compute", "print digits of Euler's constant");
  compute_cmd->add_option("--digits", compute.digits, "decimal digits")->check(CLI::PositiveNumber);
  compute_cmd->add_option("--x", compute.x, "parameter x > 0 (decimal, p/q, e, pi, ln2)");
  compute_cmd->add_option("--w", compute.w, "parameter w > 0");
  compute_cmd->add_option("--formula", compute.formula, "theorem, c1, c2, limit or naive")
      ->check(CLI::IsMember({"theorem", "c1", "c2", "limit", "naive"}));
  compute_cmd->add_option("--n", compute.n, "harmonic terms for --formula naive");
  compute_cmd->add_flag("--json", compute.json, "emit a JSON report");

  VerifyOptions verify;
  auto* verify_cmd = app.add_subcommand("verify", "check parameter invariance and identities");
  verify_cmd->add_option("--digits", verify.digits, "decimal digits")->check(CLI::PositiveNumber);
  verify_cmd->add_option("--grid", verify.grid, "'default' or 'x,w;x,w;...'");
  verify_cmd->add_option("--identities", verify.identities, "'all', 'none' or a comma list of names");
  verify_cmd->add_flag("--json", verify.json, "emit a JSON report");

  ExponentOptions exponent;
  auto* exponent_cmd = app.add_subcommand("exponent", "decimal exponent of the term exp(-x e^(wk))");
  exponent_cmd->add_option("--x", exponent.x, "parameter x > 0");
  exponent_cmd->add_option("--w", exponent.w, "parameter w > 0");
  exponent_cmd->add_option("--k", exponent.k, "term index k >= 0");
  exponent_cmd->add_flag("--json", exponent.json, "emit a JSON report");

  BenchOptions bench;
  auto* bench_cmd = app.add_subcommand("bench", "time the evaluator over several digit counts");
  bench_cmd->add_option("--digits-list", bench.digits_list, "comma-separated digit counts");
  bench_cmd->add_option("--formula", bench.formula, "theorem, c1 or c2");
  bench_cmd->add_option("--x", bench.x, "parameter x > 0");
  bench_cmd->add_option("--w", bench.w, "parameter w > 0");
  bench_cmd->add_flag("--json", bench.json, "emit JSON rows");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kSuccess : kUsageError;
  }

  if (*compute_cmd) return run_compute(compute, out, err);
  if (*verify_cmd) return run_verify(verify, out, err);
  if (*exponent_cmd) return run_exponent(exponent, out, err);
  return run_bench(bench, out, err);
}

}  // namespace eulergamma::cli
