// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any FAIL.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "eulergamma/cli.hpp"
#include "eulergamma/identities.hpp"
#include "eulergamma/oracle.hpp"
#include "eulergamma/series.hpp"
#include "eulergamma/specfun.hpp"

using namespace eulergamma;

namespace {

int failures = 0;

void report(int id, const std::string& name, bool pass, const std::string& detail) {
  if (!pass) ++failures;
  std::cout << (pass ? "PASS" : "FAIL") << " [" << id << "] " << name << ": " << detail << std::endl;
}

std::string mag(const BigReal& v) { return Magnitude::of(v).to_string(3); }

SeriesParams params(const char* x, const char* w, long digits) {
  const Bits p = working_precision(digits).working_bits;
  return {cli::parse_parameter(x, p), cli::parse_parameter(w, p), digits};
}

void digit_correctness() {
  const auto start = std::chrono::steady_clock::now();
  const GammaResult r = euler_gamma(params("1", "1", 1000));
  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  const BigReal diff = abs(r.value - reference_gamma(1000).value);
  const bool pass = diff <= pow10(-998, 64) && seconds <= 60.0;
  report(1, "digit correctness D=1000", pass,
         "diff=" + mag(diff) + " runtime=" + std::to_string(seconds) + "s");
}

void anchor() {
  const std::string digits = to_fixed_truncated(euler_gamma(params("1", "1", 12)).value, 12);
  report(2, "12-digit anchor", digits == "0.577215664901", digits);
}

void parameter_invariance() {
  const long digits = 200;
  const std::vector<std::pair<const char*, const char*>> grid = {
      {"1", "1"}, {"e", "2"}, {"2", "1"}, {"0.5", "3"}, {"1", "ln2"}};
  std::vector<BigReal> values;
  for (const auto& [x, w] : grid) values.push_back(euler_gamma(params(x, w, digits)).value);
  BigReal worst(64);
  for (std::size_t i = 0; i < values.size(); ++i)
    for (std::size_t j = i + 1; j < values.size(); ++j) {
      const BigReal d = abs(values[i] - values[j]);
      if (d > worst) worst = d;
    }
  report(3, "parameter invariance D=200", worst <= pow10(-198, 64), "max pairwise diff=" + mag(worst));
}

void corollary_fidelity() {
  const long digits = 200;
  const BigReal tol = pow10(-198, 64);
  const IdentityReport one = corollary_one(digits);
  const IdentityReport two = corollary_two(digits);
  const BigReal d1 = abs(one.rhs - one.lhs);
  const BigReal d2 = abs(two.rhs - two.lhs);
  const BigReal s1 = abs(corollary_one_parts(digits).total() - euler_gamma(params("e", "2", digits)).value);
  const BigReal s2 = abs(corollary_two_parts(digits).total() - euler_gamma(params("1", "1", digits)).value);
  const bool pass = d1 <= tol && d2 <= tol && s1 <= tol && s2 <= tol;
  report(4, "corollary fidelity D=200", pass,
         "c1=" + mag(d1) + " c2=" + mag(d2) + " vs general: " + mag(s1) + ", " + mag(s2));
}

void modulus_identity() {
  const PrecisionPolicy policy = working_precision(100);
  const Bits p = policy.working_bits;
  const BigReal pi = const_pi(p);
  const BigReal tol = BigReal::from_si_2exp(1, -p + 16, 64);
  BigReal worst(64);
  for (const BigReal& t : {BigReal(0.5, p), BigReal(1L, p), pi * 2L, BigReal(10L, p), BigReal(50L, p)}) {
    const BigReal n = gamma_imag(t, policy).norm();
    const BigReal d = abs(n * t * sinh(pi * t, p) / pi - 1L);
    if (d > worst) worst = d;
  }
  report(5, "Gamma modulus identity D=100", worst <= tol, "max |ratio-1|=" + mag(worst) + " tol=" + mag(tol));
}

void decay_estimate() {
  const PrecisionPolicy policy = working_precision(30);
  const Bits p = policy.working_bits;
  const BigReal pi = const_pi(p);
  double fitted = 0.0;
  for (long w : {1L, 2L}) {
    for (long k = 1; k <= 40; ++k) {
      const BigReal t = pi * 2L * k / w;
      const BigReal modulus = gamma_imag(t, policy).abs();
      const BigReal c = modulus * exp(pi * pi * k / w, p);
      fitted = std::max(fitted, c.to_double());
    }
  }
  report(6, "decay estimate k=1..40, w in {1,2}", fitted <= 10.0, "fitted C=" + std::to_string(fitted));
}

void gamma_pi() {
  const IdentityReport r = gamma_pi_identity(100);
  const BigReal d = abs(r.lhs - r.rhs);
  report(7, "6 gamma^2 + pi^2 identity D=100", d <= pow10(-98, 64), "diff=" + mag(d));
}

void limiting() {
  const Bits p = working_precision(100).working_bits;
  bool pass = true;
  std::string detail;
  for (const char* x : {"0.5", "1", "2"}) {
    const IdentityReport r = limiting_formula(BigReal::parse(x, p), 100);
    const BigReal d = abs(r.lhs - r.rhs);
    pass = pass && d <= pow10(-98, 64);
    detail += std::string(" x=") + x + ":" + mag(d);
  }
  report(8, "limiting formula D=100", pass, "diff" + detail);
}

void mellin() {
  const Bits p = working_precision(30).working_bits;
  bool pass = true;
  std::string detail;
  const std::vector<std::pair<const char*, const char*>> points = {{"1", "1"}, {"1/2", "1"}, {"1/2", "2"}};
  for (const auto& [a, w] : points) {
    const IdentityReport r = mellin_spot_check(cli::parse_parameter(a, p), cli::parse_parameter(w, p));
    const BigReal rel = abs(r.lhs - r.rhs) / abs(r.rhs);
    pass = pass && rel <= pow10(-12, 64);
    detail += std::string(" (") + a + "," + w + "):" + mag(rel);
  }
  report(9, "Mellin spot check", pass, "rel" + detail);
}

void term_magnitude() {
  std::ostringstream out, err;
  const int code = cli::run({"exponent", "--x", "e", "--w", "2", "--k", "10"}, out, err);
  double mantissa = 0.0;
  long exp10 = 0;
  const bool parsed = std::sscanf(out.str().c_str(), "mantissa=%lf exp10=%ld", &mantissa, &exp10) == 2;

  // Oracle: q = e^21 / ln 10 at 256 bits; e^(-e^21) = 10^(-q).
  const Bits p = 256;
  const BigReal q = exp(BigReal(21L, p), p) / log(BigReal(10L, p), p);
  const BigReal up = floor(q) + 1L;
  const long oracle_exp = -up.to_long_floor();
  const double oracle_mantissa = exp((up - q) * log(BigReal(10L, p), p), p).to_double();

  const bool pass = code == 0 && parsed && exp10 >= -572754398 && exp10 <= -572754397 &&
                    exp10 == oracle_exp && std::fabs(mantissa - oracle_mantissa) <= 1e-8 * oracle_mantissa;
  std::ostringstream detail;
  detail.precision(10);
  detail << "reported " << mantissa << "e" << exp10 << ", oracle " << oracle_mantissa << "e" << oracle_exp
         << " (leading digit " << static_cast<int>(mantissa) << ")";
  report(10, "term magnitude e^(-e^21)", pass, detail.str());
}

void tail_soundness() {
  bool pass = true;
  std::string detail;
  for (long digits : {20L, 50L}) {
    for (const auto& [x, w] : {std::pair{"1", "1"}, std::pair{"e", "2"}, std::pair{"0.5", "3"}}) {
      const SeriesParams sp = params(x, w, digits);
      const TruncationPlan plan = plan_truncation(sp);
      TruncationPlan longer = plan;
      longer.n1 += 10;
      longer.n2 += 10;
      longer.n3 += 10;
      const GammaResult base = euler_gamma(sp, plan);
      const GammaResult extra = euler_gamma(sp, longer);
      const BigReal change = abs(base.value - extra.value);
      const bool ok = change < base.error_bound.to_big(64);
      pass = pass && ok;
      if (!ok) detail += std::string(" D=") + std::to_string(digits) + " (" + x + "," + w + ")";
    }
  }
  report(11, "tail soundness D in {20,50}", pass, pass ? "change < error bound in all cases" : "violated:" + detail);
}

std::string capture(const std::string& command) {
  std::string output;
  FILE* pipe = popen(command.c_str(), "r");
  if (!pipe) return "<popen failed>";
  char buffer[4096];
  std::size_t n;
  while ((n = std::fread(buffer, 1, sizeof buffer, pipe)) > 0) output.append(buffer, n);
  const int status = pclose(pipe);
  if (status != 0) output += "<exit " + std::to_string(status) + ">";
  return output;
}

void determinism() {
  const std::string cli = std::string("'") + EULERGAMMA_CLI_PATH + "' compute --digits 500";
  const std::string first = capture("env -u THREADS " + cli);
  const std::string second = capture("env -u THREADS " + cli);
  const std::string serial = capture("THREADS=1 " + cli);
  const std::string wide = capture("THREADS=64 " + cli);
  const bool pass = first.size() > 500 && first == second && first == serial && first == wide;
  report(12, "determinism compute --digits 500", pass,
         pass ? "4 runs bit-identical (default, default, THREADS=1, THREADS=64)" : "outputs differ");
}

}  // namespace

int main() {
  digit_correctness();
  anchor();
  parameter_invariance();
  corollary_fidelity();
  modulus_identity();
  decay_estimate();
  gamma_pi();
  limiting();
  mellin();
  term_magnitude();
  tail_soundness();
  determinism();
  std::cout << (failures == 0 ? "all 12 criteria passed" : std::to_string(failures) + " criteria failed")
            << std::endl;
  return failures == 0 ? 0 : 1;
}
