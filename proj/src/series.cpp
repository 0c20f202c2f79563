#include "eulergamma/series.hpp"

#include <chrono>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "eulergamma/specfun.hpp"
#include "parallel.hpp"

namespace eulergamma {
namespace {

constexpr double kLn10 = 2.30258509299404568402;
constexpr double kPi = 3.14159265358979323846;

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

Magnitude magnitude_from_ln(double ln_value) {
  if (std::isinf(ln_value) && ln_value < 0) return Magnitude::zero();
  return Magnitude::from_log10(BigReal(ln_value / kLn10, 64));
}

// ln(e^y - 1) for y > 0 without overflow.
double log_expm1(double y) {
  return y > 30.0 ? y + std::log1p(-std::exp(-y)) : std::log(std::expm1(y));
}

// ln of |S2 term k| = k ln x - ln k! - ln(e^(wk) - 1).
double log_alternating_term(long k, double log_x, double w) {
  const double kd = static_cast<double>(k);
  return kd * log_x - std::lgamma(kd + 1.0) - log_expm1(w * kd);
}

Bits bits_for(double value) {
  return value > 1.0 ? static_cast<Bits>(std::ceil(std::log2(value))) : 0;
}

}  // namespace

void SeriesParams::validate() const {
  if (!(x.sign() > 0)) throw std::invalid_argument("x must satisfy x > 0");
  if (!(w.sign() > 0)) throw std::invalid_argument("w must satisfy w > 0");
  if (digits < 1) throw std::invalid_argument("digit count must be >= 1");
}

double log_gamma_imag_modulus(double t) {
  const double y = kPi * t;
  const double log_sinh = y > 20.0 ? y - std::log(2.0) + std::log1p(-std::exp(-2.0 * y))
                                   : std::log(std::sinh(y));
  return 0.5 * (std::log(kPi) - std::log(t) - log_sinh);
}

TruncationPlan plan_truncation(const SeriesParams& params) {
  params.validate();
  const double log_x = log(params.x, 64).to_double();
  const double w = params.w.to_double();
  const double d = static_cast<double>(params.digits);
  const double target = -(d + 4.0) * kLn10;
  const double tail_limit = -(d + 2.0) * kLn10;
  TruncationPlan plan;

  // S1: first omitted term exp(-x e^(wN)) <= 10^(-D-4).
  {
    const double log_needed = std::log((d + 4.0) * kLn10);
    auto reaches = [&](long n) { return log_x + w * static_cast<double>(n) >= log_needed; };
    long n = std::max(1L, static_cast<long>(std::ceil((log_needed - log_x) / w)));
    while (n > 1 && reaches(n - 1)) --n;
    while (!reaches(n)) ++n;
    auto log_tail = [&](long k) {
      const double arg = std::exp(log_x + w * static_cast<double>(k));
      return -arg - std::log1p(-std::exp(-arg * std::expm1(w)));
    };
    while (log_tail(n) > tail_limit) ++n;
    plan.n1 = n;
    plan.tail1 = magnitude_from_ln(log_tail(n));
  }

  // S2: alternating, monotone once k >= 2x.
  {
    const double x = std::exp(log_x);
    long n = std::max(1L, static_cast<long>(std::ceil(2.0 * x)));
    while (log_alternating_term(n, log_x, w) > target) ++n;
    plan.n2 = n;
    plan.tail2 = magnitude_from_ln(std::log(2.0) + log_alternating_term(n + 1, log_x, w));
  }

  // S3: |Gamma(2 pi i k / w)| from the exact modulus identity; the ratio of
  // consecutive moduli is below e^(-pi^2 / w).
  {
    auto log_modulus = [&](long k) { return log_gamma_imag_modulus(2.0 * kPi * static_cast<double>(k) / w); };
    const double geometric = -std::log1p(-std::exp(-kPi * kPi / w));
    auto log_tail = [&](long n) { return std::log(2.0) + log_modulus(n + 1) + geometric; };
    long n = 1;
    while (log_modulus(n) > target) ++n;
    while (log_tail(n) > tail_limit) ++n;
    plan.n3 = n;
    plan.tail3 = magnitude_from_ln(log_tail(n));
  }
  return plan;
}

BigReal sum_double_exponential(const SeriesParams& params, long n1, const PrecisionPolicy& policy) {
  const Bits p = policy.working_bits;
  if (n1 <= 0) return BigReal(p);
  const double largest_arg =
      std::exp(log(params.x, 64).to_double() + params.w.to_double() * static_cast<double>(n1 - 1));
  const Bits pa = p + 16 + bits_for(largest_arg);
  const BigReal x = params.x.rounded(pa);
  const BigReal w = params.w.rounded(pa);
  BigReal sum(p);
  for (long k = n1 - 1; k >= 0; --k) {
    const BigReal arg = x * exp(w * k, pa);
    sum += exp(-arg, p);
  }
  return sum;
}

BigReal sum_alternating(const SeriesParams& params, long n2, const PrecisionPolicy& policy) {
  const Bits p = policy.working_bits;
  if (n2 <= 0) return BigReal(p);
  const double log_x = log(params.x, 64).to_double();
  const double w_d = params.w.to_double();
  double largest = 0.0;
  for (long k = 1; k <= n2; ++k) largest = std::max(largest, log_alternating_term(k, log_x, w_d));
  const Bits pe = p + 16 + bits_for(largest / std::log(2.0));
  const BigReal x = params.x.rounded(pe);
  const BigReal w = params.w.rounded(pe);

  // |term_{k+1}| = |term_k| * x / (k+1) * (e^(wk) - 1) / (e^(w(k+1)) - 1)
  std::vector<BigReal> terms;
  terms.reserve(static_cast<std::size_t>(n2));
  BigReal denom = expm1(w, pe);
  BigReal term = x / denom;
  terms.push_back(term);
  for (long k = 1; k < n2; ++k) {
    BigReal next_denom = expm1(w * (k + 1), pe);
    term *= x;
    term /= k + 1;
    term *= denom;
    term /= next_denom;
    terms.push_back(term);
    denom = std::move(next_denom);
  }
  BigReal sum(pe);
  for (long k = n2; k >= 1; --k) {
    const BigReal& t = terms[static_cast<std::size_t>(k - 1)];
    if (k % 2 == 1) sum += t; else sum -= t;
  }
  return sum.rounded(p);
}

BigReal sum_gamma_oscillatory(const SeriesParams& params, long n3, const PrecisionPolicy& policy) {
  const Bits p = policy.working_bits;
  if (n3 <= 0) return BigReal(p);
  const Bits pt = p + 32 + bits_for(static_cast<double>(n3));
  const BigReal two_pi_t = ldexp(const_pi(pt), 1);
  const BigReal w = params.w.rounded(pt);

  // Phase 2 pi k ln(x) / w reduced modulo 2 pi from a stored ln(x)/w.
  const BigReal log_x = log(params.x, p + 64);
  const double cycles = std::fabs((log_x / params.w).to_double()) * static_cast<double>(n3);
  const Bits pr = p + 64 + bits_for(cycles) + bits_for(static_cast<double>(n3));
  const BigReal ratio = log(params.x, pr) / params.w.rounded(pr);
  const BigReal two_pi_r = ldexp(const_pi(pr), 1);

  PrecisionPolicy gamma_policy = policy;
  gamma_policy.working_bits = p + 16;

  std::vector<BigReal> terms(static_cast<std::size_t>(n3));
  detail::parallel_for(n3, [&](long i) {
    const long k = i + 1;
    const BigReal t = two_pi_t * k / w;
    const BigComplex g = gamma_imag(t, gamma_policy);
    const BigReal angle = (two_pi_r * frac(ratio * k)).rounded(p + 16);
    BigReal s(p + 16), c(p + 16);
    mpfr_sin_cos(s.get(), c.get(), angle.get(), MPFR_RNDN);
    terms[static_cast<std::size_t>(i)] = g.re * c + g.im * s;
  });

  BigReal sum(p + 16);
  for (long k = n3; k >= 1; --k) sum += terms[static_cast<std::size_t>(k - 1)];
  return ldexp(sum, 1).rounded(p);
}

GammaResult euler_gamma(const SeriesParams& params) {
  return euler_gamma(params, plan_truncation(params));
}

GammaResult euler_gamma(const SeriesParams& params, const TruncationPlan& plan) {
  params.validate();
  const auto start = Clock::now();
  const PrecisionPolicy policy = working_precision(params.digits);
  const Bits p = policy.working_bits;

  const BigReal s1 = sum_double_exponential(params, plan.n1, policy);
  const BigReal s2 = sum_alternating(params, plan.n2, policy);
  const auto gamma_start = Clock::now();
  const BigReal s3 = sum_gamma_oscillatory(params, plan.n3, policy);
  const double gamma_seconds = seconds_since(gamma_start);

  const BigReal w = params.w.rounded(p);
  BigReal value = ldexp(w, -1);
  value -= log(params.x, p);
  value -= w * s1;
  value += w * s2;
  value += s3;

  const BigReal w64 = params.w.rounded(64);
  BigReal bound = w64 * plan.tail1.to_big(64) + w64 * plan.tail2.to_big(64) + plan.tail3.to_big(64);
  bound += BigReal::from_si_2exp(1, -p + policy.guard_bits / 2, 64);

  GammaResult result;
  result.value = std::move(value);
  result.error_bound = Magnitude::of(bound);
  result.n1 = plan.n1;
  result.n2 = plan.n2;
  result.n3 = plan.n3;
  result.gamma_sum_seconds = gamma_seconds;
  result.elapsed_seconds = seconds_since(start);
  return result;
}

}  // namespace eulergamma
