#include "eulergamma/identities.hpp"

#include <cmath>
#include <stdexcept>
#include <utility>
#include <vector>

#include "eulergamma/oracle.hpp"
#include "eulergamma/series.hpp"
#include "eulergamma/specfun.hpp"
#include "parallel.hpp"

namespace eulergamma {
namespace {

constexpr double kLn10 = 2.30258509299404568402;
constexpr double kPi = 3.14159265358979323846;

// Sum of term(k) over k in [first, last], largest k first.
template <typename Term>
BigReal sum_descending(long first, long last, Bits p, Term&& term) {
  BigReal sum(p);
  for (long k = last; k >= first; --k) sum += term(k);
  return sum;
}

// Same, with the terms evaluated concurrently.
template <typename Term>
BigReal sum_descending_parallel(long first, long last, Bits p, Term&& term) {
  if (last < first) return BigReal(p);
  std::vector<BigReal> terms(static_cast<std::size_t>(last - first + 1));
  detail::parallel_for(last - first + 1, [&](long i) { terms[static_cast<std::size_t>(i)] = term(first + i); });
  BigReal sum(p);
  for (auto it = terms.rbegin(); it != terms.rend(); ++it) sum += *it;
  return sum;
}

BigReal factorial(long k, Bits p) {
  BigReal out(p);
  mpfr_fac_ui(out.get(), static_cast<unsigned long>(k), MPFR_RNDN);
  return out;
}

PrecisionPolicy raised(const PrecisionPolicy& policy, Bits extra) {
  PrecisionPolicy out = policy;
  out.working_bits += extra;
  return out;
}

// Real part of Gamma(i t) for t = multiple * pi * k.
BigReal re_gamma_pi_multiple(long multiple, long k, const PrecisionPolicy& policy) {
  const Bits p = policy.working_bits + 32;
  const BigReal t = const_pi(p) * (multiple * k);
  return gamma_imag(t, policy).re;
}

}  // namespace

IdentityReport make_report(std::string name, BigReal lhs, BigReal rhs, long digits) {
  IdentityReport report;
  report.name = std::move(name);
  const BigReal diff = abs(lhs - rhs);
  report.abs_diff = Magnitude::of(diff);
  report.digits = digits;
  report.pass = diff <= pow10(-digits + 2, 128);
  report.lhs = std::move(lhs);
  report.rhs = std::move(rhs);
  return report;
}

BigReal FormulaParts::total() const {
  BigReal sum = constant + double_exponential;
  sum += alternating;
  sum += gamma_sum;
  return sum;
}

BigReal corollary_one_double_exp_term(long k, Bits p) {
  const BigReal arg = exp(BigReal(2 * k + 1, p + 16), p + 16);
  return ldexp(-exp(-arg, p), 1);
}

BigReal corollary_one_alternating_term(long k, Bits p) {
  BigReal term = BigReal(1L, p) / (factorial(k, p) * sinh(BigReal(k, p), p));
  return k % 2 == 1 ? term : -term;
}

BigReal corollary_one_gamma_term(long k, const PrecisionPolicy& policy) {
  BigReal term = ldexp(re_gamma_pi_multiple(1, k, policy), 1);
  // -2 (-1)^(k+1) Re Gamma(pi i k)
  return k % 2 == 1 ? -term : term;
}

BigReal corollary_two_double_exp_term(long k, Bits p) {
  const BigReal arg = exp(BigReal(k, p + 16), p + 16);
  return -exp(-arg, p);
}

BigReal corollary_two_alternating_term(long k, Bits p) {
  BigReal term = BigReal(1L, p) / (factorial(k, p) * expm1(BigReal(k, p), p));
  return k % 2 == 1 ? term : -term;
}

BigReal corollary_two_gamma_term(long k, const PrecisionPolicy& policy) {
  return ldexp(re_gamma_pi_multiple(2, k, policy), 1);
}

BigReal gamma_pi_k_term(long k, Bits p) {
  const Bits pe = p + 16;
  const BigReal kk(k, pe);
  const BigReal double_exp = exp(-exp(kk, pe), pe);
  // 1 - e^(-u) with u = e^(-k); never formed as a difference near 1.
  const BigReal one_minus = -expm1(-exp(-kk, pe), pe);
  return ((double_exp + one_minus) * k).rounded(p);
}

BigReal gamma_pi_derivative_term(long k, const PrecisionPolicy& policy) {
  const Bits p = policy.working_bits + 32;
  const BigReal t = ldexp(const_pi(p), 1) * k;
  const BigComplex g = gamma_imag(t, policy);
  const BigComplex psi = digamma_imag(t, policy);
  return g.re * psi.re - g.im * psi.im;
}

FormulaParts corollary_one_parts(long digits) {
  const PrecisionPolicy policy = working_precision(digits);
  const Bits p = policy.working_bits + 16;
  const TruncationPlan plan = plan_truncation({const_e(p), BigReal(2L, p), digits});
  const PrecisionPolicy term_policy = raised(policy, 16);

  FormulaParts parts;
  parts.constant = BigReal(p);
  parts.double_exponential =
      sum_descending(0, plan.n1 - 1, p, [&](long k) { return corollary_one_double_exp_term(k, p); });
  parts.alternating =
      sum_descending(1, plan.n2, p, [&](long k) { return corollary_one_alternating_term(k, p); });
  parts.gamma_sum = sum_descending_parallel(
      1, plan.n3, p, [&](long k) { return corollary_one_gamma_term(k, term_policy); });
  return parts;
}

FormulaParts corollary_two_parts(long digits) {
  const PrecisionPolicy policy = working_precision(digits);
  const Bits p = policy.working_bits + 16;
  const TruncationPlan plan = plan_truncation({BigReal(1L, p), BigReal(1L, p), digits});
  const PrecisionPolicy term_policy = raised(policy, 16);

  FormulaParts parts;
  parts.constant = ldexp(BigReal(1L, p), -1);
  parts.double_exponential =
      sum_descending(0, plan.n1 - 1, p, [&](long k) { return corollary_two_double_exp_term(k, p); });
  parts.alternating =
      sum_descending(1, plan.n2, p, [&](long k) { return corollary_two_alternating_term(k, p); });
  parts.gamma_sum = sum_descending_parallel(
      1, plan.n3, p, [&](long k) { return corollary_two_gamma_term(k, term_policy); });
  return parts;
}

IdentityReport corollary_one(long digits) {
  const Bits p = working_precision(digits).working_bits;
  return make_report("corollary_one", reference_gamma(digits).value,
                     corollary_one_parts(digits).total().rounded(p), digits);
}

IdentityReport corollary_two(long digits) {
  const Bits p = working_precision(digits).working_bits;
  return make_report("corollary_two", reference_gamma(digits).value,
                     corollary_two_parts(digits).total().rounded(p), digits);
}

IdentityReport limiting_formula(const BigReal& x, long digits) {
  if (!(x.sign() > 0)) throw std::invalid_argument("x must satisfy x > 0");
  const PrecisionPolicy policy = working_precision(digits);
  const Bits p = policy.working_bits;

  const double log_x = log(x, 64).to_double();
  const double xd = std::exp(log_x);
  auto log_term = [&](long k) {
    const double kd = static_cast<double>(k);
    return kd * log_x - std::lgamma(kd + 1.0) - std::log(kd);
  };
  long n = std::max(1L, static_cast<long>(std::ceil(2.0 * xd)));
  while (log_term(n) > -(static_cast<double>(digits) + 4.0) * kLn10) ++n;

  const Bits pe = p + 16 + static_cast<Bits>(std::ceil(std::max(0.0, xd) * 1.4426950408889634));
  const BigReal xp = x.rounded(pe);
  BigReal power_over_factorial = xp;
  std::vector<BigReal> terms;
  terms.reserve(static_cast<std::size_t>(n));
  for (long k = 1; k <= n; ++k) {
    if (k > 1) {
      power_over_factorial *= xp;
      power_over_factorial /= k;
    }
    terms.push_back(power_over_factorial / k);
  }
  BigReal series(pe);
  for (long k = n; k >= 1; --k) {
    if (k % 2 == 1) series += terms[static_cast<std::size_t>(k - 1)];
    else series -= terms[static_cast<std::size_t>(k - 1)];
  }

  const BigReal e1 = exp_integral_e1(x, raised(policy, 16), E1Branch::kContinuedFraction);
  BigReal rhs = series - e1;
  rhs -= log(xp, pe);
  return make_report("limiting_formula", reference_gamma(digits).value, rhs.rounded(p), digits);
}

IdentityReport gamma_pi_identity(long digits) {
  const PrecisionPolicy policy = working_precision(digits);
  const Bits p = policy.working_bits;
  const Bits pe = p + 16;
  const double target = -(static_cast<double>(digits) + 4.0) * kLn10;

  const BigReal euler = reference_gamma(digits).value.rounded(pe);
  const BigReal pi = reference_pi(digits).value.rounded(pe);
  BigReal lhs = euler * euler * 6L;
  lhs += pi * pi;

  // k-sum terms are below 2k e^-k for k >= 3; the tail beyond K is below
  // 4 * 2(K+1) e^-(K+1), scaled by 12 in the identity.
  long k_terms = 3;
  while (std::log(96.0 * static_cast<double>(k_terms + 1)) - static_cast<double>(k_terms + 1) > target) {
    ++k_terms;
  }
  // |Gamma'(2 pi i k)| <= |Gamma(2 pi i k)| (ln(2 pi k) + 2).
  long d_terms = 1;
  auto log_derivative_bound = [](long k) {
    const double t = 2.0 * kPi * static_cast<double>(k);
    return log_gamma_imag_modulus(t) + std::log(std::log(t) + 2.0);
  };
  while (std::log(48.0) + log_derivative_bound(d_terms + 1) > target) ++d_terms;

  const BigReal k_sum = sum_descending(1, k_terms, pe, [&](long k) { return gamma_pi_k_term(k, pe); });
  const PrecisionPolicy term_policy = raised(policy, 16);
  const BigReal d_sum = sum_descending_parallel(
      1, d_terms, pe, [&](long k) { return gamma_pi_derivative_term(k, term_policy); });

  BigReal rhs(1L, pe);
  rhs += k_sum * 12L;
  rhs -= d_sum * 24L;
  return make_report("gamma_pi_identity", lhs.rounded(p), rhs.rounded(p), digits);
}

BigReal mellin_base_integral(const BigReal& a, Bits p) {
  // u = v^(1/a) turns the integral into (1/a) int_0^inf exp(-v^(1/a)) dv, and
  // v = exp(pi/2 sinh s) maps it onto the real line.
  const Bits pe = p + 16;
  const BigReal half_pi = ldexp(const_pi(pe), -1);
  const BigReal inv_a = BigReal(1L, pe) / a.rounded(pe);
  const BigReal eps = BigReal::from_si_2exp(1, -pe, 64);

  auto integrand = [&](const BigReal& s) {
    const BigReal log_v = half_pi * sinh(s, pe);
    const BigReal decay = exp(-exp(log_v * inv_a, pe), pe);
    return half_pi * cosh(s, pe) * exp(log_v, pe) * decay;
  };
  auto trapezoid = [&](const BigReal& h) {
    BigReal sum = integrand(BigReal(pe));
    for (int direction : {1, -1}) {
      for (long j = 1;; ++j) {
        const BigReal s = h * (direction * j);
        const BigReal term = integrand(s);
        sum += term;
        if (abs(s) > 1L && term < eps * sum) break;
        if (j > 1000000) throw std::runtime_error("quadrature range did not close");
      }
    }
    return sum * h;
  };

  BigReal h = ldexp(BigReal(1L, pe), -1);
  BigReal previous = trapezoid(h);
  const BigReal tolerance = BigReal::from_si_2exp(1, -p, 64);
  for (int level = 0; level < 20; ++level) {
    h = ldexp(h, -1);
    BigReal current = trapezoid(h);
    const bool converged = abs(current - previous) < tolerance * abs(current);
    previous = std::move(current);
    if (converged) break;
  }
  return (previous * inv_a).rounded(p);
}

IdentityReport mellin_spot_check(const BigReal& a, const BigReal& w) {
  if (!(a.sign() > 0) || a > 1L) throw std::invalid_argument("a must satisfy 0 < a <= 1");
  if (!(w.sign() > 0)) throw std::invalid_argument("w must satisfy w > 0");
  constexpr long kWorkingDigits = 30;
  constexpr long kReportDigits = 14;
  const Bits p = working_precision(kWorkingDigits).working_bits;

  const BigReal aw = (a * w).rounded(p);
  const BigReal base = mellin_base_integral(a, p);

  // sum_{k=0}^{K} e^(-awk); the geometric remainder is below 2^-p.
  const double aw_d = aw.to_double();
  const long k_max = static_cast<long>(std::ceil(static_cast<double>(p + 8) * std::log(2.0) / aw_d
                                                 - std::log1p(-std::exp(-aw_d)) / aw_d)) + 1;
  BigReal weights(p);
  for (long k = k_max; k >= 0; --k) weights += exp(-(aw * k), p);
  const BigReal lhs = base * weights;
  const BigReal rhs = gamma_real(a, p) / (-expm1(-aw, p));

  IdentityReport report = make_report("mellin_spot_check", lhs, rhs, kReportDigits);
  const BigReal relative = abs(lhs - rhs) / abs(rhs);
  report.abs_diff = Magnitude::of(relative);
  report.pass = relative <= pow10(-kReportDigits + 2, 128);
  return report;
}

}  // namespace eulergamma
