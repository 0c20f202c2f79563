#include "eulergamma/specfun.hpp"

#include <gmpxx.h>

#include <algorithm>
#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>
#include <vector>

#include "eulergamma/oracle.hpp"

namespace eulergamma {
namespace {

constexpr double kLn2 = 0.69314718055994530942;
constexpr double kLog2e = 1.44269504088896340736;
constexpr double kLnTwoPi = 1.83787706640934548356;

// Exact B_2, B_4, ..., grown on demand from tangent numbers:
//   B_2n = (-1)^(n-1) 2n T_n / (2^2n (2^2n - 1)).
class BernoulliTable {
 public:
  static BernoulliTable& instance() {
    static BernoulliTable table;
    return table;
  }

  // Returns B_2 .. B_2n (index 0 holds B_2) rounded to at least `precision`
  // bits. Values are cached per precision bucket.
  std::shared_ptr<const std::vector<BigReal>> rounded(long n, Bits precision) {
    const Bits bucket = (precision + 63) / 64 * 64;
    std::lock_guard<std::mutex> lock(mutex_);
    auto& slot = by_precision_[bucket];
    if (slot && static_cast<long>(slot->size()) >= n) return slot;
    grow_exact(n);
    const long count = std::max<long>(n, slot ? static_cast<long>(slot->size()) * 2 : n);
    grow_exact(count);
    auto values = std::make_shared<std::vector<BigReal>>();
    values->reserve(static_cast<std::size_t>(count));
    for (long i = 0; i < count; ++i) {
      BigReal b(bucket);
      mpfr_set_q(b.get(), exact_[static_cast<std::size_t>(i)].get_mpq_t(), MPFR_RNDN);
      values->push_back(std::move(b));
    }
    slot = std::move(values);
    return slot;
  }

 private:
  void grow_exact(long n) {
    if (static_cast<long>(exact_.size()) >= n) return;
    const long count = std::max<long>({n, static_cast<long>(exact_.size()) * 2, 32});
    std::vector<mpz_class> tangent(static_cast<std::size_t>(count) + 1);
    tangent[1] = 1;
    for (long k = 2; k <= count; ++k) tangent[k] = tangent[k - 1] * (k - 1);
    for (long k = 2; k <= count; ++k) {
      for (long j = k; j <= count; ++j) {
        tangent[j] = tangent[j - 1] * (j - k) + tangent[j] * (j - k + 2);
      }
    }
    exact_.clear();
    exact_.reserve(static_cast<std::size_t>(count));
    for (long k = 1; k <= count; ++k) {
      mpz_class pow4;
      mpz_ui_pow_ui(pow4.get_mpz_t(), 2, static_cast<unsigned long>(2 * k));
      mpq_class b(tangent[k] * (2 * k), pow4 * (pow4 - 1));
      b.canonicalize();
      if (k % 2 == 0) b = -b;
      exact_.push_back(std::move(b));
    }
  }

  std::mutex mutex_;
  std::vector<mpq_class> exact_;
  std::map<Bits, std::shared_ptr<const std::vector<BigReal>>> by_precision_;
};

// Natural-log upper estimate of |B_2j|, from 2 (2j)! zeta(2j) / (2 pi)^2j.
double log_abs_bernoulli(long j) {
  const double n = 2.0 * static_cast<double>(j);
  return kLn2 + std::lgamma(n + 1.0) - n * kLnTwoPi + (j == 1 ? 0.5 : std::ldexp(2.0, -2 * static_cast<int>(std::min(j, 500L))));
}

enum class Series { kLogGamma, kDigamma };

// Smallest n such that the remainder after n asymptotic terms at |z| = r,
// arg z = theta, is below e^target. Returns -1 when the series bottoms out
// first; the caller then shifts further.
long asymptotic_term_count(Series kind, double r, double theta, double target) {
  const double log_sec = -std::log(std::cos(theta / 2.0));
  const double log_r = std::log(r);
  double previous = HUGE_VAL;
  for (long n = 0; n < 1000000; ++n) {
    const long j = n + 1;
    const double two_j = 2.0 * static_cast<double>(j);
    double bound;
    if (kind == Series::kLogGamma) {
      bound = log_abs_bernoulli(j) - std::log(two_j * (two_j - 1.0)) - (two_j - 1.0) * log_r +
              two_j * log_sec;
    } else {
      bound = log_abs_bernoulli(j) - std::log(two_j) - two_j * log_r + (two_j + 1.0) * log_sec;
    }
    if (bound < target) return n;
    if (n > 4 && bound > previous) return -1;
    previous = bound;
  }
  return -1;
}

struct ShiftPlan {
  long shift = 0;
  long terms = 0;
  Bits internal_bits = 0;
};

ShiftPlan plan_shift(Series kind, const BigComplex& z, Bits precision) {
  const double a = z.re.to_double();
  const double t = std::fabs(z.im.to_double());
  const double sigma = static_cast<double>(shift_threshold(precision));
  long m = 0;
  if (std::hypot(a, t) < sigma) {
    m = static_cast<long>(std::ceil(std::sqrt(std::max(0.0, sigma * sigma - t * t)) - a));
    m = std::max(m, 0L);
  }
  for (;;) {
    const double re = a + static_cast<double>(m);
    const double r = std::hypot(re, t);
    const double theta = std::atan2(t, re);
    Bits extra = 32;
    if (kind == Series::kLogGamma) {
      extra += static_cast<Bits>(std::ceil(std::log2(r * (std::log(r) + 2.0) + 1.0)));
    } else {
      extra += static_cast<Bits>(std::ceil(std::log2(static_cast<double>(m) + 2.0)));
    }
    const Bits internal = precision + extra;
    const double target = -(static_cast<double>(internal) + 8.0) * kLn2;
    const long n = asymptotic_term_count(kind, r, theta, target);
    if (n >= 0) return {m, std::max(n, 1L), internal};
    m += std::max(8L, m / 4);
  }
}

void validate_right_half(const BigComplex& z) {
  if (z.re.sign() < 0) throw std::invalid_argument("argument must have Re z >= 0");
  if (z.re.is_zero() && z.im.is_zero()) throw std::invalid_argument("Gamma has a pole at z = 0");
}

// log Gamma(w) from the Stirling series, principal branch (Re w > 0).
BigComplex stirling_log_gamma(const BigComplex& w, long terms, Bits p) {
  const auto bernoulli = BernoulliTable::instance().rounded(terms, p);
  const BigComplex log_w = log(w, p);
  BigComplex half{BigReal(p), BigReal(p)};
  mpfr_set_d(half.re.get(), 0.5, MPFR_RNDN);
  BigComplex result = (w - half) * log_w;
  result -= w;
  BigReal log_two_pi = log(ldexp(const_pi(p + 8), 1), p);
  mpfr_div_2ui(log_two_pi.get(), log_two_pi.get(), 1, MPFR_RNDN);
  result.re += log_two_pi;

  BigComplex one(BigReal(1L, p), BigReal(p));
  const BigComplex inv = one / w;
  const BigComplex inv_sq = inv * inv;
  BigComplex power = inv;
  BigComplex series(p);
  for (long j = 1; j <= terms; ++j) {
    BigReal c = (*bernoulli)[static_cast<std::size_t>(j - 1)].rounded(p);
    c /= (2 * j) * (2 * j - 1);
    series += power * c;
    power *= inv_sq;
  }
  result += series;
  return result;
}

BigComplex stirling_digamma(const BigComplex& w, long terms, Bits p) {
  const auto bernoulli = BernoulliTable::instance().rounded(terms, p);
  BigComplex one(BigReal(1L, p), BigReal(p));
  const BigComplex inv = one / w;
  const BigComplex inv_sq = inv * inv;
  BigComplex result = log(w, p);
  result -= BigComplex(ldexp(inv.re, -1), ldexp(inv.im, -1));
  BigComplex power = inv_sq;
  BigComplex series(p);
  for (long j = 1; j <= terms; ++j) {
    BigReal c = (*bernoulli)[static_cast<std::size_t>(j - 1)].rounded(p);
    c /= 2 * j;
    series += power * c;
    power *= inv_sq;
  }
  result -= series;
  return result;
}

BigComplex rounded(const BigComplex& z, Bits p) { return {z.re.rounded(p), z.im.rounded(p)}; }

}  // namespace

long shift_threshold(Bits precision) {
  return std::max(10L, static_cast<long>(std::ceil(0.4 * static_cast<double>(precision))));
}

double e1_crossover(Bits precision) {
  return std::max(4.0, static_cast<double>(precision) / 8.0 * kLn2);
}

BigReal bernoulli_even(long n, Bits precision) {
  if (n < 1) throw std::invalid_argument("bernoulli_even requires n >= 1");
  const auto table = BernoulliTable::instance().rounded(n, precision);
  return (*table)[static_cast<std::size_t>(n - 1)].rounded(precision);
}

GammaEval gamma_eval(const BigComplex& z, Bits precision) {
  validate_right_half(z);
  const ShiftPlan plan = plan_shift(Series::kLogGamma, z, precision);
  const Bits p = plan.internal_bits;

  const BigComplex zp = rounded(z, p);
  BigComplex w = zp;
  w.re += BigReal(plan.shift, p);
  BigComplex value = exp(stirling_log_gamma(w, plan.terms, p), p);

  if (plan.shift > 0) {
    BigComplex product = zp;
    BigComplex factor = zp;
    for (long j = 1; j < plan.shift; ++j) {
      mpfr_add_ui(factor.re.get(), factor.re.get(), 1, MPFR_RNDN);
      product *= factor;
    }
    value /= product;
  }
  return {rounded(value, precision), plan.shift, plan.terms};
}

BigComplex gamma_right_half(const BigComplex& z, Bits precision) {
  return gamma_eval(z, precision).value;
}

BigComplex digamma_right_half(const BigComplex& z, Bits precision) {
  validate_right_half(z);
  const ShiftPlan plan = plan_shift(Series::kDigamma, z, precision);
  const Bits p = plan.internal_bits;

  const BigComplex zp = rounded(z, p);
  BigComplex w = zp;
  w.re += BigReal(plan.shift, p);
  BigComplex value = stirling_digamma(w, plan.terms, p);

  // psi(z) = psi(z + m) - sum_{j<m} 1/(z + j), smallest terms first.
  BigComplex reciprocal_sum(p);
  for (long j = plan.shift - 1; j >= 0; --j) {
    BigComplex zj = zp;
    zj.re += BigReal(j, p);
    const BigReal n = zj.norm();
    reciprocal_sum.re += zj.re / n;
    reciprocal_sum.im -= zj.im / n;
  }
  value -= reciprocal_sum;
  return rounded(value, precision);
}

BigComplex gamma_imag(const BigReal& t, const PrecisionPolicy& policy) {
  if (t.sign() <= 0) throw std::invalid_argument("gamma_imag requires t > 0 (t = 0 is a pole)");
  const Bits p = policy.working_bits;
  return gamma_right_half(BigComplex(BigReal(p), t.rounded(std::max(p, t.precision()))), p);
}

BigComplex digamma_imag(const BigReal& t, const PrecisionPolicy& policy) {
  if (t.sign() <= 0) throw std::invalid_argument("digamma_imag requires t > 0 (t = 0 is a pole)");
  const Bits p = policy.working_bits;
  return digamma_right_half(BigComplex(BigReal(p), t.rounded(std::max(p, t.precision()))), p);
}

BigReal gamma_real(const BigReal& a, Bits precision) {
  if (a.sign() <= 0) throw std::invalid_argument("gamma_real requires a > 0");
  return gamma_right_half(BigComplex(a, BigReal(a.precision())), precision).re;
}

namespace {

BigReal e1_series(const BigReal& x, Bits precision) {
  const double xd = x.to_double();
  const Bits p = precision + 40 + static_cast<Bits>(std::ceil(2.0 * xd * kLog2e));
  const long ref_digits = std::min<long>(100000, static_cast<long>(std::ceil(static_cast<double>(p) * 0.30103)) + 3);
  const BigReal euler = reference_gamma(ref_digits).value.rounded(p);
  const BigReal xp = x.rounded(p);

  // Ein(x) = sum_{k>=1} (-1)^(k+1) x^k / (k k!)
  BigReal power_over_factorial = xp;
  BigReal ein(p);
  const BigReal eps = BigReal::from_si_2exp(1, -p, 64);
  for (long k = 1;; ++k) {
    if (k > 1) {
      power_over_factorial *= xp;
      power_over_factorial /= k;
    }
    BigReal term = power_over_factorial / k;
    if (k % 2 == 0) ein -= term; else ein += term;
    if (static_cast<double>(k) > 2.0 * xd && term < eps) break;
  }
  BigReal out = ein - euler;
  out -= log(xp, p);
  return out.rounded(precision);
}

BigReal e1_continued_fraction(const BigReal& x, Bits precision) {
  const Bits p = precision + 64;
  const BigReal xp = x.rounded(p);
  const BigReal tiny = BigReal::from_si_2exp(1, -4 * p, 64);
  const BigReal eps = BigReal::from_si_2exp(1, -p, 64);

  // Modified Lentz on b0 + a1/(b1 + a2/(b2 + ...)), a_i = -i^2, b_i = x + 2i + 1.
  BigReal f = xp + 1L;
  BigReal c = f;
  BigReal d(p);
  constexpr long kMaxIterations = 50000000;
  for (long i = 1; i <= kMaxIterations; ++i) {
    const long a = -i * i;
    const BigReal b = xp + (2 * i + 1);
    d = b + d * a;
    if (abs(d) < tiny) d = tiny;
    d = 1L / d;
    c = b + BigReal(a, p) / c;
    if (abs(c) < tiny) c = tiny;
    const BigReal delta = c * d;
    f *= delta;
    if (abs(delta - 1L) < eps) {
      return (exp(-xp, p) / f).rounded(precision);
    }
  }
  throw std::runtime_error("E1 continued fraction did not converge");
}

}  // namespace

BigReal exp_integral_e1(const BigReal& x, const PrecisionPolicy& policy, E1Branch branch,
                        double crossover) {
  if (x.sign() <= 0) throw std::domain_error("E1(x) requires x > 0");
  const Bits p = policy.working_bits;
  if (branch == E1Branch::kAuto) {
    const double theta = crossover > 0.0 ? crossover : e1_crossover(p);
    branch = x <= BigReal(theta, 64) ? E1Branch::kSeries : E1Branch::kContinuedFraction;
  }
  return branch == E1Branch::kSeries ? e1_series(x, p) : e1_continued_fraction(x, p);
}

}  // namespace eulergamma
