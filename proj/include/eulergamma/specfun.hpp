#ifndef EULERGAMMA_SPECFUN_HPP
#define EULERGAMMA_SPECFUN_HPP

#include "eulergamma/precision.hpp"

namespace eulergamma {

/// Result of a Gamma evaluation together with the work it took.
struct GammaEval {
  BigComplex value;
  long shift_count = 0;
  long asymptotic_terms = 0;
};

/// |z| below which the asymptotic series is not used: max(10, ceil(0.4 P)).
long shift_threshold(Bits precision);

/// Default E1 crossover: max(4, P ln2 / 8).
double e1_crossover(Bits precision);

/// Bernoulli number B_{2n}, n >= 1, rounded to `precision` bits.
BigReal bernoulli_even(long n, Bits precision);

/// Gamma(z) for Re z >= 0, z != 0, at `precision` bits.
///
/// z is shifted right by the recurrence until |z + m| >= shift_threshold(P),
/// log Gamma(z + m) is summed from the Stirling series and the recurrence
/// product is divided back out. Throws std::invalid_argument for Re z < 0 or
/// z = 0.
GammaEval gamma_eval(const BigComplex& z, Bits precision);
BigComplex gamma_right_half(const BigComplex& z, Bits precision);
/// psi(z) = Gamma'(z) / Gamma(z) for Re z >= 0, z != 0.
BigComplex digamma_right_half(const BigComplex& z, Bits precision);

/// Gamma(it) for t > 0, relative error <= 2^(-P+8).
/// Gamma(-it) is conj(Gamma(it)); callers fold the negative axis themselves.
BigComplex gamma_imag(const BigReal& t, const PrecisionPolicy& policy);
/// psi(it) for t > 0.
BigComplex digamma_imag(const BigReal& t, const PrecisionPolicy& policy);
/// Gamma(a) for real a > 0.
BigReal gamma_real(const BigReal& a, Bits precision);

enum class E1Branch {
  kAuto,              ///< power series below the crossover, continued fraction above
  kSeries,            ///< -gamma - ln x + sum (-1)^(k+1) x^k / (k k!)
  kContinuedFraction  ///< e^-x / (x+1 - 1/(x+3 - 4/(x+5 - ...)))
};

/// Exponential integral E1(x) = int_x^inf e^-u / u du for x > 0.
///
/// `crossover` <= 0 selects e1_crossover(P). The series branch takes Euler's
/// constant from the oracle module. Throws std::domain_error for x <= 0.
BigReal exp_integral_e1(const BigReal& x, const PrecisionPolicy& policy,
                        E1Branch branch = E1Branch::kAuto, double crossover = 0.0);

}  // namespace eulergamma

#endif  // EULERGAMMA_SPECFUN_HPP
