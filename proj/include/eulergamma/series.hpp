#ifndef EULERGAMMA_SERIES_HPP
#define EULERGAMMA_SERIES_HPP

#include "eulergamma/precision.hpp"

namespace eulergamma {

/// Free parameters of the residue formula
///
///   gamma = w/2 - log x - w S1 + w S2 + S3,
///   S1 = sum_{k>=0} exp(-x e^(wk)),
///   S2 = sum_{k>=1} (-1)^(k+1) x^k / (k! (e^(wk) - 1)),
///   S3 = sum_{k!=0} Gamma(2 pi i k / w) x^(-2 pi i k / w),
///
/// plus the requested number of decimal digits.
struct SeriesParams {
  BigReal x;
  BigReal w;
  long digits = 0;

  /// Throws std::invalid_argument naming the violated hypothesis when
  /// x <= 0, w <= 0 or digits < 1.
  void validate() const;
};

/// Term counts and certified tail bounds for S1, S2 and S3.
///
/// S1 is summed over k = 0 .. n1-1, S2 over k = 1 .. n2 and S3 over
/// k = 1 .. n3 (with the k < 0 half folded in).
struct TruncationPlan {
  long n1 = 0;
  long n2 = 0;
  long n3 = 0;
  Magnitude tail1;
  Magnitude tail2;
  Magnitude tail3;
};

struct GammaResult {
  BigReal value;
  Magnitude error_bound;
  long n1 = 0;
  long n2 = 0;
  long n3 = 0;
  double elapsed_seconds = 0.0;
  /// Time spent in the Gamma sum S3.
  double gamma_sum_seconds = 0.0;
};

/// ln |Gamma(it)| = (ln pi - ln t - ln sinh(pi t)) / 2, in double precision.
double log_gamma_imag_modulus(double t);

TruncationPlan plan_truncation(const SeriesParams& params);

/// S1 partial sum, largest k first.
BigReal sum_double_exponential(const SeriesParams& params, long n1, const PrecisionPolicy& policy);
/// S2 partial sum, largest k first.
BigReal sum_alternating(const SeriesParams& params, long n2, const PrecisionPolicy& policy);
/// 2 sum_{k=1}^{n3} Re[Gamma(2 pi i k / w) exp(-2 pi i k ln(x) / w)], largest k
/// first. Terms are evaluated in parallel and reduced in fixed order.
BigReal sum_gamma_oscillatory(const SeriesParams& params, long n3, const PrecisionPolicy& policy);

/// Evaluates the formula with the planned truncation.
/// Throws std::invalid_argument for x <= 0 or w <= 0.
GammaResult euler_gamma(const SeriesParams& params);
/// Same with explicit term counts; the error bound uses the tails in `plan`.
GammaResult euler_gamma(const SeriesParams& params, const TruncationPlan& plan);

}  // namespace eulergamma

#endif  // EULERGAMMA_SERIES_HPP
