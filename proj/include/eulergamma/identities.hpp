#ifndef EULERGAMMA_IDENTITIES_HPP
#define EULERGAMMA_IDENTITIES_HPP

#include <string>

#include "eulergamma/precision.hpp"

namespace eulergamma {

/// Both sides of an identity, computed independently.
struct IdentityReport {
  std::string name;
  BigReal lhs;
  BigReal rhs;
  Magnitude abs_diff;
  long digits = 0;
  /// abs_diff <= 10^(-digits + 2)
  bool pass = false;
};

/// Builds a report, setting abs_diff and pass from the two sides.
IdentityReport make_report(std::string name, BigReal lhs, BigReal rhs, long digits);

/// The pieces of a printed gamma formula; total() is their sum.
struct FormulaParts {
  BigReal constant;
  BigReal double_exponential;
  BigReal alternating;
  BigReal gamma_sum;

  BigReal total() const;
};

// Single terms of the printed corollary forms.
//   x = e, w = 2:  -2 e^(-e^(2k+1)),  (-1)^(k+1) / (k! sinh k),  -2 (-1)^(k+1) Re Gamma(pi i k)
//   x = w = 1:     -e^(-e^k),         (-1)^(k+1) / (k! (e^k - 1)),    2 Re Gamma(2 pi i k)
BigReal corollary_one_double_exp_term(long k, Bits p);
BigReal corollary_one_alternating_term(long k, Bits p);
BigReal corollary_one_gamma_term(long k, const PrecisionPolicy& policy);
BigReal corollary_two_double_exp_term(long k, Bits p);
BigReal corollary_two_alternating_term(long k, Bits p);
BigReal corollary_two_gamma_term(long k, const PrecisionPolicy& policy);

/// k (e^(-e^k) - e^(-e^(-k)) + 1), with 1 - e^(-e^(-k)) taken as -expm1(-e^(-k)).
BigReal gamma_pi_k_term(long k, Bits p);
/// Re Gamma'(2 pi i k) = Re[Gamma(2 pi i k) psi(2 pi i k)].
BigReal gamma_pi_derivative_term(long k, const PrecisionPolicy& policy);

/// gamma = -2 sum e^(-e^(2k+1)) + sum (-1)^(k+1)/(k! sinh k) - 2 sum (-1)^(k+1) Re Gamma(pi i k)
FormulaParts corollary_one_parts(long digits);
/// gamma = 1/2 - sum e^(-e^k) + sum (-1)^(k+1)/(k!(e^k-1)) + 2 sum Re Gamma(2 pi i k).
/// The alternating sum carries coefficient w = 1; a leading factor 2 there
/// would give 1.0889... instead of gamma.
FormulaParts corollary_two_parts(long digits);

IdentityReport corollary_one(long digits);
IdentityReport corollary_two(long digits);

/// gamma = -log x - E1(x) + sum_{k>=1} (-1)^(k+1) x^k / (k k!).
/// E1 is taken from its continued fraction so the right side does not
/// depend on a stored value of gamma. Throws std::invalid_argument for x <= 0.
IdentityReport limiting_formula(const BigReal& x, long digits);

/// 6 gamma^2 + pi^2 = 1 + 12 sum k(e^(-e^k) - e^(-e^(-k)) + 1) - 24 sum Re Gamma'(2 pi i k).
IdentityReport gamma_pi_identity(long digits);

/// Mellin pair int_0^inf x^(a-1) phi_w(x) dx = Gamma(a) / (1 - e^(-aw)) at
/// about 30 digits. The k-th term of phi_w integrates to e^(-awk) times the
/// base integral int_0^inf u^(a-1) e^(-u) du, which is evaluated by exp-sinh
/// quadrature. abs_diff holds the relative difference and digits is 14, so
/// pass means agreement to 1e-12. Throws std::invalid_argument unless
/// 0 < a <= 1 and w > 0.
IdentityReport mellin_spot_check(const BigReal& a, const BigReal& w);

/// int_0^inf u^(a-1) e^(-u) du by adaptive exp-sinh quadrature.
BigReal mellin_base_integral(const BigReal& a, Bits p);

}  // namespace eulergamma

#endif  // EULERGAMMA_IDENTITIES_HPP
