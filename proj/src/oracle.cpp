#include "eulergamma/oracle.hpp"

#include <cmath>
#include <stdexcept>

namespace eulergamma {
namespace {

constexpr long kMaxDigits = 100000;

void check_digits(long digits) {
  if (digits < 1 || digits > kMaxDigits) {
    throw std::invalid_argument("reference digits must lie in [1, 100000]");
  }
}

}  // namespace

// Brent-McMillan, algorithm B1:
//   U = sum_k A_k, V = sum_k B_k with B_k = (n^k / k!)^2,
//   A_k = (A_{k-1} n^2 / k + B_k) / k, A_0 = -ln n,
// and gamma = U / V - O(e^(-4n)).
ReferenceValue reference_gamma(long digits) {
  check_digits(digits);
  const PrecisionPolicy policy = working_precision(digits);
  const double target = static_cast<double>(digits + 5) * std::log(10.0);
  const long n = static_cast<long>(std::ceil((target + std::log(M_PI)) / 4.0)) + 1;
  const Bits p = policy.working_bits + 32 + static_cast<Bits>(std::log2(static_cast<double>(n)) + 1);

  const BigReal n_sq(n * n, p);
  BigReal a = -log(BigReal(n, p), p);
  BigReal b(1L, p);
  BigReal u = a;
  BigReal v = b;
  const BigReal eps = BigReal::from_si_2exp(1, -p, 64);
  for (long k = 1;; ++k) {
    b *= n_sq;
    b /= k * k;
    a *= n_sq;
    a /= k;
    a += b;
    a /= k;
    u += a;
    v += b;
    if (k > n && b < v * eps && abs(a) < abs(u) * eps) break;
  }
  return {"gamma", (u / v).rounded(policy.working_bits), digits, "brent-mcmillan-b1"};
}

ReferenceValue reference_pi(long digits) {
  check_digits(digits);
  const PrecisionPolicy policy = working_precision(digits);
  const Bits p = policy.working_bits + 16;
  BigReal a(1L, p);
  BigReal b = sqrt(BigReal(1L, p) / 2L);
  BigReal t = BigReal(1L, p) / 4L;
  long power = 1;
  const BigReal eps = BigReal::from_si_2exp(1, -p, 64);
  for (int i = 0; i < 64; ++i) {
    const BigReal next_a = ldexp(a + b, -1);
    b = sqrt(a * b);
    const BigReal diff = a - next_a;
    t -= diff * diff * power;
    power *= 2;
    a = next_a;
    if (abs(a - b) < eps) break;
  }
  const BigReal sum = a + b;
  BigReal pi = sum * sum / (t * 4L);
  return {"pi", pi.rounded(policy.working_bits), digits, "gauss-legendre-agm"};
}

BigReal naive_gamma(long n) {
  if (n < 1) throw std::invalid_argument("naive_gamma requires n >= 1");
  const Bits p = working_precision(64).working_bits;
  BigReal harmonic(p);
  for (long j = n; j >= 1; --j) harmonic += BigReal(1L, p) / j;
  return harmonic - log(BigReal(n, p), p);
}

}  // namespace eulergamma
