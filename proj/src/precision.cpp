#include "eulergamma/precision.hpp"

#include <gmp.h>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <stdexcept>
#include <utility>

namespace eulergamma {
namespace {

// MPFR keeps emin/emax per thread; widen them before the first value is
// created on a thread.
void ensure_exponent_range() {
  thread_local const bool widened = [] {
    mpfr_set_emin(mpfr_get_emin_min());
    mpfr_set_emax(mpfr_get_emax_max());
    return true;
  }();
  (void)widened;
}

Bits max_prec(const BigReal& a, const BigReal& b) {
  return std::max(a.precision(), b.precision());
}

std::partial_ordering order_of(int cmp, bool unordered) {
  if (unordered) return std::partial_ordering::unordered;
  if (cmp < 0) return std::partial_ordering::less;
  if (cmp > 0) return std::partial_ordering::greater;
  return std::partial_ordering::equivalent;
}

}  // namespace

BigReal::BigReal(Bits precision) {
  ensure_exponent_range();
  mpfr_init2(value_, std::max<Bits>(precision, MPFR_PREC_MIN));
  mpfr_set_zero(value_, 1);
}

BigReal::BigReal(long value, Bits precision) : BigReal(precision) {
  mpfr_set_si(value_, value, MPFR_RNDN);
}

BigReal::BigReal(double value, Bits precision) : BigReal(precision) {
  mpfr_set_d(value_, value, MPFR_RNDN);
}

BigReal::BigReal(const BigReal& other) : BigReal(other.precision()) {
  mpfr_set(value_, other.value_, MPFR_RNDN);
}

BigReal::BigReal(BigReal&& other) noexcept : BigReal(other.precision()) {
  mpfr_swap(value_, other.value_);
}

BigReal& BigReal::operator=(const BigReal& other) {
  if (this != &other) {
    mpfr_set_prec(value_, other.precision());
    mpfr_set(value_, other.value_, MPFR_RNDN);
  }
  return *this;
}

BigReal& BigReal::operator=(BigReal&& other) noexcept {
  mpfr_swap(value_, other.value_);
  return *this;
}

BigReal::~BigReal() { mpfr_clear(value_); }

BigReal BigReal::parse(std::string_view text, Bits precision) {
  const std::string s(text);
  if (s.empty()) throw std::invalid_argument("empty number");
  BigReal out(precision);
  char* end = nullptr;
  mpfr_strtofr(out.value_, s.c_str(), &end, 10, MPFR_RNDN);
  if (end == s.c_str() || *end != '\0' || !out.is_finite()) {
    throw std::invalid_argument("not a decimal number: '" + s + "'");
  }
  return out;
}

BigReal BigReal::from_si_2exp(long m, long e, Bits precision) {
  BigReal out(precision);
  mpfr_set_si_2exp(out.value_, m, e, MPFR_RNDN);
  return out;
}

BigReal BigReal::rounded(Bits precision) const {
  BigReal out(precision);
  mpfr_set(out.value_, value_, MPFR_RNDN);
  return out;
}

long BigReal::exponent2() const {
  if (!mpfr_regular_p(value_)) return 0;
  return mpfr_get_exp(value_);
}

BigReal BigReal::operator-() const {
  BigReal out(precision());
  mpfr_neg(out.value_, value_, MPFR_RNDN);
  return out;
}

BigReal& BigReal::operator+=(const BigReal& rhs) {
  mpfr_add(value_, value_, rhs.value_, MPFR_RNDN);
  return *this;
}
BigReal& BigReal::operator-=(const BigReal& rhs) {
  mpfr_sub(value_, value_, rhs.value_, MPFR_RNDN);
  return *this;
}
BigReal& BigReal::operator*=(const BigReal& rhs) {
  mpfr_mul(value_, value_, rhs.value_, MPFR_RNDN);
  return *this;
}
BigReal& BigReal::operator/=(const BigReal& rhs) {
  mpfr_div(value_, value_, rhs.value_, MPFR_RNDN);
  return *this;
}
BigReal& BigReal::operator*=(long rhs) {
  mpfr_mul_si(value_, value_, rhs, MPFR_RNDN);
  return *this;
}
BigReal& BigReal::operator/=(long rhs) {
  mpfr_div_si(value_, value_, rhs, MPFR_RNDN);
  return *this;
}

BigReal operator+(const BigReal& a, const BigReal& b) {
  BigReal out(max_prec(a, b));
  mpfr_add(out.value_, a.value_, b.value_, MPFR_RNDN);
  return out;
}
BigReal operator-(const BigReal& a, const BigReal& b) {
  BigReal out(max_prec(a, b));
  mpfr_sub(out.value_, a.value_, b.value_, MPFR_RNDN);
  return out;
}
BigReal operator*(const BigReal& a, const BigReal& b) {
  BigReal out(max_prec(a, b));
  mpfr_mul(out.value_, a.value_, b.value_, MPFR_RNDN);
  return out;
}
BigReal operator/(const BigReal& a, const BigReal& b) {
  BigReal out(max_prec(a, b));
  mpfr_div(out.value_, a.value_, b.value_, MPFR_RNDN);
  return out;
}
BigReal operator+(const BigReal& a, long b) {
  BigReal out(a.precision());
  mpfr_add_si(out.value_, a.value_, b, MPFR_RNDN);
  return out;
}
BigReal operator-(const BigReal& a, long b) {
  BigReal out(a.precision());
  mpfr_sub_si(out.value_, a.value_, b, MPFR_RNDN);
  return out;
}
BigReal operator*(const BigReal& a, long b) {
  BigReal out(a.precision());
  mpfr_mul_si(out.value_, a.value_, b, MPFR_RNDN);
  return out;
}
BigReal operator/(const BigReal& a, long b) {
  BigReal out(a.precision());
  mpfr_div_si(out.value_, a.value_, b, MPFR_RNDN);
  return out;
}
BigReal operator-(long a, const BigReal& b) {
  BigReal out(b.precision());
  mpfr_si_sub(out.value_, a, b.value_, MPFR_RNDN);
  return out;
}
BigReal operator/(long a, const BigReal& b) {
  BigReal out(b.precision());
  mpfr_si_div(out.value_, a, b.value_, MPFR_RNDN);
  return out;
}

std::partial_ordering operator<=>(const BigReal& a, const BigReal& b) {
  const bool unordered = mpfr_unordered_p(a.value_, b.value_) != 0;
  return order_of(unordered ? 0 : mpfr_cmp(a.value_, b.value_), unordered);
}

std::partial_ordering operator<=>(const BigReal& a, long b) {
  const bool unordered = mpfr_nan_p(a.value_) != 0;
  return order_of(unordered ? 0 : mpfr_cmp_si(a.value_, b), unordered);
}

BigReal abs(const BigReal& v) {
  BigReal out(v.precision());
  mpfr_abs(out.get(), v.get(), MPFR_RNDN);
  return out;
}

BigReal sqrt(const BigReal& v) {
  BigReal out(v.precision());
  mpfr_sqrt(out.get(), v.get(), MPFR_RNDN);
  return out;
}

BigReal ldexp(const BigReal& v, long e) {
  BigReal out(v.precision());
  mpfr_mul_2si(out.get(), v.get(), e, MPFR_RNDN);
  return out;
}

BigReal floor(const BigReal& v) {
  BigReal out(v.precision());
  mpfr_floor(out.get(), v.get());
  return out;
}

BigReal frac(const BigReal& v) { return v - floor(v); }

PrecisionPolicy working_precision(long digits) {
  if (digits < 1) throw std::invalid_argument("digit count must be >= 1");
  // ceil(D log2 10) and ceil(log2 D) in integer arithmetic where possible.
  const double mantissa_bits = std::ceil(static_cast<double>(digits) * std::log2(10.0) - 1e-9);
  Bits ceil_log2 = 0;
  while ((1L << ceil_log2) < digits) ++ceil_log2;
  PrecisionPolicy policy;
  policy.digits = digits;
  policy.guard_bits = 32 + ceil_log2;
  policy.working_bits = static_cast<Bits>(mantissa_bits) + policy.guard_bits;
  return policy;
}

BigReal elem(ElemFn fn, const BigReal& v, Bits precision) {
  BigReal out(precision);
  switch (fn) {
    case ElemFn::kExp:
      mpfr_exp(out.get(), v.get(), MPFR_RNDN);
      break;
    case ElemFn::kLog:
      if (v.sign() <= 0) throw std::domain_error("log of a non-positive value");
      mpfr_log(out.get(), v.get(), MPFR_RNDN);
      break;
    case ElemFn::kExpm1:
      mpfr_expm1(out.get(), v.get(), MPFR_RNDN);
      break;
    case ElemFn::kSin:
      mpfr_sin(out.get(), v.get(), MPFR_RNDN);
      break;
    case ElemFn::kCos:
      mpfr_cos(out.get(), v.get(), MPFR_RNDN);
      break;
    case ElemFn::kSinh:
      mpfr_sinh(out.get(), v.get(), MPFR_RNDN);
      break;
  }
  return out;
}

BigReal cosh(const BigReal& v, Bits p) {
  BigReal out(p);
  mpfr_cosh(out.get(), v.get(), MPFR_RNDN);
  return out;
}

BigReal atan2(const BigReal& y, const BigReal& x, Bits p) {
  BigReal out(p);
  mpfr_atan2(out.get(), y.get(), x.get(), MPFR_RNDN);
  return out;
}

BigReal log10(const BigReal& v, Bits p) {
  if (v.sign() <= 0) throw std::domain_error("log10 of a non-positive value");
  BigReal out(p);
  mpfr_log10(out.get(), v.get(), MPFR_RNDN);
  return out;
}

BigReal pow(const BigReal& base, const BigReal& exponent, Bits p) {
  BigReal out(p);
  mpfr_pow(out.get(), base.get(), exponent.get(), MPFR_RNDN);
  return out;
}

BigReal pow10(long e, Bits p) {
  BigReal out(p);
  mpfr_ui_pow_ui(out.get(), 10, static_cast<unsigned long>(e < 0 ? -e : e), MPFR_RNDN);
  if (e < 0) mpfr_ui_div(out.get(), 1, out.get(), MPFR_RNDN);
  return out;
}

BigReal const_pi(Bits p) {
  BigReal out(p);
  mpfr_const_pi(out.get(), MPFR_RNDN);
  return out;
}

BigReal const_ln2(Bits p) {
  BigReal out(p);
  mpfr_const_log2(out.get(), MPFR_RNDN);
  return out;
}

BigReal const_e(Bits p) { return exp(BigReal(1L, p + 8), p); }

BigReal const_ln10(Bits p) { return log(BigReal(10L, p), p); }

// ---------------------------------------------------------------------------
// Magnitude

namespace {

// Splits a decimal logarithm into floor and 10^fraction.
Magnitude split_log10(const BigReal& l) {
  Magnitude m;
  const BigReal whole = floor(l);
  m.exp10 = static_cast<std::int64_t>(mpfr_get_si(whole.get(), MPFR_RNDN));
  const BigReal fraction = l - whole;
  m.mantissa = std::pow(10.0, fraction.to_double());
  if (m.mantissa >= 10.0) {
    m.mantissa /= 10.0;
    ++m.exp10;
  }
  if (m.mantissa < 1.0) m.mantissa = 1.0;
  return m;
}

}  // namespace

Magnitude Magnitude::of(const BigReal& v) {
  if (v.is_zero()) return zero();
  const long e2 = v.exponent2();
  Bits extra = 0;
  for (long e = e2 < 0 ? -e2 : e2; e > 0; e >>= 1) ++extra;
  const Bits p = 64 + extra;
  return split_log10(eulergamma::log10(abs(v).rounded(std::max(p, v.precision())), p));
}

Magnitude Magnitude::from_log10(const BigReal& l) { return split_log10(l); }

double Magnitude::log10() const {
  if (is_zero()) return -std::numeric_limits<double>::infinity();
  return static_cast<double>(exp10) + std::log10(mantissa);
}

std::int64_t Magnitude::ceil_exp10() const {
  if (is_zero()) return std::numeric_limits<std::int64_t>::min();
  return mantissa > 1.0 ? exp10 + 1 : exp10;
}

BigReal Magnitude::to_big(Bits precision) const {
  if (is_zero()) return BigReal(precision);
  BigReal out(mantissa, precision);
  BigReal scale(precision);
  mpfr_set_si(scale.get(), 10, MPFR_RNDN);
  mpfr_pow_si(scale.get(), scale.get(), static_cast<long>(exp10), MPFR_RNDN);
  out *= scale;
  return out;
}

std::string Magnitude::to_string(int significant) const {
  if (is_zero()) return "0";
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*fe%lld", std::max(significant - 1, 0), mantissa,
                static_cast<long long>(exp10));
  return buf;
}

bool operator<(const Magnitude& a, const Magnitude& b) {
  if (a.is_zero() || b.is_zero()) return a.is_zero() && !b.is_zero();
  if (a.exp10 != b.exp10) return a.exp10 < b.exp10;
  return a.mantissa < b.mantissa;
}

Magnitude exponent_of_exp_neg(const BigReal& x) {
  if (x.sign() <= 0) throw std::invalid_argument("exponent_of_exp_neg requires X > 0");
  const long e2 = std::max(0L, x.exponent2());
  const Bits p = std::max<Bits>(x.precision(), 64) + e2 + 16;
  BigReal l = x.rounded(p);
  l /= const_ln10(p);
  return split_log10(-l);
}

std::string to_fixed_truncated(const BigReal& v, long decimals) {
  if (decimals < 0) throw std::invalid_argument("negative decimal count");
  const Bits p = v.precision() + static_cast<Bits>(decimals * 3.33) + 64;
  BigReal scaled = abs(v).rounded(p);
  scaled *= pow10(decimals, p);
  mpz_t z;
  mpz_init(z);
  mpfr_get_z(z, scaled.get(), MPFR_RNDZ);
  char* raw = mpz_get_str(nullptr, 10, z);
  std::string digits(raw);
  void (*freefunc)(void*, size_t);
  mp_get_memory_functions(nullptr, nullptr, &freefunc);
  freefunc(raw, std::char_traits<char>::length(raw) + 1);
  mpz_clear(z);

  if (static_cast<long>(digits.size()) <= decimals) {
    digits.insert(0, static_cast<std::size_t>(decimals) + 1 - digits.size(), '0');
  }
  std::string out;
  if (v.sign() < 0 && digits.find_first_not_of('0') != std::string::npos) out += '-';
  out += digits.substr(0, digits.size() - static_cast<std::size_t>(decimals));
  if (decimals > 0) {
    out += '.';
    out += digits.substr(digits.size() - static_cast<std::size_t>(decimals));
  }
  return out;
}

std::string to_scientific(const BigReal& v, int significant) {
  if (v.is_zero()) return "0";
  significant = std::max(significant, 2);
  mpfr_exp_t e = 0;
  char* raw = mpfr_get_str(nullptr, &e, 10, static_cast<size_t>(significant), v.get(), MPFR_RNDN);
  std::string s(raw);
  mpfr_free_str(raw);
  std::string out;
  if (s[0] == '-') {
    out += '-';
    s.erase(0, 1);
  }
  out += s[0];
  out += '.';
  out += s.substr(1);
  out += 'e';
  out += std::to_string(static_cast<long long>(e) - 1);
  return out;
}

// ---------------------------------------------------------------------------
// BigComplex

BigReal BigComplex::norm() const { return re * re + im * im; }

BigReal BigComplex::abs() const {
  BigReal out(precision());
  mpfr_hypot(out.get(), re.get(), im.get(), MPFR_RNDN);
  return out;
}

BigReal BigComplex::arg(Bits p) const { return atan2(im, re, p); }

BigComplex& BigComplex::operator+=(const BigComplex& rhs) {
  re += rhs.re;
  im += rhs.im;
  return *this;
}

BigComplex& BigComplex::operator-=(const BigComplex& rhs) {
  re -= rhs.re;
  im -= rhs.im;
  return *this;
}

BigComplex& BigComplex::operator*=(const BigComplex& rhs) {
  const Bits p = std::max(precision(), rhs.precision());
  BigReal ac(p), bd(p), ad(p);
  mpfr_mul(ac.get(), re.get(), rhs.re.get(), MPFR_RNDN);
  mpfr_mul(bd.get(), im.get(), rhs.im.get(), MPFR_RNDN);
  mpfr_mul(ad.get(), re.get(), rhs.im.get(), MPFR_RNDN);
  mpfr_mul(im.get(), im.get(), rhs.re.get(), MPFR_RNDN);
  mpfr_add(im.get(), im.get(), ad.get(), MPFR_RNDN);
  mpfr_sub(re.get(), ac.get(), bd.get(), MPFR_RNDN);
  return *this;
}

BigComplex& BigComplex::operator/=(const BigComplex& rhs) {
  const BigReal denom = rhs.norm();
  BigComplex num = *this * rhs.conj();
  re = num.re / denom;
  im = num.im / denom;
  return *this;
}

BigComplex polar(const BigReal& r, const BigReal& theta, Bits p) {
  BigReal s(p), c(p);
  mpfr_sin_cos(s.get(), c.get(), theta.get(), MPFR_RNDN);
  return {r.rounded(p) * c, r.rounded(p) * s};
}

BigComplex log(const BigComplex& z, Bits p) {
  BigReal half_log_norm = log(z.norm().rounded(p + 8), p);
  mpfr_div_2ui(half_log_norm.get(), half_log_norm.get(), 1, MPFR_RNDN);
  return {std::move(half_log_norm), z.arg(p)};
}

BigComplex exp(const BigComplex& z, Bits p) { return polar(exp(z.re, p), z.im, p); }

}  // namespace eulergamma
