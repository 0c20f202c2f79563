#ifndef EULERGAMMA_PRECISION_HPP
#define EULERGAMMA_PRECISION_HPP

#include <mpfr.h>

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>

namespace eulergamma {

/// Mantissa precision in bits.
using Bits = mpfr_prec_t;

/// Arbitrary-precision real backed by an MPFR value.
///
/// Every value carries its own precision. Binary operators produce a result
/// at the larger of the two operand precisions, rounded to nearest. The
/// exponent range is widened to the MPFR maximum (about +-2^62) on first
/// use in each thread, so magnitudes like 10^(-10^9) are ordinary values.
class BigReal {
 public:
  static constexpr Bits kDefaultPrecision = 64;

  BigReal() : BigReal(kDefaultPrecision) {}
  explicit BigReal(Bits precision);
  BigReal(long value, Bits precision);
  BigReal(int value, Bits precision) : BigReal(static_cast<long>(value), precision) {}
  BigReal(double value, Bits precision);

  BigReal(const BigReal& other);
  BigReal(BigReal&& other) noexcept;
  BigReal& operator=(const BigReal& other);
  BigReal& operator=(BigReal&& other) noexcept;
  ~BigReal();

  /// Parses a decimal literal such as "2.5", "-1e-3" or "0.125" rounded to
  /// `precision` bits. Throws std::invalid_argument on malformed input.
  static BigReal parse(std::string_view text, Bits precision);

  /// m * 2^e, exact.
  static BigReal from_si_2exp(long m, long e, Bits precision);

  Bits precision() const { return mpfr_get_prec(value_); }
  /// Copy rounded to a new precision.
  BigReal rounded(Bits precision) const;

  mpfr_srcptr get() const { return value_; }
  mpfr_ptr get() { return value_; }

  double to_double() const { return mpfr_get_d(value_, MPFR_RNDN); }
  long to_long_floor() const { return mpfr_get_si(value_, MPFR_RNDD); }
  int sign() const { return mpfr_sgn(value_); }
  bool is_zero() const { return mpfr_zero_p(value_) != 0; }
  bool is_finite() const { return mpfr_number_p(value_) != 0; }
  /// Binary exponent e with value = f * 2^e, 0.5 <= |f| < 1. Zero gives 0.
  long exponent2() const;

  BigReal operator-() const;

  BigReal& operator+=(const BigReal& rhs);
  BigReal& operator-=(const BigReal& rhs);
  BigReal& operator*=(const BigReal& rhs);
  BigReal& operator/=(const BigReal& rhs);
  BigReal& operator*=(long rhs);
  BigReal& operator/=(long rhs);

  friend BigReal operator+(const BigReal& a, const BigReal& b);
  friend BigReal operator-(const BigReal& a, const BigReal& b);
  friend BigReal operator*(const BigReal& a, const BigReal& b);
  friend BigReal operator/(const BigReal& a, const BigReal& b);
  friend BigReal operator+(const BigReal& a, long b);
  friend BigReal operator-(const BigReal& a, long b);
  friend BigReal operator*(const BigReal& a, long b);
  friend BigReal operator/(const BigReal& a, long b);
  friend BigReal operator*(long a, const BigReal& b) { return b * a; }
  friend BigReal operator-(long a, const BigReal& b);
  friend BigReal operator/(long a, const BigReal& b);

  friend bool operator==(const BigReal& a, const BigReal& b) {
    return mpfr_equal_p(a.value_, b.value_) != 0;
  }
  friend std::partial_ordering operator<=>(const BigReal& a, const BigReal& b);
  friend std::partial_ordering operator<=>(const BigReal& a, long b);
  friend bool operator==(const BigReal& a, long b) { return mpfr_cmp_si(a.value_, b) == 0; }

 private:
  mpfr_t value_;
};

BigReal abs(const BigReal& v);
BigReal sqrt(const BigReal& v);
/// v * 2^e, exact.
BigReal ldexp(const BigReal& v, long e);
/// Largest integer <= v, as a BigReal of the same precision.
BigReal floor(const BigReal& v);
/// v - floor(v).
BigReal frac(const BigReal& v);

/// Decimal digit count, guard bits and resulting working precision.
struct PrecisionPolicy {
  long digits = 0;
  Bits guard_bits = 0;
  Bits working_bits = 0;
};

/// P = ceil(D log2 10) + g with g = 32 + ceil(log2 D).
/// Throws std::invalid_argument for D < 1.
PrecisionPolicy working_precision(long digits);

enum class ElemFn { kExp, kLog, kExpm1, kSin, kCos, kSinh };

/// Elementary function of v rounded to `precision` bits.
/// Throws std::domain_error for log of a non-positive value.
BigReal elem(ElemFn fn, const BigReal& v, Bits precision);

inline BigReal exp(const BigReal& v, Bits p) { return elem(ElemFn::kExp, v, p); }
inline BigReal log(const BigReal& v, Bits p) { return elem(ElemFn::kLog, v, p); }
inline BigReal expm1(const BigReal& v, Bits p) { return elem(ElemFn::kExpm1, v, p); }
inline BigReal sin(const BigReal& v, Bits p) { return elem(ElemFn::kSin, v, p); }
inline BigReal cos(const BigReal& v, Bits p) { return elem(ElemFn::kCos, v, p); }
inline BigReal sinh(const BigReal& v, Bits p) { return elem(ElemFn::kSinh, v, p); }
BigReal cosh(const BigReal& v, Bits p);
BigReal atan2(const BigReal& y, const BigReal& x, Bits p);
BigReal log10(const BigReal& v, Bits p);
BigReal pow(const BigReal& base, const BigReal& exponent, Bits p);
/// 10^e, exact when representable, else rounded.
BigReal pow10(long e, Bits p);

BigReal const_pi(Bits p);
BigReal const_ln2(Bits p);
BigReal const_e(Bits p);
BigReal const_ln10(Bits p);

/// A positive magnitude mantissa * 10^exp10 with mantissa in [1, 10).
///
/// Used for tail bounds and term sizes that may lie far outside double
/// range. A zero magnitude is represented by mantissa 0.
struct Magnitude {
  double mantissa = 0.0;
  std::int64_t exp10 = 0;

  static Magnitude zero() { return {}; }
  /// Decomposes |v|. Zero maps to Magnitude::zero().
  static Magnitude of(const BigReal& v);
  /// 10^l for a real decimal logarithm l.
  static Magnitude from_log10(const BigReal& l);

  bool is_zero() const { return mantissa == 0.0; }
  /// Approximate decimal logarithm; -inf for zero.
  double log10() const;
  /// Smallest integer e with value <= 10^e.
  std::int64_t ceil_exp10() const;
  /// Value as a BigReal at `precision` bits.
  BigReal to_big(Bits precision) const;
  std::string to_string(int significant = 6) const;

  friend bool operator<(const Magnitude& a, const Magnitude& b);
  friend bool operator<=(const Magnitude& a, const Magnitude& b) { return !(b < a); }
};

/// Reports e^(-X) as mantissa * 10^exp10 without materialising e^(-X).
///
/// exp10 = floor(-X / ln 10) and mantissa = 10^(-X/ln 10 - exp10). The
/// quotient is formed at enough extra precision that the fractional part
/// keeps the working precision of X. Throws std::invalid_argument for X <= 0.
Magnitude exponent_of_exp_neg(const BigReal& x);

/// Decimal string of v truncated (toward zero) to `decimals` digits after
/// the point, e.g. "0.5772".
std::string to_fixed_truncated(const BigReal& v, long decimals);
/// Scientific rendering with `significant` digits, rounded to nearest.
std::string to_scientific(const BigReal& v, int significant);

/// Pair of BigReal.
struct BigComplex {
  BigReal re;
  BigReal im;

  BigComplex() = default;
  explicit BigComplex(Bits precision) : re(precision), im(precision) {}
  BigComplex(BigReal real, BigReal imag) : re(std::move(real)), im(std::move(imag)) {}

  Bits precision() const { return re.precision(); }
  BigComplex conj() const { return {re, -im}; }
  /// re^2 + im^2.
  BigReal norm() const;
  BigReal abs() const;
  /// Principal argument in (-pi, pi].
  BigReal arg(Bits p) const;

  BigComplex& operator+=(const BigComplex& rhs);
  BigComplex& operator-=(const BigComplex& rhs);
  BigComplex& operator*=(const BigComplex& rhs);
  BigComplex& operator/=(const BigComplex& rhs);

  friend BigComplex operator+(BigComplex a, const BigComplex& b) { return a += b; }
  friend BigComplex operator-(BigComplex a, const BigComplex& b) { return a -= b; }
  friend BigComplex operator*(BigComplex a, const BigComplex& b) { return a *= b; }
  friend BigComplex operator/(BigComplex a, const BigComplex& b) { return a /= b; }
  friend BigComplex operator*(const BigComplex& a, const BigReal& s) { return {a.re * s, a.im * s}; }
  friend BigComplex operator/(const BigComplex& a, const BigReal& s) { return {a.re / s, a.im / s}; }
};

/// r (cos theta + i sin theta).
BigComplex polar(const BigReal& r, const BigReal& theta, Bits p);
/// Principal logarithm.
BigComplex log(const BigComplex& z, Bits p);
BigComplex exp(const BigComplex& z, Bits p);

}  // namespace eulergamma

#endif  // EULERGAMMA_PRECISION_HPP
