#include <doctest.h>

#include <cmath>
#include <random>
#include <stdexcept>

#include "eulergamma/specfun.hpp"

using namespace eulergamma;

namespace {

BigReal rel_err(const BigReal& a, const BigReal& b) { return abs(a - b) / abs(b); }

BigReal rel_err(const BigComplex& a, const BigComplex& b) {
  return (a - b).abs() / b.abs();
}

BigComplex cplx(const char* re, const char* im, Bits p) {
  return {BigReal::parse(re, p), BigReal::parse(im, p)};
}

BigReal two_pow(long e) { return BigReal::from_si_2exp(1, e, 64); }

// MPFR's own Gamma, only as an oracle.
BigReal mpfr_gamma_of(const BigReal& a, Bits p) {
  BigReal r(p);
  mpfr_gamma(r.get(), a.get(), MPFR_RNDN);
  return r;
}

// E1(x) = -Ei(-x); mpfr_eint accepts negative arguments since 4.0.
BigReal mpfr_e1_of(const BigReal& x, Bits p) {
  BigReal r(p);
  const BigReal neg = -x;
  mpfr_eint(r.get(), neg.get(), MPFR_RNDN);
  return -r;
}

}  // namespace

TEST_CASE("shift threshold and crossover defaults") {
  CHECK(shift_threshold(10) == 10);
  CHECK(shift_threshold(64) == 26);
  CHECK(shift_threshold(372) == 149);
  CHECK(e1_crossover(32) == doctest::Approx(4.0));
  CHECK(e1_crossover(64) == doctest::Approx(64 * std::log(2.0) / 8));
}

TEST_CASE("Bernoulli numbers") {
  const Bits p = 128;
  CHECK(bernoulli_even(1, p).to_double() == doctest::Approx(1.0 / 6));
  CHECK(bernoulli_even(2, p).to_double() == doctest::Approx(-1.0 / 30));
  CHECK(bernoulli_even(3, p).to_double() == doctest::Approx(1.0 / 42));
  CHECK(bernoulli_even(10, p).to_double() == doctest::Approx(-174611.0 / 330));
  // B_60 numerator / denominator, exact rational
  const BigReal b60 = bernoulli_even(30, 256);
  const BigReal expected =
      BigReal::parse("-1215233140483755572040304994079820246041491", 256) / BigReal::parse("56786730", 256);
  CHECK(rel_err(b60, expected) < two_pow(-240));
}

TEST_CASE("Gamma on the real axis against MPFR") {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> dist(0.01, 60.0);
  const Bits p = 256;
  for (int i = 0; i < 40; ++i) {
    const BigReal a(dist(rng), p);
    CHECK(rel_err(gamma_real(a, p), mpfr_gamma_of(a, p)) < two_pow(-p + 8));
  }
  CHECK(rel_err(gamma_real(BigReal(5L, p), p), BigReal(24L, p)) < two_pow(-p + 8));
  const BigReal half = BigReal::from_si_2exp(1, -1, p);
  CHECK(rel_err(gamma_real(half, p), sqrt(const_pi(p))) < two_pow(-p + 8));
}

TEST_CASE("Gamma at known imaginary points") {
  const PrecisionPolicy policy = working_precision(40);
  const Bits p = policy.working_bits;
  const BigComplex gi = gamma_imag(BigReal(1L, p), policy);
  CHECK(rel_err(gi, cplx("-0.1549498283018106851", "-0.4980156681183560427", p)) < BigReal(1e-18, 64));

  const BigReal two_pi = const_pi(p) * 2L;
  const BigComplex g = gamma_imag(two_pi, policy);
  CHECK(rel_err(g.abs(), BigReal::parse("5.172318620381230633e-5", p)) < BigReal(1e-18, 64));

  const BigComplex gpsi = g * digamma_imag(two_pi, policy);
  const BigComplex expected = cplx("5.955688853682641606345871867638646456156e-5",
                                   "-1.131244378904050718154286120747767977649e-4", p);
  CHECK(rel_err(gpsi, expected) < BigReal(1e-36, 64));

  const BigComplex psi_i = digamma_imag(BigReal(1L, p), policy);
  CHECK(rel_err(psi_i, cplx("0.09465032062247697727", "2.076674047468581174134", p)) < BigReal(1e-19, 64));
}

TEST_CASE("modulus identity |Gamma(it)|^2 = pi / (t sinh(pi t))") {
  const PrecisionPolicy policy = working_precision(50);
  const Bits p = policy.working_bits;
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> dist(0.05, 80.0);
  for (int i = 0; i < 30; ++i) {
    const BigReal t(dist(rng), p);
    const BigReal lhs = gamma_imag(t, policy).norm();
    const BigReal rhs = const_pi(p) / (t * sinh(const_pi(p) * t, p));
    CHECK(rel_err(lhs, rhs) < two_pow(-p + 16));
  }
}

TEST_CASE("Im psi(it) = 1/(2t) + (pi/2) coth(pi t)") {
  const PrecisionPolicy policy = working_precision(50);
  const Bits p = policy.working_bits;
  for (double td : {0.25, 1.0, 3.5, 12.0, 40.0}) {
    const BigReal t(td, p);
    const BigReal pit = const_pi(p) * t;
    const BigReal coth = cosh(pit, p) / sinh(pit, p);
    const BigReal expected = 1L / (t * 2L) + const_pi(p) * coth / 2L;
    CHECK(rel_err(digamma_imag(t, policy).im, expected) < two_pow(-p + 16));
  }
}

TEST_CASE("conjugate symmetry and recurrence in the right half-plane") {
  const Bits p = 200;
  for (const auto& [re, im] : {std::pair{"0.3", "7"}, std::pair{"2.5", "-1.25"}, std::pair{"0", "30"}}) {
    const BigComplex z = cplx(re, im, p);
    const BigComplex g = gamma_right_half(z, p);
    const BigComplex gc = gamma_right_half(z.conj(), p);
    CHECK(rel_err(gc, g.conj()) < two_pow(-p + 10));

    const BigComplex z1 = z + BigComplex(BigReal(1L, p), BigReal(p));
    CHECK(rel_err(gamma_right_half(z1, p), z * g) < two_pow(-p + 10));
  }
}

TEST_CASE("digamma matches a central difference of log Gamma") {
  const Bits p = 320;
  const BigComplex z = cplx("2", "3", p);
  const BigReal h = BigReal::from_si_2exp(1, -60, p);
  const BigComplex hz(h, BigReal(p));
  const BigComplex up = log(gamma_right_half(z + hz, p), p);
  const BigComplex down = log(gamma_right_half(z - hz, p), p);
  const BigComplex diff = (up - down) / (h * 2L);
  CHECK(rel_err(diff, digamma_right_half(z, p)) < BigReal(1e-30, 64));
}

TEST_CASE("shift and asymptotic term counts are reported") {
  const Bits p = 372;
  const GammaEval near = gamma_eval(cplx("0", "1", p), p);
  CHECK(near.shift_count > 0);
  CHECK(near.asymptotic_terms > 0);
  const GammaEval far = gamma_eval(cplx("0", "1000", p), p);
  CHECK(far.shift_count == 0);
}

TEST_CASE("Gamma domain errors") {
  const Bits p = 64;
  const PrecisionPolicy policy = working_precision(10);
  CHECK_THROWS_AS(gamma_right_half(cplx("-0.5", "1", p), p), std::invalid_argument);
  CHECK_THROWS_AS(gamma_right_half(BigComplex(p), p), std::invalid_argument);
  CHECK_THROWS_AS(digamma_right_half(BigComplex(p), p), std::invalid_argument);
  CHECK_THROWS_AS(gamma_imag(BigReal(p), policy), std::invalid_argument);
  CHECK_THROWS_AS(gamma_imag(BigReal(-1L, p), policy), std::invalid_argument);
  CHECK_THROWS_AS(digamma_imag(BigReal(-1L, p), policy), std::invalid_argument);
}

TEST_CASE("E1 at frozen points") {
  const PrecisionPolicy policy = working_precision(38);
  const Bits p = policy.working_bits;
  CHECK(rel_err(exp_integral_e1(BigReal(1L, p), policy),
                BigReal::parse("0.219383934395520273677163775460121649031", p)) < BigReal(1e-36, 64));
  CHECK(rel_err(exp_integral_e1(BigReal(32L, p), policy), BigReal::parse("3.840961801225066831e-16", p)) <
        BigReal(1e-18, 64));
  CHECK(rel_err(exp_integral_e1(BigReal(0.5, p), policy), BigReal::parse("0.5597735947761608117", p)) <
        BigReal(1e-18, 64));
  CHECK(rel_err(exp_integral_e1(BigReal(2L, p), policy), BigReal::parse("0.04890051070806111957", p)) <
        BigReal(1e-18, 64));
}

TEST_CASE("E1 against MPFR on random arguments, both branches forced") {
  const PrecisionPolicy policy = working_precision(60);
  const Bits p = policy.working_bits;
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> dist(0.01, 60.0);
  for (int i = 0; i < 30; ++i) {
    const BigReal x(dist(rng), p);
    const BigReal expected = mpfr_e1_of(x, p);
    CHECK(rel_err(exp_integral_e1(x, policy), expected) < BigReal(1e-58, 64));
  }
  for (double xd : {0.5, 3.0, 9.0}) {
    const BigReal x(xd, p);
    const BigReal expected = mpfr_e1_of(x, p);
    CHECK(rel_err(exp_integral_e1(x, policy, E1Branch::kSeries), expected) < BigReal(1e-56, 64));
    CHECK(rel_err(exp_integral_e1(x, policy, E1Branch::kContinuedFraction), expected) < BigReal(1e-56, 64));
  }
}

TEST_CASE("E1 branches agree at the crossover") {
  for (long digits : {20L, 60L, 200L}) {
    const PrecisionPolicy policy = working_precision(digits);
    const Bits p = policy.working_bits;
    const BigReal theta(e1_crossover(p), p);
    const BigReal s = exp_integral_e1(theta, policy, E1Branch::kSeries);
    const BigReal c = exp_integral_e1(theta, policy, E1Branch::kContinuedFraction);
    CHECK(rel_err(s, c) < pow10(-digits + 2, 64));
  }
}

TEST_CASE("E1 domain errors") {
  const PrecisionPolicy policy = working_precision(10);
  CHECK_THROWS_AS(exp_integral_e1(BigReal(64), policy), std::domain_error);
  CHECK_THROWS_AS(exp_integral_e1(BigReal(-1L, 64), policy), std::domain_error);
}
