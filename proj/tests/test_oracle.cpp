#include <doctest.h>

#include <stdexcept>

#include "eulergamma/oracle.hpp"

using namespace eulergamma;

namespace {

BigReal mpfr_euler(Bits p) {
  BigReal r(p);
  mpfr_const_euler(r.get(), MPFR_RNDN);
  return r;
}

BigReal mpfr_pi(Bits p) {
  BigReal r(p);
  mpfr_const_pi(r.get(), MPFR_RNDN);
  return r;
}

}  // namespace

TEST_CASE("Brent-McMillan gamma against MPFR's constant") {
  for (long digits : {1L, 12L, 50L, 1000L, 3000L}) {
    const ReferenceValue ref = reference_gamma(digits);
    CHECK(ref.name == "gamma");
    CHECK(ref.method == "brent-mcmillan-b1");
    CHECK(ref.digits == digits);
    const Bits p = ref.value.precision() + 64;
    CHECK(abs(ref.value - mpfr_euler(p)) <= pow10(-digits - 1, 64));
  }
}

TEST_CASE("AGM pi against MPFR's constant") {
  for (long digits : {5L, 100L, 2000L}) {
    const ReferenceValue ref = reference_pi(digits);
    CHECK(ref.method == "gauss-legendre-agm");
    const Bits p = ref.value.precision() + 64;
    CHECK(abs(ref.value - mpfr_pi(p)) <= pow10(-digits - 1, 64));
  }
}

TEST_CASE("reference range checks") {
  CHECK_THROWS_AS(reference_gamma(0), std::invalid_argument);
  CHECK_THROWS_AS(reference_gamma(100001), std::invalid_argument);
  CHECK_THROWS_AS(reference_pi(-1), std::invalid_argument);
}

TEST_CASE("naive harmonic limit") {
  CHECK(naive_gamma(1).to_double() == doctest::Approx(1.0));
  CHECK(naive_gamma(10).to_double() == doctest::Approx(0.6263831609742082842).epsilon(1e-16));
  CHECK_THROWS_AS(naive_gamma(0), std::invalid_argument);
}

TEST_CASE("naive error decreases like 1/(2n)") {
  const BigReal gamma = mpfr_euler(256);
  double previous = 1.0;
  for (long n : {10L, 100L, 1000L, 10000L, 100000L}) {
    const double err = (naive_gamma(n) - gamma).to_double();
    CHECK(err > 0.0);
    CHECK(err < previous);
    CHECK(err * 2.0 * static_cast<double>(n) == doctest::Approx(1.0).epsilon(0.01));
    previous = err;
  }
  CHECK((naive_gamma(100) - gamma).to_double() == doctest::Approx(0.004991666749996).epsilon(1e-12));
  CHECK((naive_gamma(1000) - gamma).to_double() == doctest::Approx(0.000499916666675).epsilon(1e-11));
}
