#ifndef EULERGAMMA_ORACLE_HPP
#define EULERGAMMA_ORACLE_HPP

#include <string>

#include "eulergamma/precision.hpp"

namespace eulergamma {

/// A constant computed by a method unrelated to the residue formula.
struct ReferenceValue {
  std::string name;
  BigReal value;
  long digits = 0;
  std::string method;
};

/// Euler's constant to D digits by the Brent-McMillan Bessel-function
/// method. Shares no code with the series or Gamma modules.
/// Throws std::invalid_argument unless 1 <= D <= 100000.
ReferenceValue reference_gamma(long digits);

/// pi to D digits by the Gauss-Legendre AGM iteration. Same range as above.
ReferenceValue reference_pi(long digits);

/// H_n - ln n at 64-digit working precision; the defining limit, slowly.
/// Throws std::invalid_argument for n < 1.
BigReal naive_gamma(long n);

}  // namespace eulergamma

#endif  // EULERGAMMA_ORACLE_HPP
