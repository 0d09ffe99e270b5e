#pragma once

// Independent 50-digit reference values via Boost.Math.

#include <boost/math/quadrature/exp_sinh.hpp>
#include <boost/math/quadrature/tanh_sinh.hpp>
#include <boost/math/special_functions/expint.hpp>
#include <boost/math/special_functions/factorials.hpp>
#include <boost/multiprecision/cpp_bin_float.hpp>

#include <ios>
#include <string>

#include "maass_shift/bigfloat.hpp"

namespace oracle {

using F50 = boost::multiprecision::cpp_bin_float_50;

inline maass_shift::Real to_real(const F50& x, maass_shift::Bits bits = 256) {
  return maass_shift::Real::from_string(x.str(55, std::ios_base::scientific), bits);
}

inline F50 from_real(const maass_shift::Real& x) { return F50(x.to_string(60)); }

// |a - b| <= rel * |b|
inline bool close(const maass_shift::Real& a, const maass_shift::Real& b, double rel) {
  maass_shift::Real d = maass_shift::abs(a - b);
  return d <= maass_shift::abs(b) * maass_shift::Real(rel, b.precision() + 64);
}

// Gamma(-n, y) = (-1)^n / n! [E1(y) - e^-y sum_{k<n} (-1)^k k! / y^{k+1}]
inline F50 gamma_negative_integer(int n, const F50& y) {
  using boost::math::expint;
  F50 s = 0;
  F50 kf = 1;
  for (int k = 0; k < n; ++k) {
    if (k > 0) kf *= k;
    F50 t = kf / pow(y, k + 1);
    s += (k % 2 == 0) ? t : F50(-t);
  }
  F50 e1 = expint(1, y);
  F50 r = (e1 - exp(-y) * s) / boost::math::factorial<F50>(n);
  return (n % 2 == 0) ? r : F50(-r);
}

}  // namespace oracle
