#pragma once

#include <functional>
#include <utility>
#include <vector>

#include "maass_shift/bigfloat.hpp"
#include "maass_shift/errors.hpp"

namespace maass_shift {

// Working precision, relative tolerance and default series length. Immutable
// once built; safe to share between threads.
class PrecisionContext {
 public:
  explicit PrecisionContext(Bits working_precision = 512, double target_relative_tolerance = 1e-40,
                            long series_truncation_default = 1100);

  Bits bits() const { return bits_; }
  double tolerance() const { return tol_; }
  long series_truncation() const { return trunc_; }

  // Precision to use for intermediates of size 10^log10_magnitude: the working
  // precision, or 768 bits once magnitudes pass 10^120.
  Bits bits_for_magnitude(double log10_magnitude) const;

  PrecisionContext with_bits(Bits b) const { return PrecisionContext(b, tol_, trunc_); }
  PrecisionContext with_tolerance(double t) const { return PrecisionContext(bits_, t, trunc_); }

 private:
  Bits bits_;
  double tol_;
  long trunc_;
};

Real gamma(const Real& a, const PrecisionContext& ctx);

// Gamma(a, x) = int_x^inf t^(a-1) e^-t dt for x > 0 and any real a.
Real upper_incomplete_gamma(const Real& a, const Real& x, const PrecisionContext& ctx);
Real upper_incomplete_gamma(long a, const Real& x, const PrecisionContext& ctx);

// Modified Bessel I_nu(x) from the ascending series, nu >= 0 integer, x > 0.
Real bessel_i(long nu, const Real& x, const PrecisionContext& ctx);
// Same series cut after a fixed number of terms (for truncation checks).
Real bessel_i_partial(long nu, const Real& x, long terms, Bits bits);
// Number of terms bessel_i retains at the given precision.
long bessel_i_terms(long nu, const Real& x, Bits bits);
double bessel_i_double(long nu, double x);

struct Estimate {
  Real value;
  Real error;
};

using Integrand = std::function<Real(const Real&)>;

// int_0^inf f(y) dy. The integrand may behave like y^hint at 0 (hint > -1)
// and must decay at infinity.
Estimate integrate_semiline(const Integrand& f, double singular_exponent_hint, const PrecisionContext& ctx);

// Polynomial extrapolation of (s, value) samples to s = 0. Needs at least
// three samples with strictly decreasing |s|; s may take either sign.
Estimate richardson_limit(const std::vector<std::pair<Real, Real>>& samples);

}  // namespace maass_shift
