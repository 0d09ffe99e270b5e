#pragma once

#include <map>
#include <string>

#include "maass_shift/harmonic_maass.hpp"
#include "maass_shift/qseries.hpp"

namespace maass_shift {

enum class Route { direct, mock, projection };
enum class SumScheme { abel, cesaro };

std::string to_string(Route r);
std::string to_string(SumScheme s);

// One value of Dhat(f1, f2, h; k-1) together with how it was obtained.
struct ShiftedValue {
  long h = 0;
  Complex value;
  Route route = Route::mock;
  double error_estimate = 0;  // always > 0
  std::map<std::string, std::string> parameters;
};

// Termwise symmetrized sum
//   sum_{n<=N} [a1(n+h) - a1(n-h)] a2(n) / n^{k-1}
// made convergent by averaging partial sums over N/2 < M <= N. The abel
// scheme weights the terms by n^-eps, eps in {0.2, 0.1, 0.05}, and
// extrapolates to eps = 0; cesaro uses eps = 0 directly. Both schemes are
// always run and their spread enters the error estimate. f1 needs N + h
// coefficients and f2 needs N.
ShiftedValue direct_dhat(const CuspForm& f1, const CuspForm& f2, long h, long N, SumScheme scheme);

// 11! Dhat(h) = -[q^h](M^+ f2) + c^+(-1) a2(1) [q^h] E2 with
// M^+ = kappa lambda P^+, kappa = -(k-1)(4 pi)^{k-1}.
ShiftedValue mock_dhat(const HarmonicMaassForm& hmf, const CuspForm& f2, long h);

struct ProjectionOptions {
  long m_max = 200000;
  // Terms with m <= m_max / taper_width get full weight; the weight falls
  // smoothly to zero in log m up to m_max.
  double taper_width = 16;
  // Richardson cross-check of the s -> 0 limit.
  int richardson_points = 5;
  double richardson_s0 = -0.04;
};

// Regularized holomorphic projection of M^- f2 (weight 2), h-th coefficient,
// divided by (k-1)!. The y-integral of each m-term is done in closed form;
// the conditionally convergent m-sum gets a smooth taper and the spread over
// taper choices is the truncation error. The hmf shadow needs m_max
// coefficients and f2 needs m_max + h.
ShiftedValue projection_dhat(const HarmonicMaassForm& hmf, const CuspForm& f2, long h,
                             const ProjectionOptions& opt = {});

// int_0^inf Gamma(k-1, 4 pi m y) e^{-4 pi h y} y^{-s} dy, closed form, s < 1.
double projection_integral(int k, long m, long h, double s);

// L(f1, f2; tau) = sum_{h=1}^H Dhat(h) q^h through the mock route.
ComplexSeries generating_function(const HarmonicMaassForm& hmf, const CuspForm& f2, long H);

}  // namespace maass_shift
