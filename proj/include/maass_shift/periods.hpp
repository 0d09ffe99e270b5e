#pragma once

#include <vector>

#include "maass_shift/modular_forms.hpp"
#include "maass_shift/numerics.hpp"

namespace maass_shift {

struct GL2Matrix {
  long a, b, c, d;

  GL2Matrix(long a_, long b_, long c_, long d_);

  static GL2Matrix S() { return {0, -1, 1, 0}; }
  static GL2Matrix T() { return {1, 1, 0, 1}; }
  static GL2Matrix identity() { return {1, 0, 0, 1}; }
  // U = T S
  static GL2Matrix U() { return {1, -1, 1, 0}; }

  // Completion of the bottom row (c, d), gcd(c, d) = 1, with a minimal |a|.
  static GL2Matrix complete(long c, long d);

  Complex act(const Complex& z) const;
  Complex automorphy(const Complex& z) const;  // c z + d

  friend GL2Matrix operator*(const GL2Matrix& x, const GL2Matrix& y) {
    return {x.a * y.a + x.b * y.c, x.a * y.b + x.b * y.d, x.c * y.a + x.d * y.c, x.c * y.b + x.d * y.d};
  }
  friend bool operator==(const GL2Matrix&, const GL2Matrix&) = default;
};

// Moves z into the fundamental domain {|z| >= 1, -1/2 <= Re z < 1/2}; returns
// g with g z in that domain.
GL2Matrix reduce_to_fundamental_domain(const Complex& z);

// Weight k slash action on a function given by values: (F|_k g)(z) = (cz+d)^-k F(gz).
template <class F>
Complex slash(F&& fn, int weight, const GL2Matrix& g, const Complex& z) {
  Complex j = g.automorphy(z);
  return pow(j, -weight) * fn(g.act(z));
}

// Multiplicative inverse of d modulo c > 0 in [0, c).
long inverse_mod(long d, long c);

// r_n(f) = int_0^inf f(it) t^n dt, split at t = 1 and folded with the
// modular relation, which turns both halves into incomplete gamma sums.
Complex period(const CuspForm& f, int n, const PrecisionContext& ctx);

// L(f, s) = (2 pi)^s / (s-1)! r_{s-1}(f)
Complex l_value(const CuspForm& f, int s, const PrecisionContext& ctx);

// L(f, e^{-2 pi i d/c}, s) for integer 1 <= s <= k-1 through the split at
// y0 = 1/|c|.
Complex additive_twist(const CuspForm& f, long d, long c, int s, const PrecisionContext& ctx);

struct PeriodData {
  int weight = 12;
  std::vector<Complex> periods;            // r_0 .. r_{k-2}
  std::vector<Complex> critical_l_values;  // L(f,1) .. L(f,k-1)
  // Coefficient of z^{k-2-n} at index n; zero where the parity excludes n.
  std::vector<Complex> even_polynomial;
  std::vector<Complex> odd_polynomial;

  Complex r_plus(const Complex& z) const;
  Complex r_minus(const Complex& z) const;
  // r(f; z) = r+(f, z) + i r-(f, z)
  Complex r(const Complex& z) const;
  // rho(z) = int_0^{i inf} f(tau) (z - tau)^{k-2} dtau
  Complex eichler(const Complex& z) const;
  // Coefficients of eichler(z), index n multiplying z^{k-2-n}.
  std::vector<Complex> eichler_coefficients() const;
};

// Petersson norm <f, f> = int_{SL2(Z)\H} |f|^2 y^k dmu from the periods
// (Haberland's formula).
Real petersson_norm(const PeriodData& pd);

PeriodData period_polynomial(const CuspForm& f, const PrecisionContext& ctx);

// The twisted L-values L(f, e^{-2 pi i d/c}, n+1), n = 0..k-2, for gamma,
// ready to assemble the period polynomial at any z.
struct TwistedPeriod {
  GL2Matrix gamma;
  int weight;
  std::vector<Complex> L;
  Complex operator()(const Complex& z, Bits bits) const;
};
TwistedPeriod twisted_period(const CuspForm& f, const GL2Matrix& gamma, const PrecisionContext& ctx);

// sum_n conj(L(f, e^{-2 pi i d/c}, n+1)) / (k-2-n)! (-2 pi i)^{k-2-n} ((cz+d)/c)^{k-2-n}
// for gamma with c != 0.
Complex twisted_period_polynomial(const CuspForm& f, const GL2Matrix& gamma, const Complex& z,
                                  const PrecisionContext& ctx);
// Same for S from the untwisted values: sum_n conj(L(f, n+1)) / (k-2-n)! (-2 pi i z)^{k-2-n}.
Complex s_period_polynomial(const PeriodData& pd, const Complex& z, const PrecisionContext& ctx);

}  // namespace maass_shift
