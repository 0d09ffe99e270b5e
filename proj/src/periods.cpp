#include "maass_shift/periods.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

namespace maass_shift {

GL2Matrix::GL2Matrix(long a_, long b_, long c_, long d_) : a(a_), b(b_), c(c_), d(d_) {
  if (a * d - b * c != 1) throw std::invalid_argument("GL2Matrix: determinant must be 1");
}

namespace {

// g = gcd(a, b) = a x + b y
long ext_gcd(long a, long b, long& x, long& y) {
  if (b == 0) {
    x = a >= 0 ? 1 : -1;
    y = 0;
    return std::abs(a);
  }
  long x1, y1;
  long g = ext_gcd(b, a % b, x1, y1);
  x = y1;
  y = x1 - (a / b) * y1;
  return g;
}


}  // namespace

long inverse_mod(long d, long c) {
  if (c <= 0) throw std::invalid_argument("inverse_mod: modulus must be positive");
  if (c == 1) return 0;
  long x, y;
  long g = ext_gcd(((d % c) + c) % c, c, x, y);
  if (g != 1) throw std::invalid_argument("inverse_mod: not invertible");
  return ((x % c) + c) % c;
}

GL2Matrix GL2Matrix::complete(long c, long d) {
  if (std::gcd(c, d) != 1) throw std::invalid_argument("GL2Matrix::complete: gcd(c, d) != 1");
  if (c == 0) return {d, 0, 0, d};  // d = +-1
  long cc = std::abs(c);
  // a d = 1 mod c, pick the representative with minimal |a|
  long a = inverse_mod(d, cc);
  if (2 * a > cc) a -= cc;
  long b = (a * d - 1) / c;
  return {a, b, c, d};
}

Complex GL2Matrix::automorphy(const Complex& z) const {
  Complex j = z * c;
  j.re() += d;
  return j;
}

Complex GL2Matrix::act(const Complex& z) const {
  Complex num = z * a;
  num.re() += b;
  return num / automorphy(z);
}

GL2Matrix reduce_to_fundamental_domain(const Complex& z0) {
  GL2Matrix g = GL2Matrix::identity();
  Complex z = z0;
  for (int iter = 0; iter < 10000; ++iter) {
    long n = static_cast<long>(std::floor(z.re().to_double() + 0.5));
    if (n != 0) {
      g = GL2Matrix(1, -n, 0, 1) * g;
      z.re() -= n;
    }
    if (norm(z) < 1.0 - 1e-15) {
      g = GL2Matrix::S() * g;
      z = Complex(Real(-1L, z.precision()), Real(z.precision())) / z;
      continue;
    }
    return g;
  }
  throw ConvergenceError("reduce_to_fundamental_domain: no convergence");
}

namespace {

// sum_m a(m) e^{2 pi i m num / c} Gamma(s, 2 pi m x0) / (2 pi m)^s with
// x0 = 1/c, s >= 1 integer, truncated where the terms fall below 2^-wb
// relative to unit scale.
Complex incomplete_gamma_sum(const CuspForm& f, long num, long c, int s, Bits wb) {
  const double x0 = 1.0 / static_cast<double>(c);
  // e^{-2 pi m x0} m^{k/2 + s} < 2^-wb
  const double kk = f.weight / 2.0 + s + 1;
  long M = 1;
  while (2 * M_PI * static_cast<double>(M) * x0 - kk * std::log(static_cast<double>(M)) <
         static_cast<double>(wb) * std::log(2.0) + 10)
    ++M;
  if (M > f.length()) {
    throw PrecisionError("additive twist needs " + std::to_string(M) + " coefficients, form has " +
                         std::to_string(f.length()));
  }
  Real two_pi = Real::pi(wb) * 2L;
  Real step = two_pi / c;  // 2 pi x0
  Real decay = exp(-step);
  // c-th roots of unity
  std::vector<Complex> roots;
  roots.reserve(static_cast<std::size_t>(c));
  for (long r = 0; r < c; ++r) roots.push_back(expi(two_pi * r / c));
  const long nn = ((num % c) + c) % c;

  Complex sum(wb);
  Real em = decay;  // e^{-2 pi m x0}
  Real fact_s1 = factorial(static_cast<unsigned long>(s - 1), wb);
  for (long m = 1; m <= M; ++m, em *= decay) {
    mpz_class am = f.a(m);
    if (am == 0) continue;
    Real X = step * m;
    // sum_{j<s} X^j / j!
    Real t(1L, wb), poly(1L, wb);
    for (int j = 1; j < s; ++j) {
      t *= X;
      t /= j;
      poly += t;
    }
    Real v = fact_s1 * em * poly / pow(two_pi * m, s);
    v *= am;
    sum += roots[static_cast<std::size_t>((nn * (m % c)) % c)] * v;
  }
  return sum;
}

Bits working_bits(const PrecisionContext& ctx) { return ctx.bits() + 48; }

}  // namespace

Complex period(const CuspForm& f, int n, const PrecisionContext& ctx) {
  const int k = f.weight;
  if (n < 0 || n > k - 2) throw std::out_of_range("period: n outside 0..k-2");
  const Bits wb = working_bits(ctx);
  Complex lo = incomplete_gamma_sum(f, 0, 1, n + 1, wb);
  Complex hi = incomplete_gamma_sum(f, 0, 1, k - 1 - n, wb);
  if ((k / 2) % 2 == 1) hi = -hi;  // i^k
  Complex r = lo + hi;
  return Complex(Real(r.re(), ctx.bits()), Real(r.im(), ctx.bits()));
}

Complex l_value(const CuspForm& f, int s, const PrecisionContext& ctx) {
  if (s < 1 || s > f.weight - 1) throw std::out_of_range("l_value: s outside 1..k-1");
  PrecisionContext wide = ctx.with_bits(working_bits(ctx));
  Complex r = period(f, s - 1, wide);
  Real scale = pow(Real::pi(wide.bits()) * 2L, s) / factorial(static_cast<unsigned long>(s - 1), wide.bits());
  r *= scale;
  return Complex(Real(r.re(), ctx.bits()), Real(r.im(), ctx.bits()));
}

Complex additive_twist(const CuspForm& f, long d, long c, int s, const PrecisionContext& ctx) {
  const int k = f.weight;
  if (c == 0) throw std::invalid_argument("additive_twist: c must be nonzero");
  if (std::gcd(d, c) != 1) throw std::invalid_argument("additive_twist: gcd(d, c) != 1");
  if (s < 1 || s > k - 1) throw std::out_of_range("additive_twist: s outside 1..k-1");
  if (c < 0) {
    c = -c;
    d = -d;
  }
  const Bits wb = working_bits(ctx);
  const long A = inverse_mod(d, c);
  Complex p1 = incomplete_gamma_sum(f, -d, c, s, wb);
  Complex p2 = incomplete_gamma_sum(f, A, c, k - s, wb);
  // (ic)^-k c^{2(k-s)} = i^-k c^{k-2s}
  Real cpow = pow(Real(c, wb), static_cast<long>(k - 2 * s));
  if ((k / 2) % 2 == 1) cpow = -cpow;
  p2 *= cpow;
  Complex r = p1 + p2;
  r *= pow(Real::pi(wb) * 2L, s) / factorial(static_cast<unsigned long>(s - 1), wb);
  return Complex(Real(r.re(), ctx.bits()), Real(r.im(), ctx.bits()));
}

namespace {

Complex horner(const std::vector<Complex>& coef, const Complex& z) {
  // coef[n] multiplies z^{deg - n}
  Complex acc(z.precision());
  for (const auto& c : coef) {
    acc *= z;
    acc += c;
  }
  return acc;
}

}  // namespace

Complex PeriodData::r_plus(const Complex& z) const { return horner(even_polynomial, z); }
Complex PeriodData::r_minus(const Complex& z) const { return horner(odd_polynomial, z); }

Complex PeriodData::r(const Complex& z) const {
  Complex m = r_minus(z);
  return r_plus(z) + Complex(-m.im(), m.re());
}

std::vector<Complex> PeriodData::eichler_coefficients() const {
  // sum_n C(k-2, n) (-i)^n i r_n z^{k-2-n}
  const int w = weight - 2;
  std::vector<Complex> coef;
  for (int n = 0; n <= w; ++n) {
    Complex c = periods[n] * binomial(w, n, periods[n].precision());
    // (-i)^n i = i^{1+3n}
    switch ((1 + 3 * n) % 4) {
      case 0: break;
      case 1: c = Complex(-c.im(), c.re()); break;
      case 2: c = -c; break;
      case 3: c = Complex(c.im(), -c.re()); break;
    }
    coef.push_back(std::move(c));
  }
  return coef;
}

Complex PeriodData::eichler(const Complex& z) const { return horner(eichler_coefficients(), z); }

Real petersson_norm(const PeriodData& pd) {
  // Haberland: 6 (2i)^{k-1} <f, f> = -<<rho|(T - T^-1), conj(rho)>> with the
  // invariant pairing <<z^m, z^{w-m}>> = (-1)^m / C(w, m).
  const int w = pd.weight - 2;
  std::vector<Complex> lead = pd.eichler_coefficients();
  const Bits bits = lead[0].precision();
  std::vector<Complex> rho(w + 1, Complex(bits));  // ascending powers
  for (int n = 0; n <= w; ++n) rho[w - n] = lead[n];
  // rho(z+1) - rho(z-1): only odd powers of the shift survive
  std::vector<Complex> diff(w + 1, Complex(bits));
  for (int j = 0; j <= w; ++j)
    for (int i = 0; i < j; ++i)
      if ((j - i) % 2 == 1) diff[i] += rho[j] * (binomial(j, i, bits) * 2L);
  Complex acc(bits);
  for (int m = 0; m <= w; ++m) {
    Complex t = diff[m] * conj(rho[w - m]) / binomial(w, m, bits);
    if (m % 2) acc -= t;
    else acc += t;
  }
  // (2i)^{k-1} = 2^{k-1} i^{k-1}
  const int k = pd.weight;
  Real scale = pow(Real(2L, bits), long(k - 1)) * 6L;
  Complex ik(bits);
  switch ((k - 1) % 4) {
    case 0: ik = Complex(Real(1L, bits), Real(0L, bits)); break;
    case 1: ik = Complex(Real(0L, bits), Real(1L, bits)); break;
    case 2: ik = Complex(Real(-1L, bits), Real(0L, bits)); break;
    case 3: ik = Complex(Real(0L, bits), Real(-1L, bits)); break;
  }
  Complex v = -acc / (ik * scale);
  return v.re();
}

PeriodData period_polynomial(const CuspForm& f, const PrecisionContext& ctx) {
  const int k = f.weight;
  if (k < 12 || k % 2 != 0) throw std::invalid_argument("period_polynomial: weight must be even and >= 12");
  PeriodData pd;
  pd.weight = k;
  const Bits bits = ctx.bits();
  Real two_pi = Real::pi(bits) * 2L;
  for (int n = 0; n <= k - 2; ++n) {
    pd.periods.push_back(period(f, n, ctx));
    Complex L = pd.periods.back() * (pow(two_pi, n + 1) / factorial(n, bits));
    pd.critical_l_values.push_back(std::move(L));
    Complex c = pd.periods.back() * binomial(k - 2, n, bits);
    Complex zero(bits);
    if (n % 2 == 0) {
      if ((n / 2) % 2 == 1) c = -c;
      pd.even_polynomial.push_back(c);
      pd.odd_polynomial.push_back(zero);
    } else {
      if (((n - 1) / 2) % 2 == 1) c = -c;
      pd.odd_polynomial.push_back(c);
      pd.even_polynomial.push_back(zero);
    }
  }
  return pd;
}

namespace {

// sum_n conj(L_n) / (k-2-n)! (-2 pi i w)^{k-2-n} where L_n = L(.., n+1)
Complex assemble(const std::vector<Complex>& L, const Complex& w, int k, Bits bits) {
  Real two_pi = Real::pi(bits) * 2L;
  Complex mw = w * two_pi;
  mw = Complex(mw.im(), -mw.re());  // -2 pi i w
  Complex sum(bits);
  for (int n = 0; n <= k - 2; ++n) {
    Complex term = conj(L[n]) * pow(mw, k - 2 - n);
    term /= factorial(static_cast<unsigned long>(k - 2 - n), bits);
    sum += term;
  }
  return sum;
}

}  // namespace

TwistedPeriod twisted_period(const CuspForm& f, const GL2Matrix& g, const PrecisionContext& ctx) {
  if (g.c == 0) throw std::invalid_argument("twisted_period: c must be nonzero");
  TwistedPeriod tp{g, f.weight, {}};
  for (int n = 0; n <= f.weight - 2; ++n) tp.L.push_back(additive_twist(f, g.d, g.c, n + 1, ctx));
  return tp;
}

Complex TwistedPeriod::operator()(const Complex& z, Bits bits) const {
  Complex w = gamma.automorphy(z) / Complex(Real(gamma.c, bits), Real(bits));
  return assemble(L, w, weight, bits);
}

Complex twisted_period_polynomial(const CuspForm& f, const GL2Matrix& g, const Complex& z,
                                  const PrecisionContext& ctx) {
  return twisted_period(f, g, ctx)(z, ctx.bits());
}

Complex s_period_polynomial(const PeriodData& pd, const Complex& z, const PrecisionContext& ctx) {
  return assemble(pd.critical_l_values, z, pd.weight, ctx.bits());
}

}  // namespace maass_shift
