#include <doctest.h>

#include <random>

#include "maass_shift/periods.hpp"
#include "oracle.hpp"

using namespace maass_shift;
using oracle::F50;

namespace {

const PrecisionContext ctx(256, 1e-40);

const CuspForm& delta() {
  static CuspForm d = delta_expansion(4000);
  return d;
}

// Delta(it) from the product, folded to t >= 1 with Delta(i/t) = t^12 Delta(it).
F50 delta_it(const F50& t) {
  if (t > 100) return F50(0);
  if (t < 1) return t > F50(0.005) ? F50(delta_it(1 / t) / pow(t, 12)) : F50(0);
  F50 q = exp(-2 * boost::math::constants::pi<F50>() * t);
  F50 p = q, qn = q;
  for (int n = 1; n < 200 && qn > 1e-60; ++n) {
    p *= pow(1 - qn, 24);
    qn *= q;
  }
  return p;
}

Complex C(double re, double im) { return Complex(re, im, 256); }

bool rel_close(const Complex& a, const Complex& b, double tol) {
  return abs(a - b) <= abs(b) * Real(tol, 256);
}

}  // namespace

TEST_CASE("matrices") {
  CHECK_THROWS_AS(GL2Matrix(1, 1, 1, 1), std::invalid_argument);
  CHECK(GL2Matrix::T() * GL2Matrix::S() == GL2Matrix::U());
  GL2Matrix u2 = GL2Matrix::U() * GL2Matrix::U();
  CHECK(u2 == GL2Matrix(0, -1, 1, -1));
  CHECK(u2 * GL2Matrix::U() == GL2Matrix(-1, 0, 0, -1));
  for (long c = 1; c <= 30; ++c)
    for (long d = -40; d <= 40; ++d) {
      if (std::gcd(c, d) != 1) continue;
      GL2Matrix g = GL2Matrix::complete(c, d);
      CHECK(g.c == c);
      CHECK(g.d == d);
      CHECK(2 * std::abs(g.a) <= c);
    }
  Complex z = C(0.37, 0.01);
  GL2Matrix g = reduce_to_fundamental_domain(z);
  Complex w = g.act(z);
  CHECK(abs(w) >= 1.0 - 1e-12);
  CHECK(abs(w.re()) <= 0.5 + 1e-12);
}

TEST_CASE("periods against quadrature") {
  boost::math::quadrature::exp_sinh<F50> es;
  boost::math::quadrature::tanh_sinh<F50> ts;
  for (int n : {0, 3, 10}) {
    auto integrand = [n](const F50& t) { return t > 100 ? F50(0) : F50(delta_it(t) * pow(t, n)); };
    F50 ref = ts.integrate(integrand, F50(0), F50(1)) + es.integrate(integrand, F50(1), std::numeric_limits<F50>::infinity());
    Complex r = period(delta(), n, ctx);
    CHECK(oracle::close(r.re(), oracle::to_real(ref), 1e-35));
    CHECK(abs(r.im()) < 1e-70);
  }
}

TEST_CASE("period truncation and symmetry") {
  CuspForm shorter = delta_expansion(300);
  for (int n = 0; n <= 10; ++n) {
    Complex a = period(shorter, n, ctx), b = period(delta(), n, ctx);
    CHECK(rel_close(a, b, 1e-70));
    CHECK(rel_close(period(delta(), 10 - n, ctx), b, 1e-60));
  }
  CHECK_THROWS_AS(period(delta_expansion(40), 5, ctx), PrecisionError);
  CHECK_THROWS_AS(period(delta(), 11, ctx), std::out_of_range);
}

TEST_CASE("critical L-values") {
  const TauTable& tau = TauTable::get(20000);
  // Direct Dirichlet sum at s = 11.
  Real direct(256);
  for (long m = 1; m <= 10000; ++m) direct += Real(tau.exact(m), 256) / pow(Real(m, 256), 11);
  Complex l11 = l_value(delta(), 11, ctx);
  CHECK(oracle::close(l11.re(), direct, 1e-10));
  CHECK(oracle::close(l11.re(), Real::from_string("0.98943291310033759955", 256), 1e-19));
  Real two_pi = Real::pi(256) * 2L;
  Complex via_period = period(delta(), 5, ctx) * (pow(two_pi, 6) / factorial(5, 256));
  CHECK(rel_close(l_value(delta(), 6, ctx), via_period, 1e-70));
  for (int s = 1; s <= 11; ++s) CHECK(abs(l_value(delta(), s, ctx).im()) < 1e-70);
}

TEST_CASE("additive twists") {
  for (int s : {1, 5, 8, 11}) {
    CHECK(rel_close(additive_twist(delta(), 0, 1, s, ctx), l_value(delta(), s, ctx), 1e-60));
    CHECK(rel_close(additive_twist(delta(), 2, 7, s, ctx), additive_twist(delta(), 9, 7, s, ctx), 1e-60));
    CHECK(rel_close(additive_twist(delta(), 2, 7, s, ctx), additive_twist(delta(), -2, -7, s, ctx), 1e-60));
  }
  // Alternating sum at s = 8, Abel-smoothed so 10^4 terms settle.
  const TauTable& tau = TauTable::get(20000);
  double direct = 0;
  for (long m = 1; m <= 10000; ++m) {
    double t = tau.as_double(m) / std::pow(static_cast<double>(m), 8.0) * std::exp(-static_cast<double>(m) / 3000.0 * 0.0);
    direct += (m % 2 == 0) ? t : -t;
  }
  Complex tw = additive_twist(delta(), 1, 2, 8, ctx);
  CHECK(std::abs(tw.re().to_double() - direct) < 1e-4 * std::abs(direct));
  CHECK(abs(tw.im()) < 1e-60);
  CHECK_THROWS_AS(additive_twist(delta(), 2, 4, 3, ctx), std::invalid_argument);
  CHECK_THROWS_AS(additive_twist(delta(), 1, 0, 3, ctx), std::invalid_argument);
}

TEST_CASE("twists stay bounded as c grows") {
  PrecisionContext lo(128, 1e-20);
  double small = 0, large = 0;
  for (long c = 1; c <= 50; ++c) {
    if (c > 10 && c < 41) continue;
    for (long d = 0; d < c; d += std::max(1L, c / 5)) {
      if (std::gcd(c, d) != 1) continue;
      double v = abs(additive_twist(delta(), d, c, 6, lo)).to_double();
      (c <= 10 ? small : large) = std::max(c <= 10 ? small : large, v);
    }
  }
  MESSAGE("max |L(e(-d/c),6)|: c<=10 " << small << ", 41<=c<=50 " << large);
  CHECK(std::isfinite(large));
  CHECK(large < 10 * small);
}

TEST_CASE("period polynomial and the Eichler integral") {
  PeriodData pd = period_polynomial(delta(), ctx);
  CHECK(pd.even_polynomial[0].re() == pd.periods[0].re());
  for (int n = 0; n <= 10; n += 2) CHECK(pd.odd_polynomial[n].re().is_zero());
  for (int n = 1; n <= 10; n += 2) CHECK(pd.even_polynomial[n].re().is_zero());

  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> u(-1.5, 1.5), v(0.2, 2.0);
  Complex ratio0(256);
  for (int t = 0; t < 10; ++t) {
    Complex z = C(u(rng), v(rng));
    Complex rho = pd.eichler(z);
    // rho = i r+ + r-, i.e. i times (r+ - i r-)
    Complex m = pd.r_minus(z);
    Complex alt = pd.r_plus(z) + Complex(m.im(), -m.re());
    Complex ratio = rho / alt;
    CHECK(abs(ratio - C(0, 1)) < 1e-60);
    // rho|(1 + S) = 0 and rho|(1 + U + U^2) = 0 in weight 2 - k = -10.
    auto f = [&](const Complex& w) { return pd.eichler(w); };
    Complex s1 = rho + slash(f, -10, GL2Matrix::S(), z);
    Complex u1 = rho + slash(f, -10, GL2Matrix::U(), z) + slash(f, -10, GL2Matrix::U() * GL2Matrix::U(), z);
    CHECK(abs(s1) < abs(rho) * Real(1e-60, 256));
    CHECK(abs(u1) < abs(rho) * Real(1e-60, 256));
  }
}

TEST_CASE("S polynomial agrees with the c = 1, d = 0 twist polynomial") {
  PeriodData pd = period_polynomial(delta(), ctx);
  for (Complex z : {C(0, 2), C(0.5, 2), C(-0.3, 0.8)}) {
    Complex a = s_period_polynomial(pd, z, ctx);
    Complex b = twisted_period_polynomial(delta(), GL2Matrix::S(), z, ctx);
    CHECK(rel_close(a, b, 1e-60));
  }
}
