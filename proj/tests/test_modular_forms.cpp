#include <doctest.h>

#include <random>

#include "maass_shift/modular_forms.hpp"

using namespace maass_shift;

namespace {

// Naive oracle: q prod (1 - q^n)^24 multiplied out one factor at a time.
std::vector<mpz_class> naive_delta(long N) {
  std::vector<mpz_class> c(static_cast<std::size_t>(N + 1), 0);
  c[1] = 1;
  for (long n = 1; n < N; ++n)
    for (int r = 0; r < 24; ++r)
      for (long i = N; i >= n + 1; --i) c[i] -= c[i - n];
  return c;
}

mpz_class naive_sigma(long n, int p) {
  mpz_class s = 0;
  for (long d = 1; d <= n; ++d)
    if (n % d == 0) {
      mpz_class t;
      mpz_ui_pow_ui(t.get_mpz_t(), d, p);
      s += t;
    }
  return s;
}

}  // namespace

TEST_CASE("delta expansion") {
  CuspForm d = delta_expansion(120);
  auto ref = naive_delta(120);
  for (long n = 1; n <= 120; ++n) CHECK(d.a(n) == ref[n]);
  CHECK(d.a(1) == 1);
  CHECK(d.a(2) == -24);
  CHECK(d.a(6) == d.a(2) * d.a(3));
  CHECK(d.fourier.coefficient(0) == 0);
}

TEST_CASE("eisenstein series") {
  auto e2 = eisenstein(2, 10).fourier;
  CHECK(e2.coefficient(1) == -24);
  CHECK(e2.coefficient(6) == -288);
  CHECK(eisenstein(4, 3).fourier.coefficient(0) == 1);
  for (long n = 1; n <= 30; ++n) {
    CHECK(eisenstein(4, 30).fourier.coefficient(n) == 240 * naive_sigma(n, 3));
    CHECK(eisenstein(6, 30).fourier.coefficient(n) == -504 * naive_sigma(n, 5));
  }
  CHECK_THROWS_AS(eisenstein(8, 10), std::invalid_argument);
}

TEST_CASE("E4^3 - E6^2 = 1728 Delta through order 100") {
  auto e4 = eisenstein(4, 100).fourier, e6 = eisenstein(6, 100).fourier;
  ExactSeries lhs = e4 * e4 * e4 - e6 * e6;
  auto ref = naive_delta(100);
  CHECK(lhs.truncation_order() == 100);
  CHECK(lhs.coefficient(0) == 0);
  for (long n = 1; n <= 100; ++n) CHECK(lhs.coefficient(n) == 1728 * ref[n]);
}

TEST_CASE("Hecke relations and Deligne bound") {
  CuspForm d = delta_expansion(1000);
  for (long p : {2, 3, 5, 7}) {
    mpz_class p11;
    mpz_ui_pow_ui(p11.get_mpz_t(), p, 11);
    CHECK(d.a(p * p) == d.a(p) * d.a(p) - p11);
  }
  for (long m : {2, 3, 5, 7, 11})
    for (long n : {9, 13, 25, 49, 64})
      if (std::gcd(m, n) == 1 && m * n <= 1000) CHECK(d.a(m * n) == d.a(m) * d.a(n));
  for (long n = 1; n <= 1000; ++n) {
    long div = 0;
    for (long k = 1; k <= n; ++k) div += (n % k == 0);
    double bound = static_cast<double>(div) * std::pow(static_cast<double>(n), 5.5);
    CHECK(std::abs(d.a(n).get_d()) <= bound);
  }
}

TEST_CASE("fast tau table agrees with the product expansion") {
  CuspForm d = delta_expansion(1500);
  TauTable t(1500);
  for (long n = 1; n <= 1500; ++n) CHECK(t.exact(n) == d.a(n));
  const TauTable& big = TauTable::get(200000);
  CHECK(big.size() >= 200000);
  // Hecke multiplicativity far out: tau(2 * 99991) = tau(2) tau(99991).
  CHECK(big.exact(2 * 99991) == big.exact(2) * big.exact(99991));
  mpz_class p11;
  mpz_ui_pow_ui(p11.get_mpz_t(), 443, 11);
  CHECK(big.exact(443 * 443) == big.exact(443) * big.exact(443) - p11);
}

TEST_CASE("completed E2") {
  PrecisionContext ctx(256, 1e-40);
  Complex i(0.0, 1.0, 256);
  Complex v = e2_star(i, 400, ctx);
  CHECK(abs(v.re()) < 1e-60);
  CHECK(abs(v.im()) < 1e-60);
  // E2(i) = 3/pi.
  Complex e2 = evaluate(eisenstein(2, 400).fourier, i, ctx, {std::log(24.0), 2, 0});
  CHECK(abs(e2.re() - 3L / Real::pi(256)) < 1e-60);

  Complex t(0.21, 1.3, 256), t1 = t;
  t1.re() += 1L;
  CHECK(abs(e2_star(t, 400, ctx) - e2_star(t1, 400, ctx)) < 1e-60);

  Complex two_i(0.0, 2.0, 256);
  Complex s2 = Complex(Real(-1L, 256), Real(256)) / two_i;
  Complex lhs = e2_star(s2, 600, ctx) / (two_i * two_i);
  CHECK(abs(lhs - e2_star(two_i, 600, ctx)) < 1e-50);

  // Random gamma built from S and T words, tau in the fundamental domain.
  std::mt19937_64 rng(99);
  std::uniform_real_distribution<double> ux(-1.0, 1.0), uy(0.0, 1.0);
  std::uniform_int_distribution<int> shift(-2, 2);
  int checked = 0;
  while (checked < 20) {
    long a = 1, b = 0, c = 0, d = 1;
    for (int w = 0; w < 3; ++w) {
      long k = shift(rng);
      // multiply by T^k then S on the right
      b += a * k;
      d += c * k;
      long na = b, nb = -a, nc = d, nd = -c;
      a = na, b = nb, c = nc, d = nd;
    }
    if (c == 0 || std::abs(c) > 4) continue;
    double x = ux(rng), y = std::sqrt(std::max(0.0, 1 - x * x)) + 0.05 + uy(rng);
    Complex z(x, y, 256);
    Complex cz = z * c;
    cz.re() += d;
    Complex az = z * a;
    az.re() += b;
    Complex gz = az / cz;
    if (gz.im() < 0.04) continue;
    Complex l = e2_star(gz, 3000, ctx) / (cz * cz);
    CHECK(abs(l - e2_star(z, 3000, ctx)) < 1e-35);
    ++checked;
  }
}
