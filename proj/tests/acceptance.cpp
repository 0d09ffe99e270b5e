// One line per acceptance criterion; exit status 0 only if all pass.

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numeric>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "maass_shift/experiments.hpp"

using namespace maass_shift;

namespace {

const PrecisionContext ctx(512, 1e-40, 1100);

struct Outcome {
  bool pass;
  std::string detail;
};

std::string g(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6g", x);
  return buf;
}

double re(const ShiftedValue& v) { return v.value.re().to_double(); }

HarmonicMaassForm& hmf() {
  static HarmonicMaassForm h(delta_expansion(32768), ctx);
  static bool done = (calibrate(h), true);
  (void)done;
  return h;
}

const CuspForm& long_delta() {
  static CuspForm d = delta_expansion(200100);
  return d;
}

Real kappa_over_fact(Bits b) { return -(pow(Real::pi(b) * 4L, 11) * 11L) / factorial(11, b); }

// Reference figures carry unreliable signs, so magnitudes are compared.
bool mag(double a, double b, int digits) { return agrees_to_digits(std::abs(a), std::abs(b), digits); }

Outcome c1() {
  std::ostringstream os;
  bool ok = true;
  for (const auto& r : table1_reference()) {
    double v = re(mock_dhat(hmf(), long_delta(), r.n));
    bool m = mag(v, r.dhat, 3);
    ok = ok && m;
    os << "h=" << r.n << " " << g(v) << (m ? "" : " MISMATCH") << "; ";
  }
  return {ok, os.str()};
}

Outcome c2() {
  const Bits b = 768;
  Complex scale = hmf().lambda() * kappa_over_fact(b);
  std::vector<double> vals, betas;
  for (const auto& r : table1_reference()) {
    vals.push_back((scale * hmf().raw_entry(r.n).value).re().to_double());
    betas.push_back(std::abs(r.poincare / vals.back()));
  }
  std::vector<double> sorted = betas;
  std::sort(sorted.begin(), sorted.end());
  double lo = sorted.front(), hi = sorted.back();
  double beta = (sorted[1] + sorted[2]) / 2;  // median of four
  bool ok = true;
  std::ostringstream os;
  os << "beta=" << g(beta) << " spread=" << g((hi - lo) / beta) << "; ";
  for (std::size_t i = 0; i < vals.size(); ++i) {
    bool m = mag(beta * vals[i], table1_reference()[i].poincare, 3) && agrees_to_digits(betas[i], beta, 3);
    ok = ok && m;
    os << "n=" << table1_reference()[i].n << " " << g(beta * std::abs(vals[i])) << (m ? "" : " MISMATCH") << "; ";
  }
  return {ok, os.str()};
}

Outcome c3() {
  ComplexSeries L = generating_function(hmf(), long_delta(), 2);
  double a = L.coefficient(1).re().to_double(), b = L.coefficient(2).re().to_double();
  bool ok = mag(a, 33.38465, 5) && mag(b, 266.447, 4) && L.coefficient(0).re().is_zero();
  return {ok, "q^1 " + g(a) + ", q^2 " + g(b)};
}

Outcome c4() {
  HarmonicMaassForm proj(long_delta(), ctx);
  bool ok = true;
  double worst = 0;
  for (long h = 1; h <= 10; ++h) {
    double m = re(mock_dhat(hmf(), long_delta(), h));
    double p = re(projection_dhat(proj, long_delta(), h));
    worst = std::max(worst, std::abs(p - m) / std::abs(m));
  }
  ok = worst < 1e-6;
  std::ostringstream os;
  os << "projection max rel " << g(worst) << "; ";
  for (long h = 1; h <= 3; ++h) {
    double m = re(mock_dhat(hmf(), long_delta(), h));
    ShiftedValue d = direct_dhat(long_delta(), long_delta(), h, 100000, SumScheme::abel);
    double diff = std::abs(re(d) - m);
    bool within = diff < d.error_estimate && diff < 0.02 * std::abs(m);
    ok = ok && within;
    os << "direct h=" << h << " diff " << g(diff) << " est " << g(d.error_estimate) << "; ";
  }
  return {ok, os.str()};
}

Outcome c5() {
  const Bits b = ctx.bits();
  const auto& h = hmf();
  PeriodData pd = period_polynomial(h.shadow(), ctx);
  std::vector<Complex> taus{Complex(0.0, 2.0, b), Complex(0.5, 2.0, b)};
  static const long cd[10][2] = {{1, 1}, {2, 1}, {3, 1}, {4, 3}, {5, 2}, {6, 5}, {7, 3}, {8, 5}, {9, 4}, {10, 7}};
  double worst = 0;
  int series_rows = 0;
  for (const auto& p : cd) {
    GL2Matrix gm = GL2Matrix::complete(p[0], p[1]);
    for (const auto& t : taus) {
      bool series = gm.act(t).im() >= 0.25;
      series_rows += series;
      Complex diff = period_function(h, gm, t, series ? EvalMode::series : EvalMode::automatic);
      Complex poly = twisted_period_polynomial(h.shadow(), gm, t, ctx);
      worst = std::max(worst, (abs(diff - poly) / abs(poly)).to_double());
    }
  }
  double worst_s = 0;
  for (const auto& t : taus) {
    Complex diff = period_function(h, GL2Matrix::S(), t, EvalMode::series);
    Complex poly = s_period_polynomial(pd, t, ctx);
    worst_s = std::max(worst_s, (abs(diff - poly) / abs(poly)).to_double());
  }
  return {worst < 1e-8 && worst_s < 1e-8, "twisted max rel " + g(worst) + " (" + std::to_string(series_rows) +
                                              " of 20 rows by the series alone), S max rel " + g(worst_s)};
}

Outcome c6() {
  // Both sides by the holomorphic series plus the nonholomorphic sum, with
  // no use of modularity inside the evaluation.
  const auto& h = hmf();
  const Bits b = ctx.bits();
  std::mt19937 rng(2024);
  std::uniform_real_distribution<double> ux(-0.5, 0.5), uy(0.87, 1.6);
  std::uniform_int_distribution<long> ui(-3, 3);
  double worst = 0;
  int done = 0;
  while (done < 10) {
    long c = ui(rng), d = ui(rng);
    if (c <= 0 || std::gcd(c, d) != 1) continue;
    double x = ux(rng), y = uy(rng);
    if (x * x + y * y < 1) continue;
    Complex tau(x, y, b);
    GL2Matrix gm = GL2Matrix::complete(c, d);
    if (gm.act(tau).im() < 0.15) continue;
    auto M = [&](const Complex& z) { return h.eval(z, EvalMode::series); };
    Complex lhs = M(tau);
    Complex rhs = slash(M, -10, gm, tau);
    worst = std::max(worst, (abs(lhs - rhs) / abs(lhs)).to_double());
    ++done;
  }
  return {worst < 1e-20, "max rel residual " + g(worst) + " over 10 samples"};
}

Outcome c7() {
  std::vector<double> hs{10, 30, 100, 300, 1000}, ys;
  for (double x : hs) ys.push_back(re(mock_dhat(hmf(), long_delta(), long(x))));
  LinearFit f = loglog_fit(hs, ys);
  bool dominated = true;
  for (std::size_t i = 0; i < hs.size(); ++i)
    dominated = dominated && std::abs(ys[i] / ys[0]) <= std::pow(hs[i] / hs[0], 6) * (1 + 1e-12);
  return {f.slope >= 4 && f.slope <= 6 && dominated,
          "slope " + g(f.slope) + " +- " + g(f.slope_stderr) + (dominated ? ", h^6 dominates" : ", h^6 exceeded")};
}

Outcome c8() {
  std::ostringstream os;
  bool ok = true;
  // E4^3 - E6^2 = 1728 Delta to order 100
  EisensteinSeries e4 = eisenstein(4, 100), e6 = eisenstein(6, 100);
  ExactSeries lhs = e4.fourier * e4.fourier * e4.fourier - e6.fourier * e6.fourier;
  CuspForm d = delta_expansion(200);
  bool eis = true;
  for (long n = 0; n <= 100; ++n) eis = eis && lhs.coefficient(n) == 1728 * d.a(n);
  ok = ok && eis;
  // multiplicativity and the prime-power recursion
  bool hecke = true;
  for (long m = 1; m <= 14; ++m)
    for (long n = 1; n <= 14; ++n)
      if (std::gcd(m, n) == 1) hecke = hecke && d.a(m * n) == d.a(m) * d.a(n);
  for (long p : {2L, 3L, 5L, 7L, 11L, 13L}) {
    mpz_class p11;
    mpz_ui_pow_ui(p11.get_mpz_t(), p, 11);
    hecke = hecke && d.a(p * p) == d.a(p) * d.a(p) - p11;
  }
  ok = ok && hecke;
  // r_n split at t0 = 5/4 instead of 1, so r_n = r_{10-n} is not built in:
  // r_n = int_{t0}^inf Delta(it) t^n dt + int_{1/t0}^inf Delta(it) t^{10-n} dt
  PeriodData pd = period_polynomial(d, ctx);
  const Bits b = ctx.bits();
  auto tail = [&](int e, const Real& t0) {
    Real s(b);
    for (long m = 1; m <= 150; ++m) {
      Real x = Real::pi(b) * (2L * m);
      s += Real(d.a(m), b) * upper_incomplete_gamma(long(e + 1), x * t0, ctx) / pow(x, e + 1);
    }
    return s;
  };
  Real t0 = Real(5L, b) / Real(4L, b), t1 = Real(4L, b) / Real(5L, b);
  double sym = 0;
  for (int n = 0; n <= 10; ++n) {
    Real r = tail(n, t0) + tail(10 - n, t1);
    sym = std::max(sym, (abs(pd.periods[10 - n] - Complex(r, Real(b))) / abs(r)).to_double());
  }
  ok = ok && sym < 1e-20;
  // cocycle relations of the Eichler integral, weight -10
  std::mt19937 rng(11);
  std::uniform_real_distribution<double> u(-2, 2), v(0.2, 2);
  auto rho = [&](const Complex& z) { return pd.eichler(z); };
  double co = 0;
  for (int i = 0; i < 10; ++i) {
    Complex z(u(rng), v(rng), ctx.bits());
    Real scale = abs(rho(z)) + Real(1L, ctx.bits());
    Complex a = rho(z) + slash(rho, -10, GL2Matrix::S(), z);
    GL2Matrix U = GL2Matrix::U();
    Complex b = rho(z) + slash(rho, -10, U, z) + slash(rho, -10, U * U, z);
    co = std::max({co, (abs(a) / scale).to_double(), (abs(b) / scale).to_double()});
  }
  ok = ok && co < 1e-15;
  os << "E4^3-E6^2 " << (eis ? "ok" : "FAIL") << ", Hecke " << (hecke ? "ok" : "FAIL") << ", r_n symmetry "
     << g(sym) << ", cocycles " << g(co);
  return {ok, os.str()};
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria{
      {"reference Dhat values", c1},     {"reference Poincare values", c2}, {"generating function q, q^2", c3},
      {"route agreement", c4},           {"period function identity", c5}, {"modularity residual", c6},
      {"growth exponent", c7},           {"classical layer", c8}};
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("error: ") + e.what()};
    }
    failures += !o.pass;
    std::printf("criterion %zu (%s): %s  %s\n", i + 1, criteria[i].first, o.pass ? "PASS" : "FAIL", o.detail.c_str());
    std::fflush(stdout);
  }
  return failures == 0 ? 0 : 1;
}
