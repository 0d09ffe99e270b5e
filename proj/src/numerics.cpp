#include "maass_shift/numerics.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace maass_shift {

PrecisionContext::PrecisionContext(Bits working_precision, double target_relative_tolerance,
                                   long series_truncation_default)
    : bits_(working_precision), tol_(target_relative_tolerance), trunc_(series_truncation_default) {
  if (bits_ < 64) throw std::invalid_argument("working precision must be at least 64 bits");
  if (!(tol_ > 0)) throw std::invalid_argument("target tolerance must be positive");
  if (trunc_ < 1) throw std::invalid_argument("series truncation must be positive");
}

Bits PrecisionContext::bits_for_magnitude(double log10_magnitude) const {
  if (log10_magnitude > 120 && bits_ < 768) return 768;
  return bits_;
}

namespace {

bool is_nonpositive_integer(const Real& a) { return mpfr_integer_p(a.get()) && a.sign() <= 0; }

bool fits_long_integer(const Real& a) {
  return mpfr_integer_p(a.get()) && mpfr_fits_slong_p(a.get(), MPFR_RNDN);
}

}  // namespace

Real gamma(const Real& a, const PrecisionContext& ctx) {
  if (is_nonpositive_integer(a)) throw PoleError("gamma: pole at " + a.to_string(10));
  Real r(ctx.bits());
  mpfr_gamma(r.get(), a.get(), MPFR_RNDN);
  return r;
}

Real upper_incomplete_gamma(long a, const Real& x, const PrecisionContext& ctx) {
  if (!(x > 0.0)) throw DomainError("upper_incomplete_gamma: x must be positive");
  const Bits out = ctx.bits();
  if (a >= 1) {
    // (a-1)! e^-x sum_{j<a} x^j/j!
    Bits wb = out + 16;
    Real xx(x, wb);
    Real term(1L, wb), sum(1L, wb);
    for (long j = 1; j < a; ++j) {
      term *= xx;
      term /= j;
      sum += term;
    }
    sum *= factorial(static_cast<unsigned long>(a - 1), wb);
    sum *= exp(-xx);
    return Real(sum, out);
  }
  // Downward from E1; each step can cancel about log2(x/|a|) bits.
  double lx = std::log2(2.0 + x.to_double());
  Bits wb = out + 64 + static_cast<Bits>(-a * std::ceil(lx + 1));
  Real xx(x, wb);
  Real g(wb);
  mpfr_neg(g.get(), xx.get(), MPFR_RNDN);
  mpfr_eint(g.get(), g.get(), MPFR_RNDN);
  g = -g;  // E1(x)
  if (a == 0) return Real(g, out);
  Real ex = exp(-xx);
  for (long b = -1; b >= a; --b) {
    // Gamma(b, x) = (Gamma(b+1, x) - x^b e^-x) / b
    g -= pow(xx, b) * ex;
    g /= b;
  }
  return Real(g, out);
}

Real upper_incomplete_gamma(const Real& a, const Real& x, const PrecisionContext& ctx) {
  if (!(x > 0.0)) throw DomainError("upper_incomplete_gamma: x must be positive");
  if (fits_long_integer(a)) return upper_incomplete_gamma(a.to_long(), x, ctx);
  Bits wb = ctx.bits() + 64;
  Real r(wb), aa(a, wb), xx(x, wb);
  mpfr_gamma_inc(r.get(), aa.get(), xx.get(), MPFR_RNDN);
  return Real(r, ctx.bits());
}

namespace {

struct BesselRun {
  Real sum;
  long terms;
};

BesselRun bessel_series(long nu, const Real& x, Bits wb, long max_terms) {
  if (nu < 0) throw DomainError("bessel_i: order must be non-negative");
  if (!(x > 0.0)) throw DomainError("bessel_i: x must be positive");
  Real half(x, wb);
  half /= 2L;
  Real z = half * half;  // x^2/4
  Real term = pow(half, nu);
  term /= factorial(static_cast<unsigned long>(nu), wb);
  Real sum = term;
  Real cut(wb);
  long k = 0;
  for (;;) {
    if (max_terms > 0 && k + 1 >= max_terms) break;
    // t_{k+1} = t_k z / ((k+1)(k+1+nu))
    term *= z;
    term /= (k + 1);
    term /= (k + 1 + nu);
    ++k;
    sum += term;
    if (max_terms > 0) continue;
    // Past the peak the ratio r of consecutive terms is below 1 and falling,
    // so the tail is at most term * r / (1 - r).
    double r = z.to_double() / (static_cast<double>(k + 1) * static_cast<double>(k + 1 + nu));
    if (r < 0.5) {
      mpfr_mul_2si(cut.get(), sum.get(), -static_cast<long>(wb) - 4, MPFR_RNDN);
      if (mpfr_cmpabs(term.get(), cut.get()) <= 0) break;
    }
  }
  return {std::move(sum), k + 1};
}

}  // namespace

Real bessel_i(long nu, const Real& x, const PrecisionContext& ctx) {
  BesselRun run = bessel_series(nu, x, ctx.bits() + 32, 0);
  if (!run.sum.is_finite()) throw OverflowError("bessel_i: result not representable");
  return Real(run.sum, ctx.bits());
}

Real bessel_i_partial(long nu, const Real& x, long terms, Bits bits) {
  if (terms < 1) throw std::invalid_argument("bessel_i_partial: need at least one term");
  return bessel_series(nu, x, bits, terms).sum;
}

long bessel_i_terms(long nu, const Real& x, Bits bits) { return bessel_series(nu, x, bits + 32, 0).terms; }

double bessel_i_double(long nu, double x) {
  if (x <= 0) throw DomainError("bessel_i: x must be positive");
  double v = std::cyl_bessel_i(static_cast<double>(nu), x);
  if (!std::isfinite(v)) throw OverflowError("bessel_i: double overflow");
  return v;
}

namespace {

// int_0^inf g(t) dt through t = exp(u - exp(-u)), dt = t (1 + exp(-u)) du,
// trapezoid in u with halving steps.
class DoubleExponential {
 public:
  DoubleExponential(const Integrand& g, Bits wb) : g_(g), wb_(wb) {}

  Real node(double u) const {
    Real uu(u, wb_);
    Real emu = exp(-uu);
    Real t = exp(uu - emu);
    Real w = t * (emu + 1L);
    Real v = g_(t);
    return v * w;
  }

  Estimate run(double tol) {
    const double eps_log = -static_cast<double>(wb_) * std::log(2.0);
    // Below ulo the weight is under 2^-wb.
    double ulo = 0;
    while (ulo - std::exp(-ulo) + std::log1p(std::exp(-ulo)) > eps_log) ulo -= 0.25;

    Real sum(wb_);
    // Integer nodes first, extending upward until the integrand dies out.
    for (double u = std::ceil(ulo); u <= 0; u += 1.0) sum += node(u);
    double uhi = 0;
    int quiet = 0;
    for (double u = 1; u <= 12.0; u += 1.0) {
      uhi = u;
      Real v = node(u);
      if (v.is_zero() || v.log10_abs() < sum.log10_abs() + eps_log / std::log(10.0)) {
        if (++quiet >= 2) break;
      } else {
        quiet = 0;
      }
      sum += v;
    }
    // Nodes not yet visited below 0 are in [ulo, ceil(ulo)); they are
    // negligible by construction of ulo.
    Real total = sum;
    Real prev = sum;
    double h = 1.0;
    Real err(wb_);
    for (int level = 1; level <= 12; ++level) {
      h /= 2;
      for (double u = std::ceil(ulo) - h; u < uhi; u += 2 * h) total += node(u);
      Real est = total;
      mpfr_mul_2si(est.get(), est.get(), -level, MPFR_RNDN);
      err = abs(est - prev);
      prev = est;
      if (level >= 3) {
        Real bound = abs(est) * Real(tol, wb_);
        if (err <= bound || err.is_zero()) return {std::move(est), std::move(err)};
      }
    }
    throw ConvergenceError("integrate_semiline: error estimate stalled at " + err.to_string(6));
  }

 private:
  const Integrand& g_;
  Bits wb_;
};

}  // namespace

Estimate integrate_semiline(const Integrand& f, double singular_exponent_hint, const PrecisionContext& ctx) {
  if (!(singular_exponent_hint > -1.0)) throw DomainError("integrate_semiline: singularity not integrable");
  const Bits wb = ctx.bits() + 32;
  const double tol = ctx.tolerance() / 4;
  // (0,1] via y = e^-t; [1, inf) via y = 1 + t.
  Integrand lower = [&](const Real& t) {
    Real y = exp(-t);
    return f(y) * y;
  };
  Integrand upper = [&](const Real& t) { return f(t + 1L); };
  Estimate a = DoubleExponential(lower, wb).run(tol);
  Estimate b = DoubleExponential(upper, wb).run(tol);
  Real v = a.value + b.value;
  Real e = a.error + b.error;
  return {Real(v, ctx.bits()), Real(e, ctx.bits())};
}

Estimate richardson_limit(const std::vector<std::pair<Real, Real>>& samples) {
  const std::size_t n = samples.size();
  if (n < 3) throw std::invalid_argument("richardson_limit: need at least three samples");
  Bits wb = 64;
  for (const auto& [s, v] : samples) wb = std::max({wb, s.precision(), v.precision()});
  for (std::size_t i = 1; i < n; ++i) {
    if (!(abs(samples[i].first) < abs(samples[i - 1].first)))
      throw std::invalid_argument("richardson_limit: |s| must strictly decrease");
  }
  if (samples.back().first.is_zero()) throw std::invalid_argument("richardson_limit: s = 0 sample");
  // Neville tableau evaluated at 0; row i holds polynomials through s_{i-j..i}.
  std::vector<Real> col;
  for (const auto& p : samples) col.emplace_back(p.second, wb);
  std::vector<Real> diag{col[0]};
  for (std::size_t j = 1; j < n; ++j) {
    std::vector<Real> next;
    for (std::size_t i = j; i < n; ++i) {
      const Real& si = samples[i].first;
      const Real& sij = samples[i - j].first;
      // p = (s_i p_{i-j..i-1} - s_{i-j} p_{i-j+1..i}) / (s_i - s_{i-j})
      Real num = si * col[i - j] - sij * col[i - j + 1];
      next.push_back(num / (si - sij));
    }
    col = std::move(next);
    diag.push_back(col[0]);
  }
  // diag[j] uses samples 0..j; the last entry uses all of them.
  std::vector<Real> diffs;
  for (std::size_t j = 1; j < diag.size(); ++j) diffs.push_back(abs(diag[j] - diag[j - 1]));
  const Real& last = diffs.back();
  const Real& before = diffs[diffs.size() - 2];
  if (!before.is_zero() && last > before) {
    throw ConvergenceError("richardson_limit: extrapolants do not contract (" + before.to_string(4) + " -> " +
                           last.to_string(4) + ")");
  }
  if (before.is_zero() && !last.is_zero()) {
    Real rel = last / (abs(diag.back()) + Real(1L, wb));
    if (rel > std::ldexp(1.0, -static_cast<int>(wb) / 2))
      throw ConvergenceError("richardson_limit: extrapolants do not contract");
  }
  Real err = last;
  if (err.is_zero()) {
    // Exact agreement: report one unit in the last place.
    err = abs(diag.back());
    if (err.is_zero()) err = Real(1L, wb);
    mpfr_mul_2si(err.get(), err.get(), -static_cast<long>(wb), MPFR_RNDN);
  }
  return {diag.back(), err};
}

}  // namespace maass_shift
