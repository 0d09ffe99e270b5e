#include "maass_shift/shifted_convolution.hpp"

#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace maass_shift {

std::string to_string(Route r) {
  switch (r) {
    case Route::direct: return "direct";
    case Route::mock: return "mock";
    case Route::projection: return "projection";
  }
  return "?";
}

std::string to_string(SumScheme s) { return s == SumScheme::abel ? "abel" : "cesaro"; }

namespace {

constexpr double kTiny = std::numeric_limits<double>::min();

std::string fmt(double x) {
  std::ostringstream os;
  os.precision(17);
  os << x;
  return os.str();
}

// a(n) / n^{(k-1)/2} in double for n = 0..N (entry 0 and n <= 0 are zero).
std::vector<double> normalized(const CuspForm& f, long N) {
  std::vector<double> v(N + 1, 0.0);
  const double half = (f.weight - 1) / 2.0;
  for (const auto& [n, a] : f.fourier.terms()) {
    if (n < 1 || n > N) continue;
    v[n] = a.get_d() / std::pow(double(n), half);
  }
  return v;
}

// Mean of the partial sums S(M), N/2 < M <= N, of sum t_n n^-eps.
double averaged_partial_sum(const std::vector<double>& t, double eps) {
  const long N = long(t.size()) - 1;
  long double s = 0, acc = 0;
  long count = 0;
  for (long n = 1; n <= N; ++n) {
    s += eps == 0 ? t[n] : t[n] * std::pow(double(n), -eps);
    if (n > N / 2) {
      acc += s;
      ++count;
    }
  }
  return double(acc / count);
}

Complex from_double(double x, Bits bits) { return Complex(x, 0.0, bits); }

}  // namespace

ShiftedValue direct_dhat(const CuspForm& f1, const CuspForm& f2, long h, long N, SumScheme scheme) {
  if (h < 1) throw std::invalid_argument("direct_dhat: h must be positive");
  if (N < 10 * h) throw std::invalid_argument("direct_dhat: needs N >= 10 h");
  if (f1.weight != f2.weight) throw std::invalid_argument("direct_dhat: weights differ");
  if (f1.length() < N + h || f2.length() < N)
    throw PrecisionError("direct_dhat: forms shorter than N + h coefficients");

  // With a(n) = lambda(n) n^{(k-1)/2} the term is
  // [lambda1(n+h) (1+h/n)^{(k-1)/2} - lambda1(n-h) (1-h/n)^{(k-1)/2}] lambda2(n).
  const double half = (f1.weight - 1) / 2.0;
  std::vector<double> l1 = normalized(f1, N + h), l2 = normalized(f2, N);
  std::vector<double> t(N + 1, 0.0);
  for (long n = 1; n <= N; ++n) {
    double up = l1[n + h] * std::pow(1.0 + double(h) / n, half);
    double down = n > h ? l1[n - h] * std::pow(1.0 - double(h) / n, half) : 0.0;
    t[n] = (up - down) * l2[n];
  }

  const Bits bits = 64;
  double cesaro = averaged_partial_sum(t, 0.0);
  std::vector<std::pair<Real, Real>> samples;
  for (double eps : {0.2, 0.1, 0.05}) samples.emplace_back(Real(eps, bits), Real(averaged_partial_sum(t, eps), bits));
  double abel = 0, abel_err = 0;
  try {
    Estimate e = richardson_limit(samples);
    abel = e.value.to_double();
    abel_err = e.error.to_double();
  } catch (const ConvergenceError&) {
    // Non-contracting tableau: keep the full extrapolant but charge the
    // largest step between successive extrapolants as its error.
    std::vector<double> e, v;
    for (const auto& [x, y] : samples) e.push_back(x.to_double()), v.push_back(y.to_double());
    double lin = (e[1] * v[0] - e[0] * v[1]) / (e[1] - e[0]);
    double quad = 0;
    for (int i = 0; i < 3; ++i) {
      double w = 1;
      for (int j = 0; j < 3; ++j)
        if (j != i) w *= e[j] / (e[j] - e[i]);
      quad += w * v[i];
    }
    abel = quad;
    abel_err = std::max(std::abs(quad - lin), std::abs(lin - v[0]));
  }
  // the cesaro mean drifts between half windows by about its own error
  double cesaro_half = 0;
  {
    std::vector<double> th(t.begin(), t.begin() + N / 2 + 1);
    cesaro_half = averaged_partial_sum(th, 0.0);
  }
  double cesaro_err = std::abs(cesaro - cesaro_half);
  double spread = std::abs(abel - cesaro);
  double scale = std::max(std::abs(abel), std::abs(cesaro));
  if (scale > 0 && spread > 0.05 * scale)
    throw ConvergenceError("direct_dhat: abel and cesaro disagree by " + fmt(spread / scale));

  ShiftedValue out;
  out.h = h;
  out.route = Route::direct;
  double v = scheme == SumScheme::abel ? abel : cesaro;
  double own = scheme == SumScheme::abel ? abel_err : cesaro_err;
  out.value = from_double(v, bits);
  out.error_estimate = std::max({spread, own, 1e-14 * scale, kTiny});
  out.parameters = {{"N", std::to_string(N)},
                    {"scheme", to_string(scheme)},
                    {"abel", fmt(abel)},
                    {"cesaro", fmt(cesaro)},
                    {"epsilons", "0.2,0.1,0.05"}};
  return out;
}

ShiftedValue mock_dhat(const HarmonicMaassForm& hmf, const CuspForm& f2, long h) {
  if (h < 1) throw std::invalid_argument("mock_dhat: h must be positive");
  if (f2.length() < h + 1) throw PrecisionError("mock_dhat: f2 needs h + 1 coefficients");
  const int k = hmf.shadow_weight();
  const PrecisionContext& ctx = hmf.context();
  // The raw coefficients reach exp(4 pi sqrt(h)); the answer is many digits
  // smaller, so carry enough bits to see it.
  const Bits bits = std::max(ctx.bits(), ctx.bits_for_magnitude(4 * M_PI * std::sqrt(double(h)) / M_LN10));
  hmf.ensure_coefficients(h - 1);

  // S = sum_{j=-1}^{h-1} raw(j) a2(h-j); the terms cancel heavily for large h
  Real S(bits);
  double tail = 0, biggest = 0;
  for (long j = -1; j <= h - 1; ++j) {
    const mpz_class& a = f2.a(h - j);
    if (a == 0) continue;
    Real term(bits);
    if (j >= 1) {
      PoincareCoefficient pc = hmf.raw_entry(j);
      term = pc.value;
      tail += pc.tail * std::abs(a.get_d());
    } else {
      term = hmf.raw_coeff(j);
    }
    term *= a;
    biggest = std::max(biggest, std::abs(term.to_double()));
    S += term;
  }
  Real e2 = Real(divisor_sums(1, h)[h], bits) * (-24L);
  e2 *= f2.a(1);
  Real bracket = -S + e2;

  Real kappa = -(pow(Real::pi(bits) * 4L, k - 1) * long(k - 1));
  Complex pref = hmf.lambda() * (kappa / factorial(k - 1, bits));
  Complex v = pref * bracket;

  double abs_pref = abs(pref).to_double();
  double b_abs = std::abs(bracket.to_double());
  // raw coefficients are good to abs_tolerance each, besides the c-tails
  double coeff_err = 0;
  for (long j = 1; j <= h - 1; ++j) coeff_err += hmf.options().abs_tolerance * std::abs(f2.a(h - j).get_d());
  double err = abs_pref * (tail + coeff_err + b_abs * hmf.lambda_rel_error() +
                           biggest * std::ldexp(1.0, 8 - int(bits)) * (h + 2));

  ShiftedValue out;
  out.h = h;
  out.route = Route::mock;
  out.value = v;
  out.error_estimate = std::max(err, kTiny);
  out.parameters = {{"bits", std::to_string(bits)},
                    {"c_max", std::to_string(hmf.options().c_max)},
                    {"lambda_rel_error", fmt(hmf.lambda_rel_error())},
                    {"cancellation_log10", fmt(std::log10(std::max(biggest, kTiny)) - std::log10(std::max(b_abs, kTiny)))}};
  return out;
}

double projection_integral(int k, long m, long h, double s) {
  if (!(s < 1)) throw DomainError("projection_integral: needs s < 1");
  if (m < 1 || h < 1) throw std::invalid_argument("projection_integral: m, h must be positive");
  // Gamma(k-1, b y) = (k-2)! e^{-b y} sum_{j<k-1} (b y)^j / j!; integrating
  // termwise against e^{-a y} y^{-s} with nu = 1 - s, x = b / (a + b):
  // J_1 = 1, J_{j+1} = j J_j + x^j (nu)_j, I = Gamma(nu) (a+b)^-nu J_{k-1}.
  const double nu = 1 - s;
  const double a = 4 * M_PI * h, b = 4 * M_PI * m, x = b / (a + b);
  double J = 1, poch = 1, xp = 1;
  for (int j = 1; j < k - 1; ++j) {
    poch *= nu + j - 1;
    xp *= x;
    J = j * J + xp * poch;
  }
  return std::exp(std::lgamma(nu) - nu * std::log(a + b)) * J;
}

namespace {

// 1 - smooth step in t = log(m / X) / log W, C-infinity at both ends.
double taper_weight(long m, double X, double W) {
  if (m <= X) return 1.0;
  double t = std::log(m / X) / std::log(W);
  if (t >= 1) return 0.0;
  double p = std::exp(-1 / t), q = std::exp(-1 / (1 - t));
  return 1 - p / (p + q);
}

}  // namespace

ShiftedValue projection_dhat(const HarmonicMaassForm& hmf, const CuspForm& f2, long h, const ProjectionOptions& opt) {
  if (h < 1) throw std::invalid_argument("projection_dhat: h must be positive");
  if (opt.m_max < 100 || !(opt.taper_width > 1) || opt.richardson_points < 3 || !(opt.richardson_s0 < 0))
    throw std::invalid_argument("projection_dhat: bad options");
  const CuspForm& f1 = hmf.shadow();
  const int k = f1.weight;
  const long M = opt.m_max;
  if (f1.length() < M || f2.length() < M + h)
    throw PrecisionError("projection_dhat: needs m_max shadow and m_max + h f2 coefficients");

  // Dhat = 4 pi h kappa / (k-1)! sum_m c^-(m) a2(m+h) I_m
  //      = 4 pi h (k-1) / (k-1)! sum_m a1(m) a2(m+h) / m^{k-1} I_m
  // and a1(m) a2(m+h) / m^{k-1} = l1(m) l2(m+h) ((m+h)/m)^{(k-1)/2}.
  const double half = (k - 1) / 2.0;
  std::vector<double> l1 = normalized(f1, M), l2 = normalized(f2, M + h);
  std::vector<double> base(M + 1, 0.0);
  for (long m = 1; m <= M; ++m) base[m] = l1[m] * l2[m + h] * std::pow(1.0 + double(h) / m, half);
  double log_pref = std::log(4 * M_PI * h) + std::log(double(k - 1)) - std::lgamma(double(k));

  auto tapered = [&](double s, double X, double W) {
    long double acc = 0;
    for (long m = 1; m <= M; ++m) {
      double w = taper_weight(m, X, W);
      if (w == 0) break;
      acc += base[m] * w * std::exp(log_pref + std::log(projection_integral(k, m, h, s)));
    }
    return double(acc);
  };

  const double W = opt.taper_width;
  const double X = M / W;
  double value = tapered(0, X, W);
  double spread = 0;
  for (auto [x, w] : {std::pair{X / 2, W}, std::pair{M / (W / 2), W / 2}, std::pair{X / 2, W / 2}})
    spread = std::max(spread, std::abs(tapered(0, x, w) - value));

  // s -> 0 from the left, where the m-sum converges better
  std::vector<std::pair<Real, Real>> samples;
  double s = opt.richardson_s0;
  for (int i = 0; i < opt.richardson_points; ++i, s /= 2) samples.emplace_back(Real(s, 64), Real(tapered(s, X, W), 64));
  Estimate lim = richardson_limit(samples);
  double rich = lim.value.to_double();
  double rich_gap = std::abs(rich - value);

  ShiftedValue out;
  out.h = h;
  out.route = Route::projection;
  out.value = from_double(value, 64);
  out.error_estimate = std::max({spread, rich_gap, 1e-13 * std::abs(value), kTiny});
  out.parameters = {{"m_max", std::to_string(M)},
                    {"taper_start", fmt(X)},
                    {"taper_width", fmt(W)},
                    {"taper_spread", fmt(spread)},
                    {"richardson_limit", fmt(rich)},
                    {"richardson_error", fmt(lim.error.to_double())}};
  return out;
}

ComplexSeries generating_function(const HarmonicMaassForm& hmf, const CuspForm& f2, long H) {
  if (H < 1) throw std::invalid_argument("generating_function: H must be positive");
  const Bits b = hmf.context().bits();
  ComplexSeries out(0, H, Complex(b));
  for (long h = 1; h <= H; ++h) out.set(h, mock_dhat(hmf, f2, h).value);
  return out;
}

}  // namespace maass_shift
