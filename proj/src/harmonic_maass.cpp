#include "maass_shift/harmonic_maass.hpp"

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <numeric>
#include <sstream>

#include <json.hpp>

namespace maass_shift {

namespace {

// Units d mod c with their inverses; d = 0 counts as a unit for c = 1.
struct Units {
  std::vector<long> d, dbar;
};

Units units_mod(long c) {
  Units u;
  if (c == 1) {
    u.d.push_back(0);
    u.dbar.push_back(0);
    return u;
  }
  for (long d = 1; d < c; ++d) {
    if (std::gcd(d, c) != 1) continue;
    u.d.push_back(d);
    u.dbar.push_back(inverse_mod(d, c));
  }
  return u;
}

long mod(long a, long c) { return ((a % c) + c) % c; }

double log_bessel_i(long nu, double x) {
  if (x < 600) return std::log(std::cyl_bessel_i(static_cast<double>(nu), x));
  return x - 0.5 * std::log(2 * M_PI * x);
}

// log of 2 pi n^{-nu/2} I_nu(4 pi sqrt(n) / c): a bound on the c-th term.
double log_term_bound(long n, long c, long nu) {
  double x = 4 * M_PI * std::sqrt(static_cast<double>(n)) / static_cast<double>(c);
  return std::log(2 * M_PI) - 0.5 * static_cast<double>(nu) * std::log(static_cast<double>(n)) + log_bessel_i(nu, x);
}

// sum_{c > C} of the term bound: with I_nu(x) <= (x/2)^nu / nu! e^{x^2/(4(nu+1))}
// each term is at most 2 pi (2 pi)^nu / nu! c^-nu e^{...}, and the sum is
// below the integral from C.
double log_tail_bound(long n, long C, long nu) {
  double Cd = static_cast<double>(C);
  double x = 4 * M_PI * std::sqrt(static_cast<double>(n)) / Cd;
  return std::log(2 * M_PI) + static_cast<double>(nu) * std::log(2 * M_PI) - std::lgamma(static_cast<double>(nu) + 1) +
         (1 - static_cast<double>(nu)) * std::log(Cd) - std::log(static_cast<double>(nu) - 1) +
         x * x / (4 * (static_cast<double>(nu) + 1));
}

}  // namespace

Complex kloosterman(long m, long n, long c, Bits bits) {
  if (c < 1) throw std::invalid_argument("kloosterman: c must be positive");
  Units u = units_mod(c);
  std::vector<long> count(static_cast<std::size_t>(c), 0);
  for (std::size_t i = 0; i < u.d.size(); ++i) ++count[mod(mod(m, c) * u.d[i] + mod(n, c) * u.dbar[i], c)];
  Real two_pi = Real::pi(bits + 16) * 2L;
  Complex s(bits + 16);
  for (long r = 0; r < c; ++r)
    if (count[r] != 0) s += expi(two_pi * r / c) * count[r];
  return Complex(Real(s.re(), bits), Real(s.im(), bits));
}

double kloosterman_double(long m, long n, long c) {
  if (c < 1) throw std::invalid_argument("kloosterman: c must be positive");
  Units u = units_mod(c);
  double s = 0;
  for (std::size_t i = 0; i < u.d.size(); ++i)
    s += std::cos(2 * M_PI * static_cast<double>(mod(mod(m, c) * u.d[i] + mod(n, c) * u.dbar[i], c)) / static_cast<double>(c));
  return s;
}

Real raw_poincare_constant(int k, Bits bits) {
  Real z(bits);
  mpfr_zeta_ui(z.get(), static_cast<unsigned long>(k), MPFR_RNDN);
  Real r = pow(Real::pi(bits) * 2L, k) / (factorial(static_cast<unsigned long>(k - 1), bits) * z);
  return -r;
}

std::vector<PoincareCoefficient> raw_poincare_coeffs(long n_lo, long n_hi, int k, const PoincareOptions& opt,
                                                     const PrecisionContext& ctx) {
  if (n_lo < 1 || n_hi < n_lo) throw std::invalid_argument("raw_poincare_coeffs: need 1 <= n_lo <= n_hi");
  if (opt.c_max < 1) throw std::invalid_argument("raw_poincare_coeffs: c_max must be positive");
  const long nu = k - 1;
  const long count = n_hi - n_lo + 1;
  const double log_eps = std::log(opt.abs_tolerance);
  // Terms below this go through double arithmetic: their rounding error is
  // under 2^-40 of the threshold, far below the tolerance.
  const double log_double_cut = log_eps + 40 * std::log(2.0);

  // Where the c-sum can stop.
  long C = 1;
  for (long n = n_lo; n <= n_hi; ++n) {
    long Cn = std::max(C, 2L);
    while (Cn < opt.c_max && log_tail_bound(n, Cn, nu) > log_eps) Cn = std::min(opt.c_max, Cn + std::max(1L, Cn / 16));
    C = std::max(C, Cn);
  }
  std::vector<double> tails(static_cast<std::size_t>(count));
  for (long n = n_lo; n <= n_hi; ++n) {
    double lt = log_tail_bound(n, C, nu);
    if (lt > log_eps) {
      throw PrecisionError("raw_poincare_coeff: tail bound " + std::to_string(std::exp(lt)) + " at c_max = " +
                           std::to_string(opt.c_max) + " exceeds the tolerance");
    }
    tails[n - n_lo] = std::exp(lt);
  }

  // Precision per n: the largest term (c = 1) must keep absolute accuracy eps.
  std::vector<Bits> bits(static_cast<std::size_t>(count));
  std::vector<Real> mp_sum;
  mp_sum.reserve(static_cast<std::size_t>(count));
  for (long n = n_lo; n <= n_hi; ++n) {
    double l10 = log_term_bound(n, 1, nu) / std::log(10.0);
    Bits need = static_cast<Bits>(std::ceil((log_term_bound(n, 1, nu) - log_eps) / std::log(2.0))) + 64;
    bits[n - n_lo] = std::max(ctx.bits_for_magnitude(l10), need);
    mp_sum.emplace_back(bits[n - n_lo]);
  }
  std::vector<double> d_sum(static_cast<std::size_t>(count), 0.0), d_comp(static_cast<std::size_t>(count), 0.0);
  std::vector<double> kd(static_cast<std::size_t>(count));

  for (long c = 1; c <= C; ++c) {
    Units u = units_mod(c);
    std::vector<long> mp_n;
    bool any_double = false;
    for (long n = n_lo; n <= n_hi; ++n) {
      if (log_term_bound(n, c, nu) > log_double_cut) mp_n.push_back(n);
      else any_double = true;
    }
    if (!mp_n.empty()) {
      Bits cb = 64;
      for (long n : mp_n) cb = std::max(cb, bits[n - n_lo]);
      Real two_pi = Real::pi(cb + 16) * 2L;
      std::vector<Real> cosr;
      for (long r = 0; r < c; ++r) cosr.push_back(cos(two_pi * r / c));
      std::vector<long> hist(static_cast<std::size_t>(c));
      for (long n : mp_n) {
        // Bits needed for this term alone.
        Bits tb = std::min<Bits>(bits[n - n_lo],
                                 static_cast<Bits>(std::ceil((log_term_bound(n, c, nu) - log_eps) / std::log(2.0))) + 64);
        tb = std::max<Bits>(tb, 64);
        std::fill(hist.begin(), hist.end(), 0);
        for (std::size_t i = 0; i < u.d.size(); ++i) ++hist[mod(-u.d[i] + (n % c) * u.dbar[i], c)];
        Real K(tb);
        for (long r = 0; r < c; ++r)
          if (hist[r] != 0) K += Real(cosr[r], tb) * hist[r];
        if (K.is_zero()) continue;
        Real x = Real::pi(tb) * 4L * sqrt(Real(n, tb)) / c;
        Real term = K * bessel_i(nu, x, PrecisionContext(tb));
        term /= c;
        mp_sum[n - n_lo] += term;
      }
    }
    if (!any_double) continue;
    // Double tier: all K(-1, n; c) for the n range at once. d and c - d give
    // equal cosines, so half the units suffice for c > 2.
    std::vector<double> tab(static_cast<std::size_t>(c));
    for (long r = 0; r < c; ++r) tab[r] = std::cos(2 * M_PI * static_cast<double>(r) / static_cast<double>(c));
    std::fill(kd.begin(), kd.end(), 0.0);
    const bool pair = c > 2;
    for (std::size_t i = 0; i < u.d.size(); ++i) {
      if (pair && 2 * u.d[i] > c) continue;
      const double w = pair ? 2.0 : 1.0;
      const long step = u.dbar[i];
      long idx = mod(-u.d[i] + mod(n_lo, c) * step, c);
      for (long j = 0; j < count; ++j) {
        kd[j] += w * tab[idx];
        idx += step;
        if (idx >= c) idx -= c;
      }
    }
    for (long n = n_lo; n <= n_hi; ++n) {
      double lb = log_term_bound(n, c, nu);
      if (lb > log_double_cut) continue;
      if (lb < log_eps - 30) continue;  // below 1e-13 eps: irrelevant
      double x = 4 * M_PI * std::sqrt(static_cast<double>(n)) / static_cast<double>(c);
      double term = kd[n - n_lo] / static_cast<double>(c) * std::cyl_bessel_i(static_cast<double>(nu), x);
      // Kahan
      double y = term - d_comp[n - n_lo];
      double t = d_sum[n - n_lo] + y;
      d_comp[n - n_lo] = (t - d_sum[n - n_lo]) - y;
      d_sum[n - n_lo] = t;
    }
  }

  std::vector<PoincareCoefficient> out;
  out.reserve(static_cast<std::size_t>(count));
  for (long n = n_lo; n <= n_hi; ++n) {
    const Bits b = bits[n - n_lo];
    Real s = mp_sum[n - n_lo] + Real(d_sum[n - n_lo], b);
    // -2 pi n^{-nu/2}
    Real pref = Real::pi(b) * 2L / pow(sqrt(Real(n, b)), nu);
    PoincareCoefficient pc;
    pc.n = n;
    pc.value = -(pref * s);
    // The double tier: 2^-40 of the cut per term, a few terms effectively.
    pc.tail = tails[n - n_lo] + opt.abs_tolerance * 1e-3;
    pc.c_used = C;
    out.push_back(std::move(pc));
  }
  return out;
}

PoincareCoefficient raw_poincare_coeff(long n, long c_max, const PrecisionContext& ctx, int k, double abs_tolerance) {
  PoincareOptions opt{c_max, abs_tolerance};
  return raw_poincare_coeffs(n, n, k, opt, ctx).front();
}

Real period_prefactor(int k, Bits bits) {
  return pow(Real::pi(bits) * 4L, k - 1) / factorial(static_cast<unsigned long>(k - 2), bits);
}

HarmonicMaassForm::HarmonicMaassForm(CuspForm shadow, PrecisionContext ctx, PoincareOptions opt)
    : shadow_(std::move(shadow)), ctx_(ctx), opt_(opt) {
  if (shadow_.weight < 4 || shadow_.weight % 2 != 0) throw std::invalid_argument("HarmonicMaassForm: bad shadow weight");
}

void HarmonicMaassForm::ensure_coefficients(long n) const {
  std::lock_guard lock(mu_);
  long have = coeffs_.empty() ? 0 : coeffs_.rbegin()->first;
  if (n <= have) return;
  auto fresh = raw_poincare_coeffs(have + 1, n, shadow_.weight, opt_, ctx_);
  for (auto& pc : fresh) coeffs_.emplace(pc.n, std::move(pc));
}

long HarmonicMaassForm::cached_through() const {
  std::lock_guard lock(mu_);
  return coeffs_.empty() ? 0 : coeffs_.rbegin()->first;
}

PoincareCoefficient HarmonicMaassForm::raw_entry(long n) const {
  if (n < 1) throw std::out_of_range("raw_entry: n must be positive");
  ensure_coefficients(n);
  std::lock_guard lock(mu_);
  return coeffs_.at(n);
}

Real HarmonicMaassForm::raw_coeff(long n) const {
  if (n < -1) return Real(ctx_.bits());
  if (n == -1) return Real(1L, ctx_.bits());
  if (n == 0) return raw_poincare_constant(shadow_.weight, ctx_.bits_for_magnitude(200));
  return raw_entry(n).value;
}

Real HarmonicMaassForm::c_minus(long n) const {
  const int k = shadow_.weight;
  const Bits b = ctx_.bits();
  Real den = pow(Real::pi(b) * 4L, k - 1) * pow(Real(n, b), k - 1);
  return -(Real(shadow_.a(n), b) / den);
}

const Complex& HarmonicMaassForm::lambda() const {
  if (!lambda_) throw std::logic_error("HarmonicMaassForm: not calibrated");
  return *lambda_;
}

Complex HarmonicMaassForm::holo_coeff(long n) const {
  Real r = raw_coeff(n);
  return lambda() * Real(r, std::max(r.precision(), lambda().precision()));
}

Complex HarmonicMaassForm::m_minus_eval(const Complex& tau, long N) const {
  const int k = shadow_.weight;
  const Bits wb = ctx_.bits() + 32;
  if (!(tau.im() > 0.0)) throw DomainError("m_minus_eval: tau must lie in the upper half plane");
  if (N > shadow_.length()) {
    throw PrecisionError("m_minus_eval: needs " + std::to_string(N) + " shadow coefficients, have " +
                         std::to_string(shadow_.length()));
  }
  Real two_pi = Real::pi(wb) * 2L;
  Real y(tau.im(), wb);
  // conj(q) = e^{-2 pi i x - 2 pi y}
  Complex cq = exp(Complex(-(two_pi * y), -(two_pi * Real(tau.re(), wb))));
  Real four_pi_y = two_pi * 2L * y;
  Real pref = factorial(static_cast<unsigned long>(k - 2), wb) / pow(Real::pi(wb) * 4L, k - 1);
  Complex pw = cq;
  Complex sum(wb);
  for (long n = 1; n <= N; ++n, pw *= cq) {
    mpz_class a = shadow_.a(n);
    if (a == 0) continue;
    // Gamma(k-1, X) e^{X} / (k-2)! = sum_{j<k-1} X^j / j!
    Real X = four_pi_y * n;
    Real t(1L, wb), poly(1L, wb);
    for (int j = 1; j < k - 1; ++j) {
      t *= X;
      t /= j;
      poly += t;
    }
    // c^-(n) (k-2)! poly conj(q)^n with c^-(n) = -a / ((4 pi)^{k-1} n^{k-1})
    Real coef = poly * pref / pow(Real(n, wb), k - 1);
    coef *= a;
    sum -= pw * coef;
  }
  return Complex(Real(sum.re(), ctx_.bits()), Real(sum.im(), ctx_.bits()));
}

Complex HarmonicMaassForm::m_minus_eval(const Complex& tau) const {
  const int k = shadow_.weight;
  const double y = tau.im().to_double();
  if (!(y > 0)) throw DomainError("m_minus_eval: tau must lie in the upper half plane");
  // log of the bound n^{k/2} n^{1-k} poly(4 pi n y) e^{-2 pi n y}, with
  // poly <= e^{min(X, ..)} handled through its largest term.
  auto lb = [&](long n) {
    double X = 4 * M_PI * static_cast<double>(n) * y;
    double lp = 0, t = 0;
    for (int j = 1; j < k - 1; ++j) {
      t += std::log(X) - std::log(static_cast<double>(j));
      lp = std::max(lp, t);
    }
    lp += std::log(static_cast<double>(k - 1));
    return (1.0 - k / 2.0) * std::log(static_cast<double>(n)) + lp - 2 * M_PI * static_cast<double>(n) * y;
  };
  double peak = lb(1);
  const double drop = static_cast<double>(ctx_.bits() + 16) * std::log(2.0);
  long N = 1;
  for (long n = 1;; ++n) {
    double l = lb(n);
    peak = std::max(peak, l);
    if (l < peak - drop && 2 * M_PI * y * static_cast<double>(n) > k) {
      N = n;
      break;
    }
  }
  return m_minus_eval(tau, N);
}

long HarmonicMaassForm::series_terms_needed(double y) const {
  const long nu = shadow_.weight - 1;
  // |c(n)| <= 4 pi n^{-nu/2} I_nu(4 pi sqrt n); compare with e^{2 pi y}.
  const double target = 2 * M_PI * y + std::log(ctx_.tolerance() * 1e-3);
  for (long n = 1; n <= 100000; ++n) {
    double l = std::log(2.0) + log_term_bound(n, 1, nu) - 2 * M_PI * static_cast<double>(n) * y;
    double slope = 2 * M_PI / std::sqrt(static_cast<double>(n)) - 2 * M_PI * y;
    if (l < target && slope < 0) return n;
  }
  throw PrecisionError("raw_plus_eval: imaginary part too small for the series");
}

Complex HarmonicMaassForm::raw_plus_eval(const Complex& tau) const {
  const double y = tau.im().to_double();
  if (!(y > 0)) throw DomainError("raw_plus_eval: tau must lie in the upper half plane");
  const long N = series_terms_needed(y);
  constexpr long kMaxTerms = 1500;
  if (N > kMaxTerms) {
    throw PrecisionError("raw_plus_eval: needs " + std::to_string(N) + " coefficients at Im(tau) = " +
                         std::to_string(y));
  }
  ensure_coefficients(N);
  Bits wb = ctx_.bits() + 32;
  {
    std::lock_guard lock(mu_);
    for (long n = 1; n <= N; ++n) wb = std::max(wb, coeffs_.at(n).value.precision());
  }
  Real two_pi = Real::pi(wb) * 2L;
  Complex q = exp(Complex(-(two_pi * Real(tau.im(), wb)), two_pi * Real(tau.re(), wb)));
  Complex sum = Complex(Real(1L, wb), Real(wb)) / q;
  sum.re() += Real(raw_coeff(0), wb);
  Complex qn = q;
  std::lock_guard lock(mu_);
  for (long n = 1; n <= N; ++n, qn *= q) sum += qn * coeffs_.at(n).value;
  return Complex(Real(sum.re(), ctx_.bits()), Real(sum.im(), ctx_.bits()));
}

Complex HarmonicMaassForm::m_plus_eval(const Complex& tau, EvalMode mode) const {
  if (mode == EvalMode::series || tau.im() >= 0.8) return lambda() * raw_plus_eval(tau);
  GL2Matrix g = reduce_to_fundamental_domain(tau);
  Complex w = g.act(tau);
  Complex j = g.automorphy(tau);
  Complex full_w = lambda() * raw_plus_eval(w) + m_minus_eval(w);
  return pow(j, shadow_.weight - 2) * full_w - m_minus_eval(tau);
}

Complex HarmonicMaassForm::eval(const Complex& tau, EvalMode mode) const {
  return m_plus_eval(tau, mode) + m_minus_eval(tau);
}

std::string HarmonicMaassForm::cache_key() const {
  std::ostringstream os;
  os << "poincare_k" << shadow_.weight << "_cmax" << opt_.c_max << "_tol" << opt_.abs_tolerance << "_bits"
     << ctx_.bits();
  return os.str();
}

void HarmonicMaassForm::save_cache(const std::string& dir) const {
  namespace fs = std::filesystem;
  fs::create_directories(dir);
  nlohmann::json j;
  j["key"] = cache_key();
  nlohmann::json rows = nlohmann::json::array();
  {
    std::lock_guard lock(mu_);
    for (const auto& [n, pc] : coeffs_) rows.push_back({n, pc.value.to_string(), pc.tail, pc.c_used, pc.value.precision()});
  }
  j["coeffs"] = std::move(rows);
  fs::path target = fs::path(dir) / (cache_key() + ".json");
  fs::path tmp = target;
  tmp += ".tmp";
  {
    std::ofstream out(tmp);
    out << j.dump();
  }
  fs::rename(tmp, target);
}

bool HarmonicMaassForm::load_cache(const std::string& dir) {
  namespace fs = std::filesystem;
  fs::path file = fs::path(dir) / (cache_key() + ".json");
  if (!fs::exists(file)) return false;
  std::ifstream in(file);
  nlohmann::json j = nlohmann::json::parse(in, nullptr, false);
  if (j.is_discarded() || j.value("key", "") != cache_key()) return false;
  std::map<long, PoincareCoefficient> loaded;
  long expect = 1;
  for (const auto& row : j.at("coeffs")) {
    PoincareCoefficient pc;
    pc.n = row.at(0).get<long>();
    if (pc.n != expect++) return false;  // must be contiguous from 1
    pc.value = Real::from_string(row.at(1).get<std::string>(), row.at(4).get<long>());
    pc.tail = row.at(2).get<double>();
    pc.c_used = row.at(3).get<long>();
    loaded.emplace(pc.n, std::move(pc));
  }
  std::lock_guard lock(mu_);
  if (loaded.size() > coeffs_.size()) coeffs_ = std::move(loaded);
  return true;
}

Complex calibrate(HarmonicMaassForm& hmf, const GL2Matrix& gamma, const Complex& tau) {
  const int k = hmf.shadow_weight();
  const PrecisionContext& ctx = hmf.context();
  Complex j = gamma.automorphy(tau);
  Complex diff = hmf.raw_plus_eval(tau) - pow(j, k - 2) * hmf.raw_plus_eval(gamma.act(tau));
  Complex lhs = diff * period_prefactor(k, ctx.bits());
  if (abs(diff) < ctx.tolerance()) throw IllConditionedError("calibrate: period difference vanishes");
  Complex rhs = twisted_period_polynomial(hmf.shadow(), gamma, tau, ctx);
  Complex lambda = rhs / lhs;
  hmf.set_lambda(lambda, std::max(ctx.tolerance(), hmf.options().abs_tolerance * 1e3));
  return lambda;
}

Complex calibrate(HarmonicMaassForm& hmf) {
  const Bits b = hmf.context().bits();
  std::vector<Complex> taus{Complex(0.0, 1.0, b), Complex(0.0, 2.0, b), Complex(0.5, 2.0, b)};
  std::vector<Complex> lams;
  for (const auto& t : taus) lams.push_back(calibrate(hmf, GL2Matrix::S(), t));
  double tol = 10 * std::max(hmf.context().tolerance(), hmf.options().abs_tolerance * 1e3);
  for (const auto& l : lams) {
    if (abs(l - lams[0]) > abs(lams[0]) * Real(tol, b)) {
      throw ConvergenceError("calibrate: lambda differs between evaluation points by " +
                             (abs(l - lams[0]) / abs(lams[0])).to_string(4));
    }
  }
  double spread = 0;
  for (const auto& l : lams) spread = std::max(spread, (abs(l - lams[0]) / abs(lams[0])).to_double());
  hmf.set_lambda(lams[0], std::max(spread, hmf.lambda_rel_error()));
  return lams[0];
}

Complex calibrate_petersson(HarmonicMaassForm& hmf) {
  const int k = hmf.shadow_weight();
  if (k != 12 && k != 16 && k != 18 && k != 20 && k != 22 && k != 26)
    throw DomainError("calibrate_petersson: needs a one dimensional cusp space");
  const CuspForm& f = hmf.shadow();
  if (f.a(1) == 0) throw DomainError("calibrate_petersson: shadow has a(1) = 0");
  const Bits b = hmf.context().bits();
  Real norm = petersson_norm(period_polynomial(f, hmf.context()));
  Real a1(b);
  mpfr_set_z(a1.get(), f.a(1).get_mpz_t(), MPFR_RNDN);
  Complex lambda(norm / a1, Real(0L, b));
  hmf.set_lambda(lambda, std::ldexp(1.0, -int(b) + 24));
  return lambda;
}

Complex period_function(const HarmonicMaassForm& hmf, const GL2Matrix& gamma, const Complex& tau, EvalMode mode) {
  const int k = hmf.shadow_weight();
  Complex j = gamma.automorphy(tau);
  Complex diff = hmf.m_plus_eval(tau, mode) - pow(j, k - 2) * hmf.m_plus_eval(gamma.act(tau), mode);
  return diff * period_prefactor(k, hmf.context().bits());
}

LemmaScan lemma_bound_scan(const HarmonicMaassForm& hmf, const std::vector<GL2Matrix>& gammas,
                           const std::vector<Complex>& taus) {
  const int k = hmf.shadow_weight();
  const Bits b = hmf.context().bits();
  LemmaScan scan;
  for (const auto& g : gammas) {
    if (g.c == 0) throw std::invalid_argument("lemma_bound_scan: gamma needs c != 0");
    TwistedPeriod tp = twisted_period(hmf.shadow(), g, hmf.context());
    for (const auto& t : taus) {
      Complex p = tp(t, b);
      double r = (abs(p) / pow(abs(g.automorphy(t)), k - 2)).to_double();
      if (!std::isfinite(r)) throw OverflowError("lemma_bound_scan: non-finite ratio");
      ++scan.samples;
      if (r > scan.max_ratio) {
        scan.max_ratio = r;
        scan.worst = g;
        scan.worst_tau = t;
      }
    }
  }
  return scan;
}

std::vector<Complex> fundamental_domain_grid(int nx, int ny, double y_max, Bits bits) {
  std::vector<Complex> out;
  for (int i = 0; i < nx; ++i) {
    double x = -1.0 + 2.0 * (i + 0.5) / nx;
    double y0 = std::sqrt(std::max(0.0, 1 - x * x)) + 1e-3;
    y0 = std::max(y0, 0.05);
    for (int j = 0; j < ny; ++j) {
      double y = y0 + (y_max - y0) * (j + 0.5) / ny;
      out.emplace_back(x, y, bits);
    }
  }
  return out;
}

}  // namespace maass_shift
