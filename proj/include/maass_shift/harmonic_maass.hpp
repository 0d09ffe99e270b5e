#pragma once

#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "maass_shift/modular_forms.hpp"
#include "maass_shift/periods.hpp"

namespace maass_shift {

// K(m, n; c) = sum_{d mod c, (d,c)=1} e^{2 pi i (m d + n dbar)/c}.
Complex kloosterman(long m, long n, long c, Bits bits);
double kloosterman_double(long m, long n, long c);

struct PoincareCoefficient {
  long n = 0;
  Real value;       // raw coefficient, principal part q^{-1}
  double tail = 0;  // bound on the omitted c > c_used terms
  long c_used = 0;
};

struct PoincareOptions {
  long c_max = 4000;
  // Absolute accuracy asked of each raw coefficient; the c-sum stops once
  // the tail bound is below it.
  double abs_tolerance = 1e-30;
};

// Raw coefficients of the weight 2-k Maass-Poincare series with principal
// part q^{-1}:
//   c(n) = -2 pi n^{-(k-1)/2} sum_{c>=1} K(-1, n; c)/c I_{k-1}(4 pi sqrt(n)/c).
// Terms large enough to matter at the requested accuracy are summed in MPFR
// with exact Kloosterman sums; the rest in double.
std::vector<PoincareCoefficient> raw_poincare_coeffs(long n_lo, long n_hi, int k, const PoincareOptions& opt,
                                                     const PrecisionContext& ctx);
PoincareCoefficient raw_poincare_coeff(long n, long c_max, const PrecisionContext& ctx, int k = 12,
                                       double abs_tolerance = 1e-30);
// Constant term -(2 pi)^k / ((k-1)! zeta(k)) (the n -> 0 limit).
Real raw_poincare_constant(int k, Bits bits);

enum class EvalMode { automatic, series };

class HarmonicMaassForm {
 public:
  // shadow must be long enough for the nonholomorphic part at the smallest
  // imaginary parts used (about 60 / Im(tau) coefficients at 512 bits).
  HarmonicMaassForm(CuspForm shadow, PrecisionContext ctx, PoincareOptions opt = {});

  int weight() const { return 2 - shadow_.weight; }
  int shadow_weight() const { return shadow_.weight; }
  const CuspForm& shadow() const { return shadow_; }
  const PrecisionContext& context() const { return ctx_; }
  const PoincareOptions& options() const { return opt_; }

  // Fills the coefficient cache through n (write-once per n; thread safe).
  void ensure_coefficients(long n) const;
  long cached_through() const;
  Real raw_coeff(long n) const;  // n >= -1
  PoincareCoefficient raw_entry(long n) const;

  // c^-(n) = -a(n) / ((4 pi)^{k-1} n^{k-1})
  Real c_minus(long n) const;

  bool calibrated() const { return lambda_.has_value(); }
  const Complex& lambda() const;
  // rel_error: relative uncertainty of l, used by callers that cancel
  // large multiples of lambda.
  void set_lambda(Complex l, double rel_error = 0) {
    lambda_ = std::move(l);
    lambda_rel_error_ = rel_error;
  }
  double lambda_rel_error() const { return lambda_rel_error_; }
  // c^+(n) = lambda * raw(n), including n = -1 and n = 0.
  Complex holo_coeff(long n) const;

  // M^-(tau) = sum_n c^-(n) Gamma(k-1, 4 pi n y) q^{-n}
  Complex m_minus_eval(const Complex& tau) const;
  Complex m_minus_eval(const Complex& tau, long N) const;
  // Unscaled series q^{-1} + c(0) + sum c(n) q^n.
  Complex raw_plus_eval(const Complex& tau) const;
  // M^+ = lambda * raw series. Automatic mode maps tau with small imaginary
  // part into the fundamental domain through the modularity of M^+ + M^-.
  Complex m_plus_eval(const Complex& tau, EvalMode mode = EvalMode::automatic) const;
  Complex eval(const Complex& tau, EvalMode mode = EvalMode::automatic) const;

  // Persist / restore raw coefficients keyed by (k, c_max, tolerance, bits).
  std::string cache_key() const;
  void save_cache(const std::string& dir) const;
  bool load_cache(const std::string& dir);

 private:
  long series_terms_needed(double y) const;

  CuspForm shadow_;
  PrecisionContext ctx_;
  PoincareOptions opt_;
  std::optional<Complex> lambda_;
  double lambda_rel_error_ = 0;
  mutable std::mutex mu_;
  mutable std::map<long, PoincareCoefficient> coeffs_;
};

// (4 pi)^{k-1} / (k-2)!
Real period_prefactor(int k, Bits bits);

// lambda from P(lambda * raw, gamma; tau) = twisted period polynomial.
Complex calibrate(HarmonicMaassForm& hmf, const GL2Matrix& gamma, const Complex& tau);
// Calibrates at (S, i), (S, 2i), (S, 1/2 + 2i); checks their spread.
Complex calibrate(HarmonicMaassForm& hmf);

// lambda = <f, f> / a_f(1) from the periods of the shadow f. Needs a one
// dimensional cusp space; accurate to the working precision, unlike the
// series calibration which is limited by the Poincare coefficient accuracy.
Complex calibrate_petersson(HarmonicMaassForm& hmf);

// P(M^+, gamma; tau) = (4 pi)^{k-1}/(k-2)! (M^+ - M^+|_{2-k} gamma)(tau)
Complex period_function(const HarmonicMaassForm& hmf, const GL2Matrix& gamma, const Complex& tau,
                        EvalMode mode = EvalMode::automatic);

struct LemmaScan {
  double max_ratio = 0;
  GL2Matrix worst = GL2Matrix::identity();
  Complex worst_tau{64};
  long samples = 0;
};

// max |P(M^+, gamma; tau)| / |c tau + d|^{k-2} over the samples, with P from
// the twisted period polynomial.
LemmaScan lemma_bound_scan(const HarmonicMaassForm& hmf, const std::vector<GL2Matrix>& gammas,
                           const std::vector<Complex>& taus);

// Samples of the fundamental domain {|z| > 1, -1 <= Re z < 1} on a grid.
std::vector<Complex> fundamental_domain_grid(int nx, int ny, double y_max, Bits bits);

}  // namespace maass_shift
