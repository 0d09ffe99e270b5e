#pragma once

// Truncated q-expansions sum_{n >= n_min} c(n) q^n, known through q^N.

#include <cmath>
#include <limits>
#include <map>
#include <stdexcept>
#include <string>

#include "maass_shift/bigfloat.hpp"
#include "maass_shift/errors.hpp"
#include "maass_shift/numerics.hpp"

namespace maass_shift {

// log|c(n)| <= log_scale + power * log(n) + exp_rate * sqrt(n); used to bound
// the tail of a truncated expansion.
struct CoefficientGrowth {
  double log_scale = 0;
  double power = 0;
  double exp_rate = 0;
};

template <class T>
class QSeries {
 public:
  QSeries(long n_min, long N, T zero) : n_min_(n_min), N_(N), zero_(std::move(zero)) {
    if (N < n_min - 1) throw std::invalid_argument("QSeries: truncation order below n_min");
  }
  QSeries(long n_min, long N) requires std::is_same_v<T, mpz_class> : QSeries(n_min, N, mpz_class(0)) {}

  long n_min() const { return n_min_; }
  long truncation_order() const { return N_; }
  const std::map<long, T>& terms() const { return c_; }
  const T& zero() const { return zero_; }

  void set(long n, T value) {
    if (n > N_) throw std::out_of_range("QSeries::set: exponent beyond truncation order");
    if (n < n_min_) throw std::out_of_range("QSeries::set: exponent below n_min");
    c_.insert_or_assign(n, std::move(value));
  }

  T coefficient(long n) const {
    if (n > N_) throw std::out_of_range("QSeries: coefficient " + std::to_string(n) + " beyond order " + std::to_string(N_));
    auto it = c_.find(n);
    return it == c_.end() ? zero_ : it->second;
  }

  // Smallest exponent with a nonzero stored coefficient, or N+1 if none.
  long valuation() const {
    for (const auto& [n, v] : c_)
      if (!is_zero(v)) return n;
    return N_ + 1;
  }

  QSeries truncated(long N) const {
    QSeries r(n_min_, std::min(N, N_), zero_);
    for (const auto& [n, v] : c_)
      if (n <= r.N_) r.c_.emplace(n, v);
    return r;
  }

  friend QSeries operator+(const QSeries& a, const QSeries& b) {
    QSeries r(std::min(a.n_min_, b.n_min_), std::min(a.N_, b.N_), a.zero_);
    for (const auto& [n, v] : a.c_)
      if (n <= r.N_) r.c_.emplace(n, v);
    for (const auto& [n, v] : b.c_) {
      if (n > r.N_) continue;
      auto [it, fresh] = r.c_.try_emplace(n, v);
      if (!fresh) it->second += v;
    }
    return r;
  }

  friend QSeries operator-(const QSeries& a, const QSeries& b) { return a + b.scaled(-1L); }

  template <class S>
  QSeries scaled(const S& s) const {
    QSeries r = *this;
    for (auto& [n, v] : r.c_) v *= s;
    return r;
  }

  // Cauchy product; known through min(N_a + v_b, N_b + v_a) where v is the
  // leading exponent.
  friend QSeries operator*(const QSeries& a, const QSeries& b) {
    long va = a.leading(), vb = b.leading();
    long N = std::min(a.N_ + vb, b.N_ + va);
    QSeries r(a.n_min_ + b.n_min_, std::max(N, a.n_min_ + b.n_min_ - 1), a.zero_);
    for (const auto& [i, x] : a.c_) {
      if (i + vb > N) break;
      for (const auto& [j, y] : b.c_) {
        if (i + j > N) break;
        T p = x;
        p *= y;
        auto [it, fresh] = r.c_.try_emplace(i + j, p);
        if (!fresh) it->second += p;
      }
    }
    return r;
  }

 private:
  // Leading exponent for the truncation rule: the valuation, or n_min when
  // the series is identically zero through N (nothing better is known).
  long leading() const {
    long v = valuation();
    return v > N_ ? std::max(n_min_, N_ + 1) : v;
  }

  static bool is_zero(const T& v) {
    if constexpr (std::is_same_v<T, mpz_class>) return v == 0;
    else return v.re().is_zero() && v.im().is_zero();
  }

  long n_min_;
  long N_;
  T zero_;
  std::map<long, T> c_;
};

using ExactSeries = QSeries<mpz_class>;
using ComplexSeries = QSeries<Complex>;

ComplexSeries to_complex(const ExactSeries& s, Bits bits);

// Sum of stored terms at tau. The tail beyond N is bounded through `growth`;
// PrecisionError when it exceeds the context tolerance relative to the sum.
Complex evaluate(const ComplexSeries& s, const Complex& tau, const PrecisionContext& ctx,
                 const CoefficientGrowth& growth = {});
Complex evaluate(const ExactSeries& s, const Complex& tau, const PrecisionContext& ctx,
                 const CoefficientGrowth& growth = {});

// Upper bound on sum_{n > N} exp(growth(n) - 2 pi n y), as log10.
double log10_tail_bound(long N, double y, const CoefficientGrowth& growth);

// {"n_min": int, "N": int, "coeffs": [[n, re, im], ...]} with decimal strings.
std::string to_json(const ComplexSeries& s);
std::string to_json(const ExactSeries& s);
ComplexSeries complex_series_from_json(const std::string& text, Bits bits);
ExactSeries exact_series_from_json(const std::string& text);

}  // namespace maass_shift
