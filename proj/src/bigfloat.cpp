#include "maass_shift/bigfloat.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace maass_shift {

Real Real::from_string(std::string_view text, Bits bits) {
  Real r(bits);
  std::string s(text);
  if (mpfr_set_str(r.v_, s.c_str(), 10, MPFR_RNDN) != 0) {
    throw std::invalid_argument("not a decimal number: " + s);
  }
  return r;
}

Real Real::pi(Bits bits) {
  Real r(bits);
  mpfr_const_pi(r.v_, MPFR_RNDN);
  return r;
}

std::string Real::to_string(int digits) const {
  if (mpfr_nan_p(v_)) return "nan";
  if (mpfr_inf_p(v_)) return mpfr_sgn(v_) > 0 ? "inf" : "-inf";
  if (mpfr_zero_p(v_)) return "0";
  mpfr_exp_t e = 0;
  char* raw = mpfr_get_str(nullptr, &e, 10, static_cast<size_t>(digits), v_, MPFR_RNDN);
  std::string mant(raw);
  mpfr_free_str(raw);
  std::string out;
  std::size_t start = 0;
  if (mant[0] == '-') {
    out.push_back('-');
    start = 1;
  }
  out.push_back(mant[start]);
  // Strip trailing zeros but keep at least one fractional digit.
  std::string frac = mant.substr(start + 1);
  while (frac.size() > 1 && frac.back() == '0') frac.pop_back();
  out.push_back('.');
  out += frac.empty() ? "0" : frac;
  out += "e" + std::to_string(static_cast<long>(e) - 1);
  return out;
}

double Real::log10_abs() const {
  if (mpfr_zero_p(v_)) return -std::numeric_limits<double>::infinity();
  long e = 0;
  double m = mpfr_get_d_2exp(&e, v_, MPFR_RNDN);
  return std::log10(std::fabs(m)) + static_cast<double>(e) * std::log10(2.0);
}

#define MS_UNARY(name, fn)                      \
  Real name(const Real& x) {                    \
    Real r(x.precision());                      \
    fn(r.get(), x.get(), MPFR_RNDN);            \
    return r;                                   \
  }

MS_UNARY(exp, mpfr_exp)
MS_UNARY(log, mpfr_log)
MS_UNARY(sqrt, mpfr_sqrt)
MS_UNARY(cos, mpfr_cos)
MS_UNARY(sin, mpfr_sin)
MS_UNARY(abs, mpfr_abs)

#undef MS_UNARY

Real pow(const Real& x, const Real& y) {
  Real r(max_bits(x, y));
  mpfr_pow(r.get(), x.get(), y.get(), MPFR_RNDN);
  return r;
}

Real pow(const Real& x, long n) {
  Real r(x.precision());
  mpfr_pow_si(r.get(), x.get(), n, MPFR_RNDN);
  return r;
}

Real factorial(unsigned long n, Bits bits) {
  Real r(bits);
  mpfr_fac_ui(r.get(), n, MPFR_RNDN);
  return r;
}

Real binomial(unsigned long n, unsigned long k, Bits bits) {
  mpz_class b;
  mpz_bin_uiui(b.get_mpz_t(), n, k);
  return Real(b, bits);
}

Complex& Complex::operator*=(const Complex& o) {
  Real re = re_ * o.re_ - im_ * o.im_;
  Real im = re_ * o.im_ + im_ * o.re_;
  re_ = std::move(re);
  im_ = std::move(im);
  return *this;
}

Complex& Complex::operator/=(const Complex& o) {
  Real den = o.re_ * o.re_ + o.im_ * o.im_;
  Real re = (re_ * o.re_ + im_ * o.im_) / den;
  Real im = (im_ * o.re_ - re_ * o.im_) / den;
  re_ = std::move(re);
  im_ = std::move(im);
  return *this;
}

std::string Complex::to_string(int digits) const {
  return re_.to_string(digits) + (im_.sign() < 0 ? " - " : " + ") + abs(im_).to_string(digits) + "i";
}

Complex conj(const Complex& z) { return Complex(z.re(), -z.im()); }

Real abs(const Complex& z) {
  Real r(z.precision());
  mpfr_hypot(r.get(), z.re().get(), z.im().get(), MPFR_RNDN);
  return r;
}

Real norm(const Complex& z) { return z.re() * z.re() + z.im() * z.im(); }

Complex expi(const Real& theta) {
  Real s(theta.precision()), c(theta.precision());
  mpfr_sin_cos(s.get(), c.get(), theta.get(), MPFR_RNDN);
  return Complex(std::move(c), std::move(s));
}

Complex exp(const Complex& z) {
  Complex w = expi(z.im());
  return w * exp(z.re());
}

Complex pow(const Complex& z, long n) {
  if (n < 0) {
    Complex one(Real(1L, z.precision()), Real(z.precision()));
    return one / pow(z, -n);
  }
  Complex result(Real(1L, z.precision()), Real(z.precision()));
  Complex base = z;
  while (n > 0) {
    if (n & 1) result *= base;
    n >>= 1;
    if (n) base *= base;
  }
  return result;
}

}  // namespace maass_shift
