#include "maass_shift/qseries.hpp"

#include <json.hpp>

namespace maass_shift {

ComplexSeries to_complex(const ExactSeries& s, Bits bits) {
  ComplexSeries r(s.n_min(), s.truncation_order(), Complex(bits));
  for (const auto& [n, v] : s.terms()) r.set(n, Complex(Real(v, bits), Real(bits)));
  return r;
}

double log10_tail_bound(long N, double y, const CoefficientGrowth& g) {
  // Terms are eventually log-concave decreasing; sum until they are tiny
  // against the running maximum.
  const double two_pi_y = 2 * M_PI * y;
  double peak = -std::numeric_limits<double>::infinity();
  double acc = 0;  // sum of 10^(l - peak)
  long n = std::max(N + 1, 1L);
  for (long steps = 0; steps < 10000000; ++n, ++steps) {
    double l = (g.log_scale + g.power * std::log(static_cast<double>(n)) + g.exp_rate * std::sqrt(static_cast<double>(n)) -
                two_pi_y * static_cast<double>(n)) / std::log(10.0);
    if (l > peak) {
      acc = acc * std::pow(10.0, peak - l) + 1;
      peak = l;
    } else {
      acc += std::pow(10.0, l - peak);
      double slope = g.power / static_cast<double>(n) + g.exp_rate / (2 * std::sqrt(static_cast<double>(n))) - two_pi_y;
      if (l < peak - 20 && slope < 0) {
        // Remaining geometric tail with ratio exp(slope).
        acc += std::pow(10.0, l - peak) / (1 - std::exp(slope));
        break;
      }
    }
  }
  return peak + std::log10(acc);
}

namespace {

template <class S>
Complex evaluate_impl(const S& s, const Complex& tau, const PrecisionContext& ctx, const CoefficientGrowth& growth,
                      auto&& as_complex) {
  if (!(tau.im() > 0.0)) throw DomainError("evaluate: tau must lie in the upper half plane");
  const Bits wb = ctx.bits() + 32;
  Real two_pi = Real::pi(wb) * 2L;
  Complex q = exp(Complex(-(two_pi * tau.im()), two_pi * tau.re()));
  Complex sum(wb);
  if (!s.terms().empty()) {
    long cur = s.terms().begin()->first;
    Complex qn = pow(q, cur);
    for (const auto& [n, v] : s.terms()) {
      if (n != cur) {
        qn *= pow(q, n - cur);
        cur = n;
      }
      sum += as_complex(v, wb) * qn;
    }
  }
  double tail = log10_tail_bound(s.truncation_order(), tau.im().to_double(), growth);
  double scale = std::max(abs(sum).log10_abs(), -300.0);
  if (tail > scale + std::log10(ctx.tolerance())) {
    throw PrecisionError("evaluate: truncation tail 1e" + std::to_string(tail) + " exceeds tolerance");
  }
  return Complex(Real(sum.re(), ctx.bits()), Real(sum.im(), ctx.bits()));
}

}  // namespace

Complex evaluate(const ComplexSeries& s, const Complex& tau, const PrecisionContext& ctx,
                 const CoefficientGrowth& growth) {
  return evaluate_impl(s, tau, ctx, growth, [](const Complex& v, Bits) -> const Complex& { return v; });
}

Complex evaluate(const ExactSeries& s, const Complex& tau, const PrecisionContext& ctx,
                 const CoefficientGrowth& growth) {
  return evaluate_impl(s, tau, ctx, growth, [](const mpz_class& v, Bits b) { return Complex(Real(v, b), Real(b)); });
}

namespace {

template <class S, class F>
std::string dump(const S& s, F&& parts) {
  nlohmann::json j;
  j["n_min"] = s.n_min();
  j["N"] = s.truncation_order();
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& [n, v] : s.terms()) {
    auto [re, im] = parts(v);
    arr.push_back({n, re, im});
  }
  j["coeffs"] = std::move(arr);
  return j.dump();
}

}  // namespace

std::string to_json(const ComplexSeries& s) {
  return dump(s, [](const Complex& v) { return std::pair{v.re().to_string(), v.im().to_string()}; });
}

std::string to_json(const ExactSeries& s) {
  return dump(s, [](const mpz_class& v) { return std::pair{v.get_str(), std::string("0")}; });
}

ComplexSeries complex_series_from_json(const std::string& text, Bits bits) {
  auto j = nlohmann::json::parse(text);
  ComplexSeries s(j.at("n_min").get<long>(), j.at("N").get<long>(), Complex(bits));
  for (const auto& row : j.at("coeffs")) {
    s.set(row.at(0).get<long>(), Complex(Real::from_string(row.at(1).get<std::string>(), bits),
                                         Real::from_string(row.at(2).get<std::string>(), bits)));
  }
  return s;
}

ExactSeries exact_series_from_json(const std::string& text) {
  auto j = nlohmann::json::parse(text);
  ExactSeries s(j.at("n_min").get<long>(), j.at("N").get<long>());
  for (const auto& row : j.at("coeffs")) {
    if (row.at(2).get<std::string>() != "0") throw std::invalid_argument("exact series with imaginary part");
    s.set(row.at(0).get<long>(), mpz_class(row.at(1).get<std::string>()));
  }
  return s;
}

}  // namespace maass_shift
