#include <doctest.h>

#include <boost/math/quadrature/exp_sinh.hpp>
#include <boost/math/special_functions/gamma.hpp>

#include <cmath>
#include <json.hpp>
#include <sstream>

#include "maass_shift/experiments.hpp"

using namespace maass_shift;

namespace {

const PrecisionContext ctx(256, 1e-40, 1100);

HarmonicMaassForm& form() {
  static HarmonicMaassForm h(delta_expansion(32768), ctx);
  static bool done = (calibrate(h), true);
  (void)done;
  return h;
}

const CuspForm& long_delta() {
  static CuspForm d = delta_expansion(200100);
  return d;
}

// projection reads only the shadow, which has to reach m_max
const HarmonicMaassForm& proj_form() {
  static HarmonicMaassForm h(long_delta(), ctx);
  return h;
}

double re(const ShiftedValue& v) { return v.value.re().to_double(); }

}  // namespace

TEST_CASE("projection integral: closed form against quadrature") {
  boost::math::quadrature::exp_sinh<double> es;
  for (long m : {1L, 5L, 40L}) {
    for (long h : {1L, 3L}) {
      for (double s : {0.0, -0.3, 0.4}) {
        double a = 4 * M_PI * h, b = 4 * M_PI * m;
        double q = es.integrate(
            [&](double y) { return y > 50 ? 0.0 : boost::math::tgamma(11.0, b * y) * std::exp(-a * y) * std::pow(y, -s); },
            1e-13);
        CHECK(projection_integral(12, m, h, s) == doctest::Approx(q).epsilon(1e-10));
      }
    }
  }
  // s = 0: 10! (1 - x^11) / (4 pi h), x = m / (m + h)
  double x = 7.0 / 9.0;
  CHECK(projection_integral(12, 7, 2, 0.0) == doctest::Approx(3628800.0 * (1 - std::pow(x, 11)) / (8 * M_PI)).epsilon(1e-13));
  CHECK_THROWS_AS(projection_integral(12, 1, 1, 1.0), DomainError);
}

TEST_CASE("projection integral agrees with the library quadrature") {
  PrecisionContext c(128, 1e-25);
  const long m = 3, h = 2;
  Real a = Real::pi(128) * (4L * h), b = Real::pi(128) * (4L * m);
  Estimate e = integrate_semiline(
      [&](const Real& y) { return upper_incomplete_gamma(11L, b * y, c) * exp(-(a * y)); }, 0.0, c);
  CHECK(e.value.to_double() == doctest::Approx(projection_integral(12, m, h, 0.0)).epsilon(1e-13));
}

TEST_CASE("direct route: zero form and preconditions") {
  CuspForm z = zero_cusp_form(12, 2000);
  CuspForm d = delta_expansion(2000);
  ShiftedValue v = direct_dhat(z, d, 3, 1000, SumScheme::abel);
  CHECK(v.value.re().is_zero());
  CHECK(v.error_estimate > 0);
  CHECK(v.route == Route::direct);
  CHECK_THROWS_AS(direct_dhat(d, d, 200, 1000, SumScheme::abel), std::invalid_argument);
  CHECK_THROWS_AS(direct_dhat(d, d, 1, 5000, SumScheme::cesaro), PrecisionError);
}

TEST_CASE("three routes agree for small h") {
  auto& h = form();
  const CuspForm& d = long_delta();
  for (long s = 1; s <= 3; ++s) {
    ShiftedValue m = mock_dhat(h, d, s);
    ShiftedValue p = projection_dhat(proj_form(), d, s);
    CHECK(std::abs(re(p) - re(m)) < 1e-6 * std::abs(re(m)));
    CHECK(std::abs(re(p) - re(m)) < p.error_estimate + m.error_estimate);
    for (SumScheme sc : {SumScheme::abel, SumScheme::cesaro}) {
      ShiftedValue dv = direct_dhat(d, d, s, 100000, sc);
      CHECK(std::abs(re(dv) - re(m)) < dv.error_estimate);
      CHECK(std::abs(re(dv) - re(m)) < 0.02 * std::abs(re(m)));
    }
  }
}

TEST_CASE("projection needs a long shadow") {
  HarmonicMaassForm shortf(delta_expansion(1100), ctx);
  CHECK_THROWS_AS(projection_dhat(shortf, long_delta(), 1), PrecisionError);
}

TEST_CASE("mock route: published magnitudes and the cancellation") {
  auto& h = form();
  const CuspForm& d = long_delta();
  CHECK(agrees_to_digits(std::abs(re(mock_dhat(h, d, 1))), 33.38465, 5));
  CHECK(agrees_to_digits(std::abs(re(mock_dhat(h, d, 2))), 266.447, 4));
  CHECK(agrees_to_digits(re(mock_dhat(h, d, 10)), 538192.6, 3));
  ShiftedValue big = mock_dhat(h, d, 1000);
  CHECK(agrees_to_digits(re(big), 5.4234e15, 3));
  CHECK(std::stod(big.parameters.at("cancellation_log10")) > 100);
  CHECK(big.error_estimate < 1e-6 * re(big));
}

TEST_CASE("generating function starts at q^1") {
  auto& h = form();
  ComplexSeries L = generating_function(h, delta_expansion(1100), 3);
  CHECK(L.coefficient(0).re().is_zero());
  CHECK(abs(L.coefficient(2) - mock_dhat(h, delta_expansion(1100), 2).value) < Real(1e-30, 256));
  CHECK_THROWS_AS(generating_function(h, delta_expansion(10), 0), std::invalid_argument);
}

TEST_CASE("log-log fit") {
  LinearFit c = loglog_fit({10, 100, 1000}, {4, 4, 4});
  CHECK(c.slope == doctest::Approx(0).epsilon(1e-15));
  LinearFit p = loglog_fit({2, 3, 5, 7}, {3 * std::pow(2, 5), 3 * std::pow(3, 5), 3 * std::pow(5, 5), 3 * std::pow(7, 5)});
  CHECK(p.slope == doctest::Approx(5).epsilon(1e-12));
  CHECK(p.slope_stderr < 1e-10);
  // successive decades of the published values: 5.18 then 4.83
  CHECK(loglog_fit({10, 100}, {538192.6, 80949379532.2}).slope == doctest::Approx(5.177).epsilon(1e-3));
  CHECK(loglog_fit({100, 1000}, {80949379532.2, 5.4234e15}).slope == doctest::Approx(4.826).epsilon(1e-3));
  CHECK_THROWS_AS(loglog_fit({1, 1}, {2, 3}), DomainError);
}

TEST_CASE("significant digit comparison") {
  CHECK(agrees_to_digits(33.3836, 33.38465, 5));
  CHECK_FALSE(agrees_to_digits(33.3836, 33.38465, 6));
  CHECK(agrees_to_digits(-1842.86, -1842.89, 4));
}

TEST_CASE("report rendering round trips") {
  Report r;
  r.title = "t";
  r.rows.push_back({1, {{"x", "mock", "1.25e0", "-3.0e-1", 0.5}, {"y", "exact", "7", "", std::nullopt}}, 0.1});
  r.summary["k"] = "v";
  nlohmann::json j = nlohmann::json::parse(render(r, OutputFormat::json));
  CHECK(j["rows"][0]["values"][0]["value"] == "1.25e0");
  CHECK(j["rows"][0]["values"][0]["imag"] == "-3.0e-1");
  CHECK(j["rows"][0]["values"][0]["route"] == "mock");
  CHECK_FALSE(j["rows"][0].contains("wall_seconds"));
  std::istringstream csv(render(r, OutputFormat::csv));
  std::string head, line;
  std::getline(csv, head);
  std::getline(csv, line);
  CHECK(head == "index,x[mock],x_imag[mock],x_error[mock],y[exact]");
  CHECK(line == "1,1.25e0,-3.0e-1,0.5,7");
}

TEST_CASE("run config validation") {
  RunConfig c;
  CHECK_NOTHROW(c.validate());
  c.c_max = 0;
  CHECK_THROWS_AS(c.validate(), std::invalid_argument);
  RunConfig d;
  d.h_list = {3, -1};
  CHECK_THROWS_AS(Session{d}, std::invalid_argument);
}

TEST_CASE("tau command") {
  RunConfig c;
  Session s(c);
  Report r = cmd_tau(s, 3);
  REQUIRE(r.rows.size() == 3);
  CHECK(r.rows[1].cells[0].value == "-24");
}
