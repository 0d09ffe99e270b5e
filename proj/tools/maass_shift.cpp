// maass-shift: command line front end.
// Exit codes: 0 all checks pass, 1 a check failed, 2 bad usage or config,
// 3 numerical failure.

#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "maass_shift/experiments.hpp"

using namespace maass_shift;

namespace {

constexpr int kPass = 0, kFail = 1, kUsage = 2, kNumeric = 3;

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Shifted convolution values of level one cusp forms via harmonic Maass forms"};
  app.require_subcommand(1);
  app.fallthrough();

  RunConfig cfg;
  std::string format = "csv";
  std::string cache;
  app.add_option("--precision", cfg.bits, "Working precision in bits")->check(CLI::Range(64, 1 << 16));
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"csv", "json"}));
  app.add_option("--cache", cache, "Coefficient cache directory (default: $MAASS_SHIFT_CACHE)");
  app.add_option("--q-length", cfg.q_length, "q-series length of the shadow");
  app.add_option("--c-max", cfg.c_max, "Largest Kloosterman modulus");
  app.add_option("--abs-tolerance", cfg.abs_tolerance, "Absolute accuracy of Poincare coefficients");
  app.add_option("--direct-n", cfg.direct_N, "Terms of the direct sum");
  app.add_option("--m-max", cfg.projection_m_max, "Largest m in the projection sum");
  app.add_flag("--timings", cfg.timings, "Include wall times in the output");

  long tau_max = 20;
  auto* tau = app.add_subcommand("tau", "tau(n) for n <= max");
  tau->add_option("--max", tau_max, "Largest n")->required();

  auto* periods = app.add_subcommand("periods", "Periods r_n and critical L-values of Delta");
  std::string form = "delta";
  periods->add_option("--form", form, "Cusp form")->check(CLI::IsMember({"delta"}));

  std::vector<long> n_list{1, 10, 100, 1000};
  auto* poincare = app.add_subcommand("poincare", "Holomorphic Poincare coefficients");
  poincare->add_option("--n-list", n_list, "Indices n")->delimiter(',');

  std::vector<long> h_list{1, 2};
  std::string route = "mock";
  auto* dhat = app.add_subcommand("dhat", "Dhat(Delta, Delta, h; 11)");
  dhat->add_option("--h-list", h_list, "Shifts h")->delimiter(',');
  dhat->add_option("--route", route, "Route")->check(CLI::IsMember({"direct", "mock", "projection", "all"}));

  auto* table1 = app.add_subcommand("table1", "Reproduce the reference table (n = 1, 10, 100, 1000)");
  auto* growth = app.add_subcommand("growth", "Log-log growth fit of Dhat(h)");
  std::vector<long> growth_h;
  growth->add_option("--h-list", growth_h, "Shifts h (default 10,30,100,300,1000)")->delimiter(',');
  auto* periodcheck = app.add_subcommand("periodcheck", "Period function identities and the lemma scan");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? kPass : kUsage;
  }

  cfg.format = format == "json" ? OutputFormat::json : OutputFormat::csv;
  if (!cache.empty()) {
    cfg.cache_dir = cache;
  } else if (const char* env = std::getenv("MAASS_SHIFT_CACHE")) {
    cfg.cache_dir = env;
  }
  if (*growth) cfg.h_list = growth_h;

  try {
    Session s(cfg);
    Report r;
    if (*tau) r = cmd_tau(s, tau_max);
    else if (*periods) r = cmd_periods(s);
    else if (*poincare) r = cmd_poincare(s, n_list);
    else if (*dhat) r = cmd_dhat(s, h_list, route);
    else if (*table1) r = cmd_table1(s);
    else if (*growth) r = cmd_growth(s);
    else if (*periodcheck) r = cmd_periodcheck(s);
    s.persist();
    std::cout << render(r, cfg.format, cfg.timings);
    return r.pass ? kPass : kFail;
  } catch (const std::invalid_argument& e) {
    std::cerr << "maass-shift: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "maass-shift: " << e.what() << '\n';
    return kNumeric;
  }
}
