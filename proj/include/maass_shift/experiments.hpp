#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "maass_shift/shifted_convolution.hpp"

namespace maass_shift {

enum class OutputFormat { csv, json };

struct RunConfig {
  Bits bits = 512;
  long q_length = 1100;
  long c_max = 4000;
  double abs_tolerance = 1e-30;
  long direct_N = 100000;
  long projection_m_max = 200000;
  std::vector<long> h_list;
  OutputFormat format = OutputFormat::csv;
  std::string cache_dir;  // empty: no cache
  bool timings = false;   // wall times make output run dependent

  // Throws std::invalid_argument on non-positive truncations.
  void validate() const;
};

// One number with the route or method that produced it.
struct ResultCell {
  std::string name;
  std::string route;
  std::string value;
  std::string imag;  // empty for real or exact values
  std::optional<double> error;
};

struct ResultRow {
  long index = 0;
  std::vector<ResultCell> cells;
  double wall_seconds = 0;
};

struct Report {
  std::string title;
  std::vector<ResultRow> rows;
  std::map<std::string, std::string> summary;
  bool pass = true;
};

std::string render(const Report& r, OutputFormat fmt, bool timings = false);

// Shared forms, the calibrated harmonic Maass form and its coefficient cache.
class Session {
 public:
  explicit Session(RunConfig cfg);
  ~Session();

  const RunConfig& config() const { return cfg_; }
  PrecisionContext context() const;
  // Delta with at least max(N, q_length) coefficients.
  const CuspForm& delta(long N = 0);
  // Calibrated through the series route; loads the cache on first use.
  HarmonicMaassForm& hmf();
  // Uncalibrated form with a shadow long enough for projection_dhat.
  const HarmonicMaassForm& projection_form();
  // Writes the coefficient cache when a directory is configured.
  void persist();

 private:
  RunConfig cfg_;
  std::unique_ptr<CuspForm> delta_;
  std::unique_ptr<HarmonicMaassForm> hmf_;
  std::unique_ptr<HarmonicMaassForm> proj_;
};

struct LinearFit {
  double slope = 0;
  double intercept = 0;
  double slope_stderr = 0;
  double ci_low = 0, ci_high = 0;  // 95 %
  long points = 0;
};

// Least squares fit of log|y| against log x.
LinearFit loglog_fit(const std::vector<double>& x, const std::vector<double>& y);

// Significant-digit agreement: |a - b| <= 5 * 10^-digits * |b|.
bool agrees_to_digits(double a, double b, int digits);

// Published reference rows: n, Poincare coefficient, Dhat.
struct Table1Reference {
  long n;
  double poincare;
  double dhat;
};
const std::vector<Table1Reference>& table1_reference();

Report cmd_tau(Session& s, long max_n);
Report cmd_periods(Session& s);
Report cmd_poincare(Session& s, const std::vector<long>& n_list);
Report cmd_dhat(Session& s, const std::vector<long>& h_list, const std::string& route);
Report cmd_table1(Session& s);
Report cmd_growth(Session& s);
Report cmd_periodcheck(Session& s);

}  // namespace maass_shift
