#pragma once

#include <vector>

#include "maass_shift/numerics.hpp"
#include "maass_shift/qseries.hpp"

namespace maass_shift {

// Level one cusp form with exact integer coefficients a(n), n >= 1.
struct CuspForm {
  int weight = 12;
  ExactSeries fourier{1, 0};

  long length() const { return fourier.truncation_order(); }
  mpz_class a(long n) const { return n < 1 ? mpz_class(0) : fourier.coefficient(n); }
  bool is_zero() const { return fourier.terms().empty(); }
};

struct EisensteinSeries {
  int weight = 4;
  ExactSeries fourier{0, 0};
};

// Largest N for which delta_expansion multiplies out the product; beyond it
// the coefficients come from TauTable.
inline constexpr long kProductExpansionLimit = 3000;

// q prod (1 - q^n)^24 through q^N.
CuspForm delta_expansion(long N);
// The zero form of the given weight, known through q^N.
CuspForm zero_cusp_form(int weight, long N);

EisensteinSeries eisenstein(int weight, long N);

// E2(tau) - 3 / (pi Im tau) from the first N coefficients.
Complex e2_star(const Complex& tau, long N, const PrecisionContext& ctx);

// sigma_p(n) for n = 0..N (entry 0 unused).
std::vector<mpz_class> divisor_sums(int p, long N);

// tau(n) for 0 <= n <= N from q * theta^8, theta = prod (1 - q^n)^3 summed by
// Jacobi's identity. Exact in 128-bit integers; overflow raises
// OverflowError. Results are memoised process-wide.
class TauTable {
 public:
  static const TauTable& get(long N);

  long size() const { return static_cast<long>(v_.size()) - 1; }
  __int128 operator[](long n) const { return v_.at(static_cast<std::size_t>(n)); }
  mpz_class exact(long n) const;
  double as_double(long n) const { return static_cast<double>(v_.at(static_cast<std::size_t>(n))); }

  explicit TauTable(long N);

 private:
  std::vector<__int128> v_;
};

mpz_class to_mpz(__int128 v);

}  // namespace maass_shift
