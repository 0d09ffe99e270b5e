#include "maass_shift/modular_forms.hpp"

#include <memory>
#include <mutex>
#include <stdexcept>

namespace maass_shift {

namespace {

// Dense truncated product of coefficient vectors.
std::vector<mpz_class> mul(const std::vector<mpz_class>& a, const std::vector<mpz_class>& b, long N) {
  std::vector<mpz_class> r(static_cast<std::size_t>(N + 1));
  for (long i = 0; i <= N; ++i) {
    if (a[i] == 0) continue;
    for (long j = 0; i + j <= N; ++j) {
      if (b[j] != 0) mpz_addmul(r[i + j].get_mpz_t(), a[i].get_mpz_t(), b[j].get_mpz_t());
    }
  }
  return r;
}

}  // namespace

CuspForm delta_expansion(long N) {
  if (N < 1) throw std::invalid_argument("delta_expansion: N must be positive");
  if (N > kProductExpansionLimit) {
    // Jacobi-identity table; agrees with the product below (tested).
    const TauTable& t = TauTable::get(N);
    CuspForm f;
    f.weight = 12;
    f.fourier = ExactSeries(1, N);
    for (long n = 1; n <= N; ++n) f.fourier.set(n, t.exact(n));
    return f;
  }
  // prod_{n <= N-1} (1 - q^n) through q^{N-1}; coefficients stay in {-1,0,1}.
  const long M = N - 1;
  std::vector<long> e(static_cast<std::size_t>(M + 1), 0);
  e[0] = 1;
  for (long n = 1; n <= M; ++n)
    for (long i = M; i >= n; --i) e[i] -= e[i - n];
  std::vector<mpz_class> p1(e.begin(), e.end());
  auto p2 = mul(p1, p1, M);
  auto p4 = mul(p2, p2, M);
  auto p8 = mul(p4, p4, M);
  auto p16 = mul(p8, p8, M);
  auto p24 = mul(p16, p8, M);
  CuspForm f;
  f.weight = 12;
  f.fourier = ExactSeries(1, N);
  for (long n = 1; n <= N; ++n)
    if (p24[n - 1] != 0) f.fourier.set(n, p24[n - 1]);
  return f;
}

CuspForm zero_cusp_form(int weight, long N) {
  CuspForm f;
  f.weight = weight;
  f.fourier = ExactSeries(1, N);
  return f;
}

std::vector<mpz_class> divisor_sums(int p, long N) {
  std::vector<mpz_class> s(static_cast<std::size_t>(N + 1), 0);
  for (long d = 1; d <= N; ++d) {
    mpz_class dp;
    mpz_ui_pow_ui(dp.get_mpz_t(), static_cast<unsigned long>(d), static_cast<unsigned long>(p));
    for (long m = d; m <= N; m += d) s[m] += dp;
  }
  return s;
}

EisensteinSeries eisenstein(int weight, long N) {
  long mult = 0;
  switch (weight) {
    case 2: mult = -24; break;
    case 4: mult = 240; break;
    case 6: mult = -504; break;
    default: throw std::invalid_argument("eisenstein: weight must be 2, 4 or 6");
  }
  if (N < 1) throw std::invalid_argument("eisenstein: N must be positive");
  auto sig = divisor_sums(weight - 1, N);
  EisensteinSeries e;
  e.weight = weight;
  e.fourier = ExactSeries(0, N);
  e.fourier.set(0, 1);
  for (long n = 1; n <= N; ++n) e.fourier.set(n, sig[n] * mult);
  return e;
}

Complex e2_star(const Complex& tau, long N, const PrecisionContext& ctx) {
  static std::mutex mu;
  static std::unique_ptr<EisensteinSeries> cached;
  EisensteinSeries e2;
  {
    std::lock_guard lock(mu);
    if (!cached || cached->fourier.truncation_order() < N) cached = std::make_unique<EisensteinSeries>(eisenstein(2, N));
    e2 = *cached;
  }
  // |sigma_1(n)| <= n^2.
  Complex v = evaluate(e2.fourier.truncated(N), tau, ctx, {std::log(24.0), 2.0, 0.0});
  Real corr = 3L / (Real::pi(ctx.bits()) * tau.im());
  v.re() -= corr;
  return v;
}

mpz_class to_mpz(__int128 v) {
  bool neg = v < 0;
  unsigned __int128 u = neg ? -static_cast<unsigned __int128>(v) : static_cast<unsigned __int128>(v);
  mpz_class hi(static_cast<unsigned long>(u >> 64));
  mpz_class lo(static_cast<unsigned long>(u & ~0UL));
  mpz_class r = (hi << 64) + lo;
  return neg ? mpz_class(-r) : r;
}

mpz_class TauTable::exact(long n) const { return to_mpz((*this)[n]); }

TauTable::TauTable(long N) {
  if (N < 1) throw std::invalid_argument("TauTable: N must be positive");
  const long M = N - 1;  // theta^8 through q^M
  std::vector<long> idx;
  std::vector<__int128> val;
  for (long k = 0; k * (k + 1) / 2 <= M; ++k) {
    idx.push_back(k * (k + 1) / 2);
    val.push_back((k % 2 == 0 ? 1 : -1) * (2 * k + 1));
  }
  std::vector<__int128> cur(static_cast<std::size_t>(M + 1), 0);
  for (std::size_t t = 0; t < idx.size(); ++t) cur[idx[t]] = val[t];
  for (int step = 0; step < 7; ++step) {
    std::vector<__int128> next(static_cast<std::size_t>(M + 1), 0);
    for (std::size_t t = 0; t < idx.size(); ++t) {
      const long s = idx[t];
      const __int128 v = val[t];
      for (long i = 0; i + s <= M; ++i) {
        __int128 prod;
        if (__builtin_mul_overflow(v, cur[i], &prod) || __builtin_add_overflow(next[i + s], prod, &next[i + s]))
          throw OverflowError("TauTable: 128-bit overflow");
      }
    }
    cur = std::move(next);
  }
  v_.assign(static_cast<std::size_t>(N + 1), 0);
  for (long n = 1; n <= N; ++n) v_[n] = cur[n - 1];
}

const TauTable& TauTable::get(long N) {
  static std::mutex mu;
  static std::shared_ptr<const TauTable> table;
  std::lock_guard lock(mu);
  if (!table || table->size() < N) {
    // Grow geometrically so repeated requests stay cheap.
    long target = table ? std::max(N, 2 * table->size()) : N;
    auto fresh = std::make_shared<const TauTable>(target);
    // Old tables stay alive: callers may hold references.
    static std::vector<std::shared_ptr<const TauTable>> keep;
    if (table) keep.push_back(table);
    table = std::move(fresh);
  }
  return *table;
}

}  // namespace maass_shift
