#include "covdepth/lower_bounds.hpp"

#include <cmath>
#include <vector>

#include "covdepth/errors.hpp"

namespace covdepth {

namespace {

// n - (n(n-k)/k)(H_n - H_{n-k}): the coupon-collector base term.
Rational base_term(long long n, long long k) {
  return Rational(n) -
         Rational(n * (n - k), k) * (harmonic(n) - harmonic(n - k));
}

}  // namespace

BigInt zeta_lower_bound(long long n, long long k, long long r, long long s) {
  if (r < 1 || s < r || s > k)
    throw InvalidParams("need 1 <= r <= s <= k");
  BigInt total = binomial(n - (r + 1), s - (r + 1));
  for (long long t = 1; t <= r - 1; ++t)
    total += binomial(r, t - 1) * binomial(k - r, s - t);
  return total;
}

LowerBoundReport theorem2_bound(long long n, long long k) {
  if (k < 1 || n < k + 1) throw InvalidParams("need n >= k + 1 >= 2");
  LowerBoundReport report;
  report.n = n;
  report.k = k;
  Rational base = base_term(n, k);

  std::vector<BigInt> fact(n + 1);
  fact[0] = 1;
  for (long long i = 1; i <= n; ++i) fact[i] = fact[i - 1] * i;
  auto binom = [&](long long a, long long b) -> BigInt {
    if (b < 0 || b > a) return 0;
    return fact[a] / (fact[b] * fact[a - b]);
  };

  // accumulate each per-r sum over the common denominator k * (n-1)!;
  // the term for size s carries the factor s! (n-1-s)!
  std::vector<BigInt> scale(k + 1);
  for (long long s = 1; s <= k; ++s) scale[s] = fact[s] * fact[n - 1 - s];
  BigInt den = BigInt(k) * fact[n - 1];

  for (long long r = 1; r <= k; ++r) {
    BigInt total = 0;
    for (long long s = 1; s <= r - 1; ++s)
      total += (binom(n, s) - binom(k, s)) * scale[s];
    for (long long s = r; s <= k; ++s) {
      // Vandermonde collapse of sum_{t=1}^{r-1} C(r,t-1) C(k-r,s-t)
      BigInt num = binom(n - (r + 1), s - (r + 1)) + binom(k, s - 1) -
                   r * binom(k - r, s - r) - binom(k - r, s - r - 1);
      total += num * scale[s];
    }
    Rational v = base + Rational(total, den);
    report.per_r[r] = v;
    if (report.argmin_r == 0 || v < report.value) {
      report.value = v;
      report.argmin_r = r;
    }
  }
  return report;
}

Rational prior_bound(long long n, long long k) {
  if (k < 1 || n < k) throw InvalidParams("need n >= k >= 1");
  Rational half = Rational(k + 1, 2);
  Rational base = base_term(n, k);
  return std::max(half, base);
}

Rational simple_bound(long long n, long long k) {
  if (k < 1 || n < k + 1) throw InvalidParams("need n >= k + 1");
  Rational a = Rational(k * k - 1, 3 * (n - 1) * (n - 2));
  Rational b = Rational(n - k, k * (n - 1));
  return base_term(n, k) + std::min(a, b);
}

GapReport constant_gap_check(long long k, long long c) {
  if (c < 2) throw InvalidParams("need c >= 2");
  long long n = k + c;
  GapReport report;
  report.n = n;
  report.k = k;
  report.base = base_term(n, k);
  report.bound = theorem2_bound(n, k).value;
  report.gap = report.bound - report.base;
  report.target = std::log(3.0) - std::log(2.0);
  return report;
}

}  // namespace covdepth
