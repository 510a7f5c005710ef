#ifndef COVDEPTH_LOWER_BOUNDS_HPP
#define COVDEPTH_LOWER_BOUNDS_HPP

#include <map>

#include "covdepth/rational.hpp"

namespace covdepth {

/// Per-r breakdown of the min-over-r average-case lower bound. The bound
/// is alphabet-independent: no formula below mentions q.
struct LowerBoundReport {
  long long n = 0;
  long long k = 0;
  std::map<long long, Rational> per_r;  // bracketed expression per r in [1, k]
  Rational value;                       // min over per_r
  long long argmin_r = 0;
};

/// Min-over-r lower bound on T_ave(q, n, k); requires n >= k + 1.
LowerBoundReport theorem2_bound(long long n, long long k);

/// Baseline: max{(k+1)/2, n - (n(n-k)/k)(H_n - H_{n-k})}; requires n >= k.
Rational prior_bound(long long n, long long k);

/// Simplified bound: baseline coupon-collector term plus
/// min{(k^2-1)/(3(n-1)(n-2)), (n-k)/(k(n-1))}; requires n >= k + 1.
Rational simple_bound(long long n, long long k);

/// Count floor for s-subsets spanning a nonstandard space, given the
/// minimal r with an r-dimensional subspace holding r+1 columns.
/// Binomials with negative lower index are 0.
BigInt zeta_lower_bound(long long n, long long k, long long r, long long s);

struct GapReport {
  long long n = 0, k = 0;
  Rational bound;    // theorem2 value
  Rational base;     // n - (n(n-k)/k)(H_n - H_{n-k})
  Rational gap;      // bound - base
  double target = 0; // ln 3 - ln 2, the large-k limit of the gap
};

/// Additive-gap view at n = k + c. The target is asymptotic and reported,
/// not asserted.
GapReport constant_gap_check(long long k, long long c);

}  // namespace covdepth

#endif
