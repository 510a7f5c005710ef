#include "covdepth/lower_bounds.hpp"

#include "covdepth/expectation.hpp"
#include "doctest.h"

using namespace covdepth;

TEST_CASE("n=4, k=3 per-r table is {10/3, 28/9, 3} with min 3") {
  auto report = theorem2_bound(4, 3);
  CHECK(report.per_r.at(1) == Rational(10, 3));
  CHECK(report.per_r.at(2) == Rational(28, 9));
  CHECK(report.per_r.at(3) == Rational(3));
  CHECK(report.value == 3);
  CHECK(report.argmin_r == 3);
}

TEST_CASE("bound at n = k+1 is exactly k") {
  for (long long k = 2; k <= 200; ++k)
    CHECK(theorem2_bound(k + 1, k).value == k);
}

TEST_CASE("tightness from the construction side") {
  auto f2 = Field::make(2);
  for (int k = 2; k <= 10; ++k)
    CHECK(t_ave(weight_profile(g_r_matrix(f2, k, k))) == k);
}

TEST_CASE("k=100 comparison rows to two decimals") {
  const char* theorem2_expect[] = {"100.00", "95.28", "93.03", "91.28", "89.79"};
  const char* prior_expect[] = {"96.76", "94.44", "92.55", "90.92", "89.50"};
  for (int c = 1; c <= 5; ++c) {
    CHECK(decimal_fixed(theorem2_bound(100 + c, 100).value, 2) ==
          theorem2_expect[c - 1]);
    CHECK(decimal_fixed(prior_bound(100 + c, 100), 2) == prior_expect[c - 1]);
  }
}

TEST_CASE("prior bound") {
  CHECK(prior_bound(4, 3) == Rational(23, 9));
  CHECK(prior_bound(5, 5) == 5);  // n = k: the harmonic term vanishes
  // for n >> k the base term stays just above (k+1)/2 and keeps winning
  Rational base100 =
      Rational(100) - Rational(100 * 97, 3) * (harmonic(100) - harmonic(97));
  CHECK(base100 > 2);
  CHECK(prior_bound(100, 3) == base100);
}

TEST_CASE("simplified bound") {
  CHECK(simple_bound(4, 3) == Rational(8, 3));
  // min{9999/29700, 1/10000} = (n-k)/(k(n-1)) here
  CHECK(simple_bound(101, 100) ==
        prior_bound(101, 100) + Rational(1, 10000));
  for (long long k : {3ll, 10ll, 50ll})
    for (long long n = k + 1; n <= k + 6; ++n)
      CHECK(simple_bound(n, k) <= theorem2_bound(n, k).value);
}

TEST_CASE("theorem2 dominates the prior bound near n = k") {
  for (long long k : {10ll, 50ll, 100ll})
    for (long long n = k + 1; n <= k + 5; ++n)
      CHECK(theorem2_bound(n, k).value >= prior_bound(n, k));
}

TEST_CASE("zeta floor") {
  CHECK(zeta_lower_bound(5, 3, 1, 2) == binomial(3, 0));
  CHECK(zeta_lower_bound(5, 3, 1, 3) == binomial(3, 1));
  // r = k = s: both routes give 0 here (the parity matrix has no bad sets)
  CHECK(zeta_lower_bound(4, 3, 3, 3) == 0);
  CHECK(binomial(3, 2) - 3 * binomial(0, 0) == 0);
}

TEST_CASE("zeta floor is a genuine lower bound on zeta") {
  // exhaust GF(2), k <= 3 matrices with n <= 7 given as column multisets
  auto f2 = Field::make(2);
  for (int k = 2; k <= 3; ++k) {
    int nvec = (1 << k) - 1;
    for (int n = k + 1; n <= 7; ++n) {
      std::vector<int> counts(nvec, 0);
      counts[0] = n;
      while (true) {
        std::vector<std::vector<int>> rows(k);
        for (int v = 1; v <= nvec; ++v)
          for (int c = 0; c < counts[v - 1]; ++c)
            for (int b = 0; b < k; ++b) rows[b].push_back((v >> b) & 1);
        auto g = make_matrix(f2, rows);
        if (rank(g.columns) == k) {
          // minimal r with some r-dim subspace holding r+1 columns
          int rmin = 0;
          for (int r = 1; r <= k && rmin == 0; ++r) {
            // any r+1 columns of rank <= r witness it
            std::vector<int> idx(r + 1);
            for (int i = 0; i <= r; ++i) idx[i] = i;
            while (rmin == 0) {
              std::vector<FqVector> sub;
              for (int i : idx) sub.push_back(g.columns[i]);
              if (covdepth::rank(sub) <= r) rmin = r;
              int i = r;
              while (i >= 0 && idx[i] == n - (r + 1) + i) --i;
              if (i < 0) break;
              ++idx[i];
              for (int j = i + 1; j <= r; ++j) idx[j] = idx[j - 1] + 1;
            }
          }
          REQUIRE(rmin >= 1);
          for (int s = rmin + 1; s <= k; ++s)
            CHECK(zeta_lower_bound(n, k, rmin, s) <= zeta(g, s));
        }
        // next count multiset (odometer with fixed total n)
        int pos = 0;
        for (;; ++pos) {
          if (pos == nvec - 1) break;
          if (counts[pos] > 0) break;
        }
        if (pos == nvec - 1) break;
        int freed = counts[pos];
        counts[pos] = 0;
        counts[pos + 1] += 1;
        counts[0] = freed - 1;
      }
    }
  }
}

TEST_CASE("constant-gap view") {
  auto g = constant_gap_check(1000, 2);
  CHECK(g.gap >= Rational(2, 5));  // ln 3 - ln 2 ~ 0.405 in the limit
  CHECK(g.bound - g.base == g.gap);
  auto g100 = constant_gap_check(100, 5);
  CHECK(decimal_fixed(g100.bound, 2) == "89.79");
}

TEST_CASE("closed form of S(r) at n = k + 1") {
  // theorem2 per-r minus the base equals (k+1)/k H_k - 1 - r(k+1)/(k(r+1))
  for (long long k = 2; k <= 50; ++k) {
    auto report = theorem2_bound(k + 1, k);
    Rational base =
        Rational(k + 1) - Rational(k + 1, k) * (harmonic(k + 1) - harmonic(1));
    for (long long r = 1; r <= k; ++r) {
      Rational s_closed = Rational(k + 1, k) * harmonic(k) - 1 -
                          Rational(r * (k + 1), k * (r + 1));
      CHECK(report.per_r.at(r) - base == s_closed);
    }
  }
}

TEST_CASE("invalid parameters") {
  CHECK_THROWS_AS(theorem2_bound(3, 3), InvalidParams);
  CHECK_THROWS_AS(simple_bound(3, 3), InvalidParams);
  CHECK_THROWS_AS(prior_bound(2, 3), InvalidParams);
  CHECK_THROWS_AS(zeta_lower_bound(5, 3, 2, 1), InvalidParams);
  CHECK_THROWS_AS(zeta_lower_bound(5, 3, 2, 4), InvalidParams);
}
