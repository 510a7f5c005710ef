#include "covdepth/lattice.hpp"

#include "doctest.h"

using namespace covdepth;

TEST_CASE("gaussian binomials") {
  CHECK(gaussian_binomial(3, 1, 2) == 7);
  CHECK(gaussian_binomial(4, 2, 2) == 35);
  CHECK(gaussian_binomial(5, 0, 3) == 1);
  CHECK(gaussian_binomial(3, -1, 2) == 0);
  CHECK(gaussian_binomial(3, 4, 2) == 0);
  // duality
  for (int q : {2, 3, 4, 5})
    for (int k = 0; k <= 6; ++k)
      for (int r = 0; r <= k; ++r)
        CHECK(gaussian_binomial(k, r, q) == gaussian_binomial(k, k - r, q));
}

TEST_CASE("chi") {
  CHECK(chi(2, 3, 1, 1) == 1);
  CHECK(chi(2, 3, 2, 2) == 1);
  CHECK(chi(2, 3, 1, 2) == 2);
  CHECK_THROWS_AS(chi(2, 3, 2, 1), DimensionOutOfRange);
}

TEST_CASE("mobius coefficients") {
  CHECK(mobius_coeff(1, 1, 2) == 1);
  CHECK(mobius_coeff(2, 1, 5) == -1);
  CHECK(mobius_coeff(3, 1, 2) == 2);
  CHECK(mobius_coeff(4, 1, 3) == -27);
}

TEST_CASE("mobius-summed chi for q=2, k=3 collapses to -1 / +1") {
  // sum_r (-1)^(r-t) q^C(r-t,2) chi = -1 at t=1, +1 at t=2
  BigInt t1 = 0, t2 = 0;
  for (int r = 1; r <= 2; ++r) t1 += mobius_coeff(r, 1, 2) * chi(2, 3, 1, r);
  t2 += mobius_coeff(2, 2, 2) * chi(2, 3, 2, 2);
  CHECK(t1 == -1);
  CHECK(t2 == 1);
}

TEST_CASE("subspace counts match gaussian binomials") {
  for (int q : {2, 3, 4, 5}) {
    auto f = Field::make(q);
    for (int k = 1; k <= 4; ++k)
      for (int t = 0; t <= k; ++t) {
        auto subs = enumerate_subspaces(f, k, t);
        CHECK(BigInt(subs.size()) == gaussian_binomial(k, t, q));
      }
  }
}

TEST_CASE("trivial subspaces") {
  auto f3 = Field::make(3);
  auto zero = enumerate_subspaces(f3, 3, 0);
  REQUIRE(zero.size() == 1);
  CHECK(zero[0].dim == 0);
  auto full = enumerate_subspaces(f3, 3, 3);
  REQUIRE(full.size() == 1);
  CHECK(full[0].h() == 0);
}

TEST_CASE("subspace metadata is consistent") {
  for (int q : {2, 3}) {
    auto f = Field::make(q);
    for (int t = 1; t <= 2; ++t)
      for (const auto& s : enumerate_subspaces(f, 3, t)) {
        long long members = 0;
        for (long long c : s.wd) members += c;
        BigInt expect = 1;
        for (int i = 0; i < t; ++i) expect *= q;
        CHECK(BigInt(members) == expect - 1);
        std::vector<FqVector> basis;
        for (const auto& row : s.basis) basis.push_back({f, row});
        for (int i = 0; i < 3; ++i)
          CHECK(s.contains_ei[i] ==
                span_contains(basis, standard_basis_vector(f, 3, i)));
      }
  }
}

TEST_CASE("census reproduces the k=3 class table") {
  for (int q : {2, 3, 4, 5}) {
    auto f = Field::make(q);
    auto census = weight_distribution_census(f, 3);
    long long s = q - 1;
    auto count_of = [&](int dim, std::vector<long long> wd, int h) {
      auto it = census.find(CensusKey{dim, std::move(wd), h});
      return it == census.end() ? 0ll : it->second;
    };
    CHECK(count_of(1, {s, 0, 0}, 2) == 3);
    CHECK(count_of(1, {0, s, 0}, 3) == 3 * s);
    CHECK(count_of(1, {0, 0, s}, 3) == s * s);
    CHECK(count_of(2, {2 * s, s * s, 0}, 1) == 3);
    CHECK(count_of(2, {s, s, s * s}, 2) == 3 * s);
    CHECK(count_of(2, {0, 3 * s, s * (q - 2)}, 3) == s * s);
    // nothing beyond the six classes
    CHECK(census.size() == 6);
  }
}

TEST_CASE("census at q=2, k=3 distinguishes the e_i+e_j classes") {
  auto f2 = Field::make(2);
  auto census = weight_distribution_census(f2, 3);
  CHECK(census.at(CensusKey{1, {0, 1, 0}, 3}) == 3);
}

TEST_CASE("census guard refuses oversized enumerations") {
  auto f = Field::make(16);
  CHECK_THROWS_AS(weight_distribution_census(f, 6), EnumerationTooLarge);
}

TEST_CASE("lattice cache structure") {
  auto f2 = Field::make(2);
  const auto& cache = lattice_cache(f2, 3);
  CHECK(cache.class_reps.size() == 7);
  CHECK(cache.subspaces.size() == 14);  // 7 lines + 7 planes
  CHECK(cache.dim_coeff[1] == -1);
  CHECK(cache.dim_coeff[2] == 1);
  for (const auto& s : cache.subspaces)
    CHECK(s.classes.size() == (1u << s.dim) - 1);  // projective points over GF(2)
}
