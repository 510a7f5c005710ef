#include "covdepth/upper_bounds.hpp"

#include <cmath>
#include <random>

#include "doctest.h"

using namespace covdepth;

namespace {

struct TabRow {
  int q;
  double tmax, w1, w2, w3;
};

// published k=3 upper bounds with their weight witnesses
const TabRow kTab[] = {
    {2, 2.7789, 0.2382, 0.0785, 0.0500}, {3, 2.7240, 0.1057, 0.0232, 0.0109},
    {4, 2.7006, 0.0665, 0.0110, 0.0039}, {5, 2.6878, 0.0482, 0.0065, 0.0017},
    {7, 2.6742, 0.0308, 0.0031, 0.0005}, {8, 2.6702, 0.0261, 0.0023, 0.0003},
};

// draws a triple satisfying the constraint exactly by scaling
std::vector<double> random_feasible(int q, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> unif(0.01, 1.0);
  double s = q - 1;
  std::vector<double> x = {unif(rng), unif(rng), unif(rng)};
  double total = 3 * s * x[0] + 3 * s * s * x[1] + s * s * s * x[2];
  for (double& v : x) v /= total;
  return x;
}

}  // namespace

TEST_CASE("published k=3 weight rows reproduce the tabulated bounds") {
  for (const auto& row : kTab) {
    // the rounded rows can miss the constraint by more than the 1e-3
    // entry guard (up to ~1e-2 at q=8), so scale onto it first
    double s = row.q - 1;
    double total = 3 * s * row.w1 + 3 * s * s * row.w2 + s * s * s * row.w3;
    double v = eval_k3(row.q, row.w1 / total, row.w2 / total, row.w3 / total);
    CHECK(std::abs(v - row.tmax) <= 2e-3);
    SymmetricWeights sw{row.q, 3,
                        {row.w1 / total, row.w2 / total, row.w3 / total}};
    CHECK(std::abs(symmetric_tmax(sw) - v) <= 1e-9);
  }
}

TEST_CASE("unit-vector-only weights collapse to coupon collection") {
  CHECK(eval_k3(2, 1.0 / 3.0, 0, 0) == doctest::Approx(3.0).epsilon(1e-12));
  SymmetricWeights sw3{2, 3, {1.0 / 3.0, 0, 0}};
  CHECK(symmetric_tmax(sw3) == doctest::Approx(3.0).epsilon(1e-12));
  SymmetricWeights sw4{2, 4, {0.25, 0, 0, 0}};
  CHECK(symmetric_tmax(sw4) == doctest::Approx(4.0).epsilon(1e-12));
}

TEST_CASE("q=2 closed form matches the seven-term display term for term") {
  std::mt19937_64 rng(71);
  for (int trial = 0; trial < 50; ++trial) {
    auto w = random_feasible(2, rng);
    double display = -2 / (1 - w[0]) - 3 / (1 - w[1]) - 1 / (1 - w[2]) +
                     1 / (1 - 2 * w[0] - w[1]) +
                     2 / (1 - w[0] - w[1] - w[2]) + 1 / (1 - 3 * w[1]) + 3;
    CHECK(std::abs(eval_k3(2, w[0], w[1], w[2]) - display) <= 1e-12);
  }
}

TEST_CASE("closed form and census evaluation are path-equivalent") {
  std::mt19937_64 rng(20240818);
  for (int q : {2, 3, 4, 5, 7, 8}) {
    for (int trial = 0; trial < 100; ++trial) {
      auto w = random_feasible(q, rng);
      double a = eval_k3(q, w[0], w[1], w[2]);
      double b = symmetric_tmax(SymmetricWeights{q, 3, w});
      CHECK(std::abs(a - b) <= 1e-9);
    }
  }
}

TEST_CASE("optimizer matches or beats every tabulated k=3 bound") {
  for (const auto& row : kTab) {
    auto cert = optimize_upper_bound(row.q, 3);
    CHECK(cert.value <= row.tmax + 1e-3);
    CHECK(cert.value > 2.0);  // sanity: bounded below by the trivial floor
    // closed loop: witness re-evaluates to the reported value
    SymmetricWeights sw{row.q, 3, cert.witness};
    CHECK(std::abs(symmetric_tmax(sw) - cert.value) <= 1e-9);
  }
}

TEST_CASE("optimizer is deterministic for a fixed seed") {
  auto a = optimize_upper_bound(3, 3, 8, 99);
  auto b = optimize_upper_bound(3, 3, 8, 99);
  CHECK(a.value == b.value);
  CHECK(a.witness == b.witness);
}

TEST_CASE("k=4 bounds improve with the field size") {
  auto c4 = optimize_upper_bound(4, 4, 12);
  auto c8 = optimize_upper_bound(8, 4, 12);
  auto c16 = optimize_upper_bound(16, 4, 12);
  CHECK(c8.value < c4.value);
  CHECK(c16.value < c8.value);
  CHECK(c16.value <= c4.value - 1e-3);
}

TEST_CASE("asymptotic certificate") {
  CHECK(asymptotic_F(0, 0) == doctest::Approx(3.0).epsilon(1e-12));
  CHECK(asymptotic_F(0.06679, 0.1509) < 2.6433);
  auto cert = optimize_asymptotic_F();
  CHECK(cert.value <= 2.6433);
  CHECK(std::abs(asymptotic_F(cert.witness[0], cert.witness[1]) - cert.value) <=
        1e-9);
  auto again = optimize_asymptotic_F();
  CHECK(again.value == cert.value);
  CHECK(again.witness == cert.witness);
}

TEST_CASE("guards") {
  CHECK_THROWS_AS(eval_k3(2, 0.5, 0.5, 0.5), ConstraintViolation);
  // on the constraint but with a vanishing denominator
  CHECK_THROWS_AS(eval_k3(2, 0, 0, 1), SingularDenominator);
  CHECK_THROWS_AS(symmetric_tmax(SymmetricWeights{2, 3, {0.5, 0.5}}),
                  InvalidParams);
  CHECK_THROWS_AS(optimize_upper_bound(2, 5), InvalidParams);
  CHECK_THROWS_AS(asymptotic_F(-2.0, 0.0), SingularDenominator);
}
