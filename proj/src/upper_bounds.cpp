#include "covdepth/upper_bounds.hpp"

#include <cmath>
#include <limits>
#include <map>
#include <mutex>
#include <random>

#include "covdepth/simplex.hpp"

namespace covdepth {

namespace {

double constraint_sum(int q, int k, const std::vector<double>& w) {
  double s = 0;
  for (int i = 1; i <= k; ++i)
    s += std::pow(q - 1, i) * static_cast<double>(binomial(k, i)) * w[i - 1];
  return s;
}

std::vector<double> renormalize(int q, int k, std::vector<double> w) {
  double s = constraint_sum(q, k, w);
  if (std::abs(s - 1.0) > 1e-3)
    throw ConstraintViolation("weight constraint off by " +
                              std::to_string(std::abs(s - 1.0)));
  for (double& x : w) x /= s;
  return w;
}

double positive_den(double d) {
  if (d <= 0) throw SingularDenominator("denominator " + std::to_string(d));
  return d;
}

// Census reduced to what the symmetric evaluation needs: per class the
// weight distribution and the combined factor h * count * dim_coeff.
struct SymmetricEvalTable {
  int k;
  struct Row {
    std::vector<long long> wd;
    double factor;
  };
  std::vector<Row> rows;
};

std::mutex table_mutex;
std::map<std::pair<int, int>, SymmetricEvalTable> table_store;

const SymmetricEvalTable& eval_table(int q, int k) {
  std::scoped_lock lock(table_mutex);
  auto key = std::make_pair(q, k);
  auto it = table_store.find(key);
  if (it != table_store.end()) return it->second;

  FieldPtr field = Field::make(q);
  WeightCensus census = weight_distribution_census(field, k);
  std::vector<double> dim_coeff(k, 0);
  for (int t = 1; t < k; ++t)
    for (int r = t; r <= k - 1; ++r)
      dim_coeff[t] +=
          (mobius_coeff(r, t, q) * chi(q, k, t, r)).convert_to<double>();
  SymmetricEvalTable table;
  table.k = k;
  for (const auto& [ck, count] : census) {
    if (ck.h == 0) continue;
    SymmetricEvalTable::Row row;
    row.wd = ck.wd;
    row.factor = static_cast<double>(count) * ck.h * dim_coeff[ck.dim];
    table.rows.push_back(std::move(row));
  }
  return table_store.emplace(key, std::move(table)).first->second;
}

double symmetric_value(const SymmetricEvalTable& table,
                       const std::vector<double>& w) {
  double acc = 0;
  for (const auto& row : table.rows) {
    double wu = 0;
    for (int i = 0; i < table.k; ++i)
      if (row.wd[i] != 0) wu += static_cast<double>(row.wd[i]) * w[i];
    acc += row.factor * wu / positive_den(1.0 - wu);
  }
  return 1.0 + acc / table.k;
}

}  // namespace

double eval_k3(int q, double w1, double w2, double w3) {
  auto w = renormalize(q, 3, {w1, w2, w3});
  w1 = w[0];
  w2 = w[1];
  w3 = w[2];
  double s = q - 1;
  return -2 * s / positive_den(1 - s * w1) -
         3 * s * s / positive_den(1 - s * w2) -
         s * s * s / positive_den(1 - s * w3) +
         2 * s / positive_den(1 - s * w1 - s * w2 - s * s * w3) +
         s * s / positive_den(1 - 3 * s * w2 - s * (q - 2) * w3) +
         1 / positive_den(1 - 2 * s * w1 - s * s * w2) + s * s * s +
         2 * s * s;
}

double symmetric_tmax(const SymmetricWeights& weights) {
  if (static_cast<int>(weights.w.size()) != weights.k)
    throw InvalidParams("expected k weight entries");
  auto w = renormalize(weights.q, weights.k, weights.w);
  return symmetric_value(eval_table(weights.q, weights.k), w);
}

BoundCertificate optimize_upper_bound(int q, int k, int restarts,
                                      std::uint64_t seed) {
  if (k != 3 && k != 4) throw InvalidParams("optimizer supports k in {3, 4}");
  const SymmetricEvalTable& table = eval_table(q, k);
  // free variables are w_2..w_k; w_1 closes the constraint
  double c1 = std::pow(q - 1, 1) * static_cast<double>(binomial(k, 1));
  std::vector<double> coef(k - 1);
  for (int i = 2; i <= k; ++i)
    coef[i - 2] = std::pow(q - 1, i) * static_cast<double>(binomial(k, i));

  auto objective = [&](const std::vector<double>& x) -> double {
    std::vector<double> w(k);
    double used = 0;
    for (int i = 0; i < k - 1; ++i) {
      double xi = std::max(x[i], 0.0);  // box projection
      w[i + 1] = xi;
      used += coef[i] * xi;
    }
    w[0] = (1.0 - used) / c1;
    if (w[0] < 0) return 1e6 * (1.0 - w[0]);
    try {
      return symmetric_value(table, w);
    } catch (const SingularDenominator&) {
      return 1e9;
    }
  };

  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unif(0.0, 0.9);
  BoundCertificate best;
  best.kind = "upper";
  best.value = std::numeric_limits<double>::infinity();
  best.provenance = "symmetric-construction-optimizer";
  for (int r = 0; r < restarts; ++r) {
    std::vector<double> start(k - 1);
    for (int i = 0; i < k - 1; ++i) start[i] = unif(rng) / coef[i];
    SimplexResult res = nelder_mead(objective, start);
    // recover the full witness from the free variables
    std::vector<double> w(k);
    double used = 0;
    for (int i = 0; i < k - 1; ++i) {
      w[i + 1] = std::max(res.x[i], 0.0);
      used += coef[i] * w[i + 1];
    }
    w[0] = (1.0 - used) / c1;
    if (res.value < best.value ||
        (res.value == best.value && w < best.witness)) {
      best.value = res.value;
      best.witness = w;
    }
  }
  return best;
}

double asymptotic_F(double lambda, double mu) {
  double d1 = positive_den(2.0 / 3.0 + lambda / 3.0 + mu);
  double d2 = positive_den(1.0 / 3.0 + 2.0 * lambda / 3.0 + mu);
  return -lambda + 6 * mu * mu + 6 * lambda * mu + lambda * lambda +
         2 * (lambda + mu) / (d1 * d1) + 1.0 / d2;
}

BoundCertificate optimize_asymptotic_F(int restarts, std::uint64_t seed) {
  auto objective = [](const std::vector<double>& x) -> double {
    try {
      return asymptotic_F(x[0], x[1]);
    } catch (const SingularDenominator&) {
      return 1e9;
    }
  };
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unif(0.0, 0.5);
  BoundCertificate best;
  best.kind = "upper";
  best.value = std::numeric_limits<double>::infinity();
  best.provenance = "asymptotic-F";
  for (int r = 0; r < restarts; ++r) {
    std::vector<double> start = {unif(rng), unif(rng)};
    SimplexResult res = nelder_mead(objective, start);
    if (res.value < best.value ||
        (res.value == best.value && res.x < best.witness)) {
      best.value = res.value;
      best.witness = res.x;
    }
  }
  return best;
}

}  // namespace covdepth
