#ifndef COVDEPTH_EXPECTATION_HPP
#define COVDEPTH_EXPECTATION_HPP

#include <cstdint>
#include <map>
#include <vector>

#include "covdepth/lattice.hpp"

namespace covdepth {

/// k x n generator matrix over GF(q). Columns are the sampled objects.
/// Indices i into [0, k) refer to the standard basis vector e_i (the CLI
/// surfaces them 1-based).
struct GeneratorMatrix {
  FieldPtr field;
  int k = 0;
  int n = 0;
  std::vector<FqVector> columns;
};

/// Builds a matrix from row-major entries; validates ranges.
GeneratorMatrix make_matrix(const FieldPtr& field,
                            const std::vector<std::vector<int>>& rows);

/// Column frequencies grouped by projective class (representative has
/// first nonzero coordinate 1). Scaling a column never changes any span,
/// so the expectations depend only on this profile.
struct WeightProfile {
  FieldPtr field;
  int k = 0;
  int n = 0;
  std::map<std::vector<int>, Rational> weights;
};

/// Throws ZeroColumn on a zero column, RankDeficient when rank < k.
WeightProfile weight_profile(const GeneratorMatrix& g);

/// Exact E[tau_i] via the subspace-lattice formula (the O(n) path).
Rational expected_samples(const WeightProfile& profile, int i);

Rational t_max(const WeightProfile& profile);

/// Single h(U)-weighted pass; equals the mean of the k expectations.
Rational t_ave(const WeightProfile& profile);

/// Number of s-subsets of columns whose span contains e_i, by brute-force
/// subset enumeration. Guard n <= 20.
BigInt alpha_oracle(const GeneratorMatrix& g, int i, int s);

/// Independent brute-force expectation: n H_n - sum_s alpha_i^s / C(n-1, s).
Rational expected_samples_oracle(const GeneratorMatrix& g, int i);

/// Number of s-subsets of columns whose span is not a min{s, k}-dimensional
/// standard subspace. Guard n <= 20.
BigInt zeta(const GeneratorMatrix& g, int s);

struct SimulationResult {
  double mean = 0;
  double stderr_of_mean = 0;
  long long trials = 0;
};

/// Monte Carlo retrieval sampler. Episode e uses a std::mt19937_64 seeded
/// with seed ^ e; column draws are generator() % n. Bit-identical for
/// identical (seed, G, i, trials).
SimulationResult simulate(const GeneratorMatrix& g, int i, long long trials,
                          std::uint64_t seed);

/// [e_1, ..., e_k, e_1 + ... + e_r]: the (k+1)-column parity-style matrix.
GeneratorMatrix g_r_matrix(const FieldPtr& field, int k, int r);

}  // namespace covdepth

#endif
