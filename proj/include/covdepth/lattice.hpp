#ifndef COVDEPTH_LATTICE_HPP
#define COVDEPTH_LATTICE_HPP

#include <cstdint>
#include <functional>
#include <map>
#include <vector>

#include "covdepth/gf.hpp"
#include "covdepth/rational.hpp"

namespace covdepth {

/// Gaussian binomial [k choose r]_q; 0 when r < 0 or r > k.
BigInt gaussian_binomial(long long k, long long r, long long q);

/// chi_q(k, t, r) = [k-t choose r-t]_q - [k-t-1 choose r-t-1]_q: the number
/// of r-dimensional spaces containing a fixed t-dimensional U (with some
/// e_i outside U) while still avoiding e_i. Requires 1 <= t <= r <= k-1.
BigInt chi(int q, int k, int t, int r);

/// Moebius coefficient of the subspace lattice: (-1)^(r-t) * q^C(r-t, 2).
BigInt mobius_coeff(long long r, long long t, long long q);

/// A t-dimensional subspace of F_q^k in canonical RREF form, with cached
/// standard-basis membership and weight distribution.
struct Subspace {
  FieldPtr field;
  int ambient_dim = 0;  // k
  int dim = 0;          // t
  std::vector<std::vector<int>> basis;  // t rows of length k, RREF
  std::vector<bool> contains_ei;        // contains_ei[i] iff e_i in U
  std::vector<long long> wd;            // wd[w-1] = #{u in U : wt(u) = w}

  /// Number of standard basis vectors outside the subspace.
  int h() const;
};

/// Calls fn once per t-dimensional subspace, in canonical RREF order.
void for_each_subspace(const FieldPtr& field, int k, int t,
                       const std::function<void(const Subspace&)>& fn);

std::vector<Subspace> enumerate_subspaces(const FieldPtr& field, int k, int t);

/// Census class key: (dimension, weight distribution, h).
struct CensusKey {
  int dim;
  std::vector<long long> wd;
  int h;

  auto operator<=>(const CensusKey&) const = default;
};

using WeightCensus = std::map<CensusKey, long long>;

/// Groups all proper nonzero subspaces of F_q^k by (dim, wd, h).
/// Refuses with EnumerationTooLarge when the subspace count exceeds 10^7.
WeightCensus weight_distribution_census(const FieldPtr& field, int k);

/// Precomputed per-(q, k) data shared by the expectation and search paths.
struct SubspaceClassInfo {
  int dim = 0;
  int h = 0;
  std::uint32_t ei_mask = 0;  // bit i set iff e_i in U
  std::vector<int> classes;   // projective class indices inside U
  std::vector<long long> wd;
};

struct LatticeCache {
  FieldPtr field;
  int k = 0;
  std::vector<std::vector<int>> class_reps;  // first nonzero coord = 1, lex order
  std::map<std::vector<int>, int> class_index;
  std::vector<SubspaceClassInfo> subspaces;  // dims 1..k-1
  std::vector<BigInt> dim_coeff;  // dim_coeff[t] = sum_r mobius_coeff * chi
};

/// Memoized; safe to call concurrently. Subject to the same 10^7 guard.
const LatticeCache& lattice_cache(const FieldPtr& field, int k);

}  // namespace covdepth

#endif
