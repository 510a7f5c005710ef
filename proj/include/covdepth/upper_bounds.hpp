#ifndef COVDEPTH_UPPER_BOUNDS_HPP
#define COVDEPTH_UPPER_BOUNDS_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "covdepth/lattice.hpp"

namespace covdepth {

/// Symmetric weight assignment: every vector of Hamming weight i gets
/// weight w[i-1]; feasible when sum_i (q-1)^i C(k,i) w_i = 1.
struct SymmetricWeights {
  int q = 0;
  int k = 0;
  std::vector<double> w;  // length k, w[i-1] is the weight-i value
};

struct BoundCertificate {
  std::string kind;  // "upper" | "lower"
  double value = 0;
  std::vector<double> witness;
  std::string provenance;
};

/// Closed-form k=3 upper bound at the given (renormalized) weights.
/// Inputs off the constraint by more than 1e-3 raise ConstraintViolation;
/// a nonpositive denominator raises SingularDenominator.
double eval_k3(int q, double w1, double w2, double w3);

/// Census-based evaluation of the symmetric construction; equals both
/// T_max and T_ave of the construction (all coordinates are alike).
/// O(#census classes) per call after the per-(q,k) census is built.
double symmetric_tmax(const SymmetricWeights& weights);

/// Multi-start simplex minimization of symmetric_tmax over the weights,
/// with the constraint solved for w_1. Deterministic for fixed
/// (restarts, seed). Supported k: 3 and 4.
BoundCertificate optimize_upper_bound(int q, int k, int restarts = 32,
                                      std::uint64_t seed = 1);

/// The asymptotic two-parameter objective whose minimum certifies the
/// large-q bound for k = 3.
double asymptotic_F(double lambda, double mu);

BoundCertificate optimize_asymptotic_F(int restarts = 32, std::uint64_t seed = 1);

}  // namespace covdepth

#endif
