#ifndef COVDEPTH_SIMPLEX_HPP
#define COVDEPTH_SIMPLEX_HPP

#include <functional>
#include <vector>

namespace covdepth {

struct SimplexOptions {
  double tol = 1e-10;       // objective spread convergence threshold
  int max_iter = 4000;
  double initial_step = 0.05;
};

struct SimplexResult {
  std::vector<double> x;
  double value = 0;
  int iterations = 0;
};

/// Nelder-Mead downhill simplex minimization. The objective must be total
/// (return a large penalty outside the feasible region).
SimplexResult nelder_mead(const std::function<double(const std::vector<double>&)>& f,
                          std::vector<double> start,
                          const SimplexOptions& opts = {});

}  // namespace covdepth

#endif
