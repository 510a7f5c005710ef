#ifndef COVDEPTH_SEARCH_HPP
#define COVDEPTH_SEARCH_HPP

#include <vector>

#include "covdepth/expectation.hpp"

namespace covdepth {

enum class Objective { kMax, kAve };

struct SearchResult {
  Objective objective;
  Rational value;
  WeightProfile profile;               // witness achieving the value
  std::vector<int> witness_counts;     // per projective class, cache order
  long long candidates_examined = 0;
};

/// Exact minimum of T_max or T_ave over all full-rank k x n matrices with
/// nonzero columns, by enumerating column counts over projective classes.
/// Deterministic: ties resolve to the lexicographically smallest count
/// vector, independent of the number of worker threads.
/// jobs <= 0 picks COVERAGE_DEPTH_JOBS or hardware concurrency.
SearchResult optimal_search(int q, int n, int k, Objective objective,
                            int jobs = 0);

struct MonotonicityEntry {
  int n = 0;
  Rational value;
  bool divisibility_ok = true;  // value(n) <= value(n') for every n' | n
};

/// Values for n in [k, n_max] with the divisibility verdicts.
std::vector<MonotonicityEntry> monotonicity_check(int q, int k, int n_max,
                                                  Objective objective,
                                                  int jobs = 0);

}  // namespace covdepth

#endif
