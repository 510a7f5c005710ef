#include "covdepth/search.hpp"

#include <atomic>
#include <bit>
#include <cstdlib>
#include <thread>

namespace covdepth {

namespace {

int resolve_jobs(int jobs) {
  if (jobs > 0) return jobs;
  if (const char* env = std::getenv("COVERAGE_DEPTH_JOBS")) {
    int j = std::atoi(env);
    if (j > 0) return j;
  }
  unsigned hw = std::thread::hardware_concurrency();
  return hw ? static_cast<int>(hw) : 1;
}

struct SubspaceBits {
  int dim;
  int h;
  std::uint32_t ei_mask;
  std::uint64_t class_mask;
};

struct Candidate {
  bool valid = false;
  Rational value;
  std::vector<int> counts;

  bool better_than(const Candidate& o) const {
    if (!o.valid) return valid;
    if (!valid) return false;
    if (value != o.value) return value < o.value;
    return counts < o.counts;
  }
};

// Enumerates count vectors over classes [from, nclasses) summing to `rest`,
// in lexicographic order, with counts[0..from) already fixed.
template <typename Fn>
void for_each_composition(std::vector<int>& counts, size_t from, int rest,
                          Fn&& fn) {
  if (from + 1 == counts.size()) {
    counts[from] = rest;
    fn(counts);
    return;
  }
  for (int c = 0; c <= rest; ++c) {
    counts[from] = c;
    for_each_composition(counts, from + 1, rest - c, fn);
  }
}

}  // namespace

SearchResult optimal_search(int q, int n, int k, Objective objective, int jobs) {
  if (n < k || k < 1) throw InvalidParams("need n >= k >= 1");
  FieldPtr field = Field::make(q);
  const LatticeCache& cache = lattice_cache(field, k);
  size_t nclasses = cache.class_reps.size();
  if (nclasses > 64) throw SearchTooLarge("more than 64 projective classes");
  BigInt compositions = binomial(n + static_cast<long long>(nclasses) - 1,
                                 static_cast<long long>(nclasses) - 1);
  if (compositions > 100'000'000)
    throw SearchTooLarge("composition count " + compositions.str() +
                         " exceeds the 10^8 guard");

  std::vector<SubspaceBits> subs;
  subs.reserve(cache.subspaces.size());
  for (const auto& s : cache.subspaces) {
    SubspaceBits b{s.dim, s.h, s.ei_mask, 0};
    for (int c : s.classes) b.class_mask |= (1ull << c);
    subs.push_back(b);
  }
  std::vector<Rational> coeff(k, 0);
  for (int t = 1; t < k; ++t) coeff[t] = Rational(cache.dim_coeff[t]);
  // w_U/(1 - w_U) = c/(n - c) when c of the n columns fall inside U
  std::vector<Rational> frac(n);
  for (int c = 0; c < n; ++c) frac[c] = Rational(c, n - c);

  auto evaluate = [&](const std::vector<int>& counts) -> Candidate {
    Candidate cand;
    std::vector<int> cnt_u(subs.size());
    for (size_t s = 0; s < subs.size(); ++s) {
      int c = 0;
      std::uint64_t mask = subs[s].class_mask;
      while (mask) {
        int idx = std::countr_zero(mask);
        c += counts[idx];
        mask &= mask - 1;
      }
      // full-rank filter: no hyperplane (and hence no subspace) may hold
      // all n columns
      if (c >= n) return cand;
      cnt_u[s] = c;
    }
    if (objective == Objective::kAve) {
      Rational acc = 0;
      for (size_t s = 0; s < subs.size(); ++s)
        if (subs[s].h != 0 && cnt_u[s] != 0)
          acc += subs[s].h * coeff[subs[s].dim] * frac[cnt_u[s]];
      cand.value = 1 + acc / k;
    } else {
      Rational best = 1;
      for (int i = 0; i < k; ++i) {
        Rational e = 1;
        for (size_t s = 0; s < subs.size(); ++s)
          if (!(subs[s].ei_mask >> i & 1u) && cnt_u[s] != 0)
            e += coeff[subs[s].dim] * frac[cnt_u[s]];
        if (e > best) best = e;
      }
      cand.value = best;
    }
    cand.valid = true;
    cand.counts = counts;
    return cand;
  };

  int njobs = resolve_jobs(jobs);
  // partition by the first class's count; reduction is order-deterministic
  std::vector<Candidate> best_per_first(n + 1);
  std::vector<long long> examined_per_first(n + 1, 0);
  std::atomic<int> next_first{0};
  auto worker = [&]() {
    for (int first; (first = next_first.fetch_add(1)) <= n;) {
      Candidate local;
      long long examined = 0;
      std::vector<int> counts(nclasses, 0);
      counts[0] = first;
      if (nclasses == 1) {
        if (first == n) {
          ++examined;
          Candidate cand = evaluate(counts);
          if (cand.better_than(local)) local = std::move(cand);
        }
      } else {
        for_each_composition(counts, 1, n - first, [&](const std::vector<int>& cc) {
          ++examined;
          Candidate cand = evaluate(cc);
          if (cand.better_than(local)) local = std::move(cand);
        });
      }
      best_per_first[first] = std::move(local);
      examined_per_first[first] = examined;
    }
  };
  std::vector<std::thread> pool;
  for (int j = 0; j < std::min(njobs, n + 1); ++j) pool.emplace_back(worker);
  for (auto& t : pool) t.join();

  Candidate best;
  long long examined = 0;
  for (int first = 0; first <= n; ++first) {
    examined += examined_per_first[first];
    if (best_per_first[first].better_than(best))
      best = std::move(best_per_first[first]);
  }
  if (!best.valid)
    throw RankDeficient("no full-rank assignment exists");  // unreachable for n >= k

  SearchResult result;
  result.objective = objective;
  result.value = best.value;
  result.witness_counts = best.counts;
  result.candidates_examined = examined;
  result.profile.field = field;
  result.profile.k = k;
  result.profile.n = n;
  for (size_t c = 0; c < nclasses; ++c)
    if (best.counts[c] > 0)
      result.profile.weights[cache.class_reps[c]] = Rational(best.counts[c], n);
  return result;
}

std::vector<MonotonicityEntry> monotonicity_check(int q, int k, int n_max,
                                                  Objective objective, int jobs) {
  if (n_max < k) throw InvalidParams("need n_max >= k");
  std::vector<MonotonicityEntry> entries;
  std::vector<Rational> value_of(n_max + 1);
  for (int n = k; n <= n_max; ++n) {
    MonotonicityEntry e;
    e.n = n;
    e.value = optimal_search(q, n, k, objective, jobs).value;
    value_of[n] = e.value;
    for (int d = k; d < n; ++d)
      if (n % d == 0 && e.value > value_of[d]) e.divisibility_ok = false;
    entries.push_back(std::move(e));
  }
  return entries;
}

}  // namespace covdepth
