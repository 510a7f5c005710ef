#include "covdepth/lattice.hpp"

#include <mutex>
#include <numeric>

namespace covdepth {

BigInt gaussian_binomial(long long k, long long r, long long q) {
  if (r < 0 || r > k) return 0;
  BigInt num = 1, den = 1;
  for (long long i = 0; i < r; ++i) {
    num *= boost::multiprecision::pow(BigInt(q), static_cast<unsigned>(k - i)) - 1;
    den *= boost::multiprecision::pow(BigInt(q), static_cast<unsigned>(i + 1)) - 1;
  }
  return num / den;
}

BigInt chi(int q, int k, int t, int r) {
  if (!(1 <= t && t <= r && r <= k - 1))
    throw DimensionOutOfRange("chi requires 1 <= t <= r <= k-1");
  return gaussian_binomial(k - t, r - t, q) -
         gaussian_binomial(k - t - 1, r - t - 1, q);
}

BigInt mobius_coeff(long long r, long long t, long long q) {
  long long d = r - t;
  BigInt v = boost::multiprecision::pow(BigInt(q),
                                        static_cast<unsigned>(d * (d - 1) / 2));
  return (d % 2 == 0) ? v : -v;
}

int Subspace::h() const {
  int outside = 0;
  for (bool b : contains_ei)
    if (!b) ++outside;
  return outside;
}

namespace {

// Fills contains_ei and wd by iterating all q^t member vectors.
void populate_metadata(Subspace& s) {
  const Field& f = *s.field;
  int k = s.ambient_dim, t = s.dim, q = f.q();
  s.contains_ei.assign(k, false);
  s.wd.assign(k, 0);
  std::vector<int> coeff(t, 0), v(k, 0);
  // mixed-radix counter over coefficient tuples; incremental update of v
  long long total = 1;
  for (int i = 0; i < t; ++i) total *= q;
  for (long long step = 1; step < total; ++step) {
    long long x = step;
    for (int i = 0; i < t; ++i) {
      int digit = static_cast<int>(x % q);
      x /= q;
      if (digit != coeff[i]) {
        int delta = f.sub(digit, coeff[i]);
        for (int j = 0; j < k; ++j)
          v[j] = f.add(v[j], f.mul(delta, s.basis[i][j]));
        coeff[i] = digit;
      }
    }
    int w = 0, first_nz = -1;
    for (int j = 0; j < k; ++j)
      if (v[j] != 0) {
        if (first_nz < 0) first_nz = j;
        ++w;
      }
    ++s.wd[w - 1];
    if (w == 1 && v[first_nz] == 1) s.contains_ei[first_nz] = true;
  }
}

}  // namespace

void for_each_subspace(const FieldPtr& field, int k, int t,
                       const std::function<void(const Subspace&)>& fn) {
  if (t < 0 || t > k) throw DimensionOutOfRange("need 0 <= t <= k");
  int q = field->q();
  if (t == 0) {
    Subspace s;
    s.field = field;
    s.ambient_dim = k;
    s.dim = 0;
    s.contains_ei.assign(k, false);
    s.wd.assign(k, 0);
    fn(s);
    return;
  }
  // pivot column subsets in lexicographic order
  std::vector<int> pivots(t);
  std::iota(pivots.begin(), pivots.end(), 0);
  while (true) {
    std::vector<bool> is_pivot(k, false);
    for (int p : pivots) is_pivot[p] = true;
    // free entries: (row i, col j) with j > pivots[i] and j not a pivot
    std::vector<std::pair<int, int>> free_pos;
    for (int i = 0; i < t; ++i)
      for (int j = pivots[i] + 1; j < k; ++j)
        if (!is_pivot[j]) free_pos.emplace_back(i, j);

    std::vector<int> vals(free_pos.size(), 0);
    while (true) {
      Subspace s;
      s.field = field;
      s.ambient_dim = k;
      s.dim = t;
      s.basis.assign(t, std::vector<int>(k, 0));
      for (int i = 0; i < t; ++i) s.basis[i][pivots[i]] = 1;
      for (size_t fidx = 0; fidx < free_pos.size(); ++fidx)
        s.basis[free_pos[fidx].first][free_pos[fidx].second] = vals[fidx];
      populate_metadata(s);
      fn(s);
      // next free-entry assignment
      size_t pos = 0;
      while (pos < vals.size() && vals[pos] == q - 1) vals[pos++] = 0;
      if (pos == vals.size()) break;
      ++vals[pos];
    }
    // next pivot combination
    int i = t - 1;
    while (i >= 0 && pivots[i] == k - t + i) --i;
    if (i < 0) break;
    ++pivots[i];
    for (int j = i + 1; j < t; ++j) pivots[j] = pivots[j - 1] + 1;
  }
}

std::vector<Subspace> enumerate_subspaces(const FieldPtr& field, int k, int t) {
  std::vector<Subspace> out;
  for_each_subspace(field, k, t, [&](const Subspace& s) { out.push_back(s); });
  return out;
}

namespace {

void check_enumeration_guard(const FieldPtr& field, int k) {
  BigInt total = 0;
  for (int t = 1; t < k; ++t) total += gaussian_binomial(k, t, field->q());
  if (total > 10'000'000)
    throw EnumerationTooLarge("subspace count " + total.str() +
                              " exceeds the 10^7 guard (q=" +
                              std::to_string(field->q()) +
                              ", k=" + std::to_string(k) + ")");
}

}  // namespace

WeightCensus weight_distribution_census(const FieldPtr& field, int k) {
  check_enumeration_guard(field, k);
  WeightCensus census;
  for (int t = 1; t < k; ++t)
    for_each_subspace(field, k, t, [&](const Subspace& s) {
      ++census[CensusKey{t, s.wd, s.h()}];
    });
  return census;
}

namespace {

std::mutex cache_mutex;
std::map<std::pair<int, int>, std::unique_ptr<LatticeCache>> cache_store;

std::unique_ptr<LatticeCache> build_cache(const FieldPtr& field, int k) {
  check_enumeration_guard(field, k);
  auto cache = std::make_unique<LatticeCache>();
  cache->field = field;
  cache->k = k;
  int q = field->q();

  // projective class representatives: first nonzero coordinate 1, lex order
  std::vector<int> v(k, 0);
  while (true) {
    int pos = k - 1;
    while (pos >= 0 && v[pos] == q - 1) v[pos--] = 0;
    if (pos < 0) break;
    ++v[pos];
    int first_nz = 0;
    while (v[first_nz] == 0) ++first_nz;
    if (v[first_nz] == 1) {
      cache->class_index[v] = static_cast<int>(cache->class_reps.size());
      cache->class_reps.push_back(v);
    }
  }

  cache->dim_coeff.assign(k, 0);
  for (int t = 1; t < k; ++t)
    for (int r = t; r <= k - 1; ++r)
      cache->dim_coeff[t] += mobius_coeff(r, t, q) * chi(q, k, t, r);

  const Field& f = *field;
  for (int t = 1; t < k; ++t)
    for_each_subspace(field, k, t, [&](const Subspace& s) {
      SubspaceClassInfo info;
      info.dim = t;
      info.h = s.h();
      info.wd = s.wd;
      for (int i = 0; i < k; ++i)
        if (s.contains_ei[i]) info.ei_mask |= (1u << i);
      // Projective members: lowest contributing basis row gets coefficient 1,
      // later rows arbitrary. Since pivots increase along the rows, the
      // resulting vector already has first nonzero coordinate 1.
      for (int lead = 0; lead < t; ++lead) {
        std::vector<int> tail(t - lead - 1, 0);
        while (true) {
          std::vector<int> pt(s.basis[lead]);
          for (int rr = lead + 1; rr < t; ++rr)
            if (tail[rr - lead - 1] != 0)
              for (int j = 0; j < k; ++j)
                pt[j] = f.add(pt[j], f.mul(tail[rr - lead - 1], s.basis[rr][j]));
          info.classes.push_back(cache->class_index.at(pt));
          size_t pos = 0;
          while (pos < tail.size() && tail[pos] == q - 1) tail[pos++] = 0;
          if (pos == tail.size()) break;
          ++tail[pos];
        }
      }
      cache->subspaces.push_back(std::move(info));
    });
  return cache;
}

}  // namespace

const LatticeCache& lattice_cache(const FieldPtr& field, int k) {
  std::scoped_lock lock(cache_mutex);
  auto key = std::make_pair(field->q(), k);
  auto it = cache_store.find(key);
  if (it == cache_store.end())
    it = cache_store.emplace(key, build_cache(field, k)).first;
  return *it->second;
}

}  // namespace covdepth
