#include "covdepth/expectation.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <map>
#include <random>

namespace covdepth {

GeneratorMatrix make_matrix(const FieldPtr& field,
                            const std::vector<std::vector<int>>& rows) {
  GeneratorMatrix g;
  g.field = field;
  g.k = static_cast<int>(rows.size());
  if (g.k == 0) throw InvalidParams("matrix needs at least one row");
  g.n = static_cast<int>(rows[0].size());
  for (const auto& r : rows)
    if (static_cast<int>(r.size()) != g.n)
      throw InvalidParams("ragged matrix rows");
  if (g.n < g.k) throw InvalidParams("need n >= k");
  for (int j = 0; j < g.n; ++j) {
    FqVector col{field, std::vector<int>(g.k)};
    for (int i = 0; i < g.k; ++i) {
      int e = rows[i][j];
      if (e < 0 || e >= field->q())
        throw InvalidParams("entry " + std::to_string(e) +
                            " out of range for q=" + std::to_string(field->q()));
      col.coords[i] = e;
    }
    g.columns.push_back(std::move(col));
  }
  return g;
}

WeightProfile weight_profile(const GeneratorMatrix& g) {
  const Field& f = *g.field;
  WeightProfile p;
  p.field = g.field;
  p.k = g.k;
  p.n = g.n;
  for (int j = 0; j < g.n; ++j) {
    const auto& col = g.columns[j];
    int first_nz = -1;
    for (int i = 0; i < g.k; ++i)
      if (col.coords[i] != 0) {
        first_nz = i;
        break;
      }
    if (first_nz < 0)
      throw ZeroColumn("column " + std::to_string(j + 1) + " is zero");
    int scale = f.inv(col.coords[first_nz]);
    std::vector<int> rep(g.k);
    for (int i = 0; i < g.k; ++i) rep[i] = f.mul(scale, col.coords[i]);
    p.weights[rep] += Rational(1, g.n);
  }
  if (rank(g.columns) != g.k)
    throw RankDeficient("matrix rank is below k=" + std::to_string(g.k));
  return p;
}

namespace {

// Evaluation works on the flats of the support matroid (closed subsets of
// the positive-weight projective classes) instead of the full subspace
// lattice of F_q^k: a subspace U with w_U = 0 contributes nothing, so
// grouping subspaces by their trace U cap support leaves
//   E[tau_i] = 1 + sum_{flats B, e_i outside span B} zhat(B) R(dim B)
// where zhat is the Moebius inversion of w_B/(1 - w_B) along the flat
// order and R(d) collapses the per-dimension coefficient against the
// count of t-dim subspaces containing a fixed d-dim one but not e_i.
struct Flat {
  std::vector<std::uint64_t> mask;  // over support class indices
  int size = 0;
  int dim = 0;
  int h = 0;                        // #{i : e_i outside the span}
  std::vector<char> has_ei;
  Rational zhat;
};

struct EvalContext {
  int k = 0;
  std::vector<Flat> flats;      // proper flats only, by ascending size
  std::vector<BigInt> r_coeff;  // R(d), d in [0, k)
};

constexpr int kMaxSupportClasses = 256;
constexpr int kMaxFlats = 8192;

EvalContext make_context(const WeightProfile& p) {
  const FieldPtr& f = p.field;
  const int k = p.k;
  std::vector<FqVector> support;
  std::vector<Rational> wt;
  Rational total = 0;
  for (const auto& [rep, w] : p.weights) {
    if (w == 0) continue;
    if (w < 0) throw InvalidParams("negative weight");
    if (static_cast<int>(rep.size()) != k)
      throw InvalidParams("weight on a vector of the wrong dimension");
    int first_nz = -1;
    for (int i = 0; i < k && first_nz < 0; ++i)
      if (rep[i] != 0) first_nz = i;
    if (first_nz < 0 || rep[first_nz] != 1)
      throw InvalidParams("weight key is not a canonical class representative");
    support.push_back({f, rep});
    wt.push_back(w);
    total += w;
  }
  if (total != 1) throw InvalidParams("weights must sum to 1");
  const int m = static_cast<int>(support.size());
  if (m > kMaxSupportClasses)
    throw EnumerationTooLarge("more than 256 distinct weight classes");
  if (rank(support) != k)
    throw RankDeficient(
        "support spans a proper subspace; some e_i is unreachable");

  EvalContext ctx;
  ctx.k = k;

  const int words = (m + 63) / 64;
  auto mask_of_span = [&](const SpanBuilder& sb) {
    std::vector<std::uint64_t> mask(words, 0);
    for (int j = 0; j < m; ++j)
      if (sb.contains(support[j])) mask[j / 64] |= 1ull << (j % 64);
    return mask;
  };

  // breadth-first closure enumeration; the span basis rides along so each
  // extension is one SpanBuilder::add
  std::map<std::vector<std::uint64_t>, int> seen;
  std::vector<SpanBuilder> builders;
  {
    SpanBuilder empty(f, k);
    Flat root;
    root.mask.assign(words, 0);
    seen.emplace(root.mask, 0);
    ctx.flats.push_back(std::move(root));
    builders.push_back(std::move(empty));
  }
  for (size_t next = 0; next < ctx.flats.size(); ++next) {
    if (ctx.flats[next].dim == k) continue;
    for (int j = 0; j < m; ++j) {
      if (ctx.flats[next].mask[j / 64] >> (j % 64) & 1ull) continue;
      SpanBuilder sb = builders[next];
      sb.add(support[j]);
      auto mask = mask_of_span(sb);
      if (seen.contains(mask)) continue;
      if (static_cast<int>(ctx.flats.size()) >= kMaxFlats)
        throw EnumerationTooLarge("support generates more than 8192 flats");
      Flat flat;
      flat.mask = mask;
      flat.dim = sb.rank();
      seen.emplace(std::move(mask), static_cast<int>(ctx.flats.size()));
      ctx.flats.push_back(std::move(flat));
      builders.push_back(std::move(sb));
    }
  }

  for (size_t idx = 0; idx < ctx.flats.size(); ++idx) {
    Flat& flat = ctx.flats[idx];
    for (const auto& word : flat.mask) flat.size += std::popcount(word);
    flat.has_ei.assign(k, 0);
    for (int i = 0; i < k; ++i)
      if (builders[idx].contains(standard_basis_vector(f, k, i)))
        flat.has_ei[i] = 1;
      else
        ++flat.h;
  }
  std::erase_if(ctx.flats, [&](const Flat& flat) { return flat.dim == k; });
  std::sort(ctx.flats.begin(), ctx.flats.end(),
            [](const Flat& a, const Flat& b) { return a.size < b.size; });

  // zhat(D) = z(D) - sum over proper subflats, z = w/(1 - w)
  for (size_t j = 0; j < ctx.flats.size(); ++j) {
    Flat& flat = ctx.flats[j];
    Rational w = 0;
    for (int c = 0; c < m; ++c)
      if (flat.mask[c / 64] >> (c % 64) & 1ull) w += wt[c];
    flat.zhat = w / (1 - w);
    for (size_t b = 0; b < j; ++b) {
      const Flat& sub = ctx.flats[b];
      if (sub.size >= flat.size || sub.zhat == 0) continue;
      bool inside = true;
      for (int wd = 0; wd < words && inside; ++wd)
        inside = (sub.mask[wd] & ~flat.mask[wd]) == 0;
      if (inside) flat.zhat -= sub.zhat;
    }
  }

  // R(d) = sum_t c_t ([k-d, t-d]_q - [k-d-1, t-d-1]_q) with the collapsed
  // Moebius/chi coefficient c_t
  const int q = f->q();
  ctx.r_coeff.assign(k, 0);
  for (int d = 0; d < k; ++d) {
    BigInt acc = 0;
    for (int t = std::max(d, 1); t <= k - 1; ++t) {
      BigInt c_t = 0;
      for (int r = t; r <= k - 1; ++r)
        c_t += mobius_coeff(r, t, q) * chi(q, k, t, r);
      acc += c_t * (gaussian_binomial(k - d, t - d, q) -
                    gaussian_binomial(k - d - 1, t - d - 1, q));
    }
    ctx.r_coeff[d] = acc;
  }
  return ctx;
}

std::vector<Rational> all_expected_samples(const WeightProfile& profile) {
  EvalContext ctx = make_context(profile);
  std::vector<Rational> e(ctx.k, 1);
  for (const Flat& flat : ctx.flats) {
    if (flat.h == 0 || flat.zhat == 0) continue;
    Rational term = flat.zhat * Rational(ctx.r_coeff[flat.dim]);
    for (int i = 0; i < ctx.k; ++i)
      if (!flat.has_ei[i]) e[i] += term;
  }
  return e;
}

}  // namespace

Rational expected_samples(const WeightProfile& profile, int i) {
  if (i < 0 || i >= profile.k) throw IndexOutOfRange("index out of [0, k)");
  EvalContext ctx = make_context(profile);
  Rational e = 1;
  for (const Flat& flat : ctx.flats)
    if (!flat.has_ei[i] && flat.zhat != 0)
      e += flat.zhat * Rational(ctx.r_coeff[flat.dim]);
  return e;
}

Rational t_max(const WeightProfile& profile) {
  auto e = all_expected_samples(profile);
  return *std::max_element(e.begin(), e.end());
}

Rational t_ave(const WeightProfile& profile) {
  EvalContext ctx = make_context(profile);
  Rational acc = 0;
  for (const Flat& flat : ctx.flats)
    if (flat.h != 0 && flat.zhat != 0)
      acc += flat.h * flat.zhat * Rational(ctx.r_coeff[flat.dim]);
  return 1 + acc / profile.k;
}

namespace {

void check_oracle_guard(const GeneratorMatrix& g) {
  if (g.n > 20)
    throw TooLarge("subset enumeration is limited to n <= 20, got n=" +
                   std::to_string(g.n));
}

// Visits all s-subsets of [0, n) in lexicographic order.
template <typename Fn>
void for_each_subset(int n, int s, Fn&& fn) {
  std::vector<int> idx(s);
  for (int i = 0; i < s; ++i) idx[i] = i;
  if (s > n) return;
  while (true) {
    fn(idx);
    int i = s - 1;
    while (i >= 0 && idx[i] == n - s + i) --i;
    if (i < 0) break;
    ++idx[i];
    for (int j = i + 1; j < s; ++j) idx[j] = idx[j - 1] + 1;
  }
}

}  // namespace

BigInt alpha_oracle(const GeneratorMatrix& g, int i, int s) {
  check_oracle_guard(g);
  if (i < 0 || i >= g.k) throw IndexOutOfRange("index out of [0, k)");
  if (s < 1 || s > g.n) throw InvalidParams("need 1 <= s <= n");
  FqVector ei = standard_basis_vector(g.field, g.k, i);
  BigInt count = 0;
  for_each_subset(g.n, s, [&](const std::vector<int>& idx) {
    SpanBuilder sb(g.field, g.k);
    for (int j : idx) sb.add(g.columns[j]);
    if (sb.contains(ei)) ++count;
  });
  return count;
}

Rational expected_samples_oracle(const GeneratorMatrix& g, int i) {
  check_oracle_guard(g);
  if (rank(g.columns) != g.k) throw RankDeficient("matrix rank is below k");
  Rational e = g.n * harmonic(g.n);
  for (int s = 1; s <= g.n - 1; ++s)
    e -= Rational(alpha_oracle(g, i, s), binomial(g.n - 1, s));
  return e;
}

BigInt zeta(const GeneratorMatrix& g, int s) {
  check_oracle_guard(g);
  if (s < 1 || s > g.n - 1) throw InvalidParams("need 1 <= s <= n-1");
  int expected_dim = std::min(s, g.k);
  BigInt count = 0;
  for_each_subset(g.n, s, [&](const std::vector<int>& idx) {
    SpanBuilder sb(g.field, g.k);
    for (int j : idx) sb.add(g.columns[j]);
    int d = sb.rank();
    int basis_inside = 0;
    for (int i = 0; i < g.k; ++i)
      if (sb.contains(standard_basis_vector(g.field, g.k, i))) ++basis_inside;
    bool standard_full = (d == expected_dim) && (basis_inside == d);
    if (!standard_full) ++count;
  });
  return count;
}

SimulationResult simulate(const GeneratorMatrix& g, int i, long long trials,
                          std::uint64_t seed) {
  if (i < 0 || i >= g.k) throw IndexOutOfRange("index out of [0, k)");
  if (trials < 1) throw InvalidParams("trials must be >= 1");
  FqVector ei = standard_basis_vector(g.field, g.k, i);
  double sum = 0, sumsq = 0;
  for (long long e = 0; e < trials; ++e) {
    std::mt19937_64 rng(seed ^ static_cast<std::uint64_t>(e));
    SpanBuilder sb(g.field, g.k);
    long long draws = 0;
    while (!sb.contains(ei)) {
      if (++draws > 1'000'000)
        throw MaxSamplesExceeded("episode exceeded 10^6 draws; e_" +
                                 std::to_string(i + 1) +
                                 " may be unreachable from the columns");
      sb.add(g.columns[rng() % g.n]);
    }
    sum += static_cast<double>(draws);
    sumsq += static_cast<double>(draws) * static_cast<double>(draws);
  }
  SimulationResult res;
  res.trials = trials;
  res.mean = sum / static_cast<double>(trials);
  if (trials > 1) {
    double var = (sumsq - sum * sum / static_cast<double>(trials)) /
                 static_cast<double>(trials - 1);
    res.stderr_of_mean = std::sqrt(std::max(var, 0.0) / static_cast<double>(trials));
  }
  return res;
}

GeneratorMatrix g_r_matrix(const FieldPtr& field, int k, int r) {
  if (r < 1 || r > k) throw DimensionOutOfRange("need 1 <= r <= k");
  GeneratorMatrix g;
  g.field = field;
  g.k = k;
  g.n = k + 1;
  for (int i = 0; i < k; ++i)
    g.columns.push_back(standard_basis_vector(field, k, i));
  FqVector parity{field, std::vector<int>(k, 0)};
  for (int i = 0; i < r; ++i) parity.coords[i] = 1;
  g.columns.push_back(std::move(parity));
  return g;
}

}  // namespace covdepth
