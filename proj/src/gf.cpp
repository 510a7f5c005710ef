#include "covdepth/gf.hpp"

#include <algorithm>

namespace covdepth {

namespace {

// Polynomials over GF(p) are coefficient vectors, constant term first.
using Poly = std::vector<int>;

Poly decode(int x, int p, int len) {
  Poly c(len, 0);
  for (int i = 0; i < len && x > 0; ++i) {
    c[i] = x % p;
    x /= p;
  }
  return c;
}

int degree(const Poly& a) {
  for (int i = static_cast<int>(a.size()) - 1; i >= 0; --i)
    if (a[i] != 0) return i;
  return -1;
}

Poly poly_mul(const Poly& a, const Poly& b, int p) {
  Poly r(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j)
      r[i + j] = (r[i + j] + a[i] * b[j]) % p;
  return r;
}

// a mod b, b monic of positive degree.
Poly poly_mod(Poly a, const Poly& b, int p) {
  int db = degree(b);
  for (int da = degree(a); da >= db; da = degree(a)) {
    int c = a[da];
    for (int i = 0; i <= db; ++i)
      a[da - db + i] = ((a[da - db + i] - c * b[i]) % p + p) % p;
  }
  a.resize(db);
  return a;
}

bool is_zero(const Poly& a) { return degree(a) < 0; }

// Trial division by every monic polynomial of degree in [1, deg/2].
bool is_irreducible(const Poly& f, int p) {
  int d = degree(f);
  for (int dd = 1; 2 * dd <= d; ++dd) {
    int count = 1;
    for (int i = 0; i < dd; ++i) count *= p;
    for (int low = 0; low < count; ++low) {
      Poly g = decode(low, p, dd + 1);
      g[dd] = 1;
      if (is_zero(poly_mod(f, g, p))) return false;
    }
  }
  return true;
}

}  // namespace

FieldPtr Field::make(int q) {
  if (q < 2) throw NotPrimePower("q must be >= 2, got " + std::to_string(q));
  int p = q;
  for (int d = 2; d * d <= q; ++d)
    if (q % d == 0) {
      p = d;
      break;
    }
  // p is the smallest prime factor of q; q must be a power of it
  int m = 0;
  int t = q;
  while (t > 1) {
    if (t % p != 0)
      throw NotPrimePower(std::to_string(q) + " is not a prime power");
    t /= p;
    ++m;
  }
  return std::shared_ptr<const Field>(new Field(q, p, m));
}

Field::Field(int q, int p, int m) : q_(q), p_(p), m_(m) {
  if (m_ > 1) {
    // lexicographically smallest monic irreducible of degree m:
    // smallest integer encoding of the lower coefficients
    int count = 1;
    for (int i = 0; i < m_; ++i) count *= p_;
    for (int low = 0; low < count; ++low) {
      Poly f = decode(low, p_, m_ + 1);
      f[m_] = 1;
      if (is_irreducible(f, p_)) {
        modulus_.assign(f.rbegin(), f.rend());  // degree m down to 0
        break;
      }
    }
  }

  if (q_ <= 1024) {
    tabulated_ = true;
    add_.resize(q_ * q_);
    mul_.resize(q_ * q_);
    for (int a = 0; a < q_; ++a)
      for (int b = 0; b < q_; ++b) {
        add_[a * q_ + b] = add_slow(a, b);
        mul_[a * q_ + b] = mul_slow(a, b);
      }
  }
  neg_.resize(q_);
  inv_.assign(q_, 0);
  for (int a = 0; a < q_; ++a) {
    Poly pa = decode(a, p_, m_);
    Poly n(m_);
    for (int i = 0; i < m_; ++i) n[i] = (p_ - pa[i]) % p_;
    int x = 0;
    for (int i = m_ - 1; i >= 0; --i) x = x * p_ + n[i];
    neg_[a] = x;
  }
  // a^(q-2) by repeated squaring
  for (int a = 1; a < q_; ++a) {
    int e = q_ - 2, base = a, acc = 1;
    while (e > 0) {
      if (e & 1) acc = mul(acc, base);
      base = mul(base, base);
      e >>= 1;
    }
    inv_[a] = acc;
  }
}

int Field::add_slow(int a, int b) const {
  int x = 0, scale = 1;
  for (int i = 0; i < m_; ++i) {
    x += ((a % p_ + b % p_) % p_) * scale;
    a /= p_;
    b /= p_;
    scale *= p_;
  }
  return x;
}

int Field::mul_slow(int a, int b) const {
  Poly pa = decode(a, p_, m_);
  Poly pb = decode(b, p_, m_);
  Poly prod = poly_mul(pa, pb, p_);
  if (m_ > 1) {
    Poly mod_poly(modulus_.rbegin(), modulus_.rend());
    prod = poly_mod(prod, mod_poly, p_);
  }
  prod.resize(m_);
  int x = 0;
  for (int i = m_ - 1; i >= 0; --i) x = x * p_ + prod[i];
  return x;
}

int Field::add(int a, int b) const {
  if (tabulated_) return add_[a * q_ + b];
  return add_slow(a, b);
}

int Field::neg(int a) const { return neg_[a]; }

int Field::mul(int a, int b) const {
  if (tabulated_) return mul_[a * q_ + b];
  return mul_slow(a, b);
}

int Field::inv(int a) const {
  if (a == 0) throw std::domain_error("inverse of zero");
  return inv_[a];
}

int FqVector::weight() const {
  int w = 0;
  for (int c : coords)
    if (c != 0) ++w;
  return w;
}

FqVector standard_basis_vector(const FieldPtr& field, int k, int i) {
  FqVector v{field, std::vector<int>(k, 0)};
  v.coords[i] = 1;
  return v;
}

FqVector zero_vector(const FieldPtr& field, int k) {
  return FqVector{field, std::vector<int>(k, 0)};
}

namespace {

void check_compatible(const std::vector<FqVector>& vectors) {
  for (size_t i = 1; i < vectors.size(); ++i)
    if (vectors[i].field->q() != vectors[0].field->q() ||
        vectors[i].dim() != vectors[0].dim())
      throw MixedFields("vectors over different fields or dimensions");
}

}  // namespace

int rank(const std::vector<FqVector>& vectors) {
  if (vectors.empty()) return 0;
  check_compatible(vectors);
  SpanBuilder sb(vectors[0].field, vectors[0].dim());
  for (const auto& v : vectors) sb.add(v);
  return sb.rank();
}

bool span_contains(const std::vector<FqVector>& vectors, const FqVector& target) {
  if (vectors.empty()) return target.weight() == 0;
  check_compatible(vectors);
  if (target.field->q() != vectors[0].field->q() || target.dim() != vectors[0].dim())
    throw MixedFields("target over a different field or dimension");
  SpanBuilder sb(vectors[0].field, vectors[0].dim());
  for (const auto& v : vectors) sb.add(v);
  return sb.contains(target);
}

SpanBuilder::SpanBuilder(FieldPtr field, int dim)
    : field_(std::move(field)), dim_(dim) {}

void SpanBuilder::add(const FqVector& v) {
  std::vector<int> w = v.coords;
  const Field& f = *field_;
  for (size_t r = 0; r < rows_.size(); ++r) {
    int piv = pivot_of_row_[r];
    if (w[piv] != 0) {
      int c = w[piv];
      for (int j = 0; j < dim_; ++j) w[j] = f.sub(w[j], f.mul(c, rows_[r][j]));
    }
  }
  int piv = -1;
  for (int j = 0; j < dim_; ++j)
    if (w[j] != 0) {
      piv = j;
      break;
    }
  if (piv < 0) return;
  int ic = f.inv(w[piv]);
  for (int j = 0; j < dim_; ++j) w[j] = f.mul(ic, w[j]);
  rows_.push_back(std::move(w));
  pivot_of_row_.push_back(piv);
}

bool SpanBuilder::contains(const FqVector& v) const {
  std::vector<int> w = v.coords;
  const Field& f = *field_;
  for (size_t r = 0; r < rows_.size(); ++r) {
    int piv = pivot_of_row_[r];
    if (w[piv] != 0) {
      int c = w[piv];
      for (int j = 0; j < dim_; ++j) w[j] = f.sub(w[j], f.mul(c, rows_[r][j]));
    }
  }
  return std::all_of(w.begin(), w.end(), [](int x) { return x == 0; });
}

}  // namespace covdepth
