#ifndef COVDEPTH_GF_HPP
#define COVDEPTH_GF_HPP

#include <cstdint>
#include <memory>
#include <vector>

#include "covdepth/errors.hpp"

namespace covdepth {

/// Prime-power finite field GF(q), q = p^m. Elements are integers in
/// [0, q) read base-p as polynomial coefficients, constant term least
/// significant. For m > 1 arithmetic is modulo the lexicographically
/// smallest monic irreducible polynomial of degree m over GF(p).
class Field {
 public:
  /// Throws NotPrimePower unless q = p^m with p prime, m >= 1.
  static std::shared_ptr<const Field> make(int q);

  int q() const { return q_; }
  int p() const { return p_; }
  int m() const { return m_; }

  /// Coefficients of the modulus, degree m down to 0; empty when m = 1.
  const std::vector<int>& modulus() const { return modulus_; }

  int add(int a, int b) const;
  int sub(int a, int b) const { return add(a, neg(b)); }
  int neg(int a) const;
  int mul(int a, int b) const;
  int inv(int a) const;

 private:
  Field(int q, int p, int m);

  int add_slow(int a, int b) const;
  int mul_slow(int a, int b) const;

  int q_, p_, m_;
  std::vector<int> modulus_;
  bool tabulated_ = false;  // full q*q tables, only for small q
  std::vector<int> add_, mul_, neg_, inv_;
};

using FieldPtr = std::shared_ptr<const Field>;

/// Vector over GF(q); coords are field elements in the integer encoding.
struct FqVector {
  FieldPtr field;
  std::vector<int> coords;

  int dim() const { return static_cast<int>(coords.size()); }
  int weight() const;

  bool operator==(const FqVector& o) const { return coords == o.coords; }
};

FqVector standard_basis_vector(const FieldPtr& field, int k, int i);
FqVector zero_vector(const FieldPtr& field, int k);

/// Dimension of the span, by Gaussian elimination. 0 for the empty list.
int rank(const std::vector<FqVector>& vectors);

/// True iff target lies in the GF(q)-span of `vectors`.
bool span_contains(const std::vector<FqVector>& vectors, const FqVector& target);

/// Incremental row-reduction state for span maintenance (used by the
/// Monte Carlo sampler; one instance per episode, not thread-shared).
class SpanBuilder {
 public:
  SpanBuilder(FieldPtr field, int dim);

  /// Reduces v against the current basis and absorbs it if independent.
  void add(const FqVector& v);

  bool contains(const FqVector& v) const;
  int rank() const { return static_cast<int>(rows_.size()); }

 private:
  FieldPtr field_;
  int dim_;
  std::vector<std::vector<int>> rows_;  // reduced, pivot columns increasing
  std::vector<int> pivot_of_row_;
};

}  // namespace covdepth

#endif
