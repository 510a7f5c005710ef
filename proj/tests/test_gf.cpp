#include "covdepth/gf.hpp"

#include "doctest.h"

using namespace covdepth;

TEST_CASE("field construction") {
  auto f2 = Field::make(2);
  CHECK(f2->q() == 2);
  CHECK(f2->p() == 2);
  CHECK(f2->m() == 1);
  CHECK(f2->modulus().empty());

  auto f4 = Field::make(4);
  CHECK(f4->p() == 2);
  CHECK(f4->m() == 2);
  // x^2 + x + 1, coefficients degree 2 down to 0
  CHECK(f4->modulus() == std::vector<int>{1, 1, 1});

  CHECK_THROWS_AS(Field::make(6), NotPrimePower);
  CHECK_THROWS_AS(Field::make(1), NotPrimePower);
  CHECK_THROWS_AS(Field::make(12), NotPrimePower);
}

TEST_CASE("inverses and negation for all q <= 16") {
  for (int q : {2, 3, 4, 5, 7, 8, 9, 11, 13, 16}) {
    auto f = Field::make(q);
    for (int a = 1; a < q; ++a) CHECK(f->mul(a, f->inv(a)) == 1);
    for (int a = 0; a < q; ++a) CHECK(f->add(a, f->neg(a)) == 0);
  }
}

TEST_CASE("field axioms hold exhaustively for q <= 9") {
  for (int q : {2, 3, 4, 5, 7, 8, 9}) {
    auto f = Field::make(q);
    for (int a = 0; a < q; ++a)
      for (int b = 0; b < q; ++b) {
        CHECK(f->add(a, b) == f->add(b, a));
        CHECK(f->mul(a, b) == f->mul(b, a));
        for (int c = 0; c < q; ++c) {
          CHECK(f->add(f->add(a, b), c) == f->add(a, f->add(b, c)));
          CHECK(f->mul(f->mul(a, b), c) == f->mul(a, f->mul(b, c)));
          CHECK(f->mul(a, f->add(b, c)) == f->add(f->mul(a, b), f->mul(a, c)));
        }
      }
  }
}

TEST_CASE("rank") {
  auto f2 = Field::make(2);
  std::vector<FqVector> id3;
  for (int i = 0; i < 3; ++i) id3.push_back(standard_basis_vector(f2, 3, i));
  CHECK(rank(id3) == 3);
  CHECK(rank({}) == 0);

  // the 2 x 5 running example has rank 2
  std::vector<FqVector> cols = {
      {f2, {1, 0}}, {f2, {0, 1}}, {f2, {1, 0}}, {f2, {0, 1}}, {f2, {1, 1}}};
  CHECK(rank(cols) == 2);
}

TEST_CASE("rank is invariant under permutation and scaling") {
  auto f5 = Field::make(5);
  std::vector<FqVector> cols = {
      {f5, {1, 2, 0}}, {f5, {0, 1, 4}}, {f5, {1, 3, 4}}, {f5, {2, 4, 0}}};
  int base = rank(cols);
  std::vector<FqVector> permuted = {cols[2], cols[0], cols[3], cols[1]};
  CHECK(rank(permuted) == base);
  std::vector<FqVector> scaled = cols;
  for (size_t j = 0; j < scaled.size(); ++j)
    for (auto& c : scaled[j].coords) c = f5->mul(c, static_cast<int>(j % 4) + 1);
  CHECK(rank(scaled) == base);
}

TEST_CASE("span_contains") {
  auto f2 = Field::make(2);
  FqVector e1 = standard_basis_vector(f2, 2, 0);
  FqVector e2 = standard_basis_vector(f2, 2, 1);
  FqVector e12{f2, {1, 1}};
  CHECK(span_contains({e2, e12}, e1));
  CHECK_FALSE(span_contains({e2}, e1));
  CHECK(span_contains({}, zero_vector(f2, 2)));
  CHECK_FALSE(span_contains({}, e1));
}

TEST_CASE("span_contains agrees with the rank characterization") {
  auto f3 = Field::make(3);
  std::vector<FqVector> vs = {{f3, {1, 0, 2}}, {f3, {0, 1, 1}}};
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b)
      for (int c = 0; c < 3; ++c) {
        FqVector t{f3, {a, b, c}};
        auto extended = vs;
        extended.push_back(t);
        CHECK(span_contains(vs, t) == (rank(extended) == rank(vs)));
      }
}

TEST_CASE("mixed fields are rejected") {
  auto f2 = Field::make(2);
  auto f3 = Field::make(3);
  std::vector<FqVector> mixed = {{f2, {1, 0}}, {f3, {1, 0}}};
  CHECK_THROWS_AS(rank(mixed), MixedFields);
}
