// Copyright 2026 The invol Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <gtest/gtest.h>

#include <algorithm>
#include <set>

#include "invol/error.hpp"
#include "invol/gf.hpp"
#include "support/gen.hpp"
#include "support/naive.hpp"

namespace invol {
namespace {

Element E(u32 v) { return Element(v); }

template <class F>
Errc code_of(F&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no Error thrown";
  return Errc::kInternalMismatch;
}

TEST(Field, PrimeFieldOfOrderTwo) {
  const auto F = make_field(2, 1);
  EXPECT_EQ(F->q(), 2u);
  EXPECT_EQ(F->alpha(), E(1));
}

TEST(Field, FourElementsUseTheOnlyIrreducibleQuadratic) {
  const auto F = make_field(2, 2);
  EXPECT_EQ(F->modulus(), (std::vector<u32>{1, 1, 1}));
  EXPECT_EQ(F->alpha(), E(2));
  EXPECT_EQ(F->mul(F->alpha(), F->alpha()), F->add(F->alpha(), F->one()));
}

TEST(Field, ThreeToTheEightHasFullOrderAlpha) {
  const auto F = make_field(3, 8);
  EXPECT_EQ(F->q(), 6561u);
  const Element a = F->alpha();
  EXPECT_EQ(F->pow_u(a, 6560), F->one());
  for (const u64 rho : {2u, 5u, 41u}) EXPECT_NE(F->pow_u(a, 6560 / rho), F->one()) << rho;
}

// Moduli and primitive elements from the naive search (lexicographic
// modulus, smallest full-order encoding).
TEST(Field, DefaultModulusAndAlphaMatchReference) {
  struct Row {
    u32 p, n;
    std::vector<u32> modulus;
    u32 alpha;
  };
  const std::vector<Row> rows = {
      {2, 1, {0, 1}, 1},
      {2, 2, {1, 1, 1}, 2},
      {2, 4, {1, 0, 0, 1, 1}, 2},
      {2, 6, {1, 0, 0, 0, 0, 1, 1}, 2},
      {2, 8, {1, 0, 0, 0, 1, 1, 0, 1, 1}, 6},
      {3, 2, {1, 0, 1}, 4},
      {3, 6, {1, 0, 0, 0, 1, 1, 1}, 4},
      {3, 8, {1, 0, 0, 0, 0, 1, 1, 0, 1}, 4},
      {5, 2, {1, 1, 1}, 7},
      {7, 2, {1, 0, 1}, 9},
      {7, 1, {0, 1}, 3},
      {11, 1, {0, 1}, 2},
      {13, 1, {0, 1}, 2},
  };
  for (const auto& row : rows) {
    const auto F = make_field(row.p, row.n);
    EXPECT_EQ(F->modulus(), row.modulus) << row.p << "^" << row.n;
    EXPECT_EQ(F->alpha(), E(row.alpha)) << row.p << "^" << row.n;
  }
}

TEST(Field, DefaultModulusAgreesWithNaiveSearch) {
  for (const auto [p, n] : std::vector<std::pair<int, int>>{{2, 3}, {2, 5}, {3, 3}, {3, 4}, {5, 3}, {7, 2}}) {
    const auto F = make_field(p, n);
    const naive::Poly m = naive::smallest_irreducible(p, n);
    const std::vector<u32> expected(m.begin(), m.end());
    EXPECT_EQ(F->modulus(), expected);
    naive::Field N(p, n, m);
    EXPECT_EQ(F->alpha().encoding(), N.primitive());
  }
}

TEST(Field, ConstructionErrors) {
  EXPECT_EQ(code_of([] { make_field(6, 1); }), Errc::kNotPrime);
  EXPECT_EQ(code_of([] { make_field(2, 2, std::vector<u32>{1, 0, 1}); }), Errc::kNotIrreducible);
  EXPECT_EQ(code_of([] { make_field(2, 32); }), Errc::kOverflow);
}

TEST(Field, ExplicitModulusIsKept) {
  const auto F = make_field(2, 4, std::vector<u32>{1, 1, 0, 0, 1});
  EXPECT_EQ(F->modulus(), (std::vector<u32>{1, 1, 0, 0, 1}));
  EXPECT_EQ(F->pow_u(F->alpha(), 15), F->one());
}

TEST(Field, SmallArithmetic) {
  const auto F5 = make_field(5, 1);
  EXPECT_EQ(F5->inv(E(2)), E(3));
  const auto F7 = make_field(7, 1);
  EXPECT_EQ(F7->pow(E(3), 5), E(5));
  EXPECT_EQ(F7->pow(E(3), -1), E(5));
  EXPECT_EQ(F7->pow(E(3), 6 + 5), E(5));
  EXPECT_EQ(F7->pow(E(0), 0), E(1));
  EXPECT_EQ(F7->pow(E(0), 3), E(0));
  EXPECT_EQ(code_of([&] { F7->inv(E(0)); }), Errc::kDivisionByZero);
  EXPECT_EQ(code_of([&] { F7->pow(E(0), -2); }), Errc::kDivisionByZero);
}

TEST(Field, DiscreteLogExamples) {
  const auto F7 = make_field(7, 1);
  EXPECT_EQ(F7->discrete_log(E(1)), 0u);
  EXPECT_EQ(F7->discrete_log(E(5)), 5u);
  const auto F4 = make_field(2, 2);
  EXPECT_EQ(F4->discrete_log(E(3)), 2u);
  EXPECT_EQ(code_of([&] { F7->discrete_log(E(0)); }), Errc::kDivisionByZero);
}

TEST(Field, SubgroupExamples) {
  const auto F7 = make_field(7, 1);
  const Subgroup mu3 = F7->subgroup(3);
  EXPECT_EQ(mu3.omega, E(2));
  EXPECT_EQ(mu3.s, 2u);
  EXPECT_EQ(mu3.elements, (std::vector<Element>{E(1), E(2), E(4)}));
  EXPECT_EQ(F7->subgroup(1).elements, (std::vector<Element>{E(1)}));
  const auto F4 = make_field(2, 2);
  const auto all = F4->subgroup(3).elements;
  EXPECT_EQ(std::set<Element>(all.begin(), all.end()), (std::set<Element>{E(1), E(2), E(3)}));
  EXPECT_EQ(code_of([&] { F7->subgroup(4); }), Errc::kNotADivisor);
}

TEST(Field, Subfields) {
  const auto F = make_field(2, 6);
  EXPECT_EQ(F->subfield(4).size(), 4u);
  EXPECT_EQ(F->subfield(8).size(), 8u);
  for (const Element x : F->subfield(4)) EXPECT_TRUE(F->in_subfield(x, 4));
  EXPECT_EQ(code_of([&] { F->subfield(16); }), Errc::kWrongFieldShape);
}

// ---- properties ----

class FieldProperty : public ::testing::TestWithParam<std::pair<u32, u32>> {};

TEST_P(FieldProperty, FermatAndInverse) {
  const auto [p, n] = GetParam();
  const auto F = make_field(p, n);
  for (u64 v = 1; v < F->q(); ++v) {
    const Element x(static_cast<u32>(v));
    ASSERT_EQ(F->pow_u(x, F->q() - 1), F->one());
    ASSERT_EQ(F->mul(x, F->inv(x)), F->one());
  }
}

TEST_P(FieldProperty, DiscreteLogRoundTrip) {
  const auto [p, n] = GetParam();
  const auto F = make_field(p, n);
  // Every element up to 4096, a stride above.
  const u64 step = std::max<u64>(1, F->q() / 4096);
  for (u64 v = 1; v < F->q(); v += step) {
    const Element x(static_cast<u32>(v));
    ASSERT_EQ(F->alpha_pow(static_cast<i64>(F->discrete_log(x))), x);
  }
}

TEST_P(FieldProperty, TablesMatchDirectPathAndNaive) {
  const auto [p, n] = GetParam();
  const auto T = make_field(p, n);
  const auto D = make_field(p, n, std::nullopt, FieldOptions{false});
  ASSERT_TRUE(T->has_tables());
  ASSERT_FALSE(D->has_tables());
  ASSERT_EQ(T->alpha(), D->alpha());
  const naive::Field N(static_cast<int>(p), static_cast<int>(n),
                       naive::Poly(T->modulus().begin(), T->modulus().end()));
  gen::Rng rng(1000 + p * 100 + n);
  for (int i = 0; i < 2000; ++i) {
    const Element x = rng.element(*T), y = rng.element(*T);
    const i64 e = static_cast<i64>(rng.below(3 * T->q())) - static_cast<i64>(T->q());
    ASSERT_EQ(T->add(x, y), D->add(x, y));
    ASSERT_EQ(T->sub(x, y), D->sub(x, y));
    ASSERT_EQ(T->mul(x, y), D->mul(x, y));
    ASSERT_EQ(T->mul(x, y).encoding(), N.mul(x.encoding(), y.encoding()));
    ASSERT_EQ(T->add(x, y).encoding(), N.add(x.encoding(), y.encoding()));
    if (!x.is_zero()) {
      ASSERT_EQ(T->inv(x), D->inv(x));
      ASSERT_EQ(T->pow(x, e), D->pow(x, e));
      ASSERT_EQ(T->discrete_log(x), D->discrete_log(x));
    }
  }
}

TEST_P(FieldProperty, SubgroupsAreClosedAndDistinct) {
  const auto [p, n] = GetParam();
  const auto F = make_field(p, n);
  for (const u64 d : divisors(F->q() - 1)) {
    if (d > 200) continue;
    const Subgroup mu = F->subgroup(d);
    const std::set<Element> set(mu.elements.begin(), mu.elements.end());
    ASSERT_EQ(set.size(), d);
    for (const Element a : mu.elements) {
      ASSERT_EQ(F->pow_u(a, d), F->one());
      for (const Element b : mu.elements) ASSERT_TRUE(set.count(F->mul(a, b)));
    }
  }
}

TEST_P(FieldProperty, ConstructionIsDeterministic) {
  const auto [p, n] = GetParam();
  const auto A = make_field(p, n);
  const auto B = make_field(p, n);
  EXPECT_EQ(A->modulus(), B->modulus());
  EXPECT_EQ(A->alpha(), B->alpha());
}

INSTANTIATE_TEST_SUITE_P(SmallFields, FieldProperty,
                         ::testing::Values(std::pair<u32, u32>{2, 1}, std::pair<u32, u32>{2, 2},
                                           std::pair<u32, u32>{2, 6}, std::pair<u32, u32>{2, 8},
                                           std::pair<u32, u32>{3, 4}, std::pair<u32, u32>{3, 8},
                                           std::pair<u32, u32>{5, 3}, std::pair<u32, u32>{7, 1},
                                           std::pair<u32, u32>{11, 2}, std::pair<u32, u32>{2, 12}));

TEST(FieldLarge, FermatHoldsExhaustivelyAtTwoToTheSixteen) {
  const auto F = make_field(2, 16);
  for (u64 v = 1; v < F->q(); ++v) ASSERT_EQ(F->pow_u(Element(static_cast<u32>(v)), F->q() - 1), F->one());
}

TEST(FieldLarge, DirectPathAboveTableCap) {
  const auto F = make_field(2, 21);
  EXPECT_FALSE(F->has_tables());
  const auto T = make_field(2, 21, std::nullopt, FieldOptions{true, u64{1} << 22});
  EXPECT_TRUE(T->has_tables());
  EXPECT_EQ(F->alpha(), T->alpha());
  gen::Rng rng(7);
  for (int i = 0; i < 300; ++i) {
    const Element x = rng.nonzero(*F), y = rng.nonzero(*F);
    ASSERT_EQ(F->mul(x, y), T->mul(x, y));
    ASSERT_EQ(F->discrete_log(x), T->discrete_log(x));
  }
}

}  // namespace
}  // namespace invol
