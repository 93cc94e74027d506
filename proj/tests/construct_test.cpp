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
#include <numeric>

#include "invol/construct.hpp"
#include "invol/error.hpp"
#include "invol/oracle.hpp"
#include "invol/text.hpp"
#include "support/gen.hpp"

namespace invol {
namespace {

Element E(u32 v) { return Element(v); }
SparsePoly P(const FieldPtr& F, const char* text) { return parse_poly(F, text); }

template <class Fn>
Errc code_of(Fn&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no Error thrown";
  return Errc::kInternalMismatch;
}

bool oracle_involution(const SparsePoly& f) { return *oracle::is_involution(f).is_involution; }

SubgroupInvolution random_sigma(gen::Rng& rng, u64 d) {
  std::vector<u64> order(d);
  std::iota(order.begin(), order.end(), 0);
  std::shuffle(order.begin(), order.end(), rng.engine());
  SubgroupInvolution sigma = SubgroupInvolution::identity(d);
  for (u64 k = 0; k + 1 < d; k += 2) {
    if (rng.coin()) continue;
    sigma.ell[order[k]] = order[k + 1];
    sigma.ell[order[k + 1]] = order[k];
  }
  return sigma;
}

TEST(General, SevenInversion) {
  const auto F7 = parse_field("7");
  const RhsForm rhs = construct_general(F7, 2, SubgroupInvolution::inverse(3), {1, {0, 0, 0}});
  EXPECT_EQ(rhs.h(), P(F7, "2*x^2 + 3*x + 3"));
  const SparsePoly f = expand(rhs);
  EXPECT_EQ(f, P(F7, "2*x^5 + 3*x^3 + 3*x"));
  const PermReport o = oracle::is_involution(f);
  EXPECT_TRUE(*o.is_involution);
  EXPECT_EQ(*o.fixed_point_count, 3u);
}

TEST(General, TrivialSubgroupGivesMonomial) {
  const auto F = parse_field("13");
  for (const u64 r : {1u, 5u, 7u, 11u}) {
    const RhsForm rhs = construct_general(F, 12, SubgroupInvolution::identity(1), {r, {0}});
    EXPECT_EQ(rhs.h(), SparsePoly::constant(F, E(1)));
    EXPECT_EQ(expand(rhs), SparsePoly::monomial(F, E(1), r));
  }
}

TEST(General, SixtyFourInversion) {
  const auto F = parse_field("2^6");
  for (const u64 r : valid_r(21, 63)) {
    const auto n = complete_n(21, SubgroupInvolution::inverse(3), r, {0, 5, 0});
    const RhsForm rhs = construct_general(F, 21, SubgroupInvolution::inverse(3), {r, n});
    EXPECT_TRUE(oracle_involution(expand(rhs))) << r;
  }
}

TEST(General, RejectsBadParameters) {
  const auto F7 = parse_field("7");
  EXPECT_EQ(code_of([&] { construct_general(F7, 4, SubgroupInvolution::inverse(3), {1, {0, 0, 0}}); }),
            Errc::kNotADivisor);
  EXPECT_EQ(code_of([&] { construct_general(F7, 2, SubgroupInvolution::inverse(3), {1, {0, 1, 0}}); }),
            Errc::kPreconditionViolated);
  EXPECT_EQ(code_of([&] { construct_general(F7, 3, SubgroupInvolution::inverse(2), {3, {0, 0}}); }),
            Errc::kPreconditionViolated);
  EXPECT_EQ(code_of([&] { construct_general(F7, 2, SubgroupInvolution{3, {1, 2, 0}}, {1, {0, 0, 0}}); }),
            Errc::kPreconditionViolated);
  const auto v = param_violations(2, SubgroupInvolution::inverse(3), {1, {0, 1, 0}});
  EXPECT_EQ(v.size(), 2u);
}

TEST(ValidParams, Examples) {
  const auto F7 = parse_field("7");
  const ParamChoices c = valid_params(*F7, 2, SubgroupInvolution::inverse(3));
  EXPECT_EQ(c.defaults.r, 1u);
  EXPECT_EQ(c.defaults.n, (std::vector<u64>{0, 0, 0}));
  EXPECT_EQ(valid_r(21, 21), (std::vector<u64>{1, 8, 13, 20}));
  EXPECT_EQ(minimal_r(21), 1u);
  // n (r + 1) = 0 mod 21 at a fixed point.
  EXPECT_EQ(fixed_point_n_values(21, 20), (std::vector<u64>(
                                              [] {
                                                std::vector<u64> all(21);
                                                std::iota(all.begin(), all.end(), 0);
                                                return all;
                                              }())));
  EXPECT_EQ(fixed_point_n_values(21, 13), (std::vector<u64>{0, 3, 6, 9, 12, 15, 18}));
  EXPECT_EQ(fixed_point_n_values(21, 1), (std::vector<u64>{0}));
}

TEST(FromInverse, MatchesGeneral) {
  const auto F7 = parse_field("7");
  EXPECT_EQ(construct_from_inverse(F7, 2, {1, {0, 0, 0}}).h(), P(F7, "2*x^2 + 3*x + 3"));
  const auto F13 = parse_field("13");
  EXPECT_EQ(expand(construct_from_inverse(F13, 12, {5, {0}})), P(F13, "x^5"));
  gen::Rng rng(51);
  for (const char* spec : {"13", "16", "25", "49", "2^6"}) {
    const auto F = parse_field(spec);
    for (const u64 s : divisors(F->q() - 1)) {
      const u64 d = (F->q() - 1) / s;
      const auto sigma = SubgroupInvolution::inverse(d);
      const auto rs = valid_r(s, s);
      for (int rep = 0; rep < 3; ++rep) {
        const u64 r = rng.pick(rs);
        std::vector<u64> free(d);
        for (auto& v : free) v = rng.below(s);
        const ConstructionParams params{r, complete_n(s, sigma, r, free)};
        if (!param_violations(s, sigma, params).empty()) continue;  // fixed points need n(r+1) = 0
        ASSERT_EQ(construct_from_inverse(F, s, params).h(), construct_general(F, s, sigma, params).h());
      }
    }
  }
}

TEST(FromInverse, ThreeToTheEightFourCosets) {
  const auto F = parse_field("3^8");
  const u64 s = 1640;
  const auto sigma = SubgroupInvolution::inverse(4);
  for (const u64 r : {1u, 1639u, 821u}) {
    ASSERT_TRUE(squares_to_one(r, s));
    std::vector<u64> n = complete_n(s, sigma, r, {0, 7, 0, 0});
    const auto fp = fixed_point_n_values(s, r);
    n[0] = fp.back();
    n[2] = fp[fp.size() / 2];
    const RhsForm rhs = construct_from_inverse(F, s, {r, n});
    EXPECT_TRUE(oracle_involution(expand(rhs))) << r;
  }
}

// ---- d = 2 ----

TEST(D2, SevenDelta) {
  const auto F7 = parse_field("7");
  const SparsePoly f = construct_d2(F7, 1, E(3), E(5));
  EXPECT_EQ(f, P(F7, "6*x^4 + 4*x"));
  EXPECT_EQ(oracle::value_table(f), (std::vector<Element>{E(0), E(3), E(6), E(1), E(5), E(4), E(2)}));
  EXPECT_TRUE(oracle_involution(f));
}

TEST(D2, FiveDegenerates) {
  const auto F5 = parse_field("5");
  const SparsePoly f = construct_d2(F5, 1, E(2), E(3));
  EXPECT_EQ(f, P(F5, "2*x^3"));
  EXPECT_TRUE(oracle_involution(f));
}

TEST(D2, Rejections) {
  const auto F7 = parse_field("7");
  EXPECT_EQ(code_of([&] { construct_d2(F7, 1, E(3), E(3)); }), Errc::kPreconditionViolated);
  EXPECT_EQ(code_of([&] { construct_d2(F7, 1, E(3), E(4)); }), Errc::kPreconditionViolated);
  EXPECT_EQ(code_of([&] { construct_d2(F7, 2, E(3), E(5)); }), Errc::kPreconditionViolated);
  const auto F8 = parse_field("8");
  EXPECT_EQ(code_of([&] { construct_d2(F8, 1, E(3), E(5)); }), Errc::kEvenCharacteristic);
}

// delta non-square, a = delta, b = 1/delta, r = 1 always passes.
TEST(D2, NonSquareDeltaAlwaysWorks) {
  for (const char* spec : {"3", "5", "7", "9", "11", "13", "25", "27", "49"}) {
    const auto F = parse_field(spec);
    for (u64 v = 1; v < F->q(); ++v) {
      const Element delta(static_cast<u32>(v));
      if (F->is_square(delta) || delta == F->inv(delta)) continue;
      const SparsePoly f = construct_d2(F, 1, delta, F->inv(delta));
      ASSERT_TRUE(oracle_involution(f)) << spec << " " << v;
    }
  }
}

// The value conditions are exactly the involution condition for two cosets.
TEST(D2, ConditionsMatchOracleExhaustively) {
  for (const char* spec : {"3", "5", "7", "9", "11", "13"}) {
    const auto F = parse_field(spec);
    const u64 q = F->q();
    const Element half = F->inv(F->from_int(2));
    for (u64 r = 1; r < q; ++r) {
      for (u64 a = 0; a < q; ++a) {
        for (u64 b = 0; b < q; ++b) {
          if (a == b) continue;
          const Element ea(static_cast<u32>(a)), eb(static_cast<u32>(b));
          SparsePoly h(F);
          h.add_term_raw(1, F->mul(F->sub(ea, eb), half));
          h.add_term_raw(0, F->mul(F->add(ea, eb), half));
          const bool truth = oracle_involution(expand(RhsForm(r, (q - 1) / 2, h)));
          ASSERT_EQ(d2_conditions_hold(*F, r, ea, eb), truth) << spec << " r=" << r << " a=" << a << " b=" << b;
        }
      }
    }
  }
}

// ---- d = 3 ----

TEST(D3, SevenMatchesGeneral) {
  const auto F7 = parse_field("7");
  EXPECT_EQ(construct_d3(F7, 1, 0, 0, 0), P(F7, "2*x^5 + 3*x^3 + 3*x"));
}

TEST(D3, MatchesGeneralForEveryValidParameter) {
  for (const char* spec : {"7", "13", "16"}) {
    const auto F = parse_field(spec);
    const u64 s = (F->q() - 1) / 3;
    for (const u64 r : valid_r(s, F->q() - 1)) {
      for (u64 n0 = 0; n0 < s; ++n0) {
        if (mul_mod(n0, (r + 1) % s, s) != 0) continue;
        for (u64 n1 = 0; n1 < s; ++n1) {
          const u64 n2 = (s - mul_mod(n1, r % s, s)) % s;
          const SparsePoly f = construct_d3(F, r, n0, n1, n2);
          const RhsForm g = construct_general(F, s, SubgroupInvolution::inverse(3), {r, {n0, n1, n2}});
          ASSERT_EQ(f, expand(g)) << spec << " r=" << r << " n=" << n0 << "," << n1 << "," << n2;
        }
      }
    }
  }
}

TEST(D3, Rejections) {
  const auto F7 = parse_field("7");
  EXPECT_EQ(code_of([&] { construct_d3(F7, 2, 0, 0, 0); }), Errc::kPreconditionViolated);
  EXPECT_EQ(code_of([&] { construct_d3(F7, 1, 0, 1, 0); }), Errc::kPreconditionViolated);
  EXPECT_EQ(code_of([&] { construct_d3(parse_field("11"), 1, 0, 0, 0); }), Errc::kPreconditionViolated);
  EXPECT_EQ(code_of([&] { construct_d3(parse_field("9"), 1, 0, 0, 0); }), Errc::kCharacteristicDividesD);
}

// ---- even characteristic corollaries ----

TEST(CorR1, SmallFields) {
  EXPECT_TRUE(oracle_involution(construct_cor_r1(parse_field("16"), 0)));
  const auto F4 = parse_field("4");
  const SparsePoly f = construct_cor_r1(F4, 0);
  EXPECT_TRUE(oracle_involution(f));
  // Exponents (2q+1)/3 = 3 and (q+2)/3 = 2 on F_4.
  for (const auto& [e, c] : f.terms()) EXPECT_TRUE(e == 1 || e == 2 || e == 3);
}

TEST(CorR1, IsTheD3Specialization) {
  for (const char* spec : {"16", "64", "256"}) {
    const auto F = parse_field(spec);
    const u64 s = (F->q() - 1) / 3;
    for (u64 n1 = 0; n1 <= (F->q() - 4) / 3; ++n1) {
      ASSERT_EQ(construct_cor_r1(F, n1), construct_d3(F, 1, 0, n1, (s - n1 % s) % s)) << spec << " " << n1;
    }
  }
}

TEST(CorR1, Rejections) {
  EXPECT_EQ(code_of([] { construct_cor_r1(parse_field("8"), 0); }), Errc::kWrongFieldShape);
  EXPECT_EQ(code_of([] { construct_cor_r1(parse_field("9"), 0); }), Errc::kWrongFieldShape);
  EXPECT_EQ(code_of([] { construct_cor_r1(parse_field("16"), 5); }), Errc::kPreconditionViolated);
}

TEST(CorRq43, SmallFields) {
  const auto F16 = parse_field("16");
  for (u64 u = 0; u <= 4; ++u) {
    for (u64 v = 0; v <= 4; ++v) EXPECT_TRUE(oracle_involution(construct_cor_rq43(F16, u, v))) << u << "," << v;
  }
  const auto F4 = parse_field("4");
  EXPECT_EQ(construct_cor_rq43(F4, 0, 0), P(F4, "x^2"));
  EXPECT_TRUE(oracle_involution(construct_cor_rq43(F4, 0, 0)));
}

// ---- properties ----

TEST(ConstructProperty, SoundAndRecoversSigma) {
  gen::Rng rng(52);
  int built = 0;
  for (int rep = 0; rep < 300; ++rep) {
    const u64 q = rng.pick(std::vector<u64>{4, 5, 7, 8, 9, 11, 13, 16, 17, 19, 23, 25, 27, 29, 31, 32, 37, 49, 64});
    const auto F = parse_field(std::to_string(q));
    const u64 s = rng.pick(divisors(q - 1));
    const u64 d = (q - 1) / s;
    const SubgroupInvolution sigma = random_sigma(rng, d);
    const u64 r = rng.pick(valid_r(s, q - 1));
    std::vector<u64> free(d);
    const auto fp = fixed_point_n_values(s, r);
    for (u64 i = 0; i < d; ++i) free[i] = sigma.ell[i] == i ? rng.pick(fp) : rng.below(s);
    const ConstructionParams params{r, complete_n(s, sigma, r, free)};
    ASSERT_TRUE(param_violations(s, sigma, params).empty());
    const RhsForm rhs = construct_general(F, s, sigma, params);
    ASSERT_TRUE(oracle_involution(expand(rhs)));
    ASSERT_EQ(induced_subgroup_involution(rhs), sigma);
    ++built;
  }
  EXPECT_EQ(built, 300);
}

// Breaking a congruence breaks the involution, so the conditions matter.
TEST(ConstructProperty, ViolatedConditionsFail) {
  gen::Rng rng(53);
  int violated = 0;
  for (int rep = 0; rep < 400; ++rep) {
    const u64 q = rng.pick(std::vector<u64>{7, 9, 13, 16, 25, 27, 31});
    const auto F = parse_field(std::to_string(q));
    const u64 s = rng.pick(divisors(q - 1));
    const u64 d = (q - 1) / s;
    const SubgroupInvolution sigma = random_sigma(rng, d);
    ConstructionParams params{rng.between(1, q - 1), std::vector<u64>(d)};
    for (auto& v : params.n) v = rng.below(s);
    if (param_violations(s, sigma, params).empty()) continue;
    const RhsForm rhs = interpolate_construction(F, s, sigma, params);
    ASSERT_FALSE(check_involution(rhs).verdict);
    ASSERT_FALSE(oracle_involution(expand(rhs)));
    ++violated;
  }
  EXPECT_GT(violated, 200);
}

}  // namespace
}  // namespace invol
