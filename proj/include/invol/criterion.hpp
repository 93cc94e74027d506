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

#ifndef INVOL_CRITERION_HPP_
#define INVOL_CRITERION_HPP_

// Involution and permutation tests for f(x) = x^r h(x^s) that only look at
// the d-th roots of unity.
//
// With g(x) = x^r h(x)^s, f maps the coset {x : x^s = z} onto the coset of
// g(z), and f(f(x)) = phi(z) x on it once r^2 = 1 (mod s), where
//   phi(z) = z^{(r^2-1)/s} h(g(z)) h(z)^r.
// So f is an involution iff r^2 = 1 (mod s) and phi = 1 on mu_d, and f is a
// permutation iff gcd(r, s) = 1 and g permutes mu_d. Both cost O(d) field
// evaluations of h instead of a sweep over F_q.

#include <optional>
#include <vector>

#include "invol/polyring.hpp"

namespace invol {

// An involution sigma on mu_d stored by exponents: sigma(omega^i) = omega^{ell[i]}.
struct SubgroupInvolution {
  u64 d = 0;
  std::vector<u64> ell;

  static SubgroupInvolution identity(u64 d);
  // omega^i -> omega^{-i}.
  static SubgroupInvolution inverse(u64 d);
  // ell is a permutation of [0, d) with ell[ell[i]] = i.
  bool is_valid() const;

  friend bool operator==(const SubgroupInvolution&, const SubgroupInvolution&) = default;
};

struct CriterionReport {
  bool r_condition = false;    // r^2 = 1 (mod s)
  bool gcd_condition = false;  // gcd(r, s) = 1
  // phi is only evaluated when r_condition holds.
  bool phi_evaluated = false;
  bool phi_all_one = false;
  // Smallest omega^i with phi(omega^i) != 1.
  std::optional<Element> failing_z;
  bool verdict = false;
};

struct PermutationCheck {
  enum class Failure { kNone, kGcd, kRootOfH, kCollision };

  bool is_permutation = false;
  Failure failure = Failure::kNone;
  // kRootOfH: the root in mu_d. kCollision: z1 != z2 with g(z1) = g(z2).
  std::optional<Element> z1;
  std::optional<Element> z2;
};

const char* failure_name(PermutationCheck::Failure failure);

// z^r h(z)^s. Throws NotInSubgroup unless z^d = 1.
Element g_map(const RhsForm& rhs, Element z);

// Throws RSquareCondition, NotInSubgroup.
Element phi(const RhsForm& rhs, Element z);

CriterionReport check_involution(const RhsForm& rhs);
PermutationCheck check_permutation(const RhsForm& rhs);

// The exponent permutation of g on mu_d. Throws NotInvolutionOnSubgroup if g
// leaves mu_d, is not a permutation of it, or does not square to identity.
SubgroupInvolution induced_subgroup_involution(const RhsForm& rhs);

// (r^2 - 1) / s reduced mod m, computed in 128 bits. Requires r^2 = 1 (mod s).
u64 r_square_quotient(u64 r, u64 s, u64 m);

}  // namespace invol

#endif  // INVOL_CRITERION_HPP_
