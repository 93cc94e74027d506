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

#ifndef INVOL_CONSTRUCT_HPP_
#define INVOL_CONSTRUCT_HPP_

// Involutions x^r h(x^s) built from a prescribed involution sigma on mu_d.
//
// Choosing h(omega^i) = alpha^{d n_i + ell_i - i r} forces g(omega^i) =
// omega^{ell_i}; the result is an involution on F_q exactly when
//   r^2 = 1 (mod s)  and  n_{ell_i} + r n_i = 0 (mod s) for every i.
// h itself is recovered by interpolation on mu_d.

#include <optional>
#include <string>
#include <vector>

#include "invol/criterion.hpp"
#include "invol/polyring.hpp"

namespace invol {

struct ConstructionParams {
  u64 r = 1;
  std::vector<u64> n;  // n[0..d-1], entries taken mod s
};

// Human-readable list of the congruences that fail; empty when valid.
std::vector<std::string> param_violations(u64 s, const SubgroupInvolution& sigma,
                                          const ConstructionParams& params);

// Target values alpha^{d n_i + ell_i - i r} for i = 0..d-1.
std::vector<Element> construction_targets(const Field& field, u64 s, const SubgroupInvolution& sigma,
                                          const ConstructionParams& params);

// Interpolation only, no validity checks. Used to show the congruences are
// not vacuous.
RhsForm interpolate_construction(const FieldPtr& field, u64 s, const SubgroupInvolution& sigma,
                                 const ConstructionParams& params);

// Validates, interpolates and re-checks the output with check_involution.
// Throws NotADivisor, PreconditionViolated, InternalMismatch.
RhsForm construct_general(const FieldPtr& field, u64 s, const SubgroupInvolution& sigma,
                          const ConstructionParams& params);

// sigma(omega^i) = omega^{-i}.
RhsForm construct_from_inverse(const FieldPtr& field, u64 s, const ConstructionParams& params);

struct ParamChoices {
  ConstructionParams defaults;  // minimal r, zero n
  std::vector<u64> r_values;    // all r in [1, r_bound] with r^2 = 1 (mod s)
  // Values allowed at a fixed point of sigma: n (r + 1) = 0 (mod s).
  std::vector<u64> fixed_point_n;
};

u64 minimal_r(u64 s);
std::vector<u64> valid_r(u64 s, u64 bound);
std::vector<u64> fixed_point_n_values(u64 s, u64 r);

// r defaults to minimal_r(s); r_bound defaults to s.
ParamChoices valid_params(const Field& field, u64 s, const SubgroupInvolution& sigma,
                          std::optional<u64> r = std::nullopt, std::optional<u64> r_bound = std::nullopt);

// Completes n from free choices: for each fixed point i, n_i = free[i];
// for each pair i < ell_i, n_i = free[i] and n_{ell_i} = -r n_i (mod s).
// Entries of free at positions ell_i > i are ignored.
std::vector<u64> complete_n(u64 s, const SubgroupInvolution& sigma, u64 r, const std::vector<u64>& free);

// Two-coset case, q odd:
//   f = (a-b)/2 x^{(q-1)/2+r} + (a+b)/2 x^r.
// Throws EvenCharacteristic, PreconditionViolated.
bool d2_conditions_hold(const Field& field, u64 r, Element a, Element b);
SparsePoly construct_d2(const FieldPtr& field, u64 r, Element a, Element b);

// Three-coset inverse case, q = 1 (mod 3), from the closed-form h_0, h_1, h_2.
// Throws PreconditionViolated, CharacteristicDividesD.
SparsePoly construct_d3(const FieldPtr& field, u64 r, u64 n0, u64 n1, u64 n2);

// q = 2^{2k}, r = 1: h_2 x^{(2q+1)/3} + h_1 x^{(q+2)/3} + h_0 x with
// beta = alpha^{3 n1 + 1}. Throws WrongFieldShape, PreconditionViolated.
SparsePoly construct_cor_r1(const FieldPtr& field, u64 n1);

// q = 2^{2k}, r = (q-4)/3: h_2 x^{q-2} + h_0 (x^{(2q-5)/3} + x^{(q-4)/3}).
SparsePoly construct_cor_rq43(const FieldPtr& field, u64 n0, u64 n1);

}  // namespace invol

#endif  // INVOL_CONSTRUCT_HPP_
