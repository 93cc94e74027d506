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

#ifndef INVOL_FAMILIES_HPP_
#define INVOL_FAMILIES_HPP_

// Explicit involution families of the form x^r h(x^s), their hypothesis
// checks, and lifting an involution from a subfield F_q to F_{q^m}.
//
// Generators take the field they build over. Base-field parameters (q, m)
// are checked against it; coefficients that must live in a subfield are
// given as elements of the big field and checked with c^q = c.

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "invol/criterion.hpp"
#include "invol/error.hpp"
#include "invol/polyring.hpp"

namespace invol {

struct ConditionResult {
  std::string name;
  bool passed = false;
  std::string detail;
  // Error raised by the generators when this condition fails.
  Errc code = Errc::kPreconditionViolated;
};
using Conditions = std::vector<ConditionResult>;

bool all_passed(const Conditions& conditions);

// q with field.q() = q^2. Throws WrongFieldShape.
u64 square_root_order(const Field& field);

// ---- conjugate-symmetric h over F_{q^2}, s = q - 1 ----

// {0 <= i <= q : ((r+1)/(q-1) + i)(r-1) = 0 (mod q+1)}. Requires r = -1 (mod q-1).
std::vector<u64> omega_set(u64 q, u64 r);

// h = sum_{i in terms} (h_i x^i + h_i^q x^{qi}). Throws HValueZero,
// PreconditionViolated.
RhsForm gen_conj_symmetric(const FieldPtr& field, u64 r, const std::map<u64, Element>& terms);

// r = q^2 - q - 1, h = b x^i + b^q x^{qi}, q odd.
RhsForm gen_cor_qb(const FieldPtr& field, u64 i, Element b);

// ---- palindromic h over F_q inside F_{q^m}, d | gcd(q-1, m) ----

// e = (r^2-1)/s mod d.
u64 palindromic_shift(u64 r, u64 s, u64 d);
// Positions that determine h: [0, e/2] and [e+1, (d+e)/2].
std::vector<u64> palindromic_free_positions(u64 d, u64 e);
// Mirrors free values into h_0..h_{d-1}.
std::vector<Element> palindromic_complete(u64 d, u64 e, const std::vector<Element>& free);

// Throws HValueZero, PreconditionViolated.
RhsForm gen_palindromic(const FieldPtr& field, u64 q, u64 m, u64 d, u64 r, const std::vector<Element>& free);
// Same, with the full coefficient vector h_0..h_{d-1} checked for symmetry.
RhsForm gen_palindromic_full(const FieldPtr& field, u64 q, u64 m, u64 d, u64 r,
                             const std::vector<Element>& coeffs);

// q = 2^k, m = d = q - 1, r = s - 1, h = a x^{q-2} + b x^{q-3} + b.
RhsForm gen_cor_mdq1(const FieldPtr& field, u64 q, Element a, Element b);
// q = 3^{2k}, m = d = 4, r = q^4 - 2, h = a x^3 + b x^2 + a x + c.
RhsForm gen_cor_m4d4(const FieldPtr& field, Element a, Element b, Element c);

// ---- reversal-symmetric h over F_{q^2}, s = q - 1 ----

struct ReversalResult {
  RhsForm rhs;
  // A root of h in mu_{q+1}; f is an involution iff there is none.
  std::optional<Element> root;
  bool involution() const { return !root.has_value(); }
};

// coeffs = a_0..a_deg with a_0 != 0 and a_{deg-i} = a_i^q.
ReversalResult gen_reversal(const FieldPtr& field, u64 r, const std::vector<Element>& coeffs);

struct ExmVerdicts {
  bool case_table = false;  // residue-class table
  bool gcd_form = false;    // (-a^{q-1})^{(q+1)/gcd(q+1,q-3)} != 1
  std::string case_name;
};

// f = a x^{q^2-3q+1} + a^q x^{q-2}: r = q-2, s = q-1, h = a x^{q-3} + a^q.
RhsForm cor_exm_form(const FieldPtr& field, Element a);
// Throws EvenQNoSolution for even q.
ExmVerdicts cor_exm_verdicts(const Field& field, Element a);
// Throws EvenQNoSolution, PreconditionViolated (not an involution),
// InternalMismatch (the two verdicts disagree).
RhsForm gen_cor_exm(const FieldPtr& field, Element a);

// ---- x (1 + x^s + ... + x^{(k-1)s}) over F_{q^m}, m even, d | q+1 ----
// m is the degree of the field over F_q.
Conditions geometric_conditions(u64 p, u64 q, u64 d, u64 m, u64 k);
RhsForm gen_geometric(const FieldPtr& field, u64 q, u64 d, u64 m, u64 k);

// ---- subfield lifting ----

// g(x) = x^r h(x)^m on the subfield F_q is an involution.
bool base_is_involution(const Field& field, u64 q, u64 m, u64 r, const SparsePoly& h);
// x^r h(x^{(q^m-1)/(q-1)}) without checking g. Throws PreconditionViolated.
RhsForm lift_form(const FieldPtr& field, u64 q, u64 m, u64 r, const SparsePoly& h);
// Throws BaseNotInvolution, PreconditionViolated.
RhsForm lift_involution(const FieldPtr& field, u64 q, u64 m, u64 r, const SparsePoly& h);

// The two worked lifts. Both return lift_form without checking the base
// map; base_is_involution or the oracle decides.
//
// F_Q with Q = q^2, q = 2^{2k}: h with x h(x)^2 equal to the r = 1
// three-term involution of F_q, built from square roots.
RhsForm lift_cor_r1(const FieldPtr& field, u64 n1);
// F_Q with Q = q^6, q = 3^k, a in F_{q^2}: h with x h(x)^3 equal to
// a x^{q^2-3q+1} + a^q x^{q-2}, built from cube roots.
RhsForm lift_cor_exm(const FieldPtr& field, Element a);

// True iff f is an involution, decided from g on mu_d alone. Needs
// r^2 = 1 (mod s), gcd(s, d) = 1 and h(mu_d) in mu_d; throws
// HypothesisViolated otherwise.
bool check_iff_subgroup(const RhsForm& rhs);

// ---- named families for the CLI ----

enum class FamilyId {
  kConjSymmetric,
  kCorQb,
  kPalindromic,
  kCorMdq1,
  kCorM4d4,
  kReversal,
  kCorExm,
  kGeometric,
  kLift,
};

struct FamilyInfo {
  FamilyId id;
  std::string name;
  std::string schema;
  std::string summary;
};

const std::vector<FamilyInfo>& family_catalog();

struct FamilySpec {
  FamilyId id;
  std::map<std::string, std::string> params;
};

// "k=v,k=v"; list values use ';'. Throws UnknownFamily, ParseError.
FamilySpec parse_family_spec(std::string_view id, std::string_view params);

// Evaluates every hypothesis of the family on the parameters.
Conditions validate(const FieldPtr& field, const FamilySpec& spec);

struct FamilyResult {
  Conditions conditions;
  RhsForm rhs;
  std::optional<Element> root;  // thm-reversal only
};

FamilyResult generate(const FieldPtr& field, const FamilySpec& spec);

}  // namespace invol

#endif  // INVOL_FAMILIES_HPP_
