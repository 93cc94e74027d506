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

#ifndef INVOL_GF_HPP_
#define INVOL_GF_HPP_

// Finite fields F_{p^n} in the polynomial basis Z_p[x]/(modulus).
//
// An element is identified with its coefficient vector (c_0, ..., c_{n-1});
// the Element handle stores the packed integer encoding sum c_i p^i, which is
// also the element's text form and the order used for all deterministic
// sweeps. Fields up to FieldOptions::table_cap elements additionally carry
// exp/log/Zech tables; the table path and the direct polynomial path give
// identical results.

#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <vector>

#include "invol/numtheory.hpp"

namespace invol {

class Element {
 public:
  constexpr Element() = default;
  constexpr explicit Element(u32 encoding) : value_(encoding) {}

  constexpr u32 encoding() const { return value_; }
  constexpr bool is_zero() const { return value_ == 0; }

  friend constexpr auto operator<=>(Element, Element) = default;

 private:
  u32 value_ = 0;
};

struct FieldOptions {
  bool use_tables = true;
  u64 table_cap = u64{1} << 20;
};

// Largest supported field order.
inline constexpr u64 kMaxFieldOrder = u64{1} << 31;

class Field;
using FieldPtr = std::shared_ptr<const Field>;

struct Subgroup {
  u64 d = 0;
  u64 s = 0;
  Element omega;
  std::vector<Element> elements;  // omega^0, ..., omega^{d-1}
};

// Builds F_{p^n}. Without a modulus the lexicographically smallest monic
// irreducible (coefficient list compared from the constant term upward) is
// used. Throws NotPrime, NotIrreducible or Overflow.
FieldPtr make_field(u64 p, u32 n, std::optional<std::vector<u32>> modulus = std::nullopt,
                    FieldOptions options = {});

class Field {
 public:
  u32 p() const { return p_; }
  u32 n() const { return n_; }
  u64 q() const { return q_; }
  // Order of the multiplicative group, q - 1.
  u64 group_order() const { return q_ - 1; }
  // Monic modulus, constant term first, length n + 1.
  const std::vector<u32>& modulus() const { return modulus_; }
  Element alpha() const { return alpha_; }
  bool has_tables() const { return !exp_.empty(); }

  Element zero() const { return Element(0); }
  Element one() const { return Element(1); }
  bool contains(Element x) const { return x.encoding() < q_; }
  // Image of an integer in the prime subfield.
  Element from_int(i64 v) const { return Element(static_cast<u32>(mod_floor(v, p_))); }

  std::vector<u32> coeffs(Element x) const;
  Element from_coeffs(std::span<const u32> coeffs) const;

  Element add(Element x, Element y) const;
  Element sub(Element x, Element y) const { return add(x, neg(y)); }
  Element neg(Element x) const;
  Element mul(Element x, Element y) const;
  Element inv(Element x) const;
  Element div(Element x, Element y) const { return mul(x, inv(y)); }
  // Exponent reduced mod q - 1 for x != 0; negative e requires x != 0.
  Element pow(Element x, i64 e) const;
  Element pow_u(Element x, u64 e) const;
  // alpha^k with k reduced mod q - 1.
  Element alpha_pow(i64 k) const;

  // k in [0, q-1) with alpha^k = x. Baby-step giant-step when no tables.
  u64 discrete_log(Element x) const;

  // mu_d with generator omega = alpha^{(q-1)/d}. Throws NotADivisor.
  Subgroup subgroup(u64 d) const;

  // x^{(q-1)/2} == 1 for odd q; every element is a square for even q.
  bool is_square(Element x) const;

  // Elements of the subfield of order sub_q, in ascending encoding order.
  // Throws WrongFieldShape if sub_q is not p^k with k | n.
  std::vector<Element> subfield(u64 sub_q) const;
  bool in_subfield(Element x, u64 sub_q) const { return pow_u(x, sub_q) == x; }

  Field(const Field&) = delete;
  Field& operator=(const Field&) = delete;

 private:
  friend FieldPtr make_field(u64, u32, std::optional<std::vector<u32>>, FieldOptions);
  Field(u32 p, u32 n, std::vector<u32> modulus);

  Element add_direct(Element x, Element y) const;
  Element mul_direct(Element x, Element y) const;
  Element pow_direct(Element x, u64 e) const;
  u64 discrete_log_bsgs(Element x) const;
  void find_alpha();
  void build_tables();

  u32 p_;
  u32 n_;
  u64 q_;
  std::vector<u32> modulus_;
  Element alpha_;
  // Modulus as a bit mask when p = 2.
  u64 binary_modulus_ = 0;

  // exp_[k] = alpha^k for k in [0, 2(q-1)); log_[x] for x != 0;
  // zech_[k] = log(1 + alpha^k), kNoLog when 1 + alpha^k = 0.
  std::vector<u32> exp_;
  std::vector<u32> log_;
  std::vector<u32> zech_;
  static constexpr u32 kNoLog = 0xffffffffu;
};

}  // namespace invol

#endif  // INVOL_GF_HPP_
