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

#ifndef INVOL_POLYRING_HPP_
#define INVOL_POLYRING_HPP_

#include <map>
#include <span>
#include <vector>

#include "invol/gf.hpp"

namespace invol {

// Functional reduction x^q = x: e > 0 maps into [1, q-1], 0 stays 0.
inline u64 reduce_exponent(u64 e, u64 q) { return e == 0 ? 0 : (e - 1) % (q - 1) + 1; }

// Polynomial as a mapping on F_q: exponent -> nonzero coefficient, with
// exponents kept in canonical functional form. Equal canonical forms induce
// equal functions and vice versa.
class SparsePoly {
 public:
  using Terms = std::map<u64, Element>;

  explicit SparsePoly(FieldPtr field);

  static SparsePoly constant(FieldPtr field, Element c);
  static SparsePoly monomial(FieldPtr field, Element c, u64 e);
  static SparsePoly identity(FieldPtr field) { return monomial(field, Element(1), 1); }

  const Field& field() const { return *field_; }
  const FieldPtr& field_ptr() const { return field_; }
  const Terms& terms() const { return terms_; }

  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  Element coeff(u64 e) const;
  // Exponent reduced before merging; a vanishing sum removes the term.
  void add_term(u64 e, Element c);
  // Same as add_term without functional reduction. Used for h in x^r h(x^s)
  // where exponents are residues mod d, not exponents of F_q.
  void add_term_raw(u64 e, Element c);

  friend bool operator==(const SparsePoly& a, const SparsePoly& b) {
    return a.field_ == b.field_ && a.terms_ == b.terms_;
  }

 private:
  FieldPtr field_;
  Terms terms_;
};

// f(x) = x^r h(x^s) with s | q-1, d = (q-1)/s and deg h < d.
class RhsForm {
 public:
  // Normalizes r into [1, q-1] and reduces h modulo x^d - 1.
  // Throws NotADivisor, PreconditionViolated (r == 0).
  RhsForm(u64 r, u64 s, const SparsePoly& h);

  u64 r() const { return r_; }
  u64 s() const { return s_; }
  u64 d() const { return d_; }
  const SparsePoly& h() const { return h_; }
  const Field& field() const { return h_.field(); }
  const FieldPtr& field_ptr() const { return h_.field_ptr(); }

 private:
  u64 r_;
  u64 s_;
  u64 d_;
  SparsePoly h_;
};

// h mod (x^d - 1), exponents in [0, d).
SparsePoly reduce_mod_xd_minus_1(const SparsePoly& h, u64 d);

// Evaluates h as a formal polynomial (exponent 0 contributes c at x = 0).
Element eval(const SparsePoly& f, Element x);

// Unique h of degree < d with h(omega^i) = values[i]. Throws NotADivisor.
SparsePoly interpolate_on_subgroup(FieldPtr field, u64 d, std::span<const Element> values);

// Unique canonical polynomial inducing the function table[x], indexed by
// element encoding. O(q^2).
SparsePoly interpolate_function(FieldPtr field, std::span<const Element> table);

SparsePoly expand(const RhsForm& rhs);

// Maximal-s decomposition. Throws HasConstantTerm, ZeroPolynomial.
RhsForm decompose(const SparsePoly& f);

inline constexpr u64 kDefaultComposeCap = u64{1} << 14;

// Canonical form of f(g(x)) by evaluation and interpolation. Throws
// FieldTooLarge above cap.
SparsePoly compose_reduce(const SparsePoly& f, const SparsePoly& g, u64 cap = kDefaultComposeCap);

}  // namespace invol

#endif  // INVOL_POLYRING_HPP_
