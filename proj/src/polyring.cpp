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

#include "invol/polyring.hpp"

#include <numeric>
#include <string>

#include "invol/error.hpp"

namespace invol {

SparsePoly::SparsePoly(FieldPtr field) : field_(std::move(field)) {}

SparsePoly SparsePoly::constant(FieldPtr field, Element c) {
  SparsePoly out(std::move(field));
  out.add_term(0, c);
  return out;
}

SparsePoly SparsePoly::monomial(FieldPtr field, Element c, u64 e) {
  SparsePoly out(std::move(field));
  out.add_term(e, c);
  return out;
}

Element SparsePoly::coeff(u64 e) const {
  const auto it = terms_.find(e);
  return it == terms_.end() ? Element(0) : it->second;
}

void SparsePoly::add_term(u64 e, Element c) { add_term_raw(reduce_exponent(e, field_->q()), c); }

void SparsePoly::add_term_raw(u64 e, Element c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.emplace(e, c);
  if (inserted) return;
  it->second = field_->add(it->second, c);
  if (it->second.is_zero()) terms_.erase(it);
}

RhsForm::RhsForm(u64 r, u64 s, const SparsePoly& h) : r_(r), s_(s), d_(0), h_(h.field_ptr()) {
  const u64 m = h.field().group_order();
  if (s == 0 || m % s != 0) {
    throw Error(Errc::kNotADivisor, "s = " + std::to_string(s) + " does not divide " + std::to_string(m));
  }
  if (r == 0) throw Error(Errc::kPreconditionViolated, "r must be positive");
  r_ = reduce_exponent(r, m + 1);
  d_ = m / s;
  h_ = reduce_mod_xd_minus_1(h, d_);
}

SparsePoly reduce_mod_xd_minus_1(const SparsePoly& h, u64 d) {
  SparsePoly out(h.field_ptr());
  for (const auto& [e, c] : h.terms()) out.add_term_raw(e % d, c);
  return out;
}

Element eval(const SparsePoly& f, Element x) {
  const Field& F = f.field();
  if (x.is_zero()) return f.coeff(0);
  Element acc(0);
  if (F.has_tables()) {
    // x^e = alpha^{e log x}; avoids one table lookup per term.
    const u64 m = F.group_order();
    const u64 lx = F.discrete_log(x);
    for (const auto& [e, c] : f.terms()) {
      acc = F.add(acc, F.mul(c, F.alpha_pow(static_cast<i64>(mul_mod(e % m, lx, m)))));
    }
    return acc;
  }
  for (const auto& [e, c] : f.terms()) acc = F.add(acc, F.mul(c, F.pow_u(x, e)));
  return acc;
}

SparsePoly interpolate_on_subgroup(FieldPtr field, u64 d, std::span<const Element> values) {
  const Field& F = *field;
  const Subgroup mu = F.subgroup(d);
  if (values.size() != d) {
    throw Error(Errc::kPreconditionViolated, "expected " + std::to_string(d) + " values");
  }
  // Lagrange basis on the d-th roots of unity: L_i(x) = (1/d) sum_k (x / omega^i)^k,
  // so h_k = (1/d) sum_i values[i] omega^{-ik}. d | q-1 keeps d invertible.
  const Element d_inv = F.inv(F.from_int(static_cast<i64>(d % F.p())));
  SparsePoly out(field);
  for (u64 k = 0; k < d; ++k) {
    Element acc(0);
    for (u64 i = 0; i < d; ++i) {
      if (values[i].is_zero()) continue;
      acc = F.add(acc, F.mul(values[i], mu.elements[(d - (i * k) % d) % d]));
    }
    out.add_term_raw(k, F.mul(acc, d_inv));
  }
  return out;
}

SparsePoly interpolate_function(FieldPtr field, std::span<const Element> table) {
  const Field& F = *field;
  const u64 q = F.q();
  const u64 m = q - 1;
  if (table.size() != q) throw Error(Errc::kPreconditionViolated, "function table must have q entries");
  // On F_q^*: b_k = -sum_j f(alpha^j) alpha^{-jk}. The correction
  // (f(0) - b_0)(1 - x^{q-1}) fixes the value at 0.
  std::vector<Element> on_group(m);
  for (u64 j = 0; j < m; ++j) on_group[j] = table[F.alpha_pow(static_cast<i64>(j)).encoding()];
  std::vector<Element> b(m, Element(0));
  for (u64 k = 0; k < m; ++k) {
    Element acc(0);
    for (u64 j = 0; j < m; ++j) {
      if (on_group[j].is_zero()) continue;
      acc = F.add(acc, F.mul(on_group[j], F.alpha_pow(-static_cast<i64>(mul_mod(j, k, m)))));
    }
    b[k] = F.neg(acc);
  }
  const Element f0 = table[0];
  SparsePoly out(field);
  out.add_term_raw(0, f0);
  for (u64 k = 1; k < m; ++k) out.add_term_raw(k, b[k]);
  out.add_term_raw(m == 0 ? 1 : m, F.sub(b[0], f0));
  return out;
}

SparsePoly expand(const RhsForm& rhs) {
  SparsePoly out(rhs.field_ptr());
  for (const auto& [i, c] : rhs.h().terms()) out.add_term(rhs.r() + rhs.s() * i, c);
  return out;
}

RhsForm decompose(const SparsePoly& f) {
  if (f.is_zero()) throw Error(Errc::kZeroPolynomial, "cannot decompose the zero polynomial");
  if (!f.coeff(0).is_zero()) throw Error(Errc::kHasConstantTerm, "polynomial has a constant term");
  const u64 m = f.field().group_order();
  const u64 r = f.terms().begin()->first;
  u64 s = m;
  for (const auto& [e, c] : f.terms()) s = std::gcd(s, e - r);
  SparsePoly h(f.field_ptr());
  for (const auto& [e, c] : f.terms()) h.add_term_raw((e - r) / s, c);
  return RhsForm(r, s, h);
}

SparsePoly compose_reduce(const SparsePoly& f, const SparsePoly& g, u64 cap) {
  const Field& F = f.field();
  if (F.q() > cap) {
    throw Error(Errc::kFieldTooLarge, "composition over F_" + std::to_string(F.q()) + " exceeds cap " +
                                          std::to_string(cap));
  }
  std::vector<Element> table(F.q());
  for (u64 v = 0; v < F.q(); ++v) table[v] = eval(f, eval(g, Element(static_cast<u32>(v))));
  return interpolate_function(f.field_ptr(), table);
}

}  // namespace invol
