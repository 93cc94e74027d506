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

#include "invol/families.hpp"

#include <numeric>
#include <sstream>

#include "invol/text.hpp"

namespace invol {

namespace {

std::string str(u64 v) { return std::to_string(v); }

// Conditions collected while building an instance. rhs is set once every
// structural condition holds.
struct Built {
  Conditions conditions;
  std::optional<RhsForm> rhs;
  std::optional<Element> root;

  bool check(std::string name, bool passed, std::string detail = {},
             Errc code = Errc::kPreconditionViolated) {
    conditions.push_back({std::move(name), passed, std::move(detail), code});
    return passed;
  }
  bool ok() const { return all_passed(conditions); }
};

void enforce(const Built& built) {
  std::string msg;
  Errc code = Errc::kPreconditionViolated;
  bool first = true;
  for (const auto& c : built.conditions) {
    if (c.passed) continue;
    if (first) code = c.code;
    first = false;
    msg += (msg.empty() ? "" : "; ") + c.name + (c.detail.empty() ? "" : " (" + c.detail + ")");
  }
  if (!first) throw Error(code, msg);
}

std::optional<u64> exact_power(u64 base, u64 e) {
  u64 out = 1;
  for (u64 i = 0; i < e; ++i) {
    if (out > kMaxFieldOrder / base) return std::nullopt;
    out *= base;
  }
  return out;
}

std::optional<Element> root_on_subgroup(const SparsePoly& h, u64 d) {
  const Subgroup mu = h.field().subgroup(d);
  for (const Element z : mu.elements) {
    if (eval(h, z).is_zero()) return z;
  }
  return std::nullopt;
}

std::string element_text(const Field& F, Element x) { return format_element(F, x); }

// ---- conjugate-symmetric ----

Built build_conj_symmetric(const FieldPtr& field, u64 r, const std::map<u64, Element>& terms) {
  const Field& F = *field;
  Built b;
  if (!b.check("field is F_{q^2}", F.n() % 2 == 0, "F_" + str(F.q()), Errc::kWrongFieldShape)) return b;
  const u64 q = square_root_order(F);
  if (!b.check("r = -1 mod q-1", r >= 1 && (r + 1) % (q - 1) == 0, "r = " + str(r))) return b;
  const u128 quotient = (static_cast<u128>(r) * r - 1) / (q - 1);
  b.check("2(r^2-1)/(q-1) = 0 mod q+1", static_cast<u64>((2 * quotient) % (q + 1)) == 0);
  const auto omega = omega_set(q, r);
  for (const auto& [i, c] : terms) {
    const bool in = std::find(omega.begin(), omega.end(), i) != omega.end();
    b.check("term index in Omega", in, "i = " + str(i));
  }
  if (!b.ok()) return b;
  SparsePoly h(field);
  for (const auto& [i, c] : terms) {
    h.add_term_raw(i % (q + 1), c);
    h.add_term_raw((q * i) % (q + 1), F.pow_u(c, q));
  }
  b.root = root_on_subgroup(h, q + 1);
  b.check("h has no root in mu_{q+1}", !b.root, b.root ? "beta = " + element_text(F, *b.root) : "",
          Errc::kHValueZero);
  // The symmetry the construction is meant to produce.
  const Subgroup mu = F.subgroup(q + 1);
  const u64 e = static_cast<u64>(quotient % (q + 1));
  for (const Element beta : mu.elements) {
    const Element hb = eval(h, beta);
    const Element lhs = F.mul(F.pow_u(beta, e), eval(h, F.pow_u(beta, r)));
    if (lhs != hb || F.pow_u(hb, q) != hb) {
      b.check("beta^{(r^2-1)/(q-1)} h(beta^r) = h(beta) in F_q", false, "beta = " + element_text(F, beta));
      return b;
    }
  }
  b.check("beta^{(r^2-1)/(q-1)} h(beta^r) = h(beta) in F_q", true);
  b.rhs = RhsForm(r, q - 1, h);
  return b;
}

Built build_cor_qb(const FieldPtr& field, u64 i, Element bcoef) {
  const Field& F = *field;
  Built b;
  if (!b.check("field is F_{q^2}", F.n() % 2 == 0, "F_" + str(F.q()), Errc::kWrongFieldShape)) return b;
  const u64 q = square_root_order(F);
  if (!b.check("q odd", q % 2 == 1)) return b;
  b.check("1 <= i <= q", i >= 1 && i <= q, "i = " + str(i));
  if (!b.check("b != 0", !bcoef.is_zero())) return b;
  const bool square = F.is_square(bcoef);
  if (q % 4 == 1) {
    b.check("q = 1 mod 4 and b square", square);
  } else {
    b.check("q = 3 mod 4 and b non-square", !square);
  }
  if (!b.ok()) return b;
  SparsePoly h(field);
  h.add_term_raw(i, bcoef);
  h.add_term_raw(q * i, F.pow_u(bcoef, q));
  b.rhs = RhsForm(q * q - q - 1, q - 1, h);
  return b;
}

// ---- palindromic ----

Built build_palindromic(const FieldPtr& field, u64 q, u64 m, u64 d, u64 r, const std::vector<Element>& coeffs) {
  const Field& F = *field;
  Built b;
  const auto Q = exact_power(q, m);
  if (!b.check("field is F_{q^m}", Q && *Q == F.q() && prime_power(q) && prime_power(q)->first == F.p(),
               "q = " + str(q) + ", m = " + str(m), Errc::kWrongFieldShape)) {
    return b;
  }
  if (!b.check("d | gcd(q-1, m)", d >= 1 && std::gcd(q - 1, m) % d == 0, "d = " + str(d))) return b;
  const u64 s = (F.q() - 1) / d;
  if (!b.check("r = -1 mod s", r >= 1 && (r + 1) % s == 0, "r = " + str(r) + ", s = " + str(s))) return b;
  if (!b.check("d coefficients", coeffs.size() == d, str(coeffs.size()) + " given")) return b;
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    b.check("coefficient in F_q", F.in_subfield(coeffs[i], q), "h_" + str(i));
  }
  const u64 e = palindromic_shift(r, s, d);
  bool symmetric = true;
  for (u64 i = 0; i < d; ++i) {
    const u64 mirror = i <= e ? e - i : d + e - i;
    if (coeffs[i] != coeffs[mirror]) symmetric = false;
  }
  b.check("h_{e-i} = h_i and h_{d+e-i} = h_i", symmetric, "e = " + str(e));
  if (!b.ok()) return b;
  SparsePoly h(field);
  for (u64 i = 0; i < d; ++i) h.add_term_raw(i, coeffs[i]);
  b.root = root_on_subgroup(h, d);
  if (!b.check("h has no root in mu_d", !b.root, b.root ? "beta = " + element_text(F, *b.root) : "",
               Errc::kHValueZero)) {
    return b;
  }
  b.rhs = RhsForm(r, s, h);
  return b;
}

// ---- reversal ----

Built build_reversal(const FieldPtr& field, u64 r, const std::vector<Element>& coeffs) {
  const Field& F = *field;
  Built b;
  if (!b.check("field is F_{q^2}", F.n() % 2 == 0, "F_" + str(F.q()), Errc::kWrongFieldShape)) return b;
  const u64 q = square_root_order(F);
  if (!b.check("coefficients given", !coeffs.empty())) return b;
  const u64 deg = coeffs.size() - 1;
  b.check("r = -1 mod q-1", r >= 1 && (r + 1) % (q - 1) == 0, "r = " + str(r));
  b.check("deg = r-1 mod q+1", r >= 1 && mod_floor(static_cast<i64>(r) - 1 - static_cast<i64>(deg), q + 1) == 0,
          "deg = " + str(deg));
  b.check("a_0 != 0", !coeffs[0].is_zero());
  bool conj = true;
  for (u64 i = 0; 2 * i <= deg; ++i) {
    if (coeffs[deg - i] != F.pow_u(coeffs[i], q)) conj = false;
  }
  b.check("a_{deg-i} = a_i^q", conj);
  if (!b.ok()) return b;
  SparsePoly h(field);
  for (u64 i = 0; i <= deg; ++i) h.add_term_raw(i, coeffs[i]);
  b.root = root_on_subgroup(h, q + 1);
  b.rhs = RhsForm(r, q - 1, h);
  return b;
}

// ---- cor-exm ----

Built build_cor_exm(const FieldPtr& field, Element a) {
  const Field& F = *field;
  Built b;
  if (!b.check("field is F_{q^2}", F.n() % 2 == 0, "F_" + str(F.q()), Errc::kWrongFieldShape)) return b;
  const u64 q = square_root_order(F);
  if (!b.check("q odd", q % 2 == 1, "even q: no a gives an involution", Errc::kEvenQNoSolution)) return b;
  if (!b.check("a != 0", !a.is_zero())) return b;
  const ExmVerdicts v = cor_exm_verdicts(F, a);
  if (v.case_table != v.gcd_form) {
    b.check("case table agrees with gcd form", false, v.case_name, Errc::kInternalMismatch);
    return b;
  }
  b.check(v.case_name, v.case_table);
  if (b.ok()) b.rhs = cor_exm_form(field, a);
  return b;
}

// ---- geometric ----

Built build_geometric(const FieldPtr& field, u64 q, u64 d, u64 m, u64 k) {
  const Field& F = *field;
  Built b;
  const auto Q = exact_power(q, m);
  if (!b.check("field is F_{q^m}", Q && *Q == F.q() && prime_power(q) && prime_power(q)->first == F.p(),
               "q = " + str(q) + ", m = " + str(m), Errc::kWrongFieldShape)) {
    return b;
  }
  b.conditions = geometric_conditions(F.p(), q, d, m, k);
  if (!b.ok()) return b;
  SparsePoly h(field);
  for (u64 j = 0; j < k; ++j) h.add_term_raw(j % d, F.one());
  b.rhs = RhsForm(1, (F.q() - 1) / d, h);
  return b;
}

// ---- lift ----

Built build_lift(const FieldPtr& field, u64 q, u64 m, u64 r, const SparsePoly& h, bool check_base) {
  const Field& F = *field;
  Built b;
  const auto Q = exact_power(q, m);
  if (!b.check("field is F_{q^m}", Q && *Q == F.q() && prime_power(q) && prime_power(q)->first == F.p(),
               "q = " + str(q) + ", m = " + str(m), Errc::kWrongFieldShape)) {
    return b;
  }
  const u64 s = (F.q() - 1) / (q - 1);
  b.check("gcd(q-1, m) = 1", std::gcd(q - 1, m) == 1);
  b.check("r^2 = 1 mod (q^m-1)/(q-1)", r >= 1 && squares_to_one(r, s), "r = " + str(r));
  bool sub = true;
  for (const auto& [e, c] : h.terms()) sub = sub && F.in_subfield(c, q);
  b.check("h over F_q", sub);
  if (!b.ok()) return b;
  if (check_base &&
      !b.check("x^r h(x)^m is an involution on F_q", base_is_involution(F, q, m, r, h), "",
               Errc::kBaseNotInvolution)) {
    return b;
  }
  b.rhs = RhsForm(r, s, h);
  return b;
}

}  // namespace

bool all_passed(const Conditions& conditions) {
  for (const auto& c : conditions) {
    if (!c.passed) return false;
  }
  return true;
}

u64 square_root_order(const Field& field) {
  if (field.n() % 2 != 0) {
    throw Error(Errc::kWrongFieldShape, "F_" + str(field.q()) + " is not a square-order field");
  }
  return *exact_power(field.p(), field.n() / 2);
}

std::vector<u64> omega_set(u64 q, u64 r) {
  if (r == 0 || (r + 1) % (q - 1) != 0) {
    throw Error(Errc::kPreconditionViolated, "r = " + str(r) + " is not -1 mod " + str(q - 1));
  }
  const u64 e = (r + 1) / (q - 1);
  std::vector<u64> out;
  for (u64 i = 0; i <= q; ++i) {
    if (static_cast<u128>(e + i) * (r - 1) % (q + 1) == 0) out.push_back(i);
  }
  return out;
}

RhsForm gen_conj_symmetric(const FieldPtr& field, u64 r, const std::map<u64, Element>& terms) {
  const Built b = build_conj_symmetric(field, r, terms);
  enforce(b);
  return *b.rhs;
}

RhsForm gen_cor_qb(const FieldPtr& field, u64 i, Element bcoef) {
  const Built b = build_cor_qb(field, i, bcoef);
  enforce(b);
  return *b.rhs;
}

u64 palindromic_shift(u64 r, u64 s, u64 d) { return r_square_quotient(r, s, d); }

std::vector<u64> palindromic_free_positions(u64 d, u64 e) {
  std::vector<u64> out;
  for (u64 i = 0; 2 * i <= e; ++i) out.push_back(i);
  for (u64 i = e + 1; i < d && 2 * i <= d + e; ++i) out.push_back(i);
  return out;
}

std::vector<Element> palindromic_complete(u64 d, u64 e, const std::vector<Element>& free) {
  const auto positions = palindromic_free_positions(d, e);
  if (free.size() != positions.size()) {
    throw Error(Errc::kPreconditionViolated,
                "expected " + str(positions.size()) + " free coefficients, got " + str(free.size()));
  }
  std::vector<Element> out(d);
  for (std::size_t k = 0; k < positions.size(); ++k) {
    const u64 i = positions[k];
    out[i] = free[k];
    out[i <= e ? e - i : d + e - i] = free[k];
  }
  return out;
}

RhsForm gen_palindromic(const FieldPtr& field, u64 q, u64 m, u64 d, u64 r, const std::vector<Element>& free) {
  if (d == 0 || (field->q() - 1) % d != 0 || (r + 1) % ((field->q() - 1) / d) != 0) {
    // Let the full builder report the failing hypothesis.
    return gen_palindromic_full(field, q, m, d, r, std::vector<Element>(d == 0 ? 0 : d));
  }
  const u64 e = palindromic_shift(r, (field->q() - 1) / d, d);
  return gen_palindromic_full(field, q, m, d, r, palindromic_complete(d, e, free));
}

RhsForm gen_palindromic_full(const FieldPtr& field, u64 q, u64 m, u64 d, u64 r,
                             const std::vector<Element>& coeffs) {
  const Built b = build_palindromic(field, q, m, d, r, coeffs);
  enforce(b);
  return *b.rhs;
}

namespace {

std::vector<Element> mdq1_coeffs(u64 q, Element a, Element b) {
  std::vector<Element> h(q - 1);
  h[q - 2] = a;
  h[q - 3] = b;
  h[0] = q == 3 ? a : b;
  return h;
}

Built build_cor_mdq1(const FieldPtr& field, u64 q, Element a, Element b) {
  Built out;
  const auto pp = prime_power(q);
  if (!out.check("q = 2^k, q >= 4", pp && pp->first == 2 && q >= 4, "q = " + str(q), Errc::kWrongFieldShape)) {
    return out;
  }
  const auto Q = exact_power(q, q - 1);
  if (!out.check("field is F_{q^{q-1}}", Q && *Q == field->q(), "", Errc::kWrongFieldShape)) return out;
  const u64 s = (field->q() - 1) / (q - 1);
  return build_palindromic(field, q, q - 1, q - 1, s - 1, mdq1_coeffs(q, a, b));
}

Built build_cor_m4d4(const FieldPtr& field, Element a, Element b, Element c) {
  const Field& F = *field;
  Built out;
  if (!out.check("field is F_{3^{8k}}", F.p() == 3 && F.n() % 8 == 0, "F_" + str(F.q()),
                 Errc::kWrongFieldShape)) {
    return out;
  }
  const u64 q = *exact_power(3, F.n() / 4);
  return build_palindromic(field, q, 4, 4, F.q() - 2, {c, a, b, a});
}

}  // namespace

RhsForm gen_cor_mdq1(const FieldPtr& field, u64 q, Element a, Element b) {
  const Built built = build_cor_mdq1(field, q, a, b);
  enforce(built);
  return *built.rhs;
}

RhsForm gen_cor_m4d4(const FieldPtr& field, Element a, Element b, Element c) {
  const Built built = build_cor_m4d4(field, a, b, c);
  enforce(built);
  return *built.rhs;
}

ReversalResult gen_reversal(const FieldPtr& field, u64 r, const std::vector<Element>& coeffs) {
  const Built b = build_reversal(field, r, coeffs);
  enforce(b);
  return ReversalResult{*b.rhs, b.root};
}

RhsForm cor_exm_form(const FieldPtr& field, Element a) {
  const Field& F = *field;
  const u64 q = square_root_order(F);
  SparsePoly h(field);
  h.add_term_raw(q - 3, a);
  h.add_term_raw(0, F.pow_u(a, q));
  return RhsForm(q - 2 == 0 ? q * q - 1 : q - 2, q - 1, h);
}

ExmVerdicts cor_exm_verdicts(const Field& F, Element a) {
  const u64 q = square_root_order(F);
  if (q % 2 == 0) throw Error(Errc::kEvenQNoSolution, "q even: no a in F_{q^2} gives an involution");
  if (a.is_zero()) throw Error(Errc::kPreconditionViolated, "a must be nonzero");
  const u64 Q1 = q * q - 1;
  const Element minus_one = F.neg(F.one());
  ExmVerdicts v;
  if (q % 4 == 1) {
    v.case_name = "q = 1 mod 4 and a^{(q^2-1)/2} != -1";
    v.case_table = F.pow_u(a, Q1 / 2) != minus_one;
  } else if (q % 8 == 3) {
    v.case_name = "q = 3 mod 8 and a^{(q^2-1)/4} != -1";
    v.case_table = F.pow_u(a, Q1 / 4) != minus_one;
  } else {
    v.case_name = "q = 7 mod 8 and a^{(q^2-1)/4} != 1";
    v.case_table = F.pow_u(a, Q1 / 4) != F.one();
  }
  const u64 g = std::gcd(q + 1, q - 3);
  const Element base = F.neg(F.pow_u(a, q - 1));
  v.gcd_form = F.pow_u(base, (q + 1) / g) != F.one();
  return v;
}

RhsForm gen_cor_exm(const FieldPtr& field, Element a) {
  const Built b = build_cor_exm(field, a);
  enforce(b);
  return *b.rhs;
}

Conditions geometric_conditions(u64 p, u64 q, u64 d, u64 m, u64 k) {
  Built b;
  b.check("d >= 1", d >= 1);
  b.check("k >= 1", k >= 1);
  if (!b.ok()) return b.conditions;
  b.check("q = -1 mod d", (q + 1) % d == 0, "q = " + str(q) + ", d = " + str(d));
  if (!b.check("m even", m % 2 == 0, "m = " + str(m))) return b.conditions;
  const u128 numer = static_cast<u128>(m / 2) * (static_cast<u128>(q) * q - 1);
  if (!b.check("(m/2)(q^2-1)/(2d) integral", numer % (2 * d) == 0)) return b.conditions;
  const i64 x = static_cast<i64>(numer / (2 * d)) - 1;
  const u64 g = std::gcd(k + 1, static_cast<u64>(x < 0 ? -x : x));
  b.check("(k-1) gcd(k+1, (m/2)(q^2-1)/(2d) - 1) = 0 mod d", static_cast<u128>(k - 1) * g % d == 0,
          "gcd = " + str(g));
  b.check("k^2 = 1 mod p", (static_cast<u128>(k) * k - 1) % p == 0, "k = " + str(k));
  return b.conditions;
}

RhsForm gen_geometric(const FieldPtr& field, u64 q, u64 d, u64 m, u64 k) {
  const Built b = build_geometric(field, q, d, m, k);
  enforce(b);
  return *b.rhs;
}

bool base_is_involution(const Field& F, u64 q, u64 m, u64 r, const SparsePoly& h) {
  auto g = [&](Element x) { return F.mul(F.pow_u(x, r), F.pow_u(eval(h, x), m)); };
  for (const Element x : F.subfield(q)) {
    if (g(g(x)) != x) return false;
  }
  return true;
}

RhsForm lift_form(const FieldPtr& field, u64 q, u64 m, u64 r, const SparsePoly& h) {
  const Built b = build_lift(field, q, m, r, h, false);
  enforce(b);
  return *b.rhs;
}

RhsForm lift_involution(const FieldPtr& field, u64 q, u64 m, u64 r, const SparsePoly& h) {
  const Built b = build_lift(field, q, m, r, h, true);
  enforce(b);
  return *b.rhs;
}

RhsForm lift_cor_r1(const FieldPtr& field, u64 n1) {
  const Field& F = *field;
  if (F.p() != 2 || F.n() % 4 != 0) {
    throw Error(Errc::kWrongFieldShape, "need F_{q^2} with q = 2^{2k}, got F_" + str(F.q()));
  }
  const u64 q = square_root_order(F);
  if (n1 > (q - 4) / 3) throw Error(Errc::kPreconditionViolated, "n1 must lie in [0, (q-4)/3]");
  const u64 third = (q - 1) / 3;
  // Primitive element of the subfield F_q.
  const Element sub_alpha = F.alpha_pow(static_cast<i64>(q + 1));
  const Element w = F.pow_u(sub_alpha, third);
  const Element w2 = F.mul(w, w);
  const Element beta = F.pow_u(sub_alpha, 3 * n1 + 1);
  const Element beta_inv = F.inv(beta);
  const Element one = F.one();
  const Element h2 = F.add(one, F.add(F.mul(w, beta), F.mul(w2, beta_inv)));
  const Element h1 = F.add(one, F.add(F.mul(w2, beta), F.mul(w, beta_inv)));
  const Element h0 = F.add(one, F.add(beta, beta_inv));
  auto sqrt = [&](Element c) { return F.pow_u(c, F.q() / 2); };
  // (x^{e1})^2 = x^{(q-1)/3} on F_q; q/2 inverts 2 mod q-1.
  const u64 e1 = mul_mod(third, q / 2, q - 1);
  SparsePoly h(field);
  h.add_term_raw(third, sqrt(h2));
  h.add_term_raw(e1, sqrt(h1));
  h.add_term_raw(0, sqrt(h0));
  return lift_form(field, q, 2, 1, h);
}

RhsForm lift_cor_exm(const FieldPtr& field, Element a) {
  const Field& F = *field;
  if (F.p() != 3 || F.n() % 6 != 0) {
    throw Error(Errc::kWrongFieldShape, "need F_{q^6} with q = 3^k, got F_" + str(F.q()));
  }
  const u64 q = *exact_power(3, F.n() / 6);
  const u64 q2 = q * q;
  if (!F.in_subfield(a, q2)) throw Error(Errc::kPreconditionViolated, "a must lie in F_{q^2}");
  // Cube roots in F_{q^2}: c^{1/3} = c^{q^2/3}.
  SparsePoly h(field);
  h.add_term_raw((q2 - 3 * q) / 3, F.pow_u(a, q2 / 3));
  h.add_term_raw((q - 3) / 3, F.pow_u(a, q / 3));
  return lift_form(field, q2, 3, 1, h);
}

bool check_iff_subgroup(const RhsForm& rhs) {
  const Field& F = rhs.field();
  if (!squares_to_one(rhs.r(), rhs.s())) {
    throw Error(Errc::kHypothesisViolated, "r^2 != 1 mod s");
  }
  if (std::gcd(rhs.s(), rhs.d()) != 1) {
    throw Error(Errc::kHypothesisViolated, "gcd(s, d) = " + str(std::gcd(rhs.s(), rhs.d())) + " != 1");
  }
  const Subgroup mu = F.subgroup(rhs.d());
  for (const Element z : mu.elements) {
    const Element hz = eval(rhs.h(), z);
    if (hz.is_zero() || F.pow_u(hz, rhs.d()) != F.one()) {
      throw Error(Errc::kHypothesisViolated, "h(" + element_text(F, z) + ") is not in mu_" + str(rhs.d()));
    }
  }
  for (const Element z : mu.elements) {
    if (g_map(rhs, g_map(rhs, z)) != z) return false;
  }
  return true;
}

// ---- catalog and dispatch ----

const std::vector<FamilyInfo>& family_catalog() {
  static const std::vector<FamilyInfo> catalog = {
      {FamilyId::kConjSymmetric, "thm-conj-symmetric", "r=<int>,terms=<i:c;i:c;...>",
       "x^r h(x^{q-1}) over F_{q^2}, h = sum h_i x^i + h_i^q x^{qi}, r = -1 mod q-1"},
      {FamilyId::kCorQb, "cor-qb", "i=<int>,b=<elem>",
       "b x^{q^2+(i-1)q-1-i} + b^q x^{(1+i)q^2-(1+i)q-1} over F_{q^2}, q odd"},
      {FamilyId::kPalindromic, "thm-palindromic", "q=<int>,m=<int>,d=<int>,r=<int>,free=<c;c;...>",
       "x^r h(x^s) over F_{q^m}, h over F_q with mirrored coefficients, d | gcd(q-1, m)"},
      {FamilyId::kCorMdq1, "cor-mdq1", "q=<int>,a=<elem>,b=<elem>",
       "x^{s-1} (a x^{(q-2)s} + b x^{(q-3)s} + b) over F_{q^{q-1}}, q = 2^k"},
      {FamilyId::kCorM4d4, "cor-m4d4", "a=<elem>,b=<elem>,c=<elem>",
       "x^{Q-2} h(x^{(Q-1)/4}), h = a x^3 + b x^2 + a x + c over F_{3^{2k}}, Q = 3^{8k}"},
      {FamilyId::kReversal, "thm-reversal", "r=<int>,coeffs=<a0;a1;...;ad>",
       "x^r h(x^{q-1}) over F_{q^2} with a_{d-i} = a_i^q; involution iff h has no root in mu_{q+1}"},
      {FamilyId::kCorExm, "cor-exm", "a=<elem>", "a x^{q^2-3q+1} + a^q x^{q-2} over F_{q^2}, q odd"},
      {FamilyId::kGeometric, "thm-geometric", "q=<int>,d=<int>,m=<int>,k=<int>",
       "x (1 + x^s + ... + x^{(k-1)s}) over F_{q^m}, m even, q = -1 mod d"},
      {FamilyId::kLift, "lift", "q=<int>,m=<int>,r=<int>,h=<poly>",
       "x^r h(x^{(q^m-1)/(q-1)}) over F_{q^m} from the involution x^r h(x)^m of F_q"},
  };
  return catalog;
}

FamilySpec parse_family_spec(std::string_view id, std::string_view params) {
  FamilySpec spec{};
  bool found = false;
  for (const auto& info : family_catalog()) {
    if (info.name == id) {
      spec.id = info.id;
      found = true;
    }
  }
  if (!found) throw Error(Errc::kUnknownFamily, "unknown family '" + std::string(id) + "'");
  std::size_t pos = 0;
  while (pos < params.size()) {
    std::size_t end = params.find(',', pos);
    if (end == std::string_view::npos) end = params.size();
    const std::string_view item = params.substr(pos, end - pos);
    const std::size_t eq = item.find('=');
    if (eq == std::string_view::npos || eq == 0) {
      throw Error(Errc::kParseError, "expected key=value at position " + str(pos) + " in \"" +
                                         std::string(params) + "\"");
    }
    spec.params[std::string(item.substr(0, eq))] = std::string(item.substr(eq + 1));
    pos = end + 1;
  }
  return spec;
}

namespace {

class ParamReader {
 public:
  ParamReader(const FieldPtr& field, const FamilySpec& spec) : field_(field), spec_(spec) {}

  const std::string& raw(const std::string& key) const {
    const auto it = spec_.params.find(key);
    if (it == spec_.params.end()) throw Error(Errc::kPreconditionViolated, "missing parameter '" + key + "'");
    return it->second;
  }
  u64 integer(const std::string& key) const {
    const std::string& v = raw(key);
    std::size_t used = 0;
    u64 out = 0;
    try {
      out = std::stoull(v, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != v.size()) throw Error(Errc::kParseError, "parameter '" + key + "' is not an integer");
    return out;
  }
  Element element(const std::string& key) const { return parse_element(*field_, raw(key)); }
  std::vector<Element> elements(const std::string& key) const {
    std::vector<Element> out;
    for (const auto& piece : split(raw(key))) out.push_back(parse_element(*field_, piece));
    return out;
  }
  std::map<u64, Element> indexed(const std::string& key) const {
    std::map<u64, Element> out;
    for (const auto& piece : split(raw(key))) {
      const std::size_t colon = piece.find(':');
      if (colon == std::string::npos) throw Error(Errc::kParseError, "expected i:c in '" + piece + "'");
      out[std::stoull(piece.substr(0, colon))] = parse_element(*field_, piece.substr(colon + 1));
    }
    return out;
  }
  SparsePoly poly(const std::string& key) const { return parse_poly(field_, raw(key)); }

 private:
  static std::vector<std::string> split(const std::string& v) {
    std::vector<std::string> out;
    std::stringstream ss(v);
    std::string piece;
    while (std::getline(ss, piece, ';')) out.push_back(piece);
    return out;
  }

  const FieldPtr& field_;
  const FamilySpec& spec_;
};

Built build_family(const FieldPtr& field, const FamilySpec& spec) {
  const ParamReader in(field, spec);
  switch (spec.id) {
    case FamilyId::kConjSymmetric:
      return build_conj_symmetric(field, in.integer("r"), in.indexed("terms"));
    case FamilyId::kCorQb:
      return build_cor_qb(field, in.integer("i"), in.element("b"));
    case FamilyId::kPalindromic: {
      const u64 q = in.integer("q"), m = in.integer("m"), d = in.integer("d"), r = in.integer("r");
      const auto free = in.elements("free");
      if (d == 0 || (field->q() - 1) % d != 0 || (r + 1) % ((field->q() - 1) / d) != 0) {
        return build_palindromic(field, q, m, d, r, std::vector<Element>(d == 0 ? 0 : d));
      }
      const u64 e = palindromic_shift(r, (field->q() - 1) / d, d);
      return build_palindromic(field, q, m, d, r, palindromic_complete(d, e, free));
    }
    case FamilyId::kCorMdq1:
      return build_cor_mdq1(field, in.integer("q"), in.element("a"), in.element("b"));
    case FamilyId::kCorM4d4:
      return build_cor_m4d4(field, in.element("a"), in.element("b"), in.element("c"));
    case FamilyId::kReversal:
      return build_reversal(field, in.integer("r"), in.elements("coeffs"));
    case FamilyId::kCorExm:
      return build_cor_exm(field, in.element("a"));
    case FamilyId::kGeometric:
      return build_geometric(field, in.integer("q"), in.integer("d"), in.integer("m"), in.integer("k"));
    case FamilyId::kLift:
      return build_lift(field, in.integer("q"), in.integer("m"), in.integer("r"), in.poly("h"), true);
  }
  throw Error(Errc::kUnknownFamily, "unknown family");
}

}  // namespace

Conditions validate(const FieldPtr& field, const FamilySpec& spec) {
  try {
    return build_family(field, spec).conditions;
  } catch (const Error& e) {
    if (e.code() == Errc::kUnknownFamily) throw;
    return {{"well-formed parameters", false, e.what(), e.code()}};
  }
}

FamilyResult generate(const FieldPtr& field, const FamilySpec& spec) {
  Built b = build_family(field, spec);
  enforce(b);
  return FamilyResult{std::move(b.conditions), *b.rhs, b.root};
}

}  // namespace invol
