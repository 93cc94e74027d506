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

#include "invol/construct.hpp"

#include <sstream>

#include "invol/error.hpp"

namespace invol {

namespace {

u64 divisor_or_throw(const Field& F, u64 s) {
  const u64 m = F.group_order();
  if (s == 0 || m % s != 0) {
    throw Error(Errc::kNotADivisor, "s = " + std::to_string(s) + " does not divide " + std::to_string(m));
  }
  return m / s;
}

[[noreturn]] void precondition(const std::string& what) { throw Error(Errc::kPreconditionViolated, what); }

void require_even_square_field(const Field& F) {
  if (F.p() != 2 || F.n() % 2 != 0) {
    throw Error(Errc::kWrongFieldShape, "need q = 2^{2k}, got F_" + std::to_string(F.q()));
  }
}

}  // namespace

std::vector<std::string> param_violations(u64 s, const SubgroupInvolution& sigma,
                                          const ConstructionParams& params) {
  std::vector<std::string> out;
  if (!sigma.is_valid()) out.push_back("sigma is not an involution on mu_" + std::to_string(sigma.d));
  if (params.n.size() != sigma.d) {
    out.push_back("n has " + std::to_string(params.n.size()) + " entries, expected " + std::to_string(sigma.d));
  }
  if (!out.empty()) return out;
  if (!squares_to_one(params.r, s)) {
    out.push_back("r^2 = " + std::to_string(mul_mod(params.r % s, params.r % s, s)) + " != 1 mod " +
                  std::to_string(s));
  }
  for (u64 i = 0; i < sigma.d; ++i) {
    const u64 j = sigma.ell[i];
    const u64 lhs = (params.n[j] % s + mul_mod(params.r % s, params.n[i] % s, s)) % s;
    if (lhs != 0) {
      std::ostringstream os;
      os << "n[" << j << "] + r*n[" << i << "] = " << lhs << " != 0 mod " << s;
      out.push_back(os.str());
    }
  }
  return out;
}

std::vector<Element> construction_targets(const Field& field, u64 s, const SubgroupInvolution& sigma,
                                          const ConstructionParams& params) {
  const u64 m = field.group_order();
  const u64 d = m / s;
  std::vector<Element> targets(d);
  for (u64 i = 0; i < d; ++i) {
    // d n_i + ell_i - i r, reduced mod q - 1.
    const u64 up = (d * (params.n[i] % s) + sigma.ell[i]) % m;
    const u64 down = mul_mod(i, params.r % m, m);
    targets[i] = field.alpha_pow(static_cast<i64>((up + m - down) % m));
  }
  return targets;
}

RhsForm interpolate_construction(const FieldPtr& field, u64 s, const SubgroupInvolution& sigma,
                                 const ConstructionParams& params) {
  const u64 d = divisor_or_throw(*field, s);
  if (sigma.d != d || params.n.size() != d) {
    precondition("sigma and n must have d = " + std::to_string(d) + " entries");
  }
  const auto targets = construction_targets(*field, s, sigma, params);
  return RhsForm(params.r, s, interpolate_on_subgroup(field, d, targets));
}

RhsForm construct_general(const FieldPtr& field, u64 s, const SubgroupInvolution& sigma,
                          const ConstructionParams& params) {
  const u64 d = divisor_or_throw(*field, s);
  if (sigma.d != d) {
    precondition("sigma acts on mu_" + std::to_string(sigma.d) + ", expected mu_" + std::to_string(d));
  }
  if (params.r == 0) precondition("r must be positive");
  const auto violations = param_violations(s, sigma, params);
  if (!violations.empty()) {
    std::string msg;
    for (const auto& v : violations) msg += (msg.empty() ? "" : "; ") + v;
    precondition(msg);
  }
  RhsForm rhs = interpolate_construction(field, s, sigma, params);
  if (!check_involution(rhs).verdict) {
    throw Error(Errc::kInternalMismatch, "constructed polynomial fails the involution criterion");
  }
  return rhs;
}

RhsForm construct_from_inverse(const FieldPtr& field, u64 s, const ConstructionParams& params) {
  const u64 d = divisor_or_throw(*field, s);
  return construct_general(field, s, SubgroupInvolution::inverse(d), params);
}

u64 minimal_r(u64 s) {
  for (u64 r = 1;; ++r) {
    if (squares_to_one(r, s)) return r;
  }
}

std::vector<u64> valid_r(u64 s, u64 bound) {
  std::vector<u64> out;
  for (u64 r = 1; r <= bound; ++r) {
    if (squares_to_one(r, s)) out.push_back(r);
  }
  return out;
}

std::vector<u64> fixed_point_n_values(u64 s, u64 r) {
  std::vector<u64> out;
  for (u64 n = 0; n < s; ++n) {
    if (mul_mod(n, (r + 1) % s, s) == 0) out.push_back(n);
  }
  return out;
}

ParamChoices valid_params(const Field& field, u64 s, const SubgroupInvolution& sigma, std::optional<u64> r,
                          std::optional<u64> r_bound) {
  divisor_or_throw(field, s);
  ParamChoices out;
  out.defaults.r = r.value_or(minimal_r(s));
  out.defaults.n.assign(sigma.d, 0);
  out.r_values = valid_r(s, r_bound.value_or(s));
  out.fixed_point_n = fixed_point_n_values(s, out.defaults.r);
  return out;
}

std::vector<u64> complete_n(u64 s, const SubgroupInvolution& sigma, u64 r, const std::vector<u64>& free) {
  std::vector<u64> n(sigma.d, 0);
  for (u64 i = 0; i < sigma.d; ++i) {
    const u64 j = sigma.ell[i];
    if (j < i) continue;
    n[i] = free.at(i) % s;
    if (j != i) n[j] = (s - mul_mod(r % s, n[i], s)) % s;
  }
  return n;
}

bool d2_conditions_hold(const Field& F, u64 r, Element a, Element b) {
  const u64 s = F.group_order() / 2;
  if (!squares_to_one(r, s)) return false;
  const Element half = F.inv(F.from_int(2));
  const Element c1 = F.mul(F.sub(a, b), half);
  const Element c0 = F.mul(F.add(a, b), half);
  const Element minus_one = F.neg(F.one());
  const Element first = F.add(F.mul(c1, F.pow_u(a, s + r)), F.mul(c0, F.pow_u(a, r)));
  const Element sign = r % 2 == 0 ? F.one() : minus_one;
  const Element second = F.add(F.mul(sign, F.mul(c1, F.pow_u(b, s + r))), F.mul(c0, F.pow_u(b, r)));
  const Element rhs = r_square_quotient(r, s, 2) == 0 ? F.one() : minus_one;
  return first == F.one() && second == rhs;
}

SparsePoly construct_d2(const FieldPtr& field, u64 r, Element a, Element b) {
  const Field& F = *field;
  if (F.p() == 2) throw Error(Errc::kEvenCharacteristic, "two-coset construction needs odd q");
  if (r == 0) precondition("r must be positive");
  if (a == b) precondition("a == b gives a monomial; use a*x^r");
  if (!squares_to_one(r, F.group_order() / 2)) precondition("r^2 != 1 mod (q-1)/2");
  if (!d2_conditions_hold(F, r, a, b)) precondition("value conditions at +1 and -1 fail");
  const Element half = F.inv(F.from_int(2));
  SparsePoly h(field);
  h.add_term_raw(1, F.mul(F.sub(a, b), half));
  h.add_term_raw(0, F.mul(F.add(a, b), half));
  return expand(RhsForm(r, F.group_order() / 2, h));
}

SparsePoly construct_d3(const FieldPtr& field, u64 r, u64 n0, u64 n1, u64 n2) {
  const Field& F = *field;
  if (F.p() == 3) throw Error(Errc::kCharacteristicDividesD, "characteristic 3 cannot divide by 3");
  const u64 m = F.group_order();
  if (m % 3 != 0) precondition("q != 1 mod 3");
  if (r == 0) precondition("r must be positive");
  const u64 s = m / 3;
  if (!squares_to_one(r, s)) precondition("r^2 != 1 mod (q-1)/3");
  if (mul_mod(n0 % s, (r + 1) % s, s) != 0) precondition("n0 (r+1) != 0 mod (q-1)/3");
  if ((mul_mod(n1 % s, r % s, s) + n2 % s) % s != 0) precondition("n1 r + n2 != 0 mod (q-1)/3");

  const i64 rr = static_cast<i64>(r % m);
  const Element l0 = F.alpha_pow(static_cast<i64>(3 * (n0 % s)));
  const Element l1 = F.alpha_pow(static_cast<i64>(3 * (n1 % s)) + 2 - rr);
  const Element l2 = F.alpha_pow(static_cast<i64>(3 * (n2 % s)) + 1 - 2 * rr);
  const Element w = F.alpha_pow(static_cast<i64>(s));
  const Element w2 = F.mul(w, w);
  const Element one = F.one(), two = F.from_int(2), three = F.from_int(3);
  // h_2 and h_1 share a shape with omega^2 and omega swapped:
  //   h_2 = ((2+w^2) l0 - (1+2w^2) l1 - (1-w^2) l2) / (3 (1-w)).
  auto numerator = [&](Element v) {
    const Element c0 = F.add(two, v), c1 = F.add(one, F.mul(two, v)), c2 = F.sub(one, v);
    return F.sub(F.sub(F.mul(c0, l0), F.mul(c1, l1)), F.mul(c2, l2));
  };
  const Element h2 = F.div(numerator(w2), F.mul(three, F.sub(one, w)));
  const Element h1 = F.div(numerator(w), F.mul(three, F.sub(one, w2)));
  const Element h0 = F.div(F.add(F.add(l0, l1), l2), three);
  SparsePoly h(field);
  h.add_term_raw(2, h2);
  h.add_term_raw(1, h1);
  h.add_term_raw(0, h0);
  return expand(RhsForm(r, s, h));
}

SparsePoly construct_cor_r1(const FieldPtr& field, u64 n1) {
  const Field& F = *field;
  require_even_square_field(F);
  const u64 q = F.q();
  if (n1 > (q - 4) / 3) precondition("n1 must lie in [0, (q-4)/3]");
  const Element beta = F.alpha_pow(static_cast<i64>(3 * n1 + 1));
  const Element beta_inv = F.inv(beta);
  const Element w = F.alpha_pow(static_cast<i64>((q - 1) / 3));
  const Element w2 = F.mul(w, w);
  const Element one = F.one();
  SparsePoly h(field);
  h.add_term_raw(2, F.add(one, F.add(F.mul(w, beta), F.mul(w2, beta_inv))));
  h.add_term_raw(1, F.add(one, F.add(F.mul(w2, beta), F.mul(w, beta_inv))));
  h.add_term_raw(0, F.add(one, F.add(beta, beta_inv)));
  return expand(RhsForm(1, (q - 1) / 3, h));
}

SparsePoly construct_cor_rq43(const FieldPtr& field, u64 n0, u64 n1) {
  const Field& F = *field;
  require_even_square_field(F);
  const u64 q = F.q();
  const u64 bound = (q - 4) / 3;
  if (n0 > bound || n1 > bound) precondition("n0, n1 must lie in [0, (q-4)/3]");
  const Element h2 = F.alpha_pow(static_cast<i64>(3 * n0));
  const Element h0 = F.add(h2, F.alpha_pow(static_cast<i64>(3 * (n1 + 1))));
  SparsePoly h(field);
  h.add_term_raw(2, h2);
  h.add_term_raw(1, h0);
  h.add_term_raw(0, h0);
  // r = (q-4)/3 is 0 for q = 4; x^0 and x^{q-1} agree on F_q^*.
  const u64 r = bound == 0 ? q - 1 : bound;
  return expand(RhsForm(r, (q - 1) / 3, h));
}

}  // namespace invol
