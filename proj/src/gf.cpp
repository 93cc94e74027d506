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

#include "invol/gf.hpp"

#include <algorithm>
#include <string>
#include <unordered_map>

#include "invol/error.hpp"

namespace invol {

namespace {

// Dense polynomials over Z_p, constant term first, no trailing zeros.
using DensePoly = std::vector<u64>;

void trim(DensePoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

DensePoly poly_mod(DensePoly a, const DensePoly& f, u64 p) {
  trim(a);
  const std::size_t df = f.size() - 1;
  const u64 lead_inv = *inverse_mod(f.back(), p);
  while (a.size() > df) {
    const u64 c = mul_mod(a.back(), lead_inv, p);
    const std::size_t shift = a.size() - 1 - df;
    for (std::size_t i = 0; i <= df; ++i) {
      a[shift + i] = (a[shift + i] + p - mul_mod(c, f[i], p)) % p;
    }
    trim(a);
  }
  return a;
}

DensePoly poly_mulmod(const DensePoly& a, const DensePoly& b, const DensePoly& f, u64 p) {
  if (a.empty() || b.empty()) return {};
  DensePoly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      r[i + j] = (r[i + j] + mul_mod(a[i], b[j], p)) % p;
    }
  }
  return poly_mod(std::move(r), f, p);
}

DensePoly poly_powmod(DensePoly base, u64 e, const DensePoly& f, u64 p) {
  DensePoly r{1};
  base = poly_mod(std::move(base), f, p);
  while (e != 0) {
    if (e & 1) r = poly_mulmod(r, base, f, p);
    base = poly_mulmod(base, base, f, p);
    e >>= 1;
  }
  return r;
}

DensePoly poly_gcd(DensePoly a, DensePoly b, u64 p) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    DensePoly r = poly_mod(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

// gcd(x^{p^k} - x, f) = 1 for all k <= n/2.
bool is_irreducible(const std::vector<u32>& modulus, u64 p) {
  const std::size_t n = modulus.size() - 1;
  if (n <= 1) return true;
  const DensePoly f(modulus.begin(), modulus.end());
  DensePoly frob = poly_powmod(DensePoly{0, 1}, p, f, p);  // x^p mod f
  for (std::size_t k = 1; k <= n / 2; ++k) {
    DensePoly diff = frob;
    if (diff.size() < 2) diff.resize(2, 0);
    diff[1] = (diff[1] + p - 1) % p;
    trim(diff);
    if (diff.empty()) return false;
    if (poly_gcd(f, diff, p).size() > 1) return false;
    frob = poly_powmod(frob, p, f, p);
  }
  return true;
}

std::vector<u32> smallest_irreducible(u64 p, u32 n) {
  // Odometer over (c_0, ..., c_{n-1}) with c_0 most significant, so the
  // first hit is lexicographically smallest from the constant term upward.
  std::vector<u32> coeffs(n, 0);
  // c_0 = 0 means x divides the candidate.
  if (n >= 2) coeffs[0] = 1;
  for (;;) {
    std::vector<u32> candidate = coeffs;
    candidate.push_back(1);
    if (is_irreducible(candidate, p)) return candidate;
    int pos = static_cast<int>(n) - 1;
    while (pos >= 0 && coeffs[pos] + 1 == p) coeffs[pos--] = 0;
    if (pos < 0) break;
    ++coeffs[pos];
  }
  throw Error(Errc::kNotIrreducible, "no monic irreducible of degree " + std::to_string(n));
}

}  // namespace

FieldPtr make_field(u64 p, u32 n, std::optional<std::vector<u32>> modulus, FieldOptions options) {
  if (!is_prime(p)) throw Error(Errc::kNotPrime, std::to_string(p) + " is not prime");
  if (n < 1) throw Error(Errc::kPreconditionViolated, "extension degree must be >= 1");
  u64 q = 1;
  for (u32 i = 0; i < n; ++i) {
    q *= p;
    if (q > kMaxFieldOrder) {
      throw Error(Errc::kOverflow, "field order " + std::to_string(p) + "^" + std::to_string(n) +
                                       " exceeds 2^31");
    }
  }
  std::vector<u32> f;
  if (modulus) {
    f = *modulus;
    if (f.size() != n + 1u || f.back() != 1) {
      throw Error(Errc::kNotIrreducible, "modulus must be monic of degree " + std::to_string(n));
    }
    for (u32 c : f) {
      if (c >= p) throw Error(Errc::kNotIrreducible, "modulus coefficient out of range");
    }
    if (!is_irreducible(f, p)) throw Error(Errc::kNotIrreducible, "modulus is reducible");
  } else {
    f = smallest_irreducible(p, n);
  }
  std::shared_ptr<Field> field(new Field(static_cast<u32>(p), n, std::move(f)));
  field->find_alpha();
  if (options.use_tables && q <= options.table_cap) field->build_tables();
  return field;
}

Field::Field(u32 p, u32 n, std::vector<u32> modulus)
    : p_(p), n_(n), q_(1), modulus_(std::move(modulus)) {
  for (u32 i = 0; i < n_; ++i) q_ *= p_;
  if (p_ == 2) {
    for (u32 i = 0; i <= n_; ++i) binary_modulus_ |= u64{modulus_[i]} << i;
  }
}

std::vector<u32> Field::coeffs(Element x) const {
  std::vector<u32> out(n_);
  u64 v = x.encoding();
  for (u32 i = 0; i < n_; ++i) {
    out[i] = static_cast<u32>(v % p_);
    v /= p_;
  }
  return out;
}

Element Field::from_coeffs(std::span<const u32> coeffs) const {
  u64 v = 0;
  for (std::size_t i = coeffs.size(); i-- > 0;) {
    v = v * p_ + (coeffs[i] % p_);
  }
  return Element(static_cast<u32>(v));
}

Element Field::add_direct(Element x, Element y) const {
  if (n_ == 1) return Element(static_cast<u32>((u64{x.encoding()} + y.encoding()) % p_));
  if (p_ == 2) return Element(x.encoding() ^ y.encoding());
  u64 a = x.encoding(), b = y.encoding(), out = 0, scale = 1;
  for (u32 i = 0; i < n_; ++i) {
    out += ((a % p_ + b % p_) % p_) * scale;
    a /= p_;
    b /= p_;
    scale *= p_;
  }
  return Element(static_cast<u32>(out));
}

Element Field::add(Element x, Element y) const {
  if (x.is_zero()) return y;
  if (y.is_zero()) return x;
  if (p_ == 2 || n_ == 1 || !has_tables()) return add_direct(x, y);
  const u64 m = q_ - 1;
  const u32 lx = log_[x.encoding()];
  const u32 ly = log_[y.encoding()];
  const u32 z = zech_[(ly + m - lx) % m];
  if (z == kNoLog) return Element(0);
  return Element(exp_[lx + z]);
}

Element Field::neg(Element x) const {
  if (p_ == 2 || x.is_zero()) return x;
  if (n_ == 1) return Element(p_ - x.encoding());
  u64 a = x.encoding(), out = 0, scale = 1;
  for (u32 i = 0; i < n_; ++i) {
    out += ((p_ - a % p_) % p_) * scale;
    a /= p_;
    scale *= p_;
  }
  return Element(static_cast<u32>(out));
}

Element Field::mul_direct(Element x, Element y) const {
  if (n_ == 1) return Element(static_cast<u32>(mul_mod(x.encoding(), y.encoding(), p_)));
  if (p_ == 2) {
    u64 a = x.encoding(), b = y.encoding(), acc = 0;
    while (b != 0) {
      if (b & 1) acc ^= a;
      b >>= 1;
      a <<= 1;
      if ((a >> n_) & 1) a ^= binary_modulus_;
    }
    return Element(static_cast<u32>(acc));
  }
  const auto a = coeffs(x);
  const auto b = coeffs(y);
  std::vector<u64> prod(2 * n_ - 1, 0);
  for (u32 i = 0; i < n_; ++i) {
    if (a[i] == 0) continue;
    for (u32 j = 0; j < n_; ++j) {
      prod[i + j] = (prod[i + j] + u64{a[i]} * b[j]) % p_;
    }
  }
  for (u32 k = 2 * n_ - 1; k-- > n_;) {
    const u64 c = prod[k];
    if (c == 0) continue;
    for (u32 t = 0; t < n_; ++t) {
      prod[k - n_ + t] = (prod[k - n_ + t] + (p_ - c) * modulus_[t]) % p_;
    }
    prod[k] = 0;
  }
  u64 v = 0;
  for (u32 i = n_; i-- > 0;) v = v * p_ + prod[i];
  return Element(static_cast<u32>(v));
}

Element Field::mul(Element x, Element y) const {
  if (x.is_zero() || y.is_zero()) return Element(0);
  if (!has_tables()) return mul_direct(x, y);
  return Element(exp_[log_[x.encoding()] + log_[y.encoding()]]);
}

Element Field::pow_direct(Element x, u64 e) const {
  Element r = one();
  while (e != 0) {
    if (e & 1) r = mul_direct(r, x);
    x = mul_direct(x, x);
    e >>= 1;
  }
  return r;
}

Element Field::pow_u(Element x, u64 e) const {
  if (x.is_zero()) return e == 0 ? one() : zero();
  const u64 m = q_ - 1;
  if (!has_tables()) return pow_direct(x, e % m);
  return Element(exp_[mul_mod(log_[x.encoding()], e % m, m)]);
}

Element Field::pow(Element x, i64 e) const {
  if (e >= 0) return pow_u(x, static_cast<u64>(e));
  if (x.is_zero()) throw Error(Errc::kDivisionByZero, "negative power of zero");
  return pow_u(x, mod_floor(e, q_ - 1));
}

Element Field::inv(Element x) const {
  if (x.is_zero()) throw Error(Errc::kDivisionByZero, "inverse of zero");
  return pow_u(x, q_ - 2 == 0 ? q_ - 1 : q_ - 2);
}

Element Field::alpha_pow(i64 k) const {
  const u64 e = mod_floor(k, q_ - 1);
  if (has_tables()) return Element(exp_[e]);
  return pow_direct(alpha_, e);
}

u64 Field::discrete_log(Element x) const {
  if (x.is_zero()) throw Error(Errc::kDivisionByZero, "discrete log of zero");
  if (has_tables()) return log_[x.encoding()];
  return discrete_log_bsgs(x);
}

u64 Field::discrete_log_bsgs(Element x) const {
  const u64 m_order = q_ - 1;
  u64 step = 1;
  while (step * step < m_order) ++step;
  std::unordered_map<u32, u64> baby;
  baby.reserve(step);
  Element cur = one();
  for (u64 j = 0; j < step; ++j) {
    baby.emplace(cur.encoding(), j);
    cur = mul_direct(cur, alpha_);
  }
  const Element giant = pow_direct(alpha_, (m_order - step % m_order) % m_order);
  Element y = x;
  for (u64 i = 0; i <= step; ++i) {
    if (auto it = baby.find(y.encoding()); it != baby.end()) {
      return (i * step + it->second) % m_order;
    }
    y = mul_direct(y, giant);
  }
  throw Error(Errc::kInternalMismatch, "element has no discrete logarithm");
}

Subgroup Field::subgroup(u64 d) const {
  const u64 m = q_ - 1;
  if (d == 0 || m % d != 0) {
    throw Error(Errc::kNotADivisor, std::to_string(d) + " does not divide " + std::to_string(m));
  }
  Subgroup g;
  g.d = d;
  g.s = m / d;
  g.omega = alpha_pow(static_cast<i64>(g.s));
  g.elements.reserve(d);
  Element cur = one();
  for (u64 i = 0; i < d; ++i) {
    g.elements.push_back(cur);
    cur = mul(cur, g.omega);
  }
  return g;
}

bool Field::is_square(Element x) const {
  if (x.is_zero() || p_ == 2) return true;
  return pow_u(x, (q_ - 1) / 2) == one();
}

std::vector<Element> Field::subfield(u64 sub_q) const {
  const auto pp = prime_power(sub_q);
  if (!pp || pp->first != p_ || n_ % pp->second != 0) {
    throw Error(Errc::kWrongFieldShape,
                std::to_string(sub_q) + " is not the order of a subfield of F_" + std::to_string(q_));
  }
  const u64 step = (q_ - 1) / (sub_q - 1);
  std::vector<Element> out{zero()};
  for (u64 j = 0; j < sub_q - 1; ++j) out.push_back(alpha_pow(static_cast<i64>(j * step)));
  std::sort(out.begin(), out.end());
  return out;
}

void Field::find_alpha() {
  const u64 m = q_ - 1;
  const auto primes = prime_factors(m);
  for (u64 v = 1; v < q_; ++v) {
    const Element x(static_cast<u32>(v));
    bool full = true;
    for (u64 rho : primes) {
      if (pow_direct(x, m / rho) == one()) {
        full = false;
        break;
      }
    }
    if (full) {
      alpha_ = x;
      return;
    }
  }
  throw Error(Errc::kNotIrreducible, "no primitive element; modulus is not irreducible");
}

void Field::build_tables() {
  const u64 m = q_ - 1;
  exp_.resize(2 * m);
  log_.assign(q_, kNoLog);
  Element cur = one();
  for (u64 k = 0; k < m; ++k) {
    exp_[k] = cur.encoding();
    exp_[k + m] = cur.encoding();
    log_[cur.encoding()] = static_cast<u32>(k);
    cur = mul_direct(cur, alpha_);
  }
  zech_.resize(m);
  for (u64 k = 0; k < m; ++k) {
    const Element v = add_direct(one(), Element(exp_[k]));
    zech_[k] = v.is_zero() ? kNoLog : log_[v.encoding()];
  }
}

}  // namespace invol
