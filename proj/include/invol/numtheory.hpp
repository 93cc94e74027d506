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

#ifndef INVOL_NUMTHEORY_HPP_
#define INVOL_NUMTHEORY_HPP_

// Integer helpers for exponent arithmetic. Every modulus that appears here is
// at most 2^31, so products of two residues fit in 64 bits; the 128-bit
// variants exist for expressions such as (r^2 - 1) / s with unreduced r.

#include <cstdint>
#include <numeric>
#include <optional>
#include <vector>

namespace invol {

using u32 = std::uint32_t;
using u64 = std::uint64_t;
using i64 = std::int64_t;
using u128 = unsigned __int128;

inline u64 mod_floor(i64 a, u64 m) {
  const i64 r = a % static_cast<i64>(m);
  return static_cast<u64>(r < 0 ? r + static_cast<i64>(m) : r);
}

inline u64 mul_mod(u64 a, u64 b, u64 m) {
  return static_cast<u64>((static_cast<u128>(a) * b) % m);
}

inline u64 pow_mod(u64 base, u64 e, u64 m) {
  u64 r = 1 % m;
  base %= m;
  while (e != 0) {
    if (e & 1) r = mul_mod(r, base, m);
    base = mul_mod(base, base, m);
    e >>= 1;
  }
  return r;
}

// Inverse of a modulo m, if gcd(a, m) = 1.
std::optional<u64> inverse_mod(u64 a, u64 m);

bool is_prime(u64 n);

// Distinct prime factors, ascending.
std::vector<u64> prime_factors(u64 n);

// All positive divisors, ascending.
std::vector<u64> divisors(u64 n);

// If n = p^k for a prime p and k >= 1, returns {p, k}.
std::optional<std::pair<u64, u32>> prime_power(u64 n);

// r^2 == 1 (mod m), computed without overflow for any 64-bit r.
inline bool squares_to_one(u64 r, u64 m) {
  return m == 1 || mul_mod(r % m, r % m, m) == 1 % m;
}

}  // namespace invol

#endif  // INVOL_NUMTHEORY_HPP_
