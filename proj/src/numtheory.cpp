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

#include "invol/numtheory.hpp"

namespace invol {

std::optional<u64> inverse_mod(u64 a, u64 m) {
  if (m == 1) return 0;
  i64 old_r = static_cast<i64>(a % m), r = static_cast<i64>(m);
  i64 old_s = 1, s = 0;
  while (r != 0) {
    const i64 quot = old_r / r;
    i64 tmp = old_r - quot * r;
    old_r = r;
    r = tmp;
    tmp = old_s - quot * s;
    old_s = s;
    s = tmp;
  }
  if (old_r != 1) return std::nullopt;
  return mod_floor(old_s, m);
}

bool is_prime(u64 n) {
  if (n < 2) return false;
  for (u64 f = 2; f * f <= n; ++f) {
    if (n % f == 0) return false;
  }
  return true;
}

std::vector<u64> prime_factors(u64 n) {
  std::vector<u64> out;
  for (u64 f = 2; f * f <= n; ++f) {
    if (n % f == 0) {
      out.push_back(f);
      while (n % f == 0) n /= f;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

std::vector<u64> divisors(u64 n) {
  std::vector<u64> low, high;
  for (u64 f = 1; f * f <= n; ++f) {
    if (n % f == 0) {
      low.push_back(f);
      if (f != n / f) high.push_back(n / f);
    }
  }
  low.insert(low.end(), high.rbegin(), high.rend());
  return low;
}

std::optional<std::pair<u64, u32>> prime_power(u64 n) {
  if (n < 2) return std::nullopt;
  const auto primes = prime_factors(n);
  if (primes.size() != 1) return std::nullopt;
  u32 k = 0;
  while (n > 1) {
    n /= primes[0];
    ++k;
  }
  return std::make_pair(primes[0], k);
}

}  // namespace invol
