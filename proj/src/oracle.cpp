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

#include "invol/oracle.hpp"

#include <algorithm>
#include <limits>
#include <string>

#include "invol/error.hpp"

namespace invol::oracle {

namespace {

void check_cap(const Field& F, const OracleOptions& options) {
  if (F.q() > options.cap) {
    throw Error(Errc::kFieldTooLarge, "F_" + std::to_string(F.q()) + " exceeds oracle cap " +
                                          std::to_string(options.cap));
  }
}

constexpr u64 kNone = std::numeric_limits<u64>::max();

}  // namespace

std::vector<Element> value_table(const SparsePoly& f, OracleOptions options) {
  const Field& F = f.field();
  check_cap(F, options);
  const i64 q = static_cast<i64>(F.q());
  std::vector<Element> table(F.q());
#pragma omp parallel for schedule(static)
  for (i64 v = 0; v < q; ++v) table[v] = eval(f, Element(static_cast<u32>(v)));
  return table;
}

PermReport permutation_from_table(const std::vector<Element>& table) {
  const i64 q = static_cast<i64>(table.size());
  // first[y] = smallest preimage of y.
  std::vector<u64> first(table.size(), kNone);
  for (i64 v = q; v-- > 0;) first[table[v].encoding()] = static_cast<u64>(v);
  u64 second = kNone;
#pragma omp parallel for reduction(min : second) schedule(static)
  for (i64 v = 0; v < q; ++v) {
    if (first[table[v].encoding()] != static_cast<u64>(v)) second = std::min(second, static_cast<u64>(v));
  }
  PermReport report;
  report.is_permutation = second == kNone;
  if (!report.is_permutation) {
    const u64 x1 = first[table[second].encoding()];
    report.collision = {Element(static_cast<u32>(x1)), Element(static_cast<u32>(second))};
  }
  return report;
}

PermReport involution_from_table(const std::vector<Element>& table) {
  PermReport report = permutation_from_table(table);
  const i64 q = static_cast<i64>(table.size());
  u64 bad = kNone;
  u64 fixed = 0;
#pragma omp parallel for reduction(min : bad) reduction(+ : fixed) schedule(static)
  for (i64 v = 0; v < q; ++v) {
    const Element y = table[v];
    if (y.encoding() == static_cast<u32>(v)) ++fixed;
    if (table[y.encoding()].encoding() != static_cast<u32>(v)) bad = std::min(bad, static_cast<u64>(v));
  }
  report.is_involution = bad == kNone;
  report.fixed_point_count = fixed;
  if (bad != kNone) {
    report.involution_witness = {Element(static_cast<u32>(bad)), table[table[bad].encoding()]};
  }
  return report;
}

PermReport is_permutation(const SparsePoly& f, OracleOptions options) {
  return permutation_from_table(value_table(f, options));
}

PermReport is_involution(const SparsePoly& f, OracleOptions options) {
  return involution_from_table(value_table(f, options));
}

SparsePoly compositional_inverse(const SparsePoly& f, OracleOptions options) {
  const auto table = value_table(f, options);
  const PermReport perm = permutation_from_table(table);
  if (!perm.is_permutation) {
    throw Error(Errc::kNotAPermutation, "f(" + std::to_string(perm.collision->first.encoding()) + ") = f(" +
                                            std::to_string(perm.collision->second.encoding()) + ")");
  }
  std::vector<Element> inverse(table.size());
  for (std::size_t v = 0; v < table.size(); ++v) inverse[table[v].encoding()] = Element(static_cast<u32>(v));
  return interpolate_function(f.field_ptr(), inverse);
}

namespace serial {

std::vector<Element> value_table(const SparsePoly& f, OracleOptions options) {
  const Field& F = f.field();
  check_cap(F, options);
  std::vector<Element> table(F.q());
  for (u64 v = 0; v < F.q(); ++v) table[v] = eval(f, Element(static_cast<u32>(v)));
  return table;
}

PermReport is_permutation(const SparsePoly& f, OracleOptions options) {
  const auto table = value_table(f, options);
  std::vector<bool> seen(table.size(), false);
  PermReport report;
  report.is_permutation = true;
  for (std::size_t v = 0; v < table.size(); ++v) {
    const u32 y = table[v].encoding();
    if (seen[y]) {
      report.is_permutation = false;
      std::size_t x1 = 0;
      while (table[x1].encoding() != y) ++x1;
      report.collision = {Element(static_cast<u32>(x1)), Element(static_cast<u32>(v))};
      break;
    }
    seen[y] = true;
  }
  return report;
}

PermReport is_involution(const SparsePoly& f, OracleOptions options) {
  PermReport report = is_permutation(f, options);
  const auto table = value_table(f, options);
  report.is_involution = true;
  report.fixed_point_count = 0;
  for (std::size_t v = 0; v < table.size(); ++v) {
    const Element y = table[v];
    if (y.encoding() == v) ++*report.fixed_point_count;
    const Element back = table[y.encoding()];
    if (back.encoding() != v && *report.is_involution) {
      report.is_involution = false;
      report.involution_witness = {Element(static_cast<u32>(v)), back};
    }
  }
  return report;
}

}  // namespace serial

}  // namespace invol::oracle
