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

#ifndef INVOL_ORACLE_HPP_
#define INVOL_ORACLE_HPP_

// Ground truth by exhaustive evaluation over all of F_q. Nothing here uses
// the subgroup decomposition, so these verdicts can check the criterion.
//
// The default entry points sweep the domain with OpenMP; oracle::serial
// keeps a straightforward single-threaded version that the tests compare
// against. Reports are identical: witnesses are always the smallest
// violating element in encoding order.

#include <optional>
#include <utility>
#include <vector>

#include "invol/polyring.hpp"

namespace invol {

struct OracleOptions {
  u64 cap = u64{1} << 20;
};

struct PermReport {
  bool is_permutation = false;
  // First collision (x1 < x2, f(x1) = f(x2)) scanning x2 upward; present
  // iff !is_permutation.
  std::optional<std::pair<Element, Element>> collision;

  // Filled by is_involution only.
  std::optional<bool> is_involution;
  std::optional<u64> fixed_point_count;
  // Smallest x with f(f(x)) != x, paired with f(f(x)); present iff
  // is_involution == false.
  std::optional<std::pair<Element, Element>> involution_witness;
};

namespace oracle {

// f(x) for every x, indexed by encoding. Throws FieldTooLarge above cap.
std::vector<Element> value_table(const SparsePoly& f, OracleOptions options = {});

PermReport is_permutation(const SparsePoly& f, OracleOptions options = {});
PermReport is_involution(const SparsePoly& f, OracleOptions options = {});

// Interpolates the inverse value table. Throws NotAPermutation, FieldTooLarge.
SparsePoly compositional_inverse(const SparsePoly& f, OracleOptions options = {});

// Table-level checks shared by both sweeps.
PermReport permutation_from_table(const std::vector<Element>& table);
PermReport involution_from_table(const std::vector<Element>& table);

namespace serial {

std::vector<Element> value_table(const SparsePoly& f, OracleOptions options = {});
PermReport is_permutation(const SparsePoly& f, OracleOptions options = {});
PermReport is_involution(const SparsePoly& f, OracleOptions options = {});

}  // namespace serial

}  // namespace oracle

}  // namespace invol

#endif  // INVOL_ORACLE_HPP_
