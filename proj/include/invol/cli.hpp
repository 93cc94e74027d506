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

#ifndef INVOL_CLI_HPP_
#define INVOL_CLI_HPP_

// Command-line front end. Subcommands: field, verify, construct, family,
// search. Exit statuses:
//   0 involution, 1 permutation but not an involution, 2 not a permutation,
//   3 precondition or hypothesis failure, 4 input error,
//   5 criterion and oracle disagree.

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "invol/criterion.hpp"
#include "invol/error.hpp"
#include "invol/families.hpp"
#include "invol/oracle.hpp"

namespace invol {

enum ExitStatus : int {
  kExitInvolution = 0,
  kExitPermutation = 1,
  kExitNotPermutation = 2,
  kExitPrecondition = 3,
  kExitInput = 4,
  kExitMismatch = 5,
};

int exit_status_for(Errc code);

struct AnalyzeOptions {
  bool run_oracle = true;
  // Oracle is skipped above the cap unless forced, in which case
  // FieldTooLarge is thrown.
  bool force_oracle = false;
  u64 oracle_cap = u64{1} << 20;
  // Decompose with this s instead of the maximal one.
  std::optional<u64> s;
};

struct RunReport {
  std::string command;
  SparsePoly f;
  RhsForm rhs;
  CriterionReport criterion;
  PermutationCheck permutation;
  std::optional<PermReport> oracle;
  Conditions conditions;
  double millis = 0;

  bool mismatch() const;
  bool involution() const { return criterion.verdict; }
  int exit_status() const;
};

// Decomposes f (or uses rhs when given) and runs both the criterion and,
// within the cap, the oracle.
RunReport analyze(std::string command, const SparsePoly& f, const AnalyzeOptions& options,
                  std::optional<RhsForm> rhs = std::nullopt);

// f = x^r h(x^s) for a given s dividing q-1 and every exponent gap.
// Throws NotADivisor, HasConstantTerm, ZeroPolynomial.
RhsForm decompose_with(const SparsePoly& f, u64 s);

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace invol

#endif  // INVOL_CLI_HPP_
