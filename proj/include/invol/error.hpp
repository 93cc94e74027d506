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

#ifndef INVOL_ERROR_HPP_
#define INVOL_ERROR_HPP_

#include <stdexcept>
#include <string>

namespace invol {

enum class Errc {
  kNotPrime,
  kNotIrreducible,
  kOverflow,
  kDivisionByZero,
  kNotADivisor,
  kParseError,
  kHasConstantTerm,
  kZeroPolynomial,
  kFieldTooLarge,
  kNotAPermutation,
  kNotInSubgroup,
  kRSquareCondition,
  kNotInvolutionOnSubgroup,
  kPreconditionViolated,
  kEvenCharacteristic,
  kCharacteristicDividesD,
  kWrongFieldShape,
  kUnknownFamily,
  kHValueZero,
  kEvenQNoSolution,
  kBaseNotInvolution,
  kHypothesisViolated,
  kInternalMismatch,
};

const char* errc_name(Errc code);

// All library failures are reported through this type; code() is stable and
// is what the CLI maps onto exit statuses.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what);

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace invol

#endif  // INVOL_ERROR_HPP_
