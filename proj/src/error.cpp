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

#include "invol/error.hpp"

namespace invol {

const char* errc_name(Errc code) {
  switch (code) {
    case Errc::kNotPrime: return "NotPrime";
    case Errc::kNotIrreducible: return "NotIrreducible";
    case Errc::kOverflow: return "Overflow";
    case Errc::kDivisionByZero: return "DivisionByZero";
    case Errc::kNotADivisor: return "NotADivisor";
    case Errc::kParseError: return "ParseError";
    case Errc::kHasConstantTerm: return "HasConstantTerm";
    case Errc::kZeroPolynomial: return "ZeroPolynomial";
    case Errc::kFieldTooLarge: return "FieldTooLarge";
    case Errc::kNotAPermutation: return "NotAPermutation";
    case Errc::kNotInSubgroup: return "NotInSubgroup";
    case Errc::kRSquareCondition: return "RSquareCondition";
    case Errc::kNotInvolutionOnSubgroup: return "NotInvolutionOnSubgroup";
    case Errc::kPreconditionViolated: return "PreconditionViolated";
    case Errc::kEvenCharacteristic: return "EvenCharacteristic";
    case Errc::kCharacteristicDividesD: return "CharacteristicDividesD";
    case Errc::kWrongFieldShape: return "WrongFieldShape";
    case Errc::kUnknownFamily: return "UnknownFamily";
    case Errc::kHValueZero: return "HValueZero";
    case Errc::kEvenQNoSolution: return "EvenQNoSolution";
    case Errc::kBaseNotInvolution: return "BaseNotInvolution";
    case Errc::kHypothesisViolated: return "HypothesisViolated";
    case Errc::kInternalMismatch: return "InternalMismatch";
  }
  return "Unknown";
}

Error::Error(Errc code, const std::string& what)
    : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

}  // namespace invol
