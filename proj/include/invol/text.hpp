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

#ifndef INVOL_TEXT_HPP_
#define INVOL_TEXT_HPP_

// Text forms.
//   field:   "p^n", a bare prime power "q", or either followed by
//            "/c0,c1,...,cn" to pin the modulus.
//   element: "0", "a^k" (power of the primitive element, k may be negative),
//            or the decimal encoding sum c_i p^i.
//   poly:    "c*x^e + c*x + c + ..." with c in element form; terms may be
//            unordered and repeated, and "-" negates a term.
// Parsers throw Error(kParseError) carrying the offending position.

#include <string>
#include <string_view>

#include "invol/gf.hpp"
#include "invol/polyring.hpp"

namespace invol {

FieldPtr parse_field(std::string_view text, FieldOptions options = {});
std::string format_field(const Field& field);
// Short "p^n" form without the modulus.
std::string field_name(const Field& field);

Element parse_element(const Field& field, std::string_view text);
std::string format_element(const Field& field, Element x);

SparsePoly parse_poly(const FieldPtr& field, std::string_view text);
std::string format_poly(const SparsePoly& f);

std::string format_modulus(const Field& field);
// The modulus written as a polynomial, e.g. "x^6 + x^5 + 1".
std::string modulus_text(const Field& field);

}  // namespace invol

#endif  // INVOL_TEXT_HPP_
