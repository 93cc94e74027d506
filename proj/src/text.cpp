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

#include "invol/text.hpp"

#include <cctype>
#include <charconv>
#include <limits>
#include <sstream>
#include <vector>

#include "invol/error.hpp"

namespace invol {

namespace {

[[noreturn]] void fail(std::string_view text, std::size_t pos, const std::string& why) {
  throw Error(Errc::kParseError, why + " at position " + std::to_string(pos) + " in \"" +
                                     std::string(text) + "\"");
}

class Cursor {
 public:
  explicit Cursor(std::string_view text) : text_(text) {}

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool done() {
    skip_space();
    return pos_ >= text_.size();
  }
  char peek() {
    skip_space();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }
  bool accept(char c) {
    if (peek() != c) return false;
    ++pos_;
    return true;
  }
  void expect(char c) {
    if (!accept(c)) fail(text_, pos_, std::string("expected '") + c + "'");
  }
  u64 number() {
    skip_space();
    u64 v = 0;
    const auto [ptr, ec] = std::from_chars(text_.data() + pos_, text_.data() + text_.size(), v);
    if (ec != std::errc()) fail(text_, pos_, "expected a non-negative integer");
    pos_ = static_cast<std::size_t>(ptr - text_.data());
    return v;
  }
  i64 signed_number() {
    const bool negative = accept('-');
    const u64 v = number();
    if (v > static_cast<u64>(std::numeric_limits<i64>::max())) fail(text_, pos_, "integer too large");
    return negative ? -static_cast<i64>(v) : static_cast<i64>(v);
  }
  std::size_t pos() const { return pos_; }
  std::string_view text() const { return text_; }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
};

Element element_at(const Field& field, Cursor& cur) {
  const std::size_t start = cur.pos();
  if (cur.accept('a')) {
    if (!cur.accept('^')) return field.alpha();
    return field.alpha_pow(cur.signed_number());
  }
  if (!std::isdigit(static_cast<unsigned char>(cur.peek()))) fail(cur.text(), cur.pos(), "expected an element");
  const u64 v = cur.number();
  if (v >= field.q()) fail(cur.text(), start, "element encoding out of range");
  return Element(static_cast<u32>(v));
}

}  // namespace

FieldPtr parse_field(std::string_view text, FieldOptions options) {
  Cursor cur(text);
  const u64 base = cur.number();
  u32 n = 1;
  u64 p = base;
  if (cur.accept('^')) {
    const u64 e = cur.number();
    if (e == 0 || e > 64) fail(text, cur.pos(), "bad extension degree");
    n = static_cast<u32>(e);
  } else {
    const auto pp = prime_power(base);
    if (!pp) throw Error(Errc::kNotPrime, std::to_string(base) + " is not a prime power");
    p = pp->first;
    n = pp->second;
  }
  std::optional<std::vector<u32>> modulus;
  if (cur.accept('/')) {
    std::vector<u32> coeffs;
    do {
      const u64 c = cur.number();
      if (c >= p) fail(text, cur.pos(), "modulus coefficient out of range");
      coeffs.push_back(static_cast<u32>(c));
    } while (cur.accept(','));
    modulus = std::move(coeffs);
  }
  if (!cur.done()) fail(text, cur.pos(), "unexpected trailing input");
  return make_field(p, n, std::move(modulus), options);
}

std::string field_name(const Field& field) {
  return std::to_string(field.p()) + "^" + std::to_string(field.n());
}

std::string format_modulus(const Field& field) {
  std::string out;
  for (std::size_t i = 0; i < field.modulus().size(); ++i) {
    if (i != 0) out += ',';
    out += std::to_string(field.modulus()[i]);
  }
  return out;
}

std::string modulus_text(const Field& field) {
  std::string out;
  const auto& m = field.modulus();
  for (std::size_t i = m.size(); i-- > 0;) {
    if (m[i] == 0) continue;
    if (!out.empty()) out += " + ";
    const bool unit = m[i] == 1 && i != 0;
    if (!unit) out += std::to_string(m[i]);
    if (i != 0) out += std::string(unit ? "" : "*") + (i == 1 ? "x" : "x^" + std::to_string(i));
  }
  return out;
}

std::string format_field(const Field& field) { return field_name(field) + "/" + format_modulus(field); }

Element parse_element(const Field& field, std::string_view text) {
  Cursor cur(text);
  const Element x = element_at(field, cur);
  if (!cur.done()) fail(text, cur.pos(), "unexpected trailing input");
  return x;
}

std::string format_element(const Field& field, Element x) {
  if (field.n() == 1 || x.encoding() <= 1) return std::to_string(x.encoding());
  return "a^" + std::to_string(field.discrete_log(x));
}

SparsePoly parse_poly(const FieldPtr& field, std::string_view text) {
  const Field& F = *field;
  Cursor cur(text);
  SparsePoly out(field);
  if (cur.done()) fail(text, 0, "empty polynomial");
  bool first = true;
  while (!cur.done()) {
    bool negate = false;
    if (cur.accept('+')) {
    } else if (cur.accept('-')) {
      negate = true;
    } else if (!first) {
      fail(text, cur.pos(), "expected '+' or '-'");
    }
    first = false;
    Element c = F.one();
    bool has_x = false;
    if (cur.peek() == 'x') {
      has_x = true;
    } else {
      c = element_at(F, cur);
      if (cur.accept('*')) {
        if (cur.peek() != 'x') fail(text, cur.pos(), "expected 'x'");
        has_x = true;
      }
    }
    u64 e = 0;
    if (has_x) {
      cur.expect('x');
      e = cur.accept('^') ? cur.number() : 1;
    }
    out.add_term(e, negate ? F.neg(c) : c);
  }
  return out;
}

std::string format_poly(const SparsePoly& f) {
  if (f.is_zero()) return "0";
  const Field& F = f.field();
  std::ostringstream os;
  bool first = true;
  for (auto it = f.terms().rbegin(); it != f.terms().rend(); ++it) {
    const auto [e, c] = *it;
    if (!first) os << " + ";
    first = false;
    if (e == 0) {
      os << format_element(F, c);
      continue;
    }
    if (c != F.one()) os << format_element(F, c) << '*';
    os << 'x';
    if (e != 1) os << '^' << e;
  }
  return os.str();
}

}  // namespace invol
