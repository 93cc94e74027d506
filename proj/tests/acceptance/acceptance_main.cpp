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

// One line per acceptance criterion; exit status 1 if any fails.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include "invol/cli.hpp"
#include "invol/construct.hpp"
#include "invol/criterion.hpp"
#include "invol/error.hpp"
#include "invol/families.hpp"
#include "invol/numtheory.hpp"
#include "invol/oracle.hpp"
#include "invol/text.hpp"
#include "support/gen.hpp"

namespace invol {
namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

bool oracle_involution(const SparsePoly& f) { return *oracle::is_involution(f).is_involution; }

std::string fmt(const char* pattern, auto... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, pattern, args...);
  return buf;
}

SubgroupInvolution random_sigma(gen::Rng& rng, u64 d) {
  std::vector<u64> order(d);
  std::iota(order.begin(), order.end(), 0);
  std::shuffle(order.begin(), order.end(), rng.engine());
  SubgroupInvolution sigma = SubgroupInvolution::identity(d);
  for (u64 k = 0; k + 1 < d; k += 2) {
    if (rng.coin()) continue;
    sigma.ell[order[k]] = order[k + 1];
    sigma.ell[order[k + 1]] = order[k];
  }
  return sigma;
}

std::vector<u64> prime_powers_upto(u64 bound, bool odd_only) {
  std::vector<u64> out;
  for (u64 q = 2; q <= bound; ++q) {
    if (prime_power(q) && (!odd_only || q % 2 == 1)) out.push_back(q);
  }
  return out;
}

FieldPtr field_of(u64 q) {
  const auto pp = prime_power(q);
  return make_field(pp->first, pp->second);
}

FieldPtr square_field(u64 q) {
  const auto pp = prime_power(q);
  return make_field(pp->first, 2 * pp->second);
}

// ---- criteria ----

Outcome ac1() {
  const auto F = parse_field("2^6");
  const auto F4 = F->subfield(4);
  int checked = 0, vanishing = 0;
  Outcome out;
  for (const Element a : F4) {
    for (const Element b : F4) {
      SparsePoly h(F);
      h.add_term_raw(2, a);
      h.add_term_raw(1, b);
      h.add_term_raw(0, b);
      if (h.is_zero()) {
        ++vanishing;
        continue;
      }
      const RhsForm rhs(20, 21, h);
      bool root = false;
      for (const Element z : F->subgroup(3).elements) root = root || eval(h, z).is_zero();
      if (root) {
        ++vanishing;
        continue;
      }
      ++checked;
      if (!oracle_involution(expand(rhs)) || !check_involution(rhs).verdict) out.pass = false;
    }
  }
  std::ostringstream sink;
  const auto start = Clock::now();
  const int code = run_cli({"verify", "--field", "2^6", "--poly", "a^21*x^62 + a^42*x^41 + a^42*x^20"}, sink, sink);
  const double t = seconds_since(start);
  if (code != kExitInvolution || t >= 0.1) out.pass = false;
  std::ostringstream literal;
  const int literal_code = run_cli({"verify", "--field", "2^6", "--poly", "a^1*x^62 + a^2*x^41 + a^2*x^20"}, literal,
                                   literal);
  out.detail = fmt(
      "%d (a,b) in F_4^2 with h nonzero on mu_3 are involutions, %d skipped; omega reading exit %d in %.4f s; "
      "primitive-alpha reading exit %d (not a permutation)",
      checked, vanishing, code, t, literal_code);
  return out;
}

Outcome ac2() {
  const auto F = parse_field("3^8");
  const auto start = Clock::now();
  const SparsePoly f = parse_poly(F, "x + x^1313 + x^2625 + x^3937");
  const PermReport r = oracle::is_involution(f);
  const double t = seconds_since(start);
  const bool crit = check_involution(decompose(f)).verdict;
  return {*r.is_involution && crit && t < 2.0,
          fmt("oracle over %llu elements: %s, criterion: %s, %.3f s", static_cast<unsigned long long>(F->q()),
              *r.is_involution ? "involution" : "not involution", crit ? "involution" : "not involution", t)};
}

Outcome ac3() {
  const auto F = parse_field("2^8");
  const auto start = Clock::now();
  int good = 0;
  for (u64 l = 0; l <= 84; ++l) good += oracle_involution(construct_cor_r1(F, l));
  const double t = seconds_since(start);
  return {good == 85 && t < 2.0, fmt("%d/85 involutions, %.3f s", good, t)};
}

Outcome ac4() {
  const auto F = parse_field("2^8");
  const auto start = Clock::now();
  int good = 0;
  for (u64 u = 0; u <= 84; ++u) {
    for (u64 v = 0; v <= 84; ++v) good += oracle_involution(construct_cor_rq43(F, u, v));
  }
  const double t = seconds_since(start);
  return {good == 85 * 85 && t < 30.0, fmt("%d/7225 involutions (full grid), %.3f s", good, t)};
}

Outcome ac5() {
  gen::Rng rng(5005);
  u64 cells = 0, instances = 0, inv_mismatch = 0, perm_mismatch = 0, exhaustive_cells = 0, positives = 0;
  for (const u64 q : {4u, 5u, 7u, 8u, 9u, 11u, 13u, 16u}) {
    const auto F = field_of(q);
    for (const u64 s : divisors(q - 1)) {
      const u64 d = (q - 1) / s;
      u64 space = 1;
      for (u64 i = 0; i < d && space <= 200; ++i) space *= q;
      space -= 1;
      for (u64 r = 1; r <= q - 1; ++r) {
        ++cells;
        std::vector<SparsePoly> hs;
        if (space <= 200) {
          ++exhaustive_cells;
          for (u64 code = 1; code <= space; ++code) {
            SparsePoly h(F);
            u64 c = code;
            for (u64 i = 0; i < d; ++i, c /= q) h.add_term_raw(i, Element(static_cast<u32>(c % q)));
            hs.push_back(h);
          }
        } else {
          while (hs.size() < 200) {
            SparsePoly h = rng.h_poly(F, d);
            hs.push_back(h);
          }
        }
        for (const SparsePoly& h : hs) {
          const RhsForm rhs(r, s, h);
          const SparsePoly f = expand(rhs);
          ++instances;
          if (f.is_zero()) {
            // Every x maps to 0: not a permutation.
            perm_mismatch += check_permutation(rhs).is_permutation;
            inv_mismatch += check_involution(rhs).verdict;
            continue;
          }
          const PermReport o = oracle::is_involution(f);
          inv_mismatch += check_involution(rhs).verdict != *o.is_involution;
          perm_mismatch += check_permutation(rhs).is_permutation != o.is_permutation;
          positives += *o.is_involution;
        }
      }
    }
  }
  return {inv_mismatch == 0 && perm_mismatch == 0,
          fmt("%llu (s,r) cells, %llu instances (%llu cells with <= 200 possible h enumerated exhaustively), "
              "%llu involutions; mismatches: involution %llu, permutation %llu",
              static_cast<unsigned long long>(cells), static_cast<unsigned long long>(instances),
              static_cast<unsigned long long>(exhaustive_cells), static_cast<unsigned long long>(positives),
              static_cast<unsigned long long>(inv_mismatch), static_cast<unsigned long long>(perm_mismatch))};
}

Outcome ac6() {
  gen::Rng rng(6006);
  const auto qs = prime_powers_upto(64, false);
  int passed = 0, recovered = 0;
  for (int rep = 0; rep < 1000; ++rep) {
    u64 q = rng.pick(qs);
    while (q < 3) q = rng.pick(qs);
    const auto F = field_of(q);
    const u64 s = rng.pick(divisors(q - 1));
    const u64 d = (q - 1) / s;
    const SubgroupInvolution sigma = random_sigma(rng, d);
    const u64 r = rng.pick(valid_r(s, q - 1));
    std::vector<u64> free(d);
    const auto fp = fixed_point_n_values(s, r);
    for (u64 i = 0; i < d; ++i) free[i] = sigma.ell[i] == i ? rng.pick(fp) : rng.below(s);
    const RhsForm rhs = construct_general(F, s, sigma, {r, complete_n(s, sigma, r, free)});
    passed += oracle_involution(expand(rhs));
    recovered += induced_subgroup_involution(rhs) == sigma;
  }
  return {passed == 1000 && recovered == 1000,
          fmt("oracle %d/1000, sigma recovered %d/1000", passed, recovered)};
}

Outcome ac7() {
  auto sweep = [](const std::vector<u64>& qs, u64& total, u64& agree) {
    for (const u64 q : qs) {
      const auto F = square_field(q);
      for (const Element a : F->subfield(F->q())) {
        if (a.is_zero()) continue;
        ++total;
        const ExmVerdicts v = cor_exm_verdicts(*F, a);
        const bool truth = oracle_involution(expand(cor_exm_form(F, a)));
        agree += v.case_table == truth && v.gcd_form == truth;
      }
    }
  };
  u64 total = 0, agree = 0, ext_total = 0, ext_agree = 0;
  sweep({3, 5, 7}, total, agree);
  sweep(prime_powers_upto(31, true), ext_total, ext_agree);
  return {total == agree && ext_total == ext_agree,
          fmt("q in {3,5,7}: %llu/%llu agree; all odd q <= 31: %llu/%llu agree",
              static_cast<unsigned long long>(agree), static_cast<unsigned long long>(total),
              static_cast<unsigned long long>(ext_agree), static_cast<unsigned long long>(ext_total))};
}

Outcome ac8() {
  u64 total = 0, agree = 0;
  for (const u64 q : prime_powers_upto(32, false)) {
    const auto F = field_of(q);
    for (u64 r = 1; r <= q - 1; ++r) {
      for (const Element a : F->subfield(q)) {
        if (a.is_zero()) continue;
        ++total;
        const bool law = squares_to_one(r, q - 1) && F->pow_u(a, r + 1) == F->one();
        agree += law == oracle_involution(SparsePoly::monomial(F, a, r));
      }
    }
  }
  return {total == agree, fmt("%llu/%llu (q, r, a) agree", static_cast<unsigned long long>(agree),
                              static_cast<unsigned long long>(total))};
}

Outcome ac9() {
  gen::Rng rng(9009);
  std::vector<u64> qs;
  for (const u64 q : prime_powers_upto(121, false)) {
    if (q >= 5) qs.push_back(q);
  }
  int agree = 0, yes = 0;
  for (int rep = 0; rep < 500; ++rep) {
    u64 q, s;
    std::vector<u64> ss;
    do {
      q = rng.pick(qs);
      ss.clear();
      for (const u64 t : divisors(q - 1)) {
        if (std::gcd(t, (q - 1) / t) == 1 && t < q - 1) ss.push_back(t);
      }
    } while (ss.empty());
    const auto F = field_of(q);
    s = rng.pick(ss);
    const u64 d = (q - 1) / s;
    const u64 r = rng.pick(valid_r(s, q - 1));
    const auto mu = F->subgroup(d).elements;
    std::vector<Element> values(d);
    for (auto& v : values) v = rng.pick(mu);
    const RhsForm rhs(r, s, interpolate_on_subgroup(F, d, values));
    const bool verdict = check_iff_subgroup(rhs);
    agree += verdict == oracle_involution(expand(rhs));
    yes += verdict;
  }

  struct Lift {
    const char* field;
    u64 q, m;
  };
  int lifts = 0, lift_pass = 0;
  for (const Lift& c : {Lift{"2^6", 8, 2}, Lift{"2^6", 2, 6}, Lift{"3^6", 9, 3}}) {
    const auto F = parse_field(c.field);
    const u64 s = (F->q() - 1) / (c.q - 1);
    const auto sub = F->subfield(c.q);
    const auto rs = valid_r(s, F->q() - 1);
    int found = 0;
    for (int rep = 0; rep < 2000 && found < 25; ++rep) {
      const u64 r = rng.pick(rs);
      SparsePoly h(F);
      const u64 terms = rng.between(1, 3);
      for (u64 t = 0; t < terms; ++t) h.add_term_raw(rng.below(c.q + 1), rng.pick(sub));
      if (h.is_zero() || !base_is_involution(*F, c.q, c.m, r, h)) continue;
      ++found;
      ++lifts;
      lift_pass += oracle_involution(expand(lift_involution(F, c.q, c.m, r, h)));
    }
  }
  return {agree == 500 && lifts > 0 && lift_pass == lifts,
          fmt("subgroup test agrees %d/500 (%d involutions); lifts over F_64 and F_729 pass %d/%d", agree, yes,
              lift_pass, lifts)};
}

Outcome ac10() {
  std::ostringstream a, b;
  const int ca = run_cli({"search", "--field", "9", "--seed", "42"}, a, a);
  const int cb = run_cli({"search", "--field", "9", "--seed", "42"}, b, b);
  const bool same = a.str() == b.str();
  return {same && ca == 0 && cb == 0 && !a.str().empty(),
          fmt("%s output (%zu bytes), exit %d/%d", same ? "identical" : "different", a.str().size(), ca, cb)};
}

}  // namespace
}  // namespace invol

int main() {
  using invol::Outcome;
  struct Entry {
    const char* id;
    const char* title;
    Outcome (*fn)();
  };
  const Entry entries[] = {
      {"AC1", "F_64 example with coefficients from mu_3", invol::ac1},
      {"AC2", "F_6561 quadrinomial", invol::ac2},
      {"AC3", "F_256 three-term family, every l", invol::ac3},
      {"AC4", "F_256 two-parameter family, every (u,v)", invol::ac4},
      {"AC5", "criterion equals oracle on small fields", invol::ac5},
      {"AC6", "construction soundness", invol::ac6},
      {"AC7", "three verdicts for a x^{q^2-3q+1} + a^q x^{q-2}", invol::ac7},
      {"AC8", "monomial law", invol::ac8},
      {"AC9", "subgroup iff test and subfield lifts", invol::ac9},
      {"AC10", "search determinism", invol::ac10},
  };
  int failed = 0;
  for (const Entry& e : entries) {
    Outcome o;
    try {
      o = e.fn();
    } catch (const std::exception& ex) {
      o = {false, std::string("exception: ") + ex.what()};
    }
    failed += !o.pass;
    std::printf("[%s] %s %s: %s\n", o.pass ? "PASS" : "FAIL", e.id, e.title, o.detail.c_str());
    std::fflush(stdout);
  }
  return failed == 0 ? 0 : 1;
}
