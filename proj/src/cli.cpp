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

#include "invol/cli.hpp"

#include <algorithm>
#include <chrono>
#include <iomanip>
#include <iostream>
#include <numeric>
#include <map>
#include <random>
#include <set>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "invol/construct.hpp"
#include "invol/text.hpp"

namespace invol {

using json = nlohmann::ordered_json;

int exit_status_for(Errc code) {
  switch (code) {
    case Errc::kInternalMismatch:
      return kExitMismatch;
    case Errc::kParseError:
    case Errc::kNotPrime:
    case Errc::kNotIrreducible:
    case Errc::kOverflow:
    case Errc::kHasConstantTerm:
    case Errc::kZeroPolynomial:
    case Errc::kUnknownFamily:
    case Errc::kNotADivisor:
    case Errc::kDivisionByZero:
      return kExitInput;
    default:
      return kExitPrecondition;
  }
}

bool RunReport::mismatch() const {
  if (!oracle) return false;
  return criterion.verdict != oracle->is_involution.value_or(false) ||
         permutation.is_permutation != oracle->is_permutation;
}

int RunReport::exit_status() const {
  if (mismatch()) return kExitMismatch;
  if (criterion.verdict) return kExitInvolution;
  return permutation.is_permutation ? kExitPermutation : kExitNotPermutation;
}

RhsForm decompose_with(const SparsePoly& f, u64 s) {
  if (f.is_zero()) throw Error(Errc::kZeroPolynomial, "cannot decompose the zero polynomial");
  if (!f.coeff(0).is_zero()) throw Error(Errc::kHasConstantTerm, "polynomial has a constant term");
  const RhsForm widest = decompose(f);
  if (s == 0 || widest.s() % s != 0) {
    throw Error(Errc::kNotADivisor, "s = " + std::to_string(s) + " does not divide the exponent gaps and q-1 (" +
                                        std::to_string(widest.s()) + ")");
  }
  const u64 r = f.terms().begin()->first;
  SparsePoly h(f.field_ptr());
  for (const auto& [e, c] : f.terms()) h.add_term_raw((e - r) / s, c);
  return RhsForm(r, s, h);
}

RunReport analyze(std::string command, const SparsePoly& f, const AnalyzeOptions& options,
                  std::optional<RhsForm> rhs) {
  const auto start = std::chrono::steady_clock::now();
  if (!rhs) rhs = options.s ? decompose_with(f, *options.s) : decompose(f);
  RunReport report{std::move(command), f, *rhs, check_involution(*rhs), check_permutation(*rhs), {}, {}, 0};
  const u64 q = f.field().q();
  if (options.run_oracle && (options.force_oracle || q <= options.oracle_cap)) {
    report.oracle = oracle::is_involution(f, OracleOptions{options.oracle_cap});
  }
  report.millis = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return report;
}

namespace {

const char* yes_no(bool v) { return v ? "yes" : "no"; }
const char* tf(bool v) { return v ? "true" : "false"; }

json field_json(const Field& F) {
  return {{"p", F.p()},
          {"n", F.n()},
          {"q", F.q()},
          {"modulus", F.modulus()},
          {"modulus_text", modulus_text(F)},
          {"spec", format_field(F)},
          {"alpha", F.alpha().encoding()}};
}

json rhs_json(const RhsForm& rhs) {
  return {{"r", rhs.r()}, {"s", rhs.s()}, {"d", rhs.d()}, {"h", format_poly(rhs.h())}};
}

json criterion_json(const Field& F, const CriterionReport& c, const PermutationCheck& p) {
  json out = {{"r_condition", c.r_condition},
              {"gcd_condition", c.gcd_condition},
              {"phi_evaluated", c.phi_evaluated},
              {"phi_all_one", c.phi_all_one},
              {"failing_z", nullptr},
              {"involution", c.verdict},
              {"permutation", p.is_permutation},
              {"permutation_failure", failure_name(p.failure)},
              {"permutation_witness", json::array()}};
  if (c.failing_z) out["failing_z"] = format_element(F, *c.failing_z);
  if (p.z1) out["permutation_witness"].push_back(format_element(F, *p.z1));
  if (p.z2) out["permutation_witness"].push_back(format_element(F, *p.z2));
  return out;
}

json oracle_json(const Field& F, const PermReport& o) {
  json out = {{"is_permutation", o.is_permutation},
              {"is_involution", o.is_involution.value_or(false)},
              {"fixed_point_count", nullptr},
              {"witness", nullptr}};
  if (o.fixed_point_count) out["fixed_point_count"] = *o.fixed_point_count;
  if (o.collision) {
    out["witness"] = {{"kind", "collision"},
                      {"x1", format_element(F, o.collision->first)},
                      {"x2", format_element(F, o.collision->second)}};
  } else if (o.involution_witness) {
    out["witness"] = {{"kind", "not_involutive"},
                      {"x", format_element(F, o.involution_witness->first)},
                      {"f_f_x", format_element(F, o.involution_witness->second)}};
  }
  return out;
}

json conditions_json(const Conditions& conditions) {
  json out = json::array();
  for (const auto& c : conditions) out.push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
  return out;
}

json report_json(const RunReport& r) {
  const Field& F = r.f.field();
  json out = {{"schema", 1},
              {"command", r.command},
              {"field", field_json(F)},
              {"poly", format_poly(r.f)},
              {"decomposition", rhs_json(r.rhs)},
              {"criterion", criterion_json(F, r.criterion, r.permutation)},
              {"oracle", nullptr},
              {"involution", r.criterion.verdict},
              {"mismatch", r.mismatch()},
              {"timing_ms", r.millis}};
  if (r.oracle) out["oracle"] = oracle_json(F, *r.oracle);
  if (!r.conditions.empty()) out["conditions"] = conditions_json(r.conditions);
  return out;
}

void write_conditions(std::ostream& out, const Conditions& conditions) {
  for (const auto& c : conditions) {
    out << "  [" << (c.passed ? "pass" : "FAIL") << "] " << c.name;
    if (!c.detail.empty()) out << "  (" << c.detail << ")";
    out << "\n";
  }
}

void write_text(std::ostream& out, const RunReport& r) {
  const Field& F = r.f.field();
  out << "field        " << format_field(F) << " (modulus " << modulus_text(F) << ", alpha = " << F.alpha().encoding()
      << ")\n";
  if (!r.conditions.empty()) {
    out << "conditions\n";
    write_conditions(out, r.conditions);
  }
  out << "poly         " << format_poly(r.f) << "\n";
  out << "form         r = " << r.rhs.r() << ", s = " << r.rhs.s() << ", d = " << r.rhs.d()
      << ", h = " << format_poly(r.rhs.h()) << "\n";
  out << "criterion    r^2 = 1 mod s: " << yes_no(r.criterion.r_condition)
      << ", gcd(r,s) = 1: " << yes_no(r.criterion.gcd_condition);
  if (r.criterion.phi_evaluated) {
    out << ", phi = 1 on mu_d: " << yes_no(r.criterion.phi_all_one);
    if (r.criterion.failing_z) out << " (fails at " << format_element(F, *r.criterion.failing_z) << ")";
  }
  out << "\n";
  out << "permutation  " << tf(r.permutation.is_permutation);
  if (!r.permutation.is_permutation) {
    out << " (" << failure_name(r.permutation.failure);
    if (r.permutation.z1) out << " " << format_element(F, *r.permutation.z1);
    if (r.permutation.z2) out << ", " << format_element(F, *r.permutation.z2);
    out << ")";
  }
  out << "\n";
  if (r.oracle) {
    const PermReport& o = *r.oracle;
    out << "oracle       permutation: " << tf(o.is_permutation)
        << ", involution: " << tf(o.is_involution.value_or(false));
    if (o.fixed_point_count) out << ", fixed_points " << *o.fixed_point_count;
    if (o.collision) {
      out << ", collision " << format_element(F, o.collision->first) << " ~ "
          << format_element(F, o.collision->second);
    } else if (o.involution_witness) {
      out << ", f(f(" << format_element(F, o.involution_witness->first)
          << ")) = " << format_element(F, o.involution_witness->second);
    }
    out << "\n";
  } else {
    out << "oracle       skipped\n";
  }
  if (r.mismatch()) out << "MISMATCH     criterion and oracle disagree\n";
  out << "involution: " << tf(r.criterion.verdict) << "\n";
  out << "time         " << std::fixed << std::setprecision(3) << r.millis << " ms\n";
  out.unsetf(std::ios::floatfield);
}

int emit(std::ostream& out, const RunReport& r, bool as_json) {
  if (as_json) {
    out << report_json(r).dump(2) << "\n";
  } else {
    write_text(out, r);
  }
  return r.exit_status();
}

std::vector<u64> parse_u64_list(const std::string& text) {
  std::vector<u64> out;
  std::stringstream ss(text);
  std::string piece;
  while (std::getline(ss, piece, ',')) {
    std::size_t used = 0;
    u64 v = 0;
    try {
      v = std::stoull(piece, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != piece.size()) throw Error(Errc::kParseError, "expected an integer list, got '" + text + "'");
    out.push_back(v);
  }
  return out;
}

SubgroupInvolution parse_sigma(const std::string& text, u64 d) {
  if (text == "inverse") return SubgroupInvolution::inverse(d);
  if (text == "identity") return SubgroupInvolution::identity(d);
  if (text.rfind("perm:", 0) == 0) {
    SubgroupInvolution sigma{d, parse_u64_list(text.substr(5))};
    if (sigma.ell.size() != d || !sigma.is_valid()) {
      throw Error(Errc::kPreconditionViolated, "'" + text + "' is not an involution of {0..." + std::to_string(d - 1) + "}");
    }
    return sigma;
  }
  throw Error(Errc::kParseError, "sigma must be inverse, identity or perm:l0,l1,...");
}

// ---- search ----

struct SearchOptions {
  u64 max_q = 64;
  u64 seed = 1;
  u64 samples = 256;
  u64 grid_cap = 729;
};

struct Found {
  SparsePoly f;
  u64 s;
  u64 r;
  u64 fixed_points;
};

struct CellResult {
  std::vector<Found> found;
  u64 visited = 0;
  u64 mismatches = 0;
  std::vector<std::string> mismatch_lines;
};

std::vector<std::vector<Element>> search_h_values(const Field& F, u64 d, u64 s, u64 r, const SearchOptions& opt) {
  std::vector<std::vector<Element>> out;
  u64 grid = 1;
  bool small = true;
  for (u64 i = 0; i < d && small; ++i) {
    grid *= 3;
    small = grid <= opt.grid_cap;
  }
  if (small) {
    const Element digits[3] = {F.zero(), F.one(), F.alpha()};
    for (u64 code = 1; code < grid; ++code) {
      std::vector<Element> h(d);
      u64 c = code;
      for (u64 i = 0; i < d; ++i, c /= 3) h[i] = digits[c % 3];
      out.push_back(std::move(h));
    }
    return out;
  }
  std::seed_seq seq{opt.seed, s, r};
  std::mt19937_64 rng(seq);
  std::uniform_int_distribution<u64> pick(0, F.q() - 1);
  for (u64 k = 0; k < opt.samples; ++k) {
    std::vector<Element> h(d);
    bool nonzero = false;
    for (auto& c : h) {
      c = Element(static_cast<u32>(pick(rng)));
      nonzero = nonzero || !c.is_zero();
    }
    if (!nonzero) h[0] = F.one();
    out.push_back(std::move(h));
  }
  return out;
}

CellResult search_cell(const FieldPtr& field, u64 s, u64 r, const SearchOptions& opt) {
  const Field& F = *field;
  const u64 d = (F.q() - 1) / s;
  CellResult cell;
  for (const auto& values : search_h_values(F, d, s, r, opt)) {
    SparsePoly h(field);
    for (u64 i = 0; i < d; ++i) h.add_term_raw(i, values[i]);
    const RhsForm rhs(r, s, h);
    const SparsePoly f = expand(rhs);
    const CriterionReport crit = check_involution(rhs);
    const PermutationCheck perm = check_permutation(rhs);
    const PermReport orc = oracle::serial::is_involution(f);
    ++cell.visited;
    if (crit.verdict != *orc.is_involution || perm.is_permutation != orc.is_permutation) {
      ++cell.mismatches;
      cell.mismatch_lines.push_back("mismatch s=" + std::to_string(s) + " r=" + std::to_string(r) +
                                    " h=" + format_poly(h));
    }
    if (crit.verdict) cell.found.push_back({f, s, r, orc.fixed_point_count.value_or(0)});
  }
  return cell;
}

using TermKey = std::vector<std::pair<u64, u32>>;

TermKey term_key(const SparsePoly& f) {
  TermKey key;
  for (auto it = f.terms().rbegin(); it != f.terms().rend(); ++it) key.emplace_back(it->first, it->second.encoding());
  return key;
}

int run_search(const FieldPtr& field, const SearchOptions& opt, bool as_json, std::ostream& out) {
  const Field& F = *field;
  if (F.q() > opt.max_q) {
    throw Error(Errc::kFieldTooLarge, "search is limited to q <= " + std::to_string(opt.max_q));
  }
  std::vector<std::pair<u64, u64>> cells;
  for (const u64 s : divisors(F.q() - 1)) {
    for (u64 r = 1; r <= F.q() - 1; ++r) cells.emplace_back(s, r);
  }
  std::vector<CellResult> results(cells.size());
#pragma omp parallel for schedule(dynamic)
  for (std::size_t i = 0; i < cells.size(); ++i) {
    results[i] = search_cell(field, cells[i].first, cells[i].second, opt);
  }
  // Merge in cell order so the first (s, r) that yields an f is reported.
  std::map<std::pair<std::size_t, TermKey>, Found> distinct;
  std::set<TermKey> seen;
  u64 visited = 0, mismatches = 0, involutions = 0;
  std::vector<std::string> mismatch_lines;
  for (const auto& cell : results) {
    visited += cell.visited;
    mismatches += cell.mismatches;
    involutions += cell.found.size();
    mismatch_lines.insert(mismatch_lines.end(), cell.mismatch_lines.begin(), cell.mismatch_lines.end());
    for (const auto& found : cell.found) {
      TermKey key = term_key(found.f);
      if (!seen.insert(key).second) continue;
      distinct.emplace(std::make_pair(found.f.size(), std::move(key)), found);
    }
  }
  if (as_json) {
    json list = json::array();
    for (const auto& [key, found] : distinct) {
      list.push_back({{"poly", format_poly(found.f)},
                      {"s", found.s},
                      {"r", found.r},
                      {"fixed_points", found.fixed_points}});
    }
    json doc = {{"schema", 1},
                {"command", "search"},
                {"field", field_json(F)},
                {"seed", opt.seed},
                {"samples", opt.samples},
                {"grid_cap", opt.grid_cap},
                {"visited", visited},
                {"involutions", involutions},
                {"distinct", distinct.size()},
                {"mismatches", mismatches},
                {"results", list},
                {"mismatch_details", mismatch_lines}};
    out << doc.dump(2) << "\n";
  } else {
    out << "field " << format_field(F) << ", alpha = " << F.alpha().encoding() << ", seed " << opt.seed << "\n";
    for (const auto& [key, found] : distinct) {
      out << format_poly(found.f) << "  [s = " << found.s << ", r = " << found.r
          << ", fixed_points = " << found.fixed_points << "]\n";
    }
    for (const auto& line : mismatch_lines) out << line << "\n";
    out << "visited " << visited << " instances, " << involutions << " involutions, " << distinct.size()
        << " distinct, mismatches " << mismatches << "\n";
  }
  return mismatches == 0 ? kExitInvolution : kExitMismatch;
}

// ---- field ----

int run_field(const FieldPtr& field, const std::vector<std::string>& elements, std::optional<u64> subgroup_d,
              bool as_json, std::ostream& out) {
  const Field& F = *field;
  json doc = {{"schema", 1}, {"command", "field"}, {"field", field_json(F)}};
  if (!as_json) {
    out << "field    " << format_field(F) << "\n";
    out << "q        " << F.q() << "\n";
    out << "modulus  " << modulus_text(F) << "\n";
    out << "alpha    " << F.alpha().encoding() << "\n";
  }
  for (const auto& text : elements) {
    const Element x = parse_element(F, text);
    json e = {{"text", text}, {"encoding", x.encoding()}, {"coeffs", F.coeffs(x)}, {"log", nullptr}};
    if (!x.is_zero()) e["log"] = F.discrete_log(x);
    doc["elements"].push_back(e);
    if (!as_json) {
      out << "element  " << text << " = " << x.encoding();
      if (!x.is_zero()) out << " = a^" << F.discrete_log(x);
      out << "\n";
    }
  }
  if (subgroup_d) {
    const Subgroup mu = F.subgroup(*subgroup_d);
    json list = json::array();
    for (const Element z : mu.elements) list.push_back(format_element(F, z));
    doc["subgroup"] = {{"d", mu.d}, {"s", mu.s}, {"omega", format_element(F, mu.omega)}, {"elements", list}};
    if (!as_json) {
      out << "mu_" << mu.d << "     omega = " << format_element(F, mu.omega) << ":";
      for (const Element z : mu.elements) out << " " << format_element(F, z);
      out << "\n";
    }
  }
  if (as_json) out << doc.dump(2) << "\n";
  return 0;
}

// ---- family ----

int run_family_list(bool as_json, std::ostream& out) {
  if (as_json) {
    json list = json::array();
    for (const auto& info : family_catalog()) {
      list.push_back({{"id", info.name}, {"params", info.schema}, {"summary", info.summary}});
    }
    out << json{{"schema", 1}, {"command", "family list"}, {"families", list}}.dump(2) << "\n";
    return 0;
  }
  for (const auto& info : family_catalog()) {
    out << info.name << "\n  params: " << info.schema << "\n  " << info.summary << "\n";
  }
  return 0;
}

int run_family(const FieldPtr& field, const std::string& id, const std::string& params, const AnalyzeOptions& opt,
               bool as_json, std::ostream& out) {
  const FamilySpec spec = parse_family_spec(id, params);
  const Conditions conditions = validate(field, spec);
  if (!all_passed(conditions)) {
    Errc code = Errc::kPreconditionViolated;
    for (const auto& c : conditions) {
      if (!c.passed) {
        code = c.code;
        break;
      }
    }
    if (as_json) {
      out << json{{"schema", 1},
                  {"command", "family " + id},
                  {"field", field_json(*field)},
                  {"conditions", conditions_json(conditions)},
                  {"error", errc_name(code)}}
                 .dump(2)
          << "\n";
    } else {
      out << "field        " << format_field(*field) << "\nconditions\n";
      write_conditions(out, conditions);
    }
    return exit_status_for(code);
  }
  FamilyResult result = generate(field, spec);
  RunReport report = analyze("family " + id, expand(result.rhs), opt, result.rhs);
  report.conditions = std::move(result.conditions);
  return emit(out, report, as_json);
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Involutions x^r h(x^s) over finite fields", "invol"};
  app.require_subcommand(1);
  bool as_json = false;
  app.add_flag("--json", as_json, "Machine-readable output");

  std::string field_text;
  AnalyzeOptions analyze_opt;
  bool no_oracle = false;
  u64 s_override = 0;

  auto add_field = [&](CLI::App* cmd) { cmd->add_option("--field", field_text, "p^n or p^n/c0,...,cn")->required(); };
  auto add_oracle = [&](CLI::App* cmd) {
    cmd->add_flag("--json", as_json, "Machine-readable output");
    cmd->add_flag("--oracle", analyze_opt.force_oracle, "Force the exhaustive oracle");
    cmd->add_flag("--no-oracle", no_oracle, "Skip the exhaustive oracle");
    cmd->add_option("--oracle-cap", analyze_opt.oracle_cap, "Largest q for the oracle");
  };

  // field
  auto* field_cmd = app.add_subcommand("field", "Show a field, element logs and subgroups");
  add_field(field_cmd);
  field_cmd->add_flag("--json", as_json, "Machine-readable output");
  std::vector<std::string> element_texts;
  u64 subgroup_d = 0;
  field_cmd->add_option("--element", element_texts, "Element to describe");
  field_cmd->add_option("--subgroup", subgroup_d, "List mu_d");

  // verify
  auto* verify_cmd = app.add_subcommand("verify", "Decide whether a polynomial is an involution");
  add_field(verify_cmd);
  add_oracle(verify_cmd);
  std::string poly_text;
  verify_cmd->add_option("--poly", poly_text, "Polynomial, e.g. \"a^1*x^62 + a^2*x^41\"")->required();
  verify_cmd->add_option("--s", s_override, "Use this divisor s instead of the maximal one");

  // construct
  auto* construct_cmd = app.add_subcommand("construct", "Build involutions from an involution on mu_d");
  construct_cmd->require_subcommand(1);
  u64 cs = 0, cr = 0;
  std::string sigma_text = "inverse", n_text, a_text, b_text, delta_text;
  u64 n0 = 0, n1 = 0;

  auto* general_cmd = construct_cmd->add_subcommand("general", "Interpolation construction");
  add_field(general_cmd);
  add_oracle(general_cmd);
  general_cmd->add_option("--s", cs, "Divisor s of q-1")->required();
  general_cmd->add_option("--sigma", sigma_text, "inverse | identity | perm:l0,l1,...");
  general_cmd->add_option("--r", cr, "r with r^2 = 1 mod s (default: smallest)");
  general_cmd->add_option("--n", n_text, "n0,n1,... (default: zeros)");

  auto* d2_cmd = construct_cmd->add_subcommand("d2", "Two cosets, q odd");
  add_field(d2_cmd);
  add_oracle(d2_cmd);
  d2_cmd->add_option("--r", cr, "r")->required();
  d2_cmd->add_option("--a", a_text, "h value on the square class");
  d2_cmd->add_option("--b", b_text, "h value on the non-square class");
  d2_cmd->add_option("--delta", delta_text, "Shorthand for a = delta, b = 1/delta");

  auto* d3_cmd = construct_cmd->add_subcommand("d3", "Three cosets, inverse sigma");
  add_field(d3_cmd);
  add_oracle(d3_cmd);
  d3_cmd->add_option("--r", cr, "r")->required();
  d3_cmd->add_option("--n", n_text, "n0,n1,n2")->required();

  auto* r1_cmd = construct_cmd->add_subcommand("cor-r1", "r = 1 family over F_{2^{2k}}");
  add_field(r1_cmd);
  add_oracle(r1_cmd);
  r1_cmd->add_option("--n1", n1, "0 <= n1 <= (q-4)/3")->required();

  auto* rq43_cmd = construct_cmd->add_subcommand("cor-rq43", "r = (q-4)/3 family over F_{2^{2k}}");
  add_field(rq43_cmd);
  add_oracle(rq43_cmd);
  rq43_cmd->add_option("--n0", n0, "u")->required();
  rq43_cmd->add_option("--n1", n1, "v")->required();

  // family
  auto* family_cmd = app.add_subcommand("family", "Explicit families; 'family list' shows them");
  std::string family_id, family_params;
  family_cmd->add_option("family_id", family_id, "Family id or 'list'")->required();
  family_cmd->add_option("--field", field_text, "p^n or p^n/c0,...,cn");
  family_cmd->add_option("--params", family_params, "k=v,k=v,...");
  add_oracle(family_cmd);

  // search
  auto* search_cmd = app.add_subcommand("search", "Sweep (s, r, h) and cross-check criterion against oracle");
  add_field(search_cmd);
  search_cmd->add_flag("--json", as_json, "Machine-readable output");
  SearchOptions search_opt;
  search_cmd->add_option("--seed", search_opt.seed, "Sampling seed");
  search_cmd->add_option("--samples", search_opt.samples, "h samples per (s, r) when the grid is too large");
  search_cmd->add_option("--grid-cap", search_opt.grid_cap, "Largest exhaustive {0,1,a} grid per (s, r)");
  search_cmd->add_option("--max-q", search_opt.max_q, "Largest field searched");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitInput;
  }
  analyze_opt.run_oracle = !no_oracle;

  try {
    if (*family_cmd && family_id == "list") return run_family_list(as_json, out);
    if (field_text.empty()) throw Error(Errc::kParseError, "--field is required");
    const FieldPtr field = parse_field(field_text);
    const Field& F = *field;

    if (*field_cmd) {
      return run_field(field, element_texts, subgroup_d ? std::optional<u64>(subgroup_d) : std::nullopt, as_json, out);
    }
    if (*verify_cmd) {
      if (s_override != 0) analyze_opt.s = s_override;
      return emit(out, analyze("verify", parse_poly(field, poly_text), analyze_opt), as_json);
    }
    if (*general_cmd) {
      if (cs == 0 || (F.q() - 1) % cs != 0) {
        throw Error(Errc::kNotADivisor, "s = " + std::to_string(cs) + " does not divide q-1");
      }
      const u64 d = (F.q() - 1) / cs;
      const SubgroupInvolution sigma = parse_sigma(sigma_text, d);
      ConstructionParams params = valid_params(F, cs, sigma).defaults;
      if (cr != 0) params.r = cr;
      if (!n_text.empty()) params.n = parse_u64_list(n_text);
      const RhsForm rhs = construct_general(field, cs, sigma, params);
      return emit(out, analyze("construct general", expand(rhs), analyze_opt, rhs), as_json);
    }
    if (*d2_cmd) {
      Element a, b;
      if (!delta_text.empty()) {
        a = parse_element(F, delta_text);
        b = F.inv(a);
      } else {
        if (a_text.empty() || b_text.empty()) throw Error(Errc::kParseError, "need --a and --b, or --delta");
        a = parse_element(F, a_text);
        b = parse_element(F, b_text);
      }
      return emit(out, analyze("construct d2", construct_d2(field, cr, a, b), analyze_opt), as_json);
    }
    if (*d3_cmd) {
      const auto n = parse_u64_list(n_text);
      if (n.size() != 3) throw Error(Errc::kParseError, "--n needs three values");
      const SparsePoly f = construct_d3(field, cr, n[0], n[1], n[2]);
      return emit(out, analyze("construct d3", f, analyze_opt), as_json);
    }
    if (*r1_cmd) return emit(out, analyze("construct cor-r1", construct_cor_r1(field, n1), analyze_opt), as_json);
    if (*rq43_cmd) {
      return emit(out, analyze("construct cor-rq43", construct_cor_rq43(field, n0, n1), analyze_opt), as_json);
    }
    if (*family_cmd) return run_family(field, family_id, family_params, analyze_opt, as_json, out);
    if (*search_cmd) return run_search(field, search_opt, as_json, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return exit_status_for(e.code());
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitInput;
  }
  return kExitInput;
}

}  // namespace invol
