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

#include "invol/criterion.hpp"

#include <numeric>
#include <string>

#include "invol/error.hpp"

namespace invol {

SubgroupInvolution SubgroupInvolution::identity(u64 d) {
  SubgroupInvolution sigma{d, std::vector<u64>(d)};
  std::iota(sigma.ell.begin(), sigma.ell.end(), u64{0});
  return sigma;
}

SubgroupInvolution SubgroupInvolution::inverse(u64 d) {
  SubgroupInvolution sigma{d, std::vector<u64>(d)};
  for (u64 i = 0; i < d; ++i) sigma.ell[i] = (d - i) % d;
  return sigma;
}

bool SubgroupInvolution::is_valid() const {
  if (ell.size() != d) return false;
  for (u64 i = 0; i < d; ++i) {
    if (ell[i] >= d || ell[ell[i]] != i) return false;
  }
  return true;
}

const char* failure_name(PermutationCheck::Failure failure) {
  switch (failure) {
    case PermutationCheck::Failure::kNone: return "none";
    case PermutationCheck::Failure::kGcd: return "gcd";
    case PermutationCheck::Failure::kRootOfH: return "root_of_h";
    case PermutationCheck::Failure::kCollision: return "collision";
  }
  return "unknown";
}

u64 r_square_quotient(u64 r, u64 s, u64 m) {
  const u128 wide = static_cast<u128>(r) * r - 1;
  return static_cast<u64>((wide / s) % m);
}

namespace {

void require_in_subgroup(const RhsForm& rhs, Element z) {
  const Field& F = rhs.field();
  if (z.is_zero() || !F.contains(z) || F.pow_u(z, rhs.d()) != F.one()) {
    throw Error(Errc::kNotInSubgroup, "element " + std::to_string(z.encoding()) + " is not in mu_" +
                                          std::to_string(rhs.d()));
  }
}

Element g_unchecked(const RhsForm& rhs, Element z) {
  const Field& F = rhs.field();
  return F.mul(F.pow_u(z, rhs.r()), F.pow_u(eval(rhs.h(), z), rhs.s()));
}

Element phi_unchecked(const RhsForm& rhs, Element z, u64 exponent) {
  const Field& F = rhs.field();
  const Element hz = eval(rhs.h(), z);
  const Element hg = eval(rhs.h(), g_unchecked(rhs, z));
  return F.mul(F.pow_u(z, exponent), F.mul(hg, F.pow_u(hz, rhs.r())));
}

}  // namespace

Element g_map(const RhsForm& rhs, Element z) {
  require_in_subgroup(rhs, z);
  return g_unchecked(rhs, z);
}

Element phi(const RhsForm& rhs, Element z) {
  if (!squares_to_one(rhs.r(), rhs.s())) {
    throw Error(Errc::kRSquareCondition, "r^2 != 1 mod s for r = " + std::to_string(rhs.r()) +
                                             ", s = " + std::to_string(rhs.s()));
  }
  require_in_subgroup(rhs, z);
  return phi_unchecked(rhs, z, r_square_quotient(rhs.r(), rhs.s(), rhs.d()));
}

CriterionReport check_involution(const RhsForm& rhs) {
  CriterionReport report;
  report.r_condition = squares_to_one(rhs.r(), rhs.s());
  report.gcd_condition = std::gcd(rhs.r(), rhs.s()) == 1;
  if (report.r_condition) {
    report.phi_evaluated = true;
    const Field& F = rhs.field();
    const Subgroup mu = F.subgroup(rhs.d());
    const u64 exponent = r_square_quotient(rhs.r(), rhs.s(), rhs.d());
    report.phi_all_one = true;
    for (const Element z : mu.elements) {
      if (phi_unchecked(rhs, z, exponent) != F.one()) {
        report.phi_all_one = false;
        report.failing_z = z;
        break;
      }
    }
  }
  report.verdict = report.r_condition && report.phi_all_one;
  return report;
}

PermutationCheck check_permutation(const RhsForm& rhs) {
  using Failure = PermutationCheck::Failure;
  PermutationCheck out;
  if (std::gcd(rhs.r(), rhs.s()) != 1) {
    out.failure = Failure::kGcd;
    return out;
  }
  const Field& F = rhs.field();
  const Subgroup mu = F.subgroup(rhs.d());
  for (const Element z : mu.elements) {
    if (eval(rhs.h(), z).is_zero()) {
      out.failure = Failure::kRootOfH;
      out.z1 = z;
      return out;
    }
  }
  // g(z) lies in mu_d; index images by their exponent.
  std::vector<u64> owner(rhs.d(), rhs.d());
  for (u64 i = 0; i < rhs.d(); ++i) {
    const u64 slot = F.discrete_log(g_unchecked(rhs, mu.elements[i])) / rhs.s();
    if (owner[slot] != rhs.d()) {
      out.failure = Failure::kCollision;
      out.z1 = mu.elements[owner[slot]];
      out.z2 = mu.elements[i];
      return out;
    }
    owner[slot] = i;
  }
  out.is_permutation = true;
  return out;
}

SubgroupInvolution induced_subgroup_involution(const RhsForm& rhs) {
  const Field& F = rhs.field();
  const Subgroup mu = F.subgroup(rhs.d());
  SubgroupInvolution sigma{rhs.d(), std::vector<u64>(rhs.d())};
  for (u64 i = 0; i < rhs.d(); ++i) {
    const Element g = g_unchecked(rhs, mu.elements[i]);
    if (g.is_zero()) {
      throw Error(Errc::kNotInvolutionOnSubgroup, "h vanishes at omega^" + std::to_string(i));
    }
    sigma.ell[i] = F.discrete_log(g) / rhs.s();
  }
  if (!sigma.is_valid()) {
    throw Error(Errc::kNotInvolutionOnSubgroup, "g does not square to the identity on mu_" +
                                                    std::to_string(rhs.d()));
  }
  return sigma;
}

}  // namespace invol
