#pragma once

#include <string>
#include <vector>

#include "permgrid/dyck.hpp"
#include "permgrid/juxt.hpp"
#include "permgrid/perm.hpp"

namespace permgrid {

/// The articulation-fixing bijection Av(231) -> Av(321). The path of the
/// image keeps everything below the articulation point and swaps the upper
/// completion for the unique one of the other shape. The one input without
/// an articulation point (the decreasing permutation) maps to the one
/// articulation-free target (the identity permutation).
Permutation lambda(const Permutation& p);
Permutation lambda_inverse(const Permutation& q);

/// Path-level form of lambda; total bijection on Dyck paths of each semilength.
DyckPath lambda_path(const DyckPath& p);
DyckPath lambda_path_inverse(const DyckPath& q);

/// Av(231|12) -> Av(321|12): lambda on the left path, decoration unchanged.
/// Input must be the canonical gridding of a member.
GriddedPermutation theta(const GriddedPermutation& g);
GriddedPermutation theta_inverse(const GriddedPermutation& g);

/// Av(231|21) -> Av(321|21): same action; the run of right points above the
/// whole left side rides along unchanged.
GriddedPermutation psi(const GriddedPermutation& g);
GriddedPermutation psi_inverse(const GriddedPermutation& g);

/// Av(312|21) -> Av(312|12): rotate the excursion carrying the first right
/// point to the top and reverse its decoration; members without right points
/// map to themselves.
GriddedPermutation phi(const GriddedPermutation& g);
GriddedPermutation phi_inverse(const GriddedPermutation& g);

struct BijectionFailure {
  std::string input;
  std::string reason;
  bool operator==(const BijectionFailure&) const = default;
};

/// Result of an exhaustive sweep of one map over its whole length-n domain.
/// Bijective at n iff failures is empty and all three sizes agree.
struct BijectionReport {
  std::string name;
  int n = 0;
  std::size_t domain_size = 0;
  std::size_t image_size = 0;
  std::size_t target_size = 0;
  std::vector<BijectionFailure> failures;

  bool ok() const {
    return failures.empty() && domain_size == image_size && image_size == target_size;
  }
};

/// Sweeps "lambda", "theta", "psi" or "phi" over every length-n domain
/// element, re-verifying image membership, canonicity, preservation
/// properties and the inverse roundtrip from first principles.
BijectionReport verify_bijection(const std::string& name, int n, int cap = kDefaultExhaustionCap);

std::string report_to_json(const BijectionReport& r);
std::string report_to_text(const BijectionReport& r);

}  // namespace permgrid
