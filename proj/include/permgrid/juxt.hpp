#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "permgrid/perm.hpp"

namespace permgrid {

class NonMemberError : public std::runtime_error {
 public:
  explicit NonMemberError(const std::string& msg) : std::runtime_error(msg) {}
};

/// A 1x2 juxtaposition Av(left | right): permutations that split into a
/// left part avoiding `left` and a right part avoiding `right`.
struct JuxtSpec {
  ClassSpec left;
  ClassSpec right;

  /// Parses "231|12". A single-letter name A, B or C selects a named class.
  static JuxtSpec parse(const std::string& text);
  static JuxtSpec classA();  // Av(231|12)
  static JuxtSpec classB();  // Av(321|21)
  static JuxtSpec classC();  // Av(312|21)

  std::string to_string() const;
  bool operator==(const JuxtSpec&) const = default;
};

/// A permutation with a chosen vertical split: the first `split` columns lie
/// on the left-hand side.
struct GriddedPermutation {
  Permutation perm;
  int split = 0;

  bool operator==(const GriddedPermutation&) const = default;
  auto operator<=>(const GriddedPermutation&) const = default;
};

std::string to_string(const GriddedPermutation& g);
GriddedPermutation parse_gridded(const std::string& text);

bool is_valid_gridding(const JuxtSpec& spec, const Permutation& perm, int split);

/// All valid split positions, ascending. Empty iff `perm` is not a member.
std::vector<GriddedPermutation> griddings(const JuxtSpec& spec, const Permutation& perm);

bool is_member(const JuxtSpec& spec, const Permutation& perm);

/// The gridding with maximal split. Throws NonMemberError for non-members.
GriddedPermutation canonical_gridding(const JuxtSpec& spec, const Permutation& perm);

/// Length-n members in lexicographic order, generated by max-value insertion
/// (the class is downward closed, so each member is reached exactly once).
std::vector<Permutation> enumerate_members(const JuxtSpec& spec, int n,
                                           int cap = kDefaultExhaustionCap);

std::uint64_t count_by_bruteforce(const JuxtSpec& spec, int n, int cap = kDefaultExhaustionCap);

/// True iff juxtaposition membership and avoidance of `finite_basis` agree on
/// every permutation of length <= n_max.
bool verify_basis_identity(const JuxtSpec& spec, const Basis& finite_basis, int n_max,
                           int cap = kDefaultExhaustionCap);

}  // namespace permgrid
