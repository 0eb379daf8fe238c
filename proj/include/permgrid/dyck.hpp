#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "permgrid/juxt.hpp"
#include "permgrid/perm.hpp"

namespace permgrid {

/// A Dyck path of semilength m, stored as a word over {U, R} in which every
/// prefix has at least as many U as R steps. Rendered in the plane the word
/// reads along the path from the corner farthest from the origin: U is the
/// vertical letter, R the horizontal one.
class DyckPath {
 public:
  DyckPath() = default;
  /// Validates balance and prefix dominance.
  explicit DyckPath(std::string word);

  int semilength() const { return static_cast<int>(word_.size()) / 2; }
  int size() const { return static_cast<int>(word_.size()); }
  const std::string& word() const { return word_; }
  char step(int i) const { return word_[static_cast<std::size_t>(i)]; }

  bool operator==(const DyckPath&) const = default;
  auto operator<=>(const DyckPath&) const = default;

 private:
  std::string word_;
};

inline std::string to_string(const DyckPath& p) { return p.word(); }
DyckPath parse_path(const std::string& text);

/// All Dyck paths of semilength m.
std::vector<DyckPath> enumerate_paths(int m);

/// The fixed bijection between 231-avoiders and Dyck paths.
/// Throws std::invalid_argument when the input contains 231.
DyckPath perm231_to_dyck(const Permutation& p);
Permutation dyck_to_perm231(const DyckPath& path);

/// The fixed bijection between 321-avoiders and Dyck paths.
DyckPath perm321_to_dyck(const Permutation& p);
Permutation dyck_to_perm321(const DyckPath& path);

/// 312-avoider encoding used by the Av(312|xy) classes: the 231 bijection
/// conjugated by reverse-complement. Under it the i-th U step of the stored
/// word carries the point of value i, and the path's excursions are exactly
/// the sum-indecomposable blocks of the permutation, in ascending value order.
DyckPath perm312_to_dyck(const Permutation& p);
Permutation dyck_to_perm312(const DyckPath& path);

/// Maximal segments touching the diagonal only at their endpoints.
/// Concatenating them in order restores the path.
std::vector<DyckPath> excursions(const DyckPath& path);

/// A cut position along the step word: the leading `cut` steps form the
/// upper segment, the rest the lower one.
struct ArticulationPoint {
  int cut = 0;
  bool operator==(const ArticulationPoint&) const = default;
};

/// Grid coordinates of the cut point when the path is drawn from (0,0) to
/// (m,m) weakly below the diagonal (the word then reads from (m,m) back).
std::pair<int, int> articulation_grid(const DyckPath& path, const ArticulationPoint& a);

/// Cut after the first U step that is preceded by some R step.
/// Empty iff the word is U^m R^m (the path of a decreasing 231-avoider).
std::optional<ArticulationPoint> articulation_231(const DyckPath& path);

/// Cut after the first R step that does not return the word balance to zero.
/// Empty iff the word is (UR)^m (the path of the identity 321-avoider).
std::optional<ArticulationPoint> articulation_321(const DyckPath& path);

/// Same points located on the permutation instead of the path: the cut sits
/// where the path crosses the row of the highest value that still has a
/// larger value to its right (the "1" of the topmost 12 in a 231-avoider).
std::optional<std::pair<int, int>> articulation_231_via_pattern(const Permutation& p);

/// For a 321-avoider: take the inversion maximizing the larger value, then
/// the smaller; the cut is the lower-left lattice corner of the smaller
/// value's box.
std::optional<std::pair<int, int>> articulation_321_via_pattern(const Permutation& p);

enum class JuxtClass { A, B, C };
enum class Placement { Below, Above };

JuxtClass parse_juxt_class(const std::string& name);
JuxtSpec spec_for(JuxtClass cls);

/// A Dyck path whose i-th U step carries h[i-1] right-hand-side points, plus
/// an optional run of points above the whole left-hand side (class B only).
struct DecoratedDyckPath {
  DyckPath path;
  std::vector<int> h;
  Placement placement = Placement::Below;
  int gap = 0;

  bool operator==(const DecoratedDyckPath&) const = default;
};

std::string to_string(const DecoratedDyckPath& d);
DecoratedDyckPath parse_decoration(const std::string& text);

/// Full conversion recipe for one juxtaposition family. The left avoider
/// fixes the path bijection; anchors tie each U step to a value of the left
/// permutation; placement and right-hand monotonicity fix where attached
/// points land.
struct DecorationConfig {
  enum class Lhs { Av231, Av321, Av312 };
  Lhs lhs;
  bool anchors_ascending;  // anchor value of U_i: i if true, m+1-i otherwise
  Placement placement;
  bool rhs_increasing;
  bool allow_gap;
};

DecorationConfig decoration_config(JuxtClass cls);

GriddedPermutation decorated_to_gridded_with(const DyckPath& path, const std::vector<int>& h,
                                             int gap, const DecorationConfig& cfg);
/// Inverse of the above on valid griddings of the config's family.
void gridded_to_decorated_with(const GriddedPermutation& g, const DecorationConfig& cfg,
                               DyckPath& path, std::vector<int>& h, int& gap);

/// Translation of a decorated path into the gridded permutation it encodes,
/// under the conventions of class A, B or C.
GriddedPermutation decorated_to_gridded(const DecoratedDyckPath& d, JuxtClass cls);

/// True iff the encoded gridding is its own canonical (maximal-split)
/// gridding; these are the objects the counting grammars generate.
bool is_canonical_decoration(const DecoratedDyckPath& d, JuxtClass cls);

}  // namespace permgrid
