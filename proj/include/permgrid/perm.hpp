#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace permgrid {

/// Thrown when an exhaustive operation is asked to go past its length cap.
class ExhaustionBoundError : public std::runtime_error {
 public:
  explicit ExhaustionBoundError(const std::string& msg) : std::runtime_error(msg) {}
};

inline constexpr int kDefaultExhaustionCap = 10;

/// A permutation of {1..n} in one-line notation. Immutable after construction.
/// The empty permutation (n = 0) is a valid value.
class Permutation {
 public:
  Permutation() = default;
  /// Validates that `values` is a rearrangement of 1..n.
  explicit Permutation(std::vector<int> values);

  static Permutation identity(int n);
  static Permutation decreasing(int n);
  /// Flattens a sequence of distinct integers to the permutation with the
  /// same relative order (e.g. {7, 2, 9} -> 213).
  static Permutation pattern_of(std::span<const int> values);

  int size() const { return static_cast<int>(values_.size()); }
  bool empty() const { return values_.empty(); }
  /// 1-based access: value in column `pos`.
  int at(int pos) const { return values_[static_cast<std::size_t>(pos - 1)]; }
  const std::vector<int>& values() const { return values_; }

  bool operator==(const Permutation&) const = default;
  auto operator<=>(const Permutation&) const = default;

 private:
  std::vector<int> values_;
};

/// Space-free digit string for n <= 9 ("1243"), comma-separated for n >= 10.
std::string to_string(const Permutation& p);
Permutation parse_permutation(const std::string& text);

/// True iff `values` has a subsequence order-isomorphic to `pattern`.
/// Works on any sequence of distinct integers, not just 1..n.
bool contains_values(const Permutation& pattern, std::span<const int> values);
bool contains(const Permutation& pattern, const Permutation& perm);

/// An antichain of forbidden patterns. Construction rejects a set in which
/// one pattern contains another (duplicates included).
class Basis {
 public:
  Basis() = default;
  explicit Basis(std::vector<Permutation> patterns);
  /// Comma-separated pattern list, e.g. "2314,2413,3412". Empty string = empty basis.
  static Basis parse(const std::string& text);

  const std::vector<Permutation>& patterns() const { return patterns_; }
  std::string to_string() const;
  bool operator==(const Basis&) const = default;

 private:
  std::vector<Permutation> patterns_;
};

bool avoids_all(const Basis& basis, const Permutation& perm);
bool avoids_all_values(const Basis& basis, std::span<const int> values);

/// Av(basis): the downward-closed class of permutations avoiding every basis pattern.
struct ClassSpec {
  Basis basis;

  static ClassSpec parse(const std::string& text) { return ClassSpec{Basis::parse(text)}; }
  std::string to_string() const { return basis.to_string(); }
  bool operator==(const ClassSpec&) const = default;
};

/// All length-n members of Av(basis), in lexicographic order of one-line notation.
/// Throws ExhaustionBoundError when n exceeds `cap`.
std::vector<Permutation> enumerate_class(const ClassSpec& spec, int n,
                                         int cap = kDefaultExhaustionCap);

/// Plot symmetries. reverse/complement/inverse are involutions; the remaining
/// elements are their compositions (applied right-to-left, e.g.
/// ReverseInverse means reverse after inverse).
enum class Symmetry {
  Identity,
  Reverse,
  Complement,
  Inverse,
  ReverseComplement,
  ReverseInverse,
  ComplementInverse,
  ReverseComplementInverse,
};

Permutation apply(Symmetry op, const Permutation& p);
Symmetry parse_symmetry(const std::string& name);
std::string to_string(Symmetry op);

}  // namespace permgrid
