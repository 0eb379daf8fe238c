#include "permgrid/juxt.hpp"

#include <algorithm>

namespace permgrid {

JuxtSpec JuxtSpec::parse(const std::string& text) {
  if (text == "A") return classA();
  if (text == "B") return classB();
  if (text == "C") return classC();
  auto bar = text.find('|');
  if (bar == std::string::npos) {
    throw std::invalid_argument("juxtaposition spec must look like \"231|12\", got '" + text + "'");
  }
  return JuxtSpec{ClassSpec::parse(text.substr(0, bar)), ClassSpec::parse(text.substr(bar + 1))};
}

JuxtSpec JuxtSpec::classA() { return parse("231|12"); }
JuxtSpec JuxtSpec::classB() { return parse("321|21"); }
JuxtSpec JuxtSpec::classC() { return parse("312|21"); }

std::string JuxtSpec::to_string() const { return left.to_string() + "|" + right.to_string(); }

std::string to_string(const GriddedPermutation& g) {
  return to_string(g.perm) + "|" + std::to_string(g.split);
}

GriddedPermutation parse_gridded(const std::string& text) {
  auto bar = text.rfind('|');
  if (bar == std::string::npos) throw std::invalid_argument("gridded permutation needs '|<split>'");
  GriddedPermutation g{parse_permutation(text.substr(0, bar)), std::stoi(text.substr(bar + 1))};
  if (g.split < 0 || g.split > g.perm.size()) throw std::invalid_argument("split out of range");
  return g;
}

bool is_valid_gridding(const JuxtSpec& spec, const Permutation& perm, int split) {
  const auto& v = perm.values();
  std::span<const int> all(v);
  return avoids_all_values(spec.left.basis, all.first(static_cast<std::size_t>(split))) &&
         avoids_all_values(spec.right.basis, all.subspan(static_cast<std::size_t>(split)));
}

std::vector<GriddedPermutation> griddings(const JuxtSpec& spec, const Permutation& perm) {
  std::vector<GriddedPermutation> out;
  const auto& v = perm.values();
  std::span<const int> all(v);
  for (int s = 0; s <= perm.size(); ++s) {
    // Once the prefix picks up a forbidden left pattern, longer prefixes keep it.
    if (!avoids_all_values(spec.left.basis, all.first(static_cast<std::size_t>(s)))) break;
    if (avoids_all_values(spec.right.basis, all.subspan(static_cast<std::size_t>(s)))) {
      out.push_back(GriddedPermutation{perm, s});
    }
  }
  return out;
}

bool is_member(const JuxtSpec& spec, const Permutation& perm) {
  const auto& v = perm.values();
  std::span<const int> all(v);
  for (int s = 0; s <= perm.size(); ++s) {
    if (!avoids_all_values(spec.left.basis, all.first(static_cast<std::size_t>(s)))) return false;
    if (avoids_all_values(spec.right.basis, all.subspan(static_cast<std::size_t>(s)))) return true;
  }
  return false;
}

GriddedPermutation canonical_gridding(const JuxtSpec& spec, const Permutation& perm) {
  const auto& v = perm.values();
  std::span<const int> all(v);
  int best = -1;
  for (int s = 0; s <= perm.size(); ++s) {
    if (!avoids_all_values(spec.left.basis, all.first(static_cast<std::size_t>(s)))) break;
    if (avoids_all_values(spec.right.basis, all.subspan(static_cast<std::size_t>(s)))) best = s;
  }
  if (best < 0) {
    throw NonMemberError(to_string(perm) + " is not in Av(" + spec.to_string() + ")");
  }
  return GriddedPermutation{perm, best};
}

std::vector<Permutation> enumerate_members(const JuxtSpec& spec, int n, int cap) {
  if (n > cap) {
    throw ExhaustionBoundError("exhaustion bound exceeded: n=" + std::to_string(n) +
                               " > cap=" + std::to_string(cap));
  }
  if (n < 0) throw std::invalid_argument("negative length");
  std::vector<std::vector<int>> current = {{}};
  for (int k = 1; k <= n; ++k) {
    std::vector<std::vector<int>> next;
    std::vector<int> cand(static_cast<std::size_t>(k));
    for (const auto& base : current) {
      for (int pos = 0; pos < k; ++pos) {
        for (int i = 0; i < pos; ++i) cand[static_cast<std::size_t>(i)] = base[static_cast<std::size_t>(i)];
        cand[static_cast<std::size_t>(pos)] = k;
        for (int i = pos; i < k - 1; ++i) cand[static_cast<std::size_t>(i + 1)] = base[static_cast<std::size_t>(i)];
        if (is_member(spec, Permutation(cand))) next.push_back(cand);
      }
    }
    current = std::move(next);
  }
  std::sort(current.begin(), current.end());
  std::vector<Permutation> out;
  out.reserve(current.size());
  for (auto& v : current) out.emplace_back(std::move(v));
  return out;
}

std::uint64_t count_by_bruteforce(const JuxtSpec& spec, int n, int cap) {
  return enumerate_members(spec, n, cap).size();
}

bool verify_basis_identity(const JuxtSpec& spec, const Basis& finite_basis, int n_max, int cap) {
  if (n_max > cap) {
    throw ExhaustionBoundError("exhaustion bound exceeded: n=" + std::to_string(n_max) +
                               " > cap=" + std::to_string(cap));
  }
  for (int n = 0; n <= n_max; ++n) {
    std::vector<int> vals(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) vals[static_cast<std::size_t>(i)] = i + 1;
    do {
      Permutation p{std::vector<int>(vals)};
      if (is_member(spec, p) != avoids_all(finite_basis, p)) return false;
    } while (std::next_permutation(vals.begin(), vals.end()));
  }
  return true;
}

}  // namespace permgrid
