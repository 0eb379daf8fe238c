#include "permgrid/perm.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace permgrid {

Permutation::Permutation(std::vector<int> values) : values_(std::move(values)) {
  const int n = static_cast<int>(values_.size());
  std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
  for (int v : values_) {
    if (v < 1 || v > n || seen[static_cast<std::size_t>(v)]) {
      throw std::invalid_argument("not a permutation of 1..n");
    }
    seen[static_cast<std::size_t>(v)] = true;
  }
}

Permutation Permutation::identity(int n) {
  std::vector<int> v(static_cast<std::size_t>(n));
  std::iota(v.begin(), v.end(), 1);
  return Permutation(std::move(v));
}

Permutation Permutation::decreasing(int n) {
  std::vector<int> v(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) v[static_cast<std::size_t>(i)] = n - i;
  return Permutation(std::move(v));
}

Permutation Permutation::pattern_of(std::span<const int> values) {
  const int n = static_cast<int>(values.size());
  std::vector<int> sorted(values.begin(), values.end());
  std::sort(sorted.begin(), sorted.end());
  std::vector<int> out(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    auto it = std::lower_bound(sorted.begin(), sorted.end(), values[static_cast<std::size_t>(i)]);
    out[static_cast<std::size_t>(i)] = static_cast<int>(it - sorted.begin()) + 1;
  }
  return Permutation(std::move(out));
}

std::string to_string(const Permutation& p) {
  std::string out;
  if (p.size() <= 9) {
    for (int v : p.values()) out.push_back(static_cast<char>('0' + v));
  } else {
    for (std::size_t i = 0; i < p.values().size(); ++i) {
      if (i) out.push_back(',');
      out += std::to_string(p.values()[i]);
    }
  }
  return out;
}

Permutation parse_permutation(const std::string& text) {
  std::vector<int> vals;
  if (text.find(',') != std::string::npos) {
    std::stringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
      if (tok.empty()) throw std::invalid_argument("empty entry in permutation '" + text + "'");
      vals.push_back(std::stoi(tok));
    }
  } else {
    for (char c : text) {
      if (c < '1' || c > '9') throw std::invalid_argument("bad digit in permutation '" + text + "'");
      vals.push_back(c - '0');
    }
  }
  return Permutation(std::move(vals));
}

namespace {

// Backtracking subsequence match. `chosen` holds values already matched to
// pattern positions 0..t-1; candidate values must sit in the same relative
// order as the pattern prescribes.
bool match_from(const std::vector<int>& pat, std::span<const int> vals, std::size_t t,
                std::size_t start, std::vector<int>& chosen) {
  if (t == pat.size()) return true;
  const std::size_t need = pat.size() - t;
  for (std::size_t i = start; i + need <= vals.size(); ++i) {
    const int v = vals[i];
    bool ok = true;
    for (std::size_t s = 0; s < t && ok; ++s) {
      // Relative order of (pattern[s], pattern[t]) must match (chosen[s], v).
      ok = (pat[s] < pat[t]) == (chosen[s] < v);
    }
    if (!ok) continue;
    chosen.push_back(v);
    if (match_from(pat, vals, t + 1, i + 1, chosen)) return true;
    chosen.pop_back();
  }
  return false;
}

}  // namespace

bool contains_values(const Permutation& pattern, std::span<const int> values) {
  const std::size_t k = static_cast<std::size_t>(pattern.size());
  if (k == 0) return true;
  if (k > values.size()) return false;
  if (k == 1) return true;
  if (k == 2) {
    const bool ascent = pattern.at(1) < pattern.at(2);
    int best = values[0];
    for (std::size_t i = 1; i < values.size(); ++i) {
      if (ascent) {
        if (values[i] > best) return true;
        best = std::min(best, values[i]);
      } else {
        if (values[i] < best) return true;
        best = std::max(best, values[i]);
      }
    }
    return false;
  }
  std::vector<int> chosen;
  chosen.reserve(k);
  return match_from(pattern.values(), values, 0, 0, chosen);
}

bool contains(const Permutation& pattern, const Permutation& perm) {
  return contains_values(pattern, perm.values());
}

Basis::Basis(std::vector<Permutation> patterns) : patterns_(std::move(patterns)) {
  for (std::size_t i = 0; i < patterns_.size(); ++i) {
    for (std::size_t j = 0; j < patterns_.size(); ++j) {
      if (i != j && contains(patterns_[i], patterns_[j])) {
        throw std::invalid_argument("basis is not an antichain: " + permgrid::to_string(patterns_[i]) +
                                    " is contained in " + permgrid::to_string(patterns_[j]));
      }
    }
  }
}

Basis Basis::parse(const std::string& text) {
  std::vector<Permutation> pats;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    if (!tok.empty()) pats.push_back(parse_permutation(tok));
  }
  return Basis(std::move(pats));
}

std::string Basis::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < patterns_.size(); ++i) {
    if (i) out.push_back(',');
    out += permgrid::to_string(patterns_[i]);
  }
  return out;
}

bool avoids_all_values(const Basis& basis, std::span<const int> values) {
  for (const auto& p : basis.patterns()) {
    if (contains_values(p, values)) return false;
  }
  return true;
}

bool avoids_all(const Basis& basis, const Permutation& perm) {
  return avoids_all_values(basis, perm.values());
}

std::vector<Permutation> enumerate_class(const ClassSpec& spec, int n, int cap) {
  if (n > cap) {
    throw ExhaustionBoundError("exhaustion bound exceeded: n=" + std::to_string(n) +
                               " > cap=" + std::to_string(cap));
  }
  if (n < 0) throw std::invalid_argument("negative length");
  // Grow members length by length, inserting the new maximum value at every
  // position. Deleting the maximum of a length-k member yields a length-(k-1)
  // member (the class is downward closed), so every candidate is reached
  // exactly once.
  std::vector<std::vector<int>> current = {{}};
  for (int k = 1; k <= n; ++k) {
    std::vector<std::vector<int>> next;
    std::vector<int> cand(static_cast<std::size_t>(k));
    for (const auto& base : current) {
      for (int pos = 0; pos < k; ++pos) {
        for (int i = 0; i < pos; ++i) cand[static_cast<std::size_t>(i)] = base[static_cast<std::size_t>(i)];
        cand[static_cast<std::size_t>(pos)] = k;
        for (int i = pos; i < k - 1; ++i) cand[static_cast<std::size_t>(i + 1)] = base[static_cast<std::size_t>(i)];
        if (avoids_all_values(spec.basis, cand)) next.push_back(cand);
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

namespace {

Permutation reverse_of(const Permutation& p) {
  std::vector<int> v(p.values().rbegin(), p.values().rend());
  return Permutation(std::move(v));
}

Permutation complement_of(const Permutation& p) {
  const int n = p.size();
  std::vector<int> v;
  v.reserve(static_cast<std::size_t>(n));
  for (int x : p.values()) v.push_back(n + 1 - x);
  return Permutation(std::move(v));
}

Permutation inverse_of(const Permutation& p) {
  const int n = p.size();
  std::vector<int> v(static_cast<std::size_t>(n));
  for (int i = 1; i <= n; ++i) v[static_cast<std::size_t>(p.at(i) - 1)] = i;
  return Permutation(std::move(v));
}

}  // namespace

Permutation apply(Symmetry op, const Permutation& p) {
  switch (op) {
    case Symmetry::Identity: return p;
    case Symmetry::Reverse: return reverse_of(p);
    case Symmetry::Complement: return complement_of(p);
    case Symmetry::Inverse: return inverse_of(p);
    case Symmetry::ReverseComplement: return reverse_of(complement_of(p));
    case Symmetry::ReverseInverse: return reverse_of(inverse_of(p));
    case Symmetry::ComplementInverse: return complement_of(inverse_of(p));
    case Symmetry::ReverseComplementInverse: return reverse_of(complement_of(inverse_of(p)));
  }
  throw std::invalid_argument("unknown symmetry");
}

Symmetry parse_symmetry(const std::string& name) {
  if (name == "identity") return Symmetry::Identity;
  if (name == "reverse") return Symmetry::Reverse;
  if (name == "complement") return Symmetry::Complement;
  if (name == "inverse") return Symmetry::Inverse;
  if (name == "reverse-complement") return Symmetry::ReverseComplement;
  if (name == "reverse-inverse") return Symmetry::ReverseInverse;
  if (name == "complement-inverse") return Symmetry::ComplementInverse;
  if (name == "reverse-complement-inverse") return Symmetry::ReverseComplementInverse;
  throw std::invalid_argument("unknown symmetry '" + name + "'");
}

std::string to_string(Symmetry op) {
  switch (op) {
    case Symmetry::Identity: return "identity";
    case Symmetry::Reverse: return "reverse";
    case Symmetry::Complement: return "complement";
    case Symmetry::Inverse: return "inverse";
    case Symmetry::ReverseComplement: return "reverse-complement";
    case Symmetry::ReverseInverse: return "reverse-inverse";
    case Symmetry::ComplementInverse: return "complement-inverse";
    case Symmetry::ReverseComplementInverse: return "reverse-complement-inverse";
  }
  return "?";
}

}  // namespace permgrid
