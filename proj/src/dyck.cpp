#include "permgrid/dyck.hpp"

#include <algorithm>
#include <sstream>

namespace permgrid {

DyckPath::DyckPath(std::string word) : word_(std::move(word)) {
  int bal = 0;
  for (char c : word_) {
    if (c == 'U') {
      ++bal;
    } else if (c == 'R') {
      --bal;
    } else {
      throw std::invalid_argument("path word must be over {U,R}");
    }
    if (bal < 0) throw std::invalid_argument("path word dips below the diagonal: " + word_);
  }
  if (bal != 0) throw std::invalid_argument("unbalanced path word: " + word_);
}

DyckPath parse_path(const std::string& text) { return DyckPath(text); }

namespace {

void gen_paths(std::string& word, int ups, int rights, int m, std::vector<DyckPath>& out) {
  if (ups == m && rights == m) {
    out.emplace_back(word);
    return;
  }
  if (ups < m) {
    word.push_back('U');
    gen_paths(word, ups + 1, rights, m, out);
    word.pop_back();
  }
  if (rights < ups) {
    word.push_back('R');
    gen_paths(word, ups, rights + 1, m, out);
    word.pop_back();
  }
}

// The word reads along the path from the far corner; reversing it walks the
// same path from the origin, where the below-diagonal drawing has every
// prefix with #R >= #U.
std::string forward_word(const DyckPath& p) {
  return std::string(p.word().rbegin(), p.word().rend());
}

DyckPath from_forward(const std::string& fwd) {
  return DyckPath(std::string(fwd.rbegin(), fwd.rend()));
}

}  // namespace

std::vector<DyckPath> enumerate_paths(int m) {
  std::vector<DyckPath> out;
  std::string word;
  word.reserve(static_cast<std::size_t>(2 * m));
  gen_paths(word, 0, 0, m, out);
  return out;
}

DyckPath perm231_to_dyck(const Permutation& p) {
  if (contains(Permutation({2, 3, 1}), p)) {
    throw std::invalid_argument(to_string(p) + " contains 231");
  }
  const int n = p.size();
  // Height of the horizontal step in column c: the number of earlier values
  // below v(c). For a 231-avoider this is nondecreasing in c.
  std::string fwd;
  fwd.reserve(static_cast<std::size_t>(2 * n));
  int height = 0;
  for (int c = 1; c <= n; ++c) {
    int y = 0;
    for (int j = 1; j < c; ++j) {
      if (p.at(j) < p.at(c)) ++y;
    }
    for (; height < y; ++height) fwd.push_back('U');
    fwd.push_back('R');
  }
  for (; height < n; ++height) fwd.push_back('U');
  return from_forward(fwd);
}

Permutation dyck_to_perm231(const DyckPath& path) {
  const std::string fwd = forward_word(path);
  const int n = path.semilength();
  std::vector<int> vals(static_cast<std::size_t>(n), 0);
  // Each horizontal step opens an excursion with respect to the diagonal
  // offset it sits on; the excursion closes at the first return to that
  // offset, whose height is the value placed in the step's column.
  int x = 0, y = 0;
  for (std::size_t i = 0; i < fwd.size(); ++i) {
    if (fwd[i] == 'R') {
      const int col = x + 1;
      const int offset = x - y;
      int xx = x, yy = y;
      for (std::size_t j = i; j < fwd.size(); ++j) {
        if (fwd[j] == 'R') {
          ++xx;
        } else {
          ++yy;
        }
        if (xx - yy == offset) {
          vals[static_cast<std::size_t>(col - 1)] = yy;
          break;
        }
      }
      ++x;
    } else {
      ++y;
    }
  }
  return Permutation(std::move(vals));
}

DyckPath perm321_to_dyck(const Permutation& p) {
  if (contains(Permutation({3, 2, 1}), p)) {
    throw std::invalid_argument(to_string(p) + " contains 321");
  }
  const int n = p.size();
  // Right-to-left minima become the corners of the path; the segments
  // between consecutive corners are forced.
  std::vector<std::pair<int, int>> corners;  // (column, height of corner)
  int sufmin = n + 1;
  for (int c = n; c >= 1; --c) {
    if (p.at(c) < sufmin) {
      corners.emplace_back(c, p.at(c) - 1);
      sufmin = p.at(c);
    }
  }
  std::reverse(corners.begin(), corners.end());
  std::string fwd;
  fwd.reserve(static_cast<std::size_t>(2 * n));
  int x = 0, height = 0;
  for (auto [c, h] : corners) {
    for (; height < h; ++height) fwd.push_back('U');
    for (; x < c; ++x) fwd.push_back('R');
  }
  for (; height < n; ++height) fwd.push_back('U');
  return from_forward(fwd);
}

Permutation dyck_to_perm321(const DyckPath& path) {
  const std::string fwd = forward_word(path);
  const int n = path.semilength();
  std::vector<int> vals(static_cast<std::size_t>(n), 0);
  // Corners give the right-to-left minima; the remaining vertical and
  // horizontal runs pair up from the far end of the path.
  std::vector<int> loose_rows, loose_cols;
  int x = 0, y = 0;
  for (std::size_t i = 0; i < fwd.size(); ++i) {
    if (fwd[i] == 'U') {
      ++y;
      if (i > 0 && fwd[i - 1] == 'U') loose_rows.push_back(y);
    } else {
      ++x;
      if (i + 1 < fwd.size() && fwd[i + 1] == 'U') {
        vals[static_cast<std::size_t>(x - 1)] = y + 1;  // corner
      } else {
        loose_cols.push_back(x);
      }
    }
  }
  std::reverse(loose_rows.begin(), loose_rows.end());
  std::reverse(loose_cols.begin(), loose_cols.end());
  for (std::size_t i = 0; i < loose_cols.size(); ++i) {
    vals[static_cast<std::size_t>(loose_cols[i] - 1)] = loose_rows[i];
  }
  return Permutation(std::move(vals));
}

DyckPath perm312_to_dyck(const Permutation& p) {
  if (contains(Permutation({3, 1, 2}), p)) {
    throw std::invalid_argument(to_string(p) + " contains 312");
  }
  return perm231_to_dyck(apply(Symmetry::ReverseComplement, p));
}

Permutation dyck_to_perm312(const DyckPath& path) {
  return apply(Symmetry::ReverseComplement, dyck_to_perm231(path));
}

std::vector<DyckPath> excursions(const DyckPath& path) {
  std::vector<DyckPath> out;
  int bal = 0;
  std::size_t start = 0;
  for (std::size_t i = 0; i < path.word().size(); ++i) {
    bal += path.word()[i] == 'U' ? 1 : -1;
    if (bal == 0) {
      out.emplace_back(path.word().substr(start, i + 1 - start));
      start = i + 1;
    }
  }
  return out;
}

std::pair<int, int> articulation_grid(const DyckPath& path, const ArticulationPoint& a) {
  const int m = path.semilength();
  int u = 0, r = 0;
  for (int i = 0; i < a.cut; ++i) {
    if (path.step(i) == 'U') {
      ++u;
    } else {
      ++r;
    }
  }
  return {m - r, m - u};
}

std::optional<ArticulationPoint> articulation_231(const DyckPath& path) {
  bool seen_r = false;
  for (int i = 0; i < path.size(); ++i) {
    if (path.step(i) == 'R') {
      seen_r = true;
    } else if (seen_r) {
      return ArticulationPoint{i + 1};
    }
  }
  return std::nullopt;
}

std::optional<ArticulationPoint> articulation_321(const DyckPath& path) {
  int bal = 0;
  for (int i = 0; i < path.size(); ++i) {
    bal += path.step(i) == 'U' ? 1 : -1;
    if (path.step(i) == 'R' && bal > 0) return ArticulationPoint{i + 1};
  }
  return std::nullopt;
}

std::optional<std::pair<int, int>> articulation_231_via_pattern(const Permutation& p) {
  const int n = p.size();
  int v_star = 0;
  int sufmax = 0;
  for (int c = n; c >= 1; --c) {
    if (p.at(c) < sufmax) v_star = std::max(v_star, p.at(c));
    sufmax = std::max(sufmax, p.at(c));
  }
  if (v_star == 0) return std::nullopt;
  // The path crosses the row of v_star exactly once, at its vertical step.
  const std::string fwd = forward_word(perm231_to_dyck(p));
  int x = 0, y = 0;
  for (char c : fwd) {
    if (c == 'U') {
      if (++y == v_star) return std::make_pair(x, v_star - 1);
    } else {
      ++x;
    }
  }
  return std::nullopt;
}

std::optional<std::pair<int, int>> articulation_321_via_pattern(const Permutation& p) {
  const int n = p.size();
  int best_big = 0, pos_big = 0;
  int sufmin = n + 1;
  for (int c = n; c >= 1; --c) {
    if (p.at(c) > sufmin && p.at(c) > best_big) {
      best_big = p.at(c);
      pos_big = c;
    }
    sufmin = std::min(sufmin, p.at(c));
  }
  if (best_big == 0) return std::nullopt;
  int small = 0, pos_small = 0;
  for (int c = pos_big + 1; c <= n; ++c) {
    if (p.at(c) < best_big && p.at(c) > small) {
      small = p.at(c);
      pos_small = c;
    }
  }
  return std::make_pair(pos_small - 1, small - 1);
}

JuxtClass parse_juxt_class(const std::string& name) {
  if (name == "A") return JuxtClass::A;
  if (name == "B") return JuxtClass::B;
  if (name == "C") return JuxtClass::C;
  throw std::invalid_argument("unknown class '" + name + "' (expected A, B or C)");
}

JuxtSpec spec_for(JuxtClass cls) {
  switch (cls) {
    case JuxtClass::A: return JuxtSpec::classA();
    case JuxtClass::B: return JuxtSpec::classB();
    case JuxtClass::C: return JuxtSpec::classC();
  }
  throw std::invalid_argument("bad class");
}

DecorationConfig decoration_config(JuxtClass cls) {
  switch (cls) {
    case JuxtClass::A:
      return {DecorationConfig::Lhs::Av231, false, Placement::Below, false, false};
    case JuxtClass::B:
      return {DecorationConfig::Lhs::Av321, false, Placement::Below, true, true};
    case JuxtClass::C:
      return {DecorationConfig::Lhs::Av312, true, Placement::Above, true, false};
  }
  throw std::invalid_argument("bad class");
}

std::string to_string(const DecoratedDyckPath& d) {
  std::string out = d.path.word() + ";";
  for (std::size_t i = 0; i < d.h.size(); ++i) {
    if (i) out.push_back(',');
    out += std::to_string(d.h[i]);
  }
  out += ";" + std::to_string(d.gap);
  return out;
}

DecoratedDyckPath parse_decoration(const std::string& text) {
  auto first = text.find(';');
  auto second = text.rfind(';');
  if (first == std::string::npos || second == first) {
    throw std::invalid_argument("decoration must look like \"path;h1,h2,...;gap\"");
  }
  DecoratedDyckPath d;
  d.path = DyckPath(text.substr(0, first));
  std::stringstream ss(text.substr(first + 1, second - first - 1));
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    if (!tok.empty()) d.h.push_back(std::stoi(tok));
  }
  d.gap = std::stoi(text.substr(second + 1));
  if (static_cast<int>(d.h.size()) != d.path.semilength()) {
    throw std::invalid_argument("decoration length does not match path semilength");
  }
  return d;
}

namespace {

Permutation decode_lhs(const DyckPath& path, DecorationConfig::Lhs lhs) {
  switch (lhs) {
    case DecorationConfig::Lhs::Av231: return dyck_to_perm231(path);
    case DecorationConfig::Lhs::Av321: return dyck_to_perm321(path);
    case DecorationConfig::Lhs::Av312: return dyck_to_perm312(path);
  }
  throw std::invalid_argument("bad lhs");
}

DyckPath encode_lhs(const Permutation& p, DecorationConfig::Lhs lhs) {
  switch (lhs) {
    case DecorationConfig::Lhs::Av231: return perm231_to_dyck(p);
    case DecorationConfig::Lhs::Av321: return perm321_to_dyck(p);
    case DecorationConfig::Lhs::Av312: return perm312_to_dyck(p);
  }
  throw std::invalid_argument("bad lhs");
}

}  // namespace

GriddedPermutation decorated_to_gridded_with(const DyckPath& path, const std::vector<int>& h,
                                             int gap, const DecorationConfig& cfg) {
  const int m = path.semilength();
  if (static_cast<int>(h.size()) != m) throw std::invalid_argument("h length must equal semilength");
  if (gap < 0) throw std::invalid_argument("negative gap");
  if (gap > 0 && !cfg.allow_gap) throw std::invalid_argument("gap not allowed for this family");
  for (int c : h) {
    if (c < 0) throw std::invalid_argument("negative decoration count");
  }

  const Permutation lhs = decode_lhs(path, cfg.lhs);

  // Vertical layout keys: a left point of value v sits at 2v; a run attached
  // to anchor a sits at 2a-1 (just below) or 2a+1 (just above); gap points go
  // above the whole left side.
  struct Item {
    int key;
    bool is_lhs;
    int lhs_value;
  };
  std::vector<Item> items;
  for (int v = 1; v <= m; ++v) items.push_back({2 * v, true, v});
  for (int i = 1; i <= m; ++i) {
    const int anchor = cfg.anchors_ascending ? i : m + 1 - i;
    const int key = cfg.placement == Placement::Below ? 2 * anchor - 1 : 2 * anchor + 1;
    for (int t = 0; t < h[static_cast<std::size_t>(i - 1)]; ++t) items.push_back({key, false, 0});
  }
  for (int t = 0; t < gap; ++t) items.push_back({2 * m + 2, false, 0});
  std::stable_sort(items.begin(), items.end(),
                   [](const Item& a, const Item& b) { return a.key < b.key; });

  const int total = static_cast<int>(items.size());
  std::vector<int> lhs_final(static_cast<std::size_t>(m) + 1, 0);
  std::vector<int> rhs_values;
  for (int rank = 1; rank <= total; ++rank) {
    const Item& it = items[static_cast<std::size_t>(rank - 1)];
    if (it.is_lhs) {
      lhs_final[static_cast<std::size_t>(it.lhs_value)] = rank;
    } else {
      rhs_values.push_back(rank);
    }
  }
  if (!cfg.rhs_increasing) std::reverse(rhs_values.begin(), rhs_values.end());

  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(total));
  for (int c = 1; c <= m; ++c) out.push_back(lhs_final[static_cast<std::size_t>(lhs.at(c))]);
  out.insert(out.end(), rhs_values.begin(), rhs_values.end());
  return GriddedPermutation{Permutation(std::move(out)), m};
}

void gridded_to_decorated_with(const GriddedPermutation& g, const DecorationConfig& cfg,
                               DyckPath& path, std::vector<int>& h, int& gap) {
  const int m = g.split;
  const int n = g.perm.size();
  const auto& vals = g.perm.values();
  std::span<const int> prefix(vals.data(), static_cast<std::size_t>(m));

  path = encode_lhs(Permutation::pattern_of(prefix), cfg.lhs);
  h.assign(static_cast<std::size_t>(m), 0);
  gap = 0;

  int prev = cfg.rhs_increasing ? 0 : n + 1;
  for (int c = m + 1; c <= n; ++c) {
    const int v = g.perm.at(c);
    if (cfg.rhs_increasing ? v < prev : v > prev) {
      throw std::invalid_argument("right-hand side is not monotone for this family");
    }
    prev = v;
    int below = 0;  // left points under this right point
    for (int j = 1; j <= m; ++j) {
      if (g.perm.at(j) < v) ++below;
    }
    int anchor;
    if (cfg.placement == Placement::Below) {
      if (below == m) {
        if (!cfg.allow_gap) throw std::invalid_argument("right point above the whole left side");
        ++gap;
        continue;
      }
      anchor = below + 1;
    } else {
      if (below == 0) throw std::invalid_argument("right point below the whole left side");
      anchor = below;
    }
    const int index = cfg.anchors_ascending ? anchor : m + 1 - anchor;
    ++h[static_cast<std::size_t>(index - 1)];
  }
}

GriddedPermutation decorated_to_gridded(const DecoratedDyckPath& d, JuxtClass cls) {
  const DecorationConfig cfg = decoration_config(cls);
  if (d.placement != cfg.placement) {
    throw std::invalid_argument("placement inconsistent with class");
  }
  if (d.gap != 0 && cls != JuxtClass::B) {
    throw std::invalid_argument("gap decoration is only valid for class B");
  }
  return decorated_to_gridded_with(d.path, d.h, d.gap, cfg);
}

bool is_canonical_decoration(const DecoratedDyckPath& d, JuxtClass cls) {
  const GriddedPermutation g = decorated_to_gridded(d, cls);
  return canonical_gridding(spec_for(cls), g.perm) == g;
}

}  // namespace permgrid
