#include "permgrid/bijections.hpp"

#include <algorithm>
#include <set>

#include <json.hpp>

namespace permgrid {

namespace {

// Conversion recipes for the families the maps move between. Classes A, B, C
// are the library configs; the remaining three are their partners.
const DecorationConfig kConfigA = decoration_config(JuxtClass::A);
const DecorationConfig kConfigB = decoration_config(JuxtClass::B);
const DecorationConfig kConfigC = decoration_config(JuxtClass::C);
// Av(321|12), image of theta.
const DecorationConfig kConfig321_12{DecorationConfig::Lhs::Av321, false, Placement::Below, false,
                                     false};
// Av(231|21), domain of psi.
const DecorationConfig kConfig231_21{DecorationConfig::Lhs::Av231, false, Placement::Below, true,
                                     true};
// Av(312|12), image of phi.
const DecorationConfig kConfig312_12{DecorationConfig::Lhs::Av312, true, Placement::Below, false,
                                     false};

const JuxtSpec kSpec321_12 = JuxtSpec::parse("321|12");
const JuxtSpec kSpec231_21 = JuxtSpec::parse("231|21");
const JuxtSpec kSpec312_12 = JuxtSpec::parse("312|12");

GriddedPermutation require_canonical(const JuxtSpec& spec, const GriddedPermutation& g) {
  const GriddedPermutation canon = canonical_gridding(spec, g.perm);  // throws for non-members
  if (canon != g) {
    throw std::invalid_argument(to_string(g) + " is not the canonical gridding in Av(" +
                                spec.to_string() + ")");
  }
  return canon;
}

}  // namespace

DyckPath lambda_path(const DyckPath& p) {
  const auto art = articulation_231(p);
  const int m = p.semilength();
  if (!art) {
    // Word U^m R^m; the only articulation-free target word is (UR)^m.
    std::string out;
    for (int i = 0; i < m; ++i) out += "UR";
    return DyckPath(out);
  }
  const int cut = art->cut;
  // Leading segment U^a R^b U.
  int a = 0;
  while (a < cut && p.step(a) == 'U') ++a;
  const int b = cut - 1 - a;
  std::string out;
  for (int i = 0; i < b - 1; ++i) out += "UR";
  out.append(static_cast<std::size_t>(a - b + 2), 'U');
  out.push_back('R');
  out += p.word().substr(static_cast<std::size_t>(cut));
  return DyckPath(out);
}

DyckPath lambda_path_inverse(const DyckPath& q) {
  const auto art = articulation_321(q);
  const int m = q.semilength();
  if (!art) {
    // Word (UR)^m back to U^m R^m.
    return DyckPath(std::string(static_cast<std::size_t>(m), 'U') +
                    std::string(static_cast<std::size_t>(m), 'R'));
  }
  const int cut = art->cut;
  // Leading segment (UR)^e U^d R with d >= 2.
  int e = 0, pos = 0;
  while (pos + 1 < cut - 1 && q.step(pos) == 'U' && q.step(pos + 1) == 'R') {
    ++e;
    pos += 2;
  }
  const int d = cut - 1 - pos;
  const int a = e + d - 1;
  const int b = e + 1;
  std::string out(static_cast<std::size_t>(a), 'U');
  out.append(static_cast<std::size_t>(b), 'R');
  out.push_back('U');
  out += q.word().substr(static_cast<std::size_t>(cut));
  return DyckPath(out);
}

Permutation lambda(const Permutation& p) {
  return dyck_to_perm321(lambda_path(perm231_to_dyck(p)));
}

Permutation lambda_inverse(const Permutation& q) {
  return dyck_to_perm231(lambda_path_inverse(perm321_to_dyck(q)));
}

GriddedPermutation theta(const GriddedPermutation& g) {
  require_canonical(JuxtSpec::classA(), g);
  DyckPath path;
  std::vector<int> h;
  int gap = 0;
  gridded_to_decorated_with(g, kConfigA, path, h, gap);
  return decorated_to_gridded_with(lambda_path(path), h, 0, kConfig321_12);
}

GriddedPermutation theta_inverse(const GriddedPermutation& g) {
  require_canonical(kSpec321_12, g);
  DyckPath path;
  std::vector<int> h;
  int gap = 0;
  gridded_to_decorated_with(g, kConfig321_12, path, h, gap);
  return decorated_to_gridded_with(lambda_path_inverse(path), h, 0, kConfigA);
}

GriddedPermutation psi(const GriddedPermutation& g) {
  require_canonical(kSpec231_21, g);
  DyckPath path;
  std::vector<int> h;
  int gap = 0;
  gridded_to_decorated_with(g, kConfig231_21, path, h, gap);
  return decorated_to_gridded_with(lambda_path(path), h, gap, kConfigB);
}

GriddedPermutation psi_inverse(const GriddedPermutation& g) {
  require_canonical(JuxtSpec::classB(), g);
  DyckPath path;
  std::vector<int> h;
  int gap = 0;
  gridded_to_decorated_with(g, kConfigB, path, h, gap);
  return decorated_to_gridded_with(lambda_path_inverse(path), h, gap, kConfig231_21);
}

namespace {

// Rotate the excursion holding the distinguished U step to the far end and
// reverse the decoration order inside it. Applying the same surgery at the
// matching block on the other side undoes it.
void rotate_at_block(const DyckPath& path, const std::vector<int>& h, int pivot_index,
                     DyckPath& out_path, std::vector<int>& out_h) {
  const std::vector<DyckPath> blocks = excursions(path);
  std::vector<std::pair<int, int>> ranges;  // [first, last] 1-based U indices
  int off = 0;
  int pivot_block = -1;
  for (std::size_t t = 0; t < blocks.size(); ++t) {
    const int s = blocks[t].semilength();
    ranges.emplace_back(off + 1, off + s);
    if (pivot_index >= off + 1 && pivot_index <= off + s) pivot_block = static_cast<int>(t);
    off += s;
  }
  std::string word;
  std::vector<int> nh;
  auto append_block = [&](int t, bool mirrored) {
    word += blocks[static_cast<std::size_t>(t)].word();
    const auto [lo, hi] = ranges[static_cast<std::size_t>(t)];
    if (mirrored) {
      for (int i = hi; i >= lo; --i) nh.push_back(h[static_cast<std::size_t>(i - 1)]);
    } else {
      for (int i = lo; i <= hi; ++i) nh.push_back(h[static_cast<std::size_t>(i - 1)]);
    }
  };
  for (int t = pivot_block + 1; t < static_cast<int>(blocks.size()); ++t) append_block(t, false);
  append_block(pivot_block, true);
  for (int t = 0; t < pivot_block; ++t) append_block(t, false);
  out_path = DyckPath(word);
  out_h = std::move(nh);
}

}  // namespace

GriddedPermutation phi(const GriddedPermutation& g) {
  require_canonical(JuxtSpec::classC(), g);
  DyckPath path;
  std::vector<int> h;
  int gap = 0;
  gridded_to_decorated_with(g, kConfigC, path, h, gap);
  // U indices equal anchor values here, so the first right point (the lowest
  // one) sits at the lowest decorated index.
  int pivot = 0;
  for (std::size_t i = 0; i < h.size(); ++i) {
    if (h[i] > 0) {
      pivot = static_cast<int>(i) + 1;
      break;
    }
  }
  if (pivot == 0) return g;  // no right points: the classes coincide
  DyckPath npath;
  std::vector<int> nh;
  rotate_at_block(path, h, pivot, npath, nh);
  return decorated_to_gridded_with(npath, nh, 0, kConfig312_12);
}

GriddedPermutation phi_inverse(const GriddedPermutation& g) {
  require_canonical(kSpec312_12, g);
  DyckPath path;
  std::vector<int> h;
  int gap = 0;
  gridded_to_decorated_with(g, kConfig312_12, path, h, gap);
  // First right point is now the highest one: the highest decorated index.
  int pivot = 0;
  for (std::size_t i = h.size(); i-- > 0;) {
    if (h[i] > 0) {
      pivot = static_cast<int>(i) + 1;
      break;
    }
  }
  if (pivot == 0) return g;
  DyckPath npath;
  std::vector<int> nh;
  rotate_at_block(path, h, pivot, npath, nh);
  return decorated_to_gridded_with(npath, nh, 0, kConfigC);
}

namespace {

// Value of the left point sitting just above the articulation point, in the
// numbering of the full gridded permutation.
int articulation_marker_value(const GriddedPermutation& g, bool lhs_is_231) {
  const auto& vals = g.perm.values();
  std::span<const int> prefix(vals.data(), static_cast<std::size_t>(g.split));
  const Permutation p1 = Permutation::pattern_of(prefix);
  const auto art = lhs_is_231 ? articulation_231_via_pattern(p1) : articulation_321_via_pattern(p1);
  if (!art) return 0;
  const int pattern_value = art->second + 1;
  // Translate the pattern value back to the full permutation's value.
  for (int j = 1; j <= g.split; ++j) {
    if (p1.at(j) == pattern_value) return g.perm.at(j);
  }
  return 0;
}

void check_gridded_map(int n, const JuxtSpec& dom_spec,
                       const JuxtSpec& target_spec,
                       GriddedPermutation (*fwd)(const GriddedPermutation&),
                       GriddedPermutation (*bwd)(const GriddedPermutation&), bool check_h,
                       bool check_h_multiset, const DecorationConfig* dom_cfg,
                       const DecorationConfig* img_cfg, bool rhs_below_articulation,
                       BijectionReport& report, int cap) {
  const auto members = enumerate_members(dom_spec, n, cap);
  report.domain_size = members.size();
  report.target_size = enumerate_members(target_spec, n, cap).size();
  std::set<GriddedPermutation> images;
  for (const auto& perm : members) {
    const GriddedPermutation g = canonical_gridding(dom_spec, perm);
    GriddedPermutation out;
    try {
      out = fwd(g);
    } catch (const std::exception& e) {
      report.failures.push_back({to_string(g), std::string("map failed: ") + e.what()});
      continue;
    }
    if (out.perm.size() != n) {
      report.failures.push_back({to_string(g), "image has wrong length"});
      continue;
    }
    if (!is_member(target_spec, out.perm)) {
      report.failures.push_back({to_string(g), "image not a member of Av(" +
                                                   target_spec.to_string() + ")"});
      continue;
    }
    if (canonical_gridding(target_spec, out.perm) != out) {
      report.failures.push_back({to_string(g), "image gridding not canonical"});
      continue;
    }
    if (check_h || check_h_multiset) {
      DyckPath dp, ip;
      std::vector<int> dh, ih;
      int dgap = 0, igap = 0;
      gridded_to_decorated_with(g, *dom_cfg, dp, dh, dgap);
      gridded_to_decorated_with(out, *img_cfg, ip, ih, igap);
      if (check_h && (dh != ih || dgap != igap)) {
        report.failures.push_back({to_string(g), "decoration not preserved"});
        continue;
      }
      if (check_h_multiset) {
        auto a = dh, b = ih;
        std::sort(a.begin(), a.end());
        std::sort(b.begin(), b.end());
        if (a != b || dgap != igap) {
          report.failures.push_back({to_string(g), "decoration multiset not preserved"});
          continue;
        }
      }
    }
    if (rhs_below_articulation && out.split < n) {
      // Whenever right points exist, the lowest one stays below the point
      // marking the articulation, on both sides.
      const int dom_marker = articulation_marker_value(g, true);
      const int img_marker = articulation_marker_value(out, false);
      int dom_min_rhs = n + 1, img_min_rhs = n + 1;
      for (int c = g.split + 1; c <= n; ++c) dom_min_rhs = std::min(dom_min_rhs, g.perm.at(c));
      for (int c = out.split + 1; c <= n; ++c) img_min_rhs = std::min(img_min_rhs, out.perm.at(c));
      if (!(dom_min_rhs < dom_marker) || !(img_min_rhs < img_marker)) {
        report.failures.push_back({to_string(g), "no right point below the articulation marker"});
        continue;
      }
    }
    GriddedPermutation back;
    try {
      back = bwd(out);
    } catch (const std::exception& e) {
      report.failures.push_back({to_string(g), std::string("inverse failed: ") + e.what()});
      continue;
    }
    if (back != g) {
      report.failures.push_back({to_string(g), "inverse roundtrip mismatch"});
      continue;
    }
    images.insert(out);
  }
  report.image_size = images.size();
}

}  // namespace

BijectionReport verify_bijection(const std::string& name, int n, int cap) {
  BijectionReport report;
  report.name = name;
  report.n = n;

  if (name == "lambda") {
    const ClassSpec dom = ClassSpec::parse("231");
    const ClassSpec target = ClassSpec::parse("321");
    const auto members = enumerate_class(dom, n, cap);
    report.domain_size = members.size();
    report.target_size = enumerate_class(target, n, cap).size();
    const Permutation patt321({3, 2, 1});
    std::set<Permutation> images;
    for (const auto& p : members) {
      Permutation q;
      try {
        q = lambda(p);
      } catch (const std::exception& e) {
        report.failures.push_back({to_string(p), std::string("map failed: ") + e.what()});
        continue;
      }
      if (contains(patt321, q)) {
        report.failures.push_back({to_string(p), "image contains 321"});
        continue;
      }
      const auto a1 = articulation_231(perm231_to_dyck(p));
      const auto a2 = articulation_321(perm321_to_dyck(q));
      const bool same =
          (!a1 && !a2) ||
          (a1 && a2 &&
           articulation_grid(perm231_to_dyck(p), *a1) == articulation_grid(perm321_to_dyck(q), *a2));
      if (!same) {
        report.failures.push_back({to_string(p), "articulation point moved"});
        continue;
      }
      if (lambda_inverse(q) != p) {
        report.failures.push_back({to_string(p), "inverse roundtrip mismatch"});
        continue;
      }
      images.insert(q);
    }
    report.image_size = images.size();
    return report;
  }

  if (name == "theta") {
    check_gridded_map(n, JuxtSpec::classA(), kSpec321_12, &theta, &theta_inverse, true, false,
                      &kConfigA, &kConfig321_12, false, report, cap);
    return report;
  }
  if (name == "psi") {
    check_gridded_map(n, kSpec231_21, JuxtSpec::classB(), &psi, &psi_inverse, true, false,
                      &kConfig231_21, &kConfigB, true, report, cap);
    return report;
  }
  if (name == "phi") {
    check_gridded_map(n, JuxtSpec::classC(), kSpec312_12, &phi, &phi_inverse, false, true,
                      &kConfigC, &kConfig312_12, false, report, cap);
    return report;
  }
  throw std::invalid_argument("unknown bijection '" + name + "'");
}

std::string report_to_json(const BijectionReport& r) {
  nlohmann::json j;
  j["name"] = r.name;
  j["n"] = r.n;
  j["domain_size"] = r.domain_size;
  j["image_size"] = r.image_size;
  j["target_size"] = r.target_size;
  j["ok"] = r.ok();
  j["failures"] = nlohmann::json::array();
  for (const auto& f : r.failures) {
    j["failures"].push_back({{"input", f.input}, {"reason", f.reason}});
  }
  return j.dump(2);
}

std::string report_to_text(const BijectionReport& r) {
  std::string out = r.name + " at n=" + std::to_string(r.n) + ": domain " +
                    std::to_string(r.domain_size) + ", image " + std::to_string(r.image_size) +
                    ", target " + std::to_string(r.target_size) + ", " +
                    std::to_string(r.failures.size()) + " failures -> " +
                    (r.ok() ? "bijective" : "NOT bijective") + "\n";
  for (const auto& f : r.failures) {
    out += "  " + f.input + ": " + f.reason + "\n";
  }
  return out;
}

}  // namespace permgrid
