// permgrid: enumerate 1x2 juxtaposition permutation classes by brute force,
// grammar series extraction or closed forms, and run the verified bijections.

#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "permgrid/bijections.hpp"
#include "permgrid/cache.hpp"
#include "permgrid/dyck.hpp"
#include "permgrid/gf.hpp"
#include "permgrid/grammar.hpp"
#include "permgrid/juxt.hpp"
#include "permgrid/oeis.hpp"

namespace {

using namespace permgrid;

struct CountOptions {
  std::string cls = "A";
  std::string method = "grammar";
  int n = 12;
  std::string format = "plain";
  std::string cache_dir;
};

// Named classes ship grammar and closed-form routes; arbitrary spec strings
// only support brute force.
bool is_named_class(const std::string& cls) { return cls == "A" || cls == "B" || cls == "C"; }

std::vector<BigInt> compute_counts(const CountOptions& opt) {
  if (opt.method == "brute") {
    const JuxtSpec spec = JuxtSpec::parse(opt.cls);
    std::vector<BigInt> out;
    for (int k = 0; k <= opt.n; ++k) out.emplace_back(count_by_bruteforce(spec, k));
    return out;
  }
  if (opt.method == "grammar") {
    if (!is_named_class(opt.cls)) {
      throw std::invalid_argument("grammar method needs a named class (A, B or C)");
    }
    return counting_sequence(builtin_grammar("class" + opt.cls), opt.n);
  }
  if (opt.method == "closed") {
    if (!is_named_class(opt.cls)) {
      throw std::invalid_argument("closed method needs a named class (A, B or C)");
    }
    if (opt.cls == "C") {
      throw std::invalid_argument(
          "no closed form is implemented for class C; run `permgrid algebraic --class C` for the "
          "residual check");
    }
    return closed_form_sequence(opt.cls[0], opt.n);
  }
  throw std::invalid_argument("unknown method '" + opt.method + "'");
}

std::vector<BigInt> compute_counts_cached(const CountOptions& opt) {
  std::string dir = opt.cache_dir;
  if (dir.empty()) {
    if (const char* env = std::getenv("PERMGRID_CACHE")) dir = env;
  }
  if (dir.empty()) return compute_counts(opt);
  const std::string spec_text =
      is_named_class(opt.cls) ? JuxtSpec::parse(opt.cls).to_string() : opt.cls;
  const CacheKey key{spec_text, opt.method, opt.n};
  if (auto hit = cache_load(dir, key)) return *hit;
  auto terms = compute_counts(opt);
  cache_store(dir, key, terms);
  return terms;
}

void print_counts(const CountOptions& opt, const std::vector<BigInt>& terms) {
  if (opt.format == "json") {
    nlohmann::json j;
    j["class"] = opt.cls;
    j["method"] = opt.method;
    j["n_max"] = opt.n;
    j["terms"] = nlohmann::json::array();
    for (const auto& t : terms) j["terms"].push_back(t.str());
    std::cout << j.dump(2) << "\n";
  } else if (opt.format == "csv") {
    std::cout << "n,count\n";
    for (std::size_t k = 0; k < terms.size(); ++k) std::cout << k << "," << terms[k] << "\n";
  } else {
    for (std::size_t k = 0; k < terms.size(); ++k) {
      std::cout << "a(" << k << ") = " << terms[k] << "\n";
    }
  }
}

int fail_with(const std::string& format, const std::string& message) {
  if (format == "json") {
    nlohmann::json j;
    j["error"] = message;
    std::cout << j.dump(2) << "\n";
  } else {
    std::cerr << "error: " << message << "\n";
  }
  return 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"juxtaposition permutation class toolkit"};
  app.require_subcommand(1);

  CountOptions count_opt;
  auto* count = app.add_subcommand("count", "count class members for n = 0..n");
  count->add_option("--class", count_opt.cls, "A, B, C or a spec string like 231|12");
  count->add_option("--method", count_opt.method, "brute, grammar or closed");
  count->add_option("--n", count_opt.n, "largest length")->required();
  count->add_option("--format", count_opt.format, "json, csv or plain");
  count->add_option("--cache-dir", count_opt.cache_dir, "cache directory (or env PERMGRID_CACHE)");

  std::string oeis_cls = "A", bfile_path;
  int oeis_n = 12;
  std::string oeis_format = "plain";
  auto* oeis = app.add_subcommand("oeis-check", "compare counts against a b-file");
  oeis->add_option("--class", oeis_cls, "A, B or C")->required();
  oeis->add_option("--bfile", bfile_path, "b-file path (omit to use the shipped prefix)");
  oeis->add_option("--n", oeis_n, "largest n to compare");
  oeis->add_option("--format", oeis_format, "json or plain");

  std::string bij_name = "theta";
  int bij_n = 6;
  std::string bij_format = "plain";
  auto* bij = app.add_subcommand("bijection", "exhaustively verify one of the bijections");
  bij->add_option("name", bij_name, "lambda, theta, psi or phi")->required();
  bij->add_option("n", bij_n, "length to sweep")->required();
  bij->add_option("--format", bij_format, "json or plain");

  std::string dyck_dir, dyck_input;
  auto* dyck = app.add_subcommand("dyck", "apply a path bijection");
  dyck->add_option("direction", dyck_dir,
                   "to-perm231, to-perm321, from-perm231 or from-perm321")
      ->required();
  dyck->add_option("input", dyck_input, "path word or permutation")->required();

  std::string gr_action = "print", gr_name = "classA";
  int gr_order = 100;
  auto* gram = app.add_subcommand("grammar", "print or solve a stored grammar");
  gram->add_option("action", gr_action, "print, solve or equations")->required();
  gram->add_option("name", gr_name, "catalan, classA, classB or classC")->required();
  gram->add_option("--order", gr_order, "truncation order for solve");

  std::string alg_cls = "C";
  int alg_order = 200;
  auto* alg = app.add_subcommand("algebraic", "residual check of a class equation system");
  alg->add_option("--class", alg_cls, "A, B or C")->required();
  alg->add_option("--order", alg_order, "truncation order");

  CLI11_PARSE(app, argc, argv);

  try {
    if (count->parsed()) {
      print_counts(count_opt, compute_counts_cached(count_opt));
      return 0;
    }
    if (oeis->parsed()) {
      const ReferenceSequence ref = reference_for_class(oeis_cls[0]);
      std::vector<BFileEntry> entries;
      if (bfile_path.empty()) {
        for (std::size_t i = 0; i < ref.terms.size(); ++i) {
          entries.push_back({ref.offset + static_cast<long>(i), ref.terms[i]});
        }
      } else {
        entries = parse_bfile_file(bfile_path);
      }
      const auto computed = counting_sequence(builtin_grammar("class" + oeis_cls), oeis_n);
      const auto report = check_against_bfile(ref.id, entries, computed, oeis_n);
      if (oeis_format == "json") {
        nlohmann::json j;
        j["id"] = report.id;
        j["checked"] = report.checked;
        j["ok"] = report.ok();
        j["mismatches"] = nlohmann::json::array();
        for (const auto& m : report.mismatches) {
          j["mismatches"].push_back(
              {{"n", m.n}, {"expected", m.expected.str()}, {"actual", m.actual.str()}});
        }
        std::cout << j.dump(2) << "\n";
      } else {
        std::cout << report.id << ": " << report.checked << " terms checked, "
                  << report.mismatches.size() << " mismatches\n";
        for (const auto& m : report.mismatches) {
          std::cout << "  n=" << m.n << " expected " << m.expected << " got " << m.actual << "\n";
        }
      }
      return report.ok() ? 0 : 1;
    }
    if (bij->parsed()) {
      const auto report = verify_bijection(bij_name, bij_n);
      std::cout << (bij_format == "json" ? report_to_json(report) : report_to_text(report));
      return report.ok() ? 0 : 1;
    }
    if (dyck->parsed()) {
      if (dyck_dir == "to-perm231") {
        std::cout << to_string(dyck_to_perm231(parse_path(dyck_input))) << "\n";
      } else if (dyck_dir == "to-perm321") {
        std::cout << to_string(dyck_to_perm321(parse_path(dyck_input))) << "\n";
      } else if (dyck_dir == "from-perm231") {
        std::cout << to_string(perm231_to_dyck(parse_permutation(dyck_input))) << "\n";
      } else if (dyck_dir == "from-perm321") {
        std::cout << to_string(perm321_to_dyck(parse_permutation(dyck_input))) << "\n";
      } else {
        return fail_with("plain", "unknown direction '" + dyck_dir + "'");
      }
      return 0;
    }
    if (gram->parsed()) {
      const GrammarSystem g = builtin_grammar(gr_name);
      if (gr_action == "print") {
        std::cout << print_grammar(g);
      } else if (gr_action == "equations") {
        std::cout << print_system(transcribe(g), g);
      } else if (gr_action == "solve") {
        const auto seq = counting_sequence(g, gr_order);
        for (std::size_t k = 0; k < seq.size(); ++k) {
          std::cout << "a(" << k << ") = " << seq[k] << "\n";
        }
      } else {
        return fail_with("plain", "unknown grammar action '" + gr_action + "'");
      }
      return 0;
    }
    if (alg->parsed()) {
      const bool ok = verify_algebraic(alg_cls[0], alg_order);
      std::cout << "class " << alg_cls << " system residual to order " << alg_order << ": "
                << (ok ? "zero" : "NONZERO") << "\n";
      return ok ? 0 : 1;
    }
  } catch (const std::exception& e) {
    return fail_with("plain", e.what());
  }
  return 0;
}
