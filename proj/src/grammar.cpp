#include "permgrid/grammar.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace permgrid {

namespace {

// Edges of the z-free dependency graph: head -> body variable whenever the
// production can complete around that variable without consuming a z. The
// grammar is z-guarded iff this graph is acyclic; a topological order of it
// (dependencies first) makes one sweep settle every z-free chain.
std::map<std::string, std::set<std::string>> zfree_edges(
    const std::vector<std::string>& variables, const std::vector<Terminal>& terminals,
    const std::vector<Production>& productions) {
  std::map<std::string, int> minz;
  for (const auto& t : terminals) minz[t.name] = t.zdeg;
  constexpr int kInf = 1 << 20;
  for (const auto& v : variables) minz[v] = kInf;
  for (bool changed = true; changed;) {
    changed = false;
    for (const auto& p : productions) {
      int total = p.extra_z;
      for (const auto& s : p.body) total = std::min(total + minz.at(s), kInf);
      if (total < minz.at(p.head)) {
        minz[p.head] = total;
        changed = true;
      }
    }
  }
  for (const auto& v : variables) {
    if (minz.at(v) >= kInf) {
      throw std::invalid_argument("grammar not z-guarded: variable " + v + " derives nothing");
    }
  }

  std::map<std::string, std::set<std::string>> zfree;
  for (const auto& v : variables) zfree[v];
  for (const auto& p : productions) {
    for (std::size_t i = 0; i < p.body.size(); ++i) {
      const auto& s = p.body[i];
      if (std::find(variables.begin(), variables.end(), s) == variables.end()) continue;
      int rest = p.extra_z;
      for (std::size_t j = 0; j < p.body.size(); ++j) {
        if (j != i) rest = std::min(rest + minz.at(p.body[j]), kInf);
      }
      if (rest == 0) zfree[p.head].insert(s);
    }
  }
  return zfree;
}

// Dependencies-first order; throws on a z-free cycle.
std::vector<std::string> evaluation_order(const std::vector<std::string>& variables,
                                          const std::vector<Terminal>& terminals,
                                          const std::vector<Production>& productions) {
  const auto zfree = zfree_edges(variables, terminals, productions);
  std::vector<std::string> order;
  std::map<std::string, int> state;  // 0 new, 1 on stack, 2 done
  auto dfs = [&](auto&& self, const std::string& v) -> void {
    state[v] = 1;
    for (const auto& w : zfree.at(v)) {
      if (state[w] == 1) {
        throw std::invalid_argument("grammar not z-guarded: z-free cycle through " + w);
      }
      if (state[w] == 0) self(self, w);
    }
    state[v] = 2;
    order.push_back(v);
  };
  for (const auto& v : variables) {
    if (state[v] == 0) dfs(dfs, v);
  }
  return order;
}

void check_z_guarded(const std::vector<std::string>& variables,
                     const std::vector<Terminal>& terminals,
                     const std::vector<Production>& productions) {
  evaluation_order(variables, terminals, productions);
}

}  // namespace

GrammarSystem::GrammarSystem(std::vector<std::string> variables, std::vector<Terminal> terminals,
                             std::vector<Production> productions, std::string start)
    : variables_(std::move(variables)),
      terminals_(std::move(terminals)),
      productions_(std::move(productions)),
      start_(std::move(start)) {
  std::set<std::string> vars(variables_.begin(), variables_.end());
  std::set<std::string> terms;
  for (const auto& t : terminals_) {
    if (t.zdeg < 0 || t.tdeg < 0) throw std::invalid_argument("negative terminal weight");
    if (!terms.insert(t.name).second) throw std::invalid_argument("duplicate terminal " + t.name);
    if (vars.count(t.name)) throw std::invalid_argument("symbol is both variable and terminal: " + t.name);
  }
  if (!vars.count(start_)) throw std::invalid_argument("start symbol is not a variable");
  std::set<std::string> heads;
  for (const auto& p : productions_) {
    if (!vars.count(p.head)) throw std::invalid_argument("production head " + p.head + " not declared");
    heads.insert(p.head);
    for (const auto& s : p.body) {
      if (!vars.count(s) && !terms.count(s)) {
        throw std::invalid_argument("undeclared symbol " + s + " in production for " + p.head);
      }
    }
  }
  for (const auto& v : variables_) {
    if (!heads.count(v)) throw std::invalid_argument("variable " + v + " has no production");
  }
  check_z_guarded(variables_, terminals_, productions_);
}

bool GrammarSystem::is_terminal(const std::string& name) const {
  for (const auto& t : terminals_) {
    if (t.name == name) return true;
  }
  return false;
}

const Terminal& GrammarSystem::terminal(const std::string& name) const {
  for (const auto& t : terminals_) {
    if (t.name == name) return t;
  }
  throw std::invalid_argument("no terminal " + name);
}

bool GrammarSystem::uses_t() const {
  for (const auto& t : terminals_) {
    if (t.tdeg > 0) return true;
  }
  for (const auto& p : productions_) {
    if (p.extra_t > 0) return true;
  }
  return false;
}

GrammarSystem builtin_grammar(const std::string& name) {
  if (name == "catalan") {
    // C -> eps | R C U C, z marking up steps: c = 1 + z c^2.
    return GrammarSystem({"C"}, {{"R", 0, 0}, {"U", 1, 0}},
                         {{"C", {}}, {"C", {"R", "C", "U", "C"}}}, "C");
  }
  if (name == "classA") {
    // Down/left word of the 231-avoider; decorated down steps Dd carry tz.
    //   s = 1 + z s cd,  cd = 1 + t z cd^2
    return GrammarSystem({"S", "Cd"}, {{"D", 1, 0}, {"L", 0, 0}, {"Dd", 1, 1}},
                         {{"S", {}},
                          {"S", {"D", "S", "L", "Cd"}},
                          {"Cd", {}},
                          {"Cd", {"Dd", "Cd", "L", "Cd"}}},
                         "S");
  }
  if (name == "classB") {
    // Up/right word of the 321-avoider; Ud carries a possible point run,
    // U1 the mandatory first right point; the extra t on S -> C M Cd tracks
    // the run above the whole left side.
    return GrammarSystem(
        {"S", "M", "B", "C", "Cd", "Cdp", "Ed"},
        {{"U", 1, 0}, {"R", 0, 0}, {"Ud", 1, 1}, {"U1", 2, 1}},
        {{"S", {"C"}},
         {"S", {"C", "M", "Cd"}, 0, 1},
         {"M", {"U", "C", "M", "Cd", "R"}},
         {"M", {"U1", "Cdp", "R"}},
         {"M", {"B", "Ed", "Ud", "Cdp", "R"}},
         {"B", {"U1", "R"}},
         {"B", {"U", "C", "B", "Ed", "R"}},
         {"C", {}},
         {"C", {"U", "C", "R", "C"}},
         {"Cd", {}},
         {"Cd", {"Ud", "Cd", "R", "Cd"}},
         {"Cdp", {"Ud", "Cd", "R", "Cd"}},
         {"Ed", {}},
         {"Ed", {"Ud", "R", "Ed"}}},
        "S");
  }
  if (name == "classC") {
    // Up/right word of the 312-avoider with point runs above their up steps.
    return GrammarSystem({"S", "M", "B", "C", "Cd", "Cdp"},
                         {{"U", 1, 0}, {"R", 0, 0}, {"Ud", 1, 1}, {"U1", 2, 1}},
                         {{"S", {"C"}},
                          {"S", {"C", "M", "Cd"}},
                          {"M", {"U1", "Cdp", "R"}},
                          {"M", {"U", "C", "B", "Cdp", "R"}},
                          {"M", {"U", "C", "M", "Cd", "R"}},
                          {"B", {"U1", "R"}},
                          {"B", {"U", "C", "B", "R"}},
                          {"C", {}},
                          {"C", {"U", "C", "R", "C"}},
                          {"Cd", {}},
                          {"Cd", {"Ud", "Cd", "R", "Cd"}},
                          {"Cdp", {"Ud", "Cd", "R", "Cd"}}},
                         "S");
  }
  throw std::invalid_argument("unknown grammar '" + name + "'");
}

namespace {

std::string weight_text(int zdeg, int tdeg) {
  return "z^" + std::to_string(zdeg) + " t^" + std::to_string(tdeg);
}

}  // namespace

std::string print_grammar(const GrammarSystem& g) {
  std::string out = "start " + g.start() + "\n";
  for (const auto& t : g.terminals()) {
    out += "term " + t.name + " " + weight_text(t.zdeg, t.tdeg) + "\n";
  }
  for (const auto& p : g.productions()) {
    out += p.head + " ->";
    if (p.body.empty()) {
      out += " eps";
    } else {
      for (const auto& s : p.body) out += " " + s;
    }
    if (p.extra_z != 0 || p.extra_t != 0) out += " * " + weight_text(p.extra_z, p.extra_t);
    out += "\n";
  }
  return out;
}

namespace {

std::pair<int, int> parse_weight(const std::string& ztok, const std::string& ttok, int line_no) {
  if (ztok.rfind("z^", 0) != 0 || ttok.rfind("t^", 0) != 0) {
    throw std::invalid_argument("line " + std::to_string(line_no) + ": weight must be z^a t^b");
  }
  return {std::stoi(ztok.substr(2)), std::stoi(ttok.substr(2))};
}

}  // namespace

GrammarSystem parse_grammar(const std::string& text) {
  std::vector<std::string> variables;
  std::vector<Terminal> terminals;
  std::vector<Production> productions;
  std::string start;

  std::stringstream ss(text);
  std::string line;
  int line_no = 0;
  while (std::getline(ss, line)) {
    ++line_no;
    std::stringstream ls(line);
    std::vector<std::string> toks;
    std::string tok;
    while (ls >> tok) toks.push_back(tok);
    if (toks.empty() || toks[0][0] == '#') continue;
    if (toks[0] == "start") {
      if (toks.size() != 2) throw std::invalid_argument("line " + std::to_string(line_no) + ": bad start line");
      start = toks[1];
      continue;
    }
    if (toks[0] == "term") {
      if (toks.size() != 4) throw std::invalid_argument("line " + std::to_string(line_no) + ": bad term line");
      auto [z, t] = parse_weight(toks[2], toks[3], line_no);
      terminals.push_back({toks[1], z, t});
      continue;
    }
    if (toks.size() < 3 || toks[1] != "->") {
      throw std::invalid_argument("line " + std::to_string(line_no) + ": expected HEAD -> body");
    }
    Production p;
    p.head = toks[0];
    std::size_t i = 2;
    for (; i < toks.size() && toks[i] != "*"; ++i) {
      if (toks[i] != "eps") p.body.push_back(toks[i]);
    }
    if (i < toks.size()) {
      if (i + 3 != toks.size()) {
        throw std::invalid_argument("line " + std::to_string(line_no) + ": bad extra weight");
      }
      auto [z, t] = parse_weight(toks[i + 1], toks[i + 2], line_no);
      p.extra_z = z;
      p.extra_t = t;
    }
    if (std::find(variables.begin(), variables.end(), p.head) == variables.end()) {
      variables.push_back(p.head);
    }
    productions.push_back(std::move(p));
  }
  if (start.empty() && !productions.empty()) start = productions.front().head;
  return GrammarSystem(std::move(variables), std::move(terminals), std::move(productions),
                       std::move(start));
}

AlgebraicSystem transcribe(const GrammarSystem& g) {
  AlgebraicSystem sys;
  for (const auto& v : g.variables()) sys[v];
  for (const auto& p : g.productions()) {
    EquationTerm term;
    term.zdeg = p.extra_z;
    term.tdeg = p.extra_t;
    for (const auto& s : p.body) {
      if (g.is_terminal(s)) {
        const Terminal& t = g.terminal(s);
        term.zdeg += t.zdeg;
        term.tdeg += t.tdeg;
      } else {
        term.vars.push_back(s);
      }
    }
    sys[p.head].push_back(std::move(term));
  }
  return sys;
}

std::string print_system(const AlgebraicSystem& sys, const GrammarSystem& g) {
  std::string out;
  for (const auto& v : g.variables()) {
    out += v + " =";
    const auto& terms = sys.at(v);
    for (std::size_t i = 0; i < terms.size(); ++i) {
      out += i ? " + " : " ";
      const auto& t = terms[i];
      std::vector<std::string> factors;
      if (t.zdeg == 1) factors.push_back("z");
      if (t.zdeg > 1) factors.push_back("z^" + std::to_string(t.zdeg));
      if (t.tdeg == 1) factors.push_back("t");
      if (t.tdeg > 1) factors.push_back("t^" + std::to_string(t.tdeg));
      for (const auto& var : t.vars) factors.push_back(var);
      if (factors.empty()) {
        out += "1";
      } else {
        for (std::size_t f = 0; f < factors.size(); ++f) {
          if (f) out += " ";
          out += factors[f];
        }
      }
    }
    out += "\n";
  }
  return out;
}

SolveResult solve_series(const GrammarSystem& g, int order, bool t_substitution) {
  if (order < 0) throw std::invalid_argument("negative order");
  if (!t_substitution && g.uses_t()) {
    throw std::invalid_argument("grammar uses t; solve with t substitution enabled");
  }
  const AlgebraicSystem sys = transcribe(g);
  const ZSeries geom = ZSeries::geometric(order);
  const auto order_of_eval = evaluation_order(g.variables(), g.terminals(), g.productions());

  SolveResult res;
  for (const auto& v : g.variables()) {
    res.series.emplace(v, ZSeries(order));
    res.stable_at.emplace(v, std::vector<int>(static_cast<std::size_t>(order) + 1, 0));
  }

  // Gauss-Seidel sweeps in z-free dependency order, with growing truncation:
  // after sweep s the coefficients up to s-1 are exact, so sweep s only needs
  // products to order min(s, order). A z-guarded system is fully stable by
  // sweep order+1; sweep order+2 confirms it.
  const int max_sweeps = order + 2;
  for (int sweep = 1; sweep <= max_sweeps; ++sweep) {
    const int limit = std::min(sweep, order);
    bool changed = false;
    for (const auto& v : order_of_eval) {
      ZSeries acc(order);
      for (const auto& term : sys.at(v)) {
        if (term.zdeg > limit) continue;
        ZSeries prod = ZSeries::monomial(term.zdeg, order);
        for (int t = 0; t < term.tdeg; ++t) prod = ZSeries::mul_to(prod, geom, limit);
        for (const auto& var : term.vars) {
          prod = ZSeries::mul_to(prod, res.series.at(var), limit);
        }
        acc += prod;
      }
      ZSeries& cur = res.series.at(v);
      for (int k = 0; k <= order; ++k) {
        if (cur[k] != acc[k]) {
          res.stable_at.at(v)[static_cast<std::size_t>(k)] = sweep;
          changed = true;
        }
      }
      cur = std::move(acc);
    }
    res.sweeps = sweep;
    if (!changed && sweep > order) break;
    if (sweep == max_sweeps && changed) {
      throw std::runtime_error("grammar not z-guarded: no fixed point after " +
                               std::to_string(max_sweeps) + " sweeps");
    }
  }

  for (const auto& v : g.variables()) {
    for (int k = 0; k <= order; ++k) {
      if (res.series.at(v)[k] < 0) {
        throw std::runtime_error("negative counting coefficient for " + v);
      }
    }
  }
  return res;
}

std::vector<BigInt> counting_sequence(const GrammarSystem& g, int order) {
  const auto solved = solve_series(g, order);
  return solved.series.at(g.start()).coefficients();
}

bool system_residual_is_zero(const GrammarSystem& g, int order) {
  const auto solved = solve_series(g, order);
  const AlgebraicSystem sys = transcribe(g);
  const ZSeries geom = ZSeries::geometric(order);
  for (const auto& v : g.variables()) {
    ZSeries acc(order);
    for (const auto& term : sys.at(v)) {
      ZSeries prod = ZSeries::monomial(term.zdeg, order);
      for (int t = 0; t < term.tdeg; ++t) prod = prod * geom;
      for (const auto& var : term.vars) prod = prod * solved.series.at(var);
      acc += prod;
    }
    acc -= solved.series.at(v);
    if (!acc.is_zero()) return false;
  }
  return true;
}

bool check_unambiguity_counts(const GrammarSystem& g, const JuxtSpec& cls, int n_max, int cap) {
  const auto seq = counting_sequence(g, n_max);
  for (int n = 0; n <= n_max; ++n) {
    if (seq[static_cast<std::size_t>(n)] != count_by_bruteforce(cls, n, cap)) return false;
  }
  return true;
}

}  // namespace permgrid
