#pragma once

#include <map>
#include <string>
#include <vector>

#include "permgrid/juxt.hpp"
#include "permgrid/series.hpp"

namespace permgrid {

/// Terminal symbol with weight z^zdeg * t^tdeg. z marks a permutation point;
/// t marks an attached (possibly empty) run of right-hand-side points and is
/// expanded as 1/(1-z) at solve time.
struct Terminal {
  std::string name;
  int zdeg = 0;
  int tdeg = 0;
  bool operator==(const Terminal&) const = default;
};

/// head -> body, with an optional extra weight factor z^extra_z * t^extra_t
/// multiplied onto the transcription of this production.
struct Production {
  std::string head;
  std::vector<std::string> body;
  int extra_z = 0;
  int extra_t = 0;
  bool operator==(const Production&) const = default;
};

/// A weighted unambiguous context-free grammar. Construction checks that the
/// system is z-guarded: every derivation cycle consumes at least one
/// z-weighted terminal, so coefficient extraction converges order by order.
class GrammarSystem {
 public:
  GrammarSystem(std::vector<std::string> variables, std::vector<Terminal> terminals,
                std::vector<Production> productions, std::string start);

  const std::vector<std::string>& variables() const { return variables_; }
  const std::vector<Terminal>& terminals() const { return terminals_; }
  const std::vector<Production>& productions() const { return productions_; }
  const std::string& start() const { return start_; }

  bool is_terminal(const std::string& name) const;
  const Terminal& terminal(const std::string& name) const;
  bool uses_t() const;

  bool operator==(const GrammarSystem&) const = default;

 private:
  std::vector<std::string> variables_;
  std::vector<Terminal> terminals_;
  std::vector<Production> productions_;
  std::string start_;
};

/// The four grammars shipped with the library: "catalan", "classA", "classB",
/// "classC". classA/classB/classC generate the canonically gridded members of
/// Av(231|12), Av(321|21) and Av(312|21).
GrammarSystem builtin_grammar(const std::string& name);

/// Text format, one declaration per line:
///   start S
///   term NAME z^a t^b
///   HEAD -> sym sym ...            (use "eps" for the empty body)
///   HEAD -> sym sym ... * z^a t^b  (extra weight factor)
/// Printing and parsing round-trip bit-exactly.
std::string print_grammar(const GrammarSystem& g);
GrammarSystem parse_grammar(const std::string& text);

/// One monomial of a transcribed equation: z^zdeg * t^tdeg * prod(vars).
struct EquationTerm {
  int zdeg = 0;
  int tdeg = 0;
  std::vector<std::string> vars;
  bool operator==(const EquationTerm&) const = default;
};

/// The syntactic transcription: one polynomial equation per variable,
/// var = sum of terms.
using AlgebraicSystem = std::map<std::string, std::vector<EquationTerm>>;

AlgebraicSystem transcribe(const GrammarSystem& g);
std::string print_system(const AlgebraicSystem& sys, const GrammarSystem& g);

struct SolveResult {
  std::map<std::string, ZSeries> series;
  int sweeps = 0;
  /// stable_at[var][k]: first sweep after which coefficient k never changed.
  std::map<std::string, std::vector<int>> stable_at;
};

/// Least fixed point of the transcribed system, truncated at `order`.
/// With t_substitution the weight t becomes the truncated geometric series;
/// without it the grammar must be t-free. Iteration failing to settle within
/// order+2 sweeps reports a non-z-guarded grammar.
SolveResult solve_series(const GrammarSystem& g, int order, bool t_substitution = true);

/// Start-variable coefficients 0..order.
std::vector<BigInt> counting_sequence(const GrammarSystem& g, int order);

/// Residual of every transcribed equation after substituting the solved
/// series; true iff all residuals vanish up to `order`.
bool system_residual_is_zero(const GrammarSystem& g, int order);

/// Series coefficients equal brute-force juxtaposition counts for all
/// n <= n_max. Evidence of unambiguity, not a decision procedure.
bool check_unambiguity_counts(const GrammarSystem& g, const JuxtSpec& cls, int n_max,
                              int cap = kDefaultExhaustionCap);

}  // namespace permgrid
