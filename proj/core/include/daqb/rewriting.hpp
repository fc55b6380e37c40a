#pragma once

#include "daqb/family.hpp"
#include "daqb/word.hpp"

#include <cstddef>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

namespace daqb {

enum class Strategy { Free, QPrefix, SigmaRight, Search };

std::string_view strategy_name(Strategy s);
/// "free", "q-prefix", "sigma-right", "search".
Strategy parse_strategy(std::string_view text);

struct TraceStep {
  std::string rule;
  std::size_t position = 0;

  friend bool operator==(const TraceStep &, const TraceStep &) = default;
};
using Trace = std::vector<TraceStep>;

/// [["rule", position], ...]
std::string trace_to_json(const Trace &trace);

struct Budget {
  std::size_t steps = 100'000;
  int depth = 20;
};

/// Group element Q^q * units, with every unit letter of exponent +-1 and no
/// Q among the units. This is the working representation of the rewriting
/// strategies.
struct UnitState {
  int n = 2;
  std::vector<int> q;
  std::vector<Letter> units;

  static UnitState from_word(const Word &w);
  Word to_word() const;
  /// Word of the units only (no Q prefix).
  Word residual() const;

  /// Inserts Q_j^e in front of units[pos] and moves it to the prefix.
  void absorb_q(std::size_t pos, int j, int e);
  /// Cancels adjacent inverse pairs; returns the number of cancellations.
  std::size_t free_reduce(Trace *trace = nullptr);
  std::size_t count(Gen g) const noexcept;
  std::string key() const;
};

/// One oriented rewrite rule over unit letters. Q letters in the
/// right-hand side are moved to the prefix when the rule fires.
struct UnitRule {
  std::vector<Letter> lhs;
  std::vector<Letter> rhs;
  std::string label;
};

/// Oriented rules for searching, derived from the sigma-form relators of the
/// family (Y eliminated): braid relations, T-sigma, Z-T, Z-sigma. Every rule
/// is a cyclic rearrangement of a relator and grows the word by at most two
/// letters. Relation (ZY) is not among them.
std::vector<UnitRule> search_rules(const GroupFamily &family);

/// The strategy "sigma-right": moves sigma^{+-1} leftward through T and Z
/// letters (T_j s -> s T_{j+1}, T_{N-1} s s -> s s T_1, Z_i s -> s Z_{i+1},
/// Z_N s -> Q_N^{-1} s Z_1, and the inverse-sigma forms) with eager free
/// reduction. Returns the number of rule applications.
std::size_t sigma_right(UnitState &state, std::size_t budget, Trace *trace);

/// Applies `rule` at `pos` if its left-hand side matches there.
bool apply_rule(UnitState &state, const UnitRule &rule, std::size_t pos);

struct SearchOutcome {
  UnitState best;           // goal state if reached, else lowest-cost state seen
  Trace path;               // moves from the start to `best`
  bool goal_reached = false;
  bool budget_exhausted = false;
  std::size_t expanded = 0;
};

/// Best-first search over rule applications (plus free reduction) ordered by
/// `cost`, ties broken by discovery order. Stops at the first state
/// satisfying `goal`, when the frontier is empty, or when `budget.steps`
/// states have been expanded; states deeper than `budget.depth` moves are
/// not expanded.
SearchOutcome best_first_search(const UnitState &start, const std::vector<UnitRule> &rules,
                                const Budget &budget,
                                const std::function<long(const UnitState &)> &cost,
                                const std::function<bool(const UnitState &)> &goal);

struct RewriteResult {
  Word word;
  bool normal = true;
  std::size_t steps = 0;
  Trace trace;
};

/// Applies a strategy until fixpoint or until the step budget is used up;
/// in the latter case `normal` is false and `word` is the best effort.
RewriteResult rewrite_normalize(const Word &w, const GroupFamily &family, Strategy strategy,
                                std::size_t step_budget);

} // namespace daqb
