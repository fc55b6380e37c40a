#pragma once

#include "daqb/braid.hpp"
#include "daqb/family.hpp"
#include "daqb/invariants.hpp"
#include "daqb/rewriting.hpp"
#include "daqb/word.hpp"

#include <optional>
#include <string>
#include <vector>

namespace daqb {

struct EqVerdict {
  enum class Kind { Equal, Distinct, Unknown };

  Kind kind = Kind::Unknown;
  /// Equal: the moves that reduce a*b^{-1} to the identity.
  Trace witness;
  /// Human-readable certificate: which invariant slot differs, or which
  /// exact procedure closed the argument.
  std::string reason;
  std::size_t budget_used = 0;
  /// Distinct by invariant mismatch carries both images.
  std::optional<WreathElement> image_a;
  std::optional<WreathElement> image_b;
};

std::string_view verdict_name(EqVerdict::Kind k);

/// Result of driving a word toward Q^q * residual with Z eliminated.
struct QReduction {
  std::vector<int> q;
  UnitState state;      // q plus remaining units
  Trace trace;
  bool z_free = false;
  /// True when the residual units were certified trivial.
  bool trivial = false;
  bool budget_exhausted = false;
  std::size_t used = 0;

  int q_degree() const noexcept;
};

/// Deterministic reduction: sigma elimination, sigma-right, and exact
/// replacement of segments (Z-free runs equal to a power of sigma, sigma-free
/// T/Z runs equal to a Z monomial, both decided in B_{N+1}), repeated to a
/// fixpoint. Falls back to best-first search over `search_rules` if Z letters
/// remain.
QReduction reduce_to_q_monomial(const Word &w, const GroupFamily &family,
                                const Budget &budget = {});

/// Only the deterministic part of reduce_to_q_monomial.
UnitState canonicalize_segments(UnitState state, std::size_t budget, Trace *trace);

EqVerdict equal_under_relations(const Word &a, const Word &b, const GroupFamily &family,
                                const Budget &budget = {});

/// One item of the sigma^N induction check.
struct AppendixStep {
  std::string label;
  std::string word;     // the word that must reduce to the identity
  bool passed = false;
  std::string method;   // "sigma-right", "segments" or "braid-embedding"
  Trace trace;
};

struct AppendixReport {
  int n = 2;
  std::vector<AppendixStep> steps;
  bool passed() const noexcept;
};

/// Y_1 ... Y_N = sigma^N together with the induction P_k Y_{N-k} = P_{k+1},
/// k = 1..N-2, and the base case P_1 = Y_N.
AppendixReport verify_appendix_a(int n, std::size_t step_budget = 100'000);

/// sigma^k (T_1..T_k)^{-1} (T_2..T_{k+1})^{-1} ... (T_{N-k}..T_{N-1})^{-1}
Word appendix_p(int k, int n);

/// Q expressions that must reduce to a single Q_i^{+-1}.
struct QExpression {
  std::string label;
  Word word;
  int index = 1;
  int exponent = 1;
};

std::vector<QExpression> q_expressions(int n);

struct QExpressionResult {
  QExpression expression;
  EqVerdict verdict;
};

std::vector<QExpressionResult> q_expression_reduce(int n, const Budget &budget = {});

} // namespace daqb
