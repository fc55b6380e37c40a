#pragma once

#include "daqb/family.hpp"
#include "daqb/word.hpp"

#include <span>
#include <string>
#include <vector>

namespace daqb {

/// Replaces every sigma by T_{N-1}^{-1} ... T_1^{-1} Y_1 (inverse for
/// negative exponents). The result is sigma-free.
Word sigma_introduce(const Word &w);

/// Replaces every Y_i by its sigma form:
///   Y_1 = T_1 ... T_{N-1} s
///   Y_i = T_i ... T_{N-1} s T_1^{-1} ... T_{i-1}^{-1}
///   Y_N = s T_1^{-1} ... T_{N-1}^{-1}
Word sigma_eliminate(const Word &w);

/// Sigma form of a single Y_i^{+1}.
Word y_in_sigma_form(int i, int n);
/// T_{N-1}^{-1} ... T_1^{-1} Y_1.
Word sigma_definition(int n);

/// Strand index carried by Q_j after it is moved leftward past `l`
/// (1-based; sigma shifts cyclically, T_i swaps i and i+1).
int transport_q_index(int j, const Letter &l, int n);

struct QPrefix {
  std::vector<int> q; // q[k-1] is the accumulated exponent of Q_k
  Word residual;      // Q-free

  bool q_is_zero() const noexcept;
};

/// Moves every Q letter to the far left, tracking how T and sigma relabel
/// the strand index.
QPrefix q_prefix_normalize(const Word &w);

/// Q_1^{q_1} Q_2^{q_2} ... Q_N^{q_N}.
Word q_monomial(int n, std::span<const int> q);

} // namespace daqb
