#pragma once

#include "daqb/equality.hpp"
#include "daqb/hecke.hpp"
#include "daqb/laurent.hpp"
#include "daqb/word.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace daqb {

enum class QuotientTarget {
  EllipticBraid, // Q_i -> 1
  CommonQ,       // Q_i -> Q
  DAHA,          // Q -> q, Hecke relation imposed
};

std::string_view quotient_name(QuotientTarget t);
QuotientTarget parse_quotient(std::string_view text);

struct QuotientResult {
  LaurentPoly coefficient = 1;
  int q_degree = 0;
  Word residual;
  /// DAHA only: residual in the Y^a T_w basis when it has no Z letters.
  std::optional<AffineHecke> affine;
  /// DAHA only: the residual was certified trivial.
  bool residual_trivial = false;
};

/// EllipticBraid and CommonQ move the Q letters to the front and read them
/// off. DAHA first reduces the word with reduce_to_q_monomial, so Q factors
/// hidden in Y/Z commutators are made explicit before the degree is read.
QuotientResult apply_quotient(const Word &w, QuotientTarget target, const Budget &budget = {});

struct DahaCheck {
  std::string label;  // "YZT1", "YZ1[i]", "ZY1[i]"
  std::string lhs;
  std::string rhs;
  int expected_q = 0;
  int observed_q = 0;
  bool residual_equal = false;
  bool passed = false;
};

struct DahaReport {
  int n = 2;
  std::vector<DahaCheck> checks;
  bool passed() const noexcept;
};

/// For each of YZT1, YZ1 (all i) and ZY1 (all i): reduces lhs * rhs^{-1}
/// and requires the identity residual times q^{expected}.
DahaReport verify_daha_relations(int n, const Budget &budget = {});

} // namespace daqb
