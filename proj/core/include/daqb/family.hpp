#pragma once

#include "daqb/word.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace daqb {

enum class Family {
  QBraid,             // B_N{Q}: T, Q
  AffineQBraid,       // A_N{Q}: T, Q, Y, sigma
  DoubleAffineQBraid, // D_N{Q}: everything
};

struct GroupFamily {
  Family tag = Family::DoubleAffineQBraid;
  int n = 2;

  bool admits(Gen g) const noexcept;
  /// Throws DomainError if the word uses a letter the family lacks.
  void check(const Word &w) const;

  friend bool operator==(const GroupFamily &, const GroupFamily &) = default;
};

std::string_view family_name(Family f);
/// Accepts "B", "A", "D" and the long names "qbraid", "affine", "double-affine".
Family parse_family(std::string_view text);

struct Relation {
  Word lhs;
  Word rhs;
  std::string label;
};

struct RelationTable {
  GroupFamily family;
  std::vector<Relation> relations;

  std::size_t count(std::string_view label) const;
};

/// Every index instance of the defining relations of the family, labelled
/// T1..T6, Y1..Y4, Z1..Z4, YZT, YZ, ZY. Commutation relations are listed once
/// per unordered pair.
RelationTable relation_table(const GroupFamily &family);

/// Product Z_1 Z_2 ... Z_N (kind Y or Z), optionally inverted letterwise in
/// reverse order.
Word product_of(Gen kind, int n, int exponent = 1);

} // namespace daqb
