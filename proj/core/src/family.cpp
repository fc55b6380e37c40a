#include "daqb/family.hpp"

#include <algorithm>

namespace daqb {

bool GroupFamily::admits(Gen g) const noexcept {
  switch (tag) {
  case Family::QBraid: return g == Gen::T || g == Gen::Q;
  case Family::AffineQBraid: return g != Gen::Z;
  case Family::DoubleAffineQBraid: return true;
  }
  return false;
}

void GroupFamily::check(const Word &w) const {
  if (w.n() != n)
    throw DomainError("word has N=" + std::to_string(w.n()) + ", family has N=" +
                      std::to_string(n));
  for (const auto &l : w.letters())
    if (!admits(l.kind))
      throw DomainError(std::string("generator ") + gen_symbol(l.kind) + " not in family " +
                        std::string(family_name(tag)));
}

std::string_view family_name(Family f) {
  switch (f) {
  case Family::QBraid: return "B";
  case Family::AffineQBraid: return "A";
  case Family::DoubleAffineQBraid: return "D";
  }
  return "?";
}

Family parse_family(std::string_view text) {
  if (text == "B" || text == "qbraid")
    return Family::QBraid;
  if (text == "A" || text == "affine")
    return Family::AffineQBraid;
  if (text == "D" || text == "double-affine")
    return Family::DoubleAffineQBraid;
  throw DomainError("unknown family '" + std::string(text) + "'");
}

std::size_t RelationTable::count(std::string_view label) const {
  return static_cast<std::size_t>(std::count_if(
      relations.begin(), relations.end(), [&](const Relation &r) { return r.label == label; }));
}

Word product_of(Gen kind, int n, int exponent) {
  Word out(n);
  if (exponent > 0) {
    for (int j = 1; j <= n; ++j)
      out.push_back({kind, j, exponent});
  } else {
    for (int j = n; j >= 1; --j)
      out.push_back({kind, j, exponent});
  }
  return out;
}

namespace {

class TableBuilder {
public:
  explicit TableBuilder(const GroupFamily &f) : table_{f, {}} {}

  void add(std::string label, std::initializer_list<Letter> lhs,
           std::initializer_list<Letter> rhs) {
    int n = table_.family.n;
    table_.relations.push_back({Word(n, lhs), Word(n, rhs), std::move(label)});
  }
  void add(std::string label, Word lhs, Word rhs) {
    table_.relations.push_back({std::move(lhs), std::move(rhs), std::move(label)});
  }

  // X_i X_j = X_j X_i over unordered pairs
  void commuting_family(const std::string &label, Gen kind) {
    int n = table_.family.n;
    for (int i = 1; i <= n; ++i)
      for (int j = i + 1; j <= n; ++j)
        add(label, {{kind, i, 1}, {kind, j, 1}}, {{kind, j, 1}, {kind, i, 1}});
  }

  // T_i X_j = X_j T_i for j != i, i+1, and T_i X_{i+1} T_i = X_i
  void affine_family(const std::string &commute_label, const std::string &conj_label,
                     Gen kind) {
    int n = table_.family.n;
    for (int i = 1; i <= n - 1; ++i)
      for (int j = 1; j <= n; ++j)
        if (j != i && j != i + 1)
          add(commute_label, {Letter::t(i), {kind, j, 1}}, {{kind, j, 1}, Letter::t(i)});
    for (int i = 1; i <= n - 1; ++i)
      add(conj_label, {Letter::t(i), {kind, i + 1, 1}, Letter::t(i)}, {{kind, i, 1}});
  }

  // X_i Q_j = Q_j X_i for all i, j
  void q_central(const std::string &label, Gen kind) {
    int n = table_.family.n;
    for (int i = 1; i <= n; ++i)
      for (int j = 1; j <= n; ++j)
        add(label, {{kind, i, 1}, Letter::q(j)}, {Letter::q(j), {kind, i, 1}});
  }

  RelationTable take() { return std::move(table_); }

private:
  RelationTable table_;
};

} // namespace

RelationTable relation_table(const GroupFamily &family) {
  const int n = family.n;
  if (n < 2)
    throw DomainError("strand count must be at least 2");
  TableBuilder b(family);

  for (int i = 1; i <= n - 1; ++i)
    for (int j = i + 2; j <= n - 1; ++j)
      b.add("T1", {Letter::t(i), Letter::t(j)}, {Letter::t(j), Letter::t(i)});
  for (int i = 1; i + 1 <= n - 1; ++i)
    b.add("T2", {Letter::t(i), Letter::t(i + 1), Letter::t(i)},
          {Letter::t(i + 1), Letter::t(i), Letter::t(i + 1)});
  b.commuting_family("T3", Gen::Q);
  for (int i = 1; i <= n - 1; ++i)
    for (int j = 1; j <= n; ++j)
      if (j < i || j > i + 1)
        b.add("T4", {Letter::t(i), Letter::q(j)}, {Letter::q(j), Letter::t(i)});
  for (int i = 1; i <= n - 1; ++i)
    b.add("T5", {Letter::t(i), Letter::q(i)}, {Letter::q(i + 1), Letter::t(i)});
  for (int i = 1; i <= n - 1; ++i)
    b.add("T6", {Letter::t(i), Letter::q(i + 1)}, {Letter::q(i), Letter::t(i)});

  if (family.tag == Family::QBraid)
    return b.take();

  b.commuting_family("Y1", Gen::Y);
  b.affine_family("Y2", "Y3", Gen::Y);
  b.q_central("Y4", Gen::Y);

  if (family.tag == Family::AffineQBraid)
    return b.take();

  b.commuting_family("Z1", Gen::Z);
  b.affine_family("Z2", "Z3", Gen::Z);
  b.q_central("Z4", Gen::Z);
  b.add("YZT", {Letter::y(1), Letter::z(2), Letter::y(1, -1), Letter::z(2, -1)},
        {Letter::t(1, 2)});
  const Word prod_z = product_of(Gen::Z, n);
  const Word prod_y = product_of(Gen::Y, n);
  for (int i = 1; i <= n; ++i)
    b.add("YZ", Word(n, {Letter::y(i)}) * prod_z, Word(n, {Letter::q(i)}) * prod_z * Word(n, {Letter::y(i)}));
  for (int i = 1; i <= n; ++i)
    b.add("ZY", Word(n, {Letter::z(i)}) * prod_y,
          Word(n, {Letter::q(i, -1)}) * prod_y * Word(n, {Letter::z(i)}));
  return b.take();
}

} // namespace daqb
