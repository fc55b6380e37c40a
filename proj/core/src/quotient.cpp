#include "daqb/quotient.hpp"

#include "daqb/family.hpp"
#include "daqb/presentations.hpp"

#include <algorithm>
#include <numeric>

namespace daqb {

std::string_view quotient_name(QuotientTarget t) {
  switch (t) {
  case QuotientTarget::EllipticBraid: return "elliptic";
  case QuotientTarget::CommonQ: return "common-q";
  case QuotientTarget::DAHA: return "daha";
  }
  return "?";
}

QuotientTarget parse_quotient(std::string_view text) {
  for (auto t : {QuotientTarget::EllipticBraid, QuotientTarget::CommonQ, QuotientTarget::DAHA})
    if (quotient_name(t) == text)
      return t;
  throw DomainError("unknown quotient '" + std::string(text) + "'");
}

bool DahaReport::passed() const noexcept {
  return std::all_of(checks.begin(), checks.end(), [](const DahaCheck &c) { return c.passed; });
}

QuotientResult apply_quotient(const Word &w, QuotientTarget target, const Budget &budget) {
  QuotientResult out{1, 0, Word(w.n()), std::nullopt, false};
  if (target != QuotientTarget::DAHA) {
    const QPrefix qp = q_prefix_normalize(w);
    out.residual = qp.residual;
    if (target == QuotientTarget::CommonQ) {
      out.q_degree = std::accumulate(qp.q.begin(), qp.q.end(), 0);
      out.coefficient = LaurentPoly::q(out.q_degree);
    }
    return out;
  }

  const GroupFamily d{Family::DoubleAffineQBraid, w.n()};
  const QReduction r = reduce_to_q_monomial(w, d, budget);
  out.q_degree = r.q_degree();
  out.coefficient = LaurentPoly::q(out.q_degree);
  out.residual_trivial = r.trivial;
  out.residual = r.trivial ? Word(w.n()) : r.state.residual();
  if (!out.residual.contains(Gen::Z)) {
    const Word ty = out.residual.contains(Gen::Sigma) ? sigma_introduce(out.residual) : out.residual;
    out.affine = out.coefficient * affine_straighten(ty);
  }
  return out;
}

DahaReport verify_daha_relations(int n, const Budget &budget) {
  DahaReport report;
  report.n = n;
  const GroupFamily d{Family::DoubleAffineQBraid, n};
  auto check = [&](std::string label, const Word &lhs, const Word &rhs, int expected) {
    DahaCheck c;
    c.label = std::move(label);
    c.lhs = lhs.format();
    c.rhs = rhs.format();
    c.expected_q = expected;
    const QuotientResult r = apply_quotient(lhs * rhs.inverse(), QuotientTarget::DAHA, budget);
    c.observed_q = r.q_degree;
    c.residual_equal =
        r.residual_trivial ||
        equal_under_relations(r.residual, Word(n), d, budget).kind == EqVerdict::Kind::Equal;
    c.passed = c.residual_equal && c.observed_q == expected;
    report.checks.push_back(std::move(c));
  };

  check("YZT1", Word::parse("Y1 Z2 Y1^-1 Z2^-1", n), Word(n, {Letter::t(1, 2)}), 0);
  const Word pz = product_of(Gen::Z, n), py = product_of(Gen::Y, n);
  for (int i = 1; i <= n; ++i) {
    const Word yi(n, {Letter::y(i)});
    check("YZ1[" + std::to_string(i) + "]", yi * pz, pz * yi, 1);
  }
  for (int i = 1; i <= n; ++i) {
    const Word zi(n, {Letter::z(i)});
    check("ZY1[" + std::to_string(i) + "]", zi * py, py * zi, -1);
  }
  std::sort(report.checks.begin(), report.checks.end(),
            [](const DahaCheck &a, const DahaCheck &b) { return a.label < b.label; });
  return report;
}

} // namespace daqb
