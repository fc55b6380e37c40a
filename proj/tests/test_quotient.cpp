#include "daqb/quotient.hpp"
#include "support.hpp"

#include <gtest/gtest.h>

using namespace daqb;

TEST(Quotient, Names) {
  EXPECT_EQ(parse_quotient("daha"), QuotientTarget::DAHA);
  EXPECT_EQ(quotient_name(QuotientTarget::CommonQ), "common-q");
  EXPECT_THROW(parse_quotient("x"), DomainError);
}

TEST(Quotient, CommonQAndElliptic) {
  const QuotientResult c = apply_quotient(Word::parse("Q2^3 T1", 3), QuotientTarget::CommonQ);
  EXPECT_EQ(c.q_degree, 3);
  EXPECT_EQ(c.coefficient, LaurentPoly::q(3));
  EXPECT_EQ(c.residual.format(), "T1");

  const Word w = Word::parse("T1 Y2 Z3^-1 s", 3);
  const QuotientResult e = apply_quotient(w, QuotientTarget::EllipticBraid);
  EXPECT_EQ(e.coefficient, LaurentPoly(1));
  EXPECT_EQ(e.residual, w);
}

TEST(Quotient, DahaQExpression) {
  const QuotientResult r = apply_quotient(Word::parse("s Z1 s^-1 Z3^-1", 3), QuotientTarget::DAHA);
  EXPECT_EQ(r.coefficient, LaurentPoly::q());
  EXPECT_TRUE(r.residual_trivial);
  ASSERT_TRUE(r.affine.has_value());
  EXPECT_EQ(*r.affine, LaurentPoly::q() * AffineHecke::one(3));
}

TEST(Quotient, DahaRelationsCarryExactQPowers) {
  for (int n = 2; n <= 4; ++n) {
    const DahaReport rep = verify_daha_relations(n);
    EXPECT_TRUE(rep.passed()) << n;
    EXPECT_EQ(rep.checks.size(), static_cast<std::size_t>(2 * n + 1));
    for (const auto &c : rep.checks) {
      const int expect = c.label == "YZT1" ? 0 : c.label.rfind("YZ1", 0) == 0 ? 1 : -1;
      EXPECT_EQ(c.observed_q, expect) << n << " " << c.label;
      EXPECT_TRUE(c.residual_equal) << n << " " << c.label;
    }
    EXPECT_TRUE(std::is_sorted(rep.checks.begin(), rep.checks.end(),
                               [](const DahaCheck &a, const DahaCheck &b) { return a.label < b.label; }));
  }
}

// On Z-free words the DAHA degree is the total Q exponent.
TEST(QuotientProperty, DegreeOfZFreeWords) {
  std::mt19937_64 rng(61);
  const GroupFamily a{Family::AffineQBraid, 3};
  for (int trial = 0; trial < 300; ++trial) {
    const Word w = check::random_word(rng, a, 12, true);
    int total = 0;
    for (const Letter &l : w.letters())
      if (l.kind == Gen::Q)
        total += l.exponent;
    const QuotientResult r = apply_quotient(w, QuotientTarget::DAHA);
    EXPECT_EQ(r.q_degree, total) << w.format();
    EXPECT_EQ(r.q_degree, apply_quotient(w, QuotientTarget::CommonQ).q_degree);
    EXPECT_TRUE(r.affine.has_value());
  }
}

TEST(QuotientProperty, DegreeIsAdditive) {
  std::mt19937_64 rng(62);
  const GroupFamily a{Family::AffineQBraid, 3};
  for (int trial = 0; trial < 100; ++trial) {
    const Word u = check::random_word(rng, a, 5), v = check::random_word(rng, a, 5);
    const QuotientResult ru = apply_quotient(u, QuotientTarget::DAHA), rv = apply_quotient(v, QuotientTarget::DAHA),
                         ruv = apply_quotient(u * v, QuotientTarget::DAHA);
    EXPECT_EQ(ruv.q_degree, ru.q_degree + rv.q_degree);
  }
}
