#include "daqb/family.hpp"
#include "daqb/word.hpp"
#include "support.hpp"

#include <gtest/gtest.h>

using namespace daqb;

TEST(Word, ParseAndFormatRoundTrip) {
  const Word w = Word::parse("T1 Q2^-1 s^3 Y3 Z1^-2", 3);
  EXPECT_EQ(w.format(), "T1 Q2^-1 s^3 Y3 Z1^-2");
  EXPECT_EQ(Word::parse(w.format(), 3), w);
  EXPECT_EQ(w.length(), 1u + 1 + 3 + 1 + 2);
}

TEST(Word, IdentitySpellings) {
  EXPECT_EQ(Word::parse("e", 3).format(), "e");
  EXPECT_EQ(Word::parse("   ", 3), Word(3));
  EXPECT_EQ(Word::parse("T1 e T1^-1", 3), Word(3));
}

TEST(Word, FreeReductionMergesExponents) {
  EXPECT_EQ(Word::parse("T1 T1", 3).format(), "T1^2");
  EXPECT_EQ(Word::parse("T1 T1^-1", 3).format(), "e");
  EXPECT_EQ(Word::parse("Y2 Y1 Y1^-1 Y2^-1 s", 3).format(), "s");
}

TEST(Word, ParseErrorsCarryPositions) {
  auto position_of = [](const char *text) {
    try {
      (void)Word::parse(text, 3);
    } catch (const ParseError &e) {
      return static_cast<long>(e.position());
    }
    return -1L;
  };
  EXPECT_EQ(position_of("T1 X2"), 3);
  EXPECT_EQ(position_of("T"), 1);
  EXPECT_EQ(position_of("T1^0"), 0);
  EXPECT_EQ(position_of("T1T2"), 2);
  EXPECT_EQ(position_of("T3"), 0); // T index must be < n
  EXPECT_EQ(position_of("Q4"), 0);
}

TEST(Word, MismatchedStrandCountsRejected) {
  EXPECT_THROW(Word(3) * Word(4), DomainError);
}

TEST(Family, AdmittedGenerators) {
  const GroupFamily b{Family::QBraid, 3}, a{Family::AffineQBraid, 3};
  EXPECT_NO_THROW(b.check(Word::parse("T1 Q2", 3)));
  EXPECT_THROW(b.check(Word::parse("Y1", 3)), DomainError);
  EXPECT_NO_THROW(a.check(Word::parse("Y1 s", 3)));
  EXPECT_THROW(a.check(Word::parse("Z1", 3)), DomainError);
  EXPECT_EQ(parse_family("double-affine"), Family::DoubleAffineQBraid);
  EXPECT_EQ(parse_family("B"), Family::QBraid);
  EXPECT_THROW(parse_family("X"), DomainError);
}

// Instance counts by brute-force enumeration of the index conditions.
TEST(Family, RelationInstanceCounts) {
  for (int n = 2; n <= 6; ++n) {
    std::size_t far = 0, adjacent = 0, t4 = 0, off = 0;
    for (int i = 1; i <= n - 1; ++i) {
      for (int j = 1; j <= n - 1; ++j) {
        far += (j > i && j - i >= 2);
        adjacent += (j == i + 1);
      }
      for (int j = 1; j <= n; ++j) {
        t4 += (j != i && j != i + 1);
        off += (j != i && j != i + 1);
      }
    }
    const std::size_t pairs = n * (n - 1) / 2, nn = n;
    const RelationTable d = relation_table({Family::DoubleAffineQBraid, n});
    EXPECT_EQ(d.count("T1"), far) << n;
    EXPECT_EQ(d.count("T2"), adjacent) << n;
    EXPECT_EQ(d.count("T3"), pairs);
    EXPECT_EQ(d.count("T4"), t4);
    EXPECT_EQ(d.count("T5"), nn - 1);
    EXPECT_EQ(d.count("T6"), nn - 1);
    for (const char *l : {"Y1", "Z1"})
      EXPECT_EQ(d.count(l), pairs);
    for (const char *l : {"Y2", "Z2"})
      EXPECT_EQ(d.count(l), off);
    for (const char *l : {"Y3", "Z3"})
      EXPECT_EQ(d.count(l), nn - 1);
    for (const char *l : {"Y4", "Z4"})
      EXPECT_EQ(d.count(l), nn * nn);
    EXPECT_EQ(d.count("YZT"), 1u);
    EXPECT_EQ(d.count("YZ"), nn);
    EXPECT_EQ(d.count("ZY"), nn);

    const RelationTable b = relation_table({Family::QBraid, n});
    EXPECT_EQ(b.relations.size(), far + adjacent + pairs + t4 + 2 * (nn - 1));
    const RelationTable a = relation_table({Family::AffineQBraid, n});
    EXPECT_EQ(a.relations.size(), b.relations.size() + pairs + off + (nn - 1) + nn * nn);
  }
}

TEST(WordProperty, InverseAndAssociativity) {
  std::mt19937_64 rng(7);
  const GroupFamily d{Family::DoubleAffineQBraid, 4};
  for (int trial = 0; trial < 500; ++trial) {
    const Word a = check::random_word(rng, d, 12, true);
    const Word b = check::random_word(rng, d, 12, true);
    const Word c = check::random_word(rng, d, 12, true);
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_TRUE((a * a.inverse()).empty());
    EXPECT_EQ((a * b).inverse(), b.inverse() * a.inverse());
    EXPECT_EQ(Word::parse(a.format(), 4), a);
    EXPECT_EQ(a.power(3).power(-1), a.inverse().power(3));
  }
}
