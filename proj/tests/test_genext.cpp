#include <gtest/gtest.h>

#include "segcalc/segcalc.hpp"

using namespace segcalc;

namespace {

Multisegment ms(const Catalog& cat, const char* text) { return parse_multisegment(cat, text); }
Word w(const Catalog& cat, std::vector<std::int64_t> residues) { return make_word(cat, 0, residues); }

}  // namespace

TEST(LeftAdd, Examples) {
  const Catalog c3 = catalog_with_order(3);
  const Catalog big = catalog_with_order(10);
  EXPECT_EQ(left_add(big, Letter{0, 0}, ms(big, "L[1,1]")), ms(big, "L[0,1]"));
  EXPECT_EQ(left_add(c3, Letter{0, 0}, ms(c3, "L[2,2]")), ms(c3, "L[0,0]+L[2,2]"));
  EXPECT_EQ(left_add(c3, Letter{0, 2}, ms(c3, "L[0,0]")), (Multisegment{Segment{0, 2, 2}}));
}

TEST(RightAdd, Examples) {
  const Catalog c3 = catalog_with_order(3);
  EXPECT_EQ(right_add(c3, ms(c3, "L[0,0]"), Letter{0, 1}), ms(c3, "L[0,1]"));
  EXPECT_EQ(right_add(c3, ms(c3, "L[0,0]"), Letter{0, 0}), ms(c3, "L[0,0]+L[0,0]"));
  EXPECT_EQ(right_add(c3, Multisegment{}, Letter{0, 2}), ms(c3, "L[2,2]"));
}

TEST(RightAdd, ExtendsTheLongestCandidate) {
  const Catalog c3 = catalog_with_order(3);
  EXPECT_EQ(right_add(c3, ms(c3, "L[0,0]+L[2,3]"), Letter{0, 1}), ms(c3, "L[0,0]+L[2,4]"));
}

TEST(MGen, Examples) {
  const Catalog c3 = catalog_with_order(3);
  EXPECT_EQ(m_gen(c3, w(c3, {0, 1})), ms(c3, "L[0,1]"));
  EXPECT_EQ(m_gen(c3, w(c3, {0, 1, 2})), ms(c3, "L[0,2]"));
  EXPECT_EQ(m_gen(c3, w(c3, {0, 1, 0})), ms(c3, "L[0,1]+L[0,0]"));
  EXPECT_EQ(m_gen(c3, w(c3, {0, 0, 1})), ms(c3, "L[0,1]+L[0,0]"));
}

TEST(MGen, LeftAndRightFoldsAgree) {
  for (std::int64_t o : {2, 3}) {
    const Catalog cat = catalog_with_order(o);
    for (std::size_t k = 0; k <= 6; ++k)
      for (const auto& word : words_of_length(cat, 0, k)) {
        const auto m = m_gen(cat, word);
        EXPECT_EQ(m_gen_left(cat, word), m);
        EXPECT_TRUE(is_aperiodic(cat, m));
      }
  }
}

TEST(MGen, MultiLineWordsSplitPerLine) {
  const Catalog cat(Context::modular(7, 2),
                    {CuspidalLine{"A", 1, "A", std::int64_t{1}, 1}, CuspidalLine{"B", 1, "B", std::int64_t{1}, 1}});
  const Word mixed = parse_word(cat, "A:0,B:1,A:1,B:2");
  EXPECT_EQ(m_gen(cat, mixed), ms(cat, "A[0,1]+B[1,2]"));
  EXPECT_EQ(word_of(cat, ms(cat, "A[0,1]+B[1,2]")), parse_word(cat, "A:0,A:1,B:1,B:2"));
}

TEST(WordOf, Examples) {
  const Catalog c3 = catalog_with_order(3);
  EXPECT_EQ(word_of(c3, ms(c3, "L[0,1]")), w(c3, {0, 1}));
  const Word x = word_of(c3, ms(c3, "L[0,0]+L[1,1]"));
  EXPECT_EQ(x, w(c3, {1, 0}));
  EXPECT_EQ(m_gen(c3, x), ms(c3, "L[0,0]+L[1,1]"));
  try {
    word_of(c3, ms(c3, "L[0,0]+L[1,1]+L[2,2]"));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotAperiodic);
  }
}

TEST(Star, Examples) {
  const Catalog c3 = catalog_with_order(3);
  EXPECT_EQ(star(c3, ms(c3, "L[0,0]"), ms(c3, "L[1,1]")), ms(c3, "L[0,1]"));
  EXPECT_EQ(star(c3, ms(c3, "L[2,2]"), Multisegment{}), ms(c3, "L[2,2]"));
  const auto a = ms(c3, "L[0,0]"), b = ms(c3, "L[1,1]"), c = ms(c3, "L[2,2]");
  EXPECT_EQ(star(c3, star(c3, a, b), c), ms(c3, "L[0,2]"));
  EXPECT_EQ(star(c3, a, star(c3, b, c)), ms(c3, "L[0,2]"));
  EXPECT_THROW(star(c3, ms(c3, "L[0,0]+L[1,1]+L[2,2]"), a), Error);
}

TEST(Star, AssociativeOnSmallTriples) {
  for (std::int64_t o : {2, 3}) {
    const Catalog cat = catalog_with_order(o);
    std::vector<Multisegment> ap;
    for (std::int64_t d = 0; d <= 2; ++d)
      for (const auto& m : multisegments_of_length(cat, 0, d))
        if (is_aperiodic(cat, m)) ap.push_back(m);
    for (const auto& x : ap)
      for (const auto& y : ap)
        for (const auto& z : ap)
          if (x.total_length() + y.total_length() + z.total_length() <= 4)
            EXPECT_EQ(star(cat, star(cat, x, y), z), star(cat, x, star(cat, y, z)));
  }
}

TEST(Serre, Examples) {
  const Catalog c4 = catalog_with_order(4);
  EXPECT_TRUE(serre_equivalent(c4, w(c4, {0, 2}), w(c4, {2, 0})));
  const Catalog c3 = catalog_with_order(3);
  EXPECT_TRUE(serre_equivalent(c3, w(c3, {0, 1, 0}), w(c3, {0, 0, 1})));
  EXPECT_FALSE(serre_equivalent(c3, w(c3, {0, 1}), w(c3, {1, 0})));
  try {
    serre_equivalent(c3, w(c3, {0}), w(c3, {0, 1}));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::LengthMismatch);
  }
}

TEST(Serre, OrderTwoRelation) {
  const Catalog c2 = catalog_with_order(2);
  EXPECT_TRUE(serre_equivalent(c2, w(c2, {0, 1, 0, 0}), w(c2, {0, 0, 1, 0})));
  EXPECT_EQ(m_gen(c2, w(c2, {0, 1, 0, 0})), m_gen(c2, w(c2, {0, 0, 1, 0})));
}

TEST(Serre, ClassicalRelationsMissACycle) {
  const Catalog c3 = catalog_with_order(3);
  const auto x = w(c3, {0, 0, 2, 1, 0});
  const auto y = w(c3, {0, 2, 1, 0, 0});
  EXPECT_EQ(m_gen(c3, x), m_gen(c3, y));
  EXPECT_FALSE(serre_equivalent(c3, x, y, SerreRelations::Classical));
  EXPECT_TRUE(serre_equivalent(c3, x, y, SerreRelations::WithCycle));
}

TEST(Serre, CompleteForShortWords) {
  CheckOptions opt;
  const auto r = check_serre(opt, 5);
  EXPECT_TRUE(r.passed) << r.counterexample.value_or("");
}

TEST(WordsBelow, Examples) {
  const Catalog c3 = catalog_with_order(3);
  EXPECT_EQ(words_below(c3, ms(c3, "L[0,1]")), (std::vector<Word>{w(c3, {0, 1})}));
  EXPECT_EQ(words_below(c3, ms(c3, "L[0,0]+L[1,1]")), (std::vector<Word>{w(c3, {0, 1}), w(c3, {1, 0})}));
  EXPECT_EQ(words_below(c3, Multisegment{}), (std::vector<Word>{Word{}}));
}

TEST(WordsBelow, ExactlyTheWordsBelow) {
  const Catalog c3 = catalog_with_order(3);
  for (std::int64_t d = 1; d <= 4; ++d)
    for (const auto& m : multisegments_of_length(c3, 0, d)) {
      const auto listed = words_below(c3, m);
      const std::set<Word> set(listed.begin(), listed.end());
      for (const auto& word : words_of_length(c3, 0, static_cast<std::size_t>(d)))
        EXPECT_EQ(set.count(word) > 0, leq(c3, m_gen(c3, word), m)) << to_string(c3, m);
    }
}

TEST(WordDual, Examples) {
  const Catalog c4 = catalog_with_order(4);
  const auto d = word_dual(c4, w(c4, {0, 1}));
  EXPECT_EQ(d, w(c4, {3, 0}));
  EXPECT_EQ(m_gen(c4, d), dual(c4, ms(c4, "L[0,1]")));
  EXPECT_TRUE(word_dual(c4, Word{}).empty());
  EXPECT_EQ(word_dual(c4, d), w(c4, {0, 1}));
}

TEST(ArrangedForm, Examples) {
  const Catalog c0 = Catalog::single_line(Context::char_zero());
  EXPECT_EQ(arranged_form(c0, ms(c0, "L[0,0]+L[1,1]")), (std::vector<Segment>{Segment{0, 1, 1}, Segment{0, 0, 1}}));
  EXPECT_EQ(arranged_form(c0, ms(c0, "L[0,1]+L[1,2]")), (std::vector<Segment>{Segment{0, 1, 2}, Segment{0, 0, 2}}));
  EXPECT_TRUE(is_arranged(arranged_form(c0, ms(c0, "L[0,0]+L[5,7]+L[2,3]"))));
  const Catalog c3 = catalog_with_order(3);
  try {
    arranged_form(c3, ms(c3, "L[0,0]"));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::ModularContext);
  }
}

TEST(ArrangedForm, AlwaysArranged) {
  const Catalog c0 = Catalog::single_line(Context::char_zero());
  for (std::int64_t d = 1; d <= 5; ++d)
    for_each_multisegment(c0, 0, d, [&](const Multisegment& m) { EXPECT_TRUE(is_arranged(arranged_form(c0, m))); }, -2, 2);
}

TEST(LongSegment, Degenerations) {
  CheckOptions opt;
  opt.max_deg = 4;
  const auto r = check_monotonicity(opt);
  EXPECT_TRUE(r.passed) << r.counterexample.value_or("");
}
