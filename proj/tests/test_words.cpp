#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"

using namespace mcgcheck;

namespace {

GeneratorSymbol a() { return GeneratorSymbol::twist("a", Sign::Plus); }
GeneratorSymbol b() { return GeneratorSymbol::twist("b", Sign::Plus); }
Word w(std::initializer_list<Letter> ls) { return Word::reduce(ls); }

constexpr int kCases = 1000;

}  // namespace

TEST(Reduce, Examples) {
  EXPECT_TRUE(w({letter(a()), letter(a(), -1)}).empty());
  EXPECT_TRUE(w({letter(a()), letter(b()), letter(b(), -1), letter(a(), -1)}).empty());
  Word fixed = w({letter(a()), letter(b(), -1), letter(a())});
  EXPECT_EQ(fixed.size(), 3u);
  EXPECT_EQ(render(fixed), "T(a,+) T(b,+)^-1 T(a,+)");
}

TEST(Reduce, OrientedTwistsAreDistinct) {
  Word x = w({letter(GeneratorSymbol::twist("a", Sign::Plus)), letter(GeneratorSymbol::twist("a", Sign::Minus), -1)});
  EXPECT_EQ(x.size(), 2u);
}

TEST(Concat, Examples) {
  Word x = w({letter(a()), letter(b())});
  EXPECT_EQ(concat(Word{}, x), x);
  EXPECT_EQ(concat(w({letter(a())}), w({letter(a(), -1), letter(b())})), w({letter(b())}));
  EXPECT_TRUE(concat(x, invert(x)).empty());
}

TEST(Invert, Examples) {
  EXPECT_EQ(invert(w({letter(a()), letter(b())})), w({letter(b(), -1), letter(a(), -1)}));
  EXPECT_TRUE(invert(Word{}).empty());
  EXPECT_EQ(invert(w({letter(a(), -1)})), w({letter(a())}));
}

TEST(Conjugate, Examples) {
  Word x = w({letter(b())});
  EXPECT_EQ(conjugate(Word{}, x), x);
  EXPECT_EQ(conjugate(w({letter(a())}), x), w({letter(a()), letter(b()), letter(a(), -1)}));
  EXPECT_TRUE(conjugate(w({letter(a())}), Word{}).empty());
}

TEST(Substitute, Examples) {
  auto Y = GeneratorSymbol::slide(CurveRef::one_sided("mu"), CurveRef::arrowed("alpha"));
  auto t = GeneratorSymbol::twist("alpha", Sign::Plus);
  auto U = GeneratorSymbol::transposition(CurveRef::one_sided("mu"), CurveRef::arrowed("alpha"), Sign::Plus);
  SubstitutionMap m{{Y, w({letter(t, -1), letter(U)})}};
  EXPECT_TRUE(substitute(Word{}, m).empty());
  EXPECT_EQ(substitute(w({letter(Y)}), m), w({letter(t, -1), letter(U)}));
  EXPECT_EQ(substitute(w({letter(Y, -1)}), m), w({letter(U, -1), letter(t)}));
  try {
    substitute(w({letter(t)}), m);
    FAIL() << "expected MissingImage";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::MissingImage);
  }
}

TEST(Render, RoundTrip) {
  std::string text = "T(beta,+) T(alpha,+) Y(mu,alpha)^-1";
  EXPECT_EQ(render(parse_word(text)), text);
  EXPECT_EQ(render(parse_word("U(mu,alpha^-1,-)^-1")), "U(mu,alpha^-1,-)^-1");
  EXPECT_EQ(render(Word{}), "1");
  EXPECT_TRUE(parse_word("1").empty());
}

TEST(Symbols, ShapeIsChecked) {
  EXPECT_THROW(GeneratorSymbol::slide(CurveRef::two_sided("a"), CurveRef::arrowed("b")), Error);
  EXPECT_THROW(GeneratorSymbol::slide(CurveRef::one_sided("mu"), CurveRef::two_sided("b")), Error);
  EXPECT_THROW(parse_word("Y(mu,alpha,+)"), Error);
}

// ---- laws over random inputs -------------------------------------------------------

TEST(WordLaws, ReduceAgreesWithLeftmostAndRightmostCancellation) {
  std::mt19937 rng(11);
  for (int i = 0; i < kCases; ++i) {
    auto raw = oracle::random_letters(rng, 16);
    Word r = Word::reduce(raw);
    auto left = oracle::reduce_leftmost(raw), right = oracle::reduce_rightmost(raw);
    ASSERT_EQ(left, right) << render(std::span<const Letter>(raw));
    ASSERT_EQ(r.letters(), left) << render(std::span<const Letter>(raw));
  }
}

TEST(WordLaws, ReduceIsIdempotentAndNeverLonger) {
  std::mt19937 rng(12);
  for (int i = 0; i < kCases; ++i) {
    auto raw = oracle::random_letters(rng, 16);
    Word r = Word::reduce(raw);
    ASSERT_LE(r.size(), raw.size());
    ASSERT_EQ(Word::reduce(r.letters()), r);
    for (std::size_t j = 0; j + 1 < r.size(); ++j) ASSERT_FALSE(oracle::opposite(r.letters()[j], r.letters()[j + 1]));
  }
}

TEST(WordLaws, InverseCancels) {
  std::mt19937 rng(13);
  for (int i = 0; i < kCases; ++i) {
    Word x = Word::reduce(oracle::random_letters(rng, 12));
    ASSERT_TRUE(concat(x, invert(x)).empty());
    ASSERT_TRUE(concat(invert(x), x).empty());
    ASSERT_EQ(invert(invert(x)), x);
  }
}

TEST(WordLaws, ConcatIsAssociative) {
  std::mt19937 rng(14);
  for (int i = 0; i < kCases; ++i) {
    Word x = Word::reduce(oracle::random_letters(rng, 8));
    Word y = Word::reduce(oracle::random_letters(rng, 8));
    Word z = Word::reduce(oracle::random_letters(rng, 8));
    ASSERT_EQ(concat(concat(x, y), z), concat(x, concat(y, z)));
    ASSERT_EQ(concat(Word{}, x), x);
    ASSERT_EQ(concat(x, Word{}), x);
  }
}

TEST(WordLaws, SubstitutionIsAHomomorphism) {
  std::mt19937 rng(15);
  auto alpha = oracle::alphabet();
  for (int i = 0; i < kCases; ++i) {
    SubstitutionMap m;
    for (const auto& g : alpha) m[g] = Word::reduce(oracle::random_letters(rng, 4));
    Word x = Word::reduce(oracle::random_letters(rng, 8));
    Word y = Word::reduce(oracle::random_letters(rng, 8));
    ASSERT_EQ(substitute(concat(x, y), m), concat(substitute(x, m), substitute(y, m)));
    ASSERT_EQ(substitute(invert(x), m), invert(substitute(x, m)));
    // letter by letter, straight from the definition
    std::vector<Letter> direct;
    for (const auto& l : x) {
      const Word& img = m.at(l.symbol);
      if (l.exponent == 1) {
        direct.insert(direct.end(), img.begin(), img.end());
      } else {
        for (auto it = img.letters().rbegin(); it != img.letters().rend(); ++it) direct.push_back(it->inverse());
      }
    }
    ASSERT_EQ(substitute(x, m).letters(), oracle::reduce_leftmost(direct));
  }
}

TEST(WordLaws, RenderParseRoundTrip) {
  std::mt19937 rng(16);
  for (int i = 0; i < kCases; ++i) {
    Word x = Word::reduce(oracle::random_letters(rng, 10));
    ASSERT_EQ(parse_word(render(x)), x);
  }
}
