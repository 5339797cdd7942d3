#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"

using namespace mcgcheck;

namespace {

IntegerMatrix mat(std::vector<std::vector<int>> rows) {
  IntegerMatrix m(rows.size(), rows.empty() ? 0 : rows[0].size());
  for (std::size_t i = 0; i < m.rows; ++i)
    for (std::size_t j = 0; j < m.cols; ++j) m(i, j) = rows[i][j];
  return m;
}

GeneratorSymbol tw(const std::string& c, Sign s = Sign::Plus) { return GeneratorSymbol::twist(c, s); }

RelationInstance rel(std::string id, Word lhs, Word rhs) {
  return {std::move(id), SchemaId::R3p_Commute, std::move(lhs), std::move(rhs), {}, "test"};
}

std::vector<Integer> diagonal(const IntegerMatrix& d) {
  std::vector<Integer> out;
  for (std::size_t i = 0; i < std::min(d.rows, d.cols); ++i)
    if (d(i, i) != 0) out.push_back(d(i, i));
  return out;
}

bool is_diagonal(const IntegerMatrix& d) {
  for (std::size_t i = 0; i < d.rows; ++i)
    for (std::size_t j = 0; j < d.cols; ++j)
      if (i != j && d(i, j) != 0) return false;
  return true;
}

IntegerMatrix random_matrix(std::mt19937& rng, std::size_t r, std::size_t c, int lo, int hi) {
  std::uniform_int_distribution<int> v(lo, hi);
  IntegerMatrix m(r, c);
  for (auto& row : m.e)
    for (auto& x : row) x = v(rng);
  return m;
}

}  // namespace

TEST(RelationMatrix, Examples) {
  auto Y = GeneratorSymbol::slide(CurveRef::one_sided("mu"), CurveRef::arrowed("alpha"));
  EXPECT_EQ(relation_matrix({rel("y2", Word::reduce({letter(Y), letter(Y)}), Word{})}, {Y}), mat({{2}}));

  auto a = tw("a"), b = tw("b");
  EXPECT_EQ(relation_matrix({rel("c", Word::reduce({letter(a), letter(b)}), Word::reduce({letter(b), letter(a)}))}, {a, b}),
            mat({{0, 0}}));

  auto p = tw("c", Sign::Plus), m = tw("c", Sign::Minus);
  EXPECT_EQ(relation_matrix({rel("r", Word::reduce({letter(p, -1)}), Word::reduce({letter(m)}))}, {p, m}), mat({{-1, -1}}));

  EXPECT_THROW(relation_matrix({rel("r", Word::reduce({letter(a)}), Word{})}, {b}), Error);
}

TEST(Smith, Examples) {
  EXPECT_EQ(smith_normal_form(mat({{2}})).D, mat({{2}}));
  EXPECT_EQ(smith_normal_form(mat({{2, 0}, {0, 3}})).D, mat({{1, 0}, {0, 6}}));
  EXPECT_EQ(smith_normal_form(mat({{0, 0, 0}, {0, 0, 0}})).D, mat({{0, 0, 0}, {0, 0, 0}}));
  EXPECT_EQ(oracle::invariant_factors(mat({{2, 0}, {0, 3}})), (std::vector<Integer>{1, 6}));
}

TEST(Invariants, Examples) {
  auto Y = GeneratorSymbol::slide(CurveRef::one_sided("mu"), CurveRef::arrowed("alpha"));
  AbelianInvariants z2 = abelian_invariants({rel("y2", Word::reduce({letter(Y), letter(Y)}), Word{})}, {Y});
  EXPECT_EQ(z2.torsion, std::vector<Integer>{2});
  EXPECT_EQ(z2.free_rank, 0u);
  EXPECT_EQ(render(z2), "Z/2");

  AbelianInvariants z = abelian_invariants({}, {tw("a")});
  EXPECT_TRUE(z.torsion.empty());
  EXPECT_EQ(z.free_rank, 1u);
  EXPECT_EQ(render(z), "Z");

  auto a = tw("a"), b = tw("b");
  AbelianInvariants braid = abelian_invariants(
      {rel("braid", Word::reduce({letter(a), letter(b), letter(a)}), Word::reduce({letter(b), letter(a), letter(b)}))}, {a, b});
  EXPECT_EQ(relation_matrix({rel("braid", Word::reduce({letter(a), letter(b), letter(a)}),
                                 Word::reduce({letter(b), letter(a), letter(b)}))},
                            {a, b}),
            mat({{1, -1}}));
  EXPECT_TRUE(braid.torsion.empty());
  EXPECT_EQ(braid.free_rank, 1u);

  EXPECT_EQ(render(AbelianInvariants{}), "0");
  EXPECT_EQ(render(AbelianInvariants{{2, 4}, 3}), "Z^3 x Z/2 x Z/4");
}

TEST(Invariants, BundledY2) {
  Bundle b;
  Presentation p = b.presentation_file("y2.pres");
  EXPECT_EQ(render(abelian_invariants(p.relations, p.generators)), "Z/2");
}

TEST(SmithLaws, AgreesWithDeterminantalDivisors) {
  std::mt19937 rng(41);
  for (int i = 0; i < 200; ++i) {
    std::size_t r = 1 + rng() % 3, c = 1 + rng() % 3;
    if (i < 100) r = c = 3;
    IntegerMatrix m = random_matrix(rng, r, c, -6, 6);
    SmithForm s = smith_normal_form(m);
    ASSERT_TRUE(is_diagonal(s.D));
    ASSERT_EQ(diagonal(s.D), oracle::invariant_factors(m)) << i;
    auto d = diagonal(s.D);
    for (std::size_t k = 0; k + 1 < d.size(); ++k) ASSERT_EQ(d[k + 1] % d[k], 0);
    for (const auto& x : d) ASSERT_GT(x, 0);
  }
}

TEST(SmithLaws, TransformsAreExactAndUnimodular) {
  std::mt19937 rng(42);
  for (int i = 0; i < 200; ++i) {
    std::size_t r = 1 + rng() % 4, c = 1 + rng() % 4;
    IntegerMatrix m = random_matrix(rng, r, c, -20, 20);
    SmithForm s = smith_normal_form(m);
    ASSERT_EQ(s.U * m * s.V, s.D);
    ASSERT_EQ(abs(oracle::det(s.U)), 1);
    ASSERT_EQ(abs(oracle::det(s.V)), 1);
  }
}

TEST(SmithLaws, LargeEntriesStayExact) {
  IntegerMatrix m = mat({{1, 0}, {0, 1}});
  m(0, 0) = Integer("123456789012345678901234567890");
  m(1, 1) = Integer("987654321098765432109876543210");
  SmithForm s = smith_normal_form(m);
  EXPECT_EQ(s.U * m * s.V, s.D);
  EXPECT_EQ(diagonal(s.D), oracle::invariant_factors(m));
}

TEST(SmithLaws, PermutationInvariant) {
  std::mt19937 rng(43);
  for (int i = 0; i < 100; ++i) {
    IntegerMatrix m = random_matrix(rng, 3, 4, -5, 5);
    std::vector<std::size_t> rp = {0, 1, 2}, cp = {0, 1, 2, 3};
    std::shuffle(rp.begin(), rp.end(), rng);
    std::shuffle(cp.begin(), cp.end(), rng);
    IntegerMatrix p(3, 4);
    for (std::size_t a = 0; a < 3; ++a)
      for (std::size_t b = 0; b < 4; ++b) p(a, b) = m(rp[a], cp[b]);
    ASSERT_EQ(smith_normal_form(p).D, smith_normal_form(m).D);
  }
}

TEST(InvariantLaws, ConjugateOrInvertAnyRelator) {
  Bundle b;
  Presentation p = make_presentation(PresentationKind::Thm2, b.catalog("figure4"));
  AbelianInvariants base = abelian_invariants(p.relations, p.generators);
  std::mt19937 rng(44);
  for (int i = 0; i < 20; ++i) {
    auto rels = p.relations;
    auto& r = rels[rng() % rels.size()];
    if (i % 2) {
      std::swap(r.lhs, r.rhs);
      r.lhs = invert(r.lhs);
      r.rhs = invert(r.rhs);
    } else {
      Word f = Word::reduce(oracle::random_letters(rng, 4, p.generators));
      r.lhs = conjugate(f, concat(r.lhs, invert(r.rhs)));
      r.rhs = Word{};
    }
    ASSERT_EQ(abelian_invariants(rels, p.generators), base);
  }
}
