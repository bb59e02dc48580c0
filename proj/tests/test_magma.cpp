#include <gtest/gtest.h>

#include <random>

#include "gradix/catalog.hpp"
#include "gradix/graded.hpp"

using namespace gradix;

namespace {

// Random word with `len` leaves drawn from `slots` argument slots.
Word random_word(std::size_t len, std::size_t slots, std::mt19937_64& rng) {
  if (len == 1) return Word::leaf(rng() % slots);
  std::size_t k = 1 + rng() % (len - 1);
  return Word::product(random_word(k, slots, rng), random_word(len - k, slots, rng));
}

}  // namespace

TEST(Word, ParseAndPrint) {
  auto w = Word::parse("((x1 x2)(x3 x2))");
  EXPECT_EQ(w.length(), 4u);
  EXPECT_EQ(w.slot_count(), 3u);
  EXPECT_FALSE(w.is_linear());
  EXPECT_EQ(w.to_string(), "((x1 x2)(x3 x2))");
  EXPECT_EQ(Word::parse(" ( x1  x2 ) "), Word::parse("(x1 x2)"));
  EXPECT_FALSE(Word::parse("((x1 x2)x3)") == Word::parse("(x1(x2 x3))"));
  EXPECT_TRUE(Word::parse("(x1((x2 x3)x4))").is_linear());
  for (const char* bad : {"", "x0", "(x1 x2", "(x1)", "x1 x2", "y1"}) EXPECT_THROW(Word::parse(bad), Error) << bad;
}

TEST(Word, LinearWordsCountIsCatalan) {
  const std::size_t catalan[] = {1, 1, 2, 5, 14, 42};
  for (std::size_t n = 1; n <= 6; ++n) {
    auto ws = linear_words(n);
    EXPECT_EQ(ws.size(), catalan[n - 1]);
    for (const auto& w : ws) {
      EXPECT_TRUE(w.is_linear());
      EXPECT_EQ(w.length(), n);
    }
  }
}

TEST(Linearize, RepeatedArgumentBecomesFreshSlot) {
  auto w = Word::parse("((x1 x2)(x3 x2))");
  std::vector<std::string> args{"a", "b", "c"};
  auto lin = linearize(w, args);
  EXPECT_EQ(lin.word, Word::parse("((x1 x2)(x3 x4))"));
  EXPECT_EQ(lin.args, (std::vector<std::string>{"a", "b", "c", "b"}));
}

TEST(Linearize, LinearWordUnchanged) {
  auto w = Word::parse("(x1((x2 x3)x4))");
  std::vector<std::string> args{"a", "b", "c", "d"};
  auto lin = linearize(w, args);
  EXPECT_EQ(lin.word, w);
  EXPECT_EQ(lin.args, args);
}

TEST(Linearize, SquareOfOneArgument) {
  PrimeField f3(3);
  auto h = catalog::hamilton(f3);
  Vec<PrimeField> a{1, 1, 0, 2};
  auto w = Word::parse("(x1 x1)");
  auto lin = linearize(w, std::vector<Vec<PrimeField>>{a});
  EXPECT_EQ(lin.word, Word::parse("(x1 x2)"));
  EXPECT_EQ(lin.args.size(), 2u);
  EXPECT_EQ(specialize(lin.word, lin.args, h), h.multiply(a, a));
}

TEST(Linearize, PreservesValueOnRandomWords) {
  PrimeField f2(2);
  std::mt19937_64 rng(31);
  for (int t = 0; t < 200; ++t) {
    const std::size_t dim = 1 + t % 4;
    auto r = catalog::random_algebra(f2, dim, rng);
    const std::size_t len = 1 + rng() % 6, slots = 1 + rng() % 3;
    auto w = random_word(len, slots, rng);
    std::vector<Vec<PrimeField>> args;
    for (std::size_t s = 0; s < w.slot_count(); ++s) args.push_back(catalog::random_element(f2, dim, rng));
    auto lin = linearize(w, args);
    EXPECT_TRUE(lin.word.is_linear());
    EXPECT_EQ(lin.args.size(), w.length());
    EXPECT_EQ(specialize(lin.word, lin.args, r), specialize(w, args, r));
  }
}

TEST(Specialize, Basics) {
  PrimeField f3(3);
  auto o = catalog::octonions(f3);
  Vec<PrimeField> r{1, 2, 0, 0, 1, 0, 0, 2};
  EXPECT_EQ(specialize(Word::parse("x1"), std::vector<Vec<PrimeField>>{r}, o), r);
  std::vector<Vec<PrimeField>> e{o.basis(1), o.basis(2), o.basis(4)};
  EXPECT_NE(specialize(Word::parse("((x1 x2)x3)"), e, o), specialize(Word::parse("(x1(x2 x3))"), e, o));
  EXPECT_THROW(specialize(Word::parse("(x1 x2)"), std::vector<Vec<PrimeField>>{r}, o), Error);
}

TEST(Specialize, AssociativeAlgebrasIgnoreBracketing) {
  PrimeField f3(3);
  auto m = catalog::matrix_algebra(f3, 2);
  std::mt19937_64 rng(4);
  for (int t = 0; t < 30; ++t) {
    std::vector<Vec<PrimeField>> a;
    for (int i = 0; i < 3; ++i) a.push_back(catalog::random_element(f3, 4, rng));
    EXPECT_EQ(specialize(Word::parse("((x1 x2)x3)"), a, m), specialize(Word::parse("(x1(x2 x3))"), a, m));
  }
}

TEST(Specialize, ProductOfSplits) {
  PrimeField f2(2);
  std::mt19937_64 rng(12);
  for (int t = 0; t < 100; ++t) {
    auto r = catalog::random_algebra(f2, 3, rng);
    auto w = random_word(2 + rng() % 5, 3, rng);
    std::vector<Vec<PrimeField>> args;
    for (int s = 0; s < 3; ++s) args.push_back(catalog::random_element(f2, 3, rng));
    EXPECT_EQ(specialize(w, args, r), r.multiply(specialize(w.left(), args, r), specialize(w.right(), args, r)));
  }
}

TEST(WordSpan, UnitGeneratesEverythingOnceProductsAppear) {
  PrimeField f3(3);
  auto h = catalog::hamilton(f3);
  auto ws = word_ideal_span(h, {h.unit()}, 5);
  // length 1 only reaches the generator itself; x1 x2 with a basis vector fills R
  EXPECT_EQ(ws.by_length[0].rank(), 1u);
  EXPECT_TRUE(ws.by_length[1].is_full());
  EXPECT_TRUE(ws.stabilized);
  EXPECT_EQ(ws.stable_length, 2u);
}

TEST(WordSpan, DualNumbers) {
  PrimeField f2(2);
  auto d = catalog::truncated_polynomial(f2, 2);
  auto ws = word_ideal_span(d, {d.basis(1)}, 5);
  auto x = Subspace<PrimeField>::spanned_by(f2, 2, {d.basis(1)});
  for (const auto& s : ws.by_length) EXPECT_EQ(s, x);
}

TEST(WordSpan, AgreesWithFixpointClosure) {
  PrimeField f2(2);
  std::mt19937_64 rng(2024);
  for (int t = 0; t < 100; ++t) {
    const std::size_t dim = 1 + t % 4;
    auto r = catalog::random_algebra(f2, dim, rng);
    std::vector<Vec<PrimeField>> a{catalog::random_element(f2, dim, rng)};
    if (is_zero(f2, a[0])) a[0] = r.basis(dim - 1);
    auto ws = word_ideal_span(r, a, 8);
    auto ideal = ideal_closure(r, std::span<const Vec<PrimeField>>(a));
    ASSERT_TRUE(ws.stabilized) << "case " << t;
    EXPECT_EQ(ws.span(), ideal) << "case " << t;
    for (std::size_t l = 0; l + 1 < ws.by_length.size(); ++l) {
      EXPECT_TRUE(ws.by_length[l].is_subspace_of(ws.by_length[l + 1]));
      EXPECT_TRUE(ws.by_length[l].is_subspace_of(ideal));
    }
  }
}

TEST(WordSpan, GradedVariantIsGraded) {
  PrimeField f3(3);
  auto h = catalog::hamilton(f3);
  auto [grad, rep] = validate_gradation(h, elementary_abelian_2group(2), {0, 1, 2, 3});
  auto ws = graded_word_ideal_span(h, grad, {h.basis(2)}, 5);
  EXPECT_TRUE(is_graded_subspace(h, grad, ws.span()));
  EXPECT_THROW(graded_word_ideal_span(h, grad, {Vec<PrimeField>{1, 1, 0, 0}}, 3), Error);

  auto d = catalog::truncated_polynomial(f3, 2);
  auto [dg, drep] = validate_gradation(d, cyclic_group(2), {0, 1});
  auto ds = graded_word_ideal_span(d, dg, {d.basis(1)}, 5);
  EXPECT_TRUE(is_graded_subspace(d, dg, ds.span()));
  EXPECT_EQ(ds.span().rank(), 1u);
}

TEST(WordSpan, GradedSimpleReachesEveryComponent) {
  PrimeField f3(3);
  auto h = catalog::hamilton(f3);
  auto [grad, rep] = validate_gradation(h, elementary_abelian_2group(2), {0, 1, 2, 3});
  ASSERT_TRUE(is_graded_simple(h, grad).graded_simple);
  for (auto g : grad.support()) {
    for (std::size_t i = 0; i < 4; ++i) {
      auto s = graded_word_ideal_span(h, grad, {scale(f3, 2u, h.basis(i))}, 5).span();
      EXPECT_FALSE(s.intersect(component_subspace(h, grad, g)).is_zero());
    }
  }
}
