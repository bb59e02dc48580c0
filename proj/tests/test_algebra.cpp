#include <gtest/gtest.h>

#include <random>
#include <set>

#include "gradix/catalog.hpp"

using namespace gradix;
using catalog::hamilton;

namespace {

using Elt = std::vector<std::uint32_t>;

// Smallest set containing gens that is closed under addition and under
// multiplication by basis vectors on either side. Exponential, F_2 only.
std::set<Elt> naive_ideal(const Algebra<PrimeField>& r, const std::vector<Elt>& gens) {
  const auto& f = r.field();
  std::set<Elt> s{Elt(r.dim(), 0)};
  std::vector<Elt> work(gens.begin(), gens.end());
  while (!work.empty()) {
    Elt x = work.back();
    work.pop_back();
    if (s.count(x)) continue;
    std::vector<Elt> sums;
    for (const auto& y : s) sums.push_back(add(f, x, y));
    s.insert(x);
    for (auto& y : sums) work.push_back(std::move(y));
    for (std::size_t i = 0; i < r.dim(); ++i) {
      work.push_back(r.multiply(r.basis(i), x));
      work.push_back(r.multiply(x, r.basis(i)));
    }
  }
  return s;
}

Elt bits(std::size_t n, std::uint32_t b) {
  Elt v(n);
  for (std::size_t i = 0; i < n; ++i) v[i] = (b >> i) & 1;
  return v;
}

}  // namespace

TEST(Algebra, MultiplicationFromStructureConstants) {
  PrimeField f3(3);
  auto h = hamilton(f3);
  EXPECT_EQ(h.multiply(h.basis(1), h.basis(2)), h.basis(3));  // i j = k
  EXPECT_EQ(h.multiply(h.basis(2), h.basis(1)), (Vec<PrimeField>{0, 0, 0, 2}));
  for (std::size_t i = 0; i < 4; ++i) EXPECT_EQ(h.multiply(h.unit(), h.basis(i)), h.basis(i));
  auto o = catalog::octonions(f3);
  EXPECT_EQ(o.multiply(o.basis(3), o.basis(3)), (Vec<PrimeField>{2, 0, 0, 0, 0, 0, 0, 0}));
  EXPECT_THROW(h.multiply({1, 0}, h.unit()), Error);
}

TEST(Algebra, RejectsBadInputs) {
  PrimeField f(3);
  EXPECT_THROW(Algebra<PrimeField>(f, 2, {{0, 0, 0, 1}}, {1, 0}), Error);  // e_1 * 1 = 0
  try {
    Algebra<PrimeField>(f, 1, {{0, 0, 0, 1}}, {1}, Matrix<PrimeField>{{2}});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::BadInvolution);
  }
}

TEST(Algebra, Brackets) {
  PrimeField f3(3);
  auto o = catalog::octonions(f3);
  std::mt19937_64 rng(5);
  for (int t = 0; t < 50; ++t) {
    auto x = catalog::random_element(f3, 8, rng);
    EXPECT_TRUE(is_zero(f3, commutator(o, x, x)));
  }
  EXPECT_FALSE(is_zero(f3, associator(o, o.basis(1), o.basis(2), o.basis(4))));
  auto m = catalog::matrix_algebra(f3, 2);
  EXPECT_TRUE(is_associative(m));
  EXPECT_FALSE(is_commutative(m));
  EXPECT_FALSE(is_associative(o));
}

TEST(Algebra, NucleiAndCenter) {
  PrimeField f3(3);
  auto m = catalog::matrix_algebra(f3, 2);
  auto nm = nucleus_and_center(m);
  EXPECT_TRUE(nm.left.is_full() && nm.middle.is_full() && nm.right.is_full() && nm.nucleus.is_full());
  EXPECT_EQ(nm.center.rank(), 1u);
  auto h = hamilton(f3);
  auto nh = nucleus_and_center(h);
  EXPECT_TRUE(nh.nucleus.is_full());
  EXPECT_EQ(nh.commuter.rank(), 1u);
  EXPECT_TRUE(nh.center.contains(h.unit()) && nh.center.rank() == 1);
  auto o = catalog::octonions(f3);
  auto no = nucleus_and_center(o);
  for (const auto* s : {&no.nucleus, &no.commuter, &no.center}) {
    EXPECT_EQ(s->rank(), 1u);
    EXPECT_TRUE(s->contains(o.unit()));
  }
}

TEST(Algebra, TwoSidedInverses) {
  PrimeField f3(3);
  auto f9 = catalog::f9();
  EXPECT_EQ(*two_sided_inverse(f9, f9.unit()), f9.unit());
  EXPECT_FALSE(two_sided_inverse(f9, {0, 0}));
  int invertible = 0;
  for (std::uint32_t a = 0; a < 3; ++a)
    for (std::uint32_t b = 0; b < 3; ++b) {
      if (!a && !b) continue;
      auto s = two_sided_inverse(f9, {a, b});
      ASSERT_TRUE(s);
      EXPECT_EQ(f9.multiply({a, b}, *s), f9.unit());
      ++invertible;
    }
  EXPECT_EQ(invertible, 8);
  auto m = catalog::matrix_algebra(f3, 2);
  EXPECT_FALSE(two_sided_inverse(m, m.basis(0)));
}

TEST(Algebra, IdealClosureExamples) {
  PrimeField f2(2);
  auto m = catalog::matrix_algebra(f2, 2);
  EXPECT_TRUE(ideal_closure(m, Vec<PrimeField>{0, 0, 0, 0}).is_zero());
  EXPECT_TRUE(ideal_closure(m, m.unit()).is_full());
  EXPECT_TRUE(ideal_closure(m, m.basis(0)).is_full());
  auto dual = catalog::truncated_polynomial(PrimeField(3), 2);
  auto i = ideal_closure(dual, dual.basis(1));
  EXPECT_EQ(i.rank(), 1u);
  EXPECT_TRUE(is_ideal(dual, i));
}

TEST(Algebra, IdealClosureMatchesNaiveSetClosure) {
  PrimeField f2(2);
  std::mt19937_64 rng(8);
  for (int t = 0; t < 150; ++t) {
    const std::size_t dim = 1 + t % 4;
    auto r = catalog::random_algebra(f2, dim, rng);
    std::vector<Elt> gens;
    for (std::size_t g = 0; g < 1 + rng() % 2; ++g) gens.push_back(bits(dim, rng() % (1u << dim)));
    auto fast = ideal_closure(r, std::span<const Vec<PrimeField>>(gens));
    auto slow = naive_ideal(r, gens);
    EXPECT_EQ(slow.size(), std::size_t{1} << fast.rank());
    for (const auto& v : slow) EXPECT_TRUE(fast.contains(v));
    EXPECT_TRUE(is_ideal(r, fast));
  }
}

TEST(Algebra, SimplicityMatchesNaiveOracle) {
  PrimeField f2(2);
  std::mt19937_64 rng(9);
  for (int t = 0; t < 60; ++t) {
    const std::size_t dim = 1 + t % 4;
    auto r = catalog::random_algebra(f2, dim, rng);
    bool naive_simple = true;
    Elt witness;
    for (std::uint32_t b = 1; b < (1u << dim) && naive_simple; ++b)
      if (naive_ideal(r, {bits(dim, b)}).size() != (std::size_t{1} << dim)) naive_simple = false;
    auto v = is_simple(r);
    EXPECT_EQ(v.simple, naive_simple);
    if (v.witness) { EXPECT_FALSE(ideal_closure(r, *v.witness).is_full()); }
  }
}

TEST(Algebra, SimplicityExamples) {
  PrimeField f2(2), f3(3);
  EXPECT_TRUE(is_simple(catalog::field_algebra(f2)).simple);
  auto p = catalog::product_algebra(catalog::field_algebra(f3), catalog::field_algebra(f3));
  auto v = is_simple(p);
  EXPECT_FALSE(v.simple);
  ASSERT_TRUE(v.witness);
  EXPECT_EQ(*v.witness, (Vec<PrimeField>{1, 0}));
  auto m = is_simple(catalog::matrix_algebra(f2, 2));
  EXPECT_TRUE(m.simple);
  EXPECT_EQ(m.points_checked, 15u);
  EXPECT_EQ(m.mode, VerdictMode::Exact);
}

TEST(Algebra, SearchModesAndBudget) {
  RationalField q;
  auto h = hamilton(q);
  SearchOptions exact;
  exact.mode = SearchMode::Exact;
  try {
    is_simple(h, exact);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::ExactModeUnavailable);
  }
  SearchOptions sampled;
  sampled.trials = 30;
  auto v = is_simple(h, sampled);
  EXPECT_EQ(v.mode, VerdictMode::Randomized);
  EXPECT_TRUE(v.simple);
  auto pq = catalog::product_algebra(catalog::field_algebra(q), catalog::field_algebra(q));
  auto w = is_simple(pq, sampled);
  EXPECT_FALSE(w.simple);
  ASSERT_TRUE(w.witness);
  EXPECT_FALSE(ideal_closure(pq, *w.witness).is_full());
  SearchOptions tiny;
  tiny.budget = 10;
  try {
    is_simple(catalog::hamilton(PrimeField(3)), tiny);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::BudgetExceeded);
  }
}

TEST(Algebra, ProjectiveEnumerationOrder) {
  std::vector<Vec<PrimeField>> seen;
  auto n = for_each_projective_point(PrimeField(3), 2, [&](const Vec<PrimeField>& v) {
    seen.push_back(v);
    return false;
  });
  EXPECT_EQ(n, 4u);
  EXPECT_EQ(seen, (std::vector<Vec<PrimeField>>{{1, 0}, {1, 1}, {1, 2}, {0, 1}}));
  EXPECT_EQ(projective_count(3, 8), 3280u);
  EXPECT_EQ(projective_count(2, 4), 15u);
}

TEST(Algebra, FieldSubspaces) {
  PrimeField f3(3);
  auto f9 = catalog::f9();
  EXPECT_TRUE(*is_field_subspace(f9, Subspace<PrimeField>::full(f3, 2)));
  auto p = catalog::product_algebra(catalog::field_algebra(f3), catalog::field_algebra(f3));
  EXPECT_FALSE(*is_field_subspace(p, Subspace<PrimeField>::full(f3, 2)));
  EXPECT_TRUE(*is_field_subspace(p, Subspace<PrimeField>::spanned_by(f3, 2, {p.unit()})));
}
