#include <gtest/gtest.h>

#include "gradix/selftest.hpp"

using namespace gradix;
using catalog::hamilton;

namespace {

const PrimeField f2(2), f3(3);

Gradation grade(const Algebra<PrimeField>& r, const FiniteGroup& g, std::vector<GroupElement> d) {
  return validate_gradation(r, g, std::move(d)).first;
}

Errc code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error raised";
  return Errc::ValidationError;
}

}  // namespace

TEST(Gradation, ValidateExamples) {
  auto z2 = cyclic_group(2);
  auto [g1, r1] = validate_gradation(catalog::group_algebra(f2, z2), z2, {0, 1});
  EXPECT_TRUE(r1.strong);
  EXPECT_EQ(r1.faithful, true);
  EXPECT_EQ(r1.support, (std::vector<GroupElement>{0, 1}));

  auto [g2, r2] = validate_gradation(hamilton(f3), elementary_abelian_2group(2), {0, 1, 2, 3});
  EXPECT_TRUE(r2.strong);
  EXPECT_EQ(r2.faithful, true);

  auto [g3, r3] = validate_gradation(catalog::truncated_polynomial(f3, 2), z2, {0, 1});
  EXPECT_FALSE(r3.strong);
  EXPECT_EQ(r3.faithful, false);
}

TEST(Gradation, ValidationErrors) {
  auto z2 = cyclic_group(2);
  EXPECT_EQ(code_of([&] { validate_gradation(hamilton(f3), z2, {0, 1, 1, 1}); }), Errc::IncompatibleTensor);
  EXPECT_EQ(code_of([&] { validate_gradation(hamilton(f3), z2, {0, 1}); }), Errc::DimensionMismatch);
  // unit (1,1) has a coordinate in degree a
  auto p = catalog::product_algebra(catalog::field_algebra(f3), catalog::field_algebra(f3));
  EXPECT_EQ(code_of([&] { validate_gradation(p, z2, {0, 1}); }), Errc::UnitNotInIdentityComponent);
  auto d = catalog::truncated_polynomial(f3, 2);
  auto g = grade(d, z2, {0, 1});
  EXPECT_EQ(code_of([&] { graded_ideal_closure(d, g, Vec<PrimeField>{1, 1}); }), Errc::NotHomogeneous);
}

TEST(Gradation, HomogeneousDegrees) {
  auto g = grade(hamilton(f3), elementary_abelian_2group(2), {0, 1, 2, 3});
  EXPECT_EQ(g.degree_of(f3, Vec<PrimeField>{0, 0, 2, 0}), GroupElement{2});
  EXPECT_FALSE(g.degree_of(f3, Vec<PrimeField>{1, 0, 2, 0}));
  EXPECT_FALSE(g.degree_of(f3, Vec<PrimeField>{0, 0, 0, 0}));
  EXPECT_TRUE(g.is_homogeneous(f3, Vec<PrimeField>{0, 0, 0, 0}));
}

TEST(GradedClosure, Examples) {
  auto h = hamilton(f3);
  auto hg = grade(h, elementary_abelian_2group(2), {0, 1, 2, 3});
  EXPECT_TRUE(graded_ideal_closure(h, hg, h.basis(3)).is_full());
  auto d = catalog::truncated_polynomial(f3, 2);
  auto dg = grade(d, cyclic_group(2), {0, 1});
  auto i = graded_ideal_closure(d, dg, d.basis(1));
  EXPECT_EQ(i.rank(), 1u);
  EXPECT_TRUE(i.contains(d.basis(1)));
  EXPECT_TRUE(is_graded_subspace(d, dg, i));
}

TEST(GradedClosure, MatchesUngradedClosureOnHomogeneousSets) {
  for (const auto& gc : selftest::graded_corpus()) {
    const auto& r = gc.algebra;
    for (std::size_t a = 0; a < r.dim(); ++a)
      for (std::size_t b = a; b < r.dim(); ++b) {
        std::vector<Vec<PrimeField>> gens{r.basis(a), r.basis(b)};
        auto gi = graded_ideal_closure(r, gc.gradation, std::span<const Vec<PrimeField>>(gens));
        EXPECT_EQ(gi, ideal_closure(r, std::span<const Vec<PrimeField>>(gens))) << gc.name;
        EXPECT_TRUE(is_graded_subspace(r, gc.gradation, gi)) << gc.name;
      }
  }
}

TEST(GradedSimple, Examples) {
  auto z2 = cyclic_group(2);
  auto a = catalog::group_algebra(f2, z2);
  EXPECT_TRUE(is_graded_simple(a, grade(a, z2, {0, 1})).graded_simple);
  auto d = catalog::truncated_polynomial(f3, 2);
  auto vd = is_graded_simple(d, grade(d, z2, {0, 1}));
  EXPECT_FALSE(vd.graded_simple);
  ASSERT_TRUE(vd.witness);
  EXPECT_EQ(*vd.witness, (Vec<PrimeField>{0, 1}));
  auto p = catalog::product_algebra(catalog::field_algebra(f3), catalog::field_algebra(f3));
  auto vp = is_graded_simple(p, grade(p, cyclic_group(1), {0, 0}));
  EXPECT_FALSE(vp.graded_simple);
  ASSERT_TRUE(vp.witness);
  EXPECT_EQ(*vp.witness, (Vec<PrimeField>{1, 0}));
}

TEST(GradedSimple, RationalNeedsSampling) {
  RationalField q;
  auto h = hamilton(q);
  auto g = validate_gradation(h, elementary_abelian_2group(2), {0, 1, 2, 3}).first;
  SearchOptions exact;
  exact.mode = SearchMode::Exact;
  EXPECT_EQ(code_of([&] { is_graded_simple(h, g, exact); }), Errc::ExactModeUnavailable);
  SearchOptions sampled;
  sampled.trials = 20;
  auto v = is_graded_simple(h, g, sampled);
  EXPECT_TRUE(v.graded_simple);
  EXPECT_EQ(v.mode, VerdictMode::Randomized);
}

TEST(Coarsen, Examples) {
  auto h = hamilton(f3);
  auto v4 = elementary_abelian_2group(2);
  auto g = grade(h, v4, {0, 1, 2, 3});
  auto same = coarsen(g, trivial_subgroup(v4));
  EXPECT_EQ(same.group().order(), 4u);
  EXPECT_EQ(same.degrees(), g.degrees());
  auto flat = coarsen(g, whole_group(v4));
  EXPECT_EQ(flat.group().order(), 1u);
  EXPECT_EQ(flat.degrees(), (std::vector<GroupElement>{0, 0, 0, 0}));
  // the subgroup generated by deg(i) glues 1 with i and j with k
  auto c = coarsen(g, generated_subgroup(v4, {1}));
  EXPECT_EQ(c.group().order(), 2u);
  EXPECT_EQ(c.component(0), (std::vector<std::size_t>{0, 1}));
  EXPECT_EQ(c.component(1), (std::vector<std::size_t>{2, 3}));
  validate_gradation(h, c.group(), c.degrees());

  auto s3 = symmetric_group3();
  EXPECT_EQ(code_of([&] { coarsen(Gradation(s3, {0}), generated_subgroup(s3, {1})); }), Errc::NotNormal);
}

TEST(CentralCriterion, Examples) {
  auto z2 = cyclic_group(2);
  auto a = catalog::group_algebra(f2, z2);
  auto r = central_simplicity_verdict(a, grade(a, z2, {0, 1}));
  EXPECT_TRUE(r.hypercentral);
  EXPECT_TRUE(r.graded_simple);
  EXPECT_FALSE(r.center_is_field);
  EXPECT_FALSE(r.simple);
  EXPECT_TRUE(r.consistent);
  EXPECT_TRUE(r.center.is_full());

  auto h = hamilton(f3);
  auto rh = central_simplicity_verdict(h, grade(h, elementary_abelian_2group(2), {0, 1, 2, 3}));
  EXPECT_TRUE(rh.hypercentral && rh.graded_simple && rh.center_is_field && rh.simple && rh.consistent);

  auto st = tower(f3, {2, 2, 2}, SearchOptions{.mode = SearchMode::Exact, .trials = 0});
  auto ro = central_simplicity_verdict(st.back().algebra.algebra(), st.back().gradation);
  EXPECT_TRUE(ro.hypercentral && ro.graded_simple && ro.center_is_field && ro.simple && ro.consistent);
}

TEST(CentralCriterion, CorpusIsConsistent) {
  for (const auto& gc : selftest::graded_corpus()) {
    auto rep = central_simplicity_verdict(gc.algebra, gc.gradation);
    EXPECT_TRUE(rep.hypercentral) << gc.name;
    EXPECT_TRUE(rep.consistent) << gc.name;
    if (gc.expect_graded_simple) { EXPECT_EQ(rep.graded_simple, *gc.expect_graded_simple) << gc.name; }
    if (gc.expect_center_field) { EXPECT_EQ(rep.center_is_field, *gc.expect_center_field) << gc.name; }
    if (gc.expect_simple) { EXPECT_EQ(rep.simple, *gc.expect_simple) << gc.name; }
  }
}

TEST(GradedProperties, UnitInIdentityAndInverseDegrees) {
  for (const auto& gc : selftest::graded_corpus()) {
    const auto& r = gc.algebra;
    const auto& g = gc.gradation;
    const auto& grp = g.group();
    EXPECT_EQ(g.degree_of(r.field(), r.unit()), grp.identity()) << gc.name;
    // every homogeneous projective point with an inverse has inverse of degree deg^-1
    for (auto d : g.support()) {
      std::vector<Vec<PrimeField>> basis;
      for (auto i : g.component(d)) basis.push_back(r.basis(i));
      SearchOptions exact;
      exact.mode = SearchMode::Exact;
      search_span(r.field(), r.dim(), basis, exact, [&](const Vec<PrimeField>& x) {
        if (auto inv = two_sided_inverse(r, x)) { EXPECT_EQ(g.degree_of(r.field(), *inv), grp.inv(d)) << gc.name; }
        return false;
      });
    }
  }
}

TEST(GradedProperties, IdealsGeneratedByCentralPart) {
  for (const auto& gc : selftest::graded_corpus()) {
    const auto& r = gc.algebra;
    if (!is_graded_simple(r, gc.gradation).graded_simple) continue;
    auto coarse = coarsen(gc.gradation, center(gc.gradation.group()));
    for (auto d : coarse.support()) {
      std::vector<Vec<PrimeField>> basis;
      for (auto i : coarse.component(d)) basis.push_back(r.basis(i));
      SearchOptions exact;
      exact.mode = SearchMode::Exact;
      search_span(r.field(), r.dim(), basis, exact, [&](const Vec<PrimeField>& x) {
        auto ideal = graded_ideal_closure(r, coarse, x);
        if (!ideal.is_full()) { EXPECT_EQ(central_generation(r, gc.gradation, ideal), ideal) << gc.name; }
        return false;
      });
    }
  }
}
