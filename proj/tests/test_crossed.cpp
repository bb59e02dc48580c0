#include <gtest/gtest.h>

#include "gradix/selftest.hpp"

using namespace gradix;

namespace {

const PrimeField f2(2), f3(3);

Errc code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error raised";
  return Errc::ValidationError;
}

Matrix<PrimeField> frobenius9() { return {{1, 0}, {0, 2}}; }

std::vector<std::vector<Vec<PrimeField>>> constant_alpha(std::size_t n, const Vec<PrimeField>& v) {
  return std::vector<std::vector<Vec<PrimeField>>>(n, std::vector<Vec<PrimeField>>(n, v));
}

}  // namespace

TEST(CrossedSystem, ValidExamples) {
  auto z2 = cyclic_group(2);
  auto o = catalog::octonions(f3);
  EXPECT_NO_THROW(catalog::group_ring_system(o, direct_product(z2, z2)));
  auto sys = validate_crossed_system(catalog::f9(), z2, {catalog::diagonal(f3, {1, 1}), frobenius9()},
                                     constant_alpha(2, {1, 0}));
  EXPECT_EQ(sys.G.order(), 2u);
  EXPECT_EQ(sys.act(1, Vec<PrimeField>{0, 1}), (Vec<PrimeField>{0, 2}));
}

TEST(CrossedSystem, ValidationErrors) {
  auto z2 = cyclic_group(2), z3 = cyclic_group(3);
  auto id2 = catalog::diagonal(f3, {1, 1});
  auto f9 = catalog::f9();
  auto alpha = constant_alpha(2, {1, 0});
  alpha[1][1] = {0, 0};
  EXPECT_EQ(code_of([&] { validate_crossed_system(f9, z2, {id2, frobenius9()}, alpha); }), Errc::AlphaNotNuclearUnit);
  EXPECT_EQ(code_of([&] {
              validate_crossed_system(f9, z2, {id2, Matrix<PrimeField>{{1, 0}, {1, 1}}}, constant_alpha(2, {1, 0}));
            }),
            Errc::NotAutomorphism);
  auto t = catalog::field_algebra(f3);
  Matrix<PrimeField> one{{1}};
  auto a3 = constant_alpha(3, {1});
  a3[1][1] = {2};
  EXPECT_EQ(code_of([&] { validate_crossed_system(t, z3, {one, one, one}, a3); }), Errc::N2Violation);
  auto a1 = constant_alpha(2, {1});
  a1[0][1] = {2};
  EXPECT_EQ(code_of([&] { validate_crossed_system(t, z2, {one, one}, a1); }), Errc::N3Violation);
}

TEST(CrossedProduct, GroupRingOfZ2) {
  auto p = build_crossed_product(catalog::group_ring_system(catalog::field_algebra(f2), cyclic_group(2)));
  auto ga = catalog::group_algebra(f2, cyclic_group(2));
  ASSERT_EQ(p.algebra.dim(), 2u);
  for (std::size_t a = 0; a < 2; ++a)
    for (std::size_t b = 0; b < 2; ++b) EXPECT_EQ(p.algebra.basis_product(a, b), ga.basis_product(a, b));
  EXPECT_EQ(p.gradation.degrees(), (std::vector<GroupElement>{0, 1}));
}

TEST(CrossedProduct, SkewF9IsSimpleWithPrimeCenter) {
  auto sys = catalog::cyclic_skew_system(catalog::f9(), frobenius9(), 2);
  auto p = build_crossed_product(sys);
  EXPECT_EQ(p.algebra.dim(), 4u);
  EXPECT_TRUE(is_simple(p.algebra).simple);
  auto z = nucleus_and_center(p.algebra).center;
  EXPECT_EQ(z.rank(), 1u);
  EXPECT_TRUE(z.contains(p.algebra.unit()));
  auto c = crossed_center(sys);
  EXPECT_EQ(c.center, z);
  EXPECT_EQ(c.fixed_center.rank(), 1u);
  EXPECT_TRUE(c.fixed_center.contains(Vec<PrimeField>{1, 0}));
}

TEST(CrossedProduct, QuaternionCocycleGivesHamiltonTable) {
  auto p = build_crossed_product(catalog::quaternion_cocycle_system());
  auto h = catalog::hamilton(f3);
  for (std::size_t a = 0; a < 4; ++a)
    for (std::size_t b = 0; b < 4; ++b) EXPECT_EQ(p.algebra.basis_product(a, b), h.basis_product(a, b)) << a << b;
  auto z = crossed_center(catalog::quaternion_cocycle_system()).center;
  EXPECT_EQ(z.rank(), 1u);
}

TEST(Recognition, RoundTrips) {
  auto sys = catalog::cyclic_skew_system(catalog::f9(), frobenius9(), 2);
  auto p = build_crossed_product(sys);
  auto rec = recognize_crossed_system(p.algebra, p.gradation);
  EXPECT_EQ(rec.system.sigma[1], frobenius9());
  for (const auto& row : rec.system.alpha)
    for (const auto& a : row) EXPECT_EQ(a, (Vec<PrimeField>{1, 0}));
  EXPECT_TRUE(recognition_reproduces(p.algebra, rec));
  auto rebuilt = build_crossed_product(rec.system);
  EXPECT_EQ(rebuilt.algebra.entries().size(), p.algebra.entries().size());

  auto gr = build_crossed_product(catalog::group_ring_system(catalog::field_algebra(f3), cyclic_group(3)));
  auto rg = recognize_crossed_system(gr.algebra, gr.gradation);
  for (const auto& s : rg.system.sigma) EXPECT_EQ(s, (Matrix<PrimeField>{{1}}));
  for (const auto& row : rg.system.alpha)
    for (const auto& a : row) EXPECT_EQ(a, (Vec<PrimeField>{1}));
}

TEST(Recognition, NoNuclearUnitInDualNumbers) {
  auto d = catalog::truncated_polynomial(f3, 2);
  auto g = validate_gradation(d, cyclic_group(2), {0, 1}).first;
  EXPECT_EQ(code_of([&] { recognize_crossed_system(d, g); }), Errc::NoNuclearUnit);
}

TEST(GSimple, Examples) {
  EXPECT_TRUE(is_G_simple(catalog::f9(), {frobenius9()}).simple);
  auto p = catalog::product_algebra(catalog::field_algebra(f3), catalog::field_algebra(f3));
  EXPECT_TRUE(is_G_simple(p, {catalog::swap2(f3)}).simple);
  auto v = is_G_simple(p, {catalog::diagonal(f3, {1, 1})});
  EXPECT_FALSE(v.simple);
  ASSERT_TRUE(v.witness);
  EXPECT_EQ(*v.witness, (Vec<PrimeField>{1, 0}));
  RationalField q;
  EXPECT_EQ(code_of([&] { is_G_simple(catalog::field_algebra(q), {Matrix<RationalField>{{1}}}); }),
            Errc::ExactModeUnavailable);
}

TEST(CrossedCenter, GroupRing) {
  auto c = crossed_center(catalog::group_ring_system(catalog::field_algebra(f2), cyclic_group(2)));
  EXPECT_TRUE(c.center.is_full());
}

TEST(CrossedProperties, Corpus) {
  for (const auto& cc : selftest::crossed_corpus()) {
    const auto& sys = cc.system;
    auto p = build_crossed_product(sys);
    const auto& r = p.algebra;
    auto nz = nucleus_and_center(r);
    const auto d = sys.T.dim();
    for (GroupElement g = 0; g < sys.G.order(); ++g) {
      // u_g = 1_T u_g
      Vec<PrimeField> ug(r.dim(), 0);
      for (std::size_t i = 0; i < d; ++i) ug[CrossedProduct<PrimeField>::index(d, g, i)] = sys.T.unit()[i];
      EXPECT_TRUE(nz.nucleus.contains(ug)) << cc.name;
      auto inv = two_sided_inverse(r, ug);
      ASSERT_TRUE(inv) << cc.name;
      EXPECT_EQ(p.gradation.degree_of(r.field(), *inv), sys.G.inv(g)) << cc.name;
    }
    auto rep = validate_gradation(r, sys.G, p.gradation.degrees()).second;
    EXPECT_TRUE(rep.strong) << cc.name;
    EXPECT_EQ(rep.faithful, true) << cc.name;
    EXPECT_EQ(is_associative(r), is_associative(sys.T)) << cc.name;
    auto gsimple = is_G_simple(sys.T, sys.sigma).simple;
    EXPECT_EQ(is_graded_simple(r, p.gradation).graded_simple, gsimple) << cc.name;
    auto cen = crossed_center(sys);
    EXPECT_EQ(cen.center, nz.center) << cc.name;
    if (gsimple) {
      SearchOptions exact;
      exact.mode = SearchMode::Exact;
      search_span(sys.T.field(), d, cen.fixed_center.basis(), exact, [&](const Vec<PrimeField>& z) {
        auto inv = two_sided_inverse(sys.T, z);
        EXPECT_TRUE(inv && cen.fixed_center.contains(*inv)) << cc.name;
        return false;
      });
    }
    if (cc.roundtrip) {
      auto rec = recognize_crossed_system(r, p.gradation);
      EXPECT_TRUE(recognition_reproduces(r, rec)) << cc.name;
    }
  }
}
