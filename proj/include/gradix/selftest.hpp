#pragma once

#include <chrono>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "gradix/catalog.hpp"
#include "gradix/laurent.hpp"
#include "gradix/magma.hpp"
#include "gradix/run.hpp"

namespace gradix::selftest {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool pass = false;
  std::size_t checks = 0;
  std::vector<std::string> failures;
  double seconds = 0;
};

/// Collects named boolean checks; keeps the first few failure messages.
class Checker {
 public:
  void expect(bool ok, const std::string& what) {
    ++checks_;
    if (!ok && failures_.size() < 20) failures_.push_back(what);
    ok_ = ok_ && ok;
  }
  bool ok() const { return ok_; }
  std::size_t checks() const { return checks_; }
  const std::vector<std::string>& failures() const { return failures_; }

 private:
  bool ok_ = true;
  std::size_t checks_ = 0;
  std::vector<std::string> failures_;
};

template <class F>
struct Named {
  std::string name;
  Algebra<F> algebra;
};

/// Corpus for the structural identities: prime fields, products, matrix,
/// quaternion and octonion algebras, dual numbers, group rings and random
/// unital algebras.
inline std::vector<Named<PrimeField>> structure_corpus(std::uint64_t seed = 0) {
  using namespace catalog;
  PrimeField f2(2), f3(3);
  std::vector<Named<PrimeField>> out{
      {"F2", field_algebra(f2)},
      {"F3", field_algebra(f3)},
      {"F3xF3", product_algebra(field_algebra(f3), field_algebra(f3))},
      {"M2(F2)", matrix_algebra(f2, 2)},
      {"M2(F3)", matrix_algebra(f3, 2)},
      {"H(F3)", hamilton(f3)},
      {"O(F3)", octonions(f3)},
      {"F3[x]/(x^2)", truncated_polynomial(f3, 2)},
      {"F2[Z2]", group_algebra(f2, cyclic_group(2))},
      {"F3[S3]", group_algebra(f3, symmetric_group3())},
      {"F4", f4()},
      {"F9", f9()},
  };
  std::mt19937_64 rng(seed);
  for (std::size_t d = 2; d <= 4; ++d) {
    out.push_back({"random F2 dim " + std::to_string(d), random_algebra(f2, d, rng)});
    out.push_back({"random F3 dim " + std::to_string(d), random_algebra(f3, d, rng)});
  }
  return out;
}

template <class F>
void check_structure(Checker& c, const std::string& name, const Algebra<F>& r, std::mt19937_64& rng) {
  const auto& f = r.field();
  auto nc = nucleus_and_center(r);
  const auto& cm = nc.commuter;
  c.expect(nc.center == cm.intersect(nc.left).intersect(nc.middle), name + ": Z = C cap Nl cap Nm");
  c.expect(nc.center == cm.intersect(nc.left).intersect(nc.right), name + ": Z = C cap Nl cap Nr");
  c.expect(nc.center == cm.intersect(nc.middle).intersect(nc.right), name + ": Z = C cap Nm cap Nr");
  auto as = [&](const Vec<F>& x, const Vec<F>& y, const Vec<F>& z) { return associator(r, x, y, z); };
  for (int t = 0; t < 200; ++t) {
    auto u = catalog::random_element(f, r.dim(), rng), x = catalog::random_element(f, r.dim(), rng);
    auto s = catalog::random_element(f, r.dim(), rng), w = catalog::random_element(f, r.dim(), rng);
    auto res = add(f, r.multiply(u, as(x, s, w)), r.multiply(as(u, x, s), w));
    res = add(f, res, as(u, r.multiply(x, s), w));
    res = sub(f, res, as(r.multiply(u, x), s, w));
    res = sub(f, res, as(u, x, r.multiply(s, w)));
    if (!is_zero(f, res)) {
      c.expect(false, name + ": associator identity residual nonzero");
      break;
    }
  }
  c.expect(true, name + ": associator identity");
  // central r with r s = 1 forces s central; nuclear units have nuclear inverses
  std::vector<Vec<F>> zs = nc.center.basis(), ns = nc.nucleus.basis();
  for (int t = 0; t < 10; ++t) {
    Vec<F> z(r.dim(), f.zero()), n(r.dim(), f.zero());
    for (const auto& b : nc.center.basis()) axpy(f, z, f.random(rng, 3), b);
    for (const auto& b : nc.nucleus.basis()) axpy(f, n, f.random(rng, 3), b);
    zs.push_back(std::move(z));
    ns.push_back(std::move(n));
  }
  for (const auto& z : zs) {
    std::vector<Vec<F>> rows(r.dim(), Vec<F>(r.dim()));
    for (std::size_t i = 0; i < r.dim(); ++i) {
      auto col = r.multiply(z, r.basis(i));
      for (std::size_t k = 0; k < r.dim(); ++k) rows[k][i] = col[k];
    }
    if (auto s = solve(f, r.dim(), rows, r.unit())) {
      c.expect(nc.center.contains(*s), name + ": right inverse of a central element is central");
      c.expect(kernel(f, r.dim(), rows).is_zero(), name + ": right inverse of a central element is unique");
    }
  }
  for (const auto& n : ns)
    if (auto s = two_sided_inverse(r, n)) c.expect(nc.nucleus.contains(*s), name + ": inverse of a nuclear unit is nuclear");
  if constexpr (F::finite) {
    SearchOptions exact;
    exact.mode = SearchMode::Exact;
    if (is_simple(r, exact).simple)
      c.expect(is_field_subspace(r, nc.center, exact).value_or(false), name + ": simple => center is a field");
  }
}

inline CriterionResult finish(int id, std::string name, const Checker& c, std::chrono::steady_clock::time_point t0) {
  return {id, std::move(name), c.ok(), c.checks(), c.failures(),
          std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count()};
}

/// Nuclei and center identities plus inverse checks.
inline CriterionResult criterion1() {
  auto t0 = std::chrono::steady_clock::now();
  Checker c;
  std::mt19937_64 rng(1);
  for (const auto& [name, r] : structure_corpus()) check_structure(c, name, r, rng);
  RationalField q;
  check_structure(c, "Q", catalog::field_algebra(q), rng);
  check_structure(c, "H(Q)", catalog::hamilton(q), rng);
  check_structure(c, "Q[S3]", catalog::group_algebra(q, symmetric_group3()), rng);
  return finish(1, "structure identities (nuclei, commuter, center, inverses)", c, t0);
}

/// The word oracle agrees with the fixpoint ideal closure.
inline CriterionResult criterion2(std::size_t cases = 100, std::size_t max_len = 5) {
  auto t0 = std::chrono::steady_clock::now();
  Checker c;
  PrimeField f2(2);
  std::mt19937_64 rng(2);
  for (std::size_t t = 0; t < cases; ++t) {
    const std::size_t dim = 1 + t % 4;
    auto r = catalog::random_algebra(f2, dim, rng);
    std::vector<Vec<PrimeField>> gens;
    const std::size_t ngens = 1 + rng() % 2;
    for (std::size_t g = 0; g < ngens; ++g) gens.push_back(catalog::random_element(f2, dim, rng));
    auto ws = word_ideal_span(r, gens, max_len);
    auto cl = ideal_closure(r, std::span<const Vec<PrimeField>>(gens));
    const auto label = "case " + std::to_string(t) + " (dim " + std::to_string(dim) + ")";
    c.expect(ws.stabilized, label + ": word span stabilized within max_len");
    c.expect(ws.span() == cl, label + ": word span equals ideal closure");
    for (std::size_t l = 1; l < ws.by_length.size(); ++l)
      c.expect(ws.by_length[l - 1].is_subspace_of(ws.by_length[l]), label + ": word spans are monotone");
  }
  return finish(2, "word oracle equals ideal closure on random algebras over F2", c, t0);
}

struct GradedCase {
  std::string name;
  Algebra<PrimeField> algebra;
  Gradation gradation;
  std::optional<bool> expect_graded_simple, expect_center_field, expect_simple;
};

inline std::vector<GradedCase> graded_corpus() {
  using namespace catalog;
  PrimeField f2(2), f3(3);
  auto z2 = cyclic_group(2), v4 = direct_product(cyclic_group(2), cyclic_group(2));
  auto grade = [](const Algebra<PrimeField>& r, const FiniteGroup& g, std::vector<GroupElement> d) {
    return validate_gradation(r, g, std::move(d)).first;
  };
  std::vector<GradedCase> out;
  auto add = [&](std::string n, Algebra<PrimeField> r, Gradation g, std::optional<bool> gs, std::optional<bool> zf,
                 std::optional<bool> s) { out.push_back({std::move(n), std::move(r), std::move(g), gs, zf, s}); };
  auto f2z2 = group_algebra(f2, z2);
  add("F2[Z2]", f2z2, grade(f2z2, z2, {0, 1}), true, false, false);
  auto h = hamilton(f3);
  add("H(F3) by Z2xZ2", h, grade(h, v4, {0, 1, 2, 3}), true, true, true);
  auto st = tower(f3, {2, 2, 2}, SearchOptions{.mode = SearchMode::Exact, .trials = 0});
  add("O(F3) by Z2^3", st.back().algebra.algebra(), st.back().gradation, true, true, true);
  auto dual = truncated_polynomial(f3, 2);
  add("F3[x]/(x^2) by Z2", dual, grade(dual, z2, {0, 1}), false, std::nullopt, false);
  auto f9x = build_crossed_product(cyclic_skew_system(f9(), Matrix<PrimeField>{{1, 0}, {0, 2}}, 2));
  add("F9 x| Z2", f9x.algebra, f9x.gradation, true, true, true);
  auto m22 = matrix_algebra(f2, 2);
  add("M2(F2) checkerboard", m22, grade(m22, z2, {0, 1, 1, 0}), true, true, true);
  auto m23 = matrix_algebra(f3, 2);
  add("M2(F3) checkerboard", m23, grade(m23, z2, {0, 1, 1, 0}), true, true, true);
  auto f3f3 = product_algebra(field_algebra(f3), field_algebra(f3));
  add("F3xF3 trivially graded", f3f3, grade(f3f3, cyclic_group(1), {0, 0}), false, false, false);
  auto z4 = cyclic_group(4);
  auto f3z4 = group_algebra(f3, z4);
  add("F3[Z4] by Z4", f3z4, grade(f3z4, z4, {0, 1, 2, 3}), true, false, false);
  auto d4 = dihedral_group(4);
  std::vector<GroupElement> dd(8);
  for (std::size_t i = 0; i < 8; ++i) dd[i] = i;
  auto f2d4 = group_algebra(f2, d4);
  add("F2[D4] by D4", f2d4, grade(f2d4, d4, dd), true, false, false);
  auto q8 = quaternion_group();
  auto f3q8 = group_algebra(f3, q8);
  add("F3[Q8] by Q8", f3q8, grade(f3q8, q8, dd), true, false, false);
  auto f4x = build_crossed_product(cyclic_skew_system(f4(), f4_frobenius(), 2));
  add("F4 x| Z2", f4x.algebra, f4x.gradation, true, true, true);
  auto c31 = tower(f3, {1}, SearchOptions{.mode = SearchMode::Exact, .trials = 0}).back();
  add("C(F3,1) by Z2", c31.algebra.algebra(), c31.gradation, true, false, false);
  return out;
}

/// Simple iff graded simple with a field center, for hypercentral gradings.
inline CriterionResult criterion3() {
  auto t0 = std::chrono::steady_clock::now();
  Checker c;
  SearchOptions opt;
  for (const auto& gc : graded_corpus()) {
    auto rep = central_simplicity_verdict(gc.algebra, gc.gradation, opt);
    c.expect(rep.hypercentral, gc.name + ": grading group is hypercentral");
    c.expect(rep.consistent, gc.name + ": simple <=> graded simple and center a field");
    c.expect(rep.simple == (rep.graded_simple && rep.center_is_field), gc.name + ": equivalence holds");
    if (gc.expect_graded_simple) c.expect(rep.graded_simple == *gc.expect_graded_simple, gc.name + ": graded simplicity");
    if (gc.expect_center_field) c.expect(rep.center_is_field == *gc.expect_center_field, gc.name + ": center field");
    if (gc.expect_simple) c.expect(rep.simple == *gc.expect_simple, gc.name + ": simplicity");
    if (rep.graded_simple && rep.center_is_field) {
      auto zg = center(gc.gradation.group());
      c.expect(is_graded_simple(gc.algebra, coarsen(gc.gradation, zg), opt).graded_simple,
               gc.name + ": graded simple after coarsening by Z(G)");
    }
  }
  return finish(3, "graded simplicity criterion on hypercentral gradings", c, t0);
}

struct CrossedCase {
  std::string name;
  CrossedSystem<PrimeField> system;
  bool roundtrip = true;
};

inline std::vector<CrossedCase> crossed_corpus() {
  using namespace catalog;
  PrimeField f2(2), f3(3);
  auto f3f3 = product_algebra(field_algebra(f3), field_algebra(f3));
  return {
      {"F2[Z2]", group_ring_system(field_algebra(f2), cyclic_group(2))},
      {"F3[Z2xZ2]", group_ring_system(field_algebra(f3), direct_product(cyclic_group(2), cyclic_group(2)))},
      {"F9 x| Z2 Frobenius", cyclic_skew_system(f9(), Matrix<PrimeField>{{1, 0}, {0, 2}}, 2)},
      {"F3 twisted by quaternion cocycle", quaternion_cocycle_system()},
      {"F3xF3 x| Z2 swap", cyclic_skew_system(f3f3, swap2(f3), 2)},
      {"F3xF3 x| Z2 trivial", group_ring_system(f3f3, cyclic_group(2))},
      {"O(F3)[Z2]", group_ring_system(octonions(f3), cyclic_group(2))},
      {"F3[x]/(x^2) x| Z2 (x -> -x)", cyclic_skew_system(truncated_polynomial(f3, 2), diagonal(f3, {1, 2}), 2)},
      {"M2(F2) x| Z2 conj P", cyclic_skew_system(matrix_algebra(f2, 2), m2_conjugation_by_p(), 2)},
      {"F4 x| Z2 Frobenius", cyclic_skew_system(f4(), f4_frobenius(), 2)},
  };
}

template <class F>
bool same_tensor(const Algebra<F>& a, const Algebra<F>& b) {
  if (a.dim() != b.dim()) return false;
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j)
      if (!equal(a.field(), a.basis_product(i, j), b.basis_product(i, j))) return false;
  return equal(a.field(), a.unit(), b.unit());
}

inline void expect_error(Checker& c, Errc code, const std::string& what, const std::function<void()>& fn) {
  try {
    fn();
    c.expect(false, what + ": no error raised");
  } catch (const Error& e) {
    c.expect(e.code() == code, what + ": raised " + std::string(errc_name(e.code())));
  }
}

/// Crossed products: every built system checked against its own recognition.
inline CriterionResult criterion4() {
  auto t0 = std::chrono::steady_clock::now();
  Checker c;
  SearchOptions opt;
  for (const auto& cc : crossed_corpus()) {
    const auto& sys = cc.system;
    const auto& f = sys.T.field();
    auto built = build_crossed_product(sys);
    const auto& r = built.algebra;
    auto [g2, rep] = validate_gradation(r, built.gradation.group(), built.gradation.degrees());
    c.expect(rep.strong, cc.name + ": gradation strong");
    c.expect(rep.faithful.value_or(false), cc.name + ": gradation faithful");
    auto nc = nucleus_and_center(r);
    const auto d = sys.T.dim();
    for (std::size_t g = 0; g < sys.G.order(); ++g) {
      Vec<PrimeField> u(r.dim(), f.zero());
      for (std::size_t i = 0; i < d; ++i) u[g * d + i] = sys.T.unit()[i];
      auto inv = two_sided_inverse(r, u);
      c.expect(nc.nucleus.contains(u) && inv.has_value(), cc.name + ": u_g is a nuclear unit");
      if (inv)
        c.expect(built.gradation.degree_of(f, *inv) == std::optional<GroupElement>(sys.G.inv(g)),
                 cc.name + ": deg(u_g^-1) = g^-1");
    }
    c.expect(is_associative(r) == is_associative(sys.T), cc.name + ": associative iff T associative");
    auto gs = is_G_simple(sys.T, sys.sigma, opt).simple;
    c.expect(is_graded_simple(r, built.gradation, opt).graded_simple == gs, cc.name + ": graded simple iff G-simple");
    auto center = crossed_center(sys);
    c.expect(center.center == nc.center, cc.name + ": center formula equals brute-force center");
    if (gs) c.expect(is_field_subspace(sys.T, center.fixed_center, opt).value_or(false), cc.name + ": Z(T)^G is a field");
    if (cc.roundtrip) {
      auto rec = recognize_crossed_system(r, built.gradation, std::nullopt, opt);
      c.expect(recognition_reproduces(r, rec), cc.name + ": recognition reproduces the product");
      c.expect(same_tensor(build_crossed_product(rec.system).algebra, r), cc.name + ": build . recognize . build = build");
    }
  }
  PrimeField f3(3);
  auto t = catalog::field_algebra(f3);
  expect_error(c, Errc::AlphaNotNuclearUnit, "zero cocycle value", [&] {
    auto alpha = catalog::trivial_cocycle(t, 2);
    alpha[1][1] = {0};
    validate_crossed_system(t, cyclic_group(2), std::vector<Matrix<PrimeField>>(2, {{1}}), alpha);
  });
  expect_error(c, Errc::N2Violation, "non-cocycle on Z3", [&] {
    auto alpha = catalog::trivial_cocycle(t, 3);
    alpha[1][1] = {2};
    validate_crossed_system(t, cyclic_group(3), std::vector<Matrix<PrimeField>>(3, {{1}}), alpha);
  });
  expect_error(c, Errc::NotAutomorphism, "non-multiplicative sigma", [&] {
    auto f3f3 = catalog::product_algebra(t, t);
    validate_crossed_system(f3f3, cyclic_group(2), {identity_matrix(f3, 2), Matrix<PrimeField>{{1, 1}, {0, 1}}},
                            catalog::trivial_cocycle(f3f3, 2));
  });
  expect_error(c, Errc::NoNuclearUnit, "dual numbers graded by Z2", [&] {
    auto dual = catalog::truncated_polynomial(f3, 2);
    auto g = validate_gradation(dual, cyclic_group(2), {0, 1}).first;
    recognize_crossed_system(dual, g);
  });
  return finish(4, "crossed products: validation, structure, simplicity, center, recognition", c, t0);
}

struct LaurentCase {
  std::string name;
  LaurentRing<PrimeField> ring;
};

inline std::vector<LaurentCase> laurent_corpus() {
  using namespace catalog;
  PrimeField f2(2), f3(3);
  auto f3f3 = product_algebra(field_algebra(f3), field_algebra(f3));
  return {
      {"F4, Frobenius", LaurentRing<PrimeField>(f4(), {f4_frobenius()})},
      {"F3xF3, swap", LaurentRing<PrimeField>(f3f3, {swap2(f3)})},
      {"F3[x]/(x^2), x -> -x", LaurentRing<PrimeField>(truncated_polynomial(f3, 2), {diagonal(f3, {1, 2})})},
      {"F2, id", LaurentRing<PrimeField>(field_algebra(f2), {{{1}}})},
      {"F3, id", LaurentRing<PrimeField>(field_algebra(f3), {{{1}}})},
      {"M2(F2), conj P", LaurentRing<PrimeField>(matrix_algebra(f2, 2), {m2_conjugation_by_p()})},
      {"F9, Frobenius x id", LaurentRing<PrimeField>(f9(), {diagonal(f3, {1, 2}), identity_matrix(f3, 2)})},
  };
}

/// Skew Laurent rings: verdicts, central witnesses and the center slice.
inline CriterionResult criterion5() {
  auto t0 = std::chrono::steady_clock::now();
  Checker c;
  SearchOptions opt;
  for (const auto& lc : laurent_corpus()) {
    const auto& ring = lc.ring;
    const auto& f = ring.field();
    auto v = laurent_simplicity_verdict(ring, opt);
    c.expect(!v.simple, lc.name + ": finite coefficient ring never gives a simple ring");
    if (v.central_witness) {
      c.expect(v.central_verified, lc.name + ": central witness verified over a period box");
      c.expect(verify_central(ring, *v.central_witness), lc.name + ": central witness re-verifies");
    }
    c.expect(!verify_central(ring, ring.variable(0, 1)) || ring.orders()[0] == std::optional<std::uint64_t>(1),
             lc.name + ": x_1 is not central unless sigma_1 = id");
    Exponent lo(ring.rank(), -4), hi(ring.rank(), 4);
    if (ring.rank() > 1) lo.assign(ring.rank(), -2), hi.assign(ring.rank(), 2);
    auto cs = laurent_center_structure(ring, lo, hi, opt);
    c.expect(cs.matches_description, lc.name + ": center slice equals F x| L on the window");
    // 1 + u^-1 x^m, read as an element of the slice, must be central
    if (v.central_witness)
      for (const auto& [m, coeff] : *v.central_witness) {
        auto it = std::find_if(cs.slice.begin(), cs.slice.end(), [&](const auto& p) { return p.first == m; });
        c.expect(it == cs.slice.end() || it->second.contains(coeff), lc.name + ": witness lies in the center slice");
      }
    (void)f;
  }
  PrimeField f2(2), f3(3);
  const auto& cases = laurent_corpus();
  auto expect_witness = [&](const LaurentCase& lc, const Vec<PrimeField>& u, long long m) {
    auto v = laurent_simplicity_verdict(lc.ring, opt);
    c.expect(v.sigma_simple, lc.name + ": sigma-simple");
    c.expect(v.witness && equal(lc.ring.field(), v.witness->u, u) && v.witness->m == Exponent{m},
             lc.name + ": expected inner witness");
    LaurentElement<PrimeField> expected = lc.ring.one();
    if (v.witness)
      expected = laurent_add(lc.ring, expected,
                             lc.ring.monomial(*two_sided_inverse(lc.ring.coefficients(), u), Exponent{m}));
    c.expect(v.central_witness && laurent_equal(lc.ring, *v.central_witness, expected), lc.name + ": central witness");
  };
  expect_witness(cases[0], {1, 0}, 2);
  expect_witness(cases[1], {1, 1}, 2);
  expect_witness(cases[5], {0, 1, 1, 0}, 1);
  auto dual = laurent_simplicity_verdict(cases[2].ring, opt);
  c.expect(!dual.sigma_simple && dual.sigma_witness.has_value(), "F3[x]/(x^2): sigma-simplicity fails");
  // F4 with Frobenius: center slice on [-4, 4] is spanned by the even powers of x
  auto cs = laurent_center_structure(cases[0].ring, {-4}, {4}, opt);
  for (const auto& [m, sub] : cs.slice) {
    const bool even = m[0] % 2 == 0;
    c.expect(sub.rank() == (even ? 1u : 0u) && (!even || sub.contains(Vec<PrimeField>{1, 0})),
             "F4: center coefficient at x^" + std::to_string(m[0]));
  }
  c.expect(cs.l_residues == std::vector<Exponent>{{0}} && cs.fixed_center.rank() == 1, "F4: L = 2Z and F = F2");
  auto m2 = laurent_center_structure(cases[5].ring, {-4}, {4}, opt);
  c.expect(m2.l_residues.size() == 2 && m2.fixed_center.rank() == 1, "M2(F2): L = Z and F = F2");
  // (w x)(w x) = x^2 over F4
  const auto& f4r = cases[0].ring;
  auto wx = f4r.monomial({0, 1}, {1});
  c.expect(laurent_equal(f4r, laurent_multiply(f4r, wx, wx), f4r.monomial({1, 0}, {2})), "F4: (w x)(w x) = x^2");
  (void)f2;
  (void)f3;
  return finish(5, "skew Laurent rings: verdicts, central witnesses, center slice", c, t0);
}

struct CayleyCase {
  std::string name;
  InvolutiveAlgebra<PrimeField> algebra;
  std::uint32_t mu;
};

inline std::vector<CayleyCase> cayley_corpus() {
  using namespace catalog;
  PrimeField f3(3), f5(5);
  auto trivial = [](const Algebra<PrimeField>& a) {
    return InvolutiveAlgebra<PrimeField>(a.with_involution(identity_matrix(a.field(), a.dim())));
  };
  auto doubled = [](const PrimeField& f, std::vector<std::uint32_t> mus) {
    return tower(f, std::vector<std::uint32_t>(mus.begin(), mus.end()),
                 SearchOptions{.mode = SearchMode::Exact, .trials = 0})
        .back()
        .algebra;
  };
  auto f3f3 = product_algebra(field_algebra(f3), field_algebra(f3));
  auto f5f5 = product_algebra(field_algebra(f5), field_algebra(f5));
  auto swap3 = InvolutiveAlgebra<PrimeField>(f3f3.with_involution(swap2(f3)));
  auto swap5 = InvolutiveAlgebra<PrimeField>(f5f5.with_involution(swap2(f5)));
  std::vector<CayleyCase> out;
  for (std::uint32_t mu : {1u, 2u}) {
    out.push_back({"F3 trivial", trivial(field_algebra(f3)), mu});
    out.push_back({"F9 Frobenius", doubled(f3, {2}), mu});
    out.push_back({"F9 trivial", trivial(f9()), mu});
    out.push_back({"C(F3,1)", doubled(f3, {1}), mu});
    out.push_back({"F3xF3 trivial", trivial(f3f3), mu});
    out.push_back({"F3xF3 swap", swap3, mu});
    out.push_back({"H(F3) conjugation", InvolutiveAlgebra<PrimeField>(hamilton(f3, true)), mu});
    out.push_back({"M2(F3) transpose", InvolutiveAlgebra<PrimeField>(matrix_algebra(f3, 2, true)), mu});
    out.push_back({"C(C(F3,1),1)", doubled(f3, {1, 1}), mu});
  }
  for (std::uint32_t mu : {1u, 2u, 3u, 4u}) out.push_back({"F5 trivial", trivial(field_algebra(f5)), mu});
  for (std::uint32_t mu : {1u, 2u}) {
    out.push_back({"C(F5,2)", doubled(f5, {2}), mu});
    out.push_back({"F5xF5 trivial", trivial(f5f5), mu});
    out.push_back({"F5xF5 swap", swap5, mu});
  }
  return out;
}

/// Simplicity of Cayley doubles: criterion versus brute force, with the
/// intermediate graded-simplicity and center facts.
inline CriterionResult criterion6(std::uint64_t samples = 10000) {
  auto t0 = std::chrono::steady_clock::now();
  Checker c;
  SearchOptions opt;
  std::size_t square = 0, nonsquare = 0, trivial = 0, nontrivial = 0;
  for (const auto& cc : cayley_corpus()) {
    const auto label = cc.name + ", mu = " + std::to_string(cc.mu);
    auto rep = mccrimmon_verdict(cc.algebra, cc.mu, opt);
    c.expect(rep.brute_simple.has_value(), label + ": brute force ran");
    c.expect(rep.consistent, label + ": criterion equals brute force");
    c.expect(rep.double_graded_simple == rep.star_simple, label + ": graded simple iff *-simple");
    c.expect(rep.center_matches, label + ": Z(C) = Z_* + Z_** l");
    c.expect(rep.double_center_field == rep.dichotomy, label + ": Z(C) field iff dichotomy");
    c.expect(rep.involution_trivial == is_identity(cc.algebra.algebra().field(), cc.algebra.star_matrix()),
             label + ": involution triviality");
    (rep.mu_square_in_za.value_or(false) ? square : nonsquare)++;
    (rep.involution_trivial ? trivial : nontrivial)++;
  }
  c.expect(square > 0 && nonsquare > 0 && trivial > 0 && nontrivial > 0, "corpus covers all four kinds of pair");
  PrimeField f3(3);
  auto oct = InvolutiveAlgebra<PrimeField>(catalog::octonions(f3));
  SearchOptions sampled;
  sampled.trials = samples;
  sampled.seed = 6;
  auto big = mccrimmon_verdict(oct, 1u, sampled);
  c.expect(big.criterion_simple, "C(O(F3),1): criterion says simple");
  c.expect(!big.brute_simple.has_value(), "C(O(F3),1): brute force omitted at dim 16");
  c.expect(big.randomized && big.randomized->simple && big.randomized->mode == VerdictMode::Randomized &&
               big.randomized->points_checked == samples,
           "C(O(F3),1): sampling finds no proper ideal");
  c.expect(big.center_matches && big.double_graded_simple, "C(O(F3),1): intermediate facts");
  return finish(6, "Cayley doubles: simplicity criterion versus brute force", c, t0);
}

/// Requests that exercise every kind, for determinism and round-trip checks.
inline std::vector<std::pair<std::string, json>> sample_requests() {
  using namespace catalog;
  PrimeField f2(2), f3(3);
  RationalField q;
  auto req = [](const char* kind, json payload, json options = json::object()) {
    json d = {{"kind", kind}, {"payload", std::move(payload)}};
    if (!options.empty()) d["options"] = std::move(options);
    return d;
  };
  auto graded = [&](const Algebra<PrimeField>& r, const FiniteGroup& g, std::vector<GroupElement> deg) {
    return req("graded", {{"algebra", io::to_json(r)}, {"gradation", {{"group", io::to_json(g)}, {"degrees", deg}}}});
  };
  auto z2 = cyclic_group(2);
  auto f3f3 = product_algebra(field_algebra(f3), field_algebra(f3));
  return {
      {"quaternions_f3", req("algebra", io::to_json(hamilton(f3)))},
      {"f3xf3", req("algebra", io::to_json(f3f3))},
      {"quaternions_q_randomized", req("algebra", io::to_json(hamilton(q)), {{"trials", 50}, {"seed", 7}})},
      {"f2z2_graded", graded(group_algebra(f2, z2), z2, {0, 1})},
      {"dual_numbers_graded", graded(truncated_polynomial(f3, 2), z2, {0, 1})},
      {"quaternions_graded",
       graded(hamilton(f3), direct_product(cyclic_group(2), cyclic_group(2)), {0, 1, 2, 3})},
      {"f9_frobenius_crossed", req("crossed", io::to_json(cyclic_skew_system(f9(), diagonal(f3, {1, 2}), 2)))},
      {"f3xf3_trivial_crossed", req("crossed", io::to_json(group_ring_system(f3f3, z2)))},
      {"f4_frobenius_laurent", req("laurent", io::to_json(LaurentRing<PrimeField>(f4(), {f4_frobenius()})))},
      {"dual_numbers_laurent",
       req("laurent", io::to_json(LaurentRing<PrimeField>(truncated_polynomial(f3, 2), {diagonal(f3, {1, 2})})))},
      {"octonion_tower", req("cayley-tower", {{"field", {{"kind", "Fp"}, {"p", 3}}}, {"mus", {"1", "1", "1"}}})},
      {"split_tower_f5", req("cayley-tower", {{"field", {{"kind", "Fp"}, {"p", 5}}}, {"mus", {"4", "1"}}},
                             {{"trials", 200}})},
  };
}

/// Every object with a "type" key naming a witness kind.
inline void collect_witnesses(const json& j, std::vector<json>& out) {
  static const std::set<std::string> types{"proper-ideal", "proper-graded-ideal", "invariant-ideal", "inner",
                                           "central-element"};
  if (j.is_object()) {
    if (j.contains("type") && j["type"].is_string() && types.count(j["type"].get<std::string>())) out.push_back(j);
    for (const auto& [k, v] : j.items()) collect_witnesses(v, out);
  } else if (j.is_array()) {
    for (const auto& v : j) collect_witnesses(v, out);
  }
}

/// Same request and seed give byte-identical reports; witnesses re-verify.
inline CriterionResult criterion7() {
  auto t0 = std::chrono::steady_clock::now();
  Checker c;
  RunOptions opt;
  for (const auto& [name, doc] : sample_requests()) {
    auto o = options_from_json(doc.contains("options") ? doc["options"] : json(nullptr), opt);
    auto a = execute(doc, o), b = execute(doc, o);
    c.expect(a.exit_code == 0, name + ": runs successfully");
    c.expect(a.report.dump() == b.report.dump(), name + ": byte-identical reports");
    std::vector<json> ws;
    collect_witnesses(a.report["result"], ws);
    for (const auto& w : ws) {
      json check = {{"kind", "check"}, {"payload", {{"request", doc}, {"witness", w}}}};
      auto res = execute(check, o);
      c.expect(res.exit_code == 0 && res.report["result"]["verified"] == true,
               name + ": witness of type " + w["type"].get<std::string>() + " re-verifies");
    }
  }
  return finish(7, "determinism and witness round trip", c, t0);
}

inline std::vector<std::function<CriterionResult()>> all_criteria() {
  return {[] { return criterion1(); }, [] { return criterion2(); }, [] { return criterion3(); },
          [] { return criterion4(); }, [] { return criterion5(); }, [] { return criterion6(); },
          [] { return criterion7(); }};
}

inline std::string summary_line(const CriterionResult& r) {
  std::ostringstream s;
  s << (r.pass ? "PASS" : "FAIL") << " criterion " << r.id << ": " << r.name << " (" << r.checks << " checks, "
    << std::fixed;
  s.precision(2);
  s << r.seconds << " s)";
  return s.str();
}

}  // namespace gradix::selftest
