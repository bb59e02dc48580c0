#pragma once

#include <random>
#include <vector>

#include "gradix/algebra.hpp"
#include "gradix/cayley.hpp"
#include "gradix/crossed.hpp"
#include "gradix/groups.hpp"

/// Standard small algebras and crossed systems shared by the tests and selftest.
namespace gradix::catalog {

template <class F>
Algebra<F> field_algebra(const F& f) {
  return Algebra<F>(f, 1, {{0, 0, 0, f.one()}}, {f.one()});
}

/// A x B with componentwise product; basis of A first.
template <class F>
Algebra<F> product_algebra(const Algebra<F>& a, const Algebra<F>& b) {
  const auto n = a.dim(), m = b.dim();
  std::vector<StructureConstant<F>> mult;
  for (const auto& e : a.entries()) mult.push_back(e);
  for (const auto& e : b.entries()) mult.push_back({e.i + n, e.j + n, e.k + n, e.c});
  Vec<F> unit = a.unit();
  unit.insert(unit.end(), b.unit().begin(), b.unit().end());
  return Algebra<F>(a.field(), n + m, std::move(mult), std::move(unit));
}

/// M_n(F) on matrix units e_rc at index r*n + c.
template <class F>
Algebra<F> matrix_algebra(const F& f, std::size_t n, bool transpose_involution = false) {
  std::vector<StructureConstant<F>> mult;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c) mult.push_back({a * n + b, b * n + c, a * n + c, f.one()});
  Vec<F> unit(n * n, f.zero());
  for (std::size_t a = 0; a < n; ++a) unit[a * n + a] = f.one();
  std::optional<Matrix<F>> inv;
  if (transpose_involution) {
    inv = Matrix<F>(n * n, Vec<F>(n * n, f.zero()));
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c) (*inv)[c * n + r][r * n + c] = f.one();
  }
  return Algebra<F>(f, n * n, std::move(mult), std::move(unit), std::move(inv));
}

/// Quaternion algebra (a,b) on 1, i, j, k with i^2 = a, j^2 = b, k = ij = -ji.
template <class F>
Algebra<F> quaternion(const F& f, const typename F::value_type& a, const typename F::value_type& b,
                      bool conjugation = false) {
  const auto one = f.one(), m1 = f.neg(f.one());
  const auto ab = f.mul(a, b);
  std::vector<StructureConstant<F>> mult;
  for (std::size_t x = 0; x < 4; ++x) {
    mult.push_back({0, x, x, one});
    if (x) mult.push_back({x, 0, x, one});
  }
  mult.insert(mult.end(), {{1, 1, 0, a},           {2, 2, 0, b},         {3, 3, 0, f.neg(ab)},
                           {1, 2, 3, one},         {2, 1, 3, m1},        {1, 3, 2, a},
                           {3, 1, 2, f.neg(a)},    {2, 3, 1, f.neg(b)},  {3, 2, 1, b}});
  std::optional<Matrix<F>> inv;
  if (conjugation) {
    inv = identity_matrix(f, 4);
    for (std::size_t x = 1; x < 4; ++x) (*inv)[x][x] = m1;
  }
  return Algebra<F>(f, 4, std::move(mult), unit_vector(f, 4, 0), std::move(inv));
}

/// Hamilton quaternions (-1,-1).
template <class F>
Algebra<F> hamilton(const F& f, bool conjugation = false) {
  return quaternion(f, f.neg(f.one()), f.neg(f.one()), conjugation);
}

/// Octonions as the third doubling of F with mu = -1 throughout, with the
/// standard conjugation.
template <class F>
Algebra<F> octonions(const F& f) {
  const auto m1 = f.neg(f.one());
  return tower(f, {m1, m1, m1}, SearchOptions{.mode = SearchMode::Exact, .trials = 0}).back().algebra.algebra();
}

/// F[G] on basis u_g at index g.
template <class F>
Algebra<F> group_algebra(const F& f, const FiniteGroup& g) {
  std::vector<StructureConstant<F>> mult;
  for (std::size_t a = 0; a < g.order(); ++a)
    for (std::size_t b = 0; b < g.order(); ++b) mult.push_back({a, b, g.mul(a, b), f.one()});
  return Algebra<F>(f, g.order(), std::move(mult), unit_vector(f, g.order(), g.identity()));
}

/// F[x]/(x^n) on 1, x, ..., x^(n-1).
template <class F>
Algebra<F> truncated_polynomial(const F& f, std::size_t n) {
  std::vector<StructureConstant<F>> mult;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; a + b < n; ++b) mult.push_back({a, b, a + b, f.one()});
  return Algebra<F>(f, n, std::move(mult), unit_vector(f, n, 0));
}

/// F_4 over F_2 on 1, w with w^2 = 1 + w.
inline Algebra<PrimeField> f4() {
  PrimeField f(2);
  return Algebra<PrimeField>(f, 2, {{0, 0, 0, 1}, {0, 1, 1, 1}, {1, 0, 1, 1}, {1, 1, 0, 1}, {1, 1, 1, 1}}, {1, 0});
}

inline Matrix<PrimeField> f4_frobenius() { return {{1, 1}, {0, 1}}; }

/// F_9 over F_3 on 1, x with x^2 = 2; the Frobenius x -> -x is the involution.
inline Algebra<PrimeField> f9() {
  PrimeField f(3);
  return Algebra<PrimeField>(f, 2, {{0, 0, 0, 1}, {0, 1, 1, 1}, {1, 0, 1, 1}, {1, 1, 0, 2}}, {1, 0},
                             Matrix<PrimeField>{{1, 0}, {0, 2}});
}

/// Random unital algebra: e_0 = 1, other products uniformly random.
template <class F, class Rng>
Algebra<F> random_algebra(const F& f, std::size_t dim, Rng& rng, long long bound = 3) {
  std::vector<StructureConstant<F>> mult;
  for (std::size_t a = 0; a < dim; ++a) {
    mult.push_back({0, a, a, f.one()});
    if (a) mult.push_back({a, 0, a, f.one()});
  }
  for (std::size_t a = 1; a < dim; ++a)
    for (std::size_t b = 1; b < dim; ++b)
      for (std::size_t c = 0; c < dim; ++c) mult.push_back({a, b, c, f.random(rng, bound)});
  return Algebra<F>(f, dim, std::move(mult), unit_vector(f, dim, 0));
}

template <class F, class Rng>
Vec<F> random_element(const F& f, std::size_t dim, Rng& rng, long long bound = 3) {
  Vec<F> v(dim);
  for (auto& x : v) x = f.random(rng, bound);
  return v;
}

/// Diagonal matrix with the given entries.
template <class F>
Matrix<F> diagonal(const F& f, const std::vector<typename F::value_type>& d) {
  Matrix<F> m(d.size(), Vec<F>(d.size(), f.zero()));
  for (std::size_t i = 0; i < d.size(); ++i) m[i][i] = d[i];
  return m;
}

/// Permutation matrix sending e_i to e_{perm[i]}.
template <class F>
Matrix<F> permutation(const F& f, const std::vector<std::size_t>& perm) {
  Matrix<F> m(perm.size(), Vec<F>(perm.size(), f.zero()));
  for (std::size_t i = 0; i < perm.size(); ++i) m[perm[i]][i] = f.one();
  return m;
}

/// Cyclic action of Z_n generated by a single automorphism s (s^n = id).
template <class F>
std::vector<Matrix<F>> cyclic_action(const F& f, const Matrix<F>& s, std::size_t n) {
  std::vector<Matrix<F>> out{identity_matrix(f, s.size())};
  for (std::size_t k = 1; k < n; ++k) out.push_back(multiply(f, out.back(), s));
  return out;
}

template <class F>
std::vector<std::vector<Vec<F>>> trivial_cocycle(const Algebra<F>& t, std::size_t order) {
  return std::vector<std::vector<Vec<F>>>(order, std::vector<Vec<F>>(order, t.unit()));
}

/// sigma = id, alpha = 1.
template <class F>
CrossedSystem<F> group_ring_system(const Algebra<F>& t, const FiniteGroup& g) {
  return validate_crossed_system(t, g, std::vector<Matrix<F>>(g.order(), identity_matrix(t.field(), t.dim())),
                                 trivial_cocycle(t, g.order()));
}

/// Skew group ring over Z_n from one automorphism of order dividing n.
template <class F>
CrossedSystem<F> cyclic_skew_system(const Algebra<F>& t, const Matrix<F>& s, std::size_t n) {
  return validate_crossed_system(t, cyclic_group(n), cyclic_action(t.field(), s, n), trivial_cocycle(t, n));
}

/// F_3 twisted by the quaternion cocycle on Z_2 x Z_2 (e, a, b, ab ~ 1, i, j, k).
inline CrossedSystem<PrimeField> quaternion_cocycle_system() {
  PrimeField f(3);
  auto t = field_algebra(f);
  auto g = direct_product(cyclic_group(2), cyclic_group(2));
  const std::uint32_t m = 2;
  const std::uint32_t table[4][4] = {{1, 1, 1, 1}, {1, m, 1, m}, {1, m, m, 1}, {1, 1, m, m}};
  std::vector<std::vector<Vec<PrimeField>>> alpha(4, std::vector<Vec<PrimeField>>(4));
  for (std::size_t x = 0; x < 4; ++x)
    for (std::size_t y = 0; y < 4; ++y) alpha[x][y] = {table[x][y]};
  return validate_crossed_system(t, g, std::vector<Matrix<PrimeField>>(4, {{1}}), alpha);
}

/// Conjugation by the permutation matrix P on M_2(F_2): e_rc -> e_(1-r)(1-c).
inline Matrix<PrimeField> m2_conjugation_by_p() { return permutation(PrimeField(2), {3, 2, 1, 0}); }

inline Matrix<PrimeField> swap2(const PrimeField& f) { return permutation(f, {1, 0}); }

}  // namespace gradix::catalog
