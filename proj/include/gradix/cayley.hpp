#pragma once

#include <boost/multiprecision/integer.hpp>

#include <optional>
#include <vector>

#include "gradix/algebra.hpp"
#include "gradix/crossed.hpp"
#include "gradix/graded.hpp"
#include "gradix/groups.hpp"

namespace gradix {

/// An algebra that carries a (validated) involution.
template <class F>
class InvolutiveAlgebra {
 public:
  explicit InvolutiveAlgebra(Algebra<F> a) : a_(std::move(a)) {
    if (!a_.has_involution()) throw Error(Errc::BadInvolution, "algebra has no involution");
  }

  const Algebra<F>& algebra() const { return a_; }
  const Matrix<F>& star_matrix() const { return *a_.involution(); }
  Vec<F> star(const Vec<F>& x) const { return a_.star(x); }
  bool involution_trivial() const { return is_identity(a_.field(), star_matrix()); }

 private:
  Algebra<F> a_;
};

/// The field itself as a one-dimensional algebra with trivial involution.
template <class F>
InvolutiveAlgebra<F> base_field_algebra(const F& f) {
  return InvolutiveAlgebra<F>(Algebra<F>(f, 1, {{0, 0, 0, f.one()}}, {f.one()}, identity_matrix(f, 1)));
}

template <class F>
struct CayleyDouble {
  InvolutiveAlgebra<F> algebra;
  Gradation gradation;  // Z_2: 0 on A, 1 on A l
};

/// C(A, mu) = A + A l with (a + b l)(c + d l) = (ac + mu d* b) + (da + b c*) l
/// and (a + b l)* = a* - b l. Basis: e_i at index i, e_i l at index n + i.
template <class F>
CayleyDouble<F> cayley_double(const InvolutiveAlgebra<F>& a, const typename F::value_type& mu) {
  const auto& A = a.algebra();
  const auto& f = A.field();
  if (f.is_zero(mu)) throw Error(Errc::MuZero, "mu must be nonzero");
  const auto n = A.dim();
  std::vector<Vec<F>> star(n);
  for (std::size_t i = 0; i < n; ++i) star[i] = a.star(A.basis(i));
  std::vector<StructureConstant<F>> mult;
  auto emit = [&](std::size_t i, std::size_t j, std::size_t offset, const Vec<F>& v) {
    for (std::size_t k = 0; k < n; ++k)
      if (!f.is_zero(v[k])) mult.push_back({i, j, offset + k, v[k]});
  };
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      emit(i, j, 0, A.basis_product(i, j));                                   // e_i e_j
      emit(i, n + j, n, A.basis_product(j, i));                               // e_i (e_j l) = (e_j e_i) l
      emit(n + i, j, n, A.multiply(A.basis(i), star[j]));                     // (e_i l) e_j = (e_i e_j*) l
      emit(n + i, n + j, 0, scale(f, mu, A.multiply(star[j], A.basis(i))));  // (e_i l)(e_j l) = mu e_j* e_i
    }
  Vec<F> unit(2 * n, f.zero());
  std::copy(A.unit().begin(), A.unit().end(), unit.begin());
  Matrix<F> inv(2 * n, Vec<F>(2 * n, f.zero()));
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) {
      inv[r][c] = a.star_matrix()[r][c];
      inv[n + r][n + c] = r == c ? f.neg(f.one()) : f.zero();
    }
  InvolutiveAlgebra<F> c(Algebra<F>(f, 2 * n, std::move(mult), std::move(unit), std::move(inv)));

  Vec<F> l(2 * n, f.zero());
  std::copy(A.unit().begin(), A.unit().end(), l.begin() + n);
  for (std::size_t d = 0; d < n; ++d) {
    auto lhs = c.algebra().multiply(c.algebra().multiply(l, c.algebra().basis(d)), l);
    Vec<F> rhs(2 * n, f.zero());
    for (std::size_t k = 0; k < n; ++k) rhs[k] = f.mul(mu, star[d][k]);
    if (!equal(f, lhs, rhs)) throw Error(Errc::ValidationError, "l d l != mu d* at basis " + std::to_string(d));
  }
  std::vector<GroupElement> deg(2 * n);
  for (std::size_t i = 0; i < 2 * n; ++i) deg[i] = i < n ? 0 : 1;
  auto [grad, rep] = validate_gradation(c.algebra(), cyclic_group(2), deg);
  (void)rep;
  return {std::move(c), std::move(grad)};
}

/// No star-invariant ideals besides 0 and A.
template <class F>
SimplicityVerdict<F> is_star_simple(const InvolutiveAlgebra<F>& a, const SearchOptions& opt = {}) {
  if constexpr (!F::finite)
    if (opt.mode != SearchMode::Randomized) throw Error(Errc::ExactModeUnavailable, "*-simplicity over Q");
  return invariant_simplicity(a.algebra(), {a.star_matrix()}, opt);
}

template <class F>
struct StarCenters {
  Subspace<F> z_star;      // {a in Z(A) : a = a*}
  Subspace<F> z_starstar;  // {a in Z_* : a b = a b* for all b}
};

template <class F>
StarCenters<F> star_centers(const InvolutiveAlgebra<F>& a) {
  const auto& A = a.algebra();
  const auto& f = A.field();
  const auto n = A.dim();
  Subspace<F> rows = nucleus_and_center(A).center.annihilator();
  for (std::size_t r = 0; r < n; ++r) {
    Vec<F> row = a.star_matrix()[r];
    row[r] = f.sub(row[r], f.one());
    rows.insert(std::move(row));
  }
  auto zs = rows.annihilator();
  for (std::size_t b = 0; b < n; ++b) {
    auto diff = sub(f, A.basis(b), a.star(A.basis(b)));
    for (std::size_t k = 0; k < n; ++k) {
      Vec<F> row(n);
      for (std::size_t i = 0; i < n; ++i) row[i] = A.left_basis(i, diff)[k];
      rows.insert(std::move(row));
    }
  }
  return {std::move(zs), rows.annihilator()};
}

/// Z_*(A) + Z_**(A) l inside C(A, mu).
template <class F>
Subspace<F> predicted_double_center(const InvolutiveAlgebra<F>& a, const StarCenters<F>& z) {
  const auto n = a.algebra().dim();
  const auto& f = a.algebra().field();
  Subspace<F> out(f, 2 * n);
  for (const auto& v : z.z_star.basis()) {
    Vec<F> x(2 * n, f.zero());
    std::copy(v.begin(), v.end(), x.begin());
    out.insert(std::move(x));
  }
  for (const auto& v : z.z_starstar.basis()) {
    Vec<F> x(2 * n, f.zero());
    std::copy(v.begin(), v.end(), x.begin() + n);
    out.insert(std::move(x));
  }
  return out;
}

inline bool is_rational_square(const boost::multiprecision::cpp_rational& q) {
  using boost::multiprecision::cpp_int;
  if (q < 0) return false;
  auto is_sq = [](const cpp_int& v) {
    cpp_int r = boost::multiprecision::sqrt(v);
    return r * r == v;
  };
  return is_sq(boost::multiprecision::numerator(q)) && is_sq(boost::multiprecision::denominator(q));
}

/// Whether mu * 1 is a square of some element of the subspace S (assumed a
/// commutative subalgebra such as Z(A)). Finite fields: enumerate S. Over Q
/// only S = Q*1 is decided.
template <class F>
std::optional<bool> is_square_in(const Algebra<F>& r, const Subspace<F>& s, const typename F::value_type& mu,
                                 const SearchOptions& opt = {}) {
  const auto& f = r.field();
  auto target = r.scalar(mu);
  if constexpr (!F::finite) {
    if (s.rank() == 1 && s.contains(r.unit())) return is_rational_square(mu);
    return std::nullopt;
  } else {
    const std::uint64_t q = *f.size();
    std::uint64_t count = 1;
    for (std::size_t i = 0; i < s.rank(); ++i) {
      if (count > opt.budget / q) throw Error(Errc::BudgetExceeded, "too many elements to test for squares");
      count *= q;
    }
    std::vector<std::uint64_t> digits(s.rank(), 0);
    for (std::uint64_t c = 0; c < count; ++c) {
      Vec<F> z(r.dim(), f.zero());
      for (std::size_t i = 0; i < s.rank(); ++i) axpy(f, z, f.element(digits[i]), s.basis()[i]);
      if (equal(f, r.multiply(z, z), target)) return true;
      for (std::size_t i = 0; i < s.rank() && ++digits[i] == q; ++i) digits[i] = 0;
    }
    return false;
  }
}

template <class F>
struct McCrimmonReport {
  bool star_simple = false;
  bool involution_trivial = false;
  bool za_field = false;
  std::optional<bool> mu_square_in_za;
  bool zstar_field = false;
  bool criterion_simple = false;
  std::optional<bool> brute_simple;
  std::optional<SimplicityVerdict<F>> randomized;  // sampled refutation when brute force is out of budget
  bool consistent = false;
  // intermediate facts about the double, checked independently
  bool double_graded_simple = false;  // expected: star_simple (mu is a nonzero scalar)
  bool center_matches = false;        // Z(C) == Z_* + Z_** l
  bool double_center_field = false;   // expected: the (i)/(ii) dichotomy
  bool dichotomy = false;
};

/// Evaluates "C(A, mu) simple iff A is *-simple and either (i) * is trivial,
/// Z(A) is a field and mu is not a square in Z(A), or (ii) * is nontrivial and
/// Z_*(A) is a field", and compares with brute force when affordable.
template <class F>
McCrimmonReport<F> mccrimmon_verdict(const InvolutiveAlgebra<F>& a, const typename F::value_type& mu,
                                     const SearchOptions& opt = {}) {
  const auto& A = a.algebra();
  McCrimmonReport<F> rep;
  SearchOptions exact = opt;
  exact.mode = F::finite ? SearchMode::Exact : SearchMode::Randomized;
  rep.star_simple = is_star_simple(a, exact).simple;
  rep.involution_trivial = a.involution_trivial();
  auto za = nucleus_and_center(A).center;
  rep.za_field = is_field_subspace(A, za, opt).value_or(false);
  rep.mu_square_in_za = is_square_in(A, za, mu, opt);
  auto zs = star_centers(a);
  rep.zstar_field = is_field_subspace(A, zs.z_star, opt).value_or(false);
  rep.dichotomy = rep.involution_trivial ? (rep.za_field && rep.mu_square_in_za == std::optional<bool>(false))
                                         : rep.zstar_field;
  auto dbl = cayley_double(a, mu);
  const auto& c = dbl.algebra.algebra();
  auto zc = nucleus_and_center(c).center;
  rep.center_matches = zc == predicted_double_center(a, zs);
  rep.double_center_field = is_field_subspace(c, zc, opt).value_or(false);
  if constexpr (F::finite) rep.double_graded_simple = is_graded_simple(c, dbl.gradation, exact).graded_simple;
  if constexpr (F::finite) {
    if (projective_count(*A.field().size(), c.dim()) <= opt.budget) {
      SearchOptions brute = opt;
      brute.mode = SearchMode::Exact;
      rep.brute_simple = is_simple(c, brute).simple;
    }
  }
  if (!rep.brute_simple && opt.trials > 0) {
    SearchOptions sample = opt;
    sample.mode = SearchMode::Randomized;
    rep.randomized = is_simple(c, sample);
  }
  rep.criterion_simple = rep.star_simple && rep.dichotomy;
  rep.consistent = !rep.brute_simple || *rep.brute_simple == rep.criterion_simple;
  return rep;
}

template <class F>
struct TowerStage {
  InvolutiveAlgebra<F> algebra;
  Gradation gradation;                        // (Z_2)^k, degree = bitmask of doubling steps
  std::optional<McCrimmonReport<F>> report;   // absent for stage 0
  bool simple = false;
};

/// Stage 0 is the field with trivial involution; stage k+1 doubles stage k
/// with mus[k].
template <class F>
std::vector<TowerStage<F>> tower(const F& f, const std::vector<typename F::value_type>& mus,
                                 const SearchOptions& opt = {}) {
  std::vector<TowerStage<F>> out;
  auto base = base_field_algebra(f);
  out.push_back({base, Gradation(elementary_abelian_2group(0), {0}), std::nullopt, true});
  for (std::size_t k = 0; k < mus.size(); ++k) {
    const auto& prev = out.back();
    auto rep = mccrimmon_verdict(prev.algebra, mus[k], opt);
    auto dbl = cayley_double(prev.algebra, mus[k]);
    const auto n = prev.algebra.algebra().dim();
    std::vector<GroupElement> deg(2 * n);
    for (std::size_t i = 0; i < n; ++i) {
      deg[i] = prev.gradation.degree(i);
      deg[n + i] = prev.gradation.degree(i) | (GroupElement{1} << k);
    }
    auto [grad, gr] = validate_gradation(dbl.algebra.algebra(), elementary_abelian_2group(k + 1), deg);
    (void)gr;
    bool simple = rep.criterion_simple;
    out.push_back({std::move(dbl.algebra), std::move(grad), std::move(rep), simple});
  }
  return out;
}

}  // namespace gradix
