#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gradix/algebra.hpp"
#include "gradix/graded.hpp"
#include "gradix/groups.hpp"

namespace gradix {

/// Bijective unital map, multiplicative on basis pairs.
template <class F>
bool is_automorphism(const Algebra<F>& t, const Matrix<F>& m) {
  const auto& f = t.field();
  const auto n = t.dim();
  if (m.size() != n) return false;
  for (const auto& row : m)
    if (row.size() != n) return false;
  if (!inverse(f, m)) return false;
  if (!equal(f, apply(f, m, t.unit()), t.unit())) return false;
  std::vector<Vec<F>> img(n);
  for (std::size_t i = 0; i < n; ++i) img[i] = apply(f, m, t.basis(i));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (!equal(f, apply(f, m, t.basis_product(i, j)), t.multiply(img[i], img[j]))) return false;
  return true;
}

/// (T, G, sigma, alpha) with sigma[g] an automorphism matrix of T and
/// alpha[g][h] a nuclear two-sided unit of T.
template <class F>
struct CrossedSystem {
  Algebra<F> T;
  FiniteGroup G;
  std::vector<Matrix<F>> sigma;
  std::vector<std::vector<Vec<F>>> alpha;
  std::vector<std::vector<Vec<F>>> alpha_inverse;

  Vec<F> act(GroupElement g, const Vec<F>& a) const { return apply(T.field(), sigma[g], a); }
};

namespace detail {

inline std::string tuple_str(std::initializer_list<std::size_t> xs) {
  std::string s = "(";
  bool first = true;
  for (auto x : xs) {
    s += (first ? "" : ",") + std::to_string(x);
    first = false;
  }
  return s + ")";
}

}  // namespace detail

/// Checks automorphisms, nuclear units and conditions N1-N3 exhaustively
/// over basis elements and group pairs/triples.
template <class F>
CrossedSystem<F> validate_crossed_system(Algebra<F> t, FiniteGroup g, std::vector<Matrix<F>> sigma,
                                         std::vector<std::vector<Vec<F>>> alpha) {
  const auto& f = t.field();
  const auto n = g.order();
  if (sigma.size() != n) throw Error(Errc::DimensionMismatch, "need one sigma matrix per group element");
  if (alpha.size() != n) throw Error(Errc::DimensionMismatch, "need an alpha row per group element");
  for (std::size_t a = 0; a < n; ++a) {
    if (alpha[a].size() != n) throw Error(Errc::DimensionMismatch, "alpha row has wrong length");
    for (const auto& v : alpha[a]) t.check(v);
  }
  for (std::size_t a = 0; a < n; ++a)
    if (!is_automorphism(t, sigma[a])) throw Error(Errc::NotAutomorphism, "g = " + std::to_string(a));

  auto nuc = nucleus_and_center(t).nucleus;
  std::vector<std::vector<Vec<F>>> alpha_inv(n, std::vector<Vec<F>>(n));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      auto inv = two_sided_inverse(t, alpha[a][b]);
      if (!nuc.contains(alpha[a][b]) || !inv)
        throw Error(Errc::AlphaNotNuclearUnit, "(g,h) = " + detail::tuple_str({a, b}));
      alpha_inv[a][b] = std::move(*inv);
    }

  const auto e = g.identity();
  if (!is_identity(f, sigma[e])) throw Error(Errc::N3Violation, "sigma_e is not the identity");
  for (std::size_t a = 0; a < n; ++a)
    if (!equal(f, alpha[a][e], t.unit()) || !equal(f, alpha[e][a], t.unit()))
      throw Error(Errc::N3Violation, "alpha(g,e) or alpha(e,g) differs from 1 at g = " + std::to_string(a));

  CrossedSystem<F> sys{std::move(t), std::move(g), std::move(sigma), std::move(alpha), std::move(alpha_inv)};
  const auto& T = sys.T;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      auto ab = sys.G.mul(a, b);
      for (std::size_t i = 0; i < T.dim(); ++i) {
        auto x = T.basis(i);
        auto lhs = sys.act(a, sys.act(b, x));
        auto rhs = T.multiply(T.multiply(sys.alpha[a][b], sys.act(ab, x)), sys.alpha_inverse[a][b]);
        if (!equal(f, lhs, rhs)) throw Error(Errc::N1Violation, "(g,h,basis) = " + detail::tuple_str({a, b, i}));
      }
    }
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c) {
        auto lhs = T.multiply(sys.alpha[a][b], sys.alpha[sys.G.mul(a, b)][c]);
        auto rhs = T.multiply(sys.act(a, sys.alpha[b][c]), sys.alpha[a][sys.G.mul(b, c)]);
        if (!equal(f, lhs, rhs)) throw Error(Errc::N2Violation, "(g,h,s) = " + detail::tuple_str({a, b, c}));
      }
  return sys;
}

template <class F>
struct CrossedProduct {
  Algebra<F> algebra;
  Gradation gradation;

  /// Basis index of e_i u_g.
  static std::size_t index(std::size_t dim_t, GroupElement g, std::size_t i) { return g * dim_t + i; }
};

/// T x_sigma^alpha G on the basis e_i u_g (index g*dim(T) + i) with
/// (a u_g)(b u_h) = a sigma_g(b) alpha(g,h) u_gh and the canonical gradation.
template <class F>
CrossedProduct<F> build_crossed_product(const CrossedSystem<F>& sys) {
  const auto& T = sys.T;
  const auto& f = T.field();
  const auto d = T.dim(), n = sys.G.order();
  std::vector<StructureConstant<F>> mult;
  for (std::size_t g = 0; g < n; ++g)
    for (std::size_t h = 0; h < n; ++h) {
      const auto gh = sys.G.mul(g, h);
      for (std::size_t j = 0; j < d; ++j) {
        auto sb = sys.act(g, T.basis(j));
        for (std::size_t i = 0; i < d; ++i) {
          auto v = T.multiply(T.left_basis(i, sb), sys.alpha[g][h]);
          for (std::size_t k = 0; k < d; ++k)
            if (!f.is_zero(v[k])) mult.push_back({g * d + i, h * d + j, gh * d + k, v[k]});
        }
      }
    }
  Vec<F> unit(d * n, f.zero());
  for (std::size_t i = 0; i < d; ++i) unit[sys.G.identity() * d + i] = T.unit()[i];
  Algebra<F> r(f, d * n, std::move(mult), std::move(unit));
  std::vector<GroupElement> deg(d * n);
  for (std::size_t x = 0; x < d * n; ++x) deg[x] = x / d;
  auto [grad, report] = validate_gradation(r, sys.G, deg);
  if (!report.strong) throw Error(Errc::ValidationError, "crossed product gradation is not strong");
  auto nuc = nucleus_and_center(r).nucleus;
  for (std::size_t g = 0; g < n; ++g) {
    Vec<F> u(d * n, f.zero());
    for (std::size_t i = 0; i < d; ++i) u[g * d + i] = T.unit()[i];
    if (!nuc.contains(u) || !two_sided_inverse(r, u))
      throw Error(Errc::ValidationError, "u_g is not a nuclear unit at g = " + std::to_string(g));
  }
  return {std::move(r), std::move(grad)};
}

template <class F>
struct RecognizedSystem {
  CrossedSystem<F> system;
  std::vector<Vec<F>> units;            // u_g in R coordinates
  std::vector<std::size_t> t_basis;     // basis indices of R spanning R_e = T
};

/// Reads a graded algebra with a nuclear unit in every component as a crossed
/// product: T = R_e, sigma_g(a) = u_g a u_g^-1, alpha(g,h) = u_g u_h u_gh^-1,
/// with u_e = 1. Missing units are found by projective search per component.
template <class F>
RecognizedSystem<F> recognize_crossed_system(const Algebra<F>& r, const Gradation& grad,
                                             std::optional<std::vector<Vec<F>>> units = std::nullopt,
                                             const SearchOptions& opt = {}) {
  const auto& f = r.field();
  const auto& G = grad.group();
  const auto n = G.order();
  const auto& tb = grad.component(G.identity());
  const auto d = tb.size();
  auto restrict = [&](const Vec<F>& x) {
    Vec<F> y(d);
    for (std::size_t c = 0; c < d; ++c) y[c] = x[tb[c]];
    return y;
  };
  std::vector<StructureConstant<F>> tm;
  for (std::size_t a = 0; a < d; ++a)
    for (std::size_t b = 0; b < d; ++b) {
      auto p = restrict(r.basis_product(tb[a], tb[b]));
      for (std::size_t c = 0; c < d; ++c)
        if (!f.is_zero(p[c])) tm.push_back({a, b, c, p[c]});
    }
  Algebra<F> t(f, d, std::move(tm), restrict(r.unit()));

  auto nuc = nucleus_and_center(r).nucleus;
  std::vector<Vec<F>> u(n), uinv(n);
  for (std::size_t g = 0; g < n; ++g) {
    std::optional<Vec<F>> cand;
    if (g == G.identity()) {
      cand = r.unit();
    } else if (units) {
      cand = units->at(g);
      if (grad.degree_of(f, *cand) != std::optional<GroupElement>(g) || !nuc.contains(*cand) ||
          !two_sided_inverse(r, *cand))
        throw Error(Errc::NoNuclearUnit, "supplied u_g is not a homogeneous nuclear unit at g = " + std::to_string(g));
    } else {
      std::vector<Vec<F>> basis;
      for (auto i : grad.component(g)) basis.push_back(r.basis(i));
      SearchOptions exact = opt;
      exact.mode = SearchMode::Exact;
      auto res = search_span(f, r.dim(), basis, exact, [&](const Vec<F>& x) {
        return nuc.contains(x) && two_sided_inverse(r, x).has_value();
      });
      cand = res.found;
    }
    if (!cand) throw Error(Errc::NoNuclearUnit, "g = " + G.label(g));
    u[g] = *cand;
    uinv[g] = *two_sided_inverse(r, u[g]);
  }
  std::vector<Matrix<F>> sigma(n, Matrix<F>(d, Vec<F>(d)));
  for (std::size_t g = 0; g < n; ++g)
    for (std::size_t c = 0; c < d; ++c) {
      auto img = restrict(r.multiply(r.multiply(u[g], r.basis(tb[c])), uinv[g]));
      for (std::size_t row = 0; row < d; ++row) sigma[g][row][c] = img[row];
    }
  std::vector<std::vector<Vec<F>>> alpha(n, std::vector<Vec<F>>(n));
  for (std::size_t g = 0; g < n; ++g)
    for (std::size_t h = 0; h < n; ++h) alpha[g][h] = restrict(r.multiply(r.multiply(u[g], u[h]), uinv[G.mul(g, h)]));
  auto sys = validate_crossed_system(std::move(t), G, std::move(sigma), std::move(alpha));
  return {std::move(sys), std::move(u), tb};
}

/// Whether t_c u_g -> t_c * u_g is an algebra isomorphism from the rebuilt
/// crossed product onto R.
template <class F>
bool recognition_reproduces(const Algebra<F>& r, const RecognizedSystem<F>& rec) {
  const auto& f = r.field();
  auto built = build_crossed_product(rec.system);
  const auto d = rec.t_basis.size();
  const auto n = rec.system.G.order();
  std::vector<Vec<F>> phi(d * n);
  for (std::size_t g = 0; g < n; ++g)
    for (std::size_t c = 0; c < d; ++c) phi[g * d + c] = r.multiply(r.basis(rec.t_basis[c]), rec.units[g]);
  if (Subspace<F>::spanned_by(f, r.dim(), phi).rank() != r.dim()) return false;
  auto map = [&](const Vec<F>& x) {
    Vec<F> y(r.dim(), f.zero());
    for (std::size_t i = 0; i < x.size(); ++i) axpy(f, y, x[i], phi[i]);
    return y;
  };
  for (std::size_t a = 0; a < built.algebra.dim(); ++a)
    for (std::size_t b = 0; b < built.algebra.dim(); ++b)
      if (!equal(f, map(built.algebra.basis_product(a, b)), r.multiply(phi[a], phi[b]))) return false;
  return true;
}

/// Simple with respect to ideals invariant under every map in `maps`.
template <class F>
SimplicityVerdict<F> invariant_simplicity(const Algebra<F>& t, const std::vector<Matrix<F>>& maps,
                                          const SearchOptions& opt = {}) {
  return simplicity_search(t.field(), t.dim(), standard_basis(t.field(), t.dim()), opt, [&](const Vec<F>& x) {
    return closure(t, std::span<const Vec<F>>(&x, 1), std::span<const Matrix<F>>(maps));
  });
}

/// No G-invariant ideals besides {0} and T.
template <class F>
SimplicityVerdict<F> is_G_simple(const Algebra<F>& t, const std::vector<Matrix<F>>& sigma,
                                 const SearchOptions& opt = {}) {
  if constexpr (!F::finite)
    if (opt.mode != SearchMode::Randomized) throw Error(Errc::ExactModeUnavailable, "G-simplicity over Q");
  return invariant_simplicity(t, sigma, opt);
}

template <class F>
struct CrossedCenter {
  Subspace<F> center;             // in crossed-product coordinates
  Subspace<F> fixed_center;       // Z(T)^G in T coordinates
};

/// Center of T x_sigma^alpha G from the coefficient conditions
///   s t_g = t_g sigma_g(s)                                   for basis s of T,
///   t_{hgh^-1} = sigma_h(t_g) alpha(h,g) alpha(hgh^-1,h)^-1,
///   t_g in N(T),
/// plus Z(T)^G = Z(T) intersected with the common fixed space of sigma.
template <class F>
CrossedCenter<F> crossed_center(const CrossedSystem<F>& sys) {
  const auto& T = sys.T;
  const auto& f = T.field();
  const auto& G = sys.G;
  const auto d = T.dim(), n = G.order(), total = d * n;
  Subspace<F> rows(f, total);
  auto put = [&](const std::vector<Vec<F>>& cols_by_unknown, const std::vector<std::size_t>& unknowns) {
    for (std::size_t m = 0; m < d; ++m) {
      Vec<F> row(total, f.zero());
      for (std::size_t u = 0; u < unknowns.size(); ++u)
        row[unknowns[u]] = f.add(row[unknowns[u]], cols_by_unknown[u][m]);
      rows.insert(std::move(row));
    }
  };
  for (std::size_t g = 0; g < n; ++g) {
    std::vector<std::size_t> unknowns(d);
    for (std::size_t i = 0; i < d; ++i) unknowns[i] = g * d + i;
    for (std::size_t a = 0; a < d; ++a) {
      auto sa = sys.act(g, T.basis(a));
      std::vector<Vec<F>> cols(d);
      for (std::size_t i = 0; i < d; ++i) cols[i] = sub(f, T.basis_product(a, i), T.multiply(T.basis(i), sa));
      put(cols, unknowns);
    }
  }
  for (std::size_t g = 0; g < n; ++g)
    for (std::size_t h = 0; h < n; ++h) {
      const auto k = G.conjugate(h, g);
      std::vector<Vec<F>> cols;
      std::vector<std::size_t> unknowns;
      for (std::size_t i = 0; i < d; ++i) {
        cols.push_back(T.basis(i));
        unknowns.push_back(k * d + i);
        auto v = T.multiply(T.multiply(sys.act(h, T.basis(i)), sys.alpha[h][g]), sys.alpha_inverse[k][h]);
        cols.push_back(scale(f, f.neg(f.one()), v));
        unknowns.push_back(g * d + i);
      }
      put(cols, unknowns);
    }
  auto nt = nucleus_and_center(T);
  auto not_nuclear = nt.nucleus.annihilator();
  for (std::size_t g = 0; g < n; ++g)
    for (const auto& w : not_nuclear.basis()) {
      Vec<F> row(total, f.zero());
      for (std::size_t i = 0; i < d; ++i) row[g * d + i] = w[i];
      rows.insert(std::move(row));
    }

  Subspace<F> fixed_rows = nt.center.annihilator();
  for (std::size_t g = 0; g < n; ++g)
    for (std::size_t r = 0; r < d; ++r) {
      Vec<F> row = sys.sigma[g][r];
      row[r] = f.sub(row[r], f.one());
      fixed_rows.insert(std::move(row));
    }
  return {rows.annihilator(), fixed_rows.annihilator()};
}

}  // namespace gradix
