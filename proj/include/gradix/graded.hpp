#pragma once

#include <algorithm>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "gradix/algebra.hpp"
#include "gradix/groups.hpp"
#include "gradix/magma.hpp"

namespace gradix {

/// Assignment of a group degree to every basis vector.
class Gradation {
 public:
  Gradation(FiniteGroup group, std::vector<GroupElement> degree)
      : group_(std::move(group)), degree_(std::move(degree)) {
    for (auto d : degree_)
      if (d >= group_.order()) throw Error(Errc::ValidationError, "degree out of range of the grading group");
    components_.assign(group_.order(), {});
    for (std::size_t i = 0; i < degree_.size(); ++i) components_[degree_[i]].push_back(i);
  }

  const FiniteGroup& group() const { return group_; }
  const std::vector<GroupElement>& degrees() const { return degree_; }
  GroupElement degree(std::size_t basis_index) const { return degree_[basis_index]; }
  std::size_t dim() const { return degree_.size(); }

  /// Basis indices spanning R_g.
  const std::vector<std::size_t>& component(GroupElement g) const { return components_[g]; }

  /// Group elements with R_g != 0, in increasing order.
  std::vector<GroupElement> support() const {
    std::vector<GroupElement> s;
    for (std::size_t g = 0; g < components_.size(); ++g)
      if (!components_[g].empty()) s.push_back(g);
    return s;
  }

  /// Degree of a nonzero homogeneous element; nullopt for zero or
  /// inhomogeneous input.
  template <class F>
  std::optional<GroupElement> degree_of(const F& f, const Vec<F>& x) const {
    std::optional<GroupElement> d;
    for (std::size_t i = 0; i < x.size(); ++i) {
      if (f.is_zero(x[i])) continue;
      if (d && *d != degree_[i]) return std::nullopt;
      d = degree_[i];
    }
    return d;
  }

  template <class F>
  bool is_homogeneous(const F& f, const Vec<F>& x) const {
    return is_zero(f, x) || degree_of(f, x).has_value();
  }

 private:
  FiniteGroup group_;
  std::vector<GroupElement> degree_;
  std::vector<std::vector<std::size_t>> components_;
};

struct GradedReport {
  std::vector<GroupElement> support;
  bool strong = false;
  std::optional<bool> faithful;
};

template <class F>
Subspace<F> component_subspace(const Algebra<F>& r, const Gradation& grad, GroupElement g) {
  Subspace<F> s(r.field(), r.dim());
  for (auto i : grad.component(g)) s.insert(r.basis(i));
  return s;
}

/// R_H = sum of R_g over g in H.
template <class F>
Subspace<F> components_subspace(const Algebra<F>& r, const Gradation& grad, const Subgroup& h) {
  Subspace<F> s(r.field(), r.dim());
  for (auto g : h.members)
    for (auto i : grad.component(g)) s.insert(r.basis(i));
  return s;
}

namespace detail {

// Whether x -> (x e_j)_{j in comp h} (or (e_j x)) is injective on R_g.
template <class F>
bool acts_faithfully(const Algebra<F>& r, const Gradation& grad, GroupElement g, GroupElement h, bool on_left) {
  const auto& cg = grad.component(g);
  Subspace<F> rows(r.field(), cg.size());
  for (auto j : grad.component(h))
    for (std::size_t m = 0; m < r.dim(); ++m) {
      Vec<F> row(cg.size());
      for (std::size_t c = 0; c < cg.size(); ++c) {
        const auto& p = on_left ? r.basis_product(cg[c], j) : r.basis_product(j, cg[c]);
        row[c] = p[m];
      }
      rows.insert(std::move(row));
      if (rows.is_full()) return true;
    }
  return rows.is_full();
}

}  // namespace detail

/// Checks that the degrees define a gradation (structure constants respect
/// degrees, 1 lies in R_e). The report covers the support and strongness too.
/// Faithfulness is decided exactly as injectivity of the maps r -> r R_h and
/// r -> R_h r on each R_g.
template <class F>
std::pair<Gradation, GradedReport> validate_gradation(const Algebra<F>& r, const FiniteGroup& group,
                                                      const std::vector<GroupElement>& degrees) {
  if (degrees.size() != r.dim())
    throw Error(Errc::DimensionMismatch, "gradation has " + std::to_string(degrees.size()) + " degrees for dim " +
                                             std::to_string(r.dim()));
  Gradation grad(group, degrees);
  const auto& g = grad.group();
  // a compatible tensor forces 1 into R_e, so test the unit first for the sharper error
  for (std::size_t i = 0; i < r.dim(); ++i)
    if (!r.field().is_zero(r.unit()[i]) && degrees[i] != g.identity())
      throw Error(Errc::UnitNotInIdentityComponent, "unit has a coordinate at basis index " + std::to_string(i));
  for (const auto& e : r.entries())
    if (degrees[e.k] != g.mul(degrees[e.i], degrees[e.j]))
      throw Error(Errc::IncompatibleTensor, "(i,j,k) = (" + std::to_string(e.i) + "," + std::to_string(e.j) + "," +
                                                std::to_string(e.k) + ")");

  GradedReport rep;
  rep.support = grad.support();
  rep.strong = true;
  bool faithful = true;
  for (auto a : rep.support)
    for (auto b : rep.support) {
      Subspace<F> prods(r.field(), r.dim());
      for (auto i : grad.component(a))
        for (auto j : grad.component(b)) prods.insert(r.basis_product(i, j));
      if (prods.rank() != grad.component(g.mul(a, b)).size()) rep.strong = false;
      if (faithful)
        faithful = detail::acts_faithfully(r, grad, a, b, true) && detail::acts_faithfully(r, grad, a, b, false);
    }
  rep.faithful = faithful;
  return {std::move(grad), std::move(rep)};
}

template <class F>
bool is_graded_subspace(const Algebra<F>& r, const Gradation& grad, const Subspace<F>& s) {
  Subspace<F> sum(r.field(), r.dim());
  for (auto g : grad.support()) sum = sum.sum(s.intersect(component_subspace(r, grad, g)));
  return sum == s;
}

/// Ideal generated by homogeneous elements, tracked component by component.
template <class F>
Subspace<F> graded_ideal_closure(const Algebra<F>& r, const Gradation& grad, std::span<const Vec<F>> generators) {
  const auto& f = r.field();
  const auto& g = grad.group();
  std::vector<Subspace<F>> parts(g.order(), Subspace<F>(f, r.dim()));
  struct Item {
    Vec<F> v;
    GroupElement deg;
  };
  std::vector<Item> queue;
  auto offer = [&](Vec<F> v, GroupElement d) {
    parts[d].reduce_in_place(v);
    if (is_zero(f, v)) return;
    queue.push_back({v, d});
    parts[d].insert_reduced(std::move(v));
  };
  for (const auto& a : generators) {
    r.check(a);
    if (is_zero(f, a)) continue;
    auto d = grad.degree_of(f, a);
    if (!d) throw Error(Errc::NotHomogeneous, "generator is not homogeneous");
    offer(a, *d);
  }
  while (!queue.empty()) {
    Item it = std::move(queue.back());
    queue.pop_back();
    for (std::size_t i = 0; i < r.dim(); ++i) {
      offer(r.left_basis(i, it.v), g.mul(grad.degree(i), it.deg));
      offer(r.right_basis(it.v, i), g.mul(it.deg, grad.degree(i)));
    }
  }
  Subspace<F> out(f, r.dim());
  for (const auto& p : parts) out = out.sum(p);
  return out;
}

template <class F>
Subspace<F> graded_ideal_closure(const Algebra<F>& r, const Gradation& grad, const Vec<F>& generator) {
  return graded_ideal_closure(r, grad, std::span<const Vec<F>>(&generator, 1));
}

/// Word-span ideal oracle restricted to homogeneous generators.
template <class F>
WordSpan<F> graded_word_ideal_span(const Algebra<F>& r, const Gradation& grad, const std::vector<Vec<F>>& generators,
                                   std::size_t max_len) {
  for (const auto& a : generators)
    if (!grad.is_homogeneous(r.field(), a)) throw Error(Errc::NotHomogeneous, "generator is not homogeneous");
  return word_ideal_span(r, generators, max_len);
}

template <class F>
struct GradedSimplicityVerdict {
  bool graded_simple = false;
  std::optional<Vec<F>> witness;  // homogeneous generator of a proper graded ideal
  VerdictMode mode = VerdictMode::Exact;
  std::uint64_t points_checked = 0;
};

/// Graded simple iff every nonzero homogeneous element generates R. Walks the
/// support components in increasing group-element order.
template <class F>
GradedSimplicityVerdict<F> is_graded_simple(const Algebra<F>& r, const Gradation& grad, const SearchOptions& opt = {}) {
  const auto& f = r.field();
  const auto support = grad.support();
  SearchOptions per = opt;
  if constexpr (F::finite) {
    if (opt.mode != SearchMode::Randomized) {
      std::uint64_t total = 0;
      for (auto g : support) total += projective_count(*f.size(), grad.component(g).size());
      if (total > opt.budget)
        throw Error(Errc::BudgetExceeded, std::to_string(total) + " homogeneous projective points exceed budget " +
                                              std::to_string(opt.budget));
      per.budget = std::numeric_limits<std::uint64_t>::max();
    }
  }
  GradedSimplicityVerdict<F> out;
  out.graded_simple = true;
  for (auto g : support) {
    std::vector<Vec<F>> basis;
    for (auto i : grad.component(g)) basis.push_back(r.basis(i));
    auto res = search_span(f, r.dim(), basis, per,
                           [&](const Vec<F>& x) { return !graded_ideal_closure(r, grad, x).is_full(); });
    out.mode = res.mode;
    out.points_checked += res.points_checked;
    if (res.found) {
      out.graded_simple = false;
      out.witness = std::move(res.found);
      break;
    }
    per.seed = per.seed * 6364136223846793005ULL + 1442695040888963407ULL;
  }
  return out;
}

/// Regrades by G/N: each basis vector gets the coset of its degree.
inline Gradation coarsen(const Gradation& grad, const Subgroup& n) {
  auto q = quotient_group(grad.group(), n);
  std::vector<GroupElement> deg(grad.dim());
  for (std::size_t i = 0; i < grad.dim(); ++i) deg[i] = q.projection[grad.degree(i)];
  return Gradation(std::move(q.group), std::move(deg));
}

/// R * (I cap R_{Z(G)} cap Z(R)): the span of all products r s with s central,
/// supported on central group degrees, and lying in I.
template <class F>
Subspace<F> central_generation(const Algebra<F>& r, const Gradation& grad, const Subspace<F>& ideal) {
  auto zr = nucleus_and_center(r).center;
  auto rz = components_subspace(r, grad, center(grad.group()));
  auto s = ideal.intersect(rz).intersect(zr);
  Subspace<F> out(r.field(), r.dim());
  for (const auto& v : s.basis())
    for (std::size_t i = 0; i < r.dim(); ++i) out.insert(r.left_basis(i, v));
  return out;
}

template <class F>
struct CentralSimplicityReport {
  bool hypercentral = false;
  bool graded_simple = false;
  bool center_is_field = false;
  bool simple = false;
  bool consistent = false;
  std::optional<Vec<F>> graded_witness;
  std::optional<Vec<F>> simple_witness;
  Subspace<F> center;
};

/// Computes hypercentrality, graded simplicity, whether Z(R) is a field and
/// (by brute force) simplicity, then checks
/// hypercentral => (simple <=> graded simple and Z(R) a field).
template <class F>
CentralSimplicityReport<F> central_simplicity_verdict(const Algebra<F>& r, const Gradation& grad, const SearchOptions& opt = {}) {
  if constexpr (!F::finite)
    throw Error(Errc::ExactModeUnavailable, "graded simplicity verdict needs a finite field");
  SearchOptions exact = opt;
  exact.mode = SearchMode::Exact;
  auto cs = central_series(grad.group());
  auto gs = is_graded_simple(r, grad, exact);
  auto z = nucleus_and_center(r).center;
  auto zfield = is_field_subspace(r, z, exact);
  auto s = is_simple(r, exact);
  CentralSimplicityReport<F> rep{cs.hypercentral, gs.graded_simple, zfield.value_or(false), s.simple, false,
                         gs.witness, s.witness, std::move(z)};
  rep.consistent = !rep.hypercentral || (rep.simple == (rep.graded_simple && rep.center_is_field));
  return rep;
}

}  // namespace gradix
