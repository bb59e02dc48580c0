#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <limits>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <tuple>
#include <vector>

#include "gradix/error.hpp"
#include "gradix/field.hpp"
#include "gradix/linalg.hpp"

namespace gradix {

/// One nonzero structure constant: e_i * e_j contributes c * e_k.
template <class F>
struct StructureConstant {
  std::size_t i, j, k;
  typename F::value_type c;
};

/// A finite-dimensional unital (not necessarily associative) algebra over F
/// given by a sparse structure-constant tensor, with an optional involution.
template <class F>
class Algebra {
 public:
  using field_type = F;
  using value_type = typename F::value_type;

  Algebra(F field, std::size_t dim, std::vector<StructureConstant<F>> mult, Vec<F> unit,
          std::optional<Matrix<F>> involution = std::nullopt)
      : field_(std::move(field)), dim_(dim), unit_(std::move(unit)), involution_(std::move(involution)) {
    if (dim_ == 0) throw Error(Errc::ValidationError, "algebra dimension must be positive");
    if (unit_.size() != dim_) throw Error(Errc::DimensionMismatch, "unit has wrong length");
    canonicalize(std::move(mult));
    build_caches();
    check_unit();
    if (involution_) check_involution();
  }

  const F& field() const { return field_; }
  std::size_t dim() const { return dim_; }
  const Vec<F>& unit() const { return unit_; }
  const std::vector<StructureConstant<F>>& entries() const { return entries_; }
  const std::optional<Matrix<F>>& involution() const { return involution_; }
  bool has_involution() const { return involution_.has_value(); }

  Vec<F> zero() const { return zero_vector(field_, dim_); }
  Vec<F> basis(std::size_t i) const { return unit_vector(field_, dim_, i); }
  Vec<F> scalar(const value_type& s) const { return gradix::scale(field_, s, unit_); }

  /// e_i * e_j as a coordinate vector.
  const Vec<F>& basis_product(std::size_t i, std::size_t j) const { return table_[i * dim_ + j]; }

  Vec<F> multiply(const Vec<F>& x, const Vec<F>& y) const {
    check(x);
    check(y);
    Vec<F> out(dim_, field_.zero());
    for (std::size_t i = 0; i < dim_; ++i) {
      if (field_.is_zero(x[i])) continue;
      for (const auto& t : left_[i]) {
        if (field_.is_zero(y[t.other])) continue;
        out[t.k] = field_.add(out[t.k], field_.mul(field_.mul(x[i], y[t.other]), t.c));
      }
    }
    return out;
  }

  /// e_i * v
  Vec<F> left_basis(std::size_t i, const Vec<F>& v) const {
    Vec<F> out(dim_, field_.zero());
    for (const auto& t : left_[i])
      if (!field_.is_zero(v[t.other])) out[t.k] = field_.add(out[t.k], field_.mul(v[t.other], t.c));
    return out;
  }

  /// v * e_i
  Vec<F> right_basis(const Vec<F>& v, std::size_t i) const {
    Vec<F> out(dim_, field_.zero());
    for (const auto& t : right_[i])
      if (!field_.is_zero(v[t.other])) out[t.k] = field_.add(out[t.k], field_.mul(v[t.other], t.c));
    return out;
  }

  Vec<F> star(const Vec<F>& x) const {
    if (!involution_) throw Error(Errc::BadInvolution, "algebra has no involution");
    return apply(field_, *involution_, x);
  }

  Algebra with_involution(std::optional<Matrix<F>> inv) const {
    return Algebra(field_, dim_, entries_, unit_, std::move(inv));
  }

  void check(const Vec<F>& x) const {
    if (x.size() != dim_)
      throw Error(Errc::DimensionMismatch,
                  "element of length " + std::to_string(x.size()) + " in algebra of dim " + std::to_string(dim_));
  }

 private:
  struct Term {
    std::size_t other, k;
    value_type c;
  };

  void canonicalize(std::vector<StructureConstant<F>> mult) {
    for (const auto& e : mult)
      if (e.i >= dim_ || e.j >= dim_ || e.k >= dim_)
        throw Error(Errc::ValidationError, "structure constant index out of range (" + std::to_string(e.i) +
                                               "," + std::to_string(e.j) + "," + std::to_string(e.k) + ")");
    std::sort(mult.begin(), mult.end(), [](const auto& a, const auto& b) {
      return std::tie(a.i, a.j, a.k) < std::tie(b.i, b.j, b.k);
    });
    for (auto& e : mult) {
      if (!entries_.empty() && entries_.back().i == e.i && entries_.back().j == e.j && entries_.back().k == e.k)
        entries_.back().c = field_.add(entries_.back().c, e.c);
      else
        entries_.push_back(std::move(e));
    }
    std::erase_if(entries_, [&](const auto& e) { return field_.is_zero(e.c); });
  }

  void build_caches() {
    left_.assign(dim_, {});
    right_.assign(dim_, {});
    table_.assign(dim_ * dim_, zero_vector(field_, dim_));
    for (const auto& e : entries_) {
      left_[e.i].push_back({e.j, e.k, e.c});
      right_[e.j].push_back({e.i, e.k, e.c});
      table_[e.i * dim_ + e.j][e.k] = e.c;
    }
  }

  void check_unit() const {
    for (std::size_t i = 0; i < dim_; ++i) {
      auto b = basis(i);
      if (!equal(field_, multiply(unit_, b), b) || !equal(field_, multiply(b, unit_), b))
        throw Error(Errc::NotUnital, "unit law fails at basis index " + std::to_string(i));
    }
  }

  void check_involution() const {
    const auto& m = *involution_;
    if (m.size() != dim_ || std::any_of(m.begin(), m.end(), [&](const auto& r) { return r.size() != dim_; }))
      throw Error(Errc::DimensionMismatch, "involution matrix must be dim x dim");
    if (!is_identity(field_, gradix::multiply(field_, m, m)))
      throw Error(Errc::BadInvolution, "involution does not square to the identity");
    if (!equal(field_, star(unit_), unit_)) throw Error(Errc::BadInvolution, "involution does not fix 1");
    std::vector<Vec<F>> images(dim_);
    for (std::size_t i = 0; i < dim_; ++i) images[i] = star(basis(i));
    for (std::size_t i = 0; i < dim_; ++i)
      for (std::size_t j = 0; j < dim_; ++j)
        if (!equal(field_, star(basis_product(i, j)), multiply(images[j], images[i])))
          throw Error(Errc::BadInvolution,
                      "(e_i e_j)* != e_j* e_i* at (" + std::to_string(i) + "," + std::to_string(j) + ")");
  }

  F field_;
  std::size_t dim_;
  std::vector<StructureConstant<F>> entries_;
  Vec<F> unit_;
  std::optional<Matrix<F>> involution_;
  std::vector<std::vector<Term>> left_, right_;
  std::vector<Vec<F>> table_;
};

// ---- brackets ---------------------------------------------------------------

template <class F>
Vec<F> commutator(const Algebra<F>& r, const Vec<F>& x, const Vec<F>& y) {
  return sub(r.field(), r.multiply(x, y), r.multiply(y, x));
}

template <class F>
Vec<F> associator(const Algebra<F>& r, const Vec<F>& x, const Vec<F>& y, const Vec<F>& z) {
  return sub(r.field(), r.multiply(r.multiply(x, y), z), r.multiply(x, r.multiply(y, z)));
}

template <class F>
struct Brackets {
  Vec<F> commutator;
  Vec<F> associator;
};

template <class F>
Brackets<F> brackets(const Algebra<F>& r, const Vec<F>& x, const Vec<F>& y, const Vec<F>& z) {
  return {commutator(r, x, y), associator(r, x, y, z)};
}

/// (e_i, e_j, e_k) for all basis triples, indexed [(i*n + j)*n + k].
template <class F>
std::vector<Vec<F>> associator_table(const Algebra<F>& r) {
  const auto n = r.dim();
  const auto& f = r.field();
  std::vector<Vec<F>> out(n * n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        Vec<F> lhs = r.right_basis(r.basis_product(i, j), k);
        Vec<F> rhs = r.left_basis(i, r.basis_product(j, k));
        out[(i * n + j) * n + k] = sub(f, lhs, rhs);
      }
  return out;
}

template <class F>
bool is_associative(const Algebra<F>& r) {
  for (const auto& a : associator_table(r))
    if (!is_zero(r.field(), a)) return false;
  return true;
}

template <class F>
bool is_commutative(const Algebra<F>& r) {
  for (std::size_t i = 0; i < r.dim(); ++i)
    for (std::size_t j = i + 1; j < r.dim(); ++j)
      if (!equal(r.field(), r.basis_product(i, j), r.basis_product(j, i))) return false;
  return true;
}

// ---- nuclei, commuter, center ---------------------------------------------

template <class F>
struct NucleiAndCenter {
  Subspace<F> left, middle, right, nucleus, commuter, center;
};

namespace detail {

// Rows of the linear map x -> [values(x, ...)] where values for basis x = e_i
// are given by vectors image(i, q) for q in [0, count).
template <class F, class Image>
void add_constraint_rows(Subspace<F>& rows, const F& f, std::size_t n, std::size_t count, Image image) {
  std::vector<Vec<F>> cols(n);
  for (std::size_t q = 0; q < count; ++q) {
    for (std::size_t i = 0; i < n; ++i) cols[i] = image(i, q);
    for (std::size_t m = 0; m < n; ++m) {
      Vec<F> row(n);
      bool nonzero = false;
      for (std::size_t i = 0; i < n; ++i) {
        row[i] = cols[i][m];
        nonzero = nonzero || !f.is_zero(row[i]);
      }
      if (nonzero) rows.insert(std::move(row));
      if (rows.is_full()) return;
    }
  }
}

}  // namespace detail

/// The three one-sided nuclei and their intersections with the commuter. Each
/// is a kernel of an associator or commutator map.
template <class F>
NucleiAndCenter<F> nucleus_and_center(const Algebra<F>& r) {
  const auto n = r.dim();
  const auto& f = r.field();
  const auto assoc = associator_table(r);
  auto at = [&](std::size_t i, std::size_t j, std::size_t k) -> const Vec<F>& { return assoc[(i * n + j) * n + k]; };

  Subspace<F> lrows(f, n), mrows(f, n), rrows(f, n), crows(f, n);
  detail::add_constraint_rows(lrows, f, n, n * n, [&](std::size_t i, std::size_t q) { return at(i, q / n, q % n); });
  detail::add_constraint_rows(mrows, f, n, n * n, [&](std::size_t i, std::size_t q) { return at(q / n, i, q % n); });
  detail::add_constraint_rows(rrows, f, n, n * n, [&](std::size_t i, std::size_t q) { return at(q / n, q % n, i); });
  detail::add_constraint_rows(crows, f, n, n, [&](std::size_t i, std::size_t j) {
    return sub(f, r.basis_product(i, j), r.basis_product(j, i));
  });
  auto nrows = lrows.sum(mrows).sum(rrows);
  auto zrows = nrows.sum(crows);
  return {lrows.annihilator(), mrows.annihilator(), rrows.annihilator(),
          nrows.annihilator(), crows.annihilator(), zrows.annihilator()};
}

// ---- inverses -----------------------------------------------------------

/// s with r s = s r = 1, solved as one joint linear system.
template <class F>
std::optional<Vec<F>> two_sided_inverse(const Algebra<F>& r, const Vec<F>& x) {
  r.check(x);
  const auto n = r.dim();
  std::vector<Vec<F>> rows(2 * n, Vec<F>(n));
  for (std::size_t j = 0; j < n; ++j) {
    auto xe = r.right_basis(x, j);  // x e_j
    auto ex = r.left_basis(j, x);   // e_j x
    for (std::size_t m = 0; m < n; ++m) {
      rows[m][j] = xe[m];
      rows[n + m][j] = ex[m];
    }
  }
  Vec<F> rhs = r.unit();
  rhs.insert(rhs.end(), r.unit().begin(), r.unit().end());
  return solve(r.field(), n, rows, rhs);
}

// ---- closures ------------------------------------------------------------

/// Least subspace containing seeds, closed under multiplication by every basis
/// vector on both sides and under each extra linear map.
template <class F>
Subspace<F> closure(const Algebra<F>& r, std::span<const Vec<F>> seeds, std::span<const Matrix<F>> maps = {}) {
  const auto& f = r.field();
  Subspace<F> s(f, r.dim());
  std::vector<Vec<F>> queue;
  auto offer = [&](Vec<F> v) {
    s.reduce_in_place(v);
    if (gradix::is_zero(f, v)) return;
    queue.push_back(v);
    s.insert_reduced(std::move(v));
  };
  for (const auto& a : seeds) {
    r.check(a);
    offer(a);
  }
  while (!queue.empty() && !s.is_full()) {
    Vec<F> v = std::move(queue.back());
    queue.pop_back();
    for (std::size_t i = 0; i < r.dim() && !s.is_full(); ++i) {
      offer(r.left_basis(i, v));
      offer(r.right_basis(v, i));
    }
    for (const auto& m : maps) offer(apply(f, m, v));
  }
  return s;
}

/// Two-sided ideal generated by a set of elements.
template <class F>
Subspace<F> ideal_closure(const Algebra<F>& r, std::span<const Vec<F>> generators) {
  return closure(r, generators);
}

template <class F>
Subspace<F> ideal_closure(const Algebra<F>& r, const Vec<F>& generator) {
  return closure(r, std::span<const Vec<F>>(&generator, 1));
}

/// True when the subspace is a two-sided ideal.
template <class F>
bool is_ideal(const Algebra<F>& r, const Subspace<F>& s) {
  for (const auto& v : s.basis())
    for (std::size_t i = 0; i < r.dim(); ++i)
      if (!s.contains(r.left_basis(i, v)) || !s.contains(r.right_basis(v, i))) return false;
  return true;
}

// ---- element searches ------------------------------------------------------

enum class SearchMode { Auto, Exact, Randomized };
enum class VerdictMode { Exact, Randomized };

inline const char* to_string(VerdictMode m) { return m == VerdictMode::Exact ? "exact" : "randomized"; }

struct SearchOptions {
  SearchMode mode = SearchMode::Auto;
  std::uint64_t budget = 1'000'000;
  std::uint64_t trials = 1000;
  std::uint64_t seed = 0;
  long long coord_bound = 10;  // |coordinate| bound for random rational samples
};

/// Number of points of the projective space of k^n, saturating at UINT64_MAX.
inline std::uint64_t projective_count(std::uint64_t q, std::size_t n) {
  constexpr auto cap = std::numeric_limits<std::uint64_t>::max();
  std::uint64_t total = 0, power = 1;  // power = q^t
  for (std::size_t t = 0; t < n; ++t) {
    if (total > cap - power) return cap;
    total += power;
    if (t + 1 < n) {
      if (power > cap / q) return cap;
      power *= q;
    }
  }
  return total;
}

/// Visits one representative per projective point of k^n (k finite). The
/// representative has a 1 in its first nonzero coordinate; points are ordered
/// by the position of that 1 (position 0 first), then lexicographically on the
/// remaining coordinates. Stops early when fn returns true; returns the number
/// of points visited.
template <class F, class Fn>
std::uint64_t for_each_projective_point(const F& f, std::size_t n, Fn&& fn) {
  const std::uint64_t q = *f.size();
  std::uint64_t visited = 0;
  Vec<F> v(n, f.zero());
  for (std::size_t lead = 0; lead < n; ++lead) {
    std::fill(v.begin(), v.end(), f.zero());
    v[lead] = f.one();
    const std::size_t tail = n - 1 - lead;
    std::vector<std::uint64_t> digits(tail, 0);
    while (true) {
      ++visited;
      if (fn(static_cast<const Vec<F>&>(v))) return visited;
      bool wrapped = true;
      for (std::size_t pos = tail; pos-- > 0;) {
        if (++digits[pos] < q) {
          v[lead + 1 + pos] = f.element(digits[pos]);
          wrapped = false;
          break;
        }
        digits[pos] = 0;
        v[lead + 1 + pos] = f.zero();
      }
      if (wrapped) break;
    }
  }
  return visited;
}

template <class F>
struct SearchResult {
  std::optional<Vec<F>> found;  // first element satisfying the predicate
  VerdictMode mode = VerdictMode::Exact;
  std::uint64_t points_checked = 0;
};

/// Searches the nonzero elements of span(basis) for one satisfying pred.
/// Exact mode walks projective points (so pred must be invariant under
/// nonzero scaling); randomized mode samples random combinations.
template <class F, class Pred>
SearchResult<F> search_span(const F& f, std::size_t ambient, const std::vector<Vec<F>>& basis,
                            const SearchOptions& opt, Pred&& pred) {
  SearchResult<F> res;
  const std::size_t k = basis.size();
  auto combine = [&](const Vec<F>& coeff) {
    Vec<F> x(ambient, f.zero());
    for (std::size_t r = 0; r < k; ++r) axpy(f, x, coeff[r], basis[r]);
    return x;
  };
  bool exact = false;
  if (opt.mode == SearchMode::Exact || opt.mode == SearchMode::Auto) {
    if constexpr (!F::finite) {
      if (opt.mode == SearchMode::Exact)
        throw Error(Errc::ExactModeUnavailable, "exact enumeration requested over " + f.name());
    } else {
      exact = true;
      auto count = projective_count(*f.size(), k);
      if (count > opt.budget)
        throw Error(Errc::BudgetExceeded, std::to_string(count) + " projective points exceed budget " +
                                              std::to_string(opt.budget));
    }
  }
  if (k == 0) {
    res.mode = exact ? VerdictMode::Exact : VerdictMode::Randomized;
    return res;
  }
  if (exact) {
    res.mode = VerdictMode::Exact;
    if constexpr (F::finite) {
      res.points_checked = for_each_projective_point(f, k, [&](const Vec<F>& c) {
        auto x = combine(c);
        if (pred(x)) {
          res.found = std::move(x);
          return true;
        }
        return false;
      });
    }
    return res;
  }
  res.mode = VerdictMode::Randomized;
  std::mt19937_64 rng(opt.seed);
  for (std::uint64_t t = 0; t < opt.trials; ++t) {
    Vec<F> c(k);
    for (auto& a : c) a = f.random(rng, opt.coord_bound);
    if (is_zero(f, c)) continue;
    ++res.points_checked;
    auto x = combine(c);
    if (pred(x)) {
      res.found = std::move(x);
      break;
    }
  }
  return res;
}

template <class F>
std::vector<Vec<F>> standard_basis(const F& f, std::size_t n) {
  std::vector<Vec<F>> b;
  for (std::size_t i = 0; i < n; ++i) b.push_back(unit_vector(f, n, i));
  return b;
}

template <class F>
struct SimplicityVerdict {
  bool simple = false;
  std::optional<Vec<F>> witness;  // generates a proper nonzero ideal
  VerdictMode mode = VerdictMode::Exact;
  std::uint64_t points_checked = 0;
};

/// Simple iff the closure of every nonzero element is the whole space, using
/// closure_fn to produce the (possibly invariant) ideal of a single element.
template <class F, class ClosureFn>
SimplicityVerdict<F> simplicity_search(const F& f, std::size_t n, const std::vector<Vec<F>>& candidates_basis,
                                       const SearchOptions& opt, ClosureFn&& closure_fn) {
  auto res = search_span(f, n, candidates_basis, opt, [&](const Vec<F>& x) { return !closure_fn(x).is_full(); });
  return {!res.found.has_value(), res.found, res.mode, res.points_checked};
}

template <class F>
SimplicityVerdict<F> is_simple(const Algebra<F>& r, const SearchOptions& opt = {}) {
  return simplicity_search(r.field(), r.dim(), standard_basis(r.field(), r.dim()), opt,
                           [&](const Vec<F>& x) { return ideal_closure(r, x); });
}

/// Whether the subspace is a field under the algebra's product: it must hold
/// 1 and every nonzero element needs a two-sided inverse inside it. Over Q only
/// the one-dimensional case K*1 is decided.
template <class F>
std::optional<bool> is_field_subspace(const Algebra<F>& r, const Subspace<F>& s, const SearchOptions& opt = {}) {
  if (s.is_zero() || !s.contains(r.unit())) return false;
  if constexpr (!F::finite) {
    if (s.rank() == 1) return true;
    return std::nullopt;
  } else {
    for (const auto& a : s.basis())
      for (const auto& b : s.basis())
        if (!s.contains(r.multiply(a, b))) return false;
    SearchOptions exact = opt;
    exact.mode = SearchMode::Exact;
    auto res = search_span(r.field(), r.dim(), s.basis(), exact, [&](const Vec<F>& x) {
      auto inv = two_sided_inverse(r, x);
      return !inv || !s.contains(*inv);
    });
    return !res.found.has_value();
  }
}

}  // namespace gradix
