#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "gradix/error.hpp"
#include "gradix/field.hpp"

namespace gradix {

template <class F>
using Vec = std::vector<typename F::value_type>;

/// Row-major matrix; a matrix M acts on coordinate columns, so column j of M
/// holds the image of the j-th basis vector.
template <class F>
using Matrix = std::vector<Vec<F>>;

template <class F>
Vec<F> zero_vector(const F& f, std::size_t n) {
  return Vec<F>(n, f.zero());
}

template <class F>
Vec<F> unit_vector(const F& f, std::size_t n, std::size_t i) {
  Vec<F> v(n, f.zero());
  v[i] = f.one();
  return v;
}

template <class F>
bool is_zero(const F& f, const Vec<F>& v) {
  return std::all_of(v.begin(), v.end(), [&](const auto& a) { return f.is_zero(a); });
}

template <class F>
bool equal(const F& f, const Vec<F>& a, const Vec<F>& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (!f.equal(a[i], b[i])) return false;
  return true;
}

template <class F>
Vec<F> add(const F& f, const Vec<F>& a, const Vec<F>& b) {
  Vec<F> r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = f.add(a[i], b[i]);
  return r;
}

template <class F>
Vec<F> sub(const F& f, const Vec<F>& a, const Vec<F>& b) {
  Vec<F> r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = f.sub(a[i], b[i]);
  return r;
}

template <class F>
Vec<F> scale(const F& f, const typename F::value_type& s, const Vec<F>& a) {
  Vec<F> r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = f.mul(s, a[i]);
  return r;
}

// a += s * b
template <class F>
void axpy(const F& f, Vec<F>& a, const typename F::value_type& s, const Vec<F>& b) {
  if (f.is_zero(s)) return;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (!f.is_zero(b[i])) a[i] = f.add(a[i], f.mul(s, b[i]));
}

template <class F>
Matrix<F> identity_matrix(const F& f, std::size_t n) {
  Matrix<F> m(n, Vec<F>(n, f.zero()));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = f.one();
  return m;
}

template <class F>
bool is_identity(const F& f, const Matrix<F>& m) {
  for (std::size_t r = 0; r < m.size(); ++r)
    for (std::size_t c = 0; c < m[r].size(); ++c)
      if (!f.equal(m[r][c], r == c ? f.one() : f.zero())) return false;
  return true;
}

template <class F>
bool equal(const F& f, const Matrix<F>& a, const Matrix<F>& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t r = 0; r < a.size(); ++r)
    if (!equal(f, a[r], b[r])) return false;
  return true;
}

template <class F>
Vec<F> apply(const F& f, const Matrix<F>& m, const Vec<F>& x) {
  Vec<F> y(m.size(), f.zero());
  for (std::size_t r = 0; r < m.size(); ++r) {
    auto acc = f.zero();
    for (std::size_t c = 0; c < x.size(); ++c)
      if (!f.is_zero(x[c]) && !f.is_zero(m[r][c])) acc = f.add(acc, f.mul(m[r][c], x[c]));
    y[r] = acc;
  }
  return y;
}

template <class F>
Matrix<F> multiply(const F& f, const Matrix<F>& a, const Matrix<F>& b) {
  const std::size_t n = a.size(), k = b.size(), m = b.empty() ? 0 : b[0].size();
  Matrix<F> c(n, Vec<F>(m, f.zero()));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t l = 0; l < k; ++l) {
      if (f.is_zero(a[i][l])) continue;
      for (std::size_t j = 0; j < m; ++j)
        if (!f.is_zero(b[l][j])) c[i][j] = f.add(c[i][j], f.mul(a[i][l], b[l][j]));
    }
  return c;
}

/// A linear subspace of F^n kept in fully reduced row echelon form, so that
/// two subspaces are equal exactly when their row lists are equal.
template <class F>
class Subspace {
 public:
  using value_type = typename F::value_type;

  Subspace(F field, std::size_t ambient) : field_(std::move(field)), ambient_(ambient) {}

  static Subspace full(const F& f, std::size_t n) {
    Subspace s(f, n);
    for (std::size_t i = 0; i < n; ++i) {
      s.rows_.push_back(unit_vector(f, n, i));
      s.pivots_.push_back(i);
    }
    return s;
  }

  template <class Range>
  static Subspace spanned_by(const F& f, std::size_t n, const Range& vectors) {
    Subspace s(f, n);
    for (const auto& v : vectors) s.insert(v);
    return s;
  }
  static Subspace spanned_by(const F& f, std::size_t n, std::initializer_list<Vec<F>> vectors) {
    return spanned_by<std::initializer_list<Vec<F>>>(f, n, vectors);
  }

  const F& field() const { return field_; }
  std::size_t ambient_dim() const { return ambient_; }
  std::size_t rank() const { return rows_.size(); }
  bool is_zero() const { return rows_.empty(); }
  bool is_full() const { return rows_.size() == ambient_; }
  const std::vector<Vec<F>>& basis() const { return rows_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }

  void reduce_in_place(Vec<F>& v) const {
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      const auto& c = v[pivots_[r]];
      if (!field_.is_zero(c)) axpy(field_, v, field_.neg(c), rows_[r]);
    }
  }

  Vec<F> reduce(Vec<F> v) const {
    reduce_in_place(v);
    return v;
  }

  bool contains(const Vec<F>& v) const {
    check_size(v);
    return gradix::is_zero(field_, reduce(v));
  }

  /// Adds v to the span. Returns true when the rank grew.
  bool insert(Vec<F> v) {
    check_size(v);
    reduce_in_place(v);
    return insert_reduced(std::move(v));
  }

  /// Like insert, but v must already be reduced against this subspace.
  bool insert_reduced(Vec<F> v) {
    std::size_t lead = 0;
    while (lead < ambient_ && field_.is_zero(v[lead])) ++lead;
    if (lead == ambient_) return false;
    if (!field_.is_one(v[lead])) v = scale(field_, field_.inv(v[lead]), v);
    for (auto& row : rows_)
      if (!field_.is_zero(row[lead])) axpy(field_, row, field_.neg(row[lead]), v);
    auto pos = std::lower_bound(pivots_.begin(), pivots_.end(), lead) - pivots_.begin();
    pivots_.insert(pivots_.begin() + pos, lead);
    rows_.insert(rows_.begin() + pos, std::move(v));
    return true;
  }

  /// Coefficients of v with respect to basis(); v must lie in the subspace.
  Vec<F> coordinates(const Vec<F>& v) const {
    Vec<F> c(rows_.size());
    for (std::size_t r = 0; r < rows_.size(); ++r) c[r] = v[pivots_[r]];
    return c;
  }

  /// {x : <row, x> = 0 for every basis row}.
  Subspace annihilator() const {
    Subspace out(field_, ambient_);
    std::vector<bool> is_pivot(ambient_, false);
    for (auto p : pivots_) is_pivot[p] = true;
    for (std::size_t free = 0; free < ambient_; ++free) {
      if (is_pivot[free]) continue;
      Vec<F> x(ambient_, field_.zero());
      x[free] = field_.one();
      for (std::size_t r = 0; r < rows_.size(); ++r) x[pivots_[r]] = field_.neg(rows_[r][free]);
      out.insert(std::move(x));
    }
    return out;
  }

  Subspace sum(const Subspace& other) const {
    Subspace out = *this;
    for (const auto& v : other.rows_) out.insert(v);
    return out;
  }

  Subspace intersect(const Subspace& other) const {
    return annihilator().sum(other.annihilator()).annihilator();
  }

  bool is_subspace_of(const Subspace& other) const {
    return std::all_of(rows_.begin(), rows_.end(), [&](const auto& v) { return other.contains(v); });
  }

  friend bool operator==(const Subspace& a, const Subspace& b) {
    if (a.ambient_ != b.ambient_ || a.pivots_ != b.pivots_) return false;
    for (std::size_t r = 0; r < a.rows_.size(); ++r)
      if (!equal(a.field_, a.rows_[r], b.rows_[r])) return false;
    return true;
  }

 private:
  void check_size(const Vec<F>& v) const {
    if (v.size() != ambient_)
      throw Error(Errc::DimensionMismatch, "vector of length " + std::to_string(v.size()) +
                                               " in F^" + std::to_string(ambient_));
  }

  F field_;
  std::size_t ambient_;
  std::vector<Vec<F>> rows_;
  std::vector<std::size_t> pivots_;
};

/// Null space {x : M x = 0} of a matrix given by its rows.
template <class F>
Subspace<F> kernel(const F& f, std::size_t ncols, const std::vector<Vec<F>>& rows) {
  return Subspace<F>::spanned_by(f, ncols, rows).annihilator();
}

/// Some x with M x = b, or nothing when the system is inconsistent.
template <class F>
std::optional<Vec<F>> solve(const F& f, std::size_t ncols, const std::vector<Vec<F>>& rows,
                            const Vec<F>& rhs) {
  Subspace<F> aug(f, ncols + 1);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    Vec<F> row = rows[r];
    row.push_back(rhs[r]);
    aug.insert(std::move(row));
  }
  Vec<F> x(ncols, f.zero());
  for (std::size_t r = 0; r < aug.rank(); ++r) {
    auto p = aug.pivots()[r];
    if (p == ncols) return std::nullopt;
    x[p] = aug.basis()[r][ncols];
  }
  return x;
}

template <class F>
std::optional<Matrix<F>> inverse(const F& f, const Matrix<F>& m) {
  const std::size_t n = m.size();
  Subspace<F> aug(f, 2 * n);
  for (std::size_t r = 0; r < n; ++r) {
    Vec<F> row = m[r];
    row.resize(2 * n, f.zero());
    row[n + r] = f.one();
    aug.insert(std::move(row));
  }
  for (std::size_t r = 0; r < n; ++r)
    if (r >= aug.rank() || aug.pivots()[r] != r) return std::nullopt;
  Matrix<F> inv(n, Vec<F>(n));
  for (std::size_t r = 0; r < n; ++r)
    std::copy(aug.basis()[r].begin() + n, aug.basis()[r].end(), inv[r].begin());
  return inv;
}

}  // namespace gradix
