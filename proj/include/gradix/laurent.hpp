#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "gradix/algebra.hpp"
#include "gradix/crossed.hpp"

namespace gradix {

using Exponent = std::vector<long long>;

/// Finitely supported map from exponent vectors to nonzero coefficients.
template <class F>
using LaurentElement = std::map<Exponent, Vec<F>>;

/// Skew Laurent polynomial ring T[x_1^{+-1}, ..., x_n^{+-1}; sigma_1..sigma_n]
/// with pairwise commuting automorphisms and trivial cocycle.
template <class F>
class LaurentRing {
 public:
  static constexpr std::uint64_t order_search_cap = 10000;

  LaurentRing(Algebra<F> t, std::vector<Matrix<F>> sigma) : t_(std::move(t)), sigma_(std::move(sigma)) {
    const auto& f = t_.field();
    if (sigma_.empty()) throw Error(Errc::ValidationError, "rank must be positive");
    for (std::size_t i = 0; i < sigma_.size(); ++i)
      if (!is_automorphism(t_, sigma_[i])) throw Error(Errc::NotAutomorphism, "sigma_" + std::to_string(i + 1));
    for (std::size_t i = 0; i < sigma_.size(); ++i)
      for (std::size_t j = i + 1; j < sigma_.size(); ++j)
        if (!equal(f, multiply(f, sigma_[i], sigma_[j]), multiply(f, sigma_[j], sigma_[i])))
          throw Error(Errc::NonCommutingAutomorphisms, "sigma_" + std::to_string(i + 1) + ", sigma_" + std::to_string(j + 1));
    for (const auto& s : sigma_) {
      inverse_.push_back(*gradix::inverse(f, s));
      std::optional<std::uint64_t> ord;
      Matrix<F> p = s;
      for (std::uint64_t k = 1; k <= order_search_cap; ++k) {
        if (is_identity(f, p)) {
          ord = k;
          break;
        }
        p = multiply(f, p, s);
      }
      orders_.push_back(ord);
    }
  }

  const Algebra<F>& coefficients() const { return t_; }
  const F& field() const { return t_.field(); }
  std::size_t rank() const { return sigma_.size(); }
  const std::vector<Matrix<F>>& sigma() const { return sigma_; }
  /// Multiplicative order of each sigma_i; nullopt marks "infinite".
  const std::vector<std::optional<std::uint64_t>>& orders() const { return orders_; }
  bool periodic() const {
    return std::all_of(orders_.begin(), orders_.end(), [](const auto& o) { return o.has_value(); });
  }

  /// sigma^m = sigma_1^{m_1} o ... o sigma_n^{m_n}
  Matrix<F> power(const Exponent& m) const {
    const auto& f = field();
    check(m);
    Matrix<F> out = identity_matrix(f, t_.dim());
    for (std::size_t i = 0; i < rank(); ++i) {
      long long e = m[i];
      const Matrix<F>* base = &sigma_[i];
      if (orders_[i]) {
        auto o = static_cast<long long>(*orders_[i]);
        e = ((e % o) + o) % o;
      } else if (e < 0) {
        base = &inverse_[i];
        e = -e;
      }
      for (long long k = 0; k < e; ++k) out = multiply(f, out, *base);
    }
    return out;
  }

  Vec<F> act(const Exponent& m, const Vec<F>& a) const { return apply(field(), power(m), a); }

  void check(const Exponent& m) const {
    if (m.size() != rank()) throw Error(Errc::DimensionMismatch, "exponent of wrong rank");
  }

  LaurentElement<F> monomial(const Vec<F>& coeff, const Exponent& m) const {
    check(m);
    t_.check(coeff);
    LaurentElement<F> out;
    if (!is_zero(field(), coeff)) out.emplace(m, coeff);
    return out;
  }
  LaurentElement<F> one() const { return monomial(t_.unit(), Exponent(rank(), 0)); }
  LaurentElement<F> variable(std::size_t i, long long power = 1) const {
    Exponent m(rank(), 0);
    m[i] = power;
    return monomial(t_.unit(), m);
  }

 private:
  Algebra<F> t_;
  std::vector<Matrix<F>> sigma_, inverse_;
  std::vector<std::optional<std::uint64_t>> orders_;
};

template <class F>
LaurentElement<F> laurent_add(const LaurentRing<F>& ring, const LaurentElement<F>& a, const LaurentElement<F>& b) {
  const auto& f = ring.field();
  LaurentElement<F> out = a;
  for (const auto& [m, y] : b) {
    auto it = out.find(m);
    if (it == out.end()) {
      out.emplace(m, y);
    } else {
      it->second = add(f, it->second, y);
      if (is_zero(f, it->second)) out.erase(it);
    }
  }
  return out;
}

template <class F>
LaurentElement<F> laurent_sub(const LaurentRing<F>& ring, const LaurentElement<F>& a, const LaurentElement<F>& b) {
  const auto& f = ring.field();
  LaurentElement<F> neg;
  for (const auto& [m, y] : b) neg.emplace(m, scale(f, f.neg(f.one()), y));
  return laurent_add(ring, a, neg);
}

template <class F>
bool laurent_equal(const LaurentRing<F>& ring, const LaurentElement<F>& a, const LaurentElement<F>& b) {
  if (a.size() != b.size()) return false;
  for (auto ia = a.begin(), ib = b.begin(); ia != a.end(); ++ia, ++ib)
    if (ia->first != ib->first || !equal(ring.field(), ia->second, ib->second)) return false;
  return true;
}

/// (a x^m)(b x^k) = a sigma^m(b) x^{m+k}, extended bi-additively.
template <class F>
LaurentElement<F> laurent_multiply(const LaurentRing<F>& ring, const LaurentElement<F>& a, const LaurentElement<F>& b) {
  const auto& t = ring.coefficients();
  LaurentElement<F> out;
  for (const auto& [m, x] : a) {
    ring.check(m);
    auto sm = ring.power(m);
    for (const auto& [k, y] : b) {
      Exponent e(m.size());
      for (std::size_t i = 0; i < m.size(); ++i) e[i] = m[i] + k[i];
      out = laurent_add(ring, out, ring.monomial(t.multiply(x, apply(ring.field(), sm, y)), e));
    }
  }
  return out;
}

/// No ideal of T other than 0 and T is mapped into itself by every sigma_i.
template <class F>
SimplicityVerdict<F> is_sigma_simple(const LaurentRing<F>& ring, const SearchOptions& opt = {}) {
  if constexpr (!F::finite) throw Error(Errc::ExactModeUnavailable, "sigma-simplicity over Q");
  SearchOptions exact = opt;
  exact.mode = SearchMode::Exact;
  return invariant_simplicity(ring.coefficients(), ring.sigma(), exact);
}

template <class F>
struct InnerWitness {
  Vec<F> u;    // u t = sigma^m(t) u for all t, i.e. sigma^m(t) = u t u^-1
  Exponent m;
};

namespace detail {

template <class F>
void require_periodic(const LaurentRing<F>& ring) {
  if (!F::finite) throw Error(Errc::UnboundedSearch, "coefficients over Q give an infinite search space");
  if (!ring.periodic()) throw Error(Errc::UnboundedSearch, "some sigma_i has infinite order");
}

// Exponents of the box prod [0, ord_i - 1] in lexicographic order.
template <class F>
std::vector<Exponent> period_box(const LaurentRing<F>& ring) {
  std::vector<Exponent> out{Exponent(ring.rank(), 0)};
  for (std::size_t i = 0; i < ring.rank(); ++i) {
    std::vector<Exponent> next;
    for (const auto& e : out)
      for (long long v = 0; v < static_cast<long long>(*ring.orders()[i]); ++v) {
        auto x = e;
        x[i] = v;
        next.push_back(std::move(x));
      }
    out = std::move(next);
  }
  return out;
}

// Two-sided units of T lying in N(T) and fixed by every sigma_i, one per
// projective point, in enumeration order.
template <class F>
std::vector<Vec<F>> fixed_nuclear_units(const LaurentRing<F>& ring, const SearchOptions& opt) {
  const auto& t = ring.coefficients();
  const auto& f = t.field();
  auto nuc = nucleus_and_center(t).nucleus;
  std::vector<Vec<F>> out;
  SearchOptions exact = opt;
  exact.mode = SearchMode::Exact;
  search_span(f, t.dim(), standard_basis(f, t.dim()), exact, [&](const Vec<F>& u) {
    for (const auto& s : ring.sigma())
      if (!equal(f, apply(f, s, u), u)) return false;
    if (nuc.contains(u) && two_sided_inverse(t, u)) out.push_back(u);
    return false;
  });
  return out;
}

template <class F>
bool conjugates_as(const LaurentRing<F>& ring, const Matrix<F>& sm, const Vec<F>& u) {
  const auto& t = ring.coefficients();
  for (std::size_t i = 0; i < t.dim(); ++i)
    if (!equal(t.field(), t.right_basis(u, i), t.multiply(apply(t.field(), sm, t.basis(i)), u))) return false;
  return true;
}

}  // namespace detail

/// First (m, u) in lexicographic order with m != 0 in the period box or on an
/// axis point ord_i * e_i, and u a sigma-fixed nuclear unit with
/// sigma^m(t) = u t u^-1 for every basis t.
template <class F>
std::optional<InnerWitness<F>> inner_witness_search(const LaurentRing<F>& ring, const SearchOptions& opt = {}) {
  detail::require_periodic(ring);
  auto candidates = detail::period_box(ring);
  candidates.erase(candidates.begin());  // m = 0
  for (std::size_t i = 0; i < ring.rank(); ++i) {
    Exponent axis(ring.rank(), 0);
    axis[i] = static_cast<long long>(*ring.orders()[i]);
    candidates.push_back(std::move(axis));
  }
  auto units = detail::fixed_nuclear_units(ring, opt);
  for (const auto& m : candidates) {
    auto sm = ring.power(m);
    for (const auto& u : units)
      if (detail::conjugates_as(ring, sm, u)) return InnerWitness<F>{u, m};
  }
  return std::nullopt;
}

/// Checks that c commutes and associates with every a x^j, b x^k (a, b basis,
/// j, k in one period box) and commutes with every x_i^{+-1}.
template <class F>
bool verify_central(const LaurentRing<F>& ring, const LaurentElement<F>& c) {
  detail::require_periodic(ring);
  const auto& t = ring.coefficients();
  auto box = detail::period_box(ring);
  std::vector<LaurentElement<F>> probes;
  for (const auto& j : box)
    for (std::size_t a = 0; a < t.dim(); ++a) probes.push_back(ring.monomial(t.basis(a), j));
  for (std::size_t i = 0; i < ring.rank(); ++i) {
    probes.push_back(ring.variable(i, 1));
    probes.push_back(ring.variable(i, -1));
  }
  auto mul = [&](const auto& x, const auto& y) { return laurent_multiply(ring, x, y); };
  auto assoc_zero = [&](const auto& x, const auto& y, const auto& z) {
    return laurent_equal(ring, mul(mul(x, y), z), mul(x, mul(y, z)));
  };
  for (const auto& p : probes)
    if (!laurent_equal(ring, mul(c, p), mul(p, c))) return false;
  const std::size_t basic = box.size() * t.dim();
  for (std::size_t x = 0; x < basic; ++x)
    for (std::size_t y = 0; y < basic; ++y) {
      const auto& a = probes[x];
      const auto& b = probes[y];
      if (!assoc_zero(c, a, b) || !assoc_zero(a, c, b) || !assoc_zero(a, b, c)) return false;
    }
  return true;
}

template <class F>
struct LaurentVerdict {
  bool sigma_simple = false;
  std::optional<Vec<F>> sigma_witness;  // generates a proper sigma-invariant ideal of T
  std::optional<InnerWitness<F>> witness;
  bool simple = false;
  std::optional<LaurentElement<F>> central_witness;
  bool central_verified = false;
};

/// Simple iff T is sigma-simple and no inner witness exists. A witness (u, m)
/// yields the non-scalar central element 1 + u^-1 x^m.
template <class F>
LaurentVerdict<F> laurent_simplicity_verdict(const LaurentRing<F>& ring, const SearchOptions& opt = {}) {
  detail::require_periodic(ring);
  LaurentVerdict<F> out;
  auto ss = is_sigma_simple(ring, opt);
  out.sigma_simple = ss.simple;
  out.sigma_witness = ss.witness;
  if (!out.sigma_simple) return out;
  out.witness = inner_witness_search(ring, opt);
  out.simple = !out.witness.has_value();
  if (out.witness) {
    auto uinv = *two_sided_inverse(ring.coefficients(), out.witness->u);
    auto c = laurent_add(ring, ring.one(), ring.monomial(uinv, out.witness->m));
    out.central_verified = verify_central(ring, c);
    out.central_witness = std::move(c);
  }
  return out;
}

template <class F>
struct LaurentCenterStructure {
  std::vector<std::uint64_t> periods;
  std::vector<Exponent> l_residues;  // members of L inside the period box
  std::vector<Vec<F>> l_units;       // conjugating unit for each residue
  Subspace<F> fixed_center;          // F = T^G cap Z(T)
  std::vector<std::pair<Exponent, Subspace<F>>> slice;  // center coefficients per exponent
  bool matches_description = false;

  bool in_l(const Exponent& m) const {
    return index_of(m).has_value();
  }
  std::optional<std::size_t> index_of(const Exponent& m) const {
    Exponent r(m.size());
    for (std::size_t i = 0; i < m.size(); ++i) {
      auto p = static_cast<long long>(periods[i]);
      r[i] = ((m[i] % p) + p) % p;
    }
    for (std::size_t k = 0; k < l_residues.size(); ++k)
      if (l_residues[k] == r) return k;
    return std::nullopt;
  }
};

/// The L-set (exponents whose automorphism is conjugation by a fixed nuclear
/// unit), F = Z(T) cap T^G, and for each exponent m in the window [lo, hi]
/// the coefficient space T_m of Z(R) at x^m, solved from
///   s t = t sigma^m(s) for basis s,  sigma_i(t) = t,  t in N(T).
/// matches_description compares each T_m with F u_m^-1 (m in L) or 0.
template <class F>
LaurentCenterStructure<F> laurent_center_structure(const LaurentRing<F>& ring, const Exponent& lo, const Exponent& hi,
                                                   const SearchOptions& opt = {}) {
  detail::require_periodic(ring);
  ring.check(lo);
  ring.check(hi);
  const auto& t = ring.coefficients();
  const auto& f = t.field();
  const auto d = t.dim();
  LaurentCenterStructure<F> out{{}, {}, {}, Subspace<F>(f, d), {}, false};
  for (const auto& o : ring.orders()) out.periods.push_back(*o);

  auto units = detail::fixed_nuclear_units(ring, opt);
  for (const auto& m : detail::period_box(ring)) {
    auto sm = ring.power(m);
    for (const auto& u : units)
      if (detail::conjugates_as(ring, sm, u)) {
        out.l_residues.push_back(m);
        out.l_units.push_back(u);
        break;
      }
  }

  auto nt = nucleus_and_center(t);
  Subspace<F> fixed_rows(f, d);
  for (const auto& s : ring.sigma())
    for (std::size_t r = 0; r < d; ++r) {
      Vec<F> row = s[r];
      row[r] = f.sub(row[r], f.one());
      fixed_rows.insert(std::move(row));
    }
  out.fixed_center = fixed_rows.sum(nt.center.annihilator()).annihilator();
  const auto base_rows = fixed_rows.sum(nt.nucleus.annihilator());

  std::vector<Exponent> window{Exponent{}};
  for (std::size_t i = 0; i < ring.rank(); ++i) {
    std::vector<Exponent> next;
    for (const auto& e : window)
      for (long long v = lo[i]; v <= hi[i]; ++v) {
        auto x = e;
        x.push_back(v);
        next.push_back(std::move(x));
      }
    window = std::move(next);
  }

  out.matches_description = true;
  for (const auto& m : window) {
    auto sm = ring.power(m);
    Subspace<F> rows = base_rows;
    for (std::size_t s = 0; s < d; ++s) {
      auto ss = apply(f, sm, t.basis(s));
      for (std::size_t k = 0; k < d; ++k) {
        Vec<F> row(d);
        for (std::size_t i = 0; i < d; ++i) row[i] = f.sub(t.basis_product(s, i)[k], t.left_basis(i, ss)[k]);
        rows.insert(std::move(row));
      }
    }
    auto tm = rows.annihilator();
    Subspace<F> expected(f, d);
    if (auto k = out.index_of(m)) {
      auto uinv = *two_sided_inverse(t, out.l_units[*k]);
      for (const auto& b : out.fixed_center.basis()) expected.insert(t.multiply(b, uinv));
    }
    if (!(tm == expected)) out.matches_description = false;
    out.slice.emplace_back(m, std::move(tm));
  }
  return out;
}

}  // namespace gradix
