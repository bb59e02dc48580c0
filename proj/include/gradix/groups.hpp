#pragma once

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <string>
#include <vector>

#include "gradix/error.hpp"

namespace gradix {

using GroupElement = std::size_t;

/// A finite group given by its multiplication table.
class FiniteGroup {
 public:
  /// Validates table and identity, then computes inverses. The first
  /// violating tuple is reported; associativity is checked last.
  static FiniteGroup validate(std::vector<std::vector<GroupElement>> table, GroupElement identity,
                              std::vector<std::string> labels = {}) {
    const std::size_t n = table.size();
    if (n == 0) throw Error(Errc::ValidationError, "empty group table");
    for (std::size_t g = 0; g < n; ++g) {
      if (table[g].size() != n)
        throw Error(Errc::ValidationError, "row " + std::to_string(g) + " has wrong length");
      for (auto x : table[g])
        if (x >= n) throw Error(Errc::ValidationError, "table entry out of range in row " + std::to_string(g));
    }
    if (identity >= n) throw Error(Errc::MissingIdentity, "identity index out of range");
    for (std::size_t g = 0; g < n; ++g)
      if (table[identity][g] != g || table[g][identity] != g)
        throw Error(Errc::MissingIdentity, "e*g or g*e differs from g at g = " + std::to_string(g));
    std::vector<GroupElement> inverses(n, n);
    for (std::size_t g = 0; g < n; ++g) {
      for (std::size_t h = 0; h < n; ++h)
        if (table[g][h] == identity && table[h][g] == identity) {
          inverses[g] = h;
          break;
        }
      if (inverses[g] == n) throw Error(Errc::MissingInverse, "g = " + std::to_string(g));
    }
    for (std::size_t g = 0; g < n; ++g)
      for (std::size_t h = 0; h < n; ++h)
        for (std::size_t k = 0; k < n; ++k)
          if (table[table[g][h]][k] != table[g][table[h][k]])
            throw Error(Errc::NonAssociativeTable, "(g,h,k) = (" + std::to_string(g) + "," +
                                                       std::to_string(h) + "," + std::to_string(k) + ")");
    if (!labels.empty() && labels.size() != n)
      throw Error(Errc::ValidationError, "label count differs from group order");
    FiniteGroup grp;
    grp.table_ = std::move(table);
    grp.identity_ = identity;
    grp.inverses_ = std::move(inverses);
    grp.labels_ = std::move(labels);
    return grp;
  }

  std::size_t order() const { return table_.size(); }
  GroupElement identity() const { return identity_; }
  GroupElement mul(GroupElement g, GroupElement h) const { return table_[g][h]; }
  GroupElement inv(GroupElement g) const { return inverses_[g]; }
  GroupElement commutator(GroupElement g, GroupElement h) const {
    return mul(mul(g, h), mul(inv(g), inv(h)));
  }
  GroupElement conjugate(GroupElement h, GroupElement g) const { return mul(mul(h, g), inv(h)); }
  const std::vector<std::vector<GroupElement>>& table() const { return table_; }
  const std::vector<std::string>& labels() const { return labels_; }
  std::string label(GroupElement g) const { return labels_.empty() ? std::to_string(g) : labels_[g]; }

  bool is_abelian() const {
    for (std::size_t g = 0; g < order(); ++g)
      for (std::size_t h = g + 1; h < order(); ++h)
        if (mul(g, h) != mul(h, g)) return false;
    return true;
  }

  std::size_t element_order(GroupElement g) const {
    std::size_t k = 1;
    for (GroupElement x = g; x != identity_; x = mul(x, g)) ++k;
    return k;
  }

  std::size_t exponent() const {
    std::size_t e = 1;
    for (std::size_t g = 0; g < order(); ++g) e = std::lcm(e, element_order(g));
    return e;
  }

 private:
  FiniteGroup() = default;
  std::vector<std::vector<GroupElement>> table_;
  GroupElement identity_ = 0;
  std::vector<GroupElement> inverses_;
  std::vector<std::string> labels_;
};

/// Sorted member list of a subgroup of some parent group.
struct Subgroup {
  std::vector<GroupElement> members;

  bool contains(GroupElement g) const { return std::binary_search(members.begin(), members.end(), g); }
  std::size_t order() const { return members.size(); }
  friend bool operator==(const Subgroup&, const Subgroup&) = default;
};

inline Subgroup trivial_subgroup(const FiniteGroup& g) { return {{g.identity()}}; }

inline Subgroup whole_group(const FiniteGroup& g) {
  Subgroup s;
  s.members.resize(g.order());
  std::iota(s.members.begin(), s.members.end(), GroupElement{0});
  return s;
}

/// Subgroup generated by the given elements.
inline Subgroup generated_subgroup(const FiniteGroup& g, const std::vector<GroupElement>& gens) {
  std::vector<bool> in(g.order(), false);
  std::vector<GroupElement> members{g.identity()};
  in[g.identity()] = true;
  for (std::size_t i = 0; i < members.size(); ++i)
    for (auto s : gens) {
      auto x = g.mul(members[i], s);
      if (!in[x]) {
        in[x] = true;
        members.push_back(x);
      }
    }
  std::sort(members.begin(), members.end());
  return {members};
}

inline bool is_subgroup(const FiniteGroup& g, const Subgroup& n) {
  if (!n.contains(g.identity())) return false;
  for (auto a : n.members) {
    if (!n.contains(g.inv(a))) return false;
    for (auto b : n.members)
      if (!n.contains(g.mul(a, b))) return false;
  }
  return true;
}

inline bool is_normal(const FiniteGroup& g, const Subgroup& n) {
  if (!is_subgroup(g, n)) return false;
  for (std::size_t h = 0; h < g.order(); ++h)
    for (auto a : n.members)
      if (!n.contains(g.conjugate(h, a))) return false;
  return true;
}

inline Subgroup center(const FiniteGroup& g) {
  Subgroup z;
  for (std::size_t a = 0; a < g.order(); ++a) {
    bool central = true;
    for (std::size_t h = 0; h < g.order() && central; ++h) central = g.mul(a, h) == g.mul(h, a);
    if (central) z.members.push_back(a);
  }
  return z;
}

/// Finite conjugate subgroup. Every element of a finite group has finitely
/// many conjugates, so this is always the whole group.
inline Subgroup finite_conjugate_subgroup(const FiniteGroup& g) { return whole_group(g); }

struct CentralSeries {
  std::vector<Subgroup> chain;
  bool hypercentral = false;
};

/// Ascending central series Z_0 = {e} and
/// Z_{i+1} = {g : [g,h] in Z_i for all h}, stopped at the first repeat.
inline CentralSeries central_series(const FiniteGroup& g) {
  CentralSeries s;
  s.chain.push_back(trivial_subgroup(g));
  while (true) {
    const Subgroup& prev = s.chain.back();
    Subgroup next;
    for (std::size_t a = 0; a < g.order(); ++a) {
      bool ok = true;
      for (std::size_t h = 0; h < g.order() && ok; ++h) ok = prev.contains(g.commutator(a, h));
      if (ok) next.members.push_back(a);
    }
    if (next == prev) break;
    s.chain.push_back(std::move(next));
  }
  s.hypercentral = s.chain.back().order() == g.order();
  return s;
}

struct QuotientGroup {
  FiniteGroup group;
  std::vector<GroupElement> projection;  // g -> coset index
  std::vector<std::vector<GroupElement>> cosets;
};

/// G/N with cosets numbered by their smallest member, in increasing order.
inline QuotientGroup quotient_group(const FiniteGroup& g, const Subgroup& n) {
  if (!is_normal(g, n)) throw Error(Errc::NotNormal, "subgroup is not normal");
  const std::size_t none = g.order();
  std::vector<GroupElement> projection(g.order(), none);
  std::vector<std::vector<GroupElement>> cosets;
  std::vector<GroupElement> reps;
  for (std::size_t a = 0; a < g.order(); ++a) {
    if (projection[a] != none) continue;
    std::vector<GroupElement> coset;
    for (auto m : n.members) {
      auto x = g.mul(a, m);
      projection[x] = cosets.size();
      coset.push_back(x);
    }
    std::sort(coset.begin(), coset.end());
    cosets.push_back(std::move(coset));
    reps.push_back(a);
  }
  const std::size_t q = cosets.size();
  std::vector<std::vector<GroupElement>> table(q, std::vector<GroupElement>(q));
  for (std::size_t i = 0; i < q; ++i)
    for (std::size_t j = 0; j < q; ++j) table[i][j] = projection[g.mul(reps[i], reps[j])];
  std::vector<std::string> labels;
  if (!g.labels().empty())
    for (auto r : reps) labels.push_back(g.label(r) + "N");
  return {FiniteGroup::validate(std::move(table), projection[g.identity()], std::move(labels)),
          std::move(projection), std::move(cosets)};
}

// ---- standard groups ------------------------------------------------------

inline FiniteGroup cyclic_group(std::size_t n) {
  std::vector<std::vector<GroupElement>> t(n, std::vector<GroupElement>(n));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) t[a][b] = (a + b) % n;
  return FiniteGroup::validate(std::move(t), 0);
}

/// Pairs (a,b) numbered a * |H| + b.
inline FiniteGroup direct_product(const FiniteGroup& g, const FiniteGroup& h) {
  const std::size_t n = g.order() * h.order();
  std::vector<std::vector<GroupElement>> t(n, std::vector<GroupElement>(n));
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      t[x][y] = g.mul(x / h.order(), y / h.order()) * h.order() + h.mul(x % h.order(), y % h.order());
  return FiniteGroup::validate(std::move(t), g.identity() * h.order() + h.identity());
}

/// (Z_2)^k with elements numbered by bitmask and product XOR.
inline FiniteGroup elementary_abelian_2group(std::size_t k) {
  const std::size_t n = std::size_t{1} << k;
  std::vector<std::vector<GroupElement>> t(n, std::vector<GroupElement>(n));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) t[a][b] = a ^ b;
  return FiniteGroup::validate(std::move(t), 0);
}

/// Dihedral group of order 2n: element r^i s^j numbered i + n*j.
inline FiniteGroup dihedral_group(std::size_t n) {
  const std::size_t m = 2 * n;
  std::vector<std::vector<GroupElement>> t(m, std::vector<GroupElement>(m));
  for (std::size_t x = 0; x < m; ++x)
    for (std::size_t y = 0; y < m; ++y) {
      std::size_t i = x % n, j = x / n, k = y % n, l = y / n;
      // r^i s^j r^k s^l = r^(i + (-1)^j k) s^(j+l)
      std::size_t rot = j == 0 ? (i + k) % n : (i + n - k) % n;
      t[x][y] = rot + n * ((j + l) % 2);
    }
  return FiniteGroup::validate(std::move(t), 0);
}

/// Symmetric group on {0,1,2}: permutations in lexicographic order.
inline FiniteGroup symmetric_group3() {
  std::vector<std::vector<int>> perms;
  std::vector<int> p{0, 1, 2};
  do perms.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  auto index = [&](const std::vector<int>& q) {
    return static_cast<GroupElement>(std::find(perms.begin(), perms.end(), q) - perms.begin());
  };
  std::vector<std::vector<GroupElement>> t(6, std::vector<GroupElement>(6));
  for (std::size_t a = 0; a < 6; ++a)
    for (std::size_t b = 0; b < 6; ++b) {
      std::vector<int> c(3);
      for (int i = 0; i < 3; ++i) c[i] = perms[a][perms[b][i]];  // a after b
      t[a][b] = index(c);
    }
  return FiniteGroup::validate(std::move(t), 0);
}

/// Quaternion group Q8: elements {1,-1,i,-i,j,-j,k,-k} numbered 0..7.
inline FiniteGroup quaternion_group() {
  // unit index u in {0:1, 1:i, 2:j, 3:k} with sign s; element = 2*u + s
  auto prod = [](int u, int v) -> std::pair<int, int> {  // (unit, negative?)
    if (u == 0) return {v, 0};
    if (v == 0) return {u, 0};
    if (u == v) return {0, 1};
    static const int next[4][4] = {{0, 0, 0, 0}, {0, 0, 3, 2}, {0, 3, 0, 1}, {0, 2, 1, 0}};
    bool cyclic = (u == 1 && v == 2) || (u == 2 && v == 3) || (u == 3 && v == 1);
    return {next[u][v], cyclic ? 0 : 1};
  };
  std::vector<std::vector<GroupElement>> t(8, std::vector<GroupElement>(8));
  for (int x = 0; x < 8; ++x)
    for (int y = 0; y < 8; ++y) {
      auto [w, s] = prod(x / 2, y / 2);
      t[x][y] = static_cast<GroupElement>(2 * w + ((x % 2) ^ (y % 2) ^ s));
    }
  return FiniteGroup::validate(std::move(t), 0);
}

}  // namespace gradix
