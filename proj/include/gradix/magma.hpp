#pragma once

#include <cctype>
#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "gradix/algebra.hpp"
#include "gradix/error.hpp"
#include "gradix/linalg.hpp"

namespace gradix {

/// A word of the free magma: a full binary tree whose leaves carry argument
/// slot indices (0-based; printed as x1, x2, ...).
class Word {
 public:
  static Word leaf(std::size_t slot) {
    Word w;
    w.nodes_.push_back({slot, npos, npos});
    return w;
  }

  static Word product(const Word& a, const Word& b) {
    Word w;
    w.nodes_ = a.nodes_;
    const std::size_t offset = w.nodes_.size();
    for (auto n : b.nodes_) {
      if (n.left != npos) {
        n.left += offset;
        n.right += offset;
      }
      w.nodes_.push_back(n);
    }
    w.nodes_.push_back({0, offset - 1, w.nodes_.size() - 1});
    return w;
  }

  /// Parses `x1`, `(x1 x2)`, `((x1 x2)(x3 x4))`.
  static Word parse(std::string_view text) {
    std::size_t pos = 0;
    Word w = parse_at(text, pos);
    skip_space(text, pos);
    if (pos != text.size()) throw Error(Errc::ParseError, "trailing input in word '" + std::string(text) + "'");
    return w;
  }

  std::size_t length() const {
    std::size_t n = 0;
    for (const auto& node : nodes_) n += node.left == npos;
    return n;
  }

  /// Leaf slots from left to right.
  std::vector<std::size_t> slots() const {
    std::vector<std::size_t> out;
    collect(root(), out);
    return out;
  }

  std::size_t slot_count() const {
    std::size_t m = 0;
    for (auto s : slots()) m = std::max(m, s + 1);
    return m;
  }

  bool is_linear() const {
    auto s = slots();
    std::vector<int> seen(slot_count(), 0);
    for (auto x : s) ++seen[x];
    for (auto c : seen)
      if (c != 1) return false;
    return true;
  }

  bool is_leaf() const { return nodes_.size() == 1; }
  Word left() const { return subtree(nodes_[root()].left); }
  Word right() const { return subtree(nodes_[root()].right); }

  std::string to_string() const { return format(root()); }

  friend bool operator==(const Word& a, const Word& b) { return a.same(a.root(), b, b.root()); }

  /// Bottom-up evaluation: on_leaf(slot) for leaves, on_node(l, r) otherwise.
  template <class Leaf, class Node>
  auto fold(Leaf&& on_leaf, Node&& on_node) const {
    return fold_at(root(), on_leaf, on_node);
  }

 private:
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);
  struct Node {
    std::size_t slot, left, right;
  };

  std::size_t root() const { return nodes_.size() - 1; }

  template <class Leaf, class NodeFn>
  auto fold_at(std::size_t i, Leaf& on_leaf, NodeFn& on_node) const -> decltype(on_leaf(std::size_t{})) {
    const auto& n = nodes_[i];
    if (n.left == npos) return on_leaf(n.slot);
    // left before right: callers rely on left-to-right leaf visits
    auto l = fold_at(n.left, on_leaf, on_node);
    auto r = fold_at(n.right, on_leaf, on_node);
    return on_node(std::move(l), std::move(r));
  }

  void collect(std::size_t i, std::vector<std::size_t>& out) const {
    const auto& n = nodes_[i];
    if (n.left == npos) {
      out.push_back(n.slot);
      return;
    }
    collect(n.left, out);
    collect(n.right, out);
  }

  Word subtree(std::size_t i) const {
    const auto& n = nodes_[i];
    if (n.left == npos) return leaf(n.slot);
    return product(subtree(n.left), subtree(n.right));
  }

  bool same(std::size_t i, const Word& other, std::size_t j) const {
    const auto& a = nodes_[i];
    const auto& b = other.nodes_[j];
    if ((a.left == npos) != (b.left == npos)) return false;
    if (a.left == npos) return a.slot == b.slot;
    return same(a.left, other, b.left) && same(a.right, other, b.right);
  }

  std::string format(std::size_t i) const {
    const auto& n = nodes_[i];
    if (n.left == npos) return "x" + std::to_string(n.slot + 1);
    std::string l = format(n.left), r = format(n.right);
    bool need_space = l.back() != ')' && r.front() != '(';
    return "(" + l + (need_space ? " " : "") + r + ")";
  }

  static void skip_space(std::string_view t, std::size_t& pos) {
    while (pos < t.size() && std::isspace(static_cast<unsigned char>(t[pos]))) ++pos;
  }

  static Word parse_at(std::string_view t, std::size_t& pos) {
    skip_space(t, pos);
    if (pos >= t.size()) throw Error(Errc::ParseError, "unexpected end of word");
    if (t[pos] == 'x') {
      ++pos;
      std::size_t start = pos, v = 0;
      while (pos < t.size() && std::isdigit(static_cast<unsigned char>(t[pos]))) v = v * 10 + (t[pos++] - '0');
      if (pos == start || v == 0) throw Error(Errc::ParseError, "variable index must be >= 1 at offset " + std::to_string(start));
      return leaf(v - 1);
    }
    if (t[pos] != '(') throw Error(Errc::ParseError, "expected 'x' or '(' at offset " + std::to_string(pos));
    ++pos;
    Word a = parse_at(t, pos);
    Word b = parse_at(t, pos);
    skip_space(t, pos);
    if (pos >= t.size() || t[pos] != ')') throw Error(Errc::ParseError, "expected ')' at offset " + std::to_string(pos));
    ++pos;
    return product(a, b);
  }

  std::vector<Node> nodes_;
};

/// Value of the word with slot s replaced by args[s].
template <class F>
Vec<F> specialize(const Word& w, std::span<const Vec<F>> args, const Algebra<F>& r) {
  if (args.size() < w.slot_count())
    throw Error(Errc::DimensionMismatch, "word needs " + std::to_string(w.slot_count()) + " arguments, got " +
                                             std::to_string(args.size()));
  for (const auto& a : args) r.check(a);
  return w.fold([&](std::size_t s) { return args[s]; },
                [&](const Vec<F>& x, const Vec<F>& y) { return r.multiply(x, y); });
}

template <class F>
Vec<F> specialize(const Word& w, const std::vector<Vec<F>>& args, const Algebra<F>& r) {
  return specialize(w, std::span<const Vec<F>>(args), r);
}

template <class E>
struct Linearized {
  Word word;
  std::vector<E> args;
};

/// Renames leaves left to right to x1..xn so the word is linear, repeating
/// arguments as needed; the specialization value is unchanged.
template <class E>
Linearized<E> linearize(const Word& w, const std::vector<E>& args) {
  std::vector<E> out;
  std::size_t next = 0;
  Word lw = w.fold(
      [&](std::size_t s) {
        out.push_back(args.at(s));
        return Word::leaf(next++);
      },
      [](const Word& a, const Word& b) { return Word::product(a, b); });
  return {std::move(lw), std::move(out)};
}

/// All linear words with leaves x1..xn in left-to-right order (one per binary
/// tree shape; Catalan(n-1) of them).
inline std::vector<Word> linear_words(std::size_t n, std::size_t first_slot = 0) {
  if (n == 0) return {};
  if (n == 1) return {Word::leaf(first_slot)};
  std::vector<Word> out;
  for (std::size_t k = 1; k < n; ++k)
    for (const auto& a : linear_words(k, first_slot))
      for (const auto& b : linear_words(n - k, first_slot + k)) out.push_back(Word::product(a, b));
  return out;
}

template <class F>
struct WordSpan {
  std::vector<Subspace<F>> by_length;  // by_length[L-1]: words of length <= L
  bool stabilized = false;             // two consecutive lengths gave equal spans
  std::size_t stable_length = 0;       // first L with span(L) == span(L+1), if stabilized
  const Subspace<F>& span() const { return by_length.back(); }
};

namespace detail {

// Adds every specialization of the given linear word that has generator a in
// slot `pinned` and basis vectors in the other slots.
template <class F>
void add_word_values(const Algebra<F>& r, const Word& w, std::size_t pinned, const Vec<F>& a, Subspace<F>& s) {
  const std::size_t len = w.length(), n = r.dim();
  std::vector<std::size_t> idx(len, 0);
  while (!s.is_full()) {
    auto value = w.fold(
        [&](std::size_t slot) { return slot == pinned ? a : r.basis(idx[slot]); },
        [&](const Vec<F>& x, const Vec<F>& y) { return r.multiply(x, y); });
    s.insert(std::move(value));
    std::size_t pos = len;
    bool wrapped = true;
    while (pos-- > 0) {
      if (pos == pinned) continue;
      if (++idx[pos] < n) {
        wrapped = false;
        break;
      }
      idx[pos] = 0;
    }
    if (wrapped) break;
  }
}

}  // namespace detail

/// Span of all specializations of linear words of length <= max_len with at
/// least one slot taken from `generators` and the others from the basis.
/// Stops adding lengths once two consecutive spans agree.
template <class F>
WordSpan<F> word_ideal_span(const Algebra<F>& r, const std::vector<Vec<F>>& generators, std::size_t max_len) {
  WordSpan<F> out;
  Subspace<F> s(r.field(), r.dim());
  for (std::size_t len = 1; len <= max_len; ++len) {
    for (const auto& w : linear_words(len))
      for (std::size_t p = 0; p < len; ++p)
        for (const auto& a : generators) detail::add_word_values(r, w, p, a, s);
    if (!out.by_length.empty() && out.by_length.back() == s && !out.stabilized) {
      out.stabilized = true;
      out.stable_length = len - 1;
    }
    out.by_length.push_back(s);
    if (out.stabilized) break;
  }
  return out;
}

}  // namespace gradix
