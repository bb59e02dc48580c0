#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cctype>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <string_view>

#include "gradix/error.hpp"

namespace gradix {

inline bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

namespace detail {

struct ParsedFraction {
  boost::multiprecision::cpp_int num;
  boost::multiprecision::cpp_int den;
};

// Accepts "n", "-n", "+n", "n/d" with optional surrounding spaces.
inline ParsedFraction parse_fraction(std::string_view text) {
  auto trim = [](std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
  };
  auto parse_int = [&](std::string_view s) {
    s = trim(s);
    bool neg = false;
    if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
      neg = s.front() == '-';
      s.remove_prefix(1);
    }
    if (s.empty()) throw Error(Errc::ParseError, "empty integer in scalar '" + std::string(text) + "'");
    boost::multiprecision::cpp_int v = 0;
    for (char c : s) {
      if (!std::isdigit(static_cast<unsigned char>(c)))
        throw Error(Errc::ParseError, "bad scalar '" + std::string(text) + "'");
      v = v * 10 + (c - '0');
    }
    return neg ? boost::multiprecision::cpp_int(-v) : v;
  };
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return {parse_int(text), 1};
  ParsedFraction f{parse_int(text.substr(0, slash)), parse_int(text.substr(slash + 1))};
  if (f.den == 0) throw Error(Errc::DivisionByZero, "scalar '" + std::string(text) + "'");
  return f;
}

}  // namespace detail

/// The prime field F_p, elements stored as reduced residues in [0, p).
class PrimeField {
 public:
  using value_type = std::uint32_t;
  static constexpr bool finite = true;

  explicit PrimeField(std::uint32_t p) : p_(p) {
    if (!is_prime(p)) throw Error(Errc::NotPrime, "p not prime (p = " + std::to_string(p) + ")");
    if (p >= (1u << 31)) throw Error(Errc::ValidationError, "p too large");
  }

  std::uint32_t characteristic() const { return p_; }
  std::optional<std::uint64_t> size() const { return p_; }

  value_type zero() const { return 0; }
  value_type one() const { return 1; }
  bool is_zero(value_type a) const { return a == 0; }
  bool is_one(value_type a) const { return a == 1; }
  bool equal(value_type a, value_type b) const { return a == b; }

  value_type add(value_type a, value_type b) const {
    std::uint32_t s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  value_type sub(value_type a, value_type b) const { return a >= b ? a - b : a + p_ - b; }
  value_type neg(value_type a) const { return a == 0 ? 0 : p_ - a; }
  value_type mul(value_type a, value_type b) const {
    return static_cast<value_type>(static_cast<std::uint64_t>(a) * b % p_);
  }
  value_type inv(value_type a) const {
    if (a == 0) throw Error(Errc::DivisionByZero, "inverse of 0 in F_" + std::to_string(p_));
    // Fermat: a^(p-2)
    std::uint64_t result = 1, base = a, e = p_ - 2;
    while (e) {
      if (e & 1) result = result * base % p_;
      base = base * base % p_;
      e >>= 1;
    }
    return static_cast<value_type>(result);
  }
  value_type div(value_type a, value_type b) const { return mul(a, inv(b)); }

  value_type from_int(long long v) const {
    long long r = v % static_cast<long long>(p_);
    if (r < 0) r += p_;
    return static_cast<value_type>(r);
  }

  value_type parse(std::string_view text) const {
    auto f = detail::parse_fraction(text);
    auto reduce = [&](const boost::multiprecision::cpp_int& v) {
      boost::multiprecision::cpp_int r = v % p_;
      if (r < 0) r += p_;
      return static_cast<value_type>(r);
    };
    value_type den = reduce(f.den);
    if (den == 0)
      throw Error(Errc::DivisionByZero, "denominator of '" + std::string(text) + "' vanishes mod p");
    return div(reduce(f.num), den);
  }

  std::string format(value_type a) const { return std::to_string(a); }

  /// i-th element in enumeration order 0, 1, ..., p-1.
  value_type element(std::uint64_t i) const { return static_cast<value_type>(i); }

  template <class Rng>
  value_type random(Rng& rng, long long /*bound*/) const {
    return static_cast<value_type>(rng() % p_);
  }

  std::string name() const { return "F" + std::to_string(p_); }

  friend bool operator==(const PrimeField& a, const PrimeField& b) { return a.p_ == b.p_; }

 private:
  std::uint32_t p_;
};

/// The rationals, elements are exact fractions in lowest terms.
class RationalField {
 public:
  using value_type = boost::multiprecision::cpp_rational;
  static constexpr bool finite = false;

  std::uint32_t characteristic() const { return 0; }
  std::optional<std::uint64_t> size() const { return std::nullopt; }

  value_type zero() const { return 0; }
  value_type one() const { return 1; }
  bool is_zero(const value_type& a) const { return a == 0; }
  bool is_one(const value_type& a) const { return a == 1; }
  bool equal(const value_type& a, const value_type& b) const { return a == b; }

  value_type add(const value_type& a, const value_type& b) const { return a + b; }
  value_type sub(const value_type& a, const value_type& b) const { return a - b; }
  value_type neg(const value_type& a) const { return -a; }
  value_type mul(const value_type& a, const value_type& b) const { return a * b; }
  value_type inv(const value_type& a) const {
    if (a == 0) throw Error(Errc::DivisionByZero, "inverse of 0 in Q");
    return 1 / a;
  }
  value_type div(const value_type& a, const value_type& b) const { return mul(a, inv(b)); }

  value_type from_int(long long v) const { return v; }

  value_type parse(std::string_view text) const {
    auto f = detail::parse_fraction(text);
    return value_type(f.num, f.den);
  }

  std::string format(const value_type& a) const {
    auto num = boost::multiprecision::numerator(a);
    auto den = boost::multiprecision::denominator(a);
    if (den == 1) return num.str();
    return num.str() + "/" + den.str();
  }

  value_type element(std::uint64_t) const {
    throw Error(Errc::ExactModeUnavailable, "Q cannot be enumerated");
  }

  template <class Rng>
  value_type random(Rng& rng, long long bound) const {
    auto span = static_cast<std::uint64_t>(2 * bound + 1);
    return value_type(static_cast<long long>(rng() % span) - bound);
  }

  std::string name() const { return "Q"; }

  friend bool operator==(const RationalField&, const RationalField&) { return true; }
};

/// Runtime description of a coefficient field, as it appears in input files.
struct FieldSpec {
  enum class Kind { Fp, Q };
  Kind kind = Kind::Fp;
  std::uint32_t p = 2;

  static FieldSpec prime(std::uint32_t p) {
    if (!is_prime(p)) throw Error(Errc::NotPrime, "p not prime (p = " + std::to_string(p) + ")");
    return {Kind::Fp, p};
  }
  static FieldSpec rationals() { return {Kind::Q, 0}; }

  friend bool operator==(const FieldSpec&, const FieldSpec&) = default;
};

inline FieldSpec spec_of(const PrimeField& f) { return FieldSpec::prime(f.characteristic()); }
inline FieldSpec spec_of(const RationalField&) { return FieldSpec::rationals(); }

/// Calls fn with a PrimeField or RationalField for the described field.
template <class Fn>
decltype(auto) visit_field(const FieldSpec& spec, Fn&& fn) {
  if (spec.kind == FieldSpec::Kind::Q) return fn(RationalField{});
  return fn(PrimeField(spec.p));
}

}  // namespace gradix
