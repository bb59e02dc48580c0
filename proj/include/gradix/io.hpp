#pragma once

#include <json.hpp>

#include <algorithm>
#include <istream>
#include <iterator>
#include <string>
#include <vector>

#include "gradix/algebra.hpp"
#include "gradix/crossed.hpp"
#include "gradix/graded.hpp"
#include "gradix/groups.hpp"
#include "gradix/laurent.hpp"

namespace gradix::io {

using json = nlohmann::ordered_json;

/// Parses JSON text; syntax errors become ParseError with line and column.
inline json parse_json(const std::string& text, const std::string& source = "<input>") {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    std::size_t line = 1, col = 1;
    const auto end = std::min<std::size_t>(e.byte == 0 ? 0 : e.byte - 1, text.size());
    for (std::size_t i = 0; i < end; ++i) {
      if (text[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    throw Error(Errc::ParseError, source + ":" + std::to_string(line) + ":" + std::to_string(col) + ": " + e.what());
  }
}

inline json parse_json(std::istream& in, const std::string& source = "<input>") {
  return parse_json(std::string(std::istreambuf_iterator<char>(in), {}), source);
}

namespace detail {

[[noreturn]] inline void invalid(const std::string& path, const std::string& what) {
  throw Error(Errc::ValidationError, path + ": " + what);
}

inline const json& at(const json& j, const std::string& key, const std::string& path) {
  if (!j.is_object()) invalid(path, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) invalid(path, "missing field \"" + key + "\"");
  return *it;
}

inline const json& array(const json& j, const std::string& path) {
  if (!j.is_array()) invalid(path, "expected an array");
  return j;
}

inline std::size_t index(const json& j, const std::string& path) {
  if (!j.is_number_integer() || j.get<long long>() < 0) invalid(path, "expected a non-negative integer");
  return j.get<std::size_t>();
}

inline long long integer(const json& j, const std::string& path) {
  if (!j.is_number_integer()) invalid(path, "expected an integer");
  return j.get<long long>();
}

}  // namespace detail

inline FieldSpec field_from_json(const json& j, const std::string& path = "field") {
  const auto& kind = detail::at(j, "kind", path);
  if (kind == "Q") return FieldSpec::rationals();
  if (kind != "Fp") detail::invalid(path + ".kind", "expected \"Fp\" or \"Q\"");
  auto p = detail::integer(detail::at(j, "p", path), path + ".p");
  if (p < 2 || p > 65521 || !is_prime(static_cast<std::uint64_t>(p)))
    throw Error(Errc::NotPrime, "p not prime (p = " + std::to_string(p) + ")");
  return FieldSpec::prime(static_cast<std::uint32_t>(p));
}

inline json to_json(const FieldSpec& s) {
  if (s.kind == FieldSpec::Kind::Q) return {{"kind", "Q"}};
  return {{"kind", "Fp"}, {"p", s.p}};
}

template <class F>
typename F::value_type scalar_from_json(const F& f, const json& j, const std::string& path) {
  try {
    if (j.is_string()) return f.parse(j.get<std::string>());
    if (j.is_number_integer()) return f.from_int(j.get<long long>());
  } catch (const Error& e) {
    detail::invalid(path, e.what());
  }
  detail::invalid(path, "expected a scalar string");
}

template <class F>
Vec<F> vector_from_json(const F& f, const json& j, std::size_t dim, const std::string& path) {
  detail::array(j, path);
  if (j.size() != dim) throw Error(Errc::DimensionMismatch, path + ": expected " + std::to_string(dim) + " coordinates");
  Vec<F> v;
  for (std::size_t i = 0; i < dim; ++i) v.push_back(scalar_from_json(f, j[i], path + "[" + std::to_string(i) + "]"));
  return v;
}

/// Row-major square matrix.
template <class F>
Matrix<F> matrix_from_json(const F& f, const json& j, std::size_t dim, const std::string& path) {
  detail::array(j, path);
  if (j.size() != dim) throw Error(Errc::DimensionMismatch, path + ": expected " + std::to_string(dim) + " rows");
  Matrix<F> m;
  for (std::size_t r = 0; r < dim; ++r) m.push_back(vector_from_json(f, j[r], dim, path + "[" + std::to_string(r) + "]"));
  return m;
}

template <class F>
json to_json(const F& f, const Vec<F>& v) {
  json out = json::array();
  for (const auto& x : v) out.push_back(f.format(x));
  return out;
}

template <class F>
json to_json(const F& f, const Matrix<F>& m) {
  json out = json::array();
  for (const auto& row : m) out.push_back(to_json(f, row));
  return out;
}

template <class F>
json to_json(const Subspace<F>& s) {
  json basis = json::array();
  for (const auto& v : s.basis()) basis.push_back(to_json(s.field(), v));
  return {{"rank", s.rank()}, {"basis", basis}};
}

inline FiniteGroup group_from_json(const json& j, const std::string& path = "group") {
  const auto& tj = detail::array(detail::at(j, "table", path), path + ".table");
  std::vector<std::vector<GroupElement>> table;
  for (std::size_t r = 0; r < tj.size(); ++r) {
    const auto rp = path + ".table[" + std::to_string(r) + "]";
    std::vector<GroupElement> row;
    for (std::size_t c = 0; c < detail::array(tj[r], rp).size(); ++c)
      row.push_back(detail::index(tj[r][c], rp + "[" + std::to_string(c) + "]"));
    table.push_back(std::move(row));
  }
  std::vector<std::string> labels;
  if (j.contains("elements"))
    for (const auto& e : detail::array(j["elements"], path + ".elements")) {
      if (!e.is_string()) detail::invalid(path + ".elements", "expected strings");
      labels.push_back(e.get<std::string>());
    }
  return FiniteGroup::validate(std::move(table), detail::index(detail::at(j, "identity", path), path + ".identity"),
                               std::move(labels));
}

inline json to_json(const FiniteGroup& g) {
  json labels = json::array();
  for (std::size_t i = 0; i < g.order(); ++i) labels.push_back(g.label(i));
  return {{"elements", labels}, {"table", g.table()}, {"identity", g.identity()}};
}

template <class F>
Algebra<F> algebra_from_json(const F& f, const json& j, const std::string& path = "algebra") {
  const auto dim = detail::index(detail::at(j, "dim", path), path + ".dim");
  if (dim == 0) detail::invalid(path + ".dim", "must be positive");
  std::vector<StructureConstant<F>> mult;
  const auto& mj = detail::array(detail::at(j, "mult", path), path + ".mult");
  for (std::size_t t = 0; t < mj.size(); ++t) {
    const auto ep = path + ".mult[" + std::to_string(t) + "]";
    StructureConstant<F> sc{detail::index(detail::at(mj[t], "i", ep), ep + ".i"),
                            detail::index(detail::at(mj[t], "j", ep), ep + ".j"),
                            detail::index(detail::at(mj[t], "k", ep), ep + ".k"),
                            scalar_from_json(f, detail::at(mj[t], "c", ep), ep + ".c")};
    if (sc.i >= dim || sc.j >= dim || sc.k >= dim) throw Error(Errc::DimensionMismatch, ep + ": index out of range");
    mult.push_back(sc);
  }
  auto unit = vector_from_json(f, detail::at(j, "unit", path), dim, path + ".unit");
  std::optional<Matrix<F>> inv;
  if (j.contains("involution") && !j["involution"].is_null())
    inv = matrix_from_json(f, j["involution"], dim, path + ".involution");
  return Algebra<F>(f, dim, std::move(mult), std::move(unit), std::move(inv));
}

template <class F>
json to_json(const Algebra<F>& a) {
  json mult = json::array();
  for (const auto& e : a.entries())
    mult.push_back({{"i", e.i}, {"j", e.j}, {"k", e.k}, {"c", a.field().format(e.c)}});
  json out = {{"field", to_json(spec_of(a.field()))}, {"dim", a.dim()}, {"unit", to_json(a.field(), a.unit())},
              {"mult", mult}};
  if (a.has_involution()) out["involution"] = to_json(a.field(), *a.involution());
  return out;
}

/// Field of an algebra object (used to pick the scalar type before parsing).
inline FieldSpec algebra_field(const json& j, const std::string& path = "algebra") {
  return field_from_json(detail::at(j, "field", path), path + ".field");
}

template <class F>
Gradation gradation_from_json(const Algebra<F>& r, const json& j, const std::string& path = "gradation") {
  auto g = group_from_json(detail::at(j, "group", path), path + ".group");
  const auto& dj = detail::array(detail::at(j, "degrees", path), path + ".degrees");
  if (dj.size() != r.dim()) throw Error(Errc::DimensionMismatch, path + ".degrees: expected one degree per basis vector");
  std::vector<GroupElement> deg;
  for (std::size_t i = 0; i < dj.size(); ++i) {
    deg.push_back(detail::index(dj[i], path + ".degrees[" + std::to_string(i) + "]"));
    if (deg.back() >= g.order()) throw Error(Errc::DimensionMismatch, path + ".degrees: element out of range");
  }
  return validate_gradation(r, g, deg).first;
}

inline json to_json(const Gradation& g) { return {{"group", to_json(g.group())}, {"degrees", g.degrees()}}; }

template <class F>
CrossedSystem<F> crossed_from_json(const F& f, const json& j, const std::string& path = "crossed") {
  auto t = algebra_from_json(f, detail::at(j, "T", path), path + ".T");
  auto g = group_from_json(detail::at(j, "G", path), path + ".G");
  const auto& sj = detail::array(detail::at(j, "sigma", path), path + ".sigma");
  std::vector<Matrix<F>> sigma;
  for (std::size_t x = 0; x < sj.size(); ++x)
    sigma.push_back(matrix_from_json(f, sj[x], t.dim(), path + ".sigma[" + std::to_string(x) + "]"));
  const auto& aj = detail::array(detail::at(j, "alpha", path), path + ".alpha");
  std::vector<std::vector<Vec<F>>> alpha;
  for (std::size_t x = 0; x < aj.size(); ++x) {
    const auto rp = path + ".alpha[" + std::to_string(x) + "]";
    std::vector<Vec<F>> row;
    for (std::size_t y = 0; y < detail::array(aj[x], rp).size(); ++y)
      row.push_back(vector_from_json(f, aj[x][y], t.dim(), rp + "[" + std::to_string(y) + "]"));
    alpha.push_back(std::move(row));
  }
  return validate_crossed_system(std::move(t), std::move(g), std::move(sigma), std::move(alpha));
}

template <class F>
json to_json(const CrossedSystem<F>& s) {
  const auto& f = s.T.field();
  json sigma = json::array(), alpha = json::array();
  for (const auto& m : s.sigma) sigma.push_back(to_json(f, m));
  for (const auto& row : s.alpha) {
    json r = json::array();
    for (const auto& v : row) r.push_back(to_json(f, v));
    alpha.push_back(r);
  }
  return {{"T", to_json(s.T)}, {"G", to_json(s.G)}, {"sigma", sigma}, {"alpha", alpha}};
}

template <class F>
LaurentRing<F> laurent_from_json(const F& f, const json& j, const std::string& path = "laurent") {
  auto t = algebra_from_json(f, detail::at(j, "T", path), path + ".T");
  const auto n = detail::index(detail::at(j, "n", path), path + ".n");
  const auto& sj = detail::array(detail::at(j, "sigma", path), path + ".sigma");
  if (sj.size() != n) throw Error(Errc::DimensionMismatch, path + ".sigma: expected n matrices");
  std::vector<Matrix<F>> sigma;
  for (std::size_t x = 0; x < n; ++x)
    sigma.push_back(matrix_from_json(f, sj[x], t.dim(), path + ".sigma[" + std::to_string(x) + "]"));
  return LaurentRing<F>(std::move(t), std::move(sigma));
}

template <class F>
json to_json(const LaurentRing<F>& r) {
  json sigma = json::array();
  for (const auto& m : r.sigma()) sigma.push_back(to_json(r.field(), m));
  return {{"T", to_json(r.coefficients())}, {"n", r.rank()}, {"sigma", sigma}};
}

inline Exponent exponent_from_json(const json& j, std::size_t n, const std::string& path) {
  detail::array(j, path);
  if (j.size() != n) throw Error(Errc::DimensionMismatch, path + ": expected " + std::to_string(n) + " exponents");
  Exponent e;
  for (std::size_t i = 0; i < n; ++i) e.push_back(detail::integer(j[i], path + "[" + std::to_string(i) + "]"));
  return e;
}

template <class F>
LaurentElement<F> laurent_element_from_json(const LaurentRing<F>& r, const json& j, const std::string& path) {
  LaurentElement<F> out;
  for (std::size_t t = 0; t < detail::array(j, path).size(); ++t) {
    const auto tp = path + "[" + std::to_string(t) + "]";
    LaurentElement<F> term;
    term[exponent_from_json(detail::at(j[t], "exp", tp), r.rank(), tp + ".exp")] =
        vector_from_json(r.field(), detail::at(j[t], "coeff", tp), r.coefficients().dim(), tp + ".coeff");
    out = laurent_add(r, out, term);
  }
  return out;
}

template <class F>
json to_json(const LaurentRing<F>& r, const LaurentElement<F>& x) {
  json out = json::array();
  for (const auto& [e, c] : x) out.push_back({{"exp", e}, {"coeff", to_json(r.field(), c)}});
  return out;
}

}  // namespace gradix::io
