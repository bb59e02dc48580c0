#pragma once

#include <algorithm>
#include <chrono>
#include <set>
#include <sstream>
#include <string>

#include "gradix/cayley.hpp"
#include "gradix/io.hpp"
#include "gradix/magma.hpp"

namespace gradix {

using io::json;

struct RunOptions {
  SearchOptions search;
  std::size_t oracle_maxlen = 5;
  bool timing = false;  // wall-clock times make reports non-reproducible, so off by default
};

inline RunOptions options_from_json(const json& j, RunOptions base = {}) {
  if (j.is_null()) return base;
  if (!j.is_object()) io::detail::invalid("options", "expected an object");
  auto positive = [&](const char* key) -> std::uint64_t {
    auto v = io::detail::integer(j[key], std::string("options.") + key);
    if (v <= 0) io::detail::invalid(std::string("options.") + key, "must be positive");
    return static_cast<std::uint64_t>(v);
  };
  if (j.contains("budget")) base.search.budget = positive("budget");
  if (j.contains("trials")) base.search.trials = positive("trials");
  if (j.contains("oracle_maxlen")) base.oracle_maxlen = positive("oracle_maxlen");
  if (j.contains("seed")) {
    const auto& sj = j["seed"];
    if (!sj.is_number_integer() || (!sj.is_number_unsigned() && sj.get<long long>() < 0))
      io::detail::invalid("options.seed", "expected a non-negative integer");
    base.search.seed = sj.get<std::uint64_t>();
  }
  if (j.contains("mode")) {
    const auto m = j["mode"].get<std::string>();
    if (m == "auto") base.search.mode = SearchMode::Auto;
    else if (m == "exact") base.search.mode = SearchMode::Exact;
    else if (m == "randomized") base.search.mode = SearchMode::Randomized;
    else io::detail::invalid("options.mode", "expected auto, exact or randomized");
  }
  return base;
}

inline json options_to_json(const RunOptions& o) {
  const char* mode = o.search.mode == SearchMode::Auto ? "auto" : o.search.mode == SearchMode::Exact ? "exact" : "randomized";
  return {{"budget", o.search.budget}, {"trials", o.search.trials}, {"seed", o.search.seed},
          {"oracle_maxlen", o.oracle_maxlen}, {"mode", mode}};
}

namespace detail {

template <class F>
json witness_json(const F& f, const char* type, const std::optional<Vec<F>>& w) {
  if (!w) return nullptr;
  return {{"type", type}, {"element", io::to_json(f, *w)}};
}

template <class F>
json verdict_json(const SimplicityVerdict<F>& v, const F& f, const char* witness_type) {
  return {{"simple", v.simple}, {"mode", to_string(v.mode)}, {"points_checked", v.points_checked},
          {"witness", witness_json(f, witness_type, v.witness)}};
}

inline json optional_bool(const std::optional<bool>& b) { return b ? json(*b) : json(nullptr); }

// Mode for searches whose exact variant does not exist over Q.
template <class F>
SearchOptions decision_options(const RunOptions& opt) {
  SearchOptions s = opt.search;
  if constexpr (!F::finite)
    if (s.mode == SearchMode::Auto) s.mode = SearchMode::Randomized;
  return s;
}

template <class F>
bool brute_force_affordable(const F& f, std::size_t dim, const SearchOptions& s) {
  if constexpr (F::finite) return s.mode == SearchMode::Randomized || projective_count(*f.size(), dim) <= s.budget;
  return true;
}

template <class F>
json analyze_algebra(const Algebra<F>& r, const RunOptions& opt) {
  const auto& f = r.field();
  auto nc = nucleus_and_center(r);
  json out;
  out["field"] = io::to_json(spec_of(f));
  out["dim"] = r.dim();
  out["associative"] = is_associative(r);
  out["commutative"] = is_commutative(r);
  out["involution"] = r.has_involution();
  out["nuclei"] = {{"left", io::to_json(nc.left)},         {"middle", io::to_json(nc.middle)},
                   {"right", io::to_json(nc.right)},       {"nucleus", io::to_json(nc.nucleus)},
                   {"commuter", io::to_json(nc.commuter)}, {"center", io::to_json(nc.center)}};
  out["center_is_field"] = optional_bool(is_field_subspace(r, nc.center, opt.search));
  auto v = is_simple(r, opt.search);
  out["simplicity"] = verdict_json(v, f, "proper-ideal");
  if (v.witness) {
    auto closure = ideal_closure(r, *v.witness);
    out["simplicity"]["ideal"] = io::to_json(closure);
    auto ws = word_ideal_span(r, {*v.witness}, opt.oracle_maxlen);
    out["word_oracle"] = {{"max_len", opt.oracle_maxlen},
                          {"stabilized", ws.stabilized},
                          {"stable_length", ws.stabilized ? json(ws.stable_length) : json(nullptr)},
                          {"rank", ws.span().rank()},
                          {"agrees_with_closure", ws.span() == closure}};
  }
  out["verdict"] = {{"simple", v.simple}, {"mode", to_string(v.mode)}};
  return out;
}

template <class F>
json analyze_graded(const Algebra<F>& r, const Gradation& grad, const RunOptions& opt) {
  const auto& f = r.field();
  auto [g2, rep] = validate_gradation(r, grad.group(), grad.degrees());
  json out;
  out["dim"] = r.dim();
  out["group_order"] = grad.group().order();
  out["gradation"] = {{"support", rep.support}, {"strong", rep.strong}, {"faithful", optional_bool(rep.faithful)}};
  auto gs = is_graded_simple(r, grad, decision_options<F>(opt));
  out["graded_simplicity"] = {{"graded_simple", gs.graded_simple},
                              {"mode", to_string(gs.mode)},
                              {"points_checked", gs.points_checked},
                              {"witness", witness_json(f, "proper-graded-ideal", gs.witness)}};
  if constexpr (F::finite) {
    auto cs = central_simplicity_verdict(r, grad, opt.search);
    out["central_criterion"] = {{"hypercentral", cs.hypercentral},     {"graded_simple", cs.graded_simple},
                                {"center_is_field", cs.center_is_field}, {"simple", cs.simple},
                                {"consistent", cs.consistent},           {"center", io::to_json(cs.center)},
                                {"simple_witness", witness_json(f, "proper-ideal", cs.simple_witness)}};
    out["verdict"] = {{"graded_simple", cs.graded_simple}, {"center_is_field", cs.center_is_field},
                      {"simple", cs.simple}, {"consistent", cs.consistent}};
  } else {
    out["central_criterion"] = nullptr;
    out["verdict"] = {{"graded_simple", gs.graded_simple}, {"mode", to_string(gs.mode)}};
  }
  return out;
}

template <class F>
json analyze_crossed(const CrossedSystem<F>& sys, const RunOptions& opt) {
  const auto& f = sys.T.field();
  auto built = build_crossed_product(sys);
  const auto& r = built.algebra;
  auto [g2, rep] = validate_gradation(r, built.gradation.group(), built.gradation.degrees());
  auto s = decision_options<F>(opt);
  json out;
  out["T_dim"] = sys.T.dim();
  out["group_order"] = sys.G.order();
  out["product"] = {{"dim", r.dim()},
                    {"algebra", io::to_json(r)},
                    {"strong", rep.strong},
                    {"faithful", optional_bool(rep.faithful)},
                    {"associative", is_associative(r)},
                    {"T_associative", is_associative(sys.T)}};
  auto gsimple = is_G_simple(sys.T, sys.sigma, s);
  out["G_simplicity"] = verdict_json(gsimple, f, "invariant-ideal");
  auto gs = is_graded_simple(r, built.gradation, s);
  out["graded_simple"] = gs.graded_simple;
  json simple = nullptr;
  if (brute_force_affordable(f, r.dim(), s)) {
    auto v = is_simple(r, s);
    out["simplicity"] = verdict_json(v, f, "proper-ideal");
    simple = v.simple;
  } else {
    out["simplicity"] = {{"simple", nullptr}, {"mode", "skipped"}};
  }
  auto cc = crossed_center(sys);
  auto zr = nucleus_and_center(r).center;
  out["center"] = {{"center", io::to_json(cc.center)},
                   {"fixed_center", io::to_json(cc.fixed_center)},
                   {"matches_bruteforce", cc.center == zr},
                   {"fixed_center_is_field", optional_bool(is_field_subspace(sys.T, cc.fixed_center, opt.search))}};
  out["verdict"] = {{"G_simple", gsimple.simple}, {"graded_simple", gs.graded_simple}, {"simple", simple}};
  return out;
}

inline Exponent window_bound(const json& payload, const char* key, std::size_t n, long long fallback) {
  if (payload.contains("window")) return io::exponent_from_json(io::detail::at(payload["window"], key, "window"), n, "window." + std::string(key));
  return Exponent(n, fallback);
}

template <class F>
json analyze_laurent(const LaurentRing<F>& ring, const json& payload, const RunOptions& opt) {
  const auto& f = ring.field();
  json orders = json::array();
  for (const auto& o : ring.orders()) orders.push_back(o ? json(*o) : json("infinite"));
  json out;
  out["rank"] = ring.rank();
  out["T_dim"] = ring.coefficients().dim();
  out["orders"] = orders;
  auto v = laurent_simplicity_verdict(ring, opt.search);
  out["sigma_simple"] = v.sigma_simple;
  out["sigma_witness"] = witness_json(f, "invariant-ideal", v.sigma_witness);
  if (v.witness)
    out["witness"] = {{"type", "inner"}, {"u", io::to_json(f, v.witness->u)}, {"m", v.witness->m}};
  else
    out["witness"] = nullptr;
  out["simple"] = v.simple;
  if (v.central_witness)
    out["central_witness"] = {{"type", "central-element"}, {"element", io::to_json(ring, *v.central_witness)}};
  else
    out["central_witness"] = nullptr;
  out["central_verified"] = v.central_verified;
  auto lo = window_bound(payload, "lo", ring.rank(), -4), hi = window_bound(payload, "hi", ring.rank(), 4);
  auto cs = laurent_center_structure(ring, lo, hi, opt.search);
  json slice = json::array();
  for (const auto& [m, sub] : cs.slice)
    if (!sub.is_zero()) slice.push_back({{"exp", m}, {"coefficients", io::to_json(sub)}});
  out["center_structure"] = {{"periods", cs.periods},          {"L", cs.l_residues},
                             {"fixed_center", io::to_json(cs.fixed_center)},
                             {"window", {{"lo", lo}, {"hi", hi}}}, {"slice", slice},
                             {"matches_description", cs.matches_description}};
  out["verdict"] = {{"sigma_simple", v.sigma_simple}, {"simple", v.simple},
                    {"witness", v.witness ? json({{"u", io::to_json(f, v.witness->u)}, {"m", v.witness->m}}) : json(nullptr)},
                    {"central_witness", out["central_witness"].is_null() ? json(nullptr) : out["central_witness"]["element"]}};
  return out;
}

template <class F>
json mccrimmon_json(const McCrimmonReport<F>& r, const F& f, std::size_t stage) {
  json rnd = nullptr;
  if (r.randomized) {
    rnd = verdict_json(*r.randomized, f, "proper-ideal");
    if (!rnd["witness"].is_null()) rnd["witness"]["stage"] = stage;
  }
  return {{"star_simple", r.star_simple},
          {"involution_trivial", r.involution_trivial},
          {"ZA_field", r.za_field},
          {"mu_square_in_ZA", optional_bool(r.mu_square_in_za)},
          {"Zstar_field", r.zstar_field},
          {"criterion_simple", r.criterion_simple},
          {"brute_simple", optional_bool(r.brute_simple)},
          {"randomized", rnd},
          {"consistent", r.consistent},
          {"double_graded_simple", r.double_graded_simple},
          {"center_matches", r.center_matches},
          {"double_center_field", r.double_center_field}};
}

template <class F>
json analyze_tower(const F& f, const std::vector<typename F::value_type>& mus, const RunOptions& opt) {
  auto stages = tower(f, mus, decision_options<F>(opt));
  json out = json::array();
  for (std::size_t k = 0; k < stages.size(); ++k) {
    const auto& st = stages[k];
    const auto& a = st.algebra.algebra();
    json s;
    s["stage"] = k;
    s["dim"] = a.dim();
    s["mu"] = k == 0 ? json(nullptr) : json(f.format(mus[k - 1]));
    s["algebra"] = io::to_json(a);
    s["degrees"] = st.gradation.degrees();
    s["associative"] = is_associative(a);
    s["center"] = io::to_json(nucleus_and_center(a).center);
    s["simple"] = st.simple;
    s["report"] = st.report ? mccrimmon_json(*st.report, f, k) : json(nullptr);
    if constexpr (F::finite) {
      if (brute_force_affordable(f, a.dim(), opt.search)) {
        auto cs = central_simplicity_verdict(a, st.gradation, opt.search);
        s["central_criterion"] = {{"hypercentral", cs.hypercentral}, {"graded_simple", cs.graded_simple},
                                  {"center_is_field", cs.center_is_field}, {"simple", cs.simple},
                                  {"consistent", cs.consistent}};
      } else {
        s["central_criterion"] = nullptr;
      }
    }
    out.push_back(std::move(s));
  }
  return {{"stages", out},
          {"verdict", {{"stages", stages.size()}, {"final_dim", stages.back().algebra.algebra().dim()},
                       {"final_simple", stages.back().simple}}}};
}

template <class F>
std::vector<typename F::value_type> mus_from_json(const F& f, const json& payload) {
  const auto& mj = io::detail::array(io::detail::at(payload, "mus", "tower"), "tower.mus");
  std::vector<typename F::value_type> mus;
  for (std::size_t i = 0; i < mj.size(); ++i)
    mus.push_back(io::scalar_from_json(f, mj[i], "tower.mus[" + std::to_string(i) + "]"));
  return mus;
}

template <class F>
bool proper_nonzero(const Subspace<F>& s) {
  return !s.is_zero() && !s.is_full();
}

template <class F>
json check_witness(const F& f, const std::string& kind, const json& payload, const json& w, const RunOptions& opt) {
  const auto type = io::detail::at(w, "type", "witness").get<std::string>();
  bool ok = false;
  if (kind == "algebra" && type == "proper-ideal") {
    auto r = io::algebra_from_json(f, payload);
    ok = proper_nonzero(ideal_closure(r, io::vector_from_json(f, w["element"], r.dim(), "witness.element")));
  } else if (kind == "graded" && (type == "proper-graded-ideal" || type == "proper-ideal")) {
    auto r = io::algebra_from_json(f, io::detail::at(payload, "algebra", "graded"), "graded.algebra");
    auto grad = io::gradation_from_json(r, io::detail::at(payload, "gradation", "graded"), "graded.gradation");
    auto x = io::vector_from_json(f, w["element"], r.dim(), "witness.element");
    ok = type == "proper-ideal" ? proper_nonzero(ideal_closure(r, x))
                                : grad.is_homogeneous(f, x) && proper_nonzero(graded_ideal_closure(r, grad, x));
  } else if (kind == "crossed" && (type == "invariant-ideal" || type == "proper-ideal")) {
    auto sys = io::crossed_from_json(f, payload);
    if (type == "invariant-ideal") {
      auto x = io::vector_from_json(f, w["element"], sys.T.dim(), "witness.element");
      ok = proper_nonzero(closure(sys.T, std::span<const Vec<F>>(&x, 1), std::span<const Matrix<F>>(sys.sigma)));
    } else {
      auto built = build_crossed_product(sys);
      ok = proper_nonzero(ideal_closure(built.algebra, io::vector_from_json(f, w["element"], built.algebra.dim(), "witness.element")));
    }
  } else if (kind == "laurent") {
    auto ring = io::laurent_from_json(f, payload);
    const auto& t = ring.coefficients();
    if (type == "invariant-ideal") {
      auto x = io::vector_from_json(f, w["element"], t.dim(), "witness.element");
      ok = proper_nonzero(closure(t, std::span<const Vec<F>>(&x, 1), std::span<const Matrix<F>>(ring.sigma())));
    } else if (type == "inner") {
      auto u = io::vector_from_json(f, w["u"], t.dim(), "witness.u");
      auto m = io::exponent_from_json(w["m"], ring.rank(), "witness.m");
      bool fixed = true;
      for (const auto& s : ring.sigma()) fixed = fixed && equal(f, apply(f, s, u), u);
      ok = fixed && std::any_of(m.begin(), m.end(), [](long long v) { return v != 0; }) &&
           nucleus_and_center(t).nucleus.contains(u) && two_sided_inverse(t, u) &&
           detail::conjugates_as(ring, ring.power(m), u);
    } else if (type == "central-element") {
      auto c = io::laurent_element_from_json(ring, w["element"], "witness.element");
      bool scalar = c.size() == 1 && c.begin()->first == Exponent(ring.rank(), 0);
      ok = !scalar && verify_central(ring, c);
    } else {
      io::detail::invalid("witness.type", "unknown witness type for laurent: " + type);
    }
  } else if (kind == "cayley-tower" && type == "proper-ideal") {
    auto stage = io::detail::index(io::detail::at(w, "stage", "witness"), "witness.stage");
    auto mus = mus_from_json(f, payload);
    if (stage == 0 || stage > mus.size()) io::detail::invalid("witness.stage", "out of range");
    mus.resize(stage);
    auto a = base_field_algebra(f);
    for (const auto& mu : mus) a = cayley_double(a, mu).algebra;
    ok = proper_nonzero(ideal_closure(a.algebra(), io::vector_from_json(f, w["element"], a.algebra().dim(), "witness.element")));
  } else {
    io::detail::invalid("witness.type", "witness type " + type + " does not apply to kind " + kind);
  }
  (void)opt;
  return {{"witness_type", type}, {"target_kind", kind}, {"verified", ok}, {"verdict", {{"verified", ok}}}};
}

}  // namespace detail

inline const std::set<std::string>& request_kinds() {
  static const std::set<std::string> kinds{"algebra", "graded", "crossed", "laurent", "cayley-tower", "check"};
  return kinds;
}

/// Field of the payload of a request of the given kind.
inline FieldSpec payload_field(const std::string& kind, const json& payload) {
  if (kind == "algebra") return io::algebra_field(payload);
  if (kind == "graded") return io::algebra_field(io::detail::at(payload, "algebra", "graded"), "graded.algebra");
  if (kind == "crossed") return io::algebra_field(io::detail::at(payload, "T", "crossed"), "crossed.T");
  if (kind == "laurent") return io::algebra_field(io::detail::at(payload, "T", "laurent"), "laurent.T");
  if (kind == "cayley-tower") return io::field_from_json(io::detail::at(payload, "field", "tower"), "tower.field");
  io::detail::invalid("kind", "unknown kind " + kind);
}

/// Runs one request document and returns its report. Throws Error.
inline json run(const json& doc, const RunOptions& opt) {
  const auto& kind_j = io::detail::at(doc, "kind", "request");
  if (!kind_j.is_string() || !request_kinds().count(kind_j.get<std::string>()))
    io::detail::invalid("request.kind", "expected one of algebra, graded, crossed, laurent, cayley-tower, check");
  const auto kind = kind_j.get<std::string>();
  const auto& payload = io::detail::at(doc, "payload", "request");
  const auto start = std::chrono::steady_clock::now();
  json result;
  if (kind == "check") {
    const auto& target = io::detail::at(payload, "request", "check");
    const auto tkind = io::detail::at(target, "kind", "check.request").get<std::string>();
    const auto& tpayload = io::detail::at(target, "payload", "check.request");
    result = visit_field(payload_field(tkind, tpayload), [&](const auto& f) {
      return detail::check_witness(f, tkind, tpayload, io::detail::at(payload, "witness", "check"), opt);
    });
  } else {
    result = visit_field(payload_field(kind, payload), [&](const auto& f) -> json {
      if (kind == "algebra") return detail::analyze_algebra(io::algebra_from_json(f, payload), opt);
      if (kind == "graded") {
        auto r = io::algebra_from_json(f, payload["algebra"], "graded.algebra");
        auto g = io::gradation_from_json(r, io::detail::at(payload, "gradation", "graded"), "graded.gradation");
        return detail::analyze_graded(r, g, opt);
      }
      if (kind == "crossed") return detail::analyze_crossed(io::crossed_from_json(f, payload), opt);
      if (kind == "laurent") return detail::analyze_laurent(io::laurent_from_json(f, payload), payload, opt);
      return detail::analyze_tower(f, detail::mus_from_json(f, payload), opt);
    });
  }
  json report;
  report["kind"] = kind;
  report["options"] = options_to_json(opt);
  report["request"] = doc;
  report["result"] = std::move(result);
  if (opt.timing)
    report["timing_ms"] =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return report;
}

/// Exit status: 0 success, 1 validation or usage error, 2 budget exhausted.
inline int exit_code_for(Errc c) { return c == Errc::BudgetExceeded ? 2 : 1; }

struct Outcome {
  int exit_code = 0;
  json report;
};

/// run() with errors turned into an error report and exit code.
inline Outcome execute(const json& doc, const RunOptions& opt) {
  try {
    auto rep = run(doc, opt);
    const auto& res = rep["result"];
    int code = res.contains("verified") && !res["verified"].get<bool>() ? 1 : 0;
    return {code, std::move(rep)};
  } catch (const Error& e) {
    const bool parse = e.code() == Errc::ParseError;
    const bool budget = e.code() == Errc::BudgetExceeded;
    json err = {{"class", parse ? "ParseError" : budget ? "BudgetExceeded" : "ValidationError"},
                {"code", errc_name(e.code())},
                {"message", e.what()}};
    return {exit_code_for(e.code()), {{"kind", doc.is_object() && doc.contains("kind") ? doc["kind"] : json(nullptr)},
                                      {"error", err}}};
  }
}

/// Wraps a bare payload into a request of the given kind; passes full requests through.
inline json as_request(const json& doc, const std::string& kind) {
  if (doc.is_object() && doc.contains("kind")) {
    if (doc["kind"] != kind)
      io::detail::invalid("request.kind", "expected kind " + kind + " for this subcommand");
    return doc;
  }
  return {{"kind", kind}, {"payload", doc}};
}

/// Indented plain-text rendering of a report.
inline void render_pretty(std::ostream& out, const json& j, int indent = 0) {
  auto scalar_list = [](const json& a) {
    return a.is_array() && std::all_of(a.begin(), a.end(), [](const json& x) { return x.is_primitive(); });
  };
  const std::string pad(indent, ' ');
  if (j.is_object()) {
    for (const auto& [k, v] : j.items()) {
      if (v.is_primitive() || scalar_list(v)) {
        out << pad << k << ": " << (v.is_string() ? v.get<std::string>() : v.dump()) << "\n";
      } else {
        out << pad << k << ":\n";
        render_pretty(out, v, indent + 2);
      }
    }
  } else if (j.is_array()) {
    for (std::size_t i = 0; i < j.size(); ++i) {
      if (j[i].is_primitive() || scalar_list(j[i])) {
        out << pad << "- " << (j[i].is_string() ? j[i].get<std::string>() : j[i].dump()) << "\n";
      } else {
        out << pad << "- [" << i << "]\n";
        render_pretty(out, j[i], indent + 2);
      }
    }
  } else {
    out << pad << j.dump() << "\n";
  }
}

}  // namespace gradix
