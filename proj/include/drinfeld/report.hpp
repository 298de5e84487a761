#pragma once

#include <cstdint>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

#include "drinfeld/cubic_field.hpp"
#include "drinfeld/error.hpp"
#include "drinfeld/factor.hpp"
#include "drinfeld/finite_field.hpp"
#include "drinfeld/order_lattice.hpp"
#include "drinfeld/poly.hpp"
#include "drinfeld/skew.hpp"

namespace drinfeld {

using json = nlohmann::json;

/// F_q as F_p (e = 1) or F_p[z]/(modulus) (e > 1).
struct FieldSpec {
  std::uint64_t p = 0;
  int e = 1;
  std::vector<std::uint64_t> modulus;  // ascending over F_p, empty when e = 1

  friend bool operator==(const FieldSpec&, const FieldSpec&) = default;

  FieldPtr build() const {
    FieldPtr Fp = FiniteField::prime(p);
    if (e == 1) {
      require(modulus.empty() || modulus.size() == 2, ErrorKind::Config,
              "field.modulus must be omitted or linear when e = 1");
      return Fp;
    }
    require(e > 1 && modulus.size() == static_cast<std::size_t>(e) + 1, ErrorKind::Config,
            "field.modulus must have e + 1 coefficients");
    std::vector<Fe> c;
    for (auto v : modulus) c.push_back(Fp->from_int(static_cast<long long>(v % p)));
    Poly f(Fp, std::move(c));
    require(f.is_monic() && is_irreducible(f), ErrorKind::Config,
            "field.modulus " + f.to_string("z") + " is not monic irreducible");
    return FiniteField::extension(Fp, f.coeffs(), "z");
  }
};

struct ModuleSpec {
  std::string name;
  std::vector<Fe> phi_T;  // codes in L, ascending in tau
};

struct ProblemConfig {
  FieldSpec field_spec;
  FieldPtr F;
  Poly pv;
  int m;
  WeilCubic weil;
  std::optional<Poly> L_modulus;  // defining polynomial of L over F_q
  std::vector<ModuleSpec> modules;
  std::optional<std::uint64_t> candidate_bound;
  std::string output_format = "json";
};

namespace detail {

inline long long as_int(const json& j, const std::string& where) {
  require(j.is_number_integer(), ErrorKind::Config, where + ": expected an integer");
  return j.get<long long>();
}

/// An element of `K`: an integer (image of Z) or an array of coordinates
/// over the base of K, each parsed the same way.
inline Fe parse_elem(const json& j, const FiniteField& K, const std::string& where) {
  if (j.is_number_integer()) return K.from_int(as_int(j, where));
  require(j.is_array(), ErrorKind::Config, where + ": expected an integer or an array");
  if (K.is_prime()) {
    require(j.size() == 1, ErrorKind::Config, where + ": prime-field element as array of length 1");
    return K.from_int(as_int(j[0], where));
  }
  require(j.size() <= static_cast<std::size_t>(K.degree()), ErrorKind::Config,
          where + ": too many coordinates");
  std::vector<Fe> d;
  for (std::size_t i = 0; i < j.size(); ++i)
    d.push_back(parse_elem(j[i], *K.base(), where + "[" + std::to_string(i) + "]"));
  return K.from_digits(d);
}

inline Poly parse_poly(const json& j, const FieldPtr& F, const std::string& where) {
  if (j.is_number_integer()) return Poly::constant(F, F->from_int(as_int(j, where)));
  require(j.is_array(), ErrorKind::Config, where + ": expected a coefficient array");
  std::vector<Fe> c;
  for (std::size_t i = 0; i < j.size(); ++i)
    c.push_back(parse_elem(j[i], *F, where + "[" + std::to_string(i) + "]"));
  return Poly(F, std::move(c));
}

inline const json& member(const json& j, const char* key, const std::string& where) {
  require(j.is_object() && j.contains(key), ErrorKind::Config,
          where + ": missing field '" + key + "'");
  return j.at(key);
}

}  // namespace detail

inline ProblemConfig parse_config(const json& j) {
  require(j.is_object(), ErrorKind::Config, "config must be a JSON object");
  FieldSpec spec;
  const json& fj = detail::member(j, "field", "config");
  spec.p = static_cast<std::uint64_t>(detail::as_int(detail::member(fj, "p", "field"), "field.p"));
  spec.e = fj.contains("e") ? static_cast<int>(detail::as_int(fj["e"], "field.e")) : 1;
  if (fj.contains("modulus")) {
    require(fj["modulus"].is_array(), ErrorKind::Config, "field.modulus must be an array");
    for (const auto& v : fj["modulus"]) {
      const long long x = detail::as_int(v, "field.modulus");
      require(x >= 0, ErrorKind::Config, "field.modulus entries must be non-negative");
      spec.modulus.push_back(static_cast<std::uint64_t>(x));
    }
  }
  FieldPtr F;
  try {
    F = spec.build();
  } catch (const Error& e) {
    fail(ErrorKind::Config, std::string("field: ") + e.what());
  }

  Poly pv = detail::parse_poly(detail::member(j, "pv", "config"), F, "pv");
  const int m = static_cast<int>(detail::as_int(detail::member(j, "m", "config"), "m"));
  const json& wj = detail::member(j, "weil", "config");
  Poly a1 = detail::parse_poly(detail::member(wj, "a1", "weil"), F, "weil.a1");
  Poly a2 = detail::parse_poly(detail::member(wj, "a2", "weil"), F, "weil.a2");
  std::optional<WeilCubic> weil;
  if (wj.contains("a0")) {
    Poly a0 = detail::parse_poly(wj["a0"], F, "weil.a0");
    weil = WeilCubic::from_coefficients(std::move(a1), std::move(a2), a0, pv);
    require(weil->m == m, ErrorKind::BadConstantTerm,
            "weil.a0 has valuation " + std::to_string(weil->m) + " at pv, config says m = " +
                std::to_string(m));
    if (wj.contains("mu"))
      require(detail::parse_elem(wj["mu"], *F, "weil.mu") == weil->mu, ErrorKind::BadConstantTerm,
              "weil.a0 and weil.mu disagree");
  } else {
    Fe mu = detail::parse_elem(detail::member(wj, "mu", "weil"), *F, "weil.mu");
    weil = WeilCubic{std::move(a1), std::move(a2), mu, pv, m};
  }

  std::optional<Poly> L_modulus;
  if (j.contains("L")) {
    Poly f = detail::parse_poly(j["L"], F, "L");
    require(f.degree() >= 1 && f.is_monic(), ErrorKind::Config, "L must be monic of positive degree");
    require(is_irreducible(f), ErrorKind::Config, "L = " + f.to_string("y") + " is not irreducible");
    require(pv.degree() >= 1, ErrorKind::Config, "pv must have positive degree");
    require(f.degree() == m * pv.degree(), ErrorKind::Config,
            "[L : F_q] = " + std::to_string(f.degree()) + " but m * deg pv = " +
                std::to_string(m * pv.degree()));
    L_modulus = std::move(f);
  }

  std::vector<ModuleSpec> modules;
  if (j.contains("modules")) {
    require(j["modules"].is_array(), ErrorKind::Config, "modules must be an array");
    require(j["modules"].empty() || L_modulus.has_value(), ErrorKind::Config,
            "modules need the field L");
    FieldPtr L = L_modulus ? make_L(*L_modulus) : nullptr;
    for (const auto& mj : j["modules"]) {
      ModuleSpec ms;
      const json& nj = detail::member(mj, "name", "module");
      require(nj.is_string(), ErrorKind::Config, "module name must be a string");
      ms.name = nj.get<std::string>();
      for (const auto& other : modules)
        require(other.name != ms.name, ErrorKind::Config, "duplicate module name " + ms.name);
      const json& pj = detail::member(mj, "phi_T", "module " + ms.name);
      require(pj.is_array(), ErrorKind::Config, "phi_T must be an array");
      for (std::size_t i = 0; i < pj.size(); ++i)
        ms.phi_T.push_back(
            detail::parse_elem(pj[i], *L, ms.name + ".phi_T[" + std::to_string(i) + "]"));
      modules.push_back(std::move(ms));
    }
  }

  std::optional<std::uint64_t> bound;
  std::string format = "json";
  if (j.contains("options")) {
    const json& oj = j["options"];
    require(oj.is_object(), ErrorKind::Config, "options must be an object");
    if (oj.contains("candidate_bound")) {
      const long long b = detail::as_int(oj["candidate_bound"], "options.candidate_bound");
      require(b > 0, ErrorKind::Config, "options.candidate_bound must be positive");
      bound = static_cast<std::uint64_t>(b);
    }
    if (oj.contains("output_format")) {
      require(oj["output_format"].is_string(), ErrorKind::Config,
              "options.output_format must be a string");
      format = oj["output_format"].get<std::string>();
      require(format == "json" || format == "text", ErrorKind::Config,
              "options.output_format must be json or text");
    }
  }
  return ProblemConfig{std::move(spec), std::move(F), std::move(pv), m, std::move(*weil),
                       std::move(L_modulus), std::move(modules), bound, std::move(format)};
}

inline ProblemConfig parse_config_text(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    fail(ErrorKind::Config, std::string("config is not valid JSON: ") + e.what());
  }
  return parse_config(j);
}

struct ModuleReport {
  std::string name;
  bool in_class = false;
  std::string reason;  // empty when in_class
  std::optional<OrderHNF> order;
  std::vector<CandidateVerdict> verdicts;
};

inline bool operator==(const CandidateVerdict& x, const CandidateVerdict& y) {
  return x.order == y.order && x.gen1_member == y.gen1_member && x.gen2_member == y.gen2_member;
}
inline bool operator==(const OrderReport& x, const OrderReport& y) {
  return x.order == y.order && x.is_closed == y.is_closed && x.contains_pi == y.contains_pi &&
         x.v_maximal == y.v_maximal && x.disc == y.disc && x.conductor_norm == y.conductor_norm &&
         x.is_endo_ring == y.is_endo_ring;
}
inline bool operator==(const ModuleReport& x, const ModuleReport& y) {
  return x.name == y.name && x.in_class == y.in_class && x.reason == y.reason &&
         x.order == y.order && x.verdicts == y.verdicts;
}
inline bool operator==(const LocalData& x, const LocalData& y) {
  return x.height == y.height && x.etale_degree == y.etale_degree &&
         x.residue_pattern == y.residue_pattern && x.supersingular == y.supersingular &&
         x.v_splits_a2 == y.v_splits_a2;
}
inline bool operator==(const StandardForm& x, const StandardForm& y) {
  return x.b1 == y.b1 && x.b2 == y.b2 && x.g1 == y.g1 && x.g2 == y.g2 && x.g == y.g &&
         x.c1 == y.c1 && x.c2 == y.c2;
}

struct Report {
  FieldSpec field;
  Poly pv;
  int m = 0;
  Poly a1, a2;
  Fe mu;
  LocalData local;
  StandardForm standard;
  Poly disc_M0;
  Poly delta;
  Fe delta_unit;
  Poly index;
  Poly alpha2, beta2;
  OrderHNF frobenius_order;
  std::vector<OrderReport> orders;  // every candidate, canonical order
  std::vector<ModuleReport> modules;

  std::vector<OrderHNF> endo_rings() const {
    std::vector<OrderHNF> out;
    for (const auto& o : orders)
      if (o.is_endo_ring) out.push_back(o.order);
    return out;
  }

  friend bool operator==(const Report& x, const Report& y) {
    return x.field == y.field && x.pv == y.pv && x.m == y.m && x.a1 == y.a1 && x.a2 == y.a2 &&
           x.mu == y.mu && x.local == y.local && x.standard == y.standard &&
           x.disc_M0 == y.disc_M0 && x.delta == y.delta && x.delta_unit == y.delta_unit &&
           x.index == y.index && x.alpha2 == y.alpha2 && x.beta2 == y.beta2 &&
           x.frobenius_order == y.frobenius_order && x.orders == y.orders &&
           x.modules == y.modules;
  }
};

/// Name of an order relative to the two distinguished ones.
inline std::string order_label(const OrderHNF& O, const OrderHNF& frob) {
  const bool is_max = O.a.is_one() && O.b.is_zero() && O.c.is_one();
  const bool is_frob = O == frob;
  std::string name;
  if (is_max) name = "O_max";
  if (is_frob) name += std::string(name.empty() ? "" : "=") + "A[pi]";
  return name + to_string(O);
}

inline ModuleReport check_module(const ModuleSpec& spec, const FieldPtr& L, const WeilCubic& W,
                                 const std::vector<OrderHNF>& endo_rings, const BasisElems& B) {
  ModuleReport r{spec.name, false, "", std::nullopt, {}};
  SkewPoly phi_T(L, spec.phi_T);
  if (auto why = module_defect(phi_T, W.pv)) {
    r.reason = *why;
    return r;
  }
  DrinfeldModule D = make_module(std::move(phi_T), W.pv);
  if (!verify_weil_action(D, W)) {
    r.reason = "Weil polynomial mismatch";
    return r;
  }
  r.in_class = true;
  Identification id = identify_endo_ring(D, endo_rings, B);
  r.order = id.order;
  r.verdicts = std::move(id.verdicts);
  return r;
}

/// Environment, then config, then the default; a command-line value wins over all.
inline std::uint64_t resolve_candidate_bound(const ProblemConfig& c,
                                             std::optional<std::uint64_t> flag,
                                             const char* env_value) {
  if (flag) return *flag;
  if (env_value != nullptr && *env_value != '\0') {
    std::uint64_t v = 0;
    std::size_t used = 0;
    try {
      v = std::stoull(env_value, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    require(used == std::string(env_value).size() && v > 0, ErrorKind::Config,
            "DRINFELD_CANDIDATE_BOUND must be a positive integer");
    return v;
  }
  return c.candidate_bound.value_or(kDefaultCandidateBound);
}

struct Analysis {
  Report report;
  OrderAnalysis orders;
  BasisElems basis;
};

inline Analysis run_analysis(const ProblemConfig& c, std::uint64_t candidate_bound,
                             const std::vector<std::string>& only_modules = {}, bool all_modules = true) {
  OrderAnalysis A = analyze_orders(c.weil, candidate_bound);
  BasisElems B = basis_over_pi(c.weil, A.standard, A.maximal);
  const OrderHNF frob = frobenius_order(A.standard.g, A.maximal.index);
  Report r{c.field_spec, c.pv, c.m, c.weil.a1, c.weil.a2, c.weil.mu, A.local, A.standard,
           A.maximal.disc_M0, A.maximal.delta, A.maximal.delta_unit, A.maximal.index,
           A.maximal.alpha2, A.maximal.beta2, frob, A.candidates, {}};

  // A[pi] is an endomorphism ring unless v-maximality rules it out.
  for (const auto& o : A.candidates)
    if (o.order == frob && o.v_maximal)
      require(o.is_endo_ring, ErrorKind::InternalInconsistency,
              "A[pi] is not among the endomorphism rings");

  if (!c.modules.empty()) {
    FieldPtr L = make_L(*c.L_modulus);
    std::vector<OrderHNF> rings;
    for (const auto& o : A.endo_rings) rings.push_back(o.order);
    for (const auto& ms : c.modules) {
      bool wanted = all_modules;
      for (const auto& n : only_modules) wanted = wanted || n == ms.name;
      if (wanted) r.modules.push_back(check_module(ms, L, c.weil, rings, B));
    }
  }
  return {std::move(r), std::move(A), std::move(B)};
}

/// One-line verdict for a module.
inline std::string verdict_line(const ModuleReport& m, const OrderHNF& frob) {
  if (!m.in_class) return "in class: no (" + m.reason + ")";
  return "in class: yes; End = " + order_label(*m.order, frob);
}

// ---- JSON ----

namespace detail {

inline json poly_json(const Poly& f) {
  json a = json::array();
  for (Fe c : f.coeffs()) a.push_back(c.code);
  return a;
}

inline Poly poly_from_json(const json& j, const FieldPtr& F) {
  std::vector<Fe> c;
  for (const auto& v : j) c.push_back(Fe{v.get<std::uint64_t>()});
  return Poly(F, std::move(c));
}

inline json hnf_json(const OrderHNF& O) {
  return {{"a", poly_json(O.a)}, {"b", poly_json(O.b)}, {"c", poly_json(O.c)}};
}

inline OrderHNF hnf_from_json(const json& j, const FieldPtr& F) {
  return {poly_from_json(j.at("a"), F), poly_from_json(j.at("b"), F), poly_from_json(j.at("c"), F)};
}

}  // namespace detail

/// Polynomials are ascending arrays of coefficient codes over F_q; the
/// "display" entries are derived and ignored when reading.
inline json to_json(const Report& r) {
  using detail::hnf_json;
  using detail::poly_json;
  json j;
  j["field"] = {{"p", r.field.p}, {"e", r.field.e}, {"modulus", r.field.modulus}};
  j["weil"] = {{"pv", poly_json(r.pv)}, {"m", r.m}, {"a1", poly_json(r.a1)},
               {"a2", poly_json(r.a2)}, {"mu", r.mu.code}};
  json pattern = json::array();
  for (const auto& [d, e] : r.local.residue_pattern) pattern.push_back({d, e});
  j["local_data"] = {{"height", r.local.height},
                     {"etale_degree", r.local.etale_degree},
                     {"residue_pattern", pattern},
                     {"supersingular", r.local.supersingular},
                     {"pv_divides_a2", r.local.v_splits_a2}};
  j["standard_form"] = {{"b1", poly_json(r.standard.b1)}, {"b2", poly_json(r.standard.b2)},
                        {"g1", poly_json(r.standard.g1)}, {"g2", poly_json(r.standard.g2)},
                        {"g", poly_json(r.standard.g)},   {"c1", poly_json(r.standard.c1)},
                        {"c2", poly_json(r.standard.c2)}};
  j["weil_verdict"] = "necessary conditions passed";
  j["disc_M0"] = poly_json(r.disc_M0);
  j["delta"] = poly_json(r.delta);
  j["delta_unit"] = r.delta_unit.code;
  j["index"] = poly_json(r.index);
  j["alpha2"] = poly_json(r.alpha2);
  j["beta2"] = poly_json(r.beta2);
  j["frobenius_order"] = hnf_json(r.frobenius_order);
  json orders = json::array();
  for (const auto& o : r.orders)
    orders.push_back({{"hnf", hnf_json(o.order)},
                      {"display", order_label(o.order, r.frobenius_order)},
                      {"is_closed", o.is_closed},
                      {"contains_pi", o.contains_pi},
                      {"v_maximal", o.v_maximal},
                      {"is_endo_ring", o.is_endo_ring},
                      {"disc", poly_json(o.disc)},
                      {"conductor_norm", poly_json(o.conductor_norm)}});
  j["orders"] = orders;
  json mods = json::array();
  for (const auto& m : r.modules) {
    json mj = {{"name", m.name}, {"in_class", m.in_class}, {"reason", m.reason},
               {"display", verdict_line(m, r.frobenius_order)}};
    mj["order"] = m.order ? hnf_json(*m.order) : json(nullptr);
    json vs = json::array();
    for (const auto& v : m.verdicts)
      vs.push_back({{"hnf", hnf_json(v.order)},
                    {"generator1_member", v.gen1_member},
                    {"generator2_member", v.gen2_member}});
    mj["verdicts"] = vs;
    mods.push_back(mj);
  }
  j["identifications"] = mods;
  return j;
}

inline Report report_from_json(const json& j) {
  using detail::hnf_from_json;
  using detail::poly_from_json;
  FieldSpec spec;
  spec.p = j.at("field").at("p").get<std::uint64_t>();
  spec.e = j.at("field").at("e").get<int>();
  spec.modulus = j.at("field").at("modulus").get<std::vector<std::uint64_t>>();
  const FieldPtr F = spec.build();
  auto P = [&](const json& v) { return poly_from_json(v, F); };
  const json& w = j.at("weil");
  const json& l = j.at("local_data");
  LocalData local;
  local.height = l.at("height").get<int>();
  local.etale_degree = l.at("etale_degree").get<int>();
  for (const auto& pe : l.at("residue_pattern"))
    local.residue_pattern.emplace_back(pe.at(0).get<int>(), pe.at(1).get<int>());
  local.supersingular = l.at("supersingular").get<bool>();
  local.v_splits_a2 = l.at("pv_divides_a2").get<bool>();
  const json& s = j.at("standard_form");
  Report r{spec,
           P(w.at("pv")),
           w.at("m").get<int>(),
           P(w.at("a1")),
           P(w.at("a2")),
           Fe{w.at("mu").get<std::uint64_t>()},
           std::move(local),
           {P(s.at("b1")), P(s.at("b2")), P(s.at("g1")), P(s.at("g2")), P(s.at("g")),
            P(s.at("c1")), P(s.at("c2"))},
           P(j.at("disc_M0")),
           P(j.at("delta")),
           Fe{j.at("delta_unit").get<std::uint64_t>()},
           P(j.at("index")),
           P(j.at("alpha2")),
           P(j.at("beta2")),
           hnf_from_json(j.at("frobenius_order"), F),
           {},
           {}};
  for (const auto& o : j.at("orders"))
    r.orders.push_back({hnf_from_json(o.at("hnf"), F), o.at("is_closed").get<bool>(),
                        o.at("contains_pi").get<bool>(), o.at("v_maximal").get<bool>(),
                        P(o.at("disc")), P(o.at("conductor_norm")),
                        o.at("is_endo_ring").get<bool>()});
  for (const auto& mj : j.at("identifications")) {
    ModuleReport m{mj.at("name").get<std::string>(), mj.at("in_class").get<bool>(),
                   mj.at("reason").get<std::string>(), std::nullopt, {}};
    if (!mj.at("order").is_null()) m.order = hnf_from_json(mj.at("order"), F);
    for (const auto& v : mj.at("verdicts"))
      m.verdicts.push_back({hnf_from_json(v.at("hnf"), F), v.at("generator1_member").get<bool>(),
                            v.at("generator2_member").get<bool>()});
    r.modules.push_back(std::move(m));
  }
  return r;
}

// ---- text ----

/// unit * prod p^e with monic irreducible p, e.g. "T^2*(T+4)^2*(T^2+4*T+2)".
inline std::string factored(const Poly& f) {
  if (f.is_zero()) return "0";
  if (f.is_constant()) return f.to_string();
  const Factorization fac = factor(f);
  std::string out;
  if (fac.unit != FiniteField::one()) out = f.F().to_string(fac.unit);
  for (const auto& [p, e] : fac.factors) {
    if (!out.empty()) out += "*";
    std::string s = p.to_string();
    const bool wrap = s.find('+') != std::string::npos;
    if (wrap && (e > 1 || fac.factors.size() > 1 || fac.unit != FiniteField::one())) s = "(" + s + ")";
    out += s;
    if (e > 1) out += "^" + std::to_string(e);
  }
  return out;
}

inline std::string to_text(const Report& r) {
  const FieldPtr F = r.field.build();
  std::ostringstream o;
  const PolyX M{pow(r.pv, static_cast<std::uint64_t>(r.m)).scaled(r.mu), r.a2, r.a1, r.a1.one()};
  o << "field        F_" << F->size();
  if (!F->is_prime()) o << " = F_" << r.field.p << "[z]/(" << Poly(F->base(), F->modulus()).to_string("z") << ")";
  o << "\n";
  o << "M(x)         " << to_string(M) << "\n";
  o << "pv           " << r.pv.to_string() << ", m = " << r.m << "\n";
  o << "verdict      necessary conditions passed\n";
  o << "height       " << r.local.height << (r.local.supersingular ? " (supersingular)" : "") << "\n";
  o << "pv | a2      " << (r.local.v_splits_a2 ? "yes" : "no") << "\n";
  o << "M mod pv     ";
  for (std::size_t i = 0; i < r.local.residue_pattern.size(); ++i)
    o << (i ? " " : "") << "(deg " << r.local.residue_pattern[i].first << ")^"
      << r.local.residue_pattern[i].second;
  o << "\n";
  o << "standard     x^3 + c1*x + c2, c1 = " << r.standard.c1.to_string() << ", c2 = "
    << r.standard.c2.to_string() << ", g = " << r.standard.g.to_string() << "\n";
  o << "disc(M0)     " << factored(r.disc_M0) << "\n";
  o << "Delta        " << factored(r.delta) << " (unit " << F->to_string(r.delta_unit) << ")\n";
  o << "I            " << r.index.to_string() << "\n";
  o << "beta2        " << r.beta2.to_string() << "\n";
  o << "alpha2       " << r.alpha2.to_string() << "\n";
  o << "A[pi]        " << to_string(r.frobenius_order) << "\n";
  o << "\norders (a,b,c)  closed  pi  v-max  endo  N(conductor)\n";
  for (const auto& x : r.orders) {
    std::string name = order_label(x.order, r.frobenius_order);
    o << "  " << name << std::string(name.size() < 16 ? 16 - name.size() : 1, ' ')
      << (x.is_closed ? "yes" : "no ") << "     " << (x.contains_pi ? "yes" : "no ") << " "
      << (x.v_maximal ? "yes" : "no ") << "    " << (x.is_endo_ring ? "yes" : "no ") << "   "
      << factored(x.conductor_norm) << "\n";
  }
  const auto rings = r.endo_rings();
  o << "\nendomorphism rings: " << rings.size() << "\n";
  for (const auto& x : rings) o << "  " << order_label(x, r.frobenius_order) << "\n";
  if (!r.modules.empty()) {
    o << "\nmodules\n";
    for (const auto& m : r.modules) o << "  " << m.name << ": " << verdict_line(m, r.frobenius_order) << "\n";
  }
  return o.str();
}

/// Process exit status for an error kind.
inline int exit_code(ErrorKind k) {
  switch (k) {
    case ErrorKind::Config:
      return 2;
    case ErrorKind::Reducible:
    case ErrorKind::BadConstantTerm:
    case ErrorKind::NotWeilAtV:
    case ErrorKind::UnsupportedCharacteristic:
      return 3;
    case ErrorKind::CandidateBound:
      return 5;
    case ErrorKind::Domain:
    case ErrorKind::InternalInconsistency:
    case ErrorKind::NoSolution:
    case ErrorKind::NoCandidate:
      return 4;
  }
  return 4;
}

}  // namespace drinfeld
