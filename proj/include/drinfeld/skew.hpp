#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "drinfeld/cubic_field.hpp"
#include "drinfeld/error.hpp"
#include "drinfeld/factor.hpp"
#include "drinfeld/finite_field.hpp"
#include "drinfeld/order_lattice.hpp"
#include "drinfeld/poly.hpp"

namespace drinfeld {

/// L = F_q[y]/(f) for a monic irreducible f over F_q.
inline FieldPtr make_L(const Poly& f, std::string symbol = "y") {
  return make_extension(f, std::move(symbol));
}

/// Image of an element of F_q in L = F_q[y]/(f). Codes coincide.
inline Fe embed(Fe c) { return c; }

/// Element of L{tau}, ascending in tau, with tau * x = x^q * tau where q is
/// the size of the base field of L.
class SkewPoly {
 public:
  explicit SkewPoly(FieldPtr L) : L_(std::move(L)) {
    require(L_ != nullptr && L_->base() != nullptr, ErrorKind::Domain,
            "skew polynomials need an extension field L");
  }
  SkewPoly(FieldPtr L, std::vector<Fe> c) : SkewPoly(std::move(L)) {
    c_ = std::move(c);
    for (Fe x : c_) require(L_->contains(x), ErrorKind::Domain, "coefficient outside L");
    trim();
  }

  static SkewPoly constant(FieldPtr L, Fe c) { return SkewPoly(std::move(L), {c}); }
  static SkewPoly tau_power(FieldPtr L, int k) {
    std::vector<Fe> c(static_cast<std::size_t>(k) + 1, FiniteField::zero());
    c.back() = FiniteField::one();
    return SkewPoly(std::move(L), std::move(c));
  }

  const FieldPtr& field() const { return L_; }
  const FiniteField& L() const { return *L_; }
  const std::vector<Fe>& coeffs() const { return c_; }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  Fe operator[](std::size_t i) const { return i < c_.size() ? c_[i] : FiniteField::zero(); }
  Fe lead() const { return c_.empty() ? FiniteField::zero() : c_.back(); }

  SkewPoly& operator+=(const SkewPoly& o) {
    check(o);
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), FiniteField::zero());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] = L_->add(c_[i], o.c_[i]);
    trim();
    return *this;
  }
  SkewPoly& operator-=(const SkewPoly& o) {
    check(o);
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), FiniteField::zero());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] = L_->sub(c_[i], o.c_[i]);
    trim();
    return *this;
  }
  friend SkewPoly operator+(SkewPoly a, const SkewPoly& b) { return a += b; }
  friend SkewPoly operator-(SkewPoly a, const SkewPoly& b) { return a -= b; }

  /// Left scalar multiplication x * u.
  SkewPoly scaled_left(Fe x) const {
    std::vector<Fe> v(c_);
    for (auto& y : v) y = L_->mul(x, y);
    return SkewPoly(L_, std::move(v));
  }

  friend bool operator==(const SkewPoly& a, const SkewPoly& b) {
    return a.c_ == b.c_ && a.L_->same_as(*b.L_);
  }

  std::string to_string() const {
    if (is_zero()) return "0";
    std::string out;
    for (std::size_t i = c_.size(); i-- > 0;) {
      if (c_[i].code == 0) continue;
      if (!out.empty()) out += " + ";
      std::string cs = L_->to_string(c_[i]);
      if (i == 0) {
        out += cs;
        continue;
      }
      if (c_[i] != FiniteField::one())
        out += (cs.find('+') != std::string::npos ? "(" + cs + ")" : cs) + "*";
      out += "tau";
      if (i > 1) out += "^" + std::to_string(i);
    }
    return out;
  }

 private:
  void trim() {
    while (!c_.empty() && c_.back().code == 0) c_.pop_back();
  }
  void check(const SkewPoly& o) const {
    require(L_ == o.L_ || L_->same_as(*o.L_), ErrorKind::Domain,
            "skew polynomials over different fields");
  }

  FieldPtr L_;
  std::vector<Fe> c_;
};

inline SkewPoly skew_mul(const SkewPoly& u, const SkewPoly& v) {
  require(u.L().same_as(v.L()), ErrorKind::Domain, "skew polynomials over different fields");
  if (u.is_zero() || v.is_zero()) return SkewPoly(u.field());
  const FiniteField& L = u.L();
  std::vector<Fe> out(u.coeffs().size() + v.coeffs().size() - 1, FiniteField::zero());
  for (std::size_t i = 0; i < u.coeffs().size(); ++i) {
    const Fe ui = u.coeffs()[i];
    if (ui.code == 0) continue;
    for (std::size_t j = 0; j < v.coeffs().size(); ++j) {
      const Fe vj = v.coeffs()[j];
      if (vj.code == 0) continue;
      out[i + j] = L.add(out[i + j], L.mul(ui, L.frobenius(vj, static_cast<int>(i))));
    }
  }
  return SkewPoly(u.field(), std::move(out));
}

inline SkewPoly operator*(const SkewPoly& u, const SkewPoly& v) { return skew_mul(u, v); }

/// n = q * d + r with deg r < deg d.
inline std::pair<SkewPoly, SkewPoly> skew_right_divmod(const SkewPoly& n, const SkewPoly& d) {
  require(!d.is_zero(), ErrorKind::Domain, "skew division by zero");
  require(n.L().same_as(d.L()), ErrorKind::Domain, "skew polynomials over different fields");
  const FiniteField& L = n.L();
  const FieldPtr& Lp = n.field();
  const int m = d.degree();
  if (n.degree() < m) return {SkewPoly(Lp), n};
  std::vector<Fe> q(static_cast<std::size_t>(n.degree() - m) + 1, FiniteField::zero());
  SkewPoly r = n;
  while (!r.is_zero() && r.degree() >= m) {
    const int k = r.degree() - m;
    const Fe lam = L.div(r.lead(), L.frobenius(d.lead(), k));
    q[static_cast<std::size_t>(k)] = lam;
    std::vector<Fe> term(static_cast<std::size_t>(k) + 1, FiniteField::zero());
    term.back() = lam;
    r -= skew_mul(SkewPoly(Lp, std::move(term)), d);
  }
  return {SkewPoly(Lp, std::move(q)), std::move(r)};
}

/// Rank-3 Drinfeld module over L, determined by phi_T. gamma(T) is the
/// constant coefficient of phi_T.
struct DrinfeldModule {
  SkewPoly phi_T;

  const FieldPtr& field() const { return phi_T.field(); }
  Fe gamma_T() const { return phi_T[0]; }
  /// [L : F_q]; the Frobenius is tau^n.
  int n() const { return field()->degree(); }
};

/// Why phi_T cannot be a module in the class, or nullopt.
inline std::optional<std::string> module_defect(const SkewPoly& phi_T, const Poly& pv) {
  if (phi_T.degree() != 3) return std::string("rank mismatch");
  const FiniteField& L = phi_T.L();
  require(L.base()->same_as(pv.F()), ErrorKind::Domain, "L is not an extension of F_q");
  Fe acc = FiniteField::zero();
  for (std::size_t i = pv.coeffs().size(); i-- > 0;)
    acc = L.add(L.mul(acc, phi_T[0]), embed(pv.coeffs()[i]));
  if (acc != FiniteField::zero()) return std::string("characteristic mismatch");
  return std::nullopt;
}

inline DrinfeldModule make_module(SkewPoly phi_T, const Poly& pv) {
  if (auto why = module_defect(phi_T, pv)) fail(ErrorKind::Domain, "invalid Drinfeld module: " + *why);
  return {std::move(phi_T)};
}

/// phi_a by Horner's rule in phi_T.
inline SkewPoly phi_of(const DrinfeldModule& D, const Poly& a) {
  const FieldPtr& L = D.field();
  require(L->base()->same_as(a.F()), ErrorKind::Domain, "a is not over the base of L");
  SkewPoly r(L);
  for (std::size_t i = a.coeffs().size(); i-- > 0;) {
    r = skew_mul(r, D.phi_T);
    r += SkewPoly::constant(L, embed(a.coeffs()[i]));
  }
  return r;
}

inline SkewPoly frobenius(const DrinfeldModule& D) { return SkewPoly::tau_power(D.field(), D.n()); }

/// M(pi) = 0 in L{tau}.
inline bool verify_weil_action(const DrinfeldModule& D, const WeilCubic& W) {
  const SkewPoly pi = frobenius(D);
  const PolyX M = W.polynomial();
  SkewPoly r(D.field());
  for (std::size_t i = M.size(); i-- > 0;) {
    r = skew_mul(r, pi);
    r += phi_of(D, M[i]);
  }
  return r.is_zero();
}

/// (n0 + n1 pi + n2 pi^2) / d in k(pi), d monic, content removed.
struct KElem {
  Poly n0, n1, n2, d;

  static KElem make(Poly n0, Poly n1, Poly n2, Poly d) {
    require(!d.is_zero(), ErrorKind::Domain, "KElem with zero denominator");
    KElem e{std::move(n0), std::move(n1), std::move(n2), std::move(d)};
    e.normalize();
    return e;
  }

  friend KElem operator+(const KElem& x, const KElem& y) {
    return make(x.n0 * y.d + y.n0 * x.d, x.n1 * y.d + y.n1 * x.d, x.n2 * y.d + y.n2 * x.d,
                x.d * y.d);
  }

  KElem scaled(const Poly& s) const { return make(n0 * s, n1 * s, n2 * s, d); }

  friend bool operator==(const KElem&, const KElem&) = default;

  std::string to_string() const {
    return "(" + n0.to_string() + ", " + n1.to_string() + ", " + n2.to_string() + ")/" +
           d.to_string();
  }

 private:
  void normalize() {
    Poly g = d;
    for (const Poly* p : {&n0, &n1, &n2})
      if (!p->is_zero()) g = gcd(g, *p);
    g = g.scaled(d.lead());  // so that d / g is monic
    n0 = n0 / g;
    n1 = n1 / g;
    n2 = n2 / g;
    d = d / g;
  }
};

struct BasisElems {
  KElem omega1;
  KElem omega2;
};

/// omega1 = pi~ = (pi + a1/3)/g and omega2 = (alpha2 + beta2 pi~ + pi~^2)/I.
inline BasisElems basis_over_pi(const WeilCubic& W, const StandardForm& S,
                                const MaximalOrderData& D) {
  const FiniteField& F = W.a1.F();
  const Poly s = W.a1.scaled(F.inv(F.from_int(3)));
  const Poly& g = S.g;
  const Poly one = g.one();
  KElem w1 = KElem::make(s, one, g.zero(), g);
  Poly n0 = D.alpha2 * g * g + D.beta2 * g * s + s * s;
  Poly n1 = D.beta2 * g + s.scaled(F.from_int(2));
  KElem w2 = KElem::make(std::move(n0), std::move(n1), one, D.index * g * g);
  return {std::move(w1), std::move(w2)};
}

/// Generators c w1 + b w2 and a w2 of the order, besides 1.
inline std::pair<KElem, KElem> order_generators(const OrderHNF& O, const BasisElems& B) {
  KElem first = B.omega1.scaled(O.c);
  if (!O.b.is_zero()) first = first + B.omega2.scaled(O.b);
  return {std::move(first), B.omega2.scaled(O.a)};
}

/// The quotient w with N = w * phi_d, when e is an endomorphism of D.
inline std::optional<SkewPoly> element_membership(const DrinfeldModule& D, const KElem& e) {
  require(!e.d.is_zero(), ErrorKind::Domain, "KElem with zero denominator");
  const SkewPoly pi = frobenius(D);
  SkewPoly N = phi_of(D, e.n0);
  N += skew_mul(phi_of(D, e.n1), pi);
  N += skew_mul(skew_mul(phi_of(D, e.n2), pi), pi);
  auto [q, r] = skew_right_divmod(N, phi_of(D, e.d));
  if (!r.is_zero()) return std::nullopt;
  return q;
}

struct CandidateVerdict {
  OrderHNF order;
  bool gen1_member = false;  // c w1 + b w2
  bool gen2_member = false;  // a w2
  bool member() const { return gen1_member && gen2_member; }
};

struct Identification {
  OrderHNF order;
  std::vector<CandidateVerdict> verdicts;  // one per candidate, in input order
};

/// The largest candidate whose generators are endomorphisms of D. Every
/// other passing candidate must be contained in it.
inline Identification identify_endo_ring(const DrinfeldModule& D,
                                         const std::vector<OrderHNF>& candidates,
                                         const BasisElems& B) {
  std::vector<CandidateVerdict> verdicts;
  std::optional<std::size_t> best;
  auto index_degree = [](const OrderHNF& O) { return O.a.degree() + O.c.degree(); };
  for (const auto& O : candidates) {
    auto [e1, e2] = order_generators(O, B);
    CandidateVerdict v{O, element_membership(D, e1).has_value(),
                       element_membership(D, e2).has_value()};
    if (v.member() && (!best || index_degree(O) < index_degree(verdicts[*best].order)))
      best = verdicts.size();
    verdicts.push_back(std::move(v));
  }
  if (!best) fail(ErrorKind::NoCandidate, "no candidate order consists of endomorphisms");
  Identification out{verdicts[*best].order, std::move(verdicts)};
  for (const auto& v : out.verdicts)
    if (v.member())
      require(lattice_contains(out.order, v.order), ErrorKind::InternalInconsistency,
              "passing candidates " + to_string(v.order) + " and " + to_string(out.order) +
                  " have no common maximum");
  return out;
}

}  // namespace drinfeld
