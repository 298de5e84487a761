#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "drinfeld/error.hpp"
#include "drinfeld/finite_field.hpp"

namespace drinfeld {

/// Dense univariate polynomial over a FiniteField, ascending coefficients.
///
/// The coefficient vector is always trimmed, so the zero polynomial has no
/// coefficients and degree kZeroDegree.
class Poly {
 public:
  static constexpr int kZeroDegree = -1;

  explicit Poly(FieldPtr F) : F_(std::move(F)) {
    require(F_ != nullptr, ErrorKind::Domain, "polynomial without a field");
  }

  Poly(FieldPtr F, std::vector<Fe> coeffs) : F_(std::move(F)), c_(std::move(coeffs)) {
    require(F_ != nullptr, ErrorKind::Domain, "polynomial without a field");
    for (Fe c : c_)
      require(F_->contains(c), ErrorKind::Domain, "coefficient outside field");
    trim();
  }

  /// Coefficients given as integers, mapped through F_p.
  static Poly from_ints(FieldPtr F, std::initializer_list<long long> coeffs) {
    std::vector<Fe> c;
    c.reserve(coeffs.size());
    for (long long v : coeffs) c.push_back(F->from_int(v));
    return Poly(std::move(F), std::move(c));
  }

  static Poly constant(FieldPtr F, Fe c) { return Poly(std::move(F), {c}); }

  static Poly monomial(FieldPtr F, Fe c, int deg) {
    std::vector<Fe> v(static_cast<std::size_t>(deg) + 1, FiniteField::zero());
    v.back() = c;
    return Poly(std::move(F), std::move(v));
  }

  static Poly variable(FieldPtr F) {
    return monomial(std::move(F), FiniteField::one(), 1);
  }

  const FieldPtr& field() const { return F_; }
  const FiniteField& F() const { return *F_; }
  const std::vector<Fe>& coeffs() const { return c_; }

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_constant() const { return c_.size() <= 1; }
  bool is_one() const { return c_.size() == 1 && c_[0] == FiniteField::one(); }
  bool is_monic() const { return !c_.empty() && c_.back() == FiniteField::one(); }

  Fe operator[](std::size_t i) const {
    return i < c_.size() ? c_[i] : FiniteField::zero();
  }

  Fe lead() const { return c_.empty() ? FiniteField::zero() : c_.back(); }

  Poly zero() const { return Poly(F_); }
  Poly one() const { return constant(F_, FiniteField::one()); }
  Poly constant(Fe c) const { return constant(F_, c); }

  Poly scaled(Fe s) const {
    std::vector<Fe> v(c_);
    for (auto& x : v) x = F_->mul(x, s);
    return Poly(F_, std::move(v));
  }

  /// Multiplication by T^k.
  Poly shifted(int k) const {
    if (is_zero()) return *this;
    std::vector<Fe> v(static_cast<std::size_t>(k), FiniteField::zero());
    v.insert(v.end(), c_.begin(), c_.end());
    return Poly(F_, std::move(v));
  }

  Poly monic() const {
    require(!is_zero(), ErrorKind::Domain, "monic() of the zero polynomial");
    return scaled(F_->inv(lead()));
  }

  Poly derivative() const {
    std::vector<Fe> v;
    for (std::size_t i = 1; i < c_.size(); ++i)
      v.push_back(F_->mul(F_->from_int(static_cast<long long>(i % F_->characteristic())), c_[i]));
    return Poly(F_, std::move(v));
  }

  Fe eval(Fe x) const {
    Fe r = FiniteField::zero();
    for (std::size_t i = c_.size(); i-- > 0;) r = F_->add(F_->mul(r, x), c_[i]);
    return r;
  }

  Poly operator-() const {
    std::vector<Fe> v(c_);
    for (auto& x : v) x = F_->neg(x);
    return Poly(F_, std::move(v));
  }

  Poly& operator+=(const Poly& o) {
    check_field(o);
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), FiniteField::zero());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] = F_->add(c_[i], o.c_[i]);
    trim();
    return *this;
  }

  Poly& operator-=(const Poly& o) {
    check_field(o);
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), FiniteField::zero());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] = F_->sub(c_[i], o.c_[i]);
    trim();
    return *this;
  }

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }

  friend Poly operator*(const Poly& a, const Poly& b) {
    a.check_field(b);
    if (a.is_zero() || b.is_zero()) return a.zero();
    const FiniteField& F = *a.F_;
    std::vector<Fe> v(a.c_.size() + b.c_.size() - 1, FiniteField::zero());
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (a.c_[i].code == 0) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j)
        v[i + j] = F.add(v[i + j], F.mul(a.c_[i], b.c_[j]));
    }
    return Poly(a.F_, std::move(v));
  }

  Poly& operator*=(const Poly& o) { return *this = *this * o; }

  /// Euclidean division: a = q*b + r with deg r < deg b.
  friend std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) {
    a.check_field(b);
    require(!b.is_zero(), ErrorKind::Domain, "polynomial division by zero");
    const FiniteField& F = *a.F_;
    if (a.degree() < b.degree()) return {a.zero(), a};
    std::vector<Fe> r(a.c_);
    std::vector<Fe> q(static_cast<std::size_t>(a.degree() - b.degree()) + 1,
                      FiniteField::zero());
    const Fe inv_lead = F.inv(b.lead());
    const auto db = static_cast<std::size_t>(b.degree());
    for (std::size_t k = r.size(); k-- > db;) {
      if (r[k].code == 0) continue;
      const Fe t = F.mul(r[k], inv_lead);
      q[k - db] = t;
      for (std::size_t j = 0; j <= db; ++j)
        r[k - db + j] = F.sub(r[k - db + j], F.mul(t, b.c_[j]));
    }
    r.resize(db);
    return {Poly(a.F_, std::move(q)), Poly(a.F_, std::move(r))};
  }

  friend Poly operator/(const Poly& a, const Poly& b) { return divmod(a, b).first; }
  friend Poly operator%(const Poly& a, const Poly& b) { return divmod(a, b).second; }

  friend bool operator==(const Poly& a, const Poly& b) {
    return a.c_ == b.c_ && a.F_->same_as(*b.F_);
  }

  /// Canonical order: by degree, then coefficient codes from leading to constant.
  friend std::strong_ordering operator<=>(const Poly& a, const Poly& b) {
    if (auto c = a.degree() <=> b.degree(); c != 0) return c;
    for (std::size_t i = a.c_.size(); i-- > 0;) {
      if (auto c = a.c_[i] <=> b.c_[i]; c != 0) return c;
    }
    return std::strong_ordering::equal;
  }

  std::string to_string(std::string_view var = "T") const {
    if (is_zero()) return "0";
    std::string out;
    for (std::size_t i = c_.size(); i-- > 0;) {
      const Fe c = c_[i];
      if (c.code == 0) continue;
      if (!out.empty()) out += "+";
      std::string cs = F_->to_string(c);
      if (cs.find('+') != std::string::npos) cs = "(" + cs + ")";
      if (i == 0) {
        out += cs;
        continue;
      }
      if (c != FiniteField::one()) out += cs + "*";
      out += var;
      if (i > 1) out += "^" + std::to_string(i);
    }
    return out;
  }

 private:
  void trim() {
    while (!c_.empty() && c_.back().code == 0) c_.pop_back();
  }

  void check_field(const Poly& o) const {
    require(F_ == o.F_ || F_->same_as(*o.F_), ErrorKind::Domain,
            "polynomials over different fields");
  }

  FieldPtr F_;
  std::vector<Fe> c_;
};

inline Poly pow(Poly base, std::uint64_t e) {
  Poly r = base.one();
  while (e != 0) {
    if (e & 1U) r *= base;
    e >>= 1U;
    if (e != 0) base *= base;
  }
  return r;
}

inline Poly mulmod(const Poly& a, const Poly& b, const Poly& m) { return (a * b) % m; }

inline Poly powmod(Poly base, std::uint64_t e, const Poly& m) {
  Poly r = base.one() % m;
  base = base % m;
  while (e != 0) {
    if (e & 1U) r = mulmod(r, base, m);
    e >>= 1U;
    if (e != 0) base = mulmod(base, base, m);
  }
  return r;
}

/// Monic gcd. Both arguments zero is a domain error.
inline Poly gcd(Poly a, Poly b) {
  require(!(a.is_zero() && b.is_zero()), ErrorKind::Domain, "gcd(0, 0)");
  while (!b.is_zero()) {
    Poly r = a % b;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

struct Xgcd {
  Poly g, s, t;  // g = s*a + t*b, g monic
};

inline Xgcd xgcd(const Poly& a, const Poly& b) {
  require(!(a.is_zero() && b.is_zero()), ErrorKind::Domain, "xgcd(0, 0)");
  Poly r0 = a, r1 = b;
  Poly s0 = a.one(), s1 = a.zero();
  Poly t0 = a.zero(), t1 = a.one();
  while (!r1.is_zero()) {
    auto [q, r] = divmod(r0, r1);
    r0 = std::move(r1);
    r1 = std::move(r);
    Poly s2 = s0 - q * s1;
    s0 = std::move(s1);
    s1 = std::move(s2);
    Poly t2 = t0 - q * t1;
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  const Fe li = r0.F().inv(r0.lead());
  return {r0.scaled(li), s0.scaled(li), t0.scaled(li)};
}

inline bool divides(const Poly& d, const Poly& f) {
  require(!d.is_zero(), ErrorKind::Domain, "divisibility by zero");
  return (f % d).is_zero();
}

inline std::optional<Poly> try_exact_div(const Poly& a, const Poly& b) {
  auto [q, r] = divmod(a, b);
  if (!r.is_zero()) return std::nullopt;
  return q;
}

/// a / b, which must be exact; otherwise InternalInconsistency naming `what`.
inline Poly exact_div(const Poly& a, const Poly& b, std::string_view what = "exact division") {
  auto q = try_exact_div(a, b);
  if (!q)
    fail(ErrorKind::InternalInconsistency,
         std::string(what) + ": " + b.to_string() + " does not divide " + a.to_string());
  return *q;
}

/// Multiplicity of the irreducible p in f (f nonzero).
inline int valuation(Poly f, const Poly& p) {
  require(!f.is_zero(), ErrorKind::Domain, "valuation of zero");
  require(p.degree() >= 1, ErrorKind::Domain, "valuation at a unit");
  int v = 0;
  for (;;) {
    auto [q, r] = divmod(f, p);
    if (!r.is_zero()) return v;
    f = std::move(q);
    ++v;
  }
}

/// Polynomial in x with coefficients in A = F_q[T], ascending in x.
using PolyX = std::vector<Poly>;

inline std::string to_string(const PolyX& M, std::string_view var = "x") {
  std::string out;
  for (std::size_t i = M.size(); i-- > 0;) {
    if (M[i].is_zero()) continue;
    if (!out.empty()) out += " + ";
    std::string cs = M[i].to_string();
    const bool unit = M[i].is_one();
    if (cs.find('+') != std::string::npos && i > 0) cs = "(" + cs + ")";
    if (i == 0) {
      out += cs;
    } else {
      if (!unit) out += cs + "*";
      out += var;
      if (i > 1) out += "^" + std::to_string(i);
    }
  }
  return out.empty() ? "0" : out;
}

}  // namespace drinfeld
