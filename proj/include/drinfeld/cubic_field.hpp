#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "drinfeld/error.hpp"
#include "drinfeld/factor.hpp"
#include "drinfeld/finite_field.hpp"
#include "drinfeld/poly.hpp"

namespace drinfeld {

/// Isogeny-class descriptor: M(x) = x^3 + a1 x^2 + a2 x + mu * pv^m.
struct WeilCubic {
  Poly a1;
  Poly a2;
  Fe mu;
  Poly pv;
  int m;

  const FieldPtr& field() const { return a1.field(); }

  Poly a0() const {
    require(m >= 0, ErrorKind::BadConstantTerm, "negative exponent m");
    return pow(pv, static_cast<std::uint64_t>(m)).scaled(mu);
  }

  /// Coefficients of M in x, ascending.
  PolyX polynomial() const { return {a0(), a2, a1, a1.one()}; }

  /// Splits an explicit constant term as mu * pv^m.
  static WeilCubic from_coefficients(Poly a1, Poly a2, const Poly& a0, Poly pv) {
    require(!a0.is_zero(), ErrorKind::BadConstantTerm, "constant term is zero");
    require(pv.degree() >= 1 && pv.is_monic(), ErrorKind::BadConstantTerm,
            "pv must be monic of positive degree");
    const int m = valuation(a0, pv);
    const Poly rest = a0 / pow(pv, static_cast<std::uint64_t>(m));
    require(rest.is_constant(), ErrorKind::BadConstantTerm,
            "constant term " + a0.to_string() + " is not a unit times a power of " +
                pv.to_string());
    return {std::move(a1), std::move(a2), rest.lead(), std::move(pv), m};
  }
};

/// Local data of the isogeny class at v.
struct LocalData {
  int height = 0;
  int etale_degree = 0;
  std::vector<std::pair<int, int>> residue_pattern;  // (degree, multiplicity) of M mod pv
  bool supersingular = false;
  bool v_splits_a2 = false;  // pv | a2
};

/// Depressed and standardized cubic x^3 + c1 x + c2.
struct StandardForm {
  Poly b1, b2;  // x^3 + b1 x + b2 is M shifted by a1/3
  Poly g1, g2;  // square part of b1, cube part of b2
  Poly g;       // gcd(g1, g2)
  Poly c1, c2;  // b1 / g^2, b2 / g^3
};

struct MaximalOrderData {
  Poly disc_M0;  // -4 c1^3 - 27 c2^2
  Poly delta;    // field discriminant, monic
  Fe delta_unit;
  Poly index;    // I, monic, I^2 * delta = disc_M0 up to a unit
  Poly alpha2;
  Poly beta2;
};

inline void require_supported_characteristic(const FiniteField& F) {
  const auto p = F.characteristic();
  require(p != 2 && p != 3, ErrorKind::UnsupportedCharacteristic,
          "characteristic " + std::to_string(p) +
              " is not supported (the depressed-cubic transform divides by 3 and "
              "the discriminant formula needs p != 2)");
}

/// Sub-degree of M mod pv: the least i with pv not dividing the x^i coefficient.
inline int height(const WeilCubic& W) {
  const PolyX M = W.polynomial();
  for (int i = 0; i < 3; ++i) {
    const Poly& c = M[static_cast<std::size_t>(i)];
    if (c.is_zero() || divides(W.pv, c)) continue;
    return i;
  }
  return 3;
}

namespace detail {

/// Roots of M in A. A root divides a0 = mu pv^m, so it is u * pv^j with
/// u in F_q^*, 0 <= j <= m. For fixed j the coefficients of M(u pv^j) in T
/// are cubics in u over F_q; their gcd carries the admissible u.
inline std::vector<Poly> roots_in_A(const WeilCubic& W) {
  const FieldPtr& F = W.field();
  const PolyX M = W.polynomial();
  std::vector<Poly> out;
  for (int j = 0; j <= W.m; ++j) {
    const Poly P = pow(W.pv, static_cast<std::uint64_t>(j));
    const Poly t3 = P * P * P;
    const Poly t2 = M[2] * P * P;
    const Poly t1 = M[1] * P;
    const Poly& t0 = M[0];
    const int top = std::max({t3.degree(), t2.degree(), t1.degree(), t0.degree()});
    std::optional<Poly> acc;
    for (int k = 0; k <= top; ++k) {
      const auto kk = static_cast<std::size_t>(k);
      Poly cu(F, {t0[kk], t1[kk], t2[kk], t3[kk]});
      if (cu.is_zero()) continue;
      acc = acc ? gcd(*acc, cu) : cu.monic();
    }
    if (!acc || acc->degree() < 1) continue;
    for (const auto& [fac, mult] : factor(*acc).factors) {
      (void)mult;
      if (fac.degree() != 1) continue;
      const Fe u = F->neg(fac[0]);
      if (u == FiniteField::zero()) continue;
      out.push_back(P.scaled(u));
    }
  }
  return out;
}

/// The roots of M with positive v-adic valuation must all share one
/// valuation; otherwise the local factor at v splits and more than one
/// factor has constant term divisible by pv.
inline bool single_local_slope(const WeilCubic& W, int h) {
  const PolyX M = W.polynomial();
  const int m = W.m;
  for (int i = 1; i < h; ++i) {
    const Poly& c = M[static_cast<std::size_t>(i)];
    if (c.is_zero()) continue;
    const int v = valuation(c, W.pv);
    if (h * v < m * (h - i)) return false;
  }
  return true;
}

}  // namespace detail

/// Necessary conditions for M to be a rank-3 Weil polynomial with field
/// endomorphism algebra, and the local data at v.
inline LocalData validate_weil_necessary(const WeilCubic& W) {
  require_supported_characteristic(*W.field());
  require(W.mu != FiniteField::zero(), ErrorKind::BadConstantTerm, "mu must be nonzero");
  require(W.m >= 0, ErrorKind::BadConstantTerm, "m must be non-negative");
  require(W.pv.degree() >= 1 && W.pv.is_monic() && is_irreducible(W.pv),
          ErrorKind::BadConstantTerm, "pv = " + W.pv.to_string() + " is not monic irreducible");

  const auto roots = detail::roots_in_A(W);
  if (!roots.empty())
    fail(ErrorKind::Reducible, "M(x) = " + to_string(W.polynomial()) +
                                   " has the root " + roots.front().to_string() + " in k");

  LocalData L;
  L.height = height(W);
  if (L.height == 0)
    fail(ErrorKind::NotWeilAtV, "pv does not divide the constant term of M (zero sub-degree)");
  if (!detail::single_local_slope(W, L.height))
    fail(ErrorKind::NotWeilAtV,
         "the roots of M above v have different valuations, so the local factor "
         "at v is reducible");
  L.etale_degree = 3 - L.height;
  L.supersingular = L.height == 3;
  L.v_splits_a2 = W.a2.is_zero() || divides(W.pv, W.a2);
  L.residue_pattern = residue_factor(W.polynomial(), W.pv).factorization.pattern();
  return L;
}

namespace detail {

inline Poly square_part(const Poly& b, int power) {
  Poly g = b.one();
  for (const auto& [d, i] : squarefree_decompose(b).parts)
    g *= drinfeld::pow(d, static_cast<std::uint64_t>(i / power));
  return g;
}

}  // namespace detail

inline StandardForm standard_form(const WeilCubic& W) {
  const FieldPtr& Fp = W.field();
  const FiniteField& F = *Fp;
  require_supported_characteristic(F);
  const Fe inv3 = F.inv(F.from_int(3));
  const Fe two_over_27 = F.div(F.from_int(2), F.from_int(27));
  const Poly& a1 = W.a1;
  const Poly& a2 = W.a2;

  StandardForm S{a1, a1, a1, a1, a1, a1, a1};
  S.b1 = a2 - (a1 * a1).scaled(inv3);
  S.b2 = (a1 * a1 * a1).scaled(two_over_27) - (a1 * a2).scaled(inv3) + W.a0();
  require(!S.b2.is_zero(), ErrorKind::Reducible, "depressed cubic has the root 0");

  S.g2 = detail::square_part(S.b2, 3);
  if (S.b1.is_zero()) {
    S.g1 = S.b1;
    S.g = S.g2;
  } else {
    S.g1 = detail::square_part(S.b1, 2);
    S.g = gcd(S.g1, S.g2);
  }
  S.c1 = exact_div(S.b1, S.g * S.g, "standard form c1");
  S.c2 = exact_div(S.b2, S.g * S.g * S.g, "standard form c2");

  if (!S.c1.is_zero()) {
    for (const auto& [p, e] : factor(gcd(S.c1, S.c2)).factors) {
      (void)e;
      require(valuation(S.c1, p) < 2 || valuation(S.c2, p) < 3,
              ErrorKind::InternalInconsistency,
              "standard form is not standard at " + p.to_string());
    }
  }
  return S;
}

inline Poly cubic_discriminant(const Poly& c1, const Poly& c2) {
  const FiniteField& F = c1.F();
  return (c1 * c1 * c1).scaled(F.from_int(-4)) - (c2 * c2).scaled(F.from_int(27));
}

/// Discriminant of k(pi), including its unit: lambda * D * gcd(D2 D4, c2)^2
/// from the square-free decomposition lambda * prod D_i^i of disc(M0).
/// Cross-checked prime by prime against the valuation criterion.
inline Poly field_discriminant(const StandardForm& S) {
  const Poly disc = cubic_discriminant(S.c1, S.c2);
  require(!disc.is_zero(), ErrorKind::Reducible, "M0 is inseparable");
  const SquarefreeDecomp sf = squarefree_decompose(disc);

  Poly D = disc.one();
  Poly D24 = disc.one();
  for (const auto& [d, i] : sf.parts) {
    if (i % 2 == 1) D *= d;
    if (i == 2 || i == 4) D24 *= d;
  }
  const Poly h = gcd(D24, S.c2);
  const Poly delta = (D * h * h).scaled(sf.unit);

  for (const auto& [p, e] : factor(disc).factors) {
    const int vd = e;
    const int v1 = S.c1.is_zero() ? 1 << 20 : valuation(S.c1, p);
    const int v2 = valuation(S.c2, p);
    int expected = 0;
    if (v1 >= v2 && v2 >= 1)
      expected = 2;
    else if (vd % 2 == 1)
      expected = 1;
    require(valuation(delta, p) == expected, ErrorKind::InternalInconsistency,
            "field discriminant disagrees with the valuation criterion at " + p.to_string());
  }
  return delta;
}

/// I with I^2 * delta = disc(M0), I monic.
inline Poly order_index(const StandardForm& S, const Poly& delta) {
  const Poly disc = cubic_discriminant(S.c1, S.c2);
  const Poly quotient = exact_div(disc, delta, "index: delta does not divide disc(M0)");
  const auto root = exact_sqrt(quotient);
  if (!root || !root->unit_root)
    fail(ErrorKind::InternalInconsistency,
         "index: disc(M0)/delta = " + quotient.to_string() + " is not a square");
  return root->root;
}

namespace detail {

inline Poly poly_from_counter(const FieldPtr& F, std::uint64_t counter, int len) {
  std::vector<Fe> c(static_cast<std::size_t>(len));
  const std::uint64_t q = F->size();
  for (auto& x : c) {
    x = Fe{counter % q};
    counter /= q;
  }
  return Poly(F, std::move(c));
}

inline bool beta_condition(const StandardForm& S, const Poly& beta, const Poly& mod1,
                           const Poly& mod2) {
  const FiniteField& F = beta.F();
  const Poly b2 = beta * beta;
  const Poly fprime = b2.scaled(F.from_int(3)) + S.c1;
  if (!(fprime % mod1).is_zero()) return false;
  const Poly f = b2 * beta + S.c1 * beta + S.c2;
  return (f % mod2).is_zero();
}

inline std::uint64_t ipow(std::uint64_t b, int e, std::uint64_t cap) {
  std::uint64_t r = 1;
  for (int i = 0; i < e; ++i) {
    if (r > cap / b) return cap + 1;
    r *= b;
  }
  return r;
}

}  // namespace detail

/// All beta2 with deg < 2 deg I satisfying 3 beta^2 + c1 = 0 mod I and
/// beta^3 + c1 beta + c2 = 0 mod I^2, in canonical order.
inline std::vector<Poly> solve_beta_exhaustive(const StandardForm& S, const Poly& I) {
  const FieldPtr& F = I.field();
  const Poly I2 = I * I;
  const int len = I2.degree();
  const std::uint64_t total = detail::ipow(F->size(), len, std::uint64_t{1} << 40);
  std::vector<Poly> out;
  for (std::uint64_t n = 0; n < total; ++n) {
    Poly beta = detail::poly_from_counter(F, n, len);
    if (detail::beta_condition(S, beta, I, I2)) out.push_back(std::move(beta));
  }
  std::sort(out.begin(), out.end());
  return out;
}

namespace detail {

inline Poly lift_from_residue(Fe r, const FiniteField& R, const FieldPtr& F) {
  return Poly(F, R.digits(r));
}

/// Solutions modulo p^k of the double-root system, digit by digit.
inline std::vector<Poly> solve_beta_prime_power(const StandardForm& S, const Poly& p, int k) {
  const FieldPtr& F = p.field();
  const FiniteField& Fq = *F;
  FieldPtr R = make_extension(p, "T");
  const Fe three = Fq.from_int(3);
  const Fe six = Fq.from_int(6);

  auto f_of = [&](const Poly& b) { return b * b * b + S.c1 * b + S.c2; };
  auto fp_of = [&](const Poly& b) { return (b * b).scaled(three) + S.c1; };

  // Level 1: double roots of M0 modulo p, then f(beta) = 0 mod p^2.
  std::vector<Poly> level;
  {
    const PolyX M0{S.c2, S.c1, S.c1.zero(), S.c1.one()};
    std::vector<Fe> c;
    for (const auto& a : M0) c.push_back(reduce_to_residue(a, p, *R));
    const Poly m0(R, std::move(c));
    const Poly dm0 = m0.derivative();
    const Poly common = dm0.is_zero() ? m0.monic() : gcd(m0, dm0);
    const Poly p2 = p * p;
    if (common.degree() >= 1) {
      for (const auto& [fac, e] : factor(common).factors) {
        (void)e;
        if (fac.degree() != 1) continue;
        Poly beta = lift_from_residue(R->neg(fac[0]), *R, F);
        if ((f_of(beta) % p2).is_zero()) level.push_back(std::move(beta));
      }
    }
  }

  Poly pj = p;
  for (int j = 1; j < k && !level.empty(); ++j) {
    const Poly pj1 = pj * p;
    const Poly mod2 = pj1 * pj1;
    std::vector<Poly> next;
    for (const auto& beta : level) {
      // f'(beta + p^j d) = f'(beta) + 6 beta p^j d mod p^(j+1).
      const Fe lin = reduce_to_residue(beta.scaled(six), p, *R);
      const Poly fpj = exact_div(fp_of(beta), pj, "beta lifting");
      const Fe cst = reduce_to_residue(fpj, p, *R);
      std::vector<Poly> digits;
      if (lin != FiniteField::zero()) {
        digits.push_back(lift_from_residue(R->neg(R->div(cst, lin)), *R, F));
      } else if (cst == FiniteField::zero()) {
        for (std::uint64_t n = 0; n < R->size(); ++n) digits.push_back(lift_from_residue(Fe{n}, *R, F));
      }
      for (const auto& d : digits) {
        Poly cand = beta + d * pj;
        if ((fp_of(cand) % pj1).is_zero() && (f_of(cand) % mod2).is_zero())
          next.push_back(std::move(cand));
      }
    }
    level = std::move(next);
    pj = pj1;
  }
  return level;
}

}  // namespace detail

/// Solutions modulo I via per-prime lifting and CRT, canonical order.
/// Every solution modulo I^2 is congruent mod I to one of these.
inline std::vector<Poly> solve_beta_local(const StandardForm& S, const Poly& I) {
  std::vector<Poly> acc{I.zero()};
  Poly modulus = I.one();
  for (const auto& [p, k] : factor(I).factors) {
    const Poly pk = pow(p, static_cast<std::uint64_t>(k));
    const auto local = detail::solve_beta_prime_power(S, p, k);
    if (local.empty()) return {};
    // x = a mod modulus, x = b mod pk  =>  x = a + modulus * ((b - a) * s mod pk)
    const Xgcd e = xgcd(modulus, pk);
    std::vector<Poly> next;
    for (const auto& a : acc)
      for (const auto& b : local) {
        Poly t = ((b - a) * e.s) % pk;
        next.push_back((a + modulus * t) % (modulus * pk));
      }
    acc = std::move(next);
    modulus = modulus * pk;
  }
  std::sort(acc.begin(), acc.end());
  acc.erase(std::unique(acc.begin(), acc.end()), acc.end());
  return acc;
}

inline constexpr std::uint64_t kExhaustiveBetaLimit = 1'000'000;

/// (alpha2, beta2) of the integral basis (1, t, (alpha2 + beta2 t + t^2)/I).
inline std::pair<Poly, Poly> integral_basis(const StandardForm& S, const Poly& I) {
  const FieldPtr& F = I.field();
  const FiniteField& Fq = *F;
  if (I.is_one()) return {I.zero(), I.zero()};

  const std::uint64_t space = detail::ipow(Fq.size(), 2 * I.degree(), kExhaustiveBetaLimit);
  Poly beta(F);
  if (space <= kExhaustiveBetaLimit) {
    const auto sols = solve_beta_exhaustive(S, I);
    if (sols.empty()) fail(ErrorKind::NoSolution, "no beta2 solves the integral-basis system");
    beta = sols.front();
    // Two valid omega2 generate the same maximal order only if they differ by
    // an element of A + A t, i.e. beta2 is unique modulo I.
    for (const auto& s : sols)
      require(divides(I, s - beta), ErrorKind::InternalInconsistency,
              "integral-basis solutions are not unique modulo I");
  } else {
    const auto sols = solve_beta_local(S, I);
    if (sols.empty()) fail(ErrorKind::NoSolution, "no beta2 solves the integral-basis system");
    require(sols.size() == 1, ErrorKind::InternalInconsistency,
            "integral-basis solutions are not unique modulo I");
    beta = sols.front();
  }
  Poly alpha = (beta * beta).scaled(Fq.from_int(-2)) % I;

  require(detail::beta_condition(S, beta, I, I * I), ErrorKind::InternalInconsistency,
          "beta2 fails its congruences");
  const Poly alpha_check = S.c1.scaled(Fq.div(Fq.from_int(2), Fq.from_int(3))) - alpha;
  require(divides(I, alpha_check), ErrorKind::InternalInconsistency,
          "alpha2 != 2 c1 / 3 mod I");
  return {std::move(alpha), std::move(beta)};
}

inline MaximalOrderData maximal_order(const StandardForm& S) {
  const Poly disc = cubic_discriminant(S.c1, S.c2);
  const Poly delta_full = field_discriminant(S);
  const Poly I = order_index(S, delta_full);
  require(I * I * delta_full == disc, ErrorKind::InternalInconsistency,
          "disc(M0) != I^2 * delta");
  auto [alpha, beta] = integral_basis(S, I);
  return {disc, delta_full.monic(), delta_full.lead(), I, std::move(alpha), std::move(beta)};
}

}  // namespace drinfeld
