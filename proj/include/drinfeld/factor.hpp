#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "drinfeld/error.hpp"
#include "drinfeld/finite_field.hpp"
#include "drinfeld/poly.hpp"

namespace drinfeld {

/// f = unit * prod parts[i].first ^ parts[i].second with monic, square-free,
/// pairwise coprime parts sorted by multiplicity.
struct SquarefreeDecomp {
  FieldPtr field;
  Fe unit;
  std::vector<std::pair<Poly, int>> parts;

  Poly expand() const {
    Poly r = Poly::constant(field, unit);
    for (const auto& [d, i] : parts) r *= pow(d, static_cast<std::uint64_t>(i));
    return r;
  }
};

/// f = unit * prod factors[i].first ^ factors[i].second, monic irreducible
/// factors in canonical order.
struct Factorization {
  FieldPtr field;
  Fe unit;
  std::vector<std::pair<Poly, int>> factors;

  Poly expand() const {
    Poly r = Poly::constant(field, unit);
    for (const auto& [d, i] : factors) r *= pow(d, static_cast<std::uint64_t>(i));
    return r;
  }

  /// Multiset of (degree, multiplicity), sorted.
  std::vector<std::pair<int, int>> pattern() const {
    std::vector<std::pair<int, int>> out;
    for (const auto& [d, i] : factors) out.emplace_back(d.degree(), i);
    std::sort(out.begin(), out.end());
    return out;
  }
};

namespace detail {

/// g with g^p = f, for f whose derivative vanishes.
inline Poly pth_root(const Poly& f) {
  const FiniteField& F = f.F();
  const auto p = static_cast<std::size_t>(F.characteristic());
  std::vector<Fe> v;
  for (std::size_t i = 0; i < f.coeffs().size(); i += p) v.push_back(F.pth_root(f.coeffs()[i]));
  return Poly(f.field(), std::move(v));
}

inline void squarefree_rec(const Poly& f, int scale, std::map<int, Poly>& parts) {
  if (f.degree() <= 0) return;
  const int p = static_cast<int>(f.F().characteristic());
  const Poly df = f.derivative();
  if (df.is_zero()) {
    squarefree_rec(pth_root(f), scale * p, parts);
    return;
  }
  Poly c = gcd(f, df);
  Poly w = f / c;
  for (int i = 1; !w.is_one(); ++i) {
    Poly y = gcd(w, c);
    Poly fac = w / y;
    if (!fac.is_one()) {
      auto it = parts.find(i * scale);
      if (it == parts.end())
        parts.emplace(i * scale, fac);
      else
        it->second *= fac;
    }
    w = std::move(y);
    c = c / w;
  }
  if (!c.is_one()) squarefree_rec(pth_root(c), scale * p, parts);
}

/// x^(q^k) mod f, by k successive q-th powers.
inline Poly frobenius_power(const Poly& x, int k, const Poly& f) {
  const std::uint64_t q = f.F().size();
  Poly h = x % f;
  for (int i = 0; i < k; ++i) h = powmod(h, q, f);
  return h;
}

/// Distinct-degree factorization of a monic square-free f.
inline std::vector<std::pair<Poly, int>> distinct_degree(Poly f) {
  std::vector<std::pair<Poly, int>> out;
  const Poly x = Poly::variable(f.field());
  const std::uint64_t q = f.F().size();
  Poly h = x % f;
  for (int d = 1; 2 * d <= f.degree(); ++d) {
    h = powmod(h, q, f);
    Poly g = gcd(h - x, f);
    if (!g.is_one()) {
      out.emplace_back(g, d);
      f = f / g;
      h = h % f;
    }
  }
  if (f.degree() > 0) out.emplace_back(f, f.degree());
  return out;
}

/// Cantor-Zassenhaus splitting of a monic f whose irreducible factors all
/// have degree d. The random source is seeded deterministically.
inline void equal_degree(const Poly& f, int d, std::mt19937_64& rng, std::vector<Poly>& out) {
  if (f.degree() == d) {
    out.push_back(f);
    return;
  }
  const FiniteField& F = f.F();
  const std::uint64_t q = F.size();
  std::uniform_int_distribution<std::uint64_t> coeff(0, q - 1);
  for (;;) {
    std::vector<Fe> rv(static_cast<std::size_t>(f.degree()));
    for (auto& c : rv) c = Fe{coeff(rng)};
    Poly r(f.field(), std::move(rv));
    if (r.degree() <= 0) continue;
    Poly s(f.field());
    if (F.characteristic() == 2) {
      // Absolute trace down to F_2: sum of r^(2^i), i < abs_degree * d.
      const int k = F.absolute_degree() * d;
      Poly t = r % f;
      s = t;
      for (int i = 1; i < k; ++i) {
        t = mulmod(t, t, f);
        s += t;
      }
    } else {
      // r^((q^d - 1)/2) = (r^(1 + q + ... + q^(d-1)))^((q - 1)/2)
      Poly t = r % f;
      Poly norm = t;
      for (int i = 1; i < d; ++i) {
        t = powmod(t, q, f);
        norm = mulmod(norm, t, f);
      }
      s = powmod(norm, (q - 1) / 2, f) - f.one();
    }
    if (s.is_zero()) continue;
    Poly g = gcd(s, f);
    if (g.is_one() || g.degree() == f.degree()) continue;
    equal_degree(g, d, rng, out);
    equal_degree(f / g, d, rng, out);
    return;
  }
}

}  // namespace detail

/// Square-free decomposition, characteristic-p aware: a vanishing derivative
/// triggers a coefficient-wise p-th root.
inline SquarefreeDecomp squarefree_decompose(const Poly& f) {
  require(!f.is_zero(), ErrorKind::Domain, "square-free decomposition of zero");
  std::map<int, Poly> parts;
  detail::squarefree_rec(f.monic(), 1, parts);
  SquarefreeDecomp out{f.field(), f.lead(), {}};
  for (auto& [i, d] : parts) out.parts.emplace_back(std::move(d), i);
  return out;
}

/// Complete factorization into monic irreducibles.
inline Factorization factor(const Poly& f) {
  require(!f.is_zero(), ErrorKind::Domain, "factorization of zero");
  Factorization out{f.field(), f.lead(), {}};
  std::mt19937_64 rng(0x9e3779b97f4a7c15ULL);
  for (const auto& [sqf, mult] : squarefree_decompose(f).parts) {
    for (const auto& [block, d] : detail::distinct_degree(sqf)) {
      std::vector<Poly> irr;
      detail::equal_degree(block, d, rng, irr);
      for (auto& g : irr) out.factors.emplace_back(std::move(g), mult);
    }
  }
  std::sort(out.factors.begin(), out.factors.end());
  return out;
}

/// Rabin's test.
inline bool is_irreducible(const Poly& f) {
  require(!f.is_zero(), ErrorKind::Domain, "irreducibility of zero");
  const int n = f.degree();
  if (n < 1) return false;
  if (n == 1) return true;
  const Poly g = f.monic();
  const Poly x = Poly::variable(f.field());
  if (detail::frobenius_power(x, n, g) != x % g) return false;
  int m = n;
  for (int r = 2; r <= m; ++r) {
    if (m % r != 0) continue;
    while (m % r == 0) m /= r;
    Poly h = detail::frobenius_power(x, n / r, g);
    if (!gcd(h - x, g).is_one()) return false;
  }
  return true;
}

struct SqrtResult {
  Poly root;                  // monic, root^2 = monic(f)
  std::optional<Fe> unit_root;  // square root of lead(f), when it exists in F_q
};

/// Exact square root up to the unit part. nullopt when monic(f) is not a square.
inline std::optional<SqrtResult> exact_sqrt(const Poly& f) {
  require(!f.is_zero(), ErrorKind::Domain, "square root of zero");
  const FiniteField& F = f.F();
  const Poly g = f.monic();
  if (g.degree() % 2 != 0) return std::nullopt;
  const auto d = static_cast<std::size_t>(g.degree() / 2);
  std::vector<Fe> s(d + 1, FiniteField::zero());
  s[d] = FiniteField::one();
  if (F.characteristic() == 2) {
    for (std::size_t i = 0; i <= d; ++i) s[i] = F.pth_root(g[2 * i]);
  } else {
    const Fe inv2 = F.inv(F.from_int(2));
    // Coefficient of T^(2d-k) in s^2 involves s[d-k] linearly via 2*s[d]*s[d-k].
    for (std::size_t k = 1; k <= d; ++k) {
      Fe acc = g[2 * d - k];
      for (std::size_t j = 1; j < k; ++j) acc = F.sub(acc, F.mul(s[d - j], s[d - k + j]));
      s[d - k] = F.mul(acc, inv2);
    }
  }
  Poly root(f.field(), std::move(s));
  if (root * root != g) return std::nullopt;
  return SqrtResult{std::move(root), F.sqrt(f.lead())};
}

/// All monic divisors in canonical order.
inline std::vector<Poly> divisors(const Poly& f) {
  require(!f.is_zero(), ErrorKind::Domain, "divisors of zero");
  std::vector<Poly> out{f.one()};
  for (const auto& [p, m] : factor(f).factors) {
    std::vector<Poly> next;
    next.reserve(out.size() * static_cast<std::size_t>(m + 1));
    for (const auto& d : out) {
      Poly pk = d;
      next.push_back(pk);
      for (int k = 1; k <= m; ++k) {
        pk *= p;
        next.push_back(pk);
      }
    }
    out = std::move(next);
  }
  std::sort(out.begin(), out.end());
  return out;
}

/// B[y]/(modulus) after checking the modulus is monic irreducible over B.
inline FieldPtr make_extension(const Poly& modulus, std::string symbol) {
  require(modulus.degree() >= 1 && modulus.is_monic(), ErrorKind::Domain,
          "extension modulus must be monic of positive degree");
  require(is_irreducible(modulus), ErrorKind::Domain,
          "extension modulus " + modulus.to_string(symbol) + " is not irreducible");
  return FiniteField::extension(modulus.field(), modulus.coeffs(), std::move(symbol));
}

/// Image of a in the residue field A/p built by make_extension(p, ...).
inline Fe reduce_to_residue(const Poly& a, const Poly& p, const FiniteField& residue) {
  std::vector<Fe> d = (a % p).coeffs();
  return residue.from_digits(d);
}

struct ResidueFactorization {
  FieldPtr residue_field;  // A/p, as an extension of F_q in the symbol T
  Poly reduced;            // M mod p, a polynomial in x over A/p
  Factorization factorization;
};

/// Factorization of M(x) mod p over the residue field A/p.
inline ResidueFactorization residue_factor(const PolyX& M, const Poly& p) {
  require(p.is_monic(), ErrorKind::Domain, "residue prime must be monic");
  FieldPtr R = make_extension(p, "T");
  std::vector<Fe> c;
  c.reserve(M.size());
  for (const auto& a : M) c.push_back(reduce_to_residue(a, p, *R));
  Poly reduced(R, std::move(c));
  require(!reduced.is_zero(), ErrorKind::Domain, "M vanishes modulo p");
  Factorization fac = factor(reduced);
  return {R, std::move(reduced), std::move(fac)};
}

}  // namespace drinfeld
