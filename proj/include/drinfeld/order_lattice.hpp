#pragma once

#include <algorithm>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "drinfeld/cubic_field.hpp"
#include "drinfeld/error.hpp"
#include "drinfeld/factor.hpp"
#include "drinfeld/poly.hpp"

namespace drinfeld {

/// Dense 3x3 matrix over a ring whose elements have no default value.
template <class R>
class Mat3 {
 public:
  Mat3(std::initializer_list<R> entries) : e_(entries) {
    require(e_.size() == 9, ErrorKind::Domain, "Mat3 needs nine entries");
  }
  explicit Mat3(std::vector<R> entries) : e_(std::move(entries)) {
    require(e_.size() == 9, ErrorKind::Domain, "Mat3 needs nine entries");
  }

  const R& operator()(int i, int j) const { return e_[static_cast<std::size_t>(3 * i + j)]; }
  R& operator()(int i, int j) { return e_[static_cast<std::size_t>(3 * i + j)]; }

  friend Mat3 operator*(const Mat3& A, const Mat3& B) {
    std::vector<R> out;
    out.reserve(9);
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j)
        out.push_back(A(i, 0) * B(0, j) + A(i, 1) * B(1, j) + A(i, 2) * B(2, j));
    return Mat3(std::move(out));
  }

  friend bool operator==(const Mat3& A, const Mat3& B) { return A.e_ == B.e_; }

 private:
  std::vector<R> e_;
};

/// The sub-lattice A*1 + A*(c w1 + b w2) + A*(a w2) of the maximal order,
/// with (1, w1, w2) the integral basis. a and c monic, deg b < deg a.
struct OrderHNF {
  Poly a, b, c;

  friend bool operator==(const OrderHNF&, const OrderHNF&) = default;
};

/// Canonical order: index degree first, then (a, b, c).
inline bool canonical_less(const OrderHNF& x, const OrderHNF& y) {
  const int dx = x.a.degree() + x.c.degree();
  const int dy = y.a.degree() + y.c.degree();
  if (dx != dy) return dx < dy;
  if (x.a != y.a) return x.a < y.a;
  if (x.b != y.b) return x.b < y.b;
  return x.c < y.c;
}

inline std::string to_string(const OrderHNF& O) {
  return "(" + O.a.to_string() + "," + O.b.to_string() + "," + O.c.to_string() + ")";
}

/// Coordinates of (w1^2, w2^2, w1 w2) over (1, w1, w2).
using MultTable = Mat3<Poly>;

/// Multiplication matrix of the integral basis, from t^3 = -c1 t - c2,
/// w1 = t and w2 = (alpha + beta t + t^2)/I. Every division is checked.
inline MultTable mult_table(const StandardForm& S, const Poly& I, const Poly& alpha,
                            const Poly& beta) {
  const FiniteField& F = I.F();
  const Poly& c1 = S.c1;
  const Poly& c2 = S.c2;
  const Poly I2 = I * I;
  const Fe two = F.from_int(2);
  const Poly b2 = beta * beta;

  const Poly x21 = -(alpha * alpha) - alpha * b2 + c1 * alpha - (c2 * beta).scaled(two);
  const Poly x22 = -(b2 * beta) - c1 * beta - c2;
  const Poly x23 = b2 - c1 + alpha.scaled(two);
  const Poly x31 = -(alpha * beta) - c2;
  const Poly x32 = alpha - b2 - c1;

  return MultTable{
      -alpha, -beta, I,
      exact_div(x21, I2, "mult table X21"), exact_div(x22, I2, "mult table X22"),
      exact_div(x23, I, "mult table X23"),
      exact_div(x31, I, "mult table X31"), exact_div(x32, I, "mult table X32"), beta,
  };
}

/// True iff the lattice O is closed under multiplication: M1 M2 H^-1 has
/// entries in A. H^-1 = adj(H) / (a c), so the test is exact divisibility of
/// M1 M2 adj(H) by a c.
inline bool closure_check(const OrderHNF& O, const MultTable& M2) {
  const Poly& a = O.a;
  const Poly& b = O.b;
  const Poly& c = O.c;
  require(!a.is_zero() && !c.is_zero(), ErrorKind::Domain, "degenerate HNF");
  const Poly z = a.zero();
  const FiniteField& F = a.F();
  const MultTable M1{c * c, b * b, (b * c).scaled(F.from_int(2)),
                     z,     a * a, z,
                     z,     a * b, a * c};
  const MultTable adjH{a * c, z, z,
                       z,     a, -b,
                       z,     z, c};
  const MultTable P = M1 * M2 * adjH;
  const Poly det = a * c;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      if (!divides(det, P(i, j))) return false;
  return true;
}

/// pi = -a1/3 + g w1 lies in O iff some b0, c0 in A have b0 c = g and
/// b0 b = -c0 a, i.e. c | g and a | b (g / c).
inline bool contains_frobenius(const OrderHNF& O, const Poly& g) {
  if (!divides(O.c, g)) return false;
  return divides(O.a, O.b * (g / O.c));
}

/// When pv | a2 the order must be maximal at every place above v, i.e.
/// its conductor norm (ac)^2 is prime to pv. Otherwise containing pi suffices.
inline bool v_maximality(const OrderHNF& O, const WeilCubic& W, const LocalData& L) {
  if (!L.v_splits_a2) return true;
  return gcd(W.pv, O.a * O.c).is_one();
}

struct OrderDisc {
  Poly disc;            // (ac)^2 * delta, monic
  Poly conductor_norm;  // (ac)^2, monic
};

inline OrderDisc order_disc(const OrderHNF& O, const Poly& delta) {
  Poly ac = (O.a * O.c).monic();
  Poly norm = ac * ac;
  return {(norm * delta).monic(), norm};
}

/// O_small is a sub-lattice of O_big.
inline bool lattice_contains(const OrderHNF& big, const OrderHNF& small) {
  if (!divides(big.c, small.c) || !divides(big.a, small.a)) return false;
  const Poly y = small.c / big.c;
  return divides(big.a, small.b - y * big.b);
}

/// HNF of A[pi] = A + A g w1 + A g^2 I w2.
inline OrderHNF frobenius_order(const Poly& g, const Poly& I) {
  return {(g * g * I).monic(), I.zero(), g.monic()};
}

inline OrderHNF maximal_order_hnf(const FieldPtr& F) {
  const Poly one = Poly::constant(F, FiniteField::one());
  return {one, one.zero(), one};
}

struct OrderReport {
  OrderHNF order;
  bool is_closed = false;
  bool contains_pi = false;
  bool v_maximal = false;
  Poly disc;
  Poly conductor_norm;
  bool is_endo_ring = false;
};

namespace detail {

inline std::uint64_t count_polys_below(std::uint64_t q, int deg, std::uint64_t cap) {
  return ipow(q, std::max(deg, 0), cap);
}

}  // namespace detail

/// Number of HNF triples the enumerator visits:
/// sum over c | g, a | g^2 I of q^deg gcd(a, g/c).
inline std::uint64_t candidate_count(const Poly& g, const Poly& I, std::uint64_t cap) {
  const std::uint64_t q = g.F().size();
  std::uint64_t total = 0;
  const auto as = divisors(g * g * I);
  for (const auto& c : divisors(g)) {
    const Poly gc = g / c;
    for (const auto& a : as) {
      total += detail::count_polys_below(q, gcd(a, gc).degree(), cap);
      if (total > cap) return cap + 1;
    }
  }
  return total;
}

/// Every HNF triple that can contain pi: c | g, a | g^2 I, deg b < deg a and
/// a | b (g/c). With g = 1 this is a | I, b = 0, c = 1.
inline std::vector<OrderHNF> candidate_orders(const Poly& g, const Poly& I) {
  const FieldPtr& F = g.field();
  std::vector<OrderHNF> out;
  const auto as = divisors(g * g * I);
  for (const auto& c : divisors(g)) {
    const Poly gc = g / c;
    for (const auto& a : as) {
      const Poly h = gcd(a, gc);
      const Poly step = a / h;
      const int free_deg = h.degree();
      const std::uint64_t n = detail::count_polys_below(F->size(), free_deg, std::uint64_t{1} << 40);
      for (std::uint64_t k = 0; k < n; ++k) {
        Poly t = detail::poly_from_counter(F, k, free_deg);
        out.push_back({a, (step * t) % a, c});
      }
    }
  }
  std::sort(out.begin(), out.end(), canonical_less);
  return out;
}

struct OrderAnalysis {
  LocalData local;
  StandardForm standard;
  MaximalOrderData maximal;
  MultTable table;
  std::vector<OrderReport> candidates;  // every visited triple, canonical order
  std::vector<OrderReport> endo_rings;  // the sublist with is_endo_ring
};

inline constexpr std::uint64_t kDefaultCandidateBound = 1'000'000;

inline OrderReport evaluate_candidate(const OrderHNF& O, const WeilCubic& W, const LocalData& L,
                                      const StandardForm& S, const MaximalOrderData& D,
                                      const MultTable& M2) {
  OrderReport r{O, false, false, false, O.a, O.a, false};
  r.is_closed = closure_check(O, M2);
  r.contains_pi = contains_frobenius(O, S.g);
  r.v_maximal = v_maximality(O, W, L);
  auto [disc, norm] = order_disc(O, D.delta);
  r.disc = std::move(disc);
  r.conductor_norm = std::move(norm);
  r.is_endo_ring = r.is_closed && r.contains_pi && r.v_maximal;
  return r;
}

/// Full pipeline from the Weil polynomial to the orders occurring as
/// endomorphism rings in its isogeny class.
inline OrderAnalysis analyze_orders(const WeilCubic& W,
                                    std::uint64_t candidate_bound = kDefaultCandidateBound) {
  LocalData L = validate_weil_necessary(W);
  StandardForm S = standard_form(W);
  MaximalOrderData D = maximal_order(S);
  MultTable M2 = mult_table(S, D.index, D.alpha2, D.beta2);

  const std::uint64_t count = candidate_count(S.g, D.index, candidate_bound);
  if (count > candidate_bound)
    fail(ErrorKind::CandidateBound, "candidate space exceeds the bound of " +
                                        std::to_string(candidate_bound) + " triples");

  OrderAnalysis out{std::move(L), std::move(S), std::move(D), std::move(M2), {}, {}};
  for (const auto& O : candidate_orders(out.standard.g, out.maximal.index)) {
    OrderReport r = evaluate_candidate(O, W, out.local, out.standard, out.maximal, out.table);
    if (r.is_endo_ring) out.endo_rings.push_back(r);
    out.candidates.push_back(std::move(r));
  }

  const OrderHNF omax = maximal_order_hnf(W.field());
  require(!out.endo_rings.empty() && out.endo_rings.front().order == omax,
          ErrorKind::InternalInconsistency, "maximal order did not qualify");
  return out;
}

inline std::vector<OrderReport> enumerate_endo_rings(const WeilCubic& W,
                                                     std::uint64_t candidate_bound = kDefaultCandidateBound) {
  return analyze_orders(W, candidate_bound).endo_rings;
}

}  // namespace drinfeld
