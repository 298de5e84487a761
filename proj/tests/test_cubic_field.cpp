#include <gtest/gtest.h>

#include <algorithm>
#include <functional>
#include <random>

#include "drinfeld/cubic_field.hpp"
#include "oracles.hpp"

using namespace drinfeld;

namespace {

FieldPtr F5() { return FiniteField::prime(5); }
Poly P5(std::initializer_list<long long> c) { return Poly::from_ints(F5(), c); }

WeilCubic example_cubic() { return {P5({1, 1}), P5({4, 3, 1}), Fe{4}, P5({0, 1}), 3}; }

/// Is u a unit multiple of v?
bool associate(const Poly& u, const Poly& v) {
  return !u.is_zero() && !v.is_zero() && u.monic() == v.monic();
}

void expect_error(ErrorKind kind, const std::function<void()>& f) {
  try {
    f();
    ADD_FAILURE() << "expected " << to_string(kind);
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), kind) << e.what();
  }
}

}  // namespace

TEST(Validate, F5Example) {
  const LocalData L = validate_weil_necessary(example_cubic());
  EXPECT_EQ(L.height, 1);
  EXPECT_EQ(L.etale_degree, 2);
  EXPECT_FALSE(L.supersingular);
  EXPECT_FALSE(L.v_splits_a2);
  EXPECT_EQ(L.residue_pattern, (std::vector<std::pair<int, int>>{{1, 1}, {1, 2}}));
}

TEST(Validate, Heights) {
  // Single slope 1 at v: supersingular.
  WeilCubic s{P5({0, 1}), P5({0, 0, 1}), Fe{3}, P5({0, 1}), 3};
  const LocalData ls = validate_weil_necessary(s);
  EXPECT_EQ(ls.height, 3);
  EXPECT_TRUE(ls.supersingular);
  EXPECT_EQ(ls.residue_pattern, (std::vector<std::pair<int, int>>{{1, 3}}));

  // pv | a2, pv not dividing a1: height 2, x^2 (x + a1) mod pv.
  WeilCubic h2{P5({2, 1}), P5({0, 1}), Fe{1}, P5({0, 1}), 2};
  const LocalData l2 = validate_weil_necessary(h2);
  EXPECT_EQ(l2.height, 2);
  EXPECT_TRUE(l2.v_splits_a2);
  EXPECT_EQ(l2.residue_pattern, (std::vector<std::pair<int, int>>{{1, 1}, {1, 2}}));
}

TEST(Validate, Errors) {
  // x^3 - T^3 has the root T.
  expect_error(ErrorKind::Reducible, [] {
    validate_weil_necessary({P5({}), P5({}), Fe{4}, P5({0, 1}), 3});
  });
  // pv does not divide the constant term.
  expect_error(ErrorKind::NotWeilAtV, [] {
    validate_weil_necessary({P5({1, 1}), P5({2}), Fe{2}, P5({0, 1}), 0});
  });
  // Newton polygon at v with two slopes among the non-unit roots.
  expect_error(ErrorKind::NotWeilAtV, [] {
    validate_weil_necessary({P5({0, 0, 1}), P5({0, 1}), Fe{1}, P5({0, 1}), 5});
  });
  expect_error(ErrorKind::UnsupportedCharacteristic, [] {
    auto F = FiniteField::prime(3);
    validate_weil_necessary({Poly::from_ints(F, {1}), Poly::from_ints(F, {0, 1}), Fe{1},
                             Poly::from_ints(F, {0, 1}), 1});
  });
  expect_error(ErrorKind::UnsupportedCharacteristic, [] {
    auto F = FiniteField::prime(2);
    validate_weil_necessary({Poly::from_ints(F, {1}), Poly::from_ints(F, {0, 1}), Fe{1},
                             Poly::from_ints(F, {0, 1}), 1});
  });
  expect_error(ErrorKind::BadConstantTerm, [] {
    WeilCubic::from_coefficients(P5({1}), P5({1}), P5({1, 0, 1}), P5({0, 1}));
  });
  const WeilCubic w = WeilCubic::from_coefficients(P5({1, 1}), P5({4, 3, 1}), P5({0, 0, 0, 4}),
                                                   P5({0, 1}));
  EXPECT_EQ(w.m, 3);
  EXPECT_EQ(w.mu, Fe{4});
}

TEST(StandardForm, F5Example) {
  const StandardForm S = standard_form(example_cubic());
  EXPECT_TRUE(S.g.is_one());
  EXPECT_EQ(S.c1, P5({2, 4, 4}));
  EXPECT_EQ(S.c2, P5({3, 4, 0, 3}));
  const Poly T = P5({0, 1});
  const Poly expect = T * T * P5({4, 1}) * P5({4, 1}) * P5({2, 4, 1});
  EXPECT_TRUE(associate(cubic_discriminant(S.c1, S.c2), expect));
}

TEST(StandardForm, DepressedInput) {
  const WeilCubic W{P5({}), P5({1, 2}), Fe{3}, P5({0, 1}), 2};
  const StandardForm S = standard_form(W);
  EXPECT_EQ(S.b1, W.a2);
  EXPECT_EQ(S.b2, W.a0());
}

TEST(StandardForm, RemovesCommonSquareCube) {
  // b1 = T^2 * (T + 1), b2 = T^3 * 2: g = T.
  const WeilCubic W{P5({}), P5({0, 0, 1, 1}), Fe{2}, P5({0, 1}), 3};
  const StandardForm S = standard_form(W);
  EXPECT_EQ(S.g, P5({0, 1}));
  EXPECT_EQ(S.c1 * S.g * S.g, S.b1);
  EXPECT_EQ(S.c2 * S.g * S.g * S.g, S.b2);
  EXPECT_EQ(S.c1, P5({1, 1}));
  EXPECT_EQ(S.c2, P5({2}));
}

TEST(MaximalOrder, F5Example) {
  const StandardForm S = standard_form(example_cubic());
  const MaximalOrderData D = maximal_order(S);
  EXPECT_EQ(D.delta, P5({4, 1}) * P5({4, 1}) * P5({2, 4, 1}));
  EXPECT_EQ(D.index, P5({0, 1}));
  EXPECT_EQ(D.beta2, P5({4}));
  EXPECT_EQ(D.alpha2, P5({3}));
}

TEST(MaximalOrder, TrivialIndex) {
  // disc(M0) square-free: delta = disc, I = 1, alpha2 = beta2 = 0.
  const WeilCubic W{P5({}), P5({1}), Fe{1}, P5({0, 1}), 1};
  const StandardForm S = standard_form(W);
  const MaximalOrderData D = maximal_order(S);
  ASSERT_TRUE(squarefree_decompose(D.disc_M0).parts.size() == 1 &&
              squarefree_decompose(D.disc_M0).parts[0].second == 1);
  EXPECT_TRUE(D.index.is_one());
  EXPECT_TRUE(D.alpha2.is_zero());
  EXPECT_TRUE(D.beta2.is_zero());
  EXPECT_TRUE(associate(D.delta, D.disc_M0));
}

TEST(MaximalOrder, ValuationTwoAtCommonPrime) {
  // c1 = T(T+1), c2 = T: v(c1) >= v(c2) >= 1 at T forces v_T(delta) = 2.
  const WeilCubic W{P5({}), P5({0, 1, 1}), Fe{1}, P5({0, 1}), 1};
  const StandardForm S = standard_form(W);
  const MaximalOrderData D = maximal_order(S);
  EXPECT_EQ(valuation(D.delta, P5({0, 1})), 2);
}

TEST(MaximalOrder, NonTrivialG) {
  // x^3 + T^2 x + T^3 over F_5: g = T, c1 = c2 = 1.
  const WeilCubic W{P5({}), P5({0, 0, 1}), Fe{1}, P5({0, 1}), 3};
  const LocalData L = validate_weil_necessary(W);
  EXPECT_EQ(L.height, 3);
  const StandardForm S = standard_form(W);
  EXPECT_EQ(S.g, P5({0, 1}));
  EXPECT_TRUE(S.c1.is_one());
  EXPECT_TRUE(S.c2.is_one());
  const MaximalOrderData D = maximal_order(S);
  EXPECT_EQ(D.disc_M0, P5({-31}));
  EXPECT_TRUE(D.index.is_one());
}

TEST(IntegralBasis, SolversAgree) {
  std::mt19937_64 rng(11);
  int checked = 0;
  for (int it = 0; it < 3000 && checked < 60; ++it) {
    auto inst = oracle::random_instance(it % 2 ? 5 : 7, 2, 2, rng);
    if (!inst || inst->D.index.is_one()) continue;
    ++checked;
    const auto& S = inst->S;
    const Poly& I = inst->D.index;
    const auto all = solve_beta_exhaustive(S, I);
    ASSERT_FALSE(all.empty());
    const auto local = solve_beta_local(S, I);
    ASSERT_EQ(local.size(), 1u);
    EXPECT_EQ(local.front(), all.front());
    EXPECT_EQ(inst->D.beta2, all.front());
    // Every solution mod I^2 reduces to the same class mod I.
    for (const auto& b : all) EXPECT_EQ(b % I, all.front());
  }
  EXPECT_GE(checked, 40);
}

TEST(IntegralBasis, OracleProperties) {
  std::mt19937_64 rng(12);
  int checked = 0;
  for (int it = 0; it < 2000 && checked < 80; ++it) {
    auto inst = oracle::random_instance(it % 2 ? 5 : 7, 2, 2, rng);
    if (!inst) continue;
    ++checked;
    const auto& S = inst->S;
    const auto& D = inst->D;
    EXPECT_TRUE(associate(D.disc_M0, D.index * D.index * D.delta));
    const oracle::Cubic K{S.c1, S.c2};
    const RatFunc z(S.c1.zero());
    const oracle::Vec3 w2{RatFunc(D.alpha2, D.index), RatFunc(D.beta2, D.index),
                          RatFunc(S.c1.one(), D.index)};
    EXPECT_TRUE(oracle::integral(K, w2));
    const auto basis = oracle::order_basis(D.index, D.alpha2, D.beta2,
                                           {S.c1.one(), S.c1.zero(), S.c1.one()});
    const RatFunc disc = oracle::trace_discriminant(K, basis);
    ASSERT_TRUE(disc.is_polynomial());
    EXPECT_TRUE(associate(disc.num(), D.delta));
    // I by search over monic divisors d of disc(M0) with d^2 delta ~ disc(M0).
    int hits = 0;
    for (const auto& d : divisors(D.disc_M0))
      if (associate(d * d * D.delta, D.disc_M0)) {
        ++hits;
        EXPECT_EQ(d, D.index);
      }
    EXPECT_EQ(hits, 1);
    // Heights against the divisibility characterization.
    const int h = height(inst->W);
    const bool p_a1 = inst->W.a1.is_zero() || divides(inst->W.pv, inst->W.a1);
    const bool p_a2 = inst->W.a2.is_zero() || divides(inst->W.pv, inst->W.a2);
    EXPECT_TRUE(h >= 1 && h <= 3);
    EXPECT_EQ(h == 1, !p_a2);
    EXPECT_EQ(h == 3, p_a1 && p_a2);
  }
  EXPECT_GE(checked, 60);
}

TEST(IntegralBasis, ExhaustiveResidueOracle) {
  // deg I = 1: check every (beta mod I^2, alpha mod I) pair for integrality of
  // (alpha + beta t + t^2) / I directly.
  std::mt19937_64 rng(13);
  int checked = 0;
  for (int it = 0; it < 3000 && checked < 15; ++it) {
    auto inst = oracle::random_instance(5, 2, 1, rng);
    if (!inst || inst->D.index.degree() != 1) continue;
    ++checked;
    const auto& S = inst->S;
    const Poly& I = inst->D.index;
    const oracle::Cubic K{S.c1, S.c2};
    const FieldPtr& F = I.field();
    std::vector<Poly> betas;
    for (const auto& b : solve_beta_exhaustive(S, I)) betas.push_back(b);
    int found = 0;
    for (std::uint64_t a = 0; a < 5; ++a)
      for (std::uint64_t b0 = 0; b0 < 5; ++b0)
        for (std::uint64_t b1 = 0; b1 < 5; ++b1) {
          const Poly alpha(F, {Fe{a}});
          const Poly beta(F, {Fe{b0}, Fe{b1}});
          const oracle::Vec3 w{RatFunc(alpha, I), RatFunc(beta, I), RatFunc(I.one(), I)};
          if (!oracle::integral(K, w)) continue;
          ++found;
          EXPECT_EQ(alpha, inst->D.alpha2);
          EXPECT_TRUE(std::find(betas.begin(), betas.end(), beta) != betas.end());
        }
    EXPECT_EQ(found, static_cast<int>(betas.size()));
  }
  EXPECT_GE(checked, 10);
}
