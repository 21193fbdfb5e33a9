#include "affblocks/error.hpp"
#include "affblocks/lattice.hpp"
#include "affblocks/random.hpp"

#include <gtest/gtest.h>

#include <algorithm>

using namespace affblocks;

namespace {

Root a(std::int64_t k = 0) { return atom_root("a", k); }
Root b(std::int64_t k = 0) { return atom_root("b", k); }

XnElement xn(int n, std::initializer_list<std::tuple<int, Root, std::int64_t>> terms) {
  XnElement x(n);
  for (const auto& [i, r, e] : terms) x.accumulate(i, r, e);
  return x;
}

PnElement pn(int n, std::initializer_list<std::tuple<int, Root, std::int64_t>> terms) {
  PnElement p(n);
  for (const auto& [i, r, e] : terms) p.accumulate(i, r, e);
  return p;
}

}  // namespace

TEST(MakeLambda, Examples) {
  EXPECT_EQ(make_lambda(1, a(), 2), xn(2, {{1, a(), 1}}));
  EXPECT_EQ(make_lambda(2, b(3), 4), xn(4, {{2, b(3), 1}}));
  EXPECT_THROW(make_lambda(3, a(), 2), DomainError);
  EXPECT_THROW(make_lambda(0, a(), 2), DomainError);
  EXPECT_THROW(make_lambda(1, a(), 1), DomainError);
}

TEST(MakeBeta, Examples) {
  EXPECT_EQ(make_beta(1, a(), 2), xn(2, {{1, a(), 1}, {2, a(), -1}}));
  EXPECT_EQ(make_beta(2, a(), 3), xn(3, {{2, a(), 1}, {3, a(), -1}}));
  EXPECT_THROW(make_beta(2, a(), 2), DomainError);
}

TEST(XnMul, Examples) {
  EXPECT_TRUE(xn_mul(make_lambda(1, a(), 2), make_lambda(1, a(), 2).inverse()).is_identity());
  EXPECT_EQ(xn_mul(make_lambda(1, a(), 2), make_lambda(2, a(), 2)),
            xn(2, {{1, a(), 1}, {2, a(), 1}}));
  EXPECT_THROW(xn_mul(make_lambda(1, a(), 2), make_lambda(1, a(), 3)), DomainError);
}

TEST(ProjectPi, Examples) {
  for (int n = 2; n <= 6; ++n) EXPECT_TRUE(project_pi(make_beta(1, a(), n)).is_one());
  RatFun ab;
  ab.accumulate(a(), 1);
  ab.accumulate(b(), 1);
  EXPECT_EQ(project_pi(make_lambda(1, a(), 3) * make_lambda(2, b(), 3)), ab);
  EXPECT_EQ(project_pi(make_lambda(2, a(), 3)), project_pi(make_lambda(1, a(), 3)));
}

TEST(BetaCoordinates, Examples) {
  auto c = beta_coordinates(make_beta(1, a(), 3));
  ASSERT_TRUE(c);
  EXPECT_EQ(to_string(*c), "B[1;a*v^0]^1");

  c = beta_coordinates(make_lambda(2, a(), 2) * make_lambda(1, a(), 2).inverse());
  ASSERT_TRUE(c);
  EXPECT_EQ(to_string(*c), "B[1;a*v^0]^-1");

  EXPECT_FALSE(beta_coordinates(make_lambda(1, a(), 2)));
  EXPECT_TRUE(beta_coordinates(XnElement(4)).has_value());
}

TEST(RnMonoids, Examples) {
  XnElement one(3);
  EXPECT_TRUE(in_rn_plus(one));
  EXPECT_TRUE(in_rn_minus(one));

  XnElement neg = make_beta(1, a(), 3).inverse();
  EXPECT_TRUE(in_rn_minus(neg));
  EXPECT_FALSE(in_rn_plus(neg));

  // Coordinates {(1,a): 1, (2,b): -1} have mixed signs.
  XnElement mixed = make_beta(1, a(), 3) * make_beta(2, b(), 3).inverse();
  EXPECT_FALSE(in_rn_plus(mixed));
  EXPECT_FALSE(in_rn_minus(mixed));

  EXPECT_FALSE(in_rn_minus(make_lambda(1, a(), 3)));
}

TEST(KappaV, Examples) {
  EXPECT_EQ(kappa_v(make_lambda(1, a(), 3)), make_omega(1, a(), 3));
  EXPECT_EQ(kappa_v(make_beta(1, a(), 3)), pn(3, {{1, a(0), 1}, {1, a(2), 1}, {2, a(1), -1}}));
  EXPECT_EQ(kappa_v(make_beta(1, a(), 3)), make_alpha(1, a(), 3));
  // Lambda_{n,a} with n = 2: omega_{2,av} = 1, leaving omega_{1,av^2}^{-1}.
  EXPECT_EQ(kappa_v(make_lambda(2, a(), 2)), pn(2, {{1, a(2), -1}}));
}

TEST(KappaV, BetaMapsToAlpha) {
  RandomSource rng(31);
  for (int n = 2; n <= 8; ++n) {
    for (int i = 1; i <= n - 1; ++i) {
      for (int t = 0; t < 20; ++t) {
        Root r = rng.root();
        EXPECT_EQ(kappa_v(make_beta(i, r, n)), make_alpha(i, root_shift(r, i - 1), n));
      }
    }
  }
}

TEST(KappaV, MatchesTupleRatios) {
  // kappa_v(f_1, ..., f_n) has slot i equal to f_i(v^{i-1}u) / f_{i+1}(v^{i+1}u).
  RandomSource rng(32);
  for (int it = 0; it < 300; ++it) {
    const int n = static_cast<int>(rng.uniform(2, 6));
    XnElement x = rng.xn(n, 6);
    PnElement p = kappa_v(x);
    for (int i = 1; i <= n - 1; ++i) {
      RatFun expected = shift_u(xn_row(x, i), i - 1) * ratfun_inv(shift_u(xn_row(x, i + 1), i + 1));
      EXPECT_EQ(pn_row(p, i), expected);
    }
  }
}

TEST(LatticeProperties, KernelCharacterization) {
  RandomSource rng(33);
  for (int it = 0; it < 500; ++it) {
    XnElement x = rng.xn_mixed(static_cast<int>(rng.uniform(2, 6)), 6);
    EXPECT_EQ(beta_coordinates(x).has_value(), project_pi(x).is_one()) << to_string(x);
  }
}

TEST(LatticeProperties, BetaRoundTrip) {
  RandomSource rng(34);
  for (int it = 0; it < 500; ++it) {
    BetaCoordinates c = rng.beta(static_cast<int>(rng.uniform(2, 6)), 6);
    auto solved = beta_coordinates(expand(c));
    ASSERT_TRUE(solved);
    EXPECT_EQ(*solved, c);
  }
}

TEST(LatticeProperties, KappaIsHomomorphism) {
  RandomSource rng(35);
  for (int it = 0; it < 500; ++it) {
    const int n = static_cast<int>(rng.uniform(2, 6));
    XnElement x = rng.xn(n, 5), y = rng.xn(n, 5);
    EXPECT_EQ(kappa_v(x * y), kappa_v(x) * kappa_v(y));
  }
}

TEST(LatticeProperties, FreeIntersection) {
  // A beta product on rows m..s that lands in the span of rows <= m is trivial.
  RandomSource rng(36);
  int hits = 0;
  for (int it = 0; it < 2000; ++it) {
    const int n = static_cast<int>(rng.uniform(3, 7));
    const int m = static_cast<int>(rng.uniform(1, n - 1));
    const int s = static_cast<int>(rng.uniform(m, n - 1));
    XnElement x(n);
    for (int t = 0; t < 4; ++t) {
      x *= make_beta(static_cast<int>(rng.uniform(m, s)), atom_root("a", rng.uniform(-1, 1)), n)
               .pow(rng.uniform(-1, 1));
    }
    bool in_xm = std::all_of(x.table().begin(), x.table().end(),
                             [m](const auto& kv) { return kv.first.row <= m; });
    if (in_xm) {
      ++hits;
      EXPECT_TRUE(x.is_identity()) << to_string(x);
    }
  }
  EXPECT_GT(hits, 100);
}

TEST(LatticeText, FormatAndParse) {
  XnElement x = make_lambda(1, a(), 3) * make_lambda(2, b(1), 3).pow(-2);
  EXPECT_EQ(to_string(x), "L[1;a*v^0]^1,L[2;b*v^1]^-2");
  EXPECT_EQ(parse_xn(to_string(x), 3), x);
  EXPECT_EQ(to_string(XnElement(2)), "1");
  EXPECT_TRUE(parse_xn("1", 2).is_identity());
  EXPECT_THROW(parse_xn("L[4;a]^1", 3), DomainError);
  EXPECT_THROW(parse_xn("L[1;a", 3), ParseError);
  EXPECT_THROW(parse_xn("B[1;a]^1", 3), ParseError);
  EXPECT_EQ(parse_beta("B[2;a*v^0]^3", 3).exponent(2, a()), 3);
}
