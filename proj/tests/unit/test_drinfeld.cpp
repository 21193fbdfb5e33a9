#include "oracle.hpp"

#include "affblocks/drinfeld.hpp"
#include "affblocks/error.hpp"
#include "affblocks/random.hpp"

#include <gtest/gtest.h>

#include <algorithm>

using namespace affblocks;

namespace {

Root a(std::int64_t k = 0) { return atom_root("a", k); }
Root b(std::int64_t k = 0) { return atom_root("b", k); }

Poly poly(std::initializer_list<Root> roots) { return Poly::from_roots(std::vector<Root>(roots)); }

std::vector<oracle::Poly> to_oracle(const std::vector<Poly>& comps) {
  std::vector<oracle::Poly> out;
  for (const auto& c : comps) out.push_back(oracle::from_library(c));
  return out;
}

}  // namespace

TEST(IsDominant, Examples) {
  const std::vector<Poly> ratio_one{poly({a(1)}), poly({a(-1)})};
  const std::vector<Poly> not_dominant{poly({a()}), poly({a()})};
  const std::vector<Poly> trivial(3);
  // Reference answers from the multiset-inclusion oracle.
  ASSERT_TRUE(oracle::dominant(to_oracle(ratio_one)));
  ASSERT_FALSE(oracle::dominant(to_oracle(not_dominant)));
  EXPECT_TRUE(is_dominant(ratio_one));
  EXPECT_FALSE(is_dominant(not_dominant));
  EXPECT_TRUE(is_dominant(trivial));
  EXPECT_THROW(DominantTuple{not_dominant}, DomainError);
}

TEST(IsDominant, AgreesWithOracle) {
  RandomConfig config;
  config.bases = {Base(Atom("a")), Base(Atom("b"))};
  config.max_vexp = 3;
  RandomSource rng(41, config);
  int positives = 0;
  for (int it = 0; it < 2000; ++it) {
    const int n = static_cast<int>(rng.uniform(2, 4));
    std::vector<Poly> comps;
    for (int i = 0; i < n; ++i) comps.push_back(rng.poly(2));
    bool expected = oracle::dominant(to_oracle(comps));
    positives += expected;
    EXPECT_EQ(is_dominant(comps), expected);
  }
  EXPECT_GT(positives, 50);
}

TEST(Fundamental, ClosedFormMatchesRecursion) {
  for (int n = 2; n <= 8; ++n) {
    for (int i = 1; i <= n; ++i) {
      for (std::int64_t k : {-3, 0, 5}) {
        DominantTuple q = fundamental(i, a(k), n);
        EXPECT_EQ(to_oracle(q.components()), oracle::fundamental_by_recursion(i, "a", k, n))
            << "i=" << i << " n=" << n;
      }
    }
  }
}

TEST(Fundamental, Examples) {
  EXPECT_EQ(fundamental(1, a(), 2).components(), (std::vector<Poly>{poly({a()}), Poly{}}));
  EXPECT_EQ(fundamental(2, a(), 2).components(), (std::vector<Poly>{poly({a(1)}), poly({a(-1)})}));
  for (int n = 2; n <= 8; ++n) {
    EXPECT_EQ(fundamental(n, a(), n).component(n), poly({a(1 - n)}));
  }
  EXPECT_THROW(fundamental(0, a(), 3), DomainError);
  EXPECT_THROW(fundamental(4, a(), 3), DomainError);
}

TEST(Fundamental, KappaIsIndicator) {
  for (int n = 2; n <= 8; ++n) {
    for (int i = 1; i <= n; ++i) {
      auto slots = kappa_tuple(fundamental(i, b(2), n));
      ASSERT_EQ(slots.size(), static_cast<std::size_t>(n - 1));
      for (int j = 1; j <= n - 1; ++j) {
        EXPECT_EQ(slots[static_cast<std::size_t>(j - 1)], j == i ? poly({b(2)}) : Poly{});
      }
    }
  }
}

TEST(TupleMul, Examples) {
  DominantTuple q = fundamental(2, a(), 3);
  EXPECT_EQ(tuple_mul(q, DominantTuple(3)), q);
  EXPECT_EQ(tuple_mul(fundamental(1, a(), 2), fundamental(1, b(), 2)).components(),
            (std::vector<Poly>{poly({a(), b()}), Poly{}}));
  EXPECT_THROW(tuple_mul(fundamental(1, a(), 2), fundamental(1, a(), 3)), DomainError);
}

TEST(TupleMul, PreservesDominance) {
  RandomConfig config;
  config.bases = {Base(Atom("a")), Base(Atom("b"))};
  RandomSource rng(42, config);
  for (int it = 0; it < 300; ++it) {
    const int n = static_cast<int>(rng.uniform(2, 6));
    DominantTuple q = rng.dominant_tuple(n, 5), p = rng.dominant_tuple(n, 5);
    DominantTuple qp = tuple_mul(q, p);
    EXPECT_TRUE(oracle::dominant(to_oracle(qp.components())));
    EXPECT_EQ(elliptic_character(qp), elliptic_character(q) * elliptic_character(p));
  }
}

TEST(KappaTuple, Examples) {
  for (int n = 2; n <= 6; ++n) {
    for (const Poly& p : kappa_tuple(fundamental(n, a(), n))) EXPECT_TRUE(p.is_one());
    for (const Poly& p : kappa_tuple(DominantTuple(n))) EXPECT_TRUE(p.is_one());
  }
}

TEST(DegreeWeight, Examples) {
  EXPECT_EQ(degree_weight(fundamental(2, a(), 4)).parts, (std::vector<std::int64_t>{1, 1, 0, 0}));
  EXPECT_EQ(degree_weight(DominantTuple(3)).parts, (std::vector<std::int64_t>{0, 0, 0}));
  DominantTuple q = fundamental(1, a(), 3), p = fundamental(3, b(), 3);
  EXPECT_EQ(degree_weight(tuple_mul(q, p)).parts, (std::vector<std::int64_t>{2, 1, 1}));
}

TEST(DominanceLeq, Examples) {
  Composition x{{0, 1}}, y{{1, 0}};
  EXPECT_TRUE(dominance_leq(x, x));
  EXPECT_TRUE(dominance_leq(x, y));
  EXPECT_FALSE(dominance_leq(y, x));
  EXPECT_TRUE(dominance_leq(Composition{{1, 1, 0}}, Composition{{2, 0, 0}}));
  EXPECT_THROW(dominance_leq(Composition{{1, 0}}, Composition{{1, 0, 0}}), DomainError);
  EXPECT_THROW(dominance_leq(Composition{{1, 0}}, Composition{{2, 0}}), DomainError);
}

TEST(DominanceLeq, PartialOrder) {
  RandomSource rng(43);
  for (int it = 0; it < 500; ++it) {
    const int n = static_cast<int>(rng.uniform(2, 5));
    const auto r = rng.uniform(0, 4);
    auto draw = [&] {
      Composition c{std::vector<std::int64_t>(static_cast<std::size_t>(n), 0)};
      for (std::int64_t t = 0; t < r; ++t) ++c.parts[static_cast<std::size_t>(rng.uniform(0, n - 1))];
      return c;
    };
    Composition x = draw(), y = draw(), z = draw();
    if (dominance_leq(x, y) && dominance_leq(y, x)) EXPECT_EQ(x, y);
    if (dominance_leq(x, y) && dominance_leq(y, z)) EXPECT_TRUE(dominance_leq(x, z));
  }
}

TEST(EllipticCharacter, Examples) {
  DominantTuple q(std::vector<Poly>{poly({a(), b()}), Poly{}});
  EXPECT_EQ(elliptic_character(q), (EllipticCharacter{2, poly({a(), b()})}));
  EXPECT_EQ(elliptic_character(fundamental(2, a(), 2)), (EllipticCharacter{2, poly({a(1), a(-1)})}));
  EXPECT_EQ(elliptic_character(DominantTuple(4)), (EllipticCharacter{0, Poly{}}));
}

TEST(EllipticCharacter, EqualsProjectionOfTuple) {
  RandomSource rng(44);
  for (int it = 0; it < 300; ++it) {
    DominantTuple q = rng.dominant_tuple(static_cast<int>(rng.uniform(2, 6)), 6);
    EXPECT_EQ(elliptic_character(q).class_poly.ratfun(), project_pi(q.to_xn()));
    EXPECT_EQ(elliptic_character(q).r, q.total_degree());
  }
}

TEST(SameBlock, Examples) {
  DominantTuple q = fundamental(2, a(), 3);
  EXPECT_TRUE(same_block(q, q));
  // (1 - au)(1 - av^{-2}u) both ways.
  DominantTuple lhs = tuple_mul(fundamental(1, a(), 2), fundamental(1, a(-2), 2));
  DominantTuple rhs = fundamental(2, a(-1), 2);
  EXPECT_EQ(elliptic_character(lhs).class_poly, poly({a(), a(-2)}));
  EXPECT_EQ(elliptic_character(rhs).class_poly, poly({a(), a(-2)}));
  EXPECT_TRUE(same_block(lhs, rhs));
  EXPECT_NE(lhs, rhs);
  EXPECT_FALSE(same_block(fundamental(1, a(), 2), fundamental(1, b(), 2)));
  EXPECT_THROW(same_block(fundamental(1, a(), 2), fundamental(1, a(), 3)), DomainError);
}

TEST(SameBlock, EquivalenceRelation) {
  RandomSource rng(45);
  for (int it = 0; it < 500; ++it) {
    const int n = static_cast<int>(rng.uniform(2, 5));
    auto factors = rng.fundamentals(n, 5);
    auto regroup = [&] {
      return multiply_fundamentals(segments_to_factors(rng.recut(factors_to_segments(factors), n, 4)), n);
    };
    DominantTuple x = multiply_fundamentals(factors, n);
    DominantTuple y = rng.coin() ? regroup() : rng.dominant_tuple(n, 5);
    DominantTuple z = rng.coin() ? regroup() : rng.dominant_tuple(n, 5);
    EXPECT_TRUE(same_block(x, x));
    EXPECT_EQ(same_block(x, y), same_block(y, x));
    if (same_block(x, y) && same_block(y, z)) EXPECT_TRUE(same_block(x, z));
  }
}

TEST(Decompose, Examples) {
  EXPECT_EQ(decompose_fundamentals(fundamental(3, b(1), 5)),
            (std::vector<FundamentalFactor>{{3, b(1)}}));
  EXPECT_TRUE(decompose_fundamentals(DominantTuple(3)).empty());
  // Q_2 root a v^{-1}, shifted by v^{n-1} = v, gives a.
  EXPECT_EQ(decompose_fundamentals(fundamental(2, a(), 2)),
            (std::vector<FundamentalFactor>{{2, a()}}));
  for (int n = 2; n <= 6; ++n) {
    for (int i = 1; i <= n; ++i) {
      EXPECT_EQ(decompose_fundamentals(fundamental(i, a(4), n)),
                (std::vector<FundamentalFactor>{{i, a(4)}}));
    }
  }
}

TEST(Decompose, RoundTrip) {
  RandomSource rng(46);
  for (int it = 0; it < 500; ++it) {
    const int n = static_cast<int>(rng.uniform(2, 6));
    auto factors = rng.fundamentals(n, 12);
    DominantTuple q = multiply_fundamentals(factors, n);
    auto out = decompose_fundamentals(q);
    std::sort(factors.begin(), factors.end());
    EXPECT_EQ(out, factors);
    EXPECT_EQ(multiply_fundamentals(out, n), q);
  }
}

TEST(Decompose, EqualCharacterAndFactorsMeansEqualTuple) {
  RandomSource rng(47);
  for (int it = 0; it < 300; ++it) {
    const int n = static_cast<int>(rng.uniform(2, 5));
    DominantTuple x = rng.dominant_tuple(n, 4), y = rng.dominant_tuple(n, 4);
    bool same_factors = decompose_fundamentals(x) == decompose_fundamentals(y);
    if (same_factors) EXPECT_EQ(x, y);
    if (elliptic_character(x) == elliptic_character(y)) EXPECT_TRUE(same_block(x, y));
  }
}

TEST(TupleText, RoundTrip) {
  DominantTuple q = fundamental(2, a(), 3);
  EXPECT_EQ(to_string(q), "(a*v^1)^1 ; (a*v^-1)^1 ; 1");
  EXPECT_EQ(parse_tuple(to_string(q)), q);
  EXPECT_THROW(parse_tuple("(a)^1 ; (a)^1"), DomainError);
}
