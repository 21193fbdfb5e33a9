#pragma once

// Dominant Drinfeld tuples Q = (Q_1(u), ..., Q_n(u)), fundamental tuples
// Q_{i,a}, elliptic characters and the block-equivalence test.

#include "affblocks/lattice.hpp"
#include "affblocks/polyring.hpp"
#include "affblocks/scalar.hpp"

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace affblocks {

/// True iff Q_i(v^{i-1} u) / Q_{i+1}(v^{i+1} u) is a polynomial for all
/// 1 <= i <= n-1. Throws DomainError when fewer than two components are given.
bool is_dominant(std::span<const Poly> components);

class DominantTuple {
 public:
  /// The tuple (1, ..., 1).
  explicit DominantTuple(int n);
  /// Throws DomainError unless the components form a dominant tuple.
  explicit DominantTuple(std::vector<Poly> components);

  int n() const noexcept { return static_cast<int>(components_.size()); }
  const std::vector<Poly>& components() const noexcept { return components_; }
  /// 1-based.
  const Poly& component(int i) const { return components_.at(static_cast<std::size_t>(i - 1)); }
  /// r = sum of component degrees.
  std::int64_t total_degree() const noexcept;

  /// Q viewed in X_n.
  XnElement to_xn() const;

  friend bool operator==(const DominantTuple&, const DominantTuple&) = default;

 private:
  std::vector<Poly> components_;
};

/// Q_{i,a}: Q_j(u) = 1 - a v^{i-2j+1} u for j <= i, Q_j = 1 for j > i.
DominantTuple fundamental(int i, const Root& a, int n);
DominantTuple tuple_mul(const DominantTuple& q, const DominantTuple& p);

/// P_i(u) = Q_i(v^{i-1} u) / Q_{i+1}(v^{i+1} u), 1 <= i <= n-1.
std::vector<Poly> kappa_tuple(const DominantTuple& q);

struct Composition {
  std::vector<std::int64_t> parts;

  int n() const noexcept { return static_cast<int>(parts.size()); }
  std::int64_t r() const noexcept;
  friend bool operator==(const Composition&, const Composition&) = default;
};

Composition degree_weight(const DominantTuple& q);
/// Dominance order: every partial sum of lambda is <= that of mu.
/// Throws DomainError on mismatched n or r.
bool dominance_leq(const Composition& lambda, const Composition& mu);

/// The class of Q in X_n / R_n, canonically (r, prod_i Q_i).
struct EllipticCharacter {
  std::int64_t r = 0;
  Poly class_poly;

  friend bool operator==(const EllipticCharacter&, const EllipticCharacter&) = default;
};

EllipticCharacter elliptic_character(const DominantTuple& q);
EllipticCharacter operator*(const EllipticCharacter& x, const EllipticCharacter& y);
bool same_block(const DominantTuple& q, const DominantTuple& p);

struct FundamentalFactor {
  int i;
  Root a;

  friend bool operator==(const FundamentalFactor&, const FundamentalFactor&) = default;
  friend std::strong_ordering operator<=>(const FundamentalFactor& x,
                                          const FundamentalFactor& y) noexcept {
    if (auto c = x.i <=> y.i; c != 0) return c;
    return root_compare(x.a, y.a);
  }
};

/// Writes Q as a product of fundamental tuples, sorted by (i, root).
std::vector<FundamentalFactor> decompose_fundamentals(const DominantTuple& q);
DominantTuple multiply_fundamentals(std::span<const FundamentalFactor> factors, int n);

/// Components' RatFun texts joined by " ; ".
std::string to_string(const DominantTuple& q);
/// Parses the form above; throws on non-dominant input.
DominantTuple parse_tuple(std::string_view text);
std::string to_string(const EllipticCharacter& chi);

}  // namespace affblocks
