#pragma once

// The multiplicative group of rational functions f(u)/g(u) with
// f(0) = g(0) = 1, stored as root multisets: {a: m} encodes prod (1 - a u)^m.
// Coefficients are never expanded.

#include "affblocks/scalar.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace affblocks {

class RatFun {
 public:
  using Table = std::map<Root, std::int64_t>;

  RatFun() = default;

  /// (1 - a u)^mult.
  static RatFun linear(const Root& a, std::int64_t mult = 1);
  /// prod over the list of (1 - a u), repetitions accumulate.
  static RatFun from_roots(std::span<const Root> roots);

  const Table& support() const noexcept { return table_; }
  std::int64_t multiplicity(const Root& a) const;
  bool is_one() const noexcept { return table_.empty(); }

  /// Multiplies in (1 - a u)^mult; zero entries are dropped.
  void accumulate(const Root& a, std::int64_t mult);

  RatFun& operator*=(const RatFun& other);
  friend RatFun operator*(RatFun f, const RatFun& g) { return f *= g; }
  friend bool operator==(const RatFun&, const RatFun&) = default;

 private:
  Table table_;
};

RatFun ratfun_mul(const RatFun& f, const RatFun& g);
RatFun ratfun_inv(const RatFun& f);
/// f(v^k u): every root a becomes a * v^k.
RatFun shift_u(const RatFun& f, const Integer& k);
inline RatFun shift_u(const RatFun& f, std::int64_t k) { return shift_u(f, Integer(k)); }
bool is_polynomial(const RatFun& f) noexcept;
/// Sum of multiplicities; throws DomainError when `f` is not a polynomial.
std::int64_t degree(const RatFun& f);

/// A RatFun with all multiplicities positive: a polynomial with constant term 1.
class Poly {
 public:
  Poly() = default;
  /// Throws DomainError if `f` has a negative multiplicity.
  explicit Poly(RatFun f);
  static Poly from_roots(std::span<const Root> roots) { return Poly(RatFun::from_roots(roots)); }
  static Poly linear(const Root& a, std::int64_t mult = 1) { return Poly(RatFun::linear(a, mult)); }

  const RatFun& ratfun() const noexcept { return f_; }
  const RatFun::Table& support() const noexcept { return f_.support(); }
  bool is_one() const noexcept { return f_.is_one(); }
  std::int64_t degree() const noexcept { return degree_; }
  /// Roots listed with repetition in canonical order.
  std::vector<Root> roots() const;

  Poly& operator*=(const Poly& other);
  friend Poly operator*(Poly f, const Poly& g) { return f *= g; }
  friend bool operator==(const Poly& x, const Poly& y) { return x.f_ == y.f_; }

 private:
  RatFun f_;
  std::int64_t degree_ = 0;
};

inline std::int64_t degree(const Poly& f) noexcept { return f.degree(); }
Poly shift_u(const Poly& f, const Integer& k);
inline Poly shift_u(const Poly& f, std::int64_t k) { return shift_u(f, Integer(k)); }

/// Exact quotient f / g when it is a polynomial.
std::optional<Poly> divide(const Poly& f, const Poly& g);

/// `(a*v^0)^2,(b*v^1)^-1`; `1` for the empty product.
std::string to_string(const RatFun& f);
inline std::string to_string(const Poly& f) { return to_string(f.ratfun()); }
RatFun parse_ratfun(std::string_view text);

}  // namespace affblocks
