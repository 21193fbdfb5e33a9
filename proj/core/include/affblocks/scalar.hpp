#pragma once

// Formal nonzero complex numbers of the shape base * v^k, with v a
// transcendental parameter. Equality is structural: distinct atoms are
// multiplicatively independent of each other and of v.

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <variant>

namespace affblocks {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// An interned symbolic identifier such as `a` or `z_1`.
class Atom {
 public:
  /// Throws ParseError unless `name` matches [A-Za-z][A-Za-z0-9_]*.
  explicit Atom(std::string_view name);

  const std::string& name() const noexcept { return *name_; }

  friend bool operator==(const Atom& x, const Atom& y) noexcept { return x.name_ == y.name_; }
  friend std::strong_ordering operator<=>(const Atom& x, const Atom& y) noexcept;

 private:
  const std::string* name_;
};

bool is_valid_atom_name(std::string_view name) noexcept;

/// The base of a root: an atom or an exact nonzero rational in lowest terms.
class Base {
 public:
  Base() : value_(Rational(1)) {}
  Base(Atom atom) : value_(atom) {}
  /// Throws DomainError on zero.
  Base(Rational q);

  bool is_atom() const noexcept { return std::holds_alternative<Atom>(value_); }
  bool is_rational() const noexcept { return !is_atom(); }
  const Atom& atom() const { return std::get<Atom>(value_); }
  const Rational& rational() const { return std::get<Rational>(value_); }

  bool is_one() const noexcept { return is_rational() && rational() == 1; }

  friend bool operator==(const Base& x, const Base& y) noexcept { return x.value_ == y.value_; }
  friend std::strong_ordering operator<=>(const Base& x, const Base& y) noexcept;

 private:
  std::variant<Rational, Atom> value_;
};

/// A formal element base * v^vexp of C*.
struct Root {
  Base base;
  Integer vexp = 0;

  Root() = default;
  Root(Base b, Integer k = 0) : base(std::move(b)), vexp(std::move(k)) {}

  friend bool operator==(const Root& x, const Root& y) noexcept {
    return x.base == y.base && x.vexp == y.vexp;
  }
  friend std::strong_ordering operator<=>(const Root& x, const Root& y) noexcept {
    return root_compare(x, y);
  }

  /// Order by base kind, then base value, then vexp.
  static std::strong_ordering root_compare(const Root& x, const Root& y) noexcept;
};

inline std::strong_ordering root_compare(const Root& x, const Root& y) noexcept {
  return Root::root_compare(x, y);
}

/// Multiplication by v^k.
Root root_shift(const Root& r, const Integer& k);
inline Root root_shift(const Root& r, std::int64_t k) { return root_shift(r, Integer(k)); }

/// Convenience: atom root `name * v^k`.
Root atom_root(std::string_view name, std::int64_t vexp = 0);

/// Parses the root literal grammar, e.g. `a`, `a*v^-2`, `2/3*v`, `v^3`.
/// Whitespace is ignored. Throws ParseError.
Root parse_root(std::string_view text);

/// Canonical form `base*v^k`; `1*v^0` prints as `1`.
std::string to_string(const Root& r);
std::string to_string(const Base& b);

std::ostream& operator<<(std::ostream& os, const Root& r);

}  // namespace affblocks
