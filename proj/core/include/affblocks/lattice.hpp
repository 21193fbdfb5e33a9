#pragma once

// Free abelian groups on (row, root) generators:
//   X_n  - generated by Lambda_{i,a}, 1 <= i <= n (the l-weight lattice),
//   P_n  - generated by omega_{i,a}, 1 <= i <= n-1,
// plus the beta-coordinate certificates of the l-root lattice R_n, which is
// generated by beta_{i,a} = Lambda_{i,a} Lambda_{i+1,a}^{-1}.

#include "affblocks/detail/checked.hpp"
#include "affblocks/error.hpp"
#include "affblocks/polyring.hpp"
#include "affblocks/scalar.hpp"

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace affblocks {

struct RowRoot {
  int row;
  Root root;

  friend bool operator==(const RowRoot&, const RowRoot&) = default;
  friend std::strong_ordering operator<=>(const RowRoot& x, const RowRoot& y) noexcept {
    if (auto c = x.row <=> y.row; c != 0) return c;
    return root_compare(x.root, y.root);
  }
};

/// Finite-support exponent table over (row, root) pairs with the row range
/// and print symbol fixed by `Tag`. Elements carry n; mixing n throws.
template <class Tag>
class RowTable {
 public:
  using Table = std::map<RowRoot, std::int64_t>;

  explicit RowTable(int n) : n_(n) {
    if (n < 2) throw DomainError("n must be at least 2, got " + std::to_string(n));
  }

  int n() const noexcept { return n_; }
  int max_row() const noexcept { return Tag::max_row(n_); }
  const Table& table() const noexcept { return table_; }
  bool is_identity() const noexcept { return table_.empty(); }

  std::int64_t exponent(int row, const Root& a) const {
    auto it = table_.find(RowRoot{row, a});
    return it == table_.end() ? 0 : it->second;
  }

  void accumulate(int row, const Root& a, std::int64_t e) {
    if (row < 1 || row > max_row()) {
      throw DomainError(std::string(Tag::name) + " row " + std::to_string(row) +
                        " outside 1.." + std::to_string(max_row()));
    }
    if (e == 0) return;
    auto [it, inserted] = table_.try_emplace(RowRoot{row, a}, e);
    if (inserted) return;
    it->second = detail::checked_add(it->second, e);
    if (it->second == 0) table_.erase(it);
  }

  RowTable& operator*=(const RowTable& other) {
    require_same_n(other);
    for (const auto& [key, e] : other.table_) accumulate(key.row, key.root, e);
    return *this;
  }
  friend RowTable operator*(RowTable x, const RowTable& y) { return x *= y; }

  RowTable pow(std::int64_t k) const {
    RowTable out(n_);
    if (k == 0) return out;
    for (const auto& [key, e] : table_) out.table_.emplace(key, detail::checked_mul(e, k));
    return out;
  }
  RowTable inverse() const { return pow(-1); }

  void require_same_n(const RowTable& other) const {
    if (other.n_ != n_) {
      throw DomainError(std::string(Tag::name) + " elements with different n (" +
                        std::to_string(n_) + " vs " + std::to_string(other.n_) + ")");
    }
  }

  friend bool operator==(const RowTable&, const RowTable&) = default;
  friend std::strong_ordering operator<=>(const RowTable& x, const RowTable& y) {
    if (auto c = x.n_ <=> y.n_; c != 0) return c;
    return x.table_ <=> y.table_;
  }

 private:
  int n_;
  Table table_;
};

struct XnTag {
  static constexpr const char* name = "X_n";
  static constexpr char symbol = 'L';
  static int max_row(int n) { return n; }
};
struct PnTag {
  static constexpr const char* name = "P_n";
  static constexpr char symbol = 'W';
  static int max_row(int n) { return n - 1; }
};
struct BetaTag {
  static constexpr const char* name = "beta-coordinate";
  static constexpr char symbol = 'B';
  static int max_row(int n) { return n - 1; }
};

/// prod Lambda_{i,a}^e.
using XnElement = RowTable<XnTag>;
/// prod omega_{i,a}^e.
using PnElement = RowTable<PnTag>;
/// prod beta_{i,a}^c, a certificate for membership in R_n.
using BetaCoordinates = RowTable<BetaTag>;

XnElement make_lambda(int i, const Root& a, int n);
XnElement make_beta(int i, const Root& a, int n);
XnElement xn_mul(const XnElement& x, const XnElement& y);

/// The element (f_1, ..., f_n) of A^n, i.e. prod_i prod_a Lambda_{i,a}^{m_i(a)}.
XnElement xn_from_rows(int n, std::span<const RatFun> rows);
/// Row i of x as an element of A.
RatFun xn_row(const XnElement& x, int i);

/// Class of x in X_n / R_n, represented in A as prod_i f_i.
RatFun project_pi(const XnElement& x);

/// Solves x = prod beta_{i,a}^{c_{i,a}}; nullopt when x is not in R_n.
std::optional<BetaCoordinates> beta_coordinates(const XnElement& x);
/// Multiplies out a coordinate table.
XnElement expand(const BetaCoordinates& c);

bool in_rn_plus(const XnElement& x);
bool in_rn_minus(const XnElement& x);

PnElement make_omega(int i, const Root& a, int n);
/// alpha_{i,b} = omega_{i-1,bv}^{-1} omega_{i,b} omega_{i,bv^2} omega_{i+1,bv}^{-1},
/// with omega_0 = omega_n = 1.
PnElement make_alpha(int i, const Root& b, int n);
/// Slot i of p as an element of A.
RatFun pn_row(const PnElement& p, int i);

/// Lambda_{i,a} -> omega_{i,av^{i-1}} omega_{i-1,av^i}^{-1}, extended multiplicatively.
PnElement kappa_v(const XnElement& x);

/// `L[i;root]^e` factors joined by ','; identity prints `1`.
template <class Tag>
std::string to_string(const RowTable<Tag>& x) {
  if (x.is_identity()) return "1";
  std::string out;
  for (const auto& [key, e] : x.table()) {
    if (!out.empty()) out += ',';
    out += Tag::symbol;
    out += '[' + std::to_string(key.row) + ';' + to_string(key.root) + "]^" + std::to_string(e);
  }
  return out;
}

XnElement parse_xn(std::string_view text, int n);
BetaCoordinates parse_beta(std::string_view text, int n);
PnElement parse_pn(std::string_view text, int n);

}  // namespace affblocks
