#pragma once

// v-characters of fundamental modules L(Q_{i,a}) and the explicit
// factorization of each l-weight into Q_{i,a} times inverse l-simple roots.

#include "affblocks/lattice.hpp"
#include "affblocks/scalar.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace affblocks {

/// A formal sum of l-weights with positive integer multiplicities.
class CharacterSum {
 public:
  using Terms = std::map<XnElement, std::int64_t>;

  explicit CharacterSum(int n);

  int n() const noexcept { return n_; }
  const Terms& terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }
  std::int64_t multiplicity(const XnElement& w) const;

  /// Throws DomainError on mult < 1 or a weight of a different n.
  void add(const XnElement& w, std::int64_t mult = 1);

  friend bool operator==(const CharacterSum&, const CharacterSum&) = default;

 private:
  int n_;
  Terms terms_;
};

/// A strictly increasing index list j_1 < ... < j_i in 1..n, with a root a.
struct SubsetWeight {
  std::vector<int> j;
  Root a;

  int i() const noexcept { return static_cast<int>(j.size()); }
  /// Throws DomainError unless j is nonempty, strictly increasing, inside 1..n.
  void validate(int n) const;
};

/// Lambda_{j_1, a v^{i-1}} Lambda_{j_2, a v^{i-3}} ... Lambda_{j_i, a v^{1-i}}.
XnElement subset_weight(const SubsetWeight& sw, int n);

/// Sum of subset_weight over all i-subsets of 1..n; C(n, i) terms.
CharacterSum ch_fundamental(int i, const Root& a, int n);

struct BetaFactor {
  int k;
  Root root;

  friend bool operator==(const BetaFactor&, const BetaFactor&) = default;
};

/// Chain of beta_{k,b} with
///   subset_weight(sw) = Q_{i,a} * prod beta_{k,b}^{-1}.
/// Each step lowers the first index j_s = k+1 whose left neighbour slot k is
/// empty (smallest such k), recording b = a v^{i+1-2s}.
std::vector<BetaFactor> factorize_lweight(const SubsetWeight& sw, int n);

/// Every l-weight w of ch_fundamental(i, a, n) satisfies w Q_{i,a}^{-1} in R_n^-.
bool verify_weights_in_QRminus(int i, const Root& a, int n);

CharacterSum tensor_character(const CharacterSum& x, const CharacterSum& y);

/// One `mult weight` line per term, canonical order.
std::string to_string(const CharacterSum& c);

}  // namespace affblocks
