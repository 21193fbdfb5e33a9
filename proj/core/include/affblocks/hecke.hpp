#pragma once

// Segments and multisegments indexing simple modules of the extended affine
// Hecke algebra, their juxtaposition, and the map to dominant tuples.

#include "affblocks/drinfeld.hpp"
#include "affblocks/polyring.hpp"
#include "affblocks/scalar.hpp"

#include <compare>
#include <cstdint>
#include <vector>

namespace affblocks {

/// (a v^{-k+1}, a v^{-k+3}, ..., a v^{k-1}) with center a and length k >= 1.
struct Segment {
  Root center;
  std::int64_t length = 1;

  friend bool operator==(const Segment&, const Segment&) = default;
  friend std::strong_ordering operator<=>(const Segment& x, const Segment& y) noexcept {
    if (auto c = root_compare(x.center, y.center); c != 0) return c;
    return x.length <=> y.length;
  }
};

/// Unordered collection of segments, stored sorted by (center, length).
class Multisegment {
 public:
  Multisegment() = default;
  /// Throws DomainError on a segment of length < 1.
  explicit Multisegment(std::vector<Segment> segments);

  const std::vector<Segment>& segments() const noexcept { return segments_; }
  /// Total length.
  std::int64_t r() const noexcept { return r_; }

  friend bool operator==(const Multisegment&, const Multisegment&) = default;

 private:
  std::vector<Segment> segments_;
  std::int64_t r_ = 0;
};

std::vector<Root> expand_segment(const Segment& s);
/// Multiset union of all segment entries, as a polynomial prod (1 - b u).
Poly juxtapose(const Multisegment& ms);

/// Q_i(u) = P_i(u v^{-i+1}) P_{i+1}(u v^{-i+2}) ... P_{n-1}(u v^{n-2i}), Q_n = 1,
/// with P_k(u) = prod over segments of length k of (1 - center u).
/// Requires n > r.
DominantTuple segments_to_drinfeld(const Multisegment& ms, int n);

/// Same block iff the juxtapositions agree up to a permutation.
bool hecke_same_block(const Multisegment& x, const Multisegment& y);

}  // namespace affblocks
