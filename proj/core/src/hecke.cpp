#include "affblocks/hecke.hpp"

#include "affblocks/detail/checked.hpp"
#include "affblocks/error.hpp"

#include <algorithm>

namespace affblocks {

Multisegment::Multisegment(std::vector<Segment> segments) : segments_(std::move(segments)) {
  for (const Segment& s : segments_) {
    if (s.length < 1) throw DomainError("segment length must be >= 1");
    r_ = detail::checked_add(r_, s.length);
  }
  std::sort(segments_.begin(), segments_.end());
}

std::vector<Root> expand_segment(const Segment& s) {
  if (s.length < 1) throw DomainError("segment length must be >= 1");
  std::vector<Root> out;
  out.reserve(static_cast<std::size_t>(s.length));
  for (std::int64_t t = 0; t < s.length; ++t) {
    out.push_back(root_shift(s.center, -s.length + 1 + 2 * t));
  }
  return out;
}

Poly juxtapose(const Multisegment& ms) {
  RatFun f;
  for (const Segment& s : ms.segments()) {
    for (const Root& b : expand_segment(s)) f.accumulate(b, 1);
  }
  return Poly(std::move(f));
}

DominantTuple segments_to_drinfeld(const Multisegment& ms, int n) {
  if (n <= ms.r()) {
    throw DomainError("segments_to_drinfeld needs n > r (n=" + std::to_string(n) +
                      ", r=" + std::to_string(ms.r()) + ")");
  }
  std::vector<Poly> p(static_cast<std::size_t>(n));  // p[k] = P_k, k in 1..n-1
  for (const Segment& s : ms.segments()) {
    if (s.length >= n) {
      throw DomainError("segment length " + std::to_string(s.length) + " must be < n=" +
                        std::to_string(n));
    }
    p[static_cast<std::size_t>(s.length)] *= Poly::linear(s.center);
  }
  std::vector<Poly> q(static_cast<std::size_t>(n));
  for (int i = 1; i <= n - 1; ++i) {
    Poly& qi = q[static_cast<std::size_t>(i - 1)];
    for (int k = i; k <= n - 1; ++k) qi *= shift_u(p[static_cast<std::size_t>(k)], k - 2 * i + 1);
  }
  return DominantTuple(std::move(q));
}

bool hecke_same_block(const Multisegment& x, const Multisegment& y) {
  return x.r() == y.r() && juxtapose(x) == juxtapose(y);
}

}  // namespace affblocks
