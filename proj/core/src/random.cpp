#include "affblocks/random.hpp"

#include <algorithm>

namespace affblocks {

RandomConfig RandomConfig::standard() {
  RandomConfig c;
  c.bases = {Base(Atom("a")), Base(Atom("b")), Base(Rational(-2))};
  c.max_vexp = 10;
  return c;
}

RandomSource::RandomSource(std::uint64_t seed, RandomConfig config)
    : engine_(seed), config_(std::move(config)) {}

std::int64_t RandomSource::uniform(std::int64_t lo, std::int64_t hi) {
  return std::uniform_int_distribution<std::int64_t>(lo, hi)(engine_);
}

bool RandomSource::coin(double p) { return std::bernoulli_distribution(p)(engine_); }

Root RandomSource::root() {
  const auto& bases = config_.bases;
  const Base& b = bases[static_cast<std::size_t>(uniform(0, static_cast<std::int64_t>(bases.size()) - 1))];
  return Root(b, uniform(-config_.max_vexp, config_.max_vexp));
}

RatFun RandomSource::ratfun(int max_support, std::int64_t max_mult) {
  RatFun f;
  const auto terms = uniform(0, max_support);
  for (std::int64_t t = 0; t < terms; ++t) f.accumulate(root(), uniform(-max_mult, max_mult));
  return f;
}

Poly RandomSource::poly(int max_degree) {
  RatFun f;
  const auto d = uniform(0, max_degree);
  for (std::int64_t t = 0; t < d; ++t) f.accumulate(root(), 1);
  return Poly(std::move(f));
}

XnElement RandomSource::xn(int n, int max_terms, std::int64_t max_exp) {
  XnElement x(n);
  const auto terms = uniform(0, max_terms);
  for (std::int64_t t = 0; t < terms; ++t) {
    x.accumulate(static_cast<int>(uniform(1, n)), root(), uniform(-max_exp, max_exp));
  }
  return x;
}

BetaCoordinates RandomSource::beta(int n, int max_terms, std::int64_t max_exp) {
  BetaCoordinates c(n);
  const auto terms = uniform(0, max_terms);
  for (std::int64_t t = 0; t < terms; ++t) {
    c.accumulate(static_cast<int>(uniform(1, n - 1)), root(), uniform(-max_exp, max_exp));
  }
  return c;
}

XnElement RandomSource::xn_mixed(int n, int max_terms) {
  if (coin()) return expand(beta(n, max_terms));
  return xn(n, max_terms);
}

std::vector<FundamentalFactor> RandomSource::fundamentals(int n, int max_len) {
  std::vector<FundamentalFactor> out;
  const auto len = uniform(0, max_len);
  for (std::int64_t t = 0; t < len; ++t) out.push_back({static_cast<int>(uniform(1, n)), root()});
  return out;
}

DominantTuple RandomSource::dominant_tuple(int n, int max_len) {
  auto factors = fundamentals(n, max_len);
  return multiply_fundamentals(factors, n);
}

SubsetWeight RandomSource::subset(int n) {
  std::vector<int> all(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) all[static_cast<std::size_t>(k)] = k + 1;
  std::shuffle(all.begin(), all.end(), engine_);
  const auto i = uniform(1, n);
  std::vector<int> j(all.begin(), all.begin() + i);
  std::sort(j.begin(), j.end());
  return {std::move(j), root()};
}

Multisegment RandomSource::multisegment(std::int64_t r, std::int64_t max_length) {
  std::vector<Segment> segs;
  std::int64_t left = r;
  while (left > 0) {
    const auto k = uniform(1, std::min(left, max_length));
    segs.push_back({root(), k});
    left -= k;
  }
  return Multisegment(std::move(segs));
}

std::vector<Segment> RandomSource::recut(std::vector<Segment> segs, std::int64_t max_length,
                                         int moves) {
  for (int move = 0; move < moves; ++move) {
    if (segs.empty()) break;
    if (coin()) {
      // Split one segment of length k >= 2 into k1 + k2.
      std::vector<std::size_t> splittable;
      for (std::size_t s = 0; s < segs.size(); ++s) {
        if (segs[s].length >= 2) splittable.push_back(s);
      }
      if (splittable.empty()) continue;
      const std::size_t pick =
          splittable[static_cast<std::size_t>(uniform(0, static_cast<std::int64_t>(splittable.size()) - 1))];
      const Segment whole = segs[pick];
      const std::int64_t k1 = uniform(1, whole.length - 1);
      const std::int64_t k2 = whole.length - k1;
      segs[pick] = {root_shift(whole.center, k1 - whole.length), k1};
      segs.push_back({root_shift(whole.center, k1), k2});
    } else {
      // Merge two progressions where the second starts right after the first ends.
      bool merged = false;
      for (std::size_t s = 0; s < segs.size() && !merged; ++s) {
        for (std::size_t t = 0; t < segs.size() && !merged; ++t) {
          if (s == t || segs[s].center.base != segs[t].center.base) continue;
          const std::int64_t k = segs[s].length + segs[t].length;
          if (k > max_length) continue;
          const Integer end_s = segs[s].center.vexp + (segs[s].length - 1);
          const Integer start_t = segs[t].center.vexp - (segs[t].length - 1);
          if (start_t != end_s + 2) continue;
          const Integer start_s = segs[s].center.vexp - (segs[s].length - 1);
          Segment joined{Root(segs[s].center.base, start_s + (k - 1)), k};
          segs[s] = joined;
          segs.erase(segs.begin() + static_cast<std::ptrdiff_t>(t));
          merged = true;
        }
      }
    }
  }
  return segs;
}

std::vector<Segment> factors_to_segments(const std::vector<FundamentalFactor>& factors) {
  std::vector<Segment> out;
  out.reserve(factors.size());
  for (const auto& f : factors) out.push_back({f.a, f.i});
  return out;
}

std::vector<FundamentalFactor> segments_to_factors(const std::vector<Segment>& segments) {
  std::vector<FundamentalFactor> out;
  out.reserve(segments.size());
  for (const auto& s : segments) out.push_back({static_cast<int>(s.length), s.center});
  return out;
}

}  // namespace affblocks
