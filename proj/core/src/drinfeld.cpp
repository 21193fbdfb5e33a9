#include "affblocks/drinfeld.hpp"

#include "affblocks/detail/checked.hpp"
#include "affblocks/error.hpp"

#include <algorithm>

namespace affblocks {

namespace {

void require_n(int n) {
  if (n < 2) throw DomainError("n must be at least 2, got " + std::to_string(n));
}

}  // namespace

bool is_dominant(std::span<const Poly> components) {
  const int n = static_cast<int>(components.size());
  require_n(n);
  for (int i = 1; i <= n - 1; ++i) {
    const Poly& qi = components[static_cast<std::size_t>(i - 1)];
    const Poly& qnext = components[static_cast<std::size_t>(i)];
    RatFun ratio = shift_u(qi.ratfun(), i - 1) * ratfun_inv(shift_u(qnext.ratfun(), i + 1));
    if (!is_polynomial(ratio)) return false;
  }
  return true;
}

DominantTuple::DominantTuple(int n) {
  require_n(n);
  components_.resize(static_cast<std::size_t>(n));
}

DominantTuple::DominantTuple(std::vector<Poly> components) : components_(std::move(components)) {
  if (!is_dominant(components_)) {
    throw DomainError("tuple is not dominant: " + to_string(*this));
  }
}

std::int64_t DominantTuple::total_degree() const noexcept {
  std::int64_t r = 0;
  for (const Poly& q : components_) r += q.degree();
  return r;
}

XnElement DominantTuple::to_xn() const {
  XnElement x(n());
  for (int i = 1; i <= n(); ++i) {
    for (const auto& [a, m] : component(i).support()) x.accumulate(i, a, m);
  }
  return x;
}

DominantTuple fundamental(int i, const Root& a, int n) {
  require_n(n);
  if (i < 1 || i > n) {
    throw DomainError("fundamental index " + std::to_string(i) + " outside 1.." +
                      std::to_string(n));
  }
  std::vector<Poly> comps(static_cast<std::size_t>(n));
  for (int j = 1; j <= i; ++j) {
    comps[static_cast<std::size_t>(j - 1)] = Poly::linear(root_shift(a, i - 2 * j + 1));
  }
  return DominantTuple(std::move(comps));
}

DominantTuple tuple_mul(const DominantTuple& q, const DominantTuple& p) {
  if (q.n() != p.n()) {
    throw DomainError("tuples with different n (" + std::to_string(q.n()) + " vs " +
                      std::to_string(p.n()) + ")");
  }
  std::vector<Poly> comps = q.components();
  for (int i = 0; i < q.n(); ++i) {
    comps[static_cast<std::size_t>(i)] *= p.components()[static_cast<std::size_t>(i)];
  }
  return DominantTuple(std::move(comps));
}

std::vector<Poly> kappa_tuple(const DominantTuple& q) {
  std::vector<Poly> out;
  out.reserve(static_cast<std::size_t>(q.n() - 1));
  for (int i = 1; i <= q.n() - 1; ++i) {
    auto p = divide(shift_u(q.component(i), i - 1), shift_u(q.component(i + 1), i + 1));
    if (!p) throw DomainError("tuple is not dominant at slot " + std::to_string(i));
    out.push_back(std::move(*p));
  }
  return out;
}

std::int64_t Composition::r() const noexcept {
  std::int64_t r = 0;
  for (auto p : parts) r += p;
  return r;
}

Composition degree_weight(const DominantTuple& q) {
  Composition lambda;
  for (const Poly& c : q.components()) lambda.parts.push_back(c.degree());
  return lambda;
}

bool dominance_leq(const Composition& lambda, const Composition& mu) {
  if (lambda.n() != mu.n()) throw DomainError("compositions of different length");
  if (lambda.r() != mu.r()) throw DomainError("compositions of different size");
  std::int64_t sl = 0;
  std::int64_t sm = 0;
  for (int i = 0; i < lambda.n(); ++i) {
    sl += lambda.parts[static_cast<std::size_t>(i)];
    sm += mu.parts[static_cast<std::size_t>(i)];
    if (sl > sm) return false;
  }
  return true;
}

EllipticCharacter elliptic_character(const DominantTuple& q) {
  EllipticCharacter chi;
  for (const Poly& c : q.components()) chi.class_poly *= c;
  chi.r = chi.class_poly.degree();
  return chi;
}

EllipticCharacter operator*(const EllipticCharacter& x, const EllipticCharacter& y) {
  return EllipticCharacter{detail::checked_add(x.r, y.r), x.class_poly * y.class_poly};
}

bool same_block(const DominantTuple& q, const DominantTuple& p) {
  if (q.n() != p.n()) {
    throw DomainError("tuples with different n (" + std::to_string(q.n()) + " vs " +
                      std::to_string(p.n()) + ")");
  }
  return elliptic_character(q) == elliptic_character(p);
}

std::vector<FundamentalFactor> decompose_fundamentals(const DominantTuple& q) {
  const int n = q.n();
  std::vector<FundamentalFactor> out;
  std::vector<Poly> slots = kappa_tuple(q);
  for (int j = 1; j <= n - 1; ++j) {
    for (const Root& b : slots[static_cast<std::size_t>(j - 1)].roots()) out.push_back({j, b});
  }
  for (const Root& b : q.component(n).roots()) out.push_back({n, root_shift(b, n - 1)});
  std::sort(out.begin(), out.end());
  return out;
}

DominantTuple multiply_fundamentals(std::span<const FundamentalFactor> factors, int n) {
  std::vector<Poly> comps(static_cast<std::size_t>(n));
  require_n(n);
  for (const auto& f : factors) {
    if (f.i < 1 || f.i > n) {
      throw DomainError("fundamental index " + std::to_string(f.i) + " outside 1.." +
                        std::to_string(n));
    }
    for (int j = 1; j <= f.i; ++j) {
      comps[static_cast<std::size_t>(j - 1)] *= Poly::linear(root_shift(f.a, f.i - 2 * j + 1));
    }
  }
  return DominantTuple(std::move(comps));
}

std::string to_string(const DominantTuple& q) {
  std::string out;
  for (const Poly& c : q.components()) {
    if (!out.empty()) out += " ; ";
    out += to_string(c);
  }
  return out;
}

DominantTuple parse_tuple(std::string_view text) {
  std::vector<Poly> comps;
  std::size_t start = 0;
  while (true) {
    std::size_t semi = text.find(';', start);
    std::string_view piece = text.substr(start, semi == std::string_view::npos
                                                    ? std::string_view::npos
                                                    : semi - start);
    comps.emplace_back(parse_ratfun(piece));
    if (semi == std::string_view::npos) break;
    start = semi + 1;
  }
  return DominantTuple(std::move(comps));
}

std::string to_string(const EllipticCharacter& chi) {
  return "r=" + std::to_string(chi.r) + " class=" + to_string(chi.class_poly);
}

}  // namespace affblocks
