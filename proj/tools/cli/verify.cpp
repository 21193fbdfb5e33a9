#include "verify.hpp"

#include "affblocks/characters.hpp"
#include "affblocks/drinfeld.hpp"
#include "affblocks/hecke.hpp"
#include "affblocks/lattice.hpp"
#include "affblocks/random.hpp"

#include <algorithm>
#include <array>
#include <compare>
#include <functional>
#include <optional>
#include <stdexcept>

namespace affblocks::cli {

namespace {

using Failure = std::optional<std::string>;
using Check = std::function<Failure(RandomSource&, const VerifyOptions&)>;

struct Property {
  const char* suite;
  const char* name;
  Check check;
};

int pick_n(RandomSource& rng, const VerifyOptions& o) {
  return static_cast<int>(rng.uniform(2, std::max(2, o.max_n)));
}

std::int64_t binomial(int n, int k) {
  std::int64_t c = 1;
  for (int t = 1; t <= k; ++t) c = c * (n - k + t) / t;
  return c;
}

// --- scalar -----------------------------------------------------------------

Failure scalar_shift_composition(RandomSource& rng, const VerifyOptions&) {
  Root r = rng.root();
  auto j = rng.uniform(-50, 50);
  auto k = rng.uniform(-50, 50);
  if (root_shift(root_shift(r, j), k) != root_shift(r, j + k)) return to_string(r);
  if (root_shift(r, 0) != r) return to_string(r);
  return {};
}

Failure scalar_total_order(RandomSource& rng, const VerifyOptions&) {
  Root x = rng.root(), y = rng.root(), z = rng.root();
  auto xy = root_compare(x, y);
  if ((xy == 0) != (x == y)) return "equality mismatch " + to_string(x) + " " + to_string(y);
  auto yx = root_compare(y, x);
  if (std::is_lt(xy) != std::is_gt(yx) || std::is_eq(xy) != std::is_eq(yx)) return "antisymmetry " + to_string(x) + " " + to_string(y);
  if (root_compare(x, y) <= 0 && root_compare(y, z) <= 0 && root_compare(x, z) > 0) {
    return "transitivity " + to_string(x) + " " + to_string(y) + " " + to_string(z);
  }
  return {};
}

Failure scalar_text_roundtrip(RandomSource& rng, const VerifyOptions&) {
  Root r = rng.root();
  if (parse_root(to_string(r)) != r) return to_string(r);
  return {};
}

// --- polyring ---------------------------------------------------------------

Failure polyring_group(RandomSource& rng, const VerifyOptions&) {
  RatFun f = rng.ratfun(5, 3), g = rng.ratfun(5, 3), h = rng.ratfun(5, 3);
  if ((f * g) * h != f * (g * h)) return "associativity at " + to_string(f);
  if (f * g != g * f) return "commutativity at " + to_string(f);
  if (f * RatFun{} != f) return "identity at " + to_string(f);
  if (!(f * ratfun_inv(f)).is_one()) return "inverse at " + to_string(f);
  return {};
}

Failure polyring_shift_hom(RandomSource& rng, const VerifyOptions&) {
  RatFun f = rng.ratfun(5, 3), g = rng.ratfun(5, 3);
  auto j = rng.uniform(-10, 10), k = rng.uniform(-10, 10);
  if (shift_u(f * g, k) != shift_u(f, k) * shift_u(g, k)) return "homomorphism at " + to_string(f);
  if (shift_u(shift_u(f, j), k) != shift_u(f, j + k)) return "composition at " + to_string(f);
  return {};
}

Failure polyring_degree_additive(RandomSource& rng, const VerifyOptions&) {
  Poly f = rng.poly(6), g = rng.poly(6);
  if (degree((f * g).ratfun()) != degree(f.ratfun()) + degree(g.ratfun())) return to_string(f);
  return {};
}

Failure polyring_text_roundtrip(RandomSource& rng, const VerifyOptions&) {
  RatFun f = rng.ratfun(5, 3);
  if (parse_ratfun(to_string(f)) != f) return to_string(f);
  return {};
}

// --- lattice ----------------------------------------------------------------

Failure lattice_kernel(RandomSource& rng, const VerifyOptions& o) {
  XnElement x = rng.xn_mixed(pick_n(rng, o), 6);
  if (beta_coordinates(x).has_value() != project_pi(x).is_one()) return to_string(x);
  return {};
}

Failure lattice_beta_roundtrip(RandomSource& rng, const VerifyOptions& o) {
  BetaCoordinates c = rng.beta(pick_n(rng, o), 6);
  auto solved = beta_coordinates(expand(c));
  if (!solved || *solved != c) return to_string(c);
  return {};
}

Failure lattice_kappa_hom(RandomSource& rng, const VerifyOptions& o) {
  const int n = pick_n(rng, o);
  XnElement x = rng.xn(n, 6), y = rng.xn(n, 6);
  if (kappa_v(x * y) != kappa_v(x) * kappa_v(y)) return to_string(x) + " / " + to_string(y);
  return {};
}

Failure lattice_kappa_alpha(RandomSource& rng, const VerifyOptions& o) {
  const int n = pick_n(rng, o);
  Root a = rng.root();
  for (int i = 1; i <= n - 1; ++i) {
    if (kappa_v(make_beta(i, a, n)) != make_alpha(i, root_shift(a, i - 1), n)) {
      return "i=" + std::to_string(i) + " n=" + std::to_string(n) + " a=" + to_string(a);
    }
  }
  return {};
}

Failure lattice_free_intersection(RandomSource& rng, const VerifyOptions& o) {
  const int n = static_cast<int>(rng.uniform(3, std::max(3, o.max_n)));
  const int m = static_cast<int>(rng.uniform(1, n - 1));
  const int s = static_cast<int>(rng.uniform(m, n - 1));
  // Build a beta product on rows m..s with a cancelling tail so that the
  // identity is hit often.
  XnElement x(n);
  std::vector<std::pair<int, Root>> used;
  const auto terms = rng.uniform(1, 5);
  for (std::int64_t t = 0; t < terms; ++t) {
    const int i = static_cast<int>(rng.uniform(m, s));
    Root a = rng.root();
    x *= make_beta(i, a, n).pow(rng.uniform(-2, 2));
    used.emplace_back(i, a);
  }
  if (rng.coin()) {
    for (const auto& [i, a] : used) {
      const auto c = beta_coordinates(x)->exponent(i, a);
      x *= make_beta(i, a, n).pow(-c);
    }
  }
  bool in_xm = std::all_of(x.table().begin(), x.table().end(),
                           [m](const auto& kv) { return kv.first.row <= m; });
  if (in_xm && !x.is_identity()) return to_string(x);
  return {};
}

// --- drinfeld ---------------------------------------------------------------

Failure drinfeld_decompose_roundtrip(RandomSource& rng, const VerifyOptions& o) {
  const int n = pick_n(rng, o);
  auto factors = rng.fundamentals(n, 12);
  DominantTuple q = multiply_fundamentals(factors, n);
  auto decomposed = decompose_fundamentals(q);
  std::sort(factors.begin(), factors.end());
  if (decomposed != factors) return "multiset mismatch for " + to_string(q);
  if (multiply_fundamentals(decomposed, n) != q) return "product mismatch for " + to_string(q);
  return {};
}

Failure drinfeld_fundamental_dominant(RandomSource& rng, const VerifyOptions& o) {
  const int n = pick_n(rng, o);
  const int i = static_cast<int>(rng.uniform(1, n));
  Root a = rng.root();
  DominantTuple q = fundamental(i, a, n);
  if (!is_dominant(q.components())) return "not dominant";
  Composition lambda = degree_weight(q);
  if (lambda.r() != i) return "weight size";
  for (int k = 0; k + 1 < n; ++k) {
    if (lambda.parts[static_cast<std::size_t>(k)] < lambda.parts[static_cast<std::size_t>(k + 1)]) {
      return "weight not a partition";
    }
  }
  auto slots = kappa_tuple(q);
  for (int j = 1; j <= n - 1; ++j) {
    Poly expected = j == i ? Poly::linear(a) : Poly{};
    if (slots[static_cast<std::size_t>(j - 1)] != expected) return "kappa slot " + std::to_string(j);
  }
  if (i == n && q.component(n) != Poly::linear(root_shift(a, 1 - n))) return "Q_n boundary";
  return {};
}

Failure drinfeld_tuple_mul_dominant(RandomSource& rng, const VerifyOptions& o) {
  const int n = pick_n(rng, o);
  DominantTuple q = rng.dominant_tuple(n, 6), p = rng.dominant_tuple(n, 6);
  DominantTuple qp = tuple_mul(q, p);
  if (!is_dominant(qp.components())) return to_string(qp);
  Composition w = degree_weight(qp), wq = degree_weight(q), wp = degree_weight(p);
  for (int i = 0; i < n; ++i) {
    auto k = static_cast<std::size_t>(i);
    if (w.parts[k] != wq.parts[k] + wp.parts[k]) return "weight additivity";
  }
  if (elliptic_character(qp) != elliptic_character(q) * elliptic_character(p)) {
    return "character multiplicativity";
  }
  return {};
}

Failure drinfeld_same_block_lattice(RandomSource& rng, const VerifyOptions& o) {
  const int n = pick_n(rng, o);
  auto factors = rng.fundamentals(n, 8);
  DominantTuple q = multiply_fundamentals(factors, n);
  DominantTuple p = rng.coin()
      ? multiply_fundamentals(segments_to_factors(rng.recut(factors_to_segments(factors), n, 6)), n)
      : rng.dominant_tuple(n, 8);
  bool lattice = q.total_degree() == p.total_degree() &&
                 beta_coordinates(q.to_xn() * p.to_xn().inverse()).has_value();
  if (same_block(q, p) != lattice) return to_string(q) + " vs " + to_string(p);
  return {};
}

Failure drinfeld_same_block_equivalence(RandomSource& rng, const VerifyOptions& o) {
  const int n = pick_n(rng, o);
  auto factors = rng.fundamentals(n, 6);
  auto recut = [&] {
    return multiply_fundamentals(segments_to_factors(rng.recut(factors_to_segments(factors), n, 4)), n);
  };
  DominantTuple x = multiply_fundamentals(factors, n);
  DominantTuple y = rng.coin() ? recut() : rng.dominant_tuple(n, 6);
  DominantTuple z = rng.coin() ? recut() : rng.dominant_tuple(n, 6);
  if (!same_block(x, x)) return "reflexivity";
  if (same_block(x, y) != same_block(y, x)) return "symmetry";
  if (same_block(x, y) && same_block(y, z) && !same_block(x, z)) return "transitivity";
  return {};
}

Failure drinfeld_dominance_order(RandomSource& rng, const VerifyOptions& o) {
  const int n = pick_n(rng, o);
  const auto r = rng.uniform(0, o.max_r);
  auto random_composition = [&] {
    Composition c{std::vector<std::int64_t>(static_cast<std::size_t>(n), 0)};
    for (std::int64_t t = 0; t < r; ++t) ++c.parts[static_cast<std::size_t>(rng.uniform(0, n - 1))];
    return c;
  };
  Composition x = random_composition(), y = random_composition(), z = random_composition();
  if (!dominance_leq(x, x)) return "reflexivity";
  if (dominance_leq(x, y) && dominance_leq(y, x) && x != y) return "antisymmetry";
  if (dominance_leq(x, y) && dominance_leq(y, z) && !dominance_leq(x, z)) return "transitivity";
  return {};
}

// --- characters -------------------------------------------------------------

Failure characters_term_count(RandomSource& rng, const VerifyOptions& o) {
  const int n = pick_n(rng, o);
  const int i = static_cast<int>(rng.uniform(1, n));
  Root a = rng.root();
  CharacterSum ch = ch_fundamental(i, a, n);
  if (static_cast<std::int64_t>(ch.size()) != binomial(n, i)) return "term count";
  if (ch.multiplicity(fundamental(i, a, n).to_xn()) != 1) return "highest term";
  const RatFun cls = elliptic_character(fundamental(i, a, n)).class_poly.ratfun();
  for (const auto& [w, m] : ch.terms()) {
    if (project_pi(w) != cls) return "block label of " + to_string(w);
  }
  return {};
}

Failure characters_chain(RandomSource& rng, const VerifyOptions& o) {
  const int n = pick_n(rng, o);
  SubsetWeight sw = rng.subset(n);
  XnElement product = fundamental(sw.i(), sw.a, n).to_xn();
  for (const auto& f : factorize_lweight(sw, n)) {
    if (f.k < 1 || f.k > n - 1) return "k out of range";
    product *= make_beta(f.k, f.root, n).inverse();
  }
  if (product != subset_weight(sw, n)) return to_string(subset_weight(sw, n));
  return {};
}

Failure characters_qrminus(RandomSource& rng, const VerifyOptions& o) {
  const int n = pick_n(rng, o);
  const int i = static_cast<int>(rng.uniform(1, n));
  if (!verify_weights_in_QRminus(i, rng.root(), n)) return "i=" + std::to_string(i);
  return {};
}

Failure characters_tensor_qrminus(RandomSource& rng, const VerifyOptions& o) {
  const int n = static_cast<int>(rng.uniform(2, std::min(std::max(2, o.max_n), 5)));
  const auto count = rng.uniform(1, 3);
  DominantTuple q(n);
  CharacterSum ch(n);
  ch.add(XnElement(n));
  for (std::int64_t t = 0; t < count; ++t) {
    const int i = static_cast<int>(rng.uniform(1, n));
    Root a = rng.root();
    q = tuple_mul(q, fundamental(i, a, n));
    ch = tensor_character(ch, ch_fundamental(i, a, n));
  }
  const XnElement q_inv = q.to_xn().inverse();
  for (const auto& [w, m] : ch.terms()) {
    if (!in_rn_minus(w * q_inv)) return to_string(w);
  }
  return {};
}

// --- hecke ------------------------------------------------------------------

Failure hecke_product_identity(RandomSource& rng, const VerifyOptions& o) {
  const auto r = rng.uniform(0, o.max_r);
  const int n = static_cast<int>(r + 1 < 2 ? 2 : r + 1);
  Multisegment ms = rng.multisegment(r, n - 1);
  DominantTuple q = segments_to_drinfeld(ms, n);
  if (!is_dominant(q.components())) return "not dominant";
  if (!q.component(n).is_one()) return "Q_n != 1";
  if (elliptic_character(q).class_poly != juxtapose(ms)) return to_string(q);
  return {};
}

Failure hecke_cross_validation(RandomSource& rng, const VerifyOptions& o) {
  const auto r = rng.uniform(0, std::min(o.max_r, 8));
  const int n = static_cast<int>(r + 1 < 2 ? 2 : r + 1);
  Multisegment x = rng.multisegment(r, r < 1 ? 1 : r);
  Multisegment y = rng.coin() ? Multisegment(rng.recut(x.segments(), r < 1 ? 1 : r, 6))
                              : rng.multisegment(r, r < 1 ? 1 : r);
  if (hecke_same_block(x, y) != same_block(segments_to_drinfeld(x, n), segments_to_drinfeld(y, n))) {
    return "r=" + std::to_string(r);
  }
  return {};
}

Failure hecke_equivalence(RandomSource& rng, const VerifyOptions& o) {
  const auto r = rng.uniform(0, o.max_r);
  const auto max_len = r < 1 ? 1 : r;
  Multisegment x = rng.multisegment(r, max_len);
  Multisegment y(rng.coin() ? rng.recut(x.segments(), max_len, 4) : rng.multisegment(r, max_len).segments());
  Multisegment z(rng.coin() ? rng.recut(y.segments(), max_len, 4) : rng.multisegment(r, max_len).segments());
  if (!hecke_same_block(x, x)) return "reflexivity";
  if (hecke_same_block(x, y) != hecke_same_block(y, x)) return "symmetry";
  if (hecke_same_block(x, y) && hecke_same_block(y, z) && !hecke_same_block(x, z)) {
    return "transitivity";
  }
  return {};
}

const std::vector<Property>& properties() {
  static const std::vector<Property> all = {
      {"scalar", "shift composition", scalar_shift_composition},
      {"scalar", "total order", scalar_total_order},
      {"scalar", "text roundtrip", scalar_text_roundtrip},
      {"polyring", "group axioms", polyring_group},
      {"polyring", "shift homomorphism", polyring_shift_hom},
      {"polyring", "degree additivity", polyring_degree_additive},
      {"polyring", "text roundtrip", polyring_text_roundtrip},
      {"lattice", "kernel characterization", lattice_kernel},
      {"lattice", "beta roundtrip", lattice_beta_roundtrip},
      {"lattice", "kappa homomorphism", lattice_kappa_hom},
      {"lattice", "kappa(beta) = alpha", lattice_kappa_alpha},
      {"lattice", "free intersection", lattice_free_intersection},
      {"drinfeld", "decomposition roundtrip", drinfeld_decompose_roundtrip},
      {"drinfeld", "fundamental tuples", drinfeld_fundamental_dominant},
      {"drinfeld", "tuple product", drinfeld_tuple_mul_dominant},
      {"drinfeld", "same block vs lattice class", drinfeld_same_block_lattice},
      {"drinfeld", "same block equivalence", drinfeld_same_block_equivalence},
      {"drinfeld", "dominance partial order", drinfeld_dominance_order},
      {"characters", "fundamental character terms", characters_term_count},
      {"characters", "l-weight chain", characters_chain},
      {"characters", "weights in Q R_n^-", characters_qrminus},
      {"characters", "tensor weights in Q R_n^-", characters_tensor_qrminus},
      {"hecke", "product identity", hecke_product_identity},
      {"hecke", "hecke vs schur blocks", hecke_cross_validation},
      {"hecke", "block equivalence", hecke_equivalence},
  };
  return all;
}

}  // namespace

const std::vector<std::string>& verify_suites() {
  static const std::vector<std::string> names = {"scalar", "polyring", "lattice",
                                                 "drinfeld", "characters", "hecke"};
  return names;
}

std::vector<PropertyResult> run_verify(const VerifyOptions& options) {
  const auto& suites = verify_suites();
  if (options.suite != "all" &&
      std::find(suites.begin(), suites.end(), options.suite) == suites.end()) {
    throw std::invalid_argument("unknown suite '" + options.suite + "'");
  }
  if (options.iters < 0 || options.max_n < 2 || options.max_r < 0) {
    throw std::invalid_argument("iters >= 0, max-n >= 2 and max-r >= 0 are required");
  }
  std::vector<PropertyResult> results;
  std::uint64_t index = 0;
  for (const Property& p : properties()) {
    ++index;
    if (options.suite != "all" && options.suite != p.suite) continue;
    std::seed_seq seq{static_cast<std::uint32_t>(options.seed),
                      static_cast<std::uint32_t>(options.seed >> 32),
                      static_cast<std::uint32_t>(index)};
    std::array<std::uint32_t, 2> words{};
    seq.generate(words.begin(), words.end());
    RandomSource rng((std::uint64_t{words[0]} << 32) | words[1]);
    PropertyResult result;
    result.suite = p.suite;
    result.property = p.name;
    for (int it = 0; it < options.iters; ++it) {
      ++result.checks;
      Failure failure;
      try {
        failure = p.check(rng, options);
      } catch (const std::exception& e) {
        failure = std::string("exception: ") + e.what();
      }
      if (failure) {
        result.passed = false;
        result.detail = *failure;
        break;
      }
    }
    results.push_back(std::move(result));
  }
  return results;
}

}  // namespace affblocks::cli
