#include "affblocks/characters.hpp"

#include "affblocks/detail/checked.hpp"
#include "affblocks/drinfeld.hpp"
#include "affblocks/error.hpp"

#include <numeric>

namespace affblocks {

CharacterSum::CharacterSum(int n) : n_(n) {
  if (n < 2) throw DomainError("n must be at least 2, got " + std::to_string(n));
}

std::int64_t CharacterSum::multiplicity(const XnElement& w) const {
  auto it = terms_.find(w);
  return it == terms_.end() ? 0 : it->second;
}

void CharacterSum::add(const XnElement& w, std::int64_t mult) {
  if (mult < 1) throw DomainError("character multiplicities must be positive");
  if (w.n() != n_) {
    throw DomainError("weight with n=" + std::to_string(w.n()) + " added to a character with n=" +
                      std::to_string(n_));
  }
  auto [it, inserted] = terms_.try_emplace(w, mult);
  if (!inserted) it->second = detail::checked_add(it->second, mult);
}

void SubsetWeight::validate(int n) const {
  if (j.empty()) throw DomainError("subset weight needs at least one index");
  for (std::size_t s = 0; s < j.size(); ++s) {
    if (j[s] < 1 || j[s] > n) {
      throw DomainError("subset index " + std::to_string(j[s]) + " outside 1.." +
                        std::to_string(n));
    }
    if (s > 0 && j[s] <= j[s - 1]) throw DomainError("subset indices must strictly increase");
  }
}

XnElement subset_weight(const SubsetWeight& sw, int n) {
  sw.validate(n);
  const int i = sw.i();
  XnElement x(n);
  for (int s = 1; s <= i; ++s) {
    x.accumulate(sw.j[static_cast<std::size_t>(s - 1)], root_shift(sw.a, i + 1 - 2 * s), 1);
  }
  return x;
}

CharacterSum ch_fundamental(int i, const Root& a, int n) {
  CharacterSum ch(n);
  if (i < 1 || i > n) {
    throw DomainError("fundamental index " + std::to_string(i) + " outside 1.." +
                      std::to_string(n));
  }
  // Lexicographic walk over i-subsets of 1..n.
  SubsetWeight sw{std::vector<int>(static_cast<std::size_t>(i)), a};
  std::iota(sw.j.begin(), sw.j.end(), 1);
  while (true) {
    ch.add(subset_weight(sw, n));
    int s = i - 1;
    while (s >= 0 && sw.j[static_cast<std::size_t>(s)] == n - i + s + 1) --s;
    if (s < 0) break;
    ++sw.j[static_cast<std::size_t>(s)];
    for (int t = s + 1; t < i; ++t) {
      sw.j[static_cast<std::size_t>(t)] = sw.j[static_cast<std::size_t>(t - 1)] + 1;
    }
  }
  return ch;
}

std::vector<BetaFactor> factorize_lweight(const SubsetWeight& sw, int n) {
  sw.validate(n);
  const int i = sw.i();
  std::vector<int> j = sw.j;
  std::vector<bool> occupied(static_cast<std::size_t>(n + 2), false);
  for (int idx : j) occupied[static_cast<std::size_t>(idx)] = true;

  std::vector<BetaFactor> chain;
  while (j.back() != i) {
    int k = 1;
    while (occupied[static_cast<std::size_t>(k)] || !occupied[static_cast<std::size_t>(k + 1)]) {
      ++k;
    }
    int s = 1;
    while (j[static_cast<std::size_t>(s - 1)] != k + 1) ++s;
    chain.push_back({k, root_shift(sw.a, i + 1 - 2 * s)});
    j[static_cast<std::size_t>(s - 1)] = k;
    occupied[static_cast<std::size_t>(k)] = true;
    occupied[static_cast<std::size_t>(k + 1)] = false;
  }
  return chain;
}

bool verify_weights_in_QRminus(int i, const Root& a, int n) {
  const XnElement q_inv = fundamental(i, a, n).to_xn().inverse();
  const CharacterSum ch = ch_fundamental(i, a, n);
  for (const auto& [w, mult] : ch.terms()) {
    if (!in_rn_minus(w * q_inv)) return false;
  }
  return true;
}

CharacterSum tensor_character(const CharacterSum& x, const CharacterSum& y) {
  if (x.n() != y.n()) {
    throw DomainError("characters with different n (" + std::to_string(x.n()) + " vs " +
                      std::to_string(y.n()) + ")");
  }
  CharacterSum out(x.n());
  for (const auto& [w1, m1] : x.terms()) {
    for (const auto& [w2, m2] : y.terms()) out.add(w1 * w2, detail::checked_mul(m1, m2));
  }
  return out;
}

std::string to_string(const CharacterSum& c) {
  std::string out;
  for (const auto& [w, m] : c.terms()) {
    if (!out.empty()) out += '\n';
    out += std::to_string(m) + ' ' + to_string(w);
  }
  return out;
}

}  // namespace affblocks
