#include "affblocks/polyring.hpp"

#include "affblocks/detail/checked.hpp"
#include "affblocks/error.hpp"

#include <cctype>

namespace affblocks {

using detail::checked_add;
using detail::checked_neg;

RatFun RatFun::linear(const Root& a, std::int64_t mult) {
  RatFun f;
  f.accumulate(a, mult);
  return f;
}

RatFun RatFun::from_roots(std::span<const Root> roots) {
  RatFun f;
  for (const Root& a : roots) f.accumulate(a, 1);
  return f;
}

std::int64_t RatFun::multiplicity(const Root& a) const {
  auto it = table_.find(a);
  return it == table_.end() ? 0 : it->second;
}

void RatFun::accumulate(const Root& a, std::int64_t mult) {
  if (mult == 0) return;
  auto [it, inserted] = table_.try_emplace(a, mult);
  if (inserted) return;
  it->second = checked_add(it->second, mult);
  if (it->second == 0) table_.erase(it);
}

RatFun& RatFun::operator*=(const RatFun& other) {
  for (const auto& [a, m] : other.table_) accumulate(a, m);
  return *this;
}

RatFun ratfun_mul(const RatFun& f, const RatFun& g) { return f * g; }

RatFun ratfun_inv(const RatFun& f) {
  RatFun out;
  for (const auto& [a, m] : f.support()) out.accumulate(a, checked_neg(m));
  return out;
}

RatFun shift_u(const RatFun& f, const Integer& k) {
  if (k == 0) return f;
  RatFun out;
  for (const auto& [a, m] : f.support()) out.accumulate(root_shift(a, k), m);
  return out;
}

bool is_polynomial(const RatFun& f) noexcept {
  for (const auto& [a, m] : f.support()) {
    if (m < 1) return false;
  }
  return true;
}

std::int64_t degree(const RatFun& f) {
  if (!is_polynomial(f)) throw DomainError("degree of a non-polynomial: " + to_string(f));
  std::int64_t d = 0;
  for (const auto& [a, m] : f.support()) d = checked_add(d, m);
  return d;
}

Poly::Poly(RatFun f) : f_(std::move(f)), degree_(affblocks::degree(f_)) {}

std::vector<Root> Poly::roots() const {
  std::vector<Root> out;
  out.reserve(static_cast<std::size_t>(degree_));
  for (const auto& [a, m] : f_.support()) out.insert(out.end(), static_cast<std::size_t>(m), a);
  return out;
}

Poly& Poly::operator*=(const Poly& other) {
  f_ *= other.f_;
  degree_ = checked_add(degree_, other.degree_);
  return *this;
}

Poly shift_u(const Poly& f, const Integer& k) { return Poly(shift_u(f.ratfun(), k)); }

std::optional<Poly> divide(const Poly& f, const Poly& g) {
  RatFun q = f.ratfun() * ratfun_inv(g.ratfun());
  if (!is_polynomial(q)) return std::nullopt;
  return Poly(std::move(q));
}

std::string to_string(const RatFun& f) {
  if (f.is_one()) return "1";
  std::string out;
  for (const auto& [a, m] : f.support()) {
    if (!out.empty()) out += ',';
    out += '(' + to_string(a) + ")^" + std::to_string(m);
  }
  return out;
}

RatFun parse_ratfun(std::string_view text) {
  std::string s;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  }
  if (s == "1") return {};
  if (s.empty()) throw ParseError("empty rational function");
  RatFun out;
  std::size_t pos = 0;
  while (pos < s.size()) {
    if (s[pos] != '(') throw ParseError("expected '(' in rational function '" + s + "'");
    std::size_t close = s.find(')', pos);
    if (close == std::string::npos) throw ParseError("unbalanced '(' in '" + s + "'");
    Root a = parse_root(std::string_view(s).substr(pos + 1, close - pos - 1));
    pos = close + 1;
    std::int64_t mult = 1;
    if (pos < s.size() && s[pos] == '^') {
      std::size_t end = s.find(',', pos);
      if (end == std::string::npos) end = s.size();
      std::string digits = s.substr(pos + 1, end - pos - 1);
      try {
        std::size_t used = 0;
        mult = std::stoll(digits, &used);
        if (used != digits.size()) throw ParseError("bad multiplicity '" + digits + "'");
      } catch (const std::logic_error&) {
        throw ParseError("bad multiplicity '" + digits + "'");
      }
      pos = end;
    }
    out.accumulate(a, mult);
    if (pos < s.size()) {
      if (s[pos] != ',') throw ParseError("expected ',' in rational function '" + s + "'");
      ++pos;
      if (pos == s.size()) throw ParseError("trailing ',' in '" + s + "'");
    }
  }
  return out;
}

}  // namespace affblocks
