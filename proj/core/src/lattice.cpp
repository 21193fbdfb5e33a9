#include "affblocks/lattice.hpp"

#include <cctype>

namespace affblocks {

namespace {

void require_row(int i, int lo, int hi, const char* what) {
  if (i < lo || i > hi) {
    throw DomainError(std::string(what) + " index " + std::to_string(i) + " outside " +
                      std::to_string(lo) + ".." + std::to_string(hi));
  }
}

// Exponent columns of x grouped by root: column[a][i-1] = exponent of Lambda_{i,a}.
std::map<Root, std::vector<std::int64_t>> columns(const XnElement& x) {
  std::map<Root, std::vector<std::int64_t>> out;
  for (const auto& [key, e] : x.table()) {
    auto [it, inserted] = out.try_emplace(key.root);
    if (inserted) it->second.assign(static_cast<std::size_t>(x.n()), 0);
    it->second[static_cast<std::size_t>(key.row - 1)] = e;
  }
  return out;
}

template <class Tag>
RowTable<Tag> parse_row_table(std::string_view text, int n) {
  std::string s;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  }
  RowTable<Tag> out(n);
  if (s == "1") return out;
  if (s.empty()) throw ParseError(std::string("empty ") + Tag::name + " element");
  std::size_t pos = 0;
  while (pos < s.size()) {
    if (s[pos] != Tag::symbol || pos + 1 >= s.size() || s[pos + 1] != '[') {
      throw ParseError(std::string("expected '") + Tag::symbol + "[' in '" + s + "'");
    }
    std::size_t semi = s.find(';', pos);
    std::size_t close = s.find(']', pos);
    if (semi == std::string::npos || close == std::string::npos || semi > close) {
      throw ParseError("malformed factor in '" + s + "'");
    }
    int row;
    std::int64_t e = 1;
    try {
      std::size_t used = 0;
      std::string row_text = s.substr(pos + 2, semi - pos - 2);
      row = std::stoi(row_text, &used);
      if (used != row_text.size()) throw std::invalid_argument("row");
    } catch (const std::logic_error&) {
      throw ParseError("malformed row index in '" + s + "'");
    }
    Root a = parse_root(std::string_view(s).substr(semi + 1, close - semi - 1));
    pos = close + 1;
    if (pos < s.size() && s[pos] == '^') {
      std::size_t end = s.find(',', pos);
      if (end == std::string::npos) end = s.size();
      std::string digits = s.substr(pos + 1, end - pos - 1);
      try {
        std::size_t used = 0;
        e = std::stoll(digits, &used);
        if (used != digits.size()) throw std::invalid_argument("exp");
      } catch (const std::logic_error&) {
        throw ParseError("malformed exponent '" + digits + "'");
      }
      pos = end;
    }
    out.accumulate(row, a, e);
    if (pos < s.size()) {
      if (s[pos] != ',') throw ParseError("expected ',' in '" + s + "'");
      if (++pos == s.size()) throw ParseError("trailing ',' in '" + s + "'");
    }
  }
  return out;
}

}  // namespace

XnElement make_lambda(int i, const Root& a, int n) {
  XnElement x(n);
  require_row(i, 1, n, "Lambda");
  x.accumulate(i, a, 1);
  return x;
}

XnElement make_beta(int i, const Root& a, int n) {
  XnElement x(n);
  require_row(i, 1, n - 1, "beta");
  x.accumulate(i, a, 1);
  x.accumulate(i + 1, a, -1);
  return x;
}

XnElement xn_mul(const XnElement& x, const XnElement& y) { return x * y; }

XnElement xn_from_rows(int n, std::span<const RatFun> rows) {
  XnElement x(n);
  if (static_cast<int>(rows.size()) != n) {
    throw DomainError("expected " + std::to_string(n) + " rows, got " +
                      std::to_string(rows.size()));
  }
  for (int i = 1; i <= n; ++i) {
    for (const auto& [a, m] : rows[static_cast<std::size_t>(i - 1)].support()) {
      x.accumulate(i, a, m);
    }
  }
  return x;
}

RatFun xn_row(const XnElement& x, int i) {
  require_row(i, 1, x.n(), "row");
  RatFun f;
  for (const auto& [key, e] : x.table()) {
    if (key.row == i) f.accumulate(key.root, e);
  }
  return f;
}

RatFun project_pi(const XnElement& x) {
  RatFun f;
  for (const auto& [key, e] : x.table()) f.accumulate(key.root, e);
  return f;
}

std::optional<BetaCoordinates> beta_coordinates(const XnElement& x) {
  BetaCoordinates c(x.n());
  for (const auto& [a, column] : columns(x)) {
    std::int64_t prefix = 0;
    for (int i = 1; i <= x.n(); ++i) {
      prefix = detail::checked_add(prefix, column[static_cast<std::size_t>(i - 1)]);
      if (i < x.n()) c.accumulate(i, a, prefix);
    }
    if (prefix != 0) return std::nullopt;
  }
  return c;
}

XnElement expand(const BetaCoordinates& c) {
  XnElement x(c.n());
  for (const auto& [key, e] : c.table()) {
    x.accumulate(key.row, key.root, e);
    x.accumulate(key.row + 1, key.root, detail::checked_neg(e));
  }
  return x;
}

bool in_rn_plus(const XnElement& x) {
  auto c = beta_coordinates(x);
  if (!c) return false;
  for (const auto& [key, e] : c->table()) {
    if (e < 0) return false;
  }
  return true;
}

bool in_rn_minus(const XnElement& x) {
  auto c = beta_coordinates(x);
  if (!c) return false;
  for (const auto& [key, e] : c->table()) {
    if (e > 0) return false;
  }
  return true;
}

PnElement make_omega(int i, const Root& a, int n) {
  PnElement p(n);
  require_row(i, 1, n - 1, "omega");
  p.accumulate(i, a, 1);
  return p;
}

PnElement make_alpha(int i, const Root& b, int n) {
  PnElement p(n);
  require_row(i, 1, n - 1, "alpha");
  const Root bv = root_shift(b, 1);
  if (i - 1 >= 1) p.accumulate(i - 1, bv, -1);
  p.accumulate(i, b, 1);
  p.accumulate(i, root_shift(b, 2), 1);
  if (i + 1 <= n - 1) p.accumulate(i + 1, bv, -1);
  return p;
}

RatFun pn_row(const PnElement& p, int i) {
  require_row(i, 1, p.n() - 1, "slot");
  RatFun f;
  for (const auto& [key, e] : p.table()) {
    if (key.row == i) f.accumulate(key.root, e);
  }
  return f;
}

PnElement kappa_v(const XnElement& x) {
  const int n = x.n();
  PnElement p(n);
  for (const auto& [key, e] : x.table()) {
    const int i = key.row;
    if (i <= n - 1) p.accumulate(i, root_shift(key.root, i - 1), e);
    if (i - 1 >= 1) p.accumulate(i - 1, root_shift(key.root, i), detail::checked_neg(e));
  }
  return p;
}

XnElement parse_xn(std::string_view text, int n) { return parse_row_table<XnTag>(text, n); }
BetaCoordinates parse_beta(std::string_view text, int n) {
  return parse_row_table<BetaTag>(text, n);
}
PnElement parse_pn(std::string_view text, int n) { return parse_row_table<PnTag>(text, n); }

}  // namespace affblocks
