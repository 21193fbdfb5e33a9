#include "affblocks/scalar.hpp"

#include "affblocks/error.hpp"

#include <cctype>
#include <functional>
#include <mutex>
#include <ostream>
#include <set>

namespace affblocks {

namespace {

const std::string* intern(std::string_view name) {
  static std::mutex mutex;
  static std::set<std::string, std::less<>> table;
  std::lock_guard lock(mutex);
  auto it = table.find(name);
  if (it == table.end()) it = table.emplace(name).first;
  return &*it;
}

std::strong_ordering compare_integers(const Integer& x, const Integer& y) noexcept {
  int c = x.compare(y);
  if (c < 0) return std::strong_ordering::less;
  if (c > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::strong_ordering compare_rationals(const Rational& x, const Rational& y) noexcept {
  if (x < y) return std::strong_ordering::less;
  if (y < x) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

}  // namespace

bool is_valid_atom_name(std::string_view name) noexcept {
  if (name.empty() || !std::isalpha(static_cast<unsigned char>(name.front()))) return false;
  for (char c : name) {
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
  }
  return true;
}

Atom::Atom(std::string_view name) {
  if (!is_valid_atom_name(name)) {
    throw ParseError("invalid atom identifier '" + std::string(name) + "'");
  }
  name_ = intern(name);
}

std::strong_ordering operator<=>(const Atom& x, const Atom& y) noexcept {
  if (x.name_ == y.name_) return std::strong_ordering::equal;
  return *x.name_ <=> *y.name_;
}

Base::Base(Rational q) : value_(std::move(q)) {
  if (rational() == 0) throw DomainError("root base must be nonzero");
}

std::strong_ordering operator<=>(const Base& x, const Base& y) noexcept {
  if (x.is_atom() != y.is_atom()) {
    return x.is_atom() ? std::strong_ordering::greater : std::strong_ordering::less;
  }
  if (x.is_atom()) return x.atom() <=> y.atom();
  return compare_rationals(x.rational(), y.rational());
}

std::strong_ordering Root::root_compare(const Root& x, const Root& y) noexcept {
  if (auto c = x.base <=> y.base; c != 0) return c;
  return compare_integers(x.vexp, y.vexp);
}

Root root_shift(const Root& r, const Integer& k) { return Root(r.base, r.vexp + k); }

Root atom_root(std::string_view name, std::int64_t vexp) { return Root(Base(Atom(name)), vexp); }

namespace {

class RootParser {
 public:
  explicit RootParser(std::string text) : text_(std::move(text)) {}

  Root parse() {
    if (text_.empty()) fail("empty root literal");
    Root result;
    if (at_vpow()) {
      result = Root(Base(), parse_vpow());
    } else {
      Base base = parse_base();
      Integer k = 0;
      if (pos_ < text_.size()) {
        expect('*');
        if (!at_vpow()) fail("expected v-power after '*'");
        k = parse_vpow();
      }
      result = Root(std::move(base), std::move(k));
    }
    if (pos_ != text_.size()) fail("unexpected trailing input");
    return result;
  }

 private:
  [[noreturn]] void fail(const std::string& why) const {
    throw ParseError("malformed root '" + text_ + "': " + why + " at offset " +
                     std::to_string(pos_));
  }

  bool at_vpow() const {
    if (pos_ >= text_.size() || text_[pos_] != 'v') return false;
    return pos_ + 1 == text_.size() || text_[pos_ + 1] == '^';
  }

  void expect(char c) {
    if (pos_ >= text_.size() || text_[pos_] != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  std::string digits() {
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected digits");
    return text_.substr(start, pos_ - start);
  }

  Integer parse_int() {
    bool negative = false;
    if (pos_ < text_.size() && text_[pos_] == '-') {
      negative = true;
      ++pos_;
    }
    Integer value(digits());
    return negative ? Integer(-value) : value;
  }

  Integer parse_vpow() {
    expect('v');
    if (pos_ == text_.size() || text_[pos_] != '^') return 1;
    ++pos_;
    return parse_int();
  }

  Base parse_base() {
    char c = text_[pos_];
    if (std::isalpha(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
        ++pos_;
      }
      std::string name = text_.substr(start, pos_ - start);
      if (name == "v") fail("'v' is reserved for the parameter");
      return Base(Atom(name));
    }
    if (c == '-' || std::isdigit(static_cast<unsigned char>(c))) {
      Integer num = parse_int();
      Integer den = 1;
      if (pos_ < text_.size() && text_[pos_] == '/') {
        ++pos_;
        den = Integer(digits());
        if (den == 0) fail("zero denominator");
      }
      if (num == 0) fail("zero base");
      return Base(Rational(num, den));
    }
    fail("expected atom, rational or v-power");
  }

  std::string text_;
  std::size_t pos_ = 0;
};

}  // namespace

Root parse_root(std::string_view text) {
  std::string compact;
  compact.reserve(text.size());
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) compact.push_back(c);
  }
  return RootParser(std::move(compact)).parse();
}

std::string to_string(const Base& b) {
  if (b.is_atom()) return b.atom().name();
  const Rational& q = b.rational();
  std::string out = boost::multiprecision::numerator(q).str();
  if (boost::multiprecision::denominator(q) != 1) {
    out += "/" + boost::multiprecision::denominator(q).str();
  }
  return out;
}

std::string to_string(const Root& r) {
  if (r.base.is_one() && r.vexp == 0) return "1";
  return to_string(r.base) + "*v^" + r.vexp.str();
}

std::ostream& operator<<(std::ostream& os, const Root& r) { return os << to_string(r); }

}  // namespace affblocks
