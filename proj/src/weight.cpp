#include "wcat/weight.hpp"

#include <cstdlib>
#include <numeric>
#include <stdexcept>

namespace wcat {

namespace {

using I128 = __int128;

std::int64_t checked64(I128 v, const char* what) {
  if (v > INT64_MAX || v < INT64_MIN) throw std::overflow_error(what);
  return static_cast<std::int64_t>(v);
}

Rat make(I128 num, I128 den, const char* what) {
  if (den == 0) throw std::invalid_argument("rational with zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  I128 a = num < 0 ? -num : num;
  I128 g = 1;
  {
    I128 x = a, y = den;
    while (y != 0) {
      I128 t = x % y;
      x = y;
      y = t;
    }
    g = x == 0 ? 1 : x;
  }
  Rat r;
  r.num = checked64(num / g, what);
  r.den = checked64(den / g, what);
  return r;
}

}  // namespace

Rat::Rat(std::int64_t n, std::int64_t d) { *this = make(n, d, "rational overflow"); }

Rat Rat::operator+(const Rat& o) const {
  return make(I128(num) * o.den + I128(o.num) * den, I128(den) * o.den, "rational add overflow");
}

Rat Rat::operator-(const Rat& o) const {
  return make(I128(num) * o.den - I128(o.num) * den, I128(den) * o.den, "rational sub overflow");
}

Rat Rat::operator*(const Rat& o) const {
  return make(I128(num) * o.num, I128(den) * o.den, "rational mul overflow");
}

std::strong_ordering Rat::operator<=>(const Rat& o) const {
  I128 l = I128(num) * o.den;
  I128 r = I128(o.num) * den;
  if (l < r) return std::strong_ordering::less;
  if (l > r) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::string Rat::str() const {
  if (den == 1) return std::to_string(num);
  return std::to_string(num) + "/" + std::to_string(den);
}

Rat Rat::parse(const std::string& text) {
  if (text.empty()) throw std::invalid_argument("empty rational");
  std::size_t slash = text.find('/');
  auto parse_int = [](const std::string& s) -> std::int64_t {
    if (s.empty()) throw std::invalid_argument("empty integer in rational");
    std::size_t i = s[0] == '-' ? 1 : 0;
    if (i == s.size()) throw std::invalid_argument("bad integer in rational");
    for (; i < s.size(); ++i)
      if (s[i] < '0' || s[i] > '9') throw std::invalid_argument("bad character in rational: " + s);
    return std::strtoll(s.c_str(), nullptr, 10);
  };
  if (slash == std::string::npos) return Rat(parse_int(text));
  std::int64_t n = parse_int(text.substr(0, slash));
  std::int64_t d = parse_int(text.substr(slash + 1));
  return Rat(n, d);
}

Weight::Weight(const Rat& v) : finite_(true), value_(v) {
  if (v < Rat(0)) throw std::invalid_argument("weight must be non-negative");
}

Weight Weight::infinity() {
  Weight w;
  w.finite_ = false;
  return w;
}

const Rat& Weight::finite_value() const {
  if (!finite_) throw std::logic_error("finite_value() on infinite weight");
  return value_;
}

Weight Weight::operator+(const Weight& o) const {
  if (!finite_ || !o.finite_) return infinity();
  return Weight(value_ + o.value_);
}

bool Weight::operator==(const Weight& o) const {
  if (finite_ != o.finite_) return false;
  return !finite_ || value_ == o.value_;
}

std::strong_ordering Weight::operator<=>(const Weight& o) const {
  if (finite_ && !o.finite_) return std::strong_ordering::less;
  if (!finite_ && o.finite_) return std::strong_ordering::greater;
  if (!finite_) return std::strong_ordering::equal;
  return value_ <=> o.value_;
}

std::string Weight::str() const { return finite_ ? value_.str() : "inf"; }

Weight Weight::parse(const std::string& text) {
  if (text == "inf") return infinity();
  return Weight(Rat::parse(text));
}

Weight min(const Weight& a, const Weight& b) { return a <= b ? a : b; }
Weight max(const Weight& a, const Weight& b) { return a >= b ? a : b; }

Weight half(const Weight& w) {
  if (w.is_infinite()) return w;
  const Rat& v = w.finite_value();
  return Weight(Rat(v.num, v.den * 2));
}

}  // namespace wcat
