#pragma once

#include <compare>
#include <cstdint>
#include <string>

namespace wcat {

// Exact signed rational, kept in lowest terms with positive denominator.
struct Rat {
  std::int64_t num = 0;
  std::int64_t den = 1;

  Rat() = default;
  Rat(std::int64_t n) : num(n), den(1) {}
  Rat(std::int64_t n, std::int64_t d);

  Rat operator+(const Rat& o) const;
  Rat operator-(const Rat& o) const;
  Rat operator*(const Rat& o) const;
  Rat operator-() const { return Rat(-num, den); }
  bool operator==(const Rat& o) const { return num == o.num && den == o.den; }
  std::strong_ordering operator<=>(const Rat& o) const;

  std::string str() const;  // "p" or "p/q"
  static Rat parse(const std::string& text);
};

// Non-negative rational extended with infinity; addition saturates at infinity.
class Weight {
 public:
  Weight() = default;
  Weight(const Rat& v);  // throws std::invalid_argument if v < 0
  Weight(std::int64_t n) : Weight(Rat(n)) {}
  static Weight infinity();
  static Weight zero() { return Weight(); }

  bool is_infinite() const { return !finite_; }
  const Rat& finite_value() const;  // throws std::logic_error on infinity

  Weight operator+(const Weight& o) const;
  bool operator==(const Weight& o) const;
  std::strong_ordering operator<=>(const Weight& o) const;

  std::string str() const;  // "p", "p/q" or "inf"
  static Weight parse(const std::string& text);

 private:
  bool finite_ = true;
  Rat value_;
};

Weight min(const Weight& a, const Weight& b);
Weight max(const Weight& a, const Weight& b);
Weight half(const Weight& w);

}  // namespace wcat
