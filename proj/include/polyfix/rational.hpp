#pragma once

#include <charconv>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <string_view>

namespace polyfix {

/// Exact rational number. Kept in lowest terms with a positive denominator.
/// All arithmetic goes through 128-bit intermediates; a reduced result that
/// does not fit in 64 bits throws std::overflow_error instead of rounding.
class Rational {
public:
  Rational() = default;
  Rational(std::int64_t value) : num_(value), den_(1) {}  // NOLINT: implicit by design
  Rational(std::int64_t numerator, std::int64_t denominator) {
    if (denominator == 0) throw std::invalid_argument("Rational: zero denominator");
    assign(static_cast<__int128>(numerator), static_cast<__int128>(denominator));
  }

  /// Parses "p", "-p", or "p/q". Rejects anything else (including "p/0").
  static Rational parse(std::string_view text) {
    auto bad = [&] { throw std::invalid_argument("not a rational: '" + std::string(text) + "'"); };
    std::int64_t num = 0;
    std::int64_t den = 1;
    const char* begin = text.data();
    const char* end = text.data() + text.size();
    if (begin == end) bad();
    auto [ptr, ec] = std::from_chars(begin, end, num);
    if (ec != std::errc{}) bad();
    if (ptr != end) {
      if (*ptr != '/') bad();
      ++ptr;
      if (ptr == end || *ptr == '-' || *ptr == '+') bad();
      auto [ptr2, ec2] = std::from_chars(ptr, end, den);
      if (ec2 != std::errc{} || ptr2 != end || den == 0) bad();
    }
    return Rational(num, den);
  }

  std::int64_t num() const { return num_; }
  std::int64_t den() const { return den_; }

  bool is_zero() const { return num_ == 0; }
  int sign() const { return num_ > 0 ? 1 : (num_ < 0 ? -1 : 0); }

  friend Rational operator+(const Rational& a, const Rational& b) {
    return make(i128(a.num_) * b.den_ + i128(b.num_) * a.den_, i128(a.den_) * b.den_);
  }
  friend Rational operator-(const Rational& a, const Rational& b) {
    return make(i128(a.num_) * b.den_ - i128(b.num_) * a.den_, i128(a.den_) * b.den_);
  }
  friend Rational operator*(const Rational& a, const Rational& b) {
    return make(i128(a.num_) * b.num_, i128(a.den_) * b.den_);
  }
  friend Rational operator/(const Rational& a, const Rational& b) {
    if (b.num_ == 0) throw std::invalid_argument("Rational: division by zero");
    return make(i128(a.num_) * b.den_, i128(a.den_) * b.num_);
  }
  Rational operator-() const {
    Rational r;
    r.num_ = -num_;
    r.den_ = den_;
    return r;
  }
  Rational& operator+=(const Rational& o) { return *this = *this + o; }
  Rational& operator-=(const Rational& o) { return *this = *this - o; }
  Rational& operator*=(const Rational& o) { return *this = *this * o; }
  Rational& operator/=(const Rational& o) { return *this = *this / o; }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    return i128(a.num_) * b.den_ <=> i128(b.num_) * a.den_;
  }

  std::string str() const {
    std::string s = std::to_string(num_);
    if (den_ != 1) {
      s += '/';
      s += std::to_string(den_);
    }
    return s;
  }

  double to_double() const { return static_cast<double>(num_) / static_cast<double>(den_); }

private:
  using i128 = __int128;

  static Rational make(i128 n, i128 d) {
    Rational r;
    r.assign(n, d);
    return r;
  }

  void assign(i128 n, i128 d) {
    if (d < 0) {
      n = -n;
      d = -d;
    }
    if (n == 0) {
      num_ = 0;
      den_ = 1;
      return;
    }
    i128 a = n < 0 ? -n : n;
    i128 b = d;
    while (b != 0) {
      i128 t = a % b;
      a = b;
      b = t;
    }
    n /= a;
    d /= a;
    constexpr i128 lo = INT64_MIN;
    constexpr i128 hi = INT64_MAX;
    if (n < lo || n > hi || d > hi) throw std::overflow_error("Rational: 64-bit overflow");
    num_ = static_cast<std::int64_t>(n);
    den_ = static_cast<std::int64_t>(d);
  }

  std::int64_t num_{0};
  std::int64_t den_{1};
};

}  // namespace polyfix
