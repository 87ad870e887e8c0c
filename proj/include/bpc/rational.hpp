#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

namespace bpc {

/// Exact rational number with 64-bit numerator and denominator.
///
/// Always normalized: gcd(num, den) == 1 and den > 0. Intermediate products
/// are computed in 128 bits; a result that does not fit back into 64 bits
/// throws std::overflow_error instead of silently wrapping.
class Rational {
 public:
  constexpr Rational() = default;
  constexpr Rational(std::int64_t value) : num_(value) {}  // NOLINT(implicit)
  Rational(std::int64_t num, std::int64_t den);

  /// Accepts "p/q", integers, and decimals ("0.15", "-2.5e-3"). Decimals are
  /// converted exactly, so "0.15" == 3/20.
  static Rational parse(std::string_view text);

  /// Exact value of the shortest decimal string that round-trips `value`.
  static Rational from_double(double value);

  [[nodiscard]] constexpr std::int64_t num() const { return num_; }
  [[nodiscard]] constexpr std::int64_t den() const { return den_; }
  [[nodiscard]] double to_double() const {
    return static_cast<double>(num_) / static_cast<double>(den_);
  }
  [[nodiscard]] std::string str() const;

  /// Largest integer <= value.
  [[nodiscard]] std::int64_t floor() const;
  /// Smallest integer >= value.
  [[nodiscard]] std::int64_t ceil() const;

  Rational& operator+=(const Rational& rhs);
  Rational& operator-=(const Rational& rhs);
  Rational& operator*=(const Rational& rhs);
  Rational& operator/=(const Rational& rhs);

  friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
  friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
  friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
  friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }
  friend Rational operator-(const Rational& value) {
    Rational out;
    out.num_ = -value.num_;
    out.den_ = value.den_;
    return out;
  }

  friend bool operator==(const Rational& lhs, const Rational& rhs) {
    return lhs.num_ == rhs.num_ && lhs.den_ == rhs.den_;
  }
  friend std::strong_ordering operator<=>(const Rational& lhs, const Rational& rhs) {
    const __int128 left = static_cast<__int128>(lhs.num_) * rhs.den_;
    const __int128 right = static_cast<__int128>(rhs.num_) * lhs.den_;
    return left <=> right;
  }

 private:
  static Rational from_wide(__int128 num, __int128 den);

  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

std::ostream& operator<<(std::ostream& os, const Rational& value);

/// floor(numerator / denominator) for positive denominator.
std::int64_t floor_div(const Rational& numerator, const Rational& denominator);
std::int64_t floor_div(double numerator, double denominator);

inline double to_double(const Rational& value) { return value.to_double(); }
inline double to_double(double value) { return value; }

}  // namespace bpc
