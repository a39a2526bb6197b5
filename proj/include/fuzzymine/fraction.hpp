#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace fuzzymine {

/// Exact non-negative rational number, always held in lowest terms.
///
/// Memberships and supports are sums of small quotients v/card; keeping them
/// exact is what lets the per-level normalization identity hold with no
/// tolerance. Decimal rendering happens only at output time.
class Fraction {
 public:
  using Rep = boost::multiprecision::cpp_rational;

  Fraction() = default;
  Fraction(std::int64_t whole);  // NOLINT(google-explicit-constructor)
  Fraction(std::int64_t numerator, std::int64_t denominator);

  /// Accepts "3", "1.1", "0.33" or "49/15". Throws Error(ConfigError).
  static Fraction parse(std::string_view text);

  std::string numerator_string() const;
  std::string denominator_string() const;
  /// "num/den", or just "num" when the denominator is 1.
  std::string exact_string() const;
  /// Round-half-up to `places` decimals, e.g. 49/15 -> "3.27".
  std::string to_decimal(int places = 2) const;
  double to_double() const;

  bool is_zero() const;

  Fraction& operator+=(const Fraction& rhs);
  friend Fraction operator+(Fraction lhs, const Fraction& rhs) { return lhs += rhs; }
  friend Fraction operator-(const Fraction& lhs, const Fraction& rhs);
  friend Fraction operator*(const Fraction& lhs, const Fraction& rhs);
  /// Throws std::domain_error on division by zero.
  friend Fraction operator/(const Fraction& lhs, const Fraction& rhs);

  friend bool operator==(const Fraction& lhs, const Fraction& rhs) { return lhs.value_ == rhs.value_; }
  friend std::strong_ordering operator<=>(const Fraction& lhs, const Fraction& rhs);

  friend std::ostream& operator<<(std::ostream& os, const Fraction& f);

 private:
  explicit Fraction(Rep value) : value_(std::move(value)) {}
  Rep value_{0};
};

}  // namespace fuzzymine
