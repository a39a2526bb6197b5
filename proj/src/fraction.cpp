#include "fuzzymine/fraction.hpp"

#include <cctype>
#include <ostream>
#include <stdexcept>

#include "fuzzymine/error.hpp"

namespace fuzzymine {

using boost::multiprecision::cpp_int;

Fraction::Fraction(std::int64_t whole) : value_(whole) {}

Fraction::Fraction(std::int64_t numerator, std::int64_t denominator) {
  if (denominator == 0) throw std::domain_error("Fraction: zero denominator");
  value_ = Rep(cpp_int(numerator), cpp_int(denominator));
}

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

[[noreturn]] void bad_number(std::string_view text) {
  throw Error(ErrorKind::ConfigError,
              "not a non-negative number: '" + std::string(text) + "'");
}

}  // namespace

Fraction Fraction::parse(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);

  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    auto num = text.substr(0, slash);
    auto den = text.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den)) bad_number(text);
    cpp_int d{std::string(den)};
    if (d == 0) bad_number(text);
    return Fraction(Rep(cpp_int(std::string(num)), d));
  }

  auto dot = text.find('.');
  auto whole = text.substr(0, dot);
  std::string_view frac = dot == std::string_view::npos ? std::string_view{} : text.substr(dot + 1);
  if (whole.empty() && frac.empty()) bad_number(text);
  if (!whole.empty() && !all_digits(whole)) bad_number(text);
  if (dot != std::string_view::npos && !all_digits(frac)) bad_number(text);

  cpp_int scale = 1;
  for (std::size_t i = 0; i < frac.size(); ++i) scale *= 10;
  cpp_int num = whole.empty() ? cpp_int(0) : cpp_int(std::string(whole));
  num *= scale;
  if (!frac.empty()) num += cpp_int(std::string(frac));
  return Fraction(Rep(num, scale));
}

std::string Fraction::numerator_string() const {
  return boost::multiprecision::numerator(value_).str();
}

std::string Fraction::denominator_string() const {
  return boost::multiprecision::denominator(value_).str();
}

std::string Fraction::exact_string() const {
  auto den = boost::multiprecision::denominator(value_);
  if (den == 1) return numerator_string();
  return numerator_string() + "/" + den.str();
}

std::string Fraction::to_decimal(int places) const {
  cpp_int num = boost::multiprecision::numerator(value_);
  cpp_int den = boost::multiprecision::denominator(value_);
  bool negative = num < 0;
  if (negative) num = -num;

  cpp_int scale = 1;
  for (int i = 0; i < places; ++i) scale *= 10;
  // round half up on the magnitude: floor((2*num*scale + den) / (2*den))
  cpp_int scaled = (2 * num * scale + den) / (2 * den);

  std::string digits = scaled.str();
  if (places > 0) {
    if (digits.size() <= static_cast<std::size_t>(places))
      digits.insert(0, static_cast<std::size_t>(places) + 1 - digits.size(), '0');
    digits.insert(digits.size() - static_cast<std::size_t>(places), ".");
  }
  if (negative && scaled != 0) digits.insert(0, "-");
  return digits;
}

double Fraction::to_double() const { return value_.convert_to<double>(); }

bool Fraction::is_zero() const { return value_ == 0; }

Fraction& Fraction::operator+=(const Fraction& rhs) {
  value_ += rhs.value_;
  return *this;
}

Fraction operator-(const Fraction& lhs, const Fraction& rhs) {
  return Fraction(Fraction::Rep(lhs.value_ - rhs.value_));
}

Fraction operator*(const Fraction& lhs, const Fraction& rhs) {
  return Fraction(Fraction::Rep(lhs.value_ * rhs.value_));
}

Fraction operator/(const Fraction& lhs, const Fraction& rhs) {
  if (rhs.value_ == 0) throw std::domain_error("Fraction: division by zero");
  return Fraction(Fraction::Rep(lhs.value_ / rhs.value_));
}

std::strong_ordering operator<=>(const Fraction& lhs, const Fraction& rhs) {
  if (lhs.value_ < rhs.value_) return std::strong_ordering::less;
  if (lhs.value_ > rhs.value_) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::ostream& operator<<(std::ostream& os, const Fraction& f) {
  return os << f.exact_string();
}

}  // namespace fuzzymine
