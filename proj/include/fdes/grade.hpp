#pragma once

#include <algorithm>
#include <cctype>
#include <compare>
#include <cstdint>
#include <numeric>
#include <ostream>
#include <string>
#include <string_view>

#include "fdes/error.hpp"

namespace fdes {

/// Membership grade: an exact rational in [0,1], always kept in lowest terms.
///
/// Grades are only ever combined with min and max, so no arithmetic beyond
/// comparison is offered. Comparison cross-multiplies in 128 bits and is exact
/// for every representable value.
class Grade {
 public:
  constexpr Grade() noexcept = default;

  /// Throws OutOfRange unless 0 <= num/den <= 1 and den > 0.
  Grade(std::int64_t num, std::int64_t den) {
    if (den == 0) throw Error(ErrorCode::MalformedGrade, "zero denominator");
    if (den < 0) {
      num = -num;
      den = -den;
    }
    if (num < 0 || num > den) {
      throw Error(ErrorCode::OutOfRange,
                  std::to_string(num) + "/" + std::to_string(den) + " is outside [0,1]");
    }
    const std::int64_t g = std::gcd(num, den);
    num_ = num / g;
    den_ = den / g;
    if (num_ == 0) den_ = 1;
  }

  static constexpr Grade zero() noexcept { return Grade{}; }
  static Grade one() noexcept { return Grade(1, 1); }

  constexpr std::int64_t numerator() const noexcept { return num_; }
  constexpr std::int64_t denominator() const noexcept { return den_; }

  constexpr bool is_zero() const noexcept { return num_ == 0; }
  constexpr bool is_one() const noexcept { return num_ == den_; }
  constexpr bool positive() const noexcept { return num_ > 0; }

  friend constexpr bool operator==(const Grade& a, const Grade& b) noexcept {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

  friend constexpr std::strong_ordering operator<=>(const Grade& a, const Grade& b) noexcept {
    const __int128 lhs = static_cast<__int128>(a.num_) * b.den_;
    const __int128 rhs = static_cast<__int128>(b.num_) * a.den_;
    if (lhs < rhs) return std::strong_ordering::less;
    if (lhs > rhs) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

  /// Shortest exact decimal when the denominator is 2^i 5^j, else `p/q`.
  std::string to_string() const {
    if (num_ == 0) return "0";
    if (num_ == den_) return "1";
    std::int64_t d = den_;
    int twos = 0;
    int fives = 0;
    while (d % 2 == 0) {
      d /= 2;
      ++twos;
    }
    while (d % 5 == 0) {
      d /= 5;
      ++fives;
    }
    const int digits = std::max(twos, fives);
    if (d != 1 || digits > 18) {
      return std::to_string(num_) + "/" + std::to_string(den_);
    }
    __int128 scale = 1;
    for (int i = 0; i < digits; ++i) scale *= 10;
    __int128 scaled = static_cast<__int128>(num_) * (scale / den_);
    std::string frac(static_cast<std::size_t>(digits), '0');
    for (int i = digits - 1; i >= 0; --i) {
      frac[static_cast<std::size_t>(i)] = static_cast<char>('0' + static_cast<int>(scaled % 10));
      scaled /= 10;
    }
    // Values are < 1 here, so the integer part is always 0.
    return "0." + frac;
  }

 private:
  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

inline Grade meet(const Grade& a, const Grade& b) noexcept { return b < a ? b : a; }
inline Grade join(const Grade& a, const Grade& b) noexcept { return a < b ? b : a; }

inline std::ostream& operator<<(std::ostream& os, const Grade& g) { return os << g.to_string(); }

namespace detail {

inline bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

inline std::string_view strip_leading_zeros(std::string_view s) {
  while (s.size() > 1 && s.front() == '0') s.remove_prefix(1);
  return s;
}

// Digits only; fails beyond 18 significant digits rather than wrapping.
inline std::int64_t parse_digits(std::string_view s, std::string_view literal) {
  s = strip_leading_zeros(s);
  if (s.size() > 18) {
    throw Error(ErrorCode::MalformedGrade,
                "'" + std::string(literal) + "' has too many digits for exact representation");
  }
  std::int64_t v = 0;
  for (char c : s) v = v * 10 + (c - '0');
  return v;
}

}  // namespace detail

/// Reads `[0-9]+(\.[0-9]+)?` or `[0-9]+/[0-9]+` exactly.
inline Grade parse_grade(std::string_view text) {
  const auto malformed = [&] {
    return Error(ErrorCode::MalformedGrade, "'" + std::string(text) + "' is not a grade literal");
  };
  if (const auto slash = text.find('/'); slash != std::string_view::npos) {
    const auto p = text.substr(0, slash);
    const auto q = text.substr(slash + 1);
    if (!detail::all_digits(p) || !detail::all_digits(q)) throw malformed();
    const std::int64_t num = detail::parse_digits(p, text);
    const std::int64_t den = detail::parse_digits(q, text);
    if (den == 0) throw malformed();
    if (num > den) throw Error(ErrorCode::OutOfRange, "'" + std::string(text) + "' exceeds 1");
    return Grade(num, den);
  }
  std::string_view int_part = text;
  std::string_view frac_part;
  if (const auto dot = text.find('.'); dot != std::string_view::npos) {
    int_part = text.substr(0, dot);
    frac_part = text.substr(dot + 1);
    if (!detail::all_digits(frac_part)) throw malformed();
    while (!frac_part.empty() && frac_part.back() == '0') frac_part.remove_suffix(1);
  }
  if (!detail::all_digits(int_part)) throw malformed();
  int_part = detail::strip_leading_zeros(int_part);
  if (int_part != "0" && int_part != "1") {
    throw Error(ErrorCode::OutOfRange, "'" + std::string(text) + "' exceeds 1");
  }
  if (int_part == "1") {
    if (!frac_part.empty()) throw Error(ErrorCode::OutOfRange, "'" + std::string(text) + "' exceeds 1");
    return Grade::one();
  }
  if (frac_part.empty()) return Grade::zero();
  if (frac_part.size() > 18) {
    throw Error(ErrorCode::MalformedGrade,
                "'" + std::string(text) + "' has too many digits for exact representation");
  }
  std::int64_t den = 1;
  for (std::size_t i = 0; i < frac_part.size(); ++i) den *= 10;
  return Grade(detail::parse_digits(frac_part, text), den);
}

}  // namespace fdes
