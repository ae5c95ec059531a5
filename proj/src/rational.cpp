#include "simwords/rational.hpp"

#include <charconv>
#include <cstdint>

#include "simwords/error.hpp"

namespace simwords {

namespace {

std::int64_t parse_int(std::string_view text, std::string_view what) {
  std::int64_t value = 0;
  const auto result =
      std::from_chars(text.data(), text.data() + text.size(), value, 10);
  if (result.ec != std::errc{} || result.ptr != text.data() + text.size()) {
    fail(ErrorKind::kInvalidParams,
         "cannot parse " + std::string(what) + " '" + std::string(text) + "'");
  }
  return value;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  if (text.empty()) {
    fail(ErrorKind::kInvalidParams, "empty rational");
  }
  if (const auto slash = text.find('/'); slash != std::string_view::npos) {
    const std::int64_t num = parse_int(text.substr(0, slash), "numerator");
    const std::int64_t den = parse_int(text.substr(slash + 1), "denominator");
    if (den <= 0) {
      fail(ErrorKind::kInvalidParams,
           "denominator must be positive in '" + std::string(text) + "'");
    }
    if (num < 0) {
      fail(ErrorKind::kInvalidParams,
           "negative rational '" + std::string(text) + "'");
    }
    return Rational(num, den);
  }
  if (const auto dot = text.find('.'); dot != std::string_view::npos) {
    const std::string_view int_part = text.substr(0, dot);
    const std::string_view frac_part = text.substr(dot + 1);
    if (frac_part.empty() || frac_part.size() > 18) {
      fail(ErrorKind::kInvalidParams,
           "unsupported decimal '" + std::string(text) + "'");
    }
    const std::int64_t whole = int_part.empty() ? 0 : parse_int(int_part, "integer part");
    const std::int64_t frac = parse_int(frac_part, "fractional part");
    if (whole < 0 || frac < 0) {
      fail(ErrorKind::kInvalidParams,
           "negative rational '" + std::string(text) + "'");
    }
    std::int64_t den = 1;
    for (std::size_t i = 0; i < frac_part.size(); ++i) den *= 10;
    if (whole > (std::numeric_limits<std::int64_t>::max() - frac) / den) {
      fail(ErrorKind::kInvalidParams,
           "decimal out of range '" + std::string(text) + "'");
    }
    return Rational(whole * den + frac, den);
  }
  const std::int64_t value = parse_int(text, "rational");
  if (value < 0) {
    fail(ErrorKind::kInvalidParams,
         "negative rational '" + std::string(text) + "'");
  }
  return Rational(value);
}

std::string format_rational(const Rational& value) {
  if (value.denominator() == 1) {
    return std::to_string(value.numerator());
  }
  return std::to_string(value.numerator()) + "/" +
         std::to_string(value.denominator());
}

}  // namespace simwords
