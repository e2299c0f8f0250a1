#include "celebrity/rational.hpp"

#include <cctype>
#include <cstddef>

#include "celebrity/errors.hpp"

namespace celebrity {

namespace {

std::string trim(const std::string& s) {
  std::size_t b = 0;
  std::size_t e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return s.substr(b, e - b);
}

bool all_digits(const std::string& s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

[[noreturn]] void bad(const std::string& text) {
  throw ParseError(0, "not a rational: '" + text + "'");
}

}  // namespace

Rational parse_rational(const std::string& raw) {
  std::string text = trim(raw);
  if (text.empty()) bad(raw);

  bool negative = false;
  if (text[0] == '+' || text[0] == '-') {
    negative = text[0] == '-';
    text.erase(0, 1);
  }

  if (auto slash = text.find('/'); slash != std::string::npos) {
    const std::string num = text.substr(0, slash);
    const std::string den = text.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den)) bad(raw);
    Integer d(den);
    if (d == 0) bad(raw);
    Rational value(Integer(num), d);
    return negative ? -value : value;
  }

  if (auto dot = text.find('.'); dot != std::string::npos) {
    const std::string whole = text.substr(0, dot);
    const std::string frac = text.substr(dot + 1);
    if (!whole.empty() && !all_digits(whole)) bad(raw);
    if (!all_digits(frac) || frac.size() > 9) bad(raw);
    Integer scale = 1;
    for (std::size_t i = 0; i < frac.size(); ++i) scale *= 10;
    Integer numerator = (whole.empty() ? Integer(0) : Integer(whole)) * scale +
                        Integer(frac);
    Rational value(numerator, scale);
    return negative ? -value : value;
  }

  if (!all_digits(text)) bad(raw);
  Rational value{Integer(text)};
  return negative ? -value : value;
}

std::string format_rational(const Rational& value) {
  return numerator(value).str() + "/" + denominator(value).str();
}

}  // namespace celebrity
