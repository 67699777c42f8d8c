#include "liemarkov/scalar.hpp"

#include <stdexcept>

#include "liemarkov/errors.hpp"

namespace liemarkov {

std::string to_string(const Rational& r) {
  std::string out = std::to_string(r.numerator());
  if (r.denominator() != 1) out += "/" + std::to_string(r.denominator());
  return out;
}

Rational parse_rational(const std::string& text) {
  try {
    const auto slash = text.find('/');
    std::size_t used = 0;
    const std::int64_t num = std::stoll(text.substr(0, slash), &used);
    if (used != (slash == std::string::npos ? text.size() : slash)) throw std::invalid_argument(text);
    if (slash == std::string::npos) return Rational(num);
    const std::string den_text = text.substr(slash + 1);
    const std::int64_t den = std::stoll(den_text, &used);
    if (used != den_text.size() || den == 0) throw std::invalid_argument(text);
    return Rational(num, den);
  } catch (const std::exception&) {
    throw ParseError("malformed rational '" + text + "'");
  }
}

}  // namespace liemarkov
