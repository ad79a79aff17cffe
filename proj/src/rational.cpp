#include "plumb/rational.hpp"

#include <cctype>

#include "plumb/errors.hpp"

namespace plumb {

namespace {

bool parse_integer(std::string_view text, Integer& out, bool allow_sign) {
  if (text.empty()) return false;
  std::size_t start = 0;
  if (allow_sign && (text[0] == '-' || text[0] == '+')) start = 1;
  if (start == text.size()) return false;
  for (std::size_t i = start; i < text.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(text[i]))) return false;
  }
  std::string digits(text[0] == '+' ? text.substr(1) : text);
  return out.set_str(digits, 10) == 0;
}

}  // namespace

std::string format_rational(const Rational& q) {
  Rational c(q);
  c.canonicalize();
  if (c.get_den() == 1) return c.get_num().get_str();
  return c.get_num().get_str() + "/" + c.get_den().get_str();
}

Rational parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  Integer num;
  Integer den = 1;
  if (!parse_integer(text.substr(0, slash), num, true)) {
    throw Error("malformed rational '" + std::string(text) + "'");
  }
  if (slash != std::string_view::npos) {
    if (!parse_integer(text.substr(slash + 1), den, false)) {
      throw Error("malformed rational '" + std::string(text) + "'");
    }
    if (den == 0) throw Error("zero denominator in '" + std::string(text) + "'");
  }
  Rational q(num, den);
  q.canonicalize();
  return q;
}

std::string format_fixed(const Rational& q, int digits) {
  Integer scale = 1;
  for (int i = 0; i < digits; ++i) scale *= 10;
  const bool negative = sgn(q) < 0;
  Rational mag = abs(q) * scale;
  // round half away from zero: floor(mag + 1/2)
  Integer scaled;
  mpz_fdiv_q(scaled.get_mpz_t(), Integer(mag.get_num() * 2 + mag.get_den()).get_mpz_t(),
             Integer(mag.get_den() * 2).get_mpz_t());
  Integer whole;
  Integer frac;
  mpz_fdiv_qr(whole.get_mpz_t(), frac.get_mpz_t(), scaled.get_mpz_t(), scale.get_mpz_t());
  std::string out = (negative && scaled != 0) ? "-" : "";
  out += whole.get_str();
  if (digits > 0) {
    std::string f = frac.get_str();
    out += '.';
    out.append(static_cast<std::size_t>(digits) - f.size(), '0');
    out += f;
  }
  return out;
}

}  // namespace plumb
