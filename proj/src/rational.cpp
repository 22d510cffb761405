#include "rhc/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace rhc {

namespace {

BigInt parse_int(std::string_view s, std::string_view whole) {
  if (s.empty()) throw std::invalid_argument("malformed rational: '" + std::string(whole) + "'");
  BigInt v = 0;
  for (char ch : s) {
    if (!std::isdigit(static_cast<unsigned char>(ch)))
      throw std::invalid_argument("malformed rational: '" + std::string(whole) + "'");
    v = v * 10 + (ch - '0');
  }
  return v;
}

} // namespace

Rational parse_rational(std::string_view text) {
  std::string_view s = text;
  bool negative = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  Rational value;
  if (auto slash = s.find('/'); slash != std::string_view::npos) {
    BigInt num = parse_int(s.substr(0, slash), text);
    BigInt den = parse_int(s.substr(slash + 1), text);
    if (den == 0) throw std::invalid_argument("zero denominator: '" + std::string(text) + "'");
    value = Rational(num, den);
  } else if (auto dot = s.find('.'); dot != std::string_view::npos) {
    std::string_view ip = s.substr(0, dot);
    std::string_view fp = s.substr(dot + 1);
    if (ip.empty() && fp.empty()) throw std::invalid_argument("malformed rational: '" + std::string(text) + "'");
    BigInt num = ip.empty() ? BigInt(0) : parse_int(ip, text);
    BigInt den = 1;
    for (char ch : fp) {
      if (!std::isdigit(static_cast<unsigned char>(ch)))
        throw std::invalid_argument("malformed rational: '" + std::string(text) + "'");
      num = num * 10 + (ch - '0');
      den *= 10;
    }
    value = Rational(num, den);
  } else {
    value = Rational(parse_int(s, text));
  }
  return negative ? Rational(-value) : value;
}

std::string to_string(const Rational& r) {
  using boost::multiprecision::denominator;
  using boost::multiprecision::numerator;
  if (denominator(r) == 1) return numerator(r).str();
  return numerator(r).str() + "/" + denominator(r).str();
}

double to_double(const Rational& r) { return r.convert_to<double>(); }

BigInt floor(const Rational& r) {
  using boost::multiprecision::denominator;
  using boost::multiprecision::numerator;
  BigInt n = numerator(r);
  BigInt d = denominator(r);
  BigInt q = n / d;
  if (n % d != 0 && n < 0) q -= 1;
  return q;
}

BigInt ceil(const Rational& r) { return -floor(Rational(-r)); }

Rational pow(const Rational& base, int exponent) {
  Rational result = 1;
  Rational b = exponent < 0 ? Rational(1 / base) : base;
  for (int i = 0; i < (exponent < 0 ? -exponent : exponent); ++i) result *= b;
  return result;
}

BigInt falling(std::int64_t n, std::int64_t r) {
  BigInt v = 1;
  for (std::int64_t i = 0; i < r; ++i) v *= (n - i);
  return v;
}

std::int64_t to_int64(const BigInt& v) { return v.convert_to<std::int64_t>(); }

} // namespace rhc
