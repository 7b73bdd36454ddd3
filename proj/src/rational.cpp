#include "weylcurv/rational.hpp"

#include <cctype>
#include <sstream>
#include <stdexcept>

namespace weylcurv {

double to_double(const Rational& r) { return r.convert_to<double>(); }

std::string to_string(const Rational& r) {
  std::ostringstream os;
  os << r;
  return os.str();
}

namespace {

BigInt parse_integer(std::string_view s) {
  if (s.empty()) throw std::invalid_argument("empty integer literal");
  return BigInt(std::string(s));
}

BigInt pow10(long exp) {
  BigInt out = 1;
  for (long i = 0; i < exp; ++i) out *= 10;
  return out;
}

// Exact decimal parse: [sign] digits [. digits] [e exp].
Rational parse_decimal(std::string_view s) {
  bool negative = false;
  std::size_t pos = 0;
  if (pos < s.size() && (s[pos] == '+' || s[pos] == '-')) {
    negative = s[pos] == '-';
    ++pos;
  }
  std::string digits;
  long frac_digits = 0;
  bool seen_dot = false, seen_digit = false;
  long exponent = 0;
  for (; pos < s.size(); ++pos) {
    const char c = s[pos];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      digits.push_back(c);
      seen_digit = true;
      if (seen_dot) ++frac_digits;
    } else if (c == '.' && !seen_dot) {
      seen_dot = true;
    } else if ((c == 'e' || c == 'E') && seen_digit) {
      exponent = std::stol(std::string(s.substr(pos + 1)));
      break;
    } else {
      throw std::invalid_argument("bad numeric literal: " + std::string(s));
    }
  }
  if (!seen_digit) throw std::invalid_argument("bad numeric literal: " + std::string(s));
  BigInt num = digits.empty() ? BigInt(0) : BigInt(digits);
  BigInt den = 1;
  const long net = exponent - frac_digits;
  if (net >= 0) {
    num *= pow10(net);
  } else {
    den = pow10(-net);
  }
  if (negative) num = -num;
  return Rational(num, den);
}

}  // namespace

Rational rational_from_string(std::string_view text) {
  std::string s;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  }
  if (s.empty()) throw std::invalid_argument("empty numeric literal");
  if (const auto slash = s.find('/'); slash != std::string::npos) {
    const BigInt num = parse_integer(std::string_view(s).substr(0, slash));
    const BigInt den = parse_integer(std::string_view(s).substr(slash + 1));
    if (den == 0) throw std::invalid_argument("zero denominator: " + s);
    return Rational(num, den);
  }
  if (s.find('.') != std::string::npos || s.find('e') != std::string::npos ||
      s.find('E') != std::string::npos) {
    return parse_decimal(s);
  }
  return Rational(parse_integer(s));
}

Rational rational_factorial(int n) {
  if (n < 0) throw std::domain_error("factorial of negative integer");
  BigInt out = 1;
  for (int i = 2; i <= n; ++i) out *= i;
  return Rational(out);
}

Rational rational_binomial(int n, int k) {
  if (k < 0 || k > n) return Rational(0);
  BigInt out = 1;
  for (int i = 0; i < k; ++i) {
    out *= (n - i);
    out /= (i + 1);
  }
  return Rational(out);
}

}  // namespace weylcurv
