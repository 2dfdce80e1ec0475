#include "coopet/rational.hpp"

#include <cctype>

namespace coopet {

BigInt factorial(int k) {
  if (k < 0) throw std::invalid_argument("factorial of negative number");
  BigInt r = 1;
  for (int i = 2; i <= k; ++i) r *= i;
  return r;
}

Rational make_rational(BigInt num, BigInt den) {
  if (den == 0) throw std::invalid_argument("rational with zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  return Rational(std::move(num), std::move(den));
}

std::string format_rational(const Rational& r) {
  if (denominator(r) == 1) return numerator(r).str();
  return numerator(r).str() + "/" + denominator(r).str();
}

Rational parse_fraction(std::string_view text) {
  auto fail = [&] {
    throw std::invalid_argument("malformed fraction: '" + std::string(text) + "'");
  };
  std::size_t i = 0;
  if (i < text.size() && text[i] == '-') ++i;
  std::size_t num_begin = i;
  while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
  if (i == num_begin) fail();
  BigInt num(std::string(text.substr(0, i)));
  BigInt den = 1;
  if (i < text.size()) {
    if (text[i] != '/') fail();
    ++i;
    std::size_t den_begin = i;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
    if (i == den_begin || i != text.size()) fail();
    den = BigInt(std::string(text.substr(den_begin)));
    if (den == 0) fail();
  }
  return make_rational(std::move(num), std::move(den));
}

}  // namespace coopet
