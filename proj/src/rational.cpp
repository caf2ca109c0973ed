// SPDX-License-Identifier: MIT
#include "rvp/rational.hpp"

#include <cctype>

namespace rvp {

Rat rat_from_string(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("empty rational literal");
  // Plain integers and a/b go straight to GMP.
  if (s.find('.') == std::string::npos && s.find('e') == std::string::npos &&
      s.find('E') == std::string::npos) {
    Rat q;
    if (q.set_str(s, 10) != 0)
      throw std::invalid_argument("bad rational literal: " + s);
    q.canonicalize();
    return q;
  }
  // Decimal / scientific form: exact base-10 interpretation.
  size_t pos = 0;
  bool neg = false;
  if (s[pos] == '+' || s[pos] == '-') neg = s[pos++] == '-';
  std::string digits;
  long frac_digits = 0;
  bool seen_dot = false, seen_digit = false;
  for (; pos < s.size() && (std::isdigit(static_cast<unsigned char>(s[pos])) || s[pos] == '.'); ++pos) {
    if (s[pos] == '.') {
      if (seen_dot) throw std::invalid_argument("bad rational literal: " + s);
      seen_dot = true;
      continue;
    }
    digits += s[pos];
    seen_digit = true;
    if (seen_dot) ++frac_digits;
  }
  if (!seen_digit) throw std::invalid_argument("bad rational literal: " + s);
  long exp10 = 0;
  if (pos < s.size() && (s[pos] == 'e' || s[pos] == 'E')) {
    exp10 = std::stol(s.substr(pos + 1));
    pos = s.size();
  }
  if (pos != s.size()) throw std::invalid_argument("bad rational literal: " + s);

  Rat q(mpz_class(digits, 10));
  long shift = exp10 - frac_digits;
  Rat ten(10);
  if (shift > 0) q *= rat_pow(ten, shift);
  if (shift < 0) q /= rat_pow(ten, -shift);
  if (neg) q = -q;
  q.canonicalize();
  return q;
}

Rat rat_pow(const Rat& base, long e) {
  if (e < 0) {
    if (base == 0) throw std::domain_error("0 to a negative power");
    return 1 / rat_pow(base, -e);
  }
  Rat acc = 1, b = base;
  long n = e;
  while (n > 0) {
    if (n & 1) acc *= b;
    b *= b;
    n >>= 1;
  }
  return acc;
}

}  // namespace rvp
