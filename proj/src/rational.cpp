#include "folzar/rational.hpp"

#include <cctype>

namespace folzar {

namespace detail {

std::string int128_to_string(int128 v) {
  if (v == 0) return "0";
  unsigned __int128 u = uabs(v);
  char buf[48];
  int pos = 48;
  while (u != 0) {
    buf[--pos] = static_cast<char>('0' + static_cast<int>(u % 10));
    u /= 10;
  }
  std::string out;
  if (v < 0) out.push_back('-');
  out.append(buf + pos, buf + 48);
  return out;
}

int128 int128_from_string(std::string_view s) {
  std::size_t i = 0;
  while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  bool neg = false;
  if (i < s.size() && (s[i] == '+' || s[i] == '-')) {
    neg = s[i] == '-';
    ++i;
  }
  if (i == s.size()) throw std::invalid_argument("empty integer literal");
  unsigned __int128 mag = 0;
  const unsigned __int128 limit = ~static_cast<unsigned __int128>(0);
  for (; i < s.size(); ++i) {
    char c = s[i];
    if (std::isspace(static_cast<unsigned char>(c))) break;
    if (c < '0' || c > '9')
      throw std::invalid_argument("invalid digit in integer literal: " + std::string(s));
    unsigned d = static_cast<unsigned>(c - '0');
    if (mag > (limit - d) / 10) throw overflow_error("integer literal out of range");
    mag = mag * 10 + d;
  }
  while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  if (i != s.size()) throw std::invalid_argument("trailing junk in integer literal");
  unsigned __int128 max_mag =
      neg ? (static_cast<unsigned __int128>(1) << 127)
          : (static_cast<unsigned __int128>(1) << 127) - 1;
  if (mag > max_mag) throw overflow_error("integer literal out of range");
  if (neg) return -static_cast<int128>(mag - 1) - 1;
  return static_cast<int128>(mag);
}

}  // namespace detail

void Rat::assign(int128 num, int128 den) {
  if (den == 0) throw std::domain_error("rational with zero denominator");
  if (den < 0) {
    num = detail::checked_neg(num);
    den = detail::checked_neg(den);
  }
  if (num == 0) {
    num_ = 0;
    den_ = 1;
    return;
  }
  unsigned __int128 g = detail::ugcd(detail::uabs(num), detail::uabs(den));
  num_ = num / static_cast<int128>(g);
  den_ = den / static_cast<int128>(g);
}

Rat Rat::parse(std::string_view text) {
  std::size_t slash = text.find('/');
  if (slash == std::string_view::npos) {
    Rat r;
    r.assign(detail::int128_from_string(text), 1);
    return r;
  }
  int128 num = detail::int128_from_string(text.substr(0, slash));
  int128 den = detail::int128_from_string(text.substr(slash + 1));
  Rat r;
  r.assign(num, den);
  return r;
}

std::string Rat::str() const {
  std::string out = detail::int128_to_string(num_);
  if (den_ != 1) {
    out.push_back('/');
    out += detail::int128_to_string(den_);
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const Rat& r) { return os << r.str(); }

}  // namespace folzar
