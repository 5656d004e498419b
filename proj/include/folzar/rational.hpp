#pragma once

#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>

#include <Eigen/Core>

namespace folzar {

// Raised when a value leaves the representable range of the 128-bit
// rational scalar. All arithmetic is checked; overflow is never silent.
class overflow_error : public std::runtime_error {
 public:
  explicit overflow_error(const std::string& what) : std::runtime_error(what) {}
};

using int128 = __int128;

namespace detail {

inline int128 checked_add(int128 a, int128 b) {
  int128 r;
  if (__builtin_add_overflow(a, b, &r)) throw overflow_error("int128 add overflow");
  return r;
}

inline int128 checked_sub(int128 a, int128 b) {
  int128 r;
  if (__builtin_sub_overflow(a, b, &r)) throw overflow_error("int128 sub overflow");
  return r;
}

inline int128 checked_mul(int128 a, int128 b) {
  int128 r;
  if (__builtin_mul_overflow(a, b, &r)) throw overflow_error("int128 mul overflow");
  return r;
}

inline int128 checked_neg(int128 a) { return checked_sub(int128{0}, a); }

inline unsigned __int128 uabs(int128 a) {
  return a < 0 ? static_cast<unsigned __int128>(-(a + 1)) + 1
               : static_cast<unsigned __int128>(a);
}

inline unsigned __int128 ugcd(unsigned __int128 a, unsigned __int128 b) {
  while (b != 0) {
    unsigned __int128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

std::string int128_to_string(int128 v);
int128 int128_from_string(std::string_view s);

}  // namespace detail

// Exact rational number with 128-bit numerator and denominator.
// Invariants: den > 0 and gcd(|num|, den) == 1. Every operation is exact;
// results that cannot be reduced into range throw overflow_error.
class Rat {
 public:
  Rat() = default;
  Rat(long long v) : num_(v), den_(1) {}  // NOLINT: value-like implicit conversion
  Rat(long long num, long long den) { assign(num, den); }
  static Rat of(int128 num, int128 den) {
    Rat r;
    r.assign(num, den);
    return r;
  }

  // Accepts "p", "-p", "p/q" with optional surrounding whitespace.
  static Rat parse(std::string_view text);

  int128 num() const { return num_; }
  int128 den() const { return den_; }

  bool is_zero() const { return num_ == 0; }
  bool is_integer() const { return den_ == 1; }
  bool is_negative() const { return num_ < 0; }
  bool is_positive() const { return num_ > 0; }
  int sign() const { return num_ > 0 ? 1 : (num_ < 0 ? -1 : 0); }

  int128 floor() const {
    if (num_ >= 0) return num_ / den_;
    return -((-num_ + den_ - 1) / den_);
  }

  Rat reciprocal() const {
    if (num_ == 0) throw std::domain_error("reciprocal of zero");
    return of(den_, num_);
  }

  friend Rat operator-(const Rat& a) { return of(detail::checked_neg(a.num_), a.den_); }

  friend Rat operator+(const Rat& a, const Rat& b) {
    using namespace detail;
    return of(checked_add(checked_mul(a.num_, b.den_), checked_mul(b.num_, a.den_)),
              checked_mul(a.den_, b.den_));
  }
  friend Rat operator-(const Rat& a, const Rat& b) {
    using namespace detail;
    return of(checked_sub(checked_mul(a.num_, b.den_), checked_mul(b.num_, a.den_)),
              checked_mul(a.den_, b.den_));
  }
  friend Rat operator*(const Rat& a, const Rat& b) {
    using namespace detail;
    return of(checked_mul(a.num_, b.num_), checked_mul(a.den_, b.den_));
  }
  friend Rat operator/(const Rat& a, const Rat& b) {
    if (b.num_ == 0) throw std::domain_error("rational division by zero");
    using namespace detail;
    return of(checked_mul(a.num_, b.den_), checked_mul(a.den_, b.num_));
  }

  Rat& operator+=(const Rat& o) { return *this = *this + o; }
  Rat& operator-=(const Rat& o) { return *this = *this - o; }
  Rat& operator*=(const Rat& o) { return *this = *this * o; }
  Rat& operator/=(const Rat& o) { return *this = *this / o; }

  friend bool operator==(const Rat& a, const Rat& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const Rat& a, const Rat& b) { return !(a == b); }
  friend bool operator<(const Rat& a, const Rat& b) {
    using namespace detail;
    return checked_mul(a.num_, b.den_) < checked_mul(b.num_, a.den_);
  }
  friend bool operator>(const Rat& a, const Rat& b) { return b < a; }
  friend bool operator<=(const Rat& a, const Rat& b) { return !(b < a); }
  friend bool operator>=(const Rat& a, const Rat& b) { return !(a < b); }

  // Canonical text form: "p" when integral, else "p/q".
  std::string str() const;

  friend std::ostream& operator<<(std::ostream& os, const Rat& r);

 private:
  void assign(int128 num, int128 den);

  int128 num_ = 0;
  int128 den_ = 1;
};

inline Rat abs(const Rat& r) { return r.is_negative() ? -r : r; }

// lcm of the denominators of a range of Rat, as a Rat-safe int128.
template <typename It>
int128 denominator_lcm(It first, It last) {
  int128 l = 1;
  for (It it = first; it != last; ++it) {
    unsigned __int128 d = static_cast<unsigned __int128>(it->den());
    unsigned __int128 g = detail::ugcd(static_cast<unsigned __int128>(l), d);
    l = detail::checked_mul(l, static_cast<int128>(d / g));
  }
  return l;
}

}  // namespace folzar

namespace Eigen {

template <>
struct NumTraits<folzar::Rat> {
  using Real = folzar::Rat;
  using NonInteger = folzar::Rat;
  using Literal = long long;
  using Nested = folzar::Rat;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 2,
    AddCost = 12,
    MulCost = 12
  };
  static folzar::Rat epsilon() { return folzar::Rat(0); }
  static folzar::Rat dummy_precision() { return folzar::Rat(0); }
  static int digits10() { return 36; }
};

}  // namespace Eigen
