#pragma once

#include <cstdint>
#include <numeric>
#include <ostream>
#include <stdexcept>
#include <string>

namespace lamina {

// Exact rational arithmetic on int64 parts. Branch weights, widths and
// lengths stay tiny at desk scale; products are guarded through __int128.
class Rat {
 public:
  Rat() : num_(0), den_(1) {}
  Rat(std::int64_t n) : num_(n), den_(1) {}
  Rat(std::int64_t n, std::int64_t d) : num_(n), den_(d) { normalize(); }

  std::int64_t num() const { return num_; }
  std::int64_t den() const { return den_; }

  static Rat from_check(__int128 n, __int128 d) {
    if (d == 0) throw std::domain_error("Rat: zero denominator");
    __int128 g = gcd128(n < 0 ? -n : n, d < 0 ? -d : d);
    if (g == 0) g = 1;
    n /= g;
    d /= g;
    if (d < 0) { n = -n; d = -d; }
    if (n > INT64_MAX || n < INT64_MIN || d > INT64_MAX)
      throw std::overflow_error("Rat overflow");
    Rat r;
    r.num_ = static_cast<std::int64_t>(n);
    r.den_ = static_cast<std::int64_t>(d);
    return r;
  }

  friend Rat operator+(const Rat& a, const Rat& b) {
    return from_check(static_cast<__int128>(a.num_) * b.den_ +
                          static_cast<__int128>(b.num_) * a.den_,
                      static_cast<__int128>(a.den_) * b.den_);
  }
  friend Rat operator-(const Rat& a, const Rat& b) {
    return from_check(static_cast<__int128>(a.num_) * b.den_ -
                          static_cast<__int128>(b.num_) * a.den_,
                      static_cast<__int128>(a.den_) * b.den_);
  }
  friend Rat operator*(const Rat& a, const Rat& b) {
    return from_check(static_cast<__int128>(a.num_) * b.num_,
                      static_cast<__int128>(a.den_) * b.den_);
  }
  friend Rat operator/(const Rat& a, const Rat& b) {
    if (b.num_ == 0) throw std::domain_error("Rat: divide by zero");
    return from_check(static_cast<__int128>(a.num_) * b.den_,
                      static_cast<__int128>(a.den_) * b.num_);
  }
  Rat operator-() const { Rat r(*this); r.num_ = -r.num_; return r; }
  Rat& operator+=(const Rat& o) { *this = *this + o; return *this; }
  Rat& operator-=(const Rat& o) { *this = *this - o; return *this; }
  Rat& operator*=(const Rat& o) { *this = *this * o; return *this; }
  Rat& operator/=(const Rat& o) { *this = *this / o; return *this; }

  friend bool operator==(const Rat& a, const Rat& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const Rat& a, const Rat& b) { return !(a == b); }
  friend bool operator<(const Rat& a, const Rat& b) {
    return static_cast<__int128>(a.num_) * b.den_ <
           static_cast<__int128>(b.num_) * a.den_;
  }
  friend bool operator<=(const Rat& a, const Rat& b) { return !(b < a); }
  friend bool operator>(const Rat& a, const Rat& b) { return b < a; }
  friend bool operator>=(const Rat& a, const Rat& b) { return !(a < b); }

  double to_double() const {
    return static_cast<double>(num_) / static_cast<double>(den_);
  }
  bool is_integer() const { return den_ == 1; }

  std::string str() const {
    if (den_ == 1) return std::to_string(num_);
    return std::to_string(num_) + "/" + std::to_string(den_);
  }
  friend std::ostream& operator<<(std::ostream& os, const Rat& r) {
    return os << r.str();
  }

 private:
  static __int128 gcd128(__int128 a, __int128 b) {
    while (b != 0) { __int128 t = a % b; a = b; b = t; }
    return a;
  }
  void normalize() {
    *this = from_check(num_, den_);
  }
  std::int64_t num_;
  std::int64_t den_;
};

}  // namespace lamina
