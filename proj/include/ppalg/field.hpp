#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace ppalg {

/// Exact rational scalar. All arithmetic in the library is exact; there is
/// no floating point anywhere.
using Rat = mpq_class;

inline bool is_zero(const Rat& x) { return sgn(x) == 0; }
inline std::string to_string(const Rat& x) { return x.get_str(); }

/// Prime field with a process-wide runtime modulus, selected once by the
/// driver before any arithmetic happens.
class Fp {
 public:
  Fp() : v_(0) {}
  Fp(long v) : v_(norm(v % modulus_)) {}
  Fp(const mpq_class&) = delete;  // no silent rational -> Fp conversion

  static void set_modulus(long p) {
    if (p <= 2) throw std::invalid_argument("Fp modulus must exceed 2");
    for (long d = 2; d * d <= p; ++d)
      if (p % d == 0) throw std::invalid_argument("Fp modulus must be prime");
    modulus_ = p;
  }
  static long modulus() { return modulus_; }

  long value() const { return v_; }

  friend Fp operator+(Fp a, Fp b) { return from(a.v_ + b.v_); }
  friend Fp operator-(Fp a, Fp b) { return from(a.v_ - b.v_); }
  friend Fp operator-(Fp a) { return from(-a.v_); }
  friend Fp operator*(Fp a, Fp b) { return from(a.v_ * b.v_); }
  friend Fp operator/(Fp a, Fp b) { return a * b.inverse(); }
  Fp& operator+=(Fp o) { return *this = *this + o; }
  Fp& operator-=(Fp o) { return *this = *this - o; }
  Fp& operator*=(Fp o) { return *this = *this * o; }
  Fp& operator/=(Fp o) { return *this = *this / o; }
  friend bool operator==(Fp a, Fp b) { return a.v_ == b.v_; }
  friend bool operator!=(Fp a, Fp b) { return a.v_ != b.v_; }

  Fp inverse() const {
    if (v_ == 0) throw std::domain_error("Fp: division by zero");
    // extended Euclid
    long a = v_, b = modulus_, x0 = 1, x1 = 0;
    while (b != 0) {
      long q = a / b;
      long t = a - q * b;
      a = b;
      b = t;
      t = x0 - q * x1;
      x0 = x1;
      x1 = t;
    }
    return from(x0);
  }

 private:
  static long norm(long v) { return v < 0 ? v + modulus_ : v; }
  static Fp from(long v) {
    Fp r;
    r.v_ = norm(v % modulus_);
    return r;
  }
  static inline long modulus_ = 32003;
  long v_;
};

inline bool is_zero(Fp x) { return x.value() == 0; }
inline std::string to_string(Fp x) { return std::to_string(x.value()); }

template <class F>
F field_inv(const F& x) {
  return F(1) / x;
}
inline Fp field_inv(Fp x) { return x.inverse(); }

}  // namespace ppalg
