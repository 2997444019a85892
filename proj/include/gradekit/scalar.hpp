#pragma once

#include <gmpxx.h>

#include <ostream>
#include <string>
#include <utility>

#include "gradekit/error.hpp"

namespace gradekit {

/// Exact rational coefficient. Always reduced to lowest terms, denominator
/// positive. All arithmetic is exact; there is no floating-point mode.
class Scalar {
public:
  Scalar() : v_(0) {}
  Scalar(long n) : v_(n) {}  // implicit: integer literals act as scalars
  Scalar(long num, long den) {
    if (den == 0) throw Error("ParseError", "zero denominator");
    v_ = mpq_class(num, den);
    v_.canonicalize();
  }
  /// Parse from decimal strings (arbitrary precision).
  Scalar(const std::string& num, const std::string& den) {
    mpz_class n, d;
    if (n.set_str(num, 10) != 0) throw Error("ParseError", "bad numerator '" + num + "'");
    if (d.set_str(den, 10) != 0) throw Error("ParseError", "bad denominator '" + den + "'");
    if (d == 0) throw Error("ParseError", "zero denominator");
    v_ = mpq_class(n, d);
    v_.canonicalize();
  }

  bool is_zero() const { return sgn(v_) == 0; }
  int sign() const { return sgn(v_); }

  std::string num_str() const { return v_.get_num().get_str(); }
  std::string den_str() const { return v_.get_den().get_str(); }
  std::string str() const {
    return v_.get_den() == 1 ? num_str() : num_str() + "/" + den_str();
  }

  Scalar operator-() const { return Scalar(mpq_class(-v_)); }
  Scalar& operator+=(const Scalar& o) { v_ += o.v_; return *this; }
  Scalar& operator-=(const Scalar& o) { v_ -= o.v_; return *this; }
  Scalar& operator*=(const Scalar& o) { v_ *= o.v_; return *this; }
  Scalar& operator/=(const Scalar& o) {
    if (o.is_zero()) throw Error("DivisionByZero", "scalar division by zero");
    v_ /= o.v_;
    return *this;
  }

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

  friend bool operator==(const Scalar& a, const Scalar& b) { return a.v_ == b.v_; }
  friend bool operator!=(const Scalar& a, const Scalar& b) { return a.v_ != b.v_; }
  friend bool operator<(const Scalar& a, const Scalar& b) { return a.v_ < b.v_; }

  friend std::ostream& operator<<(std::ostream& os, const Scalar& s) {
    return os << s.str();
  }

private:
  explicit Scalar(mpq_class q) : v_(std::move(q)) {}
  mpq_class v_;
};

}  // namespace gradekit
