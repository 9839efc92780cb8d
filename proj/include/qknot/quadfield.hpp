// Exact arithmetic in Q(sqrt(-3)): elements x + y sqrt(-3) with rational x, y.
#pragma once

#include "errors.hpp"
#include "rational.hpp"

namespace qknot {

struct QuadRat {
  Rat x, y;  // x + y sqrt(-3)

  QuadRat() = default;
  QuadRat(Rat a, Rat b) : x(std::move(a)), y(std::move(b)) {}
  explicit QuadRat(long v) : x(v), y(0) {}
  explicit QuadRat(Rat a) : x(std::move(a)), y(0) {}

  bool is_zero() const { return x.is_zero() && y.is_zero(); }
  bool is_rational() const { return y.is_zero(); }

  friend QuadRat operator+(const QuadRat& a, const QuadRat& b) { return {a.x + b.x, a.y + b.y}; }
  friend QuadRat operator-(const QuadRat& a, const QuadRat& b) { return {a.x - b.x, a.y - b.y}; }
  friend QuadRat operator-(const QuadRat& a) { return {-a.x, -a.y}; }
  friend QuadRat operator*(const QuadRat& a, const QuadRat& b) {
    // (x1 + y1 s)(x2 + y2 s) with s^2 = -3
    return {a.x * b.x - Rat(3) * a.y * b.y, a.x * b.y + a.y * b.x};
  }
  friend QuadRat operator*(const QuadRat& a, const Rat& c) { return {a.x * c, a.y * c}; }
  QuadRat& operator+=(const QuadRat& o) { x += o.x; y += o.y; return *this; }
  QuadRat& operator-=(const QuadRat& o) { x -= o.x; y -= o.y; return *this; }
  QuadRat& operator*=(const QuadRat& o) { *this = *this * o; return *this; }

  QuadRat conj() const { return {x, -y}; }
  Rat norm() const { return x * x + Rat(3) * y * y; }

  QuadRat inv() const {
    Rat n = norm();
    if (n.is_zero()) throw error("QuadRat: inverse of zero");
    return {x / n, -y / n};
  }
  friend QuadRat operator/(const QuadRat& a, const QuadRat& b) { return a * b.inv(); }

  friend bool operator==(const QuadRat& a, const QuadRat& b) { return a.x == b.x && a.y == b.y; }

  static QuadRat pow(QuadRat base, unsigned long e) {
    QuadRat r(1);
    while (e) {
      if (e & 1) r *= base;
      base *= base;
      e >>= 1;
    }
    return r;
  }

  std::string str() const { return x.str() + (y.sign() >= 0 ? "+" : "") + y.str() + "*sqrt(-3)"; }
};

}  // namespace qknot
