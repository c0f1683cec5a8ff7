// Exact arithmetic: big integers, reduced fractions, integer polynomials in z.
#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>
#include <vector>

namespace m3 {

using BigInt = boost::multiprecision::cpp_int;

struct Rational {
  BigInt num{0};
  BigInt den{1};  // always > 0, gcd(num, den) == 1

  Rational() = default;
  Rational(long long n) : num(n) {}
  Rational(const BigInt& n) : num(n) {}
  Rational(const BigInt& n, const BigInt& d) : num(n), den(d) { normalize(); }

  void normalize() {
    if (den == 0) throw std::runtime_error("Rational: zero denominator");
    if (den < 0) { num = -num; den = -den; }
    BigInt g = boost::multiprecision::gcd(num < 0 ? BigInt(-num) : num, den);
    if (g > 1) { num /= g; den /= g; }
    if (num == 0) den = 1;
  }

  bool is_integer() const { return den == 1; }

  friend Rational operator+(const Rational& a, const Rational& b) {
    return Rational(a.num * b.den + b.num * a.den, a.den * b.den);
  }
  friend Rational operator-(const Rational& a, const Rational& b) {
    return Rational(a.num * b.den - b.num * a.den, a.den * b.den);
  }
  friend Rational operator*(const Rational& a, const Rational& b) {
    return Rational(a.num * b.num, a.den * b.den);
  }
  friend Rational operator/(const Rational& a, const Rational& b) {
    if (b.num == 0) throw std::runtime_error("Rational: division by zero");
    return Rational(a.num * b.den, a.den * b.num);
  }
  Rational operator-() const { Rational r; r.num = -num; r.den = den; return r; }
  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num == b.num && a.den == b.den;
  }
  friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }

  // "p" or "p/q", exact; never decimal.
  std::string str() const {
    std::string s = num.str();
    if (den != 1) s += "/" + den.str();
    return s;
  }
};

// One-variable polynomial over Z, coefficients indexed by degree, trailing zeros trimmed.
struct IntPolynomial {
  std::vector<BigInt> c;

  IntPolynomial() = default;
  explicit IntPolynomial(std::vector<BigInt> coeffs) : c(std::move(coeffs)) { trim(); }

  static IntPolynomial zero() { return IntPolynomial(); }
  static IntPolynomial one() { return IntPolynomial({BigInt(1)}); }
  static IntPolynomial z() { return IntPolynomial({BigInt(0), BigInt(1)}); }

  void trim() {
    while (!c.empty() && c.back() == 0) c.pop_back();
  }
  bool is_zero() const { return c.empty(); }
  int degree() const { return static_cast<int>(c.size()) - 1; }  // -1 for zero
  BigInt coeff(int k) const {
    if (k < 0 || k >= static_cast<int>(c.size())) return BigInt(0);
    return c[k];
  }

  IntPolynomial& operator+=(const IntPolynomial& o) {
    if (o.c.size() > c.size()) c.resize(o.c.size());
    for (size_t i = 0; i < o.c.size(); ++i) c[i] += o.c[i];
    trim();
    return *this;
  }
  friend IntPolynomial operator+(IntPolynomial a, const IntPolynomial& b) { a += b; return a; }
  friend IntPolynomial operator-(const IntPolynomial& a, const IntPolynomial& b) {
    IntPolynomial r = a;
    if (b.c.size() > r.c.size()) r.c.resize(b.c.size());
    for (size_t i = 0; i < b.c.size(); ++i) r.c[i] -= b.c[i];
    r.trim();
    return r;
  }
  friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
    if (a.is_zero() || b.is_zero()) return zero();
    IntPolynomial r;
    r.c.assign(a.c.size() + b.c.size() - 1, BigInt(0));
    for (size_t i = 0; i < a.c.size(); ++i)
      for (size_t j = 0; j < b.c.size(); ++j) r.c[i + j] += a.c[i] * b.c[j];
    r.trim();
    return r;
  }

  // multiply by eps * z^k
  IntPolynomial shifted(int k, const BigInt& scale = BigInt(1)) const {
    if (is_zero() || scale == 0) return zero();
    IntPolynomial r;
    r.c.assign(c.size() + k, BigInt(0));
    for (size_t i = 0; i < c.size(); ++i) r.c[i + k] = c[i] * scale;
    return r;
  }

  friend bool operator==(const IntPolynomial& a, const IntPolynomial& b) { return a.c == b.c; }
  friend bool operator!=(const IntPolynomial& a, const IntPolynomial& b) { return !(a == b); }

  std::string str() const {  // e.g. "2z + z^3"; "0" for zero
    if (is_zero()) return "0";
    std::string s;
    for (int k = 0; k <= degree(); ++k) {
      if (c[k] == 0) continue;
      if (!s.empty()) s += (c[k] > 0) ? " + " : " - ";
      else if (c[k] < 0) s += "-";
      BigInt a = c[k] < 0 ? BigInt(-c[k]) : c[k];
      bool unit = (a == 1) && k > 0;
      if (!unit) s += a.str();
      if (k == 1) s += "z";
      else if (k > 1) s += "z^" + std::to_string(k);
    }
    return s;
  }
};

}  // namespace m3
