#pragma once

#include <cmath>
#include <string>

#include "nfcert/error.hpp"
#include "nfcert/rational.hpp"

namespace nfcert {

// Exact arithmetic in a real quadratic extension: values a + b*sqrt(d) with
// exact-fraction a, b and a shared non-square radicand d > 0.  Purely
// rational values carry d = 0.  sqrt_of() collapses perfect squares to the
// rational case, so a + b*sqrt(d) = 0 implies a = b = 0 and conjugate
// division is always safe.
struct QuadExt {
  Rational a{0}, b{0}, d{0};

  QuadExt() = default;
  explicit QuadExt(const Rational& r) : a(r) {}
  QuadExt(Rational a_, Rational b_, Rational d_)
      : a(std::move(a_)), b(std::move(b_)), d(std::move(d_)) {
    if (b == 0) d = 0;
  }

  static QuadExt sqrt_of(const Rational& r) {
    if (r < 0)
      throw Error(ErrorCode::DomainError, "square root of a negative value");
    if (r == 0) return QuadExt(Rational(0));
    BigInt n = num(r), m = den(r);
    BigInt sn = boost::multiprecision::sqrt(n);
    BigInt sm = boost::multiprecision::sqrt(m);
    if (sn * sn == n && sm * sm == m) return QuadExt(Rational(sn, sm));
    return QuadExt(Rational(0), Rational(1), r);
  }

  bool is_rational() const { return b == 0; }
  bool is_zero() const { return a == 0 && b == 0; }

  double value() const {
    return to_double(a) + to_double(b) * std::sqrt(to_double(d));
  }

  // -1, 0, or +1; exact.
  int sign() const {
    auto sgn = [](const Rational& x) { return x < 0 ? -1 : (x > 0 ? 1 : 0); };
    int sa = sgn(a), sb = sgn(b);
    if (sb == 0) return sa;
    if (sa == 0) return sb;
    if (sa == sb) return sa;
    Rational lhs = a * a, rhs = b * b * d;
    if (lhs == rhs) return 0;
    return (lhs > rhs) ? sa : sb;
  }

  std::string str() const {
    if (is_rational()) return to_string(a);
    std::string s = "sqrt(" + to_string(d) + ")";
    std::string bt = (b == 1) ? s : (b == -1 ? "-" + s : to_string(b) + "*" + s);
    if (a == 0) return bt;
    return to_string(a) + (bt[0] == '-' ? " - " + bt.substr(1) : " + " + bt);
  }

 private:
  static const Rational& common_d(const QuadExt& x, const QuadExt& y) {
    if (x.b == 0) return y.d;
    if (y.b == 0) return x.d;
    if (x.d != y.d)
      throw Error(ErrorCode::DomainError,
                  "mixing values from different quadratic extensions");
    return x.d;
  }

 public:
  friend QuadExt operator+(const QuadExt& x, const QuadExt& y) {
    return QuadExt(x.a + y.a, x.b + y.b, common_d(x, y));
  }
  friend QuadExt operator-(const QuadExt& x, const QuadExt& y) {
    return QuadExt(x.a - y.a, x.b - y.b, common_d(x, y));
  }
  friend QuadExt operator-(const QuadExt& x) {
    return QuadExt(-x.a, -x.b, x.d);
  }
  friend QuadExt operator*(const QuadExt& x, const QuadExt& y) {
    const Rational& d = common_d(x, y);
    return QuadExt(x.a * y.a + x.b * y.b * d, x.a * y.b + x.b * y.a, d);
  }
  friend QuadExt operator/(const QuadExt& x, const QuadExt& y) {
    if (y.is_zero())
      throw Error(ErrorCode::DomainError, "division by zero");
    const Rational& d = common_d(x, y);
    Rational nrm = y.a * y.a - y.b * y.b * d;   // nonzero: d is non-square
    QuadExt conj(y.a, -y.b, d);
    QuadExt num_ = x * conj;
    return QuadExt(num_.a / nrm, num_.b / nrm, d);
  }
  friend bool operator==(const QuadExt& x, const QuadExt& y) {
    return (x - y).is_zero();
  }
  friend bool operator!=(const QuadExt& x, const QuadExt& y) {
    return !(x == y);
  }
};

}  // namespace nfcert
