#pragma once

#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>

#include "nonrat/rational.hpp"

namespace nonrat {

/// Element a + b*sqrt(d) of a real quadratic extension of the rationals.
/// The radicand d is fixed per field instance and must be square-free and
/// > 1. Elements with b = 0 may carry d = 0 ("unbound"): they act as plain
/// rationals and adopt the radicand of the other operand. Arithmetic between
/// two distinct bound radicands is rejected, not promoted.
class QuadExt {
 public:
  QuadExt() : a_(0), b_(0), d_(0) {}
  QuadExt(long n) : a_(n), b_(0), d_(0) {}
  QuadExt(const Rational& a) : a_(a), b_(0), d_(0) {}
  QuadExt(const Rational& a, const Rational& b, std::int64_t d) : a_(a), b_(b), d_(d) {
    if (d == 0) {
      if (!b_.is_zero()) throw std::invalid_argument("QuadExt: irrational part needs a radicand");
    } else {
      check_radicand(d);
    }
  }

  static void check_radicand(std::int64_t d) {
    if (d <= 1) throw std::invalid_argument("QuadExt: radicand must be > 1");
    for (std::int64_t p = 2; p * p <= d; ++p)
      if (d % (p * p) == 0) throw std::invalid_argument("QuadExt: radicand must be square-free");
  }

  static QuadExt sqrt_of(std::int64_t d) { return QuadExt(Rational(0), Rational(1), d); }

  const Rational& rat() const { return a_; }
  const Rational& coef() const { return b_; }
  std::int64_t radicand() const { return d_; }
  bool is_rational() const { return b_.is_zero(); }
  bool is_zero() const { return a_.is_zero() && b_.is_zero(); }

  /// Exact sign of the real number a + b*sqrt(d).
  int sign() const {
    int sa = a_.sign(), sb = b_.sign();
    if (sb == 0) return sa;
    if (sa == 0) return sb;
    if (sa == sb) return sa;
    // opposite signs: compare a^2 with b^2 d
    Rational lhs = a_ * a_, rhs = b_ * b_ * Rational(d_);
    if (lhs == rhs) return 0;
    return lhs > rhs ? sa : sb;
  }

  QuadExt operator-() const { return QuadExt(-a_, -b_, d_); }

  friend QuadExt operator+(const QuadExt& x, const QuadExt& y) {
    std::int64_t d = joined(x, y);
    return QuadExt(x.a_ + y.a_, x.b_ + y.b_, d);
  }
  friend QuadExt operator-(const QuadExt& x, const QuadExt& y) { return x + (-y); }
  friend QuadExt operator*(const QuadExt& x, const QuadExt& y) {
    std::int64_t d = joined(x, y);
    Rational dd(d);
    return QuadExt(x.a_ * y.a_ + x.b_ * y.b_ * dd, x.a_ * y.b_ + x.b_ * y.a_, d);
  }
  friend QuadExt operator/(const QuadExt& x, const QuadExt& y) { return x * y.inv(); }

  QuadExt& operator+=(const QuadExt& o) { return *this = *this + o; }
  QuadExt& operator-=(const QuadExt& o) { return *this = *this - o; }
  QuadExt& operator*=(const QuadExt& o) { return *this = *this * o; }
  QuadExt& operator/=(const QuadExt& o) { return *this = *this / o; }

  QuadExt conj() const { return QuadExt(a_, -b_, d_); }

  QuadExt inv() const {
    if (is_zero()) throw std::domain_error("QuadExt: inverse of zero");
    // (a - b sqrt d) / (a^2 - b^2 d)
    Rational n = a_ * a_ - b_ * b_ * Rational(d_ == 0 ? 1 : d_);
    if (n.is_zero()) throw std::domain_error("QuadExt: radicand is a perfect square");
    return QuadExt(a_ / n, -b_ / n, d_);
  }

  friend bool operator==(const QuadExt& x, const QuadExt& y) {
    if (!x.b_.is_zero() && !y.b_.is_zero() && x.d_ != y.d_)
      throw std::invalid_argument("QuadExt: comparing elements of different fields");
    return x.a_ == y.a_ && x.b_ == y.b_;
  }
  friend bool operator!=(const QuadExt& x, const QuadExt& y) { return !(x == y); }

  /// "p/q+r/s*sqrt(d)" encoding; d taken from the element (or the supplied
  /// field radicand when the element is unbound).
  std::string str(std::int64_t field_d = 0) const {
    std::int64_t d = d_ != 0 ? d_ : field_d;
    std::string out = a_.str();
    Rational b = b_;
    if (b.sign() < 0) {
      out += "-";
      b = -b;
    } else {
      out += "+";
    }
    out += b.str() + "*sqrt(" + std::to_string(d == 0 ? 1 : d) + ")";
    return out;
  }

  static QuadExt parse(const std::string& s) {
    auto k = s.find("*sqrt(");
    if (k == std::string::npos) return QuadExt(Rational::parse(s));
    auto close = s.find(')', k);
    if (close == std::string::npos) throw std::invalid_argument("QuadExt: bad encoding '" + s + "'");
    std::int64_t d = std::stoll(s.substr(k + 6, close - k - 6));
    // split "<a><sep><b>" at the sign separating the two terms
    std::size_t sep = std::string::npos;
    for (std::size_t i = 1; i < k; ++i) {
      if (s[i] == '+' || s[i] == '-') {
        sep = i;
        break;
      }
    }
    if (sep == std::string::npos) throw std::invalid_argument("QuadExt: bad encoding '" + s + "'");
    Rational a = Rational::parse(s.substr(0, sep));
    Rational b = Rational::parse(s.substr(sep + 1, k - sep - 1));
    if (s[sep] == '-') b = -b;
    if (b.is_zero()) return QuadExt(a);
    return QuadExt(a, b, d);
  }

  double approx(double sqrt_d) const { return a_.approx() + b_.approx() * sqrt_d; }

 private:
  static std::int64_t joined(const QuadExt& x, const QuadExt& y) {
    if (x.d_ == 0) return y.d_;
    if (y.d_ == 0 || x.d_ == y.d_) return x.d_;
    throw std::invalid_argument("QuadExt: mixed radicands");
  }

  Rational a_, b_;
  std::int64_t d_;
};

inline std::ostream& operator<<(std::ostream& os, const QuadExt& x) { return os << x.str(); }

inline int sign_of(const QuadExt& x) { return x.sign(); }

}  // namespace nonrat
