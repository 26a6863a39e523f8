#pragma once

#include <ostream>
#include <stdexcept>
#include <string>
#include <utility>

#include "nonrat/poly.hpp"

namespace nonrat {

/// Ratio of univariate polynomials over the rationals, kept gcd-reduced with
/// a monic denominator. The coordinate ring of one-parameter derivations.
class RatFunc {
 public:
  RatFunc() : n_(), d_(1) {}
  RatFunc(long c) : n_(c), d_(1) {}
  RatFunc(const Rational& c) : n_(c), d_(1) {}
  RatFunc(const Poly& p) : n_(p), d_(1) {}
  RatFunc(Poly num, Poly den) {
    if (den.is_zero()) throw std::domain_error("RatFunc: zero denominator");
    reduce(std::move(num), std::move(den));
  }

  static RatFunc variable() { return RatFunc(Poly::variable()); }

  const Poly& num() const { return n_; }
  const Poly& den() const { return d_; }
  bool is_zero() const { return n_.is_zero(); }
  bool is_poly() const { return d_.degree() == 0; }

  RatFunc operator-() const {
    RatFunc r;
    r.n_ = -n_;
    r.d_ = d_;
    return r;
  }
  friend RatFunc operator+(const RatFunc& x, const RatFunc& y) {
    return RatFunc(x.n_ * y.d_ + y.n_ * x.d_, x.d_ * y.d_);
  }
  friend RatFunc operator-(const RatFunc& x, const RatFunc& y) { return x + (-y); }
  friend RatFunc operator*(const RatFunc& x, const RatFunc& y) {
    return RatFunc(x.n_ * y.n_, x.d_ * y.d_);
  }
  friend RatFunc operator/(const RatFunc& x, const RatFunc& y) {
    if (y.is_zero()) throw std::domain_error("RatFunc: division by zero");
    return RatFunc(x.n_ * y.d_, x.d_ * y.n_);
  }
  RatFunc& operator+=(const RatFunc& o) { return *this = *this + o; }
  RatFunc& operator-=(const RatFunc& o) { return *this = *this - o; }
  RatFunc& operator*=(const RatFunc& o) { return *this = *this * o; }
  RatFunc& operator/=(const RatFunc& o) { return *this = *this / o; }

  RatFunc inv() const {
    if (is_zero()) throw std::domain_error("RatFunc: inverse of zero");
    return RatFunc(d_, n_);
  }

  friend bool operator==(const RatFunc& x, const RatFunc& y) { return x.n_ == y.n_ && x.d_ == y.d_; }
  friend bool operator!=(const RatFunc& x, const RatFunc& y) { return !(x == y); }

  template <class T>
  T eval(const T& x) const {
    T den = d_.eval(x);
    if (den == T(0)) throw std::domain_error("RatFunc: denominator vanishes at evaluation point");
    return n_.eval(x) / den;
  }

  std::string str(const std::string& var = "a") const {
    if (is_poly()) return n_.str(var);
    return "(" + n_.str(var) + ")/(" + d_.str(var) + ")";
  }

 private:
  void reduce(Poly num, Poly den) {
    if (num.is_zero()) {
      n_ = Poly();
      d_ = Poly(1);
      return;
    }
    Poly g = gcd(num, den);
    num = num.divmod(g).first;
    den = den.divmod(g).first;
    Rational lead = den.leading();
    n_ = num.scaled(lead.inv());
    d_ = den.scaled(lead.inv());
  }

  Poly n_, d_;
};

inline std::ostream& operator<<(std::ostream& os, const RatFunc& f) { return os << f.str(); }

}  // namespace nonrat
