#pragma once

#include <algorithm>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "nonrat/rational.hpp"

namespace nonrat {

/// Univariate polynomial over the rationals, coefficients constant-term
/// first, leading coefficient nonzero (the zero polynomial has no
/// coefficients).
class Poly {
 public:
  Poly() = default;
  Poly(long c) { if (c != 0) c_ = {Rational(c)}; }
  Poly(const Rational& c) { if (!c.is_zero()) c_ = {c}; }
  explicit Poly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { strip(); }

  static Poly variable() { return Poly(std::vector<Rational>{Rational(0), Rational(1)}); }

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const std::vector<Rational>& coeffs() const { return c_; }
  Rational coeff(int i) const {
    return (i >= 0 && i < static_cast<int>(c_.size())) ? c_[i] : Rational(0);
  }
  Rational leading() const {
    if (is_zero()) throw std::domain_error("Poly: zero polynomial has no leading coefficient");
    return c_.back();
  }

  Poly operator-() const {
    Poly r(*this);
    for (auto& x : r.c_) x = -x;
    return r;
  }

  friend Poly operator+(const Poly& p, const Poly& q) {
    std::vector<Rational> r(std::max(p.c_.size(), q.c_.size()), Rational(0));
    for (std::size_t i = 0; i < p.c_.size(); ++i) r[i] += p.c_[i];
    for (std::size_t i = 0; i < q.c_.size(); ++i) r[i] += q.c_[i];
    return Poly(std::move(r));
  }
  friend Poly operator-(const Poly& p, const Poly& q) { return p + (-q); }
  friend Poly operator*(const Poly& p, const Poly& q) {
    if (p.is_zero() || q.is_zero()) return Poly();
    std::vector<Rational> r(p.c_.size() + q.c_.size() - 1, Rational(0));
    for (std::size_t i = 0; i < p.c_.size(); ++i)
      for (std::size_t j = 0; j < q.c_.size(); ++j) r[i + j] += p.c_[i] * q.c_[j];
    return Poly(std::move(r));
  }
  Poly& operator+=(const Poly& o) { return *this = *this + o; }
  Poly& operator-=(const Poly& o) { return *this = *this - o; }
  Poly& operator*=(const Poly& o) { return *this = *this * o; }

  friend bool operator==(const Poly& p, const Poly& q) { return p.c_ == q.c_; }
  friend bool operator!=(const Poly& p, const Poly& q) { return !(p == q); }

  Poly scaled(const Rational& s) const {
    Poly r(*this);
    for (auto& x : r.c_) x = x * s;
    r.strip();
    return r;
  }

  /// Quotient and remainder of division by a nonzero polynomial.
  std::pair<Poly, Poly> divmod(const Poly& div) const {
    if (div.is_zero()) throw std::domain_error("Poly: division by zero polynomial");
    Poly rem(*this);
    std::vector<Rational> quot;
    int dq = degree() - div.degree();
    if (dq < 0) return {Poly(), rem};
    quot.assign(dq + 1, Rational(0));
    Rational lead = div.leading();
    while (!rem.is_zero() && rem.degree() >= div.degree()) {
      int k = rem.degree() - div.degree();
      Rational f = rem.leading() / lead;
      quot[k] = f;
      std::vector<Rational> sub(k, Rational(0));
      sub.insert(sub.end(), div.c_.begin(), div.c_.end());
      Poly shifted{std::move(sub)};
      rem = rem - shifted.scaled(f);
    }
    return {Poly(std::move(quot)), rem};
  }

  Poly monic() const {
    if (is_zero()) return *this;
    return scaled(leading().inv());
  }

  template <class T>
  T eval(const T& x) const {
    T acc{};
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + T(*it);
    return acc;
  }

  /// Primitive integer form with positive leading coefficient (unique
  /// representative of the class {nonzero rational scalar multiples}).
  Poly primitive() const {
    if (is_zero()) return *this;
    mpz_class den_lcm = 1, num_gcd = 0;
    for (const auto& c : c_) {
      mpz_class l;
      mpz_lcm(l.get_mpz_t(), den_lcm.get_mpz_t(), c.den().get_mpz_t());
      den_lcm = l;
    }
    for (const auto& c : c_) {
      mpz_class n = c.num() * den_lcm / c.den();
      mpz_class g;
      mpz_gcd(g.get_mpz_t(), num_gcd.get_mpz_t(), n.get_mpz_t());
      num_gcd = g;
    }
    Rational s = Rational(den_lcm, num_gcd);
    Poly r = scaled(s.abs());
    if (r.leading().sign() < 0) r = -r;
    return r;
  }

  /// Equality up to a nonzero rational scalar.
  static bool same_up_to_scalar(const Poly& p, const Poly& q) {
    if (p.is_zero() || q.is_zero()) return p.is_zero() && q.is_zero();
    return p.primitive() == q.primitive();
  }

  std::string str(const std::string& var = "a") const {
    if (is_zero()) return "0";
    std::string out;
    for (int i = degree(); i >= 0; --i) {
      Rational c = c_[i];
      if (c.is_zero()) continue;
      bool neg = c.sign() < 0;
      Rational mag = c.abs();
      if (out.empty())
        out += neg ? "-" : "";
      else
        out += neg ? " - " : " + ";
      std::string m;
      if (!(mag == Rational(1)) || i == 0) {
        m = mag.is_integer() ? mag.num().get_str() : mag.num().get_str() + "/" + mag.den().get_str();
      }
      if (i > 0) {
        if (!m.empty()) m += "*";
        m += var;
        if (i > 1) m += "^" + std::to_string(i);
      }
      out += m;
    }
    return out;
  }

 private:
  void strip() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
  }
  std::vector<Rational> c_;
};

inline Poly gcd(const Poly& a, const Poly& b) {
  Poly x = a, y = b;
  while (!y.is_zero()) {
    Poly r = x.divmod(y).second;
    x = y;
    y = r;
  }
  if (x.is_zero()) return x;
  return x.monic();
}

namespace detail {
inline std::vector<mpz_class> divisors(const mpz_class& n_in) {
  mpz_class n = ::abs(n_in);
  std::vector<mpz_class> out;
  for (mpz_class d = 1; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      if (d * d != n) out.push_back(n / d);
    }
  }
  return out;
}
}  // namespace detail

/// All rational roots via the rational-root theorem on the primitive integer
/// form. Returned sorted in descending order. Empty result certifies that the
/// polynomial has no rational root.
inline std::vector<Rational> rational_root_test(const Poly& p_in) {
  if (p_in.is_zero()) throw std::invalid_argument("rational_root_test: zero polynomial");
  Poly p = p_in.primitive();
  std::vector<Rational> roots;
  // factor out x^k
  while (p.coeff(0).is_zero()) {
    std::vector<Rational> shifted(p.coeffs().begin() + 1, p.coeffs().end());
    p = Poly(std::move(shifted));
    if (roots.empty()) roots.push_back(Rational(0));
    if (p.is_zero()) return roots;
  }
  if (p.degree() == 0) {
    std::sort(roots.begin(), roots.end(), [](const Rational& a, const Rational& b) { return b < a; });
    return roots;
  }
  mpz_class c0 = p.coeff(0).num();
  mpz_class cn = p.leading().num();
  for (const auto& r : detail::divisors(c0)) {
    for (const auto& s : detail::divisors(cn)) {
      for (int sg : {1, -1}) {
        Rational cand(sg * r, s);
        if (std::find(roots.begin(), roots.end(), cand) != roots.end()) continue;
        if (p.eval(cand).is_zero()) roots.push_back(cand);
      }
    }
  }
  std::sort(roots.begin(), roots.end(), [](const Rational& a, const Rational& b) { return b < a; });
  return roots;
}

}  // namespace nonrat
