#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace qhopf {

// Exact scalar over Q. Always kept in canonical form: gcd(|num|, den) = 1,
// den > 0, zero is 0/1. Arithmetic is arbitrary precision (GMP underneath);
// there is no floating point anywhere and equality is exact.
class Rational {
 public:
  Rational() : v_(0) {}
  Rational(long n) : v_(n) {}  // NOLINT: implicit by design, mirrors int literals
  Rational(long n, long d) {
    if (d == 0) throw std::invalid_argument("Rational: zero denominator");
    v_ = mpq_class(n, d);
    v_.canonicalize();
  }

  // Accepts "p" or "p/q" with optional leading '-', nothing else.
  static Rational parse(std::string_view s) {
    if (s.empty()) throw std::invalid_argument("Rational: empty literal");
    const auto slash = s.find('/');
    const std::string_view num = s.substr(0, slash);
    if (!valid_int(num))
      throw std::invalid_argument("Rational: malformed literal '" + std::string(s) + "'");
    Rational r;
    if (slash == std::string_view::npos) {
      r.v_ = mpq_class(std::string(num));
    } else {
      const std::string_view den = s.substr(slash + 1);
      if (!valid_int(den) || den.front() == '-')
        throw std::invalid_argument("Rational: malformed literal '" + std::string(s) + "'");
      if (all_zero(den))
        throw std::invalid_argument("Rational: zero denominator in '" + std::string(s) + "'");
      r.v_ = mpq_class(std::string(num) + "/" + std::string(den));
      r.v_.canonicalize();
    }
    return r;
  }

  mpz_class num() const { return v_.get_num(); }
  mpz_class den() const { return v_.get_den(); }

  bool is_zero() const { return sgn(v_) == 0; }
  bool is_one() const { return v_ == 1; }

  Rational inverse() const {
    if (is_zero()) throw std::domain_error("Rational: inverse of zero");
    Rational r;
    r.v_ = 1 / v_;
    return r;
  }

  Rational operator-() const {
    Rational r;
    r.v_ = -v_;
    return r;
  }

  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  Rational& operator/=(const Rational& o) {
    if (o.is_zero()) throw std::domain_error("Rational: division by zero");
    v_ /= o.v_;
    return *this;
  }

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
  friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
  friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }

  // "p" when den == 1, else "p/q".
  std::string str() const {
    if (v_.get_den() == 1) return v_.get_num().get_str();
    return v_.get_num().get_str() + "/" + v_.get_den().get_str();
  }

 private:
  static bool valid_int(std::string_view t) {
    if (!t.empty() && t.front() == '-') t.remove_prefix(1);
    if (t.empty()) return false;
    for (char c : t)
      if (c < '0' || c > '9') return false;
    return true;
  }
  static bool all_zero(std::string_view t) {
    for (char c : t)
      if (c != '0') return false;
    return true;
  }

  mpq_class v_;
};

}  // namespace qhopf
