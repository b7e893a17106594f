#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace srsphere {

/// Arbitrary-precision rational, always in lowest terms with positive denominator.
///
/// Thin value wrapper over mpq_class; the wrapper exists so the rest of the code
/// never has to remember to call canonicalize() after raw construction.
class Rational {
public:
  Rational() : v_(0) {}
  Rational(long n) : v_(n) {}  // NOLINT(google-explicit-constructor)
  Rational(long num, long den) : v_(num, den) {
    if (den == 0) throw std::invalid_argument("Rational: zero denominator");
    v_.canonicalize();
  }
  explicit Rational(const mpq_class& q) : v_(q) { v_.canonicalize(); }
  explicit Rational(const mpz_class& z) : v_(z) {}

  /// Parses "n" or "n/d". Throws on malformed input or zero denominator.
  static Rational from_string(const std::string& s) {
    mpq_class q;
    if (q.set_str(s, 10) != 0) throw std::invalid_argument("Rational: cannot parse '" + s + "'");
    if (q.get_den() == 0) throw std::invalid_argument("Rational: zero denominator in '" + s + "'");
    q.canonicalize();
    return Rational(Raw{}, q);
  }

  const mpz_class& num() const { return v_.get_num(); }
  const mpz_class& den() const { return v_.get_den(); }

  bool is_zero() const { return sgn(v_) == 0; }
  int sign() const { return sgn(v_); }
  double to_double() const { return v_.get_d(); }

  Rational operator-() const { return Rational(Raw{}, -v_); }

  /// *this += a * b without constructing a temporary Rational.
  void add_mul(const Rational& a, const Rational& b) {
    mpq_class prod;
    mpq_mul(prod.get_mpq_t(), a.v_.get_mpq_t(), b.v_.get_mpq_t());
    v_ += prod;
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
  friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
  friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
  friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

  std::string str() const { return v_.get_str(); }

  /// True iff this rational is the square of a rational.
  bool is_perfect_square() const {
    if (sign() < 0) return false;
    return mpz_perfect_square_p(num().get_mpz_t()) != 0 &&
           mpz_perfect_square_p(den().get_mpz_t()) != 0;
  }

  /// Exact square root; caller must have checked is_perfect_square().
  Rational sqrt() const {
    mpz_class n, d;
    mpz_sqrt(n.get_mpz_t(), num().get_mpz_t());
    mpz_sqrt(d.get_mpz_t(), den().get_mpz_t());
    mpq_class q(n, d);
    q.canonicalize();
    return Rational(Raw{}, q);
  }

  const mpq_class& raw() const { return v_; }

private:
  struct Raw {};
  Rational(Raw, mpq_class q) : v_(std::move(q)) {}
  mpq_class v_;
};

}  // namespace srsphere
