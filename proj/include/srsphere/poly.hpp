#pragma once

#include <map>
#include <memory>
#include <numeric>
#include <span>
#include <string>
#include <vector>

#include "srsphere/rational.hpp"

namespace srsphere {

/// Exponent vector of a monomial; entry i is the power of variable i.
using Exponents = std::vector<int>;

inline int total_degree(const Exponents& e) {
  return std::accumulate(e.begin(), e.end(), 0);
}

/// Graded lexicographic order with variable 0 maximal: compare total degree
/// first, then lexicographically on exponents from variable 0. Under this
/// order the sphere relation x0^2 + ... + x_{d-1}^2 - 1 has leading monomial
/// x0^2, so ideal reduction is plain division.
struct GrlexLess {
  bool operator()(const Exponents& a, const Exponents& b) const {
    const int da = total_degree(a), db = total_degree(b);
    if (da != db) return da < db;
    return a < b;  // lexicographic on exponents, earlier variable dominates
  }
};

/// Ordered variable list shared between polynomials of one ambient space.
class Vars {
public:
  Vars() : names_(std::make_shared<const std::vector<std::string>>()) {}
  explicit Vars(std::vector<std::string> names)
      : names_(std::make_shared<const std::vector<std::string>>(std::move(names))) {}

  /// Standard ambient coordinates x0..x{dim-1}.
  static Vars ambient(int dim);

  int size() const { return static_cast<int>(names_->size()); }
  const std::string& name(int i) const { return (*names_)[static_cast<size_t>(i)]; }
  const std::vector<std::string>& names() const { return *names_; }

  friend bool operator==(const Vars& a, const Vars& b) {
    return a.names_ == b.names_ || *a.names_ == *b.names_;
  }
  friend bool operator!=(const Vars& a, const Vars& b) { return !(a == b); }

private:
  std::shared_ptr<const std::vector<std::string>> names_;
};

/// Exact multivariate polynomial with rational coefficients.
///
/// Terms are kept in graded-lex order with no zero coefficients stored, so
/// operator== is structural equality of canonical forms.
class Poly {
public:
  Poly() = default;
  explicit Poly(Vars vars) : vars_(std::move(vars)) {}

  static Poly zero(const Vars& v) { return Poly(v); }
  static Poly constant(const Vars& v, const Rational& c);
  static Poly var(const Vars& v, int i);
  static Poly monomial(const Vars& v, Exponents e, const Rational& c);

  const Vars& vars() const { return vars_; }
  bool is_zero() const { return terms_.empty(); }
  int total_degree() const;  // -1 for the zero polynomial
  int degree_in(int var) const;
  size_t term_count() const { return terms_.size(); }
  const std::map<Exponents, Rational, GrlexLess>& terms() const { return terms_; }

  Rational coeff(const Exponents& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Rational(0) : it->second;
  }

  void add_term(const Exponents& e, const Rational& c);

  Poly operator-() const;
  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(const Rational& c, const Poly& p);
  friend bool operator==(const Poly& a, const Poly& b) {
    return a.vars_ == b.vars_ && a.terms_ == b.terms_;
  }
  friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

  Poly derivative(int var) const;

  /// Substitute variable i by images[i]; all images share one variable list.
  Poly substitute(const std::vector<Poly>& images) const;

  double eval(std::span<const double> x) const;
  Rational eval_exact(std::span<const Rational> x) const;

  std::string str() const;

private:
  void check_same_vars(const Poly& o) const;

  Vars vars_;
  std::map<Exponents, Rational, GrlexLess> terms_;
};

/// Remainder of division by (sum of squares of all variables - 1) under the
/// graded-lex order; the result has degree <= 1 in variable 0 and differs from
/// the input by an element of the ideal.
Poly reduce_mod_sphere(const Poly& f);

/// sum_i x_i^2 over the full variable list.
Poly radius_squared(const Vars& v);

}  // namespace srsphere
