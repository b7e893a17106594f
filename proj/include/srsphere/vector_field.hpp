#pragma once

#include <Eigen/Core>
#include <vector>

#include "srsphere/poly.hpp"

namespace srsphere {

/// Derivation with polynomial coefficients: X = sum_i coeff_i d/dx_i.
class PolyVectorField {
public:
  PolyVectorField() = default;
  PolyVectorField(Vars vars, std::vector<Poly> coeffs);

  static PolyVectorField zero(const Vars& v);

  /// Linear field X(p) = A p given by an integer matrix: coeff_i = sum_j A[i][j] x_j.
  static PolyVectorField linear(const Vars& v, const std::vector<std::vector<int>>& A);

  const Vars& vars() const { return vars_; }
  int dim() const { return static_cast<int>(coeffs_.size()); }
  const Poly& coeff(int i) const { return coeffs_[static_cast<size_t>(i)]; }
  const std::vector<Poly>& coeffs() const { return coeffs_; }
  bool is_zero() const;

  /// L_X f = sum_i coeff_i * df/dx_i. Throws on variable-list mismatch.
  Poly apply(const Poly& f) const;

  /// [X,Y], coefficients X(Y_i) - Y(X_i), exact.
  PolyVectorField bracket(const PolyVectorField& other) const;

  /// Pointwise inner product as a polynomial: sum_i X_i * Y_i.
  Poly inner(const PolyVectorField& other) const;

  Eigen::VectorXd eval(const Eigen::Ref<const Eigen::VectorXd>& x) const;

  PolyVectorField operator-() const;
  PolyVectorField& operator+=(const PolyVectorField& o);
  PolyVectorField& operator-=(const PolyVectorField& o);
  friend PolyVectorField operator+(PolyVectorField a, const PolyVectorField& b) { return a += b; }
  friend PolyVectorField operator-(PolyVectorField a, const PolyVectorField& b) { return a -= b; }
  friend PolyVectorField operator*(const Rational& c, const PolyVectorField& x);
  friend bool operator==(const PolyVectorField& a, const PolyVectorField& b) {
    return a.vars_ == b.vars_ && a.coeffs_ == b.coeffs_;
  }
  friend bool operator!=(const PolyVectorField& a, const PolyVectorField& b) { return !(a == b); }

private:
  void check_compatible(const PolyVectorField& o) const;

  Vars vars_;
  std::vector<Poly> coeffs_;
};

inline Poly apply_derivation(const PolyVectorField& x, const Poly& f) { return x.apply(f); }

inline PolyVectorField lie_bracket(const PolyVectorField& x, const PolyVectorField& y) {
  return x.bracket(y);
}

}  // namespace srsphere
