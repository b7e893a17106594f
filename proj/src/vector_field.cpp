#include "srsphere/vector_field.hpp"

#include <stdexcept>

namespace srsphere {

PolyVectorField::PolyVectorField(Vars vars, std::vector<Poly> coeffs)
    : vars_(std::move(vars)), coeffs_(std::move(coeffs)) {
  if (static_cast<int>(coeffs_.size()) != vars_.size())
    throw std::invalid_argument("PolyVectorField: need one coefficient per variable");
  for (const auto& c : coeffs_)
    if (c.vars() != vars_)
      throw std::invalid_argument("PolyVectorField: coefficient variable list mismatch");
}

PolyVectorField PolyVectorField::zero(const Vars& v) {
  return PolyVectorField(v, std::vector<Poly>(static_cast<size_t>(v.size()), Poly(v)));
}

PolyVectorField PolyVectorField::linear(const Vars& v, const std::vector<std::vector<int>>& A) {
  const auto n = static_cast<size_t>(v.size());
  if (A.size() != n) throw std::invalid_argument("PolyVectorField::linear: matrix size mismatch");
  std::vector<Poly> coeffs;
  coeffs.reserve(n);
  for (size_t i = 0; i < n; ++i) {
    if (A[i].size() != n)
      throw std::invalid_argument("PolyVectorField::linear: matrix size mismatch");
    Poly c(v);
    for (size_t j = 0; j < n; ++j) {
      if (A[i][j] == 0) continue;
      Exponents e(n, 0);
      e[j] = 1;
      c.add_term(e, Rational(A[i][j]));
    }
    coeffs.push_back(std::move(c));
  }
  return PolyVectorField(v, std::move(coeffs));
}

bool PolyVectorField::is_zero() const {
  for (const auto& c : coeffs_)
    if (!c.is_zero()) return false;
  return true;
}

void PolyVectorField::check_compatible(const PolyVectorField& o) const {
  if (vars_ != o.vars_) throw std::invalid_argument("PolyVectorField: dimension mismatch");
}

Poly PolyVectorField::apply(const Poly& f) const {
  if (f.vars() != vars_) throw std::invalid_argument("apply_derivation: variable list mismatch");
  Poly r(vars_);
  for (size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i].is_zero()) continue;
    r += coeffs_[i] * f.derivative(static_cast<int>(i));
  }
  return r;
}

PolyVectorField PolyVectorField::bracket(const PolyVectorField& other) const {
  check_compatible(other);
  std::vector<Poly> c;
  c.reserve(coeffs_.size());
  for (size_t i = 0; i < coeffs_.size(); ++i)
    c.push_back(apply(other.coeffs_[i]) - other.apply(coeffs_[i]));
  return PolyVectorField(vars_, std::move(c));
}

Poly PolyVectorField::inner(const PolyVectorField& other) const {
  check_compatible(other);
  Poly r(vars_);
  for (size_t i = 0; i < coeffs_.size(); ++i) r += coeffs_[i] * other.coeffs_[i];
  return r;
}

Eigen::VectorXd PolyVectorField::eval(const Eigen::Ref<const Eigen::VectorXd>& x) const {
  Eigen::VectorXd out(dim());
  std::span<const double> xs(x.data(), static_cast<size_t>(x.size()));
  for (int i = 0; i < dim(); ++i) out[i] = coeffs_[static_cast<size_t>(i)].eval(xs);
  return out;
}

PolyVectorField PolyVectorField::operator-() const {
  std::vector<Poly> c;
  c.reserve(coeffs_.size());
  for (const auto& p : coeffs_) c.push_back(-p);
  return PolyVectorField(vars_, std::move(c));
}

PolyVectorField& PolyVectorField::operator+=(const PolyVectorField& o) {
  check_compatible(o);
  for (size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  return *this;
}

PolyVectorField& PolyVectorField::operator-=(const PolyVectorField& o) {
  check_compatible(o);
  for (size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  return *this;
}

PolyVectorField operator*(const Rational& c, const PolyVectorField& x) {
  std::vector<Poly> coeffs;
  coeffs.reserve(x.coeffs_.size());
  for (const auto& p : x.coeffs_) coeffs.push_back(c * p);
  return PolyVectorField(x.vars_, std::move(coeffs));
}

}  // namespace srsphere
