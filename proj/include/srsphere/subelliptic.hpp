#pragma once

#include <Eigen/Core>
#include <array>
#include <vector>

#include "srsphere/diff_operator.hpp"
#include "srsphere/frames.hpp"

namespace srsphere {

/// Monomial basis of polynomials on the sphere modulo (r^2 - 1): total degree
/// <= d, degree in x0 <= 1 (the canonical forms of reduce_mod_sphere), ordered
/// by degree then graded-lex so degree blocks are contiguous.
struct QuotientBasis {
  int nvars = 8;
  int degree = 0;
  std::vector<Exponents> monomials;

  int dim() const { return static_cast<int>(monomials.size()); }
  int index_of(const Exponents& e) const;  // -1 when not present
  int degree_offset(int k) const;          // index of the first degree-k monomial
  int degree_size(int k) const;
};

QuotientBasis quotient_basis(int nvars, int degree);

/// Dense exact matrix.
class RationalMatrix {
public:
  RationalMatrix() = default;
  RationalMatrix(int rows, int cols) : rows_(rows), cols_(cols), a_(static_cast<size_t>(rows) * cols) {}

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  Rational& at(int i, int j) { return a_[static_cast<size_t>(i) * cols_ + j]; }
  const Rational& at(int i, int j) const { return a_[static_cast<size_t>(i) * cols_ + j]; }

  bool is_zero() const;
  RationalMatrix multiply(const RationalMatrix& o) const;
  RationalMatrix subtract(const RationalMatrix& o) const;
  bool equals(const RationalMatrix& o) const;
  Eigen::MatrixXd to_double() const;
  double frobenius() const;

private:
  int rows_ = 0, cols_ = 0;
  std::vector<Rational> a_;
};

/// Exact matrix of a degree-preserving operator on the quotient basis:
/// column j is reduce_mod_sphere(D(monomial_j)) expanded in the basis.
struct OperatorMatrix {
  QuotientBasis basis;
  RationalMatrix mat;
};

enum class SubSpace { S3, S7 };

/// Sum-of-squares sub-Laplacian: X^2 + Y^2 on S^3, sum_{a=2..7} X_a^2 on S^7.
DiffOperator build_sublaplacian(SubSpace space);

/// X1^2, the second-order operator along the circle fibers of S^7.
DiffOperator build_x1_squared();

/// Full Laplace-Beltrami operator sum_{a=1..7} X_a^2 on S^7, assembled
/// independently of build_sublaplacian + build_x1_squared.
DiffOperator build_laplace_beltrami_s7();

/// Divergence-form assembly: sum_r (X_r^2 + c_r X_r) over the horizontal
/// frame, with correction coefficients c_r = sum_s <X_s, [X_r, X_s]> kept as
/// exact ambient polynomials (they vanish on the sphere for these frames).
DiffOperator sublaplacian_via_popp(SubSpace space);

OperatorMatrix operator_matrix(const DiffOperator& op, int degree);

struct CommutationReport {
  int degree = 0;
  bool matrix_commutes = false;       // M(D) M(X1^2) == M(X1^2) M(D) exactly
  bool per_monomial_zero = false;     // reduce([D, X1^2] m) == 0 for every basis m
  double control_commutator_norm = 0; // Frobenius norm of the X2^2 control commutator (degree 2)
  bool ambient_zero = false;          // [D, X1^2] m == 0 with no reduction, deg(m) <= 3
};

/// Exact commutation certificate for the sub-Laplacian and X1^2 on the
/// quotient space up to the given degree, with a non-commuting control.
CommutationReport commutation_certificate(int degree);

struct HeatReport {
  int degree = 0;
  double t = 0;
  bool sum_exact = false;           // M(Delta_S7) == M(Delta_sR) + M(X1^2) exactly
  bool degree_blocks_scalar = true; // degree-k diagonal block of M(Delta_S7) == -k(k+6) Id
  double split_error = 0;           // |exp(-t(A+B)) - exp(-tA) exp(-tB)|_F
  double full_vs_split_error = 0;   // same with the independently assembled Delta_S7 matrix
  std::vector<double> lb_eigenvalues;  // -k(k+6) for k = 0..degree
};

/// Exercises exp(-t(A+B)) = exp(-tA) exp(-tB) with A = -M(Delta_sR),
/// B = -M(X1^2); matrix exponentials by scaling-and-squaring Pade.
HeatReport heat_factorization(double t, int degree);

/// Numeric eigenvalues of the degree-k diagonal block of an operator matrix
/// (real parts, sorted ascending).
std::vector<double> degree_block_eigenvalues(const OperatorMatrix& om, int k);

/// Angle chart (xi1..xi4, eta1, eta2, psi) covering the torus-fibered dense
/// open set of S^7 used to diagonalize the fiber direction.
namespace hopf {

using Angles = std::array<double, 7>;

bool is_interior(const Angles& a, double tol = 1e-6);
Eigen::VectorXd to_ambient(const Angles& a);

/// Inverse chart; throws when the point is within tol of the chart boundary.
Angles from_ambient(const Eigen::Ref<const Eigen::VectorXd>& x, double tol = 1e-6);

/// 8x7 Jacobian of to_ambient.
Eigen::MatrixXd jacobian(const Angles& a);

/// Coefficients of X1 in the chart; equals (1,1,1,1,0,0,0) identically.
Eigen::VectorXd x1_pushforward(const Angles& a);

/// Principal symbol matrix of the sub-Laplacian at the point, in chart
/// coordinates: sum over the horizontal frame of c_a c_a^T with c_a the chart
/// coefficients of X_a.
Eigen::MatrixXd symbol_matrix(const Angles& a);

/// The diagonal coefficient functions of the symbol on the xi block.
std::array<double, 4> h_coeffs(double eta1, double eta2, double psi);

}  // namespace hopf

}  // namespace srsphere
