#include "srsphere/subelliptic.hpp"

#include <unsupported/Eigen/MatrixFunctions>

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <functional>
#include <stdexcept>

namespace srsphere {

namespace {

void enumerate_monomials(int nvars, int max_deg, int max_x0, std::vector<Exponents>& out) {
  Exponents e(static_cast<size_t>(nvars), 0);
  // iterative odometer over exponent vectors of total degree <= max_deg
  std::function<void(int, int)> rec = [&](int var, int budget) {
    if (var == nvars) {
      out.push_back(e);
      return;
    }
    const int cap = var == 0 ? std::min(budget, max_x0) : budget;
    for (int k = 0; k <= cap; ++k) {
      e[static_cast<size_t>(var)] = k;
      rec(var + 1, budget - k);
    }
    e[static_cast<size_t>(var)] = 0;
  };
  rec(0, max_deg);
}

}  // namespace

QuotientBasis quotient_basis(int nvars, int degree) {
  if (degree < 0) throw std::invalid_argument("quotient_basis: negative degree");
  QuotientBasis b;
  b.nvars = nvars;
  b.degree = degree;
  enumerate_monomials(nvars, degree, 1, b.monomials);
  std::sort(b.monomials.begin(), b.monomials.end(), GrlexLess{});
  return b;
}

int QuotientBasis::index_of(const Exponents& e) const {
  auto it = std::lower_bound(monomials.begin(), monomials.end(), e, GrlexLess{});
  if (it == monomials.end() || *it != e) return -1;
  return static_cast<int>(it - monomials.begin());
}

int QuotientBasis::degree_offset(int k) const {
  int i = 0;
  while (i < dim() && total_degree(monomials[static_cast<size_t>(i)]) < k) ++i;
  return i;
}

int QuotientBasis::degree_size(int k) const {
  int count = 0;
  for (const auto& m : monomials)
    if (total_degree(m) == k) ++count;
  return count;
}

bool RationalMatrix::is_zero() const {
  for (const auto& x : a_)
    if (!x.is_zero()) return false;
  return true;
}

RationalMatrix RationalMatrix::multiply(const RationalMatrix& o) const {
  if (cols_ != o.rows_) throw std::invalid_argument("RationalMatrix: shape mismatch");
  RationalMatrix out(rows_, o.cols_);
  // i-k-j loop order skips the plentiful zero entries early
  for (int i = 0; i < rows_; ++i) {
    for (int k = 0; k < cols_; ++k) {
      const Rational& aik = at(i, k);
      if (aik.is_zero()) continue;
      for (int j = 0; j < o.cols_; ++j) {
        const Rational& bkj = o.at(k, j);
        if (bkj.is_zero()) continue;
        out.at(i, j).add_mul(aik, bkj);
      }
    }
  }
  return out;
}

RationalMatrix RationalMatrix::subtract(const RationalMatrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_)
    throw std::invalid_argument("RationalMatrix: shape mismatch");
  RationalMatrix out(rows_, cols_);
  for (size_t i = 0; i < a_.size(); ++i) out.a_[i] = a_[i] - o.a_[i];
  return out;
}

bool RationalMatrix::equals(const RationalMatrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) return false;
  for (size_t i = 0; i < a_.size(); ++i)
    if (a_[i] != o.a_[i]) return false;
  return true;
}

Eigen::MatrixXd RationalMatrix::to_double() const {
  Eigen::MatrixXd m(rows_, cols_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) m(i, j) = at(i, j).to_double();
  return m;
}

double RationalMatrix::frobenius() const {
  double s = 0;
  for (const auto& x : a_) {
    const double d = x.to_double();
    s += d * d;
  }
  return std::sqrt(s);
}

DiffOperator build_sublaplacian(SubSpace space) {
  if (space == SubSpace::S3) {
    SphereFrame f = build_contact_frame(1);
    return DiffOperator::sum_of_squares(f.horizontal);
  }
  SphereFrame f = build_s7_frame();
  return DiffOperator::sum_of_squares(f.horizontal);
}

DiffOperator build_x1_squared() {
  SphereFrame f = build_s7_frame();
  return DiffOperator::sum_of_squares(std::span<const PolyVectorField>(f.vertical.data(), 1));
}

DiffOperator build_laplace_beltrami_s7() {
  SphereFrame f = build_s7_frame();
  std::vector<PolyVectorField> all = f.vertical;
  all.insert(all.end(), f.horizontal.begin(), f.horizontal.end());
  return DiffOperator::sum_of_squares(all);
}

DiffOperator sublaplacian_via_popp(SubSpace space) {
  SphereFrame f = space == SubSpace::S3 ? build_contact_frame(1) : build_s7_frame();
  std::vector<PolyVectorField> all = f.horizontal;
  all.insert(all.end(), f.vertical.begin(), f.vertical.end());

  DiffOperator op(f.vars);
  for (const auto& xr : f.horizontal) {
    op.add_term(Rational(1), {xr, xr});
    // divergence correction: the coframe pairing of each frame field with
    // [X_r, X_s]; the frame is orthonormal on the sphere so the pairing is the
    // plain inner product there.
    Poly correction(f.vars);
    for (const auto& xs : all) correction += xs.inner(xr.bracket(xs));
    op.add_term(std::move(correction), {xr});
  }
  return op;
}

OperatorMatrix operator_matrix(const DiffOperator& op, int degree) {
  if (degree < 1) throw std::invalid_argument("operator_matrix: degree must be >= 1");
  OperatorMatrix om;
  om.basis = quotient_basis(op.vars().size(), degree);
  const int n = om.basis.dim();
  om.mat = RationalMatrix(n, n);
  const Vars& vars = op.vars();
  for (int j = 0; j < n; ++j) {
    const Poly m = Poly::monomial(vars, om.basis.monomials[static_cast<size_t>(j)], Rational(1));
    const Poly image = reduce_mod_sphere(op.apply(m));
    for (const auto& [e, c] : image.terms()) {
      const int i = om.basis.index_of(e);
      if (i < 0)
        throw std::logic_error("operator_matrix: operator does not preserve the degree filtration");
      om.mat.at(i, j) = c;
    }
  }
  return om;
}

CommutationReport commutation_certificate(int degree) {
  if (degree < 2) throw std::invalid_argument("commutation_certificate: degree must be >= 2");
  CommutationReport rep;
  rep.degree = degree;

  const DiffOperator lap = build_sublaplacian(SubSpace::S7);
  const DiffOperator x1sq = build_x1_squared();

  OperatorMatrix m1 = operator_matrix(lap, degree);
  OperatorMatrix m2 = operator_matrix(x1sq, degree);
  rep.matrix_commutes = m1.mat.multiply(m2.mat).equals(m2.mat.multiply(m1.mat));

  // per-monomial polynomial check on the quotient
  rep.per_monomial_zero = true;
  for (const auto& e : m1.basis.monomials) {
    const Poly m = Poly::monomial(lap.vars(), e, Rational(1));
    const Poly comm = lap.apply(x1sq.apply(m)) - x1sq.apply(lap.apply(m));
    if (!reduce_mod_sphere(comm).is_zero()) {
      rep.per_monomial_zero = false;
      break;
    }
  }

  // control: X2^2 does not commute with the sub-Laplacian
  {
    SphereFrame f = build_s7_frame();
    DiffOperator x2sq(f.vars);
    x2sq.add_term(Rational(1), {f.horizontal[0], f.horizontal[0]});
    OperatorMatrix c1 = operator_matrix(lap, 2);
    OperatorMatrix c2 = operator_matrix(x2sq, 2);
    rep.control_commutator_norm =
        c1.mat.multiply(c2.mat).subtract(c2.mat.multiply(c1.mat)).frobenius();
  }

  // ambient commutator, no ideal reduction, all monomials of degree <= 3
  rep.ambient_zero = true;
  {
    std::vector<Exponents> all;
    enumerate_monomials(8, 3, 3, all);
    for (const auto& e : all) {
      const Poly m = Poly::monomial(lap.vars(), e, Rational(1));
      if (!(lap.apply(x1sq.apply(m)) - x1sq.apply(lap.apply(m))).is_zero()) {
        rep.ambient_zero = false;
        break;
      }
    }
  }
  return rep;
}

std::vector<double> degree_block_eigenvalues(const OperatorMatrix& om, int k) {
  const int off = om.basis.degree_offset(k);
  const int sz = om.basis.degree_size(k);
  Eigen::MatrixXd block(sz, sz);
  for (int i = 0; i < sz; ++i)
    for (int j = 0; j < sz; ++j) block(i, j) = om.mat.at(off + i, off + j).to_double();
  Eigen::EigenSolver<Eigen::MatrixXd> es(block, false);
  std::vector<double> ev(static_cast<size_t>(sz));
  for (int i = 0; i < sz; ++i) ev[static_cast<size_t>(i)] = es.eigenvalues()[i].real();
  std::sort(ev.begin(), ev.end());
  return ev;
}

HeatReport heat_factorization(double t, int degree) {
  if (t <= 0 || degree < 1) throw std::invalid_argument("heat_factorization: need t > 0, degree >= 1");
  HeatReport rep;
  rep.degree = degree;
  rep.t = t;

  OperatorMatrix sub = operator_matrix(build_sublaplacian(SubSpace::S7), degree);
  OperatorMatrix fib = operator_matrix(build_x1_squared(), degree);
  OperatorMatrix full = operator_matrix(build_laplace_beltrami_s7(), degree);

  // exact decomposition of the round Laplacian
  rep.sum_exact = full.mat.subtract(fib.mat).equals(sub.mat);

  // degree-k diagonal blocks of the round Laplacian are exactly -k(k+6) Id
  for (int k = 0; k <= degree; ++k) {
    rep.lb_eigenvalues.push_back(static_cast<double>(-k * (k + 6)));
    const int off = full.basis.degree_offset(k);
    const int sz = full.basis.degree_size(k);
    for (int i = 0; i < sz && rep.degree_blocks_scalar; ++i)
      for (int j = 0; j < sz; ++j) {
        const Rational want = i == j ? Rational(-k * (k + 6)) : Rational(0);
        if (full.mat.at(off + i, off + j) != want) {
          rep.degree_blocks_scalar = false;
          break;
        }
      }
  }

  const Eigen::MatrixXd a = -sub.mat.to_double();
  const Eigen::MatrixXd b = -fib.mat.to_double();
  const Eigen::MatrixXd c = -full.mat.to_double();
  const Eigen::MatrixXd split = (-t * a).exp() * ((-t * b).exp());
  rep.split_error = ((-t * (a + b)).exp() - split).norm();
  rep.full_vs_split_error = ((-t * c).exp() - split).norm();
  return rep;
}

namespace hopf {

bool is_interior(const Angles& a, double tol) {
  const double eta1 = a[4], eta2 = a[5], psi = a[6];
  for (double v : {std::sin(eta1), std::cos(eta1), std::sin(eta2), std::cos(eta2), std::sin(psi),
                   std::cos(psi)})
    if (std::abs(v) < tol) return false;
  return true;
}

Eigen::VectorXd to_ambient(const Angles& a) {
  const double xi1 = a[0], xi2 = a[1], xi3 = a[2], xi4 = a[3];
  const double eta1 = a[4], eta2 = a[5], psi = a[6];
  Eigen::VectorXd x(8);
  const double cp = std::cos(psi), sp = std::sin(psi);
  x[0] = std::cos(xi1) * std::cos(eta1) * cp;
  x[1] = std::sin(xi1) * std::cos(eta1) * cp;
  x[2] = std::cos(xi2) * std::sin(eta1) * cp;
  x[3] = std::sin(xi2) * std::sin(eta1) * cp;
  x[4] = std::cos(xi3) * std::cos(eta2) * sp;
  x[5] = std::sin(xi3) * std::cos(eta2) * sp;
  x[6] = std::cos(xi4) * std::sin(eta2) * sp;
  x[7] = std::sin(xi4) * std::sin(eta2) * sp;
  return x;
}

Angles from_ambient(const Eigen::Ref<const Eigen::VectorXd>& x, double tol) {
  if (x.size() != 8) throw std::invalid_argument("hopf::from_ambient: need an 8-vector");
  const double r01 = std::hypot(x[0], x[1]);
  const double r23 = std::hypot(x[2], x[3]);
  const double r45 = std::hypot(x[4], x[5]);
  const double r67 = std::hypot(x[6], x[7]);
  Angles a;
  a[0] = std::atan2(x[1], x[0]);
  a[1] = std::atan2(x[3], x[2]);
  a[2] = std::atan2(x[5], x[4]);
  a[3] = std::atan2(x[7], x[6]);
  a[4] = std::atan2(r23, r01);
  a[5] = std::atan2(r67, r45);
  a[6] = std::atan2(std::hypot(r45, r67), std::hypot(r01, r23));
  if (!is_interior(a, tol))
    throw std::invalid_argument("hopf::from_ambient: point is on the chart boundary");
  return a;
}

Eigen::MatrixXd jacobian(const Angles& a) {
  const double c1 = std::cos(a[0]), s1 = std::sin(a[0]);
  const double c2 = std::cos(a[1]), s2 = std::sin(a[1]);
  const double c3 = std::cos(a[2]), s3 = std::sin(a[2]);
  const double c4 = std::cos(a[3]), s4 = std::sin(a[3]);
  const double ce1 = std::cos(a[4]), se1 = std::sin(a[4]);
  const double ce2 = std::cos(a[5]), se2 = std::sin(a[5]);
  const double cp = std::cos(a[6]), sp = std::sin(a[6]);

  Eigen::MatrixXd j = Eigen::MatrixXd::Zero(8, 7);
  // columns: xi1, xi2, xi3, xi4, eta1, eta2, psi
  j(0, 0) = -s1 * ce1 * cp;  j(1, 0) = c1 * ce1 * cp;
  j(2, 1) = -s2 * se1 * cp;  j(3, 1) = c2 * se1 * cp;
  j(4, 2) = -s3 * ce2 * sp;  j(5, 2) = c3 * ce2 * sp;
  j(6, 3) = -s4 * se2 * sp;  j(7, 3) = c4 * se2 * sp;

  j(0, 4) = -c1 * se1 * cp;  j(1, 4) = -s1 * se1 * cp;
  j(2, 4) = c2 * ce1 * cp;   j(3, 4) = s2 * ce1 * cp;

  j(4, 5) = -c3 * se2 * sp;  j(5, 5) = -s3 * se2 * sp;
  j(6, 5) = c4 * ce2 * sp;   j(7, 5) = s4 * ce2 * sp;

  j(0, 6) = -c1 * ce1 * sp;  j(1, 6) = -s1 * ce1 * sp;
  j(2, 6) = -c2 * se1 * sp;  j(3, 6) = -s2 * se1 * sp;
  j(4, 6) = c3 * ce2 * cp;   j(5, 6) = s3 * ce2 * cp;
  j(6, 6) = c4 * se2 * cp;   j(7, 6) = s4 * se2 * cp;
  return j;
}

namespace {

Eigen::VectorXd chart_coefficients(const Angles& a, const Eigen::VectorXd& field_at_p) {
  const Eigen::MatrixXd j = jacobian(a);
  return (j.transpose() * j).ldlt().solve(j.transpose() * field_at_p);
}

}  // namespace

Eigen::VectorXd x1_pushforward(const Angles& a) {
  if (!is_interior(a)) throw std::invalid_argument("hopf: chart boundary");
  SphereFrame f = build_s7_frame();
  return chart_coefficients(a, f.vertical[0].eval(to_ambient(a)));
}

Eigen::MatrixXd symbol_matrix(const Angles& a) {
  if (!is_interior(a)) throw std::invalid_argument("hopf: chart boundary");
  SphereFrame f = build_s7_frame();
  const Eigen::VectorXd p = to_ambient(a);
  Eigen::MatrixXd s = Eigen::MatrixXd::Zero(7, 7);
  for (const auto& xa : f.horizontal) {
    const Eigen::VectorXd c = chart_coefficients(a, xa.eval(p));
    s += c * c.transpose();
  }
  return s;
}

std::array<double, 4> h_coeffs(double eta1, double eta2, double psi) {
  const auto sec2 = [](double v) { const double c = std::cos(v); return 1.0 / (c * c); };
  const auto csc2 = [](double v) { const double s = std::sin(v); return 1.0 / (s * s); };
  std::array<double, 4> h;
  h[0] = -(sec2(eta1) * sec2(psi) / 8.0) *
         (-6 + 2 * std::cos(2 * eta1) + std::cos(2 * (eta1 - psi)) + 2 * std::cos(2 * psi) +
          std::cos(2 * (eta1 + psi)));
  h[1] = (csc2(eta1) * sec2(psi) / 8.0) *
         (6 + 2 * std::cos(2 * eta1) + std::cos(2 * (eta1 - psi)) - 2 * std::cos(2 * psi) +
          std::cos(2 * (eta1 + psi)));
  h[2] = (sec2(eta2) * csc2(psi) / 8.0) *
         (6 - 2 * std::cos(2 * eta2) + std::cos(2 * (eta2 - psi)) + 2 * std::cos(2 * psi) +
          std::cos(2 * (eta2 + psi)));
  h[3] = -(csc2(eta2) * csc2(psi) / 8.0) *
         (-6 - 2 * std::cos(2 * eta2) + std::cos(2 * (eta2 - psi)) - 2 * std::cos(2 * psi) +
          std::cos(2 * (eta2 + psi)));
  return h;
}

}  // namespace hopf

}  // namespace srsphere
