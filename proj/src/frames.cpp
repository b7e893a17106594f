#include "srsphere/frames.hpp"

#include <stdexcept>

namespace srsphere {

namespace {

std::vector<std::vector<int>> zero_matrix(int d) {
  return std::vector<std::vector<int>>(static_cast<size_t>(d), std::vector<int>(static_cast<size_t>(d), 0));
}

// Block-diagonal rotation field: on each block of size `bs` starting at offset
// 4k (or 2k), row r picks column `col[r]` with sign `sign[r]`.
PolyVectorField block_field(const Vars& v, int bs, const std::vector<int>& col,
                            const std::vector<int>& sign) {
  const int d = v.size();
  auto a = zero_matrix(d);
  for (int off = 0; off < d; off += bs)
    for (int r = 0; r < bs; ++r)
      a[static_cast<size_t>(off + r)][static_cast<size_t>(off + col[static_cast<size_t>(r)])] =
          sign[static_cast<size_t>(r)];
  return PolyVectorField::linear(v, a);
}

}  // namespace

SphereFrame build_contact_frame(int n) {
  if (n < 1) throw std::invalid_argument("build_contact_frame: need n >= 1");
  const int d = 2 * n + 2;
  Vars v = Vars::ambient(d);
  SphereFrame f;
  f.space = Space::Contact;
  f.n = n;
  f.ambient_dim = d;
  f.vars = v;
  // V = sum_k (-x_{2k+1} d_{2k} + x_{2k} d_{2k+1}), i.e. componentwise multiplication by i.
  f.vertical.push_back(block_field(v, 2, {1, 0}, {-1, 1}));
  if (n == 1) {
    // Unit-quaternion frame on S^3: X = j.p, Y = k.p (left multiplications).
    f.horizontal.push_back(block_field(v, 4, {2, 3, 0, 1}, {-1, 1, 1, -1}));
    f.horizontal.push_back(block_field(v, 4, {3, 2, 1, 0}, {-1, -1, 1, 1}));
  }
  return f;
}

SphereFrame build_quaternionic_frame(int n) {
  if (n < 0) throw std::invalid_argument("build_quaternionic_frame: need n >= 0");
  const int d = 4 * n + 4;
  Vars v = Vars::ambient(d);
  SphereFrame f;
  f.space = Space::Quaternionic;
  f.n = n;
  f.ambient_dim = d;
  f.vars = v;
  // Right multiplications by i, j, k on each quaternionic block (x, y, z, w):
  //   V1: (-y,  x,  w, -z)   V2: (-z, -w,  x,  y)   V3: (-w,  z, -y,  x)
  f.vertical.push_back(block_field(v, 4, {1, 0, 3, 2}, {-1, 1, 1, -1}));
  f.vertical.push_back(block_field(v, 4, {2, 3, 0, 1}, {-1, -1, 1, 1}));
  f.vertical.push_back(block_field(v, 4, {3, 2, 1, 0}, {-1, 1, -1, 1}));
  return f;
}

SphereFrame build_s7_frame() {
  Vars v = Vars::ambient(8);
  SphereFrame f;
  f.space = Space::Contact;
  f.n = 3;
  f.ambient_dim = 8;
  f.vars = v;

  // Octonionic tangent frame: row r of field a picks column col[a][r] with sign[a][r].
  const int col[7][8] = {
      {1, 0, 3, 2, 5, 4, 7, 6},  // X1 = (-x1, x0, -x3, x2, -x5, x4, -x7, x6)
      {2, 3, 0, 1, 6, 7, 4, 5},  // X2 = (-x2, x3, x0, -x1, -x6, x7, x4, -x5)
      {3, 2, 1, 0, 7, 6, 5, 4},  // X3 = (-x3, -x2, x1, x0, x7, x6, -x5, -x4)
      {4, 5, 6, 7, 0, 1, 2, 3},  // X4 = (-x4, x5, x6, -x7, x0, -x1, -x2, x3)
      {5, 4, 7, 6, 1, 0, 3, 2},  // X5 = (-x5, -x4, -x7, -x6, x1, x0, x3, x2)
      {6, 7, 4, 5, 2, 3, 0, 1},  // X6 = (-x6, x7, -x4, x5, x2, -x3, x0, -x1)
      {7, 6, 5, 4, 3, 2, 1, 0},  // X7 = (-x7, -x6, x5, x4, -x3, -x2, x1, x0)
  };
  const int sgn[7][8] = {
      {-1, 1, -1, 1, -1, 1, -1, 1},
      {-1, 1, 1, -1, -1, 1, 1, -1},
      {-1, -1, 1, 1, 1, 1, -1, -1},
      {-1, 1, 1, -1, 1, -1, -1, 1},
      {-1, -1, -1, -1, 1, 1, 1, 1},
      {-1, 1, -1, 1, 1, -1, 1, -1},
      {-1, -1, 1, 1, -1, -1, 1, 1},
  };

  std::vector<PolyVectorField> fields;
  for (int a = 0; a < 7; ++a) {
    auto m = zero_matrix(8);
    for (int r = 0; r < 8; ++r) m[static_cast<size_t>(r)][static_cast<size_t>(col[a][r])] = sgn[a][r];
    fields.push_back(PolyVectorField::linear(v, m));
  }
  f.vertical.push_back(fields[0]);
  for (int a = 1; a < 7; ++a) f.horizontal.push_back(fields[a]);
  return f;
}

std::vector<double> contact_form_eval(const SphereFrame& frame,
                                      const Eigen::Ref<const Eigen::VectorXd>& p,
                                      const Eigen::Ref<const Eigen::VectorXd>& v) {
  if (p.size() != frame.ambient_dim || v.size() != frame.ambient_dim)
    throw std::invalid_argument("contact_form_eval: dimension mismatch");
  if (std::abs(p.norm() - 1.0) > 1e-10)
    throw std::invalid_argument("contact_form_eval: point is off the sphere");
  std::vector<double> moments;
  moments.reserve(frame.vertical.size());
  for (const auto& vf : frame.vertical) moments.push_back(vf.eval(p).dot(v));
  return moments;
}

namespace {

Eigen::MatrixXd gram_schmidt_complement(const std::vector<Eigen::VectorXd>& fixed, int dim) {
  std::vector<Eigen::VectorXd> basis = fixed;
  std::vector<Eigen::VectorXd> out;
  for (int i = 0; i < dim; ++i) {
    Eigen::VectorXd w = Eigen::VectorXd::Unit(dim, i);
    for (const auto& b : basis) w -= b.dot(w) * b;
    const double nrm = w.norm();
    if (nrm > 1e-8) {
      w /= nrm;
      basis.push_back(w);
      out.push_back(w);
    }
  }
  Eigen::MatrixXd m(dim, static_cast<int>(out.size()));
  for (int j = 0; j < m.cols(); ++j) m.col(j) = out[static_cast<size_t>(j)];
  return m;
}

}  // namespace

Eigen::MatrixXd horizontal_basis_at(const SphereFrame& frame,
                                    const Eigen::Ref<const Eigen::VectorXd>& p) {
  std::vector<Eigen::VectorXd> fixed;
  fixed.push_back(p / p.norm());
  for (const auto& vf : frame.vertical) {
    Eigen::VectorXd w = vf.eval(p);
    for (const auto& b : fixed) w -= b.dot(w) * b;
    fixed.push_back(w / w.norm());
  }
  return gram_schmidt_complement(fixed, frame.ambient_dim);
}

Eigen::MatrixXd orthonormal_tangent_basis(const Eigen::Ref<const Eigen::VectorXd>& p) {
  std::vector<Eigen::VectorXd> fixed;
  fixed.push_back(p / p.norm());
  return gram_schmidt_complement(fixed, static_cast<int>(p.size()));
}

InertiaReport verify_inertia_constancy(const SphereFrame& frame,
                                       const std::vector<Eigen::VectorXd>& sample_points) {
  InertiaReport rep;
  const int k = static_cast<int>(frame.vertical.size());
  for (const auto& q : sample_points) {
    if (std::abs(q.norm() - 1.0) > 1e-10)
      throw std::invalid_argument("verify_inertia_constancy: point is off the sphere");
    std::vector<Eigen::VectorXd> vert;
    vert.reserve(static_cast<size_t>(k));
    for (const auto& vf : frame.vertical) vert.push_back(vf.eval(q));
    for (int a = 0; a < k; ++a)
      for (int b = 0; b < k; ++b) {
        const double want = a == b ? 1.0 : 0.0;
        rep.max_deviation = std::max(rep.max_deviation,
                                     std::abs(vert[static_cast<size_t>(a)].dot(vert[static_cast<size_t>(b)]) - want));
      }
    ++rep.points_checked;
  }
  return rep;
}

}  // namespace srsphere
