#pragma once

#include <Eigen/Core>
#include <array>
#include <functional>
#include <vector>

#include "srsphere/rational.hpp"
#include "srsphere/vector_field.hpp"

namespace srsphere {

/// Point of the quaternionic H-type group: R^4 (+) R^3 with coordinates
/// (x1..x4, zI, zJ, zK).
struct HTypePoint {
  Eigen::Vector4d x = Eigen::Vector4d::Zero();
  Eigen::Vector3d z = Eigen::Vector3d::Zero();
};

/// The fixed 4x4 representation of the quaternion units used by the group law.
const std::array<Eigen::Matrix4d, 3>& htype_unit_matrices();

/// (x,z) o (x',z') = (x + x', z_r + z'_r + (1/2) x'^T M_r x).
HTypePoint group_mul(const HTypePoint& a, const HTypePoint& b);
HTypePoint group_inverse(const HTypePoint& a);

/// Left-invariant frame X1..X4, ZI, ZJ, ZK with exact polynomial coefficients
/// over the variables (x1..x4, zI, zJ, zK).
struct HTypeFrame {
  Vars vars;
  std::vector<PolyVectorField> fields;  // X1..X4, then ZI, ZJ, ZK
  const PolyVectorField& horizontal(int a) const { return fields[static_cast<size_t>(a)]; }
  const PolyVectorField& vertical(int r) const { return fields[static_cast<size_t>(4 + r)]; }
};
HTypeFrame build_htype_frame();

/// Levi-Civita connection coefficients of the left-invariant orthonormal
/// frame, derived from the Koszul formula with the exact structure constants.
/// Construction asserts the closed-form identities nabla_{X_a} Z_r = +-(1/2) X_b
/// and <Z_s, nabla_{X_a} Z_r> = 0 and throws std::logic_error on any mismatch.
class ConnectionTable {
public:
  static const ConnectionTable& instance();

  /// <nabla_{E_a} E_b, E_c>, indices 0..3 horizontal, 4..6 vertical.
  const Rational& gamma(int a, int b, int c) const {
    return gamma_[static_cast<size_t>(a)][static_cast<size_t>(b)][static_cast<size_t>(c)];
  }

  /// nabla_{X_a} Z_r expanded in the horizontal frame (column a of J_r / 2).
  Eigen::Vector4d nabla_xz(int a, int r) const;

  /// Structure constants: [E_a, E_b] = sum_c c^c_{ab} E_c.
  const Rational& structure(int a, int b, int c) const {
    return c_[static_cast<size_t>(a)][static_cast<size_t>(b)][static_cast<size_t>(c)];
  }

private:
  ConnectionTable();
  Rational gamma_[7][7][7];
  Rational c_[7][7][7];
};

/// Almost complex structures J_r = 2 nabla_. Z_r acting on horizontal frame
/// coefficients; built from the connection table.
const std::array<Eigen::Matrix4d, 3>& j_structures();

/// Geodesic state: position, frame coefficients u of the velocity, and the
/// three curvature parameters.
struct HTypeState {
  HTypePoint point;
  Eigen::Vector4d u = Eigen::Vector4d::Zero();
  Eigen::Vector3d lambda = Eigen::Vector3d::Zero();
};

struct HTypeSample {
  Eigen::Vector4d x;
  Eigen::Vector3d z;
  Eigen::Vector4d u;
};

struct HTypeTrajectory {
  Eigen::Vector3d lambda;
  double h = 0;
  double T = 0;
  std::vector<double> t;
  std::vector<HTypeSample> rk4;        // RK4 on u' = 2 Lambda u, x' = u, z' read off the frame
  std::vector<HTypeSample> reference;  // u = exp(2 t Lambda) u0; x, z by composite Simpson
  double max_discrepancy = 0;          // max over the grid, entrywise, rk4 vs reference
};

/// Integrates the reduced geodesic system both ways and reports the maximum
/// pointwise discrepancy. Throws on nonpositive T or h.
HTypeTrajectory integrate_geodesic(const HTypeState& s0, double T, double h);

/// Closed-form/quadrature reference on its own grid (quad_step controls the
/// Simpson panel width; the x-panels use half that width).
std::vector<HTypeSample> reference_trajectory(const HTypeState& s0, double T, double output_step,
                                              double quad_step);

/// u(t) = exp(2 t Lambda) u0, evaluated in closed form (Lambda^2 = -|lambda|^2 Id).
Eigen::Vector4d closed_form_u(const Eigen::Vector3d& lambda, const Eigen::Vector4d& u0, double t);

/// Vector field along a trajectory, sampled on the trajectory grid and split
/// into horizontal frame coefficients and vertical moments.
struct VariationField {
  std::vector<Eigen::Vector4d> horizontal;
  std::vector<Eigen::Vector3d> vertical;
};

/// First variation of length: -integral <nabla_{gamma'} gamma', W> by composite
/// Simpson on the trajectory grid. nabla_{gamma'} gamma' is assembled in the
/// frame through the connection table. W must vanish at the endpoints (1e-10).
double first_variation(const HTypeTrajectory& traj, const VariationField& w);

/// Admissible variation field with horizontal part sum_r f_r J_r(gamma') and
/// vertical moments 2 int_0^s f_r. Requires f_r(0) = f_r(T) = 0 and mean-zero
/// f_r within 1e-10.
VariationField build_admissible_field(const HTypeTrajectory& traj,
                                      const std::function<double(double)>& f_i,
                                      const std::function<double(double)>& f_j,
                                      const std::function<double(double)>& f_k);

/// Max residual of the admissibility equation d/ds<W,Z_r> = 2<W_H, J_r(gamma')>
/// with the left side taken by 4th-order differences of the sampled moments.
double admissibility_residual(const HTypeTrajectory& traj, const VariationField& w);

}  // namespace srsphere
