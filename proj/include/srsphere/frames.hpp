#pragma once

#include <Eigen/Core>
#include <vector>

#include "srsphere/vector_field.hpp"

namespace srsphere {

/// Which fibration the frame belongs to: circle action (corank-1 contact
/// structure on S^{2n+1}) or Sp(1) action (corank-3 structure on S^{4n+3}).
enum class Space { Contact, Quaternionic };

/// Frame data for one sphere: vertical fields spanning the fiber directions
/// and, where a global horizontal frame exists (S^3, S^7), the horizontal ones.
struct SphereFrame {
  Space space = Space::Contact;
  int n = 0;
  int ambient_dim = 0;
  Vars vars;
  std::vector<PolyVectorField> vertical;
  std::vector<PolyVectorField> horizontal;  // empty when no global frame is available
};

/// Circle-action vertical field V over R^{2n+2}; for n = 1 the frame also
/// carries the global horizontal fields X, Y of the unit-quaternion structure.
SphereFrame build_contact_frame(int n);

/// Sp(1)-action vertical fields V1, V2, V3 over R^{4n+4}.
SphereFrame build_quaternionic_frame(int n);

/// Octonionic orthonormal tangent frame X1..X7 of S^7; X1 is the vertical
/// field of the contact structure, X2..X7 the horizontal frame.
SphereFrame build_s7_frame();

/// Moments <v, V_alpha(p)> of the connection form at p. Throws if |p| is not
/// 1 within 1e-10.
std::vector<double> contact_form_eval(const SphereFrame& frame,
                                      const Eigen::Ref<const Eigen::VectorXd>& p,
                                      const Eigen::Ref<const Eigen::VectorXd>& v);

/// Orthonormal basis of the horizontal space at p: Gram-Schmidt of the
/// coordinate axes against p and the vertical fields, deterministic order.
/// Columns of the result span ker of the connection form at p.
Eigen::MatrixXd horizontal_basis_at(const SphereFrame& frame,
                                    const Eigen::Ref<const Eigen::VectorXd>& p);

/// Orthonormal basis of the full tangent space T_p S^{d-1} (d-1 columns).
Eigen::MatrixXd orthonormal_tangent_basis(const Eigen::Ref<const Eigen::VectorXd>& p);

struct InertiaReport {
  int points_checked = 0;
  double max_deviation = 0;  // max |I_q - Id| over sample points, entrywise
};

/// Assembles the moment-of-inertia tensor I_q(xi, eta) = <sigma_q xi, sigma_q eta>
/// from the vertical fields at each sample point and reports the worst
/// deviation from the identity matrix.
InertiaReport verify_inertia_constancy(const SphereFrame& frame,
                                       const std::vector<Eigen::VectorXd>& sample_points);

}  // namespace srsphere
