#pragma once

#include <Eigen/Core>
#include <array>
#include <optional>
#include <vector>

#include "srsphere/frames.hpp"
#include "srsphere/rational.hpp"

namespace srsphere {

/// Initial data of a closed-form geodesic: unit base point, tangent velocity,
/// and the cached vertical moments c_alpha = <v, V_alpha(p)>.
struct GeodesicSpec {
  Space space = Space::Contact;
  int n = 0;
  Eigen::VectorXd p;
  Eigen::VectorXd v;
  std::vector<double> moments;

  /// Validates |p| = 1 and <p,v> = 0 within 1e-10, derives the moments.
  static GeodesicSpec make(Space space, Eigen::VectorXd p, Eigen::VectorXd v);

  double speed_sq() const;     // |v|^2 - sum c_alpha^2, constant along the curve
  double sr_speed() const;     // sqrt of the above
  double moment_norm_sq() const;
};

/// Riemannian great circle p cos(|v| t) + (v/|v|) sin(|v| t). Throws on v = 0.
Eigen::VectorXd great_circle(const Eigen::Ref<const Eigen::VectorXd>& p,
                             const Eigen::Ref<const Eigen::VectorXd>& v, double t);

/// Corank-1 closed form: the great circle times the phase e^{-i t c} applied
/// componentwise to the complex pairs.
Eigen::VectorXd geodesic_contact(const GeodesicSpec& spec, double t);

/// Corank-3 closed form: the great circle right-multiplied componentwise by
/// exp(-t (i c1 + j c2 + k c3)).
Eigen::VectorXd geodesic_quaternionic(const GeodesicSpec& spec, double t);

Eigen::VectorXd geodesic_point(const GeodesicSpec& spec, double t);

/// Analytic time derivative of the closed form (the finite-difference path in
/// the diagnostics stays independent of this).
Eigen::VectorXd geodesic_velocity(const GeodesicSpec& spec, double t);

/// Signed curvature of an arc-length S^3 geodesic: the vertical moment c.
/// Pre: contact spec on S^3 with |v|^2 = 1 + c^2 within 1e-9.
double curvature_s3(const GeodesicSpec& spec);

/// Max over samples of |P_tan(gamma'' ) + 2 lambda J(gamma')| where gamma'' is
/// a second finite difference with step h and J is the rotation by 90 degrees
/// in the horizontal frame.
double verify_curvature_ode_s3(const GeodesicSpec& spec, int samples, double t1, double h);

struct ContactClosedness {
  bool closed = false;
  long k = 0;           // minimal multiples of pi/|v| when closed
  double period = 0;    // k*pi/|v| in arc-length parameterization
};

/// Exact closedness of an arc-length S^{2n+1} geodesic with rational curvature
/// lambda: closed iff 1 + lambda^2 is a rational square; the minimal period is
/// resolved exactly from the phase bookkeeping.
ContactClosedness is_closed_contact(const Rational& lambda);

/// Exact scalar q * sqrt(root); root = 1 gives plain rationals. Covers the
/// inputs the closedness criterion needs while staying decidable.
struct ExactScalar {
  Rational q;
  long root = 1;
  bool is_rational() const;
  double value() const;
};

struct QuatClosednessReport {
  std::array<bool, 3> moment_ratio_rational{};  // c_alpha / |v|^2 in Q
  bool criterion_closed = false;                // all three ratios rational
  bool numeric_found = false;                   // orbit returned within tol
  double numeric_time = 0;
  double numeric_min_dist = 0;                  // best |gamma(T) - p| seen
};

/// Evaluates the printed rationality criterion on exact inputs and runs an
/// independent numeric orbit search; both verdicts are reported side by side.
QuatClosednessReport is_closed_quaternionic(const GeodesicSpec& spec,
                                            const std::array<ExactScalar, 3>& exact_moments,
                                            const Rational& exact_speed_sq, double t_max = 200.0,
                                            double tol = 1e-8);

struct Trace {
  GeodesicSpec spec;
  std::vector<double> times;
  std::vector<Eigen::VectorXd> points;
  std::vector<double> speed;                        // |gamma'| by 4th-order differences
  std::vector<std::vector<double>> horiz_residual;  // <gamma', V_alpha(gamma)> per sample
};

/// Samples the closed form and attaches finite-difference diagnostics
/// (4th-order central differences, step h).
Trace trace_geodesic(const GeodesicSpec& spec, double t0, double t1, int samples,
                     double h = 1e-4);

}  // namespace srsphere
