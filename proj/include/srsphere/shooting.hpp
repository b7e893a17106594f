#pragma once

#include <Eigen/Core>
#include <cstdint>
#include <vector>

#include "srsphere/geodesics.hpp"

namespace srsphere {

/// Two-point boundary value problem: hit q from p in time T along a
/// closed-form geodesic.
struct ShootingProblem {
  Space space = Space::Contact;
  Eigen::VectorXd p;
  Eigen::VectorXd q;
  double T = 1.0;

  static ShootingProblem make(Space space, Eigen::VectorXd p, Eigen::VectorXd q, double T);
};

struct ShootingConfig {
  int max_iters = 100;
  double tol = 1e-10;  // acceptance threshold on the squared endpoint residual
  int n_starts = 64;
  uint64_t seed = 0;
  double fd_step = 1e-6;  // Jacobian step
  int threads = 1;
  std::vector<Eigen::VectorXd> extra_starts;  // optional ambient tangent seeds, tried first
};

struct ShootingSolution {
  GeodesicSpec spec;
  double residual = 0;  // |gamma(T) - q|
  double length = 0;    // sr_speed * T
};

/// gamma(T) for the spec's closed form.
Eigen::VectorXd endpoint_map(const GeodesicSpec& spec, double T);

/// Central-difference Jacobian of v -> endpoint_map in the orthonormal tangent
/// coordinates at p (used by the solver; exposed for convergence checks).
Eigen::MatrixXd endpoint_jacobian(const ShootingProblem& problem, const Eigen::MatrixXd& basis,
                                  const Eigen::VectorXd& coords, double h);

/// Multistart damped Gauss-Newton on |gamma_v(T) - q|^2 over tangent
/// coordinates at p. Returns deduplicated solutions sorted by length; an empty
/// list means nothing was found, not that no geodesic exists.
std::vector<ShootingSolution> solve(const ShootingProblem& problem, const ShootingConfig& config);

}  // namespace srsphere
