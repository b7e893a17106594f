#include "srsphere/shooting.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "srsphere/numerics.hpp"

namespace srsphere {

ShootingProblem ShootingProblem::make(Space space, Eigen::VectorXd p, Eigen::VectorXd q,
                                      double T) {
  if (p.size() != q.size()) throw std::invalid_argument("ShootingProblem: p/q dimension mismatch");
  if (std::abs(p.norm() - 1.0) > 1e-10 || std::abs(q.norm() - 1.0) > 1e-10)
    throw std::invalid_argument("ShootingProblem: endpoints must lie on the sphere");
  if (T <= 0) throw std::invalid_argument("ShootingProblem: horizon must be positive");
  ShootingProblem prob;
  prob.space = space;
  prob.p = std::move(p);
  prob.q = std::move(q);
  prob.T = T;
  return prob;
}

Eigen::VectorXd endpoint_map(const GeodesicSpec& spec, double T) {
  if (T == 0.0) return spec.p;
  return geodesic_point(spec, T);
}

Eigen::MatrixXd endpoint_jacobian(const ShootingProblem& problem, const Eigen::MatrixXd& basis,
                                  const Eigen::VectorXd& coords, double h) {
  const int m = static_cast<int>(coords.size());
  Eigen::MatrixXd J(problem.p.size(), m);
  for (int j = 0; j < m; ++j) {
    Eigen::VectorXd up = coords, dn = coords;
    up[j] += h;
    dn[j] -= h;
    GeodesicSpec su = GeodesicSpec::make(problem.space, problem.p, basis * up);
    GeodesicSpec sd = GeodesicSpec::make(problem.space, problem.p, basis * dn);
    J.col(j) = (endpoint_map(su, problem.T) - endpoint_map(sd, problem.T)) / (2 * h);
  }
  return J;
}

std::vector<ShootingSolution> solve(const ShootingProblem& problem, const ShootingConfig& config) {
  const int dim = static_cast<int>(problem.p.size());
  const Eigen::MatrixXd basis = orthonormal_tangent_basis(problem.p);
  const int m = static_cast<int>(basis.cols());

  auto eval_residual = [&](const Eigen::VectorXd& coords) -> Eigen::VectorXd {
    Eigen::VectorXd v = basis * coords;
    if (v.norm() < 1e-13) {
      // Degenerate start; the closed forms need v != 0. Treat gamma == p.
      return problem.p - problem.q;
    }
    GeodesicSpec spec = GeodesicSpec::make(problem.space, problem.p, v);
    return endpoint_map(spec, problem.T) - problem.q;
  };

  // Gather all starts up front (deterministic order: extra seeds first, then
  // the seeded Gaussian draws at scale pi/T).
  std::vector<Eigen::VectorXd> starts;
  for (const auto& v : config.extra_starts) {
    Eigen::VectorXd t = v - v.dot(problem.p) * problem.p;
    starts.push_back(basis.transpose() * t);
  }
  Rng rng(config.seed);
  const double scale = std::acos(-1.0) / problem.T;
  for (int s = 0; s < config.n_starts; ++s) starts.push_back(scale * rng.gaussian_vector(m));

  struct RawResult {
    bool ok = false;
    Eigen::VectorXd coords;
    double residual_sq = 0;
  };
  std::vector<RawResult> results(starts.size());

  auto optimize_one = [&](int idx) {
    Eigen::VectorXd u = starts[static_cast<size_t>(idx)];
    Eigen::VectorXd r = eval_residual(u);
    double cost = r.squaredNorm();
    double mu = 1e-8;  // Levenberg damping
    for (int it = 0; it < config.max_iters; ++it) {
      Eigen::VectorXd vcur = basis * u;
      if (vcur.norm() < 1e-13) break;
      Eigen::MatrixXd J = endpoint_jacobian(problem, basis, u, config.fd_step);
      const Eigen::MatrixXd JtJ = J.transpose() * J;
      const Eigen::VectorXd g = J.transpose() * r;
      bool stepped = false;
      for (int attempt = 0; attempt < 25; ++attempt) {
        Eigen::MatrixXd A = JtJ;
        A.diagonal().array() += mu;
        const Eigen::VectorXd delta = A.ldlt().solve(-g);
        const Eigen::VectorXd u_try = u + delta;
        const Eigen::VectorXd r_try = eval_residual(u_try);
        const double cost_try = r_try.squaredNorm();
        if (cost_try < cost) {
          u = u_try;
          r = r_try;
          cost = cost_try;
          mu = std::max(mu / 3.0, 1e-14);
          stepped = true;
          break;
        }
        mu *= 10.0;
        if (mu > 1e12) break;
      }
      if (!stepped || cost < 1e-30) break;
    }
    RawResult out;
    out.ok = cost <= config.tol;
    out.coords = u;
    out.residual_sq = cost;
    results[static_cast<size_t>(idx)] = std::move(out);
  };

  parallel_for(static_cast<int>(starts.size()), std::max(1, config.threads),
               [&](int i) { optimize_one(i); });

  // Deterministic merge in start order: velocities within 1e-6 are one solution.
  std::vector<ShootingSolution> sols;
  for (const auto& res : results) {
    if (!res.ok) continue;
    const Eigen::VectorXd v = basis * res.coords;
    if (v.norm() < 1e-13) continue;
    bool dup = false;
    for (const auto& s : sols)
      if ((s.spec.v - v).norm() <= 1e-6) {
        dup = true;
        break;
      }
    if (dup) continue;
    ShootingSolution sol;
    sol.spec = GeodesicSpec::make(problem.space, problem.p, v);
    sol.residual = std::sqrt(res.residual_sq);
    sol.length = sol.spec.sr_speed() * problem.T;
    sols.push_back(std::move(sol));
  }

  std::sort(sols.begin(), sols.end(), [](const ShootingSolution& a, const ShootingSolution& b) {
    if (a.length != b.length) return a.length < b.length;
    // total order on velocities keeps the output bit-stable
    for (int i = 0; i < a.spec.v.size(); ++i)
      if (a.spec.v[i] != b.spec.v[i]) return a.spec.v[i] < b.spec.v[i];
    return false;
  });
  (void)dim;
  return sols;
}

}  // namespace srsphere
