#pragma once

#include <Eigen/Core>
#include <cstdint>
#include <cstdlib>
#include <functional>
#include <thread>
#include <vector>

namespace srsphere {

/// Deterministic RNG (splitmix64 + Box-Muller). Self-contained so that seeded
/// runs reproduce bit-for-bit regardless of the standard library in use.
class Rng {
public:
  explicit Rng(uint64_t seed) : state_(seed) {}

  uint64_t next_u64() {
    uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  /// Uniform in [0, 1).
  double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  double gaussian() {
    if (have_spare_) {
      have_spare_ = false;
      return spare_;
    }
    double u1 = uniform(), u2 = uniform();
    while (u1 <= 0.0) u1 = uniform();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double a = 6.283185307179586476925286766559 * u2;
    spare_ = r * std::sin(a);
    have_spare_ = true;
    return r * std::cos(a);
  }

  Eigen::VectorXd gaussian_vector(int dim) {
    Eigen::VectorXd v(dim);
    for (int i = 0; i < dim; ++i) v[i] = gaussian();
    return v;
  }

  Eigen::VectorXd unit_vector(int dim) {
    Eigen::VectorXd v = gaussian_vector(dim);
    while (v.norm() < 1e-12) v = gaussian_vector(dim);
    return v / v.norm();
  }

private:
  uint64_t state_;
  bool have_spare_ = false;
  double spare_ = 0;
};

/// Fourth-order central difference d/dt of a curve.
inline Eigen::VectorXd fd_derivative4(const std::function<Eigen::VectorXd(double)>& f, double t,
                                      double h) {
  return (-f(t + 2 * h) + 8.0 * f(t + h) - 8.0 * f(t - h) + f(t - 2 * h)) / (12.0 * h);
}

/// Second-order central difference d2/dt2 of a curve.
inline Eigen::VectorXd fd_second2(const std::function<Eigen::VectorXd(double)>& f, double t,
                                  double h) {
  return (f(t + h) - 2.0 * f(t) + f(t - h)) / (h * h);
}

/// Composite Simpson weights over n+1 uniformly spaced samples (n even required;
/// an odd final interval is handled with the trapezoid rule as a fallback).
inline double simpson(const std::vector<double>& y, double h) {
  const size_t n = y.size() - 1;
  double acc = 0;
  size_t m = n % 2 == 0 ? n : n - 1;
  for (size_t i = 0; i + 2 <= m; i += 2) acc += (h / 3.0) * (y[i] + 4.0 * y[i + 1] + y[i + 2]);
  if (n % 2 != 0) acc += 0.5 * h * (y[n - 1] + y[n]);
  return acc;
}

/// Symmetric Hausdorff distance between two sampled point sets.
inline double hausdorff(const std::vector<Eigen::VectorXd>& a,
                        const std::vector<Eigen::VectorXd>& b) {
  auto one_sided = [](const std::vector<Eigen::VectorXd>& s, const std::vector<Eigen::VectorXd>& t) {
    double worst = 0;
    for (const auto& p : s) {
      double best = std::numeric_limits<double>::infinity();
      for (const auto& q : t) best = std::min(best, (p - q).norm());
      worst = std::max(worst, best);
    }
    return worst;
  };
  return std::max(one_sided(a, b), one_sided(b, a));
}

/// Thread cap from SRSPHERE_THREADS (default 1).
inline int env_threads() {
  const char* s = std::getenv("SRSPHERE_THREADS");
  if (!s) return 1;
  const int n = std::atoi(s);
  return n < 1 ? 1 : n;
}

/// Index-parallel map; results are written by index so the outcome does not
/// depend on the thread count.
inline void parallel_for(int n, int threads, const std::function<void(int)>& body) {
  threads = std::min(threads, n);
  if (threads <= 1) {
    for (int i = 0; i < n; ++i) body(i);
    return;
  }
  std::vector<std::thread> pool;
  pool.reserve(static_cast<size_t>(threads));
  for (int t = 0; t < threads; ++t) {
    pool.emplace_back([&, t] {
      for (int i = t; i < n; i += threads) body(i);
    });
  }
  for (auto& th : pool) th.join();
}

}  // namespace srsphere
