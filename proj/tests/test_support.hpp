#pragma once

#include <Eigen/Core>
#include <vector>

#include "srsphere/numerics.hpp"
#include "srsphere/poly.hpp"
#include "srsphere/rational.hpp"

namespace srsphere::testing {

/// Exact rational point on the unit sphere in R^dim, via the rational
/// parameterization x = ((1-S)/(1+S), 2 t_1/(1+S), ..., 2 t_{dim-1}/(1+S))
/// with S = sum t_i^2. Satisfies sum x_i^2 == 1 exactly.
inline std::vector<Rational> rational_sphere_point(Rng& rng, int dim) {
  std::vector<Rational> t;
  t.reserve(static_cast<size_t>(dim - 1));
  Rational s(0);
  for (int i = 0; i + 1 < dim; ++i) {
    const long num = static_cast<long>(rng.next_u64() % 21) - 10;
    const long den = 1 + static_cast<long>(rng.next_u64() % 9);
    Rational ti(num, den);
    s += ti * ti;
    t.push_back(ti);
  }
  const Rational one(1);
  std::vector<Rational> x;
  x.reserve(static_cast<size_t>(dim));
  x.push_back((one - s) / (one + s));
  for (const auto& ti : t) x.push_back(Rational(2) * ti / (one + s));
  return x;
}

inline Poly random_poly(Rng& rng, const Vars& vars, int max_degree) {
  Poly p(vars);
  const int terms = 3 + static_cast<int>(rng.next_u64() % 6);
  for (int k = 0; k < terms; ++k) {
    Exponents e(static_cast<size_t>(vars.size()), 0);
    int budget = static_cast<int>(rng.next_u64() % static_cast<uint64_t>(max_degree + 1));
    while (budget-- > 0) e[rng.next_u64() % e.size()] += 1;
    const long num = static_cast<long>(rng.next_u64() % 19) - 9;
    const long den = 1 + static_cast<long>(rng.next_u64() % 7);
    p.add_term(e, Rational(num, den));
  }
  return p;
}

inline Eigen::VectorXd random_unit_point(Rng& rng, int dim) { return rng.unit_vector(dim); }

/// Random tangent vector at p (not normalized).
inline Eigen::VectorXd random_tangent(Rng& rng, const Eigen::VectorXd& p) {
  Eigen::VectorXd v = rng.gaussian_vector(static_cast<int>(p.size()));
  v -= v.dot(p) * p;
  return v;
}

}  // namespace srsphere::testing
