#include "srsphere/geodesics.hpp"

#include <cmath>
#include <stdexcept>

#include "srsphere/numerics.hpp"
#include "srsphere/quaternion.hpp"

namespace srsphere {

namespace {

SphereFrame frame_for(Space space, int dim) {
  if (space == Space::Contact) {
    if (dim % 2 != 0 || dim < 4)
      throw std::invalid_argument("geodesics: contact spheres need even ambient dimension >= 4");
    return build_contact_frame(dim / 2 - 1);
  }
  if (dim % 4 != 0 || dim < 4)
    throw std::invalid_argument("geodesics: quaternionic spheres need ambient dimension 4n+4");
  return build_quaternionic_frame(dim / 4 - 1);
}

// Componentwise complex multiplication by cos(theta) + i sin(theta).
Eigen::VectorXd complex_phase(const Eigen::VectorXd& w, double c, double s) {
  Eigen::VectorXd out(w.size());
  for (int k = 0; k + 1 < w.size(); k += 2) {
    out[k] = w[k] * c - w[k + 1] * s;
    out[k + 1] = w[k] * s + w[k + 1] * c;
  }
  return out;
}

// Componentwise right quaternion multiplication; blocks are (1, i, j, k).
Eigen::VectorXd right_mul(const Eigen::VectorXd& w, const Quaternion& q) {
  Eigen::VectorXd out(w.size());
  for (int k = 0; k + 3 < w.size(); k += 4) {
    Quaternion b{w[k], w[k + 1], w[k + 2], w[k + 3]};
    Quaternion r = quat_mul(b, q);
    out[k] = r.w;
    out[k + 1] = r.x;
    out[k + 2] = r.y;
    out[k + 3] = r.z;
  }
  return out;
}

Eigen::VectorXd great_circle_velocity(const Eigen::VectorXd& p, const Eigen::VectorXd& v,
                                      double t) {
  const double s = v.norm();
  return -s * std::sin(s * t) * p + std::cos(s * t) * v;
}

}  // namespace

GeodesicSpec GeodesicSpec::make(Space space, Eigen::VectorXd p, Eigen::VectorXd v) {
  if (p.size() != v.size()) throw std::invalid_argument("GeodesicSpec: p/v dimension mismatch");
  if (std::abs(p.norm() - 1.0) > 1e-10)
    throw std::invalid_argument("GeodesicSpec: base point is off the sphere");
  if (std::abs(p.dot(v)) > 1e-10)
    throw std::invalid_argument("GeodesicSpec: velocity is not tangent");
  SphereFrame f = frame_for(space, static_cast<int>(p.size()));
  GeodesicSpec spec;
  spec.space = space;
  spec.n = f.n;
  spec.p = std::move(p);
  spec.v = std::move(v);
  spec.moments = contact_form_eval(f, spec.p, spec.v);
  return spec;
}

double GeodesicSpec::moment_norm_sq() const {
  double s = 0;
  for (double c : moments) s += c * c;
  return s;
}

double GeodesicSpec::speed_sq() const { return v.squaredNorm() - moment_norm_sq(); }

double GeodesicSpec::sr_speed() const { return std::sqrt(std::max(0.0, speed_sq())); }

Eigen::VectorXd great_circle(const Eigen::Ref<const Eigen::VectorXd>& p,
                             const Eigen::Ref<const Eigen::VectorXd>& v, double t) {
  const double s = v.norm();
  if (s == 0.0) throw std::invalid_argument("great_circle: zero velocity");
  return std::cos(s * t) * p + (std::sin(s * t) / s) * v;
}

Eigen::VectorXd geodesic_contact(const GeodesicSpec& spec, double t) {
  const double c = spec.moments.at(0);
  Eigen::VectorXd gc = great_circle(spec.p, spec.v, t);
  return complex_phase(gc, std::cos(c * t), -std::sin(c * t));
}

Eigen::VectorXd geodesic_quaternionic(const GeodesicSpec& spec, double t) {
  Eigen::VectorXd gc = great_circle(spec.p, spec.v, t);
  const Quaternion q =
      quat_exp(-t * spec.moments.at(0), -t * spec.moments.at(1), -t * spec.moments.at(2));
  return right_mul(gc, q);
}

Eigen::VectorXd geodesic_point(const GeodesicSpec& spec, double t) {
  return spec.space == Space::Contact ? geodesic_contact(spec, t) : geodesic_quaternionic(spec, t);
}

Eigen::VectorXd geodesic_velocity(const GeodesicSpec& spec, double t) {
  Eigen::VectorXd gc = great_circle(spec.p, spec.v, t);
  Eigen::VectorXd gcv = great_circle_velocity(spec.p, spec.v, t);
  if (spec.space == Space::Contact) {
    const double c = spec.moments.at(0);
    // d/dt [z e^{-ict}] = (z' - i c z) e^{-ict}, componentwise on pairs
    Eigen::VectorXd w(gc.size());
    for (int k = 0; k + 1 < gc.size(); k += 2) {
      w[k] = gcv[k] + c * gc[k + 1];
      w[k + 1] = gcv[k + 1] - c * gc[k];
    }
    return complex_phase(w, std::cos(c * t), -std::sin(c * t));
  }
  const double c1 = spec.moments.at(0), c2 = spec.moments.at(1), c3 = spec.moments.at(2);
  const Quaternion q = quat_exp(-t * c1, -t * c2, -t * c3);
  const Quaternion w{0, c1, c2, c3};
  // gamma = gc * q, q' = -q*w  =>  gamma' = gc' * q - gc * (q*w)
  return right_mul(gcv, q) - right_mul(gc, quat_mul(q, w));
}

double curvature_s3(const GeodesicSpec& spec) {
  if (spec.space != Space::Contact || spec.p.size() != 4)
    throw std::invalid_argument("curvature_s3: expects a contact spec on S^3");
  const double c = spec.moments.at(0);
  if (std::abs(spec.v.squaredNorm() - (1.0 + c * c)) > 1e-9)
    throw std::invalid_argument("curvature_s3: spec is not arc-length normalized");
  return c;
}

double verify_curvature_ode_s3(const GeodesicSpec& spec, int samples, double t1, double h) {
  const double lambda = curvature_s3(spec);
  SphereFrame f = build_contact_frame(1);
  auto curve = [&](double t) { return geodesic_point(spec, t); };

  double worst = 0;
  for (int i = 0; i < samples; ++i) {
    const double t = t1 * static_cast<double>(i) / std::max(1, samples - 1);
    const Eigen::VectorXd g = curve(t);
    const Eigen::VectorXd dg = fd_derivative4(curve, t, h);
    const Eigen::VectorXd ddg = fd_second2(curve, t, h);

    const Eigen::VectorXd covariant = ddg - ddg.dot(g) * g;  // tangential projection
    const Eigen::VectorXd X = f.horizontal[0].eval(g);
    const Eigen::VectorXd Y = f.horizontal[1].eval(g);
    const double fx = dg.dot(X), fy = dg.dot(Y);
    const Eigen::VectorXd J = -fy * X + fx * Y;
    worst = std::max(worst, (covariant + 2.0 * lambda * J).norm());
  }
  return worst;
}

namespace {

mpz_class gcd_z(const mpz_class& a, const mpz_class& b) {
  mpz_class g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

}  // namespace

ContactClosedness is_closed_contact(const Rational& lambda) {
  ContactClosedness out;
  const Rational one_plus = Rational(1) + lambda * lambda;
  if (!one_plus.is_perfect_square()) return out;  // lambda/sqrt(1+lambda^2) irrational

  // mu = lambda / sqrt(1 + lambda^2) = a/c in lowest terms; the curve closes at
  // T = k pi/|v| once the phase sign condition k(1 - mu) in 2Z holds.
  const Rational mu = lambda / one_plus.sqrt();
  mpz_class a = mu.num(), c = mu.den();
  mpz_class g = gcd_z(c - a, 2 * c);
  mpz_class k = 2 * c / g;

  out.closed = true;
  out.k = k.get_si();
  const double speed = std::sqrt(one_plus.to_double());  // |v| = sqrt(1+lambda^2), arc-length
  out.period = static_cast<double>(out.k) * std::acos(-1.0) / speed;
  return out;
}

bool ExactScalar::is_rational() const {
  if (q.is_zero()) return true;
  if (root < 0) return false;
  const long r = std::lround(std::sqrt(static_cast<double>(root)));
  for (long s = std::max(0L, r - 2); s <= r + 2; ++s)
    if (s * s == root) return true;
  return false;
}

double ExactScalar::value() const { return q.to_double() * std::sqrt(static_cast<double>(root)); }

QuatClosednessReport is_closed_quaternionic(const GeodesicSpec& spec,
                                            const std::array<ExactScalar, 3>& exact_moments,
                                            const Rational& exact_speed_sq, double t_max,
                                            double tol) {
  if (spec.space != Space::Quaternionic)
    throw std::invalid_argument("is_closed_quaternionic: expects a quaternionic spec");
  if (exact_speed_sq.sign() <= 0)
    throw std::invalid_argument("is_closed_quaternionic: |v|^2 must be positive");

  QuatClosednessReport rep;
  rep.criterion_closed = true;
  for (int a = 0; a < 3; ++a) {
    // c_alpha/|v|^2 with rational |v|^2 is rational iff c_alpha is.
    rep.moment_ratio_rational[static_cast<size_t>(a)] = exact_moments[static_cast<size_t>(a)].is_rational();
    rep.criterion_closed = rep.criterion_closed && rep.moment_ratio_rational[static_cast<size_t>(a)];
  }

  // Independent orbit search: coarse scan for candidate returns, then a
  // golden-section refinement of each local minimum.
  const double freq = std::max(1.0, spec.v.norm() + std::sqrt(spec.moment_norm_sq()));
  const double step = 0.02 / freq;
  auto dist = [&](double t) { return (geodesic_point(spec, t) - spec.p).norm(); };

  rep.numeric_min_dist = std::numeric_limits<double>::infinity();
  const double t_min = 0.1;  // excludes the trivial return at T = 0
  double prev = dist(t_min), cur = dist(t_min + step);
  for (double t = t_min + 2 * step; t <= t_max; t += step) {
    const double next = dist(t);
    if (cur <= prev && cur <= next && cur < 0.05) {
      double lo = t - 2 * step, hi = t;
      const double gr = 0.5 * (std::sqrt(5.0) - 1.0);
      double x1 = hi - gr * (hi - lo), x2 = lo + gr * (hi - lo);
      double f1 = dist(x1), f2 = dist(x2);
      while (hi - lo > 1e-12) {
        if (f1 < f2) {
          hi = x2; x2 = x1; f2 = f1;
          x1 = hi - gr * (hi - lo); f1 = dist(x1);
        } else {
          lo = x1; x1 = x2; f1 = f2;
          x2 = lo + gr * (hi - lo); f2 = dist(x2);
        }
      }
      const double tm = 0.5 * (lo + hi), fm = dist(tm);
      if (fm < rep.numeric_min_dist) {
        rep.numeric_min_dist = fm;
        if (fm <= tol && !rep.numeric_found) {
          rep.numeric_found = true;
          rep.numeric_time = tm;
        }
      }
      if (rep.numeric_found) return rep;
    }
    prev = cur;
    cur = next;
  }
  return rep;
}

Trace trace_geodesic(const GeodesicSpec& spec, double t0, double t1, int samples, double h) {
  if (samples < 2) throw std::invalid_argument("trace_geodesic: need at least 2 samples");
  SphereFrame f = frame_for(spec.space, static_cast<int>(spec.p.size()));
  auto curve = [&](double t) { return geodesic_point(spec, t); };

  Trace tr;
  tr.spec = spec;
  tr.times.reserve(static_cast<size_t>(samples));
  for (int i = 0; i < samples; ++i) {
    const double t = t0 + (t1 - t0) * static_cast<double>(i) / (samples - 1);
    const Eigen::VectorXd g = curve(t);
    const Eigen::VectorXd dg = fd_derivative4(curve, t, h);
    tr.times.push_back(t);
    tr.points.push_back(g);
    tr.speed.push_back(dg.norm());
    std::vector<double> res;
    res.reserve(f.vertical.size());
    for (const auto& vf : f.vertical) res.push_back(dg.dot(vf.eval(g)));
    tr.horiz_residual.push_back(std::move(res));
  }
  return tr;
}

}  // namespace srsphere
