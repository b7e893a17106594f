#include "srsphere/htype.hpp"

#include <cmath>
#include <stdexcept>

#include "srsphere/numerics.hpp"

namespace srsphere {

const std::array<Eigen::Matrix4d, 3>& htype_unit_matrices() {
  static const std::array<Eigen::Matrix4d, 3> mats = [] {
    std::array<Eigen::Matrix4d, 3> m;
    m[0] << 0, 1, 0, 0, -1, 0, 0, 0, 0, 0, 0, 1, 0, 0, -1, 0;
    m[1] << 0, 0, 0, -1, 0, 0, -1, 0, 0, 1, 0, 0, 1, 0, 0, 0;
    m[2] << 0, 0, -1, 0, 0, 0, 0, 1, 1, 0, 0, 0, 0, -1, 0, 0;
    return m;
  }();
  return mats;
}

HTypePoint group_mul(const HTypePoint& a, const HTypePoint& b) {
  const auto& m = htype_unit_matrices();
  HTypePoint out;
  out.x = a.x + b.x;
  for (int r = 0; r < 3; ++r)
    out.z[r] = a.z[r] + b.z[r] + 0.5 * b.x.dot(m[static_cast<size_t>(r)] * a.x);
  return out;
}

HTypePoint group_inverse(const HTypePoint& a) {
  // x'^T M x is antisymmetric under swapping the arguments, so (-x,-z) inverts.
  HTypePoint out;
  out.x = -a.x;
  out.z = -a.z;
  return out;
}

HTypeFrame build_htype_frame() {
  Vars v({"x1", "x2", "x3", "x4", "zI", "zJ", "zK"});
  HTypeFrame frame;
  frame.vars = v;

  const auto& m = htype_unit_matrices();
  for (int a = 0; a < 4; ++a) {
    std::vector<Poly> coeffs(7, Poly(v));
    coeffs[static_cast<size_t>(a)] = Poly::constant(v, Rational(1));
    // z_r coefficient of X_a is (1/2) * (row a of M_r) . x
    for (int r = 0; r < 3; ++r) {
      Poly zc(v);
      for (int j = 0; j < 4; ++j) {
        const int entry = static_cast<int>(std::lround(m[static_cast<size_t>(r)](a, j)));
        if (entry != 0) zc += Rational(entry, 2) * Poly::var(v, j);
      }
      coeffs[static_cast<size_t>(4 + r)] = zc;
    }
    frame.fields.emplace_back(v, std::move(coeffs));
  }
  for (int r = 0; r < 3; ++r) {
    std::vector<Poly> coeffs(7, Poly(v));
    coeffs[static_cast<size_t>(4 + r)] = Poly::constant(v, Rational(1));
    frame.fields.emplace_back(v, std::move(coeffs));
  }
  return frame;
}

namespace {

// Expands a constant-coefficient field in the frame; throws if the field is
// not a constant combination of the frame fields.
std::array<Rational, 7> expand_constant_in_frame(const HTypeFrame& frame,
                                                 const PolyVectorField& field) {
  std::array<Rational, 7> out{};
  PolyVectorField rest = field;
  for (int a = 0; a < 4; ++a) {
    const Poly& xa = rest.coeff(a);
    if (!xa.is_zero() && xa.total_degree() > 0)
      throw std::logic_error("htype: bracket has non-constant horizontal coefficient");
    out[static_cast<size_t>(a)] = xa.coeff(Exponents(7, 0));
    if (!out[static_cast<size_t>(a)].is_zero())
      rest -= out[static_cast<size_t>(a)] * frame.fields[static_cast<size_t>(a)];
  }
  for (int r = 0; r < 3; ++r) {
    const Poly& zr = rest.coeff(4 + r);
    if (!zr.is_zero() && zr.total_degree() > 0)
      throw std::logic_error("htype: bracket has non-constant vertical coefficient");
    out[static_cast<size_t>(4 + r)] = zr.coeff(Exponents(7, 0));
    if (!out[static_cast<size_t>(4 + r)].is_zero())
      rest -= out[static_cast<size_t>(4 + r)] * frame.fields[static_cast<size_t>(4 + r)];
  }
  if (!rest.is_zero()) throw std::logic_error("htype: field is not in the frame span");
  return out;
}

}  // namespace

ConnectionTable::ConnectionTable() {
  HTypeFrame frame = build_htype_frame();

  // Exact structure constants from the symbolic brackets.
  for (int a = 0; a < 7; ++a)
    for (int b = 0; b < 7; ++b) {
      auto coeffs = expand_constant_in_frame(
          frame, frame.fields[static_cast<size_t>(a)].bracket(frame.fields[static_cast<size_t>(b)]));
      for (int c = 0; c < 7; ++c) c_[static_cast<size_t>(a)][static_cast<size_t>(b)][static_cast<size_t>(c)] = coeffs[static_cast<size_t>(c)];
    }

  // Koszul formula for a constant orthonormal metric:
  // <nabla_{E_a} E_b, E_c> = 1/2 (c^c_{ab} - c^a_{bc} + c^b_{ca}).
  const Rational half(1, 2);
  for (int a = 0; a < 7; ++a)
    for (int b = 0; b < 7; ++b)
      for (int c = 0; c < 7; ++c)
        gamma_[static_cast<size_t>(a)][static_cast<size_t>(b)][static_cast<size_t>(c)] =
            half * (structure(a, b, c) - structure(b, c, a) + structure(c, a, b));

  // The closed-form table nabla_{X_a} Z_r: entries +-1/2 placed as below.
  // Mismatch means the group law, the frame, or the Koszul step is wrong.
  struct Entry { int a, r, b; int num; };
  const Entry table[12] = {
      {0, 0, 1, 1},  {1, 0, 0, -1}, {2, 0, 3, 1},  {3, 0, 2, -1},
      {0, 1, 3, -1}, {1, 1, 2, -1}, {2, 1, 1, 1},  {3, 1, 0, 1},
      {0, 2, 2, -1}, {1, 2, 3, 1},  {2, 2, 0, 1},  {3, 2, 1, -1},
  };
  for (const auto& e : table) {
    for (int b = 0; b < 4; ++b) {
      const Rational want = b == e.b ? Rational(e.num, 2) : Rational(0);
      if (gamma(e.a, 4 + e.r, b) != want)
        throw std::logic_error("htype: Koszul-derived nabla_{X_a} Z_r differs from the closed-form table");
    }
    for (int s = 0; s < 3; ++s)
      if (!gamma(e.a, 4 + e.r, 4 + s).is_zero())
        throw std::logic_error("htype: nabla_{X_a} Z_r has a vertical component");
  }
}

const ConnectionTable& ConnectionTable::instance() {
  static const ConnectionTable table;
  return table;
}

Eigen::Vector4d ConnectionTable::nabla_xz(int a, int r) const {
  Eigen::Vector4d out;
  for (int b = 0; b < 4; ++b) out[b] = gamma(a, 4 + r, b).to_double();
  return out;
}

const std::array<Eigen::Matrix4d, 3>& j_structures() {
  static const std::array<Eigen::Matrix4d, 3> js = [] {
    const auto& ct = ConnectionTable::instance();
    std::array<Eigen::Matrix4d, 3> out;
    for (int r = 0; r < 3; ++r)
      for (int a = 0; a < 4; ++a) out[static_cast<size_t>(r)].col(a) = 2.0 * ct.nabla_xz(a, r);
    return out;
  }();
  return js;
}

namespace {

Eigen::Matrix4d lambda_hat(const Eigen::Vector3d& lambda) {
  const auto& js = j_structures();
  Eigen::Matrix4d m = Eigen::Matrix4d::Zero();
  for (int r = 0; r < 3; ++r) m += lambda[r] * js[static_cast<size_t>(r)];
  return m;
}

Eigen::Vector3d z_rate(const Eigen::Vector4d& x, const Eigen::Vector4d& u) {
  // z_r' = sum_a u_a * (z_r coefficient of X_a) = (1/2) u^T M_r x
  const auto& m = htype_unit_matrices();
  Eigen::Vector3d out;
  for (int r = 0; r < 3; ++r) out[r] = 0.5 * u.dot(m[static_cast<size_t>(r)] * x);
  return out;
}

}  // namespace

Eigen::Vector4d closed_form_u(const Eigen::Vector3d& lambda, const Eigen::Vector4d& u0,
                              double t) {
  const double ln = lambda.norm();
  if (ln == 0.0) return u0;
  // Lambda^2 = -|lambda|^2 Id, so exp(2 t Lambda) closes like a plane rotation:
  // cos(2|l|t) Id + sin(2|l|t) Lambda/|l|.
  const Eigen::Matrix4d lh = lambda_hat(lambda);
  return std::cos(2 * ln * t) * u0 + (std::sin(2 * ln * t) / ln) * (lh * u0);
}

std::vector<HTypeSample> reference_trajectory(const HTypeState& s0, double T, double output_step,
                                              double quad_step) {
  const int n_out = static_cast<int>(std::llround(T / output_step));
  // Fine grid: an even number of panels per output step, each <= quad_step.
  int sub = std::max(2, static_cast<int>(std::ceil(output_step / quad_step)));
  if (sub % 2 != 0) ++sub;
  const double hf = output_step / sub;

  auto u_at = [&](double t) { return closed_form_u(s0.lambda, s0.u, t); };

  // x on the fine grid: per-panel Simpson with analytic midpoint values.
  const int n_fine = n_out * sub;
  std::vector<Eigen::Vector4d> xs(static_cast<size_t>(n_fine) + 1);
  xs[0] = s0.point.x;
  for (int j = 1; j <= n_fine; ++j) {
    const double a = (j - 1) * hf, b = j * hf;
    xs[static_cast<size_t>(j)] =
        xs[static_cast<size_t>(j - 1)] + (hf / 6.0) * (u_at(a) + 4.0 * u_at(0.5 * (a + b)) + u_at(b));
  }

  // z by composite Simpson over pairs of fine nodes (x is known at nodes only).
  std::vector<Eigen::Vector3d> zs(static_cast<size_t>(n_fine) + 1);
  zs[0] = s0.point.z;
  for (int j = 2; j <= n_fine; j += 2) {
    const Eigen::Vector3d g0 = z_rate(xs[static_cast<size_t>(j - 2)], u_at((j - 2) * hf));
    const Eigen::Vector3d g1 = z_rate(xs[static_cast<size_t>(j - 1)], u_at((j - 1) * hf));
    const Eigen::Vector3d g2 = z_rate(xs[static_cast<size_t>(j)], u_at(j * hf));
    zs[static_cast<size_t>(j)] = zs[static_cast<size_t>(j - 2)] + (hf / 3.0) * (g0 + 4.0 * g1 + g2);
  }

  std::vector<HTypeSample> out(static_cast<size_t>(n_out) + 1);
  for (int k = 0; k <= n_out; ++k) {
    const int j = k * sub;
    out[static_cast<size_t>(k)] = HTypeSample{xs[static_cast<size_t>(j)], zs[static_cast<size_t>(j)],
                                              u_at(k * output_step)};
  }
  return out;
}

HTypeTrajectory integrate_geodesic(const HTypeState& s0, double T, double h) {
  if (T <= 0 || h <= 0) throw std::invalid_argument("integrate_geodesic: T and h must be positive");
  const int n = static_cast<int>(std::llround(T / h));
  if (n < 1) throw std::invalid_argument("integrate_geodesic: step exceeds horizon");

  const Eigen::Matrix4d lh2 = 2.0 * lambda_hat(s0.lambda);

  struct State {
    Eigen::Vector4d x;
    Eigen::Vector3d z;
    Eigen::Vector4d u;
  };
  auto rhs = [&](const State& s) {
    return State{s.u, z_rate(s.x, s.u), lh2 * s.u};
  };
  auto axpy = [](const State& s, double a, const State& d) {
    return State{s.x + a * d.x, s.z + a * d.z, s.u + a * d.u};
  };

  HTypeTrajectory traj;
  traj.lambda = s0.lambda;
  traj.h = h;
  traj.T = T;
  traj.t.reserve(static_cast<size_t>(n) + 1);
  traj.rk4.reserve(static_cast<size_t>(n) + 1);

  State s{s0.point.x, s0.point.z, s0.u};
  traj.t.push_back(0);
  traj.rk4.push_back(HTypeSample{s.x, s.z, s.u});
  for (int k = 1; k <= n; ++k) {
    const State k1 = rhs(s);
    const State k2 = rhs(axpy(s, 0.5 * h, k1));
    const State k3 = rhs(axpy(s, 0.5 * h, k2));
    const State k4 = rhs(axpy(s, h, k3));
    s.x += (h / 6.0) * (k1.x + 2 * k2.x + 2 * k3.x + k4.x);
    s.z += (h / 6.0) * (k1.z + 2 * k2.z + 2 * k3.z + k4.z);
    s.u += (h / 6.0) * (k1.u + 2 * k2.u + 2 * k3.u + k4.u);
    traj.t.push_back(k * h);
    traj.rk4.push_back(HTypeSample{s.x, s.z, s.u});
  }

  traj.reference = reference_trajectory(s0, n * h, h, 0.5 * h);
  double disc = 0;
  for (size_t k = 0; k < traj.rk4.size(); ++k) {
    disc = std::max(disc, (traj.rk4[k].x - traj.reference[k].x).cwiseAbs().maxCoeff());
    disc = std::max(disc, (traj.rk4[k].z - traj.reference[k].z).cwiseAbs().maxCoeff());
    disc = std::max(disc, (traj.rk4[k].u - traj.reference[k].u).cwiseAbs().maxCoeff());
  }
  traj.max_discrepancy = disc;
  return traj;
}

namespace {

// nabla_{gamma'} gamma' in frame coordinates: horizontal u' = 2 Lambda u plus
// the quadratic connection sum (which cancels exactly; kept so the computation
// goes through the table rather than assuming the cancellation).
void covariant_accel(const HTypeTrajectory& traj, size_t k, Eigen::Vector4d& horiz,
                     Eigen::Vector3d& vert) {
  const auto& ct = ConnectionTable::instance();
  const Eigen::Vector4d& u = traj.rk4[k].u;
  horiz = 2.0 * lambda_hat(traj.lambda) * u;
  vert.setZero();
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b) {
      const double uab = u[a] * u[b];
      if (uab == 0.0) continue;
      for (int r = 0; r < 3; ++r) vert[r] += uab * ct.gamma(a, b, 4 + r).to_double();
    }
}

}  // namespace

double first_variation(const HTypeTrajectory& traj, const VariationField& w) {
  const size_t n = traj.rk4.size();
  if (w.horizontal.size() != n || w.vertical.size() != n)
    throw std::invalid_argument("first_variation: field is not sampled on the trajectory grid");
  if (std::abs(traj.rk4.front().u.norm() - 1.0) > 1e-6)
    throw std::invalid_argument("first_variation: trajectory is not arc-length parameterized");
  const double end_mag =
      std::max(std::max(w.horizontal.front().norm(), w.horizontal.back().norm()),
               std::max(w.vertical.front().norm(), w.vertical.back().norm()));
  if (end_mag > 1e-10)
    throw std::invalid_argument("first_variation: field does not vanish at the endpoints");

  std::vector<double> integrand(n);
  for (size_t k = 0; k < n; ++k) {
    Eigen::Vector4d ah;
    Eigen::Vector3d av;
    covariant_accel(traj, k, ah, av);
    integrand[k] = ah.dot(w.horizontal[k]) + av.dot(w.vertical[k]);
  }
  return -simpson(integrand, traj.h);
}

VariationField build_admissible_field(const HTypeTrajectory& traj,
                                      const std::function<double(double)>& f_i,
                                      const std::function<double(double)>& f_j,
                                      const std::function<double(double)>& f_k) {
  const std::array<const std::function<double(double)>*, 3> fs = {&f_i, &f_j, &f_k};
  const double T = traj.T, h = traj.h;
  for (const auto* f : fs) {
    if (std::abs((*f)(0.0)) > 1e-10 || std::abs((*f)(T)) > 1e-10)
      throw std::invalid_argument("build_admissible_field: f_r must vanish at the endpoints");
  }

  const size_t n = traj.rk4.size();
  VariationField w;
  w.horizontal.resize(n);
  w.vertical.resize(n);

  const auto& js = j_structures();
  Eigen::Vector3d cum = Eigen::Vector3d::Zero();
  for (size_t k = 0; k < n; ++k) {
    const double t = traj.t[k];
    if (k > 0) {
      const double a = traj.t[k - 1], mid = a + 0.5 * h;
      for (int r = 0; r < 3; ++r)
        cum[r] += (h / 6.0) * ((*fs[static_cast<size_t>(r)])(a) + 4.0 * (*fs[static_cast<size_t>(r)])(mid) +
                               (*fs[static_cast<size_t>(r)])(t));
    }
    Eigen::Vector4d horiz = Eigen::Vector4d::Zero();
    for (int r = 0; r < 3; ++r)
      horiz += (*fs[static_cast<size_t>(r)])(t) * (js[static_cast<size_t>(r)] * traj.rk4[k].u);
    w.horizontal[k] = horiz;
    w.vertical[k] = 2.0 * cum;
  }
  for (int r = 0; r < 3; ++r)
    if (std::abs(cum[r]) > 1e-10)
      throw std::invalid_argument("build_admissible_field: f_r must have zero mean");
  return w;
}

double admissibility_residual(const HTypeTrajectory& traj, const VariationField& w) {
  const auto& js = j_structures();
  const size_t n = traj.rk4.size();
  double worst = 0;
  for (size_t k = 2; k + 2 < n; ++k) {
    for (int r = 0; r < 3; ++r) {
      const double lhs = (-w.vertical[k + 2][r] + 8 * w.vertical[k + 1][r] -
                          8 * w.vertical[k - 1][r] + w.vertical[k - 2][r]) /
                         (12 * traj.h);
      const double rhs = 2.0 * w.horizontal[k].dot(js[static_cast<size_t>(r)] * traj.rk4[k].u);
      worst = std::max(worst, std::abs(lhs - rhs));
    }
  }
  return worst;
}

}  // namespace srsphere
