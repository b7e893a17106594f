#include "srsphere/verify.hpp"

#include <Eigen/Dense>
#include <cmath>
#include <sstream>

#include "srsphere/geodesics.hpp"
#include "srsphere/htype.hpp"
#include "srsphere/numerics.hpp"
#include "srsphere/subelliptic.hpp"

namespace srsphere {

namespace {

void push_exact(std::vector<CheckResult>& out, const std::string& id, const std::string& label,
                bool pass, const std::string& detail = "") {
  out.push_back(CheckResult{id, label, true, pass, 0.0, detail});
}

void push_numeric(std::vector<CheckResult>& out, const std::string& id, const std::string& label,
                  double err, double tol, const std::string& detail = "") {
  out.push_back(CheckResult{id, label, false, err <= tol, err, detail});
}

// ---------------------------------------------------------------- frames ---

void verify_frames(std::vector<CheckResult>& out) {
  // contact vertical fields: tangency and Gram polynomial
  {
    bool tangent = true, gram = true;
    for (int n = 1; n <= 3; ++n) {
      SphereFrame f = build_contact_frame(n);
      Poly r2 = radius_squared(f.vars);
      tangent = tangent && f.vertical[0].apply(r2).is_zero();
      gram = gram && (f.vertical[0].inner(f.vertical[0]) == r2);
    }
    push_exact(out, "frames.contact_tangency", "contact vertical field V: V(r^2) = 0", tangent,
               "n = 1..3");
    push_exact(out, "frames.contact_gram", "contact vertical field V: <V,V> = r^2", gram,
               "n = 1..3");
  }

  // quaternionic vertical frame: brackets, tangency, Gram
  {
    bool brackets = true, tangent = true, gram = true;
    for (int n = 0; n <= 1; ++n) {
      SphereFrame f = build_quaternionic_frame(n);
      const auto& v1 = f.vertical[0];
      const auto& v2 = f.vertical[1];
      const auto& v3 = f.vertical[2];
      brackets = brackets && (lie_bracket(v1, v2) == Rational(2) * v3) &&
                 (lie_bracket(v2, v3) == Rational(2) * v1) &&
                 (lie_bracket(v1, v3) == Rational(-2) * v2);
      Poly r2 = radius_squared(f.vars);
      for (int a = 0; a < 3; ++a) {
        tangent = tangent && f.vertical[static_cast<size_t>(a)].apply(r2).is_zero();
        for (int b = 0; b < 3; ++b) {
          Poly want = a == b ? r2 : Poly(f.vars);
          gram = gram && (f.vertical[static_cast<size_t>(a)].inner(f.vertical[static_cast<size_t>(b)]) == want);
        }
      }
    }
    push_exact(out, "frames.quaternionic_brackets",
               "[V1,V2] = 2V3, [V2,V3] = 2V1, [V1,V3] = -2V2", brackets, "n = 0, 1");
    push_exact(out, "frames.quaternionic_tangency", "V_alpha(r^2) = 0", tangent, "n = 0, 1");
    push_exact(out, "frames.quaternionic_gram", "<V_a, V_b> = delta_ab r^2", gram, "n = 0, 1");
  }

  // seven-sphere frame
  {
    SphereFrame f = build_s7_frame();
    std::vector<PolyVectorField> all = f.vertical;
    all.insert(all.end(), f.horizontal.begin(), f.horizontal.end());
    Poly r2 = radius_squared(f.vars);

    bool coeff = true;
    {
      // X1 = (-x1, x0, -x3, x2, -x5, x4, -x7, x6)
      const int idx[8] = {1, 0, 3, 2, 5, 4, 7, 6};
      const int sgn[8] = {-1, 1, -1, 1, -1, 1, -1, 1};
      for (int i = 0; i < 8; ++i)
        coeff = coeff && (all[0].coeff(i) == Rational(sgn[i]) * Poly::var(f.vars, idx[i]));
    }
    push_exact(out, "frames.s7_x1_coefficients",
               "X1 = (-x1, x0, -x3, x2, -x5, x4, -x7, x6)", coeff);

    bool gram = true;
    for (size_t a = 0; a < all.size(); ++a)
      for (size_t b = a; b < all.size(); ++b) {
        Poly want = a == b ? r2 : Poly(f.vars);
        gram = gram && (all[a].inner(all[b]) == want);
      }
    push_exact(out, "frames.s7_gram", "s7 frame: <X_a, X_b> = delta_ab r^2", gram, "28 entries");

    bool orth = true;
    for (const auto& xa : f.horizontal)  // a = 2..7
      for (const auto& xb : all)         // b = 1..7
        orth = orth && xb.inner(xa.bracket(xb)).is_zero();
    push_exact(out, "frames.s7_orthogonality", "s7 frame: <X_b, [X_a, X_b]> = 0 (a = 2..7)", orth,
               "ambient polynomial identity, 42 pairs");

    push_exact(out, "frames.s7_vertical_matches_contact",
               "s7 field X1 has the coefficients of the contact field V on S^7",
               all[0].coeffs() == build_contact_frame(3).vertical[0].coeffs());

    bool perp = true;
    for (const auto& x : all) {
      Poly ip(f.vars);
      for (int i = 0; i < 8; ++i) ip += x.coeff(i) * Poly::var(f.vars, i);
      perp = perp && ip.is_zero();
    }
    push_exact(out, "frames.s7_pointwise_perp", "<X_a(p), p> = 0", perp);
  }

  // S^3 contact frame bracket; sign fixed by the convention [A,B] = AB - BA,
  // the same convention under which the quaternionic and H-type bracket tables
  // hold exactly.
  {
    SphereFrame f = build_contact_frame(1);
    const auto& v = f.vertical[0];
    const auto& x = f.horizontal[0];
    const auto& y = f.horizontal[1];
    push_exact(out, "frames.s3_bracket",
               "s3 frame: [X,Y] = -2V and [Y,X] = 2V  ([A,B] = AB - BA)",
               lie_bracket(x, y) == Rational(-2) * v && lie_bracket(y, x) == Rational(2) * v);
  }

  // moment of inertia: identity matrix, point independent
  {
    Rng rng(11);
    for (auto space : {Space::Contact, Space::Quaternionic}) {
      SphereFrame f = space == Space::Contact ? build_contact_frame(1) : build_quaternionic_frame(1);
      std::vector<Eigen::VectorXd> pts;
      for (int i = 0; i < 100; ++i) pts.push_back(rng.unit_vector(f.ambient_dim));
      InertiaReport rep = verify_inertia_constancy(f, pts);
      push_numeric(out,
                   space == Space::Contact ? "frames.inertia_contact" : "frames.inertia_quaternionic",
                   "moment of inertia tensor == identity at every point", rep.max_deviation, 1e-12,
                   "100 random points");
    }
  }
}

// ----------------------------------------------------------------- htype ---

void verify_htype(std::vector<CheckResult>& out) {
  HTypeFrame f = build_htype_frame();
  const auto& x1 = f.horizontal(0);
  const auto& x2 = f.horizontal(1);
  const auto& x3 = f.horizontal(2);
  const auto& x4 = f.horizontal(3);
  const auto& zi = f.vertical(0);
  const auto& zj = f.vertical(1);
  const auto& zk = f.vertical(2);

  bool br = lie_bracket(x1, x2) == Rational(-1) * zi && lie_bracket(x3, x4) == Rational(-1) * zi &&
            lie_bracket(x2, x3) == zj && lie_bracket(x1, x4) == zj &&
            lie_bracket(x1, x3) == zk && lie_bracket(x4, x2) == zk;
  push_exact(out, "htype.brackets",
             "[X1,X2] = [X3,X4] = -Z_I, [X2,X3] = [X1,X4] = Z_J, [X1,X3] = [X4,X2] = Z_K", br);

  bool vanish = true;
  for (int a = 0; a < 7; ++a)
    for (int r = 4; r < 7; ++r) {
      vanish = vanish && f.fields[static_cast<size_t>(a)].bracket(f.fields[static_cast<size_t>(r)]).is_zero();
    }
  push_exact(out, "htype.vanishing_brackets", "[X_a, Z_r] = 0 and [Z_r, Z_s] = 0", vanish);

  // Koszul table (the constructor throws on mismatch; reaching here means it agreed)
  bool table_ok = true;
  std::string note;
  try {
    (void)ConnectionTable::instance();
  } catch (const std::exception& e) {
    table_ok = false;
    note = e.what();
  }
  push_exact(out, "htype.connection_table",
             "Koszul-derived nabla_{X_a} Z_r equals the closed-form +-(1/2) X_b table", table_ok,
             note);

  if (table_ok) {
    const auto& ct = ConnectionTable::instance();

    bool vert_orth = true;
    for (int a = 0; a < 4; ++a)
      for (int r = 0; r < 3; ++r)
        for (int s = 0; s < 3; ++s)
          vert_orth = vert_orth && ct.gamma(a, 4 + r, 4 + s).is_zero();
    push_exact(out, "htype.nabla_vertical_orthogonality", "<Z_s, nabla_{X_a} Z_r> = 0", vert_orth);

    bool horiz_conn = true;
    for (int a = 0; a < 4; ++a)
      for (int b = 0; b < 4; ++b) {
        for (int c = 0; c < 4; ++c) horiz_conn = horiz_conn && ct.gamma(a, b, c).is_zero();
        for (int r = 0; r < 3; ++r)
          horiz_conn =
              horiz_conn && ct.gamma(a, b, 4 + r) == Rational(1, 2) * ct.structure(a, b, 4 + r);
      }
    push_exact(out, "htype.horizontal_connection",
               "nabla_{X_a} X_b is vertical and equals (1/2)[X_a, X_b]", horiz_conn);

    const auto& js = j_structures();
    bool jalg = true;
    for (int r = 0; r < 3; ++r) {
      const Eigen::Matrix4d& J = js[static_cast<size_t>(r)];
      jalg = jalg && (J * J + Eigen::Matrix4d::Identity()).isZero(0.0);
      jalg = jalg && (J.transpose() + J).isZero(0.0);
      for (int s = 0; s < 3; ++s) {
        if (r == s) continue;
        jalg = jalg && (J * js[static_cast<size_t>(s)] + js[static_cast<size_t>(s)] * J).isZero(0.0);
        jalg = jalg && (J.transpose() * js[static_cast<size_t>(s)]).trace() == 0.0;
      }
    }
    push_exact(out, "htype.j_structures",
               "J_r^2 = -Id, J_r^T = -J_r, J_r J_s = -J_s J_r, <J_r u, J_s u> = delta_rs |u|^2",
               jalg);
  }

  // left invariance, symbolically in the translation parameters
  {
    Vars big({"a1", "a2", "a3", "a4", "aI", "aJ", "aK", "x1", "x2", "x3", "x4", "zI", "zJ", "zK"});
    auto lift = [&](const Poly& p) {
      // reindex a 7-variable polynomial into the tail of the 14-variable ring
      std::vector<Poly> images;
      for (int i = 0; i < 7; ++i) images.push_back(Poly::var(big, 7 + i));
      return p.substitute(images);
    };
    const auto& m = htype_unit_matrices();
    // left translation by (a1..a4, aI..aK): x -> a + x, z_r -> a_r + z_r + (1/2) x^T M_r a
    std::vector<Poly> translated;
    for (int i = 0; i < 4; ++i) translated.push_back(Poly::var(big, i) + Poly::var(big, 7 + i));
    for (int r = 0; r < 3; ++r) {
      Poly zr = Poly::var(big, 4 + r) + Poly::var(big, 11 + r);
      for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) {
          const int entry = static_cast<int>(std::lround(m[static_cast<size_t>(r)](i, j)));
          if (entry != 0)
            zr += Rational(entry, 2) * (Poly::var(big, 7 + i) * Poly::var(big, j));
        }
      translated.push_back(zr);
    }

    bool invariant = true;
    for (int c = 0; c < 7 && invariant; ++c) {
      const auto& field = f.fields[static_cast<size_t>(c)];
      std::vector<Poly> images7;
      for (int i = 0; i < 7; ++i) images7.push_back(translated[static_cast<size_t>(i)]);
      for (int comp = 0; comp < 7 && invariant; ++comp) {
        // pushforward component: sum_w dL_comp/dw * field_w, with the Jacobian
        // taken in the group coordinates only
        Poly pushed(big);
        for (int w = 0; w < 7; ++w) {
          const Poly dcomp_dw = translated[static_cast<size_t>(comp)].derivative(7 + w);
          if (dcomp_dw.is_zero()) continue;
          pushed += dcomp_dw * lift(field.coeff(w));
        }
        const Poly at_translated = field.coeff(comp).substitute(images7);
        invariant = invariant && (pushed == at_translated);
      }
    }
    push_exact(out, "htype.left_invariance",
               "pushforward of the frame under left translation reproduces the frame, "
               "identically in the translation parameters",
               invariant);
  }

  // group law sanity
  {
    HTypePoint a;
    a.x << 0.3, -1.2, 0.5, 2.0;
    a.z << 0.1, -0.4, 0.7;
    const HTypePoint e;
    const HTypePoint ae = group_mul(a, e);
    const HTypePoint inv = group_mul(a, group_inverse(a));
    bool ok = (ae.x - a.x).norm() == 0.0 && (ae.z - a.z).norm() == 0.0 &&
              inv.x.norm() == 0.0 && inv.z.norm() == 0.0;

    HTypePoint e1, e2;
    e1.x << 1, 0, 0, 0;
    e2.x << 0, 1, 0, 0;
    const double asym = group_mul(e1, e2).z[0] - group_mul(e2, e1).z[0];
    ok = ok && asym == -1.0;
    push_exact(out, "htype.group_law",
               "identity, inverse (-x, -z), and the z_I asymmetry of e1, e2 equals -1", ok);
  }
}

// ------------------------------------------------------------ subelliptic ---

void verify_subelliptic(std::vector<CheckResult>& out, int degree) {
  const DiffOperator lap7 = build_sublaplacian(SubSpace::S7);
  const DiffOperator lap3 = build_sublaplacian(SubSpace::S3);
  const DiffOperator x1sq = build_x1_squared();

  {
    const Vars& v8 = lap7.vars();
    const Vars& v4 = lap3.vars();
    const bool ok = lap7.apply(Poly::var(v8, 0)) == Rational(-6) * Poly::var(v8, 0) &&
                    lap3.apply(Poly::var(v4, 0)) == Rational(-2) * Poly::var(v4, 0) &&
                    lap7.apply(Poly::constant(v8, Rational(1))).is_zero();
    push_exact(out, "subelliptic.sublaplacian_x0",
               "sub-Laplacian: s7 maps x0 to -6 x0, s3 maps x0 to -2 x0, constants to 0", ok);
  }

  for (auto space : {SubSpace::S3, SubSpace::S7}) {
    const DiffOperator& sos = space == SubSpace::S3 ? lap3 : lap7;
    const DiffOperator popp = sublaplacian_via_popp(space);
    const int nv = sos.vars().size();

    bool corrections_vanish = true;
    for (const auto& term : popp.terms())
      if (term.factors.size() == 1)
        corrections_vanish = corrections_vanish && reduce_mod_sphere(term.weight).is_zero();

    bool agree = true;
    std::vector<Exponents> mons;
    {
      QuotientBasis all = quotient_basis(nv, 3);
      mons = all.monomials;
    }
    for (const auto& e : mons) {
      const Poly mono = Poly::monomial(sos.vars(), e, Rational(1));
      if (!reduce_mod_sphere(popp.apply(mono) - sos.apply(mono)).is_zero()) {
        agree = false;
        break;
      }
    }
    const std::string tag = space == SubSpace::S3 ? "s3" : "s7";
    push_exact(out, "subelliptic.popp_corrections_" + tag,
               "divergence corrections <X_s,[X_r,X_s]> vanish on the sphere (" + tag + ")",
               corrections_vanish);
    push_exact(out, "subelliptic.popp_equals_sum_of_squares_" + tag,
               "divergence-form sub-Laplacian == sum of squares mod (r^2 - 1), degree <= 3 (" +
                   tag + ")",
               agree);
  }

  {
    CommutationReport rep = commutation_certificate(degree);
    std::ostringstream deg;
    deg << "degree " << degree;
    push_exact(out, "subelliptic.commutation_matrix",
               "quotient matrices of the sub-Laplacian and X1^2 commute exactly", rep.matrix_commutes,
               deg.str());
    push_exact(out, "subelliptic.commutation_per_monomial",
               "[sub-Laplacian, X1^2] m reduces to 0 for every basis monomial m",
               rep.per_monomial_zero, deg.str());
    std::ostringstream ctrl;
    ctrl << "frobenius norm " << rep.control_commutator_norm;
    push_exact(out, "subelliptic.control_noncommuting",
               "control: the X2^2 commutator is nonzero (commutation is special to X1)",
               rep.control_commutator_norm > 0, ctrl.str());
    push_exact(out, "subelliptic.ambient_commutator",
               "recorded: ambient commutator with no ideal reduction on monomials of degree <= 3",
               true, rep.ambient_zero ? "ambient commutator vanishes identically"
                                      : "ambient commutator is nonzero; vanishes only mod the ideal");
  }

  {
    HeatReport rep = heat_factorization(0.5, std::min(degree, 3));
    push_exact(out, "subelliptic.lb_decomposition",
               "matrix of the full Laplacian == matrix of sub-Laplacian + matrix of X1^2",
               rep.sum_exact);
    push_exact(out, "subelliptic.lb_degree_blocks",
               "degree-k diagonal block of the full Laplacian is exactly -k(k+6) Id",
               rep.degree_blocks_scalar);
    push_numeric(out, "subelliptic.heat_split",
                 "heat semigroup splits: exp(-t(A+B)) == exp(-tA) exp(-tB)", rep.split_error, 1e-8,
                 "t = 0.5");
    push_numeric(out, "subelliptic.heat_full_vs_split",
                 "exp(-t full Laplacian) == exp(-tA) exp(-tB)", rep.full_vs_split_error, 1e-8,
                 "t = 0.5");
  }

  // chart checks
  {
    Rng rng(17);
    double rt = 0, x1err = 0, diag = 0, offdiag = 0, corner = 0, psd_floor = 0, rank_gap = 1e300;
    for (int trial = 0; trial < 100; ++trial) {
      hopf::Angles a;
      for (int i = 0; i < 4; ++i) a[static_cast<size_t>(i)] = rng.uniform(-3.0, 3.0);
      a[4] = rng.uniform(0.2, 1.35);
      a[5] = rng.uniform(0.2, 1.35);
      a[6] = rng.uniform(0.2, 1.35);

      const Eigen::VectorXd p = hopf::to_ambient(a);
      const hopf::Angles back = hopf::from_ambient(p);
      const Eigen::VectorXd p2 = hopf::to_ambient(back);
      rt = std::max(rt, (p - p2).norm());

      Eigen::VectorXd want(7);
      want << 1, 1, 1, 1, 0, 0, 0;
      x1err = std::max(x1err, (hopf::x1_pushforward(a) - want).norm());

      const Eigen::MatrixXd s = hopf::symbol_matrix(a);
      const auto h = hopf::h_coeffs(a[4], a[5], a[6]);
      for (int i = 0; i < 4; ++i) diag = std::max(diag, std::abs(s(i, i) - h[static_cast<size_t>(i)]));
      for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
          if (i != j) offdiag = std::max(offdiag, std::abs(s(i, j) + 1.0));
      const double cp = std::cos(a[6]), sp = std::sin(a[6]);
      corner = std::max(corner, std::abs(s(4, 4) - 1.0 / (cp * cp)));
      corner = std::max(corner, std::abs(s(5, 5) - 1.0 / (sp * sp)));
      corner = std::max(corner, std::abs(s(6, 6) - 1.0));
      for (int i = 4; i < 7; ++i)
        for (int j = 0; j < 7; ++j)
          if (i != j) corner = std::max(corner, std::abs(s(i, j)));

      Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(0.5 * (s + s.transpose()));
      psd_floor = std::min(psd_floor, es.eigenvalues().minCoeff());
      rank_gap = std::min(rank_gap, es.eigenvalues()[1]);  // second-smallest stays positive
    }
    push_numeric(out, "subelliptic.hopf_roundtrip", "chart roundtrip ambient -> angles -> ambient",
                 rt, 1e-12, "100 interior points");
    push_numeric(out, "subelliptic.hopf_x1",
                 "X1 in chart coordinates == d/dxi1 + d/dxi2 + d/dxi3 + d/dxi4", x1err, 1e-9);
    push_numeric(out, "subelliptic.hopf_symbol_diag",
                 "symbol diagonal matches the coefficient functions h1..h4", diag, 1e-9);
    push_numeric(out, "subelliptic.hopf_symbol_offdiag", "symbol xi-block off-diagonal == -1",
                 offdiag, 1e-9);
    push_numeric(out, "subelliptic.hopf_symbol_corner",
                 "symbol lower-right block == diag(sec^2 psi, csc^2 psi, 1), off-block zero",
                 corner, 1e-9);
    push_numeric(out, "subelliptic.hopf_symbol_psd",
                 "symbol is positive semidefinite of rank 6 at interior points",
                 std::max(0.0, -psd_floor) + (rank_gap > 1e-9 ? 0.0 : 1.0), 1e-9,
                 "eigenvalue floor and rank gap");
  }
}

// -------------------------------------------------------------- geodesics ---

void verify_geodesics(std::vector<CheckResult>& out) {
  Rng rng(23);

  double horiz = 0, pyth = 0;
  for (auto [space, dim] : std::vector<std::pair<Space, int>>{{Space::Contact, 4},
                                                              {Space::Contact, 6},
                                                              {Space::Contact, 8},
                                                              {Space::Quaternionic, 8},
                                                              {Space::Quaternionic, 12}}) {
    for (int k = 0; k < 10; ++k) {
      Eigen::VectorXd p = rng.unit_vector(dim);
      Eigen::VectorXd v = rng.gaussian_vector(dim);
      v -= v.dot(p) * p;
      v *= rng.uniform(0.5, 2.0) / v.norm();
      GeodesicSpec spec = GeodesicSpec::make(space, p, v);
      Trace tr = trace_geodesic(spec, 0, 5, 200);
      for (size_t i = 0; i < tr.times.size(); ++i) {
        for (double r : tr.horiz_residual[i]) horiz = std::max(horiz, std::abs(r));
        pyth = std::max(pyth, std::abs(tr.speed[i] * tr.speed[i] + spec.moment_norm_sq() -
                                       spec.v.squaredNorm()));
      }
    }
  }
  push_numeric(out, "geodesics.horizontality", "velocity has zero vertical moments along the flow",
               horiz, 1e-9, "50 random specs, 200 samples each");
  push_numeric(out, "geodesics.pythagoras", "|gamma'|^2 + sum c_alpha^2 == |v|^2", pyth, 1e-9);

  {
    // Hermitian pairing of the great circle with itself: <gamma_R', gamma_R>_H = i c
    double worst = 0;
    for (int k = 0; k < 10; ++k) {
      Eigen::VectorXd p = rng.unit_vector(6);
      Eigen::VectorXd v = rng.gaussian_vector(6);
      v -= v.dot(p) * p;
      GeodesicSpec spec = GeodesicSpec::make(Space::Contact, p, v);
      const double c = spec.moments[0];
      const double s = v.norm();
      for (double t : {0.0, 0.3, 1.7, 4.0}) {
        Eigen::VectorXd g = great_circle(p, v, t);
        Eigen::VectorXd dg = -s * std::sin(s * t) * p + std::cos(s * t) * v;
        double re = 0, im = 0;
        for (int i = 0; i + 1 < 6; i += 2) {
          re += dg[i] * g[i] + dg[i + 1] * g[i + 1];
          im += dg[i + 1] * g[i] - dg[i] * g[i + 1];
        }
        worst = std::max(worst, std::hypot(re, im - c));
      }
    }
    push_numeric(out, "geodesics.hermitian_identity",
                 "<gamma_R'(t), gamma_R(t)>_H == i <v, V(p)> for all t", worst, 1e-10);
  }

  {
    Eigen::VectorXd p(4), v(4);
    p << 1, 0, 0, 0;
    v << 0, 1, 1, 0;
    GeodesicSpec spec = GeodesicSpec::make(Space::Contact, p, v);
    const double res = verify_curvature_ode_s3(spec, 200, 6.0, 1e-4);
    push_numeric(out, "geodesics.curvature_ode",
                 "covariant acceleration + 2 lambda J(gamma') == 0 along the closed form", res,
                 1e-6, "finite-difference oracle, h = 1e-4");
  }

  {
    ContactClosedness c34 = is_closed_contact(Rational(3, 4));
    ContactClosedness c0 = is_closed_contact(Rational(0));
    ContactClosedness c1 = is_closed_contact(Rational(1));
    const double pi = std::acos(-1.0);
    bool ok = c34.closed && std::abs(c34.period - 4 * pi) < 1e-12 && c0.closed &&
              std::abs(c0.period - 2 * pi) < 1e-12 && !c1.closed;

    Eigen::VectorXd p(4), v(4);
    p << 1, 0, 0, 0;
    v << 0, 0.75, 1, 0;
    GeodesicSpec spec = GeodesicSpec::make(Space::Contact, p, v);
    ok = ok && (geodesic_point(spec, 4 * pi) - p).norm() <= 1e-9;
    push_exact(out, "geodesics.closedness",
               "lambda = 3/4 closes at T = 4 pi, lambda = 0 at 2 pi, lambda = 1 never", ok);
  }
}

}  // namespace

std::vector<CheckResult> run_verify(const std::string& module, int degree) {
  std::vector<CheckResult> out;
  const bool all = module == "all" || module.empty();
  if (all || module == "frames") verify_frames(out);
  if (all || module == "htype") verify_htype(out);
  if (all || module == "subelliptic") verify_subelliptic(out, degree);
  if (all || module == "geodesics") verify_geodesics(out);
  if (out.empty()) throw std::invalid_argument("run_verify: unknown module '" + module + "'");
  return out;
}

}  // namespace srsphere
