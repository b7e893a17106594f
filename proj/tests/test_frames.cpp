#include "doctest.h"
#include "srsphere/frames.hpp"
#include "test_support.hpp"

using namespace srsphere;

TEST_CASE("contact frame coefficients and gram polynomial") {
  SphereFrame f = build_contact_frame(1);
  const Vars& v = f.vars;
  CHECK(f.ambient_dim == 4);
  // V = (-x1, x0, -x3, x2)
  CHECK(f.vertical[0].coeff(0) == -Poly::var(v, 1));
  CHECK(f.vertical[0].coeff(1) == Poly::var(v, 0));
  CHECK(f.vertical[0].coeff(2) == -Poly::var(v, 3));
  CHECK(f.vertical[0].coeff(3) == Poly::var(v, 2));

  CHECK(f.vertical[0].apply(radius_squared(v)).is_zero());
  CHECK(f.vertical[0].inner(f.vertical[0]) == radius_squared(v));

  CHECK_THROWS(build_contact_frame(0));
}

TEST_CASE("quaternionic frame brackets and evaluation at the pole") {
  for (int n : {0, 1}) {
    SphereFrame f = build_quaternionic_frame(n);
    const auto& V1 = f.vertical[0];
    const auto& V2 = f.vertical[1];
    const auto& V3 = f.vertical[2];
    CHECK(lie_bracket(V1, V2) == Rational(2) * V3);
    CHECK(lie_bracket(V2, V3) == Rational(2) * V1);
    CHECK(lie_bracket(V1, V3) == Rational(-2) * V2);
    Poly r2 = radius_squared(f.vars);
    for (const auto& vf : f.vertical) CHECK(vf.apply(r2).is_zero());
  }

  SphereFrame f0 = build_quaternionic_frame(0);
  Eigen::VectorXd pole(4);
  pole << 1, 0, 0, 0;
  Eigen::VectorXd v1 = f0.vertical[0].eval(pole);
  Eigen::VectorXd v2 = f0.vertical[1].eval(pole);
  Eigen::VectorXd v3 = f0.vertical[2].eval(pole);
  CHECK(v1.isApprox(Eigen::Vector4d(0, 1, 0, 0)));
  CHECK(v2.isApprox(Eigen::Vector4d(0, 0, 1, 0)));
  CHECK(v3.isApprox(Eigen::Vector4d(0, 0, 0, 1)));

  CHECK_THROWS(build_quaternionic_frame(-1));
}

TEST_CASE("seven-sphere frame: coefficients, gram, orthogonality identity") {
  SphereFrame f = build_s7_frame();
  const Vars& v = f.vars;
  std::vector<PolyVectorField> all = f.vertical;
  all.insert(all.end(), f.horizontal.begin(), f.horizontal.end());
  REQUIRE(all.size() == 7);

  // X1 = (-x1, x0, -x3, x2, -x5, x4, -x7, x6)
  const int idx[8] = {1, 0, 3, 2, 5, 4, 7, 6};
  const int sgn[8] = {-1, 1, -1, 1, -1, 1, -1, 1};
  for (int i = 0; i < 8; ++i) CHECK(all[0].coeff(i) == Rational(sgn[i]) * Poly::var(v, idx[i]));

  // Gram polynomial: 28 entries, delta_ab r^2 exactly
  Poly r2 = radius_squared(v);
  for (size_t a = 0; a < 7; ++a)
    for (size_t b = a; b < 7; ++b) {
      Poly want = a == b ? r2 : Poly(v);
      CHECK(all[a].inner(all[b]) == want);
    }

  // <X_b, [X_a, X_b]> = 0 ambiently, for horizontal a and every b
  for (const auto& xa : f.horizontal)
    for (const auto& xb : all) CHECK(xb.inner(xa.bracket(xb)).is_zero());

  // the vertical field coincides with the contact field of S^7
  CHECK(all[0].coeffs() == build_contact_frame(3).vertical[0].coeffs());

  // pointwise orthogonality to the position vector, as a polynomial
  for (const auto& x : all) {
    Poly ip(v);
    for (int i = 0; i < 8; ++i) ip += x.coeff(i) * Poly::var(v, i);
    CHECK(ip.is_zero());
  }
}

TEST_CASE("contact form evaluation") {
  SphereFrame f = build_contact_frame(1);
  Eigen::VectorXd p(4);
  p << 1, 0, 0, 0;

  // self-pairing of the vertical field on the unit sphere
  Eigen::VectorXd vp = f.vertical[0].eval(p);
  auto m = contact_form_eval(f, p, vp);
  REQUIRE(m.size() == 1);
  CHECK(m[0] == doctest::Approx(1.0).epsilon(1e-14));

  // horizontal vectors have vanishing moments
  Eigen::MatrixXd hb = horizontal_basis_at(f, p);
  REQUIRE(hb.cols() == 2);
  for (int j = 0; j < hb.cols(); ++j) {
    auto mm = contact_form_eval(f, p, hb.col(j));
    CHECK(std::abs(mm[0]) < 1e-12);
  }

  // worked example: v = (0,1,1,0) pairs to 1 with V(p) = (0,1,0,0)
  Eigen::VectorXd v(4);
  v << 0, 1, 1, 0;
  CHECK(contact_form_eval(f, p, v)[0] == doctest::Approx(1.0).epsilon(1e-14));

  Eigen::VectorXd off = 1.5 * p;
  CHECK_THROWS(contact_form_eval(f, off, v));
}

TEST_CASE("moment of inertia tensor is the identity, point independent") {
  Rng rng(41);

  SphereFrame s3 = build_contact_frame(1);
  std::vector<Eigen::VectorXd> pts;
  for (int i = 0; i < 100; ++i) pts.push_back(rng.unit_vector(4));
  InertiaReport r3 = verify_inertia_constancy(s3, pts);
  CHECK(r3.points_checked == 100);
  CHECK(r3.max_deviation < 1e-12);

  SphereFrame q = build_quaternionic_frame(1);
  pts.clear();
  for (int i = 0; i < 100; ++i) pts.push_back(rng.unit_vector(8));
  InertiaReport r7 = verify_inertia_constancy(q, pts);
  CHECK(r7.max_deviation < 1e-12);
}

TEST_CASE("s3 bracket sign under [A,B] = AB - BA") {
  SphereFrame f = build_contact_frame(1);
  CHECK(lie_bracket(f.horizontal[0], f.horizontal[1]) == Rational(-2) * f.vertical[0]);
  CHECK(lie_bracket(f.horizontal[1], f.horizontal[0]) == Rational(2) * f.vertical[0]);
}
