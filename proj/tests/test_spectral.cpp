#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "nfcert/families.hpp"
#include "nfcert/spectral.hpp"
#include "nfcert/vectorfield.hpp"

using namespace nfcert;

namespace {

DMatrix jac(const FieldData& fd) { return jacobian_at_origin(fd.field); }

// smallest |lambda - target| over the computed spectrum
double closest(const std::vector<EigenPair>& ps, Complex target) {
  double best = 1e300;
  for (const auto& p : ps) best = std::min(best, std::abs(p.lambda - target));
  return best;
}

}  // namespace

TEST_CASE("characteristic polynomial by trace recurrence") {
  // family A at a = 1: eigenvalues {0, +-i}, so chi = l^3 + l
  auto a = jac(rossler_field_numeric(1.0));
  auto c = characteristic_polynomial(a);  // {c0, c1, c2}
  REQUIRE(c.size() == 3);
  CHECK(c[0] == doctest::Approx(0.0).epsilon(1e-14));
  CHECK(c[1] == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(c[2] == doctest::Approx(0.0).epsilon(1e-14));

  // 2x2 rotation: l^2 + 1
  DMatrix rot{{0, -1}, {1, 0}};
  auto cr = characteristic_polynomial(rot);
  CHECK(cr[0] == doctest::Approx(1.0));
  CHECK(cr[1] == doctest::Approx(0.0));
}

TEST_CASE("closed-form roots of low-degree monic polynomials") {
  // l^3 + l = 0 -> {0, +-i}
  auto roots = polynomial_roots({0.0, 1.0, 0.0});
  REQUIRE(roots.size() == 3);
  auto near = [&](Complex t) {
    return std::any_of(roots.begin(), roots.end(),
                       [&](Complex r) { return std::abs(r - t) < 1e-12; });
  };
  CHECK(near(Complex(0, 0)));
  CHECK(near(Complex(0, 1)));
  CHECK(near(Complex(0, -1)));

  // quartic (l^2+1)(l^2+2)
  auto q = polynomial_roots({2.0, 0.0, 3.0, 0.0});
  REQUIRE(q.size() == 4);
  auto nearq = [&](Complex t) {
    return std::any_of(q.begin(), q.end(),
                       [&](Complex r) { return std::abs(r - t) < 1e-10; });
  };
  CHECK(nearq(Complex(0, 1)));
  CHECK(nearq(Complex(0, std::sqrt(2.0))));
}

TEST_CASE("eigen decomposition of the degenerate family A spectrum") {
  for (double a : {0.3, 0.9, 1.2}) {
    CAPTURE(a);
    auto m = jac(rossler_field_numeric(a));
    auto pairs = eigen_decomposition(m);
    REQUIRE(pairs.size() == 3);

    double w = std::sqrt(2.0 - a * a);
    CHECK(closest(pairs, Complex(0, 0)) < 1e-10);
    CHECK(closest(pairs, Complex(0, w)) < 1e-10);
    CHECK(closest(pairs, Complex(0, -w)) < 1e-10);

    double scale = 1e-10 * (1.0 + linalg::inf_norm(m));
    for (const auto& p : pairs) {
      CHECK(eigen_residual(m, p) <= scale);
      // left/right pairs are biorthonormal
      Complex ip = linalg::inner(p.u, p.v);
      CHECK(std::abs(ip - Complex(1, 0)) <= 1e-12);
      // right eigenvectors end in an exact 1 (canonical scale)
      CHECK(p.v.back() == Complex(1, 0));
    }
  }
  // frequency value at a = 9/10
  auto m = jac(rossler_field_numeric(0.9));
  auto cls = classify_case(eigen_decomposition(m), default_classify_tol(m), &m);
  CHECK(cls.omega1 == doctest::Approx(1.0908712114635715).epsilon(1e-14));
}

TEST_CASE("eigen decomposition of the family B spectrum") {
  VdpParams vp{Rational(2), Rational(1, 2), Rational(1, 2), Rational(1), Rational(1)};
  auto m = jacobian_at_origin(vdp_field(vp).field);
  auto pairs = eigen_decomposition(m);
  REQUIRE(pairs.size() == 4);

  // w1^2 = (3 - sqrt 2)/2, w2^2 = (3 + sqrt 2)/2
  double w1 = std::sqrt((3.0 - std::sqrt(2.0)) / 2.0);
  double w2 = std::sqrt((3.0 + std::sqrt(2.0)) / 2.0);
  CHECK(closest(pairs, Complex(0, w1)) < 1e-10);
  CHECK(closest(pairs, Complex(0, -w1)) < 1e-10);
  CHECK(closest(pairs, Complex(0, w2)) < 1e-10);
  CHECK(closest(pairs, Complex(0, -w2)) < 1e-10);

  double scale = 1e-10 * (1.0 + linalg::inf_norm(m));
  for (const auto& p : pairs) {
    CHECK(eigen_residual(m, p) <= scale);
    CHECK(std::abs(linalg::inner(p.u, p.v) - Complex(1, 0)) <= 1e-12);
  }
}

TEST_CASE("defective matrices are rejected") {
  DMatrix nil{{0, 1}, {0, 0}};
  CHECK_THROWS_AS(eigen_decomposition(nil), Error);
  try {
    eigen_decomposition(nil);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::DefectiveMatrix);
  }
}

TEST_CASE("case classification snaps onto the degenerate patterns") {
  // {0, +-i}: zero/pair case in dimension 3
  auto m3 = jac(rossler_field_numeric(1.0));
  auto c3 = classify_case(eigen_decomposition(m3), default_classify_tol(m3), &m3);
  CHECK(c3.kind == CaseKind::FoldHopf);
  CHECK(c3.omega1 == doctest::Approx(1.0).epsilon(1e-12));
  REQUIRE(c3.idx_zero >= 0);
  REQUIRE(c3.idx_pos1 >= 0);
  CHECK(c3.pairs[c3.idx_zero].lambda == Complex(0, 0));
  CHECK(c3.pairs[c3.idx_pos1].lambda.imag() > 0);

  // {+-i, +-i sqrt2}: two-pair case in dimension 4
  DMatrix m4{{0, -1, 0, 0}, {1, 0, 0, 0}, {0, 0, 0, -std::sqrt(2.0)}, {0, 0, std::sqrt(2.0), 0}};
  auto c4 = classify_case(eigen_decomposition(m4), default_classify_tol(m4), &m4);
  CHECK(c4.kind == CaseKind::DoubleHopf);
  CHECK(c4.omega1 == doctest::Approx(1.0));
  CHECK(c4.omega2 == doctest::Approx(std::sqrt(2.0)));
  CHECK(c4.omega1 < c4.omega2);
  REQUIRE(c4.idx_pos2 >= 0);

  // a hyperbolic direction disqualifies both patterns
  DMatrix bad{{1, 0, 0}, {0, 0, -1}, {0, 1, 0}};
  auto cb = classify_case(eigen_decomposition(bad), default_classify_tol(bad), &bad);
  CHECK(cb.kind == CaseKind::Unsupported);
  CHECK(cb.reason.find("nonzero real part") != std::string::npos);

  // coincident frequencies collapse two eigenvalues and are refused early
  DMatrix meq{{0, -1, 0, 0}, {1, 0, 0, 0}, {0, 0, 0, -1}, {0, 0, 1, 0}};
  try {
    eigen_decomposition(meq);
    FAIL("expected a repeated-eigenvalue rejection");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::IllConditioned);
  }
}

TEST_CASE("biorthogonal normalization") {
  // family A at a, the zero-eigenvalue pair has closed-form vectors:
  // v0 = (a, -1, 1), u0 = (-a, -1, 1)/w^2, already <u0, v0> = 1
  double a = 0.9, w2 = 2.0 - a * a;
  CVector v0{Complex(a), Complex(-1), Complex(1)};
  CVector u0{Complex(-a / w2), Complex(-1 / w2), Complex(1 / w2)};
  Complex ip = linalg::inner(u0, v0);
  CHECK(std::abs(ip - Complex(1, 0)) < 1e-15);

  // rescaling the left vector is undone exactly
  CVector u2{2.0 * u0[0], 2.0 * u0[1], 2.0 * u0[2]};
  CVector back = normalize_biorthogonal(u2, v0);
  for (int k = 0; k < 3; ++k) CHECK(std::abs(back[k] - u0[k]) < 1e-15);

  // orthogonal vectors cannot be normalized
  CVector e1{Complex(1), Complex(0)}, e2{Complex(0), Complex(1)};
  CHECK_THROWS_AS(normalize_biorthogonal(e1, e2), Error);
  try {
    normalize_biorthogonal(e1, e2);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::BiorthogonalityFailure);
  }
}
