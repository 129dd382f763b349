#include "nfcert/families.hpp"

#include <cmath>

#include "nfcert/polynomial.hpp"

namespace nfcert {

namespace {

Mono mono3(int e0, int e1, int e2) {
  Mono m;
  m[0] = e0;
  m[1] = e1;
  m[2] = e2;
  return m;
}

Mono mono4(int e0, int e1, int e2, int e3) {
  Mono m;
  m[0] = e0;
  m[1] = e1;
  m[2] = e2;
  m[3] = e3;
  return m;
}

template <class K>
PolyVec<K> rossler_build(const K& a) {
  PolyVec<K> f(3);
  f.comp[0].add_term(mono3(0, 1, 0), K(-1));
  f.comp[0].add_term(mono3(0, 0, 1), K(-1));
  f.comp[1].add_term(mono3(1, 0, 0), K(1));
  f.comp[1].add_term(mono3(0, 1, 0), a);
  f.comp[2].add_term(mono3(1, 0, 0), K(1));
  f.comp[2].add_term(mono3(1, 0, 1), K(1));
  f.comp[2].add_term(mono3(0, 0, 1), K(-1) * a);
  return f;
}

template <class K>
PolyVec<K> vdp_build(const K& c, const K& b1, const K& b2, const K& a1,
                     const K& a2) {
  PolyVec<K> f(4);
  f.comp[0].add_term(mono4(0, 1, 0, 0), K(1));
  f.comp[1].add_term(mono4(1, 0, 0, 0), K(-1));
  f.comp[1].add_term(mono4(0, 0, 1, 0), b1);
  f.comp[1].add_term(mono4(2, 1, 0, 0), K(-1) * a1);
  f.comp[2].add_term(mono4(0, 0, 0, 1), K(1));
  f.comp[3].add_term(mono4(1, 0, 0, 0), b2);
  f.comp[3].add_term(mono4(0, 0, 1, 0), K(-1) * c);
  f.comp[3].add_term(mono4(0, 0, 2, 1), K(-1) * a2);
  return f;
}

}  // namespace

FieldData rossler_field(const Rational& a) {
  if (a * a >= 2)
    throw Error(ErrorCode::DomainError,
                "omega undefined: the family needs a^2 < 2");
  FieldData fd;
  fd.exact = rossler_build(a);
  fd.field = to_double_field(*fd.exact);
  return fd;
}

FieldData rossler_field_numeric(double a) {
  if (!(a * a < 2.0))
    throw Error(ErrorCode::DomainError,
                "omega undefined: the family needs a^2 < 2");
  FieldData fd;
  fd.field = rossler_build(a);
  return fd;
}

RosslerClosedForm rossler_closed_form(double a) {
  double wsq = 2.0 - a * a;
  if (!(wsq > 0.0))
    throw Error(ErrorCode::DomainError,
                "omega undefined: the family needs a^2 < 2");
  RosslerClosedForm cf;
  cf.a = a;
  cf.omega = std::sqrt(wsq);
  cf.alpha = {-a * a * a / (2.0 * wsq), (a * a + 1.0) / (2.0 * cf.omega),
              2.0 * a / wsq, a / wsq};
  return cf;
}

RosslerClosedForm rossler_closed_form(const Rational& a) {
  RosslerClosedForm cf = rossler_closed_form(to_double(a));
  cf.exact = true;
  cf.omega_sq = 2 - a * a;
  cf.alpha1_times_wsq = -a * a * a / 2;
  cf.alpha2_times_w = (a * a + 1) / 2;
  cf.alpha3_times_wsq = 2 * a;
  cf.alpha4_times_wsq = a;
  if (a != 0) cf.exact_ratio = Rational(-2) / (a * a);
  return cf;
}

FieldData vdp_field(const VdpParams& p) {
  if (!(p.a1 > 0 && p.a2 > 0 && p.b1 > 0 && p.b2 > 0))
    throw Error(ErrorCode::DomainError,
                "the family needs a1, a2, b1, b2 > 0");
  if (!(p.c > 1))
    throw Error(ErrorCode::DomainError, "the family needs c > 1");
  if (!(p.b1 * p.b2 < p.c))
    throw Error(ErrorCode::DomainError, "the family needs b1*b2 < c");
  FieldData fd;
  fd.exact = vdp_build(p.c, p.b1, p.b2, p.a1, p.a2);
  fd.field = to_double_field(*fd.exact);
  return fd;
}

VdpClosedForm vdp_closed_form(const VdpParams& p) {
  if (!(p.a1 > 0 && p.a2 > 0 && p.b1 > 0 && p.b2 > 0))
    throw Error(ErrorCode::DomainError,
                "the family needs a1, a2, b1, b2 > 0");
  if (!(p.c > 1))
    throw Error(ErrorCode::DomainError, "the family needs c > 1");
  if (!(p.b1 * p.b2 < p.c))
    throw Error(ErrorCode::DomainError, "the family needs b1*b2 < c");

  QuadExt s = QuadExt::sqrt_of((p.c - 1) * (p.c - 1) + 4 * p.b1 * p.b2);
  QuadExt one{Rational(1)};
  QuadExt two{Rational(2)};
  QuadExt cp1{p.c + 1};
  QuadExt w1sq = (cp1 - s) / two;
  QuadExt w2sq = (cp1 + s) / two;
  if (w1sq.sign() <= 0)
    throw Error(ErrorCode::Degenerate, "omega1^2 is not positive");
  QuadExt e1 = w1sq - one;  // omega1^2 - 1
  QuadExt e2 = w2sq - one;  // omega2^2 - 1
  QuadExt dw = w2sq - w1sq;
  if (e1.is_zero() || e2.is_zero() || dw.is_zero())
    throw Error(ErrorCode::Degenerate,
                "a closed-form denominator vanishes for these parameters");

  QuadExt A1{p.a1 * p.b1}, A2{p.a2 * p.b2}, B2{p.b2};
  VdpClosedForm cf;
  cf.omega1_sq = w1sq;
  cf.omega2_sq = w2sq;
  cf.omega1 = std::sqrt(w1sq.value());
  cf.omega2 = std::sqrt(w2sq.value());

  cf.alpha_exact[0] =
      (A1 * e2 * e2 + A2 * e1 * e1) / (two * B2 * w1sq * e1 * dw);
  cf.alpha_exact[1] = (e1 * (A1 + A2)) / (B2 * w2sq * dw);
  cf.alpha_exact[2] = -(e2 * (A1 + A2)) / (B2 * w1sq * dw);
  cf.alpha_exact[3] =
      -(A1 * e1 * e1 + A2 * e2 * e2) / (two * B2 * w2sq * e2 * dw);
  for (int i = 0; i < 4; ++i) cf.alpha[i] = cf.alpha_exact[i].value();

  if (!cf.alpha_exact[3].is_zero()) {
    QuadExt ratio = cf.alpha_exact[1] / cf.alpha_exact[3];
    if (ratio.is_rational()) cf.exact_ratio = ratio.a;
  }
  return cf;
}

}  // namespace nfcert
