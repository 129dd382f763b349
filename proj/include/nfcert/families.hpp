#pragma once

#include <array>
#include <optional>

#include "nfcert/quadext.hpp"
#include "nfcert/vectorfield.hpp"

namespace nfcert {

// Built-in example family A (3D, fold-Hopf at the origin):
//   x1' = -(x2 + x3),  x2' = x1 + a*x2,  x3' = x1 + x1*x3 - a*x3
// The degenerate spectrum {0, +-i*omega} requires a^2 < 2, with
// omega^2 = 2 - a^2.
FieldData rossler_field(const Rational& a);
FieldData rossler_field_numeric(double a);

// Closed-form normal-form coefficients of the family:
//   alpha1 = -a^3/(2 w^2), alpha2 = (a^2+1)/(2 w),
//   alpha3 = 2a/w^2,       alpha4 = a/w^2,          w^2 = 2 - a^2.
// For exact-rational a the rational data (w^2, the alpha_i scaled by w or
// w^2, and the ratio alpha4/alpha1 = -2/a^2) is carried exactly.
struct RosslerClosedForm {
  double a = 0;
  double omega = 0;
  std::array<double, 4> alpha{};
  bool exact = false;
  Rational omega_sq;               // 2 - a^2
  Rational alpha1_times_wsq;       // -a^3/2
  Rational alpha2_times_w;         // (a^2+1)/2
  Rational alpha3_times_wsq;       // 2a
  Rational alpha4_times_wsq;       // a
  std::optional<Rational> exact_ratio;  // alpha4/alpha1
};
RosslerClosedForm rossler_closed_form(double a);
RosslerClosedForm rossler_closed_form(const Rational& a);

// Built-in example family B (4D, double-Hopf at the origin): two van der Pol
// oscillators with linear cross-coupling and zero linear damping,
//   x1' = x2,  x2' = -x1 + b1*x3 - a1*x1^2*x2,
//   x3' = x4,  x4' = b2*x1 - c*x3 - a2*x3^2*x4.
// Requires a1, a2, b1, b2 > 0, c > 1, b1*b2 < c.
struct VdpParams {
  Rational c, b1, b2, a1, a2;
};
FieldData vdp_field(const VdpParams& p);

// Closed-form coefficients of family B.  With
//   s = sqrt((c-1)^2 + 4 b1 b2),  w1^2 = (c+1-s)/2,  w2^2 = (c+1+s)/2,
// the alpha_i live in the quadratic extension Q[s] and the beta_i vanish.
struct VdpClosedForm {
  QuadExt omega1_sq, omega2_sq;
  double omega1 = 0, omega2 = 0;
  std::array<QuadExt, 4> alpha_exact{};
  std::array<double, 4> alpha{};
  std::optional<Rational> exact_ratio;  // alpha2/alpha4 when it is rational
};
VdpClosedForm vdp_closed_form(const VdpParams& p);

}  // namespace nfcert
