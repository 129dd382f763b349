#pragma once

#include <array>

#include "nfcert/polynomial.hpp"
#include "nfcert/spectral.hpp"

namespace nfcert {

// Inner-product convention used when projecting onto left eigenvectors.
// ConjugateFirst means <u,v> = sum conj(u_k) v_k (the default; validated by
// the closed-form reproduction tests on the built-in families).
enum class InnerProduct { ConjugateFirst, ConjugateSecond };

struct FoldHopfCoeffs {
  double omega = 0.0;
  double kappa01 = 0.0;   // = alpha4
  double kappa02 = 0.0;   // = alpha3
  Complex kappa11{0.0, 0.0};
  std::array<double, 4> alpha{0, 0, 0, 0};
  double imag_residual = 0.0;  // largest dropped imaginary part of kappa01/02
};

struct DoubleHopfCoeffs {
  double omega1 = 0.0, omega2 = 0.0;
  Complex kappa11{0, 0}, kappa12{0, 0}, kappa21{0, 0}, kappa22{0, 0};
  std::array<double, 4> alpha{0, 0, 0, 0};  // real parts
  std::array<double, 4> beta{0, 0, 0, 0};   // imaginary parts
};

// kappa01 = 1/2 <u0, B(v0,v0)>, kappa02 = <u0, B(v1, conj(v1))>,
// kappa11 = <u1, B(v0, v1)>; then alpha = (Re k11, Im k11, k02, k01).
FoldHopfCoeffs fold_hopf_coeffs(const PolyVec<double>& f,
                                const CaseClassification& cls,
                                InnerProduct ip = InnerProduct::ConjugateFirst);

// Requires a vanishing quadratic Taylor part.  kappa11 = 1/2 <u1, C(v1,v1,conj v1)>,
// kappa12 = <u1, C(v1,v2,conj v2)>, kappa21 = <u2, C(v1,conj v1,v2)>,
// kappa22 = 1/2 <u2, C(v2,v2,conj v2)>; alpha/beta are their re/im parts.
DoubleHopfCoeffs double_hopf_coeffs(const PolyVec<double>& f,
                                    const CaseClassification& cls,
                                    InnerProduct ip = InnerProduct::ConjugateFirst);

}  // namespace nfcert
