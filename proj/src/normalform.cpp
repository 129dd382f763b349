#include "nfcert/normalform.hpp"

#include <cmath>

namespace nfcert {

namespace {

Complex project(const CVector& u, const CVector& w, InnerProduct ip) {
  Complex s(0.0);
  for (size_t k = 0; k < u.size(); ++k)
    s += (ip == InnerProduct::ConjugateFirst) ? std::conj(u[k]) * w[k]
                                              : u[k] * std::conj(w[k]);
  return s;
}

CVector conj_vec(const CVector& v) {
  CVector out(v.size());
  for (size_t k = 0; k < v.size(); ++k) out[k] = std::conj(v[k]);
  return out;
}

}  // namespace

FoldHopfCoeffs fold_hopf_coeffs(const PolyVec<double>& f,
                                const CaseClassification& cls, InnerProduct ip) {
  if (cls.kind != CaseKind::FoldHopf)
    throw Error(ErrorCode::CaseMismatch,
                "fold-Hopf coefficients need a {0, +-i*omega} spectrum");
  if (f.dim != 3)
    throw Error(ErrorCode::DimensionMismatch, "fold-Hopf case lives in dimension 3");

  const EigenPair& p0 = cls.pairs[cls.idx_zero];
  const EigenPair& p1 = cls.pairs[cls.idx_pos1];

  FoldHopfCoeffs out;
  out.omega = cls.omega1;

  CVector b00 = bilinear_form(f, p0.v, p0.v);
  CVector b11c = bilinear_form(f, p1.v, conj_vec(p1.v));
  CVector b01 = bilinear_form(f, p0.v, p1.v);

  Complex k01 = 0.5 * project(p0.u, b00, ip);
  Complex k02 = project(p0.u, b11c, ip);
  Complex k11 = project(p1.u, b01, ip);

  out.imag_residual = std::max(std::abs(k01.imag()), std::abs(k02.imag()));
  double scale = 1.0 + std::max(std::abs(k01), std::abs(k02));
  if (out.imag_residual > 1e-10 * scale)
    throw Error(ErrorCode::IllConditioned,
                "kappa01/kappa02 acquired a non-negligible imaginary part");

  out.kappa01 = k01.real();
  out.kappa02 = k02.real();
  out.kappa11 = k11;
  out.alpha = {k11.real(), k11.imag(), out.kappa02, out.kappa01};
  return out;
}

DoubleHopfCoeffs double_hopf_coeffs(const PolyVec<double>& f,
                                    const CaseClassification& cls,
                                    InnerProduct ip) {
  if (cls.kind != CaseKind::DoubleHopf)
    throw Error(ErrorCode::CaseMismatch,
                "double-Hopf coefficients need a {+-i*omega1, +-i*omega2} spectrum");
  if (f.dim != 4)
    throw Error(ErrorCode::DimensionMismatch, "double-Hopf case lives in dimension 4");

  PolyVec<double> quad = homogeneous_component(f, 2);
  if (!quad.is_zero())
    throw Error(ErrorCode::QuadraticTermsPresent,
                "the cubic coefficient formulas require a vanishing quadratic part");

  const EigenPair& p1 = cls.pairs[cls.idx_pos1];
  const EigenPair& p2 = cls.pairs[cls.idx_pos2];
  CVector v1c = conj_vec(p1.v), v2c = conj_vec(p2.v);

  DoubleHopfCoeffs out;
  out.omega1 = cls.omega1;
  out.omega2 = cls.omega2;

  out.kappa11 = 0.5 * project(p1.u, trilinear_form(f, p1.v, p1.v, v1c), ip);
  out.kappa12 = project(p1.u, trilinear_form(f, p1.v, p2.v, v2c), ip);
  out.kappa21 = project(p2.u, trilinear_form(f, p1.v, v1c, p2.v), ip);
  out.kappa22 = 0.5 * project(p2.u, trilinear_form(f, p2.v, p2.v, v2c), ip);

  out.alpha = {out.kappa11.real(), out.kappa12.real(), out.kappa21.real(),
               out.kappa22.real()};
  out.beta = {out.kappa11.imag(), out.kappa12.imag(), out.kappa21.imag(),
              out.kappa22.imag()};
  return out;
}

}  // namespace nfcert
