#pragma once

#include <string>
#include <vector>

#include "nfcert/linalg.hpp"

namespace nfcert {

// An eigenvalue with canonically scaled right eigenvector v and the left
// eigenvector u normalized so that <u, v> = sum conj(u_k) v_k equals 1.
struct EigenPair {
  Complex lambda;
  CVector v;
  CVector u;
};

enum class CaseKind { FoldHopf, DoubleHopf, Unsupported };

struct CaseClassification {
  CaseKind kind = CaseKind::Unsupported;
  std::string reason;  // set when Unsupported

  double omega1 = 0.0;  // FoldHopf frequency, or the smaller DoubleHopf one
  double omega2 = 0.0;  // larger DoubleHopf frequency

  // Eigenpairs recomputed at the snapped eigenvalues {0, +-i*omega...}.
  std::vector<EigenPair> pairs;
  int idx_zero = -1;  // FoldHopf: index of the zero-eigenvalue pair
  int idx_pos1 = -1;  // index of +i*omega1 (or +i*omega for FoldHopf)
  int idx_pos2 = -1;  // index of +i*omega2 (DoubleHopf only)

  double classify_tol = 0.0;
};

// Monic characteristic polynomial det(lambda I - A) computed exactly in the
// rationals-of-doubles sense by the Faddeev-LeVerrier recurrence.  Returns
// {c0, ..., c_{n-1}} for lambda^n + c_{n-1} lambda^{n-1} + ... + c0.
std::vector<double> characteristic_polynomial(const DMatrix& a);

// All complex roots of a monic real polynomial of degree 2..4: closed-form
// quadratic/cubic/quartic solution followed by Newton polishing.
std::vector<Complex> polynomial_roots(const std::vector<double>& monic_low_first);

double default_classify_tol(const DMatrix& a);

// Eigenvalues plus right/left eigenvectors.  Conjugate eigenvalues carry
// conjugate eigenvectors by construction; right eigenvectors are scaled so
// their last nonvanishing component is exactly 1.
std::vector<EigenPair> eigen_decomposition(const DMatrix& a);

// Classifies the spectrum and, when a matrix is supplied, snaps eigenvalues
// onto the exact case pattern and recomputes the eigenvectors there.
CaseClassification classify_case(const std::vector<EigenPair>& pairs,
                                 double classify_tol,
                                 const DMatrix* a = nullptr);

// u' = u / conj(<u,v>) so that <u',v> = 1.
CVector normalize_biorthogonal(const CVector& u, const CVector& v);

double eigen_residual(const DMatrix& a, const EigenPair& p);

}  // namespace nfcert
