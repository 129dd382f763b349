#pragma once

#include <utility>
#include <vector>

#include "nfcert/linalg.hpp"
#include "nfcert/polynomial.hpp"

namespace nfcert {

// Eigenvalues written exactly over the symbol basis {1, i*w1, ..., i*wm},
// where the frequencies are declared pairwise Q-independent by the caller
// (irrationality of ratios is an input assertion, never inferred from floats).
struct SymbolicSpectrum {
  int n = 0;  // number of eigenvalues
  int m = 0;  // number of frequency symbols
  // coeffs[j] has 1+m rationals: the real part, then each i*w coefficient.
  std::vector<std::vector<Rational>> coeffs;
  // Numeric value of each frequency symbol (used only to match a concrete
  // field's linear part; the resonance arithmetic itself is exact).
  std::vector<double> symbol_values;

  static SymbolicSpectrum fold_hopf(double omega = 1.0);     // {0, iw, -iw}
  static SymbolicSpectrum double_hopf(double w1, double w2); // {iw1,-iw1,iw2,-iw2}
  static SymbolicSpectrum single_pair(double omega = 1.0);   // {iw, -iw}

  Complex numeric_eigenvalue(int j) const;
};

struct ResonanceData {
  // Q-basis of the span of all resonance vectors found within the bound,
  // listed in discovery order (degree, nonnegative-first, descending lex).
  std::vector<std::vector<int>> generators;
  int degree = 0;  // dimension over Q of the span, within the bound
  int bound = 0;
};

// Enumerates every p with one entry allowed to be -1, |p|_1 <= bound, p != 0,
// satisfying sum_l p_l lambda_l = 0 exactly in the symbolic arithmetic.
ResonanceData resonance_set(const SymbolicSpectrum& spec, int bound);

int resonance_degree(const SymbolicSpectrum& spec, int bound);

struct PdCheckResult {
  bool ok = false;
  // Offending (component index 0-based, monomial) pairs.
  std::vector<std::pair<int, Mono>> offenders;
};

// True iff every monomial of f obeys the eigenvalue resonance relation
// lambda . m - lambda_j = 0 symbolically.  The linear part must be diagonal
// and must match the spectrum numerically (coordinates already adapted).
PdCheckResult is_pd_normal_form(const PolyVec<Complex>& f,
                                const SymbolicSpectrum& spec,
                                double lin_tol = 1e-9);

}  // namespace nfcert
