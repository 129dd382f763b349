#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "nfcert/planar.hpp"
#include "nfcert/polynomial.hpp"
#include "nfcert/rational.hpp"

namespace nfcert {

// Result of an exact-fraction nullspace search.  Depending on the search,
// either `integrals` (scalar polynomials) or `fields` (vector fields) is
// populated.  Bases are canonical: reduced row-echelon over the graded-lex
// monomial order, integer-primitive, positive leading coefficient.
struct NullspaceResult {
  int degree_bound = 0;
  std::vector<RationalPoly> integrals;
  std::vector<RationalVec> fields;
  int quotient_dim = -1;  // commuting-field search only
  std::string quotient_note;
};

// All polynomial F with 1 <= deg F <= d and grad(F).p identically zero.
// Constants are excluded from the search space.  Every basis element is
// re-substituted and checked exactly before being returned.
NullspaceResult polynomial_first_integrals(const RationalVec& p, int d,
                                           int max_degree = 10);

// All polynomial fields q with deg q <= d and [q,p] identically zero.  The
// always-present solution q = c*p is separated out: quotient_dim is the
// dimension of the solution space modulo multiples of p.
NullspaceResult polynomial_commuting_fields(const RationalVec& p, int d,
                                            int max_degree = 10);

// Mirrors the leading-order contradiction argument for the planar reductions.
// With p the planar field and Delta the prescribed determinant polynomial
// (free constant C), the report records:
//   * the unique linear solution q of det(p,q) = Delta at C = 1 (generic case),
//     which must be a multiple of the Euler field (x, y);
//   * the exact leading bracket [q,p] = bracket_factor * p, whose
//     non-vanishing is the obstruction;
//   * the verdict of the combined feasibility system
//       det(p,q) = C*Delta,  [q,p] = 0,  C != 0,
//     which decides obstruction_holds in all cases, including parameter sets
//     where the leading solve is singular.  If a commuting q matches the
//     prescription, it is returned as `witness` with its constant C.
struct ObstructionReport {
  PlanarKind kind = PlanarKind::Case1;
  std::array<Rational, 4> alpha{};  // slots (a1,a2,a3,a4); Case1 ignores a2
  RationalPoly delta;               // Delta at C = 1
  bool generic = false;             // leading solve was nonsingular
  std::optional<RationalVec> q_leading;  // solved q at C = 1
  Rational euler_factor;            // q_leading = euler_factor * (x, y)
  Rational bracket_factor;          // [q_leading, p] = bracket_factor * p
  RationalVec bracket_leading{2};
  bool obstruction_holds = false;
  std::optional<RationalVec> witness;
  Rational witness_c;
  std::vector<int> higher_kernel_dims;  // dim{q_m : det(p,q_m)=0}, m = 2..d
  std::vector<std::string> notes;
};

ObstructionReport commuter_obstruction_case1(const std::array<Rational, 3>& a13,
                                             int d = 3);
ObstructionReport commuter_obstruction_case2(const std::array<Rational, 4>& a,
                                             int d = 3);

// Best rational approximation p/q with q <= qmax (continued-fraction
// convergent), together with the achieved absolute residual.
struct SnappedRational {
  Rational value;
  double residual = 0.0;
};
SnappedRational snap_to_rational(double x, long long qmax = 1000000);

}  // namespace nfcert
