#include "nfcert/oracle.hpp"

#include <algorithm>
#include <map>

#include "nfcert/criteria.hpp"
#include "nfcert/linalg.hpp"

namespace nfcert {

namespace {

constexpr int kMaxUnknowns = 3000;
constexpr int kMaxRows = 8000;

void enumerate_rec(int nvars, int pos, int budget, Mono& cur,
                   std::vector<Mono>& out) {
  if (pos == nvars) {
    out.push_back(cur);
    return;
  }
  for (int e = 0; e <= budget; ++e) {
    cur[pos] = e;
    enumerate_rec(nvars, pos + 1, budget - e, cur, out);
  }
  cur[pos] = 0;
}

// All monomials in nvars variables with lo <= degree <= hi, graded-lex order.
std::vector<Mono> monomials_between(int nvars, int lo, int hi) {
  std::vector<Mono> all;
  Mono cur;
  enumerate_rec(nvars, 0, hi, cur, all);
  std::vector<Mono> out;
  for (const Mono& m : all)
    if (m.degree() >= lo) out.push_back(m);
  std::sort(out.begin(), out.end(), GradedLexDesc{});
  return out;
}

// Scales a rational row to coprime integers with a positive first nonzero
// entry (in the given column order).
void make_primitive(std::vector<Rational>& row) {
  BigInt l = 1;
  for (const Rational& x : row)
    if (x != 0) l = boost::multiprecision::lcm(l, den(x));
  BigInt g = 0;
  for (Rational& x : row) {
    x *= Rational(l);
    g = boost::multiprecision::gcd(g, num(x));
  }
  if (g == 0) return;
  for (Rational& x : row) x /= Rational(g);
  for (const Rational& x : row) {
    if (x == 0) continue;
    if (x < 0)
      for (Rational& y : row) y = -y;
    break;
  }
}

// Canonical basis of the row space: reduced row echelon over the given
// column order, integer-primitive rows, positive leading coefficients.
std::vector<std::vector<Rational>> canonical_rows(
    std::vector<std::vector<Rational>> rows) {
  if (rows.empty()) return rows;
  linalg::rref_rows(rows, 0.0);
  std::vector<std::vector<Rational>> out;
  for (auto& r : rows) {
    bool nz = false;
    for (const Rational& x : r) nz = nz || x != 0;
    if (!nz) continue;
    make_primitive(r);
    out.push_back(std::move(r));
  }
  return out;
}

RationalPoly mono_poly(const Mono& m, const Rational& c) {
  RationalPoly p;
  p.add_term(m, c);
  return p;
}

// grad(x^m) . p
RationalPoly directional_derivative(const Mono& m, const RationalVec& p) {
  RationalPoly g;
  for (int j = 0; j < p.dim; ++j) {
    if (m[j] == 0) continue;
    Mono mm = m;
    mm[j] -= 1;
    g += mono_poly(mm, Rational(m[j])) * p.comp[j];
  }
  return g;
}

void check_search_size(long long cols, long long rows) {
  if (cols > kMaxUnknowns || rows > kMaxRows)
    throw Error(ErrorCode::TooLarge,
                "linear system exceeds the configured size limit (" +
                    std::to_string(cols) + " unknowns, " +
                    std::to_string(rows) + " equations)");
}

void validate_search_input(const RationalVec& p, int d, int max_degree) {
  if (p.dim < 2 || p.dim > 4)
    throw Error(ErrorCode::DimensionMismatch,
                "searches support dimensions 2 through 4");
  if (p.is_zero())
    throw Error(ErrorCode::EmptyField, "the vector field is identically zero");
  if (d < 1)
    throw Error(ErrorCode::DomainError, "degree bound must be at least 1");
  if (d > max_degree)
    throw Error(ErrorCode::TooLarge,
                "degree bound " + std::to_string(d) +
                    " exceeds the configured maximum " +
                    std::to_string(max_degree));
}

}  // namespace

NullspaceResult polynomial_first_integrals(const RationalVec& p, int d,
                                           int max_degree) {
  validate_search_input(p, d, max_degree);
  const int n = p.dim;
  std::vector<Mono> cols = monomials_between(n, 1, d);

  // Column polynomials grad(x^m).p and the union of their supports.
  std::vector<RationalPoly> colpoly;
  colpoly.reserve(cols.size());
  std::map<Mono, int, GradedLexDesc> row_of;
  for (const Mono& m : cols) {
    RationalPoly g = directional_derivative(m, p);
    for (const auto& [rm, c] : g.terms()) row_of.emplace(rm, 0);
    colpoly.push_back(std::move(g));
  }
  int idx = 0;
  for (auto& [rm, i] : row_of) i = idx++;
  check_search_size(static_cast<long long>(cols.size()),
                    static_cast<long long>(row_of.size()));

  std::vector<std::vector<Rational>> a(
      row_of.size(), std::vector<Rational>(cols.size(), Rational(0)));
  for (size_t j = 0; j < cols.size(); ++j)
    for (const auto& [rm, c] : colpoly[j].terms())
      a[row_of.at(rm)][j] = c;

  std::vector<std::vector<Rational>> basis = linalg::nullspace(a, 0.0);
  basis = canonical_rows(std::move(basis));

  NullspaceResult res;
  res.degree_bound = d;
  for (const auto& row : basis) {
    RationalPoly f;
    for (size_t j = 0; j < cols.size(); ++j)
      if (row[j] != 0) f.add_term(cols[j], row[j]);
    RationalPoly check;
    for (const auto& [m, c] : f.terms())
      check += c * directional_derivative(m, p);
    if (!check.is_zero())
      throw Error(ErrorCode::IllConditioned,
                  "internal consistency failure: candidate integral does not "
                  "annihilate the field");
    res.integrals.push_back(std::move(f));
  }
  res.quotient_note = "constants are excluded from the search space";
  return res;
}

NullspaceResult polynomial_commuting_fields(const RationalVec& p, int d,
                                            int max_degree) {
  validate_search_input(p, d, max_degree);
  const int n = p.dim;
  std::vector<Mono> monos = monomials_between(n, 0, d);
  const long long ncols = static_cast<long long>(n) * monos.size();

  // Jacobian entries of p, needed for every column.
  std::vector<std::vector<RationalPoly>> dp(n, std::vector<RationalPoly>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) dp[i][j] = p.comp[i].derivative(j);

  // Column (j, m) carries the bracket of the unit field x^m e_j with p:
  //   [q,p]_i = dp_i/dx_j * x^m  -  delta_ij * grad(x^m).p
  std::vector<std::map<Mono, int, GradedLexDesc>> row_of(n);
  std::vector<std::vector<RationalPoly>> colbr;  // per column, n components
  colbr.reserve(ncols);
  for (int j = 0; j < n; ++j) {
    for (const Mono& m : monos) {
      std::vector<RationalPoly> b(n);
      RationalPoly xm = mono_poly(m, Rational(1));
      for (int i = 0; i < n; ++i) b[i] = dp[i][j] * xm;
      b[j] -= directional_derivative(m, p);
      for (int i = 0; i < n; ++i)
        for (const auto& [rm, c] : b[i].terms()) row_of[i].emplace(rm, 0);
      colbr.push_back(std::move(b));
    }
  }
  long long nrows = 0;
  for (int i = 0; i < n; ++i) {
    for (auto& [rm, r] : row_of[i]) r = static_cast<int>(nrows++);
  }
  check_search_size(ncols, nrows);

  std::vector<std::vector<Rational>> a(
      nrows, std::vector<Rational>(ncols, Rational(0)));
  for (long long col = 0; col < ncols; ++col)
    for (int i = 0; i < n; ++i)
      for (const auto& [rm, c] : colbr[col][i].terms())
        a[row_of[i].at(rm)][col] = c;

  std::vector<std::vector<Rational>> basis = linalg::nullspace(a, 0.0);
  basis = canonical_rows(std::move(basis));

  NullspaceResult res;
  res.degree_bound = d;
  for (const auto& row : basis) {
    RationalVec q(n);
    for (int j = 0; j < n; ++j)
      for (size_t t = 0; t < monos.size(); ++t) {
        const Rational& c = row[j * monos.size() + t];
        if (c != 0) q.comp[j].add_term(monos[t], c);
      }
    if (!lie_bracket(q, p).is_zero())
      throw Error(ErrorCode::IllConditioned,
                  "internal consistency failure: candidate field does not "
                  "commute");
    res.fields.push_back(std::move(q));
  }

  // Factor out the always-present family q = c*p.
  int nullity = static_cast<int>(res.fields.size());
  bool p_in_space = p.degree() <= d;
  if (p_in_space && nullity > 0) {
    std::vector<std::vector<Rational>> stacked = basis;
    std::vector<Rational> prow(ncols, Rational(0));
    for (int j = 0; j < n; ++j)
      for (size_t t = 0; t < monos.size(); ++t)
        prow[j * monos.size() + t] = p.comp[j].coeff(monos[t]);
    stacked.push_back(prow);
    bool in_span = linalg::rank(stacked, 0.0) == nullity;
    res.quotient_dim = nullity - (in_span ? 1 : 0);
    res.quotient_note =
        in_span ? "the trivial family q = c*p accounts for one dimension"
                : "p is not in the solution span (unexpected)";
  } else {
    res.quotient_dim = nullity;
    res.quotient_note =
        p_in_space ? "empty solution space"
                   : "deg p exceeds the bound, so q = c*p is outside the "
                     "search space and nothing was factored out";
  }
  return res;
}

// ---------------------------------------------------------------------------
// Commuter obstruction for the planar reductions.

namespace {

Mono mono2(int e0, int e1) {
  Mono m;
  m[0] = e0;
  m[1] = e1;
  return m;
}

RationalVec linear_field(const std::array<Rational, 4>& abcd) {
  RationalVec q(2);
  q.comp[0].add_term(mono2(1, 0), abcd[0]);
  q.comp[0].add_term(mono2(0, 1), abcd[1]);
  q.comp[1].add_term(mono2(1, 0), abcd[2]);
  q.comp[1].add_term(mono2(0, 1), abcd[3]);
  return q;
}

RationalPoly det_pq(const RationalVec& p, const RationalVec& q) {
  return p.comp[0] * q.comp[1] - p.comp[1] * q.comp[0];
}

// bracket == f * p for some scalar f?
std::optional<Rational> proportionality_factor(const RationalVec& b,
                                               const RationalVec& p) {
  if (b.is_zero()) return Rational(0);
  for (int i = 0; i < p.dim; ++i) {
    for (const auto& [m, c] : p.comp[i].terms()) {
      Rational f = b.comp[i].coeff(m) / c;
      RationalVec fp(p.dim);
      for (int j = 0; j < p.dim; ++j) fp.comp[j] = f * p.comp[j];
      if (fp == b) return f;
      return std::nullopt;
    }
  }
  return std::nullopt;
}

ObstructionReport obstruction_impl(PlanarKind kind,
                                   const std::array<Rational, 4>& al, int d) {
  if (d < 1)
    throw Error(ErrorCode::DomainError, "degree bound must be at least 1");
  const Rational &a1 = al[0], &a2 = al[1], &a3 = al[2], &a4 = al[3];

  ObstructionReport rep;
  rep.kind = kind;
  rep.alpha = al;

  RationalVec p(2);
  RationalPoly delta;
  int k = 0;  // homogeneity degree of p
  if (kind == PlanarKind::Case1) {
    if (a1 == 0)
      throw Error(ErrorCode::Degenerate,
                  "alpha1 = 0: the radial equation degenerates");
    p = planar_case1_exact(a1, a3, a4);
    k = 2;
    delta.add_term(mono2(3, 0), a3);
    delta.add_term(mono2(1, 2), a4 - a1);
    if (delta.is_zero())
      throw Error(ErrorCode::Degenerate,
                  "determinant prescription is identically zero "
                  "(alpha3 = 0 and alpha4 = alpha1)");
  } else {
    if (a1 == a3)
      throw Error(ErrorCode::Degenerate,
                  "alpha1 = alpha3: determinant prescription undefined");
    if (a2 == a4)
      throw Error(ErrorCode::Degenerate,
                  "alpha2 = alpha4: determinant prescription undefined");
    p = planar_case2_exact(a1, a2, a3, a4);
    k = 3;
    delta.add_term(mono2(3, 1), Rational(1) / (a2 - a4));
    delta.add_term(mono2(1, 3), Rational(1) / (a1 - a3));
  }
  rep.delta = delta;

  // Unit linear fields in unknown order (a, b, c, d).
  std::array<RationalVec, 4> units = {
      linear_field({Rational(1), Rational(0), Rational(0), Rational(0)}),
      linear_field({Rational(0), Rational(1), Rational(0), Rational(0)}),
      linear_field({Rational(0), Rational(0), Rational(1), Rational(0)}),
      linear_field({Rational(0), Rational(0), Rational(0), Rational(1)})};
  std::array<RationalPoly, 4> detcols;
  std::map<Mono, int, GradedLexDesc> match_rows;
  for (int j = 0; j < 4; ++j) {
    detcols[j] = det_pq(p, units[j]);
    for (const auto& [m, c] : detcols[j].terms()) match_rows.emplace(m, 0);
  }
  for (const auto& [m, c] : delta.terms()) match_rows.emplace(m, 0);
  int idx = 0;
  for (auto& [m, i] : match_rows) i = idx++;

  // Leading-order match at C = 1: augmented system [A | delta].
  std::vector<std::vector<Rational>> aug(
      match_rows.size(), std::vector<Rational>(5, Rational(0)));
  for (int j = 0; j < 4; ++j)
    for (const auto& [m, c] : detcols[j].terms()) aug[match_rows.at(m)][j] = c;
  for (const auto& [m, c] : delta.terms()) aug[match_rows.at(m)][4] = c;

  std::vector<std::vector<Rational>> aug_copy = aug;
  std::vector<int> pivots = linalg::rref_rows(aug_copy, 0.0);
  bool inconsistent =
      std::find(pivots.begin(), pivots.end(), 4) != pivots.end();
  bool unique = !inconsistent && pivots.size() == 4;
  rep.generic = unique;

  if (unique) {
    std::array<Rational, 4> sol{};
    for (size_t r = 0; r < pivots.size(); ++r) sol[pivots[r]] = aug_copy[r][4];
    RationalVec qf = linear_field(sol);
    if (det_pq(p, qf) != delta)
      throw Error(ErrorCode::IllConditioned,
                  "internal consistency failure in the determinant solve");
    rep.q_leading = qf;
    if (sol[1] == 0 && sol[2] == 0 && sol[0] == sol[3]) {
      rep.euler_factor = sol[0];
    } else {
      rep.notes.push_back(
          "solved leading field is not proportional to the Euler field");
    }
    RationalVec br = lie_bracket(qf, p);
    rep.bracket_leading = br;
    if (auto f = proportionality_factor(br, p)) {
      rep.bracket_factor = *f;
      if (rep.euler_factor != 0 && *f != Rational(k - 1) * rep.euler_factor)
        rep.notes.push_back("bracket factor differs from (k-1) * euler factor");
    } else {
      rep.notes.push_back("leading bracket is not proportional to p");
    }
    rep.notes.push_back(
        "corrections of order 2 and higher are determined up to multiples of "
        "p and cannot cancel the leading bracket");
  } else {
    rep.notes.push_back(
        inconsistent
            ? "no linear field matches the determinant prescription at C = 1"
            : "the leading determinant solve is rank-deficient; deciding via "
              "the combined feasibility system");
  }

  // Combined feasibility: det(p,q) - C*delta = 0 and [q,p] = 0, unknowns
  // (a, b, c, d, C).  A solution with C != 0 defeats the obstruction.
  std::array<RationalVec, 4> brcols;
  std::array<std::map<Mono, int, GradedLexDesc>, 2> brrows;
  for (int j = 0; j < 4; ++j) {
    brcols[j] = lie_bracket(units[j], p);
    for (int i = 0; i < 2; ++i)
      for (const auto& [m, c] : brcols[j].comp[i].terms())
        brrows[i].emplace(m, 0);
  }
  int nbr = 0;
  for (int i = 0; i < 2; ++i)
    for (auto& [m, r] : brrows[i]) r = nbr++;

  std::vector<std::vector<Rational>> feas(
      match_rows.size() + nbr, std::vector<Rational>(5, Rational(0)));
  for (size_t r = 0; r < match_rows.size(); ++r)
    for (int j = 0; j < 4; ++j) feas[r][j] = aug[r][j];
  for (const auto& [m, c] : delta.terms())
    feas[match_rows.at(m)][4] = -c;
  for (int j = 0; j < 4; ++j)
    for (int i = 0; i < 2; ++i)
      for (const auto& [m, c] : brcols[j].comp[i].terms())
        feas[match_rows.size() + brrows[i].at(m)][j] = c;

  std::vector<std::vector<Rational>> null = linalg::nullspace(feas, 0.0);
  std::optional<std::vector<Rational>> with_c;
  for (const auto& v : null)
    if (v[4] != 0) { with_c = v; break; }

  rep.obstruction_holds = !with_c.has_value();
  if (with_c) {
    std::vector<Rational> w = *with_c;
    make_primitive(w);
    std::array<Rational, 4> qc{w[0], w[1], w[2], w[3]};
    RationalVec qw = linear_field(qc);
    RationalPoly want = w[4] * delta;
    if (det_pq(p, qw) != want || !lie_bracket(qw, p).is_zero())
      throw Error(ErrorCode::IllConditioned,
                  "internal consistency failure in the feasibility witness");
    rep.witness = qw;
    rep.witness_c = w[4];
    rep.notes.push_back(
        "a commuting linear field matches the determinant prescription with "
        "a nonzero constant; no contradiction arises at leading order");
  }

  // Higher homogeneous orders: det(p, q_m) = 0 determines q_m only up to a
  // kernel; record its dimension for m = 2..d.
  for (int m = 2; m <= d; ++m) {
    std::vector<Mono> hom = monomials_between(2, m, m);
    std::vector<std::vector<RationalPoly>> cols;
    std::map<Mono, int, GradedLexDesc> rows;
    for (int j = 0; j < 2; ++j)
      for (const Mono& mm : hom) {
        RationalVec u(2);
        u.comp[j].add_term(mm, Rational(1));
        RationalPoly dcol = det_pq(p, u);
        for (const auto& [rm, c] : dcol.terms()) rows.emplace(rm, 0);
        cols.push_back({dcol});
      }
    int r = 0;
    for (auto& [rm, i] : rows) i = r++;
    std::vector<std::vector<Rational>> a(
        rows.size(), std::vector<Rational>(cols.size(), Rational(0)));
    for (size_t j = 0; j < cols.size(); ++j)
      for (const auto& [rm, c] : cols[j][0].terms()) a[rows.at(rm)][j] = c;
    rep.higher_kernel_dims.push_back(
        static_cast<int>(linalg::nullspace(a, 0.0).size()));
  }

  return rep;
}

}  // namespace

ObstructionReport commuter_obstruction_case1(const std::array<Rational, 3>& a13,
                                             int d) {
  return obstruction_impl(PlanarKind::Case1,
                          {a13[0], Rational(0), a13[1], a13[2]}, d);
}

ObstructionReport commuter_obstruction_case2(const std::array<Rational, 4>& a,
                                             int d) {
  return obstruction_impl(PlanarKind::Case2, a, d);
}

SnappedRational snap_to_rational(double x, long long qmax) {
  RationalityEvidence ev = rationality_check(x, qmax, 0.0);
  SnappedRational out;
  out.value = Rational(ev.p, ev.q);
  out.residual = ev.residual;
  return out;
}

}  // namespace nfcert
