#include "nfcert/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace nfcert {

namespace {

Complex eval_poly(const std::vector<double>& c, Complex x) {
  // c holds the low-order coefficients of a monic polynomial.
  Complex v(1.0, 0.0);
  for (int k = static_cast<int>(c.size()) - 1; k >= 0; --k) v = v * x + c[k];
  return v;
}

Complex eval_poly_deriv(const std::vector<double>& c, Complex x) {
  int n = static_cast<int>(c.size());
  Complex v(static_cast<double>(n), 0.0);
  for (int k = n - 1; k >= 1; --k) v = v * x + static_cast<double>(k) * c[k];
  return v;
}

double coeff_scale(const std::vector<double>& c) {
  double s = 1.0;
  for (double x : c) s = std::max(s, std::abs(x));
  return s;
}

Complex newton_polish(const std::vector<double>& c, Complex x) {
  double scale = coeff_scale(c);
  for (int it = 0; it < 60; ++it) {
    Complex p = eval_poly(c, x);
    if (std::abs(p) <= 1e-16 * scale * std::max(1.0, std::pow(std::abs(x), c.size())))
      break;
    Complex dp = eval_poly_deriv(c, x);
    if (std::abs(dp) == 0.0) break;
    Complex step = p / dp;
    x -= step;
    if (std::abs(step) <= 1e-17 * (1.0 + std::abs(x))) break;
  }
  return x;
}

std::vector<Complex> quadratic_roots(double c0, double c1) {
  // x^2 + c1 x + c0 with real coefficients.
  double disc = c1 * c1 - 4.0 * c0;
  if (disc < 0.0) {
    double im = std::sqrt(-disc) * 0.5;
    return {Complex(-c1 * 0.5, im), Complex(-c1 * 0.5, -im)};
  }
  // Avoid cancellation: compute the larger-magnitude root first.
  double sq = std::sqrt(disc);
  double q = -0.5 * (c1 + (c1 >= 0.0 ? sq : -sq));
  if (q == 0.0) return {Complex(0.0, 0.0), Complex(-c1, 0.0)};
  return {Complex(q, 0.0), Complex(c0 / q, 0.0)};
}

std::vector<Complex> cubic_roots(double c0, double c1, double c2) {
  // Depress x = t - c2/3: t^3 + p t + q.
  double sh = c2 / 3.0;
  double p = c1 - c2 * c2 / 3.0;
  double q = 2.0 * c2 * c2 * c2 / 27.0 - c2 * c1 / 3.0 + c0;
  std::vector<Complex> out;
  if (p == 0.0 && q == 0.0) {
    out.assign(3, Complex(-sh, 0.0));
    return out;
  }
  Complex disc = std::sqrt(Complex(q * q / 4.0 + p * p * p / 27.0, 0.0));
  Complex u3 = Complex(-q / 2.0, 0.0) + disc;
  if (std::abs(u3) < 1e-3 * (std::abs(q) + 1e-300))
    u3 = Complex(-q / 2.0, 0.0) - disc;  // avoid cancellation in u^3
  Complex u = std::pow(u3, 1.0 / 3.0);
  const Complex w(-0.5, std::sqrt(3.0) / 2.0);
  for (int k = 0; k < 3; ++k) {
    Complex uk = u;
    for (int j = 0; j < k; ++j) uk *= w;
    Complex t = (std::abs(uk) == 0.0) ? Complex(0.0)
                                      : uk - Complex(p / 3.0, 0.0) / uk;
    out.push_back(t - Complex(sh, 0.0));
  }
  return out;
}

std::vector<Complex> quartic_roots(double c0, double c1, double c2, double c3) {
  // Depress x = y - c3/4: y^4 + p y^2 + q y + r.
  double sh = c3 / 4.0;
  double p = c2 - 3.0 * c3 * c3 / 8.0;
  double q = c1 - c3 * c2 / 2.0 + c3 * c3 * c3 / 8.0;
  double r = c0 - c3 * c1 / 4.0 + c3 * c3 * c2 / 16.0 - 3.0 * std::pow(c3, 4) / 256.0;
  std::vector<Complex> ys;
  if (std::abs(q) <= 1e-14 * (1.0 + std::abs(p) + std::abs(r))) {
    // Biquadratic: w^2 + p w + r with w = y^2.
    for (Complex w : quadratic_roots(r, p)) {
      Complex s = std::sqrt(w);
      ys.push_back(s);
      ys.push_back(-s);
    }
  } else {
    // Resolvent cubic z^3 - p z^2 - 4 r z + (4 p r - q^2).
    std::vector<Complex> zs = cubic_roots(4.0 * p * r - q * q, -4.0 * r, -p);
    // Prefer a real z keeping s^2 = z - p away from zero.
    Complex z = zs[0];
    double best = -1.0;
    for (Complex cand : zs) {
      if (std::abs(cand.imag()) > 1e-8 * (1.0 + std::abs(cand))) continue;
      double m = std::abs(cand.real() - p);
      if (m > best) { best = m; z = Complex(cand.real(), 0.0); }
    }
    Complex s = std::sqrt(z - Complex(p, 0.0));
    Complex vmu = (std::abs(s) == 0.0) ? Complex(0.0) : Complex(q, 0.0) / s;
    Complex u = (z - vmu) * 0.5;
    Complex v = (z + vmu) * 0.5;
    // (y^2 + s y + u)(y^2 - s y + v)
    auto quad = [&](Complex b, Complex c) {
      Complex d = std::sqrt(b * b - 4.0 * c);
      ys.push_back((-b + d) * 0.5);
      ys.push_back((-b - d) * 0.5);
    };
    quad(s, u);
    quad(-s, v);
  }
  std::vector<Complex> out;
  for (Complex y : ys) out.push_back(y - Complex(sh, 0.0));
  return out;
}

}  // namespace

std::vector<double> characteristic_polynomial(const DMatrix& a) {
  int n = static_cast<int>(a.size());
  std::vector<double> c(n, 0.0);  // low-order coefficients, monic implied
  DMatrix m = linalg::identity<double>(n);
  for (int k = 1; k <= n; ++k) {
    m = linalg::mat_mul(a, m);
    double ck = -linalg::trace(m) / static_cast<double>(k);
    c[n - k] = ck;
    for (int i = 0; i < n; ++i) m[i][i] += ck;
  }
  return c;
}

std::vector<Complex> polynomial_roots(const std::vector<double>& c) {
  int n = static_cast<int>(c.size());
  std::vector<Complex> roots;
  switch (n) {
    case 1: roots = {Complex(-c[0], 0.0)}; break;
    case 2: roots = quadratic_roots(c[0], c[1]); break;
    case 3: roots = cubic_roots(c[0], c[1], c[2]); break;
    case 4: roots = quartic_roots(c[0], c[1], c[2], c[3]); break;
    default:
      throw Error(ErrorCode::DimensionMismatch,
                  "root solver handles degrees 1..4 only");
  }
  for (auto& x : roots) x = newton_polish(c, x);

  // A real polynomial has conjugate-symmetric roots; enforce that exactly.
  double scale = coeff_scale(c);
  auto near_real = [&](Complex x) {
    return std::abs(x.imag()) <= 1e-9 * (1.0 + std::abs(x));
  };
  std::vector<bool> used(roots.size(), false);
  std::vector<Complex> out;
  for (size_t i = 0; i < roots.size(); ++i) {
    if (used[i]) continue;
    if (near_real(roots[i])) {
      Complex x(roots[i].real(), 0.0);
      // Re-polish along the real axis.
      for (int it = 0; it < 30; ++it) {
        Complex pv = eval_poly(c, x);
        if (std::abs(pv) <= 1e-16 * scale) break;
        Complex dp = eval_poly_deriv(c, x);
        if (std::abs(dp) == 0.0) break;
        x = Complex(x.real() - (pv / dp).real(), 0.0);
      }
      out.push_back(x);
      used[i] = true;
      continue;
    }
    // Find the best conjugate partner and average the pair.
    size_t best = i;
    double bd = std::numeric_limits<double>::infinity();
    for (size_t j = 0; j < roots.size(); ++j) {
      if (j == i || used[j] || near_real(roots[j])) continue;
      double d = std::abs(roots[j] - std::conj(roots[i]));
      if (d < bd) { bd = d; best = j; }
    }
    if (best == i) {  // unpaired complex root: should not happen, keep as is
      out.push_back(roots[i]);
      used[i] = true;
      continue;
    }
    Complex avg = (roots[i] + std::conj(roots[best])) * 0.5;
    if (avg.imag() < 0.0) avg = std::conj(avg);
    out.push_back(avg);
    out.push_back(std::conj(avg));
    used[i] = used[best] = true;
  }
  std::sort(out.begin(), out.end(), [](Complex a, Complex b) {
    if (a.real() != b.real()) return a.real() < b.real();
    return a.imag() < b.imag();
  });
  return out;
}

double default_classify_tol(const DMatrix& a) {
  return 1e-9 * (1.0 + linalg::inf_norm(a));
}

namespace {

// Right eigenvector of a (complex) matrix at eigenvalue lambda, canonically
// scaled so the last nonvanishing component is 1.
CVector eigenvector_at(const CMatrix& m, Complex lambda, double tol_ns,
                       const char* side) {
  int n = static_cast<int>(m.size());
  CMatrix shifted = m;
  for (int i = 0; i < n; ++i) shifted[i][i] -= lambda;
  auto basis = linalg::nullspace_fullpivot(shifted, tol_ns);
  if (basis.empty())
    throw Error(ErrorCode::IllConditioned,
                std::string("no ") + side + " eigenvector found at the computed eigenvalue");
  if (basis.size() > 1)
    throw Error(ErrorCode::IllConditioned,
                std::string("ambiguous ") + side + " eigenvector (numerically multiple eigenvalue)");
  CVector v = basis[0];
  double vmax = 0.0;
  for (const auto& x : v) vmax = std::max(vmax, std::abs(x));
  int last = -1;
  for (int k = n - 1; k >= 0; --k)
    if (std::abs(v[k]) > 1e-9 * vmax) { last = k; break; }
  Complex pivot = v[last];
  for (auto& x : v) x /= pivot;
  v[last] = Complex(1.0, 0.0);
  return v;
}

EigenPair make_pair(const CMatrix& ac, const CMatrix& at, Complex lambda,
                    double tol_ns) {
  EigenPair p;
  p.lambda = lambda;
  p.v = eigenvector_at(ac, lambda, tol_ns, "right");
  CVector u = eigenvector_at(at, std::conj(lambda), tol_ns, "left");
  p.u = normalize_biorthogonal(u, p.v);
  return p;
}

std::vector<EigenPair> pairs_for_eigenvalues(const DMatrix& a,
                                             const std::vector<Complex>& lambdas) {
  CMatrix ac = linalg::to_complex(a);
  CMatrix at = linalg::to_complex(linalg::transpose(a));
  double tol_ns = 1e-8 * (1.0 + linalg::max_abs(ac));
  std::vector<EigenPair> pairs(lambdas.size());
  std::vector<bool> done(lambdas.size(), false);
  for (size_t i = 0; i < lambdas.size(); ++i) {
    if (done[i]) continue;
    if (lambdas[i].imag() == 0.0) {
      pairs[i] = make_pair(ac, at, lambdas[i], tol_ns);
      done[i] = true;
      continue;
    }
    // Compute at the +i side; mirror to the conjugate partner.
    size_t pos = i, neg = i;
    for (size_t j = 0; j < lambdas.size(); ++j) {
      if (j == i || done[j]) continue;
      if (lambdas[j] == std::conj(lambdas[i])) { neg = (lambdas[i].imag() > 0.0) ? j : i; pos = (lambdas[i].imag() > 0.0) ? i : j; break; }
    }
    if (pos == neg) {  // no exact partner (shouldn't happen): direct compute
      pairs[i] = make_pair(ac, at, lambdas[i], tol_ns);
      done[i] = true;
      continue;
    }
    pairs[pos] = make_pair(ac, at, lambdas[pos], tol_ns);
    EigenPair mirrored;
    mirrored.lambda = std::conj(pairs[pos].lambda);
    mirrored.v.resize(pairs[pos].v.size());
    mirrored.u.resize(pairs[pos].u.size());
    for (size_t k = 0; k < pairs[pos].v.size(); ++k) {
      mirrored.v[k] = std::conj(pairs[pos].v[k]);
      mirrored.u[k] = std::conj(pairs[pos].u[k]);
    }
    pairs[neg] = std::move(mirrored);
    done[pos] = done[neg] = true;
  }
  return pairs;
}

}  // namespace

std::vector<EigenPair> eigen_decomposition(const DMatrix& a) {
  int n = static_cast<int>(a.size());
  if (n < 2 || n > 4)
    throw Error(ErrorCode::DimensionMismatch,
                "eigen decomposition supports 2x2..4x4 matrices");
  for (const auto& row : a)
    if (static_cast<int>(row.size()) != n)
      throw Error(ErrorCode::DimensionMismatch, "matrix is not square");

  std::vector<Complex> lambdas = polynomial_roots(characteristic_polynomial(a));

  // Detect multiple eigenvalues before extracting eigenvectors.
  double ctol = default_classify_tol(a);
  CMatrix ac = linalg::to_complex(a);
  double tol_ns = 1e-8 * (1.0 + linalg::max_abs(ac));
  std::vector<bool> grouped(lambdas.size(), false);
  for (size_t i = 0; i < lambdas.size(); ++i) {
    if (grouped[i]) continue;
    std::vector<size_t> group{i};
    for (size_t j = i + 1; j < lambdas.size(); ++j)
      if (std::abs(lambdas[j] - lambdas[i]) <= ctol) group.push_back(j);
    if (group.size() < 2) continue;
    for (size_t j : group) grouped[j] = true;
    Complex mean(0.0);
    for (size_t j : group) mean += lambdas[j];
    mean /= static_cast<double>(group.size());
    CMatrix shifted = ac;
    for (int k = 0; k < n; ++k) shifted[k][k] -= mean;
    size_t geom = linalg::nullspace_fullpivot(shifted, tol_ns).size();
    if (geom < group.size())
      throw Error(ErrorCode::DefectiveMatrix,
                  "eigenvalue with geometric multiplicity below its algebraic multiplicity");
    throw Error(ErrorCode::IllConditioned,
                "eigenvalues closer than the classification tolerance");
  }

  return pairs_for_eigenvalues(a, lambdas);
}

CaseClassification classify_case(const std::vector<EigenPair>& pairs,
                                 double classify_tol, const DMatrix* a) {
  CaseClassification cls;
  cls.classify_tol = classify_tol;
  cls.pairs = pairs;
  int n = static_cast<int>(pairs.size());

  for (const auto& p : pairs) {
    if (std::abs(p.lambda.real()) > classify_tol) {
      cls.kind = CaseKind::Unsupported;
      cls.reason = "eigenvalue with nonzero real part";
      return cls;
    }
  }

  std::vector<int> zero_idx, pos_idx, neg_idx;
  for (int i = 0; i < n; ++i) {
    if (std::abs(pairs[i].lambda) <= classify_tol) zero_idx.push_back(i);
    else if (pairs[i].lambda.imag() > 0.0) pos_idx.push_back(i);
    else neg_idx.push_back(i);
  }

  auto finish = [&](const std::vector<Complex>& snapped) {
    if (a != nullptr) {
      cls.pairs = pairs_for_eigenvalues(*a, snapped);
    } else {
      for (int i = 0; i < n; ++i) cls.pairs[i].lambda = snapped[i];
    }
    for (int i = 0; i < n; ++i) {
      Complex l = cls.pairs[i].lambda;
      if (std::abs(l) == 0.0) cls.idx_zero = i;
      if (l.imag() > 0.0) {
        if (std::abs(l.imag() - cls.omega1) < std::abs(l.imag() - cls.omega2) ||
            cls.kind == CaseKind::FoldHopf)
          cls.idx_pos1 = i;
        else
          cls.idx_pos2 = i;
      }
    }
  };

  if (n == 3) {
    if (zero_idx.size() != 1 || pos_idx.size() != 1 || neg_idx.size() != 1) {
      cls.kind = CaseKind::Unsupported;
      cls.reason = zero_idx.empty() ? "no zero eigenvalue in dimension 3"
                                    : "spectrum is not {0, +-i*omega}";
      return cls;
    }
    double omega = 0.5 * (pairs[pos_idx[0]].lambda.imag() -
                          pairs[neg_idx[0]].lambda.imag());
    if (omega <= classify_tol) {
      cls.kind = CaseKind::Unsupported;
      cls.reason = "imaginary pair frequency is not positive";
      return cls;
    }
    cls.kind = CaseKind::FoldHopf;
    cls.omega1 = omega;
    std::vector<Complex> snapped(3);
    snapped[zero_idx[0]] = Complex(0.0, 0.0);
    snapped[pos_idx[0]] = Complex(0.0, omega);
    snapped[neg_idx[0]] = Complex(0.0, -omega);
    finish(snapped);
    return cls;
  }

  if (n == 4) {
    if (!zero_idx.empty()) {
      cls.kind = CaseKind::Unsupported;
      cls.reason = "zero eigenvalue in dimension 4";
      return cls;
    }
    if (pos_idx.size() != 2 || neg_idx.size() != 2) {
      cls.kind = CaseKind::Unsupported;
      cls.reason = "spectrum is not two imaginary pairs";
      return cls;
    }
    double wa = pairs[pos_idx[0]].lambda.imag();
    double wb = pairs[pos_idx[1]].lambda.imag();
    if (wa > wb) { std::swap(wa, wb); std::swap(pos_idx[0], pos_idx[1]); }
    if (wb - wa <= classify_tol) {
      cls.kind = CaseKind::Unsupported;
      cls.reason = "equal frequencies (resonant double-Hopf spectrum)";
      return cls;
    }
    cls.kind = CaseKind::DoubleHopf;
    cls.omega1 = wa;
    cls.omega2 = wb;
    std::vector<Complex> snapped(4);
    snapped[pos_idx[0]] = Complex(0.0, wa);
    snapped[pos_idx[1]] = Complex(0.0, wb);
    // Match each negative-imag eigenvalue to its conjugate frequency.
    for (int i : neg_idx) {
      double w = -pairs[i].lambda.imag();
      snapped[i] = (std::abs(w - wa) <= std::abs(w - wb)) ? Complex(0.0, -wa)
                                                          : Complex(0.0, -wb);
    }
    finish(snapped);
    return cls;
  }

  cls.kind = CaseKind::Unsupported;
  cls.reason = "dimension " + std::to_string(n) + " is not classified";
  return cls;
}

CVector normalize_biorthogonal(const CVector& u, const CVector& v) {
  if (u.size() != v.size())
    throw Error(ErrorCode::DimensionMismatch, "eigenvector length mismatch");
  Complex ip = linalg::inner(u, v);
  double scale = linalg::norm2(u) * linalg::norm2(v);
  if (std::abs(ip) <= 1e-8 * (scale > 0.0 ? scale : 1.0))
    throw Error(ErrorCode::BiorthogonalityFailure,
                "<u,v> is numerically zero; wrong pairing or defective matrix");
  CVector out = u;
  Complex factor = std::conj(ip);
  for (auto& x : out) x /= factor;
  return out;
}

double eigen_residual(const DMatrix& a, const EigenPair& p) {
  CVector av = linalg::mat_vec(linalg::to_complex(a), p.v);
  for (size_t k = 0; k < av.size(); ++k) av[k] -= p.lambda * p.v[k];
  return linalg::norm2(av);
}

}  // namespace nfcert
