#include "nfcert/resonance.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

namespace nfcert {

SymbolicSpectrum SymbolicSpectrum::fold_hopf(double omega) {
  SymbolicSpectrum s;
  s.n = 3;
  s.m = 1;
  s.coeffs = {{Rational(0), Rational(0)},
              {Rational(0), Rational(1)},
              {Rational(0), Rational(-1)}};
  s.symbol_values = {omega};
  return s;
}

SymbolicSpectrum SymbolicSpectrum::double_hopf(double w1, double w2) {
  SymbolicSpectrum s;
  s.n = 4;
  s.m = 2;
  s.coeffs = {{Rational(0), Rational(1), Rational(0)},
              {Rational(0), Rational(-1), Rational(0)},
              {Rational(0), Rational(0), Rational(1)},
              {Rational(0), Rational(0), Rational(-1)}};
  s.symbol_values = {w1, w2};
  return s;
}

SymbolicSpectrum SymbolicSpectrum::single_pair(double omega) {
  SymbolicSpectrum s;
  s.n = 2;
  s.m = 1;
  s.coeffs = {{Rational(0), Rational(1)}, {Rational(0), Rational(-1)}};
  s.symbol_values = {omega};
  return s;
}

Complex SymbolicSpectrum::numeric_eigenvalue(int j) const {
  double re = to_double(coeffs[j][0]);
  double im = 0.0;
  for (int s = 0; s < m; ++s) im += to_double(coeffs[j][1 + s]) * symbol_values[s];
  return Complex(re, im);
}

namespace {

// All integer vectors with at most one -1 entry, everything else >= 0,
// 1 <= sum |p_l| <= bound.
void enumerate_candidates(int n, int bound, std::vector<std::vector<int>>& out) {
  std::vector<int> p(n, 0);
  // budget-limited recursion over positions
  std::function<void(int, int, bool)> rec = [&](int pos, int budget, bool used_neg) {
    if (pos == n) {
      bool nonzero = std::any_of(p.begin(), p.end(), [](int x) { return x != 0; });
      if (nonzero) out.push_back(p);
      return;
    }
    for (int v = used_neg ? 0 : -1; v <= budget; ++v) {
      if (std::abs(v) > budget) continue;
      p[pos] = v;
      rec(pos + 1, budget - std::abs(v), used_neg || v < 0);
    }
    p[pos] = 0;
  };
  rec(0, bound, false);
}

bool is_resonant(const SymbolicSpectrum& spec, const std::vector<int>& p) {
  for (int s = 0; s <= spec.m; ++s) {
    Rational acc(0);
    for (int l = 0; l < spec.n; ++l) acc += Rational(p[l]) * spec.coeffs[l][s];
    if (acc != 0) return false;
  }
  return true;
}

}  // namespace

ResonanceData resonance_set(const SymbolicSpectrum& spec, int bound) {
  if (bound < 1)
    throw Error(ErrorCode::DomainError, "resonance bound must be >= 1");
  ResonanceData out;
  out.bound = bound;

  std::vector<std::vector<int>> cands;
  enumerate_candidates(spec.n, bound, cands);
  auto key_degree = [](const std::vector<int>& p) {
    int d = 0;
    for (int x : p) d += std::abs(x);
    return d;
  };
  auto key_neg = [](const std::vector<int>& p) {
    return std::any_of(p.begin(), p.end(), [](int x) { return x < 0; }) ? 1 : 0;
  };
  std::sort(cands.begin(), cands.end(),
            [&](const std::vector<int>& a, const std::vector<int>& b) {
              int da = key_degree(a), db = key_degree(b);
              if (da != db) return da < db;
              int na = key_neg(a), nb = key_neg(b);
              if (na != nb) return na < nb;
              return a > b;  // descending lex among ties
            });

  // Greedy maximal independent subset in enumeration order, exact arithmetic.
  std::vector<std::vector<Rational>> reduced;  // row-echelon rows
  auto try_add = [&](const std::vector<int>& p) {
    std::vector<Rational> row(spec.n);
    for (int l = 0; l < spec.n; ++l) row[l] = Rational(p[l]);
    for (const auto& r : reduced) {
      int lead = -1;
      for (int l = 0; l < spec.n; ++l)
        if (r[l] != 0) { lead = l; break; }
      if (lead < 0 || row[lead] == 0) continue;
      Rational f = row[lead] / r[lead];
      for (int l = 0; l < spec.n; ++l) row[l] -= f * r[l];
    }
    bool nonzero = std::any_of(row.begin(), row.end(),
                               [](const Rational& x) { return x != 0; });
    if (nonzero) reduced.push_back(std::move(row));
    return nonzero;
  };

  for (const auto& p : cands) {
    if (!is_resonant(spec, p)) continue;
    if (try_add(p)) out.generators.push_back(p);
  }
  out.degree = static_cast<int>(out.generators.size());
  return out;
}

int resonance_degree(const SymbolicSpectrum& spec, int bound) {
  return resonance_set(spec, bound).degree;
}

PdCheckResult is_pd_normal_form(const PolyVec<Complex>& f,
                                const SymbolicSpectrum& spec, double lin_tol) {
  if (f.dim != spec.n)
    throw Error(ErrorCode::DimensionMismatch,
                "field dimension does not match the spectrum");

  double cmax = 0.0;
  for (int j = 0; j < f.dim; ++j)
    for (const auto& [m, c] : f.comp[j].terms()) cmax = std::max(cmax, std::abs(c));
  double tol = lin_tol * (1.0 + cmax);

  // Adapted coordinates: the linear part must be diag(lambda_1..lambda_n).
  for (int j = 0; j < f.dim; ++j) {
    for (int l = 0; l < f.dim; ++l) {
      Complex c = f.comp[j].coeff(unit_mono(l));
      if (j != l) {
        if (std::abs(c) > tol)
          throw Error(ErrorCode::NotAdapted,
                      "linear part is not diagonal in these coordinates");
      } else if (std::abs(c - spec.numeric_eigenvalue(j)) > tol) {
        throw Error(ErrorCode::NotAdapted,
                    "diagonal linear part does not match the declared spectrum");
      }
    }
  }

  PdCheckResult res;
  for (int j = 0; j < f.dim; ++j) {
    for (const auto& [mono, c] : f.comp[j].terms()) {
      if (mono.degree() == 1) continue;  // the (checked) linear part
      bool resonant = true;
      for (int s = 0; s <= spec.m && resonant; ++s) {
        Rational acc = Rational(0) - spec.coeffs[j][s];
        for (int l = 0; l < f.dim; ++l)
          acc += Rational(mono[l]) * spec.coeffs[l][s];
        if (acc != 0) resonant = false;
      }
      if (!resonant) res.offenders.emplace_back(j, mono);
    }
  }
  res.ok = res.offenders.empty();
  return res;
}

}  // namespace nfcert
