#pragma once

#include <algorithm>
#include <array>
#include <complex>
#include <map>
#include <sstream>
#include <string>
#include <type_traits>
#include <vector>

#include "nfcert/error.hpp"
#include "nfcert/rational.hpp"

namespace nfcert {

// Exponent tuple of a monomial in up to 4 variables; entries beyond the
// ambient dimension stay zero.  Total degree = sum of exponents.
struct Mono {
  std::array<int, 4> e{0, 0, 0, 0};

  int degree() const { return e[0] + e[1] + e[2] + e[3]; }
  int operator[](int i) const { return e[i]; }
  int& operator[](int i) { return e[i]; }
  bool operator==(const Mono& o) const { return e == o.e; }
};

inline Mono unit_mono(int i) {
  Mono m;
  m[i] = 1;
  return m;
}

// Graded-lexicographic, highest terms first: higher total degree precedes,
// ties broken by lexicographically larger exponent tuple (x1-major).
struct GradedLexDesc {
  bool operator()(const Mono& a, const Mono& b) const {
    int da = a.degree(), db = b.degree();
    if (da != db) return da > db;
    return a.e > b.e;
  }
};

namespace detail {
inline bool scalar_is_zero(const Rational& x) { return x == 0; }
inline bool scalar_is_zero(double x) { return x == 0.0; }
inline bool scalar_is_zero(const std::complex<double>& x) { return x == 0.0; }

// Converts between the scalar kinds used by this library (exact fractions
// flatten to double on the way to any floating kind).
template <class C>
C scalar_cast(const Rational& c) {
  if constexpr (std::is_same_v<C, Rational>) return c;
  else return C(to_double(c));
}
template <class C>
C scalar_cast(double c) { return C(c); }
template <class C>
C scalar_cast(const std::complex<double>& c) { return C(c); }
}  // namespace detail

// Sparse polynomial over scalar kind K (exact fraction, double, or complex).
// Stored coefficients are never zero; terms iterate in graded-lex order.
template <class K>
class Polynomial {
 public:
  using Terms = std::map<Mono, K, GradedLexDesc>;

  Polynomial() = default;

  static Polynomial constant(const K& c) {
    Polynomial p;
    p.add_term(Mono{}, c);
    return p;
  }
  static Polynomial variable(int i) {
    Polynomial p;
    p.add_term(unit_mono(i), K(1));
    return p;
  }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add_term(const Mono& m, const K& c) {
    if (detail::scalar_is_zero(c)) return;
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
      it->second += c;
      if (detail::scalar_is_zero(it->second)) terms_.erase(it);
    }
  }

  K coeff(const Mono& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? K(0) : it->second;
  }

  int degree() const {  // -1 for the zero polynomial
    int d = -1;
    for (const auto& [m, c] : terms_) d = std::max(d, m.degree());
    return d;
  }
  int min_degree() const {  // smallest total degree present, -1 if zero
    int d = -1;
    for (const auto& [m, c] : terms_)
      d = (d < 0) ? m.degree() : std::min(d, m.degree());
    return d;
  }

  Polynomial& operator+=(const Polynomial& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
  }
  Polynomial& operator-=(const Polynomial& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, K(-1) * c);
    return *this;
  }
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }

  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    Polynomial r;
    for (const auto& [ma, ca] : a.terms_)
      for (const auto& [mb, cb] : b.terms_) {
        Mono m;
        for (int i = 0; i < 4; ++i) m[i] = ma[i] + mb[i];
        r.add_term(m, ca * cb);
      }
    return r;
  }
  friend Polynomial operator*(const K& c, const Polynomial& p) {
    Polynomial r;
    for (const auto& [m, pc] : p.terms_) r.add_term(m, c * pc);
    return r;
  }

  Polynomial derivative(int var) const {
    Polynomial r;
    for (const auto& [m, c] : terms_) {
      if (m[var] == 0) continue;
      Mono d = m;
      d[var] -= 1;
      r.add_term(d, K(m[var]) * c);
    }
    return r;
  }

  template <class V>
  V evaluate(const std::vector<V>& x) const {
    V total(0);
    for (const auto& [m, c] : terms_) {
      V t(detail::scalar_cast<V>(c));
      for (int i = 0; i < static_cast<int>(x.size()); ++i)
        for (int k = 0; k < m[i]; ++k) t *= x[i];
      total += t;
    }
    return total;
  }

  Polynomial homogeneous_part(int deg) const {
    Polynomial r;
    for (const auto& [m, c] : terms_)
      if (m.degree() == deg) r.add_term(m, c);
    return r;
  }

  // Substitutes x_i -> x_i + shift_i for every variable, exactly in K.
  Polynomial shifted(const std::vector<K>& shift) const {
    Polynomial r;
    for (const auto& [m, c] : terms_) {
      Polynomial term = Polynomial::constant(c);
      for (int i = 0; i < static_cast<int>(shift.size()); ++i) {
        Polynomial lin = Polynomial::variable(i);
        lin += Polynomial::constant(shift[i]);
        for (int k = 0; k < m[i]; ++k) term = term * lin;
      }
      r += term;
    }
    return r;
  }

  template <class K2, class Fn>
  Polynomial<K2> map_coeffs(Fn fn) const {
    Polynomial<K2> r;
    for (const auto& [m, c] : terms_) r.add_term(m, fn(c));
    return r;
  }

  bool operator==(const Polynomial& o) const { return terms_ == o.terms_; }

  std::string str(const std::vector<std::string>& vars) const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : terms_) {
      std::string cs = coeff_str(c);
      bool neg = !cs.empty() && cs[0] == '-';
      std::string mag = neg ? cs.substr(1) : cs;
      if (first) {
        if (neg) os << "-";
        first = false;
      } else {
        os << (neg ? " - " : " + ");
      }
      bool unit = (mag == "1") && m.degree() > 0;
      if (!unit) os << mag;
      bool need_star = !unit;
      for (int i = 0; i < static_cast<int>(vars.size()); ++i) {
        if (m[i] == 0) continue;
        if (need_star) os << "*";
        os << vars[i];
        if (m[i] > 1) os << "^" << m[i];
        need_star = true;
      }
    }
    return os.str();
  }

 private:
  static std::string coeff_str(const Rational& c) { return to_string(c); }
  static std::string coeff_str(double c) {
    std::ostringstream os;
    os << c;
    return os.str();
  }
  static std::string coeff_str(const std::complex<double>& c) {
    std::ostringstream os;
    os << "(" << c.real() << (c.imag() < 0 ? "-" : "+") << std::abs(c.imag())
       << "i)";
    return os.str();
  }

  Terms terms_;
};

// Polynomial vector field in dimension n (2..4): one polynomial per component.
template <class K>
struct PolyVec {
  int dim = 0;
  std::vector<Polynomial<K>> comp;

  explicit PolyVec(int n = 0) : dim(n), comp(n) {}

  bool is_zero() const {
    return std::all_of(comp.begin(), comp.end(),
                       [](const auto& p) { return p.is_zero(); });
  }

  // Total degree over all components (-1 if the zero field).
  int degree() const {
    int d = -1;
    for (const auto& p : comp) d = std::max(d, p.degree());
    return d;
  }

  template <class V>
  std::vector<V> evaluate(const std::vector<V>& x) const {
    if (static_cast<int>(x.size()) != dim)
      throw Error(ErrorCode::DimensionMismatch,
                  "evaluation point has wrong dimension");
    std::vector<V> out;
    out.reserve(dim);
    for (const auto& p : comp) out.push_back(p.template evaluate<V>(x));
    return out;
  }

  friend PolyVec operator+(const PolyVec& a, const PolyVec& b) {
    PolyVec r(a.dim);
    for (int j = 0; j < a.dim; ++j) r.comp[j] = a.comp[j] + b.comp[j];
    return r;
  }
  friend PolyVec operator-(const PolyVec& a, const PolyVec& b) {
    PolyVec r(a.dim);
    for (int j = 0; j < a.dim; ++j) r.comp[j] = a.comp[j] - b.comp[j];
    return r;
  }
  friend PolyVec operator*(const K& c, const PolyVec& v) {
    PolyVec r(v.dim);
    for (int j = 0; j < v.dim; ++j) r.comp[j] = c * v.comp[j];
    return r;
  }
  bool operator==(const PolyVec& o) const {
    return dim == o.dim && comp == o.comp;
  }

  template <class K2, class Fn>
  PolyVec<K2> map_coeffs(Fn fn) const {
    PolyVec<K2> r(dim);
    for (int j = 0; j < dim; ++j)
      r.comp[j] = comp[j].template map_coeffs<K2>(fn);
    return r;
  }
};

// Lie bracket [q, p] = Dp.q - Dq.p, exact in K.
template <class K>
PolyVec<K> lie_bracket(const PolyVec<K>& q, const PolyVec<K>& p) {
  if (q.dim != p.dim)
    throw Error(ErrorCode::DimensionMismatch, "lie_bracket dimension mismatch");
  PolyVec<K> r(p.dim);
  for (int j = 0; j < p.dim; ++j) {
    Polynomial<K> acc;
    for (int l = 0; l < p.dim; ++l) {
      acc += p.comp[j].derivative(l) * q.comp[l];
      acc -= q.comp[j].derivative(l) * p.comp[l];
    }
    r.comp[j] = acc;
  }
  return r;
}

template <class K>
struct HomogeneousPart {
  int degree = 0;
  PolyVec<K> field;
};

// Lowest-degree homogeneous piece of a nonzero field.
template <class K>
HomogeneousPart<K> leading_part(const PolyVec<K>& f) {
  int k = -1;
  for (const auto& p : f.comp) {
    int d = p.min_degree();
    if (d >= 0) k = (k < 0) ? d : std::min(k, d);
  }
  if (k < 0) throw Error(ErrorCode::EmptyField, "leading_part of the zero field");
  HomogeneousPart<K> out;
  out.degree = k;
  out.field = PolyVec<K>(f.dim);
  for (int j = 0; j < f.dim; ++j) out.field.comp[j] = f.comp[j].homogeneous_part(k);
  return out;
}

template <class K>
PolyVec<K> homogeneous_component(const PolyVec<K>& f, int deg) {
  PolyVec<K> r(f.dim);
  for (int j = 0; j < f.dim; ++j) r.comp[j] = f.comp[j].homogeneous_part(deg);
  return r;
}

namespace detail {
// Ordered index tuples (a1..ak) with e_{a1}+...+e_{ak} == m, together with
// the multiplicity factor m! = prod m_i! shared by all of them.  These are
// exactly the index sets where the k-th partial derivative of x^m at 0 is
// nonzero, and that derivative equals coeff * m!.
inline void ordered_tuples(const Mono& m, int k, std::vector<std::array<int, 3>>& out) {
  out.clear();
  std::array<int, 3> idx{};
  std::vector<int> support;
  for (int i = 0; i < 4; ++i)
    for (int c = 0; c < m[i]; ++c) support.push_back(i);
  if (static_cast<int>(support.size()) != k) return;
  std::sort(support.begin(), support.end());
  do {
    for (int i = 0; i < k; ++i) idx[i] = support[i];
    out.push_back(idx);
  } while (std::next_permutation(support.begin(), support.end()));
}

inline long mono_factorial(const Mono& m) {
  auto fact = [](int n) { long f = 1; for (int i = 2; i <= n; ++i) f *= i; return f; };
  return fact(m[0]) * fact(m[1]) * fact(m[2]) * fact(m[3]);
}
}  // namespace detail

// Symmetric bilinear form from the quadratic Taylor coefficients:
// B_j(xi, eta) = sum_{k,l} d2 f_j / dx_k dx_l (0) xi_k eta_l.
template <class K, class C>
std::vector<C> bilinear_form(const PolyVec<K>& f, const std::vector<C>& xi,
                             const std::vector<C>& eta) {
  if (static_cast<int>(xi.size()) != f.dim ||
      static_cast<int>(eta.size()) != f.dim)
    throw Error(ErrorCode::DimensionMismatch, "bilinear_form dimension mismatch");
  std::vector<C> out(f.dim, C(0));
  std::vector<std::array<int, 3>> tuples;
  for (int j = 0; j < f.dim; ++j) {
    for (const auto& [m, c] : f.comp[j].terms()) {
      if (m.degree() != 2) continue;
      detail::ordered_tuples(m, 2, tuples);
      // each distinct ordered tuple carries the derivative value coeff * m!
      C cc = detail::scalar_cast<C>(c) *
             C(static_cast<int>(detail::mono_factorial(m)));
      for (const auto& t : tuples) out[j] += cc * xi[t[0]] * eta[t[1]];
    }
  }
  return out;
}

// Symmetric trilinear form from the cubic Taylor coefficients.
template <class K, class C>
std::vector<C> trilinear_form(const PolyVec<K>& f, const std::vector<C>& xi,
                              const std::vector<C>& eta, const std::vector<C>& zeta) {
  if (static_cast<int>(xi.size()) != f.dim ||
      static_cast<int>(eta.size()) != f.dim ||
      static_cast<int>(zeta.size()) != f.dim)
    throw Error(ErrorCode::DimensionMismatch, "trilinear_form dimension mismatch");
  std::vector<C> out(f.dim, C(0));
  std::vector<std::array<int, 3>> tuples;
  for (int j = 0; j < f.dim; ++j) {
    for (const auto& [m, c] : f.comp[j].terms()) {
      if (m.degree() != 3) continue;
      detail::ordered_tuples(m, 3, tuples);
      C cc = detail::scalar_cast<C>(c) *
             C(static_cast<int>(detail::mono_factorial(m)));
      for (const auto& t : tuples) out[j] += cc * xi[t[0]] * eta[t[1]] * zeta[t[2]];
    }
  }
  return out;
}

using RationalPoly = Polynomial<Rational>;
using RationalVec = PolyVec<Rational>;

inline PolyVec<double> to_double_field(const RationalVec& f) {
  return f.map_coeffs<double>([](const Rational& c) { return to_double(c); });
}

inline PolyVec<std::complex<double>> to_complex_field(const PolyVec<double>& f) {
  return f.map_coeffs<std::complex<double>>(
      [](double c) { return std::complex<double>(c, 0.0); });
}

}  // namespace nfcert
