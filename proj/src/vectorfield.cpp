#include "nfcert/vectorfield.hpp"

#include <cctype>
#include <fstream>
#include <limits>

#include "nfcert/linalg.hpp"

namespace nfcert {

namespace {

BigInt pow10(int k) {
  BigInt r(1);
  for (int i = 0; i < k; ++i) r *= 10;
  return r;
}

// Base-10 integer with optional sign.  cpp_int's own string constructor
// follows C literal rules, so "010" would silently parse as octal.
BigInt decimal_bigint(const std::string& s) {
  size_t i = 0;
  bool neg = false;
  if (i < s.size() && (s[i] == '+' || s[i] == '-')) {
    neg = (s[i] == '-');
    ++i;
  }
  if (i >= s.size())
    throw Error(ErrorCode::ParseError, "not an integer literal: '" + s + "'");
  for (size_t k = i; k < s.size(); ++k)
    if (!std::isdigit(static_cast<unsigned char>(s[k])))
      throw Error(ErrorCode::ParseError, "not an integer literal: '" + s + "'");
  size_t nz = s.find_first_not_of('0', i);
  BigInt v = (nz == std::string::npos) ? BigInt(0) : BigInt(s.substr(nz));
  return neg ? -v : v;
}

}  // namespace

Rational rational_from_string(const std::string& s) {
  auto fail = [&]() -> Error {
    return Error(ErrorCode::ParseError, "not a rational literal: '" + s + "'");
  };
  if (s.empty()) throw fail();

  auto slash = s.find('/');
  if (slash != std::string::npos) {
    std::string ns = s.substr(0, slash), ds = s.substr(slash + 1);
    try {
      BigInt n = decimal_bigint(ns), d = decimal_bigint(ds);
      if (d == 0) throw fail();
      return Rational(n, d);
    } catch (const std::runtime_error&) {
      throw fail();
    }
  }

  // Decimal literal with optional fraction part and exponent.
  size_t i = 0;
  bool neg = false;
  if (s[i] == '+' || s[i] == '-') { neg = (s[i] == '-'); ++i; }
  std::string digits;
  int frac_digits = 0;
  bool seen_digit = false, seen_dot = false;
  for (; i < s.size() && (std::isdigit(static_cast<unsigned char>(s[i])) || s[i] == '.'); ++i) {
    if (s[i] == '.') {
      if (seen_dot) throw fail();
      seen_dot = true;
    } else {
      digits += s[i];
      if (seen_dot) ++frac_digits;
      seen_digit = true;
    }
  }
  if (!seen_digit) throw fail();
  int exp10 = 0;
  if (i < s.size()) {
    if (s[i] != 'e' && s[i] != 'E') throw fail();
    ++i;
    bool eneg = false;
    if (i < s.size() && (s[i] == '+' || s[i] == '-')) { eneg = (s[i] == '-'); ++i; }
    if (i >= s.size()) throw fail();
    int e = 0;
    for (; i < s.size(); ++i) {
      if (!std::isdigit(static_cast<unsigned char>(s[i]))) throw fail();
      e = e * 10 + (s[i] - '0');
      if (e > 10000) throw fail();
    }
    exp10 = eneg ? -e : e;
  }
  BigInt mant = decimal_bigint(digits.empty() ? "0" : digits);
  if (neg) mant = -mant;
  int net = exp10 - frac_digits;
  if (net >= 0) return Rational(mant * pow10(net), BigInt(1));
  return Rational(mant, pow10(-net));
}

namespace {

struct ParsedCoeff {
  bool exact = false;
  Rational rat;
  double dbl = 0.0;
};

ParsedCoeff parse_coeff(const nlohmann::json& c) {
  ParsedCoeff out;
  if (c.is_object()) {
    if (!c.contains("num") || !c.contains("den"))
      throw Error(ErrorCode::ParseError, "coeff object needs num and den");
    auto read_int = [](const nlohmann::json& v) -> BigInt {
      if (v.is_number_integer()) return BigInt(v.get<long long>());
      if (v.is_string()) {
        try {
          return decimal_bigint(v.get<std::string>());
        } catch (const std::runtime_error&) {
          throw Error(ErrorCode::ParseError, "bad integer literal in coeff");
        }
      }
      throw Error(ErrorCode::ParseError, "coeff num/den must be integers");
    };
    BigInt n = read_int(c["num"]), d = read_int(c["den"]);
    if (d == 0) throw Error(ErrorCode::ParseError, "coeff has zero denominator");
    out.exact = true;
    out.rat = Rational(n, d);
    out.dbl = to_double(out.rat);
    return out;
  }
  if (c.is_number_integer()) {
    out.exact = true;
    out.rat = Rational(c.get<long long>());
    out.dbl = to_double(out.rat);
    return out;
  }
  if (c.is_number_float()) {
    out.exact = false;
    out.dbl = c.get<double>();
    return out;
  }
  if (c.is_string()) {
    out.exact = true;
    out.rat = rational_from_string(c.get<std::string>());
    out.dbl = to_double(out.rat);
    return out;
  }
  throw Error(ErrorCode::ParseError, "unrecognized coeff value");
}

}  // namespace

FieldData parse_field_json(const nlohmann::json& j, int max_degree) {
  if (!j.is_object() || !j.contains("dim") || !j.contains("terms"))
    throw Error(ErrorCode::ParseError, "field JSON needs dim and terms");
  if (!j["dim"].is_number_integer())
    throw Error(ErrorCode::ParseError, "dim must be an integer");
  int dim = j["dim"].get<int>();
  if (dim < 2 || dim > 4)
    throw Error(ErrorCode::DimensionMismatch,
                "dim must be 2, 3 or 4 (got " + std::to_string(dim) + ")");
  if (!j["terms"].is_array())
    throw Error(ErrorCode::ParseError, "terms must be an array");
  if (j["terms"].empty())
    throw Error(ErrorCode::EmptyField, "terms array is empty");

  RationalVec exact(dim);
  PolyVec<double> dbl(dim);
  bool all_exact = true;

  for (const auto& t : j["terms"]) {
    if (!t.is_object() || !t.contains("component") || !t.contains("exponents") ||
        !t.contains("coeff"))
      throw Error(ErrorCode::ParseError,
                  "each term needs component, exponents, coeff");
    if (!t["component"].is_number_integer())
      throw Error(ErrorCode::ParseError, "component must be an integer");
    int comp = t["component"].get<int>();
    if (comp < 1 || comp > dim)
      throw Error(ErrorCode::ParseError,
                  "component " + std::to_string(comp) + " out of range 1.." +
                      std::to_string(dim));
    const auto& ex = t["exponents"];
    if (!ex.is_array() || static_cast<int>(ex.size()) != dim)
      throw Error(ErrorCode::ParseError,
                  "exponents must be an array of length dim");
    Mono m;
    for (int i = 0; i < dim; ++i) {
      if (!ex[i].is_number_integer() || ex[i].get<int>() < 0)
        throw Error(ErrorCode::ParseError, "exponents must be nonnegative integers");
      m[i] = ex[i].get<int>();
    }
    if (m.degree() > max_degree)
      throw Error(ErrorCode::TooLarge,
                  "monomial degree " + std::to_string(m.degree()) +
                      " exceeds the limit " + std::to_string(max_degree));
    ParsedCoeff c = parse_coeff(t["coeff"]);
    if (!c.exact) all_exact = false;
    if (c.exact) exact.comp[comp - 1].add_term(m, c.rat);
    dbl.comp[comp - 1].add_term(m, c.dbl);
  }

  bool zero = all_exact ? exact.is_zero() : dbl.is_zero();
  if (zero)
    throw Error(ErrorCode::EmptyField, "all terms cancel to the zero field");

  FieldData out;
  if (all_exact) {
    out.exact = std::move(exact);
    out.field = to_double_field(*out.exact);
  } else {
    out.field = std::move(dbl);
  }
  return out;
}

FieldData load_field_file(const std::string& path, int max_degree) {
  std::ifstream in(path);
  if (!in)
    throw Error(ErrorCode::ParseError, "cannot open file: " + path);
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::ParseError, std::string("invalid JSON: ") + e.what());
  }
  return parse_field_json(j, max_degree);
}

namespace {

nlohmann::json coeff_json(const Rational& c) {
  nlohmann::json out;
  BigInt n = num(c), d = den(c);
  // Stay numeric where an int64 holds the value, otherwise spill to strings.
  const BigInt lo = BigInt(std::numeric_limits<long long>::min());
  const BigInt hi = BigInt(std::numeric_limits<long long>::max());
  if (n >= lo && n <= hi) out["num"] = n.convert_to<long long>();
  else out["num"] = n.str();
  if (d <= hi) out["den"] = d.convert_to<long long>();
  else out["den"] = d.str();
  return out;
}

template <class K, class CoeffFn>
nlohmann::json field_json_impl(const PolyVec<K>& f, CoeffFn fn) {
  nlohmann::json terms = nlohmann::json::array();
  for (int jc = 0; jc < f.dim; ++jc) {
    for (const auto& [m, c] : f.comp[jc].terms()) {
      nlohmann::json t;
      t["component"] = jc + 1;
      nlohmann::json ex = nlohmann::json::array();
      for (int i = 0; i < f.dim; ++i) ex.push_back(m[i]);
      t["exponents"] = ex;
      t["coeff"] = fn(c);
      terms.push_back(t);
    }
  }
  nlohmann::json out;
  out["dim"] = f.dim;
  out["terms"] = terms;
  return out;
}

}  // namespace

nlohmann::json field_to_json(const RationalVec& f) {
  return field_json_impl(f, [](const Rational& c) { return coeff_json(c); });
}

nlohmann::json field_to_json(const PolyVec<double>& f) {
  return field_json_impl(f, [](double c) { return nlohmann::json(c); });
}

std::vector<std::vector<double>> jacobian_at(const PolyVec<double>& f,
                                             const std::vector<double>& x) {
  std::vector<std::vector<double>> jac(f.dim, std::vector<double>(f.dim, 0.0));
  for (int j = 0; j < f.dim; ++j)
    for (int l = 0; l < f.dim; ++l)
      jac[j][l] = f.comp[j].derivative(l).evaluate<double>(x);
  return jac;
}

std::vector<double> newton_find_equilibrium(const PolyVec<double>& f,
                                            std::vector<double> x,
                                            double tol, int max_iter) {
  if (static_cast<int>(x.size()) != f.dim)
    throw Error(ErrorCode::DimensionMismatch, "seed has wrong dimension");
  for (int it = 0; it < max_iter; ++it) {
    std::vector<double> fx = f.evaluate(x);
    double scale = 1.0 + linalg::norm2(x);
    if (linalg::norm2(fx) <= tol * scale) return x;
    auto jac = jacobian_at(f, x);
    std::vector<double> step;
    try {
      step = linalg::solve<double>(jac, fx, 1e-300);
    } catch (const Error&) {
      throw Error(ErrorCode::IllConditioned,
                  "singular Jacobian during equilibrium search");
    }
    for (int i = 0; i < f.dim; ++i) x[i] -= step[i];
    if (!std::isfinite(linalg::norm2(x)))
      throw Error(ErrorCode::NotAnEquilibrium,
                  "equilibrium search diverged from the seed");
  }
  std::vector<double> fx = f.evaluate(x);
  if (linalg::norm2(fx) <= 1e-10 * (1.0 + linalg::norm2(x))) return x;
  throw Error(ErrorCode::NotAnEquilibrium,
              "no equilibrium found near the seed point");
}

}  // namespace nfcert
