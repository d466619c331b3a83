#pragma once

#include "arithmat/integer.hpp"

#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace arithmat {

/// Univariate integer polynomial, coefficients by ascending degree with no
/// trailing zeros (the zero polynomial has no coefficients).
class UniPoly {
 public:
  UniPoly() = default;
  explicit UniPoly(std::vector<Integer> coeffs);
  UniPoly(std::initializer_list<long long> coeffs);

  static UniPoly constant(Integer c);
  /// c * q^degree
  static UniPoly monomial(Integer c, std::size_t degree);

  const std::vector<Integer>& coeffs() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  /// Degree, or -1 for the zero polynomial.
  long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
  Integer coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Integer(0); }
  Integer evaluate(const Integer& q) const;
  UniPoly pow(unsigned e) const;

  UniPoly& operator+=(const UniPoly& o);
  UniPoly& operator-=(const UniPoly& o);
  UniPoly& operator*=(const Integer& c);
  friend UniPoly operator+(UniPoly a, const UniPoly& b) { return a += b; }
  friend UniPoly operator-(UniPoly a, const UniPoly& b) { return a -= b; }
  friend UniPoly operator*(UniPoly a, const Integer& c) { return a *= c; }
  friend UniPoly operator*(const UniPoly& a, const UniPoly& b);
  friend bool operator==(const UniPoly&, const UniPoly&) = default;

  /// Ascending-degree text such as "5 - 4*q + 6*q^2".
  std::string to_string(const std::string& var = "q") const;

 private:
  void trim();
  std::vector<Integer> coeffs_;
};

/// Bivariate integer polynomial in x and y; keys are (x exponent, y exponent).
class BiPoly {
 public:
  using Exponents = std::pair<unsigned, unsigned>;
  using Terms = std::map<Exponents, Integer>;

  BiPoly() = default;
  static BiPoly constant(Integer c);
  static BiPoly monomial(Integer c, unsigned i, unsigned j);
  static BiPoly x();
  static BiPoly y();

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Integer coeff(unsigned i, unsigned j) const;
  unsigned x_degree() const;
  unsigned y_degree() const;

  /// Adds c * x^i * y^j.
  void add_term(unsigned i, unsigned j, const Integer& c);

  BiPoly& operator+=(const BiPoly& o);
  BiPoly& operator-=(const BiPoly& o);
  BiPoly& operator*=(const Integer& c);
  friend BiPoly operator+(BiPoly a, const BiPoly& b) { return a += b; }
  friend BiPoly operator-(BiPoly a, const BiPoly& b) { return a -= b; }
  friend BiPoly operator*(BiPoly a, const Integer& c) { return a *= c; }
  friend BiPoly operator*(const BiPoly& a, const BiPoly& b);
  friend bool operator==(const BiPoly&, const BiPoly&) = default;

  BiPoly swap_variables() const;
  Integer evaluate(const Integer& x, const Integer& y) const;
  /// Result of substituting x := sx(q), y := sy(q).
  UniPoly substitute(const UniPoly& sx, const UniPoly& sy) const;
  bool all_coefficients_nonnegative() const;

  /// Canonical rendering: terms sorted by (i, j) ascending, "c*x^i*y^j" with
  /// unit coefficients and exponents elided, e.g. "1 + x^2".
  std::string to_string() const;

 private:
  Terms terms_;
};

/// (x-1)^a (y-1)^b expanded.
BiPoly shifted_monomial(unsigned a, unsigned b);

}  // namespace arithmat
