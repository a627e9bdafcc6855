#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace surfgraph {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

std::string to_string(const Rational& r);  // "p/q", or "p" when q = 1
Rational parse_rational(const std::string& text);

/// Univariate polynomial with exact integer coefficients, ascending degree.
/// Trailing zeros are trimmed, so the zero polynomial has no coefficients.
class IntegerPolynomial {
 public:
  IntegerPolynomial() = default;
  explicit IntegerPolynomial(std::vector<BigInt> coefficients);
  static IntegerPolynomial constant(BigInt c);
  static IntegerPolynomial monomial(BigInt c, int degree);

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }  // -1 for zero
  bool is_zero() const { return coeffs_.empty(); }
  BigInt coefficient(int i) const;
  const std::vector<BigInt>& coefficients() const { return coeffs_; }

  BigInt evaluate(const BigInt& x) const;
  BigInt operator()(std::int64_t x) const { return evaluate(BigInt(x)); }

  IntegerPolynomial& operator+=(const IntegerPolynomial& o);
  IntegerPolynomial& operator-=(const IntegerPolynomial& o);
  friend IntegerPolynomial operator+(IntegerPolynomial a, const IntegerPolynomial& b) { return a += b; }
  friend IntegerPolynomial operator-(IntegerPolynomial a, const IntegerPolynomial& b) { return a -= b; }
  friend IntegerPolynomial operator*(const IntegerPolynomial& a, const IntegerPolynomial& b);
  IntegerPolynomial pow(int e) const;

  std::string to_string(const std::string& var = "k") const;
  friend bool operator==(const IntegerPolynomial&, const IntegerPolynomial&) = default;

 private:
  void trim();
  std::vector<BigInt> coeffs_;
};

/// Lagrange interpolation through (x_i, y_i) over the rationals. Returns
/// ascending rational coefficients of the unique polynomial of degree
/// < xs.size().
std::vector<Rational> lagrange_interpolate(const std::vector<BigInt>& xs,
                                           const std::vector<BigInt>& ys);
Rational evaluate(const std::vector<Rational>& coeffs, const Rational& x);

/// Interpolates counts sampled at k = 1, 2, …, counts.size(). Throws
/// Error{NonIntegerCoefficients} if the interpolant is not integral.
IntegerPolynomial interpolate(const std::vector<BigInt>& counts_from_one);

/// A function of integers given by `period` polynomial constituents with
/// rational coefficients; constituent r serves every n ≡ r (mod period).
class QuasiPolynomial {
 public:
  QuasiPolynomial() = default;
  QuasiPolynomial(int period, std::vector<std::vector<Rational>> constituents);

  int period() const { return period_; }
  const std::vector<std::vector<Rational>>& constituents() const { return constituents_; }
  const std::vector<Rational>& constituent_for(std::int64_t n) const;
  Rational evaluate(std::int64_t n) const;
  friend bool operator==(const QuasiPolynomial&, const QuasiPolynomial&) = default;

 private:
  int period_ = 1;
  std::vector<std::vector<Rational>> constituents_;
};

/// Finds the smallest period p ≤ max_period for which, in every residue
/// class mod p, the polynomial of degree ≤ degree_bound through the first
/// degree_bound+1 samples of the class also reproduces the remaining sample.
/// Samples are requested from `count` at k = 1 … p·(degree_bound+2) (each
/// k at most once). Throws Error{NoFit} when no period fits.
QuasiPolynomial fit_quasipolynomial(const std::function<BigInt(std::int64_t)>& count,
                                    int degree_bound, int max_period = 6);

/// Same, from precomputed samples at k = 1 … samples.size(); periods whose
/// sample requirement exceeds the data are not tried.
QuasiPolynomial fit_quasipolynomial(const std::vector<BigInt>& samples_from_one,
                                    int degree_bound, int max_period = 6);

}  // namespace surfgraph
