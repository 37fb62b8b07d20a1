/*
  This is poly.hpp — dense univariate polynomials with rational coefficients.

  Poly is the workhorse for degree polynomials, characteristic polynomials
  and Poincare series.  Coefficients are exact rationals; the indeterminate
  is written "q" by convention but printing accepts any variable name.
*/

#pragma once

#include <string>
#include <vector>

#include "blockweyl/numeric.hpp"

namespace blockweyl {

class Poly {
 public:
  Poly() {}
  explicit Poly(const Rat& c);
  Poly(std::vector<Rat> coeffs);

  /* the monomial c*q^d */
  static Poly monomial(const Rat& c, int d);

  bool isZero() const { return d_c.empty(); }
  /* degree; -1 for the zero polynomial */
  int degree() const { return static_cast<int>(d_c.size()) - 1; }
  /* order of vanishing at q=0; -1 for the zero polynomial */
  int valuation() const;
  const Rat& coeff(int d) const;
  const std::vector<Rat>& coeffs() const { return d_c; }
  const Rat& leading() const;

  bool operator==(const Poly& other) const { return d_c == other.d_c; }
  bool operator!=(const Poly& other) const { return d_c != other.d_c; }

  Poly operator-() const;
  Poly& operator+=(const Poly& other);
  Poly& operator-=(const Poly& other);
  Poly operator+(const Poly& other) const;
  Poly operator-(const Poly& other) const;
  Poly operator*(const Poly& other) const;
  Poly& operator*=(const Poly& other);
  Poly operator*(const Rat& c) const;

  /* quotient and remainder; divisor must be nonzero */
  std::pair<Poly, Poly> divmod(const Poly& divisor) const;
  /* exact quotient; throws InvariantError when the remainder is nonzero */
  Poly divExact(const Poly& divisor) const;
  /* largest k with divisor^k dividing *this (this nonzero, deg divisor > 0) */
  int multiplicity(const Poly& divisor) const;

  Rat eval(const Rat& x) const;
  /* substitute q -> q^k, k >= 1 */
  Poly inflate(int k) const;
  /* substitute q -> c*q */
  Poly scaleArg(const Rat& c) const;
  /* reverse coefficients: q^deg * p(1/q); p must be nonzero or zero poly */
  Poly reversed() const;
  /* derivative */
  Poly derivative() const;

  /* monic gcd, computed by the Euclidean algorithm */
  static Poly gcd(Poly a, Poly b);

  /* content: gcd of coefficient numerators over lcm trick; returns the
     positive rational c such that (*this)/c has coprime integer
     coefficients.  Zero polynomial has content 0. */
  Rat content() const;
  /* divide by content, then normalize the leading coefficient to be > 0 */
  Poly primitivePart() const;

  std::string str(const std::string& var = "q") const;

 private:
  void trim();

  std::vector<Rat> d_c;  // d_c[i] = coefficient of q^i; invariant: no
                         // trailing zeros (zero poly = empty vector)
};

Poly operator*(const Rat& c, const Poly& p);

/* 1 + q + ... + q^(n-1) */
Poly qInt(int n);
/* (q^n - 1)/(q - 1) * ... : q-factorial [n]_q! = prod_{k=1..n} qInt(k) */
Poly qFactorial(int n);
/* q^n - 1 */
Poly qPowMinusOne(int n);
/* q^n + 1 */
Poly qPowPlusOne(int n);

}  // namespace blockweyl
