/*
  This is ratfun.hpp — univariate rational functions in canonical form.

  A RatFun is a reduced fraction num/den of polynomials.  The canonical
  representative has integer coefficients on both sides, coprime integer
  contents, no common polynomial factor, and a positive leading coefficient
  in the denominator.  Degree tables are built and compared in this form.
*/

#pragma once

#include <string>

#include "blockweyl/poly.hpp"

namespace blockweyl {

class RatFun {
 public:
  RatFun() : d_num(), d_den(Rat(1)) {}
  RatFun(const Rat& c) : RatFun(Poly(c)) {}
  RatFun(Poly num) : d_num(std::move(num)), d_den(Rat(1)) { canonicalize(); }
  RatFun(Poly num, Poly den);

  const Poly& num() const { return d_num; }
  const Poly& den() const { return d_den; }

  bool isZero() const { return d_num.isZero(); }
  bool isPolynomial() const { return d_den.degree() == 0; }
  /* the polynomial num/den; throws unless isPolynomial() */
  Poly asPoly() const;

  bool operator==(const RatFun& other) const;
  bool operator!=(const RatFun& other) const { return !(*this == other); }

  RatFun operator-() const;
  RatFun operator+(const RatFun& other) const;
  RatFun operator-(const RatFun& other) const;
  RatFun operator*(const RatFun& other) const;
  RatFun operator/(const RatFun& other) const;
  RatFun& operator+=(const RatFun& o) { return *this = *this + o; }
  RatFun& operator-=(const RatFun& o) { return *this = *this - o; }
  RatFun& operator*=(const RatFun& o) { return *this = *this * o; }
  RatFun& operator/=(const RatFun& o) { return *this = *this / o; }

  /* order of vanishing of the fraction along the irreducible divisor d
     (net multiplicity in num minus multiplicity in den) */
  int multiplicity(const Poly& d) const;

  Rat eval(const Rat& x) const;

  std::string str(const std::string& var = "q") const;

 private:
  void canonicalize();

  Poly d_num;
  Poly d_den;
};

}  // namespace blockweyl
