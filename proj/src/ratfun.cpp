/*
  This is ratfun.cpp — implementation of canonical rational functions.
*/

#include "blockweyl/ratfun.hpp"

namespace blockweyl {

RatFun::RatFun(Poly num, Poly den) : d_num(std::move(num)), d_den(std::move(den))
{
  require(!d_den.isZero(), "RatFun: zero denominator");
  canonicalize();
}

void RatFun::canonicalize()
{
  if (d_num.isZero()) {
    d_den = Poly(Rat(1));
    return;
  }
  // remove the common polynomial factor
  Poly g = Poly::gcd(d_num, d_den);
  if (g.degree() > 0) {
    d_num = d_num.divExact(g);
    d_den = d_den.divExact(g);
  }
  // integer contents, reduced against each other; contents are unsigned,
  // so remember the overall sign separately
  bool flip = (d_num.leading() < 0) != (d_den.leading() < 0);
  Rat ratio = d_num.content() / d_den.content();  // reduced automatically
  d_num = d_num.primitivePart() * Rat(numerator(ratio));
  d_den = d_den.primitivePart() * Rat(denominator(ratio));
  if (flip)
    d_num = -d_num;
}

Poly RatFun::asPoly() const
{
  require(isPolynomial(), "asPoly: denominator is nonconstant");
  return d_num * (Rat(1) / d_den.coeff(0));
}

bool RatFun::operator==(const RatFun& other) const
{
  return d_num == other.d_num && d_den == other.d_den;
}

RatFun RatFun::operator-() const
{
  RatFun r(*this);
  r.d_num = -r.d_num;
  return r;
}

RatFun RatFun::operator+(const RatFun& other) const
{
  return RatFun(d_num * other.d_den + other.d_num * d_den, d_den * other.d_den);
}

RatFun RatFun::operator-(const RatFun& other) const
{
  return RatFun(d_num * other.d_den - other.d_num * d_den, d_den * other.d_den);
}

RatFun RatFun::operator*(const RatFun& other) const
{
  return RatFun(d_num * other.d_num, d_den * other.d_den);
}

RatFun RatFun::operator/(const RatFun& other) const
{
  require(!other.isZero(), "RatFun: division by zero");
  return RatFun(d_num * other.d_den, d_den * other.d_num);
}

int RatFun::multiplicity(const Poly& d) const
{
  require(!isZero(), "multiplicity of zero function");
  return d_num.multiplicity(d) - d_den.multiplicity(d);
}

Rat RatFun::eval(const Rat& x) const
{
  Rat den = d_den.eval(x);
  require(den != 0, "RatFun: evaluation at a pole");
  return d_num.eval(x) / den;
}

std::string RatFun::str(const std::string& var) const
{
  if (isPolynomial()) {
    Poly p = asPoly();
    return p.str(var);
  }
  return "(" + d_num.str(var) + ")/(" + d_den.str(var) + ")";
}

}  // namespace blockweyl
