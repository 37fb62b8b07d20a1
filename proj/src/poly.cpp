/*
  This is poly.cpp — implementation of dense rational-coefficient polynomials.
*/

#include "blockweyl/poly.hpp"

#include <sstream>

namespace blockweyl {

namespace {

const Rat zeroRat(0);

}  // namespace

Poly::Poly(const Rat& c)
{
  if (c != 0)
    d_c.push_back(c);
}

Poly::Poly(std::vector<Rat> coeffs) : d_c(std::move(coeffs))
{
  trim();
}

Poly Poly::monomial(const Rat& c, int d)
{
  require(d >= 0, "monomial: negative degree");
  Poly p;
  if (c != 0) {
    p.d_c.assign(d + 1, Rat(0));
    p.d_c[d] = c;
  }
  return p;
}

void Poly::trim()
{
  while (!d_c.empty() && d_c.back() == 0)
    d_c.pop_back();
}

int Poly::valuation() const
{
  for (size_t i = 0; i < d_c.size(); ++i)
    if (d_c[i] != 0)
      return static_cast<int>(i);
  return -1;
}

const Rat& Poly::coeff(int d) const
{
  if (d < 0 || d >= static_cast<int>(d_c.size()))
    return zeroRat;
  return d_c[d];
}

const Rat& Poly::leading() const
{
  require(!d_c.empty(), "leading coefficient of zero polynomial");
  return d_c.back();
}

Poly Poly::operator-() const
{
  Poly r(*this);
  for (auto& c : r.d_c)
    c = -c;
  return r;
}

Poly& Poly::operator+=(const Poly& other)
{
  if (d_c.size() < other.d_c.size())
    d_c.resize(other.d_c.size(), Rat(0));
  for (size_t i = 0; i < other.d_c.size(); ++i)
    d_c[i] += other.d_c[i];
  trim();
  return *this;
}

Poly& Poly::operator-=(const Poly& other)
{
  if (d_c.size() < other.d_c.size())
    d_c.resize(other.d_c.size(), Rat(0));
  for (size_t i = 0; i < other.d_c.size(); ++i)
    d_c[i] -= other.d_c[i];
  trim();
  return *this;
}

Poly Poly::operator+(const Poly& other) const
{
  Poly r(*this);
  r += other;
  return r;
}

Poly Poly::operator-(const Poly& other) const
{
  Poly r(*this);
  r -= other;
  return r;
}

Poly Poly::operator*(const Poly& other) const
{
  if (isZero() || other.isZero())
    return Poly();
  Poly r;
  r.d_c.assign(d_c.size() + other.d_c.size() - 1, Rat(0));
  for (size_t i = 0; i < d_c.size(); ++i) {
    if (d_c[i] == 0)
      continue;
    for (size_t j = 0; j < other.d_c.size(); ++j)
      if (other.d_c[j] != 0)
        r.d_c[i + j] += d_c[i] * other.d_c[j];
  }
  r.trim();
  return r;
}

Poly& Poly::operator*=(const Poly& other)
{
  *this = *this * other;
  return *this;
}

Poly Poly::operator*(const Rat& c) const
{
  if (c == 0)
    return Poly();
  Poly r(*this);
  for (auto& x : r.d_c)
    x *= c;
  return r;
}

Poly operator*(const Rat& c, const Poly& p)
{
  return p * c;
}

std::pair<Poly, Poly> Poly::divmod(const Poly& divisor) const
{
  require(!divisor.isZero(), "division by zero polynomial");
  Poly rem(*this);
  Poly quot;
  int dd = divisor.degree();
  const Rat& lead = divisor.leading();
  if (rem.degree() >= dd)
    quot.d_c.assign(rem.degree() - dd + 1, Rat(0));
  while (!rem.isZero() && rem.degree() >= dd) {
    int k = rem.degree() - dd;
    Rat f = rem.leading() / lead;
    quot.d_c[k] = f;
    // rem -= f * q^k * divisor
    for (int i = 0; i <= dd; ++i)
      rem.d_c[k + i] -= f * divisor.d_c[i];
    rem.trim();
  }
  quot.trim();
  return {quot, rem};
}

Poly Poly::divExact(const Poly& divisor) const
{
  auto [q, r] = divmod(divisor);
  require(r.isZero(), "divExact: nonzero remainder");
  return q;
}

int Poly::multiplicity(const Poly& divisor) const
{
  require(!isZero(), "multiplicity in zero polynomial");
  require(divisor.degree() >= 1, "multiplicity: divisor must be nonconstant");
  int m = 0;
  Poly cur(*this);
  while (true) {
    auto [q, r] = cur.divmod(divisor);
    if (!r.isZero())
      return m;
    cur = q;
    ++m;
  }
}

Rat Poly::eval(const Rat& x) const
{
  Rat acc(0);
  for (size_t i = d_c.size(); i-- > 0;)
    acc = acc * x + d_c[i];
  return acc;
}

Poly Poly::inflate(int k) const
{
  require(k >= 1, "inflate: k must be >= 1");
  if (isZero())
    return Poly();
  Poly r;
  r.d_c.assign(static_cast<size_t>(degree()) * k + 1, Rat(0));
  for (size_t i = 0; i < d_c.size(); ++i)
    r.d_c[i * k] = d_c[i];
  r.trim();
  return r;
}

Poly Poly::scaleArg(const Rat& c) const
{
  Poly r(*this);
  Rat pw(1);
  for (size_t i = 0; i < r.d_c.size(); ++i) {
    r.d_c[i] *= pw;
    pw *= c;
  }
  r.trim();
  return r;
}

Poly Poly::reversed() const
{
  Poly r(*this);
  std::reverse(r.d_c.begin(), r.d_c.end());
  r.trim();
  return r;
}

Poly Poly::derivative() const
{
  if (d_c.size() <= 1)
    return Poly();
  Poly r;
  r.d_c.resize(d_c.size() - 1);
  for (size_t i = 1; i < d_c.size(); ++i)
    r.d_c[i - 1] = d_c[i] * Rat(static_cast<unsigned>(i));
  r.trim();
  return r;
}

Poly Poly::gcd(Poly a, Poly b)
{
  while (!b.isZero()) {
    Poly r = a.divmod(b).second;
    // keep coefficients small: renormalize to a primitive representative
    if (!r.isZero())
      r = r.primitivePart();
    a = std::move(b);
    b = std::move(r);
  }
  if (a.isZero())
    return a;
  // monic normalization
  Rat lead = a.leading();
  for (auto& c : a.d_c)
    c /= lead;
  return a;
}

Rat Poly::content() const
{
  if (isZero())
    return Rat(0);
  // lcm of denominators
  Int den(1);
  for (const auto& c : d_c) {
    Int d = denominator(c);
    den = den / gcdInt(den, d) * d;
  }
  // gcd of scaled numerators
  Int num(0);
  for (const auto& c : d_c) {
    Rat scaled = c * Rat(den);
    require(denominator(scaled) == 1, "content: scaling failed");
    num = gcdInt(num, numerator(scaled));
  }
  return Rat(num, den);
}

Poly Poly::primitivePart() const
{
  if (isZero())
    return Poly();
  Rat c = content();
  Poly r = *this * (Rat(1) / c);
  if (r.leading() < 0)
    r = -r;
  return r;
}

std::string Poly::str(const std::string& var) const
{
  if (isZero())
    return "0";
  std::ostringstream os;
  bool first = true;
  for (int d = degree(); d >= 0; --d) {
    const Rat& c = d_c[d];
    if (c == 0)
      continue;
    Rat a = c;
    if (first) {
      if (a < 0) {
        os << "-";
        a = -a;
      }
      first = false;
    } else {
      if (a < 0) {
        os << "-";
        a = -a;
      } else {
        os << "+";
      }
    }
    bool unitCoeff = (a == 1 && d > 0);
    if (!unitCoeff) {
      if (denominator(a) == 1)
        os << numerator(a);
      else
        os << "(" << numerator(a) << "/" << denominator(a) << ")";
      if (d > 0)
        os << "*";
    }
    if (d > 0) {
      os << var;
      if (d > 1)
        os << "^" << d;
    }
  }
  return os.str();
}

Poly qInt(int n)
{
  require(n >= 0, "qInt: negative argument");
  std::vector<Rat> c(static_cast<size_t>(n), Rat(1));
  return Poly(std::move(c));
}

Poly qFactorial(int n)
{
  Poly p = Poly(Rat(1));
  for (int k = 1; k <= n; ++k)
    p *= qInt(k);
  return p;
}

Poly qPowMinusOne(int n)
{
  Poly p = Poly::monomial(Rat(1), n);
  p -= Poly(Rat(1));
  return p;
}

Poly qPowPlusOne(int n)
{
  Poly p = Poly::monomial(Rat(1), n);
  p += Poly(Rat(1));
  return p;
}

}  // namespace blockweyl
