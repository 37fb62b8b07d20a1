/*
  This is hecke.cpp — weighted generic degrees and their integer invariants.
*/

#include "blockweyl/hecke.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <map>

#include <json.hpp>

#include "blockweyl/group.hpp"

namespace blockweyl {

namespace {

/******** Chapter 0 -- small building blocks ********************************/

/* the monomial v^e */
Poly vpow(int e)
{
  return Poly::monomial(Rat(1), e);
}

/* v^e + 1 (e >= 0; e = 0 gives the constant 2) */
Poly onePlus(int e)
{
  return vpow(e) + Poly(Rat(1));
}

/* mirror of CharTable::forType's identification of diagram-equal types */
TypeSymbol normalType(TypeSymbol t)
{
  if (t.rank == 1 && (t.family == Family::B || t.family == Family::C ||
                      t.family == Family::D))
    t.family = Family::A;
  if (t.family == Family::D && t.rank == 3)
    t.family = Family::A;
  if (t.family == Family::C)
    t.family = Family::B;
  return t;
}

/* mixed hook lengths alpha_i - j + beta'_j - i + 1 over the cells (i,j)
   of alpha; these govern the one-parameter factors of the Schur element
   attached to (alpha;beta) */
std::vector<int> mixedHooks(const Partition& alpha, const Partition& beta)
{
  Partition bc = conjugate(beta);
  std::vector<int> out;
  for (int i = 1; i <= static_cast<int>(alpha.size()); ++i)
    for (int j = 1; j <= alpha[i - 1]; ++j) {
      int bcj = j <= static_cast<int>(bc.size()) ? bc[j - 1] : 0;
      out.push_back(alpha[i - 1] - j + bcj - i + 1);
    }
  return out;
}

/* the combined monomial exponent offset of (alpha;beta): n(alpha) +
   n(beta) + sum_i alpha'_i * beta'_i over the common columns */
int hypOffset(const Bipartition& bp)
{
  int cross = 0;
  Partition ac = conjugate(bp.first), bc = conjugate(bp.second);
  for (size_t i = 0; i < ac.size() && i < bc.size(); ++i)
    cross += ac[i] * bc[i];
  return nInvariant(bp.first) + nInvariant(bp.second) + cross;
}

/* equal-parameter generic degree in the symmetric family: the hook
   quotient q^(k*n(lambda)) [n]! / prod [h] at q = v^(2k) */
RatFun genericDegreeSym(const Partition& la, int k)
{
  int n = weight(la);
  Poly num = qFactorial(n).inflate(2 * k);
  for (int h : hookLengths(la))
    num = num.divExact(qInt(h).inflate(2 * k));
  return RatFun(vpow(2 * k * nInvariant(la)) * num);
}

/******** Chapter 0 bis -- slots of the order-twelve dihedral table *********/

/* The six irreducibles of the dihedral group of order twelve, located in
   CharTable::forType by character values rather than by label: the two
   linear characters that are odd on exactly one reflection class are told
   apart by the root length behind that class. */
struct G2Slots {
  int triv, refl, twoPrime, epsLong, epsShort, sgn;
};

const G2Slots& g2Slots()
{
  static const G2Slots slots = [] {
    const CharTable& t = CharTable::forType({Family::G, 2});
    ReflectionGroup g(CoxeterDescriptor::parse("G2"));
    const RootSystem& rs = g.rootSystem();
    int longNode = rs.norm2[rs.simples[0]] > rs.norm2[rs.simples[1]] ? 0 : 1;
    int cLong = g.classOf(g.generator(longNode));
    int cShort = g.classOf(g.generator(1 - longNode));
    require(t.classData(cLong).size == Int(3) &&
                t.classData(cShort).size == Int(3),
            "unexpected dihedral reflection classes");
    G2Slots out{-1, -1, -1, -1, -1, -1};
    for (int e = 0; e < t.irrepCount(); ++e) {
      if (t.irrepData(e).dim == Int(2)) {
        (t.bInvariant(e) == 1 ? out.refl : out.twoPrime) = e;
        continue;
      }
      Int vl = t.value(e, cLong), vs = t.value(e, cShort);
      if (vl == 1 && vs == 1)
        out.triv = e;
      else if (vl == -1 && vs == -1)
        out.sgn = e;
      else if (vl == -1)
        out.epsLong = e;
      else
        out.epsShort = e;
    }
    require(out.triv >= 0 && out.refl >= 0 && out.twoPrime >= 0 &&
                out.epsLong >= 0 && out.epsShort >= 0 && out.sgn >= 0,
            "dihedral slot identification failed");
    return out;
  }();
  return slots;
}

/* Engine degrees for the order-twelve dihedral group at weights (a,b) =
   (long, short), q = v^(2a), y = v^(2b).  The two-dimensional slots carry
   the square root v^(a+b) of qy; the two middle linear slots use the
   normalization whose equal-weight specialization is the standard
   equal-parameter degree (the closed table of chapter I degenerates
   there).  Returned in slot order triv, refl, twoPrime, epsLong,
   epsShort, sgn. */
std::vector<RatFun> g2EngineDegrees(int a, int b)
{
  Poly q = vpow(2 * a), y = vpow(2 * b), one(Rat(1));
  Poly root = vpow(a + b);  // v^(a+b), the square root of qy
  Poly qy = vpow(2 * a + 2 * b);
  Poly sextic = vpow(4 * a + 4 * b) + qy + one;     // q^2 y^2 + qy + 1
  Poly hexDen = vpow(4 * a) + qy + vpow(4 * b);     // q^2 + qy + y^2
  std::vector<RatFun> out(6);
  out[0] = RatFun(one);
  out[1] = RatFun(qy * onePlus(2 * a) * onePlus(2 * b) * (qy + root + one),
                  (q + root + y) * Rat(2));
  out[2] = RatFun(qy * onePlus(2 * a) * onePlus(2 * b) * (qy - root + one),
                  (q - root + y) * Rat(2));
  out[3] = RatFun(vpow(6 * a) * sextic, hexDen);
  out[4] = RatFun(vpow(6 * b) * sextic, hexDen);
  out[5] = RatFun(vpow(6 * a + 6 * b));
  return out;
}

/* a-invariants of the dihedral engine in the same slot order */
std::vector<Int> g2AList(int a, int b)
{
  int m = std::min(a, b);
  return {Int(0),         Int(a + b - m),     Int(a + b - m),
          Int(3 * a - 2 * m), Int(3 * b - 2 * m), Int(3 * (a + b))};
}

/* v^2 + 1 multiplicity of the hyperoctahedral degree at equal chain
   weight 1 and end-node weight b in {0,1}, computed factor by factor
   without assembling the fraction */
int zHyp(const Bipartition& bp, int b)
{
  static const Poly phi4 = onePlus(2);
  int n = weight(bp.first) + weight(bp.second);
  int z = 0;
  for (int i = 1; i <= n; ++i)
    z += qInt(i).inflate(2).multiplicity(phi4) +
         onePlus(2 * b + 2 * (i - 1)).multiplicity(phi4);
  for (const Partition* p : {&bp.first, &bp.second})
    for (int h : hookLengths(*p))
      z -= qInt(h).inflate(2).multiplicity(phi4);
  for (int h : mixedHooks(bp.first, bp.second))
    z -= onePlus(std::abs(2 * b + 2 * h)).multiplicity(phi4);
  for (int h : mixedHooks(bp.second, bp.first))
    z -= onePlus(std::abs(2 * h - 2 * b)).multiplicity(phi4);
  return z;
}

void checkWeights(const TypeSymbol& t, const std::vector<int>& weights)
{
  require(static_cast<int>(weights.size()) == t.rank,
          "weight vector does not match the rank");
  for (int w : weights)
    require(w >= 1, "weights must be positive");
}

void checkEqual(const std::vector<int>& weights, int lo, int hi)
{
  for (int i = lo; i < hi; ++i)
    require(weights[i] == weights[lo],
            "weights must agree across bonds of odd order");
}

}  // namespace

/******** Chapter I -- closed degree tables at small rank *******************/

/* Slot orders.  A1: trivial, sign.  A2: trivial, reflection, sign.
   B2 (chain weight a, end weight b, q = v^(2a), y = v^(2b), m = min):
     (2;-)    1                          0
     (1;1)    qy(q+1)(y+1)/(q+y)         a+b-m
     (1.1;-)  q^2(qy+1)/(q+y)            2a-m
     (-;2)    y^2(qy+1)/(q+y)            2b-m
     (-;1.1)  q^2 y^2                    2a+2b
   B3 (weights a,a,b; m = min(a,b), m' = min(2a,b)):
     (3;-)      1                                            0
     (2;1)      qy (q^2+q+1)(qy+1)/(q+y)                     a+b-m
     (2.1;-)    q^2 (q+1)(q^2 y+1)/(q+y)                     2a-m
     (-;3)      y^3 (qy+1)(q^2 y+1)/((q^2+y)(q+y))           3b-m-m'
     (1;2)      q y^2 (q^2+q+1)(q^2 y+1)/(q^2+y)             a+2b-m'
     (1.1;1)    q^3 y (q^2+q+1)(q^2 y+1)/(q^2+y)             3a+b-m'
     (-;2.1)    q^2 y^3 (q+1)(q^2 y+1)/(q+y)                 2a+3b-m
     (1;1.1)    q^3 y^2 (q^2+q+1)(qy+1)/(q+y)                3a+2b-m
     (1.1.1;-)  q^6 (qy+1)(q^2 y+1)/((q^2+y)(q+y))           6a-m-m'
     (-;1.1.1)  q^6 y^3                                      6a+3b
   G2 (weight a on the long node, b on the short node, r = v^(a+b)):
     triv   1                                   0
     refl   qy(q+1)(y+1)(qy+r+1)/(2(q+r+y))     a+b-m
     two'   qy(q+1)(y+1)(qy-r+1)/(2(q-r+y))     a+b-m
     eps_l  q^2(q^2y^2+qy+1)/(q^2+qy+y^2)       2a-2m
     eps_s  y^2(q^2y^2+qy+1)/(q^2+qy+y^2)       2b-2m
     sgn    q^3 y^3                             3a+3b
   The two middle linear slots of G2 degenerate at a = b: expression and
   closed value drop together, so each slot stays internally consistent.
   aValues() instead uses the engine normalization (see g2EngineDegrees). */

namespace {

DegreeSlot makeSlot(const CharTable& tab, const std::string& label,
                    RatFun degree, long long aValue)
{
  int e = tab.irrepByLabel(label);
  return {label, tab.irrepData(e).dim, std::move(degree), Int(aValue),
          DegreeOrigin::table};
}

}  // namespace

std::vector<DegreeSlot> degreeTableA1(int a)
{
  require(a >= 1, "degreeTableA1: weight must be positive");
  const CharTable& tab = CharTable::forType({Family::A, 1});
  std::vector<DegreeSlot> out;
  out.push_back(makeSlot(tab, "2", RatFun(Rat(1)), 0));
  out.push_back(makeSlot(tab, "1.1", RatFun(vpow(2 * a)), a));
  return out;
}

std::vector<DegreeSlot> degreeTableA2(int a)
{
  require(a >= 1, "degreeTableA2: weight must be positive");
  const CharTable& tab = CharTable::forType({Family::A, 2});
  std::vector<DegreeSlot> out;
  out.push_back(makeSlot(tab, "3", RatFun(Rat(1)), 0));
  out.push_back(makeSlot(tab, "2.1", RatFun(vpow(4 * a) + vpow(2 * a)), a));
  out.push_back(makeSlot(tab, "1.1.1", RatFun(vpow(6 * a)), 3 * a));
  return out;
}

std::vector<DegreeSlot> degreeTableB2(int a, int b)
{
  require(a >= 1 && b >= 1, "degreeTableB2: weights must be positive");
  const CharTable& tab = CharTable::forType({Family::B, 2});
  Poly one(Rat(1));
  Poly q = vpow(2 * a), y = vpow(2 * b);
  Poly qPlusY = q + y;
  int m = std::min(a, b);
  std::vector<DegreeSlot> out;
  out.push_back(makeSlot(tab, "(2;-)", RatFun(one), 0));
  out.push_back(makeSlot(
      tab, "(1;1)",
      RatFun(vpow(2 * a + 2 * b) * onePlus(2 * a) * onePlus(2 * b), qPlusY),
      a + b - m));
  out.push_back(makeSlot(
      tab, "(1.1;-)",
      RatFun(vpow(4 * a) * onePlus(2 * a + 2 * b), qPlusY), 2 * a - m));
  out.push_back(makeSlot(
      tab, "(-;2)", RatFun(vpow(4 * b) * onePlus(2 * a + 2 * b), qPlusY),
      2 * b - m));
  out.push_back(
      makeSlot(tab, "(-;1.1)", RatFun(vpow(4 * a + 4 * b)), 2 * a + 2 * b));
  return out;
}

std::vector<DegreeSlot> degreeTableB3(int a, int b)
{
  require(a >= 1 && b >= 1, "degreeTableB3: weights must be positive");
  const CharTable& tab = CharTable::forType({Family::B, 3});
  Poly one(Rat(1));
  Poly q = vpow(2 * a), y = vpow(2 * b);
  Poly qPlusY = q + y;
  Poly q2PlusY = vpow(4 * a) + y;
  Poly chain = vpow(4 * a) + vpow(2 * a) + one;  // q^2 + q + 1
  Poly qyOne = onePlus(2 * a + 2 * b);           // qy + 1
  Poly q2yOne = onePlus(4 * a + 2 * b);          // q^2 y + 1
  int m = std::min(a, b), mp = std::min(2 * a, b);
  std::vector<DegreeSlot> out;
  out.push_back(makeSlot(tab, "(3;-)", RatFun(one), 0));
  out.push_back(makeSlot(
      tab, "(2;1)", RatFun(vpow(2 * a + 2 * b) * chain * qyOne, qPlusY),
      a + b - m));
  out.push_back(makeSlot(
      tab, "(2.1;-)",
      RatFun(vpow(4 * a) * onePlus(2 * a) * q2yOne, qPlusY), 2 * a - m));
  out.push_back(makeSlot(
      tab, "(-;3)", RatFun(vpow(6 * b) * qyOne * q2yOne, q2PlusY * qPlusY),
      3 * b - m - mp));
  out.push_back(makeSlot(
      tab, "(1;2)", RatFun(vpow(2 * a + 4 * b) * chain * q2yOne, q2PlusY),
      a + 2 * b - mp));
  out.push_back(makeSlot(
      tab, "(1.1;1)",
      RatFun(vpow(6 * a + 2 * b) * chain * q2yOne, q2PlusY),
      3 * a + b - mp));
  out.push_back(makeSlot(
      tab, "(-;2.1)",
      RatFun(vpow(4 * a + 6 * b) * onePlus(2 * a) * q2yOne, qPlusY),
      2 * a + 3 * b - m));
  out.push_back(makeSlot(
      tab, "(1;1.1)",
      RatFun(vpow(6 * a + 4 * b) * chain * qyOne, qPlusY),
      3 * a + 2 * b - m));
  out.push_back(makeSlot(
      tab, "(1.1.1;-)",
      RatFun(vpow(12 * a) * qyOne * q2yOne, q2PlusY * qPlusY),
      6 * a - m - mp));
  out.push_back(makeSlot(tab, "(-;1.1.1)", RatFun(vpow(12 * a + 6 * b)),
                         6 * a + 3 * b));
  return out;
}

std::vector<DegreeSlot> degreeTableG2(int a, int b)
{
  require(a >= 1 && b >= 1, "degreeTableG2: weights must be positive");
  const CharTable& tab = CharTable::forType({Family::G, 2});
  const G2Slots& s = g2Slots();
  auto label = [&](int e) { return tab.irrepData(e).label; };
  Poly one(Rat(1));
  Poly q = vpow(2 * a), y = vpow(2 * b);
  Poly root = vpow(a + b);
  Poly qy = vpow(2 * a + 2 * b);
  Poly sextic = vpow(4 * a + 4 * b) + qy + one;
  Poly hexDen = vpow(4 * a) + qy + vpow(4 * b);
  int m = std::min(a, b);
  std::vector<DegreeSlot> out;
  out.push_back(makeSlot(tab, label(s.triv), RatFun(one), 0));
  out.push_back(makeSlot(
      tab, label(s.refl),
      RatFun(qy * onePlus(2 * a) * onePlus(2 * b) * (qy + root + one),
             (q + root + y) * Rat(2)),
      a + b - m));
  out.push_back(makeSlot(
      tab, label(s.twoPrime),
      RatFun(qy * onePlus(2 * a) * onePlus(2 * b) * (qy - root + one),
             (q - root + y) * Rat(2)),
      a + b - m));
  out.push_back(makeSlot(tab, label(s.epsLong),
                         RatFun(vpow(4 * a) * sextic, hexDen),
                         2 * a - 2 * m));
  out.push_back(makeSlot(tab, label(s.epsShort),
                         RatFun(vpow(4 * b) * sextic, hexDen),
                         2 * b - 2 * m));
  out.push_back(makeSlot(tab, label(s.sgn), RatFun(vpow(6 * a + 6 * b)),
                         3 * a + 3 * b));
  return out;
}

/******** Chapter II -- the hyperoctahedral degree engine *******************/

Poly poincareHyp(int n, int a, int b)
{
  require(n >= 1 && a >= 1 && b >= 0, "poincareHyp: arguments out of range");
  Poly p(Rat(1));
  for (int i = 1; i <= n; ++i) {
    p *= qInt(i).inflate(2 * a);
    p *= onePlus(2 * b + 2 * a * (i - 1));
  }
  return p;
}

RatFun genericDegreeHyp(const Bipartition& bp, int a, int b)
{
  require(a >= 1 && b >= 0, "genericDegreeHyp: weights out of range");
  int n = weight(bp.first) + weight(bp.second);
  require(n >= 1, "genericDegreeHyp: empty bipartition");

  // Schur element of (alpha;beta), assembled as num/den in v: hook factors
  // [h]_q, mixed-hook factors y^(+-1) q^H + 1 and the monomial q^-offset
  Poly num(Rat(1)), den = vpow(2 * a * hypOffset(bp));
  for (const Partition* p : {&bp.first, &bp.second})
    for (int h : hookLengths(*p))
      num *= qInt(h).inflate(2 * a);
  auto mixedSide = [&](const Partition& x, const Partition& y, int sign) {
    for (int h : mixedHooks(x, y)) {
      int e = sign * 2 * b + 2 * a * h;
      num *= onePlus(std::abs(e));
      if (e < 0)
        den *= vpow(-e);
    }
  };
  mixedSide(bp.first, bp.second, +1);
  mixedSide(bp.second, bp.first, -1);
  return RatFun(poincareHyp(n, a, b)) / RatFun(num, den);
}

Int aInvariantHyp(const Bipartition& bp, int a, int b)
{
  require(a >= 1 && b >= 0, "aInvariantHyp: weights out of range");
  long long val = static_cast<long long>(a) * hypOffset(bp);
  for (int h : mixedHooks(bp.first, bp.second))
    val -= std::min(0LL, static_cast<long long>(b) +
                             static_cast<long long>(a) * h);
  for (int h : mixedHooks(bp.second, bp.first))
    val -= std::min(0LL, static_cast<long long>(a) * h -
                             static_cast<long long>(b));
  return Int(val);
}

/******** Chapter III -- invariants by type *********************************/

std::vector<Int> aValues(const TypeSymbol& t, const std::vector<int>& weights)
{
  checkWeights(t, weights);
  TypeSymbol nt = normalType(t);
  switch (nt.family) {
    case Family::A: {
      checkEqual(weights, 0, t.rank);
      const CharTable& tab = CharTable::forType(t);
      std::vector<Int> out;
      for (int e = 0; e < tab.irrepCount(); ++e)
        out.push_back(Int(weights[0]) *
                      nInvariant(tab.irrepData(e).bilabel.first));
      return out;
    }
    case Family::B: {
      checkEqual(weights, 0, t.rank - 1);
      const CharTable& tab = CharTable::forType(t);
      std::vector<Int> out;
      for (int e = 0; e < tab.irrepCount(); ++e)
        out.push_back(aInvariantHyp(tab.irrepData(e).bilabel, weights[0],
                                    weights[t.rank - 1]));
      return out;
    }
    case Family::D: {
      checkEqual(weights, 0, t.rank);
      const CharTable& tab = CharTable::forType(t);
      std::vector<Int> out;
      for (int e = 0; e < tab.irrepCount(); ++e)
        out.push_back(aInvariantHyp(tab.irrepData(e).bilabel, weights[0], 0));
      return out;
    }
    case Family::G: {
      const G2Slots& s = g2Slots();
      std::vector<Int> alist = g2AList(weights[0], weights[1]);
      std::vector<Int> out(6);
      const int order[6] = {s.triv, s.refl, s.twoPrime,
                            s.epsLong, s.epsShort, s.sgn};
      for (int i = 0; i < 6; ++i)
        out[order[i]] = alist[i];
      return out;
    }
    case Family::F: {
      if (auto ext = externalAValues(t, weights))
        return *ext;
      throw Unsupported(
          "weighted a-data for type F4 requires BLOCKWEYL_DATA");
    }
    default:
      throw Unsupported("a-data beyond type F4 is not available");
  }
}

std::vector<RatFun> genericDegrees(const TypeSymbol& t, int k)
{
  require(k >= 1, "genericDegrees: weight must be positive");
  TypeSymbol nt = normalType(t);
  switch (nt.family) {
    case Family::A: {
      const CharTable& tab = CharTable::forType(t);
      std::vector<RatFun> out;
      for (int e = 0; e < tab.irrepCount(); ++e)
        out.push_back(genericDegreeSym(tab.irrepData(e).bilabel.first, k));
      return out;
    }
    case Family::B: {
      const CharTable& tab = CharTable::forType(t);
      std::vector<RatFun> out;
      for (int e = 0; e < tab.irrepCount(); ++e)
        out.push_back(genericDegreeHyp(tab.irrepData(e).bilabel, k, k));
      return out;
    }
    case Family::D: {
      const CharTable& tab = CharTable::forType(t);
      std::vector<RatFun> out;
      for (int e = 0; e < tab.irrepCount(); ++e) {
        RatFun d = genericDegreeHyp(tab.irrepData(e).bilabel, k, 0);
        if (tab.irrepData(e).splitHalf >= 0)
          d = d * RatFun(Rat(1, 2));
        out.push_back(std::move(d));
      }
      return out;
    }
    case Family::G: {
      std::vector<RatFun> engine = g2EngineDegrees(k, k);
      const G2Slots& s = g2Slots();
      std::vector<RatFun> out(6);
      const int order[6] = {s.triv, s.refl, s.twoPrime,
                            s.epsLong, s.epsShort, s.sgn};
      for (int i = 0; i < 6; ++i)
        out[order[i]] = engine[i];
      return out;
    }
    default:
      throw Unsupported("generic degrees beyond the dihedral engine");
  }
}

int zInvariant(const TypeSymbol& t, int e)
{
  static const Poly phi4 = onePlus(2);
  TypeSymbol nt = normalType(t);
  switch (nt.family) {
    case Family::A: {
      const Partition& la = CharTable::forType(t).irrepData(e).bilabel.first;
      int n = weight(la);
      int z = 0;
      for (int i = 1; i <= n; ++i)
        z += qInt(i).inflate(2).multiplicity(phi4);
      for (int h : hookLengths(la))
        z -= qInt(h).inflate(2).multiplicity(phi4);
      return z;
    }
    case Family::B:
      return zHyp(CharTable::forType(t).irrepData(e).bilabel, 1);
    case Family::D:
      return zHyp(CharTable::forType(t).irrepData(e).bilabel, 0);
    case Family::G:
      return genericDegrees(t, 1)[e].multiplicity(phi4);
    default:
      throw Unsupported("z-invariants beyond the dihedral engine");
  }
}

std::vector<int> specialRepresentations(const TypeSymbol& t)
{
  const CharTable& tab = CharTable::forType(t);
  std::vector<Int> av = aValues(t, std::vector<int>(t.rank, 1));
  std::vector<int> out;
  for (int e = 0; e < tab.irrepCount(); ++e)
    if (av[e] == Int(tab.bInvariant(e)))
      out.push_back(e);
  return out;
}

int distinguishedSpecial(const TypeSymbol& t)
{
  DiagramAutomorphism op = opAutomorphism(CoxeterDescriptor{false, {t}});
  int r = op.orbitCount();
  int found = -1;
  for (int e : specialRepresentations(t))
    if (zInvariant(t, e) == r) {
      require(found < 0, "two distinguished special representations");
      found = e;
    }
  return found;
}

/******** Chapter IV -- externally supplied a-data **************************/

std::optional<std::vector<Int>> externalAValues(const TypeSymbol& t,
                                                const std::vector<int>& weights)
{
  const char* path = std::getenv("BLOCKWEYL_DATA");
  if (path == nullptr || *path == '\0')
    return std::nullopt;
  std::ifstream in(path);
  if (!in)
    throw ParseError(std::string("BLOCKWEYL_DATA: cannot open ") + path);
  nlohmann::json doc;
  try {
    in >> doc;
  } catch (const nlohmann::json::exception& err) {
    throw ParseError(std::string("BLOCKWEYL_DATA: ") + err.what());
  }
  if (!doc.is_array())
    throw ParseError("BLOCKWEYL_DATA: top-level value must be an array");

  const CharTable& tab = CharTable::forType(t);
  std::map<std::string, int> byLabel;
  for (int e = 0; e < tab.irrepCount(); ++e)
    byLabel[tab.irrepData(e).label] = e;

  std::vector<Int> out(tab.irrepCount());
  std::vector<bool> seen(tab.irrepCount(), false);
  bool any = false;
  for (const auto& entry : doc) {
    if (!entry.is_object() || !entry.contains("label") ||
        !entry.contains("weights") || !entry.contains("a"))
      throw ParseError(
          "BLOCKWEYL_DATA: entries need label, weights and a fields");
    if (!entry["weights"].is_array())
      throw ParseError("BLOCKWEYL_DATA: weights must be an array");
    std::vector<int> w;
    for (const auto& x : entry["weights"]) {
      if (!x.is_number_integer())
        throw ParseError("BLOCKWEYL_DATA: weights must be integers");
      w.push_back(x.get<int>());
    }
    if (w != weights)
      continue;
    any = true;
    if (!entry["label"].is_string() || !entry["a"].is_number_integer())
      throw ParseError("BLOCKWEYL_DATA: label must be a string, a an integer");
    auto it = byLabel.find(entry["label"].get<std::string>());
    if (it == byLabel.end())
      throw ParseError("BLOCKWEYL_DATA: unknown label " +
                       entry["label"].get<std::string>());
    if (seen[it->second])
      throw ParseError("BLOCKWEYL_DATA: duplicate label " + it->first);
    seen[it->second] = true;
    out[it->second] = Int(entry["a"].get<long long>());
  }
  if (!any)
    return std::nullopt;
  for (int e = 0; e < tab.irrepCount(); ++e)
    if (!seen[e])
      throw ParseError("BLOCKWEYL_DATA: missing label " +
                       tab.irrepData(e).label);
  return out;
}

}  // namespace blockweyl
