/*
  This is test_fusion.cpp — induction engines, families, truncated induction.

  The classical engine is pinned to hand-expanded inductions in the
  symmetric chain and to spread anchors computed independently from hook
  arithmetic; the enumerated engine is cross-checked against the classical
  one on shared parabolic cases, against self-induction (which must be the
  identity), and against the regular-character identity.  The family
  recursion is played against an independent symbol-content oracle for the
  hyperoctahedral series, against frozen small tables, and against the
  singleton fact for the symmetric series.
*/

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <map>
#include <set>
#include <vector>

#include "blockweyl/chartable.hpp"
#include "blockweyl/diagram.hpp"
#include "blockweyl/fusion.hpp"
#include "blockweyl/group.hpp"
#include "blockweyl/hecke.hpp"
#include "blockweyl/partitions.hpp"

using namespace blockweyl;

namespace {

TypeSymbol ts(Family f, int r)
{
  return {f, r};
}

Bipartition bp(Partition al, Partition be)
{
  return {std::move(al), std::move(be)};
}

/* family sizes, ascending */
std::vector<int> sortedSizes(const std::vector<std::vector<int>>& fams)
{
  std::vector<int> s;
  for (const auto& f : fams)
    s.push_back(static_cast<int>(f.size()));
  std::sort(s.begin(), s.end());
  return s;
}

/* the family containing irreducible e */
const std::vector<int>& familyOf(const std::vector<std::vector<int>>& fams,
                                 int e)
{
  for (const auto& f : fams)
    if (std::find(f.begin(), f.end(), e) != f.end())
      return f;
  REQUIRE(false);
  static std::vector<int> none;
  return none;
}

/* check that a partition is a partition of {0..n-1} */
void checkPartition(const std::vector<std::vector<int>>& fams, int n)
{
  std::set<int> seen;
  for (const auto& f : fams)
    for (int e : f) {
      CHECK(!seen.count(e));
      seen.insert(e);
    }
  CHECK(static_cast<int>(seen.size()) == n);
}

/* regular-character identity: the induction of the regular character of
   the subgroup is the |W:H|-fold regular character restricted... more
   usefully, sum over sub irreps of dim * multiplicity equals the ambient
   dimension, for every ambient irreducible */
void checkRegularIdentity(const CharTable& sub, const CharTable& amb,
                          const std::vector<std::vector<Int>>& m)
{
  REQUIRE(static_cast<int>(m.size()) == sub.irrepCount());
  for (int e = 0; e < amb.irrepCount(); ++e) {
    Int s(0);
    for (int se = 0; se < sub.irrepCount(); ++se)
      s += sub.irrepData(se).dim * m[se][e];
    CHECK(s == amb.irrepData(e).dim);
  }
}

/* independent oracle for equal-parameter hyperoctahedral families: group
   by the content multiset of the two-row symbol with offset one */
std::multiset<int> symbolContent(const Bipartition& b, int m, bool swapped)
{
  const Partition& al = swapped ? b.second : b.first;
  const Partition& be = swapped ? b.first : b.second;
  std::multiset<int> out;
  for (int i = 1; i <= m + 1; ++i)
    out.insert((i <= static_cast<int>(al.size()) ? al[i - 1] : 0) + m + 1 - i);
  for (int j = 1; j <= m; ++j)
    out.insert((j <= static_cast<int>(be.size()) ? be[j - 1] : 0) + m - j);
  return out;
}

std::vector<std::vector<int>> familiesByContent(const CharTable& t, int n)
{
  // orient the bilabels so that the trivial representation carries the
  // one-row partition on the padded side
  int triv = -1;
  for (int e = 0; e < t.irrepCount(); ++e)
    if (t.bInvariant(e) == 0)
      triv = e;
  REQUIRE(triv >= 0);
  bool swapped = t.irrepData(triv).bilabel.first.empty();
  std::map<std::multiset<int>, std::vector<int>> groups;
  for (int e = 0; e < t.irrepCount(); ++e)
    groups[symbolContent(t.irrepData(e).bilabel, n, swapped)].push_back(e);
  std::vector<std::vector<int>> out;
  for (auto& [content, members] : groups)
    out.push_back(members);
  std::sort(out.begin(), out.end(),
            [](const auto& x, const auto& y) { return x[0] < y[0]; });
  return out;
}

std::vector<std::vector<int>> sortedPartition(std::vector<std::vector<int>> p)
{
  for (auto& f : p)
    std::sort(f.begin(), f.end());
  std::sort(p.begin(), p.end(),
            [](const auto& x, const auto& y) { return x[0] < y[0]; });
  return p;
}

}  // namespace

/******** Chapter I -- group-layer exports **********************************/

TEST_CASE("highest root: defining property and anchors")
{
  for (const char* name : {"A2", "A3", "B2", "B3", "C3", "D4", "G2", "F4"}) {
    RootSystem rs = standardRoots(CoxeterDescriptor::parse(name));
    int h = highestRootIndex(rs);
    REQUIRE(h >= 0);
    CHECK(rs.positive[h]);
    // maximality: adding any simple root leaves the system
    for (int s : rs.simples) {
      Vector sum = rs.roots[h];
      for (size_t i = 0; i < sum.size(); ++i)
        sum[i] += rs.roots[s][i];
      CHECK(rs.indexOfRoot(sum) == -1);
    }
    // uniqueness: every other positive root extends by some simple root
    for (int p = 0; p < rs.count(); ++p) {
      if (!rs.positive[p] || p == h)
        continue;
      bool extends = false;
      for (int s : rs.simples) {
        Vector sum = rs.roots[p];
        for (size_t i = 0; i < sum.size(); ++i)
          sum[i] += rs.roots[s][i];
        extends = extends || rs.indexOfRoot(sum) >= 0;
      }
      CHECK(extends);
    }
  }

  RootSystem b2 = standardRoots(CoxeterDescriptor::parse("B2"));
  CHECK(b2.roots[highestRootIndex(b2)] == Vector{Rat(1), Rat(1)});
  RootSystem f4 = standardRoots(CoxeterDescriptor::parse("F4"));
  CHECK(f4.roots[highestRootIndex(f4)] ==
        Vector{Rat(1), Rat(1), Rat(0), Rat(0)});
}

TEST_CASE("reflection elements match the generators on simple roots")
{
  for (const char* name : {"A3", "B3", "G2"}) {
    ReflectionGroup g(CoxeterDescriptor::parse(name));
    const RootSystem& rs = g.rootSystem();
    for (int kk = 0; kk < g.generatorCount(); ++kk)
      CHECK(g.reflectionElement(rs.simples[kk]) == g.generator(kk));
    // round trip through the root action
    for (int a = 0; a < std::min(g.size(), 30); ++a)
      CHECK(g.elementByRootAction(g.rootAction(a)) == a);
    std::vector<int> junk(rs.count());
    for (int r = 0; r < rs.count(); ++r)
      junk[r] = r;
    std::swap(junk[0], junk[1]);
    // a transposition of two arbitrary roots is generally no element
    if (g.elementByRootAction(junk) >= 0)
      CHECK(g.rootAction(g.elementByRootAction(junk)) == junk);
  }
}

/******** Chapter II -- enumerated ambient groups ***************************/

TEST_CASE("signed permutations: homomorphism and class tallies")
{
  for (Family fam : {Family::A, Family::B, Family::D}) {
    int rank = fam == Family::D ? 4 : 2;
    if (fam == Family::B)
      rank = 3;
    const AmbientGroup& amb = AmbientGroup::forType(ts(fam, rank));
    const ReflectionGroup& g = amb.group();
    const CharTable& tab = amb.table();

    // composition on a sample of pairs
    int cap = std::min(g.size(), 24);
    for (int a = 0; a < cap; ++a)
      for (int b = 0; b < cap; ++b)
        CHECK(amb.signedPermOf(g.mult(a, b)) ==
              amb.signedPermOf(a).after(amb.signedPermOf(b)));

    // per-class tallies against the table sizes
    std::vector<int> tally(tab.classCount(), 0);
    for (int a = 0; a < g.size(); ++a)
      ++tally[amb.tableClassOf(a)];
    for (int c = 0; c < tab.classCount(); ++c)
      CHECK(Int(tally[c]) == tab.classData(c).size);
  }
}

TEST_CASE("table classes of the exceptional groups tally with the tables")
{
  for (Family fam : {Family::G, Family::F}) {
    const AmbientGroup& amb = AmbientGroup::forType(ts(fam, fam == Family::G ? 2 : 4));
    const ReflectionGroup& g = amb.group();
    const CharTable& tab = amb.table();
    std::vector<int> tally(tab.classCount(), 0);
    for (int a = 0; a < g.size(); ++a)
      ++tally[amb.tableClassOf(a)];
    for (int c = 0; c < tab.classCount(); ++c)
      CHECK(Int(tally[c]) == tab.classData(c).size);
  }
}

/******** Chapter III -- classical parabolic induction **********************/

TEST_CASE("parabolic induction: the symmetric chain, expanded by hand")
{
  // S2 inside S3
  ClassicalInduction ind = parabolicInduction(ts(Family::A, 2), {ts(Family::A, 1)});
  const CharTable& s3 = CharTable::symmetric(3);
  int triv2 = ind.sub.irrepByBilabel(bp({2}, {}));
  int sgn2 = ind.sub.irrepByBilabel(bp({1, 1}, {}));
  int triv3 = s3.irrepByBilabel(bp({3}, {}));
  int std3 = s3.irrepByBilabel(bp({2, 1}, {}));
  int sgn3 = s3.irrepByBilabel(bp({1, 1, 1}, {}));
  CHECK(ind.matrix[triv2][triv3] == 1);
  CHECK(ind.matrix[triv2][std3] == 1);
  CHECK(ind.matrix[triv2][sgn3] == 0);
  CHECK(ind.matrix[sgn2][triv3] == 0);
  CHECK(ind.matrix[sgn2][std3] == 1);
  CHECK(ind.matrix[sgn2][sgn3] == 1);

  // S3 with two fixed coordinates inside S5: the staircase inducts to
  // exactly five constituents with multiplicities 1,2,2,2,1
  ClassicalInduction big = parabolicInduction(ts(Family::A, 4), {ts(Family::A, 2)});
  const CharTable& s5 = CharTable::symmetric(5);
  int stair = big.sub.irrepByBilabel(bp({2, 1}, {}));
  std::map<Partition, Int> expect = {{{4, 1}, Int(1)},
                                     {{3, 2}, Int(2)},
                                     {{3, 1, 1}, Int(2)},
                                     {{2, 2, 1}, Int(2)},
                                     {{2, 1, 1, 1}, Int(1)}};
  for (int e = 0; e < s5.irrepCount(); ++e) {
    auto it = expect.find(s5.irrepData(e).bilabel.first);
    CHECK(big.matrix[stair][e] == (it == expect.end() ? Int(0) : it->second));
  }
}

TEST_CASE("parabolic induction: regular-character identity")
{
  struct Case {
    TypeSymbol ambient;
    std::vector<TypeSymbol> parts;
  };
  std::vector<Case> cases = {
      {ts(Family::B, 3), {ts(Family::B, 2)}},
      {ts(Family::B, 4), {ts(Family::B, 2), ts(Family::A, 1)}},
      {ts(Family::B, 4), {ts(Family::A, 3)}},
      {ts(Family::D, 4), {ts(Family::A, 1), ts(Family::A, 1)}},
      {ts(Family::D, 5), {ts(Family::D, 4)}},
      {ts(Family::D, 6), {ts(Family::D, 4), ts(Family::A, 1)}},
      {ts(Family::A, 4), {ts(Family::A, 2)}},
      {ts(Family::C, 3), {ts(Family::B, 2)}},
  };
  for (const auto& c : cases) {
    ClassicalInduction ind = parabolicInduction(c.ambient, c.parts);
    checkRegularIdentity(ind.sub, rawClassicalTable(c.ambient), ind.matrix);
  }
}

TEST_CASE("distinguished specials and induction spreads")
{
  // the distinguished specials used as induction seeds
  const CharTable& b2 = rawClassicalTable(ts(Family::B, 2));
  int e2 = distinguishedSpecial(ts(Family::B, 2));
  REQUIRE(e2 >= 0);
  CHECK(e2 == b2.irrepByBilabel(bp({1}, {1})));
  const CharTable& d4 = rawClassicalTable(ts(Family::D, 4));
  int e4 = distinguishedSpecial(ts(Family::D, 4));
  REQUIRE(e4 >= 0);
  CHECK(e4 == d4.irrepByBilabel(bp({2, 1}, {1})));
  CHECK(d4.irrepData(e4).splitHalf == -1);
  CHECK(distinguishedSpecial(ts(Family::A, 2)) ==
        CharTable::symmetric(3).irrepByBilabel(bp({2, 1}, {})));

  // spreads pinned by hand from hook arithmetic
  CHECK(inductionSpread(ts(Family::B, 3), {ts(Family::B, 2)}) == 3);
  CHECK(inductionSpread(ts(Family::C, 3), {ts(Family::B, 2)}) == 3);
  CHECK(inductionSpread(ts(Family::D, 5), {ts(Family::D, 4)}) == 4);
  CHECK(inductionSpread(ts(Family::A, 4), {ts(Family::A, 2)}) == 5);

  // the empty product of parts spreads over the whole regular character
  CHECK(inductionSpread(ts(Family::B, 3), {}) == 9);
  CHECK(inductionSpread(ts(Family::A, 2), {}) == 3);
  CHECK(inductionSpread(ts(Family::D, 4), {}) == 12);
}

/******** Chapter IV -- reflection subgroup fusion **************************/

TEST_CASE("subgroup fusion: the full group fuses to the identity matrix")
{
  for (const char* name : {"A3", "B3", "D4", "G2", "F4"}) {
    CoxeterDescriptor desc = CoxeterDescriptor::parse(name);
    const AmbientGroup& amb = AmbientGroup::forType(desc.factors[0]);
    FusedSubgroup fs = fuseSubgroup(amb, amb.group().rootSystem().simples);
    REQUIRE(fs.partTypes.size() == 1);
    CHECK(fs.partTypes[0].sameDiagram(desc.factors[0]));
    const CharTable& tab = amb.table();
    REQUIRE(fs.table.irrepCount() == tab.irrepCount());
    for (int se = 0; se < tab.irrepCount(); ++se)
      for (int e = 0; e < tab.irrepCount(); ++e)
        CHECK(fs.induction[se][e] == (se == e ? 1 : 0));
  }
}

TEST_CASE("subgroup fusion agrees with the classical engine on parabolics")
{
  // B2 = nodes {1,2} of B3 (the engines share the table type and order)
  const AmbientGroup& b3 = AmbientGroup::forType(ts(Family::B, 3));
  const std::vector<int>& simples = b3.group().rootSystem().simples;
  FusedSubgroup fs = fuseSubgroup(b3, {simples[1], simples[2]});
  REQUIRE(fs.partTypes.size() == 1);
  CHECK(fs.partTypes[0].sameDiagram(ts(Family::B, 2)));
  ClassicalInduction ind = parabolicInduction(ts(Family::B, 3), {ts(Family::B, 2)});
  CHECK(fs.induction == ind.matrix);

  // A1 x A1 = nodes {0,2} of B3 against the block placement A1 x B1
  FusedSubgroup fs2 = fuseSubgroup(b3, {simples[0], simples[2]});
  REQUIRE(fs2.partTypes.size() == 2);
  ClassicalInduction ind2 =
      parabolicInduction(ts(Family::B, 3), {ts(Family::A, 1), ts(Family::B, 1)});
  CHECK(fs2.induction == ind2.matrix);

  // A1 inside A2
  const AmbientGroup& a2 = AmbientGroup::forType(ts(Family::A, 2));
  FusedSubgroup fs3 = fuseSubgroup(a2, {a2.group().rootSystem().simples[0]});
  ClassicalInduction ind3 = parabolicInduction(ts(Family::A, 2), {ts(Family::A, 1)});
  CHECK(fs3.induction == ind3.matrix);
}

TEST_CASE("subgroup fusion: non-parabolic and alias components")
{
  // the fork-shaped three-node subgroup of D4 (a chain type on paper,
  // realized on three coordinates with a plus-root)
  const AmbientGroup& d4 = AmbientGroup::forType(ts(Family::D, 4));
  const std::vector<int>& s4 = d4.group().rootSystem().simples;
  FusedSubgroup fork = fuseSubgroup(d4, {s4[0], s4[1], s4[3]});
  REQUIRE(fork.partTypes.size() == 1);
  CHECK(fork.partTypes[0].sameDiagram(ts(Family::A, 3)));
  checkRegularIdentity(fork.table, d4.table(), fork.induction);

  // the chain A3 for comparison: also fine, same dimension identity
  FusedSubgroup chain = fuseSubgroup(d4, {s4[0], s4[1], s4[2]});
  CHECK(chain.partTypes[0].sameDiagram(ts(Family::A, 3)));
  checkRegularIdentity(chain.table, d4.table(), chain.induction);

  // the long A1 x A1 of B2 through the lowest root
  const AmbientGroup& b2 = AmbientGroup::forType(ts(Family::B, 2));
  const RootSystem& rs = b2.group().rootSystem();
  int lowest = rs.negOf[highestRootIndex(rs)];
  FusedSubgroup klein = fuseSubgroup(b2, {rs.simples[0], lowest});
  REQUIRE(klein.partTypes.size() == 2);
  CHECK(klein.partTypes[0].sameDiagram(ts(Family::A, 1)));
  CHECK(klein.partTypes[1].sameDiagram(ts(Family::A, 1)));
  checkRegularIdentity(klein.table, b2.table(), klein.induction);
  // sign x sign contains the sign character of the ambient group
  int sgnsgn = 1 * 2 + 1;  // both factors are two-irrep tables
  int sgnB2 = b2.table().irrepByBilabel(bp({}, {1, 1}));
  CHECK(klein.induction[sgnsgn][sgnB2] == 1);

  // a parabolic of F4 of shape B2 (short and long reflections classed
  // through the reference walk, not through invariants)
  const AmbientGroup& f4 = AmbientGroup::forType(ts(Family::F, 4));
  const std::vector<int>& sf = f4.group().rootSystem().simples;
  FusedSubgroup fb2 = fuseSubgroup(f4, {sf[1], sf[2]});
  REQUIRE(fb2.partTypes.size() == 1);
  CHECK(fb2.partTypes[0].sameDiagram(ts(Family::B, 2)));
  checkRegularIdentity(fb2.table, f4.table(), fb2.induction);

  // the trivial subgroup inducts the regular character
  FusedSubgroup triv = fuseSubgroup(f4, {});
  for (int e = 0; e < f4.table().irrepCount(); ++e)
    CHECK(triv.induction[0][e] == f4.table().irrepData(e).dim);
}

/******** Chapter V -- families *********************************************/

TEST_CASE("equal-parameter families: rank two, frozen")
{
  const CharTable& b2 = CharTable::forType(ts(Family::B, 2));
  const auto& fams = familyPartitionByB(ts(Family::B, 2));
  checkPartition(fams, b2.irrepCount());
  CHECK(sortedSizes(fams) == std::vector<int>{1, 1, 3});
  const auto& mid = familyOf(fams, b2.irrepByBilabel(bp({1}, {1})));
  CHECK(mid.size() == 3);
  // the middle family holds both one-dimensionals of b-invariant two
  for (int e : mid)
    CHECK((e == b2.irrepByBilabel(bp({1}, {1})) || b2.bInvariant(e) == 2));
  // the singletons are the trivial and the sign
  for (const auto& f : fams)
    if (f.size() == 1)
      CHECK((b2.bInvariant(f[0]) == 0 || b2.bInvariant(f[0]) == 4));

  const CharTable& g2 = CharTable::forType(ts(Family::G, 2));
  const auto& gf = familyPartitionByB(ts(Family::G, 2));
  checkPartition(gf, g2.irrepCount());
  CHECK(sortedSizes(gf) == std::vector<int>{1, 1, 4});
  const auto& big = familyOf(gf, g2.irrepByLabel("phi[2,1]"));
  CHECK(big.size() == 4);
  std::set<int> bigSet(big.begin(), big.end());
  CHECK(bigSet.count(g2.irrepByLabel("phi[2,2]")));
  CHECK(bigSet.count(g2.irrepByLabel("phi[1,3]")));
  CHECK(bigSet.count(g2.irrepByLabel("phi[1,3]'")));
}

TEST_CASE("equal-parameter families match the symbol-content oracle")
{
  for (int n : {2, 3, 4}) {
    const CharTable& t = CharTable::forType(ts(Family::B, n));
    auto recursion = sortedPartition(familyPartitionByB(ts(Family::B, n)));
    auto content = sortedPartition(familiesByContent(t, n));
    CHECK(recursion == content);
  }
}

TEST_CASE("equal-parameter families: structural laws in rank four")
{
  for (Family fam : {Family::D, Family::F}) {
    TypeSymbol t = ts(fam, 4);
    const CharTable& tab = CharTable::forType(t);
    const auto& fams = familyPartitionByB(t);
    checkPartition(fams, tab.irrepCount());

    // exactly one special representation per family
    std::vector<int> specials = specialRepresentations(t);
    CHECK(specials.size() == fams.size());
    std::set<int> specialSet(specials.begin(), specials.end());
    for (const auto& f : fams) {
      int count = 0;
      for (int e : f)
        count += specialSet.count(e) ? 1 : 0;
      CHECK(count == 1);
    }

    // the sign twist permutes the families
    std::vector<int> tw = sgnTwistMap(tab);
    for (const auto& f : fams) {
      const auto& g = familyOf(fams, tw[f[0]]);
      std::set<int> gs(g.begin(), g.end());
      CHECK(g.size() == f.size());
      for (int e : f)
        CHECK(gs.count(tw[e]));
    }
  }

  // equal-parameter a-invariants are constant on even-signed families
  const CharTable& d4 = CharTable::forType(ts(Family::D, 4));
  for (const auto& f : familyPartitionByB(ts(Family::D, 4))) {
    Int a = classicalAInvariant(ts(Family::D, 4), d4.irrepData(f[0]));
    for (int e : f)
      CHECK(classicalAInvariant(ts(Family::D, 4), d4.irrepData(e)) == a);
  }
}

TEST_CASE("rank-four exceptional bootstrap: families and a-invariants")
{
  TypeSymbol f4 = ts(Family::F, 4);
  const CharTable& tab = CharTable::forType(f4);
  const auto& fams = familyPartitionByB(f4);
  checkPartition(fams, 25);
  CHECK(fams.size() == 11);
  CHECK(sortedSizes(fams) == std::vector<int>{1, 1, 1, 1, 1, 1, 2, 2, 2, 2, 11});

  // the four pairs couple an eight-dimensional with a two-dimensional
  for (const char* label : {"phi[8,3]", "phi[8,3]'", "phi[8,9]", "phi[8,9]'"}) {
    const auto& f = familyOf(fams, tab.irrepByLabel(label));
    REQUIRE(f.size() == 2);
    Int dims[2] = {tab.irrepData(f[0]).dim, tab.irrepData(f[1]).dim};
    CHECK(dims[0] * dims[1] == 16);
  }

  // the eleven-member family, prime-agnostic
  const auto& big = familyOf(fams, tab.irrepByLabel("phi[12,4]"));
  REQUIRE(big.size() == 11);
  std::multiset<std::pair<Int, int>> shape;
  for (int e : big)
    shape.insert({tab.irrepData(e).dim, tab.bInvariant(e)});
  std::multiset<std::pair<Int, int>> want = {
      {Int(12), 4}, {Int(16), 5}, {Int(9), 6}, {Int(9), 6}, {Int(6), 6},
      {Int(6), 6},  {Int(4), 7},  {Int(4), 7}, {Int(4), 8}, {Int(1), 12},
      {Int(1), 12}};
  CHECK(shape == want);

  // frozen a-invariants (equal within primed pairs, so label-safe)
  const std::vector<Int>& a = f4EqualAValues();
  std::map<std::string, int> expect = {
      {"phi[1,0]", 0},     {"phi[4,1]", 1},     {"phi[9,2]", 2},
      {"phi[8,3]", 3},     {"phi[8,3]'", 3},    {"phi[2,4]", 3},
      {"phi[2,4]'", 3},    {"phi[12,4]", 4},    {"phi[16,5]", 4},
      {"phi[9,6]", 4},     {"phi[9,6]'", 4},    {"phi[6,6]", 4},
      {"phi[6,6]'", 4},    {"phi[4,7]", 4},     {"phi[4,7]'", 4},
      {"phi[4,8]", 4},     {"phi[1,12]", 4},    {"phi[1,12]'", 4},
      {"phi[8,9]", 9},     {"phi[8,9]'", 9},    {"phi[2,16]", 9},
      {"phi[2,16]'", 9},   {"phi[9,10]", 10},   {"phi[4,13]", 13},
      {"phi[1,24]", 24}};
  REQUIRE(expect.size() == 25);
  for (const auto& [label, value] : expect)
    CHECK(a[tab.irrepByLabel(label)] == value);

  // exactly one irreducible per family reaches a = b
  int reached = 0;
  for (int e = 0; e < 25; ++e)
    reached += a[e] == Int(tab.bInvariant(e)) ? 1 : 0;
  CHECK(reached == 11);
}

TEST_CASE("weighted families: distinct heights force singletons")
{
  std::vector<Int> a = factorAValues({ts(Family::B, 2), {1, 2}});
  std::multiset<Int> values(a.begin(), a.end());
  CHECK(values == std::multiset<Int>{Int(0), Int(1), Int(2), Int(3), Int(6)});
  auto fams = familyPartition(ts(Family::B, 2), {1, 2});
  checkPartition(fams, 5);
  CHECK(fams.size() == 5);
}

TEST_CASE("weighted families: the dihedral factor at weights three and one")
{
  const CharTable& g2 = CharTable::forType(ts(Family::G, 2));
  auto fams = familyPartition(ts(Family::G, 2), {3, 1});
  checkPartition(fams, 6);
  CHECK(sortedSizes(fams) == std::vector<int>{1, 1, 1, 1, 2});
  const auto& pair = familyOf(fams, g2.irrepByLabel("phi[2,1]"));
  REQUIRE(pair.size() == 2);
  std::set<int> ps(pair.begin(), pair.end());
  CHECK(ps.count(g2.irrepByLabel("phi[2,2]")));

  // heights are constant across each family
  std::vector<Int> a = factorAValues({ts(Family::G, 2), {3, 1}});
  for (const auto& f : fams)
    for (int e : f)
      CHECK(a[e] == a[f[0]]);
}

TEST_CASE("weighted families: recursion confirms the symmetric shortcut")
{
  CHECK(familyPartitionByRecursion(ts(Family::A, 2), {1, 1}) ==
        familyPartition(ts(Family::A, 2), {1, 1}));
  CHECK(familyPartitionByRecursion(ts(Family::A, 3), {2, 2, 2}) ==
        familyPartition(ts(Family::A, 3), {2, 2, 2}));
  CHECK(familyPartition(ts(Family::A, 3), {2, 2, 2}).size() == 5);
}

TEST_CASE("weighted families: equal weights recover the equal-parameter case")
{
  for (int k : {1, 2}) {
    auto weighted =
        sortedPartition(familyPartition(ts(Family::B, 3), {k, k, k}));
    auto byB = sortedPartition(familyPartitionByB(ts(Family::B, 3)));
    CHECK(weighted == byB);
  }
  auto weighted = sortedPartition(familyPartition(ts(Family::G, 2), {2, 2}));
  auto byB = sortedPartition(familyPartitionByB(ts(Family::G, 2)));
  CHECK(weighted == byB);
}

TEST_CASE("weighted families: chain weights run and stay height-constant")
{
  for (std::vector<int> w :
       {std::vector<int>{1, 1, 2}, {2, 2, 1}, {3, 3, 2}, {1, 1, 3}}) {
    auto fams = familyPartition(ts(Family::C, 3), w);
    const CharTable& tab = CharTable::forType(ts(Family::C, 3));
    checkPartition(fams, tab.irrepCount());
    std::vector<Int> a = factorAValues({ts(Family::C, 3), w});
    for (const auto& f : fams)
      for (int e : f)
        CHECK(a[e] == a[f[0]]);
  }
}

TEST_CASE("weighted families of products are products of families")
{
  std::vector<WeightedFactor> factors = {{ts(Family::A, 1), {2}},
                                         {ts(Family::B, 2), {1, 1}}};
  auto fams = weightedFamilies(factors);
  checkPartition(fams, 2 * 5);
  CHECK(sortedSizes(fams) == std::vector<int>{1, 1, 1, 1, 3, 3});
  // members of one family share the first-factor index
  for (const auto& f : fams)
    for (int e : f)
      CHECK(e / 5 == f[0] / 5);
}

TEST_CASE("sign twist: involution, dimensions, frozen values")
{
  const CharTable& b3 = CharTable::forType(ts(Family::B, 3));
  std::vector<int> tw = sgnTwistMap(b3);
  for (int e = 0; e < b3.irrepCount(); ++e) {
    CHECK(tw[tw[e]] == e);
    CHECK(b3.irrepData(tw[e]).dim == b3.irrepData(e).dim);
  }
  CHECK(tw[b3.irrepByBilabel(bp({3}, {}))] == b3.irrepByBilabel(bp({}, {1, 1, 1})));
}

/******** Chapter VI -- truncated induction *********************************/

TEST_CASE("truncated induction in the symmetric chain")
{
  const AmbientGroup& a2 = AmbientGroup::forType(ts(Family::A, 2));
  FusedSubgroup fs = fuseSubgroup(a2, {a2.group().rootSystem().simples[0]});
  const CharTable& s3 = a2.table();
  std::vector<Int> heights(s3.irrepCount());
  for (int e = 0; e < s3.irrepCount(); ++e)
    heights[e] = Int(s3.bInvariant(e));

  int triv2 = fs.table.irrepByBilabel(bp({2}, {}));
  int sgn2 = fs.table.irrepByBilabel(bp({1, 1}, {}));
  CHECK(uniqueTruncatedConstituent(fs.induction, triv2, Int(0), heights) ==
        s3.irrepByBilabel(bp({3}, {})));
  CHECK(uniqueTruncatedConstituent(fs.induction, sgn2, Int(1), heights) ==
        s3.irrepByBilabel(bp({2, 1}, {})));

  // a height shared by two constituents is rejected
  std::vector<std::vector<Int>> flat = {{Int(1), Int(1)}};
  CHECK_THROWS_AS(
      uniqueTruncatedConstituent(flat, 0, Int(0), {Int(0), Int(0)}),
      InvariantError);
}
