/*
  This is test_hecke.cpp — weighted generic degrees and their invariants.

  The closed tables carry two independent data sets per slot (an exact
  degree expression and a closed-form a-value); the engine of chapter II
  was derived separately from Schur elements.  The tests play these three
  sources against each other across the full weight grid, then pin the
  by-type dispatch to hand-computed anchors.
*/

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <set>
#include <string>
#include <vector>

#include "blockweyl/chartable.hpp"
#include "blockweyl/hecke.hpp"

using namespace blockweyl;

namespace {

Poly vpow(int e)
{
  return Poly::monomial(Rat(1), e);
}

/* half the v-valuation of a nonzero degree, checking evenness */
long long halfVal(const RatFun& f)
{
  REQUIRE(!f.isZero());
  int val = f.num().valuation() - f.den().valuation();
  REQUIRE(val % 2 == 0);
  return val / 2;
}

/* v^(2L) * f(1/v), the degree of the sign-twisted representation */
RatFun dualDegree(const RatFun& f, int L)
{
  int e = 2 * L + f.den().degree() - f.num().degree();
  REQUIRE(e >= 0);
  return RatFun(f.num().reversed() * vpow(e), f.den().reversed());
}

Bipartition bp(Partition al, Partition be)
{
  return {std::move(al), std::move(be)};
}

/* sum of dim * degree over a closed table */
RatFun tableMass(const std::vector<DegreeSlot>& slots)
{
  RatFun sum;
  for (const auto& s : slots)
    sum += s.degree * RatFun(Poly(Rat(s.dim)));
  return sum;
}

const std::vector<Bipartition>& b2SlotShapes()
{
  static const std::vector<Bipartition> v = {
      bp({2}, {}), bp({1}, {1}), bp({1, 1}, {}), bp({}, {2}), bp({}, {1, 1})};
  return v;
}

const std::vector<Bipartition>& b3SlotShapes()
{
  static const std::vector<Bipartition> v = {
      bp({3}, {}),    bp({2}, {1}),    bp({2, 1}, {}), bp({}, {3}),
      bp({1}, {2}),   bp({1, 1}, {1}), bp({}, {2, 1}), bp({1}, {1, 1}),
      bp({1, 1, 1}, {}), bp({}, {1, 1, 1})};
  return v;
}

std::vector<long long> aListOf(const TypeSymbol& t, const std::vector<int>& w)
{
  std::vector<long long> out;
  for (const Int& a : aValues(t, w))
    out.push_back(a.convert_to<long long>());
  return out;
}

}  // namespace

TEST_CASE("closed tables: degree valuations match the closed a-values")
{
  for (int a = 1; a <= 5; ++a) {
    for (const auto& s : degreeTableA1(a))
      CHECK(halfVal(s.degree) == s.aValue.convert_to<long long>());
    for (const auto& s : degreeTableA2(a))
      CHECK(halfVal(s.degree) == s.aValue.convert_to<long long>());
    for (int b = 1; b <= 5; ++b) {
      for (const auto& s : degreeTableB2(a, b))
        CHECK(halfVal(s.degree) == s.aValue.convert_to<long long>());
      for (const auto& s : degreeTableB3(a, b))
        CHECK(halfVal(s.degree) == s.aValue.convert_to<long long>());
      for (const auto& s : degreeTableG2(a, b))
        CHECK(halfVal(s.degree) == s.aValue.convert_to<long long>());
    }
  }
}

TEST_CASE("closed tables: masses add up to the Poincare series")
{
  for (int a = 1; a <= 5; ++a) {
    CHECK(tableMass(degreeTableA1(a)) == RatFun(Poly(Rat(1)) + vpow(2 * a)));
    CHECK(tableMass(degreeTableA2(a)) ==
          RatFun((Poly(Rat(1)) + vpow(2 * a)) *
                 (Poly(Rat(1)) + vpow(2 * a) + vpow(4 * a))));
    for (int b = 1; b <= 5; ++b) {
      CHECK(tableMass(degreeTableB2(a, b)) == RatFun(poincareHyp(2, a, b)));
      CHECK(tableMass(degreeTableB3(a, b)) == RatFun(poincareHyp(3, a, b)));
    }
  }
}

TEST_CASE("closed tables: frozen a-lists at sample weights")
{
  auto avals = [](const std::vector<DegreeSlot>& slots) {
    std::vector<long long> out;
    for (const auto& s : slots)
      out.push_back(s.aValue.convert_to<long long>());
    return out;
  };
  CHECK(avals(degreeTableB2(2, 3)) == std::vector<long long>{0, 3, 2, 4, 10});
  CHECK(avals(degreeTableB2(3, 2)) == std::vector<long long>{0, 3, 4, 2, 10});
  CHECK(avals(degreeTableB2(1, 1)) == std::vector<long long>{0, 1, 1, 1, 4});
  CHECK(avals(degreeTableB3(2, 3)) ==
        std::vector<long long>{0, 3, 2, 4, 5, 6, 11, 10, 7, 21});
  CHECK(avals(degreeTableB3(1, 1)) ==
        std::vector<long long>{0, 1, 1, 1, 2, 3, 4, 4, 4, 9});
  CHECK(avals(degreeTableB3(1, 3)) ==
        std::vector<long long>{0, 3, 1, 6, 5, 4, 10, 8, 3, 15});
  CHECK(avals(degreeTableG2(3, 1)) == std::vector<long long>{0, 3, 3, 4, 0, 12});
  CHECK(avals(degreeTableG2(1, 1)) == std::vector<long long>{0, 1, 1, 0, 0, 6});
}

TEST_CASE("engine: reproduces the closed chain tables on the weight grid")
{
  for (int a = 1; a <= 5; ++a)
    for (int b = 1; b <= 5; ++b) {
      auto t2 = degreeTableB2(a, b);
      for (size_t i = 0; i < t2.size(); ++i) {
        CHECK(genericDegreeHyp(b2SlotShapes()[i], a, b) == t2[i].degree);
        CHECK(aInvariantHyp(b2SlotShapes()[i], a, b) == t2[i].aValue);
      }
      auto t3 = degreeTableB3(a, b);
      for (size_t i = 0; i < t3.size(); ++i) {
        CHECK(genericDegreeHyp(b3SlotShapes()[i], a, b) == t3[i].degree);
        CHECK(aInvariantHyp(b3SlotShapes()[i], a, b) == t3[i].aValue);
      }
    }
}

TEST_CASE("engine: trivial and sign slots at higher rank")
{
  CHECK(genericDegreeHyp(bp({5}, {}), 2, 3) == RatFun(Rat(1)));
  CHECK(aInvariantHyp(bp({5}, {}), 2, 3) == 0);
  // longest element of the rank-5 chain group: 20 chain + 5 end reflections
  CHECK(genericDegreeHyp(bp({}, {1, 1, 1, 1, 1}), 2, 3) ==
        RatFun(vpow(2 * (20 * 2 + 5 * 3))));
  CHECK(aInvariantHyp(bp({}, {1, 1, 1, 1, 1}), 2, 3) == 20 * 2 + 5 * 3);
}

TEST_CASE("engine: mass and sign-duality at rank four")
{
  const CharTable& tab = CharTable::forType({Family::B, 4});
  for (auto [a, b] : {std::pair{1, 1}, {2, 3}, {3, 1}}) {
    RatFun mass;
    int L = 12 * a + 4 * b;
    for (int e = 0; e < tab.irrepCount(); ++e) {
      const Bipartition& s = tab.irrepData(e).bilabel;
      RatFun d = genericDegreeHyp(s, a, b);
      mass += d * RatFun(Poly(Rat(tab.irrepData(e).dim)));
      Bipartition twisted = {conjugate(s.second), conjugate(s.first)};
      CHECK(dualDegree(d, L) == genericDegreeHyp(twisted, a, b));
    }
    CHECK(mass == RatFun(poincareHyp(4, a, b)));
  }
}

TEST_CASE("engine: the even-signed specialization has half the mass")
{
  for (int n : {4, 5}) {
    const CharTable& tab = CharTable::forType({Family::D, n});
    std::vector<RatFun> degs = genericDegrees({Family::D, n}, 1);
    RatFun mass;
    for (int e = 0; e < tab.irrepCount(); ++e)
      mass += degs[e] * RatFun(Poly(Rat(tab.irrepData(e).dim)));
    CHECK(mass == RatFun(poincareHyp(n, 1, 0)) * RatFun(Rat(1, 2)));
  }
}

TEST_CASE("dihedral slots: table versus engine")
{
  const CharTable& tab = CharTable::forType({Family::G, 2});
  for (int a = 1; a <= 5; ++a)
    for (int b = 1; b <= 5; ++b) {
      auto slots = degreeTableG2(a, b);
      auto av = aValues({Family::G, 2}, {a, b});
      // middle linear slots: engine normalization exceeds the table's
      // degenerating closed form by one extra power of q (resp. y)
      for (int i : {0, 1, 2, 5})
        CHECK(av[tab.irrepByLabel(slots[i].label)] == slots[i].aValue);
      CHECK(av[tab.irrepByLabel(slots[3].label)] == slots[3].aValue + a);
      CHECK(av[tab.irrepByLabel(slots[4].label)] == slots[4].aValue + b);
    }
  for (int k = 1; k <= 3; ++k) {
    auto slots = degreeTableG2(k, k);
    auto degs = genericDegrees({Family::G, 2}, k);
    for (int i : {0, 1, 2, 5})
      CHECK(degs[tab.irrepByLabel(slots[i].label)] == slots[i].degree);
    CHECK(degs[tab.irrepByLabel(slots[3].label)] ==
          slots[3].degree * RatFun(vpow(2 * k)));
    CHECK(degs[tab.irrepByLabel(slots[4].label)] ==
          slots[4].degree * RatFun(vpow(2 * k)));
    RatFun mass;
    for (int e = 0; e < tab.irrepCount(); ++e)
      mass += degs[e] * RatFun(Poly(Rat(tab.irrepData(e).dim)));
    Poly q = vpow(2 * k);
    CHECK(mass == RatFun((Poly(Rat(1)) + q) * (Poly(Rat(1)) + q) *
                         (Poly(Rat(1)) + vpow(4 * k) + vpow(8 * k))));
  }
}

TEST_CASE("dihedral engine: frozen a-values for the weighted pair (3,1)")
{
  // slot order of the closed table: triv, refl, two', eps_long, eps_short,
  // sgn; engine list {0, a+b-m, a+b-m, 3a-2m, 3b-2m, 3a+3b}
  const CharTable& tab = CharTable::forType({Family::G, 2});
  auto slots = degreeTableG2(3, 1);
  auto av = aValues({Family::G, 2}, {3, 1});
  std::vector<long long> bySlot;
  for (const auto& s : slots)
    bySlot.push_back(av[tab.irrepByLabel(s.label)].convert_to<long long>());
  CHECK(bySlot == std::vector<long long>{0, 3, 3, 7, 1, 12});
}

TEST_CASE("a-values scale linearly in the weights")
{
  for (int k = 2; k <= 4; ++k) {
    for (TypeSymbol t : {TypeSymbol{Family::A, 2}, {Family::A, 3},
                         {Family::B, 2}, {Family::B, 3}, {Family::C, 3},
                         {Family::D, 4}, {Family::G, 2}}) {
      auto ones = aValues(t, std::vector<int>(t.rank, 1));
      auto scaled = aValues(t, std::vector<int>(t.rank, k));
      REQUIRE(ones.size() == scaled.size());
      for (size_t e = 0; e < ones.size(); ++e)
        CHECK(scaled[e] == Int(k) * ones[e]);
    }
    for (const auto& s : bipartitionsOf(4))
      CHECK(aInvariantHyp(s, 2 * k, 3 * k) == Int(k) * aInvariantHyp(s, 2, 3));
  }
}

TEST_CASE("a-values against the character tables' b-invariants")
{
  // equal parameters: a(E) <= b(E) always, with equality defining specials
  for (TypeSymbol t : {TypeSymbol{Family::A, 3}, {Family::B, 3},
                       {Family::B, 4}, {Family::D, 4}, {Family::D, 5},
                       {Family::G, 2}}) {
    const CharTable& tab = CharTable::forType(t);
    auto av = aValues(t, std::vector<int>(t.rank, 1));
    for (int e = 0; e < tab.irrepCount(); ++e)
      CHECK(av[e] <= Int(tab.bInvariant(e)));
  }
}

TEST_CASE("z-invariants agree with direct division")
{
  static const Poly phi4 = Poly(Rat(1)) + vpow(2);
  for (TypeSymbol t : {TypeSymbol{Family::A, 1}, {Family::A, 2},
                       {Family::A, 3}, {Family::B, 2}, {Family::B, 3},
                       {Family::D, 4}}) {
    auto degs = genericDegrees(t, 1);
    for (int e = 0; e < static_cast<int>(degs.size()); ++e)
      CHECK(zInvariant(t, e) == degs[e].multiplicity(phi4));
  }
}

TEST_CASE("z-invariants of the dihedral slots")
{
  const CharTable& tab = CharTable::forType({Family::G, 2});
  auto slots = degreeTableG2(1, 1);
  std::vector<int> z;
  for (const auto& s : slots)
    z.push_back(zInvariant({Family::G, 2}, tab.irrepByLabel(s.label)));
  CHECK(z == std::vector<int>{0, 2, 2, 0, 0, 0});
}

TEST_CASE("special representations at small rank")
{
  // every irreducible of the symmetric family is special
  for (int n : {2, 3, 4})
    CHECK(static_cast<int>(specialRepresentations({Family::A, n}).size()) ==
          CharTable::forType({Family::A, n}).irrepCount());

  const CharTable& b2 = CharTable::forType({Family::B, 2});
  std::set<std::string> b2Specials;
  for (int e : specialRepresentations({Family::B, 2}))
    b2Specials.insert(b2.irrepData(e).label);
  CHECK(b2Specials == std::set<std::string>{"(2;-)", "(1;1)", "(-;1.1)"});

  const CharTable& b3 = CharTable::forType({Family::B, 3});
  std::set<std::string> b3Specials;
  std::multiset<long long> b3A;
  auto av3 = aValues({Family::B, 3}, {1, 1, 1});
  for (int e : specialRepresentations({Family::B, 3})) {
    b3Specials.insert(b3.irrepData(e).label);
    b3A.insert(av3[e].convert_to<long long>());
  }
  CHECK(b3Specials == std::set<std::string>{"(3;-)", "(2;1)", "(1;2)",
                                            "(1.1;1)", "(1;1.1)",
                                            "(-;1.1.1)"});
  CHECK(b3A == std::multiset<long long>{0, 1, 2, 3, 4, 9});

  // the dihedral group of order twelve has exactly three specials
  const CharTable& g2 = CharTable::forType({Family::G, 2});
  auto g2Special = specialRepresentations({Family::G, 2});
  CHECK(g2Special.size() == 3);
  std::multiset<Int> g2Dims;
  for (int e : g2Special)
    g2Dims.insert(g2.irrepData(e).dim);
  CHECK(g2Dims == std::multiset<Int>{Int(1), Int(1), Int(2)});

  // hand-checked members and non-members at rank four, even-signed
  const CharTable& d4 = CharTable::forType({Family::D, 4});
  std::set<std::string> d4Specials;
  for (int e : specialRepresentations({Family::D, 4}))
    d4Specials.insert(d4.irrepData(e).label);
  for (const char* lab : {"{4;-}", "{3;1}", "{2.1.1;-}", "{1.1.1.1;-}",
                          "{2.1;1}", "{1.1.1;1}"})
    CHECK(d4Specials.count(lab) == 1);
  for (const char* lab : {"{2.2;-}", "{2;1.1}"})
    CHECK(d4Specials.count(lab) == 0);
}

TEST_CASE("distinguished special representations")
{
  // chain family: present exactly at triangular sizes, as the staircase
  {
    int e = distinguishedSpecial({Family::A, 2});
    REQUIRE(e >= 0);
    CHECK(CharTable::forType({Family::A, 2}).irrepData(e).bilabel.first ==
          Partition{2, 1});
    CHECK(aValues({Family::A, 2}, {1, 1})[e] == 1);
  }
  CHECK(distinguishedSpecial({Family::A, 1}) == -1);
  CHECK(distinguishedSpecial({Family::A, 3}) == -1);
  CHECK(distinguishedSpecial({Family::A, 4}) == -1);
  {
    int e = distinguishedSpecial({Family::A, 5});
    REQUIRE(e >= 0);
    CHECK(CharTable::forType({Family::A, 5}).irrepData(e).bilabel.first ==
          Partition{3, 2, 1});
    CHECK(aValues({Family::A, 5}, std::vector<int>(5, 1))[e] == 4);
  }

  // 4-bond chain family: at ranks 2 and 6 with frozen a-values 1 and 7
  {
    int e = distinguishedSpecial({Family::B, 2});
    REQUIRE(e >= 0);
    CHECK(aValues({Family::B, 2}, {1, 1})[e] == 1);
  }
  CHECK(distinguishedSpecial({Family::B, 3}) == -1);
  CHECK(distinguishedSpecial({Family::B, 4}) == -1);
  {
    int e = distinguishedSpecial({Family::B, 6});
    REQUIRE(e >= 0);
    CHECK(aValues({Family::B, 6}, std::vector<int>(6, 1))[e] == 7);
  }

  // even-signed family: rank 4 (a = 3) and rank 9 (a = 13); absent at 6
  {
    int e = distinguishedSpecial({Family::D, 4});
    REQUIRE(e >= 0);
    CHECK(aValues({Family::D, 4}, std::vector<int>(4, 1))[e] == 3);
  }
  CHECK(distinguishedSpecial({Family::D, 6}) == -1);
  {
    int e = distinguishedSpecial({Family::D, 9});
    REQUIRE(e >= 0);
    CHECK(aValues({Family::D, 9}, std::vector<int>(9, 1))[e] == 13);
  }

  // dihedral: the two-dimensional special with a = 1
  {
    int e = distinguishedSpecial({Family::G, 2});
    REQUIRE(e >= 0);
    CHECK(CharTable::forType({Family::G, 2}).irrepData(e).dim == Int(2));
    CHECK(aValues({Family::G, 2}, {1, 1})[e] == 1);
  }
}

TEST_CASE("by-type a-values: anchors and unsupported cases")
{
  CHECK(aListOf({Family::A, 1}, {3}) == std::vector<long long>{0, 3});
  CHECK(aListOf({Family::B, 1}, {2}) == std::vector<long long>{0, 2});
  // the rank-3 even-signed group is the rank-3 chain group
  CHECK(aListOf({Family::D, 3}, {2, 2, 2}) ==
        std::vector<long long>{0, 2, 4, 6, 12});
  CHECK_THROWS_AS(aValues({Family::E, 6}, std::vector<int>(6, 1)),
                  Unsupported);
  CHECK_THROWS_AS(aValues({Family::B, 3}, {1, 2, 1}), InvariantError);
  CHECK_THROWS_AS(aValues({Family::B, 3}, {1, 1}), InvariantError);
  CHECK_THROWS_AS(aValues({Family::A, 2}, {1, 0}), InvariantError);
}

TEST_CASE("externally supplied a-data for the weighted rank-four group")
{
  const std::string path = "hecke_test_data.json";
  const TypeSymbol f4{Family::F, 4};
  const CharTable& tab = CharTable::forType(f4);
  const std::vector<int> w{2, 2, 1, 1};

  auto writeFile = [&](int skipIndex, const std::string& extraLabel) {
    std::ofstream out(path);
    out << "[\n";
    bool first = true;
    for (int e = 0; e < tab.irrepCount(); ++e) {
      if (e == skipIndex)
        continue;
      if (!first)
        out << ",\n";
      first = false;
      out << "  {\"label\": \"" << tab.irrepData(e).label
          << "\", \"weights\": [2,2,1,1], \"a\": " << e << "}";
    }
    if (!extraLabel.empty())
      out << ",\n  {\"label\": \"" << extraLabel
          << "\", \"weights\": [2,2,1,1], \"a\": 99}";
    out << "\n]\n";
  };

  unsetenv("BLOCKWEYL_DATA");
  CHECK(!externalAValues(f4, w).has_value());
  CHECK_THROWS_AS(aValues(f4, w), Unsupported);

  writeFile(-1, "");
  setenv("BLOCKWEYL_DATA", path.c_str(), 1);
  auto loaded = externalAValues(f4, w);
  REQUIRE(loaded.has_value());
  for (int e = 0; e < tab.irrepCount(); ++e)
    CHECK((*loaded)[e] == Int(e));
  auto viaDispatch = aValues(f4, w);
  CHECK(viaDispatch == *loaded);
  // entries exist only for (2,2,1,1): other weights fall through
  CHECK(!externalAValues(f4, {1, 1, 1, 1}).has_value());
  CHECK_THROWS_AS(aValues(f4, std::vector<int>(4, 1)), Unsupported);

  writeFile(3, "");  // one missing label
  CHECK_THROWS_AS(externalAValues(f4, w), ParseError);
  writeFile(-1, "phi[99,99]");  // one unknown label
  CHECK_THROWS_AS(externalAValues(f4, w), ParseError);
  {
    std::ofstream out(path);
    out << "{ not json";
  }
  CHECK_THROWS_AS(externalAValues(f4, w), ParseError);

  unsetenv("BLOCKWEYL_DATA");
  CHECK(!externalAValues(f4, w).has_value());
  std::remove(path.c_str());
}

TEST_CASE("poincareHyp at rank two is the dihedral product")
{
  for (int a = 1; a <= 3; ++a)
    for (int b = 1; b <= 3; ++b) {
      Poly expect = (Poly(Rat(1)) + vpow(2 * a)) *
                    (Poly(Rat(1)) + vpow(2 * b)) *
                    (Poly(Rat(1)) + vpow(2 * a + 2 * b));
      CHECK(poincareHyp(2, a, b) == expect);
    }
}
