/*
  This is fusion.cpp — induction between reflection groups, families of
  irreducibles, and truncated induction.
*/

#include "blockweyl/fusion.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <numeric>
#include <string>
#include <utility>

#include "blockweyl/hecke.hpp"
#include "blockweyl/partitions.hpp"

namespace blockweyl {

namespace {

/******** Chapter 0 -- small building blocks ********************************/

/* mirror of CharTable::forType's identification of diagram-equal types */
TypeSymbol canonicalType(TypeSymbol t)
{
  if (t.rank == 1 && (t.family == Family::B || t.family == Family::C ||
                      t.family == Family::D))
    t.family = Family::A;
  if (t.family == Family::D && t.rank == 3)
    t = {Family::A, 3};
  if (t.family == Family::C)
    t.family = Family::B;
  return t;
}

bool classicalFamily(Family f)
{
  return f == Family::A || f == Family::B || f == Family::C || f == Family::D;
}

Int intOf(const Rat& r)
{
  require(denominator(r) == 1, "expected an integer value");
  return numerator(r);
}

/* disjoint-set forest over {0, ..., n-1} */
struct UnionFind {
  std::vector<int> parent;

  explicit UnionFind(int n) : parent(n)
  {
    for (int i = 0; i < n; ++i)
      parent[i] = i;
  }
  int find(int x)
  {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  }
  void unite(int a, int b) { parent[find(a)] = find(b); }

  /* the groups, members ascending, sorted by smallest member */
  std::vector<std::vector<int>> groups()
  {
    std::map<int, std::vector<int>> byRoot;
    for (int i = 0; i < static_cast<int>(parent.size()); ++i)
      byRoot[find(i)].push_back(i);
    std::vector<std::vector<int>> out;
    for (auto& [root, members] : byRoot)
      out.push_back(std::move(members));
    std::sort(out.begin(), out.end(),
              [](const auto& x, const auto& y) { return x[0] < y[0]; });
    return out;
  }
};

/* representative of a class of a classical table, as a signed permutation
   on the table's own coordinates */
SignedPerm tableClassRep(const CharTable& t, int c)
{
  const ClassData& cd = t.classData(c);
  SignedPerm w = classRepresentative(cd.cycleType);
  if (cd.splitHalf >= 0 && dConjugacyHalf(w) != cd.splitHalf) {
    SignedPerm f = SignedPerm::signFlip(w.n(), 0);
    w = f.after(w.after(f));
  }
  return w;
}

std::vector<std::vector<int>> singletonPartition(int n)
{
  std::vector<std::vector<int>> out(n);
  for (int i = 0; i < n; ++i)
    out[i] = {i};
  return out;
}

}  // namespace

/******** Chapter I -- classical parabolic induction ************************/

int coordinateSpan(const TypeSymbol& t)
{
  require(classicalFamily(t.family), "coordinateSpan: classical types only");
  return t.family == Family::A ? t.rank + 1 : t.rank;
}

const CharTable& rawClassicalTable(const TypeSymbol& t)
{
  switch (t.family) {
    case Family::A:
      return CharTable::symmetric(t.rank + 1);
    case Family::B:
    case Family::C:
      return CharTable::hyperoctahedral(t.rank);
    case Family::D:
      return CharTable::demihyperoctahedral(t.rank);
    default:
      throw Unsupported("rawClassicalTable: classical types only");
  }
}

ClassicalInduction parabolicInduction(const TypeSymbol& ambient,
                                      const std::vector<TypeSymbol>& parts)
{
  require(classicalFamily(ambient.family),
          "parabolicInduction: classical ambient types only");
  require(!parts.empty(), "parabolicInduction: at least one part");
  const CharTable& ambT = rawClassicalTable(ambient);
  int n = coordinateSpan(ambient);
  Family ambFam = ambient.family == Family::C ? Family::B : ambient.family;

  int used = 0;
  std::vector<const CharTable*> pt;
  for (const TypeSymbol& p : parts) {
    require(classicalFamily(p.family), "parabolicInduction: classical parts only");
    if (ambFam == Family::A)
      require(p.family == Family::A,
              "parabolicInduction: a symmetric ambient admits symmetric parts");
    if (ambFam == Family::D)
      require(p.family == Family::A || p.family == Family::D,
              "parabolicInduction: an even-signed ambient admits symmetric "
              "and even-signed parts");
    used += coordinateSpan(p);
    pt.push_back(&rawClassicalTable(p));
  }
  require(used <= n, "parabolicInduction: parts exceed the ambient coordinates");

  CharTable sub = *pt[0];
  for (size_t i = 1; i < pt.size(); ++i)
    sub = CharTable::product(sub, *pt[i]);

  int nc = sub.classCount();
  std::vector<int> fusion(nc);
  std::vector<int> tup(parts.size());
  for (int sc = 0; sc < nc; ++sc) {
    int rest = sc;  // decode the class tuple, last part fastest
    for (int i = static_cast<int>(parts.size()) - 1; i >= 0; --i) {
      tup[i] = rest % pt[i]->classCount();
      rest /= pt[i]->classCount();
    }
    SignedPerm w = SignedPerm::identity(n);
    int offset = 0;
    for (size_t i = 0; i < parts.size(); ++i) {
      SignedPerm r = tableClassRep(*pt[i], tup[i]);
      for (int j = 0; j < r.n(); ++j) {
        int img = offset + std::abs(r.img[j]);
        w.img[offset + j] = r.img[j] > 0 ? img : -img;
      }
      offset += r.n();
    }
    fusion[sc] = ambT.classOfSignedPerm(w);
  }

  ClassicalInduction out{std::move(sub), std::move(fusion), {}};
  out.matrix = ambT.inductionFrom(out.sub, out.fusion);
  return out;
}

Int classicalAInvariant(const TypeSymbol& t, const IrrepData& ir)
{
  switch (t.family) {
    case Family::A:
      return Int(nInvariant(ir.bilabel.first));
    case Family::B:
    case Family::C:
      return aInvariantHyp(ir.bilabel, 1, 1);
    case Family::D:
      return aInvariantHyp(ir.bilabel, 1, 0);
    default:
      throw Unsupported("classicalAInvariant: classical types only");
  }
}

Int inductionSpread(const TypeSymbol& ambient,
                    const std::vector<TypeSymbol>& parts)
{
  if (parts.empty())
    return Int(ambient.positiveRoots());

  int e0 = 0;
  for (const TypeSymbol& p : parts) {
    TypeSymbol c = canonicalType(p);
    require(c.family == p.family && c.rank == p.rank,
            "inductionSpread: alias-free part types only");
    int d = distinguishedSpecial(p);
    require(d >= 0, "inductionSpread: a part has no distinguished special");
    e0 = e0 * rawClassicalTable(p).irrepCount() + d;
  }

  ClassicalInduction ind = parabolicInduction(ambient, parts);
  const CharTable& ambT = rawClassicalTable(ambient);
  bool first = true;
  Int lo(0), hi(0);
  for (int e = 0; e < ambT.irrepCount(); ++e) {
    if (ind.matrix[e0][e] == 0)
      continue;
    Int a = classicalAInvariant(ambient, ambT.irrepData(e));
    if (first || a < lo)
      lo = a;
    if (first || a > hi)
      hi = a;
    first = false;
  }
  require(!first, "inductionSpread: the induction has no constituents");
  return hi - lo;
}

/******** Chapter II -- enumerated ambient groups ***************************/

AmbientGroup::AmbientGroup(const TypeSymbol& t)
    : d_type(t), d_group(CoxeterDescriptor{false, {t}})
{
  const CharTable& tab = table();
  if (!classicalFamily(d_type.family)) {
    // sieve tables keep the group's class order; check the rebuilt group
    // agrees class by class
    require(tab.classCount() == d_group.classCount(),
            "AmbientGroup: class count mismatch with the table");
    for (int c = 0; c < d_group.classCount(); ++c) {
      int rep = d_group.classRep(c);
      require(tab.classData(c).size ==
                  Int(static_cast<int>(d_group.classes()[c].size())),
              "AmbientGroup: class size mismatch with the table");
      require(tab.classData(c).reflPoly == d_group.reflCharPoly(rep),
              "AmbientGroup: class polynomial mismatch with the table");
    }
  }
}

const AmbientGroup& AmbientGroup::forType(const TypeSymbol& t)
{
  static std::map<std::string, std::unique_ptr<AmbientGroup>> cache;
  TypeSymbol c = canonicalType(t);
  auto it = cache.find(c.str());
  if (it == cache.end())
    it = cache.emplace(c.str(), std::unique_ptr<AmbientGroup>(new AmbientGroup(c)))
             .first;
  return *it->second;
}

int AmbientGroup::tableClassOf(int a) const
{
  if (classicalFamily(d_type.family))
    return table().classOfSignedPerm(signedPermOf(a));
  return d_group.classOf(a);
}

SignedPerm AmbientGroup::signedPermOf(int a) const
{
  require(classicalFamily(d_type.family),
          "signedPermOf: classical families only");
  const RootSystem& rs = d_group.rootSystem();
  const std::vector<int>& act = d_group.rootAction(a);
  int dim = static_cast<int>(rs.roots[0].size());
  auto basis = [&](int i) {
    Vector v(dim, Rat(0));
    v[i] = 1;
    return v;
  };
  auto readBasis = [&](const Vector& v, int scale) {
    int where = -1, sign = 0;
    for (int i = 0; i < dim; ++i) {
      if (v[i] == Rat(0))
        continue;
      require(where < 0, "signedPermOf: image is not a coordinate vector");
      where = i;
      sign = v[i] == Rat(scale) ? 1 : (v[i] == Rat(-scale) ? -1 : 0);
    }
    require(sign != 0, "signedPermOf: image is not a coordinate vector");
    return sign * (where + 1);
  };

  SignedPerm w = SignedPerm::identity(dim);
  if (d_type.family == Family::A) {
    // images of e_i - e_{i+1} determine the permutation up to a common
    // shift, pinned by the invariance of e_1 + ... + e_dim
    std::vector<Vector> step(dim - 1);
    for (int i = 0; i + 1 < dim; ++i) {
      Vector v = basis(i);
      for (int c = 0; c < dim; ++c)
        v[c] -= basis(i + 1)[c];
      int idx = rs.indexOfRoot(v);
      require(idx >= 0, "signedPermOf: missing chain root");
      step[i] = rs.roots[act[idx]];
    }
    // suffix sums s_i = w(e_i) - w(e_dim)
    std::vector<Vector> suffix(dim, Vector(dim, Rat(0)));
    for (int i = dim - 2; i >= 0; --i) {
      suffix[i] = suffix[i + 1];
      for (int c = 0; c < dim; ++c)
        suffix[i][c] += step[i][c];
    }
    Vector last(dim, Rat(1) / Rat(dim));  // (sum e_i - sum s_i) / dim
    for (int i = 0; i < dim; ++i)
      for (int c = 0; c < dim; ++c)
        last[c] -= suffix[i][c] / Rat(dim);
    for (int i = 0; i < dim; ++i) {
      Vector v = last;
      for (int c = 0; c < dim; ++c)
        v[c] += suffix[i][c];
      w.img[i] = readBasis(v, 1);
    }
    return w;
  }
  if (d_type.family == Family::B || d_type.family == Family::C) {
    int scale = d_type.family == Family::B ? 1 : 2;
    for (int i = 0; i < dim; ++i) {
      Vector v = basis(i);
      for (int c = 0; c < dim; ++c)
        v[c] *= Rat(scale);
      int idx = rs.indexOfRoot(v);
      require(idx >= 0, "signedPermOf: missing coordinate root");
      w.img[i] = readBasis(rs.roots[act[idx]], scale);
    }
    return w;
  }
  // even-signed family: recover w(e_i) from the pair e_i -+ e_j
  for (int i = 0; i < dim; ++i) {
    int j = (i + 1) % dim;
    Vector vm = basis(i);
    Vector vp = basis(i);
    for (int c = 0; c < dim; ++c) {
      vm[c] -= basis(j)[c];
      vp[c] += basis(j)[c];
    }
    int im = rs.indexOfRoot(vm);
    int ip = rs.indexOfRoot(vp);
    require(im >= 0 && ip >= 0, "signedPermOf: missing pair roots");
    Vector v(dim, Rat(0));
    for (int c = 0; c < dim; ++c)
      v[c] = (rs.roots[act[im]][c] + rs.roots[act[ip]][c]) / Rat(2);
    w.img[i] = readBasis(v, 1);
  }
  return w;
}

/******** Chapter III -- reflection subgroup fusion *************************/

FusedSubgroup fuseSubgroup(const AmbientGroup& amb,
                           const std::vector<int>& genRoots)
{
  const ReflectionGroup& g = amb.group();
  const CharTable& ambT = amb.table();

  if (genRoots.empty()) {
    FusedSubgroup out{{},
                      {},
                      CharTable::symmetric(1),
                      {amb.tableClassOf(g.identity())},
                      {}};
    out.induction = ambT.inductionFrom(out.table, out.classFusion);
    return out;
  }

  int k = static_cast<int>(genRoots.size());
  std::vector<int> gens(k);
  for (int i = 0; i < k; ++i)
    gens[i] = amb.reflectionElement(genRoots[i]);

  CoxeterDiagram diag;
  diag.m.assign(k, std::vector<int>(k, 2));
  for (int i = 0; i < k; ++i) {
    diag.m[i][i] = 1;
    for (int j = i + 1; j < k; ++j) {
      int o = g.elementOrder(g.mult(gens[i], gens[j]));
      diag.m[i][j] = diag.m[j][i] = o;
    }
  }
  std::vector<int> allNodes(k);
  std::iota(allNodes.begin(), allNodes.end(), 0);
  std::vector<std::vector<int>> comps = diag.components(allNodes);

  std::vector<TypeSymbol> partTypes;
  std::vector<std::vector<int>> partPositions;
  std::vector<const CharTable*> pt;
  // per component, per table class: a representative subgroup element
  std::vector<std::vector<int>> reps;

  for (const auto& comp : comps) {
    CoxeterDiagram::Recognized rec = diag.recognizeComponent(comp);
    partTypes.push_back(rec.type);
    partPositions.push_back(rec.order);
    const AmbientGroup& ref = AmbientGroup::forType(rec.type);
    const ReflectionGroup& rg = ref.group();
    pt.push_back(&ref.table());
    require(rg.generatorCount() == static_cast<int>(rec.order.size()),
            "fuseSubgroup: component rank mismatch");

    // the generator assignment canonical node t -> gens[rec.order[t]]
    // respects the Coxeter matrix, so it extends to an isomorphism of the
    // reference group onto the component subgroup; realize it by a
    // parallel walk and class the component through the reference group
    std::vector<int> phi(rg.size(), -1);
    std::vector<char> hit(g.size(), 0);
    int imageCount = 1;
    std::vector<int> queue = {rg.identity()};
    phi[rg.identity()] = g.identity();
    hit[g.identity()] = 1;
    for (size_t q = 0; q < queue.size(); ++q) {
      int x = queue[q];
      for (int t = 0; t < rg.generatorCount(); ++t) {
        int y = rg.mult(x, rg.generator(t));
        int img = g.mult(phi[x], gens[rec.order[t]]);
        if (phi[y] < 0) {
          phi[y] = img;
          queue.push_back(y);
          if (!hit[img]) {
            hit[img] = 1;
            ++imageCount;
          }
        } else {
          require(phi[y] == img,
                  "fuseSubgroup: generator assignment is not a homomorphism");
        }
      }
    }
    require(imageCount == rg.size(),
            "fuseSubgroup: component subgroup is smaller than its type");

    std::vector<int> tableRep(ref.table().classCount(), -1);
    for (int x = 0; x < rg.size(); ++x) {
      int tc = ref.tableClassOf(x);
      if (tableRep[tc] < 0)
        tableRep[tc] = phi[x];
    }
    for (int r : tableRep)
      require(r >= 0, "fuseSubgroup: a component class has no representative");
    reps.push_back(std::move(tableRep));
  }

  CharTable sub = *pt[0];
  for (size_t i = 1; i < pt.size(); ++i)
    sub = CharTable::product(sub, *pt[i]);

  int nc = sub.classCount();
  std::vector<int> fusion(nc);
  std::vector<int> tup(comps.size());
  for (int sc = 0; sc < nc; ++sc) {
    int rest = sc;  // decode, last component fastest
    for (int i = static_cast<int>(comps.size()) - 1; i >= 0; --i) {
      tup[i] = rest % pt[i]->classCount();
      rest /= pt[i]->classCount();
    }
    int elem = g.identity();
    for (size_t i = 0; i < comps.size(); ++i)
      elem = g.mult(elem, reps[i][tup[i]]);
    fusion[sc] = amb.tableClassOf(elem);
  }

  FusedSubgroup out{std::move(partTypes), std::move(partPositions),
                    std::move(sub), std::move(fusion), {}};
  out.induction = ambT.inductionFrom(out.table, out.classFusion);
  return out;
}

/******** Chapter IV -- families of irreducibles ****************************/

namespace {

enum class HeightMode { weighted, byB };

std::vector<Int> tableBHeights(const CharTable& t)
{
  std::vector<Int> h(t.irrepCount());
  for (int e = 0; e < t.irrepCount(); ++e)
    h[e] = Int(t.bInvariant(e));
  return h;
}

/* cartesian composition of per-factor partitions into the row-major
   product indexing; no factors gives the one-irrep partition */
std::vector<std::vector<int>> composePartitions(
    const std::vector<std::vector<std::vector<int>>>& fams,
    const std::vector<int>& counts)
{
  std::vector<std::vector<int>> out = {{0}};
  for (size_t f = 0; f < fams.size(); ++f) {
    std::vector<std::vector<int>> next;
    for (const auto& left : out)
      for (const auto& fam : fams[f]) {
        std::vector<int> members;
        for (int l : left)
          for (int m : fam)
            members.push_back(l * counts[f] + m);
        next.push_back(std::move(members));
      }
    out = std::move(next);
  }
  for (auto& fam : out)
    std::sort(fam.begin(), fam.end());
  std::sort(out.begin(), out.end(),
            [](const auto& x, const auto& y) { return x[0] < y[0]; });
  return out;
}

/* the parabolic-induction recursion over the proper node subsets */
std::vector<std::vector<int>> recurseFamilies(const AmbientGroup& amb,
                                              HeightMode mode,
                                              const std::vector<int>& weights)
{
  const CharTable& tab = amb.table();
  int ne = tab.irrepCount();
  std::vector<Int> hAmb = mode == HeightMode::weighted
                              ? factorAValues({amb.type(), weights})
                              : tableBHeights(tab);
  std::vector<int> tw = sgnTwistMap(tab);
  UnionFind uf(ne);

  int r = amb.type().rank;
  const std::vector<int>& simples = amb.group().rootSystem().simples;
  for (int mask = 0; mask < (1 << r) - 1; ++mask) {
    std::vector<int> knodes, genRoots;
    for (int i = 0; i < r; ++i)
      if (mask & (1 << i)) {
        knodes.push_back(i);
        genRoots.push_back(simples[i]);
      }
    FusedSubgroup fs = fuseSubgroup(amb, genRoots);

    int m = static_cast<int>(fs.partTypes.size());
    std::vector<std::vector<std::vector<int>>> compFams(m);
    std::vector<std::vector<Int>> compHeights(m);
    std::vector<int> compNe(m);
    for (int c = 0; c < m; ++c) {
      std::vector<int> cw;
      for (int pos : fs.partPositions[c])
        cw.push_back(mode == HeightMode::weighted ? weights[knodes[pos]] : 1);
      const CharTable& ct = CharTable::forType(fs.partTypes[c]);
      compNe[c] = ct.irrepCount();
      if (mode == HeightMode::weighted) {
        compFams[c] = familyPartition(fs.partTypes[c], cw);
        compHeights[c] = factorAValues({fs.partTypes[c], cw});
      } else {
        compFams[c] = familyPartitionByB(fs.partTypes[c]);
        compHeights[c] = tableBHeights(ct);
      }
    }

    int nsub = fs.table.irrepCount();
    std::vector<Int> hSub(nsub, Int(0));
    for (int s = 0; s < nsub; ++s) {
      int rest = s;
      for (int c = m - 1; c >= 0; --c) {
        hSub[s] += compHeights[c][rest % compNe[c]];
        rest /= compNe[c];
      }
    }

    for (const auto& fam : composePartitions(compFams, compNe)) {
      std::vector<int> linked;
      for (int e = 0; e < ne; ++e)
        for (int s : fam)
          if (fs.induction[s][e] != 0 && hAmb[e] == hSub[s]) {
            linked.push_back(e);
            break;
          }
      for (size_t i = 1; i < linked.size(); ++i) {
        uf.unite(linked[0], linked[i]);
        uf.unite(tw[linked[0]], tw[linked[i]]);
      }
    }
  }
  return uf.groups();
}

}  // namespace

std::vector<Int> factorAValues(const WeightedFactor& f)
{
  TypeSymbol t = canonicalType(f.type);
  require(static_cast<int>(f.weights.size()) == t.rank,
          "factorAValues: one weight per node");
  for (int w : f.weights)
    require(w >= 1, "factorAValues: weights must be positive");

  if (t.family == Family::A) {
    int k = f.weights[0];
    for (int w : f.weights)
      require(w == k, "factorAValues: equal weights on the symmetric series");
    const CharTable& tab = CharTable::forType(t);
    std::vector<Int> a(tab.irrepCount());
    for (int e = 0; e < tab.irrepCount(); ++e)
      a[e] = Int(k) * Int(nInvariant(tab.irrepData(e).bilabel.first));
    return a;
  }
  if (t.family == Family::F) {
    bool equal = true;
    for (int w : f.weights)
      equal = equal && w == f.weights[0];
    if (equal) {
      std::vector<Int> a = f4EqualAValues();
      for (Int& x : a)
        x *= f.weights[0];
      return a;
    }
  }
  return aValues(t, f.weights);
}

std::vector<std::vector<int>> familyPartition(const TypeSymbol& t,
                                              const std::vector<int>& weights)
{
  TypeSymbol c = canonicalType(t);
  if (c.family == Family::A)
    return singletonPartition(CharTable::forType(c).irrepCount());
  return familyPartitionByRecursion(c, weights);
}

std::vector<std::vector<int>> familyPartitionByRecursion(
    const TypeSymbol& t, const std::vector<int>& weights)
{
  static std::map<std::pair<std::string, std::vector<int>>,
                  std::vector<std::vector<int>>>
      cache;
  TypeSymbol c = canonicalType(t);
  auto key = std::make_pair(c.str(), weights);
  auto it = cache.find(key);
  if (it == cache.end()) {
    auto fams = recurseFamilies(AmbientGroup::forType(c), HeightMode::weighted,
                                weights);
    it = cache.emplace(std::move(key), std::move(fams)).first;
  }
  return it->second;
}

const std::vector<std::vector<int>>& familyPartitionByB(const TypeSymbol& t)
{
  static std::map<std::string, std::vector<std::vector<int>>> cache;
  TypeSymbol c = canonicalType(t);
  auto it = cache.find(c.str());
  if (it == cache.end()) {
    std::vector<std::vector<int>> fams =
        c.family == Family::A
            ? singletonPartition(CharTable::forType(c).irrepCount())
            : recurseFamilies(AmbientGroup::forType(c), HeightMode::byB, {});
    it = cache.emplace(c.str(), std::move(fams)).first;
  }
  return it->second;
}

const std::vector<Int>& f4EqualAValues()
{
  static const std::vector<Int> values = [] {
    TypeSymbol f4{Family::F, 4};
    const CharTable& tab = CharTable::forType(f4);
    std::vector<Int> out(tab.irrepCount());
    for (const auto& fam : familyPartitionByB(f4)) {
      int bestCount = 0;
      Int best(0);
      for (int e : fam) {
        Int b(tab.bInvariant(e));
        if (bestCount == 0 || b < best) {
          best = b;
          bestCount = 1;
        } else if (b == best) {
          ++bestCount;
        }
      }
      require(bestCount == 1, "f4EqualAValues: smallest b is not unique");
      for (int e : fam)
        out[e] = best;
    }
    return out;
  }();
  return values;
}

std::vector<std::vector<int>> weightedFamilies(
    const std::vector<WeightedFactor>& factors)
{
  std::vector<std::vector<std::vector<int>>> fams;
  std::vector<int> counts;
  for (const WeightedFactor& f : factors) {
    fams.push_back(familyPartition(f.type, f.weights));
    counts.push_back(CharTable::forType(f.type).irrepCount());
  }
  return composePartitions(fams, counts);
}

std::vector<int> sgnTwistMap(const CharTable& t)
{
  int nc = t.classCount();
  int ne = t.irrepCount();
  std::vector<Int> det(nc);
  for (int c = 0; c < nc; ++c) {
    Rat d = t.classData(c).reflPoly.coeff(0);
    if (t.reflRank() % 2)
      d = -d;
    det[c] = intOf(d);
    require(det[c] == 1 || det[c] == -1, "sgnTwistMap: determinant is not a sign");
  }
  std::vector<int> out(ne, -1);
  for (int e = 0; e < ne; ++e) {
    for (int f = 0; f < ne; ++f) {
      bool match = true;
      for (int c = 0; c < nc && match; ++c)
        match = t.value(f, c) == t.value(e, c) * det[c];
      if (match) {
        require(out[e] < 0, "sgnTwistMap: twist is not unique");
        out[e] = f;
      }
    }
    require(out[e] >= 0, "sgnTwistMap: twist not found");
  }
  return out;
}

/******** Chapter V -- truncated induction **********************************/

int uniqueTruncatedConstituent(const std::vector<std::vector<Int>>& induction,
                               int m, const Int& subHeight,
                               const std::vector<Int>& ambHeights)
{
  int found = -1;
  for (int e = 0; e < static_cast<int>(ambHeights.size()); ++e)
    if (induction[m][e] != 0 && ambHeights[e] == subHeight) {
      require(found < 0, "uniqueTruncatedConstituent: constituent not unique");
      found = e;
    }
  require(found >= 0, "uniqueTruncatedConstituent: no constituent");
  return found;
}

}  // namespace blockweyl
