/*
  This is chartable.cpp — implementation of exact character tables.
*/

#include "blockweyl/chartable.hpp"

#include "blockweyl/ratfun.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <set>

namespace blockweyl {

namespace {

Int factorial(int n)
{
  Int f(1);
  for (int i = 2; i <= n; ++i)
    f *= i;
  return f;
}

Int binomial(int n, int k)
{
  require(0 <= k && k <= n, "binomial out of range");
  Int b(1);
  for (int i = 0; i < k; ++i)
    b = b * (n - i) / (i + 1);
  return b;
}

Int intOf(const Rat& r)
{
  require(denominator(r) == 1, "expected an integer value");
  return numerator(r);
}

/******** Chapter I -- Murnaghan-Nakayama recursions ************************/

using Key = std::vector<int>;

Key symKey(const Partition& lambda, int pos)
{
  Key k = lambda;
  k.push_back(-1);
  k.push_back(pos);
  return k;
}

Int symMN(const Partition& lambda, const Partition& alpha, int pos,
          std::map<Key, Int>& memo)
{
  if (pos == static_cast<int>(alpha.size()))
    return 1;
  Key key = symKey(lambda, pos);
  auto it = memo.find(key);
  if (it != memo.end())
    return it->second;
  Int v(0);
  for (const auto& sr : borderStripRemovals(lambda, alpha[pos])) {
    Int term = symMN(sr.rest, alpha, pos + 1, memo);
    v += (sr.height % 2) ? -term : term;
  }
  memo.emplace(std::move(key), v);
  return v;
}

Key hypKey(const Partition& lambda, const Partition& mu, int posA, int posB)
{
  Key k = lambda;
  k.push_back(-1);
  k.insert(k.end(), mu.begin(), mu.end());
  k.push_back(-2);
  k.push_back(posA);
  k.push_back(posB);
  return k;
}

/* wreath Murnaghan-Nakayama: the second label component carries the sign
   character of the cyclic factor, so strips removed from it acquire an
   extra -1 for each negative cycle */
Int hypMN(const Partition& lambda, const Partition& mu, const Partition& alpha,
          const Partition& beta, int posA, int posB, std::map<Key, Int>& memo)
{
  bool positiveCycle = posA < static_cast<int>(alpha.size());
  if (!positiveCycle && posB >= static_cast<int>(beta.size()))
    return 1;
  Key key = hypKey(lambda, mu, posA, posB);
  auto it = memo.find(key);
  if (it != memo.end())
    return it->second;
  int l = positiveCycle ? alpha[posA] : beta[posB];
  int nA = posA + (positiveCycle ? 1 : 0);
  int nB = posB + (positiveCycle ? 0 : 1);
  Int v(0);
  for (const auto& sr : borderStripRemovals(lambda, l)) {
    Int term = hypMN(sr.rest, mu, alpha, beta, nA, nB, memo);
    v += (sr.height % 2) ? -term : term;
  }
  for (const auto& sr : borderStripRemovals(mu, l)) {
    Int term = hypMN(lambda, sr.rest, alpha, beta, nA, nB, memo);
    if (!positiveCycle)
      term = -term;
    v += (sr.height % 2) ? -term : term;
  }
  memo.emplace(std::move(key), v);
  return v;
}

/* characteristic polynomial of the reflection representation of S_n on a
   class of cycle type alpha: natural representation divided by (q-1) */
Poly symReflPoly(const Partition& alpha)
{
  Poly p(Rat(1));
  for (int a : alpha)
    p *= qPowMinusOne(a);
  return p.divExact(qPowMinusOne(1));
}

}  // namespace

/******** Chapter II -- split conjugacy halves ******************************/

int dConjugacyHalf(const SignedPerm& w)
{
  // every cycle must be positive and of even length; the half records the
  // parity of the number of sign-clearing conjugations needed to reach the
  // canonical all-positive representative
  int flips = 0;
  std::vector<bool> seen(w.n(), false);
  for (int start = 0; start < w.n(); ++start) {
    if (seen[start])
      continue;
    int len = 0, cur = start, prefix = 1;
    while (!seen[cur]) {
      seen[cur] = true;
      ++len;
      int t = w.img[cur];
      int next = std::abs(t) - 1;
      if (next != start) {  // one of the first len-1 edges
        if (t < 0)
          prefix = -prefix;
        if (prefix < 0)
          ++flips;
      }
      cur = next;
    }
    require(len % 2 == 0, "dConjugacyHalf: cycles must have even length");
  }
  return flips % 2;
}

/******** Chapter III -- classical builders *********************************/

const CharTable& CharTable::symmetric(int n)
{
  static std::map<int, CharTable> cache;
  auto it = cache.find(n);
  if (it != cache.end())
    return it->second;
  require(n >= 1, "symmetric: degree must be positive");

  CharTable t;
  t.d_name = "A" + std::to_string(n - 1);
  t.d_order = factorial(n);
  t.d_reflRank = n - 1;
  t.d_positiveRoots = n * (n - 1) / 2;
  for (int d = 2; d <= n; ++d)
    t.d_degrees.push_back(d);

  const auto& parts = partitionsOf(n);
  for (const auto& alpha : parts) {
    ClassData c;
    c.label = partitionStr(alpha);
    c.size = t.d_order / centralizerOrderSym(alpha);
    c.reflPoly = symReflPoly(alpha);
    c.cycleType = {alpha, {}};
    t.d_classes.push_back(std::move(c));
  }
  for (const auto& lambda : parts) {
    IrrepData e;
    e.label = partitionStr(lambda);
    e.dim = symGroupDim(lambda);
    e.bilabel = {lambda, {}};
    t.d_irreps.push_back(std::move(e));
  }
  t.d_values.assign(parts.size(), std::vector<Int>(parts.size()));
  for (size_t c = 0; c < parts.size(); ++c) {
    std::map<Key, Int> memo;
    for (size_t e = 0; e < parts.size(); ++e)
      t.d_values[e][c] = symMN(parts[e], parts[c], 0, memo);
  }
  t.finalize();
  return cache.emplace(n, std::move(t)).first->second;
}

const CharTable& CharTable::hyperoctahedral(int n)
{
  static std::map<int, CharTable> cache;
  auto it = cache.find(n);
  if (it != cache.end())
    return it->second;
  require(n >= 1, "hyperoctahedral: rank must be positive");

  CharTable t;
  t.d_name = "B" + std::to_string(n);
  Int order = factorial(n);
  for (int i = 0; i < n; ++i)
    order *= 2;
  t.d_order = order;
  t.d_reflRank = n;
  t.d_positiveRoots = n * n;
  for (int d = 2; d <= 2 * n; d += 2)
    t.d_degrees.push_back(d);

  const auto& bps = bipartitionsOf(n);
  for (const auto& bp : bps) {
    ClassData c;
    c.label = bipartitionStr(bp);
    c.size = t.d_order / centralizerOrderHyp(bp);
    c.reflPoly = classRepresentative(bp).charPoly();
    c.cycleType = bp;
    t.d_classes.push_back(std::move(c));
  }
  for (const auto& bp : bps) {
    IrrepData e;
    e.label = bipartitionStr(bp);
    e.dim = binomial(n, weight(bp.first)) * symGroupDim(bp.first) *
            symGroupDim(bp.second);
    e.bilabel = bp;
    t.d_irreps.push_back(std::move(e));
  }
  t.d_values.assign(bps.size(), std::vector<Int>(bps.size()));
  for (size_t c = 0; c < bps.size(); ++c) {
    std::map<Key, Int> memo;
    for (size_t e = 0; e < bps.size(); ++e)
      t.d_values[e][c] = hypMN(bps[e].first, bps[e].second, bps[c].first,
                               bps[c].second, 0, 0, memo);
  }
  t.finalize();
  return cache.emplace(n, std::move(t)).first->second;
}

const CharTable& CharTable::demihyperoctahedral(int n)
{
  static std::map<int, CharTable> cache;
  auto it = cache.find(n);
  if (it != cache.end())
    return it->second;
  require(n >= 2, "demihyperoctahedral: rank must be at least 2");

  const CharTable& B = hyperoctahedral(n);
  CharTable t;
  t.d_name = "D" + std::to_string(n);
  t.d_order = B.order() / 2;
  t.d_reflRank = n;
  t.d_positiveRoots = n * (n - 1);
  for (int d = 2; d <= 2 * n - 2; d += 2)
    t.d_degrees.push_back(d);
  t.d_degrees.push_back(n);
  std::sort(t.d_degrees.begin(), t.d_degrees.end());

  const auto& bps = bipartitionsOf(n);
  auto isSplitType = [](const Bipartition& bp) {
    if (!bp.second.empty())
      return false;
    for (int a : bp.first)
      if (a % 2)
        return false;
    return true;
  };

  // classes: those of the big group with an even number of negative cycles
  std::vector<int> classType;    // index into bps
  std::vector<int> classHalf;    // -1 or 0/1
  for (size_t i = 0; i < bps.size(); ++i) {
    const Bipartition& bp = bps[i];
    if (bp.second.size() % 2)
      continue;
    const ClassData& bc = B.classData(static_cast<int>(i));
    if (isSplitType(bp)) {
      for (int h = 0; h < 2; ++h) {
        ClassData c;
        c.label = bipartitionStr(bp) + (h ? "-" : "+");
        c.size = bc.size / 2;
        require(c.size * 2 == bc.size, "split class has odd size");
        c.reflPoly = bc.reflPoly;
        c.cycleType = bp;
        c.splitHalf = h;
        t.d_classes.push_back(std::move(c));
        classType.push_back(static_cast<int>(i));
        classHalf.push_back(h);
      }
    } else {
      ClassData c;
      c.label = bipartitionStr(bp);
      c.size = bc.size;
      c.reflPoly = bc.reflPoly;
      c.cycleType = bp;
      t.d_classes.push_back(std::move(c));
      classType.push_back(static_cast<int>(i));
      classHalf.push_back(-1);
    }
  }

  // irreducibles: unordered pairs {lambda; mu}, split pairs for lambda == mu
  auto indexOf = [&](const Bipartition& bp) {
    for (size_t i = 0; i < bps.size(); ++i)
      if (bps[i] == bp)
        return static_cast<int>(i);
    throw InvariantError("bipartition not found");
  };
  const CharTable* half = nullptr;
  if (n % 2 == 0)
    half = &symmetric(n / 2);

  for (size_t i = 0; i < bps.size(); ++i) {
    const Bipartition& bp = bps[i];
    int j = indexOf({bp.second, bp.first});
    if (static_cast<int>(i) > j)
      continue;
    if (static_cast<int>(i) < j) {  // non-split: restriction stays irreducible
      IrrepData e;
      e.label = "{" + partitionStr(bp.first) + ";" + partitionStr(bp.second) + "}";
      e.dim = B.irrepData(static_cast<int>(i)).dim;
      e.bilabel = bp;
      t.d_irreps.push_back(std::move(e));
      std::vector<Int> row(t.d_classes.size());
      for (size_t c = 0; c < t.d_classes.size(); ++c)
        row[c] = B.value(static_cast<int>(i), classType[c]);
      t.d_values.push_back(std::move(row));
      continue;
    }
    // split pair
    Int bdim = B.irrepData(static_cast<int>(i)).dim;
    for (int h = 0; h < 2; ++h) {
      IrrepData e;
      e.label = bipartitionStr(bp) + (h ? "-" : "+");
      e.dim = bdim / 2;
      require(e.dim * 2 == bdim, "split irreducible has odd dimension");
      e.bilabel = bp;
      e.splitHalf = h;
      t.d_irreps.push_back(std::move(e));
      std::vector<Int> row(t.d_classes.size());
      for (size_t c = 0; c < t.d_classes.size(); ++c) {
        Int bval = B.value(static_cast<int>(i), classType[c]);
        if (classHalf[c] < 0) {
          row[c] = bval / 2;
          require(row[c] * 2 == bval, "split value not even off split classes");
        } else {
          // difference character: 2^{l(delta)} chi_lambda(delta) on the
          // class (2*delta; -), with matching halves taking the plus sign
          Partition delta;
          for (int a : bps[classType[c]].first)
            delta.push_back(a / 2);
          Int diff(1);
          for (size_t k = 0; k < delta.size(); ++k)
            diff *= 2;
          diff *= half->value(half->irrepByLabel(partitionStr(bp.first)),
                              half->classByLabel(partitionStr(delta)));
          Int signedDiff = (classHalf[c] == h) ? diff : -diff;
          row[c] = (bval + signedDiff) / 2;
          require(row[c] * 2 == bval + signedDiff, "split value not integral");
        }
      }
      t.d_values.push_back(std::move(row));
    }
  }
  t.finalize();
  return cache.emplace(n, std::move(t)).first->second;
}

/******** Chapter IV -- the character sieve *********************************/

CharTable CharTable::fromGroup(const ReflectionGroup& g, const std::string& name,
                               const std::vector<int>& degrees)
{
  CharTable t;
  t.d_name = name;
  t.d_order = g.size();
  t.d_positiveRoots = g.rootSystem().positiveCount();
  t.d_degrees = degrees;

  int nc = g.classCount();
  std::vector<int> classSquare(nc), classCube(nc);
  for (int c = 0; c < nc; ++c) {
    int rep = g.classRep(c);
    ClassData cd;
    cd.size = Int(static_cast<int>(g.classes()[c].size()));
    cd.reflPoly = g.reflCharPoly(rep);
    cd.elemOrder = g.elementOrder(rep);
    cd.label = "c" + std::to_string(c) + "[" + std::to_string(cd.elemOrder) + "]";
    t.d_classes.push_back(std::move(cd));
    int sq = g.mult(rep, rep);
    classSquare[c] = g.classOf(sq);
    classCube[c] = g.classOf(g.mult(sq, rep));
  }
  int rank = t.d_classes[0].reflPoly.degree();
  t.d_reflRank = rank;

  // flips per root orbit on each class representative
  int orbitCount = 1 + *std::max_element(g.rootOrbit().begin(), g.rootOrbit().end());
  std::vector<std::vector<int>> flips(nc, std::vector<int>(orbitCount, 0));
  for (int c = 0; c < nc; ++c) {
    const auto& act = g.rootAction(g.classRep(c));
    for (int r = 0; r < g.rootSystem().count(); ++r)
      if (g.rootSystem().positive[r] && !g.rootSystem().positive[act[r]])
        ++flips[c][g.rootOrbit()[r]];
  }

  using Fn = std::vector<Int>;
  auto inner = [&](const Fn& f, const Fn& h) {
    Rat s(0);
    for (int c = 0; c < nc; ++c)
      s += Rat(t.d_classes[c].size) * Rat(f[c]) * Rat(h[c]);
    return s / Rat(t.d_order);
  };

  std::deque<Fn> pending;
  // linear characters from sign assignments on root orbits
  for (int mask = 0; mask < (1 << orbitCount); ++mask) {
    Fn f(nc);
    for (int c = 0; c < nc; ++c) {
      int tot = 0;
      for (int o = 0; o < orbitCount; ++o)
        if (mask & (1 << o))
          tot += flips[c][o];
      f[c] = (tot % 2) ? -1 : 1;
    }
    pending.push_back(std::move(f));
  }
  // exterior powers of the reflection representation
  std::vector<Fn> exterior(rank + 1, Fn(nc));
  for (int c = 0; c < nc; ++c) {
    const Poly& p = t.d_classes[c].reflPoly;
    for (int k = 0; k <= rank; ++k) {
      Rat ek = p.coeff(rank - k);
      if (k % 2)
        ek = -ek;
      exterior[k][c] = intOf(ek);
    }
  }
  for (int k = 1; k <= rank; ++k)
    pending.push_back(exterior[k]);
  // permutation characters on the cosets of the cyclic subgroups generated
  // by the class representatives; these separate classes that all tensor
  // constructions see together
  for (int c0 = 0; c0 < nc; ++c0) {
    int r = g.classRep(c0);
    int ord = t.d_classes[c0].elemOrder;
    std::vector<int> tally(nc, 0);
    int x = g.identity();
    for (int k = 0; k < ord; ++k) {
      ++tally[g.classOf(x)];
      x = g.mult(x, r);
    }
    Fn f(nc);
    for (int cw = 0; cw < nc; ++cw)
      f[cw] = intOf(Rat(t.d_order) * Rat(tally[cw]) /
                    (Rat(ord) * Rat(t.d_classes[cw].size)));
    pending.push_back(std::move(f));
  }

  std::vector<Fn> found;
  std::vector<Fn> leftovers;
  std::set<std::pair<size_t, size_t>> productsQueued;
  std::set<size_t> powersQueued;
  int molienN = 0;  // symmetric powers of the reflection character queued
  Int dimSquares(0);

  auto process = [&](Fn f) {
    for (const Fn& irr : found) {
      Int m = intOf(inner(f, irr));
      if (m == 0)
        continue;
      for (int c = 0; c < nc; ++c)
        f[c] -= m * irr[c];
    }
    Rat norm = inner(f, f);
    if (norm == 0)
      return false;
    if (norm != 1) {
      leftovers.push_back(std::move(f));
      return false;
    }
    if (f[0] < 0)  // class 0 is the identity; dimensions are positive
      for (int c = 0; c < nc; ++c)
        f[c] = -f[c];
    dimSquares += f[0] * f[0];
    found.push_back(std::move(f));
    return true;
  };

  auto nearestInt = [](const Rat& r) {
    Int n = numerator(r), d = denominator(r);
    Int q = n / d;
    Int best = q;
    Int bestErr = abs(Int(n - q * d));
    for (int off : {-1, 1}) {
      Int cand = q + off;
      Int err = abs(Int(n - cand * d));
      if (err < bestErr) {
        bestErr = err;
        best = cand;
      }
    }
    return best;
  };

  /* Lagrange-style lattice reduction on the stash of residues (they live in
     the lattice spanned by the yet unknown irreducibles, which form an
     orthonormal basis); any vector reduced to norm one is, up to sign, a new
     irreducible character. */
  auto reduceStash = [&]() {
    bool harvestedAny = false;
    auto dropZeros = [&]() {
      leftovers.erase(std::remove_if(leftovers.begin(), leftovers.end(),
                                     [&](const Fn& f) { return inner(f, f) == 0; }),
                      leftovers.end());
    };
    dropZeros();
    bool work = true;
    while (work) {
      work = false;
      for (size_t i = 0; i < leftovers.size(); ++i)
        for (size_t j = 0; j < leftovers.size(); ++j) {
          if (i == j)
            continue;
          Rat nj = inner(leftovers[j], leftovers[j]);
          if (nj == 0)
            continue;
          Int m = nearestInt(inner(leftovers[i], leftovers[j]) / nj);
          if (m == 0)
            continue;
          Fn cand = leftovers[i];
          for (int c = 0; c < nc; ++c)
            cand[c] -= m * leftovers[j][c];
          if (inner(cand, cand) < inner(leftovers[i], leftovers[i])) {
            leftovers[i] = std::move(cand);
            work = true;
          }
        }
      for (size_t i = 0; i < leftovers.size(); ++i) {
        if (inner(leftovers[i], leftovers[i]) != 1)
          continue;
        Fn f = std::move(leftovers[i]);
        leftovers.erase(leftovers.begin() + i);
        if (f[0] < 0)
          for (int c = 0; c < nc; ++c)
            f[c] = -f[c];
        for (Fn& g : leftovers) {
          Int m = intOf(inner(g, f));
          for (int c = 0; c < nc; ++c)
            g[c] -= m * f[c];
        }
        dimSquares += f[0] * f[0];
        found.push_back(std::move(f));
        harvestedAny = true;
        work = true;
        break;
      }
      dropZeros();
    }
    return harvestedAny;
  };

  /* Endgame: the characters still missing span the orthogonal complement
     of the found ones inside class-function space, and that subspace is
     invariant under the action of every class-sum matrix.  Splitting it
     into common eigenspaces (all eigenvalues are rational integers here)
     isolates each remaining irreducible character exactly. */
  auto dixonEndgame = [&]() {
    // structure constants a[j][k][l] of the class algebra
    std::vector<std::vector<std::vector<int>>> a(
        nc, std::vector<std::vector<int>>(nc, std::vector<int>(nc, 0)));
    for (int l = 0; l < nc; ++l) {
      int zl = g.classRep(l);
      for (int x = 0; x < g.size(); ++x)
        ++a[g.classOf(x)][g.classOf(g.mult(g.inverse(x), zl))][l];
    }
    auto applyP = [&](int j, const Vector& f) {
      Vector out(nc, Rat(0));
      for (int k = 0; k < nc; ++k) {
        Rat acc(0);
        for (int l = 0; l < nc; ++l)
          if (a[j][k][l] != 0)
            acc += Rat(a[j][k][l]) * Rat(t.d_classes[l].size) * f[l];
        out[k] = acc / Rat(t.d_classes[k].size);
      }
      return out;
    };
    // orthogonal complement of the found characters
    Matrix m(found.size(), Vector(nc));
    for (size_t i = 0; i < found.size(); ++i)
      for (int k = 0; k < nc; ++k)
        m[i][k] = Rat(t.d_classes[k].size) * Rat(found[i][k]);
    std::vector<std::vector<Vector>> work = {rationalKernel(std::move(m), nc)};
    std::vector<Vector> lines;
    for (int j = 1; j < nc && !work.empty(); ++j) {
      std::vector<std::vector<Vector>> next;
      for (auto& basis : work) {
        int d = static_cast<int>(basis.size());
        if (d == 1) {
          lines.push_back(std::move(basis[0]));
          continue;
        }
        Matrix rm(d, Vector(d, Rat(0)));
        for (int i = 0; i < d; ++i) {
          Vector coords = solveInBasis(basis, applyP(j, basis[i]));
          for (int r2 = 0; r2 < d; ++r2)
            rm[r2][i] = coords[r2];
        }
        Poly cp = charPolyOfMatrix(rm);
        Int bound = t.d_classes[j].size;
        int total = 0;
        for (Int w = -bound; w <= bound; ++w) {
          if (cp.eval(Rat(w)) != 0)
            continue;
          Matrix shifted = rm;
          for (int i = 0; i < d; ++i)
            shifted[i][i] -= Rat(w);
          std::vector<Vector> sub = rationalKernel(std::move(shifted), d);
          if (sub.empty())
            continue;
          std::vector<Vector> newBasis;
          for (const Vector& coords : sub) {
            Vector v(nc, Rat(0));
            for (int i = 0; i < d; ++i)
              for (int k = 0; k < nc; ++k)
                v[k] += coords[i] * basis[i][k];
            newBasis.push_back(std::move(v));
          }
          total += static_cast<int>(newBasis.size());
          next.push_back(std::move(newBasis));
        }
        require(total == d, "class-sum action failed to split integrally");
      }
      work.swap(next);
    }
    for (auto& basis : work) {
      require(basis.size() == 1, "central characters failed to separate");
      lines.push_back(std::move(basis[0]));
    }
    // normalize each line to a genuine character row
    for (Vector& u : lines) {
      Rat nrm(0);
      for (int k = 0; k < nc; ++k)
        nrm += Rat(t.d_classes[k].size) * u[k] * u[k];
      nrm /= Rat(t.d_order);
      require(nrm != 0, "null vector in the endgame");
      Int p = numerator(nrm), q = denominator(nrm);
      Int sp = sqrt(p), sq = sqrt(q);
      require(sp * sp == p && sq * sq == q, "character norm is not a square");
      Rat scale = Rat(sq) / Rat(sp);
      Fn f(nc);
      for (int k = 0; k < nc; ++k)
        f[k] = intOf(u[k] * scale);
      if (f[0] < 0)
        for (int k = 0; k < nc; ++k)
          f[k] = -f[k];
      dimSquares += f[0] * f[0];
      found.push_back(std::move(f));
    }
    leftovers.clear();
  };

  int guard = 0;
  while (dimSquares < t.d_order) {
    require(++guard < 100000, "character sieve failed to converge");
    if (!pending.empty()) {
      Fn f = std::move(pending.front());
      pending.pop_front();
      process(std::move(f));
      continue;
    }
    // retry stashed remainders against the newly found irreducibles
    std::vector<Fn> stash;
    stash.swap(leftovers);
    bool progress = false;
    for (auto& f : stash)
      progress = process(std::move(f)) || progress;
    if (reduceStash())
      progress = true;
    if (progress)
      continue;
    // queue fresh candidates: tensor products of found irreducibles,
    // symmetric and alternating squares and cubes of each find, and the
    // next symmetric power of the reflection character
    bool queued = false;
    for (size_t i = 0; i < found.size(); ++i)
      for (size_t j = i + 1; j < found.size(); ++j)
        if (productsQueued.insert({i, j}).second) {
          Fn f(nc);
          for (int c = 0; c < nc; ++c)
            f[c] = found[i][c] * found[j][c];
          pending.push_back(std::move(f));
          queued = true;
        }
    for (size_t i = 0; i < found.size(); ++i)
      if (powersQueued.insert(i).second) {
        Fn sym(nc), alt(nc), sym3(nc), alt3(nc);
        for (int c = 0; c < nc; ++c) {
          Int x1 = found[i][c];
          Int x2 = found[i][classSquare[c]];
          Int x3 = found[i][classCube[c]];
          require((x1 * x1 + x2) % 2 == 0, "power character parity");
          sym[c] = (x1 * x1 + x2) / 2;
          alt[c] = (x1 * x1 - x2) / 2;
          Int s3 = x1 * x1 * x1 + 3 * x1 * x2 + 2 * x3;
          Int a3 = x1 * x1 * x1 - 3 * x1 * x2 + 2 * x3;
          require(s3 % 6 == 0 && a3 % 6 == 0, "cube character divisibility");
          sym3[c] = s3 / 6;
          alt3[c] = a3 / 6;
        }
        pending.push_back(std::move(sym));
        pending.push_back(std::move(alt));
        pending.push_back(std::move(sym3));
        pending.push_back(std::move(alt3));
        queued = true;
      }
    if (!queued && molienN < t.d_positiveRoots) {
      ++molienN;
      // character of Sym^molienN of the reflection representation, via
      // Newton's identities on each class
      Fn h(nc);
      for (int c = 0; c < nc; ++c) {
        const Poly& p = t.d_classes[c].reflPoly;
        auto elem = [&](int i) {
          if (i > rank)
            return Rat(0);
          Rat v = p.coeff(rank - i);
          return (i % 2) ? -v : v;
        };
        std::vector<Rat> ps(molienN + 1, Rat(0)), hs(molienN + 1, Rat(0));
        hs[0] = Rat(1);
        for (int k = 1; k <= molienN; ++k) {
          Rat v(0);
          for (int i = 1; i < k; ++i) {
            Rat term = elem(i) * ps[k - i];
            v += (i % 2) ? term : -term;
          }
          Rat last = Rat(k) * elem(k);
          v += (k % 2) ? last : -last;
          ps[k] = v;
        }
        for (int m = 1; m <= molienN; ++m) {
          Rat acc(0);
          for (int k = 1; k <= m; ++k)
            acc += ps[k] * hs[m - k];
          hs[m] = acc / Rat(m);
        }
        h[c] = intOf(hs[molienN]);
      }
      pending.push_back(std::move(h));
      queued = true;
    }
    if (!queued)
      dixonEndgame();
  }
  require(dimSquares == t.d_order, "character sieve incomplete");

  // order irreducibles by dimension, then lowest symmetric power, then by
  // their values; label them phi[dim,b] with primes on collisions
  t.d_values = found;
  t.d_irreps.assign(found.size(), IrrepData());
  for (size_t e = 0; e < found.size(); ++e)
    t.d_irreps[e].dim = found[e][0];
  // b-invariants need the table machinery; fill after a provisional finalize
  for (size_t e = 0; e < found.size(); ++e)
    t.d_irreps[e].label = "tmp" + std::to_string(e);
  t.finalize();
  std::vector<int> b(found.size());
  for (size_t e = 0; e < found.size(); ++e)
    b[e] = t.bInvariant(static_cast<int>(e));

  std::vector<int> perm(found.size());
  std::iota(perm.begin(), perm.end(), 0);
  std::sort(perm.begin(), perm.end(), [&](int x, int y) {
    if (t.d_irreps[x].dim != t.d_irreps[y].dim)
      return t.d_irreps[x].dim < t.d_irreps[y].dim;
    if (b[x] != b[y])
      return b[x] < b[y];
    return t.d_values[x] > t.d_values[y];
  });
  std::vector<std::vector<Int>> vals;
  std::vector<IrrepData> irr;
  for (size_t k = 0; k < perm.size(); ++k) {
    vals.push_back(std::move(t.d_values[perm[k]]));
    IrrepData e = t.d_irreps[perm[k]];
    e.label = "phi[" + e.dim.str() + "," + std::to_string(b[perm[k]]) + "]";
    irr.push_back(std::move(e));
  }
  // disambiguate equal labels in order of appearance: second gets ', third ''
  for (size_t k = 0; k < irr.size(); ++k) {
    int seen = 0;
    for (size_t l = 0; l < k; ++l)
      if (irr[l].label == irr[k].label ||
          (irr[l].label.rfind(irr[k].label, 0) == 0 &&
           irr[l].label.find_first_not_of('\'', irr[k].label.size()) ==
               std::string::npos))
        ++seen;
    irr[k].label += std::string(seen, '\'');
  }
  t.d_values = std::move(vals);
  t.d_irreps = std::move(irr);
  t.d_bCache.clear();
  t.d_symPowers.clear();
  t.d_classIndex.clear();
  t.d_irrepIndex.clear();
  t.finalize();
  return t;
}

/******** Chapter V -- products and the dispatcher **************************/

CharTable CharTable::product(const CharTable& a, const CharTable& b)
{
  CharTable t;
  t.d_name = a.d_name + "x" + b.d_name;
  t.d_order = a.d_order * b.d_order;
  t.d_reflRank = a.d_reflRank + b.d_reflRank;
  t.d_positiveRoots = a.d_positiveRoots + b.d_positiveRoots;
  t.d_degrees = a.d_degrees;
  t.d_degrees.insert(t.d_degrees.end(), b.d_degrees.begin(), b.d_degrees.end());
  std::sort(t.d_degrees.begin(), t.d_degrees.end());

  for (int i = 0; i < a.classCount(); ++i)
    for (int j = 0; j < b.classCount(); ++j) {
      ClassData c;
      c.label = a.classData(i).label + "*" + b.classData(j).label;
      c.size = a.classData(i).size * b.classData(j).size;
      c.reflPoly = a.classData(i).reflPoly * b.classData(j).reflPoly;
      t.d_classes.push_back(std::move(c));
    }
  for (int i = 0; i < a.irrepCount(); ++i)
    for (int j = 0; j < b.irrepCount(); ++j) {
      IrrepData e;
      e.label = a.irrepData(i).label + "*" + b.irrepData(j).label;
      e.dim = a.irrepData(i).dim * b.irrepData(j).dim;
      t.d_irreps.push_back(std::move(e));
      std::vector<Int> row;
      row.reserve(t.d_classes.size());
      for (int ci = 0; ci < a.classCount(); ++ci)
        for (int cj = 0; cj < b.classCount(); ++cj)
          row.push_back(a.value(i, ci) * b.value(j, cj));
      t.d_values.push_back(std::move(row));
    }
  t.finalize();
  return t;
}

const CharTable& CharTable::forType(const TypeSymbol& ts)
{
  TypeSymbol t = ts;
  if (t.rank == 1 && (t.family == Family::B || t.family == Family::C ||
                      t.family == Family::D))
    t = {Family::A, 1};
  if (t.family == Family::D && t.rank == 3)
    t = {Family::A, 3};
  if (t.family == Family::C)
    t.family = Family::B;

  switch (t.family) {
    case Family::A:
      return symmetric(t.rank + 1);
    case Family::B:
      return hyperoctahedral(t.rank);
    case Family::D:
      return demihyperoctahedral(t.rank);
    case Family::G: {
      static const CharTable g2 = [] {
        ReflectionGroup g(CoxeterDescriptor::parse("G2"));
        return fromGroup(g, "G2", {2, 6});
      }();
      return g2;
    }
    case Family::F: {
      static const CharTable f4 = [] {
        ReflectionGroup g(CoxeterDescriptor::parse("F4"));
        return fromGroup(g, "F4", {2, 6, 8, 12});
      }();
      return f4;
    }
    default:
      throw Unsupported("character tables beyond F4 are not available");
  }
}

/******** Chapter VI -- generic machinery ***********************************/

void CharTable::finalize()
{
  Int sizeSum(0), dimSquares(0);
  for (const auto& c : d_classes)
    sizeSum += c.size;
  require(sizeSum == d_order, "class sizes do not sum to the group order");
  for (const auto& e : d_irreps)
    dimSquares += e.dim * e.dim;
  require(dimSquares == d_order, "dimension squares do not sum to the order");
  require(d_values.size() == d_irreps.size(), "value rows mismatch");
  // locate the identity class: the unique one whose reflection
  // characteristic polynomial is (q-1)^rank
  Poly idPoly(Rat(1));
  for (int i = 0; i < d_reflRank; ++i)
    idPoly *= qPowMinusOne(1);
  int idClass = -1;
  for (size_t c = 0; c < d_classes.size(); ++c)
    if (d_classes[c].size == 1 && d_classes[c].reflPoly == idPoly) {
      require(idClass < 0, "two identity classes");
      idClass = static_cast<int>(c);
    }
  require(idClass >= 0, "no identity class found");
  for (size_t e = 0; e < d_values.size(); ++e) {
    require(d_values[e].size() == d_classes.size(), "value row length");
    require(d_values[e][idClass] == d_irreps[e].dim,
            "dimension mismatch at identity");
  }
  d_classIndex.clear();
  d_irrepIndex.clear();
  for (size_t c = 0; c < d_classes.size(); ++c)
    require(d_classIndex.emplace(d_classes[c].label, static_cast<int>(c)).second,
            "duplicate class label");
  for (size_t e = 0; e < d_irreps.size(); ++e)
    require(d_irrepIndex.emplace(d_irreps[e].label, static_cast<int>(e)).second,
            "duplicate irreducible label");
}

int CharTable::classByLabel(const std::string& label) const
{
  auto it = d_classIndex.find(label);
  require(it != d_classIndex.end(), "unknown class label: " + label);
  return it->second;
}

int CharTable::irrepByLabel(const std::string& label) const
{
  auto it = d_irrepIndex.find(label);
  require(it != d_irrepIndex.end(), "unknown irreducible label: " + label);
  return it->second;
}

int CharTable::irrepByBilabel(const Bipartition& bp, int splitHalf) const
{
  for (size_t e = 0; e < d_irreps.size(); ++e)
    if (d_irreps[e].bilabel == bp && d_irreps[e].splitHalf == splitHalf)
      return static_cast<int>(e);
  // demihyperoctahedral labels are unordered pairs
  Bipartition swapped{bp.second, bp.first};
  for (size_t e = 0; e < d_irreps.size(); ++e)
    if (d_irreps[e].bilabel == swapped && d_irreps[e].splitHalf == splitHalf)
      return static_cast<int>(e);
  throw InvariantError("bipartition label not found in table " + d_name);
}

int CharTable::classOfCycleType(const Bipartition& t, int splitHalf) const
{
  for (size_t c = 0; c < d_classes.size(); ++c)
    if (d_classes[c].cycleType == t && d_classes[c].splitHalf == splitHalf)
      return static_cast<int>(c);
  throw InvariantError("cycle type not found in table " + d_name);
}

int CharTable::classOfSignedPerm(const SignedPerm& w) const
{
  Bipartition t = w.cycleType();
  require(!d_name.empty(), "classOfSignedPerm: unnamed table");
  char fam = d_name[0];
  if (fam == 'A') {
    require(t.second.empty(), "classOfSignedPerm: sign flips in type A");
    return classOfCycleType(t, -1);
  }
  if (fam == 'B')
    return classOfCycleType(t, -1);
  if (fam == 'D') {
    require(t.second.size() % 2 == 0, "classOfSignedPerm: odd flip count");
    bool split = t.second.empty();
    for (int a : t.first)
      if (a % 2)
        split = false;
    return classOfCycleType(t, split ? dConjugacyHalf(w) : -1);
  }
  throw Unsupported("classOfSignedPerm: not a classical table");
}

Rat CharTable::innerProduct(const std::vector<Int>& f,
                            const std::vector<Int>& g) const
{
  Rat s(0);
  for (size_t c = 0; c < d_classes.size(); ++c)
    s += Rat(d_classes[c].size) * Rat(f[c]) * Rat(g[c]);
  return s / Rat(d_order);
}

std::vector<Int> CharTable::decompose(const std::vector<Int>& classFn) const
{
  std::vector<Int> m(d_irreps.size());
  for (size_t e = 0; e < d_irreps.size(); ++e) {
    Rat x = innerProduct(classFn, d_values[e]);
    m[e] = intOf(x);
  }
  return m;
}

bool CharTable::orthogonal() const
{
  for (size_t i = 0; i < d_irreps.size(); ++i)
    for (size_t j = i; j < d_irreps.size(); ++j) {
      Rat ip = innerProduct(d_values[i], d_values[j]);
      if (ip != Rat(i == j ? 1 : 0))
        return false;
    }
  // column orthogonality
  for (size_t c = 0; c < d_classes.size(); ++c)
    for (size_t d = c; d < d_classes.size(); ++d) {
      Int s(0);
      for (size_t e = 0; e < d_irreps.size(); ++e)
        s += d_values[e][c] * d_values[e][d];
      Rat want = (c == d) ? Rat(d_order) / Rat(d_classes[c].size) : Rat(0);
      if (Rat(s) != want)
        return false;
    }
  return true;
}

const std::vector<Rat>& CharTable::symPowerRefl(int n) const
{
  require(n >= 0, "symPowerRefl: negative power");
  int nc = classCount();
  if (d_symPowers.empty())
    d_symPowers.push_back(std::vector<Rat>(nc, Rat(1)));  // Sym^0 = trivial
  while (static_cast<int>(d_symPowers.size()) <= n) {
    int m = static_cast<int>(d_symPowers.size());  // computing Sym^m
    std::vector<Rat> h(nc);
    for (int c = 0; c < nc; ++c) {
      const Poly& p = d_classes[c].reflPoly;
      int r = d_reflRank;
      auto e = [&](int i) {
        if (i > r)
          return Rat(0);
        Rat v = p.coeff(r - i);
        return (i % 2) ? -v : v;
      };
      // p_k via Newton's identities, computed fresh up to m
      std::vector<Rat> ps(m + 1, Rat(0));
      for (int k = 1; k <= m; ++k) {
        Rat v(0);
        for (int i = 1; i < k; ++i) {
          Rat term = e(i) * ps[k - i];
          v += (i % 2) ? term : -term;
        }
        Rat last = Rat(k) * e(k);
        v += (k % 2) ? last : -last;
        ps[k] = v;
      }
      Rat acc(0);
      for (int k = 1; k <= m; ++k)
        acc += ps[k] * d_symPowers[m - k][c];
      h[c] = acc / Rat(m);
    }
    d_symPowers.push_back(std::move(h));
  }
  return d_symPowers[n];
}

Int CharTable::symPowerMultiplicity(int e, int n) const
{
  const std::vector<Rat>& h = symPowerRefl(n);
  Rat s(0);
  for (int c = 0; c < classCount(); ++c)
    s += Rat(d_classes[c].size) * Rat(d_values[e][c]) * h[c];
  return intOf(s / Rat(d_order));
}

int CharTable::bInvariant(int e) const
{
  if (d_bCache.empty())
    d_bCache.assign(d_irreps.size(), -1);
  if (d_bCache[e] >= 0)
    return d_bCache[e];
  for (int n = 0; n <= d_positiveRoots; ++n)
    if (symPowerMultiplicity(e, n) != 0)
      return d_bCache[e] = n;
  throw InvariantError("bInvariant: no occurrence up to the number of roots");
}

Poly CharTable::poincare() const
{
  require(!d_degrees.empty(), "poincare: no degrees recorded");
  Poly p(Rat(1));
  for (int d : d_degrees)
    p *= qInt(d);
  return p;
}

Poly CharTable::fakeDegree(int e) const
{
  require(!d_degrees.empty(), "fakeDegree: no degrees recorded");
  RatFun acc;
  for (int c = 0; c < classCount(); ++c) {
    // det(w) on the reflection representation, read off the constant
    // coefficient of det(q - w)
    Rat det = d_classes[c].reflPoly.coeff(0);
    if (d_reflRank % 2)
      det = -det;
    require(det == 1 || det == -1, "reflection determinant");
    Poly num(det * Rat(d_classes[c].size) * Rat(d_values[e][c]));
    acc += RatFun(num, d_classes[c].reflPoly);
  }
  Poly prod(Rat(1));
  for (int d : d_degrees)
    prod *= qPowMinusOne(d);
  acc *= RatFun(prod);
  acc *= RatFun(Poly(Rat(1) / Rat(d_order)));
  require(acc.isPolynomial(), "fake degree is not polynomial");
  return acc.asPoly();
}

std::vector<std::vector<Int>> CharTable::inductionFrom(
    const CharTable& sub, const std::vector<int>& fusion) const
{
  require(fusion.size() == static_cast<size_t>(sub.classCount()),
          "fusion map size mismatch");
  std::vector<std::vector<Int>> m(sub.irrepCount(),
                                  std::vector<Int>(irrepCount()));
  for (int se = 0; se < sub.irrepCount(); ++se)
    for (int e = 0; e < irrepCount(); ++e) {
      Rat s(0);
      for (int sc = 0; sc < sub.classCount(); ++sc)
        s += Rat(sub.classData(sc).size) * Rat(sub.value(se, sc)) *
             Rat(value(e, fusion[sc]));
      m[se][e] = intOf(s / Rat(sub.order()));
    }
  return m;
}

}  // namespace blockweyl
