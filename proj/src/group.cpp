/*
  This is group.cpp — implementation of concrete finite reflection groups.
*/

#include "blockweyl/group.hpp"

#include <algorithm>
#include <numeric>

namespace blockweyl {

/******** Chapter I -- signed permutations **********************************/

SignedPerm SignedPerm::identity(int n)
{
  SignedPerm p;
  p.img.resize(n);
  for (int i = 0; i < n; ++i)
    p.img[i] = i + 1;
  return p;
}

SignedPerm SignedPerm::transposition(int n, int i, int j)
{
  SignedPerm p = identity(n);
  p.img[i] = j + 1;
  p.img[j] = i + 1;
  return p;
}

SignedPerm SignedPerm::negTransposition(int n, int i, int j)
{
  SignedPerm p = identity(n);
  p.img[i] = -(j + 1);
  p.img[j] = -(i + 1);
  return p;
}

SignedPerm SignedPerm::signFlip(int n, int i)
{
  SignedPerm p = identity(n);
  p.img[i] = -(i + 1);
  return p;
}

SignedPerm SignedPerm::after(const SignedPerm& first) const
{
  require(n() == first.n(), "SignedPerm size mismatch");
  SignedPerm r;
  r.img.resize(n());
  for (int i = 0; i < n(); ++i) {
    int t = first.img[i];
    int j = std::abs(t) - 1;
    int u = img[j];
    r.img[i] = (t > 0) ? u : -u;
  }
  return r;
}

SignedPerm SignedPerm::inverse() const
{
  SignedPerm r;
  r.img.resize(n());
  for (int i = 0; i < n(); ++i) {
    int t = img[i];
    int j = std::abs(t) - 1;
    r.img[j] = (t > 0) ? (i + 1) : -(i + 1);
  }
  return r;
}

bool SignedPerm::isIdentity() const
{
  for (int i = 0; i < n(); ++i)
    if (img[i] != i + 1)
      return false;
  return true;
}

int SignedPerm::flipCount() const
{
  int c = 0;
  for (int t : img)
    if (t < 0)
      ++c;
  return c;
}

Bipartition SignedPerm::cycleType() const
{
  Partition pos, neg;
  std::vector<bool> seen(n(), false);
  for (int i = 0; i < n(); ++i) {
    if (seen[i])
      continue;
    int len = 0, cur = i, sign = 1;
    while (!seen[cur]) {
      seen[cur] = true;
      ++len;
      int t = img[cur];
      if (t < 0)
        sign = -sign;
      cur = std::abs(t) - 1;
    }
    (sign > 0 ? pos : neg).push_back(len);
  }
  std::sort(pos.begin(), pos.end(), std::greater<int>());
  std::sort(neg.begin(), neg.end(), std::greater<int>());
  return {pos, neg};
}

Poly SignedPerm::charPoly() const
{
  auto [pos, neg] = cycleType();
  Poly p(Rat(1));
  for (int l : pos)
    p *= qPowMinusOne(l);
  for (int l : neg)
    p *= qPowPlusOne(l);
  return p;
}

SignedPerm classRepresentative(const Bipartition& type)
{
  int n = weight(type.first) + weight(type.second);
  SignedPerm w = SignedPerm::identity(n);
  int at = 0;
  auto placeCycle = [&](int len, bool negative) {
    for (int i = 0; i < len - 1; ++i)
      w.img[at + i] = at + i + 2;  // e_{at+i} -> e_{at+i+1}
    w.img[at + len - 1] = negative ? -(at + 1) : (at + 1);
    at += len;
  };
  for (int l : type.first)
    placeCycle(l, false);
  for (int l : type.second)
    placeCycle(l, true);
  return w;
}

Int centralizerOrderHyp(const Bipartition& type)
{
  auto half = [](const Partition& p) {
    std::map<int, int> mult;
    for (int part : p)
      ++mult[part];
    Int z(1);
    for (auto [k, m] : mult) {
      for (int i = 0; i < m; ++i)
        z *= 2 * k;
      for (int i = 2; i <= m; ++i)
        z *= i;
    }
    return z;
  };
  return half(type.first) * half(type.second);
}

Int powerTraceSigned(const Bipartition& type, int k)
{
  require(k >= 1, "powerTraceSigned: k must be positive");
  Int t(0);
  for (int j : type.first)
    if (k % j == 0)
      t += j;
  for (int j : type.second)
    if (k % j == 0)
      t += (k / j) % 2 == 0 ? j : -j;
  return t;
}

/******** Chapter II -- exact matrices **************************************/

Matrix matIdentity(int n)
{
  Matrix m(n, Vector(n, Rat(0)));
  for (int i = 0; i < n; ++i)
    m[i][i] = 1;
  return m;
}

Matrix matMul(const Matrix& a, const Matrix& b)
{
  int n = static_cast<int>(a.size());
  int p = static_cast<int>(b[0].size());
  int k = static_cast<int>(b.size());
  Matrix r(n, Vector(p, Rat(0)));
  for (int i = 0; i < n; ++i)
    for (int l = 0; l < k; ++l) {
      if (a[i][l] == 0)
        continue;
      for (int j = 0; j < p; ++j)
        r[i][j] += a[i][l] * b[l][j];
    }
  return r;
}

Vector matApply(const Matrix& a, const Vector& v)
{
  int n = static_cast<int>(a.size());
  int k = static_cast<int>(v.size());
  Vector r(n, Rat(0));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < k; ++j)
      r[i] += a[i][j] * v[j];
  return r;
}

bool matEq(const Matrix& a, const Matrix& b)
{
  return a == b;
}

Poly charPolyOfMatrix(const Matrix& m)
{
  // Faddeev-LeVerrier: exact characteristic polynomial of a square matrix
  int n = static_cast<int>(m.size());
  std::vector<Rat> c(n + 1, Rat(0));
  c[n] = 1;  // coefficient of q^n
  Matrix N = matIdentity(n);
  for (int k = 1; k <= n; ++k) {
    N = matMul(m, N);
    Rat tr(0);
    for (int i = 0; i < n; ++i)
      tr += N[i][i];
    Rat ck = -tr / k;
    c[n - k] = ck;
    for (int i = 0; i < n; ++i)
      N[i][i] += ck;
  }
  return Poly(std::move(c));
}

std::vector<Vector> rationalKernel(Matrix m, int cols)
{
  int rows = static_cast<int>(m.size());
  std::vector<int> pivotCol;
  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    int p = -1;
    for (int i = r; i < rows && p < 0; ++i)
      if (m[i][c] != 0)
        p = i;
    if (p < 0)
      continue;
    std::swap(m[r], m[p]);
    Rat d = m[r][c];
    for (int cc = 0; cc < cols; ++cc)
      m[r][cc] /= d;
    for (int i = 0; i < rows; ++i)
      if (i != r && m[i][c] != 0) {
        Rat f = m[i][c];
        for (int cc = 0; cc < cols; ++cc)
          m[i][cc] -= f * m[r][cc];
      }
    pivotCol.push_back(c);
    ++r;
  }
  std::vector<bool> isPivot(cols, false);
  for (int pc : pivotCol)
    isPivot[pc] = true;
  std::vector<Vector> basis;
  for (int c = 0; c < cols; ++c) {
    if (isPivot[c])
      continue;
    Vector v(cols, Rat(0));
    v[c] = Rat(1);
    for (size_t i = 0; i < pivotCol.size(); ++i)
      v[pivotCol[i]] = -m[i][c];
    basis.push_back(std::move(v));
  }
  return basis;
}

Vector solveInBasis(const std::vector<Vector>& basis, const Vector& v)
{
  int d = static_cast<int>(basis.size());
  int n = static_cast<int>(v.size());
  Matrix m(n, Vector(d + 1, Rat(0)));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < d; ++j)
      m[i][j] = basis[j][i];
    m[i][d] = v[i];
  }
  std::vector<int> pivotRowForCol(d, -1);
  int r = 0;
  for (int c = 0; c < d; ++c) {
    int p = -1;
    for (int i = r; i < n && p < 0; ++i)
      if (m[i][c] != 0)
        p = i;
    require(p >= 0, "solveInBasis: dependent basis");
    std::swap(m[r], m[p]);
    Rat piv = m[r][c];
    for (int cc = 0; cc <= d; ++cc)
      m[r][cc] /= piv;
    for (int i = 0; i < n; ++i)
      if (i != r && m[i][c] != 0) {
        Rat f = m[i][c];
        for (int cc = 0; cc <= d; ++cc)
          m[i][cc] -= f * m[r][cc];
      }
    pivotRowForCol[c] = r;
    ++r;
  }
  for (int i = r; i < n; ++i)
    require(m[i][d] == 0, "solveInBasis: vector not in subspace");
  Vector x(d);
  for (int c = 0; c < d; ++c)
    x[c] = m[pivotRowForCol[c]][d];
  return x;
}

/******** Chapter III -- root systems ***************************************/

int RootSystem::positiveCount() const
{
  return static_cast<int>(std::count(positive.begin(), positive.end(), true));
}

Matrix RootSystem::reflection(int rootIdx) const
{
  const Vector& a = roots[rootIdx];
  int d = static_cast<int>(a.size());
  Rat nn(0);
  for (const Rat& x : a)
    nn += x * x;
  Matrix m = matIdentity(d);
  for (int j = 0; j < d; ++j) {
    // s(e_j) = e_j - 2 (e_j, a)/(a,a) * a
    Rat f = Rat(2) * a[j] / nn;
    for (int i = 0; i < d; ++i)
      m[i][j] -= f * a[i];
  }
  return m;
}

int RootSystem::indexOfRoot(const Vector& v) const
{
  for (size_t i = 0; i < roots.size(); ++i)
    if (roots[i] == v)
      return static_cast<int>(i);
  return -1;
}

int highestRootIndex(const RootSystem& rs)
{
  int found = -1;
  for (int p = 0; p < rs.count(); ++p) {
    if (!rs.positive[p])
      continue;
    bool maximal = true;
    for (int s : rs.simples) {
      Vector sum = rs.roots[p];
      for (size_t i = 0; i < sum.size(); ++i)
        sum[i] += rs.roots[s][i];
      if (rs.indexOfRoot(sum) >= 0) {
        maximal = false;
        break;
      }
    }
    if (maximal) {
      require(found < 0, "highestRootIndex: requires an irreducible system");
      found = p;
    }
  }
  require(found >= 0, "highestRootIndex: empty system");
  return found;
}

namespace {

/* solve B x = v where the columns of B are `basis`; throws if unsolvable */
Vector coordsInBasis(const std::vector<Vector>& basis, const Vector& v)
{
  int d = static_cast<int>(v.size());
  int r = static_cast<int>(basis.size());
  // augmented matrix [B | v]
  Matrix aug(d, Vector(r + 1, Rat(0)));
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < r; ++j)
      aug[i][j] = basis[j][i];
    aug[i][r] = v[i];
  }
  // forward elimination with partial pivoting by first nonzero
  std::vector<int> pivotRow(r, -1);
  int row = 0;
  for (int col = 0; col < r && row < d; ++col) {
    int pr = -1;
    for (int i = row; i < d; ++i)
      if (aug[i][col] != 0) {
        pr = i;
        break;
      }
    if (pr == -1)
      continue;
    std::swap(aug[row], aug[pr]);
    for (int i = 0; i < d; ++i) {
      if (i == row || aug[i][col] == 0)
        continue;
      Rat f = aug[i][col] / aug[row][col];
      for (int j = col; j <= r; ++j)
        aug[i][j] -= f * aug[row][j];
    }
    pivotRow[col] = row;
    ++row;
  }
  Vector x(r, Rat(0));
  for (int col = 0; col < r; ++col)
    if (pivotRow[col] != -1)
      x[col] = aug[pivotRow[col]][r] / aug[pivotRow[col]][col];
  // verify
  for (int i = 0; i < d; ++i) {
    Rat s(0);
    for (int j = 0; j < r; ++j)
      s += basis[j][i] * x[j];
    require(s == v[i], "coordsInBasis: vector not in span");
  }
  return x;
}

void closeRootSet(std::vector<Vector>& roots)
{
  // fixpoint closure under mutual reflections
  bool grew = true;
  while (grew) {
    grew = false;
    for (size_t i = 0; i < roots.size(); ++i) {
      for (size_t j = 0; j < roots.size(); ++j) {
        const Vector a = roots[i];
        const Vector b = roots[j];
        Rat nn(0), ab(0);
        for (size_t k = 0; k < a.size(); ++k) {
          nn += a[k] * a[k];
          ab += a[k] * b[k];
        }
        Vector c(b);
        Rat f = Rat(2) * ab / nn;
        for (size_t k = 0; k < a.size(); ++k)
          c[k] -= f * a[k];
        if (std::find(roots.begin(), roots.end(), c) == roots.end()) {
          roots.push_back(std::move(c));
          grew = true;
        }
      }
    }
  }
}

void finishRootSystem(RootSystem& rs, const std::vector<Vector>& simpleVectors)
{
  // positivity via coordinates in the simple basis
  rs.positive.resize(rs.roots.size());
  for (size_t i = 0; i < rs.roots.size(); ++i) {
    Vector c = coordsInBasis(simpleVectors, rs.roots[i]);
    bool hasPos = false, hasNeg = false;
    for (const Rat& x : c) {
      if (x > 0)
        hasPos = true;
      if (x < 0)
        hasNeg = true;
    }
    require(hasPos != hasNeg, "finishRootSystem: root not signed");
    rs.positive[i] = hasPos;
  }
  rs.negOf.resize(rs.roots.size());
  for (size_t i = 0; i < rs.roots.size(); ++i) {
    Vector neg = rs.roots[i];
    for (Rat& x : neg)
      x = -x;
    int j = rs.indexOfRoot(neg);
    require(j >= 0, "finishRootSystem: missing negative root");
    rs.negOf[i] = j;
  }
  rs.norm2.resize(rs.roots.size());
  for (size_t i = 0; i < rs.roots.size(); ++i) {
    Rat nn(0);
    for (const Rat& x : rs.roots[i])
      nn += x * x;
    rs.norm2[i] = nn;
  }
}

}  // namespace

RootSystem standardRoots(const CoxeterDescriptor& desc)
{
  require(!desc.affine, "standardRoots: finite descriptors only");
  // ambient dimension: block sum over factors
  std::vector<Vector> simpleVectors;
  int dim = 0;
  for (const auto& f : desc.factors) {
    switch (f.family) {
      case Family::A:
        dim += f.rank + 1;
        break;
      case Family::B:
      case Family::C:
      case Family::D:
        dim += f.rank;
        break;
      case Family::G:
        dim += 3;
        break;
      case Family::F:
        dim += 4;
        break;
      case Family::E:
        throw Unsupported("standardRoots: E-type realizations are not needed");
    }
  }
  auto basisVec = [&](int i) {
    Vector v(dim, Rat(0));
    v[i] = 1;
    return v;
  };
  auto diff = [&](int i, int j) {
    Vector v(dim, Rat(0));
    v[i] = 1;
    v[j] = -1;
    return v;
  };
  int off = 0;
  for (const auto& f : desc.factors) {
    int n = f.rank;
    switch (f.family) {
      case Family::A:
        for (int i = 0; i < n; ++i)
          simpleVectors.push_back(diff(off + i, off + i + 1));
        off += n + 1;
        break;
      case Family::B:
        for (int i = 0; i + 1 < n; ++i)
          simpleVectors.push_back(diff(off + i, off + i + 1));
        simpleVectors.push_back(basisVec(off + n - 1));
        off += n;
        break;
      case Family::C:
        for (int i = 0; i + 1 < n; ++i)
          simpleVectors.push_back(diff(off + i, off + i + 1));
        {
          Vector v(dim, Rat(0));
          v[off + n - 1] = 2;
          simpleVectors.push_back(std::move(v));
        }
        off += n;
        break;
      case Family::D:
        for (int i = 0; i + 1 < n; ++i)
          simpleVectors.push_back(diff(off + i, off + i + 1));
        {
          Vector v(dim, Rat(0));
          v[off + n - 2] = 1;
          v[off + n - 1] = 1;
          simpleVectors.push_back(std::move(v));
        }
        off += n;
        break;
      case Family::G: {
        // node 0 = long, node 1 = short
        Vector lng(dim, Rat(0));
        lng[off + 0] = -2;
        lng[off + 1] = 1;
        lng[off + 2] = 1;
        simpleVectors.push_back(std::move(lng));
        simpleVectors.push_back(diff(off + 0, off + 1));
        off += 3;
        break;
      }
      case Family::F: {
        // nodes 0,1 long; 2,3 short
        simpleVectors.push_back(diff(off + 1, off + 2));
        simpleVectors.push_back(diff(off + 2, off + 3));
        simpleVectors.push_back(basisVec(off + 3));
        Vector v(dim, Rat(0));
        v[off + 0] = Rat(1, 2);
        v[off + 1] = Rat(-1, 2);
        v[off + 2] = Rat(-1, 2);
        v[off + 3] = Rat(-1, 2);
        simpleVectors.push_back(std::move(v));
        off += 4;
        break;
      }
      case Family::E:
        throw Unsupported("standardRoots: E-type realizations are not needed");
    }
  }

  RootSystem rs;
  rs.roots = simpleVectors;
  closeRootSet(rs.roots);
  for (const auto& sv : simpleVectors) {
    int idx = rs.indexOfRoot(sv);
    require(idx >= 0, "standardRoots: lost a simple root");
    rs.simples.push_back(idx);
  }
  finishRootSystem(rs, simpleVectors);
  return rs;
}

/******** Chapter IV -- enumerated reflection groups ************************/

ReflectionGroup::ReflectionGroup(const CoxeterDescriptor& finiteDesc)
{
  d_roots = standardRoots(finiteDesc);
  closeAndIndex(d_roots.simples);
  computeClasses();
}

ReflectionGroup::ReflectionGroup(const RootSystem& ambient,
                                 const std::vector<int>& genRoots)
{
  // subsystem: close the generating roots under mutual reflections
  std::vector<Vector> sub;
  for (int g : genRoots)
    sub.push_back(ambient.roots[g]);
  closeRootSet(sub);

  d_roots.roots = sub;
  // positivity inherited from the ambient system
  d_roots.positive.resize(sub.size());
  for (size_t i = 0; i < sub.size(); ++i) {
    int ai = ambient.indexOfRoot(sub[i]);
    require(ai >= 0, "subsystem: root escapes the ambient system");
    d_roots.positive[i] = ambient.positive[ai];
  }
  d_roots.negOf.resize(sub.size());
  for (size_t i = 0; i < sub.size(); ++i) {
    Vector neg = sub[i];
    for (Rat& x : neg)
      x = -x;
    d_roots.negOf[i] = d_roots.indexOfRoot(neg);
    require(d_roots.negOf[i] >= 0, "subsystem: missing negative root");
  }
  d_roots.norm2.resize(sub.size());
  for (size_t i = 0; i < sub.size(); ++i) {
    Rat nn(0);
    for (const Rat& x : sub[i])
      nn += x * x;
    d_roots.norm2[i] = nn;
  }
  // simple system of the subsystem: positive roots that are not the sum
  // of two positive subsystem roots
  std::vector<int> simples;
  for (size_t i = 0; i < sub.size(); ++i) {
    if (!d_roots.positive[i])
      continue;
    bool decomposable = false;
    for (size_t j = 0; j < sub.size() && !decomposable; ++j) {
      if (!d_roots.positive[j])
        continue;
      for (size_t k = j; k < sub.size() && !decomposable; ++k) {
        if (!d_roots.positive[k])
          continue;
        Vector s(sub[j]);
        for (size_t t = 0; t < s.size(); ++t)
          s[t] += sub[k][t];
        if (s == sub[i])
          decomposable = true;
      }
    }
    if (!decomposable)
      simples.push_back(static_cast<int>(i));
  }
  d_roots.simples = simples;
  closeAndIndex(simples);
  computeClasses();
}

void ReflectionGroup::closeAndIndex(const std::vector<int>& genRootIdx)
{
  int nr = d_roots.count();
  // generator root-permutations
  std::vector<std::vector<int>> genPerm;
  for (int g : genRootIdx) {
    Matrix m = d_roots.reflection(g);
    std::vector<int> perm(nr);
    for (int r = 0; r < nr; ++r) {
      Vector img = matApply(m, d_roots.roots[r]);
      int idx = d_roots.indexOfRoot(img);
      require(idx >= 0, "closeAndIndex: reflection escapes the root set");
      perm[r] = idx;
    }
    genPerm.push_back(std::move(perm));
  }

  std::vector<int> idPerm(nr);
  std::iota(idPerm.begin(), idPerm.end(), 0);
  d_perm.push_back(idPerm);
  d_index[idPerm] = 0;
  for (size_t head = 0; head < d_perm.size(); ++head) {
    for (const auto& gp : genPerm) {
      std::vector<int> q(nr);
      for (int r = 0; r < nr; ++r)
        q[r] = d_perm[head][gp[r]];  // (w g)(r) = w(g(r))
      if (d_index.emplace(q, static_cast<int>(d_perm.size())).second)
        d_perm.push_back(std::move(q));
    }
  }

  int sz = size();
  int ng = static_cast<int>(genPerm.size());
  d_gens.resize(ng);
  d_genLeft.assign(ng, std::vector<int>(sz));
  d_genRight.assign(ng, std::vector<int>(sz));
  for (int k = 0; k < ng; ++k) {
    auto it = d_index.find(genPerm[k]);
    require(it != d_index.end(), "closeAndIndex: generator not indexed");
    d_gens[k] = it->second;
  }
  for (int e = 0; e < sz; ++e) {
    for (int k = 0; k < ng; ++k) {
      std::vector<int> q(nr);
      for (int r = 0; r < nr; ++r)
        q[r] = d_perm[e][genPerm[k][r]];  // e * g_k
      d_genRight[k][e] = d_index.at(q);
      for (int r = 0; r < nr; ++r)
        q[r] = genPerm[k][d_perm[e][r]];  // g_k * e
      d_genLeft[k][e] = d_index.at(q);
    }
  }

  d_invIdx.resize(sz);
  d_length.resize(sz);
  for (int e = 0; e < sz; ++e) {
    std::vector<int> inv(nr);
    for (int r = 0; r < nr; ++r)
      inv[d_perm[e][r]] = r;
    d_invIdx[e] = d_index.at(inv);
    int len = 0;
    for (int r = 0; r < nr; ++r)
      if (d_roots.positive[r] && !d_roots.positive[d_perm[e][r]])
        ++len;
    d_length[e] = len;
  }

  // root orbits under the group
  d_rootOrbit.assign(nr, -1);
  int orbitId = 0;
  for (int r = 0; r < nr; ++r) {
    if (d_rootOrbit[r] != -1)
      continue;
    std::vector<int> stack{r};
    d_rootOrbit[r] = orbitId;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (const auto& gp : genPerm)
        if (d_rootOrbit[gp[v]] == -1) {
          d_rootOrbit[gp[v]] = orbitId;
          stack.push_back(gp[v]);
        }
    }
    ++orbitId;
  }

  // basis of the root span
  d_spanBasis.clear();
  for (int r = 0; r < nr; ++r) {
    bool independent = true;
    try {
      // dependent iff the new vector is in the span of the old ones
      if (!d_spanBasis.empty()) {
        coordsInBasis(d_spanBasis, d_roots.roots[r]);
        independent = false;
      }
    } catch (const InvariantError&) {
      independent = true;
    }
    if (independent)
      d_spanBasis.push_back(d_roots.roots[r]);
  }
}

int ReflectionGroup::mult(int a, int b) const
{
  const auto& pa = d_perm[a];
  const auto& pb = d_perm[b];
  std::vector<int> q(pa.size());
  for (size_t r = 0; r < pa.size(); ++r)
    q[r] = pa[pb[r]];
  auto it = d_index.find(q);
  require(it != d_index.end(), "mult: product escaped the group");
  return it->second;
}

int ReflectionGroup::inverse(int a) const
{
  return d_invIdx[a];
}

int ReflectionGroup::elementByRootAction(const std::vector<int>& perm) const
{
  auto it = d_index.find(perm);
  return it == d_index.end() ? -1 : it->second;
}

int ReflectionGroup::reflectionElement(int rootIdx) const
{
  Matrix m = d_roots.reflection(rootIdx);
  std::vector<int> perm(d_roots.count());
  for (int r = 0; r < d_roots.count(); ++r) {
    int img = d_roots.indexOfRoot(matApply(m, d_roots.roots[r]));
    require(img >= 0, "reflectionElement: image escaped the system");
    perm[r] = img;
  }
  int e = elementByRootAction(perm);
  require(e >= 0, "reflectionElement: reflection not in the group");
  return e;
}

int ReflectionGroup::conjugate(int g, int x) const
{
  return mult(mult(g, x), d_invIdx[g]);
}

int ReflectionGroup::elementOrder(int a) const
{
  int cur = a, k = 1;
  while (cur != 0) {
    cur = mult(cur, a);
    ++k;
  }
  return k;
}

void ReflectionGroup::computeClasses()
{
  int sz = size();
  d_classOf.assign(sz, -1);
  for (int e = 0; e < sz; ++e) {
    if (d_classOf[e] != -1)
      continue;
    int id = static_cast<int>(d_classes.size());
    std::vector<int> cls, stack{e};
    d_classOf[e] = id;
    while (!stack.empty()) {
      int x = stack.back();
      stack.pop_back();
      cls.push_back(x);
      for (size_t k = 0; k < d_gens.size(); ++k) {
        // conjugate by the k-th generator: g x g^{-1} = g x g (involutions)
        int y = d_genLeft[k][d_genRight[k][x]];
        if (d_classOf[y] == -1) {
          d_classOf[y] = id;
          stack.push_back(y);
        }
      }
    }
    std::sort(cls.begin(), cls.end());
    d_classes.push_back(std::move(cls));
  }
}

Poly ReflectionGroup::reflCharPoly(int a) const
{
  // matrix of the element on the span basis (basis vectors are roots,
  // so their images are known root indices -- but only when the basis
  // roots map to roots, which is always true here)
  int r = static_cast<int>(d_spanBasis.size());
  Matrix x(r, Vector(r, Rat(0)));
  for (int j = 0; j < r; ++j) {
    // find the basis vector as a root and look up its image
    int rootIdx = d_roots.indexOfRoot(d_spanBasis[j]);
    require(rootIdx >= 0, "reflCharPoly: basis vector is not a root");
    const Vector& img = d_roots.roots[d_perm[a][rootIdx]];
    Vector c = coordsInBasis(d_spanBasis, img);
    for (int i = 0; i < r; ++i)
      x[i][j] = c[i];
  }
  return charPolyOfMatrix(x);
}

Matrix ReflectionGroup::matrixOf(int a) const
{
  // ambient-space matrix is only defined up to the orthogonal complement;
  // return the action on the span basis instead
  int r = static_cast<int>(d_spanBasis.size());
  Matrix x(r, Vector(r, Rat(0)));
  for (int j = 0; j < r; ++j) {
    int rootIdx = d_roots.indexOfRoot(d_spanBasis[j]);
    require(rootIdx >= 0, "matrixOf: basis vector is not a root");
    Vector c = coordsInBasis(d_spanBasis, d_roots.roots[d_perm[a][rootIdx]]);
    for (int i = 0; i < r; ++i)
      x[i][j] = c[i];
  }
  return x;
}

}  // namespace blockweyl
