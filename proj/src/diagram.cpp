/*
  This is diagram.cpp — Coxeter diagram structure and symmetry.
*/

#include "blockweyl/diagram.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

namespace blockweyl {

/******** Chapter I -- type symbols *****************************************/

bool TypeSymbol::sameDiagram(const TypeSymbol& o) const
{
  auto normal = [](TypeSymbol t) {
    // identify Coxeter-isomorphic names: C=B; rank-1 classical = A1; D3=A3
    if (t.family == Family::C)
      t.family = Family::B;
    if (t.rank == 1 && (t.family == Family::B || t.family == Family::D))
      t.family = Family::A;
    if (t.family == Family::D && t.rank == 3) {
      t.family = Family::A;
      t.rank = 3;
    }
    return t;
  };
  TypeSymbol a = normal(*this), b = normal(o);
  return a.family == b.family && a.rank == b.rank;
}

std::string TypeSymbol::str() const
{
  return std::string(1, static_cast<char>(family)) + std::to_string(rank);
}

Int TypeSymbol::groupOrder() const
{
  auto factorial = [](int n) {
    Int f(1);
    for (int k = 2; k <= n; ++k)
      f *= k;
    return f;
  };
  switch (family) {
    case Family::A:
      return factorial(rank + 1);
    case Family::B:
    case Family::C: {
      Int f = factorial(rank);
      for (int i = 0; i < rank; ++i)
        f *= 2;
      return f;
    }
    case Family::D: {
      Int f = factorial(rank);
      for (int i = 0; i < rank - 1; ++i)
        f *= 2;
      return f;
    }
    case Family::G:
      require(rank == 2, "G-type rank must be 2");
      return 12;
    case Family::F:
      require(rank == 4, "F-type rank must be 4");
      return 1152;
    case Family::E:
      if (rank == 6)
        return 51840;
      if (rank == 7)
        return 2903040;
      if (rank == 8)
        return Int(696729600);
      throw Unsupported("E-type rank must be 6, 7 or 8");
  }
  throw InvariantError("unreachable type symbol");
}

int TypeSymbol::positiveRoots() const
{
  switch (family) {
    case Family::A:
      return rank * (rank + 1) / 2;
    case Family::B:
    case Family::C:
      return rank * rank;
    case Family::D:
      return rank * (rank - 1);
    case Family::G:
      return 6;
    case Family::F:
      return 24;
    case Family::E:
      if (rank == 6)
        return 36;
      if (rank == 7)
        return 63;
      if (rank == 8)
        return 120;
      throw Unsupported("E-type rank must be 6, 7 or 8");
  }
  throw InvariantError("unreachable type symbol");
}

/******** Chapter II -- diagrams ********************************************/

std::vector<std::vector<int>> CoxeterDiagram::components(
    const std::vector<int>& nodes) const
{
  std::vector<std::vector<int>> comps;
  std::vector<bool> seen(size(), false);
  std::vector<bool> inSet(size(), false);
  for (int v : nodes)
    inSet[v] = true;
  for (int start : nodes) {
    if (seen[start])
      continue;
    std::vector<int> comp, stack{start};
    seen[start] = true;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      comp.push_back(v);
      for (int u : nodes)
        if (!seen[u] && inSet[u] && adjacent(v, u)) {
          seen[u] = true;
          stack.push_back(u);
        }
    }
    std::sort(comp.begin(), comp.end());
    comps.push_back(std::move(comp));
  }
  return comps;
}

namespace {

/* walk a chain away from `from` starting at `start`, within `nodes` */
std::vector<int> walkChain(const CoxeterDiagram& d, const std::vector<int>& nodes,
                           int start, int from)
{
  std::vector<int> path{start};
  int prev = from, cur = start;
  while (true) {
    int next = -1;
    for (int u : nodes)
      if (u != prev && d.adjacent(cur, u)) {
        require(next == -1, "walkChain: branch inside chain");
        next = u;
      }
    if (next == -1)
      break;
    path.push_back(next);
    prev = cur;
    cur = next;
  }
  return path;
}

}  // namespace

CoxeterDiagram::Recognized CoxeterDiagram::recognizeComponent(
    const std::vector<int>& nodes) const
{
  require(!nodes.empty(), "recognizeComponent: empty node set");
  int n = static_cast<int>(nodes.size());
  if (n == 1)
    return {{Family::A, 1}, nodes};

  // collect edges and degrees
  std::vector<int> deg(nodes.size(), 0);
  int bond4 = 0, bond6 = 0, bondBig = 0;
  for (size_t i = 0; i < nodes.size(); ++i)
    for (size_t j = i + 1; j < nodes.size(); ++j) {
      int b = bond(nodes[i], nodes[j]);
      if (b == 2)
        continue;
      ++deg[i];
      ++deg[j];
      if (b == 4)
        ++bond4;
      else if (b == 6)
        ++bond6;
      else if (b != 3)
        ++bondBig;
    }
  require(bondBig == 0, "recognizeComponent: bond order outside {2,3,4,6}");

  int maxDeg = *std::max_element(deg.begin(), deg.end());
  auto nodeAt = [&](size_t i) { return nodes[i]; };

  if (bond6 > 0) {
    require(n == 2 && bond6 == 1, "recognizeComponent: 6-bond shape");
    return {{Family::G, 2}, nodes};
  }

  if (bond4 > 0) {
    require(bond4 == 1 && maxDeg <= 2, "recognizeComponent: 4-bond shape");
    // find the 4-bond endpoints
    int u = -1, v = -1;
    for (size_t i = 0; i < nodes.size(); ++i)
      for (size_t j = i + 1; j < nodes.size(); ++j)
        if (bond(nodes[i], nodes[j]) == 4) {
          u = nodeAt(i);
          v = nodeAt(j);
        }
    auto degOf = [&](int node) {
      for (size_t i = 0; i < nodes.size(); ++i)
        if (nodes[i] == node)
          return deg[i];
      throw InvariantError("degOf: node not in set");
    };
    if (degOf(u) == 2 && degOf(v) == 2) {
      // interior 4-bond: must be F4
      require(n == 4, "recognizeComponent: interior 4-bond but not F4");
      std::vector<int> ends;
      for (size_t i = 0; i < nodes.size(); ++i)
        if (deg[i] == 1)
          ends.push_back(nodeAt(i));
      require(ends.size() == 2, "recognizeComponent: F4 shape");
      int start = std::min(ends[0], ends[1]);
      auto path = walkChain(*this, nodes, start, -1);
      require(static_cast<int>(path.size()) == n, "recognizeComponent: F4 path");
      return {{Family::F, 4}, path};
    }
    // B-type: canonical order = chain ending at the degree-1 endpoint of
    // the 4-bond (for rank 2, at the larger node index)
    int special;
    if (degOf(u) == 1 && degOf(v) == 1)
      special = std::max(u, v);
    else
      special = (degOf(u) == 1) ? u : v;
    auto path = walkChain(*this, nodes, special, -1);
    require(static_cast<int>(path.size()) == n, "recognizeComponent: B path");
    std::reverse(path.begin(), path.end());
    return {{Family::B, n}, path};
  }

  // simply laced
  require(maxDeg <= 3, "recognizeComponent: node of degree > 3");
  int branchCount = static_cast<int>(std::count(deg.begin(), deg.end(), 3));
  require(branchCount <= 1, "recognizeComponent: more than one branch node");

  if (branchCount == 0) {
    // a chain: A_n; canonical order from the smaller end
    std::vector<int> ends;
    for (size_t i = 0; i < nodes.size(); ++i)
      if (deg[i] <= 1)
        ends.push_back(nodeAt(i));
    require(ends.size() == 2, "recognizeComponent: chain shape");
    auto path = walkChain(*this, nodes, std::min(ends[0], ends[1]), -1);
    require(static_cast<int>(path.size()) == n, "recognizeComponent: A path");
    return {{Family::A, n}, path};
  }

  // branch node present
  int branch = -1;
  for (size_t i = 0; i < nodes.size(); ++i)
    if (deg[i] == 3)
      branch = nodeAt(i);
  std::vector<std::vector<int>> arms;  // paths from branch outward (branch excluded)
  for (int u : nodes)
    if (adjacent(branch, u))
      arms.push_back(walkChain(*this, nodes, u, branch));
  require(arms.size() == 3, "recognizeComponent: branch arity");
  std::sort(arms.begin(), arms.end(), [](const auto& x, const auto& y) {
    if (x.size() != y.size())
      return x.size() < y.size();
    return x.front() < y.front();
  });
  size_t a = arms[0].size(), b = arms[1].size(), c = arms[2].size();
  require(a + b + c + 1 == static_cast<size_t>(n), "recognizeComponent: arm sizes");

  if (a == 1 && b == 1) {
    // D_n: long arm reversed, then branch, then the two tines ascending
    std::vector<int> order(arms[2].rbegin(), arms[2].rend());
    order.push_back(branch);
    int t1 = arms[0][0], t2 = arms[1][0];
    order.push_back(std::min(t1, t2));
    order.push_back(std::max(t1, t2));
    return {{Family::D, n}, order};
  }
  if (a == 1 && b == 2 && (c == 2 || c == 3 || c == 4)) {
    // E6/E7/E8: long arm reversed, branch, middle arm, short tip last
    std::vector<int> order(arms[2].rbegin(), arms[2].rend());
    order.push_back(branch);
    order.insert(order.end(), arms[1].begin(), arms[1].end());
    order.push_back(arms[0][0]);
    return {{Family::E, n}, order};
  }
  throw InvariantError("recognizeComponent: not a finite Weyl diagram");
}

std::vector<TypeSymbol> CoxeterDiagram::subdiagramTypes(
    const std::vector<int>& nodes) const
{
  std::vector<TypeSymbol> out;
  for (const auto& comp : components(nodes))
    out.push_back(recognizeComponent(comp).type);
  return out;
}

int CoxeterDiagram::positiveRootCount(const std::vector<int>& nodes) const
{
  int total = 0;
  for (const auto& comp : components(nodes))
    total += recognizeComponent(comp).type.positiveRoots();
  return total;
}

/******** Chapter III -- descriptors ****************************************/

CoxeterDescriptor CoxeterDescriptor::parse(const std::string& text)
{
  CoxeterDescriptor d;
  std::string s = text;
  if (!s.empty() && s[0] == '~') {
    d.affine = true;
    s = s.substr(1);
  }
  if (s.empty())
    throw ParseError("empty descriptor");
  // split on 'x'
  std::vector<std::string> parts;
  size_t pos = 0;
  while (pos != std::string::npos) {
    size_t next = s.find('x', pos);
    parts.push_back(s.substr(pos, next == std::string::npos ? next : next - pos));
    pos = (next == std::string::npos) ? next : next + 1;
  }
  for (const auto& p : parts) {
    if (p.size() < 2 || !std::isupper(static_cast<unsigned char>(p[0])))
      throw ParseError("bad factor '" + p + "' in descriptor '" + text + "'");
    char fam = p[0];
    if (std::string("ABCDEFG").find(fam) == std::string::npos)
      throw ParseError("unknown family in '" + p + "'");
    int rank = 0;
    for (size_t i = 1; i < p.size(); ++i) {
      if (!std::isdigit(static_cast<unsigned char>(p[i])))
        throw ParseError("bad rank in '" + p + "'");
      rank = rank * 10 + (p[i] - '0');
    }
    if (rank <= 0)
      throw ParseError("rank must be positive in '" + p + "'");
    TypeSymbol t{static_cast<Family>(fam), rank};
    if (t.family == Family::E && rank != 6 && rank != 7 && rank != 8)
      throw ParseError("E-type rank must be 6, 7 or 8");
    if (t.family == Family::F && rank != 4)
      throw ParseError("F-type rank must be 4");
    if (t.family == Family::G && rank != 2)
      throw ParseError("G-type rank must be 2");
    if (t.family == Family::D && rank < 3)
      throw ParseError("D-type rank must be at least 3");
    d.factors.push_back(t);
  }
  if (d.affine) {
    if (d.factors.size() != 1)
      throw ParseError("affine descriptors must be irreducible: '" + text + "'");
    TypeSymbol t = d.factors[0];
    if (t.family == Family::B && t.rank < 3)
      throw ParseError("affine B requires rank >= 3");
    if (t.family == Family::C && t.rank < 2)
      throw ParseError("affine C requires rank >= 2 (use ~A1 for rank 1)");
    if (t.family == Family::D && t.rank < 4)
      throw ParseError("affine D requires rank >= 4");
  }
  return d;
}

std::string CoxeterDescriptor::str() const
{
  std::string s = affine ? "~" : "";
  for (size_t i = 0; i < factors.size(); ++i) {
    if (i)
      s += "x";
    s += factors[i].str();
  }
  return s;
}

int CoxeterDescriptor::rank() const
{
  int r = 0;
  for (const auto& f : factors)
    r += f.rank;
  return r;
}

int CoxeterDescriptor::nodeCount() const
{
  return rank() + (affine ? 1 : 0);
}

namespace {

void setBond(CoxeterDiagram& d, int i, int j, int m)
{
  d.m[i][j] = m;
  d.m[j][i] = m;
}

/* finite diagram of one factor placed at node offset */
void placeFiniteFactor(CoxeterDiagram& d, const TypeSymbol& t, int off)
{
  int n = t.rank;
  auto chain = [&](int from, int to) {
    for (int i = from; i < to; ++i)
      setBond(d, off + i, off + i + 1, 3);
  };
  switch (t.family) {
    case Family::A:
      chain(0, n - 1);
      break;
    case Family::B:
    case Family::C:
      chain(0, n - 2);
      if (n >= 2)
        setBond(d, off + n - 2, off + n - 1, 4);
      break;
    case Family::D:
      if (n >= 3) {
        chain(0, n - 3);
        setBond(d, off + n - 3, off + n - 2, 3);
        setBond(d, off + n - 3, off + n - 1, 3);
      } else if (n == 2) {
        // two disconnected nodes (A1 x A1)
      }
      break;
    case Family::G:
      setBond(d, off + 0, off + 1, 6);
      break;
    case Family::F:
      setBond(d, off + 0, off + 1, 3);
      setBond(d, off + 1, off + 2, 4);
      setBond(d, off + 2, off + 3, 3);
      break;
    case Family::E:
      // chain 0..n-2 with node n-1 attached to node 2
      chain(0, n - 2);
      setBond(d, off + 2, off + n - 1, 3);
      break;
  }
}

}  // namespace

CoxeterDiagram CoxeterDescriptor::diagram() const
{
  CoxeterDiagram d;
  int n = nodeCount();
  d.m.assign(n, std::vector<int>(n, 2));
  for (int i = 0; i < n; ++i)
    d.m[i][i] = 1;

  if (!affine) {
    int off = 0;
    for (const auto& f : factors) {
      placeFiniteFactor(d, f, off);
      off += f.rank;
    }
    return d;
  }

  TypeSymbol t = factors[0];
  int r = t.rank;
  switch (t.family) {
    case Family::A:
      if (r == 1) {
        setBond(d, 0, 1, infiniteBond);
      } else {
        for (int i = 0; i + 1 <= r; ++i)
          setBond(d, i, i + 1, 3);
        setBond(d, 0, r, 3);  // close the cycle
      }
      break;
    case Family::B:
      // finite B_r on nodes 1..r (4-bond between r-1, r); affine node 0 on 2
      for (int i = 1; i <= r - 2; ++i)
        setBond(d, i, i + 1, 3);
      setBond(d, r - 1, r, 4);
      setBond(d, 0, 2, 3);
      break;
    case Family::C:
      for (int i = 1; i + 1 <= r - 1; ++i)
        setBond(d, i, i + 1, 3);
      setBond(d, 0, 1, 4);
      setBond(d, r - 1, r, 4);
      break;
    case Family::D:
      // finite D_r on 1..r (fork {r-1, r} on r-2); affine node 0 on 2
      for (int i = 1; i <= r - 3; ++i)
        setBond(d, i, i + 1, 3);
      setBond(d, r - 2, r - 1, 3);
      setBond(d, r - 2, r, 3);
      setBond(d, 0, 2, 3);
      break;
    case Family::G:
      setBond(d, 0, 1, 3);
      setBond(d, 1, 2, 6);
      break;
    case Family::F:
      setBond(d, 0, 1, 3);
      setBond(d, 1, 2, 3);
      setBond(d, 2, 3, 4);
      setBond(d, 3, 4, 3);
      break;
    case Family::E:
      if (r == 6) {
        // finite E6 on 1..6 (chain 1..5, branch 6 on 3); affine 0 on 6
        for (int i = 1; i <= 4; ++i)
          setBond(d, i, i + 1, 3);
        setBond(d, 3, 6, 3);
        setBond(d, 0, 6, 3);
      } else if (r == 7) {
        // chain 0..6 with node 7 on 3
        for (int i = 0; i <= 5; ++i)
          setBond(d, i, i + 1, 3);
        setBond(d, 3, 7, 3);
      } else {
        // finite E8 on 1..8 (chain 1..7, branch 8 on 3); affine 0 on 7
        for (int i = 1; i <= 6; ++i)
          setBond(d, i, i + 1, 3);
        setBond(d, 3, 8, 3);
        setBond(d, 0, 7, 3);
      }
      break;
  }
  return d;
}

std::vector<int> CoxeterDescriptor::finiteNodes() const
{
  require(affine, "finiteNodes: descriptor is not affine");
  std::vector<int> v(nodeCount() - 1);
  std::iota(v.begin(), v.end(), 1);
  return v;
}

/******** Chapter IV -- diagram automorphisms *******************************/

bool DiagramAutomorphism::isIdentity() const
{
  for (size_t i = 0; i < perm.size(); ++i)
    if (perm[i] != static_cast<int>(i))
      return false;
  return true;
}

int DiagramAutomorphism::order() const
{
  DiagramAutomorphism cur = *this;
  int k = 1;
  while (!cur.isIdentity()) {
    cur = cur.after(*this);
    ++k;
    require(k <= 1000, "DiagramAutomorphism::order runaway");
  }
  return k;
}

int DiagramAutomorphism::orbitCount() const
{
  return static_cast<int>(orbits().size());
}

std::vector<std::vector<int>> DiagramAutomorphism::orbits() const
{
  std::vector<std::vector<int>> out;
  std::vector<bool> seen(perm.size(), false);
  for (size_t i = 0; i < perm.size(); ++i) {
    if (seen[i])
      continue;
    std::vector<int> orb;
    int cur = static_cast<int>(i);
    while (!seen[cur]) {
      seen[cur] = true;
      orb.push_back(cur);
      cur = perm[cur];
    }
    std::sort(orb.begin(), orb.end());
    out.push_back(std::move(orb));
  }
  return out;
}

DiagramAutomorphism DiagramAutomorphism::after(const DiagramAutomorphism& first) const
{
  require(perm.size() == first.perm.size(), "automorphism size mismatch");
  DiagramAutomorphism r;
  r.perm.resize(perm.size());
  for (size_t i = 0; i < perm.size(); ++i)
    r.perm[i] = perm[first.perm[i]];
  return r;
}

DiagramAutomorphism DiagramAutomorphism::power(int k) const
{
  int n = static_cast<int>(perm.size());
  DiagramAutomorphism r = identity(n);
  int e = k % order();
  if (e < 0)
    e += order();
  for (int i = 0; i < e; ++i)
    r = after(r);
  return r;
}

DiagramAutomorphism DiagramAutomorphism::inverse() const
{
  DiagramAutomorphism r;
  r.perm.resize(perm.size());
  for (size_t i = 0; i < perm.size(); ++i)
    r.perm[perm[i]] = static_cast<int>(i);
  return r;
}

DiagramAutomorphism DiagramAutomorphism::identity(int n)
{
  DiagramAutomorphism r;
  r.perm.resize(n);
  std::iota(r.perm.begin(), r.perm.end(), 0);
  return r;
}

namespace {

bool preservesBonds(const CoxeterDiagram& d, const std::vector<int>& perm)
{
  int n = d.size();
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (d.bond(perm[i], perm[j]) != d.bond(i, j))
        return false;
  return true;
}

void autoSearch(const CoxeterDiagram& d, std::vector<int>& perm,
                std::vector<bool>& used, int depth,
                std::vector<DiagramAutomorphism>& out)
{
  int n = d.size();
  if (depth == n) {
    if (preservesBonds(d, perm))
      out.push_back({perm});
    return;
  }
  for (int img = 0; img < n; ++img) {
    if (used[img])
      continue;
    // partial consistency check against already assigned nodes
    bool ok = true;
    for (int j = 0; j < depth && ok; ++j)
      if (d.bond(depth, j) != d.bond(img, perm[j]))
        ok = false;
    if (!ok)
      continue;
    perm[depth] = img;
    used[img] = true;
    autoSearch(d, perm, used, depth + 1, out);
    used[img] = false;
  }
}

}  // namespace

std::vector<DiagramAutomorphism> diagramAutomorphisms(const CoxeterDiagram& d)
{
  std::vector<DiagramAutomorphism> out;
  std::vector<int> perm(d.size(), -1);
  std::vector<bool> used(d.size(), false);
  autoSearch(d, perm, used, 0, out);
  // identity first, then a fixed order
  std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) {
    return x.perm < y.perm;
  });
  return out;
}

DiagramAutomorphism opAutomorphism(const CoxeterDescriptor& finiteDesc)
{
  require(!finiteDesc.affine, "opAutomorphism: finite descriptors only");
  DiagramAutomorphism a = DiagramAutomorphism::identity(finiteDesc.nodeCount());
  int off = 0;
  for (const auto& f : finiteDesc.factors) {
    int n = f.rank;
    switch (f.family) {
      case Family::A:
        for (int i = 0; i < n; ++i)
          a.perm[off + i] = off + n - 1 - i;
        break;
      case Family::D:
        if (n % 2 == 1) {  // swap the two fork nodes
          a.perm[off + n - 2] = off + n - 1;
          a.perm[off + n - 1] = off + n - 2;
        }
        break;
      case Family::E:
        if (n == 6) {  // flip the length-2 arms; branch data fixed
          a.perm[off + 0] = off + 4;
          a.perm[off + 4] = off + 0;
          a.perm[off + 1] = off + 3;
          a.perm[off + 3] = off + 1;
        }
        break;
      default:
        break;  // B/C, G2, F4, E7, E8, D_even: identity
    }
    off += n;
  }
  return a;
}

/******** Chapter V -- Omega data of affine diagrams ************************/

namespace {

DiagramAutomorphism permOf(int n, std::vector<std::pair<int, int>> moves)
{
  DiagramAutomorphism a = DiagramAutomorphism::identity(n);
  for (auto [from, to] : moves)
    a.perm[from] = to;
  return a;
}

}  // namespace

OmegaGroup omegaGroup(const CoxeterDescriptor& desc)
{
  require(desc.affine, "omegaGroup: affine descriptors only");
  TypeSymbol t = desc.factors[0];
  int r = t.rank;
  int n = desc.nodeCount();
  OmegaGroup og;
  og.desc = desc;

  switch (t.family) {
    case Family::A: {
      // rotations of the cycle (for rank 1: the swap of the two nodes)
      for (int k = 0; k < n; ++k) {
        DiagramAutomorphism a = DiagramAutomorphism::identity(n);
        for (int i = 0; i < n; ++i)
          a.perm[i] = (i + k) % n;
        og.elements.push_back(a);
      }
      if (r == 1)
        og.sExcl = {0, 1};
      og.sStar.resize(n);
      std::iota(og.sStar.begin(), og.sStar.end(), 0);
      break;
    }
    case Family::B: {
      og.elements.push_back(DiagramAutomorphism::identity(n));
      og.elements.push_back(permOf(n, {{0, 1}, {1, 0}}));  // tine swap
      og.sExcl = (r == 3) ? std::vector<int>{2} : std::vector<int>{2, r - 1};
      og.sStar = {0, 1};
      break;
    }
    case Family::C: {
      og.elements.push_back(DiagramAutomorphism::identity(n));
      DiagramAutomorphism flip = DiagramAutomorphism::identity(n);
      for (int i = 0; i <= r; ++i)
        flip.perm[i] = r - i;
      og.elements.push_back(flip);
      og.sExcl = {0, r};
      og.sStar = {0, r};
      break;
    }
    case Family::D: {
      // v swaps within each fork; f is the end-to-end flip
      DiagramAutomorphism v = permOf(n, {{0, 1}, {1, 0}, {r - 1, r}, {r, r - 1}});
      DiagramAutomorphism f = DiagramAutomorphism::identity(n);
      f.perm[0] = r;
      f.perm[r] = 0;
      f.perm[1] = r - 1;
      f.perm[r - 1] = 1;
      for (int k = 2; k <= r - 2; ++k)
        f.perm[k] = r - k;
      if (r % 2 == 0) {
        og.elements = {DiagramAutomorphism::identity(n), v, f, f.after(v)};
      } else {
        // cyclic of order 4: rho with rho^2 = v
        DiagramAutomorphism rho = DiagramAutomorphism::identity(n);
        rho.perm[0] = r;
        rho.perm[r] = 1;
        rho.perm[1] = r - 1;
        rho.perm[r - 1] = 0;
        for (int k = 2; k <= r - 2; ++k)
          rho.perm[k] = r - k;
        og.elements = {DiagramAutomorphism::identity(n), rho, rho.power(2),
                       rho.power(3)};
        require(rho.power(2) == v, "omegaGroup: rho^2 != v in affine D");
      }
      og.sExcl = (r == 4) ? std::vector<int>{2} : std::vector<int>{2, r - 2};
      og.sStar = {0, 1, r - 1, r};
      break;
    }
    case Family::E: {
      if (r == 6) {
        // arms from the branch node 3: (2,1), (4,5), (6,0); rotate them
        DiagramAutomorphism rho = DiagramAutomorphism::identity(n);
        rho.perm[2] = 4;
        rho.perm[1] = 5;
        rho.perm[4] = 6;
        rho.perm[5] = 0;
        rho.perm[6] = 2;
        rho.perm[0] = 1;
        og.elements = {DiagramAutomorphism::identity(n), rho, rho.power(2)};
        og.sExcl = {3};
        og.sStar = {0, 1, 5};
      } else if (r == 7) {
        DiagramAutomorphism flip = DiagramAutomorphism::identity(n);
        for (int i = 0; i <= 6; ++i)
          flip.perm[i] = 6 - i;
        og.elements = {DiagramAutomorphism::identity(n), flip};
        og.sExcl = {3};
        og.sStar = {0, 6};
      } else {
        og.elements = {DiagramAutomorphism::identity(n)};
        og.sExcl = {3};
        og.sStar = {0};
      }
      break;
    }
    case Family::F:
      og.elements = {DiagramAutomorphism::identity(n)};
      og.sStar = {0};
      break;
    case Family::G:
      og.elements = {DiagramAutomorphism::identity(n)};
      og.sStar = {0};
      break;
  }

  // classify prime / double-prime: prime = pointwise stabilizer of S^!
  CoxeterDiagram dia = desc.diagram();
  for (const auto& a : og.elements) {
    require(preservesBonds(dia, a.perm), "omegaGroup: non-automorphism");
    bool p = true;
    for (int s : og.sExcl)
      if (a.perm[s] != s)
        p = false;
    og.prime.push_back(p);
  }

  // simple transitivity of Omega on S_*
  require(static_cast<int>(og.elements.size()) == static_cast<int>(og.sStar.size()),
          "omegaGroup: |Omega| != |S_*|");
  for (int s : og.sStar) {
    std::vector<int> images;
    for (const auto& a : og.elements)
      images.push_back(a.perm[s]);
    std::sort(images.begin(), images.end());
    require(images == og.sStar, "omegaGroup: Omega not simply transitive on S_*");
  }
  return og;
}

std::vector<int> OmegaGroup::primeMembers() const
{
  std::vector<int> out;
  for (size_t i = 0; i < elements.size(); ++i)
    if (prime[i])
      out.push_back(static_cast<int>(i));
  return out;
}

std::vector<int> OmegaGroup::doublePrimeMembers() const
{
  std::vector<int> out;
  for (size_t i = 0; i < elements.size(); ++i)
    if (!prime[i])
      out.push_back(static_cast<int>(i));
  return out;
}

int OmegaGroup::indexOf(const DiagramAutomorphism& a) const
{
  for (size_t i = 0; i < elements.size(); ++i)
    if (elements[i] == a)
      return static_cast<int>(i);
  throw InvariantError("OmegaGroup::indexOf: not an element");
}

/******** Chapter VI -- weight functions ************************************/

bool weightFunctionValid(const CoxeterDiagram& d, const WeightFunction& w)
{
  if (static_cast<int>(w.size()) != d.size())
    return false;
  for (int x : w)
    if (x <= 0)
      return false;
  for (int i = 0; i < d.size(); ++i)
    for (int j = i + 1; j < d.size(); ++j) {
      int b = d.bond(i, j);
      if (b != 2 && b != infiniteBond && b % 2 == 1 && w[i] != w[j])
        return false;
    }
  return true;
}

int weightedLongestLength(const CoxeterDiagram& d, const std::vector<int>& nodes,
                          const WeightFunction& w)
{
  require(static_cast<int>(w.size()) == d.size(), "weightedLongestLength: weights");
  int total = 0;
  for (const auto& comp : d.components(nodes)) {
    auto rec = d.recognizeComponent(comp);
    // node classes within the component: odd bonds force conjugacy
    // (single class for A/D/E; chain class + end node for B; pairs for F4/G2)
    int k = rec.type.rank;
    switch (rec.type.family) {
      case Family::A:
        total += rec.type.positiveRoots() * w[rec.order[0]];
        break;
      case Family::D:
      case Family::E:
        total += rec.type.positiveRoots() * w[rec.order[0]];
        break;
      case Family::B:
      case Family::C:
        // canonical order puts the 4-bond end last
        total += k * (k - 1) * w[rec.order[0]] + k * w[rec.order[k - 1]];
        break;
      case Family::F:
        total += 12 * w[rec.order[0]] + 12 * w[rec.order[3]];
        break;
      case Family::G:
        total += 3 * w[rec.order[0]] + 3 * w[rec.order[1]];
        break;
    }
  }
  return total;
}

}  // namespace blockweyl
