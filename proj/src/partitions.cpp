/*
  This is partitions.cpp — implementation of partition combinatorics.
*/

#include "blockweyl/partitions.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace blockweyl {

bool isPartition(const Partition& p)
{
  for (size_t i = 0; i < p.size(); ++i) {
    if (p[i] <= 0)
      return false;
    if (i > 0 && p[i] > p[i - 1])
      return false;
  }
  return true;
}

int weight(const Partition& p)
{
  int w = 0;
  for (int x : p)
    w += x;
  return w;
}

namespace {

void generatePartitions(int n, int maxPart, Partition& cur,
                        std::vector<Partition>& out)
{
  if (n == 0) {
    out.push_back(cur);
    return;
  }
  for (int k = std::min(n, maxPart); k >= 1; --k) {
    cur.push_back(k);
    generatePartitions(n - k, k, cur, out);
    cur.pop_back();
  }
}

}  // namespace

const std::vector<Partition>& partitionsOf(int n)
{
  static std::map<int, std::vector<Partition>> cache;
  auto it = cache.find(n);
  if (it != cache.end())
    return it->second;
  require(n >= 0, "partitionsOf: negative n");
  std::vector<Partition> out;
  Partition cur;
  generatePartitions(n, n, cur, out);
  return cache.emplace(n, std::move(out)).first->second;
}

const std::vector<Bipartition>& bipartitionsOf(int n)
{
  static std::map<int, std::vector<Bipartition>> cache;
  auto it = cache.find(n);
  if (it != cache.end())
    return it->second;
  std::vector<Bipartition> out;
  for (int k = n; k >= 0; --k)
    for (const auto& a : partitionsOf(k))
      for (const auto& b : partitionsOf(n - k))
        out.emplace_back(a, b);
  return cache.emplace(n, std::move(out)).first->second;
}

Partition conjugate(const Partition& p)
{
  Partition c;
  if (p.empty())
    return c;
  c.resize(p[0], 0);
  for (int part : p)
    for (int j = 0; j < part; ++j)
      ++c[j];
  return c;
}

int nInvariant(const Partition& p)
{
  int s = 0;
  for (size_t i = 0; i < p.size(); ++i)
    s += static_cast<int>(i) * p[i];
  return s;
}

std::vector<int> hookLengths(const Partition& p)
{
  Partition c = conjugate(p);
  std::vector<int> hooks;
  for (size_t i = 0; i < p.size(); ++i)
    for (int j = 0; j < p[i]; ++j)
      hooks.push_back(p[i] - (j + 1) + c[j] - static_cast<int>(i));
  return hooks;
}

Int symGroupDim(const Partition& p)
{
  int n = weight(p);
  Int num(1);
  for (int k = 2; k <= n; ++k)
    num *= k;
  for (int h : hookLengths(p))
    num /= h;
  return num;
}

Int centralizerOrderSym(const Partition& p)
{
  // z = prod over cycle sizes k of k^{m_k} * m_k!
  std::map<int, int> mult;
  for (int part : p)
    ++mult[part];
  Int z(1);
  for (auto [k, m] : mult) {
    for (int i = 0; i < m; ++i)
      z *= k;
    for (int i = 2; i <= m; ++i)
      z *= i;
  }
  return z;
}

std::vector<int> betaSet(const Partition& p, int len)
{
  require(len >= static_cast<int>(p.size()), "betaSet: length too small");
  std::vector<int> beta(len);
  for (int i = 0; i < len; ++i) {
    int part = (i < static_cast<int>(p.size())) ? p[i] : 0;
    beta[i] = part + len - (i + 1);
  }
  return beta;  // strictly decreasing
}

Partition partitionFromBetaSet(std::vector<int> beta)
{
  std::sort(beta.begin(), beta.end(), std::greater<int>());
  int len = static_cast<int>(beta.size());
  Partition p;
  for (int i = 0; i < len; ++i) {
    int part = beta[i] - (len - (i + 1));
    require(part >= 0, "partitionFromBetaSet: invalid beta-set");
    if (part > 0)
      p.push_back(part);
  }
  require(isPartition(p), "partitionFromBetaSet: not a partition");
  return p;
}

std::vector<StripRemoval> borderStripRemovals(const Partition& p, int l)
{
  require(l >= 1, "borderStripRemovals: strip size must be positive");
  std::vector<StripRemoval> out;
  int len = static_cast<int>(p.size()) + l;  // safe padding
  std::vector<int> beta = betaSet(p, len);
  // a strip of size l = move one beta number down by l into a free slot
  for (size_t i = 0; i < beta.size(); ++i) {
    int target = beta[i] - l;
    if (target < 0)
      continue;
    bool occupied = false;
    int jumped = 0;
    for (size_t j = 0; j < beta.size(); ++j) {
      if (j == i)
        continue;
      if (beta[j] == target)
        occupied = true;
      if (beta[j] > target && beta[j] < beta[i])
        ++jumped;
    }
    if (occupied)
      continue;
    std::vector<int> nb = beta;
    nb[i] = target;
    out.push_back({partitionFromBetaSet(std::move(nb)), jumped});
  }
  return out;
}

std::string partitionStr(const Partition& p)
{
  if (p.empty())
    return "-";
  std::ostringstream os;
  for (size_t i = 0; i < p.size(); ++i) {
    if (i)
      os << ".";
    os << p[i];
  }
  return os.str();
}

std::string bipartitionStr(const Bipartition& bp)
{
  return "(" + partitionStr(bp.first) + ";" + partitionStr(bp.second) + ")";
}

}  // namespace blockweyl
