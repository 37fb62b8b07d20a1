/*
  This is partitions.hpp — partitions, bipartitions, beta-sets, border strips.

  Small exact combinatorics shared by the character-table and degree engines.
*/

#pragma once

#include <string>
#include <utility>
#include <vector>

#include "blockweyl/numeric.hpp"

namespace blockweyl {

/* weakly decreasing positive parts; the empty vector is the partition of 0 */
using Partition = std::vector<int>;
using Bipartition = std::pair<Partition, Partition>;

bool isPartition(const Partition& p);
int weight(const Partition& p);
/* all partitions of n, in a fixed (reverse-lexicographic) order */
const std::vector<Partition>& partitionsOf(int n);
/* all bipartitions (alpha;beta) with |alpha|+|beta| = n, fixed order */
const std::vector<Bipartition>& bipartitionsOf(int n);

Partition conjugate(const Partition& p);
/* n(lambda) = sum (i-1)*lambda_i  (rows indexed from 1) */
int nInvariant(const Partition& p);
/* multiset of hook lengths */
std::vector<int> hookLengths(const Partition& p);
/* dimension of the S_n irreducible labeled by p (hook length formula) */
Int symGroupDim(const Partition& p);

/* centralizer order of a permutation of cycle type p in S_|p| */
Int centralizerOrderSym(const Partition& p);

/* beta-set {p_i + len - i : i = 1..len}, returned strictly decreasing;
   len must be >= number of parts */
std::vector<int> betaSet(const Partition& p, int len);
Partition partitionFromBetaSet(std::vector<int> beta);

/* all ways to remove a border strip of size l; height = rows spanned - 1 */
struct StripRemoval {
  Partition rest;
  int height;
};
std::vector<StripRemoval> borderStripRemovals(const Partition& p, int l);

std::string partitionStr(const Partition& p);
std::string bipartitionStr(const Bipartition& bp);

}  // namespace blockweyl
