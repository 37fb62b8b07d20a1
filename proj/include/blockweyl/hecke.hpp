/*
  This is hecke.hpp — weighted generic degrees and their integer invariants.

  A weight function on a Weyl group W assigns a positive integer to each
  node of its diagram, constant across any bond of odd order.  Every
  irreducible representation E of W then carries a generic degree: a
  rational function D_E of one indeterminate v.  Writing D_E = gamma*v^(2a)
  + higher order terms with gamma != 0 defines the a-invariant a(E) >= 0,
  the basic numerical shadow of E used throughout the block and
  weighted-group layers.

  The module exposes three independent sources for this data and keeps them
  in cross-checkable form:

    - closed degree tables at small rank (chapter I), each slot carrying
      both the exact degree and its closed-form a-invariant;
    - a hook-product engine for the hyperoctahedral series at arbitrary
      rank and weights (chapter II), which also covers the symmetric and
      even-signed families by specialization;
    - per-type dispatch for a-invariants, equal-parameter degrees, the
      z-invariant, special representations and the distinguished special
      representation (chapter III), with an optional external data file
      for the one weighted case that has no closed engine (chapter IV).
*/

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "blockweyl/chartable.hpp"
#include "blockweyl/diagram.hpp"
#include "blockweyl/partitions.hpp"
#include "blockweyl/ratfun.hpp"

namespace blockweyl {

/******** Chapter I -- closed degree tables at small rank *******************/

/* where a degree came from, for reporting */
enum class DegreeOrigin : char { table = 't', formula = 'f', product = 'p' };

/* one labeled slot of a degree table */
struct DegreeSlot {
  std::string label;  // irrep label in the matching CharTable
  Int dim;
  RatFun degree;      // exact rational function of v
  Int aValue;         // closed-form a-invariant of the slot
  DegreeOrigin origin = DegreeOrigin::table;
};

/* Closed tables for the groups of rank at most three that anchor the whole
   degree layer.  Weights: the chain families take weight a on every node
   of the simply-laced chain and weight b on the node carrying the bond of
   order four; the dihedral group of order twelve takes weight a on the
   long-root node and weight b on the short-root node.  Slots are listed in
   a fixed order (see the .cpp chapter banner); labels match
   CharTable::forType of the corresponding type.  All weights must be
   positive.  Each slot satisfies degree = gamma*v^(2*aValue) + ..., also
   at degenerate weight pairs where factors of the generic expressions
   cancel. */
std::vector<DegreeSlot> degreeTableA1(int a);
std::vector<DegreeSlot> degreeTableA2(int a);
std::vector<DegreeSlot> degreeTableB2(int a, int b);
std::vector<DegreeSlot> degreeTableB3(int a, int b);  // node weights (a,a,b)
std::vector<DegreeSlot> degreeTableG2(int a, int b);  // a = long, b = short

/******** Chapter II -- the hyperoctahedral degree engine *******************/

/* Poincare polynomial of the rank-n hyperoctahedral group with chain
   weight a and end-node weight b, as a polynomial in v:
   prod_{i=1..n} (1 + q + ... + q^(i-1)) * (y*q^(i-1) + 1) at q = v^(2a),
   y = v^(2b).  Requires n >= 1, a >= 1, b >= 0. */
Poly poincareHyp(int n, int a, int b);

/* Generic degree of the irreducible (alpha;beta) of the hyperoctahedral
   group of rank |alpha| + |beta|, with chain weight a >= 1 and end-node
   weight b >= 0.  The value b = 0 produces the specialization attached to
   the even-signed subgroup (whose split pairs share this degree halved). */
RatFun genericDegreeHyp(const Bipartition& bp, int a, int b);

/* a-invariant of (alpha;beta) at chain weight a and end-node weight b:
   half the v-valuation of genericDegreeHyp, computed hook by hook without
   materializing the fraction.  Accepts any integers a >= 1, b >= 0. */
Int aInvariantHyp(const Bipartition& bp, int a, int b);

/******** Chapter III -- invariants by type *********************************/

/* a-invariants of every irreducible of CharTable::forType(t), indexed like
   that table.  weights has one entry per node in the canonical order of
   the type: chains run end to end; the chain families B/C put the node
   with the bond of order four last; the dihedral group of order twelve is
   (long, short); the rank-four group with two bond-four nodes is
   (long, long, short, short).  Entries must be positive and constant
   across bonds of odd order.  Supported: A/B/C/D at any rank, the
   dihedral group of order twelve, and the rank-four exceptional group
   when matching external data is present (chapter IV); otherwise throws
   Unsupported. */
std::vector<Int> aValues(const TypeSymbol& t, const std::vector<int>& weights);

/* equal-parameter generic degrees (weight k >= 1 on every node), indexed
   like CharTable::forType(t); supported for A/B/C/D and the dihedral
   group of order twelve */
std::vector<RatFun> genericDegrees(const TypeSymbol& t, int k);

/* multiplicity of v^2 + 1 in the equal-parameter (k = 1) generic degree
   of irreducible e of forType(t) */
int zInvariant(const TypeSymbol& t, int e);

/* irreducibles E of forType(t) whose equal-parameter a-invariant equals
   the valuation of the fake degree (the b-invariant), in table order */
std::vector<int> specialRepresentations(const TypeSymbol& t);

/* The unique special irreducible whose z-invariant equals the number of
   node orbits of the opposition symmetry of the diagram of t; -1 when no
   special irreducible reaches that bound.  The same types as
   genericDegrees are supported. */
int distinguishedSpecial(const TypeSymbol& t);

/******** Chapter IV -- externally supplied a-data **************************/

/* A weighted type with no closed engine (in practice the rank-four
   exceptional group at unequal weights) can receive its a-invariants from
   a JSON file named by the environment variable BLOCKWEYL_DATA: an array
   of objects {"label": <irrep label>, "weights": [<per-node weights in
   canonical order>], "a": <integer>}.  Labels must match
   CharTable::forType(t).

   Returns the a-invariants in table order when the variable is set and
   the file holds entries for exactly this type and weight vector; returns
   nullopt when the variable is unset or the file has no entry with these
   weights.  Throws ParseError when the file is unreadable or malformed,
   or when the matching entries do not cover the irreducibles exactly
   once. */
std::optional<std::vector<Int>> externalAValues(const TypeSymbol& t,
                                                const std::vector<int>& weights);

}  // namespace blockweyl
