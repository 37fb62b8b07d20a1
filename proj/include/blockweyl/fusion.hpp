/*
  This is fusion.hpp — induction between reflection groups, families of
  irreducibles, and truncated induction.

  Two engines cover every induction used here.  The classical engine works
  at any rank without enumerating elements: a product of classical groups
  placed on consecutive coordinate blocks of a classical ambient group
  fuses class by class through signed cycle types.  The enumerated engine
  handles an arbitrary reflection subgroup of a small ambient group (the
  exceptional types and the low ranks) by matching conjugacy invariants of
  the enumerated elements.  On top of the two engines sit the partition of
  the irreducibles into families — computed by the parabolic-induction
  recursion, either with per-node weights or at equal parameters — the
  equal-parameter a-invariants of the rank-four exceptional group, which
  bootstrap off its families, and truncated induction.
*/

#pragma once

#include <vector>

#include "blockweyl/chartable.hpp"
#include "blockweyl/diagram.hpp"
#include "blockweyl/group.hpp"
#include "blockweyl/numeric.hpp"

namespace blockweyl {

/******** Chapter I -- classical parabolic induction ************************/

/* coordinates of the standard realization: rank + 1 for the symmetric
   series, rank for the signed families */
int coordinateSpan(const TypeSymbol& t);

/* combinatorial table of a classical type in its own coordinates; the
   low-rank aliases are NOT applied, so signed-permutation class lookups
   agree with the coordinate count */
const CharTable& rawClassicalTable(const TypeSymbol& t);

/* induction data for a product of classical groups placed on consecutive
   coordinate blocks of a classical ambient group, all remaining
   coordinates fixed pointwise.  A symmetric ambient admits only symmetric
   parts; the even-signed ambient admits symmetric and even-signed
   parts. */
struct ClassicalInduction {
  CharTable sub;                         // product table of the parts
  std::vector<int> fusion;               // sub class -> ambient class
  std::vector<std::vector<Int>> matrix;  // [sub irrep][ambient irrep]
};
ClassicalInduction parabolicInduction(const TypeSymbol& ambient,
                                      const std::vector<TypeSymbol>& parts);

/* equal-parameter a-invariant of an irreducible of rawClassicalTable(t) */
Int classicalAInvariant(const TypeSymbol& t, const IrrepData& ir);

/* spread (largest minus smallest equal-parameter a-invariant) of the
   constituents of the induction of the product of the distinguished
   special irreducibles of the parts; the empty product of parts gives the
   spread of the regular character, which is the number of positive roots */
Int inductionSpread(const TypeSymbol& ambient,
                    const std::vector<TypeSymbol>& parts);

/******** Chapter II -- enumerated ambient groups ***************************/

/* an enumerated reflection group of small rank bundled with its character
   table and a table-class lookup for elements */
class AmbientGroup {
 public:
  /* cached; classical families at small rank plus the two exceptional
     types of rank at most four */
  static const AmbientGroup& forType(const TypeSymbol& t);

  const TypeSymbol& type() const { return d_type; }
  const ReflectionGroup& group() const { return d_group; }
  const CharTable& table() const { return CharTable::forType(d_type); }

  /* class of an element, in the table's class order */
  int tableClassOf(int a) const;
  /* signed permutation of an element on the standard coordinates
     (classical families only) */
  SignedPerm signedPermOf(int a) const;
  /* element acting as the reflection in the k-th root */
  int reflectionElement(int rootIdx) const
  {
    return d_group.reflectionElement(rootIdx);
  }

 private:
  explicit AmbientGroup(const TypeSymbol& t);

  TypeSymbol d_type;  // canonical: aliases applied
  ReflectionGroup d_group;
};

/******** Chapter III -- reflection subgroup fusion *************************/

/* a reflection subgroup presented by generating roots, recognized as a
   product of irreducible components and fused into the ambient group */
struct FusedSubgroup {
  std::vector<TypeSymbol> partTypes;            // per component
  std::vector<std::vector<int>> partPositions;  // canonical node order of
                                                // each component, as
                                                // positions into genRoots
  CharTable table;                              // product of the part tables
  std::vector<int> classFusion;                 // sub class -> ambient class
  std::vector<std::vector<Int>> induction;      // [sub irrep][ambient irrep]
};

FusedSubgroup fuseSubgroup(const AmbientGroup& amb,
                           const std::vector<int>& genRoots);

/******** Chapter IV -- families of irreducibles ****************************/

/* a finite irreducible factor with one positive weight per node, in the
   canonical node order of the type */
struct WeightedFactor {
  TypeSymbol type;
  std::vector<int> weights;
};

/* a-invariants of the irreducibles of CharTable::forType(f.type) at the
   factor's weights; the rank-four exceptional group at equal weights is
   served by the frozen equal-parameter invariants below */
std::vector<Int> factorAValues(const WeightedFactor& f);

/* partition of the irreducibles of forType(t) into families at the given
   weights, computed by the parabolic-induction recursion: two
   irreducibles are related when some proper parabolic subgroup has a
   family one of whose members inducts onto each of them with preserved
   a-invariant, plainly or twisted by the sign character.  Families are
   sorted by smallest member.  The symmetric series is served by the
   singleton shortcut. */
std::vector<std::vector<int>> familyPartition(const TypeSymbol& t,
                                              const std::vector<int>& weights);
/* the recursion without the singleton shortcut (cross-validation) */
std::vector<std::vector<int>> familyPartitionByRecursion(
    const TypeSymbol& t, const std::vector<int>& weights);

/* equal-parameter families by the same recursion with the b-invariant as
   the height; this serves the sieve types, whose a-invariants do not
   exist before the bootstrap below */
const std::vector<std::vector<int>>& familyPartitionByB(const TypeSymbol& t);

/* equal-parameter a-invariants of the rank-four exceptional group: on
   each family, the b-invariant of the unique member of smallest b */
const std::vector<Int>& f4EqualAValues();

/* families of a product of weighted factors: cartesian products of the
   per-factor families, as index sets into the row-major product table */
std::vector<std::vector<int>> weightedFamilies(
    const std::vector<WeightedFactor>& factors);

/* index of the sign-twisted irreducible, for every irreducible */
std::vector<int> sgnTwistMap(const CharTable& t);

/******** Chapter V -- truncated induction **********************************/

/* the unique constituent of the induction of sub irrep m whose height
   equals the given sub height; throws unless exactly one exists */
int uniqueTruncatedConstituent(const std::vector<std::vector<Int>>& induction,
                               int m, const Int& subHeight,
                               const std::vector<Int>& ambHeights);

}  // namespace blockweyl
