/*
  This is chartable.hpp — exact character tables of finite Coxeter groups.

  The classical series are built combinatorially (Murnaghan-Nakayama and its
  wreath/demihyperoctahedral variants); the exceptional types G2 and F4 are
  built at first use by a deterministic character sieve over the enumerated
  reflection group, with completeness proved at run time.  Every table knows
  the characteristic polynomial of each class on the reflection
  representation, which powers symmetric-power characters, lowest-degree
  invariants and fake degrees.
*/

#pragma once

#include <string>
#include <vector>

#include "blockweyl/group.hpp"
#include "blockweyl/partitions.hpp"
#include "blockweyl/poly.hpp"

namespace blockweyl {

struct ClassData {
  std::string label;
  Int size;
  Poly reflPoly;          // det(q - w) on the reflection representation
  Bipartition cycleType;  // classical families only
  int splitHalf = -1;     // 0 / 1 for the two halves of a split class
  int elemOrder = 0;      // order of a representative (sieve tables)
};

struct IrrepData {
  std::string label;
  Int dim;
  Bipartition bilabel;  // classical families only
  int splitHalf = -1;   // 0 / 1 for the two halves of a split irreducible
};

/* half index (0 or 1) of an element of D_n whose cycles are all positive and
   of even length: 0 when it is D_n-conjugate to the canonical representative
   of its type, 1 otherwise */
int dConjugacyHalf(const SignedPerm& w);

class CharTable {
 public:
  /* cached builders for the classical series (degree n means S_n, the
     hyperoctahedral group of rank n, its rotation subgroup of rank n) */
  static const CharTable& symmetric(int n);
  static const CharTable& hyperoctahedral(int n);
  static const CharTable& demihyperoctahedral(int n);
  /* dispatcher; identifies C with B and the low-rank aliases */
  static const CharTable& forType(const TypeSymbol& t);

  /* deterministic character sieve over an enumerated group; `degrees` are
     the fundamental degrees (may be empty, disabling fake degrees) */
  static CharTable fromGroup(const ReflectionGroup& g, const std::string& name,
                             const std::vector<int>& degrees);

  static CharTable product(const CharTable& a, const CharTable& b);

  const std::string& name() const { return d_name; }
  const Int& order() const { return d_order; }
  int reflRank() const { return d_reflRank; }
  int positiveRootCount() const { return d_positiveRoots; }
  const std::vector<int>& degrees() const { return d_degrees; }

  int classCount() const { return static_cast<int>(d_classes.size()); }
  int irrepCount() const { return static_cast<int>(d_irreps.size()); }
  const ClassData& classData(int c) const { return d_classes[c]; }
  const IrrepData& irrepData(int e) const { return d_irreps[e]; }
  const Int& value(int e, int c) const { return d_values[e][c]; }
  const std::vector<Int>& row(int e) const { return d_values[e]; }

  int classByLabel(const std::string& label) const;
  int irrepByLabel(const std::string& label) const;
  int irrepByBilabel(const Bipartition& bp, int splitHalf = -1) const;

  /* class of a signed permutation (classical families only) */
  int classOfSignedPerm(const SignedPerm& w) const;
  int classOfCycleType(const Bipartition& t, int splitHalf = -1) const;

  /* product-table class composition: factors were laid out a-major */
  int pairClassIndex(int aClass, int bClass, int bCount) const
  {
    return aClass * bCount + bClass;
  }

  Rat innerProduct(const std::vector<Int>& f, const std::vector<Int>& g) const;
  /* exact multiplicities of a virtual character in the irreducibles */
  std::vector<Int> decompose(const std::vector<Int>& classFn) const;
  bool orthogonal() const;  // first and second orthogonality

  /* classwise character of Sym^N of the reflection representation */
  const std::vector<Rat>& symPowerRefl(int n) const;
  /* lowest N with <chi, Sym^N(refl)> nonzero */
  int bInvariant(int e) const;
  /* multiplicity of irrep e in Sym^N(refl) */
  Int symPowerMultiplicity(int e, int n) const;
  /* graded multiplicity of e in the coinvariant algebra */
  Poly fakeDegree(int e) const;
  /* Poincare polynomial, prod of q-integers over the degrees */
  Poly poincare() const;

  /* induction multiplicities from a subgroup along a class fusion map:
     result[subIrrep][irrep] = <Ind chi_sub, chi>  (Frobenius) */
  std::vector<std::vector<Int>> inductionFrom(const CharTable& sub,
                                              const std::vector<int>& fusion) const;

 private:
  CharTable() = default;
  void finalize();  // sanity checks + lookup maps

  std::string d_name;
  Int d_order;
  int d_reflRank = 0;
  int d_positiveRoots = 0;
  std::vector<int> d_degrees;
  std::vector<ClassData> d_classes;
  std::vector<IrrepData> d_irreps;
  std::vector<std::vector<Int>> d_values;
  std::map<std::string, int> d_classIndex;
  std::map<std::string, int> d_irrepIndex;
  mutable std::vector<std::vector<Rat>> d_symPowers;  // [N][class]
  mutable std::vector<int> d_bCache;
};

}  // namespace blockweyl
