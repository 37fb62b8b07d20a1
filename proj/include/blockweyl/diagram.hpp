/*
  This is diagram.hpp — Coxeter diagrams, descriptors, and diagram symmetry.

  Houses the canonical node labelings (documented in README.md), type
  recognition of subdiagrams, positive-root counts, diagram automorphism
  groups of finite diagrams, and the Omega-group data of affine diagrams
  (the special node sets and the two kinds of nontrivial twists).
*/

#pragma once

#include <string>
#include <vector>

#include "blockweyl/numeric.hpp"

namespace blockweyl {

/* bond order encoding: 2 = no edge, 3/4/6 = edge labels, 0 = infinity */
constexpr int infiniteBond = 0;

enum class Family : char { A = 'A', B = 'B', C = 'C', D = 'D', E = 'E', F = 'F', G = 'G' };

/******** Chapter I -- type symbols *****************************************/

struct TypeSymbol {
  Family family;
  int rank;

  bool operator==(const TypeSymbol& o) const
  {
    return sameDiagram(o);  // B and C name the same Coxeter diagram
  }
  bool operator!=(const TypeSymbol& o) const { return !(*this == o); }
  /* true when the two symbols name isomorphic Coxeter diagrams
     (identifies B_n with C_n, and the degenerate low-rank aliases) */
  bool sameDiagram(const TypeSymbol& o) const;

  std::string str() const;  // e.g. "B3"
  Int groupOrder() const;
  int positiveRoots() const;
};

/******** Chapter II -- diagrams ********************************************/

struct CoxeterDiagram {
  /* full symmetric Coxeter matrix, m[i][i] = 1 */
  std::vector<std::vector<int>> m;

  int size() const { return static_cast<int>(m.size()); }
  int bond(int i, int j) const { return m[i][j]; }
  bool adjacent(int i, int j) const { return i != j && m[i][j] != 2; }

  /* connected components of the subdiagram induced on `nodes` */
  std::vector<std::vector<int>> components(const std::vector<int>& nodes) const;

  /* recognized connected finite component: type plus nodes in canonical
     order (chains end-to-end; for B the 4-bond comes last; for D the two
     fork nodes come last; for E the branch tip comes last) */
  struct Recognized {
    TypeSymbol type;
    std::vector<int> order;
  };
  Recognized recognizeComponent(const std::vector<int>& nodes) const;

  /* type symbols of all components of the induced subdiagram */
  std::vector<TypeSymbol> subdiagramTypes(const std::vector<int>& nodes) const;

  /* number of positive roots of the (finite) subdiagram */
  int positiveRootCount(const std::vector<int>& nodes) const;
};

/******** Chapter III -- descriptors ****************************************/

struct CoxeterDescriptor {
  bool affine = false;
  std::vector<TypeSymbol> factors;  // affine descriptors have one factor

  /* parse "B3", "~C4", "D4xD4", "A2xA1" (tilde marks the affine diagram) */
  static CoxeterDescriptor parse(const std::string& text);

  std::string str() const;
  int rank() const;       // sum of factor ranks
  int nodeCount() const;  // rank, plus one for affine diagrams

  /* the diagram in the canonical labeling (see README.md) */
  CoxeterDiagram diagram() const;

  /* node set of the finite quotient: all nodes except the affine one */
  std::vector<int> finiteNodes() const;
};

/******** Chapter IV -- diagram automorphisms *******************************/

struct DiagramAutomorphism {
  std::vector<int> perm;  // node i maps to perm[i]

  bool isIdentity() const;
  int order() const;
  /* r(gamma): number of node orbits */
  int orbitCount() const;
  std::vector<std::vector<int>> orbits() const;
  DiagramAutomorphism after(const DiagramAutomorphism& first) const;  // this ∘ first
  DiagramAutomorphism power(int k) const;
  DiagramAutomorphism inverse() const;
  bool operator==(const DiagramAutomorphism& o) const { return perm == o.perm; }

  static DiagramAutomorphism identity(int n);
};

/* all bond-preserving node permutations of a diagram (finite use only) */
std::vector<DiagramAutomorphism> diagramAutomorphisms(const CoxeterDiagram& d);

/* conjugation by the longest element as a diagram automorphism of a finite
   descriptor: reversal on A_k (k>=2), tine swap on D_odd, flip on E6,
   identity otherwise; acts factor by factor */
DiagramAutomorphism opAutomorphism(const CoxeterDescriptor& finiteDesc);

/******** Chapter V -- Omega data of affine diagrams ************************/

struct OmegaGroup {
  CoxeterDescriptor desc;
  std::vector<DiagramAutomorphism> elements;  // identity first
  std::vector<int> sExcl;   // the marked node set S^!
  std::vector<int> sStar;   // the special node set S_*
  std::vector<bool> prime;  // per element: acts as identity on S^! ?

  int size() const { return static_cast<int>(elements.size()); }
  bool isPrime(int i) const { return prime[i]; }
  std::vector<int> primeMembers() const;
  std::vector<int> doublePrimeMembers() const;
  /* index of an element equal to the given automorphism */
  int indexOf(const DiagramAutomorphism& a) const;
};

OmegaGroup omegaGroup(const CoxeterDescriptor& affineDesc);

/******** Chapter VI -- weight functions ************************************/

/* node weights; valid iff constant across odd bonds */
using WeightFunction = std::vector<int>;

bool weightFunctionValid(const CoxeterDiagram& d, const WeightFunction& w);

/* weighted length of the longest element of the finite subdiagram on
   `nodes`: sum over positive roots of the weight of the node class the
   root's reflection is conjugate into */
int weightedLongestLength(const CoxeterDiagram& d, const std::vector<int>& nodes,
                          const WeightFunction& w);

}  // namespace blockweyl
