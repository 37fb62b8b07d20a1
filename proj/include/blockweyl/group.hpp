/*
  This is group.hpp — concrete finite reflection groups.

  Two element models: signed permutations for the classical series, and
  fully enumerated root-permutation groups (built from exact reflection
  matrices) for the exceptional types and for reflection subgroups given
  by arbitrary root subsets.  Everything is exact; groups are immutable
  once built.
*/

#pragma once

#include <map>
#include <vector>

#include "blockweyl/diagram.hpp"
#include "blockweyl/partitions.hpp"
#include "blockweyl/poly.hpp"

namespace blockweyl {

/******** Chapter I -- signed permutations **********************************/

/* w(e_i) = sign * e_j is stored as img[i] = +-(j+1); i, j are 0-based */
struct SignedPerm {
  std::vector<int> img;

  static SignedPerm identity(int n);
  /* plain transposition (i j) */
  static SignedPerm transposition(int n, int i, int j);
  /* e_i -> -e_j, e_j -> -e_i (reflection in e_i + e_j) */
  static SignedPerm negTransposition(int n, int i, int j);
  /* e_i -> -e_i */
  static SignedPerm signFlip(int n, int i);

  int n() const { return static_cast<int>(img.size()); }
  SignedPerm after(const SignedPerm& first) const;  // this ∘ first
  SignedPerm inverse() const;
  bool operator==(const SignedPerm& o) const { return img == o.img; }
  bool operator<(const SignedPerm& o) const { return img < o.img; }
  bool isIdentity() const;
  int flipCount() const;  // number of negative signs
  bool isEven() const { return flipCount() % 2 == 0; }

  /* signed cycle type: (positive cycle lengths; negative cycle lengths) */
  Bipartition cycleType() const;
  /* characteristic polynomial on the natural n-dimensional representation */
  Poly charPoly() const;
};

/* canonical representative of the class (alpha; beta) in the full signed
   permutation group of degree |alpha| + |beta| */
SignedPerm classRepresentative(const Bipartition& type);

/* centralizer order of class (alpha; beta) in the hyperoctahedral group */
Int centralizerOrderHyp(const Bipartition& type);

/* trace of w^k on the natural representation, from the cycle type */
Int powerTraceSigned(const Bipartition& type, int k);

/******** Chapter II -- exact matrices **************************************/

using Matrix = std::vector<std::vector<Rat>>;
using Vector = std::vector<Rat>;

Matrix matIdentity(int n);
Matrix matMul(const Matrix& a, const Matrix& b);
Vector matApply(const Matrix& a, const Vector& v);
bool matEq(const Matrix& a, const Matrix& b);
/* characteristic polynomial det(q*I - M), exact (Faddeev-LeVerrier) */
Poly charPolyOfMatrix(const Matrix& m);

/* basis of the kernel of m (rows x cols) */
std::vector<Vector> rationalKernel(Matrix m, int cols);
/* coordinates of v in the given (independent) basis; throws when v is not
   in the span */
Vector solveInBasis(const std::vector<Vector>& basis, const Vector& v);

/******** Chapter III -- root systems ***************************************/

struct RootSystem {
  /* all roots as exact vectors in the ambient space */
  std::vector<Vector> roots;
  /* indices of the simple roots, in diagram-node order */
  std::vector<int> simples;
  /* positivity (w.r.t. the simple basis) and negation pairing */
  std::vector<bool> positive;
  std::vector<int> negOf;
  /* root norm squared (for length classes within components) */
  std::vector<Rat> norm2;

  int count() const { return static_cast<int>(roots.size()); }
  int positiveCount() const;
  /* reflection matrix of the k-th root */
  Matrix reflection(int rootIdx) const;
  int indexOfRoot(const Vector& v) const;  // -1 when absent
};

/* standard realization of a finite descriptor (README documents bases);
   node order matches the descriptor's canonical labeling */
RootSystem standardRoots(const CoxeterDescriptor& finiteDesc);

/* index of the highest root of an irreducible system (the unique positive
   root p with p + s outside the system for every simple root s) */
int highestRootIndex(const RootSystem& rs);

/******** Chapter IV -- enumerated reflection groups ************************/

class ReflectionGroup {
 public:
  /* full group of a finite descriptor */
  explicit ReflectionGroup(const CoxeterDescriptor& finiteDesc);
  /* reflection subgroup of an ambient system generated by a root subset;
     the subsystem consists of all ambient roots in the subgroup's orbit */
  ReflectionGroup(const RootSystem& ambient, const std::vector<int>& genRoots);

  int size() const { return static_cast<int>(d_perm.size()); }
  int generatorCount() const { return static_cast<int>(d_gens.size()); }
  int generator(int k) const { return d_gens[k]; }
  int identity() const { return 0; }

  int mult(int a, int b) const;
  int inverse(int a) const;
  int conjugate(int g, int x) const;  // g x g^{-1}
  int elementOrder(int a) const;

  /* element acting on the roots as the reflection in the k-th root */
  int reflectionElement(int rootIdx) const;
  /* element realizing a given root permutation; -1 when absent */
  int elementByRootAction(const std::vector<int>& perm) const;

  /* action data */
  const RootSystem& rootSystem() const { return d_roots; }
  const std::vector<int>& rootAction(int a) const { return d_perm[a]; }
  int length(int a) const { return d_length[a]; }
  Matrix matrixOf(int a) const;

  /* conjugacy classes */
  int classCount() const { return static_cast<int>(d_classes.size()); }
  const std::vector<std::vector<int>>& classes() const { return d_classes; }
  int classOf(int a) const { return d_classOf[a]; }
  int classRep(int c) const { return d_classes[c][0]; }

  /* characteristic polynomial on the span of the root system (the
     reflection representation); constant on classes */
  Poly reflCharPoly(int a) const;

  /* orbit index of each root under the group (0 or 1 orbits per component
     in the crystallographic cases used here) */
  const std::vector<int>& rootOrbit() const { return d_rootOrbit; }

 private:
  void closeAndIndex(const std::vector<int>& genRootIdx);
  void computeClasses();

  RootSystem d_roots;
  std::vector<int> d_gens;                   // generator element indices
  std::vector<std::vector<int>> d_perm;      // element -> root permutation
  std::vector<int> d_invIdx;                 // element -> inverse element
  std::vector<int> d_length;
  std::vector<std::vector<int>> d_genLeft;   // [gen][element] -> gen*element
  std::vector<std::vector<int>> d_genRight;  // [gen][element] -> element*gen
  std::map<std::vector<int>, int> d_index;
  std::vector<std::vector<int>> d_classes;
  std::vector<int> d_classOf;
  std::vector<int> d_rootOrbit;
  std::vector<Vector> d_spanBasis;  // basis of the root span
};

}  // namespace blockweyl
