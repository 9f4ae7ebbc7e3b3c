#pragma once

#include "cubestrata/int_matrix.hpp"
#include "cubestrata/subdivision.hpp"

namespace cubestrata {

// A complex of equidimensional lattice polytopes given by the point sets of
// its maximal cells; cells must meet face-to-face with lattice-exact faces,
// so pairwise/triple intersections are determined by shared points.
struct GenericComplex {
  int ambient_dim = 3;
  std::vector<std::vector<std::vector<long>>> cells;  // cell -> points

  static GenericComplex from_subdivision(const Subdivision& s);
};

struct NervePair {
  int i = 0, j = 0;
  IntMatrix lattice;  // basis rows of the saturated lattice of (1, shared points)
};
struct NerveTriple {
  int i = 0, j = 0, k = 0;
  IntMatrix lattice;
};

struct NerveComplex {
  std::vector<IntMatrix> cell_lattices;  // basis rows, rank = dim+1 for maximal cells
  std::vector<NervePair> pairs;
  std::vector<NerveTriple> triples;
};

NerveComplex build_nerve(const GenericComplex& c);
NerveComplex build_nerve(const Subdivision& s);

struct AbelianGroupDescriptor {
  int rank = 0;
  std::vector<Int> torsion;  // invariant factors > 1, dividing successively
  bool trivial() const { return rank == 0 && torsion.empty(); }
};

// H_1 of the chain complex  (+)Lambda_ijk -> (+)Lambda_ij -> (+)Lambda_i
// with signed inclusion maps. H^1(P, T) = Hom(H_1, K^*) is trivial iff this
// group vanishes, K^* being divisible with torsion of every order.
AbelianGroupDescriptor h1_of_nerve(const NerveComplex& n);
AbelianGroupDescriptor h1_torus(const Subdivision& s);
AbelianGroupDescriptor h1_generic(const GenericComplex& c);

enum class ReductionVerdict { trivial_by_reduction, inconclusive };

// Appendix reduction: repeatedly delete hanging cells (exactly one facet in
// common with the rest); report trivial when the residue is one cell or a
// cycle of cells around a common codimension-2 face.
ReductionVerdict reduce_and_verdict(const Subdivision& s);

}  // namespace cubestrata
