#pragma once

#include <optional>
#include <string>

#include "cubestrata/int_matrix.hpp"

namespace cubestrata {

struct UnboundedSlice : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct WindowTooSmall : std::runtime_error {
  using std::runtime_error::runtime_error;
};

using RootVec = std::vector<Int>;

// Hyperbolic lattice of signature (1, n) given by its Gram matrix.
struct GramLattice {
  std::string name;  // "even", "odd1", "odd2" or "custom"
  IntMatrix gram;
  RootVec default_v0;

  int rank() const { return gram.rows; }
  Int inner(const RootVec& x, const RootVec& y) const;
  void validate() const;  // signature (1, n, 0)
};

GramLattice lattice_even();  // diag(1,-1,-1,-1)
GramLattice lattice_odd1();  // diag(1,-1,-2,-2)
GramLattice lattice_odd2();  // H + diag(-2,-2)

// All integral x with x.x = -1 and v0.x = n. The slice form is definite
// when v0 is anisotropic (exhaustive search); for isotropic v0 a coordinate
// window must be supplied, otherwise UnboundedSlice is thrown.
std::vector<RootVec> roots_at_height(const GramLattice& L, const RootVec& v0, const Int& n,
                                     std::optional<long> window = std::nullopt);

struct CoxeterDiagram {
  std::vector<RootVec> roots;
  IntMatrix gram;  // pairwise inner products
};

CoxeterDiagram coxeter_diagram(const GramLattice& L, const std::vector<RootVec>& roots);
// Closed-form infinite diagram at the odd type-1 cusp restricted to the
// window |a|,|b| <= w; vertex (a,b) -> alpha_(a,b), products
// -1 + (a-c)^2 + (b-d)^2.
CoxeterDiagram odd1_window_diagram(long w);

std::string diagram_dot(const CoxeterDiagram& d);

bool finite_volume_check(const CoxeterDiagram& d, int lattice_rank);

struct VinbergRun {
  std::vector<RootVec> accepted;  // in acceptance order
  std::vector<Int> accepted_height;
  bool terminated = false;
  Int stop_height = 0;  // height after which the finite-volume check passed
  struct Rejection {
    RootVec candidate;
    RootVec witness;  // accepted root with negative product
    Int height;
  };
  std::vector<Rejection> rejections;
};

// Vinberg's algorithm: step 0 picks a fundamental system among the roots
// orthogonal to v0 (greedy in lexicographic order), then roots are accepted
// in increasing height iff their product with every accepted root is >= 0.
// With run_full the walk continues past the first finite-volume success up
// to max_height (used by the stability check).
VinbergRun vinberg_run(const GramLattice& L, const RootVec& v0, const Int& max_height,
                       std::optional<long> window = std::nullopt, bool run_full = false);

// Brute-force scan for vectors of square -1 with |coordinates| <= bound.
std::vector<RootVec> search_norm_minus_one(const GramLattice& L, long bound);
// All diagonal Gram entries even (an even lattice has no odd norms at all).
bool lattice_is_even(const GramLattice& L);

struct SubdiagramClass {
  std::string type;     // e.g. "A1", "A1+A1", "A1~+A1~"
  int rank = 0;
  bool parabolic = false;
  std::vector<int> example;  // vertex indices in the diagram
  int count = 0;             // subdiagrams in the class
};

struct SubdiagramClassification {
  std::vector<SubdiagramClass> elliptic;
  std::vector<SubdiagramClass> maximal_parabolic;
  int total() const { return static_cast<int>(elliptic.size() + maximal_parabolic.size()); }
};

// Elliptic and maximal parabolic subdiagrams up to diagram automorphism.
SubdiagramClassification classify_subdiagrams(const CoxeterDiagram& d, int lattice_rank);
// Same for the infinite odd1 diagram, modulo the affine symmetries of Z^2;
// enumerates within the window and throws WindowTooSmall below 2.
SubdiagramClassification classify_subdiagrams_odd1(long window, int lattice_rank);

}  // namespace cubestrata
