#pragma once

#include <string>
#include <vector>

#include "cubestrata/rational.hpp"

namespace cubestrata {

struct LatticeMismatch : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct UnknownLattice : std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum class Surface { P2, P1xP1, F1, Bl3P2 };

// Picard lattice of one of the four fixed rational surfaces, with its
// intersection matrix and canonical class.
struct PicLattice {
  Surface name;
  std::vector<std::string> basis;
  std::vector<std::vector<Rat>> form;
  std::vector<Rat> canonical;

  static PicLattice get(Surface s);
  int rank() const { return static_cast<int>(basis.size()); }
};

// Coefficient a + b*eps per basis element.
struct EpsCoeff {
  Rat a, b;
};

struct EpsClass {
  Surface lattice;
  std::vector<EpsCoeff> coeffs;

  static EpsClass constant(Surface s, const std::vector<Rat>& v);
  static EpsClass linear(Surface s, const std::vector<Rat>& a, const std::vector<Rat>& b);
  EpsClass operator+(const EpsClass& o) const;
  EpsClass scaled(const Rat& c0, const Rat& c1) const;  // multiply by c0 + c1*eps
};

// Polynomial c0 + c1*eps + c2*eps^2.
struct EpsPoly {
  Rat c0, c1, c2;
  bool operator==(const EpsPoly& o) const { return c0 == o.c0 && c1 == o.c1 && c2 == o.c2; }
  std::string str() const;
};

EpsPoly intersect(const EpsClass& x, const EpsClass& y);

// group_order * (K + (Da+Db+Dc)/2)^2 for a Z_2^2-cover with the given
// building data on the base surface.
Rat cover_canonical_square(Surface s, const std::vector<Rat>& Da, const std::vector<Rat>& Db,
                           const std::vector<Rat>& Dc, int group_order = 4);

// True iff the class lies in the ample cone for every small enough eps > 0.
bool ampleness_witness(const EpsClass& x);

}  // namespace cubestrata
