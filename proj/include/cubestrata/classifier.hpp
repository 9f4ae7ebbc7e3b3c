#pragma once

#include "cubestrata/subdivision.hpp"

namespace cubestrata {

struct InvalidCoefficients : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct NotABulletCell : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Equation coefficients on the 8 cube vertices, indexed by vid.
using CoefficientAssignment = std::array<Rat, 8>;

enum class CellType { a, b, c, d };
char cell_type_char(CellType t);

// Shape-based classification of a cell of a corner-cut-free subdivision by
// its (vertex count, normalized volume) signature: a=(4,1), b=(5,2),
// c=(6,3), d=(8,6). Anything else throws NotABulletCell.
CellType cell_type(VertexMask cell);

// Cayley's degree-4 hyperdeterminant of the 2x2x2 array; vanishes exactly
// when V(sum c_ijk X_i Y_j Z_k) in (P^1)^3 is singular.
Rat hyperdeterminant_222(const CoefficientAssignment& c);

enum class DSubtype { d1, d1_prime, d2, d3 };
struct DClassification {
  DSubtype label;
  bool triple_point = false;            // some vertex coefficient vanishes
  std::vector<VertexMask> broken_lines; // cube facets whose 2x2 det vanishes
  int components = 1;
};
DClassification classify_d(const CoefficientAssignment& c);

enum class CSubtype { c1, c2, c3 };
// Prism coefficients as two labeled triples (a0,a1,a2), (b0,b1,b2): indices
// 0,1 on the conductor wall, index 2 opposite, b = a translated along the
// prism direction.
CSubtype classify_c(const std::array<Rat, 3>& a, const std::array<Rat, 3>& b);
int c_components(CSubtype t);

struct BFlags {
  bool corner_vertex_zero = false;   // the coefficient freed by a corner-cut merge
  bool base_conic_reducible = false; // base-square 2x2 det vanishes
};

enum class DegenerationCase { I, II, III };
enum class CuspLabel { even, odd1, odd2, not_a_cusp, unassigned };
const char* cusp_name(CuspLabel c);

struct CellReport {
  VertexMask cell = 0;
  CellType type = CellType::a;
  int components = 1;
  std::string subtype;  // "c1".."c3", "d1","d1'","d2","d3", "" for a/b
  bool triple_point = false;
  bool conic_reducible = false;  // b cells: base conic breaks
  std::vector<VertexMask> broken_lines;  // d cells
};

struct DegenerationReport {
  int components = 0;
  DegenerationCase dcase = DegenerationCase::I;
  CuspLabel cusp = CuspLabel::not_a_cusp;
  std::vector<CellReport> cells;
};

// Classification of the degenerate pair attached to a corner-cut-free
// subdivision with the given coefficients.
DegenerationReport classify_degeneration(const Subdivision& s_bullet,
                                         const CoefficientAssignment& c);

// Zero coefficients are only legal at vertices whose corner cut fits inside
// the cell that absorbed it, and never at two cube-edge-adjacent vertices.
void validate_coefficients(const Subdivision& s_bullet, const CoefficientAssignment& c);

}  // namespace cubestrata
