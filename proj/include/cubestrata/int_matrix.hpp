#pragma once

#include <tuple>
#include <vector>

#include "cubestrata/rational.hpp"

namespace cubestrata {

struct NotSymmetric : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Dense integer matrix, row-major.
struct IntMatrix {
  int rows = 0, cols = 0;
  std::vector<Int> a;

  IntMatrix() = default;
  IntMatrix(int r, int c) : rows(r), cols(c), a(static_cast<size_t>(r) * c, Int(0)) {}

  Int& at(int r, int c) { return a[static_cast<size_t>(r) * cols + c]; }
  const Int& at(int r, int c) const { return a[static_cast<size_t>(r) * cols + c]; }

  static IntMatrix identity(int n);
  IntMatrix transpose() const;
  IntMatrix mul(const IntMatrix& rhs) const;
  bool is_symmetric() const;
  bool operator==(const IntMatrix& o) const { return rows == o.rows && cols == o.cols && a == o.a; }
};

struct SmithResult {
  std::vector<Int> factors;  // d_1 | d_2 | ... | d_r, all positive
  int rank = 0;
  IntMatrix U, V;  // unimodular, U*A*V = diag(factors)
};

// Smith normal form with transformation matrices. Pivoting on the smallest
// nonzero entry keeps coefficients small at this scale.
SmithResult smith_normal_form(const IntMatrix& m);

// Columns form a basis of {x : m x = 0} over the integers.
IntMatrix integer_kernel(const IntMatrix& m);

// Rows form a basis of the saturation of the row space of m in Z^cols,
// i.e. (Q-rowspace of m) intersected with Z^cols.
IntMatrix saturate_rowspace(const IntMatrix& m);

// Sylvester signature (positives, negatives, zeros) of a symmetric matrix,
// computed by exact rational LDL^T with symmetric pivoting.
std::tuple<int, int, int> signature(const IntMatrix& g);

// Rank over Q of a rational matrix given as rows.
int rational_rank(std::vector<std::vector<Rat>> rows);

// Solves A x = b over Q (A given by columns of basis vectors). Returns
// empty if inconsistent. A is rows x cols with cols <= rows expected.
bool solve_rational(const IntMatrix& basis_cols, const std::vector<Int>& target,
                    std::vector<Rat>* out);

}  // namespace cubestrata
