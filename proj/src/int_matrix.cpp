#include "cubestrata/int_matrix.hpp"

#include <algorithm>
#include <cstdlib>

namespace cubestrata {

IntMatrix IntMatrix::identity(int n) {
  IntMatrix m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix t(cols, rows);
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c) t.at(c, r) = at(r, c);
  return t;
}

IntMatrix IntMatrix::mul(const IntMatrix& rhs) const {
  IntMatrix out(rows, rhs.cols);
  for (int i = 0; i < rows; ++i)
    for (int k = 0; k < cols; ++k) {
      if (at(i, k) == 0) continue;
      for (int j = 0; j < rhs.cols; ++j) out.at(i, j) += at(i, k) * rhs.at(k, j);
    }
  return out;
}

bool IntMatrix::is_symmetric() const {
  if (rows != cols) return false;
  for (int i = 0; i < rows; ++i)
    for (int j = i + 1; j < cols; ++j)
      if (at(i, j) != at(j, i)) return false;
  return true;
}

namespace {

void swap_rows(IntMatrix& m, IntMatrix& u, int i, int j) {
  if (i == j) return;
  for (int c = 0; c < m.cols; ++c) std::swap(m.at(i, c), m.at(j, c));
  for (int c = 0; c < u.cols; ++c) std::swap(u.at(i, c), u.at(j, c));
}

void swap_cols(IntMatrix& m, IntMatrix& v, int i, int j) {
  if (i == j) return;
  for (int r = 0; r < m.rows; ++r) std::swap(m.at(r, i), m.at(r, j));
  for (int r = 0; r < v.rows; ++r) std::swap(v.at(r, i), v.at(r, j));
}

// row[i] += k * row[j]
void add_row(IntMatrix& m, IntMatrix& u, int i, int j, const Int& k) {
  for (int c = 0; c < m.cols; ++c) m.at(i, c) += k * m.at(j, c);
  for (int c = 0; c < u.cols; ++c) u.at(i, c) += k * u.at(j, c);
}

void add_col(IntMatrix& m, IntMatrix& v, int i, int j, const Int& k) {
  for (int r = 0; r < m.rows; ++r) m.at(r, i) += k * m.at(r, j);
  for (int r = 0; r < v.rows; ++r) v.at(r, i) += k * v.at(r, j);
}

void negate_row(IntMatrix& m, IntMatrix& u, int i) {
  for (int c = 0; c < m.cols; ++c) m.at(i, c) = -m.at(i, c);
  for (int c = 0; c < u.cols; ++c) u.at(i, c) = -u.at(i, c);
}

}  // namespace

SmithResult smith_normal_form(const IntMatrix& input) {
  SmithResult res;
  IntMatrix m = input;
  res.U = IntMatrix::identity(m.rows);
  res.V = IntMatrix::identity(m.cols);

  int t = 0;
  const int tmax = std::min(m.rows, m.cols);
  while (t < tmax) {
    // smallest nonzero entry of the trailing submatrix
    int pr = -1, pc = -1;
    for (int r = t; r < m.rows; ++r)
      for (int c = t; c < m.cols; ++c) {
        if (m.at(r, c) == 0) continue;
        if (pr < 0 || cmp(abs(m.at(r, c)), abs(m.at(pr, pc))) < 0) {
          pr = r;
          pc = c;
        }
      }
    if (pr < 0) break;  // trailing block is zero
    swap_rows(m, res.U, t, pr);
    swap_cols(m, res.V, t, pc);

    bool clean = true;
    for (int r = t + 1; r < m.rows; ++r) {
      if (m.at(r, t) == 0) continue;
      Int q = m.at(r, t) / m.at(t, t);
      add_row(m, res.U, r, t, -q);
      if (m.at(r, t) != 0) clean = false;
    }
    for (int c = t + 1; c < m.cols; ++c) {
      if (m.at(t, c) == 0) continue;
      Int q = m.at(t, c) / m.at(t, t);
      add_col(m, res.V, c, t, -q);
      if (m.at(t, c) != 0) clean = false;
    }
    if (!clean) continue;  // nonzero remainders: pick a new (smaller) pivot

    // divisibility: d_t must divide everything that comes later
    bool divides = true;
    for (int r = t + 1; r < m.rows && divides; ++r)
      for (int c = t + 1; c < m.cols && divides; ++c)
        if (m.at(r, c) % m.at(t, t) != 0) {
          add_row(m, res.U, t, r, 1);
          divides = false;
        }
    if (!divides) continue;

    if (m.at(t, t) < 0) negate_row(m, res.U, t);
    ++t;
  }

  res.rank = t;
  for (int i = 0; i < t; ++i) res.factors.push_back(m.at(i, i));
  return res;
}

IntMatrix integer_kernel(const IntMatrix& m) {
  if (m.rows == 0) return IntMatrix::identity(m.cols);
  SmithResult s = smith_normal_form(m);
  IntMatrix k(m.cols, m.cols - s.rank);
  for (int j = s.rank; j < m.cols; ++j)
    for (int r = 0; r < m.cols; ++r) k.at(r, j - s.rank) = s.V.at(r, j);
  return k;
}

IntMatrix saturate_rowspace(const IntMatrix& m) {
  // (Q-rowspace of m) cap Z^n  =  ker(K^T) where columns of K span ker(m).
  IntMatrix k = integer_kernel(m);
  IntMatrix kt = k.transpose();
  IntMatrix basis_cols = integer_kernel(kt);
  return basis_cols.transpose();
}

std::tuple<int, int, int> signature(const IntMatrix& g) {
  if (!g.is_symmetric()) throw NotSymmetric("signature: matrix not symmetric");
  const int n = g.rows;
  std::vector<std::vector<Rat>> a(n, std::vector<Rat>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) a[i][j] = Rat(g.at(i, j));

  int pos = 0, neg = 0, zero = 0;
  std::vector<int> idx(n);
  for (int i = 0; i < n; ++i) idx[i] = i;
  int k = 0;
  while (k < n) {
    int p = -1;
    for (int i = k; i < n; ++i)
      if (a[i][i] != 0) {
        p = i;
        break;
      }
    if (p < 0) {
      int oi = -1, oj = -1;
      for (int i = k; i < n && oi < 0; ++i)
        for (int j = i + 1; j < n; ++j)
          if (a[i][j] != 0) {
            oi = i;
            oj = j;
            break;
          }
      if (oi < 0) {
        zero += n - k;
        break;
      }
      // congruence row/col oi += oj makes the diagonal entry 2*a[oi][oj]
      for (int c = 0; c < n; ++c) a[oi][c] += a[oj][c];
      for (int r = 0; r < n; ++r) a[r][oi] += a[r][oj];
      p = oi;
    }
    if (p != k) {
      std::swap(a[p], a[k]);
      for (int r = 0; r < n; ++r) std::swap(a[r][p], a[r][k]);
    }
    Rat d = a[k][k];
    if (d > 0)
      ++pos;
    else
      ++neg;
    for (int i = k + 1; i < n; ++i) {
      if (a[i][k] == 0) continue;
      Rat f = a[i][k] / d;
      for (int j = k; j < n; ++j) a[i][j] -= f * a[k][j];
      for (int j = k; j < n; ++j) a[j][i] = a[i][j];
    }
    ++k;
  }
  return {pos, neg, zero};
}

int rational_rank(std::vector<std::vector<Rat>> rows) {
  if (rows.empty()) return 0;
  const size_t cols = rows[0].size();
  int rank = 0;
  size_t c = 0;
  for (; c < cols && rank < static_cast<int>(rows.size()); ++c) {
    int p = -1;
    for (size_t r = rank; r < rows.size(); ++r)
      if (rows[r][c] != 0) {
        p = static_cast<int>(r);
        break;
      }
    if (p < 0) continue;
    std::swap(rows[rank], rows[p]);
    for (size_t r = 0; r < rows.size(); ++r) {
      if (static_cast<int>(r) == rank || rows[r][c] == 0) continue;
      Rat f = rows[r][c] / rows[rank][c];
      for (size_t j = c; j < cols; ++j) rows[r][j] -= f * rows[rank][j];
    }
    ++rank;
  }
  return rank;
}

bool solve_rational(const IntMatrix& basis_cols, const std::vector<Int>& target,
                    std::vector<Rat>* out) {
  const int n = basis_cols.rows, k = basis_cols.cols;
  std::vector<std::vector<Rat>> aug(n, std::vector<Rat>(k + 1));
  for (int r = 0; r < n; ++r) {
    for (int c = 0; c < k; ++c) aug[r][c] = Rat(basis_cols.at(r, c));
    aug[r][k] = Rat(target[r]);
  }
  int rank = 0;
  std::vector<int> pivot_col(k, -1);
  for (int c = 0; c < k && rank < n; ++c) {
    int p = -1;
    for (int r = rank; r < n; ++r)
      if (aug[r][c] != 0) {
        p = r;
        break;
      }
    if (p < 0) continue;
    std::swap(aug[rank], aug[p]);
    for (int r = 0; r < n; ++r) {
      if (r == rank || aug[r][c] == 0) continue;
      Rat f = aug[r][c] / aug[rank][c];
      for (int j = c; j <= k; ++j) aug[r][j] -= f * aug[rank][j];
    }
    pivot_col[c] = rank;
    ++rank;
  }
  for (int r = rank; r < n; ++r)
    if (aug[r][k] != 0) return false;
  if (out) {
    out->assign(k, Rat(0));
    for (int c = 0; c < k; ++c)
      if (pivot_col[c] >= 0) (*out)[c] = aug[pivot_col[c]][k] / aug[pivot_col[c]][c];
  }
  return true;
}

}  // namespace cubestrata
