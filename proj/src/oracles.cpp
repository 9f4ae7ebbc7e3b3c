#include "cubestrata/oracles.hpp"

namespace cubestrata {

namespace {

bool rat_is_square(const Rat& r, Rat* root) {
  if (r < 0) return false;
  Int n = r.get_num(), d = r.get_den();
  if (mpz_perfect_square_p(n.get_mpz_t()) == 0) return false;
  if (mpz_perfect_square_p(d.get_mpz_t()) == 0) return false;
  *root = Rat(isqrt_floor(n), isqrt_floor(d));
  return true;
}

using Mat2 = std::array<std::array<QuadExt, 2>, 2>;

// Checks the critical equations at a projective root (x0:x1) of
// det(x0*M0 + x1*M1), where the matrices act as F = Y^T M(x) Z.
bool singular_at_root(const std::array<std::array<Rat, 2>, 2>& M0,
                      const std::array<std::array<Rat, 2>, 2>& M1, const QuadExt& x0,
                      const QuadExt& x1) {
  const Rat D = x0.disc;
  auto lift = [&](const Rat& r) { return QuadExt(r, 0, D); };
  Mat2 M = {{{lift(0), lift(0)}, {lift(0), lift(0)}}};
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) M[i][j] = x0 * lift(M0[i][j]) + x1 * lift(M1[i][j]);

  // kernel vector z with M z = 0 and cokernel y with y^T M = 0
  std::array<QuadExt, 2> z = {lift(0), lift(0)}, y = {lift(0), lift(0)};
  bool rank0 = M[0][0].is_zero() && M[0][1].is_zero() && M[1][0].is_zero() && M[1][1].is_zero();
  if (rank0) return true;  // every (y,z) over the singular fiber works
  if (!M[0][0].is_zero() || !M[0][1].is_zero()) {
    z = {lift(0) - M[0][1], M[0][0]};
  } else {
    z = {lift(0) - M[1][1], M[1][0]};
  }
  if (!M[0][0].is_zero() || !M[1][0].is_zero()) {
    y = {lift(0) - M[1][0], M[0][0]};
  } else {
    y = {lift(0) - M[1][1], M[0][1]};
  }
  // y^T M0 z == 0 and y^T M1 z == 0
  for (const auto& Mk : {M0, M1}) {
    QuadExt s = lift(0);
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) s = s + y[i] * lift(Mk[i][j]) * z[j];
    if (!s.is_zero()) return false;
  }
  return true;
}

}  // namespace

bool surface_is_singular(const CoefficientAssignment& c) {
  // F = Y^T (x0 M0 + x1 M1) Z with M_i[j][k] = c_{ijk}, vid = 4i+2j+k.
  std::array<std::array<Rat, 2>, 2> M0, M1;
  for (int j = 0; j < 2; ++j)
    for (int k = 0; k < 2; ++k) {
      M0[j][k] = c[2 * j + k];
      M1[j][k] = c[4 + 2 * j + k];
    }
  auto det = [](const std::array<std::array<Rat, 2>, 2>& m) -> Rat {
    return m[0][0] * m[1][1] - m[0][1] * m[1][0];
  };
  // det(x0 M0 + x1 M1) = alpha x0^2 + beta x0 x1 + gamma x1^2
  Rat alpha = det(M0);
  Rat gamma = det(M1);
  Rat beta = (M0[0][0] * M1[1][1] + M1[0][0] * M0[1][1] - M0[0][1] * M1[1][0] -
              M1[0][1] * M0[1][0]);
  if (alpha == 0 && beta == 0 && gamma == 0) return true;  // pencil of singular forms

  std::vector<std::pair<QuadExt, QuadExt>> roots;
  if (alpha == 0) {
    // roots (x0:x1) = (1:0) and beta x0 + gamma x1 = 0
    roots.push_back({QuadExt(1, 0, 0), QuadExt(0, 0, 0)});
    if (beta != 0) roots.push_back({QuadExt(-gamma, 0, 0), QuadExt(beta, 0, 0)});
  } else {
    Rat disc = beta * beta - 4 * alpha * gamma;
    Rat sq;
    if (rat_is_square(disc, &sq)) {
      roots.push_back({QuadExt((-beta + sq) / 2, 0, 0), QuadExt(alpha, 0, 0)});
      roots.push_back({QuadExt((-beta - sq) / 2, 0, 0), QuadExt(alpha, 0, 0)});
    } else {
      roots.push_back({QuadExt(-beta / 2, Rat(1, 2), disc), QuadExt(alpha, 0, disc)});
      roots.push_back({QuadExt(-beta / 2, Rat(-1, 2), disc), QuadExt(alpha, 0, disc)});
    }
  }
  for (auto& [x0, x1] : roots)
    if (singular_at_root(M0, M1, x0, x1)) return true;
  return false;
}

std::pair<Int, Int> gcd_and_absdet_2x2(const Int& a, const Int& b, const Int& c, const Int& d) {
  Int g = gcd(gcd(a, b), gcd(c, d));
  Int det = abs(a * d - b * c);
  return {g, det};
}

}  // namespace cubestrata
