#pragma once

#include "cubestrata/classifier.hpp"

namespace cubestrata {

// Verification-only code paths, kept independent of the implementations
// they cross-check.

// Element of Q(sqrt(disc)): a + b*sqrt(disc). When disc is a perfect
// square the field degenerates to Q and callers use plain rationals.
struct QuadExt {
  Rat a, b;
  Rat disc;

  QuadExt(Rat a_, Rat b_, Rat d) : a(std::move(a_)), b(std::move(b_)), disc(std::move(d)) {}
  bool is_zero() const { return a == 0 && b == 0; }
  QuadExt operator+(const QuadExt& o) const { return {a + o.a, b + o.b, disc}; }
  QuadExt operator-(const QuadExt& o) const { return {a - o.a, b - o.b, disc}; }
  QuadExt operator*(const QuadExt& o) const {
    return {a * o.a + b * o.b * disc, a * o.b + b * o.a, disc};
  }
};

// Decides singularity of V(sum c_ijk X_i Y_j Z_k) in (P^1)^3 by finding the
// roots of det(x0*M0 + x1*M1) in a quadratic extension and testing the
// critical equations there. Independent of hyperdeterminant_222.
bool surface_is_singular(const CoefficientAssignment& c);

// Integer-arithmetic row reduction used as an oracle for small Smith normal
// forms: returns (gcd of entries, |det|) for a square nonsingular matrix.
std::pair<Int, Int> gcd_and_absdet_2x2(const Int& a, const Int& b, const Int& c, const Int& d);

}  // namespace cubestrata
