#pragma once

#include <vector>

#include "goldman/algebra.hpp"

namespace goldman {

// Dense univariate polynomial over Q; coeffs[deg] != 0 unless zero.
struct QPoly {
  std::vector<Rat> coeffs;

  bool is_zero() const { return coeffs.empty(); }
  long degree() const { return (long)coeffs.size() - 1; }  // -1 for zero
  void normalize();
};

QPoly qpoly_mul(const QPoly& a, const QPoly& b);
// a = q*b + r with deg r < deg b
std::pair<QPoly, QPoly> qpoly_divmod(const QPoly& a, const QPoly& b);
bool qpoly_divides(const QPoly& b, const QPoly& a);  // b | a
QPoly qpoly_monic(QPoly a);
QPoly qpoly_gcd(QPoly a, QPoly b);  // monic gcd, zero if both zero

// Laurent polynomial f = t^min_exp * poly(t) with poly(0) != 0.
struct Laurent {
  QPoly poly;
  Int min_exp = 0;

  bool is_zero() const { return poly.is_zero(); }
};

// Conversion between kernel-supported algebra elements and Laurent
// polynomials in the translation by the first kernel basis vector.
// Requires kernel_rank == 1 and no torsion.
Laurent laurent_from_element(const GroupSpec& spec, const KernelData& kd,
                             const AlgebraElement& x);
AlgebraElement element_from_qpoly(const GroupSpec& spec, const KernelData& kd,
                                  const QPoly& p);

// Divisibility in Q[t, t^-1]: units t^k are quotiented away, so only the
// positive-exponent parts matter.
bool laurent_divides(const Laurent& g, const Laurent& f);

// Monic gcd of the generators as an ideal of Q[t, t^-1], shifted so the
// lowest exponent is 0. Empty/zero input gives the zero polynomial.
QPoly laurent_ideal_gcd(const GroupSpec& spec, const KernelData& kd,
                        const std::vector<AlgebraElement>& gens);

}  // namespace goldman
