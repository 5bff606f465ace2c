#pragma once

#include <gmpxx.h>

#include <vector>

namespace goldman {

using Int = mpz_class;
using IntMat = std::vector<std::vector<Int>>;  // row-major

IntMat identity_matrix(long n);
IntMat mat_mul(const IntMat& a, const IntMat& b);
std::vector<Int> mat_vec(const IntMat& a, const std::vector<Int>& x);

// Row Hermite normal form. H = transform * a with transform unimodular;
// pivots are the pivot column of each nonzero row, pivot entries positive,
// entries above a pivot reduced into [0, pivot).
struct HermiteForm {
  IntMat h;
  IntMat transform;
  IntMat transform_inv;
  std::vector<long> pivot_cols;
};
HermiteForm hnf_rows(const IntMat& a);

// Saturated integer kernel of an r x r matrix together with a canonical
// presentation of the quotient Z^r / ker.
//
//   projection : (r-t stripped) maps Z^r onto Z^rank with kernel exactly
//                {x : m x = 0}; rows are in Hermite normal form.
//   section    : integer right inverse of projection, columns reduced
//                modulo the kernel lattice.
//   kernel_cols: column Hermite basis of ker(m).
struct KernelDecomposition {
  long rank = 0;
  std::vector<std::vector<Int>> kernel_cols;  // each of length r
  IntMat projection;                          // rank x r
  IntMat section;                             // r x rank
};
KernelDecomposition integer_kernel(const IntMat& m);

}  // namespace goldman
