#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <vector>

#include "goldman/linalg.hpp"

namespace goldman {

struct error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// H = Z^r x Z/d1 x ... x Z/dk together with an alternating integer form on
// the free part. The form is zero on every torsion coordinate.
struct GroupSpec {
  long free_rank = 0;
  std::vector<Int> torsion_orders;  // each >= 2
  IntMat form;                      // r x r, skew-symmetric, zero diagonal
};

// Checks the GroupSpec invariants and returns the spec unchanged.
const GroupSpec& validate_spec(const GroupSpec& spec);

// Element of H in canonical coordinates; torsion residues live in [0, d_i).
struct GroupElement {
  std::vector<Int> free_coords;
  std::vector<Int> torsion_coords;

  bool operator==(const GroupElement&) const = default;
};

int compare(const GroupElement& a, const GroupElement& b);  // lex, free then torsion
bool operator<(const GroupElement& a, const GroupElement& b);

// Canonical coordinates in Hbar = H / ker mu, a free group of rank r - s.
using Coset = std::vector<Int>;

// ker mu and the quotient presentation, computed once per spec.
struct KernelData {
  long kernel_rank = 0;                   // s = rank of the free part of ker mu
  std::vector<GroupElement> kernel_basis; // basis of that free part
  IntMat projection;                      // (r-s) x r, kernel exactly ker mu
  IntMat section;                         // r x (r-s), projection * section = id
};

void check_conformant(const GroupSpec& spec, const GroupElement& x);
GroupElement make_element(const GroupSpec& spec, std::vector<Int> free_coords,
                          std::vector<Int> torsion_coords = {});
GroupElement elem_zero(const GroupSpec& spec);
GroupElement elem_add(const GroupSpec& spec, const GroupElement& x, const GroupElement& y);
GroupElement elem_neg(const GroupSpec& spec, const GroupElement& x);
GroupElement elem_sub(const GroupSpec& spec, const GroupElement& x, const GroupElement& y);
GroupElement elem_scale(const GroupSpec& spec, const Int& c, const GroupElement& x);

// <x, y> evaluated on the free parts; bilinear and alternating.
Int pairing(const GroupSpec& spec, const GroupElement& x, const GroupElement& y);

KernelData kernel_data(const GroupSpec& spec);

// mu = 0 iff the form matrix vanishes, i.e. Hbar = 0.
bool mu_is_zero(const GroupSpec& spec, const KernelData& kd);

bool in_kernel(const GroupSpec& spec, const KernelData& kd, const GroupElement& x);
Coset coset_rep(const GroupSpec& spec, const KernelData& kd, const GroupElement& x);
Coset zero_coset(const GroupSpec& spec, const KernelData& kd);

// Fixed section of coset_rep: zero torsion part, free part reduced modulo the
// kernel lattice. coset_rep(lift(c)) == c for all c.
GroupElement lift(const GroupSpec& spec, const KernelData& kd, const Coset& c);

// z with <x_i, z> != 0 for every input. Deterministic: the single-element
// case scans the standard free generators in index order; larger inputs use
// the inductive combination z = u + (1 + sum |<x_i, u>|) v.
GroupElement key_lemma_witness(const GroupSpec& spec, const KernelData& kd,
                               const std::vector<GroupElement>& xs);

}  // namespace goldman
