#pragma once

#include <vector>

#include "goldman/algebra.hpp"

namespace goldman {

enum class Tri { False, True, Unknown };
const char* to_string(Tri t);

// Coordinate box: free coordinates bounded in max-norm, torsion free to
// range over the whole (finite) torsion group.
struct Box {
  long radius = 1;
};

bool in_box(const GroupSpec& spec, const Box& box, const GroupElement& x);
bool in_box(const GroupSpec& spec, const Box& box, const AlgebraElement& x);

// All group elements inside the box, ascending canonical order.
std::vector<GroupElement> box_elements(const GroupSpec& spec, const Box& box);

struct TruncatedClosure {
  Box box;
  RowSpace span;
};

// Brute-force under-approximation of the ideal generated by gens: iterate
// brackets with box singletons, discarding anything whose support leaves
// the box, until the span stabilizes.
TruncatedClosure truncated_closure(const GroupSpec& spec, const KernelData& kd,
                                   const std::vector<AlgebraElement>& gens, const Box& box);

// True when X lies in the computed span; Unknown otherwise (truncation can
// hide memberships but never invents them).
Tri oracle_contains(const GroupSpec& spec, const TruncatedClosure& closure,
                    const AlgebraElement& x);

}  // namespace goldman
