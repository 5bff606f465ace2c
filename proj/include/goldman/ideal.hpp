#pragma once

#include <optional>
#include <string>
#include <vector>

#include "goldman/algebra.hpp"
#include "goldman/oracle.hpp"

namespace goldman {

// Membership backend for the translation-stable part V.
//   ExactFiniteKernel: kernel rank 0; Q(ker mu) is finite dimensional.
//   LaurentRankOne:    kernel rank 1, no torsion; V is an ideal of the
//                      Laurent ring Q[t, t^-1], a PID.
//   Truncated:         everything else; three-valued answers within a
//                      translation radius.
enum class Backend { ExactFiniteKernel, LaurentRankOne, Truncated };
const char* to_string(Backend b);
Backend backend_for(const GroupSpec& spec, const KernelData& kd);

// Plain subspace of Q(ker mu). `full` marks the whole space and is only
// used when that space is infinite dimensional (kernel rank >= 1);
// otherwise the basis is explicit and fully reduced.
struct SubspaceSpan {
  bool full = false;
  std::vector<AlgebraElement> basis;
};

// Translation-stable subspace of Q(ker mu), presented by module generators
// (each generator stands for the span of all its ker mu-translates).
struct ModuleSpan {
  enum class Kind { Zero, Full, Gens };
  Kind kind = Kind::Zero;
  std::vector<AlgebraElement> gens;
};

// The classification datum: the ideal V0 (+) sum of T(xbar)(V) over
// nonzero cosets.
struct IdealPair {
  SubspaceSpan v0;
  ModuleSpan v;
  Backend backend = Backend::ExactFiniteKernel;
  long radius = 4;  // truncation radius, Truncated backend only
};

bool validate_pair(const GroupSpec& spec, const KernelData& kd, const IdealPair& p);

IdealPair ideal_from_generators(const GroupSpec& spec, const KernelData& kd,
                                const std::vector<AlgebraElement>& gens, long radius = 4);

Tri contains(const GroupSpec& spec, const KernelData& kd, const IdealPair& p,
             const AlgebraElement& x);

Tri pair_equal(const GroupSpec& spec, const KernelData& kd, const IdealPair& p,
               const IdealPair& q);

// h is abelian iff V = 0.
bool is_abelian(const IdealPair& p);

// z(QH) = Q(ker mu).
IdealPair center(const GroupSpec& spec, const KernelData& kd);

// Derived and lower central series agree: Q(H \ ker mu) for every m >= 1
// when mu != 0, the zero ideal otherwise.
IdealPair derived_or_lower_central(const GroupSpec& spec, const KernelData& kd, long m);

struct Enumeration {
  bool finite = false;
  std::vector<IdealPair> ideals;
  std::string infinite_witness;  // description of an infinite family
};
Enumeration enumerate_if_finite(const GroupSpec& spec, const KernelData& kd);

// Member of the infinite family exhibited when the ideal lattice is not
// finite: V0 spanned by [0] + c [k] for a fixed nonzero kernel element k.
IdealPair infinite_family_member(const GroupSpec& spec, const KernelData& kd, const Rat& c);

struct ConverseCounterexample {
  AlgebraElement v;
  GroupElement x;
  GroupElement y;
  AlgebraElement value;  // bracket(translate(x, v), [y])
};

// Replays the converse direction of the classification on random samples:
// bracket(T(x)(v), [y]) must stay inside the ideal for v in V, x outside
// ker mu, y anywhere. Returns a counterexample if membership fails.
std::optional<ConverseCounterexample> converse_witness_check(
    const GroupSpec& spec, const KernelData& kd, const IdealPair& p, long samples,
    unsigned long seed);

}  // namespace goldman
