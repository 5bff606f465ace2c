#pragma once

#include <map>
#include <variant>
#include <vector>

#include "goldman/group.hpp"

namespace goldman {

using Rat = mpq_class;

// Finitely supported map H -> Q; an element of QH. Zero coefficients are
// never stored and keys are canonical group elements, so equality of the
// underlying maps is equality in QH.
struct AlgebraElement {
  std::map<GroupElement, Rat> terms;

  bool operator==(const AlgebraElement&) const = default;
  bool is_zero() const { return terms.empty(); }
  Rat coeff(const GroupElement& x) const {
    auto it = terms.find(x);
    return it == terms.end() ? Rat(0) : it->second;
  }
  void add_term(const GroupElement& x, const Rat& c) {
    if (c == 0) return;
    auto [it, fresh] = terms.emplace(x, c);
    if (!fresh) {
      it->second += c;
      if (it->second == 0) terms.erase(it);
    }
  }
  // this += c * other
  void axpy(const Rat& c, const AlgebraElement& other) {
    if (c == 0) return;
    for (const auto& [x, cx] : other.terms) add_term(x, c * cx);
  }
};

AlgebraElement singleton(const GroupElement& x, const Rat& c = 1);
AlgebraElement add(const AlgebraElement& x, const AlgebraElement& y);
AlgebraElement sub(const AlgebraElement& x, const AlgebraElement& y);
AlgebraElement scale(const Rat& c, const AlgebraElement& x);
inline AlgebraElement operator+(const AlgebraElement& x, const AlgebraElement& y) { return add(x, y); }
inline AlgebraElement operator-(const AlgebraElement& x, const AlgebraElement& y) { return sub(x, y); }
inline AlgebraElement operator*(const Rat& c, const AlgebraElement& x) { return scale(c, x); }

// [X, Y], extended bilinearly from [[x],[y]] = <x,y>[x+y].
AlgebraElement bracket(const GroupSpec& spec, const AlgebraElement& x, const AlgebraElement& y);

// T(x): support shift by x, coefficients unchanged.
AlgebraElement translate(const GroupSpec& spec, const GroupElement& x, const AlgebraElement& y);

// ad([z1]) o ... o ad([zm]); factors[0] is applied last.
struct AdWord {
  std::vector<GroupElement> factors;
};
AdWord concat(const AdWord& outer, const AdWord& inner);  // inner applied first
AlgebraElement ad_apply(const GroupSpec& spec, const AdWord& w, const AlgebraElement& x);

// Scalar picked up by a homogeneous component with representative rep when
// the word is replayed on it. Integer because every factor is a pairing.
Int word_factor(const GroupSpec& spec, const AdWord& w, const GroupElement& rep);

// Splitting of X by ker mu-degree; components sum to X, each supported in
// one coset, none zero.
std::map<Coset, AlgebraElement> decompose(const GroupSpec& spec, const KernelData& kd,
                                          const AlgebraElement& x);

bool is_homogeneous(const GroupSpec& spec, const KernelData& kd, const AlgebraElement& x);

// Certificate that a component of X lies in any ideal containing X:
// ad_apply(word, X) == scalar * component, scalar != 0.
struct ComponentExtraction {
  AdWord word;
  Rat scalar;
  AlgebraElement component;
};

// Degree-zero variant: one certificate per nonzero coset of X, and the
// degree-zero component recovered as X minus the sum of the others.
struct ZeroComponentExtraction {
  std::vector<std::pair<Coset, ComponentExtraction>> nonzero_parts;
  AlgebraElement component;
};

using Extraction = std::variant<ComponentExtraction, ZeroComponentExtraction>;

Extraction extract_component(const GroupSpec& spec, const KernelData& kd,
                             const AlgebraElement& x, const Coset& target);

// Degree transport certificate: ad_apply(word, X) == scalar * T(y - x)(X)
// with x = lift(coset of X) and scalar = (<z,x><y,z>)^2 > 0.
struct TransportResult {
  AdWord word;
  Rat scalar;
  AlgebraElement result;  // the replayed value scalar * T(y-x)(X)
};

TransportResult transport(const GroupSpec& spec, const KernelData& kd,
                          const AlgebraElement& x, const GroupElement& y);

// Exact row echelon span of algebra elements, pivoting on the smallest
// support key in the canonical order.
class RowSpace {
 public:
  // returns a pointer to the stored reduced row, or nullptr if v was
  // already in the span
  const AlgebraElement* insert(AlgebraElement v);
  bool contains(AlgebraElement v) const;
  AlgebraElement reduce(AlgebraElement v) const;
  long dimension() const { return (long)rows_.size(); }
  // fully reduced canonical basis, ascending pivot order
  std::vector<AlgebraElement> canonical_basis() const;

 private:
  std::map<GroupElement, AlgebraElement> rows_;
};

}  // namespace goldman
