#pragma once

#include <string>

#include "goldman/ideal.hpp"

namespace goldman {

// Text formats. All serializers emit canonical forms: terms sorted by key,
// coefficients reduced with positive denominators, deterministic layout.
//
//   group spec:     rank r / optional "torsion d1 d2 ..." / "form" / r rows
//   group element:  (a1,...,ar;t1,...,tk), torsion block omitted when k = 0
//   algebra element: c*[coords] terms joined by + or -, or "0"
//   ideal pair:     V0: / V: / backend: lines

GroupSpec parse_spec(const std::string& text);
std::string serialize_spec(const GroupSpec& spec);

GroupElement parse_group_element(const GroupSpec& spec, const std::string& text);
std::string serialize_group_element(const GroupElement& x);
std::string serialize_support_key(const GroupElement& x);  // [coords]
std::string serialize_coset(const Coset& c);

AlgebraElement parse_element(const GroupSpec& spec, const std::string& text);
std::string serialize_element(const AlgebraElement& x);

std::string serialize_rational(const Rat& c);
std::string serialize_word(const AdWord& w);

std::string serialize_ideal_pair(const IdealPair& p);
IdealPair parse_ideal_pair(const GroupSpec& spec, const KernelData& kd,
                           const std::string& text);

}  // namespace goldman
