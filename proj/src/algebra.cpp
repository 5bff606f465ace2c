#include "goldman/algebra.hpp"

#include <algorithm>
#include <utility>

namespace goldman {

AlgebraElement singleton(const GroupElement& x, const Rat& c) {
  AlgebraElement e;
  e.add_term(x, c);
  return e;
}

AlgebraElement add(const AlgebraElement& x, const AlgebraElement& y) {
  AlgebraElement z = x;
  z.axpy(1, y);
  return z;
}

AlgebraElement sub(const AlgebraElement& x, const AlgebraElement& y) {
  AlgebraElement z = x;
  z.axpy(-1, y);
  return z;
}

AlgebraElement scale(const Rat& c, const AlgebraElement& x) {
  AlgebraElement z;
  if (c == 0) return z;
  for (const auto& [k, ck] : x.terms) z.terms.emplace(k, c * ck);
  return z;
}

AlgebraElement bracket(const GroupSpec& spec, const AlgebraElement& x, const AlgebraElement& y) {
  AlgebraElement z;
  for (const auto& [a, ca] : x.terms)
    for (const auto& [b, cb] : y.terms) {
      Int p = pairing(spec, a, b);
      if (p == 0) continue;
      z.add_term(elem_add(spec, a, b), ca * cb * Rat(p));
    }
  return z;
}

AlgebraElement translate(const GroupSpec& spec, const GroupElement& x, const AlgebraElement& y) {
  check_conformant(spec, x);
  AlgebraElement z;
  for (const auto& [k, c] : y.terms) z.terms.emplace(elem_add(spec, x, k), c);
  return z;
}

AdWord concat(const AdWord& outer, const AdWord& inner) {
  AdWord w = outer;
  w.factors.insert(w.factors.end(), inner.factors.begin(), inner.factors.end());
  return w;
}

AlgebraElement ad_apply(const GroupSpec& spec, const AdWord& w, const AlgebraElement& x) {
  AlgebraElement cur = x;
  for (auto it = w.factors.rbegin(); it != w.factors.rend(); ++it)
    cur = bracket(spec, singleton(*it), cur);
  return cur;
}

Int word_factor(const GroupSpec& spec, const AdWord& w, const GroupElement& rep) {
  Int f = 1;
  GroupElement cur = rep;
  for (auto it = w.factors.rbegin(); it != w.factors.rend(); ++it) {
    f *= pairing(spec, *it, cur);
    if (f == 0) return f;
    cur = elem_add(spec, *it, cur);
  }
  return f;
}

std::map<Coset, AlgebraElement> decompose(const GroupSpec& spec, const KernelData& kd,
                                          const AlgebraElement& x) {
  std::map<Coset, AlgebraElement> out;
  for (const auto& [k, c] : x.terms) out[coset_rep(spec, kd, k)].add_term(k, c);
  return out;
}

bool is_homogeneous(const GroupSpec& spec, const KernelData& kd, const AlgebraElement& x) {
  return decompose(spec, kd, x).size() <= 1;
}

namespace {

// single elimination word: kills the component at coset j, keeps target k.
// Word A when <x_j, x_k> != 0, else word B through a Key Lemma witness.
AdWord elimination_word(const GroupSpec& spec, const KernelData& kd,
                        const GroupElement& xj, const GroupElement& xk) {
  if (pairing(spec, xj, xk) != 0)
    return AdWord{{elem_neg(spec, xj), xj}};
  GroupElement z =
      key_lemma_witness(spec, kd, {xk, xj, elem_sub(spec, xk, xj)});
  return AdWord{{elem_sub(spec, xj, z), z, elem_neg(spec, z), elem_sub(spec, z, xj)}};
}

ComponentExtraction extract_nonzero(const GroupSpec& spec, const KernelData& kd,
                                    const AlgebraElement& x, const Coset& target) {
  auto comps = decompose(spec, kd, x);
  auto hit = comps.find(target);
  if (hit == comps.end()) throw error("extract_component: target coset absent from the element");

  const Coset zc = zero_coset(spec, kd);
  GroupElement xk = lift(spec, kd, target);
  AlgebraElement cur = x;
  AdWord word;
  Rat scalar = 1;

  while (true) {
    auto cc = decompose(spec, kd, cur);
    const Coset* next = nullptr;
    for (const auto& [c, comp] : cc)
      if (c != target && c != zc) { next = &c; break; }  // smallest coset first
    if (!next) {
      if (cc.count(zc) && cc.size() > 1) {
        // a degree-zero component survives only if no word has been applied
        // yet; one more word kills it and keeps the target
        GroupElement z = key_lemma_witness(spec, kd, {xk});
        AdWord w{{elem_neg(spec, z), z}};
        Int f = word_factor(spec, w, xk);
        scalar *= Rat(f);
        cur = ad_apply(spec, w, cur);
        word = concat(w, word);
        continue;
      }
      break;
    }
    GroupElement xj = lift(spec, kd, *next);
    AdWord w = elimination_word(spec, kd, xj, xk);
    Int f = word_factor(spec, w, xk);
    if (f == 0) throw error("extract_component: internal: elimination word lost the target");
    scalar *= Rat(f);
    cur = ad_apply(spec, w, cur);
    word = concat(w, word);
  }

  if (cur != scale(scalar, hit->second))
    throw error("extract_component: internal: replay does not match the certificate");
  return ComponentExtraction{std::move(word), std::move(scalar), hit->second};
}

}  // namespace

Extraction extract_component(const GroupSpec& spec, const KernelData& kd,
                             const AlgebraElement& x, const Coset& target) {
  if (x.is_zero()) throw error("extract_component: zero element");
  const Coset zc = zero_coset(spec, kd);
  if (target != zc) return extract_nonzero(spec, kd, x, target);

  auto comps = decompose(spec, kd, x);
  if (!comps.count(zc)) throw error("extract_component: target coset absent from the element");
  ZeroComponentExtraction out;
  AlgebraElement rest;
  for (const auto& [c, comp] : comps) {
    if (c == zc) continue;
    out.nonzero_parts.emplace_back(c, extract_nonzero(spec, kd, x, c));
    rest.axpy(1, comp);
  }
  out.component = sub(x, rest);
  return out;
}

TransportResult transport(const GroupSpec& spec, const KernelData& kd,
                          const AlgebraElement& x, const GroupElement& y) {
  auto comps = decompose(spec, kd, x);
  if (comps.size() != 1) throw error("transport: element is not homogeneous and nonzero");
  const Coset& c = comps.begin()->first;
  if (c == zero_coset(spec, kd)) throw error("transport: element has degree zero");
  if (in_kernel(spec, kd, y)) throw error("transport: target lies in ker mu");

  GroupElement xr = lift(spec, kd, c);
  GroupElement z = key_lemma_witness(spec, kd, {xr, y});
  AdWord word{{elem_neg(spec, z), y, elem_neg(spec, xr), z}};
  Rat scalar = Rat(pairing(spec, z, xr) * pairing(spec, y, z));
  scalar *= scalar;

  AlgebraElement result = scale(scalar, translate(spec, elem_sub(spec, y, xr), x));
  if (ad_apply(spec, word, x) != result)
    throw error("transport: internal: replay does not match the certificate");
  return TransportResult{std::move(word), std::move(scalar), std::move(result)};
}

const AlgebraElement* RowSpace::insert(AlgebraElement v) {
  v = reduce(std::move(v));
  if (v.is_zero()) return nullptr;
  GroupElement pivot = v.terms.begin()->first;
  Rat lead = v.terms.begin()->second;
  for (auto& [k, c] : v.terms) c /= lead;
  auto [it, fresh] = rows_.emplace(std::move(pivot), std::move(v));
  (void)fresh;
  return &it->second;
}

AlgebraElement RowSpace::reduce(AlgebraElement v) const {
  auto it = v.terms.begin();
  while (it != v.terms.end()) {
    auto rit = rows_.find(it->first);
    if (rit == rows_.end()) {
      ++it;
      continue;
    }
    Rat c = it->second;
    v.axpy(-c, rit->second);
    it = v.terms.lower_bound(rit->first);
  }
  return v;
}

bool RowSpace::contains(AlgebraElement v) const { return reduce(std::move(v)).is_zero(); }

std::vector<AlgebraElement> RowSpace::canonical_basis() const {
  // back-substitute so every pivot appears in exactly one row
  std::vector<AlgebraElement> basis;
  for (auto it = rows_.rbegin(); it != rows_.rend(); ++it) {
    AlgebraElement row = it->second;
    for (const auto& done : basis) {
      const GroupElement& p = done.terms.begin()->first;
      Rat c = row.coeff(p);
      if (c != 0) row.axpy(-c, done);
    }
    basis.push_back(std::move(row));
  }
  std::reverse(basis.begin(), basis.end());
  return basis;
}

}  // namespace goldman
