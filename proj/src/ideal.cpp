#include "goldman/ideal.hpp"

#include <algorithm>
#include <random>

#include "goldman/io.hpp"
#include "goldman/laurent.hpp"

namespace goldman {

const char* to_string(Backend b) {
  switch (b) {
    case Backend::ExactFiniteKernel: return "ExactFiniteKernel";
    case Backend::LaurentRankOne: return "LaurentRankOne";
    default: return "Truncated";
  }
}

Backend backend_for(const GroupSpec& spec, const KernelData& kd) {
  if (kd.kernel_rank == 0) return Backend::ExactFiniteKernel;
  if (kd.kernel_rank == 1 && spec.torsion_orders.empty()) return Backend::LaurentRankOne;
  return Backend::Truncated;
}

namespace {

constexpr long kMaxEnumeration = 200000;

bool kernel_supported(const GroupSpec& spec, const KernelData& kd, const AlgebraElement& x) {
  for (const auto& [k, c] : x.terms)
    if (!in_kernel(spec, kd, k)) return false;
  return true;
}

std::vector<GroupElement> torsion_generators(const GroupSpec& spec) {
  std::vector<GroupElement> out;
  for (size_t i = 0; i < spec.torsion_orders.size(); ++i) {
    GroupElement t = elem_zero(spec);
    t.torsion_coords[i] = 1;
    out.push_back(std::move(t));
  }
  return out;
}

// every element of the (finite) torsion subgroup, ascending
std::vector<GroupElement> torsion_subgroup(const GroupSpec& spec) {
  Int total = 1;
  for (const auto& d : spec.torsion_orders) total *= d;
  if (total > kMaxEnumeration) throw error("torsion subgroup too large to enumerate");
  std::vector<GroupElement> out;
  out.push_back(elem_zero(spec));
  for (size_t i = 0; i < spec.torsion_orders.size(); ++i) {
    size_t n = out.size();
    for (Int t = 1; t < spec.torsion_orders[i]; ++t)
      for (size_t j = 0; j < n; ++j) {
        GroupElement e = out[j];
        e.torsion_coords[i] = t;
        out.push_back(std::move(e));
      }
  }
  std::sort(out.begin(), out.end());
  return out;
}

// every kernel element with lattice coordinates bounded by radius
std::vector<GroupElement> kernel_box(const GroupSpec& spec, const KernelData& kd, long radius) {
  Int total = 1;
  for (long i = 0; i < kd.kernel_rank; ++i) total *= 2 * radius + 1;
  for (const auto& d : spec.torsion_orders) total *= d;
  if (total > kMaxEnumeration) throw error("kernel translate family too large to enumerate");

  std::vector<GroupElement> out = torsion_subgroup(spec);
  for (long j = 0; j < kd.kernel_rank; ++j) {
    size_t n = out.size();
    for (long a = -radius; a <= radius; ++a) {
      if (a == 0) continue;
      GroupElement shift = elem_scale(spec, Int(a), kd.kernel_basis[j]);
      for (size_t i = 0; i < n; ++i) out.push_back(elem_add(spec, out[i], shift));
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

// closure of the span of gens under translation by the torsion subgroup
RowSpace torsion_translation_closure(const GroupSpec& spec,
                                     const std::vector<AlgebraElement>& gens) {
  RowSpace span;
  std::vector<AlgebraElement> work;
  for (const auto& g : gens)
    if (const AlgebraElement* row = span.insert(g)) work.push_back(*row);
  auto tgens = torsion_generators(spec);
  while (!work.empty()) {
    AlgebraElement row = std::move(work.back());
    work.pop_back();
    for (const auto& t : tgens) {
      if (const AlgebraElement* stored = span.insert(translate(spec, t, row)))
        work.push_back(*stored);
    }
  }
  return span;
}

ModuleSpan normalize_module(const GroupSpec& spec, const KernelData& kd,
                            std::vector<AlgebraElement> seeds, Backend backend) {
  std::erase_if(seeds, [](const AlgebraElement& e) { return e.is_zero(); });
  if (seeds.empty()) return ModuleSpan{ModuleSpan::Kind::Zero, {}};
  switch (backend) {
    case Backend::ExactFiniteKernel: {
      RowSpace span = torsion_translation_closure(spec, seeds);
      return ModuleSpan{ModuleSpan::Kind::Gens, span.canonical_basis()};
    }
    case Backend::LaurentRankOne: {
      QPoly g = laurent_ideal_gcd(spec, kd, seeds);
      if (g.is_zero()) return ModuleSpan{ModuleSpan::Kind::Zero, {}};
      return ModuleSpan{ModuleSpan::Kind::Gens, {element_from_qpoly(spec, kd, g)}};
    }
    default: {
      std::sort(seeds.begin(), seeds.end(),
                [](const AlgebraElement& a, const AlgebraElement& b) { return a.terms < b.terms; });
      seeds.erase(std::unique(seeds.begin(), seeds.end()), seeds.end());
      return ModuleSpan{ModuleSpan::Kind::Gens, std::move(seeds)};
    }
  }
}

SubspaceSpan full_v0(const GroupSpec& spec, const KernelData& kd) {
  if (kd.kernel_rank > 0) return SubspaceSpan{true, {}};
  std::vector<AlgebraElement> basis;
  for (const auto& t : torsion_subgroup(spec)) basis.push_back(singleton(t));
  return SubspaceSpan{false, std::move(basis)};
}

ModuleSpan full_v(const GroupSpec& spec, const KernelData& kd) {
  switch (backend_for(spec, kd)) {
    case Backend::ExactFiniteKernel: {
      std::vector<AlgebraElement> basis;
      for (const auto& t : torsion_subgroup(spec)) basis.push_back(singleton(t));
      return ModuleSpan{ModuleSpan::Kind::Gens, std::move(basis)};
    }
    case Backend::LaurentRankOne:
      // the unit ideal: gcd 1
      return ModuleSpan{ModuleSpan::Kind::Gens, {singleton(elem_zero(spec))}};
    default:
      return ModuleSpan{ModuleSpan::Kind::Full, {}};
  }
}

Tri tri_and(Tri a, Tri b) {
  if (a == Tri::False || b == Tri::False) return Tri::False;
  if (a == Tri::Unknown || b == Tri::Unknown) return Tri::Unknown;
  return Tri::True;
}

Tri v_contains(const GroupSpec& spec, const KernelData& kd, const IdealPair& p,
               const AlgebraElement& w) {
  if (w.is_zero()) return Tri::True;
  switch (p.v.kind) {
    case ModuleSpan::Kind::Zero: return Tri::False;
    case ModuleSpan::Kind::Full: return Tri::True;
    case ModuleSpan::Kind::Gens: break;
  }
  switch (p.backend) {
    case Backend::ExactFiniteKernel: {
      RowSpace span;
      for (const auto& g : p.v.gens) span.insert(g);
      return span.contains(w) ? Tri::True : Tri::False;
    }
    case Backend::LaurentRankOne: {
      Laurent g = laurent_from_element(spec, kd, p.v.gens.at(0));
      Laurent f = laurent_from_element(spec, kd, w);
      return laurent_divides(g, f) ? Tri::True : Tri::False;
    }
    default: {
      RowSpace span;
      for (const auto& shift : kernel_box(spec, kd, p.radius))
        for (const auto& g : p.v.gens) span.insert(translate(spec, shift, g));
      return span.contains(w) ? Tri::True : Tri::Unknown;
    }
  }
}

}  // namespace

bool validate_pair(const GroupSpec& spec, const KernelData& kd, const IdealPair& p) {
  for (const auto& b : p.v0.basis)
    if (!kernel_supported(spec, kd, b))
      throw error("validate_pair: V0 has support outside ker mu");
  for (const auto& g : p.v.gens)
    if (!kernel_supported(spec, kd, g))
      throw error("validate_pair: V has support outside ker mu");
  if (mu_is_zero(spec, kd) && p.v.kind != ModuleSpan::Kind::Zero)
    throw error("validate_pair: V must be zero when mu = 0");
  if (p.backend == Backend::ExactFiniteKernel && p.v.kind == ModuleSpan::Kind::Gens) {
    RowSpace span;
    for (const auto& g : p.v.gens) span.insert(g);
    for (const auto& g : p.v.gens)
      for (const auto& t : torsion_generators(spec))
        if (!span.contains(translate(spec, t, g)))
          throw error("validate_pair: V is not stable under ker mu translations");
  }
  if (p.backend == Backend::LaurentRankOne && p.v.kind == ModuleSpan::Kind::Gens) {
    if (p.v.gens.size() != 1)
      throw error("validate_pair: LaurentRankOne stores a single generator");
    Laurent g = laurent_from_element(spec, kd, p.v.gens[0]);
    if (g.is_zero() || g.min_exp != 0 || g.poly.coeffs.back() != 1)
      throw error("validate_pair: generator is not monic with lowest exponent zero");
  }
  return true;
}

IdealPair ideal_from_generators(const GroupSpec& spec, const KernelData& kd,
                                const std::vector<AlgebraElement>& gens, long radius) {
  RowSpace v0;
  std::vector<AlgebraElement> seeds;
  for (const auto& g : gens)
    for (const auto& [c, comp] : decompose(spec, kd, g)) {
      if (c == zero_coset(spec, kd))
        v0.insert(comp);
      else
        seeds.push_back(translate(spec, elem_neg(spec, lift(spec, kd, c)), comp));
    }
  Backend backend = backend_for(spec, kd);
  IdealPair p{SubspaceSpan{false, v0.canonical_basis()},
              normalize_module(spec, kd, std::move(seeds), backend), backend, radius};
  return p;
}

Tri contains(const GroupSpec& spec, const KernelData& kd, const IdealPair& p,
             const AlgebraElement& x) {
  Tri acc = Tri::True;
  const Coset zc = zero_coset(spec, kd);
  for (const auto& [c, comp] : decompose(spec, kd, x)) {
    Tri t;
    if (c == zc) {
      if (p.v0.full) {
        t = Tri::True;
      } else {
        RowSpace span;
        for (const auto& b : p.v0.basis) span.insert(b);
        t = span.contains(comp) ? Tri::True : Tri::False;
      }
    } else {
      t = v_contains(spec, kd, p,
                     translate(spec, elem_neg(spec, lift(spec, kd, c)), comp));
    }
    acc = tri_and(acc, t);
    if (acc == Tri::False) return acc;
  }
  return acc;
}

Tri pair_equal(const GroupSpec& spec, const KernelData& kd, const IdealPair& p,
               const IdealPair& q) {
  // V0: compare canonical reduced bases (expand a symbolic FULL first when
  // the space is finite dimensional)
  auto v0_basis = [&](const IdealPair& a) {
    std::vector<AlgebraElement> src =
        (a.v0.full && kd.kernel_rank == 0) ? full_v0(spec, kd).basis : a.v0.basis;
    RowSpace span;
    for (const auto& b : src) span.insert(b);
    return span.canonical_basis();
  };
  bool pf = p.v0.full && kd.kernel_rank > 0;
  bool qf = q.v0.full && kd.kernel_rank > 0;
  if (pf != qf) return Tri::False;
  if (!pf && v0_basis(p) != v0_basis(q)) return Tri::False;

  // V: canonicalize per backend, fall back to mutual truncated containment
  auto norm_v = [&](const IdealPair& a) -> ModuleSpan {
    if (a.v.kind == ModuleSpan::Kind::Full && a.backend != Backend::Truncated)
      return full_v(spec, kd);
    if (a.v.kind == ModuleSpan::Kind::Gens && a.backend != Backend::Truncated)
      return normalize_module(spec, kd, a.v.gens, a.backend);
    return a.v;
  };
  ModuleSpan pv = norm_v(p), qv = norm_v(q);
  if (pv.kind == ModuleSpan::Kind::Zero || qv.kind == ModuleSpan::Kind::Zero)
    return pv.kind == qv.kind ? Tri::True : Tri::False;
  if (p.backend != Backend::Truncated) {
    return pv.gens == qv.gens ? Tri::True : Tri::False;
  }
  if (pv.kind == ModuleSpan::Kind::Full || qv.kind == ModuleSpan::Kind::Full)
    return pv.kind == qv.kind ? Tri::True : Tri::Unknown;
  Tri acc = Tri::True;
  for (const auto& g : qv.gens) acc = tri_and(acc, v_contains(spec, kd, p, g));
  for (const auto& g : pv.gens) acc = tri_and(acc, v_contains(spec, kd, q, g));
  return acc == Tri::False ? Tri::Unknown : acc;
}

bool is_abelian(const IdealPair& p) { return p.v.kind == ModuleSpan::Kind::Zero; }

IdealPair center(const GroupSpec& spec, const KernelData& kd) {
  return IdealPair{full_v0(spec, kd), ModuleSpan{ModuleSpan::Kind::Zero, {}},
                   backend_for(spec, kd), 4};
}

IdealPair derived_or_lower_central(const GroupSpec& spec, const KernelData& kd, long m) {
  if (m < 1) throw error("derived_or_lower_central: m must be >= 1");
  if (mu_is_zero(spec, kd))
    return IdealPair{SubspaceSpan{false, {}}, ModuleSpan{ModuleSpan::Kind::Zero, {}},
                     backend_for(spec, kd), 4};
  return IdealPair{SubspaceSpan{false, {}}, full_v(spec, kd), backend_for(spec, kd), 4};
}

Enumeration enumerate_if_finite(const GroupSpec& spec, const KernelData& kd) {
  Backend backend = backend_for(spec, kd);
  bool h_trivial = spec.free_rank == 0 && spec.torsion_orders.empty();
  bool nondegenerate = kd.kernel_rank == 0 && spec.torsion_orders.empty();

  Enumeration e;
  AlgebraElement unit = singleton(elem_zero(spec));
  if (h_trivial) {
    e.finite = true;
    e.ideals.push_back(IdealPair{SubspaceSpan{false, {}}, {ModuleSpan::Kind::Zero, {}}, backend, 4});
    e.ideals.push_back(IdealPair{SubspaceSpan{false, {unit}}, {ModuleSpan::Kind::Zero, {}}, backend, 4});
    return e;
  }
  if (nondegenerate) {
    e.finite = true;
    e.ideals.push_back(IdealPair{SubspaceSpan{false, {}}, {ModuleSpan::Kind::Zero, {}}, backend, 4});
    e.ideals.push_back(IdealPair{SubspaceSpan{false, {unit}}, {ModuleSpan::Kind::Zero, {}}, backend, 4});
    e.ideals.push_back(IdealPair{SubspaceSpan{false, {}}, {ModuleSpan::Kind::Gens, {unit}}, backend, 4});
    e.ideals.push_back(IdealPair{SubspaceSpan{false, {unit}}, {ModuleSpan::Kind::Gens, {unit}}, backend, 4});
    return e;
  }
  // dim Q(ker mu) >= 2: the lines spanned by [0] + c [k] give infinitely
  // many distinct V0
  e.finite = false;
  IdealPair sample = infinite_family_member(spec, kd, 1);
  e.infinite_witness =
      "V0 = span{ " + serialize_element(sub(sample.v0.basis[0], unit)) +
      " scaled by c, added to " + serialize_element(unit) + " }, c in Q; V = ZERO";
  return e;
}

IdealPair infinite_family_member(const GroupSpec& spec, const KernelData& kd, const Rat& c) {
  GroupElement k;
  if (kd.kernel_rank > 0)
    k = kd.kernel_basis[0];
  else if (!spec.torsion_orders.empty())
    k = torsion_generators(spec)[0];
  else
    throw error("infinite_family_member: ker mu is trivial");
  AlgebraElement b = singleton(elem_zero(spec));
  b.add_term(k, c);
  return IdealPair{SubspaceSpan{false, {b}}, ModuleSpan{ModuleSpan::Kind::Zero, {}},
                   backend_for(spec, kd), 4};
}

namespace {

long rnd(std::mt19937_64& rng, long lo, long hi) {
  return lo + (long)(rng() % (unsigned long)(hi - lo + 1));
}

GroupElement random_element(const GroupSpec& spec, std::mt19937_64& rng, long bound) {
  GroupElement x = elem_zero(spec);
  for (auto& c : x.free_coords) c = rnd(rng, -bound, bound);
  for (size_t i = 0; i < x.torsion_coords.size(); ++i)
    x.torsion_coords[i] = rnd(rng, 0, spec.torsion_orders[i].get_si() - 1);
  return x;
}

GroupElement random_nonkernel(const GroupSpec& spec, const KernelData& kd,
                              std::mt19937_64& rng, long bound) {
  for (int tries = 0; tries < 1000; ++tries) {
    GroupElement x = random_element(spec, rng, bound);
    if (!in_kernel(spec, kd, x)) return x;
  }
  Coset c = zero_coset(spec, kd);
  if (c.empty()) throw error("random_nonkernel: mu = 0");
  c[0] = 1;
  return lift(spec, kd, c);
}

GroupElement random_kernel_element(const GroupSpec& spec, const KernelData& kd,
                                   std::mt19937_64& rng, long bound) {
  GroupElement x = elem_zero(spec);
  for (const auto& k : kd.kernel_basis)
    x = elem_add(spec, x, elem_scale(spec, Int(rnd(rng, -bound, bound)), k));
  for (size_t i = 0; i < x.torsion_coords.size(); ++i)
    x.torsion_coords[i] = rnd(rng, 0, spec.torsion_orders[i].get_si() - 1);
  return x;
}

}  // namespace

std::optional<ConverseCounterexample> converse_witness_check(
    const GroupSpec& spec, const KernelData& kd, const IdealPair& p, long samples,
    unsigned long seed) {
  if (p.v.kind == ModuleSpan::Kind::Zero) return std::nullopt;
  std::mt19937_64 rng(seed);
  for (long i = 0; i < samples; ++i) {
    // sample v in V: kernel translates of module generators (or arbitrary
    // kernel-supported elements when V is the whole of Q(ker mu))
    AlgebraElement v;
    if (p.v.kind == ModuleSpan::Kind::Full) {
      long nterms = rnd(rng, 1, 3);
      for (long t = 0; t < nterms; ++t)
        v.add_term(random_kernel_element(spec, kd, rng, 2), Rat(rnd(rng, -3, 3)));
    } else {
      long picks = rnd(rng, 1, 2);
      for (long t = 0; t < picks; ++t) {
        const AlgebraElement& g = p.v.gens[rnd(rng, 0, (long)p.v.gens.size() - 1)];
        GroupElement shift = random_kernel_element(spec, kd, rng, 2);
        v.axpy(Rat(rnd(rng, -3, 3)), translate(spec, shift, g));
      }
    }
    GroupElement x = random_nonkernel(spec, kd, rng, 3);
    GroupElement y = random_element(spec, rng, 3);
    AlgebraElement value = bracket(spec, translate(spec, x, v), singleton(y));
    if (contains(spec, kd, p, value) == Tri::False)
      return ConverseCounterexample{std::move(v), std::move(x), std::move(y), std::move(value)};
  }
  return std::nullopt;
}

}  // namespace goldman
