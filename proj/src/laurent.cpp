#include "goldman/laurent.hpp"

#include <algorithm>

namespace goldman {

void QPoly::normalize() {
  while (!coeffs.empty() && coeffs.back() == 0) coeffs.pop_back();
}

QPoly qpoly_mul(const QPoly& a, const QPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  QPoly c;
  c.coeffs.assign(a.coeffs.size() + b.coeffs.size() - 1, Rat(0));
  for (size_t i = 0; i < a.coeffs.size(); ++i) {
    if (a.coeffs[i] == 0) continue;
    for (size_t j = 0; j < b.coeffs.size(); ++j)
      c.coeffs[i + j] += a.coeffs[i] * b.coeffs[j];
  }
  c.normalize();
  return c;
}

std::pair<QPoly, QPoly> qpoly_divmod(const QPoly& a, const QPoly& b) {
  if (b.is_zero()) throw error("qpoly_divmod: division by zero");
  QPoly r = a, q;
  long db = b.degree();
  if (r.degree() >= db) q.coeffs.assign(r.degree() - db + 1, Rat(0));
  while (!r.is_zero() && r.degree() >= db) {
    long shift = r.degree() - db;
    Rat c = r.coeffs.back() / b.coeffs.back();
    q.coeffs[shift] = c;
    for (long i = 0; i <= db; ++i) r.coeffs[shift + i] -= c * b.coeffs[i];
    r.normalize();
  }
  q.normalize();
  return {q, r};
}

bool qpoly_divides(const QPoly& b, const QPoly& a) {
  if (a.is_zero()) return true;
  if (b.is_zero()) return false;
  return qpoly_divmod(a, b).second.is_zero();
}

QPoly qpoly_monic(QPoly a) {
  a.normalize();
  if (a.is_zero()) return a;
  Rat lead = a.coeffs.back();
  for (auto& c : a.coeffs) c /= lead;
  return a;
}

QPoly qpoly_gcd(QPoly a, QPoly b) {
  a = qpoly_monic(std::move(a));
  b = qpoly_monic(std::move(b));
  while (!b.is_zero()) {
    QPoly r = qpoly_divmod(a, b).second;
    a = std::move(b);
    b = qpoly_monic(std::move(r));
  }
  return a;
}

namespace {

// kernel-lattice coordinate of a kernel element: x = a * k for the single
// kernel basis vector k
Int exponent_of(const GroupSpec& spec, const KernelData& kd, const GroupElement& x) {
  const GroupElement& k = kd.kernel_basis.at(0);
  long idx = -1;
  for (long i = 0; i < spec.free_rank; ++i)
    if (k.free_coords[i] != 0) { idx = i; break; }
  if (idx < 0) throw error("laurent: zero kernel basis vector");
  Int a;
  mpz_class rem;
  mpz_fdiv_qr(a.get_mpz_t(), rem.get_mpz_t(), x.free_coords[idx].get_mpz_t(),
              k.free_coords[idx].get_mpz_t());
  if (rem != 0) throw error("laurent: element not supported in the kernel lattice");
  for (long i = 0; i < spec.free_rank; ++i)
    if (x.free_coords[i] != a * k.free_coords[i])
      throw error("laurent: element not supported in the kernel lattice");
  return a;
}

constexpr long kMaxExponentSpan = 1 << 20;

}  // namespace

Laurent laurent_from_element(const GroupSpec& spec, const KernelData& kd,
                             const AlgebraElement& x) {
  if (kd.kernel_rank != 1 || !spec.torsion_orders.empty())
    throw error("laurent: requires kernel rank 1 and no torsion");
  Laurent f;
  if (x.is_zero()) return f;
  std::vector<std::pair<Int, Rat>> exps;
  for (const auto& [k, c] : x.terms) exps.emplace_back(exponent_of(spec, kd, k), c);
  Int lo = exps[0].first, hi = exps[0].first;
  for (const auto& [e, c] : exps) {
    lo = std::min(lo, e);
    hi = std::max(hi, e);
  }
  Int span = hi - lo;
  if (span > kMaxExponentSpan) throw error("laurent: exponent span too large");
  f.min_exp = lo;
  f.poly.coeffs.assign(span.get_si() + 1, Rat(0));
  for (const auto& [e, c] : exps) f.poly.coeffs[Int(e - lo).get_si()] = c;
  f.poly.normalize();
  return f;
}

AlgebraElement element_from_qpoly(const GroupSpec& spec, const KernelData& kd,
                                  const QPoly& p) {
  if (kd.kernel_rank != 1 || !spec.torsion_orders.empty())
    throw error("laurent: requires kernel rank 1 and no torsion");
  const GroupElement& k = kd.kernel_basis.at(0);
  AlgebraElement x;
  for (size_t i = 0; i < p.coeffs.size(); ++i)
    if (p.coeffs[i] != 0) x.add_term(elem_scale(spec, Int((long)i), k), p.coeffs[i]);
  return x;
}

bool laurent_divides(const Laurent& g, const Laurent& f) {
  if (f.is_zero()) return true;
  if (g.is_zero()) return false;
  return qpoly_divides(g.poly, f.poly);
}

QPoly laurent_ideal_gcd(const GroupSpec& spec, const KernelData& kd,
                        const std::vector<AlgebraElement>& gens) {
  QPoly g;
  for (const auto& e : gens) {
    Laurent f = laurent_from_element(spec, kd, e);
    if (f.is_zero()) continue;
    g = qpoly_gcd(std::move(g), f.poly);
  }
  return g;
}

}  // namespace goldman
