#include "goldman/group.hpp"

#include <utility>

namespace goldman {

const GroupSpec& validate_spec(const GroupSpec& spec) {
  long r = spec.free_rank;
  if (r < 0) throw error("validate_spec: negative free rank");
  if ((long)spec.form.size() != r) throw error("validate_spec: form must be free_rank x free_rank");
  for (long i = 0; i < r; ++i) {
    if ((long)spec.form[i].size() != r)
      throw error("validate_spec: form must be free_rank x free_rank");
    if (spec.form[i][i] != 0) throw error("validate_spec: form has nonzero diagonal");
    for (long j = 0; j < r; ++j)
      if (spec.form[i][j] != -spec.form[j][i])
        throw error("validate_spec: form is not skew-symmetric");
  }
  for (const auto& d : spec.torsion_orders)
    if (d < 2) throw error("validate_spec: torsion orders must be >= 2");
  return spec;
}

int compare(const GroupElement& a, const GroupElement& b) {
  for (size_t i = 0; i < a.free_coords.size() && i < b.free_coords.size(); ++i) {
    int c = cmp(a.free_coords[i], b.free_coords[i]);
    if (c != 0) return c;
  }
  if (a.free_coords.size() != b.free_coords.size())
    return a.free_coords.size() < b.free_coords.size() ? -1 : 1;
  for (size_t i = 0; i < a.torsion_coords.size() && i < b.torsion_coords.size(); ++i) {
    int c = cmp(a.torsion_coords[i], b.torsion_coords[i]);
    if (c != 0) return c;
  }
  if (a.torsion_coords.size() != b.torsion_coords.size())
    return a.torsion_coords.size() < b.torsion_coords.size() ? -1 : 1;
  return 0;
}

bool operator<(const GroupElement& a, const GroupElement& b) { return compare(a, b) < 0; }

void check_conformant(const GroupSpec& spec, const GroupElement& x) {
  if ((long)x.free_coords.size() != spec.free_rank ||
      x.torsion_coords.size() != spec.torsion_orders.size())
    throw error("group element does not conform to the spec (dimension mismatch)");
}

namespace {

Int mod_reduce(const Int& a, const Int& d) {
  Int r;
  mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), d.get_mpz_t());
  return r;
}

}  // namespace

GroupElement make_element(const GroupSpec& spec, std::vector<Int> free_coords,
                          std::vector<Int> torsion_coords) {
  if (torsion_coords.empty()) torsion_coords.assign(spec.torsion_orders.size(), 0);
  GroupElement x{std::move(free_coords), std::move(torsion_coords)};
  check_conformant(spec, x);
  for (size_t i = 0; i < x.torsion_coords.size(); ++i)
    x.torsion_coords[i] = mod_reduce(x.torsion_coords[i], spec.torsion_orders[i]);
  return x;
}

GroupElement elem_zero(const GroupSpec& spec) {
  return GroupElement{std::vector<Int>(spec.free_rank, 0),
                      std::vector<Int>(spec.torsion_orders.size(), 0)};
}

GroupElement elem_add(const GroupSpec& spec, const GroupElement& x, const GroupElement& y) {
  check_conformant(spec, x);
  check_conformant(spec, y);
  GroupElement z = x;
  for (long i = 0; i < spec.free_rank; ++i) z.free_coords[i] += y.free_coords[i];
  for (size_t i = 0; i < z.torsion_coords.size(); ++i)
    z.torsion_coords[i] = mod_reduce(z.torsion_coords[i] + y.torsion_coords[i],
                                     spec.torsion_orders[i]);
  return z;
}

GroupElement elem_neg(const GroupSpec& spec, const GroupElement& x) {
  check_conformant(spec, x);
  GroupElement z = x;
  for (auto& c : z.free_coords) c = -c;
  for (size_t i = 0; i < z.torsion_coords.size(); ++i)
    z.torsion_coords[i] = mod_reduce(-z.torsion_coords[i], spec.torsion_orders[i]);
  return z;
}

GroupElement elem_sub(const GroupSpec& spec, const GroupElement& x, const GroupElement& y) {
  return elem_add(spec, x, elem_neg(spec, y));
}

GroupElement elem_scale(const GroupSpec& spec, const Int& c, const GroupElement& x) {
  check_conformant(spec, x);
  GroupElement z = x;
  for (auto& v : z.free_coords) v *= c;
  for (size_t i = 0; i < z.torsion_coords.size(); ++i)
    z.torsion_coords[i] = mod_reduce(c * z.torsion_coords[i], spec.torsion_orders[i]);
  return z;
}

Int pairing(const GroupSpec& spec, const GroupElement& x, const GroupElement& y) {
  check_conformant(spec, x);
  check_conformant(spec, y);
  Int acc = 0;
  for (long i = 0; i < spec.free_rank; ++i) {
    if (x.free_coords[i] == 0) continue;
    Int row = 0;
    for (long j = 0; j < spec.free_rank; ++j)
      if (spec.form[i][j] != 0) row += spec.form[i][j] * y.free_coords[j];
    acc += x.free_coords[i] * row;
  }
  return acc;
}

KernelData kernel_data(const GroupSpec& spec) {
  validate_spec(spec);
  KernelDecomposition dec = integer_kernel(spec.form);
  KernelData kd;
  kd.kernel_rank = spec.free_rank - dec.rank;
  for (const auto& col : dec.kernel_cols) {
    GroupElement k{col, std::vector<Int>(spec.torsion_orders.size(), 0)};
    kd.kernel_basis.push_back(std::move(k));
  }
  kd.projection = std::move(dec.projection);
  kd.section = std::move(dec.section);
  return kd;
}

bool mu_is_zero(const GroupSpec& spec, const KernelData& kd) {
  return spec.free_rank == kd.kernel_rank;
}

bool in_kernel(const GroupSpec& spec, const KernelData& kd, const GroupElement& x) {
  check_conformant(spec, x);
  for (const auto& row : kd.projection) {
    Int acc = 0;
    for (long j = 0; j < spec.free_rank; ++j)
      if (row[j] != 0) acc += row[j] * x.free_coords[j];
    if (acc != 0) return false;
  }
  return true;
}

Coset coset_rep(const GroupSpec& spec, const KernelData& kd, const GroupElement& x) {
  check_conformant(spec, x);
  return mat_vec(kd.projection, x.free_coords);
}

Coset zero_coset(const GroupSpec& spec, const KernelData& kd) {
  return Coset(spec.free_rank - kd.kernel_rank, 0);
}

GroupElement lift(const GroupSpec& spec, const KernelData& kd, const Coset& c) {
  if ((long)c.size() != spec.free_rank - kd.kernel_rank)
    throw error("lift: coset coordinates have the wrong length");
  return GroupElement{mat_vec(kd.section, c),
                      std::vector<Int>(spec.torsion_orders.size(), 0)};
}

GroupElement key_lemma_witness(const GroupSpec& spec, const KernelData& kd,
                               const std::vector<GroupElement>& xs) {
  if (xs.empty()) throw error("key_lemma_witness: empty input");
  for (const auto& x : xs)
    if (in_kernel(spec, kd, x))
      throw error("key_lemma_witness: an input element lies in ker mu");

  // first standard free generator pairing nonzero with x; exists since
  // x is outside ker mu and torsion pairs to zero
  auto base_witness = [&](const GroupElement& x) {
    for (long i = 0; i < spec.free_rank; ++i) {
      GroupElement e = elem_zero(spec);
      e.free_coords[i] = 1;
      if (pairing(spec, x, e) != 0) return e;
    }
    throw error("key_lemma_witness: internal: no generator pairs with a non-kernel element");
  };

  GroupElement u = base_witness(xs[0]);
  for (size_t n = 1; n < xs.size(); ++n) {
    if (pairing(spec, xs[n], u) != 0) continue;
    GroupElement v = base_witness(xs[n]);
    Int s = 1;
    for (size_t i = 0; i < n; ++i) s += abs(pairing(spec, xs[i], u));
    u = elem_add(spec, u, elem_scale(spec, s, v));
  }
  return u;
}

}  // namespace goldman
