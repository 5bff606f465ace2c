#include "goldman/oracle.hpp"

#include <deque>

namespace goldman {

const char* to_string(Tri t) {
  switch (t) {
    case Tri::False: return "false";
    case Tri::True: return "true";
    default: return "unknown";
  }
}

bool in_box(const GroupSpec& spec, const Box& box, const GroupElement& x) {
  check_conformant(spec, x);
  for (const auto& c : x.free_coords)
    if (abs(c) > box.radius) return false;
  return true;
}

bool in_box(const GroupSpec& spec, const Box& box, const AlgebraElement& x) {
  for (const auto& [k, c] : x.terms)
    if (!in_box(spec, box, k)) return false;
  return true;
}

std::vector<GroupElement> box_elements(const GroupSpec& spec, const Box& box) {
  std::vector<GroupElement> out;
  GroupElement cur = elem_zero(spec);
  long r = spec.free_rank;
  long k = (long)spec.torsion_orders.size();
  for (long i = 0; i < r; ++i) cur.free_coords[i] = -box.radius;

  while (true) {
    out.push_back(cur);
    long i = r + k - 1;
    for (; i >= 0; --i) {
      if (i >= r) {
        long ti = i - r;
        cur.torsion_coords[ti] += 1;
        if (cur.torsion_coords[ti] < spec.torsion_orders[ti]) break;
        cur.torsion_coords[ti] = 0;
      } else {
        cur.free_coords[i] += 1;
        if (cur.free_coords[i] <= box.radius) break;
        cur.free_coords[i] = -box.radius;
      }
    }
    if (i < 0) break;
  }
  // odometer order above is not the canonical order (torsion ticks fastest),
  // but it visits each element exactly once; sort for determinism
  std::sort(out.begin(), out.end());
  return out;
}

TruncatedClosure truncated_closure(const GroupSpec& spec, const KernelData& kd,
                                   const std::vector<AlgebraElement>& gens, const Box& box) {
  if (box.radius < 1) throw error("truncated_closure: radius must be >= 1");
  TruncatedClosure cl{box, {}};

  std::vector<GroupElement> partners;
  for (auto& y : box_elements(spec, box))
    if (!in_kernel(spec, kd, y)) partners.push_back(std::move(y));  // kernel partners bracket to zero

  std::deque<AlgebraElement> work;
  for (const auto& g : gens) {
    if (!in_box(spec, box, g)) throw error("truncated_closure: generator support outside the box");
    if (const AlgebraElement* row = cl.span.insert(g)) work.push_back(*row);
  }
  while (!work.empty()) {
    AlgebraElement row = std::move(work.front());
    work.pop_front();
    for (const auto& y : partners) {
      AlgebraElement b = bracket(spec, row, singleton(y));
      if (b.is_zero() || !in_box(spec, box, b)) continue;
      if (const AlgebraElement* stored = cl.span.insert(std::move(b))) work.push_back(*stored);
    }
  }
  return cl;
}

Tri oracle_contains(const GroupSpec& spec, const TruncatedClosure& closure,
                    const AlgebraElement& x) {
  if (!in_box(spec, closure.box, x))
    throw error("oracle_contains: probe support outside the box");
  return closure.span.contains(x) ? Tri::True : Tri::Unknown;
}

}  // namespace goldman
