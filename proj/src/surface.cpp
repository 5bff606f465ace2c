#include "goldman/surface.hpp"

namespace goldman {

GroupSpec surface_spec(long genus, long boundary_components) {
  if (genus < 0 || boundary_components < 0)
    throw error("surface_spec: genus and boundary count must be nonnegative");
  long r = 2 * genus + std::max(boundary_components - 1, 0L);
  GroupSpec spec;
  spec.free_rank = r;
  spec.form.assign(r, std::vector<Int>(r, 0));
  // basis a_1, b_1, ..., a_g, b_g, then b-1 boundary classes
  for (long g = 0; g < genus; ++g) {
    spec.form[2 * g][2 * g + 1] = 1;
    spec.form[2 * g + 1][2 * g] = -1;
  }
  validate_spec(spec);
  return spec;
}

}  // namespace goldman
