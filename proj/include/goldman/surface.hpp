#pragma once

#include "goldman/group.hpp"

namespace goldman {

// First homology of a compact oriented surface of the given genus and
// number of boundary components, with its intersection form: rank
// 2g + max(b-1, 0), symplectic blocks on the first 2g coordinates and the
// zero form on the boundary classes. Non-degenerate iff b <= 1.
GroupSpec surface_spec(long genus, long boundary_components);

}  // namespace goldman
