#ifndef GLSLAB_SRC_ZONE_HPP_
#define GLSLAB_SRC_ZONE_HPP_

#include <cstddef>
#include <vector>

#include "glslab/periodic_field.hpp"

namespace glslab::detail {

// Near-singularity part of the singular quadrature rule: the grid nodes it replaces and the
// log-substitution panel nodes that integrate the cells around x = 0.
struct SingularZone {
  std::vector<std::size_t> replaced;  // grid indices handled by the zone
  std::vector<double> x, w, v;        // zone nodes (weights normalized by 2*pi)
  std::vector<std::size_t> floor_nodes;  // indices into x/w/v next to the resolution floor
};

SingularZone singular_zone(const PeriodicFunction& f);

}  // namespace glslab::detail

#endif  // GLSLAB_SRC_ZONE_HPP_
