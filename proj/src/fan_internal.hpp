#pragma once

#include <utility>
#include <vector>

#include "toricmori/fan.hpp"

namespace toricmori::detail {

/// Facet normals of a cone together with the ray subsets they cut out.
std::vector<std::pair<IntVector, Cone>> facet_data(const Fan& f, const Cone& c);

/// True if the full-dimensional members of `cells` (pointed cones given by
/// generators, meeting face to face, all inside the region) cover the region
/// cone(rays) + span(lineality). Every facet of a cell that is not on the
/// region's boundary must be shared by a second cell.
bool covers(const std::vector<std::vector<IntVector>>& cells, const ConeGenerators& region, std::size_t dim);

/// Generators of {x : A x >= 0, E x = 0} ∩ cone, as primitive extreme rays.
std::vector<IntVector> clip(const ConeFacets& cone, const std::vector<IntVector>& inequalities,
                            const std::vector<IntVector>& equations, std::size_t dim);

/// Walls of the source whose two maximal cones map into one target cone.
std::vector<Wall> contracted(const FanMap& m);

}  // namespace toricmori::detail
