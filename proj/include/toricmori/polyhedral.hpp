#pragma once

// Small-scale exact polyhedral primitives: double description, Fourier-Motzkin
// feasibility, an exact simplex, lattice point enumeration and regular
// subdivisions of cones.

#include <optional>
#include <vector>

#include "toricmori/exactlin.hpp"

namespace toricmori {

/// One constraint <normal, x> + offset >= 0.
struct Halfspace {
    RatVector normal;
    Rational offset;
};

struct HalfspaceSystem {
    std::size_t dim = 0;
    std::vector<Halfspace> rows;

    void add(RatVector normal, Rational offset);
    bool contains(std::span<const Rational> x) const;
    bool contains(std::span<const Integer> x) const;
};

/// Generators of {x : A x >= 0, E x = 0}: cone(rays) + span(lineality).
struct ConeGenerators {
    std::vector<IntVector> rays;
    std::vector<IntVector> lineality;
};

/// H-description of cone(generators): x in the cone iff <f, x> >= 0 for all
/// facets and <e, x> = 0 for all equations.
struct ConeFacets {
    std::vector<IntVector> facets;
    std::vector<IntVector> equations;

    bool contains(std::span<const Integer> x) const;
    bool contains(std::span<const Rational> x) const;
    bool interior(std::span<const Integer> x) const;  // relative interior
};

ConeGenerators cone_from_inequalities(const std::vector<IntVector>& inequalities,
                                      const std::vector<IntVector>& equations, std::size_t dim);
ConeFacets cone_facets(const std::vector<IntVector>& generators, std::size_t dim);

/// Dimension of span(generators).
std::size_t cone_dimension(const std::vector<IntVector>& generators, std::size_t dim);
bool is_pointed(const ConeFacets& f, std::size_t dim);

/// Indices of generators spanning extreme rays, one per ray (lowest index
/// wins among parallel generators). Throws PreconditionError if the cone
/// contains a line.
std::vector<std::size_t> extreme_rays(const std::vector<RatVector>& generators);
std::vector<std::size_t> extreme_rays(const std::vector<IntVector>& generators, std::size_t dim);

/// Intersection of two cones given by generators, as primitive extreme rays
/// sorted lexicographically. Both cones must be pointed.
std::vector<IntVector> intersect_cones(const std::vector<IntVector>& a, const std::vector<IntVector>& b,
                                       std::size_t dim);

// ---------------------------------------------------------------------------
// linear programming

/// Fourier-Motzkin feasibility with back substitution. The witness prefers
/// coordinates equal to 0, then the integer nearest 0 within range.
std::optional<RatVector> lp_feasible(const HalfspaceSystem& h);

enum class LpStatus { optimal, infeasible, unbounded };

struct LpResult {
    LpStatus status = LpStatus::infeasible;
    RatVector x;
    Rational value;
};

/// Minimizes <objective, x> over free variables x subject to
/// <a, x> + b >= 0 for `inequalities` and <a, x> + b = 0 for `equations`.
/// Exact two-phase simplex with Bland's rule.
LpResult lp_minimize(const HalfspaceSystem& inequalities, const HalfspaceSystem& equations,
                     std::span<const Rational> objective);

// ---------------------------------------------------------------------------
// lattice points

/// Recession cone {x : <normal, x> >= 0}.
ConeGenerators recession_cone(const HalfspaceSystem& h);

/// All integer points of h. When `require_bounded` is set an unbounded
/// nonempty polyhedron raises PreconditionError; otherwise it is an error to
/// call this on an unbounded polyhedron as well, since the answer is infinite.
std::vector<IntVector> lattice_points(const HalfspaceSystem& h, bool require_bounded = true);

/// Some integer point of a possibly unbounded polyhedron, or nothing.
std::optional<IntVector> find_lattice_point(const HalfspaceSystem& h);

/// Adds the box |x_i| <= radius to h.
HalfspaceSystem with_box(HalfspaceSystem h, const Integer& radius);

// ---------------------------------------------------------------------------
// subdivisions

/// Lower regular subdivision of cone(generators) induced by lifting
/// generator i to height heights[i]. Cells are index sets into generators;
/// generators lifted strictly above the lower hull are unused.
std::vector<std::vector<std::size_t>> regular_subdivision(const std::vector<IntVector>& generators,
                                                          const std::vector<Integer>& heights,
                                                          std::size_t dim);

/// Regular triangulation by heights base^key[i], with the base doubled until
/// every cell is simplicial.
std::vector<std::vector<std::size_t>> placing_triangulation(const std::vector<IntVector>& generators,
                                                            const std::vector<std::size_t>& keys,
                                                            std::size_t dim);

/// Nonzero lattice points of the half-open parallelepiped sum [0,1) u_i of
/// linearly independent integer vectors, paired with their coefficients.
struct ParallelepipedPoint {
    IntVector point;
    RatVector coefficients;
};
std::vector<ParallelepipedPoint> parallelepiped_points(const std::vector<IntVector>& generators,
                                                       std::size_t dim);

}  // namespace toricmori
