#pragma once

#include <optional>
#include <string>
#include <vector>

#include "toricmori/exactlin.hpp"
#include "toricmori/polyhedral.hpp"

namespace toricmori {

using Cone = std::vector<std::size_t>;  // sorted ray indices

/// A fan in N = Z^rank given by primitive rays and maximal cones. The fan of
/// a point has rank 0, no rays and the single cone {}.
struct Fan {
    std::size_t rank = 0;
    std::vector<IntVector> rays;
    std::vector<Cone> cones;

    std::vector<IntVector> cone_rays(const Cone& c) const;
    std::optional<std::size_t> ray_index(std::span<const Integer> v) const;
    bool operator==(const Fan&) const = default;
};

/// The point fan and the fan of a single cone (all of its faces).
Fan point_fan();
Fan cone_fan(std::size_t rank, const std::vector<IntVector>& rays);

/// Sorts ray indices inside cones and the cone list; ray order is kept.
Fan canonical(Fan f);
/// Order-independent description: sorted rays and cones given by ray
/// vectors. Two fans describe the same object iff their keys are equal.
std::vector<std::vector<IntVector>> fan_key(const Fan& f);

/// Lattice map N_source -> N_target with source and target fans.
struct FanMap {
    IntMatrix matrix;
    Fan source;
    Fan target;
};

FanMap identity_map(const Fan& source, const Fan& target);

// ---------------------------------------------------------------------------
// cones

ConeFacets facets_of(const Fan& f, const Cone& c);
std::size_t cone_dim(const Fan& f, const Cone& c);
bool is_simplicial(const Fan& f);

enum class ConeKind { smooth, simplicial, non_simplicial };

struct ConeClass {
    ConeKind kind = ConeKind::smooth;
    Integer multiplicity;  // index of the generated lattice in N_sigma
};

ConeClass classify_cone(const Fan& f, const Cone& c);

/// Index of the first maximal cone containing x.
std::optional<std::size_t> cone_containing(const Fan& f, std::span<const Integer> x);
std::optional<std::size_t> cone_containing(const Fan& f, std::span<const Rational> x);

/// Ray subsets of the facets of a cone (relative to its span).
std::vector<Cone> cone_facet_sets(const Fan& f, const Cone& c);

/// True if `face` (a ray subset of c) spans a face of c.
bool is_face(const Fan& f, const Cone& c, const Cone& face);

/// Walls of a fan: codimension-one faces of full-dimensional maximal cones
/// shared by exactly two of them.
struct Wall {
    Cone rays;
    std::size_t left = 0;   // maximal cone indices
    std::size_t right = 0;
};
std::vector<Wall> walls(const Fan& f);

// ---------------------------------------------------------------------------
// fan operations

/// Empty iff f is a fan. Each entry names the offending cone(s).
std::vector<std::string> validate_fan(const Fan& f);

/// Star of the cone tau (ray subset) in the quotient lattice N / N_tau.
Fan star(const Fan& f, const Cone& tau);

/// Star subdivision at v, which must be in the support and not a ray.
/// The new ray is appended last.
Fan star_subdivision(const Fan& f, std::span<const Integer> v);

/// Smooth refinement with the same support; the map is the identity to f.
FanMap resolve(const Fan& f);

/// Simplicial refinement on the same rays: the regular triangulation of each
/// non-simplicial cone induced by lifting ray i to height base^i. The base
/// starts at 2 and doubles until every cell is simplicial; it is reported
/// through `base_used`.
FanMap qfactorialize(const Fan& f, Integer* base_used = nullptr);

/// True if the piecewise linear function with value base^i at ray i is
/// strictly convex across every wall of `refined` lying inside a single
/// cone of `original`.
bool lifting_certificate(const Fan& refined, const Fan& original, const Integer& base);

struct CommonRefinement {
    Fan fan;
    FanMap to_first;
    FanMap to_second;
};
CommonRefinement common_refinement(const Fan& a, const Fan& b);

/// True if |a| = |b|.
bool same_support(const Fan& a, const Fan& b);
/// True if the maximal cones cover the convex cone spanned by all rays.
bool has_convex_support(const Fan& f);

struct MorphismFlags {
    bool toric = false;
    bool proper = false;
    bool projective = false;
    RatVector ample_certificate;  // divisor coefficients, set when projective
};

MorphismFlags check_morphism(const FanMap& m);

/// Index of a target maximal cone containing the image of cone c.
std::optional<std::size_t> target_cone(const FanMap& m, const Cone& c);

}  // namespace toricmori
