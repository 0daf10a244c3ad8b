#pragma once

#include <optional>
#include <vector>

#include "toricmori/divisor.hpp"
#include "toricmori/fan.hpp"

namespace toricmori {

/// Primitive relation sum a_rho v_rho = 0 on the rays of the two cones of
/// a wall, indexed by all rays of the fan, off-wall entries positive.
using CurveClass = IntVector;

struct WallClass {
    Wall wall;
    CurveClass cls;
};

CurveClass wall_relation(const Fan& f, const Wall& w);

/// D . C up to a positive factor.
Rational intersect(const Divisor& d, const CurveClass& c);

/// Walls whose two cones map into one target cone, with their classes.
/// Requires a simplicial source with convex full-dimensional support.
std::vector<WallClass> contracted_walls(const FanMap& m);

struct NECone {
    std::vector<WallClass> walls;          // all contracted walls
    std::vector<CurveClass> generators;    // distinct classes, sorted
    std::vector<std::size_t> extremal;     // indices into generators
    std::size_t rho = 0;                   // dim of the span of the classes
};

/// Requires a projective morphism (checked).
NECone ne_cone(const FanMap& m);

/// rho(X/Y) without the projectivity check.
std::size_t relative_picard(const FanMap& m);

struct NefVerdict {
    bool nef = true;
    std::vector<WallClass> walls;
    std::vector<Rational> values;        // per contracted wall
    std::optional<std::size_t> violating;  // first wall failing the test
};

NefVerdict nefness(const FanMap& m, const Divisor& d, bool strict = false);

}  // namespace toricmori
