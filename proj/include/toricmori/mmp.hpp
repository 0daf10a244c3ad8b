#pragma once

#include <optional>
#include <vector>

#include "toricmori/curves.hpp"
#include "toricmori/divisor.hpp"
#include "toricmori/fan.hpp"

namespace toricmori {

enum class ContractionKind { fano, divisorial, flipping };

const char* kind_name(ContractionKind k);

struct ContractionResult {
    ContractionKind kind = ContractionKind::flipping;
    FanMap source_to_target;  // X -> Z
    FanMap target_to_base;    // Z -> Y
    std::optional<std::size_t> removed_ray;  // source ray index, divisorial only
    std::vector<Cone> merged_cones;          // source ray sets of merged regions
    IntMatrix quotient;                      // N_X -> N_Z, fano only
};

/// Contracts the face of NE(X/Y) spanned by the given wall classes. Every
/// class must be a generator of NE(X/Y) and together they must span a face.
ContractionResult contract(const FanMap& m, const std::vector<CurveClass>& face);

struct FlipResult {
    Fan flipped;        // X+, same rays as X
    FanMap to_w;        // X+ -> W
    FanMap to_base;     // X+ -> Y
    Divisor d_plus;     // transform of D (coefficients are unchanged)
    ContractionResult contraction;  // X -> W
    std::vector<Rational> old_values;  // D . R on the contracted walls of X
    std::vector<Rational> new_values;  // D+ . C on the new internal walls
};

/// Flip of the D-negative small extremal contraction along `ray`.
FlipResult flip(const FanMap& m, const CurveClass& ray, const Divisor& d);

struct NegativitySide {
    FanMap to_w;
    Divisor d;
};

struct NegativityResult {
    Fan z;      // common refinement of the two sources
    Divisor e;  // on z: pullback of D minus pullback of D'
};

/// Negativity lemma oracle. Hypotheses: both sides map to the same W,
/// their pushforwards to W agree, -D is ample over W on the first side and
/// D' is ample over W on the second.
NegativityResult verify_negativity(const NegativitySide& mu, const NegativitySide& nu);

struct MMPStep {
    ContractionKind kind = ContractionKind::fano;
    CurveClass ray;
    Rational value;  // D . R
    std::size_t rho_before = 0;
    std::size_t rho_after = 0;
    std::optional<IntVector> removed_ray;
    std::vector<Rational> flip_old_values;
    std::vector<Rational> flip_new_values;
    Divisor negativity;  // E from the negativity oracle, flips only
    Fan negativity_fan;
    Fan fan;          // X_{i+1}, or Z for a fano step
    Divisor divisor;  // D_{i+1}; empty after a fano step
};

enum class MMPOutcome { nef, fano };

struct MMPTrace {
    std::vector<MMPStep> steps;
    MMPOutcome outcome = MMPOutcome::nef;
    FanMap final_map;      // last X_i -> Y
    Divisor final_divisor;  // D on the last X_i
    std::size_t initial_rho = 0;
    ContractionResult fano_contraction;  // set when the outcome is fano
};

/// D-MMP over Y. The source must be simplicial, the map proper and
/// projective with convex full-dimensional source support.
MMPTrace run_mmp(const FanMap& m, const Divisor& d);

struct FaceContraction {
    FanMap source_to_z;
    FanMap z_to_base;
    std::optional<Divisor> descended;  // D on Z when Z lives in the same lattice
    IntMatrix quotient;
    std::vector<Cone> merged;
};

/// Contracts every contracted wall on which the nef divisor D is zero.
FaceContraction contract_face(const FanMap& m, const Divisor& d);

}  // namespace toricmori
