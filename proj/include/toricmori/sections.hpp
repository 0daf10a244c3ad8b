#pragma once

#include <optional>
#include <string>
#include <vector>

#include "toricmori/divisor.hpp"
#include "toricmori/mmp.hpp"

namespace toricmori {

/// {(u, a) in M_R x R : a >= 0, <u, v_rho> + a d_rho >= 0}; the last
/// coordinate is the grading.
struct SectionCone {
    std::size_t dim = 0;  // rank + 1
    std::vector<IntVector> inequalities;
};

SectionCone section_cone(const Fan& f, const Divisor& d);

/// Minimal generating set of the lattice points of a pointed cone, sorted.
/// Throws PreconditionError("not-pointed").
std::vector<IntVector> hilbert_basis(const SectionCone& c);
std::vector<IntVector> hilbert_basis(const std::vector<IntVector>& inequalities, std::size_t dim);

/// Generators of the section algebra of a Weil divisor over an affine base.
std::vector<IntVector> algebra_generators(const FanMap& m, const Divisor& d);

struct PseffVerdict {
    bool pseudo_effective = false;
    std::string route;               // "lp" or "mmp"
    std::optional<RatVector> witness;  // point of P_D on the lp route
};

/// P_D nonempty; requires an affine base.
PseffVerdict pseudo_effective_lp(const FanMap& m, const Divisor& d);
/// The D-MMP over Y ends with a nef divisor (Q-factorializes first).
PseffVerdict pseudo_effective_mmp(const FanMap& m, const Divisor& d);
/// LP route over an affine base, MMP route otherwise.
PseffVerdict is_pseudo_effective(const FanMap& m, const Divisor& d);

struct ZariskiResult {
    FanMap to_source;  // Z -> X
    FanMap to_base;    // Z -> Y
    Divisor pulled;    // pullback of D to Z
    Divisor p;
    Divisor n;
    MMPTrace trace;          // D-MMP on the resolution
    FaceContraction semiample;  // P contracted along its null walls
    Integer cartier_index;   // of P, reported as the freeness multiple
};

ZariskiResult zariski_decompose(const FanMap& m, const Divisor& d);

struct CkmVerdict {
    bool nef = false;
    bool effective = false;
    bool sections = false;
    std::optional<std::size_t> violating_wall;  // index into nefness walls
    std::optional<long> failing_m;
    std::optional<IntVector> witness;  // monomial in one section set only
    bool ok() const { return nef && effective && sections; }
};

/// Checks P nef, N effective and equality of the sections of the round
/// downs of mP and m mu*D for m = 1..m_max (0: four times the Cartier index
/// of P). Requires an affine base.
CkmVerdict verify_ckm(const ZariskiResult& r, long m_max = 0);

}  // namespace toricmori
