#pragma once

#include <string>
#include <utility>
#include <vector>

#include "toricmori/mmp.hpp"

namespace toricmori {

/// Gamma_+ = conv(exponents) + positive orthant.
struct NewtonPolytope {
    std::size_t dim = 0;
    std::vector<IntVector> exponents;
    HalfspaceSystem halfspaces;
};

NewtonPolytope newton_polytope(const std::vector<IntVector>& exponents);

/// ord(v) = min over exponents of <m, v>.
Integer ord(const NewtonPolytope& p, std::span<const Integer> v);

/// Smooth refinement of the orthant on which ord is linear on every cone.
/// The standard basis vectors are rays 0..n-1.
FanMap ambient_resolution(const NewtonPolytope& p);

enum class ModelType { minimal, canonical, dlt, lc };
const char* model_name(ModelType t);

struct ModelReport {
    ModelType type = ModelType::minimal;
    FanMap ambient;       // V -> A^n
    Divisor divisor;      // -1 - ord(v), plus 1 on exceptional rays for dlt/lc
    NefVerdict ambient_walls;  // the divisor on V
    MMPTrace trace;
    NefVerdict nef;       // the final divisor over A^n
    std::optional<FaceContraction> face;  // canonical and lc
    std::vector<std::pair<IntVector, Rational>> discrepancies;  // exceptional rays of V
    std::vector<std::string> notes;
};

ModelReport model(const NewtonPolytope& p, ModelType type);

}  // namespace toricmori
