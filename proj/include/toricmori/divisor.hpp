#pragma once

#include <optional>
#include <vector>

#include "toricmori/fan.hpp"

namespace toricmori {

/// Torus-invariant Q-divisor: one coefficient per ray of the fan.
using Divisor = RatVector;

/// Per maximal cone a covector m with <m, v_rho> = -d_rho for the rays of
/// the cone, so that psi_D(v_rho) = -d_rho.
struct SupportFunction {
    std::vector<RatVector> covectors;
    Integer cartier_index;  // least l with l*D Cartier
};

/// Throws PreconditionError("not-q-cartier") naming the first bad cone.
SupportFunction support_function(const Fan& f, const Divisor& d);
bool is_q_cartier(const Fan& f, const Divisor& d);

Divisor canonical_divisor(const Fan& f);
/// div(chi^u): coefficients <u, v_rho>.
Divisor principal_divisor(const Fan& f, std::span<const Integer> u);

/// psi_D(x) for x in the support.
Rational evaluate(const Fan& f, const SupportFunction& s, std::span<const Rational> x);
Rational evaluate(const Fan& f, const SupportFunction& s, std::span<const Integer> x);

/// Coefficient at each source ray v is -psi_D(M v).
Divisor pullback(const FanMap& m, const Divisor& d);
/// Keeps the coefficients of source rays that are target rays.
Divisor pushforward(const FanMap& m, const Divisor& d);

/// P_D = {u : <u, v_rho> + d_rho >= 0}.
HalfspaceSystem sections_polytope(const Fan& f, const Divisor& d);
/// P_D ∩ M, optionally restricted to the box |u_i| <= box.
std::vector<IntVector> sections_basis(const Fan& f, const Divisor& d, std::optional<Integer> box = std::nullopt);

Divisor round_down(const Divisor& d);

/// True if the target fan has a single maximal cone.
bool is_affine_base(const FanMap& m);

/// For a Cartier divisor: every m_sigma lies in P_D ∩ M.
bool freeness_witness(const Fan& f, const Divisor& d);

Divisor add(const Divisor& a, const Divisor& b);
Divisor subtract(const Divisor& a, const Divisor& b);
Divisor scale(const Divisor& a, const Rational& s);

}  // namespace toricmori
