#pragma once

#include <optional>
#include <string>
#include <vector>

#include "toricmori/divisor.hpp"

namespace toricmori {

/// a(v) = -1 - phi(v), phi linear on each cone with phi(v_rho) = -1 + d_rho.
/// Requires K + D Q-Cartier and v primitive in the support.
Rational discrepancy(const Fan& f, const Divisor& d, std::span<const Integer> v);

enum class Verdict { terminal, canonical, klt, lc, not_lc, not_q_cartier };
const char* verdict_name(Verdict v);

struct PairClassification {
    Verdict verdict = Verdict::terminal;
    std::optional<IntVector> witness;          // ray or lattice point deciding the verdict
    std::optional<Rational> min_discrepancy;   // over exceptional divisors, D = 0 only
    std::vector<IntVector> crepant;            // non-ray points with a = 0, sorted
    std::vector<IntVector> nonterminal;        // non-ray points with a <= 0, sorted
    std::string certificate;
};

/// Coefficients must be nonnegative. Terminal/canonical are decided only
/// for D = 0; with a boundary the verdict is klt or lc from the coefficients.
PairClassification classify_pair(const Fan& f, const Divisor& d);

}  // namespace toricmori
