#include "toricmori/singularities.hpp"

#include <algorithm>
#include <set>

#include "toricmori/errors.hpp"

namespace toricmori {

const char* verdict_name(Verdict v) {
    switch (v) {
        case Verdict::terminal: return "terminal";
        case Verdict::canonical: return "canonical";
        case Verdict::klt: return "klt";
        case Verdict::lc: return "lc";
        case Verdict::not_lc: return "not-lc";
        case Verdict::not_q_cartier: return "not-Q-Cartier";
    }
    return "?";
}

namespace {

Divisor log_canonical(const Divisor& d) {
    Divisor b = d;
    for (auto& x : b) x -= 1;
    return b;
}

}  // namespace

Rational discrepancy(const Fan& f, const Divisor& d, std::span<const Integer> v) {
    if (d.size() != f.rays.size()) throw InputError("divisor length does not match the ray count");
    if (gcd_of(v) != 1) throw PreconditionError("not-primitive", "discrepancy needs a primitive vector");
    auto sf = support_function(f, log_canonical(d));
    return -1 + evaluate(f, sf, v);
}

PairClassification classify_pair(const Fan& f, const Divisor& d) {
    if (d.size() != f.rays.size()) throw InputError("divisor length does not match the ray count");
    for (const auto& x : d)
        if (x < 0) throw PreconditionError("negative-coefficient", "boundary coefficients must be nonnegative");
    PairClassification out;
    for (std::size_t i = 0; i < d.size(); ++i)
        if (d[i] > 1) {
            out.verdict = Verdict::not_lc;
            out.witness = f.rays[i];
            out.certificate = "boundary coefficient above 1 gives discrepancy below -1";
            return out;
        }
    const Divisor b = log_canonical(d);
    SupportFunction sf;
    try {
        sf = support_function(f, b);
    } catch (const PreconditionError&) {
        out.verdict = Verdict::not_q_cartier;
        out.certificate = "K + D is not Q-Cartier";
        return out;
    }
    const bool boundary = std::any_of(d.begin(), d.end(), [](const Rational& x) { return x != 0; });
    if (boundary) {
        const bool below = std::all_of(d.begin(), d.end(), [](const Rational& x) { return x < 1; });
        out.verdict = below ? Verdict::klt : Verdict::lc;
        if (!below)
            for (std::size_t i = 0; i < d.size(); ++i)
                if (d[i] == 1) {
                    out.witness = f.rays[i];
                    break;
                }
        out.certificate = below ? "toric pair, K + D Q-Cartier, coefficients < 1"
                                : "toric pair, K + D Q-Cartier, coefficients <= 1";
        return out;
    }

    // D = 0: the lattice points x of each cone with phi(x) >= -1
    std::set<IntVector> low;
    std::set<IntVector> rays(f.rays.begin(), f.rays.end());
    for (std::size_t c = 0; c < f.cones.size(); ++c) {
        auto cf = facets_of(f, f.cones[c]);
        HalfspaceSystem h{f.rank, {}};
        for (const auto& a : cf.facets) h.add(to_rational(a), 0);
        for (const auto& e : cf.equations) {
            h.add(to_rational(e), 0);
            RatVector neg = to_rational(e);
            for (auto& x : neg) x = -x;
            h.add(neg, 0);
        }
        RatVector m = sf.covectors[c];
        for (auto& x : m) x = -x;
        h.add(m, 1);  // -<m, x> + 1 >= 0, i.e. phi(x) >= -1
        for (auto& x : lattice_points(h))
            if (!is_zero(x) && gcd_of(x) == 1 && !rays.count(x)) low.insert(x);
    }
    for (const auto& x : low) {
        out.nonterminal.push_back(x);
        if (discrepancy(f, d, x) == 0) out.crepant.push_back(x);
    }
    if (low.empty()) {
        out.verdict = Verdict::terminal;
        out.certificate = "no lattice point other than rays with phi >= -1";
    } else if (out.crepant.size() == low.size()) {
        out.verdict = Verdict::canonical;
        out.witness = out.crepant.front();
        out.certificate = "every lattice point with phi >= -1 is crepant";
    } else {
        out.verdict = Verdict::klt;
        for (const auto& x : low)
            if (discrepancy(f, d, x) < 0) {
                out.witness = x;
                break;
            }
        out.certificate = "a lattice point has discrepancy in (-1, 0)";
    }

    // min discrepancy over a simplicial refinement: parallelepiped points,
    // and 2 - 1 from blowing up a codimension-two smooth stratum
    Fan g = is_simplicial(f) ? f : qfactorialize(f).source;
    std::optional<Rational> best;
    for (const auto& c : g.cones) {
        if (c.size() >= 2 && (!best || Rational(2) < *best)) best = Rational(2);
        for (const auto& p : parallelepiped_points(g.cone_rays(c), g.rank)) {
            Rational v = evaluate(f, sf, std::span<const Integer>(p.point));  // -phi
            if (!best || v < *best) best = v;
        }
    }
    if (best) out.min_discrepancy = *best - 1;
    return out;
}

}  // namespace toricmori
