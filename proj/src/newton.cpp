#include "toricmori/newton.hpp"

#include <algorithm>
#include <set>

#include "toricmori/errors.hpp"

namespace toricmori {

const char* model_name(ModelType t) {
    switch (t) {
        case ModelType::minimal: return "minimal";
        case ModelType::canonical: return "canonical";
        case ModelType::dlt: return "dlt";
        case ModelType::lc: return "lc";
    }
    return "?";
}

NewtonPolytope newton_polytope(const std::vector<IntVector>& exponents) {
    if (exponents.empty()) throw InputError("no exponents");
    NewtonPolytope p;
    p.dim = exponents.front().size();
    if (p.dim == 0) throw InputError("exponents have length zero");
    for (const auto& m : exponents) {
        if (m.size() != p.dim) throw InputError("exponents have different lengths");
        for (const auto& x : m)
            if (x < 0) throw InputError("exponents must be nonnegative");
    }
    p.exponents = exponents;
    std::sort(p.exponents.begin(), p.exponents.end());
    p.exponents.erase(std::unique(p.exponents.begin(), p.exponents.end()), p.exponents.end());

    std::vector<IntVector> gens;
    for (const auto& m : p.exponents) {
        IntVector g = m;
        g.push_back(1);
        gens.push_back(std::move(g));
    }
    for (std::size_t i = 0; i < p.dim; ++i) {
        IntVector e(p.dim + 1);
        e[i] = 1;
        gens.push_back(std::move(e));
    }
    auto cf = cone_facets(gens, p.dim + 1);
    p.halfspaces.dim = p.dim;
    for (const auto& a : cf.facets) {
        RatVector normal(a.begin(), a.end() - 1);
        if (is_zero(normal)) continue;
        p.halfspaces.add(std::move(normal), Rational(a.back()));
    }
    return p;
}

Integer ord(const NewtonPolytope& p, std::span<const Integer> v) {
    Integer best = dot(p.exponents.front(), v);
    for (const auto& m : p.exponents) best = std::min(best, dot(m, v));
    return best;
}

FanMap ambient_resolution(const NewtonPolytope& p) {
    const std::size_t n = p.dim;
    std::vector<std::vector<IntVector>> cells;
    for (const auto& m : p.exponents) {
        std::vector<IntVector> ineq;
        for (std::size_t i = 0; i < n; ++i) {
            IntVector e(n);
            e[i] = 1;
            ineq.push_back(e);
        }
        for (const auto& m2 : p.exponents) {
            if (m2 == m) continue;
            IntVector d(n);
            for (std::size_t i = 0; i < n; ++i) d[i] = m2[i] - m[i];
            ineq.push_back(d);
        }
        auto g = cone_from_inequalities(ineq, {}, n);
        if (cone_dimension(g.rays, n) != n) continue;
        std::sort(g.rays.begin(), g.rays.end());
        cells.push_back(g.rays);
    }
    std::sort(cells.begin(), cells.end());
    cells.erase(std::unique(cells.begin(), cells.end()), cells.end());

    Fan f;
    f.rank = n;
    for (std::size_t i = 0; i < n; ++i) {
        IntVector e(n);
        e[i] = 1;
        f.rays.push_back(e);
    }
    std::set<IntVector> extra;
    for (const auto& c : cells)
        for (const auto& r : c)
            if (!f.ray_index(r)) extra.insert(r);
    f.rays.insert(f.rays.end(), extra.begin(), extra.end());
    for (const auto& c : cells) {
        Cone cone;
        for (const auto& r : c) cone.push_back(*f.ray_index(r));
        std::sort(cone.begin(), cone.end());
        f.cones.push_back(std::move(cone));
    }
    if (!validate_fan(f).empty()) throw InvariantBreach("normal fan of the Newton polytope is not a fan");
    Fan smooth = resolve(qfactorialize(f).source).source;
    Fan orth{n, {}, {Cone{}}};
    for (std::size_t i = 0; i < n; ++i) {
        orth.rays.push_back(f.rays[i]);
        orth.cones[0].push_back(i);
    }
    return identity_map(smooth, orth);
}

ModelReport model(const NewtonPolytope& p, ModelType type) {
    ModelReport r;
    r.type = type;
    r.ambient = ambient_resolution(p);
    const Fan& v = r.ambient.source;
    const std::size_t n = p.dim;
    const bool log = type == ModelType::dlt || type == ModelType::lc;
    for (std::size_t i = 0; i < v.rays.size(); ++i) {
        Rational c = -1 - Rational(ord(p, v.rays[i]));
        if (log && i >= n) c += 1;
        r.divisor.push_back(c);
    }
    r.ambient_walls = nefness(r.ambient, r.divisor);
    for (std::size_t i = n; i < v.rays.size(); ++i) {
        Rational a = -1 - Rational(ord(p, v.rays[i]));
        for (std::size_t j = 0; j < n; ++j) {
            IntVector e(n);
            e[j] = 1;
            a += Rational(v.rays[i][j]) * (1 + Rational(ord(p, e)));
        }
        r.discrepancies.emplace_back(v.rays[i], a);
    }
    r.trace = run_mmp(r.ambient, r.divisor);
    if (r.trace.outcome != MMPOutcome::nef) throw InvariantBreach("birational MMP over the orthant reached a fano contraction");
    r.nef = nefness(r.trace.final_map, r.trace.final_divisor);
    if (!r.nef.nef) throw InvariantBreach("MMP ended with a divisor that is not nef");
    if (type == ModelType::canonical || type == ModelType::lc)
        r.face = contract_face(r.trace.final_map, r.trace.final_divisor);
    r.notes.push_back("non-degeneracy of f is assumed, not verified");
    r.notes.push_back("X' enters through its numerical class -sum ord(v) D_v (div f ~ 0)");
    if (type == ModelType::dlt) r.notes.push_back("dlt property of the model holds by construction, not re-verified");
    return r;
}

}  // namespace toricmori
