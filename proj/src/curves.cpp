#include "toricmori/curves.hpp"

#include <algorithm>

#include "fan_internal.hpp"
#include "toricmori/errors.hpp"

namespace toricmori {

CurveClass wall_relation(const Fan& f, const Wall& w) {
    const Cone& l = f.cones[w.left];
    const Cone& r = f.cones[w.right];
    if (l.size() != f.rank || r.size() != f.rank)
        throw PreconditionError("not-simplicial", "wall relation needs simplicial adjacent cones");
    Cone both = l;
    both.insert(both.end(), r.begin(), r.end());
    std::sort(both.begin(), both.end());
    both.erase(std::unique(both.begin(), both.end()), both.end());
    auto k = integer_kernel(IntMatrix::from_columns(f.cone_rays(both), f.rank));
    if (k.size() != 1) throw InvariantBreach("wall relation is not unique");
    std::size_t off = both.size();
    for (std::size_t i = 0; i < both.size(); ++i)
        if (!std::binary_search(w.rays.begin(), w.rays.end(), both[i])) {
            off = i;
            break;
        }
    IntVector rel = primitive(std::span<const Integer>(k[0]));
    if (rel[off] < 0)
        for (auto& x : rel) x = -x;
    CurveClass out(f.rays.size());
    for (std::size_t i = 0; i < both.size(); ++i) out[both[i]] = rel[i];
    for (std::size_t i = 0; i < both.size(); ++i)
        if (!std::binary_search(w.rays.begin(), w.rays.end(), both[i]) && rel[i] <= 0)
            throw InvariantBreach("off-wall coefficients of a wall relation differ in sign");
    return out;
}

Rational intersect(const Divisor& d, const CurveClass& c) {
    Rational s = 0;
    for (std::size_t i = 0; i < c.size(); ++i) s += d[i] * c[i];
    return s;
}

std::vector<WallClass> contracted_walls(const FanMap& m) {
    const Fan& f = m.source;
    if (!is_simplicial(f)) throw PreconditionError("not-simplicial", "source fan is not simplicial");
    if (cone_dimension(f.rays, f.rank) != f.rank || !has_convex_support(f))
        throw PreconditionError("scope", "source support is not convex and full-dimensional");
    std::vector<WallClass> out;
    for (const auto& w : detail::contracted(m)) out.push_back({w, wall_relation(f, w)});
    return out;
}

namespace {

std::vector<CurveClass> distinct_classes(const std::vector<WallClass>& walls) {
    std::vector<CurveClass> g;
    for (const auto& w : walls) g.push_back(w.cls);
    std::sort(g.begin(), g.end());
    g.erase(std::unique(g.begin(), g.end()), g.end());
    return g;
}

}  // namespace

NECone ne_cone(const FanMap& m) {
    auto flags = check_morphism(m);
    if (!flags.toric) throw PreconditionError("not-toric", "map does not send cones into cones");
    if (!flags.proper) throw PreconditionError("not-proper", "map is not proper");
    if (!flags.projective) throw PreconditionError("not-projective", "map is not projective");
    NECone ne;
    ne.walls = contracted_walls(m);
    ne.generators = distinct_classes(ne.walls);
    if (!ne.generators.empty()) {
        ne.extremal = extreme_rays(ne.generators, m.source.rays.size());
        ne.rho = rank(ne.generators, m.source.rays.size());
    }
    return ne;
}

std::size_t relative_picard(const FanMap& m) {
    auto g = distinct_classes(contracted_walls(m));
    return g.empty() ? 0 : rank(g, m.source.rays.size());
}

NefVerdict nefness(const FanMap& m, const Divisor& d, bool strict) {
    if (d.size() != m.source.rays.size()) throw InputError("divisor length does not match the ray count");
    NefVerdict v;
    v.walls = contracted_walls(m);
    for (std::size_t i = 0; i < v.walls.size(); ++i) {
        Rational x = intersect(d, v.walls[i].cls);
        v.values.push_back(x);
        bool ok = strict ? x > 0 : x >= 0;
        if (!ok && v.nef) {
            v.nef = false;
            v.violating = i;
        }
    }
    return v;
}

}  // namespace toricmori
