#include "toricmori/divisor.hpp"

#include <algorithm>

#include "toricmori/errors.hpp"

namespace toricmori {

SupportFunction support_function(const Fan& f, const Divisor& d) {
    if (d.size() != f.rays.size()) throw InputError("divisor length does not match the ray count");
    SupportFunction s;
    s.cartier_index = 1;
    for (std::size_t ci = 0; ci < f.cones.size(); ++ci) {
        const Cone& c = f.cones[ci];
        if (c.empty()) {
            s.covectors.emplace_back(f.rank);
            continue;
        }
        // the lattice {(<m, v_rho>)_rho : m in M} has basis the nonzero rows of H
        IntMatrix vt = IntMatrix::from_columns(f.cone_rays(c), f.rank);
        auto e = hermite_rows(vt);
        RatMatrix a(c.size(), e.rank);
        for (std::size_t i = 0; i < e.rank; ++i)
            for (std::size_t j = 0; j < c.size(); ++j) a(j, i) = e.echelon(i, j);
        RatVector rhs(c.size());
        for (std::size_t j = 0; j < c.size(); ++j) rhs[j] = -d[c[j]];
        auto coords = solve(a, rhs);
        if (!coords || mat_vec(a, *coords) != rhs)
            throw PreconditionError("not-q-cartier", "divisor is not Q-Cartier on cone " + std::to_string(ci));
        RatVector m(f.rank);
        for (std::size_t i = 0; i < e.rank; ++i) {
            s.cartier_index = lcm(s.cartier_index, (*coords)[i].get_den());
            for (std::size_t j = 0; j < f.rank; ++j) m[j] += (*coords)[i] * e.transform(i, j);
        }
        s.covectors.push_back(std::move(m));
    }
    return s;
}

bool is_q_cartier(const Fan& f, const Divisor& d) {
    try {
        support_function(f, d);
        return true;
    } catch (const PreconditionError&) {
        return false;
    }
}

Divisor canonical_divisor(const Fan& f) { return Divisor(f.rays.size(), Rational(-1)); }

Divisor principal_divisor(const Fan& f, std::span<const Integer> u) {
    Divisor d(f.rays.size());
    for (std::size_t i = 0; i < f.rays.size(); ++i) d[i] = dot(u, f.rays[i]);
    return d;
}

Rational evaluate(const Fan& f, const SupportFunction& s, std::span<const Rational> x) {
    auto c = cone_containing(f, x);
    if (!c) throw PreconditionError("outside-support", "point outside the support");
    return dot(s.covectors[*c], x);
}

Rational evaluate(const Fan& f, const SupportFunction& s, std::span<const Integer> x) {
    auto c = cone_containing(f, x);
    if (!c) throw PreconditionError("outside-support", "point outside the support");
    return dot(s.covectors[*c], x);
}

Divisor pullback(const FanMap& m, const Divisor& d) {
    auto s = support_function(m.target, d);
    Divisor out(m.source.rays.size());
    for (std::size_t i = 0; i < m.source.rays.size(); ++i)
        out[i] = -evaluate(m.target, s, mat_vec(m.matrix, m.source.rays[i]));
    return out;
}

Divisor pushforward(const FanMap& m, const Divisor& d) {
    if (d.size() != m.source.rays.size()) throw InputError("divisor length does not match the ray count");
    std::vector<IntVector> images;
    for (const auto& r : m.source.rays) images.push_back(mat_vec(m.matrix, r));
    Divisor out(m.target.rays.size());
    for (std::size_t t = 0; t < m.target.rays.size(); ++t) {
        auto it = std::find(images.begin(), images.end(), m.target.rays[t]);
        if (it == images.end())
            throw PreconditionError("not-birational", "target ray " + std::to_string(t) + " has no source ray");
        out[t] = d[static_cast<std::size_t>(it - images.begin())];
    }
    return out;
}

HalfspaceSystem sections_polytope(const Fan& f, const Divisor& d) {
    HalfspaceSystem h{f.rank, {}};
    for (std::size_t i = 0; i < f.rays.size(); ++i) h.add(to_rational(f.rays[i]), d[i]);
    return h;
}

std::vector<IntVector> sections_basis(const Fan& f, const Divisor& d, std::optional<Integer> box) {
    auto h = sections_polytope(f, d);
    if (box) h = with_box(std::move(h), *box);
    return lattice_points(h);
}

Divisor round_down(const Divisor& d) {
    Divisor out(d.size());
    for (std::size_t i = 0; i < d.size(); ++i) out[i] = floor_of(d[i]);
    return out;
}

bool is_affine_base(const FanMap& m) { return m.target.cones.size() == 1; }

bool freeness_witness(const Fan& f, const Divisor& d) {
    auto s = support_function(f, d);
    auto p = sections_polytope(f, d);
    for (const auto& m : s.covectors) {
        if (std::any_of(m.begin(), m.end(), [](const Rational& x) { return x.get_den() != 1; })) return false;
        if (!p.contains(m)) return false;
    }
    return true;
}

Divisor add(const Divisor& a, const Divisor& b) {
    Divisor out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
    return out;
}

Divisor subtract(const Divisor& a, const Divisor& b) {
    Divisor out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
    return out;
}

Divisor scale(const Divisor& a, const Rational& s) {
    Divisor out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] * s;
    return out;
}

}  // namespace toricmori
