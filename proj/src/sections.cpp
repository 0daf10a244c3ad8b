#include "toricmori/sections.hpp"

#include <algorithm>
#include <numeric>

#include "toricmori/errors.hpp"

namespace toricmori {

SectionCone section_cone(const Fan& f, const Divisor& d) {
    if (d.size() != f.rays.size()) throw InputError("divisor length does not match the ray count");
    SectionCone c;
    c.dim = f.rank + 1;
    IntVector grade(c.dim);
    grade[f.rank] = 1;
    c.inequalities.push_back(grade);
    for (std::size_t i = 0; i < f.rays.size(); ++i) {
        RatVector row(c.dim);
        for (std::size_t j = 0; j < f.rank; ++j) row[j] = f.rays[i][j];
        row[f.rank] = d[i];
        c.inequalities.push_back(primitive(std::span<const Rational>(row)));
    }
    return c;
}

std::vector<IntVector> hilbert_basis(const SectionCone& c) { return hilbert_basis(c.inequalities, c.dim); }

std::vector<IntVector> hilbert_basis(const std::vector<IntVector>& inequalities, std::size_t dim) {
    auto gen = cone_from_inequalities(inequalities, {}, dim);
    if (!gen.lineality.empty()) throw PreconditionError("not-pointed", "cone contains a line");
    if (gen.rays.empty()) return {};

    // coordinates in a basis of the saturated span
    auto basis = saturated_basis(gen.rays, dim);
    const std::size_t k = basis.size();
    RatMatrix b = to_rational(IntMatrix::from_columns(basis, dim));
    auto coords = [&](const IntVector& x) {
        auto s = solve(b, to_rational(x));
        if (!s) throw InvariantBreach("ray outside its own span");
        return to_integer(*s);
    };
    std::vector<IntVector> rays;
    for (const auto& r : gen.rays) rays.push_back(coords(r));

    std::vector<std::size_t> keys(rays.size());
    std::iota(keys.begin(), keys.end(), 0);
    std::vector<IntVector> cand = rays;
    for (const auto& cell : placing_triangulation(rays, keys, k)) {
        std::vector<IntVector> u;
        for (auto i : cell) u.push_back(rays[i]);
        for (auto& p : parallelepiped_points(u, k)) cand.push_back(std::move(p.point));
    }
    std::sort(cand.begin(), cand.end());
    cand.erase(std::unique(cand.begin(), cand.end()), cand.end());

    auto cf = cone_facets(rays, k);
    std::vector<IntVector> keep;
    for (const auto& x : cand) {
        bool reducible = false;
        for (const auto& y : cand) {
            if (y == x) continue;
            IntVector diff(k);
            for (std::size_t i = 0; i < k; ++i) diff[i] = x[i] - y[i];
            if (cf.contains(diff)) {
                reducible = true;
                break;
            }
        }
        if (!reducible) keep.push_back(x);
    }
    std::vector<IntVector> out;
    for (const auto& x : keep) {
        IntVector v(dim);
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t j = 0; j < dim; ++j) v[j] += x[i] * basis[i][j];
        out.push_back(std::move(v));
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<IntVector> algebra_generators(const FanMap& m, const Divisor& d) {
    if (!is_affine_base(m)) throw PreconditionError("not-affine-base", "the base fan must be a single cone");
    if (cone_dimension(m.source.rays, m.source.rank) != m.source.rank)
        throw PreconditionError("not-full-dimensional", "source support is not full-dimensional");
    return hilbert_basis(section_cone(m.source, d));
}

PseffVerdict pseudo_effective_lp(const FanMap& m, const Divisor& d) {
    if (!is_affine_base(m)) throw PreconditionError("not-affine-base", "the base fan must be a single cone");
    PseffVerdict v;
    v.route = "lp";
    v.witness = lp_feasible(sections_polytope(m.source, d));
    v.pseudo_effective = v.witness.has_value();
    return v;
}

PseffVerdict pseudo_effective_mmp(const FanMap& m, const Divisor& d) {
    FanMap q = m;
    if (!is_simplicial(m.source)) {
        q.source = qfactorialize(m.source).source;
        if (!is_q_cartier(m.source, d)) throw PreconditionError("not-q-cartier", "divisor is not Q-Cartier");
    }
    PseffVerdict v;
    v.route = "mmp";
    v.pseudo_effective = run_mmp(q, d).outcome == MMPOutcome::nef;
    return v;
}

PseffVerdict is_pseudo_effective(const FanMap& m, const Divisor& d) {
    return is_affine_base(m) ? pseudo_effective_lp(m, d) : pseudo_effective_mmp(m, d);
}

ZariskiResult zariski_decompose(const FanMap& m, const Divisor& d) {
    if (!is_q_cartier(m.source, d)) throw PreconditionError("not-q-cartier", "divisor is not Q-Cartier");
    if (!is_pseudo_effective(m, d).pseudo_effective)
        throw PreconditionError("pseudo-effectivity failed", "divisor is not pseudo-effective over the base");

    FanMap res = resolve(m.source);  // X~ -> X
    Divisor mu_d = pullback(res, d);
    FanMap res_to_base{m.matrix, res.source, m.target};
    ZariskiResult out;
    out.trace = run_mmp(res_to_base, mu_d);
    if (out.trace.outcome != MMPOutcome::nef) throw InvariantBreach("pseudo-effective divisor reached a fano contraction");
    const Fan& last = out.trace.final_map.source;

    auto cr = common_refinement(res.source, last);
    const Fan& z = cr.fan;
    out.to_source = FanMap{IntMatrix::identity(z.rank), z, m.source};
    out.to_base = FanMap{m.matrix, z, m.target};
    out.pulled = pullback(cr.to_first, mu_d);
    out.p = pullback(cr.to_second, out.trace.final_divisor);
    out.n = subtract(out.pulled, out.p);
    for (const auto& x : out.n)
        if (x < 0) throw InvariantBreach("negative part is not effective");
    if (!nefness(out.to_base, out.p).nef) throw InvariantBreach("positive part is not nef");
    out.semiample = contract_face(out.to_base, out.p);
    out.cartier_index = support_function(z, out.p).cartier_index;
    return out;
}

namespace {

// An integer point of P_a violating some inequality of P_b.
std::optional<IntVector> outside(const Fan& f, const Divisor& a, const Divisor& b) {
    for (std::size_t i = 0; i < f.rays.size(); ++i) {
        HalfspaceSystem h = sections_polytope(f, a);
        RatVector row(f.rank);
        for (std::size_t j = 0; j < f.rank; ++j) row[j] = -Rational(f.rays[i][j]);
        h.add(row, -b[i] - 1);
        if (auto u = find_lattice_point(h)) return u;
    }
    return std::nullopt;
}

}  // namespace

CkmVerdict verify_ckm(const ZariskiResult& r, long m_max) {
    if (!is_affine_base(r.to_base)) throw PreconditionError("not-affine-base", "the base fan must be a single cone");
    CkmVerdict v;
    auto nv = nefness(r.to_base, r.p);
    v.nef = nv.nef;
    v.violating_wall = nv.violating;
    v.effective = std::all_of(r.n.begin(), r.n.end(), [](const Rational& x) { return x >= 0; });
    if (m_max <= 0) {
        Integer l = is_q_cartier(r.to_base.source, r.p) ? support_function(r.to_base.source, r.p).cartier_index : Integer(1);
        m_max = 4 * l.get_si();
    }
    const Fan& z = r.to_base.source;
    v.sections = true;
    for (long k = 1; k <= m_max && v.sections; ++k) {
        Divisor a = round_down(scale(r.p, Rational(k)));
        Divisor b = round_down(scale(r.pulled, Rational(k)));
        auto w = outside(z, a, b);
        if (!w) w = outside(z, b, a);
        if (w) {
            v.sections = false;
            v.failing_m = k;
            v.witness = w;
        }
    }
    return v;
}

}  // namespace toricmori
