#include <algorithm>

#include "fan_internal.hpp"
#include "toricmori/errors.hpp"
#include "toricmori/fan.hpp"

namespace toricmori {

namespace {

std::optional<std::size_t> target_cone_of(const FanMap& m, const std::vector<IntVector>& rays) {
    std::vector<IntVector> images;
    for (const auto& r : rays) images.push_back(mat_vec(m.matrix, r));
    for (std::size_t t = 0; t < m.target.cones.size(); ++t) {
        auto tf = facets_of(m.target, m.target.cones[t]);
        if (std::all_of(images.begin(), images.end(), [&](const IntVector& x) { return tf.contains(x); })) return t;
    }
    return std::nullopt;
}

}  // namespace

std::optional<std::size_t> target_cone(const FanMap& m, const Cone& c) {
    return target_cone_of(m, m.source.cone_rays(c));
}

namespace detail {

std::vector<Wall> contracted(const FanMap& m) {
    std::vector<Wall> out;
    for (const auto& w : walls(m.source)) {
        Cone both = m.source.cones[w.left];
        both.insert(both.end(), m.source.cones[w.right].begin(), m.source.cones[w.right].end());
        if (target_cone_of(m, m.source.cone_rays(both))) out.push_back(w);
    }
    return out;
}

}  // namespace detail

MorphismFlags check_morphism(const FanMap& m) {
    MorphismFlags flags;
    const Fan& src = m.source;
    const Fan& tgt = m.target;
    if (m.matrix.rows() != tgt.rank || m.matrix.cols() != src.rank)
        throw InputError("map matrix has the wrong shape");

    flags.toric = std::all_of(src.cones.begin(), src.cones.end(), [&](const Cone& c) { return target_cone(m, c).has_value(); });
    if (!flags.toric) return flags;

    // properness: the source cones tile the preimage of every target cone
    IntMatrix mt = m.matrix.transpose();
    flags.proper = true;
    for (const auto& t : tgt.cones) {
        auto tf = facets_of(tgt, t);
        std::vector<IntVector> ineq, eq;
        for (const auto& a : tf.facets) {
            auto p = mat_vec(mt, a);
            if (!is_zero(p)) ineq.push_back(std::move(p));
        }
        for (const auto& e : tf.equations) {
            auto p = mat_vec(mt, e);
            if (!is_zero(p)) eq.push_back(std::move(p));
        }
        auto region = cone_from_inequalities(ineq, eq, src.rank);
        std::vector<std::vector<IntVector>> cells;
        for (const auto& c : src.cones) cells.push_back(detail::clip(facets_of(src, c), ineq, eq, src.rank));
        if (!detail::covers(cells, region, src.rank)) {
            flags.proper = false;
            return flags;
        }
    }

    // projectivity: a support function strictly convex across contracted walls
    const std::size_t nr = src.rays.size(), nc = src.cones.size(), n = src.rank;
    const std::size_t nv = nr + nc * n;
    HalfspaceSystem eqs{nv, {}}, ineqs{nv, {}};
    for (std::size_t s = 0; s < nc; ++s)
        for (auto r : src.cones[s]) {
            RatVector row(nv);
            row[r] = 1;
            for (std::size_t j = 0; j < n; ++j) row[nr + s * n + j] = src.rays[r][j];
            eqs.add(std::move(row), 0);
        }
    auto cw = detail::contracted(m);
    for (const auto& w : cw) {
        for (auto [s, other] : {std::pair{w.left, w.right}, std::pair{w.right, w.left}})
            for (auto r : src.cones[other]) {
                if (std::binary_search(w.rays.begin(), w.rays.end(), r)) continue;
                RatVector row(nv);
                row[r] = 1;
                for (std::size_t j = 0; j < n; ++j) row[nr + s * n + j] = src.rays[r][j];
                ineqs.add(std::move(row), -1);
            }
    }
    RatVector zero(nv);
    auto lp = lp_minimize(ineqs, eqs, zero);
    if (lp.status == LpStatus::infeasible) return flags;
    flags.projective = true;
    flags.ample_certificate.assign(lp.x.begin(), lp.x.begin() + static_cast<std::ptrdiff_t>(nr));
    return flags;
}

}  // namespace toricmori
