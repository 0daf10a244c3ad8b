#include "toricmori/fan.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "fan_internal.hpp"
#include "toricmori/errors.hpp"

namespace toricmori {

std::vector<IntVector> Fan::cone_rays(const Cone& c) const {
    std::vector<IntVector> out;
    out.reserve(c.size());
    for (auto i : c) out.push_back(rays[i]);
    return out;
}

std::optional<std::size_t> Fan::ray_index(std::span<const Integer> v) const {
    for (std::size_t i = 0; i < rays.size(); ++i)
        if (std::equal(rays[i].begin(), rays[i].end(), v.begin(), v.end())) return i;
    return std::nullopt;
}

Fan point_fan() { return Fan{0, {}, {Cone{}}}; }

Fan cone_fan(std::size_t rank, const std::vector<IntVector>& rays) {
    Fan f;
    f.rank = rank;
    Cone c;
    for (const auto& r : rays) {
        c.push_back(f.rays.size());
        f.rays.push_back(primitive(std::span<const Integer>(r)));
    }
    f.cones.push_back(std::move(c));
    return f;
}

Fan canonical(Fan f) {
    for (auto& c : f.cones) std::sort(c.begin(), c.end());
    std::sort(f.cones.begin(), f.cones.end());
    f.cones.erase(std::unique(f.cones.begin(), f.cones.end()), f.cones.end());
    return f;
}

std::vector<std::vector<IntVector>> fan_key(const Fan& f) {
    std::vector<std::vector<IntVector>> key;
    for (const auto& c : f.cones) {
        auto rays = f.cone_rays(c);
        std::sort(rays.begin(), rays.end());
        key.push_back(std::move(rays));
    }
    std::sort(key.begin(), key.end());
    key.push_back({IntVector(1, Integer(static_cast<unsigned long>(f.rank)))});
    return key;
}

FanMap identity_map(const Fan& source, const Fan& target) {
    return FanMap{IntMatrix::identity(source.rank), source, target};
}

// ---------------------------------------------------------------------------

ConeFacets facets_of(const Fan& f, const Cone& c) { return cone_facets(f.cone_rays(c), f.rank); }

std::size_t cone_dim(const Fan& f, const Cone& c) { return cone_dimension(f.cone_rays(c), f.rank); }

bool is_simplicial(const Fan& f) {
    return std::all_of(f.cones.begin(), f.cones.end(), [&](const Cone& c) { return c.size() == cone_dim(f, c); });
}

ConeClass classify_cone(const Fan& f, const Cone& c) {
    ConeClass out;
    out.multiplicity = 1;
    if (!c.empty())
        for (const auto& d : smith_invariants(IntMatrix::from_rows(f.cone_rays(c), f.rank))) out.multiplicity *= d;
    if (c.size() != cone_dim(f, c))
        out.kind = ConeKind::non_simplicial;
    else
        out.kind = out.multiplicity == 1 ? ConeKind::smooth : ConeKind::simplicial;
    return out;
}

std::optional<std::size_t> cone_containing(const Fan& f, std::span<const Integer> x) {
    for (std::size_t i = 0; i < f.cones.size(); ++i)
        if (facets_of(f, f.cones[i]).contains(x)) return i;
    return std::nullopt;
}

std::optional<std::size_t> cone_containing(const Fan& f, std::span<const Rational> x) {
    for (std::size_t i = 0; i < f.cones.size(); ++i)
        if (facets_of(f, f.cones[i]).contains(x)) return i;
    return std::nullopt;
}

namespace detail {

std::vector<std::pair<IntVector, Cone>> facet_data(const Fan& f, const Cone& c) {
    auto cf = facets_of(f, c);
    std::vector<std::pair<IntVector, Cone>> out;
    for (const auto& a : cf.facets) {
        Cone s;
        for (auto i : c)
            if (dot(a, f.rays[i]) == 0) s.push_back(i);
        std::sort(s.begin(), s.end());
        out.emplace_back(a, std::move(s));
    }
    return out;
}

bool covers(const std::vector<std::vector<IntVector>>& cells, const ConeGenerators& region, std::size_t dim) {
    std::vector<IntVector> gens = region.rays;
    for (const auto& l : region.lineality) {
        gens.push_back(l);
        IntVector neg = l;
        for (auto& x : neg) x = -x;
        gens.push_back(std::move(neg));
    }
    const std::size_t q = cone_dimension(gens, dim);
    if (q == 0) return true;
    auto rf = cone_facets(gens, dim);
    std::map<std::vector<IntVector>, int> open;
    bool any = false;
    for (const auto& cell : cells) {
        if (cone_dimension(cell, dim) != q) continue;
        any = true;
        auto cf = cone_facets(cell, dim);
        for (const auto& a : cf.facets) {
            std::vector<IntVector> face;
            for (const auto& g : cell)
                if (dot(a, g) == 0) face.push_back(primitive(std::span<const Integer>(g)));
            std::sort(face.begin(), face.end());
            bool boundary = false;
            for (const auto& b : rf.facets)
                if (std::all_of(face.begin(), face.end(), [&](const IntVector& g) { return dot(b, g) == 0; })) {
                    boundary = true;
                    break;
                }
            if (!boundary) ++open[face];
        }
    }
    if (!any) return false;
    return std::all_of(open.begin(), open.end(), [](const auto& kv) { return kv.second >= 2; });
}

std::vector<IntVector> clip(const ConeFacets& cone, const std::vector<IntVector>& inequalities,
                            const std::vector<IntVector>& equations, std::size_t dim) {
    std::vector<IntVector> ineq = cone.facets, eq = cone.equations;
    ineq.insert(ineq.end(), inequalities.begin(), inequalities.end());
    eq.insert(eq.end(), equations.begin(), equations.end());
    auto g = cone_from_inequalities(ineq, eq, dim);
    if (!g.lineality.empty()) throw InvariantBreach("clipped cone contains a line");
    return g.rays;
}

}  // namespace detail

std::vector<Cone> cone_facet_sets(const Fan& f, const Cone& c) {
    std::vector<Cone> out;
    for (auto& [a, s] : detail::facet_data(f, c)) out.push_back(std::move(s));
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

bool is_face(const Fan& f, const Cone& unsorted, const Cone& face) {
    Cone c = unsorted;
    std::sort(c.begin(), c.end());
    Cone sorted_face = face;
    std::sort(sorted_face.begin(), sorted_face.end());
    if (!std::includes(c.begin(), c.end(), sorted_face.begin(), sorted_face.end())) return false;
    Cone span = c;
    for (auto& [a, s] : detail::facet_data(f, c)) {
        if (!std::includes(s.begin(), s.end(), sorted_face.begin(), sorted_face.end())) continue;
        Cone next;
        std::set_intersection(span.begin(), span.end(), s.begin(), s.end(), std::back_inserter(next));
        span = std::move(next);
    }
    return span == sorted_face;
}

std::vector<Wall> walls(const Fan& f) {
    std::map<Cone, std::vector<std::size_t>> by_face;
    for (std::size_t i = 0; i < f.cones.size(); ++i) {
        if (cone_dim(f, f.cones[i]) != f.rank) continue;
        for (auto& s : cone_facet_sets(f, f.cones[i])) by_face[s].push_back(i);
    }
    std::vector<Wall> out;
    for (auto& [face, owners] : by_face)
        if (owners.size() == 2) out.push_back({face, owners[0], owners[1]});
    return out;
}

// ---------------------------------------------------------------------------

std::vector<std::string> validate_fan(const Fan& f) {
    std::vector<std::string> v;
    auto name = [](std::size_t i) { return "cone " + std::to_string(i); };
    std::set<IntVector> distinct;
    for (std::size_t i = 0; i < f.rays.size(); ++i) {
        const auto& r = f.rays[i];
        std::string ray = "ray " + std::to_string(i);
        if (r.size() != f.rank) {
            v.push_back(ray + ": wrong length");
            return v;
        }
        if (is_zero(r))
            v.push_back(ray + ": zero vector");
        else if (gcd_of(r) != 1)
            v.push_back(ray + ": not primitive");
        if (!distinct.insert(r).second) v.push_back(ray + ": repeated");
    }
    std::vector<bool> used(f.rays.size(), false);
    for (std::size_t i = 0; i < f.cones.size(); ++i) {
        std::set<std::size_t> seen;
        for (auto r : f.cones[i]) {
            if (r >= f.rays.size()) {
                v.push_back(name(i) + ": ray index out of range");
                return v;
            }
            if (!seen.insert(r).second) v.push_back(name(i) + ": repeated ray index");
            used[r] = true;
        }
    }
    for (std::size_t i = 0; i < used.size(); ++i)
        if (!used[i]) v.push_back("ray " + std::to_string(i) + ": not in any cone");
    if (f.cones.empty()) v.push_back("fan has no cones");
    if (!v.empty()) return v;

    Fan g = f;
    for (auto& c : g.cones) std::sort(c.begin(), c.end());
    std::vector<ConeFacets> facets;
    std::vector<bool> convex(g.cones.size(), true);
    for (std::size_t i = 0; i < g.cones.size(); ++i) {
        facets.push_back(facets_of(g, g.cones[i]));
        if (!is_pointed(facets.back(), g.rank)) {
            v.push_back(name(i) + ": not strongly convex");
            convex[i] = false;
            continue;
        }
        auto gens = g.cone_rays(g.cones[i]);
        auto ext = extreme_rays(gens, g.rank);
        if (ext.size() != gens.size()) v.push_back(name(i) + ": lists a ray that is not extreme");
    }
    for (std::size_t i = 0; i < g.cones.size(); ++i)
        for (std::size_t j = i + 1; j < g.cones.size(); ++j) {
            if (!convex[i] || !convex[j]) continue;
            auto inter = detail::clip(facets[i], facets[j].facets, facets[j].equations, g.rank);
            Cone common;
            std::set_intersection(g.cones[i].begin(), g.cones[i].end(), g.cones[j].begin(), g.cones[j].end(),
                                  std::back_inserter(common));
            auto cf = cone_facets(g.cone_rays(common), g.rank);
            bool ok = std::all_of(inter.begin(), inter.end(), [&](const IntVector& x) { return cf.contains(x); });
            ok = ok && is_face(g, g.cones[i], common) && is_face(g, g.cones[j], common);
            if (!ok) v.push_back(name(i) + " and " + name(j) + ": intersection is not a common face");
        }
    return v;
}

Fan star(const Fan& f, const Cone& tau_in) {
    Cone tau = tau_in;
    std::sort(tau.begin(), tau.end());
    std::vector<std::size_t> containing;
    for (std::size_t i = 0; i < f.cones.size(); ++i) {
        Cone c = f.cones[i];
        std::sort(c.begin(), c.end());
        if (std::includes(c.begin(), c.end(), tau.begin(), tau.end()) && is_face(f, c, tau)) containing.push_back(i);
    }
    if (containing.empty()) throw PreconditionError("not-in-fan", "cone is not a cone of the fan");
    IntMatrix q = quotient_map(f.cone_rays(tau), f.rank);

    std::vector<std::optional<IntVector>> image(f.rays.size());
    for (std::size_t i = 0; i < f.rays.size(); ++i) {
        auto w = mat_vec(q, f.rays[i]);
        if (!is_zero(w)) image[i] = primitive(std::span<const Integer>(w));
    }
    std::vector<std::vector<IntVector>> cones;
    std::set<IntVector> used;
    for (auto ci : containing) {
        std::vector<IntVector> gens;
        for (auto r : f.cones[ci])
            if (!std::binary_search(tau.begin(), tau.end(), r) && image[r]) gens.push_back(*image[r]);
        std::vector<IntVector> ext;
        for (auto k : extreme_rays(gens, q.rows())) ext.push_back(gens[k]);
        used.insert(ext.begin(), ext.end());
        cones.push_back(std::move(ext));
    }
    Fan out;
    out.rank = q.rows();
    for (std::size_t i = 0; i < f.rays.size(); ++i)
        if (image[i] && used.count(*image[i]) && !out.ray_index(*image[i])) out.rays.push_back(*image[i]);
    for (const auto& gens : cones) {
        Cone c;
        for (const auto& g : gens) c.push_back(*out.ray_index(g));
        std::sort(c.begin(), c.end());
        out.cones.push_back(std::move(c));
    }
    return out;
}

Fan star_subdivision(const Fan& f, std::span<const Integer> v_in) {
    IntVector v = primitive(v_in);
    if (f.ray_index(v)) throw PreconditionError("existing-ray", "subdivision point is already a ray");
    Fan out;
    out.rank = f.rank;
    out.rays = f.rays;
    out.rays.push_back(v);
    const std::size_t nv = f.rays.size();
    bool hit = false;
    for (const auto& c : f.cones) {
        if (!facets_of(f, c).contains(v)) {
            out.cones.push_back(c);
            continue;
        }
        hit = true;
        for (auto& [a, s] : detail::facet_data(f, c)) {
            if (dot(a, v) == 0) continue;
            Cone joined = s;
            joined.push_back(nv);
            out.cones.push_back(std::move(joined));
        }
    }
    if (!hit) throw PreconditionError("outside-support", "subdivision point is outside the support");
    return out;
}

FanMap resolve(const Fan& f) {
    Fan g = is_simplicial(f) ? f : qfactorialize(f).source;
    for (int guard = 0; guard < 100000; ++guard) {
        std::optional<std::size_t> bad;
        for (std::size_t i = 0; i < g.cones.size() && !bad; ++i)
            if (classify_cone(g, g.cones[i]).kind != ConeKind::smooth) bad = i;
        if (!bad) return identity_map(g, f);
        auto pts = parallelepiped_points(g.cone_rays(g.cones[*bad]), g.rank);
        if (pts.empty()) throw InvariantBreach("singular cone without interior lattice points");
        auto depth = [](const ParallelepipedPoint& p) {
            Rational s = 0;
            for (const auto& c : p.coefficients) s += c;
            return s;
        };
        auto best = std::min_element(pts.begin(), pts.end(), [&](const auto& a, const auto& b) {
            Rational da = depth(a), db = depth(b);
            if (da != db) return da < db;
            return a.point < b.point;
        });
        g = star_subdivision(g, best->point);
    }
    throw InvariantBreach("resolution did not terminate");
}

FanMap qfactorialize(const Fan& f, Integer* base_used) {
    if (is_simplicial(f)) {
        if (base_used) *base_used = 2;
        return identity_map(f, f);
    }
    Integer base = 2;
    for (int attempt = 0; attempt < 64; ++attempt, base *= 2) {
        Fan out{f.rank, f.rays, {}};
        bool ok = true;
        for (const auto& c : f.cones) {
            const std::size_t d = cone_dim(f, c);
            if (c.size() == d) {
                out.cones.push_back(c);
                continue;
            }
            std::vector<Integer> heights(c.size());
            for (std::size_t i = 0; i < c.size(); ++i)
                mpz_pow_ui(heights[i].get_mpz_t(), base.get_mpz_t(), c[i]);
            auto cells = regular_subdivision(f.cone_rays(c), heights, f.rank);
            for (const auto& cell : cells) {
                if (cell.size() != d) ok = false;
                Cone g;
                for (auto k : cell) g.push_back(c[k]);
                out.cones.push_back(std::move(g));
            }
            if (!ok) break;
        }
        if (ok) {
            if (base_used) *base_used = base;
            return identity_map(canonical(out), f);
        }
    }
    throw InvariantBreach("no placing triangulation found");
}

bool lifting_certificate(const Fan& refined, const Fan& original, const Integer& base) {
    auto height = [&](std::size_t i) {
        Integer h;
        mpz_pow_ui(h.get_mpz_t(), base.get_mpz_t(), i);
        return h;
    };
    for (const auto& w : walls(refined)) {
        Cone both = refined.cones[w.left];
        both.insert(both.end(), refined.cones[w.right].begin(), refined.cones[w.right].end());
        std::sort(both.begin(), both.end());
        both.erase(std::unique(both.begin(), both.end()), both.end());
        bool inside = false;
        for (auto c : original.cones) {
            std::sort(c.begin(), c.end());
            if (std::includes(c.begin(), c.end(), both.begin(), both.end())) inside = true;
        }
        if (!inside) continue;
        const Cone& left = refined.cones[w.left];
        RatMatrix a(left.size(), refined.rank);
        RatVector b(left.size());
        for (std::size_t i = 0; i < left.size(); ++i) {
            for (std::size_t j = 0; j < refined.rank; ++j) a(i, j) = refined.rays[left[i]][j];
            b[i] = height(left[i]);
        }
        auto m = solve(a, b);
        if (!m) return false;
        for (auto r : refined.cones[w.right]) {
            if (std::binary_search(w.rays.begin(), w.rays.end(), r)) continue;
            if (!(dot(*m, refined.rays[r]) < Rational(height(r)))) return false;
        }
    }
    return true;
}

bool same_support(const Fan& a, const Fan& b) {
    if (a.rank != b.rank) return false;
    auto one_way = [](const Fan& x, const Fan& y) {
        for (const auto& c : x.cones) {
            auto cf = facets_of(x, c);
            std::vector<std::vector<IntVector>> cells;
            for (const auto& d : y.cones) {
                auto df = facets_of(y, d);
                cells.push_back(detail::clip(cf, df.facets, df.equations, x.rank));
            }
            ConeGenerators region{x.cone_rays(c), {}};
            if (!detail::covers(cells, region, x.rank)) return false;
        }
        return true;
    };
    return one_way(a, b) && one_way(b, a);
}

bool has_convex_support(const Fan& f) {
    std::vector<std::vector<IntVector>> cells;
    for (const auto& c : f.cones) cells.push_back(f.cone_rays(c));
    auto rf = cone_facets(f.rays, f.rank);
    // cone(all rays) as generators: its rays plus lineality
    auto g = cone_from_inequalities(rf.facets, rf.equations, f.rank);
    return detail::covers(cells, g, f.rank);
}

CommonRefinement common_refinement(const Fan& a, const Fan& b) {
    if (a.rank != b.rank) throw PreconditionError("support-mismatch", "fans live in different lattices");
    if (!same_support(a, b)) throw PreconditionError("support-mismatch", "fans have different supports");
    std::vector<std::vector<IntVector>> cells;
    for (const auto& c : a.cones) {
        auto cf = facets_of(a, c);
        for (const auto& d : b.cones) {
            auto df = facets_of(b, d);
            auto cell = detail::clip(cf, df.facets, df.equations, a.rank);
            if (!cell.empty()) cells.push_back(std::move(cell));
        }
    }
    std::sort(cells.begin(), cells.end());
    cells.erase(std::unique(cells.begin(), cells.end()), cells.end());
    // drop cells contained in another cell
    std::vector<std::vector<IntVector>> maximal;
    for (std::size_t i = 0; i < cells.size(); ++i) {
        bool contained = false;
        for (std::size_t j = 0; j < cells.size() && !contained; ++j) {
            if (i == j) continue;
            auto jf = cone_facets(cells[j], a.rank);
            contained = std::all_of(cells[i].begin(), cells[i].end(), [&](const IntVector& x) { return jf.contains(x); });
        }
        if (!contained) maximal.push_back(cells[i]);
    }
    Fan out;
    out.rank = a.rank;
    out.rays = a.rays;
    for (const auto& r : b.rays)
        if (!out.ray_index(r)) out.rays.push_back(r);
    for (const auto& cell : maximal)
        for (const auto& r : cell)
            if (!out.ray_index(r)) out.rays.push_back(r);
    for (const auto& cell : maximal) {
        Cone c;
        for (const auto& r : cell) c.push_back(*out.ray_index(r));
        std::sort(c.begin(), c.end());
        out.cones.push_back(std::move(c));
    }
    if (out.cones.empty()) out.cones.push_back({});
    Fan refined = qfactorialize(out).source;
    return {refined, identity_map(refined, a), identity_map(refined, b)};
}

}  // namespace toricmori
