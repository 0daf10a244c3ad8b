#include "toricmori/mmp.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>

#include "toricmori/errors.hpp"

namespace toricmori {

const char* kind_name(ContractionKind k) {
    switch (k) {
        case ContractionKind::fano: return "fano";
        case ContractionKind::divisorial: return "divisorial";
        case ContractionKind::flipping: return "flipping";
    }
    return "?";
}

namespace {

IntMatrix integer_inverse(const IntMatrix& u) {
    const std::size_t n = u.rows();
    RatMatrix ru = to_rational(u);
    IntMatrix inv(n, n);
    for (std::size_t j = 0; j < n; ++j) {
        RatVector e(n);
        e[j] = 1;
        auto x = solve(ru, e);
        if (!x) throw InvariantBreach("transform matrix is singular");
        auto xi = to_integer(*x);
        for (std::size_t i = 0; i < n; ++i) inv(i, j) = xi[i];
    }
    return inv;
}

struct UnionFind {
    std::vector<std::size_t> parent;
    explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    std::size_t find(std::size_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    void join(std::size_t a, std::size_t b) {
        a = find(a);
        b = find(b);
        if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
};

// Maximal cones glued across a set of walls, and the fan they form.
struct Merged {
    std::vector<std::vector<std::size_t>> groups;  // cone indices
    std::vector<Cone> group_rays;
    bool has_line = false;
    IntMatrix quotient;
    std::vector<std::size_t> dropped;  // source rays that stop being rays
    std::vector<std::optional<std::size_t>> ray_to_z;
    FanMap to_z;
    FanMap z_to_base;
};

Merged merge(const FanMap& m, const std::vector<Wall>& ws) {
    const Fan& x = m.source;
    const std::size_t n = x.rank;
    UnionFind uf(x.cones.size());
    for (const auto& w : ws) uf.join(w.left, w.right);
    Merged out;
    std::map<std::size_t, std::size_t> root_to_group;
    for (std::size_t i = 0; i < x.cones.size(); ++i) {
        auto r = uf.find(i);
        auto [it, fresh] = root_to_group.emplace(r, out.groups.size());
        if (fresh) out.groups.emplace_back();
        out.groups[it->second].push_back(i);
    }
    std::vector<IntVector> lineality;
    for (const auto& g : out.groups) {
        Cone rays;
        for (auto c : g) rays.insert(rays.end(), x.cones[c].begin(), x.cones[c].end());
        std::sort(rays.begin(), rays.end());
        rays.erase(std::unique(rays.begin(), rays.end()), rays.end());
        auto cf = cone_facets(x.cone_rays(rays), n);
        if (!is_pointed(cf, n)) {
            out.has_line = true;
            auto gen = cone_from_inequalities(cf.facets, cf.equations, n);
            lineality.insert(lineality.end(), gen.lineality.begin(), gen.lineality.end());
        }
        out.group_rays.push_back(std::move(rays));
    }

    Fan z;
    z.rank = n;
    IntMatrix to_z = IntMatrix::identity(n);
    IntMatrix z_to_base = m.matrix;
    out.ray_to_z.assign(x.rays.size(), std::nullopt);

    if (out.has_line) {
        auto h = hermite_rows(IntMatrix::from_columns(lineality, n));
        const std::size_t r = h.rank;
        IntMatrix uinv = integer_inverse(h.transform);
        IntMatrix q(n - r, n), s(n, n - r);
        for (std::size_t i = r; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                q(i - r, j) = h.transform(i, j);
                s(j, i - r) = uinv(j, i);
            }
        IntMatrix mz = multiply(m.matrix, s);
        if (!(multiply(mz, q) == m.matrix)) throw InvariantBreach("map does not factor through the quotient");
        z.rank = n - r;
        to_z = q;
        z_to_base = mz;
        out.quotient = q;
        std::set<std::vector<IntVector>> seen;
        for (const auto& rays : out.group_rays) {
            std::vector<IntVector> gens;
            for (auto i : rays) {
                auto w = mat_vec(q, x.rays[i]);
                if (!is_zero(w)) gens.push_back(primitive(std::span<const Integer>(w)));
            }
            std::vector<IntVector> ext;
            if (!gens.empty())
                for (auto k : extreme_rays(gens, z.rank)) ext.push_back(gens[k]);
            std::sort(ext.begin(), ext.end());
            if (!seen.insert(ext).second) continue;
            Cone c;
            for (const auto& e : ext) {
                auto k = z.ray_index(e);
                if (!k) {
                    z.rays.push_back(e);
                    k = z.rays.size() - 1;
                }
                c.push_back(*k);
            }
            std::sort(c.begin(), c.end());
            z.cones.push_back(std::move(c));
        }
        for (std::size_t i = 0; i < x.rays.size(); ++i) {
            auto w = mat_vec(q, x.rays[i]);
            if (!is_zero(w)) out.ray_to_z[i] = z.ray_index(primitive(std::span<const Integer>(w)));
        }
    } else {
        std::vector<Cone> ext_sets;
        std::set<std::size_t> dropped;
        for (const auto& rays : out.group_rays) {
            auto gens = x.cone_rays(rays);
            Cone e;
            for (auto k : extreme_rays(gens, n)) e.push_back(rays[k]);
            std::sort(e.begin(), e.end());
            for (auto r : rays)
                if (!std::binary_search(e.begin(), e.end(), r)) dropped.insert(r);
            ext_sets.push_back(std::move(e));
        }
        for (const auto& e : ext_sets)
            for (auto r : e)
                if (dropped.count(r)) throw InvariantBreach("a ray is interior to one merged cone and extreme in another");
        for (std::size_t i = 0; i < x.rays.size(); ++i)
            if (!dropped.count(i)) {
                out.ray_to_z[i] = z.rays.size();
                z.rays.push_back(x.rays[i]);
            }
        for (const auto& e : ext_sets) {
            Cone c;
            for (auto r : e) c.push_back(*out.ray_to_z[r]);
            z.cones.push_back(std::move(c));
        }
        out.dropped.assign(dropped.begin(), dropped.end());
    }
    if (z.rank == 0) z = point_fan();
    z = canonical(z);
    if (!validate_fan(z).empty()) throw InvariantBreach("merged cones do not form a fan");
    out.to_z = FanMap{to_z, x, z};
    out.z_to_base = FanMap{z_to_base, z, m.target};
    return out;
}

bool in_span(const std::vector<IntVector>& basis, const IntVector& v, std::size_t dim) {
    auto with = basis;
    with.push_back(v);
    return rank(with, dim) == rank(basis, dim);
}

std::vector<Cone> multi_cone_groups(const Merged& mg) {
    std::vector<Cone> out;
    for (std::size_t g = 0; g < mg.groups.size(); ++g)
        if (mg.groups[g].size() > 1) out.push_back(mg.group_rays[g]);
    return out;
}

}  // namespace

ContractionResult contract(const FanMap& m, const std::vector<CurveClass>& face) {
    if (face.empty()) throw PreconditionError("not-a-face", "empty face");
    NECone ne = ne_cone(m);
    const std::size_t nr = m.source.rays.size();
    for (const auto& c : face)
        if (!std::binary_search(ne.generators.begin(), ne.generators.end(), c))
            throw PreconditionError("not-a-face", "class is not a wall class of NE(X/Y)");
    std::vector<IntVector> inside, outside;
    for (const auto& g : ne.generators) (in_span(face, g, nr) ? inside : outside).push_back(g);
    // a supporting functional: zero on the face, at least 1 on the rest
    HalfspaceSystem ineq{nr, {}}, eq{nr, {}};
    for (const auto& g : inside) eq.add(to_rational(g), 0);
    for (const auto& g : outside) ineq.add(to_rational(g), -1);
    if (lp_minimize(ineq, eq, RatVector(nr)).status == LpStatus::infeasible)
        throw PreconditionError("not-a-face", "classes do not span a face of NE(X/Y)");

    std::vector<Wall> ws;
    for (const auto& w : ne.walls)
        if (std::binary_search(inside.begin(), inside.end(), w.cls)) ws.push_back(w.wall);
    Merged mg = merge(m, ws);

    ContractionResult res;
    res.source_to_target = mg.to_z;
    res.target_to_base = mg.z_to_base;
    res.merged_cones = multi_cone_groups(mg);
    const bool is_ray = rank(inside, nr) == 1;
    if (mg.has_line) {
        res.kind = ContractionKind::fano;
        res.quotient = mg.quotient;
        if (res.target_to_base.source.rank >= m.source.rank) throw InvariantBreach("fano contraction kept the rank");
    } else if (!mg.dropped.empty()) {
        if (mg.dropped.size() > 1) {
            if (is_ray) throw InvariantBreach("extremal ray contraction removes several divisors");
            throw PreconditionError("not-elementary", "face contraction removes several divisors");
        }
        res.kind = ContractionKind::divisorial;
        res.removed_ray = mg.dropped.front();
        if (is_ray) {
            const Fan& z = res.target_to_base.source;
            if (!is_simplicial(z)) throw InvariantBreach("divisorial target is not simplicial");
            if (relative_picard(res.target_to_base) + 1 != ne.rho)
                throw InvariantBreach("relative Picard number did not drop by one");
        }
    } else {
        res.kind = ContractionKind::flipping;
        if (res.target_to_base.source.rays.size() != m.source.rays.size())
            throw InvariantBreach("flipping contraction changed the rays");
    }
    return res;
}

namespace {

// All triangulations of cone(rays) that use every ray, as sorted lists of
// sorted simplices.
std::vector<std::vector<Cone>> triangulations(const Fan& x, const Cone& rays, const std::vector<Cone>& original) {
    const std::size_t n = x.rank;
    auto all = x.cone_rays(rays);
    auto cf = cone_facets(all, n);
    IntVector ell(n);
    for (const auto& a : cf.facets)
        for (std::size_t j = 0; j < n; ++j) ell[j] += a[j];
    auto volume = [&](const Cone& s) {
        RatMatrix a(n, n);
        Rational denom = 1;
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) a(i, j) = x.rays[s[i]][j];
            denom *= Rational(dot(ell, x.rays[s[i]]));
        }
        Rational d = determinant(a);
        return Rational(abs(d) / denom);
    };
    Rational total = 0;
    for (const auto& c : original) total += volume(c);

    std::vector<Cone> cand;
    std::vector<std::size_t> pick(n);
    std::function<void(std::size_t, std::size_t)> choose = [&](std::size_t start, std::size_t depth) {
        if (depth == n) {
            Cone s(pick.begin(), pick.end());
            auto gens = x.cone_rays(s);
            if (cone_dimension(gens, n) != n) return;
            auto sf = cone_facets(gens, n);
            for (auto r : rays)
                if (!std::binary_search(s.begin(), s.end(), r) && sf.contains(x.rays[r])) return;
            cand.push_back(s);
            return;
        }
        for (std::size_t i = start; i < rays.size(); ++i) {
            pick[depth] = rays[i];
            choose(i + 1, depth + 1);
        }
    };
    choose(0, 0);

    auto proper = [&](const Cone& a, const Cone& b) {
        auto inter = intersect_cones(x.cone_rays(a), x.cone_rays(b), n);
        Cone common;
        std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(common));
        auto cf2 = cone_facets(x.cone_rays(common), n);
        return std::all_of(inter.begin(), inter.end(), [&](const IntVector& v) { return cf2.contains(v); });
    };
    std::vector<Rational> vol;
    for (const auto& c : cand) vol.push_back(volume(c));
    std::vector<std::vector<bool>> ok(cand.size(), std::vector<bool>(cand.size()));
    for (std::size_t i = 0; i < cand.size(); ++i)
        for (std::size_t j = i + 1; j < cand.size(); ++j) ok[i][j] = ok[j][i] = proper(cand[i], cand[j]);

    std::vector<std::vector<Cone>> out;
    std::vector<std::size_t> chosen;
    std::function<void(std::size_t, Rational)> search = [&](std::size_t i, Rational sum) {
        if (sum == total) {
            std::set<std::size_t> used;
            std::vector<Cone> t;
            for (auto k : chosen) {
                t.push_back(cand[k]);
                used.insert(cand[k].begin(), cand[k].end());
            }
            if (used.size() == rays.size()) out.push_back(t);
            return;
        }
        if (i == cand.size() || sum > total) return;
        if (std::all_of(chosen.begin(), chosen.end(), [&](std::size_t k) { return ok[k][i]; })) {
            chosen.push_back(i);
            search(i + 1, sum + vol[i]);
            chosen.pop_back();
        }
        search(i + 1, sum);
    };
    search(0, 0);
    return out;
}

}  // namespace

FlipResult flip(const FanMap& m, const CurveClass& ray, const Divisor& d) {
    ContractionResult c = contract(m, {ray});
    if (c.kind != ContractionKind::flipping)
        throw PreconditionError("not-flipping", std::string("contraction is ") + kind_name(c.kind));
    Rational value = intersect(d, ray);
    if (value >= 0) throw PreconditionError("not-negative", "D is not negative on the ray");
    const Fan& x = m.source;

    FlipResult res;
    res.contraction = c;
    std::vector<Cone> kept;
    std::vector<Cone> added;
    for (const auto& cone : x.cones) {
        Cone s = cone;
        std::sort(s.begin(), s.end());
        bool inside = std::any_of(c.merged_cones.begin(), c.merged_cones.end(), [&](const Cone& g) {
            return std::includes(g.begin(), g.end(), s.begin(), s.end());
        });
        if (!inside) kept.push_back(s);
    }
    for (const auto& group : c.merged_cones) {
        std::vector<Cone> original;
        for (const auto& cone : x.cones) {
            Cone s = cone;
            std::sort(s.begin(), s.end());
            if (std::includes(group.begin(), group.end(), s.begin(), s.end())) original.push_back(s);
        }
        std::sort(original.begin(), original.end());
        Fan tmp{x.rank, x.rays, original};
        for (const auto& w : walls(tmp)) res.old_values.push_back(intersect(d, wall_relation(tmp, w)));

        std::optional<std::vector<Cone>> chosen;
        std::vector<Rational> chosen_values;
        for (auto& t : triangulations(x, group, original)) {
            std::sort(t.begin(), t.end());
            if (t == original) continue;
            Fan cand{x.rank, x.rays, t};
            std::vector<Rational> vals;
            bool positive = true;
            for (const auto& w : walls(cand)) {
                vals.push_back(intersect(d, wall_relation(cand, w)));
                if (vals.back() <= 0) positive = false;
            }
            if (!positive) continue;
            if (chosen) throw InvariantBreach("flip is not unique");
            chosen = t;
            chosen_values = vals;
        }
        if (!chosen) throw InvariantBreach("no triangulation makes the transformed divisor ample");
        added.insert(added.end(), chosen->begin(), chosen->end());
        res.new_values.insert(res.new_values.end(), chosen_values.begin(), chosen_values.end());
    }
    kept.insert(kept.end(), added.begin(), added.end());
    res.flipped = canonical(Fan{x.rank, x.rays, kept});
    if (!validate_fan(res.flipped).empty()) throw InvariantBreach("flipped cones do not form a fan");
    res.to_w = FanMap{IntMatrix::identity(x.rank), res.flipped, c.target_to_base.source};
    res.to_base = FanMap{m.matrix, res.flipped, m.target};
    res.d_plus = d;
    return res;
}

NegativityResult verify_negativity(const NegativitySide& mu, const NegativitySide& nu) {
    const Fan& w = mu.to_w.target;
    if (fan_key(w) != fan_key(nu.to_w.target))
        throw PreconditionError("different-base", "the two sides map to different fans");
    const IntMatrix id = IntMatrix::identity(w.rank);
    if (!(mu.to_w.matrix == id) || !(nu.to_w.matrix == id))
        throw PreconditionError("not-birational", "negativity needs birational maps to W");
    auto push_mu = pushforward(mu.to_w, mu.d);
    auto push_nu = pushforward(nu.to_w, nu.d);
    for (std::size_t i = 0; i < w.rays.size(); ++i) {
        auto j = nu.to_w.target.ray_index(w.rays[i]);
        if (push_mu[i] != push_nu[*j])
            throw PreconditionError("pushforward-mismatch", "pushforwards to W differ");
    }
    if (!nefness(mu.to_w, scale(mu.d, Rational(-1)), true).nef)
        throw PreconditionError("hypothesis-mu", "-D is not ample over W");
    if (!nefness(nu.to_w, nu.d, true).nef) throw PreconditionError("hypothesis-nu", "D' is not ample over W");

    auto cr = common_refinement(mu.to_w.source, nu.to_w.source);
    Divisor e = subtract(pullback(cr.to_first, mu.d), pullback(cr.to_second, nu.d));
    bool nonzero = false;
    for (std::size_t i = 0; i < e.size(); ++i) {
        if (e[i] < 0) throw InvariantBreach("negativity: E is not effective");
        if (e[i] != 0) {
            nonzero = true;
            if (w.ray_index(cr.fan.rays[i])) throw InvariantBreach("negativity: E is not exceptional over W");
        }
    }
    bool trivial = fan_key(mu.to_w.source) == fan_key(w) && fan_key(nu.to_w.source) == fan_key(w);
    if (!trivial && !nonzero) throw InvariantBreach("negativity: E vanishes over a nontrivial map");
    return {cr.fan, e};
}

MMPTrace run_mmp(const FanMap& m, const Divisor& d) {
    if (!is_simplicial(m.source)) throw PreconditionError("not-simplicial", "run the MMP on a simplicial fan");
    if (d.size() != m.source.rays.size()) throw InputError("divisor length does not match the ray count");
    auto flags = check_morphism(m);
    if (!flags.toric) throw PreconditionError("not-toric", "map does not send cones into cones");
    if (!flags.proper) throw PreconditionError("not-proper", "map is not proper");
    if (!flags.projective) throw PreconditionError("not-projective", "map is not projective");

    MMPTrace trace;
    FanMap cur = m;
    Divisor dcur = d;
    std::set<std::vector<std::vector<IntVector>>> seen{fan_key(cur.source)};
    bool first = true;
    for (int guard = 0; guard < 10000; ++guard) {
        NECone ne = ne_cone(cur);
        if (first) {
            trace.initial_rho = ne.rho;
            first = false;
        }
        std::vector<IntVector> negative;
        for (auto k : ne.extremal)
            if (intersect(dcur, ne.generators[k]) < 0) negative.push_back(ne.generators[k]);
        if (negative.empty()) {
            trace.outcome = MMPOutcome::nef;
            trace.final_map = cur;
            trace.final_divisor = dcur;
            return trace;
        }
        std::sort(negative.begin(), negative.end());
        // birational rays first, then the lexicographically smallest class
        std::optional<ContractionResult> pick;
        IntVector ray;
        for (const auto& r : negative) {
            auto c = contract(cur, {r});
            if (c.kind != ContractionKind::fano) {
                pick = std::move(c);
                ray = r;
                break;
            }
        }
        if (!pick) {
            ray = negative.front();
            pick = contract(cur, {ray});
        }
        MMPStep step;
        step.kind = pick->kind;
        step.ray = ray;
        step.value = intersect(dcur, ray);
        step.rho_before = ne.rho;
        if (pick->kind == ContractionKind::fano) {
            step.fan = pick->target_to_base.source;
            step.rho_after = 0;
            trace.steps.push_back(step);
            trace.outcome = MMPOutcome::fano;
            trace.final_map = cur;
            trace.final_divisor = dcur;
            trace.fano_contraction = *pick;
            return trace;
        }
        if (pick->kind == ContractionKind::divisorial) {
            step.removed_ray = cur.source.rays[*pick->removed_ray];
            Divisor next;
            for (std::size_t i = 0; i < dcur.size(); ++i)
                if (i != *pick->removed_ray) next.push_back(dcur[i]);
            cur = pick->target_to_base;
            dcur = next;
            step.rho_after = relative_picard(cur);
            if (step.rho_after + 1 != step.rho_before) throw InvariantBreach("divisorial step did not drop rho by one");
        } else {
            FlipResult fr = flip(cur, ray, dcur);
            auto neg = verify_negativity({pick->source_to_target, dcur}, {fr.to_w, fr.d_plus});
            step.flip_old_values = fr.old_values;
            step.flip_new_values = fr.new_values;
            step.negativity = neg.e;
            step.negativity_fan = neg.z;
            cur = fr.to_base;
            dcur = fr.d_plus;
            step.rho_after = relative_picard(cur);
            if (step.rho_after != step.rho_before) throw InvariantBreach("flip changed rho");
        }
        if (!seen.insert(fan_key(cur.source)).second) throw InvariantBreach("MMP revisited a fan");
        step.fan = cur.source;
        step.divisor = dcur;
        trace.steps.push_back(std::move(step));
    }
    throw InvariantBreach("MMP did not terminate within the step guard");
}

FaceContraction contract_face(const FanMap& m, const Divisor& d) {
    NefVerdict v = nefness(m, d);
    if (!v.nef) throw PreconditionError("not-nef", "divisor is not nef over the base");
    std::vector<Wall> zero;
    for (std::size_t i = 0; i < v.walls.size(); ++i)
        if (v.values[i] == 0) zero.push_back(v.walls[i].wall);
    Merged mg = merge(m, zero);
    auto sf = support_function(m.source, d);
    for (const auto& g : mg.groups)
        for (auto c : g)
            if (sf.covectors[c] != sf.covectors[g.front()]) throw InvariantBreach("divisor does not descend");
    FaceContraction out;
    out.source_to_z = mg.to_z;
    out.z_to_base = mg.z_to_base;
    out.quotient = mg.quotient;
    out.merged = multi_cone_groups(mg);
    if (!mg.has_line) {
        const Fan& z = out.z_to_base.source;
        Divisor dz(z.rays.size());
        for (std::size_t i = 0; i < m.source.rays.size(); ++i)
            if (auto k = z.ray_index(m.source.rays[i])) dz[*k] = d[i];
        out.descended = dz;
    }
    return out;
}

}  // namespace toricmori
