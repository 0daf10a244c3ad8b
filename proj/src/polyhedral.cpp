#include "toricmori/polyhedral.hpp"

#include <algorithm>
#include <functional>
#include <map>

#include <boost/dynamic_bitset.hpp>

#include "toricmori/errors.hpp"

namespace toricmori {

namespace {

using Bits = boost::dynamic_bitset<>;

IntVector integerize(std::span<const Rational> normal, const Rational& offset) {
    RatVector all(normal.begin(), normal.end());
    all.push_back(offset);
    Integer l = 1;
    for (const auto& q : all) l = lcm(l, q.get_den());
    IntVector out(all.size());
    for (std::size_t i = 0; i < all.size(); ++i) out[i] = all[i].get_num() * (l / all[i].get_den());
    Integer g = gcd_of(out);
    if (g > 1)
        for (auto& x : out) x /= g;
    return out;
}

void normalize(IntVector& v) {
    Integer g = gcd_of(v);
    if (g > 1)
        for (auto& x : v) x /= g;
}

// rank of a list of integer rows
std::size_t int_rank(const std::vector<IntVector>& rows, std::size_t dim) {
    if (rows.empty()) return 0;
    return rank(rows, dim);
}

}  // namespace

void HalfspaceSystem::add(RatVector normal, Rational offset) {
    rows.push_back({std::move(normal), std::move(offset)});
}

bool HalfspaceSystem::contains(std::span<const Rational> x) const {
    for (const auto& r : rows)
        if (dot(r.normal, x) + r.offset < 0) return false;
    return true;
}

bool HalfspaceSystem::contains(std::span<const Integer> x) const {
    for (const auto& r : rows)
        if (dot(r.normal, x) + r.offset < 0) return false;
    return true;
}

bool ConeFacets::contains(std::span<const Integer> x) const {
    for (const auto& e : equations)
        if (dot(e, x) != 0) return false;
    for (const auto& f : facets)
        if (dot(f, x) < 0) return false;
    return true;
}

bool ConeFacets::contains(std::span<const Rational> x) const {
    for (const auto& e : equations)
        if (dot(x, e) != 0) return false;
    for (const auto& f : facets)
        if (dot(x, f) < 0) return false;
    return true;
}

bool ConeFacets::interior(std::span<const Integer> x) const {
    for (const auto& e : equations)
        if (dot(e, x) != 0) return false;
    for (const auto& f : facets)
        if (dot(f, x) <= 0) return false;
    return true;
}

// ---------------------------------------------------------------------------
// double description

ConeGenerators cone_from_inequalities(const std::vector<IntVector>& inequalities,
                                      const std::vector<IntVector>& equations, std::size_t dim) {
    std::vector<IntVector> lin;
    for (std::size_t i = 0; i < dim; ++i) {
        IntVector e(dim);
        e[i] = 1;
        lin.push_back(std::move(e));
    }

    auto eliminate = [&](const IntVector& a) -> std::optional<IntVector> {
        std::size_t p = lin.size();
        for (std::size_t i = 0; i < lin.size(); ++i)
            if (dot(a, lin[i]) != 0) {
                p = i;
                break;
            }
        if (p == lin.size()) return std::nullopt;
        IntVector l = lin[p];
        Integer al = dot(a, l);
        if (al < 0) {
            for (auto& x : l) x = -x;
            al = -al;
        }
        lin.erase(lin.begin() + static_cast<std::ptrdiff_t>(p));
        for (auto& other : lin) {
            Integer c = dot(a, other);
            if (c == 0) continue;
            for (std::size_t j = 0; j < dim; ++j) other[j] = al * other[j] - c * l[j];
            normalize(other);
        }
        return l;
    };

    for (const auto& e : equations) eliminate(e);

    struct Ray {
        IntVector v;
        Bits tight;
    };
    const std::size_t m = inequalities.size();
    std::vector<Ray> rays;

    for (std::size_t k = 0; k < m; ++k) {
        const IntVector& a = inequalities[k];
        // pivot on a lineality direction when one is not orthogonal to a
        std::size_t p = lin.size();
        for (std::size_t i = 0; i < lin.size(); ++i)
            if (dot(a, lin[i]) != 0) {
                p = i;
                break;
            }
        if (p != lin.size()) {
            IntVector l = lin[p];
            Integer al = dot(a, l);
            if (al < 0) {
                for (auto& x : l) x = -x;
                al = -al;
            }
            lin.erase(lin.begin() + static_cast<std::ptrdiff_t>(p));
            for (auto& other : lin) {
                Integer c = dot(a, other);
                if (c == 0) continue;
                for (std::size_t j = 0; j < dim; ++j) other[j] = al * other[j] - c * l[j];
                normalize(other);
            }
            for (auto& r : rays) {
                Integer c = dot(a, r.v);
                if (c != 0) {
                    for (std::size_t j = 0; j < dim; ++j) r.v[j] = al * r.v[j] - c * l[j];
                    normalize(r.v);
                }
                r.tight.set(k);
            }
            Bits t(m);
            for (std::size_t j = 0; j < k; ++j) t.set(j);
            rays.push_back({std::move(l), std::move(t)});
            continue;
        }

        std::vector<Integer> s(rays.size());
        for (std::size_t i = 0; i < rays.size(); ++i) s[i] = dot(a, rays[i].v);
        std::vector<Ray> next;
        for (std::size_t i = 0; i < rays.size(); ++i) {
            if (s[i] > 0) next.push_back(rays[i]);
            if (s[i] == 0) {
                next.push_back(rays[i]);
                next.back().tight.set(k);
            }
        }
        for (std::size_t i = 0; i < rays.size(); ++i) {
            if (s[i] <= 0) continue;
            for (std::size_t j = 0; j < rays.size(); ++j) {
                if (s[j] >= 0) continue;
                Bits z = rays[i].tight & rays[j].tight;
                bool adjacent = true;
                for (std::size_t r = 0; r < rays.size() && adjacent; ++r)
                    if (r != i && r != j && z.is_subset_of(rays[r].tight)) adjacent = false;
                if (!adjacent) continue;
                IntVector v(dim);
                for (std::size_t c = 0; c < dim; ++c) v[c] = s[i] * rays[j].v[c] - s[j] * rays[i].v[c];
                normalize(v);
                z.set(k);
                next.push_back({std::move(v), std::move(z)});
            }
        }
        rays = std::move(next);
    }

    ConeGenerators out;
    for (auto& r : rays) out.rays.push_back(std::move(r.v));
    std::sort(out.rays.begin(), out.rays.end());
    out.rays.erase(std::unique(out.rays.begin(), out.rays.end()), out.rays.end());
    out.lineality = std::move(lin);
    return out;
}

ConeFacets cone_facets(const std::vector<IntVector>& generators, std::size_t dim) {
    std::vector<IntVector> gens;
    for (const auto& g : generators)
        if (!is_zero(g)) gens.push_back(g);
    auto dual = cone_from_inequalities(gens, {}, dim);
    return {std::move(dual.rays), std::move(dual.lineality)};
}

std::size_t cone_dimension(const std::vector<IntVector>& generators, std::size_t dim) {
    return int_rank(generators, dim);
}

bool is_pointed(const ConeFacets& f, std::size_t dim) {
    std::vector<IntVector> all = f.facets;
    all.insert(all.end(), f.equations.begin(), f.equations.end());
    return int_rank(all, dim) == dim;
}

std::vector<std::size_t> extreme_rays(const std::vector<IntVector>& generators, std::size_t dim) {
    auto f = cone_facets(generators, dim);
    if (!is_pointed(f, dim)) throw PreconditionError("not-pointed", "cone contains a line");
    std::vector<std::size_t> out;
    std::vector<IntVector> seen;
    for (std::size_t i = 0; i < generators.size(); ++i) {
        if (is_zero(generators[i])) continue;
        IntVector p = primitive(std::span<const Integer>(generators[i]));
        if (std::find(seen.begin(), seen.end(), p) != seen.end()) continue;
        std::vector<IntVector> tight = f.equations;
        for (const auto& a : f.facets)
            if (dot(a, generators[i]) == 0) tight.push_back(a);
        if (int_rank(tight, dim) == dim - 1) {
            out.push_back(i);
            seen.push_back(std::move(p));
        }
    }
    return out;
}

std::vector<std::size_t> extreme_rays(const std::vector<RatVector>& generators) {
    if (generators.empty()) return {};
    const std::size_t dim = generators.front().size();
    std::vector<IntVector> ints;
    for (const auto& g : generators) ints.push_back(is_zero(g) ? IntVector(dim) : primitive(std::span<const Rational>(g)));
    return extreme_rays(ints, dim);
}

std::vector<IntVector> intersect_cones(const std::vector<IntVector>& a, const std::vector<IntVector>& b,
                                       std::size_t dim) {
    auto fa = cone_facets(a, dim);
    auto fb = cone_facets(b, dim);
    std::vector<IntVector> ineq = fa.facets, eq = fa.equations;
    ineq.insert(ineq.end(), fb.facets.begin(), fb.facets.end());
    eq.insert(eq.end(), fb.equations.begin(), fb.equations.end());
    auto g = cone_from_inequalities(ineq, eq, dim);
    if (!g.lineality.empty()) throw PreconditionError("not-pointed", "intersection contains a line");
    return g.rays;
}

// ---------------------------------------------------------------------------
// Fourier-Motzkin

namespace {

// levels[k] constrains x_0..x_{k-1}; each row is (coefficients..., constant).
// Returns nothing if a constant row is violated.
std::optional<std::vector<std::vector<IntVector>>> fm_projections(const HalfspaceSystem& h) {
    const std::size_t n = h.dim;
    struct Row {
        IntVector v;
        Bits history;
    };
    std::vector<Row> current;
    for (std::size_t i = 0; i < h.rows.size(); ++i) {
        Bits b(h.rows.size());
        b.set(i);
        current.push_back({integerize(h.rows[i].normal, h.rows[i].offset), std::move(b)});
    }
    auto dedupe = [&](std::vector<Row>& rows) -> bool {
        std::map<IntVector, Bits> best;
        for (auto& r : rows) {
            bool constant = std::all_of(r.v.begin(), r.v.end() - 1, [](const Integer& x) { return x == 0; });
            if (constant) {
                if (r.v.back() < 0) return false;
                continue;
            }
            auto it = best.find(r.v);
            if (it == best.end())
                best.emplace(r.v, r.history);
            else if (r.history.count() < it->second.count())
                it->second = r.history;
        }
        rows.clear();
        for (auto& [v, b] : best) rows.push_back({v, b});
        return true;
    };
    if (!dedupe(current)) return std::nullopt;

    std::vector<std::vector<IntVector>> levels(n + 1);
    auto snapshot = [](const std::vector<Row>& rows) {
        std::vector<IntVector> out;
        for (const auto& r : rows) out.push_back(r.v);
        return out;
    };
    levels[n] = snapshot(current);
    std::size_t eliminated = 0;
    for (std::size_t k = n; k-- > 0;) {
        std::vector<Row> pos, neg, next;
        for (auto& r : current) {
            if (r.v[k] > 0)
                pos.push_back(r);
            else if (r.v[k] < 0)
                neg.push_back(r);
            else
                next.push_back(r);
        }
        ++eliminated;
        for (const auto& p : pos)
            for (const auto& q : neg) {
                Bits hist = p.history | q.history;
                if (hist.count() > eliminated + 1) continue;
                IntVector v(n + 1);
                Integer cp = p.v[k], cq = -q.v[k];
                for (std::size_t j = 0; j <= n; ++j) v[j] = cp * q.v[j] + cq * p.v[j];
                normalize(v);
                next.push_back({std::move(v), std::move(hist)});
            }
        if (!dedupe(next)) return std::nullopt;
        current = std::move(next);
        levels[k] = snapshot(current);
    }
    return levels;
}

struct Interval {
    std::optional<Rational> lo, hi;
};

Interval interval_of(const std::vector<IntVector>& rows, std::size_t j, std::span<const Rational> prefix) {
    Interval iv;
    const std::size_t n = rows.empty() ? 0 : rows.front().size() - 1;
    for (const auto& r : rows) {
        if (r[j] == 0) continue;
        Rational rest = r[n];
        for (std::size_t i = 0; i < j; ++i) rest += r[i] * prefix[i];
        Rational bound = -rest / Rational(r[j]);
        if (r[j] > 0) {
            if (!iv.lo || bound > *iv.lo) iv.lo = bound;
        } else {
            if (!iv.hi || bound < *iv.hi) iv.hi = bound;
        }
    }
    return iv;
}

Rational pick(const Interval& iv) {
    bool lo_ok = !iv.lo || *iv.lo <= 0;
    bool hi_ok = !iv.hi || *iv.hi >= 0;
    if (lo_ok && hi_ok) return 0;
    if (!lo_ok) {
        Integer c = ceil_of(*iv.lo);
        if (!iv.hi || Rational(c) <= *iv.hi) return c;
        return *iv.lo;
    }
    Integer f = floor_of(*iv.hi);
    if (!iv.lo || Rational(f) >= *iv.lo) return f;
    return *iv.hi;
}

}  // namespace

std::optional<RatVector> lp_feasible(const HalfspaceSystem& h) {
    auto levels = fm_projections(h);
    if (!levels) return std::nullopt;
    RatVector x(h.dim);
    for (std::size_t j = 0; j < h.dim; ++j) x[j] = pick(interval_of((*levels)[j + 1], j, x));
    if (!h.contains(x)) throw InvariantBreach("Fourier-Motzkin witness violates the system");
    return x;
}

// ---------------------------------------------------------------------------
// simplex

LpResult lp_minimize(const HalfspaceSystem& inequalities, const HalfspaceSystem& equations,
                     std::span<const Rational> objective) {
    const std::size_t n = std::max(inequalities.dim, equations.dim);
    const std::size_t mi = inequalities.rows.size(), me = equations.rows.size();
    const std::size_t m = mi + me;
    const std::size_t nx = 2 * n, ns = mi, na = m;
    const std::size_t cols = nx + ns + na;  // rhs stored separately

    std::vector<RatVector> t(m, RatVector(cols));
    RatVector rhs(m);
    for (std::size_t i = 0; i < m; ++i) {
        const Halfspace& row = i < mi ? inequalities.rows[i] : equations.rows[i - mi];
        for (std::size_t j = 0; j < n; ++j) {
            t[i][j] = row.normal[j];
            t[i][n + j] = -row.normal[j];
        }
        if (i < mi) t[i][nx + i] = -1;
        rhs[i] = -row.offset;
        if (rhs[i] < 0) {
            for (auto& x : t[i]) x = -x;
            rhs[i] = -rhs[i];
        }
        t[i][nx + ns + i] = 1;
    }
    std::vector<std::size_t> basis(m);
    for (std::size_t i = 0; i < m; ++i) basis[i] = nx + ns + i;
    std::vector<bool> active(m, true);

    auto pivot = [&](std::size_t r, std::size_t c) {
        Rational inv = 1 / t[r][c];
        for (auto& x : t[r]) x *= inv;
        rhs[r] *= inv;
        for (std::size_t i = 0; i < m; ++i) {
            if (i == r || !active[i] || t[i][c] == 0) continue;
            Rational f = t[i][c];
            for (std::size_t j = 0; j < cols; ++j)
                if (t[r][j] != 0) t[i][j] -= f * t[r][j];
            rhs[i] -= f * rhs[r];
        }
        basis[r] = c;
    };

    // returns false when unbounded
    auto run = [&](const RatVector& cost, std::size_t allowed) -> bool {
        while (true) {
            std::size_t enter = allowed;
            for (std::size_t j = 0; j < allowed && enter == allowed; ++j) {
                Rational z = cost[j];
                for (std::size_t i = 0; i < m; ++i)
                    if (active[i]) z -= cost[basis[i]] * t[i][j];
                if (z < 0) enter = j;
            }
            if (enter == allowed) return true;
            std::size_t leave = m;
            Rational best;
            for (std::size_t i = 0; i < m; ++i) {
                if (!active[i] || t[i][enter] <= 0) continue;
                Rational ratio = rhs[i] / t[i][enter];
                if (leave == m || ratio < best || (ratio == best && basis[i] < basis[leave])) {
                    leave = i;
                    best = ratio;
                }
            }
            if (leave == m) return false;
            pivot(leave, enter);
        }
    };

    RatVector phase1(cols);
    for (std::size_t j = nx + ns; j < cols; ++j) phase1[j] = 1;
    run(phase1, cols);
    Rational infeas = 0;
    for (std::size_t i = 0; i < m; ++i)
        if (basis[i] >= nx + ns) infeas += rhs[i];
    LpResult result;
    if (infeas > 0) {
        result.status = LpStatus::infeasible;
        return result;
    }
    for (std::size_t i = 0; i < m; ++i) {
        if (basis[i] < nx + ns) continue;
        std::size_t c = nx + ns;
        for (std::size_t j = 0; j < nx + ns; ++j)
            if (t[i][j] != 0) {
                c = j;
                break;
            }
        if (c == nx + ns)
            active[i] = false;
        else
            pivot(i, c);
    }

    RatVector cost(cols);
    for (std::size_t j = 0; j < n && j < objective.size(); ++j) {
        cost[j] = objective[j];
        cost[n + j] = -objective[j];
    }
    result.status = run(cost, nx + ns) ? LpStatus::optimal : LpStatus::unbounded;
    RatVector y(cols);
    for (std::size_t i = 0; i < m; ++i)
        if (active[i]) y[basis[i]] = rhs[i];
    result.x.assign(n, 0);
    for (std::size_t j = 0; j < n; ++j) result.x[j] = y[j] - y[n + j];
    result.value = 0;
    for (std::size_t j = 0; j < n && j < objective.size(); ++j) result.value += objective[j] * result.x[j];
    return result;
}

// ---------------------------------------------------------------------------
// lattice points

ConeGenerators recession_cone(const HalfspaceSystem& h) {
    std::vector<IntVector> ineq;
    for (const auto& r : h.rows) {
        if (is_zero(r.normal)) continue;
        ineq.push_back(primitive(std::span<const Rational>(r.normal)));
    }
    return cone_from_inequalities(ineq, {}, h.dim);
}

namespace {

// Depth-first walk over integer points; `visit` returns true to stop.
bool walk(const std::vector<std::vector<IntVector>>& levels, std::size_t n, RatVector& prefix,
          std::size_t j, const std::function<bool(const RatVector&)>& visit) {
    if (j == n) return visit(prefix);
    Interval iv = interval_of(levels[j + 1], j, prefix);
    if (!iv.lo || !iv.hi) throw InvariantBreach("unbounded coordinate during enumeration");
    Integer lo = ceil_of(*iv.lo), hi = floor_of(*iv.hi);
    for (Integer v = lo; v <= hi; ++v) {
        prefix[j] = v;
        if (walk(levels, n, prefix, j + 1, visit)) return true;
    }
    prefix[j] = 0;
    return false;
}

}  // namespace

std::vector<IntVector> lattice_points(const HalfspaceSystem& h, bool require_bounded) {
    auto levels = fm_projections(h);
    if (!levels) return {};
    auto rec = recession_cone(h);
    if (!rec.rays.empty() || !rec.lineality.empty())
        throw PreconditionError("unbounded", require_bounded ? "polyhedron is unbounded"
                                                             : "cannot enumerate an unbounded polyhedron");
    std::vector<IntVector> out;
    RatVector prefix(h.dim);
    walk(*levels, h.dim, prefix, 0, [&](const RatVector& x) {
        if (h.contains(x)) out.push_back(to_integer(x));
        return false;
    });
    return out;
}

HalfspaceSystem with_box(HalfspaceSystem h, const Integer& radius) {
    for (std::size_t i = 0; i < h.dim; ++i) {
        RatVector e(h.dim);
        e[i] = 1;
        h.add(e, radius);
        e[i] = -1;
        h.add(e, radius);
    }
    return h;
}

std::optional<IntVector> find_lattice_point(const HalfspaceSystem& h) {
    if (!lp_feasible(h)) return std::nullopt;
    const std::size_t n = h.dim;
    std::vector<IntVector> ineq;
    for (const auto& r : h.rows) ineq.push_back(integerize(r.normal, r.offset));
    IntVector t(n + 1);
    t[n] = 1;
    ineq.push_back(t);
    auto gens = cone_from_inequalities(ineq, {}, n + 1);

    std::vector<Rational> lo(n), hi(n);
    bool first = true;
    std::vector<IntVector> directions = gens.lineality;
    for (const auto& r : gens.rays) {
        if (r[n] == 0) {
            directions.push_back(r);
            continue;
        }
        for (std::size_t i = 0; i < n; ++i) {
            Rational v(r[i], r[n]);
            v.canonicalize();
            if (first || v < lo[i]) lo[i] = v;
            if (first || v > hi[i]) hi[i] = v;
        }
        first = false;
    }
    if (first) throw InvariantBreach("feasible polyhedron without vertices");
    HalfspaceSystem box = h;
    for (std::size_t i = 0; i < n; ++i) {
        Rational l = floor_of(lo[i]), u = ceil_of(hi[i]);
        for (const auto& d : directions) {
            if (d[n] != 0) continue;
            if (d[i] < 0) l += d[i];
            if (d[i] > 0) u += d[i];
        }
        RatVector e(n);
        e[i] = 1;
        box.add(e, -l);
        e[i] = -1;
        box.add(e, u);
    }
    auto levels = fm_projections(box);
    if (!levels) return std::nullopt;
    std::optional<IntVector> found;
    RatVector prefix(n);
    walk(*levels, n, prefix, 0, [&](const RatVector& x) {
        if (!box.contains(x)) return false;
        found = to_integer(x);
        return true;
    });
    return found;
}

// ---------------------------------------------------------------------------
// subdivisions

std::vector<std::vector<std::size_t>> regular_subdivision(const std::vector<IntVector>& generators,
                                                          const std::vector<Integer>& heights,
                                                          std::size_t dim) {
    std::vector<IntVector> lifted;
    for (std::size_t i = 0; i < generators.size(); ++i) {
        IntVector l = generators[i];
        l.push_back(heights[i]);
        lifted.push_back(std::move(l));
    }
    IntVector vertical(dim + 1);
    vertical[dim] = 1;
    std::vector<IntVector> all = lifted;
    all.push_back(vertical);
    auto f = cone_facets(all, dim + 1);
    std::vector<std::vector<std::size_t>> cells;
    for (const auto& a : f.facets) {
        if (a[dim] <= 0) continue;
        std::vector<std::size_t> cell;
        for (std::size_t i = 0; i < lifted.size(); ++i)
            if (dot(a, lifted[i]) == 0) cell.push_back(i);
        cells.push_back(std::move(cell));
    }
    if (f.facets.empty()) cells.push_back({});
    std::sort(cells.begin(), cells.end());
    return cells;
}

std::vector<std::vector<std::size_t>> placing_triangulation(const std::vector<IntVector>& generators,
                                                            const std::vector<std::size_t>& keys,
                                                            std::size_t dim) {
    const std::size_t d = cone_dimension(generators, dim);
    Integer base = 2;
    for (int attempt = 0; attempt < 64; ++attempt, base *= 2) {
        std::vector<Integer> heights(generators.size());
        for (std::size_t i = 0; i < generators.size(); ++i) mpz_pow_ui(heights[i].get_mpz_t(), base.get_mpz_t(), keys[i]);
        auto cells = regular_subdivision(generators, heights, dim);
        bool simplicial = std::all_of(cells.begin(), cells.end(), [&](const auto& c) { return c.size() == d; });
        if (simplicial) return cells;
    }
    throw InvariantBreach("placing heights failed to produce a triangulation");
}

std::vector<ParallelepipedPoint> parallelepiped_points(const std::vector<IntVector>& generators,
                                                       std::size_t dim) {
    const std::size_t k = generators.size();
    if (k == 0) return {};
    auto basis = saturated_basis(generators, dim);
    RatMatrix b = to_rational(IntMatrix::from_columns(basis, dim));
    // coordinates of the generators in the saturated basis
    IntMatrix w(k, k);
    for (std::size_t j = 0; j < k; ++j) {
        auto c = solve(b, to_rational(generators[j]));
        if (!c) throw InvariantBreach("generator outside its own span");
        auto ci = to_integer(*c);
        for (std::size_t i = 0; i < k; ++i) w(i, j) = ci[i];
    }
    auto e = hermite_rows(w.transpose());
    if (e.rank != k) throw PreconditionError("dependent", "parallelepiped generators are dependent");
    std::vector<Integer> diag(k);
    for (std::size_t i = 0; i < k; ++i) diag[i] = e.echelon(i, i);
    RatMatrix wr = to_rational(w);

    std::vector<ParallelepipedPoint> out;
    IntVector y(k);
    while (true) {
        auto lambda = solve(wr, to_rational(y));
        RatVector frac(k);
        for (std::size_t i = 0; i < k; ++i) frac[i] = (*lambda)[i] - Rational(floor_of((*lambda)[i]));
        if (!is_zero(frac)) {
            RatVector point(dim);
            for (std::size_t j = 0; j < k; ++j)
                for (std::size_t c = 0; c < dim; ++c) point[c] += frac[j] * generators[j][c];
            out.push_back({to_integer(point), std::move(frac)});
        }
        std::size_t i = 0;
        while (i < k) {
            if (++y[i] < diag[i]) break;
            y[i] = 0;
            ++i;
        }
        if (i == k) break;
    }
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.point < b.point; });
    return out;
}

}  // namespace toricmori
