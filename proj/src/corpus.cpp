#include "toricmori/corpus.hpp"

#include <algorithm>

#include "toricmori/errors.hpp"
#include "toricmori/polyhedral.hpp"

namespace toricmori {

const char* corpus_kind_name(CorpusKind k) {
    switch (k) {
        case CorpusKind::complete: return "complete";
        case CorpusKind::fibration: return "fibration";
        case CorpusKind::birational: return "birational";
    }
    return "?";
}

Divisor random_divisor(std::mt19937_64& rng, std::size_t n) {
    std::uniform_int_distribution<int> den(1, 6);
    Divisor d;
    for (std::size_t i = 0; i < n; ++i) {
        int q = den(rng);
        std::uniform_int_distribution<int> num(-5 * q, 5 * q);
        Rational r(num(rng), q);
        r.canonicalize();
        d.push_back(r);
    }
    return d;
}

namespace {

using Rng = std::mt19937_64;

int uniform(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

IntVector random_vector(Rng& rng, std::size_t n, int box) {
    IntVector v(n);
    for (auto& x : v) x = uniform(rng, -box, box);
    return v;
}

// Face fan of the hull of random lattice points with the origin inside.
std::optional<Fan> face_fan(Rng& rng, std::size_t rank, std::size_t points, int box) {
    std::vector<IntVector> lifted;
    for (std::size_t i = 0; i < points; ++i) {
        IntVector v = random_vector(rng, rank, box);
        if (is_zero(std::span<const Integer>(v))) continue;
        v.push_back(1);
        lifted.push_back(std::move(v));
    }
    if (cone_dimension(lifted, rank + 1) != rank + 1) return std::nullopt;
    auto cf = cone_facets(lifted, rank + 1);
    for (const auto& a : cf.facets)
        if (a[rank] <= 0) return std::nullopt;
    auto ext = extreme_rays(lifted, rank + 1);
    Fan f;
    f.rank = rank;
    for (auto i : ext) {
        IntVector p(lifted[i].begin(), lifted[i].begin() + static_cast<long>(rank));
        f.rays.push_back(primitive(std::span<const Integer>(p)));
    }
    for (const auto& a : cf.facets) {
        Cone c;
        for (std::size_t k = 0; k < ext.size(); ++k)
            if (dot(std::span<const Integer>(a), std::span<const Integer>(lifted[ext[k]])) == 0) c.push_back(k);
        f.cones.push_back(std::move(c));
    }
    f = canonical(std::move(f));
    if (!is_simplicial(f)) f = qfactorialize(f).source;
    return f;
}

// A random primitive point in the relative interior of a random cone.
IntVector interior_point(Rng& rng, const Fan& f) {
    const Cone& c = f.cones[static_cast<std::size_t>(uniform(rng, 0, static_cast<int>(f.cones.size()) - 1))];
    IntVector v(f.rank);
    for (auto i : c) {
        int w = uniform(rng, 1, 3);
        for (std::size_t j = 0; j < f.rank; ++j) v[j] += w * f.rays[i][j];
    }
    return primitive(std::span<const Integer>(v));
}

Fan subdivide(Rng& rng, Fan f, int times, std::size_t max_rays) {
    for (int t = 0; t < times && f.rays.size() < max_rays; ++t) {
        IntVector v = interior_point(rng, f);
        if (f.ray_index(v)) continue;
        f = star_subdivision(f, v);
    }
    return f;
}

std::optional<CorpusEntry> fibration(Rng& rng, std::size_t max_rank, std::size_t max_rays) {
    CorpusEntry e;
    e.kind = CorpusKind::fibration;
    int variant = uniform(rng, 0, max_rank >= 3 ? 3 : 1);
    int a = uniform(rng, -2, 2), b = uniform(rng, -2, 2);
    auto iv = [](std::initializer_list<int> xs) {
        IntVector v;
        for (int x : xs) v.push_back(x);
        return v;
    };
    if (variant == 0) {
        // P^1-bundle over A^1
        Fan s{2, {iv({0, 1}), iv({0, -1}), iv({1, a})}, {{0, 2}, {1, 2}}};
        e.map = FanMap{IntMatrix::from_rows({iv({1, 0})}, 2), s, cone_fan(1, {iv({1})})};
        e.name = "p1-over-a1";
    } else if (variant == 1) {
        // Hirzebruch surface over P^1
        Fan s{2, {iv({0, 1}), iv({0, -1}), iv({1, a}), iv({-1, 0})}, {{0, 2}, {1, 2}, {0, 3}, {1, 3}}};
        Fan t{1, {iv({1}), iv({-1})}, {{0}, {1}}};
        e.map = FanMap{IntMatrix::from_rows({iv({1, 0})}, 2), s, t};
        e.name = "hirzebruch-over-p1";
    } else if (variant == 2) {
        // P^2-bundle over A^1
        Fan s{3, {iv({1, 0, 0}), iv({0, 1, 0}), iv({-1, -1, 0}), iv({a, b, 1})}, {{0, 1, 3}, {0, 2, 3}, {1, 2, 3}}};
        e.map = FanMap{IntMatrix::from_rows({iv({0, 0, 1})}, 3), s, cone_fan(1, {iv({1})})};
        e.name = "p2-over-a1";
    } else {
        // P^1-bundle over A^2
        Fan s{3, {iv({0, 0, 1}), iv({0, 0, -1}), iv({1, 0, a}), iv({0, 1, b})}, {{0, 2, 3}, {1, 2, 3}}};
        e.map = FanMap{IntMatrix::from_rows({iv({1, 0, 0}), iv({0, 1, 0})}, 3), s,
                       cone_fan(2, {iv({1, 0}), iv({0, 1})})};
        e.name = "p1-over-a2";
    }
    e.map.source = subdivide(rng, e.map.source, uniform(rng, 0, 3), max_rays);
    return e;
}

std::optional<CorpusEntry> birational(Rng& rng, std::size_t max_rank, std::size_t max_rays) {
    std::size_t n = static_cast<std::size_t>(uniform(rng, 2, static_cast<int>(max_rank)));
    std::vector<IntVector> rays;
    for (std::size_t i = 0; i < n; ++i) {
        IntVector v = random_vector(rng, n, 2);
        if (is_zero(std::span<const Integer>(v))) return std::nullopt;
        rays.push_back(primitive(std::span<const Integer>(v)));
    }
    if (toricmori::rank(rays, n) != n) return std::nullopt;
    std::sort(rays.begin(), rays.end());
    Fan base = cone_fan(n, rays);
    CorpusEntry e;
    e.kind = CorpusKind::birational;
    e.name = "blowup-of-cone";
    Fan s = subdivide(rng, base, uniform(rng, 1, 4), max_rays);
    e.map = FanMap{IntMatrix::identity(n), s, base};
    return e;
}

}  // namespace

std::vector<CorpusEntry> generate_corpus(std::uint64_t seed, std::size_t count, const CorpusOptions& opt) {
    Rng rng(seed);
    std::vector<CorpusEntry> out;
    std::size_t attempts = 0;
    while (out.size() < count) {
        if (++attempts > 1000 * (count + 1)) throw InvariantBreach("corpus generator made no progress");
        int pick = opt.affine_only ? uniform(rng, 2, 3) : uniform(rng, 0, 3);
        std::optional<CorpusEntry> e;
        if (pick <= 1) {
            std::size_t rank = pick == 0 || opt.max_rank < 3 ? 2 : 3;
            auto f = face_fan(rng, rank, rank == 2 ? 5 : 7, rank == 2 ? 3 : 2);
            if (f) {
                e = CorpusEntry{};
                e->kind = CorpusKind::complete;
                e->name = rank == 2 ? "complete-surface" : "complete-threefold";
                e->map = FanMap{IntMatrix(0, rank), *f, point_fan()};
            }
        } else if (pick == 2) {
            e = fibration(rng, opt.max_rank, opt.max_rays);
            if (e && opt.affine_only && !is_affine_base(e->map)) e.reset();
        } else {
            e = birational(rng, opt.max_rank, opt.max_rays);
        }
        if (!e) continue;
        const Fan& s = e->map.source;
        if (s.rank > opt.max_rank || s.rays.size() > opt.max_rays) continue;
        if (!is_simplicial(s) || !validate_fan(s).empty()) continue;
        if (!check_morphism(e->map).projective) continue;
        e->divisor = random_divisor(rng, s.rays.size());
        e->name += "-" + std::to_string(out.size());
        out.push_back(std::move(*e));
    }
    return out;
}

}  // namespace toricmori
