#include <random>

#include "doctest.h"
#include "toricmori/errors.hpp"
#include "toricmori/exactlin.hpp"
#include "toricmori/polyhedral.hpp"

using namespace toricmori;

namespace {

IntVector iv(std::initializer_list<long> xs) {
    IntVector v;
    for (long x : xs) v.emplace_back(x);
    return v;
}

RatVector rv(std::initializer_list<long> xs) {
    RatVector v;
    for (long x : xs) v.emplace_back(x);
    return v;
}

IntMatrix columns(const std::vector<IntVector>& cols, std::size_t rows) { return IntMatrix::from_columns(cols, rows); }

// Every integer solution of A x = 0 with entries in [-r, r].
std::vector<IntVector> brute_kernel(const IntMatrix& a, long r) {
    std::vector<IntVector> out;
    IntVector x(a.cols(), -r);
    while (true) {
        if (!is_zero(x) && is_zero(mat_vec(a, x))) out.push_back(x);
        std::size_t i = 0;
        while (i < x.size() && x[i] == r) x[i++] = -r;
        if (i == x.size()) break;
        ++x[i];
    }
    return out;
}

// Nonnegative combination test by exact LP.
bool in_cone_lp(const std::vector<IntVector>& gens, const IntVector& x) {
    const std::size_t k = gens.size(), n = x.size();
    HalfspaceSystem ineq{k, {}}, eq{k, {}};
    for (std::size_t i = 0; i < k; ++i) {
        RatVector e(k);
        e[i] = 1;
        ineq.add(e, 0);
    }
    for (std::size_t j = 0; j < n; ++j) {
        RatVector row(k);
        for (std::size_t i = 0; i < k; ++i) row[i] = gens[i][j];
        eq.add(row, -Rational(x[j]));
    }
    RatVector zero(k);
    return lp_minimize(ineq, eq, zero).status != LpStatus::infeasible;
}

}  // namespace

TEST_CASE("primitive") {
    CHECK(primitive(iv({2, 4})) == iv({1, 2}));
    CHECK(primitive(iv({1, 0, 0})) == iv({1, 0, 0}));
    CHECK(primitive(iv({-6, 9})) == iv({-2, 3}));
    CHECK_THROWS_AS(primitive(iv({0, 0})), PreconditionError);
    CHECK(primitive(RatVector{Rational(1, 2), Rational(-1, 3)}) == iv({3, -2}));
}

TEST_CASE("primitive is idempotent and scale invariant") {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<long> d(-30, 30), s(1, 9);
    for (int t = 0; t < 200; ++t) {
        IntVector v = iv({d(rng), d(rng), d(rng)});
        if (is_zero(v)) continue;
        auto p = primitive(v);
        CHECK(gcd_of(p) == 1);
        CHECK(primitive(p) == p);
        IntVector scaled = v;
        long lam = s(rng);
        for (auto& x : scaled) x *= lam;
        CHECK(primitive(scaled) == p);
    }
}

TEST_CASE("rational parsing round trip") {
    CHECK(parse_rational("-7/3") == Rational(-7, 3));
    CHECK(parse_rational("4/2") == 2);
    CHECK(format_rational(Rational(6, -4)) == "-3/2");
    CHECK(format_rational(Rational(5)) == "5");
    CHECK_THROWS_AS(parse_rational("1/0"), InputError);
    CHECK_THROWS_AS(parse_rational("x"), InputError);
    CHECK(floor_of(Rational(-7, 3)) == -3);
    CHECK(ceil_of(Rational(-7, 3)) == -2);
}

TEST_CASE("integer kernel examples") {
    auto a = columns({iv({1, 0}), iv({0, 1}), iv({1, 1})}, 2);
    auto k = integer_kernel(a);
    REQUIRE(k.size() == 1);
    // oracle: the shortest nonzero brute-force solutions are exactly ±k
    auto brute = brute_kernel(a, 1);
    REQUIRE(brute.size() == 2);
    CHECK((k[0] == brute[0] || k[0] == brute[1]));
    CHECK((primitive(k[0]) == iv({1, 1, -1}) || primitive(k[0]) == iv({-1, -1, 1})));

    CHECK(integer_kernel(IntMatrix::identity(2)).empty());

    auto p = columns({iv({0, 0, 1}), iv({1, 0, 1}), iv({0, 1, 1}), iv({1, 1, 1})}, 3);
    auto kp = integer_kernel(p);
    REQUIRE(kp.size() == 1);
    auto bp = brute_kernel(p, 1);
    REQUIRE(bp.size() == 2);
    CHECK((kp[0] == bp[0] || kp[0] == bp[1]));
    CHECK((kp[0] == iv({-1, 1, 1, -1}) || kp[0] == iv({1, -1, -1, 1})));
}

TEST_CASE("integer kernel properties") {
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<long> d(-3, 3), shape(1, 4);
    for (int t = 0; t < 150; ++t) {
        std::size_t r = shape(rng), c = shape(rng) + 1;
        IntMatrix a(r, c);
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = 0; j < c; ++j) a(i, j) = d(rng);
        auto k = integer_kernel(a);
        for (const auto& v : k) CHECK(is_zero(mat_vec(a, v)));
        CHECK(smith_invariants(a).size() + k.size() == c);
        // saturation: the kernel basis has trivial Smith invariants
        if (!k.empty()) {
            for (const auto& s : smith_invariants(IntMatrix::from_rows(k, c))) CHECK(s == 1);
        }
    }
}

TEST_CASE("smith invariants and hermite form") {
    IntMatrix a(2, 2);
    a(0, 0) = 2;
    a(1, 1) = 3;
    CHECK(smith_invariants(a) == std::vector<Integer>{1, 6});
    IntMatrix b = IntMatrix::from_rows({iv({1, 0}), iv({1, 2})}, 2);
    CHECK(smith_invariants(b) == std::vector<Integer>{1, 2});
    auto h = hermite_rows(b);
    CHECK(multiply(h.transform, b) == h.echelon);
    CHECK(determinant(to_rational(h.transform)) * determinant(to_rational(h.transform)) == 1);
}

TEST_CASE("quotient map and saturated basis") {
    auto q = quotient_map({iv({1, 1})}, 2);
    REQUIRE(q.rows() == 1);
    CHECK(is_zero(mat_vec(q, iv({1, 1}))));
    CHECK(gcd_of(q.row_vector(0)) == 1);
    auto s = saturated_basis({iv({2, 2, 0})}, 3);
    REQUIRE(s.size() == 1);
    CHECK(primitive(s[0]) == iv({1, 1, 0}));
}

TEST_CASE("extreme rays") {
    CHECK(extreme_rays(std::vector<RatVector>{rv({1, 0}), rv({0, 1}), rv({1, 1})}) == std::vector<std::size_t>{0, 1});
    CHECK(extreme_rays(std::vector<RatVector>{rv({1, 0})}) == std::vector<std::size_t>{0});
    std::vector<IntVector> g{iv({0, 1, 0, 1}), iv({1, -1, 1, 0}), iv({1, 0, 1, 1})};
    auto e = extreme_rays(g, 4);
    CHECK(e == std::vector<std::size_t>{0, 1});
    // oracle: the third generator is a nonnegative combination of the first two
    CHECK(in_cone_lp({g[0], g[1]}, g[2]));
    CHECK_FALSE(in_cone_lp({g[1], g[2]}, g[0]));
    CHECK_THROWS_AS(extreme_rays(std::vector<RatVector>{rv({1, 0}), rv({-1, 0})}), PreconditionError);
}

TEST_CASE("extreme rays regenerate the cone") {
    std::mt19937_64 rng(3);
    std::uniform_int_distribution<long> d(0, 4), pick(-4, 4);
    for (int t = 0; t < 60; ++t) {
        std::vector<IntVector> gens;
        for (int i = 0; i < 6; ++i) gens.push_back(iv({d(rng) + 1, pick(rng), pick(rng)}));
        auto e = extreme_rays(gens, 3);
        std::vector<IntVector> ext;
        for (auto i : e) ext.push_back(gens[i]);
        for (const auto& g : gens) CHECK(in_cone_lp(ext, g));
        for (std::size_t i = 0; i < ext.size(); ++i) {
            auto rest = ext;
            rest.erase(rest.begin() + static_cast<long>(i));
            CHECK_FALSE(in_cone_lp(rest, ext[i]));
        }
    }
}

TEST_CASE("lp feasibility") {
    HalfspaceSystem a{1, {}};
    a.add(rv({1}), 0);
    a.add(rv({-1}), 1);
    auto w = lp_feasible(a);
    REQUIRE(w);
    CHECK((*w)[0] == 0);

    HalfspaceSystem b{1, {}};
    b.add(rv({1}), -1);
    b.add(rv({-1}), 0);
    CHECK_FALSE(lp_feasible(b));

    HalfspaceSystem p{2, {}};
    p.add(rv({1, 0}), 1);
    p.add(rv({0, 1}), 0);
    p.add(rv({1, 1}), 1);
    auto wp = lp_feasible(p);
    REQUIRE(wp);
    CHECK(*wp == rv({0, 0}));
    CHECK(p.contains(*wp));
}

TEST_CASE("Fourier-Motzkin agrees with the simplex") {
    std::mt19937_64 rng(5);
    std::uniform_int_distribution<long> d(-3, 3), cnt(1, 7);
    for (int t = 0; t < 200; ++t) {
        HalfspaceSystem h{3, {}};
        int m = static_cast<int>(cnt(rng));
        for (int i = 0; i < m; ++i) {
            RatVector n = rv({d(rng), d(rng), d(rng)});
            if (is_zero(n)) continue;
            h.add(n, Rational(d(rng), 2));
        }
        auto fm = lp_feasible(h);
        HalfspaceSystem none{3, {}};
        RatVector zero(3);
        auto sx = lp_minimize(h, none, zero);
        CHECK(fm.has_value() == (sx.status != LpStatus::infeasible));
        if (fm) CHECK(h.contains(*fm));
        if (sx.status != LpStatus::infeasible) CHECK(h.contains(sx.x));
    }
}

TEST_CASE("simplex optimum") {
    // minimize -x - y on the triangle x, y >= 0, x + 2y <= 4, 3x + y <= 6
    HalfspaceSystem h{2, {}};
    h.add(rv({1, 0}), 0);
    h.add(rv({0, 1}), 0);
    h.add(rv({-1, -2}), 4);
    h.add(rv({-3, -1}), 6);
    HalfspaceSystem none{2, {}};
    auto r = lp_minimize(h, none, rv({-1, -1}));
    REQUIRE(r.status == LpStatus::optimal);
    CHECK(r.value == Rational(-14, 5));
    auto u = lp_minimize(h, none, rv({1, 1}));
    CHECK(u.value == 0);
    HalfspaceSystem open{1, {}};
    open.add(rv({1}), 0);
    HalfspaceSystem none1{1, {}};
    CHECK(lp_minimize(open, none1, rv({-1})).status == LpStatus::unbounded);
}

TEST_CASE("lattice points") {
    HalfspaceSystem sq{2, {}};
    sq.add(rv({1, 0}), 0);
    sq.add(rv({-1, 0}), 1);
    sq.add(rv({0, 1}), 0);
    sq.add(rv({0, -1}), 1);
    auto pts = lattice_points(sq);
    std::sort(pts.begin(), pts.end());
    CHECK(pts == std::vector<IntVector>{iv({0, 0}), iv({0, 1}), iv({1, 0}), iv({1, 1})});

    HalfspaceSystem empty{1, {}};
    empty.add(rv({1}), -1);
    empty.add(rv({-1}), 0);
    CHECK(lattice_points(empty).empty());

    HalfspaceSystem tri{2, {}};
    tri.add(rv({1, 0}), 0);
    tri.add(rv({0, 1}), 0);
    tri.add(rv({-1, -1}), 2);
    auto t = lattice_points(tri);
    // oracle: scan the bounding box
    std::size_t count = 0;
    for (long x = 0; x <= 2; ++x)
        for (long y = 0; y <= 2; ++y)
            if (x + y <= 2) ++count;
    CHECK(t.size() == count);
    CHECK(t.size() == 6);

    HalfspaceSystem ray{1, {}};
    ray.add(rv({1}), 0);
    CHECK_THROWS_AS(lattice_points(ray), PreconditionError);
}

TEST_CASE("lattice points agree with a box scan") {
    std::mt19937_64 rng(17);
    std::uniform_int_distribution<long> d(-4, 4), off(0, 12);
    for (int t = 0; t < 80; ++t) {
        HalfspaceSystem h = with_box(HalfspaceSystem{3, {}}, 5);
        for (int i = 0; i < 4; ++i) {
            RatVector n = rv({d(rng), d(rng), d(rng)});
            if (is_zero(n)) continue;
            h.add(n, Rational(off(rng), 3));
        }
        auto pts = lattice_points(h);
        std::sort(pts.begin(), pts.end());
        std::vector<IntVector> scan;
        for (long x = -5; x <= 5; ++x)
            for (long y = -5; y <= 5; ++y)
                for (long z = -5; z <= 5; ++z) {
                    IntVector p = iv({x, y, z});
                    if (h.contains(p)) scan.push_back(p);
                }
        CHECK(pts == scan);
    }
}

TEST_CASE("lattice point search on unbounded polyhedra") {
    HalfspaceSystem h{2, {}};
    h.add(rv({2, 0}), -1);  // x >= 1/2
    h.add(rv({0, 3}), -1);  // y >= 1/3
    auto p = find_lattice_point(h);
    REQUIRE(p);
    CHECK(h.contains(*p));
    HalfspaceSystem strip{2, {}};
    strip.add(rv({2, 0}), -1);
    strip.add(rv({-2, 0}), 1);  // x = 1/2
    CHECK_FALSE(find_lattice_point(strip));
    HalfspaceSystem thin{2, {}};
    thin.add(rv({3, -2}), 0);
    thin.add(rv({-3, 2}), 1);  // 0 <= 3x - 2y <= 1 has integer points
    auto q = find_lattice_point(thin);
    REQUIRE(q);
    CHECK(thin.contains(*q));
}

TEST_CASE("regular subdivisions and parallelepipeds") {
    std::vector<IntVector> quad{iv({0, 0, 1}), iv({1, 0, 1}), iv({0, 1, 1}), iv({1, 1, 1})};
    auto cells = placing_triangulation(quad, {0, 1, 2, 3}, 3);
    REQUIRE(cells.size() == 2);
    for (const auto& c : cells) CHECK(c.size() == 3);
    auto pts = parallelepiped_points({iv({1, 0}), iv({1, 2})}, 2);
    REQUIRE(pts.size() == 1);
    CHECK(pts[0].point == iv({1, 1}));
    CHECK(pts[0].coefficients == RatVector{Rational(1, 2), Rational(1, 2)});
    auto p3 = parallelepiped_points({iv({1, 0}), iv({-1, 3})}, 2);
    CHECK(p3.size() == 2);
}
