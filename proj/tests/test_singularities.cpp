#include <random>

#include "doctest.h"
#include "fixtures.hpp"
#include "toricmori/errors.hpp"
#include "toricmori/singularities.hpp"

using namespace toricmori;
using namespace fixtures;

namespace {

Divisor zero(const Fan& f) { return Divisor(f.rays.size()); }

// Linear phi on a full-dimensional simplicial cone from phi(v_i) = -1,
// solved independently of the support function code.
RatVector phi_k(const Fan& f, const Cone& c) {
    RatMatrix a(f.rank, f.rank);
    RatVector rhs(f.rank, Rational(-1));
    for (std::size_t i = 0; i < f.rank; ++i)
        for (std::size_t j = 0; j < f.rank; ++j) a(i, j) = f.rays[c[i]][j];
    return *solve(a, rhs);
}

// Brute force over a box: primitive non-ray points x of the cone with
// discrepancy -1 - phi(x) <= 0.
std::vector<IntVector> brute_low(const Fan& f, long box) {
    std::vector<IntVector> out;
    const Cone& c = f.cones[0];
    auto cf = facets_of(f, c);
    RatVector phi = phi_k(f, c);
    IntVector x(f.rank, -box);
    while (true) {
        if (!is_zero(x) && gcd_of(x) == 1 && cf.contains(x) && !f.ray_index(x) && -1 - dot(phi, x) <= 0)
            out.push_back(x);
        std::size_t i = 0;
        while (i < x.size() && x[i] == box) x[i++] = -box;
        if (i == x.size()) break;
        ++x[i];
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

TEST_CASE("discrepancy") {
    Fan a1 = cone_fan(2, {iv({1, 0}), iv({1, 2})});
    CHECK(discrepancy(a1, zero(a1), iv({1, 1})) == 0);
    Fan third = cone_fan(2, {iv({1, 0}), iv({-1, 3})});
    CHECK(discrepancy(third, zero(third), iv({0, 1})) == q(-1, 3));
    Fan half = cone_fan(3, {iv({1, 0, 0}), iv({0, 1, 0}), iv({1, 1, 2})});
    CHECK(discrepancy(half, zero(half), iv({1, 1, 1})) == q(1, 2));

    CHECK_THROWS_AS(discrepancy(quadric_cone(), Divisor{q(1, 2), 0, 0, 0}, iv({1, 1, 2})), PreconditionError);
    // the quadric cone is Gorenstein with phi = -z
    CHECK(discrepancy(quadric_cone(), zero(quadric_cone()), iv({1, 1, 2})) == 1);
}

TEST_CASE("classify_pair") {
    auto s = classify_pair(orthant(2), zero(orthant(2)));
    CHECK(s.verdict == Verdict::terminal);
    CHECK(s.min_discrepancy == Rational(1));

    auto a1 = classify_pair(cone_fan(2, {iv({1, 0}), iv({1, 2})}), Divisor(2));
    CHECK(a1.verdict == Verdict::canonical);
    CHECK(a1.crepant == std::vector<IntVector>{iv({1, 1})});
    CHECK(a1.min_discrepancy == Rational(0));

    auto a2 = classify_pair(cone_fan(2, {iv({1, 0}), iv({1, 3})}), Divisor(2));
    CHECK(a2.verdict == Verdict::canonical);
    CHECK(a2.crepant == std::vector<IntVector>{iv({1, 1}), iv({1, 2})});

    auto t = classify_pair(cone_fan(2, {iv({1, 0}), iv({-1, 3})}), Divisor(2));
    CHECK(t.verdict == Verdict::klt);
    CHECK(t.min_discrepancy == q(-1, 3));
    CHECK(t.witness == iv({0, 1}));

    Fan half = cone_fan(3, {iv({1, 0, 0}), iv({0, 1, 0}), iv({1, 1, 2})});
    auto h = classify_pair(half, zero(half));
    CHECK(h.verdict == Verdict::terminal);
    CHECK(h.min_discrepancy == q(1, 2));

    auto qc = classify_pair(quadric_cone(), zero(quadric_cone()));
    CHECK(qc.verdict == Verdict::terminal);
    CHECK(qc.min_discrepancy == Rational(1));

    CHECK(classify_pair(orthant(2), Divisor{q(1, 2), q(1, 3)}).verdict == Verdict::klt);
    CHECK(classify_pair(orthant(2), Divisor{q(1), q(1, 3)}).verdict == Verdict::lc);
    CHECK(classify_pair(orthant(2), Divisor{q(3, 2), 0}).verdict == Verdict::not_lc);
    CHECK(classify_pair(quadric_cone(), Divisor{q(1, 2), 0, 0, 0}).verdict == Verdict::not_q_cartier);
    CHECK_THROWS_AS(classify_pair(orthant(2), Divisor{q(-1, 2), 0}), PreconditionError);
}

TEST_CASE("property: discrepancy vanishes at rays when D = 0") {
    std::mt19937_64 rng(51);
    int done = 0;
    while (done < 20) {
        auto f = random_complete_fan2(rng, 6, 4);
        if (!f) continue;
        for (const auto& r : f->rays) CHECK(discrepancy(*f, zero(*f), r) == 0);
        ++done;
    }
}

TEST_CASE("property: discrepancy is affine in the boundary") {
    std::mt19937_64 rng(52);
    std::uniform_int_distribution<long> num(0, 6), den(1, 6), c(-4, 4);
    int done = 0;
    while (done < 20) {
        auto f = random_complete_fan2(rng, 5, 3);
        if (!f) continue;
        Divisor d1, d2;
        for (std::size_t i = 0; i < f->rays.size(); ++i) {
            d1.push_back(q(num(rng), den(rng)));
            d2.push_back(q(num(rng), den(rng)));
        }
        IntVector v = iv({c(rng), c(rng)});
        if (is_zero(v)) continue;
        v = primitive(std::span<const Integer>(v));
        Rational lhs = discrepancy(*f, add(d1, d2), v) - discrepancy(*f, d1, v) - discrepancy(*f, d2, v) +
                       discrepancy(*f, zero(*f), v);
        CHECK(lhs == 0);
        ++done;
    }
}

TEST_CASE("property: terminal verdict matches brute force") {
    std::mt19937_64 rng(53);
    std::uniform_int_distribution<long> c(-3, 3);
    int done = 0;
    while (done < 30) {
        std::size_t n = done % 2 ? 3 : 2;
        std::vector<IntVector> gens;
        for (std::size_t i = 0; i < n; ++i) {
            IntVector v(n);
            for (auto& x : v) x = c(rng);
            if (is_zero(v)) break;
            gens.push_back(primitive(std::span<const Integer>(v)));
        }
        if (gens.size() != n || rank(gens, n) != n) continue;
        Fan f = cone_fan(n, gens);
        auto cls = classify_pair(f, zero(f));
        auto brute = brute_low(f, n == 2 ? 12 : 7);
        CHECK(cls.nonterminal == brute);
        CHECK((cls.verdict == Verdict::terminal) == brute.empty());
        ++done;
    }
}

TEST_CASE("property: klt boundaries stay klt on simplicial fans") {
    std::mt19937_64 rng(54);
    std::uniform_int_distribution<long> num(0, 5);
    int done = 0;
    while (done < 25) {
        auto f = random_complete_fan2(rng, 5, 3);
        if (!f) continue;
        Divisor d;
        for (std::size_t i = 0; i < f->rays.size(); ++i) d.push_back(q(num(rng), 6));
        auto cls = classify_pair(*f, d);
        CHECK((cls.verdict == Verdict::terminal || cls.verdict == Verdict::canonical || cls.verdict == Verdict::klt));
        ++done;
    }
}
