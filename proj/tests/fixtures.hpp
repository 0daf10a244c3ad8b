#pragma once
// Small fans used across the test suites.

#include <algorithm>
#include <initializer_list>
#include <random>

#include "toricmori/fan.hpp"

namespace fixtures {

using namespace toricmori;

inline IntVector iv(std::initializer_list<long> xs) {
    IntVector v;
    for (long x : xs) v.emplace_back(x);
    return v;
}

inline RatVector rv(std::initializer_list<long> xs) {
    RatVector v;
    for (long x : xs) v.emplace_back(x);
    return v;
}

inline Rational q(long p, long d = 1) {
    Rational r(p, d);
    r.canonicalize();
    return r;
}

inline Fan make_fan(std::size_t rank, std::vector<IntVector> rays, std::vector<Cone> cones) {
    return Fan{rank, std::move(rays), std::move(cones)};
}

inline Fan p1() { return make_fan(1, {iv({1}), iv({-1})}, {{0}, {1}}); }

inline Fan p2() { return make_fan(2, {iv({1, 0}), iv({0, 1}), iv({-1, -1})}, {{0, 1}, {1, 2}, {0, 2}}); }

// Hirzebruch surface F_1.
inline Fan f1() {
    return make_fan(2, {iv({1, 0}), iv({0, 1}), iv({-1, 1}), iv({0, -1})}, {{0, 1}, {1, 2}, {2, 3}, {0, 3}});
}

inline Fan orthant(std::size_t n) {
    Fan f{n, {}, {{}}};
    for (std::size_t i = 0; i < n; ++i) {
        IntVector e(n);
        e[i] = 1;
        f.rays.push_back(e);
        f.cones[0].push_back(i);
    }
    return f;
}

// Blow-up of the plane at the origin; ray 2 is the exceptional one.
inline Fan blowup() { return make_fan(2, {iv({1, 0}), iv({0, 1}), iv({1, 1})}, {{0, 2}, {1, 2}}); }

inline FanMap blowup_map() { return identity_map(blowup(), orthant(2)); }

// A^1 x P^1 projected to A^1.
inline FanMap a1_p1() {
    Fan src = make_fan(2, {iv({0, 1}), iv({0, -1}), iv({1, 0})}, {{0, 2}, {1, 2}});
    Fan tgt = make_fan(1, {iv({1})}, {{0}});
    IntMatrix m(1, 2);
    m(0, 0) = 1;
    return {m, src, tgt};
}

inline FanMap to_point(const Fan& f) { return {IntMatrix(0, f.rank), f, point_fan()}; }

inline std::vector<IntVector> quadric_rays() {
    return {iv({0, 0, 1}), iv({1, 0, 1}), iv({0, 1, 1}), iv({1, 1, 1})};
}
inline Fan quadric_cone() { return make_fan(3, quadric_rays(), {{0, 1, 2, 3}}); }
// Triangulation A uses the diagonal p1 p4, B the diagonal p2 p3.
inline Fan quadric_a() { return make_fan(3, quadric_rays(), {{0, 1, 3}, {0, 2, 3}}); }
inline Fan quadric_b() { return make_fan(3, quadric_rays(), {{0, 1, 2}, {1, 2, 3}}); }
inline FanMap quadric_a_map() { return identity_map(quadric_a(), quadric_cone()); }

// The half plane index of v for angular sorting: 0 for angles in [0, pi).
inline int half(const IntVector& v) { return (v[1] > 0 || (v[1] == 0 && v[0] > 0)) ? 0 : 1; }

inline bool angle_less(const IntVector& a, const IntVector& b) {
    int ha = half(a), hb = half(b);
    if (ha != hb) return ha < hb;
    return a[0] * b[1] - a[1] * b[0] > 0;
}

// Complete rank-2 fan on random primitive rays, or nothing if some gap
// between consecutive rays is at least pi.
inline std::optional<Fan> random_complete_fan2(std::mt19937_64& rng, int count, int box) {
    std::uniform_int_distribution<int> d(-box, box);
    std::vector<IntVector> rays;
    while (static_cast<int>(rays.size()) < count) {
        IntVector v = iv({d(rng), d(rng)});
        if (is_zero(v)) continue;
        v = primitive(std::span<const Integer>(v));
        if (std::find(rays.begin(), rays.end(), v) == rays.end()) rays.push_back(v);
    }
    std::sort(rays.begin(), rays.end(), angle_less);
    Fan f{2, rays, {}};
    for (std::size_t i = 0; i < rays.size(); ++i) {
        const auto& a = rays[i];
        const auto& b = rays[(i + 1) % rays.size()];
        if (a[0] * b[1] - a[1] * b[0] <= 0) return std::nullopt;
        Cone c{i, (i + 1) % rays.size()};
        std::sort(c.begin(), c.end());
        f.cones.push_back(c);
    }
    return f;
}

}  // namespace fixtures
