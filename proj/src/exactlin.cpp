#include "toricmori/exactlin.hpp"

#include <algorithm>
#include <cctype>

#include "toricmori/errors.hpp"

namespace toricmori {

namespace {

bool parse_integer(std::string_view s, Integer& out) {
    if (s.empty()) return false;
    std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size()) return false;
    for (std::size_t j = i; j < s.size(); ++j)
        if (!std::isdigit(static_cast<unsigned char>(s[j]))) return false;
    std::string digits(s[0] == '+' ? s.substr(1) : s);
    return out.set_str(digits, 10) == 0;
}

}  // namespace

Rational parse_rational(std::string_view text) {
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
    Integer num, den = 1;
    auto slash = text.find('/');
    bool ok = slash == std::string_view::npos
                  ? parse_integer(text, num)
                  : parse_integer(text.substr(0, slash), num) && parse_integer(text.substr(slash + 1), den);
    if (!ok) throw InputError("malformed rational '" + std::string(text) + "'");
    if (den == 0) throw InputError("zero denominator in '" + std::string(text) + "'");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

std::string format_rational(const Rational& value) {
    Rational q = value;
    q.canonicalize();
    if (q.get_den() == 1) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Integer floor_of(const Rational& q) {
    Integer r;
    mpz_fdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    return r;
}

Integer ceil_of(const Rational& q) {
    Integer r;
    mpz_cdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    return r;
}

Integer gcd_of(std::span<const Integer> v) {
    Integer g = 0;
    for (const auto& x : v) g = gcd(g, x);
    return g;
}

IntVector primitive(std::span<const Integer> v) {
    Integer g = gcd_of(v);
    if (g == 0) throw PreconditionError("zero-vector", "the zero vector has no primitive generator");
    IntVector out(v.begin(), v.end());
    if (g != 1)
        for (auto& x : out) x /= g;
    return out;
}

IntVector primitive(std::span<const Rational> v) {
    Integer l = 1;
    for (const auto& q : v) l = lcm(l, q.get_den());
    IntVector scaled(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) scaled[i] = v[i].get_num() * (l / v[i].get_den());
    return primitive(std::span<const Integer>(scaled));
}

bool is_zero(std::span<const Integer> v) {
    return std::all_of(v.begin(), v.end(), [](const Integer& x) { return x == 0; });
}

bool is_zero(std::span<const Rational> v) {
    return std::all_of(v.begin(), v.end(), [](const Rational& x) { return x == 0; });
}

RatVector to_rational(std::span<const Integer> v) { return RatVector(v.begin(), v.end()); }

IntVector to_integer(std::span<const Rational> v) {
    IntVector out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (v[i].get_den() != 1) throw InvariantBreach("expected an integral vector");
        out[i] = v[i].get_num();
    }
    return out;
}

Rational dot(std::span<const Rational> a, std::span<const Rational> b) {
    Rational s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

Integer dot(std::span<const Integer> a, std::span<const Integer> b) {
    Integer s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

Rational dot(std::span<const Rational> a, std::span<const Integer> b) {
    Rational s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

IntVector mat_vec(const IntMatrix& m, std::span<const Integer> v) {
    IntVector out(m.rows());
    for (std::size_t r = 0; r < m.rows(); ++r) out[r] = dot(m.row(r), v);
    return out;
}

RatVector mat_vec(const RatMatrix& m, std::span<const Rational> v) {
    RatVector out(m.rows());
    for (std::size_t r = 0; r < m.rows(); ++r) out[r] = dot(m.row(r), v);
    return out;
}

IntMatrix multiply(const IntMatrix& a, const IntMatrix& b) {
    IntMatrix out(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            if (a(i, k) == 0) continue;
            for (std::size_t j = 0; j < b.cols(); ++j) out(i, j) += a(i, k) * b(k, j);
        }
    return out;
}

RatMatrix to_rational(const IntMatrix& m) {
    RatMatrix out(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = m(i, j);
    return out;
}

bool lex_less(std::span<const Integer> a, std::span<const Integer> b) {
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

// ---------------------------------------------------------------------------

RowEchelon rref(RatMatrix m) {
    RowEchelon out;
    std::size_t r = 0;
    for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
        std::size_t p = r;
        while (p < m.rows() && m(p, c) == 0) ++p;
        if (p == m.rows()) continue;
        m.swap_rows(p, r);
        Rational inv = 1 / m(r, c);
        for (std::size_t j = c; j < m.cols(); ++j) m(r, j) *= inv;
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == r || m(i, c) == 0) continue;
            Rational f = m(i, c);
            for (std::size_t j = c; j < m.cols(); ++j) m(i, j) -= f * m(r, j);
        }
        out.pivots.push_back(c);
        ++r;
    }
    out.reduced = std::move(m);
    return out;
}

std::size_t rank(const RatMatrix& m) { return rref(m).pivots.size(); }

std::size_t rank(const std::vector<IntVector>& vectors, std::size_t dim) {
    RatMatrix m(vectors.size(), dim);
    for (std::size_t i = 0; i < vectors.size(); ++i)
        for (std::size_t j = 0; j < dim; ++j) m(i, j) = vectors[i][j];
    return rank(m);
}

std::vector<RatVector> nullspace(const RatMatrix& m) {
    auto e = rref(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto p : e.pivots) is_pivot[p] = true;
    std::vector<RatVector> basis;
    for (std::size_t f = 0; f < m.cols(); ++f) {
        if (is_pivot[f]) continue;
        RatVector v(m.cols());
        v[f] = 1;
        for (std::size_t i = 0; i < e.pivots.size(); ++i) v[e.pivots[i]] = -e.reduced(i, f);
        basis.push_back(std::move(v));
    }
    return basis;
}

std::optional<RatVector> solve(const RatMatrix& m, std::span<const Rational> b) {
    RatMatrix aug(m.rows(), m.cols() + 1);
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) aug(i, j) = m(i, j);
        aug(i, m.cols()) = b[i];
    }
    auto e = rref(std::move(aug));
    if (!e.pivots.empty() && e.pivots.back() == m.cols()) return std::nullopt;
    RatVector x(m.cols());
    for (std::size_t i = 0; i < e.pivots.size(); ++i) x[e.pivots[i]] = e.reduced(i, m.cols());
    return x;
}

Rational determinant(RatMatrix m) {
    const std::size_t n = m.rows();
    Rational det = 1;
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && m(p, c) == 0) ++p;
        if (p == n) return 0;
        if (p != c) {
            m.swap_rows(p, c);
            det = -det;
        }
        det *= m(c, c);
        for (std::size_t i = c + 1; i < n; ++i) {
            if (m(i, c) == 0) continue;
            Rational f = m(i, c) / m(c, c);
            for (std::size_t j = c; j < n; ++j) m(i, j) -= f * m(c, j);
        }
    }
    return det;
}

// ---------------------------------------------------------------------------

IntegerEchelon hermite_rows(const IntMatrix& a) {
    IntegerEchelon out;
    IntMatrix h = a;
    IntMatrix u = IntMatrix::identity(a.rows());
    auto row_sub = [&](std::size_t dst, std::size_t src, const Integer& q) {
        for (std::size_t j = 0; j < h.cols(); ++j) h(dst, j) -= q * h(src, j);
        for (std::size_t j = 0; j < u.cols(); ++j) u(dst, j) -= q * u(src, j);
    };
    auto row_neg = [&](std::size_t r) {
        for (std::size_t j = 0; j < h.cols(); ++j) h(r, j) = -h(r, j);
        for (std::size_t j = 0; j < u.cols(); ++j) u(r, j) = -u(r, j);
    };
    std::size_t r = 0;
    for (std::size_t c = 0; c < h.cols() && r < h.rows(); ++c) {
        while (true) {
            std::size_t best = h.rows();
            for (std::size_t i = r; i < h.rows(); ++i)
                if (h(i, c) != 0 && (best == h.rows() || abs(h(i, c)) < abs(h(best, c)))) best = i;
            if (best == h.rows()) break;
            h.swap_rows(best, r);
            u.swap_rows(best, r);
            bool done = true;
            for (std::size_t i = r + 1; i < h.rows(); ++i) {
                if (h(i, c) == 0) continue;
                Integer q;
                mpz_fdiv_q(q.get_mpz_t(), h(i, c).get_mpz_t(), h(r, c).get_mpz_t());
                row_sub(i, r, q);
                if (h(i, c) != 0) done = false;
            }
            if (done) break;
        }
        if (h(r, c) == 0) continue;
        if (h(r, c) < 0) row_neg(r);
        for (std::size_t i = 0; i < r; ++i) {
            Integer q;
            mpz_fdiv_q(q.get_mpz_t(), h(i, c).get_mpz_t(), h(r, c).get_mpz_t());
            if (q != 0) row_sub(i, r, q);
        }
        out.pivots.push_back(c);
        ++r;
    }
    out.rank = r;
    out.transform = std::move(u);
    out.echelon = std::move(h);
    return out;
}

std::vector<IntVector> integer_kernel(const IntMatrix& a) {
    // Row-reduce A^T: rows of the transform that hit zero rows span ker A.
    auto e = hermite_rows(a.transpose());
    std::vector<IntVector> basis;
    for (std::size_t i = e.rank; i < e.transform.rows(); ++i) basis.push_back(e.transform.row_vector(i));
    return basis;
}

std::vector<Integer> smith_invariants(const IntMatrix& a) {
    IntMatrix m = a;
    const std::size_t rows = m.rows(), cols = m.cols();
    std::vector<Integer> diag;
    for (std::size_t t = 0; t < std::min(rows, cols); ++t) {
        while (true) {
            std::size_t bi = rows, bj = cols;
            for (std::size_t i = t; i < rows; ++i)
                for (std::size_t j = t; j < cols; ++j)
                    if (m(i, j) != 0 && (bi == rows || abs(m(i, j)) < abs(m(bi, bj)))) {
                        bi = i;
                        bj = j;
                    }
            if (bi == rows) return diag;
            m.swap_rows(bi, t);
            for (std::size_t i = 0; i < rows; ++i) std::swap(m(i, bj), m(i, t));
            bool clean = true;
            for (std::size_t i = t + 1; i < rows; ++i) {
                if (m(i, t) == 0) continue;
                Integer q;
                mpz_fdiv_q(q.get_mpz_t(), m(i, t).get_mpz_t(), m(t, t).get_mpz_t());
                for (std::size_t j = t; j < cols; ++j) m(i, j) -= q * m(t, j);
                if (m(i, t) != 0) clean = false;
            }
            for (std::size_t j = t + 1; j < cols; ++j) {
                if (m(t, j) == 0) continue;
                Integer q;
                mpz_fdiv_q(q.get_mpz_t(), m(t, j).get_mpz_t(), m(t, t).get_mpz_t());
                for (std::size_t i = t; i < rows; ++i) m(i, j) -= q * m(i, t);
                if (m(t, j) != 0) clean = false;
            }
            if (!clean) continue;
            // divisibility: fold an offending row into row t and retry
            bool divides = true;
            for (std::size_t i = t + 1; i < rows && divides; ++i)
                for (std::size_t j = t + 1; j < cols; ++j)
                    if (m(i, j) % m(t, t) != 0) {
                        for (std::size_t k = t; k < cols; ++k) m(t, k) += m(i, k);
                        divides = false;
                        break;
                    }
            if (divides) break;
        }
        diag.push_back(abs(m(t, t)));
    }
    return diag;
}

IntMatrix quotient_map(const std::vector<IntVector>& generators, std::size_t dim) {
    auto e = hermite_rows(IntMatrix::from_columns(generators, dim));
    IntMatrix q(dim - e.rank, dim);
    for (std::size_t i = e.rank; i < dim; ++i)
        for (std::size_t j = 0; j < dim; ++j) q(i - e.rank, j) = e.transform(i, j);
    return q;
}

std::vector<IntVector> saturated_basis(const std::vector<IntVector>& generators, std::size_t dim) {
    IntMatrix q = quotient_map(generators, dim);
    if (q.rows() == 0) {
        std::vector<IntVector> basis;
        for (std::size_t i = 0; i < dim; ++i) {
            IntVector e(dim);
            e[i] = 1;
            basis.push_back(std::move(e));
        }
        return basis;
    }
    return integer_kernel(q);
}

}  // namespace toricmori
