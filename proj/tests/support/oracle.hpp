#pragma once

// Reference implementations used only by the tests.

#include "dsbo/fsystem.hpp"
#include "dsbo/poly.hpp"
#include "dsbo/rational.hpp"

#include <cstdint>
#include <numeric>
#include <random>
#include <stdexcept>
#include <vector>

namespace oracle {

using dsbo::GaussianRational;
using dsbo::Poly;
using dsbo::Rational;

// Small fractions on 128-bit integers, independent of GMP.
struct Frac {
    __int128 n = 0;
    __int128 d = 1;

    Frac() = default;
    Frac(long long v) : n(v) {}
    Frac(__int128 num, __int128 den) : n(num), d(den) { norm(); }

    void norm() {
        if (d == 0) throw std::domain_error("Frac: zero denominator");
        if (d < 0) {
            n = -n;
            d = -d;
        }
        __int128 a = n < 0 ? -n : n, b = d;
        while (b) {
            __int128 t = a % b;
            a = b;
            b = t;
        }
        if (a > 1) {
            n /= a;
            d /= a;
        }
    }
    friend Frac operator+(Frac a, Frac b) { return {a.n * b.d + b.n * a.d, a.d * b.d}; }
    friend Frac operator-(Frac a, Frac b) { return {a.n * b.d - b.n * a.d, a.d * b.d}; }
    friend Frac operator*(Frac a, Frac b) { return {a.n * b.n, a.d * b.d}; }
    friend Frac operator/(Frac a, Frac b) { return {a.n * b.d, a.d * b.n}; }
    friend bool operator==(Frac a, Frac b) { return a.n == b.n && a.d == b.d; }

    Rational to_rational() const {
        auto fits = [](__int128 v) { return v >= INT64_MIN && v <= INT64_MAX; };
        if (!fits(n) || !fits(d)) throw std::overflow_error("Frac out of range");
        return Rational(mpz_class(static_cast<long>(n)), mpz_class(static_cast<long>(d)));
    }
};

inline Frac rising(Frac x, long n) {
    Frac r(1);
    for (long i = 0; i < n; ++i) r = r * (x + Frac(i));
    return r;
}

inline Rational rising_q(const Rational& x, long n) {
    Rational r(1);
    for (long i = 0; i < n; ++i) r *= x + Rational(i);
    return r;
}

// Gamma(x+p)/Gamma(x) from the functional equation, for x with no pole in play.
inline Rational gamma_quotient(const Rational& x, long p) {
    if (p >= 0) return rising_q(x, p);
    return Rational(1) / rising_q(x + Rational(p), -p);
}

// Classical C_ell^mu(z) by the three-term recurrence, then divided by (mu)_h,
// h = [(ell+1)/2]. Only valid where (mu)_h != 0.
inline std::vector<Rational> gegenbauer_generic(int ell, const Rational& mu) {
    std::vector<Rational> prev{Rational(1)}, cur{Rational(0), Rational(2) * mu};
    if (ell == 0) return prev;
    for (int n = 2; n <= ell; ++n) {
        std::vector<Rational> next(static_cast<size_t>(n) + 1);
        for (size_t i = 0; i < cur.size(); ++i) next[i + 1] += Rational(2) * (Rational(n - 1) + mu) * cur[i];
        for (size_t i = 0; i < prev.size(); ++i) next[i] -= (Rational(n - 2) + Rational(2) * mu) * prev[i];
        for (auto& c : next) c /= Rational(n);
        prev = cur;
        cur = next;
    }
    Rational s = rising_q(mu, (ell + 1) / 2);
    for (auto& c : cur) c /= s;
    return cur;
}

// Lagrange interpolation in mu through mu = 1..ell+1.
inline std::vector<Rational> gegenbauer_tilde(int ell, const Rational& mu) {
    if (ell < 0) return {};
    std::vector<std::vector<Rational>> samples;
    for (int x = 1; x <= ell + 1; ++x) samples.push_back(gegenbauer_generic(ell, Rational(x)));
    std::vector<Rational> out(static_cast<size_t>(ell) + 1);
    for (int i = 0; i <= ell; ++i) {
        Rational w(1);
        for (int j = 0; j <= ell; ++j)
            if (j != i) w *= (mu - Rational(j + 1)) / Rational(i - j);
        for (size_t c = 0; c < out.size(); ++c) out[c] += w * samples[static_cast<size_t>(i)][c];
    }
    return out;
}

inline Poly to_poly(const std::vector<Rational>& c) {
    std::vector<GaussianRational> v(c.begin(), c.end());
    return Poly(v);
}

// Kernel basis from the reduced row echelon form over Q.
struct GaussJordan {
    long nullity = 0;
    std::vector<std::vector<Rational>> basis;
};

inline GaussJordan gauss_jordan_kernel(const dsbo::ExactMatrix& M) {
    std::vector<std::vector<Rational>> a(M.rows, std::vector<Rational>(M.cols));
    for (size_t i = 0; i < M.rows; ++i)
        for (size_t j = 0; j < M.cols; ++j) a[i][j] = M.at(i, j);
    std::vector<long> pivot_col;
    size_t row = 0;
    for (size_t c = 0; c < M.cols && row < M.rows; ++c) {
        size_t p = row;
        while (p < M.rows && a[p][c].is_zero()) ++p;
        if (p == M.rows) continue;
        std::swap(a[p], a[row]);
        Rational inv = Rational(1) / a[row][c];
        for (auto& x : a[row]) x *= inv;
        for (size_t r = 0; r < M.rows; ++r) {
            if (r == row || a[r][c].is_zero()) continue;
            Rational f = a[r][c];
            for (size_t j = 0; j < M.cols; ++j) a[r][j] -= f * a[row][j];
        }
        pivot_col.push_back(static_cast<long>(c));
        ++row;
    }
    GaussJordan g;
    std::vector<bool> is_pivot(M.cols, false);
    for (long c : pivot_col) is_pivot[static_cast<size_t>(c)] = true;
    for (size_t f = 0; f < M.cols; ++f) {
        if (is_pivot[f]) continue;
        std::vector<Rational> v(M.cols);
        v[f] = Rational(1);
        for (size_t r = 0; r < pivot_col.size(); ++r) v[static_cast<size_t>(pivot_col[r])] = -a[r][f];
        g.basis.push_back(v);
    }
    g.nullity = static_cast<long>(g.basis.size());
    return g;
}

inline bool in_kernel(const dsbo::ExactMatrix& M, const std::vector<Rational>& v) {
    for (size_t i = 0; i < M.rows; ++i) {
        Rational s;
        for (size_t j = 0; j < M.cols; ++j) s += M.at(i, j) * v[j];
        if (!s.is_zero()) return false;
    }
    return true;
}

// Rank of a list of vectors by fraction-based elimination.
inline long rank_of(std::vector<std::vector<Rational>> v) {
    long r = 0;
    const size_t n = v.empty() ? 0 : v[0].size();
    for (size_t c = 0; c < n && r < static_cast<long>(v.size()); ++c) {
        size_t p = static_cast<size_t>(r);
        while (p < v.size() && v[p][c].is_zero()) ++p;
        if (p == v.size()) continue;
        std::swap(v[p], v[static_cast<size_t>(r)]);
        for (size_t i = static_cast<size_t>(r) + 1; i < v.size(); ++i) {
            Rational f = v[i][c] / v[static_cast<size_t>(r)][c];
            for (size_t j = 0; j < n; ++j) v[i][j] -= f * v[static_cast<size_t>(r)][j];
        }
        ++r;
    }
    return r;
}

struct Gen {
    std::mt19937_64 rng;
    explicit Gen(std::uint64_t seed) : rng(seed) {}

    long integer(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng); }
    Rational rational(long max_num = 20, long max_den = 9) {
        return Rational(mpz_class(integer(-max_num, max_num)), mpz_class(integer(1, max_den)));
    }
    GaussianRational gaussian() { return {rational(), rational()}; }
    Poly poly(int max_degree) {
        std::vector<GaussianRational> c(static_cast<size_t>(integer(0, max_degree)) + 1);
        for (auto& x : c) x = gaussian();
        return Poly(c);
    }
    Poly even_poly(int b) {
        Poly p;
        for (const auto& mono : dsbo::even_basis(b)) p += mono * gaussian();
        return p;
    }
    dsbo::MultiPoly multipoly(int terms, int max_exp) {
        dsbo::MultiPoly p;
        for (int i = 0; i < terms; ++i)
            p.add_term({static_cast<int>(integer(0, max_exp)), static_cast<int>(integer(0, max_exp)),
                        static_cast<int>(integer(0, max_exp))},
                       gaussian());
        return p;
    }
};

}  // namespace oracle
