#include "dsbo/fsystem.hpp"

#include "dsbo/errors.hpp"
#include "dsbo/gegenbauer.hpp"

#include <set>

namespace dsbo {

SystemParams SystemParams::make(Rational lambda, Rational nu, int N, int m) {
    if (N < 0) throw DomainError("N must be non-negative");
    if ((m < 0 ? -m : m) <= N) throw UnsupportedRegime();
    SystemParams p;
    p.lambda = std::move(lambda);
    p.nu = std::move(nu);
    p.N = N;
    p.m = m;
    Rational d = p.nu - p.lambda;
    if (d.is_integer() && d.sign() >= 0) p.a = d.to_long();
    return p;
}

long SystemParams::require_a() const {
    if (!a) throw DomainError("nu - lambda is not a non-negative integer");
    return *a;
}

SolutionVector SolutionVector::zero(int N, int m) {
    SolutionVector s;
    s.N = N;
    s.m = m;
    s.g.resize(static_cast<size_t>(2 * N + 1));
    return s;
}

Poly SolutionVector::f(int j) const {
    if (j < -N || j > N) return {};
    return g_k(m - j);
}

bool SolutionVector::is_zero() const {
    for (const auto& p : g)
        if (!p.is_zero()) return false;
    return true;
}

std::vector<LEquation> l_equations(int N) {
    std::vector<LEquation> eq;
    for (int j = 0; j <= N; ++j) eq.push_back({LKind::A, LSign::Plus, j});
    for (int j = 0; j <= N; ++j) eq.push_back({LKind::A, LSign::Minus, j});
    for (int j = 1; j <= N; ++j) eq.push_back({LKind::B, LSign::Plus, j});
    for (int j = 1; j <= N; ++j) eq.push_back({LKind::B, LSign::Minus, j});
    return eq;
}

std::vector<int> k_support(int N, int m) {
    std::set<int> k;
    for (int l = 0; l <= N; ++l) {
        k.insert(m - l < 0 ? l - m : m - l);
        k.insert(m + l < 0 ? -(m + l) : m + l);
    }
    return {k.begin(), k.end()};
}

long hom_dimension(const SystemParams& p) {
    if (!p.a) return 0;
    auto K = k_support(p.N, p.m);
    if (*p.a < K.front()) return 0;
    long dim = 0;
    for (int k : K) dim += even_dimension(static_cast<int>(*p.a - k));
    return dim;
}

Poly apply_L(LKind kind, LSign sign, int j, const SystemParams& p, const SolutionVector& f) {
    const int N = p.N;
    const long a = p.require_a();
    const long m = p.m;
    if (m < 0) throw DomainError("apply_L expects m > N");
    if (kind == LKind::A && (j < 0 || j > N)) throw DomainError("A-equation index out of range");
    if (kind == LKind::B && (j < 1 || j > N)) throw DomainError("B-equation index out of range");
    const Rational mu = p.lambda + Rational(j - 1);
    const GaussianRational nj(N - j), npj(N + j);
    if (kind == LKind::A) {
        if (sign == LSign::Plus)
            return apply_imaginary_gegenbauer(a + m - j, mu, f.f(j)) -
                   GaussianRational(2) * nj * differentiate(f.f(j + 1));
        return apply_imaginary_gegenbauer(a - m - j, mu, f.f(-j)) +
               GaussianRational(2) * nj * differentiate(f.f(-j - 1));
    }
    const Rational c = Rational(m) * (p.lambda + Rational(a - 1));
    const GaussianRational two(2), jj(j), lm1(p.lambda - Rational(1));
    if (sign == LSign::Plus) {
        const Poly& fj = f.f(j);
        Poly r = two * (GaussianRational(-c) * fj + jj * (lm1 * fj + euler_apply(fj)));
        return r + nj * differentiate(f.f(j + 1)) + npj * differentiate(f.f(j - 1));
    }
    const Poly fj = f.f(-j);
    Poly r = two * (GaussianRational(c) * fj + jj * (lm1 * fj + euler_apply(fj)));
    return r - npj * differentiate(f.f(-j + 1)) - nj * differentiate(f.f(-j - 1));
}

std::vector<std::pair<int, int>> unknown_layout(const SystemParams& p) {
    const long a = p.require_a();
    std::vector<std::pair<int, int>> cols;
    for (int k = p.m - p.N; k <= p.m + p.N; ++k) {
        int b = static_cast<int>(a - k);
        for (int d = b; d >= 0; d -= 2) cols.emplace_back(k, d);
    }
    return cols;
}

ExactMatrix assemble_system(const SystemParams& p) {
    if (p.m < 0) throw DomainError("assemble_system expects m > N");
    auto cols = unknown_layout(p);
    auto eqs = l_equations(p.N);
    int max_deg = -1;
    for (auto& [k, d] : cols) max_deg = std::max(max_deg, d);
    const size_t block = static_cast<size_t>(max_deg + 1);
    ExactMatrix M(cols.empty() ? 0 : eqs.size() * block, cols.size());
    for (size_t c = 0; c < cols.size(); ++c) {
        SolutionVector u = SolutionVector::zero(p.N, p.m);
        u.g_k(cols[c].first) = Poly::monomial(cols[c].second);
        for (size_t e = 0; e < eqs.size(); ++e) {
            Poly r = apply_L(eqs[e].kind, eqs[e].sign, eqs[e].j, p, u);
            const auto& co = r.coeffs();
            for (size_t d = 0; d < co.size(); ++d) {
                if (d >= block) throw Error("assemble_system: equation raised the degree");
                if (!co[d].is_real()) throw Error("assemble_system: non-real coefficient");
                M.at(e * block + d, c) = co[d].re();
            }
        }
    }
    return M;
}

std::vector<std::vector<Rational>> nullspace(const ExactMatrix& M) {
    const size_t R = M.rows, C = M.cols;
    // Clear denominators row by row.
    std::vector<std::vector<mpz_class>> A(R, std::vector<mpz_class>(C));
    for (size_t i = 0; i < R; ++i) {
        mpz_class l = 1;
        for (size_t j = 0; j < C; ++j) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), M.at(i, j).raw().get_den_mpz_t());
        for (size_t j = 0; j < C; ++j) {
            const mpq_class& q = M.at(i, j).raw();
            A[i][j] = q.get_num() * (l / q.get_den());
        }
    }
    std::vector<size_t> pivots;
    mpz_class prev = 1;
    size_t r = 0;
    for (size_t c = 0; c < C && r < R; ++c) {
        size_t piv = r;
        while (piv < R && A[piv][c] == 0) ++piv;
        if (piv == R) continue;
        std::swap(A[piv], A[r]);
        for (size_t i = r + 1; i < R; ++i) {
            for (size_t j = c + 1; j < C; ++j) {
                mpz_class v = A[r][c] * A[i][j] - A[i][c] * A[r][j];
                mpz_divexact(A[i][j].get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
            }
            A[i][c] = 0;
        }
        prev = A[r][c];
        pivots.push_back(c);
        ++r;
    }
    // Back-substitute to reduced form in rationals.
    std::vector<std::vector<Rational>> E(r, std::vector<Rational>(C));
    for (size_t i = 0; i < r; ++i) {
        for (size_t j = 0; j < C; ++j) E[i][j] = Rational(A[i][j], A[i][pivots[i]]);
    }
    for (size_t i = r; i-- > 0;) {
        for (size_t h = 0; h < i; ++h) {
            Rational f = E[h][pivots[i]];
            if (f.is_zero()) continue;
            for (size_t j = pivots[i]; j < C; ++j) E[h][j] -= f * E[i][j];
        }
    }
    std::vector<bool> is_pivot(C, false);
    for (size_t c : pivots) is_pivot[c] = true;
    std::vector<std::vector<Rational>> basis;
    for (size_t f = 0; f < C; ++f) {
        if (is_pivot[f]) continue;
        std::vector<Rational> v(C);
        v[f] = Rational(1);
        for (size_t i = 0; i < r; ++i) v[pivots[i]] = -E[i][f];
        Rational lead;
        for (auto& x : v)
            if (!x.is_zero()) {
                lead = x;
                break;
            }
        for (auto& x : v) x /= lead;
        basis.push_back(std::move(v));
    }
    return basis;
}

SolutionVector decode_solution(const SystemParams& p, const std::vector<Rational>& coeffs) {
    auto cols = unknown_layout(p);
    if (cols.size() != coeffs.size()) throw DomainError("coefficient vector has the wrong length");
    SolutionVector s = SolutionVector::zero(p.N, p.m);
    for (size_t c = 0; c < cols.size(); ++c)
        s.g_k(cols[c].first) += Poly::monomial(cols[c].second, GaussianRational(coeffs[c]));
    return s;
}

XiResult solve_xi(const SystemParams& p) {
    if (p.m < 0) throw DomainError("solve_xi expects m > N; use the duality for m < -N");
    XiResult out;
    if (!p.a) return out;
    ExactMatrix M = assemble_system(p);
    auto ker = nullspace(M);
    out.dimension = static_cast<long>(ker.size());
    if (ker.size() == 1) {
        out.coefficients = ker[0];
        out.generator = decode_solution(p, ker[0]);
    }
    return out;
}

}  // namespace dsbo
