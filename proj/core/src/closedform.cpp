#include "dsbo/closedform.hpp"

#include "dsbo/errors.hpp"
#include "dsbo/gegenbauer.hpp"

#include <algorithm>

namespace dsbo {

namespace {

long half(long n) { return floor_div(n, 2); }

// Gamma(x + q) / Gamma(x + p) for integers p, q.
Rational shifted_ratio(const Rational& x, long p, long q) { return gamma_ratio(x + Rational(p), q - p); }

long nu_integer(const SystemParams& p) {
    if (!p.nu.is_integer()) throw DomainError("structure constants need an integer nu");
    return p.nu.to_long();
}

// (lambda + c)_r in lambda.
ParamPoly rising_in_lambda(const Rational& c, long r) {
    ParamPoly out(Rational(1));
    for (long i = 0; i < r; ++i) out *= ParamPoly(std::vector<Rational>{c + Rational(i), Rational(1)});
    return out;
}

}  // namespace

std::vector<long> lambda_set(int N, long a, int m) {
    if (a < m - N) throw DomainError("lambda_set needs a >= m - N");
    std::vector<long> out;
    for (long q = std::max<long>(0, N - a + m); q <= 2 * N; ++q) out.push_back(N + 1 - a - q);
    std::sort(out.begin(), out.end());
    return out;
}

Classification classify(const Rational& lambda, const Rational& nu, int N, int m) {
    SystemParams::make(lambda, nu, N, m);
    const int am = m < 0 ? -m : m;
    Classification c;
    c.lambda_admissible = lambda.is_integer() && lambda <= Rational(1 - am);
    c.nu_admissible = nu.is_integer() && nu >= Rational(1 - N) && nu <= Rational(N + 1);
    c.dimension = (c.lambda_admissible && c.nu_admissible) ? 1 : 0;
    c.sporadic = c.dimension == 1;
    c.all_sbos_differential = true;
    return c;
}

Rational gamma_constant(int d, int r, const SystemParams& p) {
    const long a = p.require_a();
    const long m = p.abs_m();
    const int N = p.N;
    Rational g = binomial(d, r);
    g *= shifted_ratio(p.lambda, half(a - m - 1), half(a - m + N - d - 1));
    g *= gamma_ratio(Rational(N + 1), N - r);
    g *= gamma_ratio(Rational(N + m + 1 - r), r);
    return g;
}

Rational a_constant(int d, int r, const SystemParams& p) {
    const long nu = nu_integer(p);
    const long a = p.require_a();
    const long m = p.abs_m();
    const int N = p.N;
    Rational A = gamma_constant(d, r, p);
    if (nu % 2 == 0) A = -A;
    // Gamma(lambda + [(-nu-lambda-m+N-d+1)/2]) / Gamma(lambda + [(a-m+N-d-1)/2])
    const long top = floor_of((-p.nu - p.lambda + Rational(-m + N - d + 1)) / Rational(2));
    A *= shifted_ratio(p.lambda, half(a - m + N - d - 1), top);
    A *= gamma_ratio(Rational(N + nu - r), r);
    return A;
}

Rational b_constant(int d, int r, const SystemParams& p) {
    const long nu = nu_integer(p);
    const int N = p.N;
    Rational B = gamma_constant(2 * N - d, r, p);
    if ((d - N) % 2 != 0) B = -B;
    B *= gamma_ratio(Rational(N - nu + 2 - r), r);
    return B;
}

StructureConstants structure_constants(int d, int r, const SystemParams& p) {
    if (d < 0 || d > 2 * p.N || r < 0 || r > std::min(d, 2 * p.N - d))
        throw DomainError("structure_constants index out of range");
    return {gamma_constant(d, r, p), a_constant(d, r, p), b_constant(d, r, p)};
}

ParamPoly c_constant_poly(int N, int j, int r, long a, int m, int sign) {
    const long sm = sign > 0 ? m : -m;
    Rational c = binomial(N - j, r);
    c *= shifted_ratio(Rational(0), N + j + 1, 2 * N - r + 1);
    c *= shifted_ratio(Rational(0), N - sm - r + 1, N - sm + 1);
    return rising_in_lambda(Rational(a - N - 1), r) * c;
}

Rational gamma_j(int j, int sign, const SystemParams& p) {
    const long a = p.require_a();
    const long sm = sign > 0 ? p.abs_m() : -p.abs_m();
    return shifted_ratio(p.lambda, half(a + sm + j - 1), half(a + sm + p.N - 1));
}

AuxConstants aux_constants(int j, int r, const SystemParams& p) {
    const int N = p.N;
    if (j < 0 || j > N || r < 0 || r > N - j) throw DomainError("aux_constants index out of range");
    const long a = p.require_a();
    const int m = p.abs_m();
    AuxConstants out;
    out.c_plus = c_constant_poly(N, j, r, a, m, +1).evaluate(p.lambda);
    out.c_minus = c_constant_poly(N, j, r, a, m, -1).evaluate(p.lambda);
    const Rational q = Rational(N + 1 - a) - p.lambda;
    Rational D = binomial(N - j, r);
    D *= shifted_ratio(Rational(0), N + j + 1, 2 * N - r + 1);
    D *= gamma_ratio(Rational(N + m - r + 1), r);
    D *= gamma_ratio(q - Rational(2 * N), r);
    out.d = D;
    out.gamma_plus = gamma_j(j, +1, p);
    out.gamma_minus = gamma_j(j, -1, p);
    return out;
}

SolutionVector closed_solution(const SystemParams& p) {
    if (p.m < 0) throw DomainError("closed_solution expects m > N; use dual_solution for m < -N");
    if (classify(p).dimension != 1) throw EmptySolutionSpace("closed_solution: the solution space is zero");
    const long a = p.require_a();
    const long nu = nu_integer(p);
    const int N = p.N, m = p.m;
    SolutionVector g = SolutionVector::zero(N, m);
    for (int k = m - N; k <= m - 1; ++k) {
        Poly s;
        for (int r = 0; r <= N - m + k; ++r) {
            Rational c = a_constant(N - m + k, r, p);
            if (r % 2) c = -c;
            if (c.is_zero()) continue;
            int ell = static_cast<int>(a - k + 2 * (1 - N - nu + r));
            s += gegenbauer_it(ell, p.lambda + Rational(N - 1 - r)) * GaussianRational(c);
        }
        GaussianRational pre = GaussianRational::i_pow(k - m) * GaussianRational(neg_one_pow(nu - 1));
        g.g_k(k) = s * pre;
    }
    for (int k = m; k <= m + N; ++k) {
        Poly s;
        for (int r = 0; r <= N + m - k; ++r) {
            Rational c = b_constant(N - m + k, r, p);
            if (r % 2) c = -c;
            if (c.is_zero()) continue;
            int ell = static_cast<int>(a + k - 2 * (m + N - r));
            s += gegenbauer_it(ell, p.lambda + Rational(N - 1 - r)) * GaussianRational(c);
        }
        g.g_k(k) = s * GaussianRational::i_pow(m - k);
    }
    return g;
}

VectorSymbol dual_solution(const VectorSymbol& psi, const SystemParams& p) {
    const size_t n = static_cast<size_t>(2 * p.N + 1);
    if (psi.components.size() != n) throw DomainError("dual_solution: symbol length is not 2N+1");
    VectorSymbol out;
    out.components.resize(n);
    for (size_t d = 0; d < n; ++d) {
        MultiPoly c = psi.components[n - 1 - d].negate_variable(1);
        if (d % 2) c *= GaussianRational(-1);
        out.components[d] = std::move(c);
    }
    return out;
}

ConsistencyPolynomials consistency_polynomials(int N, long a, int m) {
    if (a < m) throw DomainError("consistency_polynomials needs a >= m");
    // sum_r (-1)^r C_{0,r}^{sign} Gamma(h)/Gamma(h-N+r), h = [(a + sign*m + shift)/2]
    auto alpha_like = [&](int sign, long shift) {
        const long h = half(a + (sign > 0 ? m : -m) + shift);
        ParamPoly s;
        for (int r = 0; r <= N; ++r) {
            Rational g = shifted_ratio(Rational(0), h - N + r, h);
            if (r % 2) g = -g;
            s += c_constant_poly(N, 0, r, a, m, sign) * g;
        }
        return s;
    };
    ConsistencyPolynomials out;
    out.alpha_plus = alpha_like(+1, 0);
    out.alpha_minus = alpha_like(-1, 0);
    out.beta_plus = alpha_like(+1, 2);
    out.beta_minus = alpha_like(-1, 2);
    auto lin = [](long c) { return ParamPoly(std::vector<Rational>{Rational(c), Rational(1)}); };
    ParamPoly t1 = lin(half(a + m - 1)) * Rational(half(a + m)) * out.alpha_plus * out.beta_minus;
    ParamPoly t2 = lin(half(a - m - 1)) * Rational(half(a - m)) * out.alpha_minus * out.beta_plus;
    out.P = t1 - t2;
    ParamPoly Q(pochhammer(Rational(m), N + 1) * pochhammer(Rational(1 - m), N));
    for (int q = 0; q <= 2 * N; ++q) Q *= lin(a - N - 1 + q);
    out.Q = Q;
    return out;
}

}  // namespace dsbo
