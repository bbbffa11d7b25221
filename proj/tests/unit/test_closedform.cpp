#include "dsbo/closedform.hpp"
#include "dsbo/errors.hpp"
#include "dsbo/gegenbauer.hpp"
#include "dsbo/sweep.hpp"
#include "support/oracle.hpp"

#include <doctest.h>

using namespace dsbo;

namespace {

Rational q(long n, long d = 1) { return Rational(mpz_class(n), mpz_class(d)); }

SystemParams P(Rational lambda, Rational nu, int N, int m) { return SystemParams::make(lambda, nu, N, m); }

}  // namespace

TEST_CASE("lambda_set examples") {
    CHECK(lambda_set(1, 3, 2) == std::vector<long>{-3, -2, -1});
    for (long a = 2; a <= 6; ++a) CHECK(lambda_set(0, a, 2) == std::vector<long>{1 - a});
    CHECK(lambda_set(1, 5, 2) == std::vector<long>{-5, -4, -3});
    // [1-N-a, N+1-a] once a >= m + N
    for (int N = 0; N <= 3; ++N)
        for (int m = N + 1; m <= N + 3; ++m)
            for (long a = m + N; a <= m + N + 3; ++a) {
                std::vector<long> expect;
                for (long l = 1 - N - a; l <= N + 1 - a; ++l) expect.push_back(l);
                CHECK(lambda_set(N, a, m) == expect);
            }
}

TEST_CASE("classify examples") {
    CHECK(classify(q(-1), q(2), 1, 2).dimension == 1);
    CHECK(classify(q(-1), q(2), 1, 2).sporadic);
    CHECK(classify(q(-1), q(2), 1, 2).all_sbos_differential);
    CHECK(classify(q(-1), q(3), 1, 2).dimension == 0);
    CHECK(classify(q(0), q(1), 0, 1).dimension == 1);
    CHECK(classify(q(1, 2), q(7, 2), 1, 2).dimension == 0);
    CHECK_THROWS_AS(classify(q(0), q(1), 2, 1), UnsupportedRegime);
}

TEST_CASE("structure constant examples") {
    for (int m = 2; m <= 5; ++m)
        for (long a = m - 1; a <= m + 4; ++a)
            for (long l : lambda_set(1, a, m)) {
                auto p = P(q(l), q(l + a), 1, m);
                CHECK(b_constant(1, 0, p) == q(2));
                CHECK(b_constant(1, 1, p) == q(m + 1) * (q(2) - p.nu));
            }
    for (int m = 1; m <= 4; ++m)
        for (long a = m; a <= m + 3; ++a) CHECK(gamma_constant(0, 0, P(q(1 - a), q(1), 0, m)) == q(1));
}

TEST_CASE("Gamma_j recursion and non-vanishing") {
    for (int N = 1; N <= 3; ++N)
        for (int m = N + 1; m <= N + 3; ++m)
            for (long a = m - N; a <= m + N + 4; ++a)
                for (const auto& lam : {q(-1, 2), q(2, 3), q(5, 3)}) {
                    auto p = P(lam, lam + q(a), N, m);
                    CHECK(gamma_j(N, +1, p) == q(1));
                    CHECK(gamma_j(N, -1, p) == q(1));
                    bool all_plus = true, all_minus = true;
                    for (int j = 0; j < N; ++j) {
                        for (int s : {+1, -1}) {
                            Rational g = gamma_factor(lam + q(N - 1), a + s * m - 2 * N + j);
                            CHECK(gamma_j(j, s, p) == gamma_j(j + 1, s, p) * g);
                        }
                        all_plus = all_plus && !gamma_j(j, +1, p).is_zero();
                        all_minus = all_minus && !gamma_j(j, -1, p).is_zero();
                    }
                    CHECK(!gamma_j(0, +1, p).is_zero() == all_plus);
                    CHECK(!gamma_j(0, -1, p).is_zero() == all_minus);
                }
    // on the admissible set Gamma_0^- never vanishes
    for (int N = 0; N <= 3; ++N)
        for (int m = N + 1; m <= N + 4; ++m)
            for (long a = m - N; a <= m + N + 4; ++a)
                for (long l : lambda_set(N, a, m)) CHECK_FALSE(gamma_j(0, -1, P(q(l), q(l + a), N, m)).is_zero());
}

TEST_CASE("D constants vanish past the admissible window") {
    for (int N = 1; N <= 3; ++N)
        for (int m = N + 1; m <= N + 2; ++m)
            for (long a = m + N; a <= m + N + 3; ++a)
                for (long qq = 0; qq <= 2 * N; ++qq) {
                    auto p = P(q(N + 1 - a - qq), q(N + 1 - qq), N, m);
                    for (int j = 0; j <= N; ++j)
                        for (int r = 0; r <= N - j; ++r)
                            if (qq - 2 * N + r > 0) CHECK(aux_constants(j, r, p).d.is_zero());
                }
}

TEST_CASE("closed solution at the sporadic example") {
    auto p = P(q(-1), q(2), 1, 2);
    auto g = closed_solution(p);
    CHECK_FALSE(g.is_zero());
    CHECK(in_even_space(g.g_k(1), 2));
    CHECK(in_even_space(g.g_k(2), 1));
    CHECK(in_even_space(g.g_k(3), 0));
    CHECK(annihilated_by_all(p, g));
    auto xi = solve_xi(p);
    REQUIRE(xi.generator);
    auto c = solution_scalar(*xi.generator, g);
    REQUIRE(c);
    CHECK_FALSE(c->is_zero());
    CHECK_THROWS_AS(closed_solution(P(q(0), q(3), 1, 2)), EmptySolutionSpace);
}

TEST_CASE("top component is a Gegenbauer multiple and short-degree blocks vanish") {
    for (int N = 0; N <= 3; ++N)
        for (int m = N + 1; m <= N + 3; ++m)
            for (long a = m - N; a <= m + N + 3; ++a)
                for (long l : lambda_set(N, a, m)) {
                    auto p = P(q(l), q(l + a), N, m);
                    auto g = closed_solution(p);
                    for (int k = g.k_min(); k <= g.k_max(); ++k)
                        if (a - k < 0) CHECK(g.g_k(k).is_zero());
                    const Poly& top = g.g_k(m + N);
                    Poly ref = gegenbauer_it(static_cast<int>(a - m - N), q(l + N - 1));
                    if (ref.is_zero()) {
                        CHECK(top.is_zero());
                    } else if (!top.is_zero()) {
                        GaussianRational c = top.coeffs().back() / ref.coeffs().back();
                        CHECK(ref * c == top);
                    }
                }
}

TEST_CASE("dual_solution is an involution") {
    oracle::Gen g(51);
    for (int N = 0; N <= 3; ++N)
        for (int it = 0; it < 20; ++it) {
            VectorSymbol v;
            for (int d = 0; d <= 2 * N; ++d) v.components.push_back(g.multipoly(4, 4));
            auto p = P(q(1, 3), q(7, 3), N, N + 2);
            CHECK(dual_solution(dual_solution(v, p), p) == v);
        }
    VectorSymbol v{{MultiPoly::variable(0) + MultiPoly::variable(1) * GaussianRational(3)}};
    auto w = dual_solution(v, P(q(0), q(1), 0, 1));
    CHECK(w.components[0] == v.components[0].negate_variable(1));
}

TEST_CASE("consistency polynomials") {
    for (int m = 1; m <= 4; ++m)
        for (long a = m; a <= m + 5; ++a) {
            auto c = consistency_polynomials(0, a, m);
            ParamPoly expect(std::vector<Rational>{q(m * (a - 1)), q(m)});
            CHECK(c.P == expect);
            CHECK(c.Q == expect);
        }
    for (int N = 0; N <= 3; ++N)
        for (int m = N + 1; m <= N + 3; ++m)
            for (long a = m + 2 * N + 2; a <= m + 2 * N + 5; ++a) {
                auto c = consistency_polynomials(N, a, m);
                CHECK(c.P.degree() == 2 * N + 1);
                CHECK(c.Q.degree() == 2 * N + 1);
                CHECK(c.P == c.Q);
                for (long qq = 0; qq <= 2 * N; ++qq) CHECK(c.P.evaluate(q(N + 1 - a - qq)).is_zero());
            }
    CHECK_THROWS_AS(consistency_polynomials(1, 2, 3), DomainError);
}
