#include "dsbo/errors.hpp"
#include "dsbo/hypergeom.hpp"
#include "dsbo/suites.hpp"
#include "support/oracle.hpp"

#include <doctest.h>

using namespace dsbo;

namespace {

Rational q(long n, long d = 1) { return Rational(mpz_class(n), mpz_class(d)); }

// Term-by-term sum, up to `terms` terms.
Rational direct_sum(const HyperSpec& s, long terms) {
    Rational total;
    for (long k = 0; k < terms; ++k) {
        Rational t(1);
        for (const auto& a : s.upper) t *= oracle::rising_q(a, k);
        for (const auto& b : s.lower) t /= oracle::rising_q(b, k);
        t *= pow(s.arg, k) / factorial(k);
        total += t;
    }
    return total;
}

}  // namespace

TEST_CASE("hyper examples") {
    CHECK(hyper({{q(-2), q(1)}, {q(3)}, q(1)}) == q(1, 2));
    CHECK(hyper({{q(0), q(5, 2), q(-7)}, {q(1, 3)}, q(9)}) == q(1));
    const Rational a = q(2, 7), b = q(-5, 3), c = q(11, 4), d = q(1, 6);
    CHECK(hyper({{q(-1), a, b}, {c, d}, q(1)}) == q(1) - a * b / (c * d));
}

TEST_CASE("termination and errors") {
    CHECK(termination_index({{q(-3), q(-5), q(1, 2)}, {}, q(1)}) == 3);
    CHECK_FALSE(termination_index({{q(1, 2)}, {q(1)}, q(1)}).has_value());
    CHECK_THROWS_AS(hyper({{q(1, 2)}, {q(3)}, q(1)}), DomainError);
    CHECK(hyper({{q(1, 2)}, {q(3)}, q(0)}) == q(1));
    CHECK_THROWS_AS(hyper({{q(-3), q(1)}, {q(-1)}, q(1)}), DomainError);
    // lower pole past the termination point is harmless
    CHECK(hyper({{q(-1), q(1)}, {q(-2)}, q(1)}) == q(1) + q(1, 2));
}

TEST_CASE("hyper agrees with direct summation") {
    oracle::Gen g(31);
    for (int it = 0; it < 300; ++it) {
        long n = g.integer(0, 8);
        HyperSpec s{{q(-n), g.rational(), g.rational()}, {g.rational(9, 4) + q(1, 10), g.rational(9, 4) + q(1, 10)},
                    g.rational(3, 3)};
        CHECK(hyper(s) == direct_sum(s, n + 1));
    }
}

TEST_CASE("transformation with d - b in the upper slot fails as printed") {
    // n = 2, a = -1: the form with upper (a, d - b, 1 - n) disagrees.
    const long n = 2;
    const Rational a = q(-1), b = q(1, 3), d = q(5, 2), e = q(2, 3);
    Rational lhs = hyper({{a, b, e + q(n - 1)}, {d, e}, q(1)});
    Rational pre = gamma_ratio(d - b, 1) / gamma_ratio(d, 1);
    Rational printed = pre * hyper({{a, d - b, q(1 - n)}, {a + b - d + q(1), e}, q(1)});
    Rational corrected = pre * hyper({{a, b, q(1 - n)}, {a + b - d + q(1), e}, q(1)});
    CHECK_FALSE(lhs == printed);
    CHECK(lhs == corrected);
}

TEST_CASE("identity suite over n <= 8 grids") {
    auto rep = hypergeom_suite(HypergeomSuiteConfig{});
    for (const auto& c : rep.checks) {
        INFO(c.name);
        CHECK(c.failed == 0);
        CHECK(c.passed > 0);
    }
}
