#include "dsbo/errors.hpp"
#include "dsbo/poly.hpp"
#include "support/oracle.hpp"

#include <doctest.h>

using namespace dsbo;

namespace {

Poly t(int k, long c = 1) { return Poly::monomial(k, GaussianRational(c)); }

MultiPoly z(int i) { return MultiPoly::variable(i); }

}  // namespace

TEST_CASE("even_basis examples") {
    CHECK(even_basis(2) == std::vector<Poly>{t(2), t(0)});
    CHECK(even_basis(-1).empty());
    CHECK(even_basis(1) == std::vector<Poly>{t(1)});
    for (int b = -3; b <= 9; ++b) CHECK(static_cast<int>(even_basis(b).size()) == even_dimension(b));
}

TEST_CASE("differentiate and euler examples") {
    CHECK(differentiate(t(2)) == t(1, 2));
    CHECK(differentiate(t(0, 7)).is_zero());
    CHECK(differentiate(t(3, 3) + t(1)) == t(2, 9) + t(0));
    for (int k = 0; k < 6; ++k) CHECK(euler_apply(t(k)) == t(k, k));
    CHECK(euler_apply(t(0)).is_zero());
    CHECK(euler_apply(t(2) + t(1)) == t(2, 2) + t(1));
}

TEST_CASE("univariate ring laws and evaluation") {
    oracle::Gen g(21);
    for (int it = 0; it < 200; ++it) {
        Poly a = g.poly(6), b = g.poly(6), c = g.poly(4);
        auto x = g.gaussian();
        CHECK(a * b == b * a);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK((a * b).evaluate(x) == a.evaluate(x) * b.evaluate(x));
        CHECK((a + b).evaluate(x) == a.evaluate(x) + b.evaluate(x));
        CHECK(differentiate(a * b) == differentiate(a) * b + a * differentiate(b));
        CHECK(a.scale_variable(x).evaluate(GaussianRational(3)) == a.evaluate(x * GaussianRational(3)));
        CHECK((a - a).is_zero());
    }
}

TEST_CASE("even space is preserved by euler and lowered by d/dt") {
    oracle::Gen g(22);
    for (int b = 0; b <= 10; ++b)
        for (int it = 0; it < 10; ++it) {
            Poly f = g.even_poly(b);
            CHECK(in_even_space(f, b));
            CHECK(in_even_space(euler_apply(f), b));
            CHECK(in_even_space(differentiate(f), b - 1));
        }
    CHECK_FALSE(in_even_space(t(1), 2));
    CHECK_FALSE(in_even_space(t(4), 2));
    CHECK(in_even_space(Poly(), -1));
    CHECK_FALSE(in_even_space(t(0), -1));
}

TEST_CASE("inflate examples") {
    CHECK(inflate(2, t(2)) == pow(z(2), 2));
    CHECK(inflate(2, t(0)) == pow(z(0), 2) + pow(z(1), 2));
    CHECK(inflate(0, t(0)) == MultiPoly(GaussianRational(1)));
    CHECK_THROWS_AS(inflate(2, t(1)), DomainError);
}

TEST_CASE("inflate is linear and injective on the even space") {
    oracle::Gen g(23);
    for (int b = 0; b <= 9; ++b)
        for (int it = 0; it < 10; ++it) {
            Poly f1 = g.even_poly(b), f2 = g.even_poly(b);
            CHECK(inflate(b, f1 + f2) == inflate(b, f1) + inflate(b, f2));
            if (!f1.is_zero()) {
                auto m = inflate(b, f1);
                CHECK_FALSE(m.is_zero());
                CHECK(m.homogeneous_degree() == b);
            }
            // Restriction to zeta1 = 1, zeta2 = 0 recovers t^b g(zeta3/t).
            auto m = inflate(b, f1);
            Poly back;
            for (const auto& [e, c] : m.terms())
                if (e[1] == 0) back += Poly::monomial(e[2], c);
            CHECK(back == f1);
        }
}

TEST_CASE("multivariate multiplication is commutative and associative") {
    oracle::Gen g(24);
    for (int it = 0; it < 100; ++it) {
        auto a = g.multipoly(4, 3), b = g.multipoly(3, 3), c = g.multipoly(3, 2);
        CHECK(a * b == b * a);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a.negate_variable(1).negate_variable(1) == a);
    }
    CHECK((z(0) + z(1)).negate_variable(1) == z(0) - z(1));
    CHECK_FALSE((z(0) + pow(z(1), 2)).homogeneous_degree().has_value());
}
