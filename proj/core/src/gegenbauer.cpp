#include "dsbo/gegenbauer.hpp"

#include "dsbo/errors.hpp"

namespace dsbo {

std::vector<Rational> gegenbauer_coefficients(int ell, const Rational& mu) {
    if (ell < 0) return {};
    std::vector<Rational> c(static_cast<size_t>(ell) + 1);
    const long h = floor_div(ell + 1, 2);
    const Rational x = mu + Rational(h);
    for (int k = 0; k <= ell / 2; ++k) {
        Rational term = gamma_ratio(x, ell - k - h);
        if (k % 2) term = -term;
        term /= factorial(k) * factorial(ell - 2 * k);
        term *= pow(Rational(2), ell - 2 * k);
        c[static_cast<size_t>(ell - 2 * k)] = term;
    }
    return c;
}

Poly gegenbauer(int ell, const Rational& mu) {
    std::vector<GaussianRational> v;
    for (auto& r : gegenbauer_coefficients(ell, mu)) v.emplace_back(r);
    return Poly(std::move(v));
}

Poly gegenbauer_it(int ell, const Rational& mu) {
    return gegenbauer(ell, mu).scale_variable(GaussianRational::i());
}

Rational gamma_factor(const Rational& mu, long ell) {
    if (ell % 2 != 0) return Rational(1);
    return mu + Rational(ell / 2);
}

Poly apply_imaginary_gegenbauer(long ell, const Rational& mu, const Poly& f) {
    Poly f1 = differentiate(f);
    Poly f2 = differentiate(f1);
    Poly t2 = Poly::monomial(2);
    Poly r = f2 + t2 * f2;
    r += Poly::monomial(1, GaussianRational(Rational(1) + Rational(2) * mu)) * f1;
    r -= f * GaussianRational(Rational(ell) * (Rational(ell) + Rational(2) * mu));
    return -r;
}

Poly apply_gegenbauer(long ell, const Rational& mu, const Poly& f) {
    Poly f1 = differentiate(f);
    Poly f2 = differentiate(f1);
    Poly r = f2 - Poly::monomial(2) * f2;
    r -= Poly::monomial(1, GaussianRational(Rational(2) * mu + Rational(1))) * f1;
    r += f * GaussianRational(Rational(ell) * (Rational(ell) + Rational(2) * mu));
    return r;
}

std::vector<Rational> vanishing_set(int ell, int k) {
    if (ell < 0 || k < 0) throw DomainError("vanishing_set: negative index");
    if (k > ell / 2) throw DomainError("vanishing_set: k exceeds [ell/2]");
    std::vector<Rational> out;
    const long h = floor_div(ell + 1, 2);
    for (int d = 0; d <= ell / 2 - k - 1; ++d) out.emplace_back(-h - d);
    return out;
}

}  // namespace dsbo
