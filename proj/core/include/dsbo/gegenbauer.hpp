#pragma once

#include "dsbo/poly.hpp"
#include "dsbo/rational.hpp"

#include <vector>

namespace dsbo {

// Real coefficients of the renormalized Gegenbauer polynomial in z, ascending.
// Empty for ell < 0.
std::vector<Rational> gegenbauer_coefficients(int ell, const Rational& mu);

Poly gegenbauer(int ell, const Rational& mu);
// gegenbauer(ell, mu) at z = i t.
Poly gegenbauer_it(int ell, const Rational& mu);

Rational gamma_factor(const Rational& mu, long ell);

// S_ell^mu f = -((1+t^2) f'' + (1+2mu) t f' - ell(ell+2mu) f)
Poly apply_imaginary_gegenbauer(long ell, const Rational& mu, const Poly& f);
// G_ell^mu f = (1-z^2) f'' - (2mu+1) z f' + ell(ell+2mu) f
Poly apply_gegenbauer(long ell, const Rational& mu, const Poly& f);

// mu values at which the z^{ell-2k} coefficient vanishes, in enumeration order.
std::vector<Rational> vanishing_set(int ell, int k);

}  // namespace dsbo
