#pragma once

#include "dsbo/fsystem.hpp"
#include "dsbo/poly.hpp"
#include "dsbo/rational.hpp"

#include <vector>

namespace dsbo {

struct Classification {
    long dimension = 0;
    bool lambda_admissible = false;
    bool nu_admissible = false;
    bool sporadic = false;
    bool all_sbos_differential = true;
};

// {N+1-a-q : max(0, N-a+m) <= q <= 2N}, ascending. DomainError if a < m-N.
std::vector<long> lambda_set(int N, long a, int m);

Classification classify(const Rational& lambda, const Rational& nu, int N, int m);
inline Classification classify(const SystemParams& p) { return classify(p.lambda, p.nu, p.N, p.m); }

// The constants Gamma(d,r), A(d,r), B(d,r); |m| is used throughout.
Rational gamma_constant(int d, int r, const SystemParams& p);
Rational a_constant(int d, int r, const SystemParams& p);
Rational b_constant(int d, int r, const SystemParams& p);

struct StructureConstants {
    Rational gamma;
    Rational A;
    Rational B;
};
StructureConstants structure_constants(int d, int r, const SystemParams& p);

struct AuxConstants {
    Rational c_plus;
    Rational c_minus;
    Rational d;
    Rational gamma_plus;
    Rational gamma_minus;
};
AuxConstants aux_constants(int j, int r, const SystemParams& p);
// Gamma_j^{+} (sign > 0) or Gamma_j^{-} (sign < 0).
Rational gamma_j(int j, int sign, const SystemParams& p);
// C_{j,r}^{sign} as a polynomial in lambda.
ParamPoly c_constant_poly(int N, int j, int r, long a, int m, int sign);

SolutionVector closed_solution(const SystemParams& p);

// Component d of the output is (-1)^d times component 2N-d of psi with zeta2 -> -zeta2.
VectorSymbol dual_solution(const VectorSymbol& psi, const SystemParams& p);

struct ConsistencyPolynomials {
    ParamPoly P;
    ParamPoly Q;
    ParamPoly alpha_plus;
    ParamPoly alpha_minus;
    ParamPoly beta_plus;
    ParamPoly beta_minus;
};
ConsistencyPolynomials consistency_polynomials(int N, long a, int m);

}  // namespace dsbo
