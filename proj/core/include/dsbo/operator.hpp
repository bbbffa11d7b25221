#pragma once

#include "dsbo/fsystem.hpp"
#include "dsbo/poly.hpp"
#include "dsbo/rational.hpp"

#include <array>
#include <map>
#include <optional>
#include <string>

namespace dsbo {

// (d, p, q, r): component u_d^v, powers of d/dz, d/dzbar, d/dx3.
using DiffKey = std::array<int, 4>;

class DiffOperator {
public:
    using Terms = std::map<DiffKey, GaussianRational>;

    void add_term(const DiffKey& k, const GaussianRational& c);
    const Terms& terms() const { return t_; }
    bool is_zero() const { return t_.empty(); }
    GaussianRational coeff(const DiffKey& k) const;

    DiffOperator& operator+=(const DiffOperator& o);
    DiffOperator& operator*=(const GaussianRational& s);
    friend DiffOperator operator*(DiffOperator a, const GaussianRational& s) { return a *= s; }
    friend bool operator==(const DiffOperator&, const DiffOperator&) = default;

private:
    Terms t_;
};

enum class OperatorForm { Paper, Canonical };

// Component d = k-m+N is inflate(a-k, g_k) (zeta1 + i zeta2)^k. Requires m > N.
VectorSymbol symbol_psi(const SystemParams& p, const SolutionVector& g);

// Inverse symbol map in z-coordinates. DomainError if a component mixes
// (zeta1 + i zeta2) and (zeta1 - i zeta2) factors beyond zeta1^2 + zeta2^2.
DiffOperator symbol_to_operator(const VectorSymbol& psi);

// Single component (d = 0).
DiffOperator juhl_operator(const Rational& lambda, const Rational& nu);

DiffOperator emit_operator(const SystemParams& p, OperatorForm form);

// N = 1 operator in the older normalization (equals twice the N = 1 emission).
DiffOperator legacy_operator(const SystemParams& p);

// c with D2 = c D1; 0 if D2 = 0; absent if D1 = 0 or not proportional.
std::optional<GaussianRational> compare_up_to_scalar(const DiffOperator& D1, const DiffOperator& D2);

std::string to_latex(const DiffOperator& D);
std::string to_text(const DiffOperator& D);

}  // namespace dsbo
