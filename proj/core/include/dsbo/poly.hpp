#pragma once

#include "dsbo/rational.hpp"

#include <array>
#include <limits>
#include <map>
#include <optional>
#include <vector>

namespace dsbo {

// Dense univariate polynomial, coefficients ascending, trailing zeros trimmed.
template <class C>
class BasicPoly {
public:
    static constexpr int kZeroDegree = std::numeric_limits<int>::min();

    BasicPoly() = default;
    BasicPoly(C c) {
        if (!c.is_zero()) c_.push_back(std::move(c));
    }
    explicit BasicPoly(std::vector<C> coeffs) : c_(std::move(coeffs)) { trim(); }

    static BasicPoly monomial(int degree, C c = C(1)) {
        if (degree < 0 || c.is_zero()) return {};
        std::vector<C> v(static_cast<size_t>(degree) + 1);
        v.back() = std::move(c);
        return BasicPoly(std::move(v));
    }

    int degree() const { return c_.empty() ? kZeroDegree : static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    C coeff(int d) const { return (d < 0 || d >= static_cast<int>(c_.size())) ? C() : c_[d]; }
    const std::vector<C>& coeffs() const { return c_; }

    void set_coeff(int d, C c) {
        if (d < 0) return;
        if (d >= static_cast<int>(c_.size())) c_.resize(static_cast<size_t>(d) + 1);
        c_[d] = std::move(c);
        trim();
    }

    BasicPoly& operator+=(const BasicPoly& o) {
        if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
        for (size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
        trim();
        return *this;
    }
    BasicPoly& operator-=(const BasicPoly& o) {
        if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
        for (size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
        trim();
        return *this;
    }
    BasicPoly& operator*=(const C& s) {
        if (s.is_zero()) {
            c_.clear();
            return *this;
        }
        for (auto& c : c_) c *= s;
        return *this;
    }
    friend BasicPoly operator+(BasicPoly a, const BasicPoly& b) { return a += b; }
    friend BasicPoly operator-(BasicPoly a, const BasicPoly& b) { return a -= b; }
    friend BasicPoly operator*(BasicPoly a, const C& s) { return a *= s; }
    friend BasicPoly operator*(const C& s, BasicPoly a) { return a *= s; }
    BasicPoly operator-() const { return *this * C(-1); }

    friend BasicPoly operator*(const BasicPoly& a, const BasicPoly& b) {
        if (a.is_zero() || b.is_zero()) return {};
        std::vector<C> v(a.c_.size() + b.c_.size() - 1);
        for (size_t i = 0; i < a.c_.size(); ++i) {
            if (a.c_[i].is_zero()) continue;
            for (size_t j = 0; j < b.c_.size(); ++j) v[i + j] += a.c_[i] * b.c_[j];
        }
        return BasicPoly(std::move(v));
    }
    BasicPoly& operator*=(const BasicPoly& o) { return *this = *this * o; }

    // p(s*t)
    BasicPoly scale_variable(const C& s) const {
        std::vector<C> v = c_;
        C f(1);
        for (auto& c : v) {
            c *= f;
            f *= s;
        }
        return BasicPoly(std::move(v));
    }

    C evaluate(const C& x) const {
        C r;
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * x + *it;
        return r;
    }

    friend bool operator==(const BasicPoly&, const BasicPoly&) = default;

private:
    void trim() {
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    }
    std::vector<C> c_;
};

using Poly = BasicPoly<GaussianRational>;
// Polynomial in the parameter lambda.
using ParamPoly = BasicPoly<Rational>;

template <class C>
BasicPoly<C> differentiate(const BasicPoly<C>& f) {
    const auto& c = f.coeffs();
    if (c.size() <= 1) return {};
    std::vector<C> v(c.size() - 1);
    for (size_t d = 1; d < c.size(); ++d) v[d - 1] = c[d] * C(static_cast<long>(d));
    return BasicPoly<C>(std::move(v));
}

// t f'(t)
template <class C>
BasicPoly<C> euler_apply(const BasicPoly<C>& f) {
    std::vector<C> v = f.coeffs();
    for (size_t d = 0; d < v.size(); ++d) v[d] *= C(static_cast<long>(d));
    return BasicPoly<C>(std::move(v));
}

// Monomials t^{b-2j}, j = 0..[b/2]; empty for b < 0.
std::vector<Poly> even_basis(int b);
inline int even_dimension(int b) { return b < 0 ? 0 : b / 2 + 1; }
bool in_even_space(const Poly& f, int b);

using Exponent3 = std::array<int, 3>;

// Sparse polynomial in three variables.
class MultiPoly {
public:
    using Terms = std::map<Exponent3, GaussianRational>;

    MultiPoly() = default;
    MultiPoly(GaussianRational c) { add_term({0, 0, 0}, std::move(c)); }
    static MultiPoly variable(int index);
    static MultiPoly monomial(Exponent3 e, GaussianRational c = GaussianRational(1));

    void add_term(const Exponent3& e, const GaussianRational& c);
    const Terms& terms() const { return t_; }
    GaussianRational coeff(const Exponent3& e) const;
    bool is_zero() const { return t_.empty(); }
    // Common total degree of all terms, absent if zero or inhomogeneous.
    std::optional<int> homogeneous_degree() const;
    // Substitute variable index -> -variable.
    MultiPoly negate_variable(int index) const;

    MultiPoly& operator+=(const MultiPoly& o);
    MultiPoly& operator-=(const MultiPoly& o);
    MultiPoly& operator*=(const GaussianRational& s);
    friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
    friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
    friend MultiPoly operator*(MultiPoly a, const GaussianRational& s) { return a *= s; }
    friend MultiPoly operator*(const GaussianRational& s, MultiPoly a) { return a *= s; }
    friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
    MultiPoly& operator*=(const MultiPoly& o) { return *this = *this * o; }

    friend bool operator==(const MultiPoly&, const MultiPoly&) = default;

private:
    Terms t_;
};

MultiPoly pow(const MultiPoly& p, int e);

// One MultiPoly per dual basis vector u_d, d = 0..2N.
struct VectorSymbol {
    std::vector<MultiPoly> components;
    friend bool operator==(const VectorSymbol&, const VectorSymbol&) = default;
};

// T_b: sum of c_s (z1^2+z2^2)^{(b-s)/2} z3^s. DomainError unless g is in EvenSpace(b).
MultiPoly inflate(int b, const Poly& g);

}  // namespace dsbo
