#include "dsbo/poly.hpp"

#include "dsbo/errors.hpp"

namespace dsbo {

std::vector<Poly> even_basis(int b) {
    std::vector<Poly> out;
    for (int j = 0; b >= 0 && j <= b / 2; ++j) out.push_back(Poly::monomial(b - 2 * j));
    return out;
}

bool in_even_space(const Poly& f, int b) {
    const auto& c = f.coeffs();
    for (int d = 0; d < static_cast<int>(c.size()); ++d) {
        if (c[d].is_zero()) continue;
        if (d > b || ((b - d) % 2) != 0) return false;
    }
    return true;
}

MultiPoly MultiPoly::variable(int index) {
    Exponent3 e{0, 0, 0};
    e.at(static_cast<size_t>(index)) = 1;
    return monomial(e);
}

MultiPoly MultiPoly::monomial(Exponent3 e, GaussianRational c) {
    MultiPoly p;
    p.add_term(e, c);
    return p;
}

void MultiPoly::add_term(const Exponent3& e, const GaussianRational& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = t_.try_emplace(e, c);
    if (inserted) return;
    it->second += c;
    if (it->second.is_zero()) t_.erase(it);
}

GaussianRational MultiPoly::coeff(const Exponent3& e) const {
    auto it = t_.find(e);
    return it == t_.end() ? GaussianRational() : it->second;
}

std::optional<int> MultiPoly::homogeneous_degree() const {
    std::optional<int> deg;
    for (const auto& [e, c] : t_) {
        int d = e[0] + e[1] + e[2];
        if (deg && *deg != d) return std::nullopt;
        deg = d;
    }
    return deg;
}

MultiPoly MultiPoly::negate_variable(int index) const {
    MultiPoly out;
    for (const auto& [e, c] : t_)
        out.t_.emplace(e, (e.at(static_cast<size_t>(index)) % 2) ? -c : c);
    return out;
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
    for (const auto& [e, c] : o.t_) add_term(e, c);
    return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
    for (const auto& [e, c] : o.t_) add_term(e, -c);
    return *this;
}

MultiPoly& MultiPoly::operator*=(const GaussianRational& s) {
    if (s.is_zero()) {
        t_.clear();
        return *this;
    }
    for (auto& [e, c] : t_) c *= s;
    return *this;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
    MultiPoly out;
    for (const auto& [ea, ca] : a.t_)
        for (const auto& [eb, cb] : b.t_)
            out.add_term({ea[0] + eb[0], ea[1] + eb[1], ea[2] + eb[2]}, ca * cb);
    return out;
}

MultiPoly pow(const MultiPoly& p, int e) {
    if (e < 0) throw DomainError("negative power of a polynomial");
    MultiPoly r(GaussianRational(1)), b = p;
    while (e > 0) {
        if (e & 1) r *= b;
        e >>= 1;
        if (e) b *= b;
    }
    return r;
}

MultiPoly inflate(int b, const Poly& g) {
    if (b < 0) {
        if (!g.is_zero()) throw DomainError("inflate: nonzero polynomial in the zero space");
        return {};
    }
    if (!in_even_space(g, b))
        throw DomainError("inflate: polynomial is not in EvenSpace(" + std::to_string(b) + ")");
    MultiPoly out;
    const auto& c = g.coeffs();
    for (int s = 0; s < static_cast<int>(c.size()); ++s) {
        if (c[s].is_zero()) continue;
        int u = (b - s) / 2;
        for (int i = 0; i <= u; ++i)
            out.add_term({2 * i, 2 * (u - i), s}, c[s] * GaussianRational(binomial(u, i)));
    }
    return out;
}

}  // namespace dsbo
