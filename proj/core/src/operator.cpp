#include "dsbo/operator.hpp"

#include "dsbo/closedform.hpp"
#include "dsbo/errors.hpp"
#include "dsbo/gegenbauer.hpp"

#include <sstream>

namespace dsbo {

void DiffOperator::add_term(const DiffKey& k, const GaussianRational& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = t_.try_emplace(k, c);
    if (inserted) return;
    it->second += c;
    if (it->second.is_zero()) t_.erase(it);
}

GaussianRational DiffOperator::coeff(const DiffKey& k) const {
    auto it = t_.find(k);
    return it == t_.end() ? GaussianRational() : it->second;
}

DiffOperator& DiffOperator::operator+=(const DiffOperator& o) {
    for (const auto& [k, c] : o.t_) add_term(k, c);
    return *this;
}

DiffOperator& DiffOperator::operator*=(const GaussianRational& s) {
    if (s.is_zero()) {
        t_.clear();
        return *this;
    }
    for (auto& [k, c] : t_) c *= s;
    return *this;
}

namespace {

// Juhl block of order ell with Gegenbauer parameter lambda - 1 placed in
// component d and multiplied by scale * dz^p dzb^q. Zero for ell < 0.
void add_juhl(DiffOperator& D, const Rational& lambda, long ell, int d, long p, long q,
              const GaussianRational& scale) {
    if (ell < 0 || scale.is_zero()) return;
    if (p < 0 || q < 0) throw Error("operator emission produced a negative derivative power");
    auto c = gegenbauer_coefficients(static_cast<int>(ell), lambda - Rational(1));
    Rational four_k(1);
    for (long k = 0; 2 * k <= ell; ++k) {
        D.add_term({d, static_cast<int>(p + k), static_cast<int>(q + k), static_cast<int>(ell - 2 * k)},
                   scale * GaussianRational(c[static_cast<size_t>(ell - 2 * k)] * four_k));
        four_k *= Rational(-4);
    }
}

// Juhl operator C~_{l1, n1}: order n1 - l1, parameter l1 - 1.
void add_juhl_pair(DiffOperator& D, const Rational& l1, const Rational& n1, int d, long p, long q,
                   const GaussianRational& scale) {
    Rational ord = n1 - l1;
    if (!ord.is_integer()) throw DomainError("Juhl operator order is not an integer");
    add_juhl(D, l1, ord.to_long(), d, p, q, scale);
}

GaussianRational two_pow(long e) { return GaussianRational(pow(Rational(2), e)); }

DiffOperator emit_paper(const SystemParams& p) {
    const int N = p.N;
    const long nu = p.nu.to_long();
    const Rational& lam = p.lambda;
    DiffOperator D;
    if (p.m > 0) {
        const long m = p.m;
        for (int d = 0; d <= N - 1; ++d)
            for (int r = 0; r <= d; ++r) {
                Rational A = a_constant(d, r, p);
                if (A.is_zero()) continue;
                add_juhl_pair(D, lam + Rational(N - r), Rational(2 - nu - d - m + r), d, N + nu - r - 1,
                              m + d + nu - r - 1, two_pow(d + 2 * nu - 2 * r - 2) * GaussianRational(A));
            }
        for (int d = N; d <= 2 * N; ++d)
            for (int r = 0; r <= 2 * N - d; ++r) {
                Rational B = b_constant(d, r, p);
                if (B.is_zero()) continue;
                add_juhl_pair(D, lam + Rational(N - r), Rational(nu + d - m - 2 * N + r), d, 2 * N - d - r,
                              N + m - r, two_pow(2 * N - d - 2 * r) * GaussianRational(B));
            }
        return D;
    }
    const long m = p.m;
    for (int d = 0; d <= N; ++d)
        for (int r = 0; r <= d; ++r) {
            Rational B = b_constant(2 * N - d, r, p);
            if (B.is_zero()) continue;
            if (d % 2) B = -B;
            add_juhl_pair(D, lam + Rational(N - r), Rational(nu - d + m + r), d, N - m - r, d - r,
                          two_pow(d - 2 * r) * GaussianRational(B));
        }
    for (int d = N + 1; d <= 2 * N; ++d)
        for (int r = 0; r <= 2 * N - d; ++r) {
            Rational A = a_constant(2 * N - d, r, p);
            if (A.is_zero()) continue;
            if (d % 2) A = -A;
            add_juhl_pair(D, lam + Rational(N - r), Rational(2 - nu + d - 2 * N + m + r), d,
                          -m + 2 * N - d + nu - r - 1, N + nu - r - 1,
                          two_pow(2 * N - d + 2 * nu - 2 * r - 2) * GaussianRational(A));
        }
    return D;
}

void require_dimension_one(const SystemParams& p) {
    if (classify(p).dimension != 1)
        throw EmptySolutionSpace("no differential symmetry breaking operator at these parameters");
}

}  // namespace

VectorSymbol symbol_psi(const SystemParams& p, const SolutionVector& g) {
    if (p.m < 0) throw DomainError("symbol_psi expects m > N");
    const long a = p.require_a();
    VectorSymbol psi;
    psi.components.resize(static_cast<size_t>(2 * p.N + 1));
    MultiPoly w = MultiPoly::variable(0) + MultiPoly::variable(1) * GaussianRational::i();
    for (int k = p.m - p.N; k <= p.m + p.N; ++k) {
        const Poly& gk = g.g_k(k);
        if (gk.is_zero()) continue;
        psi.components[static_cast<size_t>(k - p.m + p.N)] = inflate(static_cast<int>(a - k), gk) * pow(w, k);
    }
    return psi;
}

DiffOperator symbol_to_operator(const VectorSymbol& psi) {
    // zeta1 = (w + wb)/2, zeta2 = -i (w - wb)/2 in variables (w, wb, zeta3).
    const GaussianRational half(Rational(1, 2));
    const GaussianRational ihalf(Rational(0), Rational(1, 2));
    const MultiPoly z1 = (MultiPoly::variable(0) + MultiPoly::variable(1)) * half;
    const MultiPoly z2 = (MultiPoly::variable(1) - MultiPoly::variable(0)) * ihalf;
    std::vector<MultiPoly> p1{MultiPoly(GaussianRational(1))}, p2{MultiPoly(GaussianRational(1))};
    auto power = [](std::vector<MultiPoly>& cache, const MultiPoly& base, int e) -> const MultiPoly& {
        while (static_cast<int>(cache.size()) <= e) cache.push_back(cache.back() * base);
        return cache[static_cast<size_t>(e)];
    };
    DiffOperator D;
    for (size_t d = 0; d < psi.components.size(); ++d) {
        MultiPoly W;
        for (const auto& [e, c] : psi.components[d].terms()) {
            MultiPoly t = power(p1, z1, e[0]) * power(p2, z2, e[1]);
            t *= c;
            for (const auto& [f, cf] : t.terms()) W.add_term({f[0], f[1], f[2] + e[2]}, cf);
        }
        bool plus = false, minus = false;
        for (const auto& [f, c] : W.terms()) {
            plus |= f[0] > f[1];
            minus |= f[0] < f[1];
        }
        if (plus && minus)
            throw DomainError("symbol component is not a polynomial in the stated generators");
        for (const auto& [f, c] : W.terms())
            D.add_term({static_cast<int>(d), f[1], f[0], f[2]}, c * two_pow(f[0] + f[1]));
    }
    return D;
}

DiffOperator juhl_operator(const Rational& lambda, const Rational& nu) {
    Rational ord = nu - lambda;
    if (!ord.is_integer() || ord.sign() < 0) throw DomainError("juhl_operator needs nu - lambda in N");
    DiffOperator D;
    add_juhl(D, lambda, ord.to_long(), 0, 0, 0, GaussianRational(1));
    return D;
}

DiffOperator emit_operator(const SystemParams& p, OperatorForm form) {
    require_dimension_one(p);
    if (form == OperatorForm::Paper) return emit_paper(p);
    const SystemParams pos = p.m > 0 ? p : p.mirrored();
    XiResult xi = solve_xi(pos);
    if (xi.dimension != 1 || !xi.generator)
        throw Error("nullspace dimension disagrees with the classification");
    VectorSymbol psi = symbol_psi(pos, *xi.generator);
    if (p.m < 0) psi = dual_solution(psi, pos);
    return symbol_to_operator(psi);
}

DiffOperator legacy_operator(const SystemParams& p) {
    if (p.N != 1 || p.m <= 1) throw DomainError("legacy_operator is defined for N = 1, m > 1");
    require_dimension_one(p);
    const long nu = p.nu.to_long();
    const long m = p.m;
    const long a = p.require_a();
    const Rational& lam = p.lambda;
    DiffOperator D;
    {
        long lo = floor_div(a - m - 1, 2);
        long hi = floor_of((-lam - p.nu + Rational(2 - m)) / Rational(2));
        Rational g = gamma_ratio(lam + Rational(lo), hi - lo) * pow(Rational(2), 2 * nu);
        if (nu % 2 == 0) g = -g;
        add_juhl_pair(D, lam + Rational(1), Rational(2 - nu - m), 0, nu, nu + m - 1, GaussianRational(g));
    }
    const Rational gam = gamma_factor(lam - Rational(1), a - m);
    add_juhl_pair(D, lam, Rational(nu - m), 1, 0, m, GaussianRational(Rational(m * (1 - nu)) - lam + Rational(2)));
    {
        DiffOperator J;
        add_juhl_pair(J, lam + Rational(1), Rational(nu - m), 1, 0, m, GaussianRational(Rational(-2) * gam));
        for (const auto& [k, c] : J.terms()) D.add_term({k[0], k[1], k[2], k[3] + 1}, c);
    }
    add_juhl_pair(D, lam + Rational(1), Rational(nu - m), 2, 0, m + 1, GaussianRational(Rational(-4) * gam));
    return D;
}

std::optional<GaussianRational> compare_up_to_scalar(const DiffOperator& D1, const DiffOperator& D2) {
    if (D1.is_zero()) return std::nullopt;
    if (D2.is_zero()) return GaussianRational(0);
    if (D1.terms().size() != D2.terms().size()) return std::nullopt;
    const auto& [k0, c0] = *D1.terms().begin();
    GaussianRational c = D2.coeff(k0) / c0;
    if (c.is_zero()) return std::nullopt;
    for (const auto& [k, v] : D1.terms())
        if (D2.coeff(k) != v * c) return std::nullopt;
    return c;
}

namespace {

std::string latex_rational(const Rational& r) {
    if (r.is_integer()) return r.str();
    std::string s = r.sign() < 0 ? "-" : "";
    return s + "\\frac{" + r.num().get_str().substr(r.sign() < 0 ? 1 : 0) + "}{" + r.den().get_str() + "}";
}

std::string latex_coeff(const GaussianRational& c) {
    if (c.is_real()) return latex_rational(c.re());
    if (c.re().is_zero()) return latex_rational(c.im()) + "i";
    return "\\left(" + latex_rational(c.re()) + (c.im().sign() > 0 ? "+" : "") + latex_rational(c.im()) +
           "i\\right)";
}

std::string latex_derivative(int p, int q, int r) {
    int n = p + q + r;
    if (n == 0) return "";
    std::ostringstream os;
    os << "\\frac{\\partial^{" << n << "}}{";
    bool first = true;
    auto part = [&](int e, const char* v) {
        if (!e) return;
        if (!first) os << " ";
        first = false;
        os << "\\partial " << v;
        if (e > 1) os << "^{" << e << "}";
    };
    part(p, "z");
    part(q, "\\bar{z}");
    part(r, "x_3");
    os << "}";
    return os.str();
}

}  // namespace

std::string to_latex(const DiffOperator& D) {
    std::ostringstream os;
    int cur = -1;
    bool first_comp = true;
    for (const auto& [k, c] : D.terms()) {
        if (k[0] != cur) {
            if (cur >= 0) os << "\\right) \\otimes u_{" << cur << "}^{\\vee}";
            if (!first_comp) os << " + ";
            first_comp = false;
            os << "\\left(";
            cur = k[0];
        } else {
            os << " + ";
        }
        std::string co = latex_coeff(c);
        std::string dv = latex_derivative(k[1], k[2], k[3]);
        if (dv.empty()) os << co;
        else if (co == "1") os << dv;
        else if (co == "-1") os << "-" << dv;
        else os << co << " " << dv;
    }
    if (cur >= 0) os << "\\right) \\otimes u_{" << cur << "}^{\\vee}";
    else os << "0";
    return os.str();
}

std::string to_text(const DiffOperator& D) {
    std::ostringstream os;
    int cur = -1;
    for (const auto& [k, c] : D.terms()) {
        if (k[0] != cur) {
            if (cur >= 0) os << "\n";
            os << "u" << k[0] << ": ";
            cur = k[0];
        } else {
            os << " + ";
        }
        os << "(" << c.str() << ")";
        if (k[1]) os << "*Dz^" << k[1];
        if (k[2]) os << "*Dzb^" << k[2];
        if (k[3]) os << "*Dx3^" << k[3];
    }
    if (cur < 0) os << "0";
    os << "\n";
    return os.str();
}

}  // namespace dsbo
