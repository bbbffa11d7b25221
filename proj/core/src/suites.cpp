#include "dsbo/suites.hpp"

#include "dsbo/errors.hpp"
#include "dsbo/fsystem.hpp"
#include "dsbo/gegenbauer.hpp"
#include "dsbo/hypergeom.hpp"
#include "dsbo/operator.hpp"

#include <functional>

namespace dsbo {

void CheckResult::record(bool ok, const std::string& what) {
    if (ok) {
        ++passed;
        return;
    }
    ++failed;
    if (samples.size() < 5) samples.push_back(what);
}

bool SuiteReport::ok() const {
    for (const auto& c : checks)
        if (c.failed) return false;
    return true;
}

std::vector<Rational> default_mu_sample() {
    std::vector<Rational> mus;
    for (int k = -8; k <= 4; ++k) mus.emplace_back(k);
    for (int k : {-7, -3, -1, 1, 5}) mus.emplace_back(Rational(k, 2));
    for (int k : {-7, -1, 1, 2, 4}) mus.emplace_back(Rational(k, 3));
    return mus;
}

namespace {

std::string at(int ell, const Rational& mu) { return "ell=" + std::to_string(ell) + " mu=" + mu.str(); }

GaussianRational gq(const Rational& r) { return GaussianRational(r); }

// Kernel of G_ell^mu on EvenSpace(ell) as a rational matrix.
ExactMatrix gegenbauer_matrix(int ell, const Rational& mu) {
    auto basis = even_basis(ell);
    ExactMatrix M(static_cast<size_t>(ell) + 1, basis.size());
    for (size_t c = 0; c < basis.size(); ++c) {
        Poly r = apply_gegenbauer(ell, mu, basis[c]);
        for (int d = 0; d <= r.degree(); ++d) M.at(static_cast<size_t>(d), c) = r.coeff(d).re();
    }
    return M;
}

bool proportional(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return a.is_zero() && b.is_zero();
    if (a.degree() != b.degree()) return false;
    GaussianRational c = b.coeffs().back() / a.coeffs().back();
    return a * c == b;
}

}  // namespace

SuiteReport gegenbauer_suite(const GegenbauerSuiteConfig& cfg) {
    SuiteReport rep;
    rep.suite = "gegenbauer";
    CheckResult annihil{"annihilation"}, deriv{"derivative"}, euler{"euler"}, kkp{"three_term"},
        ttr{"ttr_generalized"}, s_id{"s_operator_identities"}, gprod{"gamma_product"},
        vanish{"coefficient_vanishing"}, koss{"koss_degree_decay"}, uniq{"kernel_uniqueness"};
    const GaussianRational two_i(Rational(0), Rational(2));
    for (const auto& mu : cfg.mus) {
        for (int ell = 0; ell <= cfg.max_ell; ++ell) {
            const Poly c = gegenbauer_it(ell, mu);
            annihil.record(apply_imaginary_gegenbauer(ell, mu, c).is_zero() &&
                               apply_gegenbauer(ell, mu, gegenbauer(ell, mu)).is_zero() && !c.is_zero(),
                           at(ell, mu));
            deriv.record(differentiate(c) ==
                             gegenbauer_it(ell - 1, mu + Rational(1)) * (two_i * gq(gamma_factor(mu, ell))),
                         at(ell, mu));
            euler.record(euler_apply(c) - c * GaussianRational(ell) ==
                             gegenbauer_it(ell - 2, mu + Rational(1)) * GaussianRational(2),
                         at(ell, mu));
            kkp.record(gegenbauer_it(ell, mu - Rational(1)) * gq(mu + Rational(ell - 1)) +
                               gegenbauer_it(ell - 2, mu) ==
                           c * gq(mu + Rational(floor_div(ell - 1, 2))),
                       at(ell, mu));
            const long h = floor_div(ell + 1, 2);
            for (int d = 0; d <= cfg.ttr_max_d; ++d) {
                Poly rhs;
                for (int s = 0; s <= d; ++s)
                    rhs += gegenbauer_it(ell + 2 * (s - d), mu - Rational(s)) *
                           gq(binomial(d, s) * gamma_ratio(mu + Rational(ell - d), s));
                ttr.record(c * gq(gamma_ratio(mu - Rational(d) + Rational(h), d)) == rhs,
                           at(ell, mu) + " d=" + std::to_string(d));
            }
            for (int d = 1; d <= cfg.s_max_d; ++d)
                for (int s = 0; s <= cfg.s_max_power; ++s) {
                    Poly ts = Poly::monomial(s);
                    Poly lhs1 = apply_imaginary_gegenbauer(ell, mu, ts) -
                                apply_imaginary_gegenbauer(ell, mu + Rational(d), ts);
                    Poly rhs1 = (euler_apply(ts) - ts * GaussianRational(ell)) * GaussianRational(2 * d);
                    Poly lhs2 = apply_imaginary_gegenbauer(ell, mu, ts) -
                                apply_imaginary_gegenbauer(ell - 2 * d, mu + Rational(d), ts);
                    Poly rhs2 =
                        (euler_apply(ts) + ts * gq(Rational(2) * mu + Rational(ell))) * GaussianRational(2 * d);
                    s_id.record(lhs1 == rhs1 && lhs2 == rhs2,
                                at(ell, mu) + " d=" + std::to_string(d) + " s=" + std::to_string(s));
                }
            auto M = gegenbauer_matrix(ell, mu);
            auto ker = nullspace(M);
            bool u = ker.size() == 1;
            if (u) {
                Poly k;
                auto basis = even_basis(ell);
                for (size_t i = 0; i < basis.size(); ++i) k += basis[i] * gq(ker[0][i]);
                u = proportional(gegenbauer(ell, mu), k);
            }
            uniq.record(u, at(ell, mu));
        }
        for (int ell = -cfg.max_ell; ell <= cfg.max_ell; ++ell)
            gprod.record(gamma_factor(mu, ell) * gamma_factor(mu, ell + 1) == mu + Rational(floor_div(ell + 1, 2)),
                         at(ell, mu));
    }
    for (int ell = 0; ell <= cfg.max_ell; ++ell)
        for (int k = 0; k <= ell / 2; ++k) {
            auto M = vanishing_set(ell, k);
            for (int mu = cfg.vanishing_mu_min; mu <= cfg.vanishing_mu_max; ++mu) {
                bool zero = gegenbauer_coefficients(ell, Rational(mu))[static_cast<size_t>(ell - 2 * k)].is_zero();
                bool in = std::find(M.begin(), M.end(), Rational(mu)) != M.end();
                vanish.record(zero == in, at(ell, Rational(mu)) + " k=" + std::to_string(k));
            }
        }
    for (int b = 0; b <= cfg.koss_max_b; ++b)
        for (int ell = 0; ell <= 2 * b; ++ell) {
            const long lo = -b + floor_div(2 * b - ell + 1, 2);
            const long hi = -b + floor_div(ell + 1, 2);
            std::string what = "b=" + std::to_string(b) + " ell=" + std::to_string(ell);
            try {
                Rational g = gamma_ratio(Rational(lo), hi - lo);
                koss.record(gegenbauer(ell, Rational(-b)) * gq(g) == gegenbauer(2 * b - ell, Rational(-b)), what);
            } catch (const PoleError&) {
                koss.record(false, what + " (pole)");
            }
        }
    rep.checks = {annihil, deriv, euler, kkp, ttr, s_id, gprod, vanish, koss, uniq};
    return rep;
}

namespace {

bool lower_pole(const std::vector<Rational>& lower, long n_star) {
    for (const auto& b : lower)
        if (b.is_integer() && b.sign() <= 0 && -b.to_long() < n_star) return true;
    return false;
}

std::string params_str(const std::vector<Rational>& v) {
    std::string s;
    for (const auto& x : v) s += (s.empty() ? "" : ",") + x.str();
    return s;
}

}  // namespace

SuiteReport hypergeom_suite(const HypergeomSuiteConfig& cfg) {
    SuiteReport rep;
    rep.suite = "hypergeom";
    CheckResult chu{"chu_vandermonde"}, ps{"pfaff_saalschutz"}, aar{"aar_transformation"}, kummer{"kummer"},
        gauss{"gauss"};
    const auto& V = cfg.values;
    const Rational one(1);
    for (int n = 0; n <= cfg.max_n; ++n) {
        const Rational mn(-n);
        for (const auto& a : V)
            for (const auto& c : V) {
                if (lower_pole({c}, n)) {
                    ++chu.skipped;
                    continue;
                }
                Rational lhs = hyper({{mn, a}, {c}, one});
                chu.record(lhs == gamma_ratio(c - a, n) / gamma_ratio(c, n), params_str({mn, a, c}));
                gauss.record(lhs == gamma_ratio(c - a, n) / gamma_ratio(c, n) &&
                                 hyper({{a, mn}, {c}, one}) == lhs,
                             params_str({mn, a, c}));
                for (const auto& b : V) {
                    Rational e = one + a + b - c + mn;
                    Rational den = gamma_ratio(c, n) * gamma_ratio(c - a - b, n);
                    if (lower_pole({c, e}, n) || den.is_zero()) {
                        ++ps.skipped;
                        continue;
                    }
                    ps.record(hyper({{mn, a, b}, {c, e}, one}) == gamma_ratio(c - a, n) * gamma_ratio(c - b, n) / den,
                              params_str({mn, a, b, c}));
                }
                for (const auto& b : V)
                    for (const auto& d : V)
                        for (const auto& e : V) {
                            const Rational s = d + e - b - c;
                            if (lower_pole({d, e, s}, n) || gamma_ratio(e, n).is_zero()) {
                                ++kummer.skipped;
                                continue;
                            }
                            Rational lhs3 = hyper({{mn, b, c}, {d, e}, one});
                            Rational rhs3 = gamma_ratio(s, n) / gamma_ratio(e, n) *
                                            hyper({{mn, d - b, d - c}, {d, s}, one});
                            kummer.record(lhs3 == rhs3, params_str({mn, b, c, d, e}));
                        }
            }
    }
    for (int n = 1; n <= cfg.aar_max_n; ++n)
        for (int p = 0; p <= cfg.aar_max_p; ++p) {
            const Rational a(-p);
            for (const auto& b : V)
                for (const auto& d : V)
                    for (const auto& e : V) {
                        const Rational low = a + b - d + one;
                        const long rhs_stop = std::min<long>(p, n - 1);
                        if (lower_pole({d, e}, p) || lower_pole({low, e}, rhs_stop) || gamma_ratio(d, p).is_zero()) {
                            ++aar.skipped;
                            continue;
                        }
                        Rational lhs = hyper({{a, b, e + Rational(n - 1)}, {d, e}, one});
                        // Gamma(d)Gamma(d-a-b)/(Gamma(d-a)Gamma(d-b)) with a = -p
                        Rational pre = gamma_ratio(d - b, p) / gamma_ratio(d, p);
                        Rational rhs = pre * hyper({{a, b, Rational(1 - n)}, {low, e}, one});
                        aar.record(lhs == rhs, params_str({a, b, d, e}) + " n=" + std::to_string(n));
                    }
        }
    rep.checks = {chu, ps, aar, kummer, gauss};
    return rep;
}

namespace {

std::string point_str(const SweepPoint& p) {
    return "N=" + std::to_string(p.N) + " m=" + std::to_string(p.m) + " a=" + std::to_string(p.a) +
           " lambda=" + p.lambda.str();
}

}  // namespace

SuiteReport system_suite(const SystemSuiteConfig& cfg) {
    SuiteReport rep;
    rep.suite = "system";
    CheckResult pq("consistency_p_equals_q"), dim("nullspace_dimension"), gen("closed_form_generator"),
        dual("duality");
    for (int N = 0; N <= cfg.pq_max_n; ++N)
        for (int m = N + 1; m <= N + cfg.pq_m_offset; ++m)
            for (long a = m + 2 * N + 2; a <= m + 2 * N + 2 + cfg.pq_a_span; ++a) {
                auto c = consistency_polynomials(N, a, m);
                pq.record(c.P == c.Q, "N=" + std::to_string(N) + " m=" + std::to_string(m) + " a=" + std::to_string(a));
            }
    for (const auto& pt : enumerate_points(cfg.sweep)) {
        auto c = certify(pt, cfg.sweep);
        const std::string what = point_str(pt) + (c.error.empty() ? "" : " (" + c.error + ")");
        dim.record(c.dimension_ok && c.error.empty(), what);
        if (c.xi_dimension == 1) {
            gen.record(c.closed_annihilated.value_or(false) && c.closed_proportional.value_or(false), what);
            dual.record(c.duality_ok.value_or(false), what);
        }
    }
    rep.checks = {pq, dim, gen, dual};
    return rep;
}

SuiteReport operator_suite(const OperatorSuiteConfig& cfg) {
    SuiteReport rep;
    rep.suite = "operator";
    CheckResult juhl("juhl_low_order"), prop("paper_canonical_proportional"), order("total_order"),
        legacy("legacy_n1_regression");
    for (const auto& lam : {Rational(-1), Rational(1, 2), Rational(3)}) {
        DiffOperator id, one, two;
        id.add_term({0, 0, 0, 0}, GaussianRational(1));
        one.add_term({0, 0, 0, 1}, GaussianRational(2));
        two.add_term({0, 0, 0, 2}, GaussianRational(Rational(2) * lam));
        two.add_term({0, 1, 1, 0}, GaussianRational(4));
        juhl.record(juhl_operator(lam, lam) == id && juhl_operator(lam, lam + Rational(1)) == one &&
                        juhl_operator(lam, lam + Rational(2)) == two,
                    "lambda=" + lam.str());
    }
    for (const auto& pt : enumerate_points(cfg.sweep)) {
        auto params = SystemParams::make(pt.lambda, pt.lambda + Rational(pt.a), pt.N, pt.m);
        if (classify(params).dimension != 1) continue;
        auto c = certify(pt, cfg.sweep);
        const std::string what = point_str(pt) + (c.error.empty() ? "" : " (" + c.error + ")");
        prop.record(c.operator_proportional.value_or(false), what);
        order.record(c.operator_order_ok.value_or(false), what);
    }
    for (int m = 2; m <= cfg.legacy_max_m; ++m)
        for (long a = m; a <= cfg.legacy_max_a; ++a)
            for (long l : lambda_set(1, a, m)) {
                auto params = SystemParams::make(Rational(l), Rational(l + a), 1, m);
                const std::string what = "m=" + std::to_string(m) + " a=" + std::to_string(a) + " lambda=" +
                                         std::to_string(l);
                try {
                    legacy.record(legacy_operator(params) ==
                                      emit_operator(params, OperatorForm::Paper) * GaussianRational(2),
                                  what);
                } catch (const std::exception& e) {
                    legacy.record(false, what + " (" + e.what() + ")");
                }
            }
    rep.checks = {juhl, prop, order, legacy};
    return rep;
}

}  // namespace dsbo
