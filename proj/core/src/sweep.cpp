#include "dsbo/sweep.hpp"

#include "dsbo/errors.hpp"
#include "dsbo/operator.hpp"

#include <algorithm>
#include <atomic>
#include <thread>

namespace dsbo {

std::vector<SweepPoint> enumerate_points(const SweepConfig& cfg, std::vector<std::string>* skipped) {
    std::vector<SweepPoint> pts;
    for (int N = cfg.n_min; N <= cfg.n_max; ++N) {
        std::vector<int> ms;
        for (int off = cfg.m_offset_min; off <= cfg.m_offset_max; ++off) {
            ms.push_back(N + off);
            if (cfg.include_negative_m) ms.push_back(-(N + off));
        }
        std::sort(ms.begin(), ms.end());
        ms.erase(std::unique(ms.begin(), ms.end()), ms.end());
        for (int m : ms) {
            const int am = m < 0 ? -m : m;
            if (am <= N) {
                if (skipped)
                    skipped->push_back("N=" + std::to_string(N) + " m=" + std::to_string(m) +
                                       ": regime |m| <= N unsupported");
                continue;
            }
            for (long a = am - N; a <= am + N + cfg.a_extra; ++a) {
                std::vector<Rational> lams;
                for (long l = 1 - N - a - cfg.lambda_margin; l <= N + cfg.lambda_margin - a; ++l) lams.emplace_back(l);
                for (const auto& x : cfg.extra_lambdas)
                    if (std::find(lams.begin(), lams.end(), x) == lams.end()) lams.push_back(x);
                std::sort(lams.begin(), lams.end());
                for (const auto& l : lams) pts.push_back({N, m, a, l});
            }
        }
    }
    return pts;
}

std::optional<GaussianRational> solution_scalar(const SolutionVector& g1, const SolutionVector& g2) {
    if (g1.g.size() != g2.g.size()) return std::nullopt;
    std::optional<GaussianRational> c;
    for (size_t i = 0; i < g1.g.size() && !c; ++i) {
        const auto& p = g1.g[i];
        for (int d = 0; d <= p.degree(); ++d)
            if (!p.coeff(d).is_zero()) {
                c = g2.g[i].coeff(d) / p.coeff(d);
                break;
            }
    }
    if (!c) return g2.is_zero() ? std::optional<GaussianRational>(GaussianRational()) : std::nullopt;
    for (size_t i = 0; i < g1.g.size(); ++i)
        if (!(g1.g[i] * *c == g2.g[i])) return std::nullopt;
    return c;
}

bool annihilated_by_all(const SystemParams& p, const SolutionVector& f) {
    for (const auto& eq : l_equations(p.N))
        if (!apply_L(eq.kind, eq.sign, eq.j, p, f).is_zero()) return false;
    return true;
}

namespace {

// Component d of the symbol is (zeta1 + i zeta2)^(m-N+d) times an inflated
// part for m > 0, and the mirror image (p - q = |m| + N - d) for m < 0.
bool symbol_type_ok(const DiffOperator& D, const SystemParams& p) {
    for (const auto& [k, c] : D.terms()) {
        const int d = k[0];
        const int diff = k[2] - k[1];
        if (p.m > 0 ? diff != p.m - p.N + d : -diff != p.abs_m() + p.N - d) return false;
    }
    return true;
}

bool orders_ok(const DiffOperator& D, long a) {
    for (const auto& [k, c] : D.terms())
        if (k[1] + k[2] + k[3] != a) return false;
    return !D.is_zero();
}

}  // namespace

Certificate certify(const SweepPoint& pt, const SweepConfig& cfg) {
    Certificate c;
    c.point = pt;
    try {
        const auto params = SystemParams::make(pt.lambda, pt.lambda + Rational(pt.a), pt.N, pt.m);
        const auto pos = pt.m > 0 ? params : params.mirrored();
        c.classification = classify(params);
        const auto xi = solve_xi(pos);
        c.xi_dimension = xi.dimension;
        c.hom_dimension = hom_dimension(pos);
        c.dimension_ok = xi.dimension == c.classification.dimension;
        if (xi.dimension == 1) {
            const auto closed = closed_solution(pos);
            c.closed_annihilated = !closed.is_zero() && annihilated_by_all(pos, closed);
            c.closed_scalar = solution_scalar(*xi.generator, closed);
            c.closed_proportional = c.closed_scalar && !c.closed_scalar->is_zero();

            const auto psi = symbol_psi(pos, *xi.generator);
            const auto image = pt.m > 0 ? symbol_to_operator(psi)
                                        : symbol_to_operator(dual_solution(psi, params));
            bool dual = symbol_type_ok(image, params);
            if (pt.m < 0) dual = dual && dual_solution(dual_solution(psi, params), pos).components == psi.components;
            c.duality_ok = dual;

            if (pt.N <= cfg.operator_max_n) {
                const auto paper = emit_operator(params, OperatorForm::Paper);
                const auto canon = emit_operator(params, OperatorForm::Canonical);
                c.operator_scalar = compare_up_to_scalar(paper, canon);
                c.operator_proportional = c.operator_scalar && !c.operator_scalar->is_zero() &&
                                          compare_up_to_scalar(paper, image).has_value();
                c.operator_order_ok = orders_ok(paper, pt.a);
            }
        }
        auto ok = [](const std::optional<bool>& b) { return !b || *b; };
        c.pass = c.dimension_ok && ok(c.closed_annihilated) && ok(c.closed_proportional) && ok(c.duality_ok) &&
                 ok(c.operator_proportional) && ok(c.operator_order_ok);
    } catch (const std::exception& e) {
        c.error = e.what();
        c.pass = false;
    }
    return c;
}

SweepResult run_sweep(const SweepConfig& cfg) {
    SweepResult res;
    const auto pts = enumerate_points(cfg, &res.skipped);
    res.certificates.resize(pts.size());
    std::atomic<size_t> next{0};
    auto worker = [&] {
        for (size_t i; (i = next.fetch_add(1)) < pts.size();) res.certificates[i] = certify(pts[i], cfg);
    };
    const unsigned jobs = std::max(1u, std::min<unsigned>(cfg.jobs, static_cast<unsigned>(pts.size())));
    if (jobs <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (unsigned t = 0; t < jobs; ++t) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }
    for (const auto& c : res.certificates) {
        ++res.summary.checked;
        if (c.xi_dimension == 1)
            ++res.summary.dim1;
        else if (c.xi_dimension == 0)
            ++res.summary.dim0;
        if (!c.pass) ++res.summary.failures;
    }
    return res;
}

namespace {

json opt_bool(const std::optional<bool>& b) { return b ? json(*b) : json(nullptr); }

json opt_scalar(const std::optional<GaussianRational>& s) { return s ? json(*s) : json(nullptr); }

}  // namespace

json certificate_json(const Certificate& c) {
    json j;
    j["N"] = c.point.N;
    j["m"] = c.point.m;
    j["a"] = c.point.a;
    j["lambda"] = c.point.lambda;
    j["nu"] = c.point.lambda + Rational(c.point.a);
    j["classification"] = c.classification;
    j["xi_dimension"] = c.xi_dimension;
    j["hom_dimension"] = c.hom_dimension;
    j["closed_scalar"] = opt_scalar(c.closed_scalar);
    j["operator_scalar"] = opt_scalar(c.operator_scalar);
    json checks;
    checks["dimension"] = c.dimension_ok;
    checks["closed_annihilated"] = opt_bool(c.closed_annihilated);
    checks["closed_proportional"] = opt_bool(c.closed_proportional);
    checks["duality"] = opt_bool(c.duality_ok);
    checks["operator_proportional"] = opt_bool(c.operator_proportional);
    checks["operator_order"] = opt_bool(c.operator_order_ok);
    j["checks"] = checks;
    if (!c.error.empty()) j["error"] = c.error;
    j["pass"] = c.pass;
    return j;
}

json summary_json(const SweepSummary& s) {
    json j;
    j["checked"] = s.checked;
    j["dim0"] = s.dim0;
    j["dim1"] = s.dim1;
    j["failures"] = s.failures;
    return j;
}

}  // namespace dsbo
