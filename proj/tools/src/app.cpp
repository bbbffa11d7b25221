#include "app.hpp"

#include "dsbo/closedform.hpp"
#include "dsbo/errors.hpp"
#include "dsbo/fsystem.hpp"
#include "dsbo/json_io.hpp"
#include "dsbo/operator.hpp"
#include "dsbo/suites.hpp"
#include "dsbo/sweep.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <functional>
#include <ostream>
#include <sstream>

namespace dsbo::app {

namespace {

struct PointArgs {
    std::string lambda;
    std::string nu;
    int N = 0;
    int m = 0;

    SystemParams params() const { return SystemParams::make(Rational::parse(lambda), Rational::parse(nu), N, m); }
};

void add_point_options(CLI::App* cmd, PointArgs& p) {
    cmd->add_option("--lambda", p.lambda, "lambda (integer or p/q)")->required();
    cmd->add_option("--nu", p.nu, "nu (integer or p/q)")->required();
    cmd->add_option("-N", p.N, "N >= 0")->required();
    cmd->add_option("-m", p.m, "m with |m| > N")->required();
}

// Writes to --out when given, otherwise to out.
void emit(const std::string& path, std::ostream& out, const std::string& body) {
    if (path.empty()) {
        out << body;
        return;
    }
    std::ofstream f(path, std::ios::binary);
    if (!f) throw Error("cannot open " + path);
    f << body;
    if (!f) throw Error("write failed: " + path);
}

std::string poly_text(const Poly& p) {
    if (p.is_zero()) return "0";
    std::string s;
    for (int d = p.degree(); d >= 0; --d) {
        if (p.coeff(d).is_zero()) continue;
        if (!s.empty()) s += " + ";
        s += "(" + p.coeff(d).str() + ")";
        if (d > 0) s += "*t^" + std::to_string(d);
    }
    return s;
}

std::string classification_text(const Classification& c) {
    std::ostringstream os;
    os << "dimension: " << c.dimension << "\n"
       << "lambda_admissible: " << std::boolalpha << c.lambda_admissible << "\n"
       << "nu_admissible: " << c.nu_admissible << "\n"
       << "sporadic: " << c.sporadic << "\n"
       << "all_sbos_differential: " << c.all_sbos_differential << "\n";
    return os.str();
}

json normalization(const DiffOperator& D) {
    const auto& [k, c] = *D.terms().begin();
    return json{{"term", json{{"d", k[0]}, {"p", k[1]}, {"q", k[2]}, {"r", k[3]}}},
                {"scale", GaussianRational(1) / c}};
}

json operator_json(const DiffOperator& D) { return json{{"terms", D}, {"normalization", normalization(D)}}; }

std::string render(const DiffOperator& D, const std::string& format) {
    if (format == "latex") return to_latex(D) + "\n";
    return to_text(D);
}

int cmd_classify(const PointArgs& pa, const std::string& format, const std::string& out_path, std::ostream& out) {
    const auto p = pa.params();
    const auto c = classify(p);
    if (format == "latex") throw DomainError("latex format is only available for operator");
    if (format == "text") {
        emit(out_path, out, classification_text(c));
    } else {
        json j = c;
        j["params"] = params_json(p);
        emit(out_path, out, j.dump() + "\n");
    }
    return kOk;
}

int cmd_solve(const PointArgs& pa, const std::string& format, const std::string& out_path, std::ostream& out) {
    const auto p = pa.params();
    if (format == "latex") throw DomainError("latex format is only available for operator");
    const auto pos = p.m > 0 ? p : p.mirrored();
    const auto xi = solve_xi(pos);
    json j;
    j["params"] = params_json(p);
    j["dimension"] = xi.dimension;
    j["hom_dimension"] = p.a ? json(hom_dimension(pos)) : json(nullptr);
    if (xi.dimension == 0) {
        j["error"] = "empty solution space";
        emit(out_path, out, (format == "text" ? std::string("dimension: 0\nempty solution space\n") : j.dump() + "\n"));
        return kEmpty;
    }
    if (xi.dimension != 1) throw Error("solution space of dimension " + std::to_string(xi.dimension));
    const auto& gen = *xi.generator;
    json layout = json::array();
    for (const auto& [k, deg] : unknown_layout(pos)) layout.push_back(json{{"k", k}, {"degree", deg}});
    j["layout"] = layout;
    j["coefficients"] = xi.coefficients;
    j["generator"] = gen;
    if (p.m < 0) {
        j["mirrored_m"] = pos.m;
        j["dual_symbol"] = dual_solution(symbol_psi(pos, gen), p);
    }
    if (format == "text") {
        std::ostringstream os;
        os << "dimension: 1\n";
        if (p.m < 0) os << "generator of the mirrored system m=" << pos.m << "\n";
        for (int k = gen.k_min(); k <= gen.k_max(); ++k) os << "g" << k << ": " << poly_text(gen.g_k(k)) << "\n";
        emit(out_path, out, os.str());
    } else {
        emit(out_path, out, j.dump() + "\n");
    }
    return kOk;
}

int cmd_operator(const PointArgs& pa, const std::string& form, const std::string& format, const std::string& out_path,
                 std::ostream& out) {
    const auto p = pa.params();
    if (classify(p).dimension != 1) {
        json j{{"params", params_json(p)}, {"dimension", 0}, {"error", "empty solution space"}};
        emit(out_path, out, format == "json" ? j.dump() + "\n" : std::string("empty solution space\n"));
        return kEmpty;
    }
    json j;
    j["params"] = params_json(p);
    j["form"] = form;
    std::string body;
    if (form == "both") {
        const auto paper = emit_operator(p, OperatorForm::Paper);
        const auto canon = emit_operator(p, OperatorForm::Canonical);
        const auto c = compare_up_to_scalar(paper, canon);
        j["paper"] = operator_json(paper);
        j["canonical"] = operator_json(canon);
        j["proportionality"] = c ? json(*c) : json(nullptr);
        if (format == "json")
            body = j.dump() + "\n";
        else
            body = "paper:\n" + render(paper, format) + "canonical:\n" + render(canon, format) +
                   "proportionality: " + (c ? c->str() : std::string("none")) + "\n";
        emit(out_path, out, body);
        return c && !c->is_zero() ? kOk : kCheckFailed;
    }
    const auto D = emit_operator(p, form == "paper" ? OperatorForm::Paper : OperatorForm::Canonical);
    if (format == "json") {
        j["operator"] = operator_json(D);
        body = j.dump() + "\n";
    } else {
        body = render(D, format);
    }
    emit(out_path, out, body);
    return kOk;
}

struct SweepArgs {
    SweepConfig cfg;
    std::vector<std::string> extra;
    bool no_negative = false;
    std::string out;
};

int cmd_sweep(SweepArgs& sa, std::ostream& out, std::ostream& err) {
    if (!sa.extra.empty()) {
        sa.cfg.extra_lambdas.clear();
        for (const auto& s : sa.extra)
            if (s != "none") sa.cfg.extra_lambdas.push_back(Rational::parse(s));
    }
    sa.cfg.include_negative_m = !sa.no_negative;
    const auto res = run_sweep(sa.cfg);
    for (const auto& s : res.skipped) err << "skipped " << s << "\n";
    std::string lines;
    for (const auto& c : res.certificates) lines += certificate_json(c).dump() + "\n";
    if (sa.out.empty()) {
        out << lines;
    } else {
        emit(sa.out, out, lines);
    }
    out << summary_json(res.summary).dump() << "\n";
    return res.summary.failures ? kCheckFailed : kOk;
}

struct VerifyArgs {
    std::string suite = "all";
    int max_ell = 12;
    bool quick = false;
    std::string format = "text";
};

int cmd_verify(const VerifyArgs& va, std::ostream& out) {
    std::vector<SuiteReport> reports;
    const bool all = va.suite == "all";
    if (all || va.suite == "gegenbauer") {
        GegenbauerSuiteConfig c;
        c.max_ell = va.max_ell;
        reports.push_back(gegenbauer_suite(c));
    }
    if (all || va.suite == "hypergeom") {
        HypergeomSuiteConfig c;
        if (va.quick) c.max_n = 6;
        reports.push_back(hypergeom_suite(c));
    }
    if (all || va.suite == "system") {
        SystemSuiteConfig c;
        if (va.quick) c.sweep.n_max = 1;
        reports.push_back(system_suite(c));
    }
    if (all || va.suite == "operator") {
        OperatorSuiteConfig c;
        if (va.quick) c.sweep.n_max = 1;
        reports.push_back(operator_suite(c));
    }
    bool ok = true;
    for (const auto& r : reports) ok = ok && r.ok();
    if (va.format == "json") {
        json j;
        j["suites"] = json::array();
        for (const auto& r : reports) {
            json s{{"suite", r.suite}, {"ok", r.ok()}, {"checks", json::array()}};
            for (const auto& c : r.checks)
                s["checks"].push_back(json{{"name", c.name},
                                           {"passed", c.passed},
                                           {"failed", c.failed},
                                           {"skipped", c.skipped},
                                           {"samples", c.samples}});
            j["suites"].push_back(s);
        }
        j["ok"] = ok;
        out << j.dump() << "\n";
    } else {
        for (const auto& r : reports)
            for (const auto& c : r.checks) {
                out << r.suite << "." << c.name << ": " << c.passed << " passed, " << c.failed << " failed";
                if (c.skipped) out << ", " << c.skipped << " skipped";
                out << "\n";
                for (const auto& s : c.samples) out << "  failed at " << s << "\n";
            }
        out << "verify: " << (ok ? "ok" : "FAILED") << "\n";
    }
    return ok ? kOk : kCheckFailed;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact construction and verification of differential symmetry breaking operators"};
    app.require_subcommand(1);
    std::string format = "json";
    std::string out_path;
    std::string form = "paper";
    const std::vector<std::string> formats = {"json", "text", "latex"};

    PointArgs cls_args, sol_args, op_args;
    auto* classify = app.add_subcommand("classify", "dimension of the solution space and SBO classification");
    add_point_options(classify, cls_args);
    auto* solve = app.add_subcommand("solve", "generator of the polynomial solution space");
    add_point_options(solve, sol_args);
    auto* op = app.add_subcommand("operator", "emit the differential operator");
    add_point_options(op, op_args);
    op->add_option("--form", form)->check(CLI::IsMember({"paper", "canonical", "both"}));
    for (auto* c : {classify, solve, op}) {
        c->add_option("--format", format)->check(CLI::IsMember(formats));
        c->add_option("--out", out_path, "output file");
    }

    SweepArgs sa;
    auto* sweep = app.add_subcommand("sweep", "certify a parameter grid");
    sweep->add_option("--n-min", sa.cfg.n_min);
    sweep->add_option("--n-max", sa.cfg.n_max);
    sweep->add_option("--m-offset-min", sa.cfg.m_offset_min, "m starts at N + offset");
    sweep->add_option("--m-offset-max", sa.cfg.m_offset_max);
    sweep->add_option("--a-extra", sa.cfg.a_extra, "a runs up to |m| + N + extra");
    sweep->add_option("--lambda-margin", sa.cfg.lambda_margin);
    sweep->add_option("--extra-lambda", sa.extra, "non-grid lambda values, or 'none'");
    sweep->add_flag("--no-negative", sa.no_negative, "skip m < -N");
    sweep->add_option("--operator-max-n", sa.cfg.operator_max_n);
    sweep->add_option("--jobs", sa.cfg.jobs)->check(CLI::PositiveNumber);
    sweep->add_option("--out", sa.out, "certificate file (JSON lines)");

    VerifyArgs va;
    auto* verify = app.add_subcommand("verify", "run the identity suites");
    verify->add_option("--suite", va.suite)->check(CLI::IsMember({"gegenbauer", "hypergeom", "system", "operator", "all"}));
    verify->add_option("--max-ell", va.max_ell)->check(CLI::NonNegativeNumber);
    verify->add_flag("--quick", va.quick);
    verify->add_option("--format", va.format)->check(CLI::IsMember({"json", "text"}));

    std::vector<std::string> rev(args.rbegin(), args.rend());
    try {
        app.parse(rev);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n";
        return kInvalid;
    }

    try {
        if (*classify) return cmd_classify(cls_args, format, out_path, out);
        if (*solve) return cmd_solve(sol_args, format, out_path, out);
        if (*op) return cmd_operator(op_args, form, format, out_path, out);
        if (*sweep) return cmd_sweep(sa, out, err);
        if (*verify) return cmd_verify(va, out);
    } catch (const EmptySolutionSpace& e) {
        err << e.what() << "\n";
        return kEmpty;
    } catch (const UnsupportedRegime& e) {
        err << e.what() << "\n";
        return kInvalid;
    } catch (const ParseError& e) {
        err << e.what() << "\n";
        return kInvalid;
    } catch (const DomainError& e) {
        err << e.what() << "\n";
        return kInvalid;
    } catch (const PoleError& e) {
        err << e.what() << "\n";
        return kInvalid;
    } catch (const std::exception& e) {
        err << e.what() << "\n";
        return kCheckFailed;
    }
    return kInvalid;
}

int run(int argc, char** argv, std::ostream& out, std::ostream& err) {
    std::vector<std::string> args;
    for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
    return run(args, out, err);
}

}  // namespace dsbo::app
