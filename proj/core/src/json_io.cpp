#include "dsbo/json_io.hpp"

#include "dsbo/errors.hpp"

namespace dsbo {

void to_json(json& j, const Rational& r) { j = r.str(); }

void from_json(const json& j, Rational& r) {
    if (j.is_string()) r = Rational::parse(j.get<std::string>());
    else if (j.is_number_integer()) r = Rational(j.get<long>());
    else throw ParseError("rational must be a string");
}

void to_json(json& j, const GaussianRational& z) { j = json{{"re", z.re()}, {"im", z.im()}}; }

void from_json(const json& j, GaussianRational& z) {
    z = GaussianRational(j.at("re").get<Rational>(), j.at("im").get<Rational>());
}

void to_json(json& j, const Poly& p) {
    j = json::array();
    for (const auto& c : p.coeffs()) j.push_back(c);
}

void from_json(const json& j, Poly& p) {
    std::vector<GaussianRational> v;
    for (const auto& c : j) v.push_back(c.get<GaussianRational>());
    p = Poly(std::move(v));
}

void to_json(json& j, const ParamPoly& p) {
    j = json::array();
    for (const auto& c : p.coeffs()) j.push_back(c);
}

void to_json(json& j, const MultiPoly& p) {
    j = json::array();
    for (const auto& [e, c] : p.terms()) j.push_back(json{{"e1", e[0]}, {"e2", e[1]}, {"e3", e[2]}, {"coeff", c}});
}

void from_json(const json& j, MultiPoly& p) {
    p = MultiPoly();
    for (const auto& t : j)
        p.add_term({t.at("e1").get<int>(), t.at("e2").get<int>(), t.at("e3").get<int>()},
                   t.at("coeff").get<GaussianRational>());
}

void to_json(json& j, const VectorSymbol& v) {
    j = json::array();
    for (size_t d = 0; d < v.components.size(); ++d)
        j.push_back(json{{"d", d}, {"terms", v.components[d]}});
}

void to_json(json& j, const SolutionVector& s) {
    j = json::array();
    for (int k = s.k_min(); k <= s.k_max(); ++k) j.push_back(json{{"k", k}, {"poly", s.g_k(k)}});
}

void to_json(json& j, const Classification& c) {
    j = json{{"dimension", c.dimension},
             {"lambda_admissible", c.lambda_admissible},
             {"nu_admissible", c.nu_admissible},
             {"sporadic", c.sporadic},
             {"all_sbos_differential", c.all_sbos_differential}};
}

void to_json(json& j, const DiffOperator& D) {
    j = json::array();
    for (const auto& [k, c] : D.terms())
        j.push_back(json{{"d", k[0]}, {"p", k[1]}, {"q", k[2]}, {"r", k[3]}, {"coeff", c}});
}

void from_json(const json& j, DiffOperator& D) {
    D = DiffOperator();
    for (const auto& t : j)
        D.add_term({t.at("d").get<int>(), t.at("p").get<int>(), t.at("q").get<int>(), t.at("r").get<int>()},
                   t.at("coeff").get<GaussianRational>());
}

void to_json(json& j, const ExactMatrix& M) {
    json rows = json::array();
    for (size_t i = 0; i < M.rows; ++i) {
        json row = json::array();
        for (size_t c = 0; c < M.cols; ++c) row.push_back(M.at(i, c));
        rows.push_back(std::move(row));
    }
    j = json{{"rows", M.rows}, {"cols", M.cols}, {"entries", std::move(rows)}};
}

json params_json(const SystemParams& p) {
    json j{{"lambda", p.lambda}, {"nu", p.nu}, {"N", p.N}, {"m", p.m}};
    j["a"] = p.a ? json(*p.a) : json(nullptr);
    return j;
}

}  // namespace dsbo
