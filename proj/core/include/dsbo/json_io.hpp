#pragma once

#include "dsbo/closedform.hpp"
#include "dsbo/fsystem.hpp"
#include "dsbo/operator.hpp"
#include "dsbo/poly.hpp"
#include "dsbo/rational.hpp"

#include <nlohmann/json.hpp>

namespace dsbo {

using json = nlohmann::ordered_json;

void to_json(json& j, const Rational& r);
void from_json(const json& j, Rational& r);
void to_json(json& j, const GaussianRational& z);
void from_json(const json& j, GaussianRational& z);
void to_json(json& j, const Poly& p);
void from_json(const json& j, Poly& p);
void to_json(json& j, const ParamPoly& p);
void to_json(json& j, const MultiPoly& p);
void from_json(const json& j, MultiPoly& p);
void to_json(json& j, const VectorSymbol& v);
void to_json(json& j, const SolutionVector& s);
void to_json(json& j, const Classification& c);
void to_json(json& j, const DiffOperator& D);
void from_json(const json& j, DiffOperator& D);
void to_json(json& j, const ExactMatrix& M);

json params_json(const SystemParams& p);

}  // namespace dsbo
