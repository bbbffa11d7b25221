#pragma once

#include "dsbo/closedform.hpp"
#include "dsbo/fsystem.hpp"
#include "dsbo/json_io.hpp"
#include "dsbo/rational.hpp"

#include <optional>
#include <string>
#include <vector>

namespace dsbo {

struct SweepConfig {
    int n_min = 0;
    int n_max = 3;
    // m ranges over N + m_offset_min .. N + m_offset_max.
    int m_offset_min = 1;
    int m_offset_max = 4;
    bool include_negative_m = true;
    // a ranges over |m| - N .. |m| + N + a_extra.
    int a_extra = 4;
    // Integer lambda in [1 - N - a - lambda_margin, N + lambda_margin - a].
    int lambda_margin = 3;
    std::vector<Rational> extra_lambdas = {Rational(1, 2), Rational(-7, 3)};
    // Operator cross-checks only for N <= operator_max_n.
    int operator_max_n = 2;
    unsigned jobs = 1;
};

struct SweepPoint {
    int N = 0;
    int m = 0;
    long a = 0;
    Rational lambda;
};

struct Certificate {
    SweepPoint point;
    Classification classification;
    long xi_dimension = -1;
    long hom_dimension = -1;
    // closed_solution = closed_scalar * nullspace generator.
    std::optional<GaussianRational> closed_scalar;
    // canonical operator = operator_scalar * paper operator.
    std::optional<GaussianRational> operator_scalar;
    bool dimension_ok = false;
    std::optional<bool> closed_annihilated;
    std::optional<bool> closed_proportional;
    std::optional<bool> duality_ok;
    std::optional<bool> operator_proportional;
    std::optional<bool> operator_order_ok;
    std::string error;
    bool pass = false;
};

struct SweepSummary {
    long checked = 0;
    long dim0 = 0;
    long dim1 = 0;
    long failures = 0;
};

struct SweepResult {
    std::vector<Certificate> certificates;
    SweepSummary summary;
    std::vector<std::string> skipped;
};

// Ordered by (N, m, a, lambda) ascending; points with |m| <= N are
// reported in `skipped` instead.
std::vector<SweepPoint> enumerate_points(const SweepConfig& cfg, std::vector<std::string>* skipped = nullptr);

Certificate certify(const SweepPoint& pt, const SweepConfig& cfg);

SweepResult run_sweep(const SweepConfig& cfg);

// g2 = c * g1, exact.
std::optional<GaussianRational> solution_scalar(const SolutionVector& g1, const SolutionVector& g2);

bool annihilated_by_all(const SystemParams& p, const SolutionVector& f);

json certificate_json(const Certificate& c);
json summary_json(const SweepSummary& s);

}  // namespace dsbo
