#pragma once

#include "dsbo/rational.hpp"
#include "dsbo/sweep.hpp"

#include <string>
#include <utility>
#include <vector>

namespace dsbo {

struct CheckResult {
    CheckResult() = default;
    explicit CheckResult(std::string n) : name(std::move(n)) {}

    std::string name;
    long passed = 0;
    long failed = 0;
    long skipped = 0;
    // First few failing instances.
    std::vector<std::string> samples;

    void record(bool ok, const std::string& what);
};

struct SuiteReport {
    std::string suite;
    std::vector<CheckResult> checks;
    bool ok() const;
};

// Integers in [-8, 4], five half-integers and five thirds.
std::vector<Rational> default_mu_sample();

struct GegenbauerSuiteConfig {
    int max_ell = 12;
    std::vector<Rational> mus = default_mu_sample();
    int ttr_max_d = 4;
    int s_max_power = 12;
    int s_max_d = 3;
    int koss_max_b = 6;
    int vanishing_mu_min = -10;
    int vanishing_mu_max = 3;
};

struct HypergeomSuiteConfig {
    int max_n = 8;
    int aar_max_n = 6;
    int aar_max_p = 4;
    std::vector<Rational> values = {Rational(1, 3), Rational(5, 2), Rational(-7, 4),
                                    Rational(2, 3), Rational(9, 2), Rational(-5, 3)};
};

struct SystemSuiteConfig {
    // P = Q for N <= pq_max_n, N < m <= N + pq_m_offset, a in m+2N+2 .. m+2N+2+pq_a_span.
    int pq_max_n = 3;
    int pq_m_offset = 3;
    int pq_a_span = 3;
    SweepConfig sweep = [] {
        SweepConfig c;
        c.n_max = 2;
        c.operator_max_n = -1;
        return c;
    }();
};

struct OperatorSuiteConfig {
    SweepConfig sweep = [] {
        SweepConfig c;
        c.n_max = 2;
        c.m_offset_max = 3;
        c.a_extra = 2;
        return c;
    }();
    // Legacy N = 1 comparison for 2 <= m <= legacy_max_m, m <= a <= legacy_max_a.
    int legacy_max_m = 4;
    int legacy_max_a = 6;
};

SuiteReport gegenbauer_suite(const GegenbauerSuiteConfig& cfg);
SuiteReport hypergeom_suite(const HypergeomSuiteConfig& cfg);
SuiteReport system_suite(const SystemSuiteConfig& cfg);
SuiteReport operator_suite(const OperatorSuiteConfig& cfg);

}  // namespace dsbo
