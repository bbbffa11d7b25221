#pragma once

#include "dsbo/poly.hpp"
#include "dsbo/rational.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace dsbo {

struct SystemParams {
    Rational lambda;
    Rational nu;
    int N = 0;
    int m = 0;
    // nu - lambda when it is a non-negative integer.
    std::optional<long> a;

    // UnsupportedRegime if |m| <= N; DomainError if N < 0.
    static SystemParams make(Rational lambda, Rational nu, int N, int m);
    int abs_m() const { return m < 0 ? -m : m; }
    SystemParams mirrored() const { return make(lambda, nu, N, -m); }
    long require_a() const;
};

// (g_{m-N}, ..., g_{m+N}); f_j = g_{m-j}.
struct SolutionVector {
    int N = 0;
    int m = 0;
    std::vector<Poly> g;

    static SolutionVector zero(int N, int m);
    int k_min() const { return m - N; }
    int k_max() const { return m + N; }
    const Poly& g_k(int k) const { return g.at(static_cast<size_t>(k - k_min())); }
    Poly& g_k(int k) { return g.at(static_cast<size_t>(k - k_min())); }
    // Zero outside |j| <= N.
    Poly f(int j) const;
    bool is_zero() const;
    friend bool operator==(const SolutionVector&, const SolutionVector&) = default;
};

struct ExactMatrix {
    size_t rows = 0;
    size_t cols = 0;
    std::vector<Rational> data;

    ExactMatrix() = default;
    ExactMatrix(size_t r, size_t c) : rows(r), cols(c), data(r * c) {}
    Rational& at(size_t i, size_t j) { return data[i * cols + j]; }
    const Rational& at(size_t i, size_t j) const { return data[i * cols + j]; }
};

enum class LKind { A, B };
enum class LSign { Plus, Minus };

struct LEquation {
    LKind kind;
    LSign sign;
    int j;
};

// Row-block order: A+_0..A+_N, A-_0..A-_N, B+_1..B+_N, B-_1..B-_N.
std::vector<LEquation> l_equations(int N);

std::vector<int> k_support(int N, int m);
long hom_dimension(const SystemParams& p);

Poly apply_L(LKind kind, LSign sign, int j, const SystemParams& p, const SolutionVector& f);

// Unknowns as (k, degree): k ascending, degree descending within EvenSpace(a-k).
std::vector<std::pair<int, int>> unknown_layout(const SystemParams& p);

// One row per (equation, degree) with degree ascending inside each equation block.
ExactMatrix assemble_system(const SystemParams& p);

// Kernel basis by Bareiss elimination; first nonzero entry of each vector is 1.
std::vector<std::vector<Rational>> nullspace(const ExactMatrix& M);

SolutionVector decode_solution(const SystemParams& p, const std::vector<Rational>& coeffs);

struct XiResult {
    long dimension = 0;
    std::optional<SolutionVector> generator;
    std::vector<Rational> coefficients;
};

XiResult solve_xi(const SystemParams& p);

}  // namespace dsbo
