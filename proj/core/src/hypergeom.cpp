#include "dsbo/hypergeom.hpp"

#include "dsbo/errors.hpp"

namespace dsbo {

std::optional<long> termination_index(const HyperSpec& spec) {
    std::optional<long> n;
    for (const auto& a : spec.upper) {
        if (!a.is_integer() || a.sign() > 0) continue;
        long v = -a.to_long();
        if (!n || v < *n) n = v;
    }
    return n;
}

Rational hyper(const HyperSpec& spec) {
    auto n_star = termination_index(spec);
    if (!n_star) {
        if (!spec.arg.is_zero()) throw DomainError("hypergeometric series does not terminate");
        n_star = 0;
    }
    Rational sum(0);
    Rational term(1);
    for (long n = 0;; ++n) {
        sum += term;
        if (n == *n_star) break;
        // term_{n+1} = term_n * prod(a+n) / prod(b+n) * z / (n+1)
        for (const auto& a : spec.upper) term *= a + Rational(n);
        for (const auto& b : spec.lower) {
            Rational d = b + Rational(n);
            if (d.is_zero()) throw DomainError("hypergeometric lower parameter pole before termination");
            term /= d;
        }
        term *= spec.arg;
        term /= Rational(n + 1);
    }
    return sum;
}

}  // namespace dsbo
