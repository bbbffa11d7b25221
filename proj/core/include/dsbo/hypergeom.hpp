#pragma once

#include "dsbo/rational.hpp"

#include <optional>
#include <vector>

namespace dsbo {

struct HyperSpec {
    std::vector<Rational> upper;
    std::vector<Rational> lower;
    Rational arg;
};

// Index at which the series terminates: min(-a) over non-positive integer upper
// parameters; absent if none.
std::optional<long> termination_index(const HyperSpec& spec);

// Terminating pFq. DomainError on a lower-parameter pole before termination
// or on a non-terminating series with nonzero argument.
Rational hyper(const HyperSpec& spec);

}  // namespace dsbo
