#pragma once

#include <cstddef>
#include <span>

#include "rveaca/core.hpp"
#include "rveaca/rng.hpp"

namespace rveaca {

struct VariationParams {
    double eta_c = 20.0;  ///< SBX distribution index
    double p_c = 1.0;     ///< crossover probability
    double eta_m = 20.0;  ///< PM distribution index
    double p_m = -1.0;    ///< per-variable mutation probability; negative means 1/D

    double mutation_probability(std::size_t dim) const {
        return p_m < 0.0 ? 1.0 / static_cast<double>(dim) : p_m;
    }
};

/// Simulated binary crossover producing the first of the two canonical children.
/// Each variable is exchanged with probability 0.5 and the whole pair is copied
/// from `p1` with probability 1 - p_c. The result is clamped to `bounds`.
Vec sbx_crossover(std::span<const double> p1, std::span<const double> p2, const Bounds& bounds,
                  const VariationParams& params, Rng& rng);

/// Boundary-aware polynomial mutation; each variable mutates with probability p_m.
Vec polynomial_mutation(std::span<const double> p, const Bounds& bounds,
                        const VariationParams& params, Rng& rng);

/// `n` unevaluated individuals drawn uniformly inside `bounds`.
Population random_init(std::size_t n, const Bounds& bounds, Rng& rng);

}  // namespace rveaca
