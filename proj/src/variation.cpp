#include "rveaca/variation.hpp"

#include <algorithm>
#include <cmath>

namespace rveaca {

Vec sbx_crossover(std::span<const double> p1, std::span<const double> p2, const Bounds& bounds,
                  const VariationParams& params, Rng& rng) {
    if (p1.size() != p2.size() || p1.size() != bounds.size()) {
        throw ContractError("sbx_crossover: parent/bound dimensions differ");
    }
    const bool crossover = rng.uniform() < params.p_c;
    const double expo = 1.0 / (params.eta_c + 1.0);
    Vec child(p1.size());
    for (std::size_t i = 0; i < p1.size(); ++i) {
        const double mu = rng.uniform();
        double beta = mu <= 0.5 ? std::pow(2.0 * mu, expo) : std::pow(2.0 - 2.0 * mu, -expo);
        if (rng.coin(0.5)) beta = -beta;
        if (rng.coin(0.5) || !crossover) beta = 1.0;
        child[i] = 0.5 * (p1[i] + p2[i]) + 0.5 * beta * (p1[i] - p2[i]);
    }
    bounds.clamp(child);
    return child;
}

Vec polynomial_mutation(std::span<const double> p, const Bounds& bounds,
                        const VariationParams& params, Rng& rng) {
    if (p.size() != bounds.size()) {
        throw ContractError("polynomial_mutation: dimension differs from bounds");
    }
    const double pm = params.mutation_probability(p.size());
    const double eta = params.eta_m;
    const double expo = 1.0 / (eta + 1.0);
    Vec out(p.begin(), p.end());
    bounds.clamp(out);
    for (std::size_t i = 0; i < out.size(); ++i) {
        const bool site = rng.uniform() < pm;
        const double mu = rng.uniform();
        if (!site) continue;
        const double lo = bounds.lower[i];
        const double hi = bounds.upper[i];
        const double span = hi - lo;
        if (span <= 0.0) continue;
        double& v = out[i];
        if (mu <= 0.5) {
            const double d1 = (v - lo) / span;
            const double base = 2.0 * mu + (1.0 - 2.0 * mu) * std::pow(1.0 - d1, eta + 1.0);
            v += span * (std::pow(base, expo) - 1.0);
        } else {
            const double d2 = (hi - v) / span;
            const double base = 2.0 * (1.0 - mu) + 2.0 * (mu - 0.5) * std::pow(1.0 - d2, eta + 1.0);
            v += span * (1.0 - std::pow(base, expo));
        }
        v = std::clamp(v, lo, hi);
    }
    return out;
}

Population random_init(std::size_t n, const Bounds& bounds, Rng& rng) {
    if (n == 0) throw ContractError("random_init: n must be at least 1");
    Population pop(n);
    for (auto& ind : pop) {
        ind.x.resize(bounds.size());
        for (std::size_t i = 0; i < bounds.size(); ++i) {
            ind.x[i] = bounds.lower[i] == bounds.upper[i]
                           ? bounds.lower[i]
                           : rng.uniform(bounds.lower[i], bounds.upper[i]);
        }
    }
    return pop;
}

}  // namespace rveaca
