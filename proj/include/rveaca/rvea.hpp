#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

#include "rveaca/core.hpp"
#include "rveaca/problems.hpp"
#include "rveaca/rng.hpp"
#include "rveaca/variation.hpp"

namespace rveaca {

/// Smallest neighbour angle assigned to a reference vector.
inline constexpr double kGammaFloor = 1e-6;

/// Unit-length directions together with each one's smallest angle to the others.
class ReferenceVectorSet {
public:
    ReferenceVectorSet() = default;

    /// Normalizes every direction and drops exact duplicates. Directions must be
    /// nonzero and nonnegative.
    explicit ReferenceVectorSet(std::span<const Vec> directions);

    std::size_t size() const { return vectors_.size(); }
    bool empty() const { return vectors_.empty(); }
    const std::vector<Vec>& vectors() const { return vectors_; }
    const Vec& operator[](std::size_t j) const { return vectors_[j]; }
    const Vec& gamma() const { return gamma_; }
    std::size_t dimension() const { return vectors_.empty() ? 0 : vectors_.front().size(); }

private:
    std::vector<Vec> vectors_;
    Vec gamma_;
};

/// Simplex-lattice weights: every vector with components in {0, 1/H, ..., 1} summing to 1.
std::vector<Vec> simplex_lattice(std::size_t objectives, std::size_t divisions);

/// Das-Dennis reference set, normalized for angle computations.
ReferenceVectorSet das_dennis(std::size_t objectives, std::size_t divisions);

/// Roughly `target` lattice weights: the largest single layer that fits, plus an
/// inner half-scale layer when the outer layer has fewer divisions than objectives.
std::vector<Vec> uniform_weights(std::size_t target, std::size_t objectives);

/// Angle in [0, pi] between two nonzero vectors.
double angle(std::span<const double> a, std::span<const double> b);

struct ApdContext {
    std::size_t t = 0;
    std::size_t t_max = 1;
    double alpha = 2.0;
    std::size_t objectives = 2;

    double penalty_scale() const;
};

/// Angle-penalized distance for a translated objective vector of length `distance`.
double apd(double distance, double theta, const ApdContext& ctx, double gamma);

struct Association {
    std::size_t vector = 0;
    double theta = 0.0;
};

/// Smallest-angle reference vector for each translated objective vector; ties go to
/// the lower index and the zero vector maps to vector 0 with theta 0.
std::vector<Association> associate(std::span<const Vec> translated, const ReferenceVectorSet& refs);

/// APD winner of each nonempty niche, in reference-vector order.
std::vector<std::size_t> apd_niche_winners(const Population& pop, const ReferenceVectorSet& refs,
                                           const ApdContext& ctx, const IdealPoint& z_min);

/// APD niche selection followed by angle-novelty truncation or filling so exactly
/// min(N, |P|) members survive.
Population environmental_selection(const Population& pop, const ReferenceVectorSet& refs,
                                   const ApdContext& ctx, const IdealPoint& z_min, std::size_t n);

struct RveaParams {
    std::size_t population = 100;
    std::size_t generations = 100;
    double apd_alpha = 2.0;
    double adaptation_frequency = 0.1;  ///< f_r
    VariationParams variation{};
};

struct GenerationReport {
    std::size_t t = 0;
    const Population* population = nullptr;
    std::size_t archive_size = 0;
    std::size_t nodes = 0;
    std::size_t components = 0;
    double threshold = 0.0;
};

using GenerationHook = std::function<void(const GenerationReport&)>;

/// Canonical RVEA: fixed lattice directions rescaled by the population's objective
/// ranges every f_r * t_max generations, random mating, SBX + PM, APD selection.
Population run_rvea_baseline(const ProblemSpec& problem, const RveaParams& params, Rng& rng,
                             const GenerationHook& hook = {});

/// `n` children from uniformly drawn parent pairs (with replacement), SBX then PM.
Population random_mate_reproduction(const Population& pop, std::size_t n, const Bounds& bounds,
                                    const VariationParams& params, Rng& rng);

/// Evaluates every member in place.
void evaluate_all(const ProblemSpec& problem, Population& pop);

}  // namespace rveaca
