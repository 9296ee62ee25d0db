#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "rveaca/clustering.hpp"
#include "rveaca/core.hpp"
#include "rveaca/problems.hpp"
#include "rveaca/rng.hpp"
#include "rveaca/rvea.hpp"
#include "rveaca/variation.hpp"

namespace rveaca {

/// Bounded store of mutually nondominated solutions.
struct Archive {
    Population members;
    std::size_t capacity = 0;
};

/// (f - z) / sum(f - z) per row; rows with a sum of at most 1e-12 become (1/M, ..., 1/M).
std::vector<Vec> map_to_hyperplane(std::span<const Vec> objectives, const IdealPoint& z_min);

/// Nondominated members of P and the archive, truncated to 2N by repeatedly dropping
/// the member with the smallest additive-epsilon contribution.
Archive update_archive(const Population& pop, const Archive& archive, std::size_t n,
                       const IdealPoint& z_min);

/// Component id of the smallest-angle node for each solution. Requires a nonempty network.
std::vector<std::size_t> predict_labels(const Population& pop, const TopoNetwork& net,
                                        const IdealPoint& z_min);

/// Exactly |P| offspring (unevaluated). Falls back to random mating when `net` is empty.
Population cluster_based_reproduction(const Population& pop, const TopoNetwork& net,
                                      const IdealPoint& z_min, const Bounds& bounds,
                                      const VariationParams& params, Rng& rng);

struct RveaCaParams {
    std::size_t population = 100;
    std::size_t generations = 100;
    std::size_t lambda = 100;
    double initial_threshold = 0.1;
    double apd_alpha = 2.0;
    VariationParams variation{};
};

struct AlgoState {
    std::size_t t = 0;
    double threshold = 0.1;  ///< V
    TopoNetwork network;
    Population population;
    Archive archive;
    IdealPoint z_min;
    ReferenceVectorSet refs;
    bool frozen = false;
    std::size_t last_training_passes = 0;
    std::size_t training_instances = 0;
};

class RveaCa {
public:
    RveaCa(const ProblemSpec& problem, const RveaCaParams& params, Rng& rng);

    /// Runs one generation. Throws once t_max generations are done.
    void step();
    bool done() const { return state_.t >= params_.generations; }
    const AlgoState& state() const { return state_; }

    /// Last generation whose population trains the network.
    std::size_t freeze_generation() const { return params_.generations * 9 / 10; }

private:
    ProblemSpec problem_;
    RveaCaParams params_;
    Rng& rng_;
    AlgoState state_;
};

/// Full run; `final_state`, when given, receives the state after the last generation.
Population run_rvea_ca(const ProblemSpec& problem, const RveaCaParams& params, Rng& rng,
                       const GenerationHook& hook = {}, AlgoState* final_state = nullptr);

}  // namespace rveaca
