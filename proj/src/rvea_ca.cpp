#include "rveaca/rvea_ca.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>

namespace rveaca {

std::vector<Vec> map_to_hyperplane(std::span<const Vec> objectives, const IdealPoint& z_min) {
    std::vector<Vec> out;
    out.reserve(objectives.size());
    for (const auto& f : objectives) {
        Vec g(f.size());
        double sum = 0.0;
        for (std::size_t m = 0; m < f.size(); ++m) {
            g[m] = f[m] - z_min[m];
            sum += g[m];
        }
        if (sum <= 1e-12) {
            std::fill(g.begin(), g.end(), 1.0 / static_cast<double>(g.size()));
        } else {
            for (auto& v : g) v /= sum;
        }
        out.push_back(std::move(g));
    }
    return out;
}

Archive update_archive(const Population& pop, const Archive& archive, std::size_t n,
                       const IdealPoint& z_min) {
    Archive out;
    out.capacity = 2 * n;
    Population cands = nondominated_filter(merge_unique(pop, archive.members));
    const std::size_t k = cands.size();
    if (k <= out.capacity) {
        out.members = std::move(cands);
        return out;
    }

    const std::size_t m_count = cands.front().f.size();
    Vec lo(m_count, std::numeric_limits<double>::infinity());
    Vec hi(m_count, -std::numeric_limits<double>::infinity());
    for (const auto& c : cands) {
        for (std::size_t m = 0; m < m_count; ++m) {
            lo[m] = std::min(lo[m], c.f[m] - z_min[m]);
            hi[m] = std::max(hi[m], c.f[m] - z_min[m]);
        }
    }
    std::vector<Vec> g(k, Vec(m_count));
    for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t m = 0; m < m_count; ++m) {
            g[i][m] = (cands[i].f[m] - z_min[m] - lo[m]) / std::max(hi[m] - lo[m], 1e-12);
        }
    }

    // shift[x][y]: smallest additive shift letting y weakly dominate x.
    std::vector<Vec> shift(k, Vec(k, 0.0));
    for (std::size_t x = 0; x < k; ++x) {
        for (std::size_t y = 0; y < k; ++y) {
            if (x == y) continue;
            double s = -std::numeric_limits<double>::infinity();
            for (std::size_t m = 0; m < m_count; ++m) s = std::max(s, g[y][m] - g[x][m]);
            shift[x][y] = s;
        }
    }
    std::vector<char> alive(k, 1);
    Vec contribution(k);
    std::vector<std::size_t> cover(k, 0);
    auto refresh = [&](std::size_t x) {
        contribution[x] = std::numeric_limits<double>::infinity();
        for (std::size_t y = 0; y < k; ++y) {
            if (y != x && alive[y] && shift[x][y] < contribution[x]) {
                contribution[x] = shift[x][y];
                cover[x] = y;
            }
        }
    };
    for (std::size_t x = 0; x < k; ++x) refresh(x);

    for (std::size_t remaining = k; remaining > out.capacity; --remaining) {
        std::size_t victim = k;
        for (std::size_t x = 0; x < k; ++x) {
            if (alive[x] && (victim == k || contribution[x] < contribution[victim])) victim = x;
        }
        alive[victim] = 0;
        for (std::size_t x = 0; x < k; ++x) {
            if (alive[x] && cover[x] == victim) refresh(x);
        }
    }
    for (std::size_t x = 0; x < k; ++x) {
        if (alive[x]) out.members.push_back(std::move(cands[x]));
    }
    return out;
}

std::vector<std::size_t> predict_labels(const Population& pop, const TopoNetwork& net,
                                        const IdealPoint& z_min) {
    if (net.empty()) throw ContractError("predict_labels: empty network");
    const ClusterLabeling comps = connected_components(net);
    std::vector<Vec> units;
    units.reserve(net.size());
    for (const auto& node : net.nodes()) {
        Vec u = node.y;
        const double len = norm(u);
        if (len > 0.0) {
            for (auto& v : u) v /= len;
        }
        units.push_back(std::move(u));
    }

    std::vector<std::size_t> labels;
    labels.reserve(pop.size());
    for (const auto& ind : pop) {
        Vec g(ind.f.size());
        for (std::size_t m = 0; m < g.size(); ++m) g[m] = ind.f[m] - z_min[m];
        const double len = norm(g);
        std::size_t best = 0;
        if (len > 0.0) {
            double best_cos = -std::numeric_limits<double>::infinity();
            for (std::size_t k = 0; k < units.size(); ++k) {
                double c = 0.0;
                for (std::size_t m = 0; m < g.size(); ++m) c += g[m] * units[k][m];
                if (c / len > best_cos) {
                    best_cos = c / len;
                    best = k;
                }
            }
        }
        labels.push_back(comps.label[best]);
    }
    return labels;
}

Population cluster_based_reproduction(const Population& pop, const TopoNetwork& net,
                                      const IdealPoint& z_min, const Bounds& bounds,
                                      const VariationParams& params, Rng& rng) {
    if (net.empty()) return random_mate_reproduction(pop, pop.size(), bounds, params, rng);

    const auto labels = predict_labels(pop, net, z_min);
    std::map<std::size_t, std::vector<std::size_t>> members;
    for (std::size_t i = 0; i < pop.size(); ++i) members[labels[i]].push_back(i);
    const bool several_clusters = members.size() > 1;

    Population offspring;
    offspring.reserve(pop.size());
    for (std::size_t draw = 0; draw < pop.size(); ++draw) {
        const std::size_t r = rng.index(pop.size());
        const auto& own = members[labels[r]];
        if (own.size() < 2) {
            offspring.push_back(Individual{polynomial_mutation(pop[r].x, bounds, params, rng), {}});
            continue;
        }

        std::size_t q = r;
        if (rng.uniform() < 0.5 && several_clusters) {
            double best = std::numeric_limits<double>::infinity();
            for (std::size_t j = 0; j < pop.size(); ++j) {
                if (labels[j] == labels[r]) continue;
                double d = 0.0;
                for (std::size_t m = 0; m < pop[j].f.size(); ++m) {
                    d += (pop[j].f[m] - pop[r].f[m]) * (pop[j].f[m] - pop[r].f[m]);
                }
                if (d < best) {
                    best = d;
                    q = j;
                }
            }
        } else {
            const std::size_t pick = rng.index(own.size() - 1);
            std::size_t seen = 0;
            for (auto j : own) {
                if (j == r) continue;
                if (seen++ == pick) {
                    q = j;
                    break;
                }
            }
        }
        Vec child = sbx_crossover(pop[r].x, pop[q].x, bounds, params, rng);
        offspring.push_back(Individual{polynomial_mutation(child, bounds, params, rng), {}});
    }
    return offspring;
}

RveaCa::RveaCa(const ProblemSpec& problem, const RveaCaParams& params, Rng& rng)
    : problem_(problem), params_(params), rng_(rng) {
    if (params.population < 2 || params.generations < 1 || params.lambda < 2) {
        throw ContractError("RveaCa: need N >= 2, t_max >= 1 and lambda >= 2");
    }
    state_.threshold = params.initial_threshold;
    state_.population = random_init(params.population, problem.bounds, rng_);
    evaluate_all(problem_, state_.population);
    state_.z_min = IdealPoint::of(state_.population);
    state_.archive = update_archive(state_.population, Archive{{}, 2 * params.population},
                                    params.population, state_.z_min);
    state_.refs = ReferenceVectorSet(uniform_weights(params.population, problem.objectives));
}

void RveaCa::step() {
    if (done()) throw ContractError("RveaCa::step: run already finished");
    AlgoState& s = state_;
    s.t += 1;

    Population offspring = cluster_based_reproduction(s.population, s.network, s.z_min, problem_.bounds,
                                                      params_.variation, rng_);
    evaluate_all(problem_, offspring);
    s.z_min = update_ideal(s.z_min, offspring);

    Population merged = merge_unique(s.population, offspring);
    s.archive = update_archive(merged, s.archive, params_.population, s.z_min);
    merged = merge_unique(merged, s.archive.members);

    s.last_training_passes = 0;
    s.training_instances = 0;
    if (s.t <= freeze_generation()) {
        std::vector<Vec> instances = map_to_hyperplane(objectives_of(merged), s.z_min);
        rng_.shuffle(std::span<Vec>(instances));
        s.training_instances = instances.size();
        AdaptiveTraining trained = adaptive_train_ca(instances, params_.lambda, s.threshold, params_.population);
        s.network = std::move(trained.network);
        s.threshold = trained.threshold;
        s.last_training_passes = trained.passes;

        std::vector<Vec> directions = s.network.positions();
        if (s.t == freeze_generation()) {
            const auto mapped = map_to_hyperplane(objectives_of(s.archive.members), s.z_min);
            directions.insert(directions.end(), mapped.begin(), mapped.end());
            s.frozen = true;
        }
        if (!directions.empty()) s.refs = ReferenceVectorSet(directions);
    } else {
        s.frozen = true;
    }

    const ApdContext ctx{s.t, params_.generations, params_.apd_alpha, problem_.objectives};
    s.population = environmental_selection(merged, s.refs, ctx, s.z_min, params_.population);
}

Population run_rvea_ca(const ProblemSpec& problem, const RveaCaParams& params, Rng& rng,
                       const GenerationHook& hook, AlgoState* final_state) {
    RveaCa algo(problem, params, rng);
    while (!algo.done()) {
        algo.step();
        if (hook) {
            const AlgoState& s = algo.state();
            GenerationReport report;
            report.t = s.t;
            report.population = &s.population;
            report.archive_size = s.archive.members.size();
            report.nodes = s.network.size();
            report.components = s.network.empty() ? 0 : connected_components(s.network).count;
            report.threshold = s.threshold;
            hook(report);
        }
    }
    if (final_state) *final_state = algo.state();
    return algo.state().population;
}

}  // namespace rveaca
