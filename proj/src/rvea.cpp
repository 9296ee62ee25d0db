#include "rveaca/rvea.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <set>

namespace rveaca {

namespace {

double binomial(std::size_t n, std::size_t k) {
    double r = 1.0;
    for (std::size_t i = 1; i <= k; ++i) r = r * static_cast<double>(n - k + i) / static_cast<double>(i);
    return std::round(r);
}

double lattice_count(std::size_t m, std::size_t h) { return binomial(h + m - 1, m - 1); }

void compositions(std::size_t parts, std::size_t remaining, std::vector<std::size_t>& cur,
                  std::vector<std::vector<std::size_t>>& out) {
    if (parts == 1) {
        cur.push_back(remaining);
        out.push_back(cur);
        cur.pop_back();
        return;
    }
    for (std::size_t v = 0; v <= remaining; ++v) {
        cur.push_back(v);
        compositions(parts - 1, remaining - v, cur, out);
        cur.pop_back();
    }
}

double dot(std::span<const double> a, std::span<const double> b) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

double clamped_acos(double c) { return std::acos(std::clamp(c, -1.0, 1.0)); }

Vec unit_or_zero(std::span<const double> v) {
    const double n = norm(v);
    Vec out(v.begin(), v.end());
    if (n > 0.0) {
        for (auto& x : out) x /= n;
    }
    return out;
}

Vec translated(const Individual& ind, const IdealPoint& z) {
    Vec out(ind.f.size());
    for (std::size_t m = 0; m < out.size(); ++m) out[m] = ind.f[m] - z[m];
    return out;
}

// Angle between unit vectors, treating any zero vector as angle 0.
double unit_angle(const Vec& a, const Vec& b) {
    if (norm(a) == 0.0 || norm(b) == 0.0) return 0.0;
    return clamped_acos(dot(a, b));
}

}  // namespace

ReferenceVectorSet::ReferenceVectorSet(std::span<const Vec> directions) {
    std::set<Vec> seen;
    for (const auto& d : directions) {
        const double n = norm(d);
        if (!(n > 0.0)) throw ContractError("ReferenceVectorSet: zero direction");
        if (std::any_of(d.begin(), d.end(), [](double v) { return v < 0.0; })) {
            throw ContractError("ReferenceVectorSet: negative component");
        }
        Vec u = d;
        for (auto& v : u) v /= n;
        if (seen.insert(u).second) vectors_.push_back(std::move(u));
    }
    gamma_.assign(vectors_.size(), std::numbers::pi / 2.0);
    if (vectors_.size() < 2) return;
    for (std::size_t j = 0; j < vectors_.size(); ++j) {
        double best = std::numeric_limits<double>::infinity();
        for (std::size_t i = 0; i < vectors_.size(); ++i) {
            if (i != j) best = std::min(best, clamped_acos(dot(vectors_[i], vectors_[j])));
        }
        gamma_[j] = std::max(best, kGammaFloor);
    }
}

std::vector<Vec> simplex_lattice(std::size_t objectives, std::size_t divisions) {
    if (objectives < 2 || divisions < 1) throw ContractError("simplex_lattice: need M >= 2 and H >= 1");
    std::vector<std::vector<std::size_t>> grid;
    std::vector<std::size_t> cur;
    compositions(objectives, divisions, cur, grid);
    std::vector<Vec> out;
    out.reserve(grid.size());
    for (const auto& g : grid) {
        Vec w(objectives);
        for (std::size_t m = 0; m < objectives; ++m) {
            w[m] = static_cast<double>(g[m]) / static_cast<double>(divisions);
        }
        out.push_back(std::move(w));
    }
    return out;
}

ReferenceVectorSet das_dennis(std::size_t objectives, std::size_t divisions) {
    return ReferenceVectorSet(simplex_lattice(objectives, divisions));
}

std::vector<Vec> uniform_weights(std::size_t target, std::size_t objectives) {
    const double n = static_cast<double>(target);
    std::size_t h1 = 1;
    while (lattice_count(objectives, h1 + 1) <= n) ++h1;
    std::vector<Vec> out = simplex_lattice(objectives, h1);
    if (h1 < objectives) {
        std::size_t h2 = 0;
        while (lattice_count(objectives, h1) + lattice_count(objectives, h2 + 1) <= n) ++h2;
        if (h2 > 0) {
            const double shift = 1.0 / (2.0 * static_cast<double>(objectives));
            for (auto w : simplex_lattice(objectives, h2)) {
                for (auto& v : w) v = v / 2.0 + shift;
                out.push_back(std::move(w));
            }
        }
    }
    return out;
}

double angle(std::span<const double> a, std::span<const double> b) {
    if (a.size() != b.size()) throw ContractError("angle: dimension mismatch");
    const double na = norm(a);
    const double nb = norm(b);
    if (!(na > 0.0) || !(nb > 0.0)) throw ContractError("angle: zero vector");
    return clamped_acos(dot(a, b) / (na * nb));
}

double ApdContext::penalty_scale() const {
    const double ratio = static_cast<double>(t) / static_cast<double>(t_max);
    return static_cast<double>(objectives) * std::pow(ratio, alpha);
}

double apd(double distance, double theta, const ApdContext& ctx, double gamma) {
    if (!(gamma > 0.0)) throw ContractError("apd: gamma must be positive");
    return (1.0 + ctx.penalty_scale() * theta / gamma) * distance;
}

std::vector<Association> associate(std::span<const Vec> translated_objs, const ReferenceVectorSet& refs) {
    if (refs.empty()) throw ContractError("associate: empty reference set");
    std::vector<Association> out(translated_objs.size());
    for (std::size_t i = 0; i < translated_objs.size(); ++i) {
        const auto& f = translated_objs[i];
        const double n = norm(f);
        if (!(n > 0.0)) continue;
        double best_cos = -std::numeric_limits<double>::infinity();
        for (std::size_t j = 0; j < refs.size(); ++j) {
            const double c = dot(f, refs[j]) / n;
            if (c > best_cos) {
                best_cos = c;
                out[i].vector = j;
            }
        }
        out[i].theta = clamped_acos(best_cos);
    }
    return out;
}

std::vector<std::size_t> apd_niche_winners(const Population& pop, const ReferenceVectorSet& refs,
                                           const ApdContext& ctx, const IdealPoint& z_min) {
    std::vector<Vec> fs;
    fs.reserve(pop.size());
    for (const auto& ind : pop) fs.push_back(translated(ind, z_min));
    const auto assoc = associate(fs, refs);

    constexpr auto none = std::numeric_limits<std::size_t>::max();
    std::vector<std::size_t> best(refs.size(), none);
    std::vector<double> best_apd(refs.size(), std::numeric_limits<double>::infinity());
    for (std::size_t i = 0; i < pop.size(); ++i) {
        const std::size_t j = assoc[i].vector;
        const double d = apd(norm(fs[i]), assoc[i].theta, ctx, refs.gamma()[j]);
        if (d < best_apd[j]) {
            best_apd[j] = d;
            best[j] = i;
        }
    }
    std::vector<std::size_t> out;
    for (auto i : best) {
        if (i != none) out.push_back(i);
    }
    return out;
}

Population environmental_selection(const Population& pop, const ReferenceVectorSet& refs,
                                   const ApdContext& ctx, const IdealPoint& z_min, std::size_t n) {
    std::vector<std::size_t> kept = apd_niche_winners(pop, refs, ctx, z_min);
    const std::size_t target = std::min(n, pop.size());

    std::vector<Vec> dirs;
    std::vector<double> lengths;
    dirs.reserve(pop.size());
    for (const auto& ind : pop) {
        const Vec f = translated(ind, z_min);
        lengths.push_back(norm(f));
        dirs.push_back(unit_or_zero(f));
    }

    if (kept.size() > target) {
        // Drop the most redundant direction until the target size is met.
        const std::size_t k = kept.size();
        std::vector<std::vector<double>> ang(k, std::vector<double>(k, 0.0));
        for (std::size_t a = 0; a < k; ++a) {
            for (std::size_t b = a + 1; b < k; ++b) {
                ang[a][b] = ang[b][a] = unit_angle(dirs[kept[a]], dirs[kept[b]]);
            }
        }
        std::vector<char> alive(k, 1);
        std::vector<double> nearest(k, std::numeric_limits<double>::infinity());
        std::vector<std::size_t> nearest_id(k, 0);
        auto refresh = [&](std::size_t a) {
            nearest[a] = std::numeric_limits<double>::infinity();
            for (std::size_t b = 0; b < k; ++b) {
                if (b != a && alive[b] && ang[a][b] < nearest[a]) {
                    nearest[a] = ang[a][b];
                    nearest_id[a] = b;
                }
            }
        };
        for (std::size_t a = 0; a < k; ++a) refresh(a);
        for (std::size_t remaining = k; remaining > target; --remaining) {
            std::size_t victim = k;
            for (std::size_t a = 0; a < k; ++a) {
                if (!alive[a]) continue;
                if (victim == k || nearest[a] < nearest[victim] ||
                    (nearest[a] == nearest[victim] && lengths[kept[a]] >= lengths[kept[victim]])) {
                    victim = a;
                }
            }
            alive[victim] = 0;
            for (std::size_t a = 0; a < k; ++a) {
                if (alive[a] && nearest_id[a] == victim) refresh(a);
            }
        }
        std::vector<std::size_t> survivors;
        for (std::size_t a = 0; a < k; ++a) {
            if (alive[a]) survivors.push_back(kept[a]);
        }
        kept = std::move(survivors);
    } else if (kept.size() < target) {
        // Add the candidate farthest in angle from everything already kept.
        std::vector<char> in(pop.size(), 0);
        for (auto i : kept) in[i] = 1;
        std::vector<double> min_angle(pop.size(), std::numeric_limits<double>::infinity());
        for (std::size_t u = 0; u < pop.size(); ++u) {
            if (in[u]) continue;
            for (auto i : kept) min_angle[u] = std::min(min_angle[u], unit_angle(dirs[u], dirs[i]));
        }
        while (kept.size() < target) {
            std::size_t pick = pop.size();
            for (std::size_t u = 0; u < pop.size(); ++u) {
                if (!in[u] && (pick == pop.size() || min_angle[u] > min_angle[pick])) pick = u;
            }
            in[pick] = 1;
            kept.push_back(pick);
            for (std::size_t u = 0; u < pop.size(); ++u) {
                if (!in[u]) min_angle[u] = std::min(min_angle[u], unit_angle(dirs[u], dirs[pick]));
            }
        }
    }

    Population out;
    out.reserve(kept.size());
    for (auto i : kept) out.push_back(pop[i]);
    return out;
}

void evaluate_all(const ProblemSpec& problem, Population& pop) {
    for (auto& ind : pop) {
        if (!ind.evaluated()) ind.f = evaluate(problem, ind.x);
    }
}

Population random_mate_reproduction(const Population& pop, std::size_t n, const Bounds& bounds,
                                    const VariationParams& params, Rng& rng) {
    if (pop.empty()) throw ContractError("random_mate_reproduction: empty population");
    Population offspring;
    offspring.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        const auto& a = pop[rng.index(pop.size())];
        const auto& b = pop[rng.index(pop.size())];
        Vec child = sbx_crossover(a.x, b.x, bounds, params, rng);
        offspring.push_back(Individual{polynomial_mutation(child, bounds, params, rng), {}});
    }
    return offspring;
}

Population run_rvea_baseline(const ProblemSpec& problem, const RveaParams& params, Rng& rng,
                             const GenerationHook& hook) {
    if (params.population < 2 || params.generations < 1) {
        throw ContractError("run_rvea_baseline: need N >= 2 and t_max >= 1");
    }
    const std::size_t m_count = problem.objectives;
    const std::vector<Vec> lattice = uniform_weights(params.population, m_count);
    ReferenceVectorSet refs(lattice);

    Population pop = random_init(params.population, problem.bounds, rng);
    evaluate_all(problem, pop);

    const auto adapt_every = std::max<std::size_t>(
        1, static_cast<std::size_t>(std::ceil(params.adaptation_frequency * double(params.generations))));

    for (std::size_t t = 1; t <= params.generations; ++t) {
        Population offspring =
            random_mate_reproduction(pop, params.population, problem.bounds, params.variation, rng);
        evaluate_all(problem, offspring);

        Population merged = merge_unique(pop, offspring);
        const IdealPoint z = IdealPoint::of(merged);
        const ApdContext ctx{t, params.generations, params.apd_alpha, m_count};
        Population next;
        for (auto i : apd_niche_winners(merged, refs, ctx, z)) next.push_back(merged[i]);
        pop = std::move(next);

        if (t % adapt_every == 0) {
            Vec lo(m_count, std::numeric_limits<double>::infinity());
            Vec hi(m_count, -std::numeric_limits<double>::infinity());
            for (const auto& ind : pop) {
                for (std::size_t m = 0; m < m_count; ++m) {
                    lo[m] = std::min(lo[m], ind.f[m]);
                    hi[m] = std::max(hi[m], ind.f[m]);
                }
            }
            std::vector<Vec> scaled = lattice;
            for (auto& w : scaled) {
                for (std::size_t m = 0; m < m_count; ++m) w[m] *= std::max(hi[m] - lo[m], 1e-12);
            }
            refs = ReferenceVectorSet(scaled);
        }

        if (hook) {
            GenerationReport report;
            report.t = t;
            report.population = &pop;
            report.nodes = refs.size();
            hook(report);
        }
    }
    return pop;
}

}  // namespace rveaca
