#include "rveaca/core.hpp"

#include <algorithm>
#include <cmath>
#include <set>

namespace rveaca {

bool Bounds::contains(std::span<const double> x) const {
    if (x.size() != lower.size()) return false;
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (x[i] < lower[i] || x[i] > upper[i]) return false;
    }
    return true;
}

void Bounds::clamp(Vec& x) const {
    for (std::size_t i = 0; i < x.size(); ++i) {
        x[i] = std::clamp(x[i], lower[i], upper[i]);
    }
}

IdealPoint IdealPoint::of(const Population& pop) {
    if (pop.empty()) throw ContractError("IdealPoint::of: empty population");
    return update_ideal(IdealPoint(pop.front().f), pop);
}

bool dominates(std::span<const double> a, std::span<const double> b) {
    if (a.size() != b.size()) {
        throw ContractError("dominates: objective vectors differ in length");
    }
    bool strictly_better = false;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] > b[i]) return false;
        if (a[i] < b[i]) strictly_better = true;
    }
    return strictly_better;
}

IdealPoint update_ideal(const IdealPoint& z, std::span<const Vec> objectives) {
    Vec out = z.values();
    for (const auto& f : objectives) {
        if (out.empty()) out = f;
        if (f.size() != out.size()) throw ContractError("update_ideal: length mismatch");
        for (std::size_t i = 0; i < f.size(); ++i) out[i] = std::min(out[i], f[i]);
    }
    return IdealPoint(std::move(out));
}

IdealPoint update_ideal(const IdealPoint& z, const Population& pop) {
    return update_ideal(z, objectives_of(pop));
}

std::vector<std::size_t> nondominated_indices(std::span<const Vec> objectives) {
    const std::size_t n = objectives.size();
    std::vector<char> dominated(n, 0);
    for (std::size_t i = 0; i < n; ++i) {
        if (dominated[i]) continue;
        for (std::size_t j = 0; j < n; ++j) {
            if (i == j) continue;
            if (dominates(objectives[j], objectives[i])) {
                dominated[i] = 1;
                break;
            }
        }
    }
    std::vector<std::size_t> keep;
    for (std::size_t i = 0; i < n; ++i) {
        if (!dominated[i]) keep.push_back(i);
    }
    return keep;
}

Population nondominated_filter(const Population& pop) {
    const auto objs = objectives_of(pop);
    Population out;
    for (auto i : nondominated_indices(objs)) out.push_back(pop[i]);
    return out;
}

Population merge_unique(const Population& a, const Population& b) {
    Population out;
    out.reserve(a.size() + b.size());
    std::set<Vec> seen;
    for (const auto* part : {&a, &b}) {
        for (const auto& ind : *part) {
            if (seen.insert(ind.x).second) out.push_back(ind);
        }
    }
    return out;
}

std::vector<Vec> objectives_of(const Population& pop) {
    std::vector<Vec> out;
    out.reserve(pop.size());
    for (const auto& ind : pop) out.push_back(ind.f);
    return out;
}

double norm(std::span<const double> v) {
    double s = 0.0;
    for (double x : v) s += x * x;
    return std::sqrt(s);
}

}  // namespace rveaca
