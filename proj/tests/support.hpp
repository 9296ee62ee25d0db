#pragma once

#include <cstddef>
#include <random>
#include <vector>

#include "rveaca/core.hpp"

namespace testgen {

using rveaca::Vec;

inline Vec random_vec(std::mt19937_64& g, std::size_t d, double lo = 0.0, double hi = 1.0) {
    std::uniform_real_distribution<double> u(lo, hi);
    Vec v(d);
    for (auto& x : v) x = u(g);
    return v;
}

inline std::vector<Vec> random_set(std::mt19937_64& g, std::size_t n, std::size_t d, double lo = 0.0,
                                   double hi = 1.0) {
    std::vector<Vec> out;
    for (std::size_t i = 0; i < n; ++i) out.push_back(random_vec(g, d, lo, hi));
    return out;
}

/// Values on a coarse grid so ties and duplicates actually show up.
inline Vec grid_vec(std::mt19937_64& g, std::size_t d, int levels) {
    std::uniform_int_distribution<int> u(0, levels - 1);
    Vec v(d);
    for (auto& x : v) x = u(g);
    return v;
}

inline std::size_t pick(std::mt19937_64& g, std::size_t lo, std::size_t hi) {
    return std::uniform_int_distribution<std::size_t>(lo, hi)(g);
}

inline rveaca::Population as_population(const std::vector<Vec>& fs) {
    rveaca::Population p;
    for (std::size_t i = 0; i < fs.size(); ++i) p.push_back({Vec{static_cast<double>(i)}, fs[i]});
    return p;
}

}  // namespace testgen
