#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "rveaca/core.hpp"
#include "rveaca/problems.hpp"

namespace rveaca {

enum class IndicatorMethod { Exact, MonteCarlo };

struct IndicatorResult {
    double value = 0.0;
    IndicatorMethod method = IndicatorMethod::Exact;
    std::size_t samples = 0;  ///< Monte Carlo only
    std::uint64_t seed = 0;   ///< Monte Carlo only
};

std::string to_string(IndicatorMethod method);

/// (f - ideal) / (nadir - ideal) with the reference front's bounds; zero spans map to 0.
std::vector<Vec> normalize_front(std::span<const Vec> objectives, const ReferenceFront& front);

enum class HvMode { Auto, Exact, MonteCarlo };

inline constexpr std::size_t kDefaultHvSamples = 1'000'000;
inline constexpr std::uint64_t kDefaultHvSeed = 20240607;

/// Hypervolume of the region dominated by `points` and bounded by `q`. Auto picks
/// the exact computation for M <= 3. Points not strictly better than q in every
/// objective contribute nothing.
IndicatorResult hv(std::span<const Vec> points, std::span<const double> q, HvMode mode = HvMode::Auto,
                   std::size_t samples = kDefaultHvSamples, std::uint64_t seed = kDefaultHvSeed);

/// Exact hypervolume for two or three objectives.
double hv_exact(std::span<const Vec> points, std::span<const double> q);

double hv_monte_carlo(std::span<const Vec> points, std::span<const double> q, std::size_t samples,
                      std::uint64_t seed);

IndicatorResult igd_plus(std::span<const Vec> points, std::span<const Vec> reference);

}  // namespace rveaca
