#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "rveaca/core.hpp"

namespace rveaca {

enum class ProblemKind { DTLZ2, DTLZ7, MaF1, MaF2, MaF3, MaF4, MaF5, MaF6, MaF7 };

struct ProblemSpec {
    ProblemKind kind = ProblemKind::DTLZ2;
    std::string name;
    std::size_t objectives = 3;
    std::size_t dimension = 12;
    Bounds bounds;
};

/// Builds a problem with the suite's default distance-variable count
/// (k = 10, or 20 for DTLZ7/MaF7). Throws std::invalid_argument for unknown names.
ProblemSpec make_problem(std::string_view name, std::size_t objectives);

std::vector<std::string> problem_names();

Vec evaluate(const ProblemSpec& spec, std::span<const double> x);

/// Sampled true Pareto front with its ideal and nadir.
struct ReferenceFront {
    std::vector<Vec> points;
    Vec ideal;
    Vec nadir;

    /// Points mapped to [0, 1]^M with the front's own ideal and nadir.
    std::vector<Vec> normalized() const;
};

ReferenceFront reference_front(const ProblemSpec& spec, std::size_t target_count);

/// Decision vector whose distance variables sit at their optimum, with the
/// given position variables (M - 1 of them).
Vec optimal_decision(const ProblemSpec& spec, std::span<const double> position);

void write_front_csv(const std::string& path, std::span<const Vec> points);

}  // namespace rveaca
