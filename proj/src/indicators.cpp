#include "rveaca/indicators.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "rveaca/rng.hpp"

namespace rveaca {

namespace {

std::vector<Vec> contributing(std::span<const Vec> points, std::span<const double> q) {
    std::vector<Vec> out;
    for (const auto& p : points) {
        if (p.size() != q.size()) throw ContractError("hv: dimension mismatch");
        bool inside = true;
        for (std::size_t m = 0; m < q.size(); ++m) inside = inside && p[m] < q[m];
        if (inside) out.push_back(p);
    }
    return out;
}

double sweep_2d(std::vector<std::pair<double, double>> pts, double q0, double q1) {
    std::sort(pts.begin(), pts.end());
    double area = 0.0;
    double ceiling = q1;
    for (const auto& [x, y] : pts) {
        if (y < ceiling) {
            area += (q0 - x) * (ceiling - y);
            ceiling = y;
        }
    }
    return area;
}

}  // namespace

std::string to_string(IndicatorMethod method) {
    return method == IndicatorMethod::Exact ? "exact" : "monte-carlo";
}

std::vector<Vec> normalize_front(std::span<const Vec> objectives, const ReferenceFront& front) {
    if (front.points.empty()) throw ContractError("normalize_front: empty reference front");
    std::vector<Vec> out(objectives.begin(), objectives.end());
    for (auto& f : out) {
        for (std::size_t m = 0; m < f.size(); ++m) {
            const double span = front.nadir[m] - front.ideal[m];
            f[m] = span > 0.0 ? (f[m] - front.ideal[m]) / span : 0.0;
        }
    }
    return out;
}

double hv_exact(std::span<const Vec> points, std::span<const double> q) {
    const auto pts = contributing(points, q);
    if (pts.empty()) return 0.0;
    if (q.size() == 2) {
        std::vector<std::pair<double, double>> xy;
        for (const auto& p : pts) xy.emplace_back(p[0], p[1]);
        return sweep_2d(std::move(xy), q[0], q[1]);
    }
    if (q.size() != 3) throw ContractError("hv_exact: only two or three objectives");

    std::vector<Vec> sorted = pts;
    std::sort(sorted.begin(), sorted.end(), [](const Vec& a, const Vec& b) { return a[2] < b[2]; });
    double volume = 0.0;
    std::vector<std::pair<double, double>> slice;
    for (std::size_t i = 0; i < sorted.size(); ++i) {
        slice.emplace_back(sorted[i][0], sorted[i][1]);
        const double top = i + 1 < sorted.size() ? sorted[i + 1][2] : q[2];
        const double height = top - sorted[i][2];
        if (height > 0.0) volume += height * sweep_2d(slice, q[0], q[1]);
    }
    return volume;
}

double hv_monte_carlo(std::span<const Vec> points, std::span<const double> q, std::size_t samples,
                      std::uint64_t seed) {
    if (samples == 0) throw ContractError("hv_monte_carlo: need at least one sample");
    const auto pts = contributing(points, q);
    double box = 1.0;
    for (double v : q) box *= v;
    if (pts.empty() || !(box > 0.0)) return 0.0;

    const std::size_t m_count = q.size();
    Rng rng(seed);
    Vec u(m_count);
    std::size_t hits = 0;
    for (std::size_t s = 0; s < samples; ++s) {
        for (std::size_t m = 0; m < m_count; ++m) u[m] = rng.uniform() * q[m];
        for (const auto& p : pts) {
            std::size_t m = 0;
            while (m < m_count && p[m] <= u[m]) ++m;
            if (m == m_count) {
                ++hits;
                break;
            }
        }
    }
    return box * static_cast<double>(hits) / static_cast<double>(samples);
}

IndicatorResult hv(std::span<const Vec> points, std::span<const double> q, HvMode mode, std::size_t samples,
                   std::uint64_t seed) {
    const bool exact = mode == HvMode::Exact || (mode == HvMode::Auto && q.size() <= 3);
    if (exact) return {hv_exact(points, q), IndicatorMethod::Exact, 0, 0};
    return {hv_monte_carlo(points, q, samples, seed), IndicatorMethod::MonteCarlo, samples, seed};
}

IndicatorResult igd_plus(std::span<const Vec> points, std::span<const Vec> reference) {
    if (points.empty()) throw ContractError("igd_plus: empty population");
    if (reference.empty()) throw ContractError("igd_plus: empty reference set");
    double total = 0.0;
    for (const auto& r : reference) {
        double best = std::numeric_limits<double>::infinity();
        for (const auto& p : points) {
            if (p.size() != r.size()) throw ContractError("igd_plus: dimension mismatch");
            double s = 0.0;
            for (std::size_t m = 0; m < r.size(); ++m) {
                const double d = std::max(p[m] - r[m], 0.0);
                s += d * d;
            }
            best = std::min(best, s);
        }
        total += std::sqrt(best);
    }
    return {total / static_cast<double>(reference.size()), IndicatorMethod::Exact, 0, 0};
}

}  // namespace rveaca
