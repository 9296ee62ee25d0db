#include "rveaca/problems.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <numbers>
#include <stdexcept>

#include "rveaca/rng.hpp"
#include "rveaca/rvea.hpp"

namespace rveaca {

namespace {

constexpr double kPi = std::numbers::pi;

struct Entry {
    std::string_view name;
    ProblemKind kind;
    std::size_t k;
};

constexpr Entry kEntries[] = {
    {"DTLZ2", ProblemKind::DTLZ2, 10}, {"DTLZ7", ProblemKind::DTLZ7, 20},
    {"MaF1", ProblemKind::MaF1, 10},   {"MaF2", ProblemKind::MaF2, 10},
    {"MaF3", ProblemKind::MaF3, 10},   {"MaF4", ProblemKind::MaF4, 10},
    {"MaF5", ProblemKind::MaF5, 10},   {"MaF6", ProblemKind::MaF6, 10},
    {"MaF7", ProblemKind::MaF7, 20},
};

// f_1 = s * prod cos(theta_i pi/2); f_m = s * prod_{i<=M-m} cos(.) * sin(theta_{M-m+1} pi/2)
Vec sphere(std::span<const double> theta, std::size_t m_count, double scale) {
    Vec f(m_count);
    for (std::size_t m = 0; m < m_count; ++m) {
        double v = scale;
        const std::size_t cos_terms = m_count - 1 - m;
        for (std::size_t i = 0; i < cos_terms; ++i) v *= std::cos(theta[i] * kPi / 2.0);
        if (m > 0) v *= std::sin(theta[cos_terms] * kPi / 2.0);
        f[m] = v;
    }
    return f;
}

double sum_sq_from_half(std::span<const double> xs) {
    double g = 0.0;
    for (double v : xs) g += (v - 0.5) * (v - 0.5);
    return g;
}

double rastrigin_g(std::span<const double> xs) {
    double g = static_cast<double>(xs.size());
    for (double v : xs) g += (v - 0.5) * (v - 0.5) - std::cos(20.0 * kPi * (v - 0.5));
    return 100.0 * g;
}

Vec eval_dtlz7(std::span<const double> x, std::size_t m_count) {
    const auto tail = x.subspan(m_count - 1);
    double mean = 0.0;
    for (double v : tail) mean += v;
    mean /= static_cast<double>(tail.size());
    const double g = 1.0 + 9.0 * mean;
    Vec f(m_count);
    double h = static_cast<double>(m_count);
    for (std::size_t m = 0; m + 1 < m_count; ++m) {
        f[m] = x[m];
        h -= f[m] / (1.0 + g) * (1.0 + std::sin(3.0 * kPi * f[m]));
    }
    f[m_count - 1] = (1.0 + g) * h;
    return f;
}

Vec eval_maf2(std::span<const double> x, std::size_t m_count) {
    const std::size_t d = x.size();
    const std::size_t group = (d - m_count + 1) / m_count;
    Vec theta(m_count - 1);
    for (std::size_t i = 0; i + 1 < m_count; ++i) theta[i] = x[i] / 2.0 + 0.25;
    Vec f = sphere(theta, m_count, 1.0);
    for (std::size_t m = 0; m < m_count; ++m) {
        const std::size_t begin = m_count - 1 + m * group;
        const std::size_t end = (m + 1 < m_count) ? begin + group : d;
        double g = 0.0;
        for (std::size_t i = begin; i < end; ++i) {
            const double t = x[i] / 2.0 + 0.25 - 0.5;
            g += t * t;
        }
        f[m] *= 1.0 + g;
    }
    return f;
}

Vec eval_maf6(std::span<const double> x, std::size_t m_count) {
    constexpr std::size_t kI = 2;
    const double g = sum_sq_from_half(x.subspan(m_count - 1));
    Vec theta(x.begin(), x.begin() + static_cast<std::ptrdiff_t>(m_count - 1));
    for (std::size_t i = kI - 1; i + 1 < m_count; ++i) {
        theta[i] = (1.0 + 2.0 * g * theta[i]) / (2.0 + 2.0 * g);
    }
    return sphere(theta, m_count, 1.0 + 100.0 * g);
}

std::vector<Vec> unit_rows(std::vector<Vec> rows) {
    for (auto& r : rows) {
        const double n = norm(r);
        for (auto& v : r) v /= n;
    }
    return rows;
}

std::vector<Vec> maf2_window(std::size_t request, std::size_t m_count) {
    const double c_lo = std::cos(3.0 * kPi / 8.0);
    const double c_hi = std::cos(kPi / 8.0);
    std::vector<Vec> out;
    for (const auto& r : uniform_weights(request, m_count)) {
        // Cosines of the sphere angles that reproduce the direction of r.
        Vec c(m_count - 1, 0.0);
        for (std::size_t j = 2; j <= m_count; ++j) {
            double prod = 1.0;
            for (std::size_t i = m_count - j + 2; i <= m_count - 1; ++i) prod *= c[i - 1];
            const double temp = r[j - 1] / r[0] * prod;
            c[m_count - j] = std::sqrt(1.0 / (1.0 + temp * temp));
        }
        if (m_count > 5) {
            for (auto& v : c) v = v * (c_hi - c_lo) + c_lo;
        } else if (std::any_of(c.begin(), c.end(), [&](double v) { return !(v >= c_lo && v <= c_hi); })) {
            continue;
        }
        Vec p(m_count);
        for (std::size_t m = 0; m < m_count; ++m) {
            double v = 1.0;
            const std::size_t cos_terms = m_count - 1 - m;
            for (std::size_t i = 0; i < cos_terms; ++i) v *= c[i];
            if (m > 0) v *= std::sqrt(1.0 - c[cos_terms] * c[cos_terms]);
            p[m] = v;
        }
        out.push_back(std::move(p));
    }
    return out;
}

// The lattice is filtered to the front's angular window, so grow it until enough survive.
std::vector<Vec> maf2_front(std::size_t target, std::size_t m_count) {
    std::vector<Vec> out = maf2_window(target, m_count);
    for (std::size_t request = 2 * target; out.size() < target && m_count <= 5 && request <= 256 * target;
         request *= 2) {
        out = maf2_window(request, m_count);
    }
    return out;
}

std::vector<Vec> dtlz7_front(std::size_t target, std::size_t m_count) {
    constexpr double a0 = 0.0, a1 = 0.251412, b0 = 0.631627, b1 = 0.859401;
    const double split = (a1 - a0) / (b1 - b0 + a1 - a0);
    const auto per_dim = static_cast<std::size_t>(
        std::ceil(std::pow(static_cast<double>(target), 1.0 / static_cast<double>(m_count - 1)) - 1e-9));
    const std::size_t steps = std::max<std::size_t>(per_dim, 2);
    double grid = 1.0;
    for (std::size_t i = 0; i + 1 < m_count; ++i) grid *= static_cast<double>(steps);
    // Large M: a full grid is too big, so sample positions with a fixed seed.
    const bool sampled = grid > 2.0 * static_cast<double>(target);
    const std::size_t total = sampled ? target : static_cast<std::size_t>(grid);
    Rng rng(7);

    std::vector<Vec> pts;
    pts.reserve(total);
    for (std::size_t idx = 0; idx < total; ++idx) {
        Vec p(m_count);
        std::size_t rem = idx;
        double sum = 0.0;
        for (std::size_t i = 0; i + 1 < m_count; ++i) {
            double u = 0.0;
            if (sampled) {
                u = rng.uniform();
            } else {
                u = static_cast<double>(rem % steps) / static_cast<double>(steps - 1);
                rem /= steps;
            }
            u = u <= split ? u * (a1 - a0) / split + a0 : (u - split) * (b1 - b0) / (1.0 - split) + b0;
            p[i] = u;
            sum += u / 2.0 * (1.0 + std::sin(3.0 * kPi * u));
        }
        p[m_count - 1] = 2.0 * (static_cast<double>(m_count) - sum);
        pts.push_back(std::move(p));
    }
    std::vector<Vec> out;
    for (auto i : nondominated_indices(pts)) out.push_back(pts[i]);
    return out;
}

}  // namespace

ProblemSpec make_problem(std::string_view name, std::size_t objectives) {
    if (objectives < 2) throw std::invalid_argument("make_problem: need at least two objectives");
    for (const auto& e : kEntries) {
        if (e.name == name) {
            ProblemSpec spec;
            spec.kind = e.kind;
            spec.name = std::string(e.name);
            spec.objectives = objectives;
            spec.dimension = objectives + e.k - 1;
            spec.bounds = Bounds::unit(spec.dimension);
            return spec;
        }
    }
    throw std::invalid_argument("unknown problem: " + std::string(name));
}

std::vector<std::string> problem_names() {
    std::vector<std::string> out;
    for (const auto& e : kEntries) out.emplace_back(e.name);
    return out;
}

Vec evaluate(const ProblemSpec& spec, std::span<const double> x) {
    if (x.size() != spec.dimension) throw ContractError("evaluate: decision vector has wrong dimension");
    const std::size_t m_count = spec.objectives;
    const auto distance = x.subspan(m_count - 1);
    switch (spec.kind) {
        case ProblemKind::DTLZ2:
            return sphere(x, m_count, 1.0 + sum_sq_from_half(distance));
        case ProblemKind::MaF1: {
            const double s = 1.0 + sum_sq_from_half(distance);
            Vec f(m_count);
            for (std::size_t m = 0; m < m_count; ++m) {
                double prod = 1.0;
                const std::size_t terms = m_count - 1 - m;
                for (std::size_t i = 0; i < terms; ++i) prod *= x[i];
                if (m > 0) prod *= 1.0 - x[terms];
                f[m] = s * (1.0 - prod);
            }
            return f;
        }
        case ProblemKind::MaF2:
            return eval_maf2(x, m_count);
        case ProblemKind::MaF3: {
            Vec f = sphere(x, m_count, 1.0 + rastrigin_g(distance));
            for (std::size_t m = 0; m + 1 < m_count; ++m) f[m] = std::pow(f[m], 4.0);
            f[m_count - 1] *= f[m_count - 1];
            return f;
        }
        case ProblemKind::MaF4: {
            const double s = 1.0 + rastrigin_g(distance);
            Vec f = sphere(x, m_count, s);
            for (std::size_t m = 0; m < m_count; ++m) f[m] = (s - f[m]) * std::pow(2.0, double(m + 1));
            return f;
        }
        case ProblemKind::MaF5: {
            Vec theta(x.begin(), x.begin() + static_cast<std::ptrdiff_t>(m_count - 1));
            for (auto& v : theta) v = std::pow(v, 100.0);
            Vec f = sphere(theta, m_count, 1.0 + sum_sq_from_half(distance));
            for (std::size_t m = 0; m < m_count; ++m) f[m] *= std::pow(2.0, double(m_count - m));
            return f;
        }
        case ProblemKind::MaF6:
            return eval_maf6(x, m_count);
        case ProblemKind::DTLZ7:
        case ProblemKind::MaF7:
            return eval_dtlz7(x, m_count);
    }
    throw std::logic_error("evaluate: unhandled problem kind");
}

std::vector<Vec> ReferenceFront::normalized() const {
    std::vector<Vec> out = points;
    for (auto& p : out) {
        for (std::size_t m = 0; m < p.size(); ++m) {
            const double span = nadir[m] - ideal[m];
            p[m] = span > 0.0 ? (p[m] - ideal[m]) / span : 0.0;
        }
    }
    return out;
}

ReferenceFront reference_front(const ProblemSpec& spec, std::size_t target_count) {
    const std::size_t m_count = spec.objectives;
    if (target_count < m_count) throw ContractError("reference_front: target_count below M");

    std::vector<Vec> pts;
    switch (spec.kind) {
        case ProblemKind::DTLZ2:
            pts = unit_rows(uniform_weights(target_count, m_count));
            break;
        case ProblemKind::MaF1:
            pts = uniform_weights(target_count, m_count);
            for (auto& p : pts) for (auto& v : p) v = 1.0 - v;
            break;
        case ProblemKind::MaF2:
            pts = maf2_front(target_count, m_count);
            break;
        case ProblemKind::MaF3:
            pts = uniform_weights(target_count, m_count);
            for (auto& p : pts) {
                for (auto& v : p) v *= v;
                double temp = p[m_count - 1];
                for (std::size_t m = 0; m + 1 < m_count; ++m) temp += std::sqrt(p[m]);
                for (std::size_t m = 0; m + 1 < m_count; ++m) p[m] /= temp * temp;
                p[m_count - 1] /= temp;
            }
            break;
        case ProblemKind::MaF4:
            pts = unit_rows(uniform_weights(target_count, m_count));
            for (auto& p : pts) {
                for (std::size_t m = 0; m < m_count; ++m) p[m] = (1.0 - p[m]) * std::pow(2.0, double(m + 1));
            }
            break;
        case ProblemKind::MaF5:
            pts = unit_rows(uniform_weights(target_count, m_count));
            for (auto& p : pts) {
                for (std::size_t m = 0; m < m_count; ++m) p[m] *= std::pow(2.0, double(m_count - m));
            }
            break;
        case ProblemKind::MaF6: {
            for (auto w : unit_rows(uniform_weights(target_count, 2))) {
                Vec p(m_count);
                for (std::size_t m = 0; m + 2 < m_count; ++m) p[m] = w[0];
                p[m_count - 2] = w[0];
                p[m_count - 1] = w[1];
                // Divide by sqrt(2)^e with e = (M-2, M-2, M-3, ..., 0).
                for (std::size_t m = 0; m < m_count; ++m) {
                    const double e = m == 0 ? double(m_count - 2) : double(m_count - 1 - m);
                    p[m] /= std::pow(std::sqrt(2.0), e);
                }
                pts.push_back(std::move(p));
            }
            break;
        }
        case ProblemKind::DTLZ7:
        case ProblemKind::MaF7:
            pts = dtlz7_front(target_count, m_count);
            break;
    }

    ReferenceFront front;
    front.ideal.assign(m_count, std::numeric_limits<double>::infinity());
    front.nadir.assign(m_count, -std::numeric_limits<double>::infinity());
    for (const auto& p : pts) {
        for (std::size_t m = 0; m < m_count; ++m) {
            front.ideal[m] = std::min(front.ideal[m], p[m]);
            front.nadir[m] = std::max(front.nadir[m], p[m]);
        }
    }
    front.points = std::move(pts);
    return front;
}

Vec optimal_decision(const ProblemSpec& spec, std::span<const double> position) {
    if (position.size() + 1 != spec.objectives) {
        throw ContractError("optimal_decision: need M - 1 position variables");
    }
    const bool dtlz7 = spec.kind == ProblemKind::DTLZ7 || spec.kind == ProblemKind::MaF7;
    Vec x(spec.dimension, dtlz7 ? 0.0 : 0.5);
    std::copy(position.begin(), position.end(), x.begin());
    return x;
}

void write_front_csv(const std::string& path, std::span<const Vec> points) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path);
    char buf[32];
    for (const auto& p : points) {
        for (std::size_t m = 0; m < p.size(); ++m) {
            std::snprintf(buf, sizeof buf, "%.17g", p[m]);
            out << (m ? "," : "") << buf;
        }
        out << '\n';
    }
}

}  // namespace rveaca
