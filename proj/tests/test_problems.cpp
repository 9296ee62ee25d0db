#include <cmath>
#include <numbers>
#include <random>

#include "doctest.h"
#include "rveaca/problems.hpp"
#include "support.hpp"

using namespace rveaca;

namespace {

constexpr double pi = std::numbers::pi;

// Second transcription of the suite, 1-based as in the published definitions.
Vec oracle(const std::string& name, std::size_t M, const Vec& x0) {
    const std::size_t D = x0.size();
    auto x = [&](std::size_t i) { return x0[i - 1]; };
    Vec f(M + 1, 0.0);  // f[1..M]
    auto dist_sq = [&](std::size_t from) {
        double g = 0;
        for (std::size_t i = from; i <= D; ++i) g += (x(i) - 0.5) * (x(i) - 0.5);
        return g;
    };
    auto ras = [&]() {
        double g = 0;
        for (std::size_t i = M; i <= D; ++i) g += (x(i) - 0.5) * (x(i) - 0.5) - std::cos(20 * pi * (x(i) - 0.5));
        return 100 * (double(D - M + 1) + g);
    };
    // Concave sphere term for objective m with angles th(1..M-1).
    auto sph = [&](std::size_t m, auto th) {
        double v = 1;
        for (std::size_t i = 1; i <= M - m; ++i) v *= std::cos(th(i) * pi / 2);
        if (m > 1) v *= std::sin(th(M - m + 1) * pi / 2);
        return v;
    };
    if (name == "DTLZ2") {
        const double g = dist_sq(M);
        for (std::size_t m = 1; m <= M; ++m) f[m] = (1 + g) * sph(m, x);
    } else if (name == "MaF1") {
        const double g = dist_sq(M);
        for (std::size_t m = 1; m <= M; ++m) {
            double prod = 1;
            for (std::size_t i = 1; i <= M - m; ++i) prod *= x(i);
            if (m > 1) prod *= 1 - x(M - m + 1);
            f[m] = (1 - prod) * (1 + g);
        }
    } else if (name == "MaF2") {
        const std::size_t grp = (D - M + 1) / M;
        auto th = [&](std::size_t i) { return x(i) / 2 + 0.25; };
        for (std::size_t m = 1; m <= M; ++m) {
            const std::size_t lo = M + (m - 1) * grp;
            const std::size_t hi = m < M ? M + m * grp - 1 : D;
            double g = 0;
            for (std::size_t j = lo; j <= hi; ++j) g += std::pow(x(j) / 2 + 0.25 - 0.5, 2);
            f[m] = sph(m, th) * (1 + g);
        }
    } else if (name == "MaF3") {
        const double g = ras();
        for (std::size_t m = 1; m <= M; ++m) f[m] = std::pow((1 + g) * sph(m, x), m == M ? 2 : 4);
    } else if (name == "MaF4") {
        const double g = ras();
        for (std::size_t m = 1; m <= M; ++m) f[m] = std::pow(2.0, double(m)) * (1 + g) * (1 - sph(m, x));
    } else if (name == "MaF5") {
        const double g = dist_sq(M);
        auto th = [&](std::size_t i) { return std::pow(x(i), 100); };
        for (std::size_t m = 1; m <= M; ++m) f[m] = std::pow(2.0, double(M - m + 1)) * (1 + g) * sph(m, th);
    } else if (name == "MaF6") {
        const double g = dist_sq(M);
        auto th = [&](std::size_t i) { return i == 1 ? x(1) : (1 + 2 * g * x(i)) / (2 * (1 + g)); };
        for (std::size_t m = 1; m <= M; ++m) f[m] = (1 + 100 * g) * sph(m, th);
    } else {
        double s = 0;
        for (std::size_t i = M; i <= D; ++i) s += x(i);
        const double g = 1 + 9 * s / double(D - M + 1);
        double h = M;
        for (std::size_t m = 1; m < M; ++m) {
            f[m] = x(m);
            h -= x(m) / (1 + g) * (1 + std::sin(3 * pi * x(m)));
        }
        f[M] = (1 + g) * h;
    }
    return Vec(f.begin() + 1, f.end());
}

bool strictly_better(const Vec& r, const Vec& f, double tol) {
    bool all = true;
    for (std::size_t m = 0; m < f.size(); ++m) all = all && r[m] < f[m] - tol;
    return all;
}

}  // namespace

TEST_CASE("problem catalogue") {
    for (const auto& name : problem_names()) {
        const auto p = make_problem(name, 5);
        const bool seven = name == "DTLZ7" || name == "MaF7";
        CHECK(p.dimension == 5 + (seven ? 20 : 10) - 1);
        CHECK(p.bounds.lower == Vec(p.dimension, 0.0));
        CHECK(p.bounds.upper == Vec(p.dimension, 1.0));
    }
    CHECK_THROWS_AS(make_problem("ZDT1", 3), std::invalid_argument);
    CHECK_THROWS_AS(evaluate(make_problem("DTLZ2", 3), Vec(3, 0.5)), ContractError);
}

TEST_CASE("evaluation agrees with an independent transcription") {
    std::mt19937_64 g(61);
    for (const auto& name : problem_names()) {
        for (std::size_t m : {2, 3, 5, 8, 10}) {
            const auto p = make_problem(name, m);
            for (int i = 0; i < 200; ++i) {
                const Vec x = testgen::random_vec(g, p.dimension);
                const Vec f = evaluate(p, x);
                const Vec o = oracle(name, m, x);
                REQUIRE(f.size() == m);
                for (std::size_t k = 0; k < m; ++k) REQUIRE(f[k] == doctest::Approx(o[k]).epsilon(1e-10));
            }
        }
    }
}

TEST_CASE("analytic values at optimal distance variables") {
    const auto d = make_problem("DTLZ2", 3);
    const Vec f = evaluate(d, optimal_decision(d, Vec{0.3, 0.8}));
    CHECK(f[0] * f[0] + f[1] * f[1] + f[2] * f[2] == doctest::Approx(1.0));

    const auto m1 = make_problem("MaF1", 4);
    const Vec f1 = evaluate(m1, optimal_decision(m1, Vec{0.3, 0.8, 0.1}));
    CHECK(f1[0] + f1[1] + f1[2] + f1[3] == doctest::Approx(3.0));

    const auto m7 = make_problem("MaF7", 3);
    const Vec f7 = evaluate(m7, optimal_decision(m7, Vec{0.0, 0.0}));
    CHECK(f7[2] == doctest::Approx(6.0));
    const Vec p{0.2, 0.7};
    double s = 0.0;
    for (double v : p) s += v / 2.0 * (1.0 + std::sin(3.0 * pi * v));
    CHECK(evaluate(m7, optimal_decision(m7, p))[2] == doctest::Approx(2.0 * (3.0 - s)));
}

TEST_CASE("evaluate is pure") {
    const auto p = make_problem("MaF3", 5);
    std::mt19937_64 g(62);
    const Vec x = testgen::random_vec(g, p.dimension);
    const Vec first = evaluate(p, x);
    for (int i = 0; i < 10000; ++i) REQUIRE(evaluate(p, x) == first);
}

TEST_CASE("reference front geometry") {
    const auto d = reference_front(make_problem("DTLZ2", 3), 300);
    for (const auto& p : d.points) CHECK(std::sqrt(p[0] * p[0] + p[1] * p[1] + p[2] * p[2]) == doctest::Approx(1.0));
    const auto m1 = reference_front(make_problem("MaF1", 3), 300);
    for (const auto& p : m1.points) CHECK(p[0] + p[1] + p[2] == doctest::Approx(2.0));
    CHECK_THROWS_AS(reference_front(make_problem("MaF1", 3), 2), ContractError);

    for (const auto& name : problem_names()) {
        for (std::size_t m : {3, 5}) {
            const auto f = reference_front(make_problem(name, m), 400);
            REQUIRE(f.points.size() >= m);
            for (const auto& a : f.points) {
                for (const auto& b : f.points) REQUIRE_FALSE(dominates(b, a));
            }
            for (const auto& p : f.normalized()) {
                for (double v : p) {
                    CHECK(v >= -1e-12);
                    CHECK(v <= 1.0 + 1e-12);
                }
            }
        }
    }
    const auto big = reference_front(make_problem("MaF7", 15), 500);
    CHECK(big.points.size() >= 15);
}

TEST_CASE("optimal solutions are not dominated by the sampled front") {
    std::mt19937_64 g(63);
    for (const auto& name : problem_names()) {
        for (std::size_t m : {2, 3, 5}) {
            const auto spec = make_problem(name, m);
            const auto front = reference_front(spec, 500);
            const bool seven = name == "DTLZ7" || name == "MaF7";
            for (int i = 0; i < 100; ++i) {
                Vec pos = testgen::random_vec(g, m - 1);
                if (seven) {
                    for (auto& v : pos) v = v < 0.5 ? v * 0.2514 : 0.6316 + (v - 0.5) * 2 * (0.8594 - 0.6316);
                }
                const Vec f = evaluate(spec, optimal_decision(spec, pos));
                for (const auto& r : front.points) REQUIRE_FALSE(strictly_better(r, f, 1e-9));
            }
        }
    }
}

TEST_CASE("front csv export") {
    const std::string path = "front_export_test.csv";
    write_front_csv(path, std::vector<Vec>{{0.5, 1.0}, {1.0, 0.25}});
    std::FILE* fp = std::fopen(path.c_str(), "r");
    REQUIRE(fp != nullptr);
    char line[64];
    REQUIRE(std::fgets(line, sizeof line, fp) != nullptr);
    CHECK(std::string(line) == "0.5,1\n");
    std::fclose(fp);
    std::remove(path.c_str());
}
