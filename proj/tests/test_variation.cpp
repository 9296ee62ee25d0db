#include <cmath>
#include <random>

#include "doctest.h"
#include "rveaca/variation.hpp"
#include "support.hpp"

using namespace rveaca;

TEST_CASE("SBX of identical parents returns the parent") {
    Rng rng(1);
    const Bounds b = Bounds::unit(6);
    std::mt19937_64 g(2);
    for (int i = 0; i < 1000; ++i) {
        const Vec v = testgen::random_vec(g, 6);
        CHECK(sbx_crossover(v, v, b, {}, rng) == v);
    }
}

TEST_CASE("SBX with a huge distribution index stays next to a parent") {
    Rng rng(3);
    const Bounds b = Bounds::unit(4);
    VariationParams p;
    p.eta_c = 1e6;
    const Vec p1{0.2, 0.4, 0.6, 0.8};
    const Vec p2{0.3, 0.1, 0.9, 0.7};
    for (int i = 0; i < 200; ++i) {
        const Vec c = sbx_crossover(p1, p2, b, p, rng);
        for (std::size_t j = 0; j < 4; ++j) {
            CHECK(std::min(std::fabs(c[j] - p1[j]), std::fabs(c[j] - p2[j])) < 1e-4);
        }
    }
}

TEST_CASE("variation replays exactly for a seed") {
    const Bounds b = Bounds::unit(8);
    const Vec p1(8, 0.0), p2(8, 1.0);
    Rng r1(42), r2(42);
    const Vec c1 = polynomial_mutation(sbx_crossover(p1, p2, b, {}, r1), b, {}, r1);
    const Vec c2 = polynomial_mutation(sbx_crossover(p1, p2, b, {}, r2), b, {}, r2);
    CHECK(c1 == c2);
    Rng i1(5), i2(5);
    CHECK(random_init(4, b, i1) == random_init(4, b, i2));
}

TEST_CASE("PM with zero probability is the identity") {
    Rng rng(4);
    VariationParams p;
    p.p_m = 0.0;
    const Vec v{0.1, 0.5, 0.9};
    CHECK(polynomial_mutation(v, Bounds::unit(3), p, rng) == v);
}

TEST_CASE("PM keeps a lower-bound variable in range") {
    Rng rng(6);
    VariationParams p;
    p.p_m = 1.0;
    for (int i = 0; i < 10000; ++i) {
        const Vec c = polynomial_mutation(Vec{0.0}, Bounds::unit(1), p, rng);
        REQUIRE(c[0] >= 0.0);
        REQUIRE(c[0] <= 1.0);
    }
}

TEST_CASE("PM perturbation of the midpoint is symmetric") {
    Rng rng(7);
    VariationParams p;
    p.p_m = 1.0;
    const int n = 100000;
    double sum = 0.0, sq = 0.0;
    for (int i = 0; i < n; ++i) {
        const double d = polynomial_mutation(Vec{0.5}, Bounds::unit(1), p, rng)[0] - 0.5;
        sum += d;
        sq += d * d;
    }
    const double mean = sum / n;
    const double se = std::sqrt((sq / n - mean * mean) / n);
    CHECK(std::fabs(mean) <= 3.0 * se);
}

TEST_CASE("variation outputs respect bounds") {
    std::mt19937_64 g(8);
    Rng rng(9);
    for (int i = 0; i < 100000; ++i) {
        const std::size_t d = testgen::pick(g, 1, 6);
        Bounds b;
        for (std::size_t j = 0; j < d; ++j) {
            const Vec e = testgen::random_vec(g, 2, -5.0, 5.0);
            b.lower.push_back(std::min(e[0], e[1]));
            b.upper.push_back(std::max(e[0], e[1]));
        }
        Vec p1(d), p2(d);
        for (std::size_t j = 0; j < d; ++j) {
            p1[j] = rng.uniform(b.lower[j], b.upper[j]);
            p2[j] = rng.uniform(b.lower[j], b.upper[j]);
        }
        const Vec c = polynomial_mutation(sbx_crossover(p1, p2, b, {}, rng), b, {}, rng);
        REQUIRE(b.contains(c));
    }
}

TEST_CASE("random_init") {
    Rng rng(10);
    const auto pop = random_init(3, Bounds::unit(2), rng);
    REQUIRE(pop.size() == 3);
    for (const auto& ind : pop) {
        CHECK(Bounds::unit(2).contains(ind.x));
        CHECK_FALSE(ind.evaluated());
    }
    const auto flat = random_init(5, Bounds{{2.0, 0.0}, {2.0, 1.0}}, rng);
    for (const auto& ind : flat) CHECK(ind.x[0] == 2.0);
    CHECK_THROWS_AS(random_init(0, Bounds::unit(2), rng), ContractError);
}
