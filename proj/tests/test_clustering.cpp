#include <algorithm>
#include <cmath>
#include <random>

#include "doctest.h"
#include "rveaca/clustering.hpp"
#include "support.hpp"

using namespace rveaca;

namespace {

// Gaussian-kernel correntropy written out term by term.
double cim_oracle(const Vec& x, const Vec& y, double sigma) {
    const double kappa0 = 1.0;
    double corr = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        corr += std::exp(-std::pow(x[i] - y[i], 2) / (2.0 * sigma * sigma));
    }
    corr /= static_cast<double>(x.size());
    return std::sqrt(kappa0 - corr);
}

std::vector<Vec> alternating(std::size_t n, Vec amplitude) {
    std::vector<Vec> out;
    for (std::size_t i = 0; i < n; ++i) {
        Vec v = amplitude;
        if (i % 2) {
            for (auto& a : v) a = -a;
        }
        out.push_back(v);
    }
    return out;
}

TopoNetwork line_network(std::vector<double> positions) {
    TopoNetwork net;
    for (double p : positions) net.add_node(Vec{p}, 1.0);
    return net;
}

}  // namespace

TEST_CASE("cim examples") {
    CHECK(cim(Vec{0.3, 0.7}, Vec{0.3, 0.7}, 0.2) == 0.0);
    CHECK(cim(Vec{0}, Vec{1}, 1.0) == doctest::Approx(0.62727).epsilon(1e-5));
    CHECK(cim(Vec{0, 0}, Vec{1, 1}, 1.0) == doctest::Approx(0.62727).epsilon(1e-5));
    CHECK(cim(Vec{0}, Vec{1}, 1.0) == doctest::Approx(std::sqrt(1.0 - std::exp(-0.5))));
    CHECK_THROWS_AS(cim(Vec{0}, Vec{1}, 0.0), ContractError);
    CHECK_THROWS_AS(cim(Vec{0}, Vec{1}, -1.0), ContractError);
}

TEST_CASE("cim agrees with a term-by-term oracle") {
    std::mt19937_64 g(21);
    for (int i = 0; i < 20000; ++i) {
        const std::size_t d = testgen::pick(g, 1, 8);
        const Vec x = testgen::random_vec(g, d, -2, 2);
        const Vec y = testgen::random_vec(g, d, -2, 2);
        const double s = testgen::random_vec(g, 1, 0.01, 3)[0];
        REQUIRE(cim(x, y, s) == doctest::Approx(cim_oracle(x, y, s)).epsilon(1e-12));
    }
}

TEST_CASE("bandwidth examples") {
    const double expected_1d = std::pow(4.0 / 3.0, 0.2) * std::pow(100.0, -0.2);
    CHECK(estimate_bandwidth(alternating(100, {1.0})) == doctest::Approx(expected_1d).epsilon(1e-12));
    CHECK(expected_1d == doctest::Approx(0.42168).epsilon(1e-5));
    CHECK(estimate_bandwidth(alternating(64, {1.0, 3.0})) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(estimate_bandwidth(std::vector<Vec>(10, Vec{0.4, 0.4})) == kBandwidthFloor);
    CHECK_THROWS_AS(estimate_bandwidth(std::vector<Vec>{}), ContractError);
}

TEST_CASE("winner selection") {
    TopoNetwork net = line_network({0.0, 1.0});
    Winners w = select_winners(Vec{0.2}, net);
    CHECK(w.first == 0);
    CHECK(w.second == 1);
    w = select_winners(Vec{1.0}, net);
    CHECK(w.first == 1);
    CHECK(w.first_cim == 0.0);
    TopoNetwork sym = line_network({0.0, 2.0});
    w = select_winners(Vec{1.0}, sym);
    CHECK(w.first == 0);
    CHECK(w.second == 1);
    CHECK_THROWS_AS(select_winners(Vec{0.0}, line_network({0.0})), ContractError);
}

TEST_CASE("vigilance cases") {
    CHECK(vigilance_classify(0.6, 0.8, 0.5) == VigilanceCase::NewNode);
    CHECK(vigilance_classify(0.3, 0.7, 0.5) == VigilanceCase::UpdateWinner);
    CHECK(vigilance_classify(0.2, 0.4, 0.5) == VigilanceCase::UpdateBoth);
    CHECK_THROWS_AS(vigilance_classify(0.5, 0.4, 0.5), ContractError);

    std::mt19937_64 g(22);
    for (int i = 0; i < 10000; ++i) {
        Vec v = testgen::random_vec(g, 3);
        const double a = std::min(v[0], v[1]), b = std::max(v[0], v[1]);
        const VigilanceCase c = vigilance_classify(a, b, v[2]);
        const int fired = (v[2] < a) + (a <= v[2] && v[2] < b) + (b <= v[2]);
        REQUIRE(fired == 1);
        if (v[2] < a) CHECK(c == VigilanceCase::NewNode);
        if (b <= v[2]) CHECK(c == VigilanceCase::UpdateBoth);
    }
}

TEST_CASE("first-winner learning") {
    TopoNetwork net = line_network({0.0, 5.0, 6.0, 7.0});
    net.connect(0, 2);
    net.connect(0, 3);
    learn_first_winner(net, 0, 1, Vec{1.0});
    CHECK(net.node(0).alpha == 2);
    CHECK(net.node(0).y[0] == 0.5);
    CHECK(net.age(0, 2) == 0.5);
    CHECK(net.age(0, 3) == 0.5);
    CHECK(net.age(0, 1) == 0.0);

    net.set_age(0, 1, 3.0);
    learn_first_winner(net, 0, 1, Vec{1.0});
    CHECK(net.age(0, 1) == 0.0);
    CHECK(net.node(1).y[0] == 5.0);
}

TEST_CASE("both-winner learning") {
    TopoNetwork net = line_network({0.0, 0.0});
    learn_both_winners(net, 0, 1, Vec{1.0});
    CHECK(net.node(1).y[0] == doctest::Approx(0.1).epsilon(1e-15));
    CHECK(net.node(1).alpha == 1);

    TopoNetwork aged = line_network({0.0, 0.5, 3.0});
    aged.connect(0, 2);
    aged.set_age(0, 2, 2.0);
    learn_both_winners(aged, 0, 1, Vec{0.2});
    CHECK_FALSE(aged.connected(0, 2));
    CHECK(aged.connected(0, 1));
    CHECK(aged.age(0, 1) == 0.0);

    TopoNetwork young = line_network({0.0, 0.5, 3.0, 4.0});
    young.connect(0, 2);
    young.connect(0, 3);
    learn_both_winners(young, 0, 1, Vec{0.2});
    CHECK(young.connected(0, 2));
    CHECK(young.connected(0, 3));
    CHECK(young.edge_count() == 3);
}

TEST_CASE("train_ca examples") {
    TopoNetwork constant;
    train_ca(std::vector<Vec>(100, Vec{0.3, 0.3, 0.4}), constant, 100, 0.1);
    CHECK(constant.size() == 1);
    CHECK(constant.node(0).alpha == 100);

    TopoNetwork first;
    train_ca(std::vector<Vec>{{0.25, 0.75}}, first, 10, 0.1);
    REQUIRE(first.size() == 1);
    CHECK(first.node(0).y == Vec{0.25, 0.75});

    std::mt19937_64 g(23);
    std::normal_distribution<double> noise(0.0, 0.01);
    std::vector<Vec> blobs;
    for (int i = 0; i < 200; ++i) {
        const double c = i % 2 ? 0.9 : 0.1;
        blobs.push_back({c + noise(g), c + noise(g)});
    }
    TopoNetwork two;
    train_ca(blobs, two, 50, 0.2);
    // One node per blob; every Case II step links the two winners.
    REQUIRE(two.size() == 2);
    CHECK(two.node(0).y[0] == doctest::Approx(0.1).epsilon(0.05));
    CHECK(two.node(1).y[0] == doctest::Approx(0.9).epsilon(0.05));
    CHECK(two.node(0).alpha == 100);
    CHECK(connected_components(two).count == 1);
    CHECK_THROWS_AS(train_ca(blobs, two, 0, 0.2), ContractError);
}

TEST_CASE("training invariants on random streams") {
    std::mt19937_64 g(24);
    for (int trial = 0; trial < 40; ++trial) {
        const std::size_t d = testgen::pick(g, 1, 4);
        const auto xs = testgen::random_set(g, testgen::pick(g, 1, 300), d);
        const double v = testgen::random_vec(g, 1, 0.05, 0.9)[0];
        const std::size_t lambda = testgen::pick(g, 2, 60);
        Vec lo(d, 1e9), hi(d, -1e9);
        for (const auto& x : xs) {
            for (std::size_t j = 0; j < d; ++j) {
                lo[j] = std::min(lo[j], x[j]);
                hi[j] = std::max(hi[j], x[j]);
            }
        }
        TopoNetwork net;
        std::vector<std::size_t> alphas;
        for (const auto& x : xs) {
            train_ca(std::vector<Vec>{x}, net, lambda, v);
            for (std::size_t k = 0; k < alphas.size(); ++k) REQUIRE(net.node(k).alpha >= alphas[k]);
            alphas.clear();
            for (const auto& n : net.nodes()) alphas.push_back(n.alpha);
        }
        for (const auto& n : net.nodes()) {
            for (std::size_t j = 0; j < d; ++j) {
                REQUIRE(n.y[j] >= lo[j] - 1e-12);
                REQUIRE(n.y[j] <= hi[j] + 1e-12);
            }
            REQUIRE(n.sigma > 0.0);
        }
        for (const auto& e : net.edges()) {
            REQUIRE(e.a != e.b);
            REQUIRE(e.age >= 0.0);
        }
    }
}

TEST_CASE("edge to the second winner is fresh after every learning step") {
    std::mt19937_64 g(25);
    for (int trial = 0; trial < 200; ++trial) {
        TopoNetwork net;
        for (int k = 0; k < 6; ++k) net.add_node(testgen::random_vec(g, 2), 0.3);
        for (int e = 0; e < 8; ++e) {
            const auto a = testgen::pick(g, 0, 5), b = testgen::pick(g, 0, 5);
            if (a != b) {
                net.connect(a, b);
                net.set_age(a, b, testgen::random_vec(g, 1, 0, 4)[0]);
            }
        }
        const Vec x = testgen::random_vec(g, 2);
        const Winners w = select_winners(x, net);
        if (trial % 2) {
            learn_first_winner(net, w.first, w.second, x);
        } else {
            learn_both_winners(net, w.first, w.second, x);
        }
        REQUIRE(net.age(w.first, w.second) == 0.0);
    }
}

TEST_CASE("connected components") {
    TopoNetwork three = line_network({0, 1, 2});
    CHECK(connected_components(three).count == 3);
    three.connect(0, 1);
    three.connect(1, 2);
    CHECK(connected_components(three).count == 1);
    TopoNetwork four = line_network({0, 1, 2, 3});
    four.connect(0, 2);
    four.connect(1, 3);
    const auto lab = connected_components(four);
    CHECK(lab.count == 2);
    CHECK(lab.label == std::vector<std::size_t>{0, 1, 0, 1});
}

TEST_CASE("adaptive training with few instances resets the threshold") {
    std::mt19937_64 g(26);
    const auto xs = testgen::random_set(g, 20, 3);
    const auto r = adaptive_train_ca(xs, 10, 0.73, 20);
    CHECK(r.threshold == 0.1);
    CHECK(r.passes == 1);
    TopoNetwork direct;
    train_ca(xs, direct, 10, 0.1);
    CHECK(r.network.size() == direct.size());
}

TEST_CASE("adaptive training follows the bisection recurrence") {
    std::mt19937_64 g(27);
    for (int trial = 0; trial < 30; ++trial) {
        const std::size_t n = testgen::pick(g, 5, 30);
        const auto xs = testgen::random_set(g, testgen::pick(g, 2 * n, 4 * n), 3);
        const double v0 = testgen::random_vec(g, 1, 0.02, 0.6)[0];

        double up = 1.0, low = 0.0, v = v0;
        std::size_t passes = 0, count = 0;
        bool ok = false;
        for (int i = 0; i < 5 && !ok; ++i) {
            TopoNetwork net;
            train_ca(xs, net, 20, v);
            ++passes;
            count = net.size();
            ok = 0.75 * n <= count && count <= 1.25 * n;
            if (!ok) {
                (count < 0.75 * n ? up : low) = v;
                v = (up + low) / 2.0;
            }
        }
        const auto r = adaptive_train_ca(xs, 20, v0, n);
        CHECK(r.passes == passes);
        CHECK(r.accepted == ok);
        CHECK(r.threshold == v);
        CHECK(r.network.size() == count);
        CHECK(r.threshold >= 0.0);
        CHECK(r.threshold <= 1.0);
    }
}

TEST_CASE("adaptive training accepts the inherited threshold when it already fits") {
    std::mt19937_64 g(28);
    const auto xs = testgen::random_set(g, 200, 3);
    TopoNetwork probe;
    train_ca(xs, probe, 20, 0.3);
    const std::size_t n = probe.size();
    REQUIRE(xs.size() > 1.25 * n);
    const auto r = adaptive_train_ca(xs, 20, 0.3, n);
    CHECK(r.passes == 1);
    CHECK(r.accepted);
    CHECK(r.threshold == 0.3);
}

TEST_CASE("network json lists nodes and edges") {
    TopoNetwork net = line_network({0, 1});
    net.connect(0, 1);
    const std::string j = network_to_json(net);
    CHECK(j.find("\"nodes\"") != std::string::npos);
    CHECK(j.find("\"edges\"") != std::string::npos);
}
