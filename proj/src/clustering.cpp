#include "rveaca/clustering.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <queue>

#include "json.hpp"

namespace rveaca {

std::size_t TopoNetwork::add_node(Vec y, double sigma) {
    if (!(sigma > 0.0)) throw ContractError("TopoNetwork::add_node: bandwidth must be positive");
    if (!nodes_.empty() && y.size() != nodes_.front().y.size()) {
        throw ContractError("TopoNetwork::add_node: dimension mismatch");
    }
    nodes_.push_back(Node{std::move(y), sigma, 1});
    adjacency_.emplace_back();
    return nodes_.size() - 1;
}

void TopoNetwork::connect(std::size_t a, std::size_t b) {
    if (a == b) throw ContractError("TopoNetwork::connect: self-loop");
    if (a >= size() || b >= size()) throw ContractError("TopoNetwork::connect: unknown node");
    adjacency_[a][b] = 0.0;
    adjacency_[b][a] = 0.0;
}

void TopoNetwork::disconnect(std::size_t a, std::size_t b) {
    adjacency_.at(a).erase(b);
    adjacency_.at(b).erase(a);
}

bool TopoNetwork::connected(std::size_t a, std::size_t b) const {
    return adjacency_.at(a).contains(b);
}

double TopoNetwork::age(std::size_t a, std::size_t b) const { return adjacency_.at(a).at(b); }

void TopoNetwork::set_age(std::size_t a, std::size_t b, double age) {
    adjacency_.at(a).at(b) = age;
    adjacency_.at(b).at(a) = age;
}

std::size_t TopoNetwork::edge_count() const {
    std::size_t twice = 0;
    for (const auto& adj : adjacency_) twice += adj.size();
    return twice / 2;
}

std::vector<Edge> TopoNetwork::edges() const {
    std::vector<Edge> out;
    for (std::size_t a = 0; a < adjacency_.size(); ++a) {
        for (const auto& [b, age] : adjacency_[a]) {
            if (a < b) out.push_back(Edge{a, b, age});
        }
    }
    return out;
}

double TopoNetwork::mean_sigma() const {
    if (nodes_.empty()) throw ContractError("TopoNetwork::mean_sigma: no nodes");
    double s = 0.0;
    for (const auto& n : nodes_) s += n.sigma;
    return s / static_cast<double>(nodes_.size());
}

std::vector<Vec> TopoNetwork::positions() const {
    std::vector<Vec> out;
    out.reserve(nodes_.size());
    for (const auto& n : nodes_) out.push_back(n.y);
    return out;
}

double cim(std::span<const double> x, std::span<const double> y, double sigma) {
    if (!(sigma > 0.0)) throw ContractError("cim: bandwidth must be positive");
    if (x.size() != y.size() || x.empty()) throw ContractError("cim: dimension mismatch");
    const double scale = -1.0 / (2.0 * sigma * sigma);
    double c = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        const double d = x[i] - y[i];
        c += std::exp(d * d * scale);
    }
    c /= static_cast<double>(x.size());
    return std::sqrt(std::max(0.0, 1.0 - c));
}

namespace {

double median_of(Vec v) {
    std::sort(v.begin(), v.end());
    const std::size_t n = v.size();
    return n % 2 == 1 ? v[n / 2] : 0.5 * (v[n / 2 - 1] + v[n / 2]);
}

}  // namespace

double estimate_bandwidth(std::span<const Vec> window) {
    if (window.empty()) throw ContractError("estimate_bandwidth: empty window");
    const std::size_t d = window.front().size();
    const double n = static_cast<double>(window.size());
    const double dd = static_cast<double>(d);
    const double factor = std::pow(4.0 / (2.0 + dd), 1.0 / (4.0 + dd)) * std::pow(n, -1.0 / (4.0 + dd));

    Vec sigmas(d);
    for (std::size_t j = 0; j < d; ++j) {
        double mean = 0.0;
        for (const auto& x : window) mean += x[j];
        mean /= n;
        double var = 0.0;
        for (const auto& x : window) var += (x[j] - mean) * (x[j] - mean);
        sigmas[j] = factor * std::sqrt(var / n);
    }
    return std::max(median_of(std::move(sigmas)), kBandwidthFloor);
}

Winners select_winners(std::span<const double> x, const TopoNetwork& net) {
    if (net.size() < 2) throw ContractError("select_winners: network needs at least two nodes");
    const double sigma = net.mean_sigma();
    Winners w;
    w.first_cim = std::numeric_limits<double>::infinity();
    w.second_cim = std::numeric_limits<double>::infinity();
    for (std::size_t k = 0; k < net.size(); ++k) {
        const double c = cim(x, net.node(k).y, sigma);
        if (c < w.first_cim) {
            w.second = w.first;
            w.second_cim = w.first_cim;
            w.first = k;
            w.first_cim = c;
        } else if (c < w.second_cim) {
            w.second = k;
            w.second_cim = c;
        }
    }
    return w;
}

VigilanceCase vigilance_classify(double first_cim, double second_cim, double threshold) {
    if (first_cim > second_cim) {
        throw ContractError("vigilance_classify: first winner less similar than second");
    }
    if (threshold < first_cim) return VigilanceCase::NewNode;
    if (threshold < second_cim) return VigilanceCase::UpdateWinner;
    return VigilanceCase::UpdateBoth;
}

namespace {

void age_edges_of(TopoNetwork& net, std::size_t k) {
    const auto& nbrs = net.neighbors(k);
    if (nbrs.empty()) return;
    const double step = 1.0 / static_cast<double>(nbrs.size());
    std::vector<std::pair<std::size_t, double>> updates(nbrs.begin(), nbrs.end());
    for (const auto& [l, age] : updates) net.set_age(k, l, age + step);
}

void move_towards(Vec& y, std::span<const double> x, double rate) {
    for (std::size_t i = 0; i < y.size(); ++i) y[i] += rate * (x[i] - y[i]);
}

void update_first_winner(TopoNetwork& net, std::size_t k1, std::span<const double> x) {
    age_edges_of(net, k1);
    Node& n = net.node(k1);
    n.alpha += 1;
    move_towards(n.y, x, 1.0 / static_cast<double>(n.alpha));
}

}  // namespace

void learn_first_winner(TopoNetwork& net, std::size_t k1, std::size_t k2, std::span<const double> x) {
    update_first_winner(net, k1, x);
    net.connect(k1, k2);
}

void learn_both_winners(TopoNetwork& net, std::size_t k1, std::size_t k2, std::span<const double> x) {
    update_first_winner(net, k1, x);
    Node& second = net.node(k2);
    move_towards(second.y, x, 1.0 / (10.0 * static_cast<double>(second.alpha)));

    const auto& nbrs = net.neighbors(k1);
    if (!nbrs.empty()) {
        const double sigma = net.mean_sigma();
        const Vec& anchor = net.node(k1).y;
        std::size_t worst = nbrs.begin()->first;
        double worst_cim = -1.0;
        for (const auto& [l, age] : nbrs) {
            const double c = cim(net.node(l).y, anchor, sigma);
            if (c > worst_cim) {
                worst_cim = c;
                worst = l;
            }
        }
        if (net.age(k1, worst) > static_cast<double>(nbrs.size())) net.disconnect(k1, worst);
    }
    net.connect(k1, k2);
}

void train_ca(std::span<const Vec> instances, TopoNetwork& net, std::size_t lambda, double threshold) {
    if (lambda < 1) throw ContractError("train_ca: lambda must be positive");
    if (instances.empty()) return;

    // Until the first multiple of lambda the bandwidth comes from the leading
    // window (or everything, when fewer instances exist).
    double sigma = estimate_bandwidth(instances.first(std::min(lambda, instances.size())));

    for (std::size_t n = 0; n < instances.size(); ++n) {
        const std::size_t seen = n + 1;
        if (seen % lambda == 0) sigma = estimate_bandwidth(instances.subspan(seen - lambda, lambda));
        const Vec& x = instances[n];

        if (net.size() < 2) {
            // No pair of winners yet: instances become nodes, except exact repeats
            // of the single node, which it absorbs.
            if (net.size() == 1 && net.node(0).y == x) {
                net.node(0).alpha += 1;
            } else {
                net.add_node(x, sigma);
            }
            continue;
        }

        const Winners w = select_winners(x, net);
        switch (vigilance_classify(w.first_cim, w.second_cim, threshold)) {
            case VigilanceCase::NewNode:
                net.add_node(x, sigma);
                break;
            case VigilanceCase::UpdateWinner:
                learn_first_winner(net, w.first, w.second, x);
                break;
            case VigilanceCase::UpdateBoth:
                learn_both_winners(net, w.first, w.second, x);
                break;
        }
    }
}

ClusterLabeling connected_components(const TopoNetwork& net) {
    constexpr auto unset = std::numeric_limits<std::size_t>::max();
    ClusterLabeling out;
    out.label.assign(net.size(), unset);
    for (std::size_t start = 0; start < net.size(); ++start) {
        if (out.label[start] != unset) continue;
        const std::size_t id = out.count++;
        std::queue<std::size_t> frontier;
        frontier.push(start);
        out.label[start] = id;
        while (!frontier.empty()) {
            const std::size_t k = frontier.front();
            frontier.pop();
            for (const auto& [l, age] : net.neighbors(k)) {
                if (out.label[l] == unset) {
                    out.label[l] = id;
                    frontier.push(l);
                }
            }
        }
    }
    return out;
}

AdaptiveTraining adaptive_train_ca(std::span<const Vec> instances, std::size_t lambda, double threshold,
                                   std::size_t population_size) {
    if (instances.empty()) throw ContractError("adaptive_train_ca: no instances");
    const double n = static_cast<double>(population_size);
    const double lo = 0.75 * n;
    const double hi = 1.25 * n;
    auto in_range = [&](std::size_t count) {
        const double c = static_cast<double>(count);
        return lo <= c && c <= hi;
    };

    AdaptiveTraining out;
    if (static_cast<double>(instances.size()) <= hi) {
        out.threshold = 0.1;
        train_ca(instances, out.network, lambda, out.threshold);
        out.passes = 1;
        out.accepted = in_range(out.network.size());
        return out;
    }

    double upper = 1.0;
    double lower = 0.0;
    double v = threshold;
    for (int i = 0; i < 5; ++i) {
        out.network = TopoNetwork{};
        train_ca(instances, out.network, lambda, v);
        ++out.passes;
        const std::size_t count = out.network.size();
        if (in_range(count)) {
            out.accepted = true;
            break;
        }
        if (static_cast<double>(count) < lo) {
            upper = v;
        } else {
            lower = v;
        }
        v = 0.5 * (upper + lower);
    }
    out.threshold = v;
    return out;
}

std::string network_to_json(const TopoNetwork& net) {
    nlohmann::json doc;
    doc["nodes"] = nlohmann::json::array();
    for (std::size_t k = 0; k < net.size(); ++k) {
        const Node& n = net.node(k);
        doc["nodes"].push_back({{"id", k}, {"y", n.y}, {"sigma", n.sigma}, {"alpha", n.alpha}});
    }
    doc["edges"] = nlohmann::json::array();
    for (const auto& e : net.edges()) {
        doc["edges"].push_back({{"a", e.a}, {"b", e.b}, {"age", e.age}});
    }
    return doc.dump();
}

}  // namespace rveaca
