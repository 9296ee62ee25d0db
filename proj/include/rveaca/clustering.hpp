#pragma once

// CIM-based ART clustering with a topological network of aged edges.

#include <cstddef>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "rveaca/core.hpp"

namespace rveaca {

/// Smallest kernel bandwidth handed out; zero-variance windows collapse to it.
inline constexpr double kBandwidthFloor = 1e-6;

struct Node {
    Vec y;
    double sigma = 1.0;     ///< kernel bandwidth, fixed at creation
    std::size_t alpha = 1;  ///< winner count
};

struct Edge {
    std::size_t a = 0;
    std::size_t b = 0;
    double age = 0.0;
};

/// Node ids are dense indices; nodes are never removed.
class TopoNetwork {
public:
    std::size_t add_node(Vec y, double sigma);

    std::size_t size() const { return nodes_.size(); }
    bool empty() const { return nodes_.empty(); }
    const Node& node(std::size_t k) const { return nodes_.at(k); }
    Node& node(std::size_t k) { return nodes_.at(k); }
    const std::vector<Node>& nodes() const { return nodes_; }

    /// Inserts edge {a,b} or resets its age to zero.
    void connect(std::size_t a, std::size_t b);
    void disconnect(std::size_t a, std::size_t b);
    bool connected(std::size_t a, std::size_t b) const;
    double age(std::size_t a, std::size_t b) const;
    void set_age(std::size_t a, std::size_t b, double age);

    /// Neighbour id -> edge age.
    const std::map<std::size_t, double>& neighbors(std::size_t k) const { return adjacency_.at(k); }
    std::size_t edge_count() const;
    std::vector<Edge> edges() const;

    /// Arithmetic mean of all node bandwidths.
    double mean_sigma() const;

    std::vector<Vec> positions() const;

private:
    std::vector<Node> nodes_;
    std::vector<std::map<std::size_t, double>> adjacency_;
};

/// Correntropy-induced metric with a Gaussian kernel; lies in [0, 1].
double cim(std::span<const double> x, std::span<const double> y, double sigma);

/// Kernel bandwidth from a window of instances: per-dimension rule-of-thumb
/// bandwidth (Gaussian kernel, order 2), reduced to its median.
double estimate_bandwidth(std::span<const Vec> window);

struct Winners {
    std::size_t first = 0;
    std::size_t second = 0;
    double first_cim = 0.0;
    double second_cim = 0.0;
};

/// Two most similar nodes under CIM with the network's mean bandwidth.
/// Ties go to the lower node id. Requires at least two nodes.
Winners select_winners(std::span<const double> x, const TopoNetwork& net);

enum class VigilanceCase {
    NewNode,       ///< V < CIM to 1st winner
    UpdateWinner,  ///< 1st winner resonates, 2nd does not
    UpdateBoth,    ///< both winners resonate
};

VigilanceCase vigilance_classify(double first_cim, double second_cim, double threshold);

/// Learning step when only the first winner passes vigilance.
void learn_first_winner(TopoNetwork& net, std::size_t k1, std::size_t k2, std::span<const double> x);

/// Learning step when both winners pass vigilance; may prune one aged edge of k1.
void learn_both_winners(TopoNetwork& net, std::size_t k1, std::size_t k2, std::span<const double> x);

/// One ordered pass over `instances`.
void train_ca(std::span<const Vec> instances, TopoNetwork& net, std::size_t lambda, double threshold);

struct ClusterLabeling {
    std::vector<std::size_t> label;  ///< node id -> component id, ids numbered by lowest member
    std::size_t count = 0;
};

ClusterLabeling connected_components(const TopoNetwork& net);

struct AdaptiveTraining {
    TopoNetwork network;
    double threshold = 0.1;  ///< threshold to inherit next time
    std::size_t passes = 0;
    bool accepted = false;   ///< node count landed inside the target window
};

/// Trains from an empty network, bisecting the threshold (at most five passes)
/// until the node count falls in [0.75N, 1.25N].
AdaptiveTraining adaptive_train_ca(std::span<const Vec> instances, std::size_t lambda, double threshold,
                                   std::size_t population_size);

/// {"nodes": [{id, y, sigma, alpha}], "edges": [{a, b, age}]}
std::string network_to_json(const TopoNetwork& net);

}  // namespace rveaca
