#pragma once

#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace rveaca {

using Vec = std::vector<double>;

/// Raised when a caller breaks a documented precondition.
class ContractError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

struct Bounds {
    Vec lower;
    Vec upper;

    std::size_t size() const { return lower.size(); }
    bool contains(std::span<const double> x) const;
    void clamp(Vec& x) const;

    static Bounds unit(std::size_t dim) { return {Vec(dim, 0.0), Vec(dim, 1.0)}; }
};

/// Decision vector plus its objective vector. `f` stays empty until evaluated.
struct Individual {
    Vec x;
    Vec f;

    bool evaluated() const { return !f.empty(); }
    bool operator==(const Individual&) const = default;
};

/// Members keep insertion order; every algorithm iterates front to back.
using Population = std::vector<Individual>;

/// Componentwise minimum over every objective vector observed so far.
class IdealPoint {
public:
    IdealPoint() = default;
    explicit IdealPoint(Vec z) : z_(std::move(z)) {}

    static IdealPoint of(const Population& pop);

    const Vec& values() const { return z_; }
    std::size_t size() const { return z_.size(); }
    double operator[](std::size_t i) const { return z_[i]; }
    bool operator==(const IdealPoint&) const = default;

private:
    Vec z_;
};

/// Pareto dominance for minimization: a <= b everywhere and a < b somewhere.
bool dominates(std::span<const double> a, std::span<const double> b);

IdealPoint update_ideal(const IdealPoint& z, std::span<const Vec> objectives);
IdealPoint update_ideal(const IdealPoint& z, const Population& pop);

/// Members not dominated by any other member, in original order. Duplicate
/// objective vectors are all kept.
Population nondominated_filter(const Population& pop);
std::vector<std::size_t> nondominated_indices(std::span<const Vec> objectives);

/// Concatenation that drops members whose decision vector already appeared.
Population merge_unique(const Population& a, const Population& b);

std::vector<Vec> objectives_of(const Population& pop);

double norm(std::span<const double> v);

}  // namespace rveaca
