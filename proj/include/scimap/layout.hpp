#ifndef SCIMAP_LAYOUT_HPP
#define SCIMAP_LAYOUT_HPP

#include "scimap/simgraph.hpp"

#include <array>
#include <cstdint>
#include <functional>
#include <string_view>
#include <span>
#include <vector>

namespace scimap {

struct Point {
    double x = 0.0;
    double y = 0.0;

    bool operator==(const Point&) const = default;
};

using Positions = std::vector<Point>;

struct LayoutParams {
    double side = 1.0;           ///< display span of a component
    double spring_k = 1.0;       ///< spring constant K; stiffness is K / d^2
    double tol = 1e-4;           ///< bound on the largest per-node gradient norm
    std::size_t max_outer = 0;   ///< 0 selects 1000 * n for a component of n nodes
    std::size_t max_inner = 50;  ///< Newton steps per selected node
    std::uint64_t seed = 0;

    /// Throws Error(InvalidArgument) on a non-positive side/tol or zero inner cap.
    void validate() const;
};

/// All-pairs hop counts within one connected component. `nodes` holds global
/// node ids in ascending order; `hops` is row-major over local indices.
struct ComponentDistances {
    std::vector<std::size_t> nodes;
    std::vector<int> hops;

    std::size_t size() const { return nodes.size(); }
    int at(std::size_t i, std::size_t j) const { return hops[i * nodes.size() + j]; }
    int diameter() const;
};

/// BFS distances per connected component; components ordered by smallest member.
std::vector<ComponentDistances> hop_distances(const HeteroGraph& g);

/// Kamada-Kawai spring energy of one component:
///   E = sum_{i<j} 1/2 k_ij (|p_i - p_j| - l_ij)^2,
///   l_ij = (side / diameter) * d_ij,  k_ij = K / d_ij^2.
class SpringModel {
public:
    SpringModel(const ComponentDistances& dist, const LayoutParams& params);

    std::size_t size() const { return n_; }
    double ideal_length(std::size_t i, std::size_t j) const { return length_[i * n_ + j]; }
    double stiffness(std::size_t i, std::size_t j) const { return strength_[i * n_ + j]; }

    double energy(std::span<const Point> pos) const;
    /// Terms of E that involve node m, evaluated with m placed at `at`.
    double node_energy(std::span<const Point> pos, std::size_t m, Point at) const;
    /// (dE/dx_m, dE/dy_m).
    Point gradient(std::span<const Point> pos, std::size_t m) const;
    /// Second derivatives of E in node m's coordinates: {xx, xy, yy}.
    std::array<double, 3> hessian(std::span<const Point> pos, std::size_t m) const;

private:
    std::size_t n_ = 0;
    double min_separation_ = 0.0;
    std::vector<double> length_;
    std::vector<double> strength_;
};

enum class LayoutStatus { Converged, IterationCap, Stalled };

std::string_view to_string(LayoutStatus status);

/// Relaxed coordinates of one component, in its own frame.
struct ComponentLayout {
    std::vector<std::size_t> nodes; ///< global ids
    Positions local;
    double energy = 0.0;
    double max_gradient = 0.0;
    std::size_t iterations = 0;
    std::size_t fallback_steps = 0;
    LayoutStatus status = LayoutStatus::Converged;
};

/// One accepted move of the selected node.
struct RelaxStep {
    std::size_t node = 0;    ///< local index
    double energy_before = 0.0;
    double energy_after = 0.0;
    bool fallback = false;   ///< gradient step taken instead of Newton
};

using StepObserver = std::function<void(const RelaxStep&)>;

/// Seeded circular start: radius side/2, angle 2*pi*rank/n plus seed-derived
/// perturbations; coincident points are pulled apart by 1e-6 * side.
Positions initial_positions(std::size_t n, const LayoutParams& params, std::uint64_t stream);

/// Relaxes one component. `stream` decorrelates the initial perturbation of
/// different components sharing a seed.
ComponentLayout kk_layout_component(const ComponentDistances& dist, const LayoutParams& params,
                                    std::uint64_t stream = 0, const StepObserver& observer = {});

/// Shelf-packs component layouts (largest bounding box first, left to right,
/// padding 0.25 * side, new shelf past 2 * side * sqrt(#components)). Only
/// translations are applied. Returns positions indexed by global node id.
Positions pack_components(std::span<const ComponentLayout> components, double side, std::size_t node_count);

struct LayoutResult {
    Positions positions;
    double energy = 0.0;
    std::size_t iterations = 0;
    std::size_t fallback_steps = 0;
    LayoutStatus status = LayoutStatus::Converged; ///< worst over components
    std::size_t component_count = 0;
};

/// Per-component Kamada-Kawai relaxation followed by component packing.
/// Throws Error(InvalidArgument) for an empty graph or invalid params.
LayoutResult kk_layout(const HeteroGraph& g, const LayoutParams& params);

} // namespace scimap

#endif
