#include "scimap/layout.hpp"

#include "scimap/error.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <numbers>
#include <numeric>
#include <random>

namespace scimap {

void LayoutParams::validate() const {
    if (!(side > 0.0) || !std::isfinite(side)) throw Error(ErrorKind::InvalidArgument, "layout side must be > 0");
    if (!(tol > 0.0)) throw Error(ErrorKind::InvalidArgument, "layout tolerance must be > 0");
    if (!(spring_k > 0.0)) throw Error(ErrorKind::InvalidArgument, "spring constant must be > 0");
    if (max_inner < 1) throw Error(ErrorKind::InvalidArgument, "max_inner must be >= 1");
}

int ComponentDistances::diameter() const {
    return hops.empty() ? 0 : *std::max_element(hops.begin(), hops.end());
}

std::vector<ComponentDistances> hop_distances(const HeteroGraph& g) {
    const auto adj = adjacency(g);
    std::vector<ComponentDistances> out;
    std::vector<std::size_t> local(g.node_count(), 0);

    for (auto& members : components_by_first_member(g)) {
        ComponentDistances cd;
        cd.nodes = std::move(members);
        const std::size_t n = cd.nodes.size();
        for (std::size_t k = 0; k < n; ++k) local[cd.nodes[k]] = k;
        cd.hops.assign(n * n, -1);

        for (std::size_t s = 0; s < n; ++s) {
            int* row = cd.hops.data() + s * n;
            row[s] = 0;
            std::deque<std::size_t> queue{cd.nodes[s]};
            while (!queue.empty()) {
                const auto v = queue.front();
                queue.pop_front();
                for (auto w : adj[v]) {
                    auto& d = row[local[w]];
                    if (d < 0) {
                        d = row[local[v]] + 1;
                        queue.push_back(w);
                    }
                }
            }
        }
        out.push_back(std::move(cd));
    }
    return out;
}

SpringModel::SpringModel(const ComponentDistances& dist, const LayoutParams& params)
    : n_(dist.size()), min_separation_(1e-12 * params.side), length_(n_ * n_, 0.0), strength_(n_ * n_, 0.0) {
    const int diameter = dist.diameter();
    if (diameter <= 0) return;
    const double unit = params.side / diameter;
    for (std::size_t i = 0; i < n_; ++i) {
        for (std::size_t j = 0; j < n_; ++j) {
            if (i == j) continue;
            const double d = dist.at(i, j);
            length_[i * n_ + j] = unit * d;
            strength_[i * n_ + j] = params.spring_k / (d * d);
        }
    }
}

double SpringModel::energy(std::span<const Point> pos) const {
    double e = 0.0;
    for (std::size_t i = 0; i < n_; ++i) {
        for (std::size_t j = i + 1; j < n_; ++j) {
            const double r = std::hypot(pos[i].x - pos[j].x, pos[i].y - pos[j].y) - ideal_length(i, j);
            e += 0.5 * stiffness(i, j) * r * r;
        }
    }
    return e;
}

double SpringModel::node_energy(std::span<const Point> pos, std::size_t m, Point at) const {
    double e = 0.0;
    for (std::size_t i = 0; i < n_; ++i) {
        if (i == m) continue;
        const double r = std::hypot(at.x - pos[i].x, at.y - pos[i].y) - ideal_length(m, i);
        e += 0.5 * stiffness(m, i) * r * r;
    }
    return e;
}

Point SpringModel::gradient(std::span<const Point> pos, std::size_t m) const {
    Point g;
    for (std::size_t i = 0; i < n_; ++i) {
        if (i == m) continue;
        const double dx = pos[m].x - pos[i].x;
        const double dy = pos[m].y - pos[i].y;
        const double d = std::max(std::hypot(dx, dy), min_separation_);
        const double c = stiffness(m, i) * (1.0 - ideal_length(m, i) / d);
        g.x += c * dx;
        g.y += c * dy;
    }
    return g;
}

std::array<double, 3> SpringModel::hessian(std::span<const Point> pos, std::size_t m) const {
    double xx = 0.0;
    double xy = 0.0;
    double yy = 0.0;
    for (std::size_t i = 0; i < n_; ++i) {
        if (i == m) continue;
        const double dx = pos[m].x - pos[i].x;
        const double dy = pos[m].y - pos[i].y;
        const double d = std::max(std::hypot(dx, dy), min_separation_);
        const double k = stiffness(m, i);
        const double l_over_d3 = ideal_length(m, i) / (d * d * d);
        xx += k * (1.0 - l_over_d3 * dy * dy);
        xy += k * l_over_d3 * dx * dy;
        yy += k * (1.0 - l_over_d3 * dx * dx);
    }
    return {xx, xy, yy};
}

std::string_view to_string(LayoutStatus status) {
    switch (status) {
    case LayoutStatus::Converged: return "converged";
    case LayoutStatus::IterationCap: return "iteration-cap";
    case LayoutStatus::Stalled: return "stalled";
    }
    return "unknown";
}

namespace {

// Portable uniform draw in [0, 1); std::uniform_real_distribution is not
// specified bit-for-bit across standard libraries.
double unit_draw(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

std::uint64_t mix(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

double norm(Point p) {
    return std::hypot(p.x, p.y);
}

struct Relaxer {
    const SpringModel& model;
    Positions& pos;
    const StepObserver& observer;
    std::size_t fallback_steps = 0;

    void accept(std::size_t m, Point to, double e0, bool fallback) {
        pos[m] = to;
        if (observer) observer({m, e0, model.node_energy(pos, m, to), fallback});
    }

    // One descent move of node m. Returns false when neither the Newton step
    // nor the backtracking gradient step lowers the energy.
    bool step(std::size_t m, Point g) {
        const auto [hxx, hxy, hyy] = model.hessian(pos, m);
        const double det = hxx * hyy - hxy * hxy;
        const double e0 = model.node_energy(pos, m, pos[m]);
        const Point here = pos[m];

        if (hxx > 0.0 && hyy > 0.0 && det > 1e-12 * hxx * hyy) {
            const double sx = -(hyy * g.x - hxy * g.y) / det;
            const double sy = -(hxx * g.y - hxy * g.x) / det;
            double t = 1.0;
            for (int halvings = 0; halvings <= 20; ++halvings, t *= 0.5) {
                const Point cand{here.x + t * sx, here.y + t * sy};
                if (model.node_energy(pos, m, cand) <= e0 + 1e-12) {
                    accept(m, cand, e0, false);
                    return true;
                }
            }
        }

        ++fallback_steps;
        double curvature = 0.0;
        for (std::size_t i = 0; i < model.size(); ++i) {
            if (i != m) curvature += model.stiffness(m, i);
        }
        const double gg = g.x * g.x + g.y * g.y;
        double alpha = 1.0 / curvature;
        for (int halvings = 0; halvings <= 20; ++halvings, alpha *= 0.5) {
            const Point cand{here.x - alpha * g.x, here.y - alpha * g.y};
            if (model.node_energy(pos, m, cand) <= e0 - 1e-4 * alpha * gg) {
                accept(m, cand, e0, true);
                return true;
            }
        }
        return false;
    }
};

} // namespace

Positions initial_positions(std::size_t n, const LayoutParams& params, std::uint64_t stream) {
    std::mt19937_64 rng(mix(params.seed) ^ mix(stream + 0x5EED));
    const double radius = params.side / 2.0;
    const double sector = 2.0 * std::numbers::pi / static_cast<double>(std::max<std::size_t>(n, 1));
    const double offset = 2.0 * std::numbers::pi * unit_draw(rng);

    Positions pos(n);
    for (std::size_t r = 0; r < n; ++r) {
        const double angle = offset + sector * static_cast<double>(r) + 0.25 * sector * (unit_draw(rng) - 0.5);
        const double rad = radius * (1.0 + 0.1 * (unit_draw(rng) - 0.5));
        pos[r] = {rad * std::cos(angle), rad * std::sin(angle)};
    }

    const double jitter = 1e-6 * params.side;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            if (std::hypot(pos[i].x - pos[j].x, pos[i].y - pos[j].y) < jitter) {
                const double a = 2.0 * std::numbers::pi * unit_draw(rng);
                pos[j].x += jitter * std::cos(a);
                pos[j].y += jitter * std::sin(a);
            }
        }
    }
    return pos;
}

ComponentLayout kk_layout_component(const ComponentDistances& dist, const LayoutParams& params,
                                    std::uint64_t stream, const StepObserver& observer) {
    params.validate();
    ComponentLayout out;
    out.nodes = dist.nodes;
    const std::size_t n = dist.size();
    if (n <= 1) {
        out.local.assign(n, Point{});
        return out;
    }

    const SpringModel model(dist, params);
    out.local = initial_positions(n, params, stream);
    auto& pos = out.local;
    Relaxer relax{model, pos, observer};

    std::vector<Point> grad(n);
    auto refresh = [&] {
        for (std::size_t i = 0; i < n; ++i) grad[i] = model.gradient(pos, i);
    };
    auto steepest = [&] {
        std::size_t best = 0;
        for (std::size_t i = 1; i < n; ++i) {
            if (norm(grad[i]) > norm(grad[best])) best = i;
        }
        return best;
    };
    refresh();

    const std::size_t max_outer = params.max_outer ? params.max_outer : 1000 * n;
    out.status = LayoutStatus::IterationCap;
    while (true) {
        std::size_t m = steepest();
        if (norm(grad[m]) < params.tol) {
            // Cached gradients are updated incrementally; certify with a fresh pass.
            refresh();
            m = steepest();
            if (norm(grad[m]) < params.tol) {
                out.status = LayoutStatus::Converged;
                break;
            }
        }
        if (out.iterations >= max_outer) break;
        ++out.iterations;

        const Point before = pos[m];
        bool moved = false;
        for (std::size_t inner = 0; inner < params.max_inner; ++inner) {
            const Point g = model.gradient(pos, m);
            if (norm(g) < params.tol) break;
            if (!relax.step(m, g)) break;
            moved = true;
        }

        if (!moved) {
            refresh();
            if (norm(grad[m]) >= params.tol) {
                out.status = LayoutStatus::Stalled;
                break;
            }
            continue;
        }

        // Only the pair terms involving m changed.
        for (std::size_t i = 0; i < n; ++i) {
            if (i == m) continue;
            auto pair_term = [&](Point pm) {
                const double dx = pos[i].x - pm.x;
                const double dy = pos[i].y - pm.y;
                const double d = std::max(std::hypot(dx, dy), 1e-12 * params.side);
                const double c = model.stiffness(i, m) * (1.0 - model.ideal_length(i, m) / d);
                return Point{c * dx, c * dy};
            };
            const Point old_term = pair_term(before);
            const Point new_term = pair_term(pos[m]);
            grad[i].x += new_term.x - old_term.x;
            grad[i].y += new_term.y - old_term.y;
        }
        grad[m] = model.gradient(pos, m);
    }

    refresh();
    out.max_gradient = norm(grad[steepest()]);
    out.energy = model.energy(pos);
    out.fallback_steps = relax.fallback_steps;
    return out;
}

Positions pack_components(std::span<const ComponentLayout> components, double side, std::size_t node_count) {
    struct Box {
        double min_x, min_y, width, height;
    };
    std::vector<Box> boxes;
    boxes.reserve(components.size());
    for (const auto& c : components) {
        if (c.local.empty()) {
            boxes.push_back({0, 0, 0, 0});
            continue;
        }
        double lo_x = c.local[0].x, hi_x = lo_x, lo_y = c.local[0].y, hi_y = lo_y;
        for (const auto& p : c.local) {
            lo_x = std::min(lo_x, p.x);
            hi_x = std::max(hi_x, p.x);
            lo_y = std::min(lo_y, p.y);
            hi_y = std::max(hi_y, p.y);
        }
        boxes.push_back({lo_x, lo_y, hi_x - lo_x, hi_y - lo_y});
    }

    std::vector<std::size_t> order(components.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        const double area_a = boxes[a].width * boxes[a].height;
        const double area_b = boxes[b].width * boxes[b].height;
        if (area_a != area_b) return area_a > area_b;
        return components[a].nodes.size() > components[b].nodes.size();
    });

    const double padding = 0.25 * side;
    const double wrap = 2.0 * side * std::sqrt(static_cast<double>(components.size()));
    double x = 0.0;
    double y = 0.0;
    double shelf_height = 0.0;

    Positions out(node_count);
    for (auto idx : order) {
        const auto& box = boxes[idx];
        if (x > 0.0 && x + box.width > wrap) {
            y += shelf_height + padding;
            x = 0.0;
            shelf_height = 0.0;
        }
        const double dx = x - box.min_x;
        const double dy = y - box.min_y;
        const auto& c = components[idx];
        for (std::size_t k = 0; k < c.nodes.size(); ++k) {
            out.at(c.nodes[k]) = {c.local[k].x + dx, c.local[k].y + dy};
        }
        x += box.width + padding;
        shelf_height = std::max(shelf_height, box.height);
    }
    return out;
}

LayoutResult kk_layout(const HeteroGraph& g, const LayoutParams& params) {
    params.validate();
    if (g.node_count() == 0) throw Error(ErrorKind::InvalidArgument, "cannot lay out an empty graph");

    const auto dists = hop_distances(g);
    std::vector<ComponentLayout> layouts;
    layouts.reserve(dists.size());
    LayoutResult result;
    for (std::size_t c = 0; c < dists.size(); ++c) {
        layouts.push_back(kk_layout_component(dists[c], params, c));
        const auto& l = layouts.back();
        result.energy += l.energy;
        result.iterations += l.iterations;
        result.fallback_steps += l.fallback_steps;
        result.status = std::max(result.status, l.status);
    }
    result.component_count = layouts.size();
    result.positions = pack_components(layouts, params.side, g.node_count());
    return result;
}

} // namespace scimap
