#pragma once

#include <cstdint>
#include <limits>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "holescan/geometry.hpp"

namespace holescan {

struct Edge {
    uint32_t u = 0;  // always u < v
    uint32_t v = 0;

    friend bool operator==(const Edge&, const Edge&) = default;
    friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Pure connectivity graph: dense node IDs 0..n-1 plus an undirected edge set.
/// Edges are stored canonically (u < v, sorted, no duplicates, no self-loops).
class Topology {
public:
    Topology(uint32_t node_count, std::vector<Edge> edges);

    uint32_t node_count() const { return node_count_; }
    const std::vector<Edge>& edges() const { return edges_; }
    const std::vector<std::vector<uint32_t>>& adjacency() const { return adjacency_; }
    uint32_t degree(uint32_t v) const { return static_cast<uint32_t>(adjacency_[v].size()); }

    bool operator==(const Topology& o) const {
        return node_count_ == o.node_count_ && edges_ == o.edges_;
    }

private:
    uint32_t node_count_;
    std::vector<Edge> edges_;
    std::vector<std::vector<uint32_t>> adjacency_;
};

/// d = 2*|edges|/n. Throws on an empty node set.
double average_degree(const Topology& t);

/// Hop count returned for nodes unreachable from every source.
inline constexpr uint32_t kUnreachable = std::numeric_limits<uint32_t>::max();

/// Multi-source BFS hop counts. Throws if sources is empty or contains an
/// out-of-range ID.
std::vector<uint32_t> hop_distances(const Topology& t, std::span<const uint32_t> sources);

inline std::vector<uint32_t> hop_distances(const Topology& t, uint32_t source) {
    return hop_distances(t, std::span<const uint32_t>(&source, 1));
}

/// Edge-list text format: first line is the node count, every following
/// nonempty line is "u v" with 0 <= u < v < n. serialize writes edges sorted.
Topology parse_edge_list(const std::string& text);
std::string serialize_edge_list(const Topology& t);

Topology load_edge_list(const std::string& path);
void save_edge_list(const Topology& t, const std::string& path);

/// Ground-truth geometry behind a generated topology. Positions live in the
/// unit square; voids are the circles nodes were kept out of.
struct TruePlacement {
    std::vector<Vec2> positions;
    double sensing_range = 0.0;    // R_S, world units
    double comm_range = 0.0;       // R_C, world units
    std::vector<Circle> voids;
};

struct HoleSpec {
    uint32_t count = 3;
    double radius_min = 0.08;
    double radius_max = 0.15;
};

struct GeneratorOptions {
    double degree_tolerance = 0.25;
    /// R_S = rs_factor * R_C unless rs_world_override > 0.
    double rs_factor = 1.0;
    double rs_world_override = 0.0;
    /// Largest connected component must cover this fraction of nodes.
    double min_giant_fraction = 0.95;
    int max_attempts = 20;
    /// Minimum clearance between void circles and between a void and the
    /// unit-square border, so planted holes stay interior and separate.
    double void_gap = 0.08;
    double void_border_gap = 0.06;
};

/// Uniform placement in the unit square with circular voids; nodes landing in
/// a void are re-sampled outside all voids so the count stays n. Connectivity
/// is unit-disk: R_C is found by bisection until |2|E|/n - d_target| is within
/// degree_tolerance. Re-seeds and retries when the giant component is too
/// small. Fully deterministic for a given (args, seed).
std::pair<Topology, TruePlacement> generate_topology(uint32_t n, double d_target,
                                                     const HoleSpec& holes,
                                                     const GeneratorOptions& opts,
                                                     uint64_t seed);

/// Placement CSV: header "id,x,y", 17 significant digits (round-trip exact).
std::string serialize_placement_csv(std::span<const Vec2> positions);
std::vector<Vec2> parse_placement_csv(const std::string& text);
std::vector<Vec2> load_placement_csv(const std::string& path);
void save_placement_csv(std::span<const Vec2> positions, const std::string& path);

}  // namespace holescan
