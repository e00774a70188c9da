#include "holescan/topology.hpp"

#include <algorithm>
#include <charconv>
#include <cinttypes>
#include <cstdio>
#include <deque>
#include <fstream>
#include <set>
#include <sstream>
#include <stdexcept>

#include "holescan/rng.hpp"

namespace holescan {

Topology::Topology(uint32_t node_count, std::vector<Edge> edges)
    : node_count_(node_count), edges_(std::move(edges)) {
    for (auto& e : edges_) {
        if (e.u > e.v) std::swap(e.u, e.v);
        if (e.u == e.v) throw std::invalid_argument("topology: self-loop on node " + std::to_string(e.u));
        if (e.v >= node_count_) throw std::invalid_argument("topology: edge endpoint " + std::to_string(e.v) + " out of range");
    }
    std::sort(edges_.begin(), edges_.end());
    if (std::adjacent_find(edges_.begin(), edges_.end()) != edges_.end())
        throw std::invalid_argument("topology: duplicate edge");
    adjacency_.resize(node_count_);
    for (const auto& e : edges_) {
        adjacency_[e.u].push_back(e.v);
        adjacency_[e.v].push_back(e.u);
    }
    for (auto& nbrs : adjacency_) std::sort(nbrs.begin(), nbrs.end());
}

double average_degree(const Topology& t) {
    if (t.node_count() == 0) throw std::invalid_argument("average_degree: empty topology");
    return 2.0 * static_cast<double>(t.edges().size()) / t.node_count();
}

std::vector<uint32_t> hop_distances(const Topology& t, std::span<const uint32_t> sources) {
    if (sources.empty()) throw std::invalid_argument("hop_distances: empty source set");
    std::vector<uint32_t> hops(t.node_count(), kUnreachable);
    std::deque<uint32_t> queue;
    for (uint32_t s : sources) {
        if (s >= t.node_count()) throw std::invalid_argument("hop_distances: source out of range");
        if (hops[s] != 0) {
            hops[s] = 0;
            queue.push_back(s);
        }
    }
    while (!queue.empty()) {
        uint32_t v = queue.front();
        queue.pop_front();
        for (uint32_t w : t.adjacency()[v]) {
            if (hops[w] == kUnreachable) {
                hops[w] = hops[v] + 1;
                queue.push_back(w);
            }
        }
    }
    return hops;
}

namespace {

[[noreturn]] void parse_fail(size_t line_no, const std::string& what) {
    throw std::runtime_error(what + " at line " + std::to_string(line_no));
}

bool parse_uint(std::string_view sv, uint64_t& out) {
    auto [p, ec] = std::from_chars(sv.data(), sv.data() + sv.size(), out);
    return ec == std::errc{} && p == sv.data() + sv.size();
}

std::vector<std::string_view> split_ws(std::string_view line) {
    std::vector<std::string_view> fields;
    size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
        size_t j = i;
        while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
        if (j > i) fields.push_back(line.substr(i, j - i));
        i = j;
    }
    return fields;
}

}  // namespace

Topology parse_edge_list(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    size_t line_no = 0;
    uint64_t n = 0;
    bool have_n = false;
    std::vector<Edge> edges;
    std::set<Edge> seen;
    while (std::getline(in, line)) {
        ++line_no;
        auto fields = split_ws(line);
        if (fields.empty()) continue;
        if (!have_n) {
            if (fields.size() != 1 || !parse_uint(fields[0], n)) parse_fail(line_no, "malformed node count");
            have_n = true;
            continue;
        }
        uint64_t u, v;
        if (fields.size() != 2 || !parse_uint(fields[0], u) || !parse_uint(fields[1], v))
            parse_fail(line_no, "malformed edge line");
        if (u == v) parse_fail(line_no, "self-loop");
        if (u > v) parse_fail(line_no, "edge endpoints not in u < v order");
        if (v >= n) parse_fail(line_no, "node ID out of range");
        Edge e{static_cast<uint32_t>(u), static_cast<uint32_t>(v)};
        if (!seen.insert(e).second) parse_fail(line_no, "duplicate edge");
        edges.push_back(e);
    }
    if (!have_n) throw std::runtime_error("malformed edge list: missing node count");
    return Topology(static_cast<uint32_t>(n), std::move(edges));
}

std::string serialize_edge_list(const Topology& t) {
    std::string out = std::to_string(t.node_count());
    out.push_back('\n');
    for (const auto& e : t.edges()) {
        out += std::to_string(e.u);
        out.push_back(' ');
        out += std::to_string(e.v);
        out.push_back('\n');
    }
    return out;
}

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write file: " + path);
    out << content;
    if (!out) throw std::runtime_error("write failed: " + path);
}

}  // namespace

Topology load_edge_list(const std::string& path) { return parse_edge_list(read_file(path)); }

void save_edge_list(const Topology& t, const std::string& path) {
    write_file(path, serialize_edge_list(t));
}

namespace {

bool inside_any_void(Vec2 p, const std::vector<Circle>& voids) {
    for (const auto& c : voids)
        if (c.contains(p)) return true;
    return false;
}

std::vector<Circle> sample_voids(Rng& rng, const HoleSpec& holes, const GeneratorOptions& opts) {
    std::vector<Circle> voids;
    for (uint32_t i = 0; i < holes.count; ++i) {
        bool placed = false;
        for (int attempt = 0; attempt < 500 && !placed; ++attempt) {
            const double r = rng.uniform(holes.radius_min, holes.radius_max);
            const double lo = r + opts.void_border_gap;
            const double hi = 1.0 - r - opts.void_border_gap;
            if (hi <= lo) break;  // radius too large for the unit square
            Circle c{{rng.uniform(lo, hi), rng.uniform(lo, hi)}, r};
            bool overlaps = false;
            for (const auto& other : voids) {
                if (distance(c.center, other.center) < c.radius + other.radius + opts.void_gap) {
                    overlaps = true;
                    break;
                }
            }
            if (!overlaps) {
                voids.push_back(c);
                placed = true;
            }
        }
        if (!placed)
            throw std::runtime_error("generate_topology: could not place void " + std::to_string(i) +
                                     " (radius range too large for the unit square)");
    }
    return voids;
}

uint32_t largest_component_size(const Topology& t) {
    std::vector<char> seen(t.node_count(), 0);
    uint32_t best = 0;
    std::vector<uint32_t> stack;
    for (uint32_t s = 0; s < t.node_count(); ++s) {
        if (seen[s]) continue;
        uint32_t size = 0;
        stack.push_back(s);
        seen[s] = 1;
        while (!stack.empty()) {
            uint32_t v = stack.back();
            stack.pop_back();
            ++size;
            for (uint32_t w : t.adjacency()[v]) {
                if (!seen[w]) {
                    seen[w] = 1;
                    stack.push_back(w);
                }
            }
        }
        best = std::max(best, size);
    }
    return best;
}

}  // namespace

std::pair<Topology, TruePlacement> generate_topology(uint32_t n, double d_target,
                                                     const HoleSpec& holes,
                                                     const GeneratorOptions& opts,
                                                     uint64_t seed) {
    if (n < 2) throw std::invalid_argument("generate_topology: need at least 2 nodes");
    if (d_target <= 0) throw std::invalid_argument("generate_topology: degree target must be positive");
    // The complete graph caps the achievable degree.
    const double d_eff = std::min(d_target, static_cast<double>(n - 1));

    std::string last_error = "no attempts made";
    for (int attempt = 0; attempt < opts.max_attempts; ++attempt) {
        Rng rng(mix_seed(seed, 0x746f706fu, static_cast<uint64_t>(attempt)));
        std::vector<Circle> voids = sample_voids(rng, holes, opts);

        std::vector<Vec2> pos(n);
        for (auto& p : pos) {
            p = {rng.uniform(), rng.uniform()};
            while (inside_any_void(p, voids)) p = {rng.uniform(), rng.uniform()};
        }

        // All pairwise distances, sorted, so each bisection probe is a binary search.
        std::vector<double> dists;
        dists.reserve(static_cast<size_t>(n) * (n - 1) / 2);
        for (uint32_t i = 0; i < n; ++i)
            for (uint32_t j = i + 1; j < n; ++j) dists.push_back(distance(pos[i], pos[j]));
        std::sort(dists.begin(), dists.end());

        auto degree_at = [&](double rc) {
            auto m = std::upper_bound(dists.begin(), dists.end(), rc) - dists.begin();
            return 2.0 * static_cast<double>(m) / n;
        };

        double lo = 0.0, hi = std::sqrt(2.0), rc = hi;
        bool ok = false;
        for (int it = 0; it < 200; ++it) {
            rc = 0.5 * (lo + hi);
            const double d = degree_at(rc);
            if (std::abs(d - d_eff) <= opts.degree_tolerance) {
                ok = true;
                break;
            }
            (d < d_eff ? lo : hi) = rc;
        }
        if (!ok && std::abs(degree_at(hi) - d_eff) <= opts.degree_tolerance) {
            rc = std::sqrt(2.0);
            ok = true;
        }
        if (!ok) {
            char buf[128];
            std::snprintf(buf, sizeof(buf),
                          "degree target %.3f unreachable by bisection (achieved %.3f)", d_target,
                          degree_at(rc));
            last_error = buf;
            continue;
        }

        std::vector<Edge> edges;
        for (uint32_t i = 0; i < n; ++i)
            for (uint32_t j = i + 1; j < n; ++j)
                if (distance(pos[i], pos[j]) <= rc) edges.push_back({i, j});

        Topology topo(n, std::move(edges));
        if (largest_component_size(topo) < opts.min_giant_fraction * n) {
            last_error = "largest connected component below " +
                         std::to_string(opts.min_giant_fraction * 100) + "% of nodes";
            continue;
        }

        TruePlacement placement;
        placement.positions = std::move(pos);
        placement.comm_range = rc;
        placement.sensing_range = opts.rs_world_override > 0 ? opts.rs_world_override
                                                             : opts.rs_factor * rc;
        placement.voids = std::move(voids);
        return {std::move(topo), std::move(placement)};
    }
    throw std::runtime_error("generate_topology: retry budget exhausted; last failure: " + last_error);
}

std::string serialize_placement_csv(std::span<const Vec2> positions) {
    std::string out = "id,x,y\n";
    char buf[96];
    for (size_t i = 0; i < positions.size(); ++i) {
        std::snprintf(buf, sizeof(buf), "%zu,%.17g,%.17g\n", i, positions[i].x, positions[i].y);
        out += buf;
    }
    return out;
}

std::vector<Vec2> parse_placement_csv(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    if (!std::getline(in, line)) throw std::runtime_error("placement csv: empty file");
    auto strip = [](std::string s) {
        while (!s.empty() && (s.back() == '\r' || s.back() == ' ')) s.pop_back();
        return s;
    };
    if (strip(line) != "id,x,y") throw std::runtime_error("placement csv: expected header id,x,y");
    std::vector<Vec2> positions;
    size_t line_no = 1;
    while (std::getline(in, line)) {
        ++line_no;
        line = strip(line);
        if (line.empty()) continue;
        uint64_t id;
        double x, y;
        if (std::sscanf(line.c_str(), "%" SCNu64 ",%lf,%lf", &id, &x, &y) != 3)
            parse_fail(line_no, "malformed placement row");
        if (id != positions.size()) parse_fail(line_no, "placement rows must be dense and ordered");
        positions.push_back({x, y});
    }
    return positions;
}

std::vector<Vec2> load_placement_csv(const std::string& path) {
    return parse_placement_csv(read_file(path));
}

void save_placement_csv(std::span<const Vec2> positions, const std::string& path) {
    write_file(path, serialize_placement_csv(positions));
}

}  // namespace holescan
