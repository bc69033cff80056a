#pragma once

#include "ordcalc/scalar.hpp"

#include <cmath>
#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace ordcalc::netamp {

using ::ordcalc::GaussianRational;
using ::ordcalc::Scalar;

struct Edge {
    int id = 0;
    int domain = 0;  // colors 1..domain
};

// Edge-colored network: vertices list their incident edges in cyclic order
// (as given by a plane embedding, when there is one); an edge that appears in
// only one vertex list is a boundary edge. `fixed` pins boundary or measured
// edges to a color.
struct Network {
    std::vector<Edge> edges;
    std::vector<std::vector<int>> vertices;  // edge ids in cyclic order
    std::map<int, int> fixed;                // edge id -> color
};

// Weight of a vertex given the colors of its incident edges in cyclic order.
using VertexRule = std::function<Scalar(std::size_t vertex, const std::vector<int>& colors)>;

struct Amplitude {
    Scalar value;
    unsigned long long colorings = 0;  // product of free-edge domain sizes
};

namespace detail {

struct NetIndex {
    std::map<int, std::size_t> edge_index;                // id -> position in edges
    std::vector<std::vector<std::size_t>> edge_vertices;  // edge pos -> incident vertex numbers
};

inline NetIndex validate(const Network& net) {
    NetIndex idx;
    for (std::size_t e = 0; e < net.edges.size(); ++e) {
        if (net.edges[e].domain < 1) throw std::invalid_argument("Network: edge domain must be >= 1");
        if (!idx.edge_index.emplace(net.edges[e].id, e).second)
            throw std::invalid_argument("Network: duplicate edge id");
    }
    idx.edge_vertices.assign(net.edges.size(), {});
    for (std::size_t v = 0; v < net.vertices.size(); ++v) {
        for (int id : net.vertices[v]) {
            auto it = idx.edge_index.find(id);
            if (it == idx.edge_index.end())
                throw std::invalid_argument("Network: vertex references unknown edge id");
            idx.edge_vertices[it->second].push_back(v);
        }
    }
    for (std::size_t e = 0; e < net.edges.size(); ++e) {
        const std::size_t ends = idx.edge_vertices[e].size();
        if (ends != 1 && ends != 2)
            throw std::invalid_argument("Network: every edge must meet one or two vertices");
    }
    for (const auto& [id, color] : net.fixed) {
        auto it = idx.edge_index.find(id);
        if (it == idx.edge_index.end()) throw std::invalid_argument("Network: fixed color on unknown edge");
        if (color < 1 || color > net.edges[it->second].domain)
            throw std::invalid_argument("Network: fixed color outside edge domain");
    }
    return idx;
}

}  // namespace detail

inline void validate(const Network& net) { detail::validate(net); }

// Z(N): the sum over all colorings extending `fixed` of the product of vertex
// weights. Depth-first over free edges; a branch whose partial product is
// already zero is skipped, which cannot change the exact sum.
inline Amplitude partition_function(const Network& net, const VertexRule& rule) {
    detail::NetIndex idx = detail::validate(net);

    std::vector<int> color(net.edges.size(), 0);
    std::vector<std::size_t> free_edges;
    unsigned long long colorings = 1;
    for (std::size_t e = 0; e < net.edges.size(); ++e) {
        auto it = net.fixed.find(net.edges[e].id);
        if (it != net.fixed.end()) {
            color[e] = it->second;
        } else {
            free_edges.push_back(e);
            const unsigned long long dom = static_cast<unsigned long long>(net.edges[e].domain);
            if (colorings > (1ull << 62) / dom)
                throw std::invalid_argument("partition_function: coloring space too large");
            colorings *= dom;
        }
    }

    std::vector<int> remaining(net.vertices.size(), 0);
    for (std::size_t v = 0; v < net.vertices.size(); ++v)
        for (int id : net.vertices[v])
            if (color[idx.edge_index[id]] == 0) ++remaining[v];

    auto vertex_weight = [&](std::size_t v) {
        std::vector<int> colors;
        colors.reserve(net.vertices[v].size());
        for (int id : net.vertices[v]) colors.push_back(color[idx.edge_index[id]]);
        return rule(v, colors);
    };

    Scalar base(1);
    for (std::size_t v = 0; v < net.vertices.size(); ++v)
        if (remaining[v] == 0) base *= vertex_weight(v);

    Scalar total;
    auto recurse = [&](auto&& self, std::size_t next, const Scalar& prod) -> void {
        if (prod.is_zero()) return;
        if (next == free_edges.size()) {
            total += prod;
            return;
        }
        const std::size_t e = free_edges[next];
        for (int c = 1; c <= net.edges[e].domain; ++c) {
            color[e] = c;
            Scalar p = prod;
            for (std::size_t v : idx.edge_vertices[e])
                if (--remaining[v] == 0) p *= vertex_weight(v);
            self(self, next + 1, p);
            for (std::size_t v : idx.edge_vertices[e]) ++remaining[v];
        }
        color[e] = 0;
    };
    recurse(recurse, 0, base);
    return {std::move(total), colorings};
}

// Full enumeration without pruning; the oracle counterpart of
// partition_function. Visits every complete coloring in odometer order and,
// when a visitor is given, reports each coloring (colors by edge position)
// with its weight.
inline Amplitude partition_function_brute_force(
    const Network& net, const VertexRule& rule,
    const std::function<void(const std::vector<int>&, const Scalar&)>& visit = nullptr) {
    detail::NetIndex idx = detail::validate(net);
    std::vector<int> color(net.edges.size(), 0);
    std::vector<std::size_t> free_edges;
    unsigned long long colorings = 1;
    for (std::size_t e = 0; e < net.edges.size(); ++e) {
        auto it = net.fixed.find(net.edges[e].id);
        if (it != net.fixed.end()) {
            color[e] = it->second;
        } else {
            free_edges.push_back(e);
            colorings *= static_cast<unsigned long long>(net.edges[e].domain);
            if (colorings > 100000000ull)
                throw std::length_error("partition brute force: coloring space too large");
        }
    }
    Scalar total;
    std::vector<int> digits(free_edges.size(), 1);
    while (true) {
        for (std::size_t k = 0; k < free_edges.size(); ++k) color[free_edges[k]] = digits[k];
        Scalar w(1);
        for (std::size_t v = 0; v < net.vertices.size() && !w.is_zero(); ++v) {
            std::vector<int> colors;
            colors.reserve(net.vertices[v].size());
            for (int id : net.vertices[v]) colors.push_back(color[idx.edge_index[id]]);
            w *= rule(v, colors);
        }
        if (visit) visit(color, w);
        total += w;
        std::size_t k = 0;
        while (k < digits.size() && ++digits[k] > net.edges[free_edges[k]].domain) digits[k++] = 1;
        if (k == digits.size()) break;
    }
    return {std::move(total), colorings};
}

// sqrt(-1) * epsilon_{abc} on colors {1,2,3}: i times the sign of the cyclic
// order when all three colors are distinct, zero on any repetition.
inline Scalar penrose_weight(int a, int b, int c) {
    for (int v : {a, b, c})
        if (v < 1 || v > 3) throw std::invalid_argument("penrose_weight: colors must be in 1..3");
    if (a == b || b == c || a == c) return Scalar();
    const bool even = (b - a + 3) % 3 == 1;  // (1,2,3) and its rotations
    return even ? Scalar::i() : -Scalar::i();
}

inline VertexRule penrose_rule() {
    return [](std::size_t, const std::vector<int>& colors) {
        if (colors.size() != 3) throw std::invalid_argument("penrose rule: vertex is not 3-regular");
        return penrose_weight(colors[0], colors[1], colors[2]);
    };
}

// Counts colorings where every vertex sees three distinct colors, by plain
// enumeration. Oracle for penrose_count; shares no evaluation machinery with
// partition_function.
inline long long count_proper_3_edge_colorings(const Network& net) {
    detail::NetIndex idx = detail::validate(net);
    for (const auto& v : net.vertices)
        if (v.size() != 3) throw std::invalid_argument("count_proper_3_edge_colorings: vertex not 3-regular");

    std::vector<std::size_t> free_edges;
    std::vector<int> color(net.edges.size(), 0);
    for (std::size_t e = 0; e < net.edges.size(); ++e) {
        if (net.edges[e].domain != 3)
            throw std::invalid_argument("count_proper_3_edge_colorings: edge domain must be 3");
        auto it = net.fixed.find(net.edges[e].id);
        if (it != net.fixed.end())
            color[e] = it->second;
        else
            free_edges.push_back(e);
    }
    if (free_edges.size() > 20)
        throw std::length_error("count_proper_3_edge_colorings: too many edges to enumerate");

    long long count = 0;
    std::vector<int> digits(free_edges.size(), 1);
    while (true) {
        for (std::size_t k = 0; k < free_edges.size(); ++k) color[free_edges[k]] = digits[k];
        bool proper = true;
        for (const auto& v : net.vertices) {
            const int c0 = color[idx.edge_index[v[0]]];
            const int c1 = color[idx.edge_index[v[1]]];
            const int c2 = color[idx.edge_index[v[2]]];
            if (c0 == c1 || c1 == c2 || c0 == c2) {
                proper = false;
                break;
            }
        }
        if (proper) ++count;
        std::size_t k = 0;
        while (k < digits.size() && ++digits[k] > 3) digits[k++] = 1;
        if (k == digits.size() && !digits.empty()) break;
        if (digits.empty()) break;
    }
    return count;
}

// Penrose amplitude of a plane 3-regular network. Equals the number of proper
// 3-edge colorings; anything other than a nonnegative integer signals a bad
// embedding or weight table.
inline long long penrose_count(const Network& net) {
    for (const auto& v : net.vertices)
        if (v.size() != 3) throw std::invalid_argument("penrose_count: vertex is not 3-regular");
    for (const auto& e : net.edges)
        if (e.domain != 3) throw std::invalid_argument("penrose_count: edge domain must be 3");
    Amplitude amp = partition_function(net, penrose_rule());
    if (!amp.value.is_real_rational())
        throw std::logic_error("penrose_count: amplitude is not a real rational");
    GaussianRational g = amp.value.constant_value();
    if (!rational_is_integer(g.re) || g.re < 0)
        throw std::logic_error("penrose_count: amplitude is not a nonnegative integer");
    return static_cast<long long>(mpz_get_si(g.re.get_num().get_mpz_t()));
}

// --- chains of intermediate states ---------------------------------------

using WeightMatrix = std::vector<std::vector<Scalar>>;

inline void validate_matrix(const WeightMatrix& m) {
    if (m.empty()) throw std::invalid_argument("weight matrix: empty");
    for (const auto& row : m)
        if (row.size() != m.size()) throw std::invalid_argument("weight matrix: not square");
}

// <a|b> with m intermediate measured nodes: the sum over all state sequences
// of the products of successive weights, computed by forward accumulation.
inline Scalar chain_amplitude(const WeightMatrix& weights, int m, int a, int b) {
    validate_matrix(weights);
    const int n = static_cast<int>(weights.size());
    if (a < 0 || a >= n || b < 0 || b >= n) throw std::invalid_argument("chain_amplitude: state out of range");
    if (m < 0) throw std::invalid_argument("chain_amplitude: m must be >= 0");
    if (m == 0) return weights[a][b];
    std::vector<Scalar> cur = weights[a];
    for (int stage = 1; stage < m; ++stage) {
        std::vector<Scalar> nxt(n);
        for (int t = 0; t < n; ++t)
            for (int s = 0; s < n; ++s) nxt[t] += cur[s] * weights[s][t];
        cur = std::move(nxt);
    }
    Scalar out;
    for (int s = 0; s < n; ++s) out += cur[s] * weights[s][b];
    return out;
}

// Oracle: enumerate every state sequence explicitly.
inline Scalar chain_amplitude_brute_force(const WeightMatrix& weights, int m, int a, int b) {
    validate_matrix(weights);
    const int n = static_cast<int>(weights.size());
    if (a < 0 || a >= n || b < 0 || b >= n) throw std::invalid_argument("chain brute force: state out of range");
    if (m < 0) throw std::invalid_argument("chain brute force: m must be >= 0");
    double paths = std::pow(static_cast<double>(n), m);
    if (paths > 2e7) throw std::length_error("chain brute force: too many paths");
    std::vector<int> seq(static_cast<std::size_t>(m), 0);
    Scalar total;
    while (true) {
        Scalar w(1);
        int prev = a;
        for (int s : seq) {
            w *= weights[prev][s];
            prev = s;
        }
        w *= weights[prev][b];
        total += w;
        std::size_t k = 0;
        while (k < seq.size() && ++seq[k] == n) seq[k++] = 0;
        if (k == seq.size()) break;
    }
    return total;
}

inline Scalar matrix_power_entry(const WeightMatrix& weights, int power, int a, int b) {
    validate_matrix(weights);
    if (power < 1) throw std::invalid_argument("matrix_power_entry: power must be >= 1");
    const int n = static_cast<int>(weights.size());
    WeightMatrix acc = weights;
    for (int k = 1; k < power; ++k) {
        WeightMatrix nxt(n, std::vector<Scalar>(n));
        for (int r = 0; r < n; ++r)
            for (int c = 0; c < n; ++c)
                for (int s = 0; s < n; ++s) nxt[r][c] += acc[r][s] * weights[s][c];
        acc = std::move(nxt);
    }
    return acc[a][b];
}

// <L|L> = <R|R> = 1, <L|R> = <R|L> = i.
inline WeightMatrix dirac_weights() {
    return {{Scalar(1), Scalar::i()}, {Scalar::i(), Scalar(1)}};
}

// --- sample networks -------------------------------------------------------

// Cyclic edge orders for a straight-line plane drawing: at each vertex the
// incident edges are listed counterclockwise by angle toward the other end.
// Parallel edges would tie, so multigraphs need hand-given orders.
inline Network network_from_plane_drawing(const std::vector<std::pair<double, double>>& coords,
                                          const std::vector<std::pair<int, int>>& edge_ends,
                                          int domain) {
    Network net;
    std::vector<std::vector<std::pair<double, int>>> around(coords.size());
    for (std::size_t e = 0; e < edge_ends.size(); ++e) {
        const auto [u, v] = edge_ends[e];
        net.edges.push_back({static_cast<int>(e), domain});
        const double ang_uv = std::atan2(coords[v].second - coords[u].second,
                                         coords[v].first - coords[u].first);
        const double ang_vu = std::atan2(coords[u].second - coords[v].second,
                                         coords[u].first - coords[v].first);
        around[u].push_back({ang_uv, static_cast<int>(e)});
        around[v].push_back({ang_vu, static_cast<int>(e)});
    }
    for (auto& lst : around) {
        std::sort(lst.begin(), lst.end());
        std::vector<int> ids;
        for (const auto& [ang, id] : lst) ids.push_back(id);
        net.vertices.push_back(std::move(ids));
    }
    return net;
}

// Two vertices joined by three parallel edges, with the plane cyclic orders.
inline Network theta_graph() {
    Network net;
    net.edges = {{0, 3}, {1, 3}, {2, 3}};
    net.vertices = {{1, 0, 2}, {0, 1, 2}};
    return net;
}

inline Network k4_graph() {
    return network_from_plane_drawing(
        {{0.0, 0.0}, {1.0, 0.0}, {0.5, 0.87}, {0.5, 0.29}},
        {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}, 3);
}

inline Network prism_graph() {
    return network_from_plane_drawing(
        {{0.0, 1.0}, {-0.87, -0.5}, {0.87, -0.5}, {0.0, 0.5}, {-0.43, -0.25}, {0.43, -0.25}},
        {{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 3}, {0, 3}, {1, 4}, {2, 5}}, 3);
}

inline Network cube_graph() {
    return network_from_plane_drawing(
        {{-1.0, -1.0}, {1.0, -1.0}, {1.0, 1.0}, {-1.0, 1.0},
         {-0.5, -0.5}, {0.5, -0.5}, {0.5, 0.5}, {-0.5, 0.5}},
        {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {4, 5}, {5, 6}, {6, 7}, {7, 4}, {0, 4}, {1, 5}, {2, 6}, {3, 7}},
        3);
}

// 3-regular multigraph with a bridge; its proper 3-edge-coloring count is 0.
// Two lobes of (doubled edge + spur vertex) joined by the bridge.
inline Network bridged_graph() {
    Network net;
    for (int e = 0; e < 9; ++e) net.edges.push_back({e, 3});
    // left lobe: u0 (0), u1 (1), u2 (2); doubled edge u1-u2 is ids 0 (outer
    // bow) and 1 (inner bow); u0-u1 is 2, u0-u2 is 3; bridge u0-v0 is 4;
    // right lobe mirrors with ids 5 (u0-side analog v0-v1), 6 (v0-v2),
    // 7 (outer bow v1-v2), 8 (inner bow)
    net.vertices = {
        {4, 2, 3},  // u0: bridge, up to u1, down to u2
        {0, 1, 2},  // u1
        {3, 1, 0},  // u2
        {5, 6, 4},  // v0
        {7, 8, 5},  // v1
        {6, 8, 7},  // v2
    };
    return net;
}

}  // namespace ordcalc::netamp
