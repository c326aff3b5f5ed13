#pragma once

#include <cstdint>
#include <set>
#include <utility>
#include <vector>

#include "zonalkit/errors.hpp"
#include "zonalkit/loops.hpp"
#include "zonalkit/pair_partition.hpp"
#include "zonalkit/partition.hpp"

namespace zonalkit {

// Bipartite graph of a triplet of pair-partitions: black vertices are the
// loops of L(S0,S1), white vertices the loops of L(S0,S2), with an edge
// whenever two loops share a label. Every label lies in exactly one black and
// one white loop, so the graph has no isolated vertices.
struct TripletGraph {
    std::vector<std::vector<int>> black_loops; // 1-based labels per loop
    std::vector<std::vector<int>> white_loops;
    std::vector<int> black_of_label; // 0-based label -> black vertex
    std::vector<int> white_of_label;
    std::vector<std::vector<int>> black_adj; // sorted distinct white neighbors
    std::vector<std::vector<int>> white_adj;

    int black_count() const { return static_cast<int>(black_loops.size()); }
    int white_count() const { return static_cast<int>(white_loops.size()); }

    int edge_count() const {
        int e = 0;
        for (const auto& adj : black_adj) e += static_cast<int>(adj.size());
        return e;
    }

    bool connected() const {
        if (black_loops.empty()) return true;
        std::vector<char> seen_b(black_count(), 0), seen_w(white_count(), 0);
        std::vector<int> stack{0};
        seen_b[0] = 1;
        int reached = 1;
        const int total = black_count() + white_count();
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            bool is_black = v >= 0;
            const auto& adj = is_black ? black_adj[v] : white_adj[-v - 1];
            for (int u : adj) {
                auto& seen = is_black ? seen_w : seen_b;
                if (!seen[u]) {
                    seen[u] = 1;
                    ++reached;
                    stack.push_back(is_black ? -u - 1 : u);
                }
            }
        }
        return reached == total;
    }
};

inline TripletGraph triplet_graph(const PairPartition& s0, const PairPartition& s1,
                                  const PairPartition& s2) {
    if (s0.size() != s1.size() || s0.size() != s2.size())
        throw validation_error("triplet graph needs equal-size pair-partitions");
    TripletGraph g;
    LoopStructure lb = loop_structure(s0, s1);
    LoopStructure lw = loop_structure(s0, s2);
    const int n = s0.size();
    g.black_of_label.assign(n, -1);
    g.white_of_label.assign(n, -1);
    for (int v = 0; v < lb.loop_count(); ++v)
        for (int label : lb.loops[v]) g.black_of_label[label - 1] = v;
    for (int v = 0; v < lw.loop_count(); ++v)
        for (int label : lw.loops[v]) g.white_of_label[label - 1] = v;
    g.black_loops = std::move(lb.loops);
    g.white_loops = std::move(lw.loops);
    std::set<std::pair<int, int>> edges;
    for (int l = 0; l < n; ++l) edges.insert({g.black_of_label[l], g.white_of_label[l]});
    g.black_adj.resize(g.black_loops.size());
    g.white_adj.resize(g.white_loops.size());
    for (auto [b, w] : edges) {
        g.black_adj[b].push_back(w);
        g.white_adj[w].push_back(b);
    }
    return g;
}

// Condition (a): the involutions S0, S1, S2 generate a transitive subgroup
// of Sym(2k), equivalently the triplet graph is connected.
inline bool is_transitive_triplet(const PairPartition& s0, const PairPartition& s1,
                                  const PairPartition& s2) {
    return triplet_graph(s0, s1, s2).connected();
}

// Red/green coloring of the labels.
struct Orientation {
    std::vector<std::uint8_t> color; // 0 = red, 1 = green

    bool operator==(const Orientation&) const = default;
    auto operator<=>(const Orientation&) const = default;
};

// An orientation is compatible with (S0,S1) if every pair of S0 and every
// pair of S1 contains one red and one green element.
inline bool orientation_compatible(const Orientation& phi, const PairPartition& s0,
                                   const PairPartition& s1) {
    for (int i = 0; i < s0.size(); ++i)
        if (phi.color[i] == phi.color[s0(i)] || phi.color[i] == phi.color[s1(i)]) return false;
    return true;
}

// All orientations compatible with (S0,S1): colors alternate along each loop
// of L(S0,S1), so there are exactly 2^#loops of them.
inline std::vector<Orientation> compatible_orientations(const PairPartition& s0,
                                                        const PairPartition& s1) {
    LoopStructure ls = loop_structure(s0, s1);
    const int nloops = ls.loop_count();
    std::vector<Orientation> out;
    out.reserve(static_cast<size_t>(1) << nloops);
    for (std::uint32_t mask = 0; mask < (1u << nloops); ++mask) {
        Orientation phi;
        phi.color.assign(s0.size(), 0);
        for (int v = 0; v < nloops; ++v) {
            std::uint8_t c = (mask >> v) & 1;
            for (size_t j = 0; j < ls.loops[v].size(); ++j)
                phi.color[ls.loops[v][j] - 1] = static_cast<std::uint8_t>((c + j) % 2);
        }
        out.push_back(std::move(phi));
    }
    return out;
}

// The axial-symmetry group of the loops of the canonical couple (S1,S2) of
// type mu: one commuting involution r_i per loop, reversing the label
// sequence j_1, S2(j_1), S1(S2(j_1)), ... of that loop. Returns all 2^l(mu)
// products as permutations.
inline std::vector<Permutation> axial_symmetry_group(const Partition& mu,
                                                     const PairPartition& s1,
                                                     const PairPartition& s2) {
    const int n = s1.size();
    LoopStructure ls = loop_structure(s2, s1); // sequences apply S2 first
    std::vector<Permutation> gens;
    for (const auto& loop : ls.loops) {
        Permutation r(n);
        for (int i = 0; i < n; ++i) r[i] = i;
        const int len = static_cast<int>(loop.size());
        for (int m = 0; m < len; ++m) r[loop[m] - 1] = loop[len - 1 - m] - 1;
        gens.push_back(std::move(r));
    }
    if (static_cast<int>(gens.size()) != mu.length())
        throw std::logic_error("axial symmetry group: wrong loop count");
    std::vector<Permutation> group;
    group.reserve(static_cast<size_t>(1) << gens.size());
    for (std::uint32_t mask = 0; mask < (1u << gens.size()); ++mask) {
        Permutation g(n);
        for (int i = 0; i < n; ++i) g[i] = i;
        for (size_t v = 0; v < gens.size(); ++v)
            if ((mask >> v) & 1)
                for (int i = 0; i < n; ++i) g[i] = gens[v][g[i]];
        group.push_back(std::move(g));
    }
    return group;
}

// One representative per orbit of {(S0,phi) : phi compatible with L(S0,S1)}
// under the diagonal axial-symmetry action. The action is free, so every
// orbit has exactly 2^l(mu) elements (asserted).
struct OrientationOrbit {
    PairPartition s0;
    Orientation phi;
};

inline std::vector<OrientationOrbit> orientation_orbits(const Partition& mu) {
    auto [s1, s2] = canonical_couple(mu);
    const int k = mu.weight();
    auto group = axial_symmetry_group(mu, s1, s2);
    using State = std::pair<std::vector<int>, std::vector<std::uint8_t>>;
    std::set<State> seen;
    std::vector<OrientationOrbit> reps;
    for (const auto& s0 : enumerate_pair_partitions(k)) {
        for (const auto& phi : compatible_orientations(s0, s1)) {
            State key{s0.partners(), phi.color};
            if (seen.count(key)) continue;
            std::set<State> orbit;
            for (const auto& g : group) {
                PairPartition gs0 = s0.relabeled(g);
                Orientation gphi;
                gphi.color.resize(phi.color.size());
                for (int i = 0; i < 2 * k; ++i) gphi.color[g[i]] = phi.color[i];
                orbit.insert({gs0.partners(), gphi.color});
            }
            if (orbit.size() != group.size())
                throw std::logic_error("axial symmetry action is not free");
            seen.insert(orbit.begin(), orbit.end());
            reps.push_back({s0, phi});
        }
    }
    return reps;
}

// Statistics of the surface gluing encoded by S0 on the polygons of the
// canonical couple of type mu: vertices are the loops of L(S0,S1) and
// L(S0,S2), edges the pairs of S0, faces the loops of L(S1,S2).
struct MapStatistics {
    int black_vertices = 0;
    int white_vertices = 0;
    int edges = 0;
    int faces = 0;
    int euler_characteristic = 0;
    bool connected = false;
    bool orientable = false;
};

inline MapStatistics map_statistics(const Partition& mu, const PairPartition& s0) {
    auto [s1, s2] = canonical_couple(mu);
    if (s0.size() != s1.size())
        throw validation_error("S0 must be a pair-partition of [2|mu|]");
    MapStatistics st;
    st.black_vertices = loop_structure(s0, s1).loop_count();
    st.white_vertices = loop_structure(s0, s2).loop_count();
    st.edges = mu.weight();
    st.faces = mu.length();
    st.euler_characteristic = st.black_vertices + st.white_vertices - st.edges + st.faces;
    st.connected = is_transitive_triplet(s0, s1, s2);
    // Orientable iff the labels admit a two-coloring in which every pair of
    // S0, S1 and S2 is bicolored: bipartiteness of the union of the three
    // matchings.
    const int n = s0.size();
    std::vector<int> color(n, -1);
    st.orientable = true;
    for (int start = 0; start < n && st.orientable; ++start) {
        if (color[start] != -1) continue;
        color[start] = 0;
        std::vector<int> stack{start};
        while (!stack.empty() && st.orientable) {
            int v = stack.back();
            stack.pop_back();
            for (int u : {s0(v), s1(v), s2(v)}) {
                if (color[u] == -1) {
                    color[u] = 1 - color[v];
                    stack.push_back(u);
                } else if (color[u] == color[v]) {
                    st.orientable = false;
                    break;
                }
            }
        }
    }
    return st;
}

} // namespace zonalkit
