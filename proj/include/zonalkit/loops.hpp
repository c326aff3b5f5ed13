#pragma once

#include <utility>
#include <vector>

#include "zonalkit/errors.hpp"
#include "zonalkit/pair_partition.hpp"
#include "zonalkit/partition.hpp"

namespace zonalkit {

// The loops of L(S_a,S_b): the bipartite 2-regular graph on the pairs of two
// pair-partitions decomposes into even loops. A loop of length 2l contributes
// a part l to the type; the sign is (-1)^(k - #loops).
//
// Each loop is stored as its cyclic label sequence, started at the minimal
// label of the loop and traversed by applying S_a first; this is a canonical
// representation.
struct LoopStructure {
    std::vector<std::vector<int>> loops; // 1-based labels
    Partition type;                      // half loop lengths, sorted decreasingly
    int sign = 1;                        // (-1)^(k - #loops)

    int loop_count() const { return static_cast<int>(loops.size()); }
};

inline LoopStructure loop_structure(const PairPartition& sa, const PairPartition& sb) {
    if (sa.size() != sb.size())
        throw validation_error("loop structure needs pair-partitions of the same ground set");
    const int n = sa.size();
    LoopStructure ls;
    std::vector<char> seen(n, 0);
    std::vector<int> half_lengths;
    for (int start = 0; start < n; ++start) {
        if (seen[start]) continue;
        std::vector<int> loop;
        int cur = start;
        bool apply_a = true;
        do {
            seen[cur] = 1;
            loop.push_back(cur + 1);
            cur = apply_a ? sa(cur) : sb(cur);
            apply_a = !apply_a;
        } while (cur != start);
        half_lengths.push_back(static_cast<int>(loop.size()) / 2);
        ls.loops.push_back(std::move(loop));
    }
    ls.type = Partition(half_lengths);
    ls.sign = ((sa.pair_count() - ls.loop_count()) % 2 == 0) ? 1 : -1;
    return ls;
}

// The fixed couple (S1,S2) of type mu used throughout: on each block of 2*mu_i
// consecutive labels starting at offset a, S1 pairs {a+1,a+2},{a+3,a+4},...
// and S2 pairs {a+2,a+3},...,{a+2*mu_i,a+1}, so the block is a single loop of
// length 2*mu_i.
inline std::pair<PairPartition, PairPartition> canonical_couple(const Partition& mu) {
    if (mu.empty()) throw validation_error("canonical couple needs a nonempty partition");
    std::vector<std::pair<int, int>> s1, s2;
    int offset = 0;
    for (int part : mu.parts()) {
        int len = 2 * part;
        for (int i = 1; i <= len; i += 2) s1.emplace_back(offset + i, offset + i + 1);
        for (int i = 2; i <= len; i += 2) s2.emplace_back(offset + i, offset + (i % len) + 1);
        offset += len;
    }
    auto couple = std::make_pair(PairPartition::from_pairs(s1), PairPartition::from_pairs(s2));
    if (loop_structure(couple.first, couple.second).type != mu)
        throw std::logic_error("canonical couple has wrong type"); // unreachable
    return couple;
}

// Number of couples of pair-partitions of [2n] of type mu: (2n)!/(z_mu 2^l(mu)).
inline BigInt couples_of_type_count(const Partition& mu) {
    int n = mu.weight();
    return factorial(2 * n) / (mu.z() * pow_bigint(2, mu.length()));
}

// Cycle type of the permutation S_a o S_b (composition of the involutions).
inline Partition composition_cycle_type(const PairPartition& sa, const PairPartition& sb) {
    if (sa.size() != sb.size()) throw validation_error("size mismatch");
    const int n = sa.size();
    std::vector<char> seen(n, 0);
    std::vector<int> cycles;
    for (int start = 0; start < n; ++start) {
        if (seen[start]) continue;
        int len = 0, cur = start;
        do {
            seen[cur] = 1;
            ++len;
            cur = sa(sb(cur));
        } while (cur != start);
        cycles.push_back(len);
    }
    return Partition(cycles);
}

} // namespace zonalkit
