#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "zonalkit/errors.hpp"
#include "zonalkit/partition.hpp"
#include "zonalkit/rational.hpp"

namespace zonalkit {

// A permutation of {0,...,n-1}, stored one-line: perm[i] = image of i.
using Permutation = std::vector<int>;

// Pair-partition of [2k]: a perfect matching, stored as a fixpoint-free
// involution. Labels are 1-based in all I/O; internal storage is 0-based.
class PairPartition {
public:
    PairPartition() = default;

    // From 1-based label pairs, e.g. {{1,2},{3,4}}. The pairs must cover
    // exactly [2k], each label once.
    static PairPartition from_pairs(const std::vector<std::pair<int, int>>& pairs) {
        int n = static_cast<int>(pairs.size()) * 2;
        std::vector<int> partner(n, -1);
        for (auto [a, b] : pairs) {
            if (a == b) throw validation_error("self-pair on label " + std::to_string(a));
            for (int v : {a, b}) {
                if (v < 1 || v > n)
                    throw validation_error("label " + std::to_string(v) + " out of range [1," +
                                           std::to_string(n) + "]");
                if (partner[v - 1] != -1)
                    throw validation_error("duplicate label " + std::to_string(v));
            }
            partner[a - 1] = b - 1;
            partner[b - 1] = a - 1;
        }
        PairPartition s;
        s.partner_ = std::move(partner);
        return s;
    }

    // The first pair-partition {{1,2},{3,4},...,{2k-1,2k}}.
    static PairPartition first(int k) {
        if (k < 0) throw validation_error("negative pair count");
        PairPartition s;
        s.partner_.resize(2 * k);
        for (int i = 0; i < 2 * k; i += 2) {
            s.partner_[i] = i + 1;
            s.partner_[i + 1] = i;
        }
        return s;
    }

    int size() const { return static_cast<int>(partner_.size()); } // 2k
    int pair_count() const { return size() / 2; }                  // k

    // Involution on 0-based labels.
    int operator()(int i) const { return partner_[i]; }
    const std::vector<int>& partners() const { return partner_; }

    // Pairs sorted by smaller element, 1-based: the canonical form.
    std::vector<std::pair<int, int>> pairs() const {
        std::vector<std::pair<int, int>> out;
        out.reserve(pair_count());
        for (int i = 0; i < size(); ++i)
            if (partner_[i] > i) out.emplace_back(i + 1, partner_[i] + 1);
        return out;
    }

    // sigma . S: pairs {sigma(i), sigma(j)} for pairs {i,j} of S.
    PairPartition relabeled(const Permutation& sigma) const {
        if (static_cast<int>(sigma.size()) != size())
            throw validation_error("permutation size mismatch");
        PairPartition s;
        s.partner_.resize(size());
        for (int i = 0; i < size(); ++i) s.partner_[sigma[i]] = sigma[partner_[i]];
        return s;
    }

    std::string to_string() const {
        std::string s = "{";
        bool first = true;
        for (auto [a, b] : pairs()) {
            if (!first) s += ",";
            first = false;
            s += "{" + std::to_string(a) + "," + std::to_string(b) + "}";
        }
        return s + "}";
    }

    auto operator<=>(const PairPartition&) const = default;

private:
    std::vector<int> partner_;
};

inline BigInt pair_partition_count(int k) { return odd_double_factorial(k); }

namespace detail {

// Build the pair-partition from its choice digits: at step j the smallest
// free label is paired with the (d_j+1)-th smallest remaining label.
inline PairPartition pair_partition_from_digits(int k, const std::vector<int>& digits) {
    std::vector<int> free_labels(2 * k);
    for (int i = 0; i < 2 * k; ++i) free_labels[i] = i;
    std::vector<std::pair<int, int>> pairs;
    pairs.reserve(k);
    for (int j = 0; j < k; ++j) {
        int a = free_labels[0];
        int b = free_labels[1 + digits[j]];
        pairs.emplace_back(a + 1, b + 1);
        free_labels.erase(free_labels.begin() + 1 + digits[j]);
        free_labels.erase(free_labels.begin());
    }
    return PairPartition::from_pairs(pairs);
}

} // namespace detail

// rank-th pair-partition of [2k] (0-based rank) in the canonical enumeration
// order: smallest free label pairs with each larger free label in increasing
// order, recursively.
inline PairPartition unrank_pair_partition(int k, std::uint64_t rank) {
    std::vector<int> digits(k);
    for (int j = 0; j < k; ++j) {
        // base of digit j is 2(k-j)-1; radix weight is (2(k-j)-3)!!
        std::uint64_t w = static_cast<std::uint64_t>(odd_double_factorial(k - j - 1));
        digits[j] = static_cast<int>(rank / w);
        rank %= w;
    }
    return detail::pair_partition_from_digits(k, digits);
}

// Lazy enumeration of all (2k-1)!! pair-partitions of [2k] in canonical order.
// Single-consumer; independent ranges may run concurrently.
class PairPartitionRange {
public:
    explicit PairPartitionRange(int k, int ceiling = kDefaultCeiling) : k_(k) {
        if (k < 1) throw validation_error("pair-partition enumeration needs k >= 1");
        if (k > ceiling)
            throw capacity_error("pair-partition enumeration capped at k = " +
                                 std::to_string(ceiling) + ", got k = " + std::to_string(k));
        count_ = static_cast<std::uint64_t>(pair_partition_count(k));
    }

    static constexpr int kDefaultCeiling = 8;

    class iterator {
    public:
        using value_type = PairPartition;
        using difference_type = std::ptrdiff_t;

        iterator(int k, std::uint64_t rank, std::uint64_t count)
            : k_(k), rank_(rank), count_(count), digits_(k, 0) {
            if (rank_ < count_) load();
        }

        const PairPartition& operator*() const { return current_; }
        const PairPartition* operator->() const { return &current_; }

        iterator& operator++() {
            ++rank_;
            if (rank_ < count_) advance_digits();
            return *this;
        }
        iterator operator++(int) {
            iterator tmp = *this;
            ++*this;
            return tmp;
        }

        bool operator==(const iterator& o) const { return rank_ == o.rank_; }

    private:
        void load() {
            std::uint64_t r = rank_;
            for (int j = 0; j < k_; ++j) {
                std::uint64_t w = static_cast<std::uint64_t>(odd_double_factorial(k_ - j - 1));
                digits_[j] = static_cast<int>(r / w);
                r %= w;
            }
            current_ = detail::pair_partition_from_digits(k_, digits_);
        }

        void advance_digits() {
            for (int j = k_ - 1; j >= 0; --j) {
                if (digits_[j] + 1 < 2 * (k_ - j) - 1) {
                    digits_[j]++;
                    std::fill(digits_.begin() + j + 1, digits_.end(), 0);
                    current_ = detail::pair_partition_from_digits(k_, digits_);
                    return;
                }
            }
        }

        int k_;
        std::uint64_t rank_, count_;
        std::vector<int> digits_;
        PairPartition current_;
    };

    iterator begin() const { return iterator(k_, 0, count_); }
    iterator end() const { return iterator(k_, count_, count_); }
    std::uint64_t size() const { return count_; }

private:
    int k_;
    std::uint64_t count_;
};

inline PairPartitionRange enumerate_pair_partitions(int k,
                                                    int ceiling = PairPartitionRange::kDefaultCeiling) {
    return PairPartitionRange(k, ceiling);
}

} // namespace zonalkit
