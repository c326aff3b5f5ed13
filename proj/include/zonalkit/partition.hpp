#pragma once

#include <algorithm>
#include <compare>
#include <initializer_list>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include "zonalkit/errors.hpp"
#include "zonalkit/rational.hpp"

namespace zonalkit {

// Integer partition: weakly decreasing positive parts. The empty partition is
// allowed everywhere and has weight 0.
class Partition {
public:
    Partition() = default;

    explicit Partition(std::vector<int> parts) : parts_(std::move(parts)) {
        for (int p : parts_)
            if (p < 0) throw validation_error("partition parts must be non-negative");
        std::sort(parts_.begin(), parts_.end(), std::greater<int>());
        while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
    }

    Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

    // Comma-separated parts, e.g. "4,2,1". Empty string is the empty partition.
    static Partition parse(const std::string& csv) {
        std::vector<int> parts;
        std::string tok;
        std::istringstream in(csv);
        while (std::getline(in, tok, ',')) {
            if (tok.empty()) throw validation_error("empty part in partition '" + csv + "'");
            size_t pos = 0;
            int v = 0;
            try {
                v = std::stoi(tok, &pos);
            } catch (const std::exception&) {
                throw validation_error("malformed partition part '" + tok + "'");
            }
            if (pos != tok.size()) throw validation_error("malformed partition part '" + tok + "'");
            if (v <= 0) throw validation_error("partition parts must be positive, got '" + tok + "'");
            parts.push_back(v);
        }
        return Partition(std::move(parts));
    }

    const std::vector<int>& parts() const { return parts_; }
    bool empty() const { return parts_.empty(); }
    int length() const { return static_cast<int>(parts_.size()); }
    int weight() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

    // Part by 1-based row index; 0 beyond the length.
    int part(int i) const {
        return (i >= 1 && i <= length()) ? parts_[i - 1] : 0;
    }

    int multiplicity(int v) const {
        return static_cast<int>(std::count(parts_.begin(), parts_.end(), v));
    }

    // lambda'_i = #{j : lambda_j >= i}; an involution.
    Partition conjugate() const {
        std::vector<int> c;
        if (!parts_.empty()) {
            c.resize(parts_[0], 0);
            for (int p : parts_)
                for (int i = 0; i < p; ++i) c[i]++;
        }
        return Partition(std::move(c));
    }

    // z_mu = prod(mu_i) * prod_i m_i(mu)!
    BigInt z() const {
        BigInt z = 1;
        int run = 0;
        for (int i = 0; i < length(); ++i) {
            z *= parts_[i];
            run = (i > 0 && parts_[i] == parts_[i - 1]) ? run + 1 : 1;
            z *= run;
        }
        return z;
    }

    // mu with m extra parts equal to 1 appended.
    Partition with_ones(int m) const {
        std::vector<int> parts = parts_;
        parts.insert(parts.end(), m, 1);
        return Partition(std::move(parts));
    }

    std::string to_string() const {
        std::string s;
        for (int i = 0; i < length(); ++i) {
            if (i) s += ',';
            s += std::to_string(parts_[i]);
        }
        return s;
    }

    auto operator<=>(const Partition&) const = default;

private:
    std::vector<int> parts_;
};

// All partitions of n, largest-part-first lexicographic order: (n) first,
// (1^n) last.
inline std::vector<Partition> partitions_of(int n) {
    std::vector<Partition> out;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int rest, int maxpart) -> void {
        if (rest == 0) {
            out.emplace_back(cur);
            return;
        }
        for (int p = std::min(rest, maxpart); p >= 1; --p) {
            cur.push_back(p);
            self(self, rest - p, p);
            cur.pop_back();
        }
    };
    if (n >= 0) rec(rec, n, std::max(n, 1));
    return out;
}

// Dominance order on partitions of the same weight: a >= b iff every prefix
// sum of a is >= the corresponding prefix sum of b.
inline bool dominates(const Partition& a, const Partition& b) {
    if (a.weight() != b.weight()) return false;
    int sa = 0, sb = 0;
    int len = std::max(a.length(), b.length());
    for (int i = 1; i <= len; ++i) {
        sa += a.part(i);
        sb += b.part(i);
        if (sa < sb) return false;
    }
    return true;
}

} // namespace zonalkit
