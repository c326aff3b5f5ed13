#pragma once

#include <string>
#include <vector>

#include "zonalkit/errors.hpp"
#include "zonalkit/partition.hpp"
#include "zonalkit/rational.hpp"

namespace zonalkit {

// Multirectangular (Stanley) coordinates of a generalized Young diagram:
// p_i rows of length q_i, stacked with q strictly decreasing. Entries are
// rationals so anisotropic stretching by 1/2 etc. needs no special casing.
//
// Canonical form: adjacent equal q-blocks merged (p summed), zero-p blocks
// dropped, all entries positive, q strictly decreasing.
class MultiRect {
public:
    MultiRect() = default; // empty diagram

    MultiRect(std::vector<Rational> p, std::vector<Rational> q) {
        if (p.size() != q.size())
            throw validation_error("multirect needs as many row counts as row lengths");
        for (size_t i = 0; i < p.size(); ++i) {
            if (p[i] < 0) throw validation_error("multirect row count must be non-negative");
            if (p[i] == 0) continue;
            if (q[i] <= 0) throw validation_error("multirect row length must be positive");
            if (!p_.empty() && q_.back() == q[i]) {
                p_.back() += p[i];
            } else {
                if (!q_.empty() && q_.back() < q[i])
                    throw validation_error("multirect row lengths must be non-increasing");
                p_.push_back(p[i]);
                q_.push_back(q[i]);
            }
        }
    }

    static MultiRect of_partition(const Partition& lambda) {
        std::vector<Rational> p, q;
        for (int v : lambda.parts()) {
            if (!q.empty() && q.back() == v)
                p.back() += 1;
            else {
                p.push_back(1);
                q.push_back(v);
            }
        }
        return MultiRect(std::move(p), std::move(q));
    }

    // Inverse of of_partition; requires integer entries.
    Partition to_partition() const {
        std::vector<int> parts;
        for (size_t i = 0; i < p_.size(); ++i) {
            BigInt rows = to_bigint(p_[i]);
            BigInt len = to_bigint(q_[i]);
            for (BigInt r = 0; r < rows; ++r) parts.push_back(static_cast<int>(len));
        }
        return Partition(std::move(parts));
    }

    bool is_integer() const {
        for (const auto& v : p_)
            if (!zonalkit::is_integer(v)) return false;
        for (const auto& v : q_)
            if (!zonalkit::is_integer(v)) return false;
        return true;
    }

    int blocks() const { return static_cast<int>(p_.size()); }
    const std::vector<Rational>& row_counts() const { return p_; }  // p
    const std::vector<Rational>& row_lengths() const { return q_; } // q

    // |p x q| = sum p_i q_i
    Rational weight() const {
        Rational w = 0;
        for (size_t i = 0; i < p_.size(); ++i) w += p_[i] * q_[i];
        return w;
    }

    // alpha * lambda: anisotropic stretch along rows (q only).
    MultiRect stretched(const Rational& alpha) const {
        if (alpha <= 0) throw validation_error("stretch factor must be positive");
        std::vector<Rational> q = q_;
        for (auto& v : q) v *= alpha;
        return MultiRect(p_, std::move(q));
    }

    // D_s lambda: both directions.
    MultiRect dilated(const Rational& s) const {
        if (s <= 0) throw validation_error("dilation factor must be positive");
        std::vector<Rational> p = p_, q = q_;
        for (auto& v : p) v *= s;
        for (auto& v : q) v *= s;
        return MultiRect(std::move(p), std::move(q));
    }

    // Format "p=1,1;q=4,2"; rationals as "a/b".
    static MultiRect parse(const std::string& s) {
        auto semi = s.find(';');
        if (semi == std::string::npos || s.rfind("p=", 0) != 0 || s.find("q=", semi + 1) != semi + 1)
            throw validation_error("multirect literal must look like 'p=1,1;q=4,2'");
        auto split = [](const std::string& csv) {
            std::vector<Rational> vals;
            std::string tok;
            std::istringstream in(csv);
            while (std::getline(in, tok, ',')) vals.push_back(rational_from_string(tok));
            return vals;
        };
        return MultiRect(split(s.substr(2, semi - 2)), split(s.substr(semi + 3)));
    }

    std::string to_string() const {
        std::string s = "p=";
        for (size_t i = 0; i < p_.size(); ++i) {
            if (i) s += ',';
            s += zonalkit::to_string(p_[i]);
        }
        s += ";q=";
        for (size_t i = 0; i < q_.size(); ++i) {
            if (i) s += ',';
            s += zonalkit::to_string(q_[i]);
        }
        return s;
    }

    bool operator==(const MultiRect&) const = default;

private:
    std::vector<Rational> p_, q_;
};

} // namespace zonalkit
