#pragma once

#include <map>
#include <string>

#include "zonalkit/partition.hpp"
#include "zonalkit/rational.hpp"

namespace zonalkit {

// Symmetric function written in the power-sum basis: an exact-rational linear
// combination of p_rho. Zero coefficients are never stored. Terms iterate in
// ascending lexicographic order of rho, which is the canonical output order.
class PSymmetricFunction {
public:
    using Terms = std::map<Partition, Rational>;

    PSymmetricFunction() = default;

    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    size_t term_count() const { return terms_.size(); }

    Rational coefficient(const Partition& rho) const {
        auto it = terms_.find(rho);
        return it == terms_.end() ? Rational(0) : it->second;
    }

    void add_term(const Partition& rho, const Rational& c) {
        if (c == 0) return;
        auto [it, inserted] = terms_.emplace(rho, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    PSymmetricFunction& operator+=(const PSymmetricFunction& o) {
        for (const auto& [rho, c] : o.terms_) add_term(rho, c);
        return *this;
    }

    PSymmetricFunction& operator*=(const Rational& c) {
        if (c == 0) {
            terms_.clear();
            return *this;
        }
        for (auto& [rho, v] : terms_) v *= c;
        return *this;
    }

    friend PSymmetricFunction operator+(PSymmetricFunction a, const PSymmetricFunction& b) {
        a += b;
        return a;
    }
    friend PSymmetricFunction operator*(PSymmetricFunction a, const Rational& c) {
        a *= c;
        return a;
    }

    bool operator==(const PSymmetricFunction&) const = default;

    // "p[1,1,1] + p[2,1] - 2*p[3]"
    std::string to_string() const {
        if (terms_.empty()) return "0";
        std::string s;
        for (const auto& [rho, c] : terms_) {
            Rational mag = c < 0 ? Rational(-c) : c;
            if (s.empty())
                s += (c < 0) ? "-" : "";
            else
                s += (c < 0) ? " - " : " + ";
            if (mag != 1) s += zonalkit::to_string(mag) + "*";
            s += "p[" + rho.to_string() + "]";
        }
        return s;
    }

private:
    Terms terms_;
};

} // namespace zonalkit
