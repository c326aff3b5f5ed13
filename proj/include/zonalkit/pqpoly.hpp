#pragma once

#include <map>
#include <string>
#include <vector>

#include "zonalkit/errors.hpp"
#include "zonalkit/rational.hpp"

namespace zonalkit {

// Sparse exact-rational polynomial in the Stanley coordinates
// p_1..p_m, q_1..q_m. An exponent vector has length 2m: entries 0..m-1 are
// the p-exponents, entries m..2m-1 the q-exponents. Terms iterate in
// lexicographic order of the exponent vector. No zero terms are stored.
class PQPolynomial {
public:
    using ExpVec = std::vector<int>;
    using Terms = std::map<ExpVec, Rational>;

    PQPolynomial() : vars_(0) {}
    explicit PQPolynomial(int vars) : vars_(vars) {
        if (vars < 0) throw validation_error("negative variable count");
    }

    static PQPolynomial constant(int vars, const Rational& c) {
        PQPolynomial f(vars);
        f.add_term(ExpVec(2 * vars, 0), c);
        return f;
    }

    // Monomial p_i (1-based i).
    static PQPolynomial p(int vars, int i) {
        PQPolynomial f(vars);
        ExpVec e(2 * vars, 0);
        e.at(i - 1) = 1;
        f.add_term(e, 1);
        return f;
    }

    // Monomial q_i (1-based i).
    static PQPolynomial q(int vars, int i) {
        PQPolynomial f(vars);
        ExpVec e(2 * vars, 0);
        e.at(vars + i - 1) = 1;
        f.add_term(e, 1);
        return f;
    }

    int vars() const { return vars_; }
    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    Rational coefficient(const ExpVec& e) const {
        auto it = terms_.find(e);
        return it == terms_.end() ? Rational(0) : it->second;
    }

    void add_term(const ExpVec& e, const Rational& c) {
        if (static_cast<int>(e.size()) != 2 * vars_)
            throw validation_error("exponent vector has wrong length");
        if (c == 0) return;
        auto [it, inserted] = terms_.emplace(e, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    PQPolynomial& operator+=(const PQPolynomial& o) {
        check_same_vars(o);
        for (const auto& [e, c] : o.terms_) add_term(e, c);
        return *this;
    }

    PQPolynomial& operator-=(const PQPolynomial& o) {
        check_same_vars(o);
        for (const auto& [e, c] : o.terms_) add_term(e, -c);
        return *this;
    }

    PQPolynomial& operator*=(const Rational& c) {
        if (c == 0) {
            terms_.clear();
            return *this;
        }
        for (auto& [e, v] : terms_) v *= c;
        return *this;
    }

    friend PQPolynomial operator+(PQPolynomial a, const PQPolynomial& b) { return a += b; }
    friend PQPolynomial operator-(PQPolynomial a, const PQPolynomial& b) { return a -= b; }
    friend PQPolynomial operator*(PQPolynomial a, const Rational& c) { return a *= c; }

    friend PQPolynomial operator*(const PQPolynomial& a, const PQPolynomial& b) {
        a.check_same_vars(b);
        PQPolynomial prod(a.vars_);
        ExpVec e(2 * a.vars_);
        for (const auto& [ea, ca] : a.terms_)
            for (const auto& [eb, cb] : b.terms_) {
                for (size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
                prod.add_term(e, ca * cb);
            }
        return prod;
    }

    int q_degree(const ExpVec& e) const {
        int d = 0;
        for (int i = vars_; i < 2 * vars_; ++i) d += e[i];
        return d;
    }

    // q_i -> -q_i: each term picks up (-1)^(total q-degree).
    PQPolynomial negated_q() const {
        PQPolynomial out(vars_);
        for (const auto& [e, c] : terms_)
            out.add_term(e, q_degree(e) % 2 == 0 ? c : -c);
        return out;
    }

    // q_i -> a*q_i: each term is scaled by a^(total q-degree).
    PQPolynomial scaled_q(const Rational& a) const {
        PQPolynomial out(vars_);
        for (const auto& [e, c] : terms_) out.add_term(e, c * pow_rational(a, q_degree(e)));
        return out;
    }

    Rational evaluate(const std::vector<Rational>& pvals, const std::vector<Rational>& qvals) const {
        if (static_cast<int>(pvals.size()) != vars_ || static_cast<int>(qvals.size()) != vars_)
            throw validation_error("evaluation point has wrong arity");
        Rational total = 0;
        for (const auto& [e, c] : terms_) {
            Rational t = c;
            for (int i = 0; i < vars_; ++i) t *= pow_rational(pvals[i], e[i]);
            for (int i = 0; i < vars_; ++i) t *= pow_rational(qvals[i], e[vars_ + i]);
            total += t;
        }
        return total;
    }

    // Restriction to fewer variables by setting p_i = q_i = 0 for i > vars;
    // refuses if a surviving term still uses a dropped q variable.
    PQPolynomial restricted(int vars) const {
        if (vars > vars_) throw validation_error("cannot restrict to more variables");
        PQPolynomial out(vars);
        for (const auto& [e, c] : terms_) {
            bool drops_p = false;
            for (int i = vars; i < vars_; ++i) drops_p = drops_p || e[i] > 0;
            if (drops_p) continue;
            for (int i = vars_ + vars; i < 2 * vars_; ++i)
                if (e[i] > 0)
                    throw validation_error("term uses q beyond restriction without a matching p");
            ExpVec r(e.begin(), e.begin() + vars);
            r.insert(r.end(), e.begin() + vars_, e.begin() + vars_ + vars);
            out.add_term(r, c);
        }
        return out;
    }

    // Embedding into a larger variable set.
    PQPolynomial extended(int vars) const {
        if (vars < vars_) throw validation_error("cannot extend to fewer variables");
        PQPolynomial out(vars);
        for (const auto& [e, c] : terms_) {
            ExpVec x(2 * vars, 0);
            for (int i = 0; i < vars_; ++i) x[i] = e[i];
            for (int i = 0; i < vars_; ++i) x[vars + i] = e[vars_ + i];
            out.add_term(x, c);
        }
        return out;
    }

    bool operator==(const PQPolynomial&) const = default;

    // "2*p1*q1^2 - p1^2*q1"
    std::string to_string() const {
        if (terms_.empty()) return "0";
        std::string s;
        for (const auto& [e, c] : terms_) {
            Rational mag = c < 0 ? Rational(-c) : c;
            if (s.empty())
                s += (c < 0) ? "-" : "";
            else
                s += (c < 0) ? " - " : " + ";
            std::string mono;
            for (int i = 0; i < 2 * vars_; ++i) {
                if (e[i] == 0) continue;
                if (!mono.empty()) mono += "*";
                mono += (i < vars_ ? "p" : "q") + std::to_string(i < vars_ ? i + 1 : i - vars_ + 1);
                if (e[i] > 1) mono += "^" + std::to_string(e[i]);
            }
            if (mono.empty())
                s += zonalkit::to_string(mag);
            else if (mag == 1)
                s += mono;
            else
                s += zonalkit::to_string(mag) + "*" + mono;
        }
        return s;
    }

private:
    void check_same_vars(const PQPolynomial& o) const {
        if (vars_ != o.vars_) throw validation_error("variable count mismatch");
    }

    int vars_;
    Terms terms_;
};

} // namespace zonalkit
