#pragma once

#include <json.hpp>

#include <string>
#include <vector>

#include "zonalkit/errors.hpp"
#include "zonalkit/kerov.hpp"
#include "zonalkit/pair_partition.hpp"
#include "zonalkit/partition.hpp"
#include "zonalkit/pqpoly.hpp"
#include "zonalkit/psym.hpp"
#include "zonalkit/triplet_graph.hpp"

namespace zonalkit {

using json = nlohmann::json;

// Rationals cross the wire as strings ("1", "-3/2") so nothing is ever
// rounded. Term arrays are emitted in the canonical (map) order.

inline json to_json(const Partition& p) { return json(p.parts()); }

inline Partition partition_from_json(const json& j) {
    if (!j.is_array()) throw validation_error("partition JSON must be an array");
    return Partition(j.get<std::vector<int>>());
}

inline json to_json(const PairPartition& s) {
    json out = json::array();
    for (auto [a, b] : s.pairs()) out.push_back({a, b});
    return out;
}

inline PairPartition pair_partition_from_json(const json& j) {
    if (!j.is_array()) throw validation_error("pair-partition JSON must be an array of pairs");
    std::vector<std::pair<int, int>> pairs;
    for (const auto& item : j) {
        if (!item.is_array() || item.size() != 2)
            throw validation_error("pair-partition entries must be 2-element arrays");
        pairs.emplace_back(item[0].get<int>(), item[1].get<int>());
    }
    return PairPartition::from_pairs(pairs);
}

inline json to_json(const PSymmetricFunction& f) {
    json terms = json::array();
    for (const auto& [mu, c] : f.terms())
        terms.push_back({{"mu", mu.parts()}, {"coeff", to_string(c)}});
    return {{"basis", "p"}, {"terms", terms}};
}

inline PSymmetricFunction psym_from_json(const json& j) {
    if (j.value("basis", "") != "p")
        throw validation_error("expected a power-sum basis symmetric function");
    PSymmetricFunction f;
    for (const auto& term : j.at("terms"))
        f.add_term(Partition(term.at("mu").get<std::vector<int>>()),
                   rational_from_string(term.at("coeff").get<std::string>()));
    return f;
}

inline json to_json(const PQPolynomial& f) {
    json terms = json::array();
    for (const auto& [e, c] : f.terms()) {
        json exp = json::object();
        for (int i = 0; i < f.vars(); ++i) {
            if (e[i] != 0) exp["p" + std::to_string(i + 1)] = e[i];
            if (e[f.vars() + i] != 0) exp["q" + std::to_string(i + 1)] = e[f.vars() + i];
        }
        terms.push_back({{"exp", exp}, {"coeff", to_string(c)}});
    }
    return {{"vars", f.vars()}, {"terms", terms}};
}

inline PQPolynomial pq_from_json(const json& j) {
    int vars = j.at("vars").get<int>();
    PQPolynomial f(vars);
    for (const auto& term : j.at("terms")) {
        PQPolynomial::ExpVec e(2 * vars, 0);
        for (const auto& [key, value] : term.at("exp").items()) {
            if (key.size() < 2 || (key[0] != 'p' && key[0] != 'q'))
                throw validation_error("bad exponent key '" + key + "'");
            int idx = std::stoi(key.substr(1));
            if (idx < 1 || idx > vars) throw validation_error("exponent index out of range");
            e[(key[0] == 'p' ? 0 : vars) + idx - 1] = value.get<int>();
        }
        f.add_term(e, rational_from_string(term.at("coeff").get<std::string>()));
    }
    return f;
}

inline json to_json(const KerovPolynomial& k) {
    json terms = json::array();
    for (const auto& [s, c] : k.terms()) {
        json exp = json::object();
        for (size_t j = 0; j < s.size(); ++j)
            if (s[j] != 0) exp[std::to_string(j + 2)] = s[j];
        terms.push_back({{"s", exp}, {"coeff", to_string(c)}});
    }
    return {{"terms", terms}};
}

inline KerovPolynomial kerov_from_json(const json& j) {
    KerovPolynomial k;
    for (const auto& term : j.at("terms")) {
        KerovPolynomial::Exponents s;
        for (const auto& [key, value] : term.at("s").items()) {
            int idx = std::stoi(key);
            if (idx < 2) throw validation_error("cumulant index must be at least 2");
            if (static_cast<int>(s.size()) < idx - 1) s.resize(idx - 1, 0);
            s[idx - 2] = value.get<int>();
        }
        k.add_term(s, rational_from_string(term.at("coeff").get<std::string>()));
    }
    return k;
}

inline json to_json(const MapStatistics& st) {
    return {{"black_vertices", st.black_vertices},
            {"white_vertices", st.white_vertices},
            {"edges", st.edges},
            {"faces", st.faces},
            {"euler_characteristic", st.euler_characteristic},
            {"connected", st.connected},
            {"orientable", st.orientable}};
}

} // namespace zonalkit
