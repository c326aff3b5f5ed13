#pragma once

#include <vector>

#include "zonalkit/errors.hpp"
#include "zonalkit/pair_partition.hpp"
#include "zonalkit/partition.hpp"

namespace zonalkit {

// The Young tableau of shape 2*lambda with boxes numbered consecutively along
// the rows. Since every row of 2*lambda has even length, the pairing of
// column 2i-1 with column 2i in each row is exactly the first pair-partition.
struct Tableau2Lambda {
    Partition shape;            // 2*lambda
    std::vector<int> row_of;    // label l (1-based) -> 1-based row: row_of[l-1]
    std::vector<int> col_of;    // label l (1-based) -> 1-based column
    PairPartition neighbor_pairing;

    int box_count() const { return static_cast<int>(row_of.size()); }
};

inline Tableau2Lambda tableau_2lambda(const Partition& lambda) {
    if (lambda.empty()) throw validation_error("tableau needs a nonempty partition");
    std::vector<int> doubled;
    for (int p : lambda.parts()) doubled.push_back(2 * p);
    Tableau2Lambda t;
    t.shape = Partition(std::move(doubled));
    int n2 = 2 * lambda.weight();
    t.row_of.resize(n2);
    t.col_of.resize(n2);
    int label = 0;
    for (int r = 1; r <= t.shape.length(); ++r)
        for (int c = 1; c <= t.shape.part(r); ++c) {
            t.row_of[label] = r;
            t.col_of[label] = c;
            ++label;
        }
    t.neighbor_pairing = PairPartition::first(lambda.weight());
    return t;
}

} // namespace zonalkit
