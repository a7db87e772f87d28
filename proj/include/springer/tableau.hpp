#pragma once

#include <string>
#include <vector>

#include "springer/partition.hpp"

namespace springer {

/// A filling of a Young diagram. Rows hold the entries cell by cell.
struct Tableau {
    Partition shape;
    std::vector<std::vector<int>> rows;

    Tableau() = default;
    Tableau(Partition s, std::vector<std::vector<int>> r);

    int at(int r, int c) const { return rows[r][c]; }
    int size() const { return shape.sum(); }

    /// Bijection onto {1..m}?
    bool is_numbering() const;
    /// Strictly increasing down columns, weakly along rows, and a numbering.
    bool is_standard() const;
    /// Semi-standard with |T^{-1}(k)| = w_k for all k.
    bool is_semistandard_with_weight(const std::vector<int>& w) const;

    std::vector<int> row_reading_word() const;
    std::string str() const;  // [[1,2],[3]]
    auto operator<=>(const Tableau&) const = default;
};

/// t_mu: numbers 1..m left to right along rows, top to bottom.
Tableau row_reading_numbering(const Partition& mu);

/// All standard tableaux of the given shape, ordered lexicographically by
/// row-reading word. Count matches the hook length formula.
std::vector<Tableau> standard_tableaux(const Partition& lambda);

/// All semi-standard tableaux of the given shape and weight, ordered
/// lexicographically by row-reading word. Count is the Kostka number.
std::vector<Tableau> semistandard_tableaux(const Partition& lambda,
                                           const Partition& weight);

/// Relabel entries of Q by the row of t_mu they live in.
Tableau nu_compose(const Tableau& q, const Partition& mu);

/// The unique standard Q with nu_mu o Q = T: cells of T carrying entry v
/// receive the numbers of row v of t_mu, assigned left to right by column.
/// Throws invalid_input unless T is semi-standard of weight mu; the result
/// is post-checked.
Tableau standardize(const Tableau& t, const Partition& mu);

/// t'_{(2n-k,k)}: the standard two-row tableau with second row n+1..n+k.
Tableau two_row_tableau(int n, int k);

}  // namespace springer
