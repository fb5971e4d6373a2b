#pragma once

#include "commop/rational.hpp"

#include <map>
#include <utility>
#include <vector>

namespace commop {

/// Exact sparse linear system over Q, solved by fraction-free elimination
/// on integer rows with content removal. Rows are kept in semi-echelon form
/// keyed by leading column; the pivot is always the first nonzero column
/// (deterministic, no reordering).
class SparseLinearSystem {
public:
    using Entry = std::pair<int, Rational>;

    explicit SparseLinearSystem(int unknowns) : n_(unknowns) {}

    [[nodiscard]] int unknowns() const { return n_; }
    [[nodiscard]] int rank() const { return static_cast<int>(pivots_.size()); }
    [[nodiscard]] bool consistent() const { return consistent_; }
    /// Number of equations fed in (including dependent ones).
    [[nodiscard]] long equations() const { return equations_; }

    /// sum coef * u[col] = rhs. Entries may repeat a column (they are summed).
    void add_equation(const std::vector<Entry>& entries, const Rational& rhs = Rational(0));

    struct Solution {
        bool consistent = false;
        /// Particular solution with every free unknown set to zero.
        std::vector<Rational> particular;
        /// One kernel vector per free unknown, in increasing column order.
        std::vector<std::vector<Rational>> kernel;
        std::vector<int> free_columns;
    };

    /// Back-substitution over the current echelon form.
    [[nodiscard]] Solution solve() const;

private:
    struct Row {
        std::vector<std::pair<int, mpz_class>> terms;  // sorted, nonzero; column n_ is the rhs
    };
    void reduce_and_insert(Row row);

    int n_;
    bool consistent_ = true;
    long equations_ = 0;
    std::map<int, Row> pivots_;
};

}  // namespace commop
