#include "commop/linsolve.hpp"

#include <gtest/gtest.h>

using namespace commop;

namespace {

Rational dot(const std::vector<SparseLinearSystem::Entry>& row, const std::vector<Rational>& u) {
    Rational s;
    for (const auto& [c, v] : row) s += v * u[c];
    return s;
}

}  // namespace

TEST(LinSolve, UniqueSolution) {
    // x + 2y = 5, 3x - y = 1  ->  x = 1, y = 2
    SparseLinearSystem s(2);
    s.add_equation({{0, Rational(1)}, {1, Rational(2)}}, Rational(5));
    s.add_equation({{0, Rational(3)}, {1, Rational(-1)}}, Rational(1));
    const auto sol = s.solve();
    ASSERT_TRUE(sol.consistent);
    EXPECT_EQ(sol.particular, (std::vector<Rational>{Rational(1), Rational(2)}));
    EXPECT_TRUE(sol.kernel.empty());
    EXPECT_EQ(s.rank(), 2);
    EXPECT_EQ(s.equations(), 2);
}

TEST(LinSolve, RationalCoefficientsAndRepeatedColumns) {
    // (1/2 + 1/3) x = 5/6  ->  x = 1
    SparseLinearSystem s(1);
    s.add_equation({{0, Rational(1, 2)}, {0, Rational(1, 3)}}, Rational(5, 6));
    const auto sol = s.solve();
    ASSERT_TRUE(sol.consistent);
    EXPECT_EQ(sol.particular[0], Rational(1));
}

TEST(LinSolve, KernelAndFreeColumns) {
    // x + y + z = 1 in three unknowns: two free columns.
    SparseLinearSystem s(3);
    const std::vector<SparseLinearSystem::Entry> row{{0, Rational(1)}, {1, Rational(1)}, {2, Rational(1)}};
    s.add_equation(row, Rational(1));
    s.add_equation(row, Rational(1));  // dependent
    const auto sol = s.solve();
    ASSERT_TRUE(sol.consistent);
    EXPECT_EQ(s.rank(), 1);
    EXPECT_EQ(sol.free_columns, (std::vector<int>{1, 2}));
    ASSERT_EQ(sol.kernel.size(), 2u);
    EXPECT_EQ(dot(row, sol.particular), Rational(1));
    for (const auto& k : sol.kernel) EXPECT_EQ(dot(row, k), Rational(0));
}

TEST(LinSolve, Inconsistent) {
    SparseLinearSystem s(2);
    s.add_equation({{0, Rational(1)}, {1, Rational(1)}}, Rational(1));
    s.add_equation({{0, Rational(2)}, {1, Rational(2)}}, Rational(3));
    EXPECT_FALSE(s.consistent());
    EXPECT_FALSE(s.solve().consistent);
}

TEST(LinSolve, HilbertSystemExact) {
    // Hilbert matrix of size 6 times (1, ..., 1); exact arithmetic recovers it.
    constexpr int n = 6;
    SparseLinearSystem s(n);
    for (int i = 0; i < n; ++i) {
        std::vector<SparseLinearSystem::Entry> row;
        Rational rhs;
        for (int j = 0; j < n; ++j) {
            row.push_back({j, Rational(1, i + j + 1)});
            rhs += Rational(1, i + j + 1);
        }
        s.add_equation(row, rhs);
    }
    const auto sol = s.solve();
    ASSERT_TRUE(sol.consistent);
    for (const auto& v : sol.particular) EXPECT_EQ(v, Rational(1));
}

TEST(LinSolve, ZeroEquationIsHarmless) {
    SparseLinearSystem s(2);
    s.add_equation({{0, Rational(1)}, {0, Rational(-1)}});
    EXPECT_TRUE(s.consistent());
    EXPECT_EQ(s.rank(), 0);
    EXPECT_EQ(s.solve().kernel.size(), 2u);
}
