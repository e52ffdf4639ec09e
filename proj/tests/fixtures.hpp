#pragma once

#include "srg/transfer_matrix.hpp"

// Worked systems used across the test suites.
namespace fixtures {

using srg::Polynomial;
using srg::RationalFunction;
using srg::TransferMatrix;

inline RationalFunction rf(std::vector<double> num, std::vector<double> den) {
    return RationalFunction(Polynomial(std::move(num)), Polynomial(std::move(den)));
}

// 1 / (s^2 + s + 1)
inline TransferMatrix g1() { return TransferMatrix::siso(rf({1}, {1, 1, 1})); }

// 1 / (s (s + 1))
inline TransferMatrix g2() { return TransferMatrix::siso(rf({1}, {0, 1, 1})); }

// 3 / ((s - 2)(s/10 + 1))
inline TransferMatrix g3() { return TransferMatrix::siso(rf({3}, {-2, 0.8, 0.1})); }

// [[1/(s+1), 1/(s+2)], [1/(s+4), 1/(s+3)]]
inline TransferMatrix g4() {
    return TransferMatrix({{rf({1}, {1, 1}), rf({1}, {2, 1})},
                           {rf({1}, {4, 1}), rf({1}, {3, 1})}});
}

// [[(s+7)/(s-1), (s-5)/(s+2)^2], [1/(s+4)^3, s/(s+3)^2]]
inline TransferMatrix g5() {
    return TransferMatrix({{rf({7, 1}, {-1, 1}), rf({-5, 1}, {4, 4, 1})},
                           {rf({1}, {64, 48, 12, 1}), rf({0, 1}, {9, 6, 1})}});
}

// 3x3 loop with an integrator in the (3,3) entry.
inline TransferMatrix g6() {
    return TransferMatrix({{rf({7, 1}, {-1, 1}), rf({-5, 1}, {4, 4, 1}), rf({1}, {1.5, 1})},
                           {rf({1}, {64, 48, 12, 1}), rf({0, 1}, {9, 6, 1}), rf({1}, {1.2, 1})},
                           {rf({2}, {1, 1}), rf({1}, {9, 1}), rf({1}, {0, 1})}});
}

inline TransferMatrix static_gain(double c) { return TransferMatrix::siso(rf({c}, {1})); }

}  // namespace fixtures
