#pragma once

#include <cstdint>
#include <random>

#include <Eigen/Dense>

namespace s7lab {

using Rng = std::mt19937_64;

template <int N>
Eigen::Matrix<double, N, 1> random_gaussian(Rng& rng) {
    std::normal_distribution<double> normal(0.0, 1.0);
    Eigen::Matrix<double, N, 1> v;
    for (int i = 0; i < N; ++i) v[i] = normal(rng);
    return v;
}

template <int N>
Eigen::Matrix<double, N, 1> random_unit(Rng& rng) {
    Eigen::Matrix<double, N, 1> v;
    do {
        v = random_gaussian<N>(rng);
    } while (v.norm() < 1e-6);
    return v / v.norm();
}

// Haar-distributed orthogonal matrix: QR of a Gaussian matrix with the sign of
// R's diagonal folded into Q.
template <int N>
Eigen::Matrix<double, N, N> random_orthogonal(Rng& rng) {
    std::normal_distribution<double> normal(0.0, 1.0);
    Eigen::Matrix<double, N, N> g;
    for (int i = 0; i < N; ++i)
        for (int j = 0; j < N; ++j) g(i, j) = normal(rng);
    Eigen::HouseholderQR<Eigen::Matrix<double, N, N>> qr(g);
    Eigen::Matrix<double, N, N> q = qr.householderQ();
    Eigen::Matrix<double, N, N> r = qr.matrixQR().template triangularView<Eigen::Upper>();
    for (int j = 0; j < N; ++j)
        if (r(j, j) < 0) q.col(j) *= -1.0;
    return q;
}

}  // namespace s7lab
