#ifndef CHAINLAB_RANDOM_MATRICES_HPP
#define CHAINLAB_RANDOM_MATRICES_HPP

#include <Eigen/Dense>
#include <random>

namespace chainlab {

inline Eigen::MatrixXcd random_complex_matrix(int rows, int cols, std::mt19937_64& rng) {
    std::normal_distribution<double> gauss(0.0, 1.0);
    Eigen::MatrixXcd m(rows, cols);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) m(i, j) = std::complex<double>(gauss(rng), gauss(rng));
    return m;
}

/// Haar-distributed unitary via QR of a complex Gaussian matrix, with the
/// phase convention fixed by a positive diagonal of R.
inline Eigen::MatrixXcd random_unitary(int n, std::mt19937_64& rng) {
    Eigen::MatrixXcd z = random_complex_matrix(n, n, rng);
    Eigen::HouseholderQR<Eigen::MatrixXcd> qr(z);
    Eigen::MatrixXcd q = qr.householderQ();
    Eigen::MatrixXcd r = qr.matrixQR().triangularView<Eigen::Upper>();
    for (int i = 0; i < n; ++i) {
        std::complex<double> d = r(i, i);
        if (std::abs(d) > 1e-14) q.col(i) *= d / std::abs(d);
    }
    return q;
}

}  // namespace chainlab

#endif
