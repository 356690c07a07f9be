// Shared test utilities: random states/unitaries and conversions between
// Eigen matrices and the naive reference storage.
#pragma once

#include <random>

#include "photospin/channel.hpp"
#include "photospin/state.hpp"
#include "reference.hpp"

namespace testutil {

using photospin::Complex;
using photospin::Matrix;
using photospin::Vector;

inline std::mt19937_64& rng() {
    static std::mt19937_64 gen(0xfeedULL);
    return gen;
}

inline double urand() {
    return std::uniform_real_distribution<double>(0.0, 1.0)(rng());
}

inline double nrand() {
    return std::normal_distribution<double>(0.0, 1.0)(rng());
}

inline Vector random_ket(int dim) {
    Vector v(dim);
    for (int i = 0; i < dim; ++i) v(i) = Complex(nrand(), nrand());
    return v / v.norm();
}

/// Random full-rank density matrix (mixture of dim random pure states).
inline Matrix random_density(int dim) {
    Matrix rho = Matrix::Zero(dim, dim);
    double total = 0.0;
    for (int k = 0; k < dim; ++k) {
        const double w = urand() + 1e-3;
        const Vector v = random_ket(dim);
        rho += w * (v * v.adjoint());
        total += w;
    }
    return rho / total;
}

/// Haar-ish random unitary via QR of a Ginibre matrix.
inline Matrix random_unitary(int dim) {
    Matrix g(dim, dim);
    for (int i = 0; i < dim; ++i) {
        for (int j = 0; j < dim; ++j) g(i, j) = Complex(nrand(), nrand());
    }
    Eigen::HouseholderQR<Matrix> qr(g);
    Matrix q = qr.householderQ();
    Matrix r = qr.matrixQR().triangularView<Eigen::Upper>();
    for (int i = 0; i < dim; ++i) {
        const Complex d = r(i, i);
        q.col(i) *= d / std::abs(d);
    }
    return q;
}

inline refimpl::CMat to_ref(const Matrix& m) {
    refimpl::CMat out(m.rows() * m.cols());
    for (int i = 0; i < m.rows(); ++i) {
        for (int j = 0; j < m.cols(); ++j) out[i * m.cols() + j] = m(i, j);
    }
    return out;
}

inline Matrix from_ref(const refimpl::CMat& m, int dim) {
    Matrix out(dim, dim);
    for (int i = 0; i < dim; ++i) {
        for (int j = 0; j < dim; ++j) out(i, j) = m[i * dim + j];
    }
    return out;
}

inline std::vector<refimpl::Cx> to_ref_vec(const Vector& v) {
    std::vector<refimpl::Cx> out(v.size());
    for (int i = 0; i < v.size(); ++i) out[i] = v(i);
    return out;
}

inline double max_abs_diff(const Matrix& a, const Matrix& b) {
    return (a - b).cwiseAbs().maxCoeff();
}

} // namespace testutil
