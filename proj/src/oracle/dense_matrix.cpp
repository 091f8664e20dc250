#include "srg/oracle/dense_matrix.hpp"

#include <cmath>
#include <stdexcept>

#include <Eigen/Dense>

#include "srg/oracle/kernels.hpp"

namespace srg::oracle {
namespace {

void require_same_order(const DenseMatrix& lhs, const DenseMatrix& rhs) {
    if (lhs.order() != rhs.order()) throw std::invalid_argument("matrix orders differ");
}

}  // namespace

DenseMatrix DenseMatrix::identity(std::size_t order) {
    DenseMatrix m(order);
    for (std::size_t i = 0; i < order; ++i) m(i, i) = 1.0;
    return m;
}

DenseMatrix DenseMatrix::ones(std::size_t order) { return DenseMatrix(order, 1.0); }

DenseMatrix operator*(const DenseMatrix& lhs, const DenseMatrix& rhs) {
    require_same_order(lhs, rhs);
    DenseMatrix out(lhs.order());
    kernels::active().gemm(lhs.order(), lhs.values().data(), rhs.values().data(), out.values().data());
    return out;
}

DenseMatrix linear_combination(double alpha, const DenseMatrix& x, double beta, const DenseMatrix& y) {
    require_same_order(x, y);
    DenseMatrix out(x.order());
    kernels::active().axpby(out.values().size(), alpha, x.values().data(), beta, y.values().data(),
                            out.values().data());
    return out;
}

DenseMatrix operator+(const DenseMatrix& lhs, const DenseMatrix& rhs) {
    return linear_combination(1.0, lhs, 1.0, rhs);
}

DenseMatrix operator-(const DenseMatrix& lhs, const DenseMatrix& rhs) {
    return linear_combination(1.0, lhs, -1.0, rhs);
}

DenseMatrix operator*(double alpha, const DenseMatrix& m) {
    DenseMatrix out(m.order());
    kernels::active().scale(out.values().size(), alpha, m.values().data(), out.values().data());
    return out;
}

DenseMatrix hadamard(const DenseMatrix& lhs, const DenseMatrix& rhs) {
    require_same_order(lhs, rhs);
    DenseMatrix out(lhs.order());
    kernels::active().hadamard(out.values().size(), lhs.values().data(), rhs.values().data(),
                               out.values().data());
    return out;
}

DenseMatrix hadamard_power(const DenseMatrix& m, unsigned k) {
    if (k == 0) throw std::invalid_argument("hadamard_power: k must be >= 1");
    DenseMatrix out = m;
    for (unsigned i = 1; i < k; ++i) out = hadamard(out, m);
    return out;
}

DenseMatrix kronecker(const DenseMatrix& lhs, const DenseMatrix& rhs) {
    const std::size_t m = lhs.order();
    const std::size_t q = rhs.order();
    DenseMatrix out(m * q);
    const auto& k = kernels::active();
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t bi = 0; bi < q; ++bi) {
            double* row = &out(i * q + bi, 0);
            const double* src = rhs.values().data() + bi * q;
            for (std::size_t j = 0; j < m; ++j) k.scale(q, lhs(i, j), src, row + j * q);
        }
    return out;
}

double frobenius_dot(const DenseMatrix& lhs, const DenseMatrix& rhs) {
    require_same_order(lhs, rhs);
    return kernels::active().dot(lhs.values().size(), lhs.values().data(), rhs.values().data());
}

double max_abs_diff(const DenseMatrix& lhs, const DenseMatrix& rhs) {
    require_same_order(lhs, rhs);
    return kernels::active().max_abs_diff(lhs.values().size(), lhs.values().data(), rhs.values().data());
}

double trace(const DenseMatrix& m) {
    double t = 0.0;
    for (std::size_t i = 0; i < m.order(); ++i) t += m(i, i);
    return t;
}

bool is_symmetric(const DenseMatrix& m, double tol) {
    for (std::size_t i = 0; i < m.order(); ++i)
        for (std::size_t j = i + 1; j < m.order(); ++j)
            if (std::abs(m(i, j) - m(j, i)) > tol) return false;
    return true;
}

DenseMatrix principal_submatrix(const DenseMatrix& m, std::span<const std::size_t> indices) {
    DenseMatrix out(indices.size());
    for (std::size_t i = 0; i < indices.size(); ++i) {
        for (std::size_t j = 0; j < indices.size(); ++j) {
            if (indices[i] >= m.order() || indices[j] >= m.order()) {
                throw std::out_of_range("principal_submatrix: index out of range");
            }
            out(i, j) = m(indices[i], indices[j]);
        }
    }
    return out;
}

std::vector<double> symmetric_eigenvalues(const DenseMatrix& m) {
    const auto n = static_cast<Eigen::Index>(m.order());
    Eigen::Map<const Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>> view(
        m.values().data(), n, n);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(view, Eigen::EigenvaluesOnly);
    if (solver.info() != Eigen::Success) throw std::runtime_error("eigensolver did not converge");
    const Eigen::VectorXd& ev = solver.eigenvalues();
    return {ev.data(), ev.data() + ev.size()};
}

}  // namespace srg::oracle
