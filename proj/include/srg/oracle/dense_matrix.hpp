#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace srg::oracle {

/// Square row-major matrix of doubles.
class DenseMatrix {
public:
    DenseMatrix() = default;
    explicit DenseMatrix(std::size_t order, double fill = 0.0) : order_(order), data_(order * order, fill) {}

    static DenseMatrix identity(std::size_t order);
    static DenseMatrix ones(std::size_t order);

    std::size_t order() const { return order_; }
    double& operator()(std::size_t i, std::size_t j) { return data_[i * order_ + j]; }
    double operator()(std::size_t i, std::size_t j) const { return data_[i * order_ + j]; }
    std::span<double> values() { return data_; }
    std::span<const double> values() const { return data_; }

private:
    std::size_t order_ = 0;
    std::vector<double> data_;
};

DenseMatrix operator*(const DenseMatrix& lhs, const DenseMatrix& rhs);
DenseMatrix operator+(const DenseMatrix& lhs, const DenseMatrix& rhs);
DenseMatrix operator-(const DenseMatrix& lhs, const DenseMatrix& rhs);
DenseMatrix operator*(double alpha, const DenseMatrix& m);

/// alpha * x + beta * y
DenseMatrix linear_combination(double alpha, const DenseMatrix& x, double beta, const DenseMatrix& y);
DenseMatrix hadamard(const DenseMatrix& lhs, const DenseMatrix& rhs);
/// Entrywise k-th power, k >= 1.
DenseMatrix hadamard_power(const DenseMatrix& m, unsigned k);
/// Block matrix [lhs_ij * rhs].
DenseMatrix kronecker(const DenseMatrix& lhs, const DenseMatrix& rhs);

/// Frobenius inner product sum_ij a_ij b_ij; equals trace(a b) for symmetric b.
double frobenius_dot(const DenseMatrix& lhs, const DenseMatrix& rhs);
double max_abs_diff(const DenseMatrix& lhs, const DenseMatrix& rhs);
double trace(const DenseMatrix& m);
bool is_symmetric(const DenseMatrix& m, double tol = 0.0);

DenseMatrix principal_submatrix(const DenseMatrix& m, std::span<const std::size_t> indices);

/// Ascending eigenvalues of a symmetric matrix.
std::vector<double> symmetric_eigenvalues(const DenseMatrix& m);

}  // namespace srg::oracle
