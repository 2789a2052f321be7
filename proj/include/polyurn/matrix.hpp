#pragma once

#include <cstddef>
#include <vector>

#include "polyurn/rational.hpp"

namespace polyurn {

using RatVector = std::vector<Rational>;

// Dense exact matrix, row-major.
class RatMatrix {
public:
    RatMatrix() : rows_(0), cols_(0) {}
    RatMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows * cols) {}

    static RatMatrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }

    Rational& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Rational& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    RatMatrix transpose() const;
    RatVector row(std::size_t i) const;
    RatVector col(std::size_t j) const;

    RatMatrix& operator+=(const RatMatrix& o);
    RatMatrix& operator-=(const RatMatrix& o);
    friend RatMatrix operator+(RatMatrix a, const RatMatrix& b) { return a += b; }
    friend RatMatrix operator-(RatMatrix a, const RatMatrix& b) { return a -= b; }
    friend RatMatrix operator*(const RatMatrix& a, const RatMatrix& b);
    friend RatVector operator*(const RatMatrix& a, const RatVector& x);
    friend RatMatrix operator*(const Rational& s, RatMatrix a);

    friend bool operator==(const RatMatrix& a, const RatMatrix& b) = default;

    bool is_zero() const;
    bool is_symmetric() const;
    // max_i sum_j |a_ij|
    Rational norm_inf() const;

private:
    std::size_t rows_, cols_;
    std::vector<Rational> data_;
};

Rational dot(const RatVector& a, const RatVector& b);
RatVector operator*(const Rational& s, RatVector v);
RatVector operator+(const RatVector& a, const RatVector& b);
RatVector operator-(const RatVector& a, const RatVector& b);
// x' * A, as a vector
RatVector mul_vec_mat(const RatVector& x, const RatMatrix& a);
// u * v'
RatMatrix outer(const RatVector& u, const RatVector& v);
bool is_zero(const RatVector& v);

}  // namespace polyurn
