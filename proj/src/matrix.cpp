#include "polyurn/matrix.hpp"

#include "polyurn/errors.hpp"

namespace polyurn {

RatMatrix RatMatrix::identity(std::size_t n) {
    RatMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

RatMatrix RatMatrix::transpose() const {
    RatMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
}

RatVector RatMatrix::row(std::size_t i) const {
    RatVector r(cols_);
    for (std::size_t j = 0; j < cols_; ++j) r[j] = (*this)(i, j);
    return r;
}

RatVector RatMatrix::col(std::size_t j) const {
    RatVector c(rows_);
    for (std::size_t i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
    return c;
}

static void require_same_shape(const RatMatrix& a, const RatMatrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw DimensionError("matrix shape mismatch");
}

RatMatrix& RatMatrix::operator+=(const RatMatrix& o) {
    require_same_shape(*this, o);
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += o.data_[i];
    return *this;
}

RatMatrix& RatMatrix::operator-=(const RatMatrix& o) {
    require_same_shape(*this, o);
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= o.data_[i];
    return *this;
}

RatMatrix operator*(const RatMatrix& a, const RatMatrix& b) {
    if (a.cols() != b.rows()) throw DimensionError("matrix product shape mismatch");
    RatMatrix c(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const Rational& aik = a(i, k);
            if (aik.is_zero()) continue;
            for (std::size_t j = 0; j < b.cols(); ++j) {
                if (!b(k, j).is_zero()) c(i, j) += aik * b(k, j);
            }
        }
    return c;
}

RatVector operator*(const RatMatrix& a, const RatVector& x) {
    if (a.cols() != x.size()) throw DimensionError("matrix-vector shape mismatch");
    RatVector y(a.rows());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            if (!a(i, j).is_zero()) y[i] += a(i, j) * x[j];
    return y;
}

RatMatrix operator*(const Rational& s, RatMatrix a) {
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) a(i, j) *= s;
    return a;
}

bool RatMatrix::is_zero() const {
    for (const auto& e : data_)
        if (!e.is_zero()) return false;
    return true;
}

bool RatMatrix::is_symmetric() const {
    if (!is_square()) return false;
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = i + 1; j < cols_; ++j)
            if ((*this)(i, j) != (*this)(j, i)) return false;
    return true;
}

Rational RatMatrix::norm_inf() const {
    Rational best;
    for (std::size_t i = 0; i < rows_; ++i) {
        Rational s;
        for (std::size_t j = 0; j < cols_; ++j) s += (*this)(i, j).abs();
        if (s > best) best = s;
    }
    return best;
}

Rational dot(const RatVector& a, const RatVector& b) {
    if (a.size() != b.size()) throw DimensionError("dot product shape mismatch");
    Rational s;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (!a[i].is_zero() && !b[i].is_zero()) s += a[i] * b[i];
    return s;
}

RatVector operator*(const Rational& s, RatVector v) {
    for (auto& e : v) e *= s;
    return v;
}

RatVector operator+(const RatVector& a, const RatVector& b) {
    if (a.size() != b.size()) throw DimensionError("vector sum shape mismatch");
    RatVector r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

RatVector operator-(const RatVector& a, const RatVector& b) {
    if (a.size() != b.size()) throw DimensionError("vector difference shape mismatch");
    RatVector r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

RatVector mul_vec_mat(const RatVector& x, const RatMatrix& a) {
    if (x.size() != a.rows()) throw DimensionError("vector-matrix shape mismatch");
    RatVector y(a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        if (x[i].is_zero()) continue;
        for (std::size_t j = 0; j < a.cols(); ++j)
            if (!a(i, j).is_zero()) y[j] += x[i] * a(i, j);
    }
    return y;
}

RatMatrix outer(const RatVector& u, const RatVector& v) {
    RatMatrix m(u.size(), v.size());
    for (std::size_t i = 0; i < u.size(); ++i) {
        if (u[i].is_zero()) continue;
        for (std::size_t j = 0; j < v.size(); ++j)
            if (!v[j].is_zero()) m(i, j) = u[i] * v[j];
    }
    return m;
}

bool is_zero(const RatVector& v) {
    for (const auto& e : v)
        if (!e.is_zero()) return false;
    return true;
}

}  // namespace polyurn
